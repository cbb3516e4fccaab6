use std::collections::HashMap;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::{Poly, Var};

/// A named polynomial map: each target coordinate gets a polynomial in the source ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMap {
    pub name: String,
    components: Vec<(Var, Poly)>,
}

impl PolyMap {
    pub fn new(name: impl Into<String>, components: Vec<(Var, Poly)>) -> Self {
        PolyMap {
            name: name.into(),
            components,
        }
    }

    /// Components in their fixed order.
    pub fn components(&self) -> &[(Var, Poly)] {
        &self.components
    }

    pub fn get(&self, v: Var) -> Option<&Poly> {
        self.components.iter().find(|(w, _)| *w == v).map(|(_, p)| p)
    }

    pub fn assignment(&self) -> HashMap<Var, Poly> {
        self.components.iter().cloned().collect()
    }

    /// Pulls `f` back along the map; variables that are not coordinates pass through.
    pub fn pullback(&self, f: &Poly) -> Poly {
        f.substitute(&self.assignment())
    }
}

impl Serialize for PolyMap {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.components.len()))?;
        for (v, p) in &self.components {
            m.serialize_entry(&*v.name(), &p.to_string())?;
        }
        m.end()
    }
}
