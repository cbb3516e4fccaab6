//! Graded variables.
//!
//! Every variable lives in one process-wide registry that pins its weight.
//! Registering the same name twice with different weights is the only way
//! two rings could disagree, so that is where the mismatch is reported.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use super::PolyError;

/// A graded variable. Cheap to copy; the name is resolved through the registry.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var {
    id: u32,
    weight: u32,
}

struct Registry {
    names: Vec<Arc<str>>,
    by_name: HashMap<Arc<str>, Var>,
}

fn registry() -> &'static RwLock<Registry> {
    static REGISTRY: OnceLock<RwLock<Registry>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        RwLock::new(Registry {
            names: Vec::new(),
            by_name: HashMap::new(),
        })
    })
}

impl Var {
    /// Registers (or looks up) a variable with an explicit weight.
    pub fn new(name: &str, weight: u32) -> Result<Var, PolyError> {
        validate_name(name)?;
        if let Some(v) = registry().read().unwrap().by_name.get(name) {
            return check_weight(name, *v, weight);
        }
        let mut reg = registry().write().unwrap();
        if let Some(v) = reg.by_name.get(name) {
            return check_weight(name, *v, weight);
        }
        let id = u32::try_from(reg.names.len()).expect("variable registry overflow");
        let var = Var { id, weight };
        let name: Arc<str> = Arc::from(name);
        reg.names.push(name.clone());
        reg.by_name.insert(name, var);
        Ok(var)
    }

    /// Looks up a variable by name, registering it when its weight can be
    /// read off the naming scheme (`l6`, `x3`, `y5`, `z8`, `x1_7`, `w3_5`, ...).
    pub fn named(name: &str) -> Result<Var, PolyError> {
        if let Some(v) = registry().read().unwrap().by_name.get(name) {
            return Ok(*v);
        }
        match infer_weight(name) {
            Some(w) => Var::new(name, w),
            None => Err(PolyError::UnknownVariable(name.to_string())),
        }
    }

    /// Looks up an already registered variable.
    pub fn lookup(name: &str) -> Option<Var> {
        registry().read().unwrap().by_name.get(name).copied()
    }

    pub fn weight(self) -> u32 {
        self.weight
    }

    pub fn name(self) -> Arc<str> {
        registry().read().unwrap().names[self.id as usize].clone()
    }
}

fn check_weight(name: &str, existing: Var, weight: u32) -> Result<Var, PolyError> {
    if existing.weight == weight {
        Ok(existing)
    } else {
        Err(PolyError::RingMismatch {
            name: name.to_string(),
            registered: existing.weight,
            requested: weight,
        })
    }
}

fn validate_name(name: &str) -> Result<(), PolyError> {
    let mut chars = name.chars();
    let ok = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
    if ok {
        Ok(())
    } else {
        Err(PolyError::UnknownVariable(name.to_string()))
    }
}

fn parse_indices(s: &str) -> Option<Vec<u32>> {
    s.split('_').map(|t| t.parse::<u32>().ok()).collect()
}

/// Weight implied by the naming scheme, if any.
pub(crate) fn infer_weight(name: &str) -> Option<u32> {
    match name {
        "X" => return Some(2),
        "alpha" | "beta" | "gamma1" | "gamma2" => return Some(0),
        _ => {}
    }
    // classical symbols: wp{i}_{k1}_{k2}...
    if let Some(rest) = name.strip_prefix("wp") {
        let idx = parse_indices(rest)?;
        return Some(idx.iter().sum());
    }
    let (head, rest) = name.split_at(1);
    let idx = parse_indices(rest)?;
    match (head, idx.as_slice()) {
        ("l", [s]) => Some(*s),
        ("x" | "y" | "z" | "w" | "p", [n]) => Some(*n),
        ("x" | "w", [a, b]) => Some(a + b),
        _ => None,
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}
