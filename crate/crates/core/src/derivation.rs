//! Polynomial vector fields as derivations of a polynomial ring.

use std::collections::{BTreeMap, BTreeSet};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::claim::Claim;
use crate::exactpoly::{Poly, PolyMap, Var};

/// A derivation, given by its values on variables. Variables missing from
/// the action are annihilated; zero values are never stored, so two fields
/// with the same action compare equal regardless of how they were built.
#[derive(Debug, Clone)]
pub struct Derivation {
    pub name: String,
    pub weight: i64,
    action: BTreeMap<Var, Poly>,
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum DerivationError {
    #[error("ladder step {from} -> {to}: partner does not send {from} to {to}")]
    NotALadderStep { from: String, to: String },
    #[error("ladder step from {0} reached before its value was known")]
    LadderOrder(String),
    #[error("ladder does not reach {0:?}")]
    LadderIncomplete(Vec<String>),
    #[error("commutator with partner does not match the prescribed right-hand side: {0}")]
    InconsistentRhs(String),
}

impl PartialEq for Derivation {
    fn eq(&self, other: &Self) -> bool {
        self.action == other.action
    }
}

impl Derivation {
    pub fn new<I>(name: impl Into<String>, weight: i64, action: I) -> Self
    where
        I: IntoIterator<Item = (Var, Poly)>,
    {
        Derivation {
            name: name.into(),
            weight,
            action: action.into_iter().filter(|(_, p)| !p.is_zero()).collect(),
        }
    }

    pub fn zero(name: impl Into<String>, weight: i64) -> Self {
        Self::new(name, weight, [])
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn is_zero(&self) -> bool {
        self.action.is_empty()
    }

    /// Value on a variable (zero when absent).
    pub fn on(&self, v: Var) -> Poly {
        self.action.get(&v).cloned().unwrap_or_default()
    }

    pub fn action(&self) -> &BTreeMap<Var, Poly> {
        &self.action
    }

    pub fn support(&self) -> BTreeSet<Var> {
        self.action.keys().copied().collect()
    }

    /// `D(p) = sum_v D(v) * dp/dv`.
    pub fn apply(&self, p: &Poly) -> Poly {
        p.vars()
            .into_iter()
            .filter_map(|v| self.action.get(&v).map(|dv| dv * p.partial(v)))
            .sum()
    }

    /// Commutator `[self, other]`: `v -> self(other(v)) - other(self(v))`.
    pub fn bracket(&self, other: &Derivation) -> Derivation {
        let vars: BTreeSet<Var> = self.support().union(&other.support()).copied().collect();
        Derivation::new(
            format!("[{},{}]", self.name, other.name),
            self.weight + other.weight,
            vars.into_iter()
                .map(|v| (v, self.apply(&other.on(v)) - other.apply(&self.on(v)))),
        )
    }

    /// The field `c * self`.
    pub fn scaled(&self, c: &Poly) -> Derivation {
        Derivation::new(
            format!("({c})*{}", self.name),
            self.weight,
            self.action.iter().map(|(v, p)| (*v, c * p)),
        )
    }

    pub fn plus(&self, other: &Derivation) -> Derivation {
        let vars: BTreeSet<Var> = self.support().union(&other.support()).copied().collect();
        Derivation::new(
            self.name.clone(),
            self.weight,
            vars.into_iter().map(|v| (v, self.on(v) + other.on(v))),
        )
    }

    pub fn minus(&self, other: &Derivation) -> Derivation {
        let vars: BTreeSet<Var> = self.support().union(&other.support()).copied().collect();
        Derivation::new(
            self.name.clone(),
            self.weight,
            vars.into_iter().map(|v| (v, self.on(v) - other.on(v))),
        )
    }

    /// Substitutes into every coefficient (e.g. to specialise parameters).
    pub fn map_coefficients(&self, f: impl Fn(&Poly) -> Poly) -> Derivation {
        Derivation::new(
            self.name.clone(),
            self.weight,
            self.action.iter().map(|(v, p)| (*v, f(p))),
        )
    }

    /// Every value `D(v)` homogeneous of weight `weight(v) + weight(D)`.
    pub fn is_homogeneous(&self) -> bool {
        self.action.iter().all(|(v, p)| {
            let w = v.weight() as i64 + self.weight;
            w >= 0 && p.is_homogeneous_of(w as u32)
        })
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts: Vec<(u32, String, String)> = self
            .action
            .iter()
            .map(|(v, p)| {
                let coef = if p.len() > 1 {
                    format!(r"\left({}\right)", p.to_latex())
                } else {
                    p.to_latex()
                };
                (
                    v.weight(),
                    v.name().to_string(),
                    format!(
                        r"{coef} \frac{{\partial}}{{\partial {}}}",
                        crate::exactpoly::latex_var(&v.name())
                    ),
                )
            })
            .collect();
        parts.sort();
        parts
            .into_iter()
            .map(|(_, _, s)| s)
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// `sum_i c_i * D_i`.
pub fn combine(name: &str, weight: i64, terms: &[(Poly, &Derivation)]) -> Derivation {
    terms
        .iter()
        .fold(Derivation::zero(name, weight), |acc, (c, d)| acc.plus(&d.scaled(c)))
}

/// `[left, right] = sum_i c_i * D_i`, one row of a commutator table.
#[derive(Debug, Clone)]
pub struct BracketRelation<'a> {
    pub left: &'a Derivation,
    pub right: &'a Derivation,
    pub expansion: Vec<(Poly, &'a Derivation)>,
}

impl BracketRelation<'_> {
    pub fn label(&self) -> String {
        format!("[{},{}]", self.left.name, self.right.name)
    }

    pub fn residual(&self) -> Derivation {
        let lhs = self.left.bracket(self.right);
        let rhs = combine("rhs", lhs.weight, &self.expansion);
        lhs.minus(&rhs).renamed(self.label())
    }
}

fn derivation_claim(id: &str, anchor: &str, residual: &Derivation, support: &BTreeSet<Var>) -> Claim {
    let mut claim = Claim::new(id, anchor);
    for v in support {
        claim.push(format!("{}({v})", residual.name), residual.on(*v));
    }
    claim
}

/// Holds iff the residual `[left,right] - sum c_i D_i` is the zero derivation.
pub fn verify_bracket_relation(id: &str, anchor: &str, rel: &BracketRelation<'_>) -> Claim {
    let residual = rel.residual();
    let mut support = rel.left.support();
    support.extend(rel.right.support());
    for (_, d) in &rel.expansion {
        support.extend(d.support());
    }
    derivation_claim(id, anchor, &residual, &support)
}

/// Checks `up(p_s) = p^*(down(lambda_s))` for every component `lambda_s -> p_s`.
/// Both sides are derivations, so the generators suffice.
pub fn verify_pushforward(id: &str, anchor: &str, up: &Derivation, map: &PolyMap, down: &Derivation) -> Claim {
    let mut claim = Claim::new(id, anchor);
    let assignment = map.assignment();
    for (lam, comp) in map.components() {
        let lhs = up.apply(comp);
        let rhs = down.on(*lam).substitute(&assignment);
        claim.expect_eq(format!("{}({})", up.name, lam), &lhs, &rhs);
    }
    claim
}

/// Ladder steps `(v, partner(v))` obtained by walking from each base
/// variable while the partner maps a variable to a single variable.
pub fn ladder_from_partner(partner: &Derivation, bases: &[Var]) -> Vec<(Var, Var)> {
    let mut steps = Vec::new();
    for &b in bases {
        let mut v = b;
        while let Some(next) = single_variable(&partner.on(v)) {
            steps.push((v, next));
            v = next;
        }
    }
    steps.sort_by_key(|(v, _)| (v.weight(), *v));
    steps
}

fn single_variable(p: &Poly) -> Option<Var> {
    let (m, c) = p.terms().next()?;
    if p.len() == 1 && num_traits::One::is_one(c) && m.degree() == 1 {
        m.vars().next()
    } else {
        None
    }
}

/// Reconstructs the derivation `D` with `D = seeds` on the base variables
/// and `[partner, D] = rhs`, using `D(partner(v)) = partner(D(v)) - rhs(v)`
/// along the ladder. The result is checked against `rhs` on all of `ring`.
pub fn ladder_complete(
    name: &str,
    weight: i64,
    seeds: &BTreeMap<Var, Poly>,
    partner: &Derivation,
    rhs: &Derivation,
    ladder: &[(Var, Var)],
    ring: &[Var],
) -> Result<Derivation, DerivationError> {
    let mut values = seeds.clone();
    for &(from, to) in ladder {
        if single_variable(&partner.on(from)) != Some(to) {
            return Err(DerivationError::NotALadderStep {
                from: from.to_string(),
                to: to.to_string(),
            });
        }
        let dv = values
            .get(&from)
            .ok_or_else(|| DerivationError::LadderOrder(from.to_string()))?;
        let next = partner.apply(dv) - rhs.on(from);
        values.insert(to, next);
    }
    let missing: Vec<String> = ring
        .iter()
        .filter(|v| !values.contains_key(v))
        .map(|v| v.to_string())
        .collect();
    if !missing.is_empty() {
        return Err(DerivationError::LadderIncomplete(missing));
    }
    let d = Derivation::new(name, weight, values);
    let residual = partner.bracket(&d).minus(rhs);
    let bad: Vec<String> = ring
        .iter()
        .filter(|v| !residual.on(**v).is_zero())
        .map(|v| format!("{v}: {}", residual.on(*v)))
        .collect();
    if bad.is_empty() {
        Ok(d)
    } else {
        Err(DerivationError::InconsistentRhs(bad.join("; ")))
    }
}

impl Serialize for Derivation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        struct Action<'a>(&'a BTreeMap<Var, Poly>);
        impl Serialize for Action<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                use serde::ser::SerializeMap;
                let mut entries: Vec<_> = self.0.iter().collect();
                entries.sort_by_key(|(v, _)| (v.weight(), v.name()));
                let mut m = s.serialize_map(Some(entries.len()))?;
                for (v, p) in entries {
                    m.serialize_entry(&*v.name(), &p.to_string())?;
                }
                m.end()
            }
        }
        let mut st = s.serialize_struct("Derivation", 3)?;
        st.serialize_field("name", &self.name)?;
        st.serialize_field("weight", &self.weight)?;
        st.serialize_field("action", &Action(&self.action))?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::poly;

    fn v(n: &str) -> Var {
        Var::named(n).unwrap()
    }

    fn field(name: &str, w: i64, action: &[(&str, &str)]) -> Derivation {
        Derivation::new(name, w, action.iter().map(|(x, p)| (v(x), poly(p))))
    }

    fn genus1() -> (Derivation, Derivation, Derivation) {
        let l0 = field("L0", 0, &[("x2", "2*x2"), ("x3", "3*x3"), ("x4", "4*x4")]);
        let l1 = field("L1", 1, &[("x2", "x3"), ("x3", "x4"), ("x4", "12*x2*x3")]);
        let l2 = field(
            "L2",
            2,
            &[
                ("x2", "2/3*x4 - 2*x2^2"),
                ("x3", "3*x2*x3"),
                ("x4", "2*x2*x4 + 3*x3^2"),
            ],
        );
        (l0, l1, l2)
    }

    #[test]
    fn euler_field_scales_by_weight() {
        let (l0, l1, _) = genus1();
        let p = poly("-3*x2^2 + 1/2*x4");
        assert_eq!(l0.apply(&p), p.scale(&crate::Rational::from_integer(4.into())));
        assert_eq!(l1.apply(&poly("x2")), poly("x3"));
        assert!(l1.apply(&Poly::one()).is_zero());
    }

    #[test]
    fn brackets() {
        let (_, l1, l2) = genus1();
        assert!(l2.bracket(&l2).is_zero());
        assert_eq!(l1.bracket(&l2), l1.scaled(&poly("x2")));
        let rel = BracketRelation {
            left: &l1,
            right: &l2,
            expansion: vec![(poly("x2"), &l1)],
        };
        assert!(verify_bracket_relation("t", "t", &rel).holds());
        let bad = BracketRelation {
            left: &l1,
            right: &l2,
            expansion: vec![(poly("2*x2"), &l1)],
        };
        let c = verify_bracket_relation("t", "t", &bad);
        assert!(!c.holds());
        assert!(c.witness().is_some());
    }

    #[test]
    fn pushforward_genus_one() {
        let (_, l1, l2) = genus1();
        let map = PolyMap::new(
            "p",
            vec![
                (v("l4"), poly("-3*x2^2 + 1/2*x4")),
                (v("l6"), poly("2*x2^3 + 1/4*x3^2 - 1/2*x2*x4")),
            ],
        );
        let down = field("L2", 2, &[("l4", "6*l6"), ("l6", "-4/3*l4^2")]);
        // both sides on l4 equal 6*l6 composed with p
        assert_eq!(
            l2.apply(&poly("-3*x2^2 + 1/2*x4")),
            poly("12*x2^3 + 3/2*x3^2 - 3*x2*x4")
        );
        assert!(verify_pushforward("t", "t", &l2, &map, &down).holds());
        assert!(verify_pushforward("t", "t", &l1, &map, &Derivation::zero("0", 1)).holds());
        assert!(!verify_pushforward("t", "t", &l2, &map, &down.scaled(&poly("2"))).holds());
    }

    #[test]
    fn ladder_rebuilds_genus_one_field() {
        let (_, l1, l2) = genus1();
        let ring = [v("x2"), v("x3"), v("x4")];
        let ladder = ladder_from_partner(&l1, &[v("x2")]);
        assert_eq!(ladder, vec![(v("x2"), v("x3")), (v("x3"), v("x4"))]);
        let seeds: BTreeMap<_, _> = [(v("x2"), l2.on(v("x2")))].into_iter().collect();
        let rhs = l1.scaled(&poly("x2"));
        let got = ladder_complete("L2", 2, &seeds, &l1, &rhs, &ladder, &ring).unwrap();
        assert_eq!(got, l2);
        // a wrong seed cannot satisfy the relation on x4
        let bad: BTreeMap<_, _> = [(v("x2"), poly("x4 - 2*x2^2"))].into_iter().collect();
        assert!(matches!(
            ladder_complete("L2", 2, &bad, &l1, &rhs, &ladder, &ring),
            Err(DerivationError::InconsistentRhs(_))
        ));
        let zero = ladder_complete(
            "Z",
            2,
            &[(v("x2"), Poly::zero())].into_iter().collect(),
            &l1,
            &Derivation::zero("0", 3),
            &ladder,
            &ring,
        )
        .unwrap();
        assert!(zero.is_zero());
        assert!(matches!(
            ladder_complete("L2", 2, &seeds, &l1, &rhs, &ladder[..1], &ring),
            Err(DerivationError::LadderIncomplete(_))
        ));
    }

    #[test]
    fn json_form() {
        let (_, l1, _) = genus1();
        assert_eq!(
            serde_json::to_string(&l1).unwrap(),
            r#"{"name":"L1","weight":1,"action":{"x2":"x3","x3":"x4","x4":"12*x2*x3"}}"#
        );
    }
}
