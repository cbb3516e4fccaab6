//! The relations cutting out the variety `S`, their elimination, and the
//! resulting polynomial map `p: C^{3g} -> C^{2g}`.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::claim::Claim;
use crate::exactpoly::{Poly, PolyMap, Var};
use crate::lambda_space::lambda_var;

/// Coordinates `x_{i,j}` (`i` in 1..=3, odd `j` up to `2g-1`), the symbols
/// `w_{k,l}` (odd `3 <= k <= l <= 2g-1`) and the parameters `lambda_s`.
///
/// Short names: `x_{i,1} = x{i+1}`, `x_{i,3} = y{i+3}`, `x_{i,5} = z{i+5}`,
/// and `x{i}_{j}` beyond that.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct XRing {
    pub genus: u32,
}

impl XRing {
    pub fn new(genus: u32) -> Self {
        assert!(genus >= 1, "genus must be positive");
        XRing { genus }
    }

    fn odd_in_range(&self, j: i64, lo: i64) -> bool {
        j >= lo && j < 2 * self.genus as i64 && j % 2 == 1
    }

    pub fn x_var(&self, i: i64, j: i64) -> Option<Var> {
        if !(1..=3).contains(&i) || !self.odd_in_range(j, 1) {
            return None;
        }
        let name = match j {
            1 => format!("x{}", i + 1),
            3 => format!("y{}", i + 3),
            5 => format!("z{}", i + 5),
            _ => format!("x{i}_{j}"),
        };
        Some(Var::named(&name).expect("x names are well formed"))
    }

    /// `x_{i,j}`, zero out of range.
    pub fn x(&self, i: i64, j: i64) -> Poly {
        self.x_var(i, j).map(Poly::var).unwrap_or_default()
    }

    pub fn w_var(&self, k: i64, l: i64) -> Option<Var> {
        let (k, l) = if k <= l { (k, l) } else { (l, k) };
        if !self.odd_in_range(k, 3) || !self.odd_in_range(l, 3) {
            return None;
        }
        Some(Var::named(&format!("w{k}_{l}")).expect("w names are well formed"))
    }

    /// `w_{k,l} = w_{l,k}`, zero out of range.
    pub fn w(&self, k: i64, l: i64) -> Poly {
        self.w_var(k, l).map(Poly::var).unwrap_or_default()
    }

    /// `lambda_s`, zero unless `s` is one of `4, 6, ..., 4g+2`.
    pub fn lambda(&self, s: i64) -> Poly {
        if s >= 4 && s <= 4 * self.genus as i64 + 2 && s % 2 == 0 {
            Poly::var(lambda_var(s as u32))
        } else {
            Poly::zero()
        }
    }

    /// Odd indices `1, 3, ..., 2g-1`.
    pub fn odd(&self) -> impl Iterator<Item = i64> {
        (0..self.genus as i64).map(|n| 2 * n + 1)
    }

    /// `x_{1,1}, x_{2,1}, x_{3,1}, x_{1,3}, ...`: all `3g` coordinates.
    pub fn x_vars(&self) -> Vec<Var> {
        self.odd()
            .flat_map(|j| (1..=3).map(move |i| (i, j)))
            .map(|(i, j)| self.x_var(i, j).expect("in range"))
            .collect()
    }

    pub fn w_vars(&self) -> Vec<Var> {
        let odd: Vec<i64> = self.odd().filter(|&j| j >= 3).collect();
        let mut out = Vec::new();
        for (a, &k) in odd.iter().enumerate() {
            for &l in &odd[a..] {
                out.push(self.w_var(k, l).expect("in range"));
            }
        }
        out
    }

    pub fn lambda_vars(&self) -> Vec<Var> {
        (2..=2 * self.genus + 1).map(|s| lambda_var(2 * s)).collect()
    }
}

fn delta(a: i64, b: i64) -> i64 {
    (a == b) as i64
}

fn c(n: i64) -> Poly {
    Poly::int(n)
}

/// One defining relation, stored as `lhs - rhs`.
#[derive(Debug, Clone)]
pub struct Relation {
    pub label: String,
    pub poly: Poly,
}

/// The `g(g+3)/2` relations on `(x, w, lambda)`.
pub fn generate_relations(ring: &XRing) -> Vec<Relation> {
    let x = |i, j| ring.x(i, j);
    let w = |k, l| ring.w(k, l);
    let l = |s| ring.lambda(s);
    let (x2, x3, x4) = (x(1, 1), x(2, 1), x(3, 1));
    let mut rels = Vec::new();
    let mut push = |label: String, lhs: Poly, rhs: Poly| {
        rels.push(Relation {
            label,
            poly: lhs - rhs,
        })
    };
    let upper: Vec<i64> = ring.odd().filter(|&k| k >= 3).collect();

    push(
        "x4".into(),
        x4.clone(),
        c(6) * x2.pow(2) + c(4) * x(1, 3) + c(2) * l(4),
    );
    for &k in &upper {
        push(
            format!("x3_{k}"),
            x(3, k),
            c(6) * &x2 * x(1, k) + c(6) * x(1, k + 2) - c(2) * w(3, k),
        );
    }
    push(
        "x3^2".into(),
        x3.pow(2),
        c(4) * x2.pow(3) + c(4) * &x2 * x(1, 3) - c(4) * x(1, 5)
            + c(4) * w(3, 3)
            + c(4) * l(4) * &x2
            + c(4) * l(6),
    );
    for &k in &upper {
        push(
            format!("x3*x2_{k}"),
            &x3 * x(2, k),
            c(4) * x2.pow(2) * x(1, k) + c(2) * x(1, 3) * x(1, k) + c(4) * &x2 * x(1, k + 2)
                - c(2) * x(1, k + 4)
                - c(2) * &x2 * w(3, k)
                + c(4) * w(3, k + 2)
                - c(2) * w(5, k)
                + c(2) * l(4) * x(1, k)
                + c(2 * delta(3, k)) * l(8),
        );
    }
    for (a, &j) in upper.iter().enumerate() {
        for &k in &upper[a..] {
            let deltas = 2 * delta(j, k) + delta(k, j - 2) + delta(j, k - 2);
            push(
                format!("x2_{j}*x2_{k}"),
                x(2, j) * x(2, k),
                c(4) * &x2 * x(1, j) * x(1, k)
                    + c(4) * x(1, k) * x(1, j + 2)
                    + c(4) * x(1, j) * x(1, k + 2)
                    + c(4) * w(k + 2, j + 2)
                    - c(2) * x(1, j) * w(3, k)
                    - c(2) * x(1, k) * w(3, j)
                    - c(2) * w(k, j + 4)
                    - c(2) * w(j, k + 4)
                    + c(2 * deltas) * l(j + k + 4),
            );
        }
    }
    rels
}

/// `lambda_s` and `w_{k,l}` as polynomials in `x`.
#[derive(Debug, Clone)]
pub struct JacobiMap {
    pub genus: u32,
    pub lambda: BTreeMap<Var, Poly>,
    pub w: BTreeMap<Var, Poly>,
    /// Symbols in the order they were solved.
    pub order: Vec<Var>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EliminationError {
    #[error("no remaining relation has a single unknown; unsolved: {0:?}")]
    Stuck(Vec<String>),
    #[error("relation {label} is not linear with constant coefficient in {unknown}")]
    NotLinear { label: String, unknown: String },
    #[error("relations left over after all unknowns were solved: {0:?}")]
    Overdetermined(Vec<String>),
}

/// Back-substitution: repeatedly takes the lowest-weight relation with a
/// single unsolved `lambda` or `w`, which must occur linearly with a constant
/// coefficient, and solves it.
pub fn eliminate(ring: &XRing, rels: &[Relation]) -> Result<JacobiMap, EliminationError> {
    let lambdas = ring.lambda_vars();
    let ws = ring.w_vars();
    let unknowns: Vec<Var> = lambdas.iter().chain(&ws).copied().collect();
    let mut solved: HashMap<Var, Poly> = HashMap::new();
    let mut order = Vec::new();
    let mut pending: Vec<Relation> = rels.to_vec();

    while solved.len() < unknowns.len() {
        let mut best: Option<(u32, usize, Var)> = None;
        for (idx, rel) in pending.iter().enumerate() {
            let open: Vec<Var> = rel
                .poly
                .vars()
                .into_iter()
                .filter(|v| unknowns.contains(v) && !solved.contains_key(v))
                .collect();
            if let [u] = open[..] {
                let weight = u.weight();
                if best.is_none_or(|(bw, bi, bu)| (weight, u, idx) < (bw, bu, bi)) {
                    best = Some((weight, idx, u));
                }
            }
        }
        let Some((_, idx, u)) = best else {
            let mut left: Vec<String> = unknowns
                .iter()
                .filter(|v| !solved.contains_key(v))
                .map(|v| v.to_string())
                .collect();
            left.sort();
            return Err(EliminationError::Stuck(left));
        };
        let rel = pending.remove(idx);
        let coeffs = rel.poly.coefficients_in(u);
        let lead = coeffs.get(1).and_then(Poly::as_constant);
        let lead = match lead {
            Some(l) if coeffs.len() == 2 && !l.is_zero() => l,
            _ => {
                return Err(EliminationError::NotLinear {
                    label: rel.label,
                    unknown: u.to_string(),
                })
            }
        };
        let expr = coeffs[0].scale(&(-num_rational::BigRational::from_integer(1.into()) / lead));
        solved.insert(u, expr.clone());
        order.push(u);
        let single: HashMap<Var, Poly> = [(u, expr)].into_iter().collect();
        for r in pending.iter_mut() {
            r.poly = r.poly.substitute(&single);
        }
        for v in solved.values_mut() {
            *v = v.substitute(&single);
        }
    }
    let leftover: Vec<String> = pending
        .iter()
        .filter(|r| !r.poly.is_zero())
        .map(|r| r.label.clone())
        .collect();
    if !leftover.is_empty() {
        return Err(EliminationError::Overdetermined(leftover));
    }
    let split = |vars: &[Var]| vars.iter().map(|v| (*v, solved[v].clone())).collect();
    Ok(JacobiMap {
        genus: ring.genus,
        lambda: split(&lambdas),
        w: split(&ws),
        order,
    })
}

impl JacobiMap {
    pub fn for_genus(genus: u32) -> Result<JacobiMap, EliminationError> {
        let ring = XRing::new(genus);
        eliminate(&ring, &generate_relations(&ring))
    }

    /// `lambda_s` and `w_{k,l}` substitutions together.
    pub fn assignment(&self) -> HashMap<Var, Poly> {
        self.lambda
            .iter()
            .chain(&self.w)
            .map(|(v, p)| (*v, p.clone()))
            .collect()
    }

    /// Replaces every `lambda` and `w` symbol by its expression in `x`.
    pub fn resolve(&self, p: &Poly) -> Poly {
        p.substitute(&self.assignment())
    }

    pub fn lambda_expr(&self, s: u32) -> Option<&Poly> {
        self.lambda.get(&lambda_var(s))
    }

    /// `w_{k,l}` in `x`, zero out of range.
    pub fn w_expr(&self, k: i64, l: i64) -> Poly {
        XRing::new(self.genus)
            .w_var(k, l)
            .and_then(|v| self.w.get(&v).cloned())
            .unwrap_or_default()
    }

    /// The map `p`, components ordered `lambda_4, ..., lambda_{4g+2}`.
    pub fn polymap(&self) -> PolyMap {
        let mut comps: Vec<(Var, Poly)> = self.lambda.iter().map(|(v, p)| (*v, p.clone())).collect();
        comps.sort_by_key(|(v, _)| v.weight());
        PolyMap::new("p", comps)
    }
}

/// Every relation vanishes after substituting the map.
pub fn verify_relations_vanish(id: &str, rels: &[Relation], jm: &JacobiMap) -> Claim {
    let assignment = jm.assignment();
    let mut claim = Claim::new(id, "relations vanish on the eliminated map");
    for r in rels {
        claim.push(r.label.clone(), r.poly.substitute(&assignment));
    }
    claim
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::poly;

    #[test]
    fn relation_counts() {
        for g in 1..=5u32 {
            let ring = XRing::new(g);
            let rels = generate_relations(&ring);
            assert_eq!(rels.len() as u32, g * (g + 3) / 2);
            assert!(rels.iter().all(|r| r.poly.weight_check() != crate::Homogeneity::Inhomogeneous));
            assert_eq!(ring.x_vars().len() as u32, 3 * g);
            assert_eq!(ring.w_vars().len() as u32, g * (g - 1) / 2);
        }
    }

    #[test]
    fn naming() {
        let r = XRing::new(4);
        assert_eq!(r.x(1, 1), poly("x2"));
        assert_eq!(r.x(3, 5), poly("z8"));
        assert_eq!(r.x(2, 7), poly("x2_7"));
        assert!(r.x(2, 9).is_zero());
        assert!(r.x(4, 1).is_zero());
        assert_eq!(r.w(5, 3), poly("w3_5"));
        assert!(r.w(1, 3).is_zero());
        assert!(r.lambda(2).is_zero());
    }

    #[test]
    fn genus_one_map() {
        let jm = JacobiMap::for_genus(1).unwrap();
        assert_eq!(jm.lambda_expr(4).unwrap(), &poly("-3*x2^2 + 1/2*x4"));
        assert_eq!(jm.lambda_expr(6).unwrap(), &poly("2*x2^3 + 1/4*x3^2 - 1/2*x2*x4"));
    }

    #[test]
    fn perturbed_map_fails() {
        let ring = XRing::new(3);
        let rels = generate_relations(&ring);
        let mut jm = eliminate(&ring, &rels).unwrap();
        assert!(verify_relations_vanish("t", &rels, &jm).holds());
        let l6 = lambda_var(6);
        let bumped = jm.lambda[&l6].clone() + Poly::one();
        jm.lambda.insert(l6, bumped);
        assert!(!verify_relations_vanish("t", &rels, &jm).holds());
    }
}
