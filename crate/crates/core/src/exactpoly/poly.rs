use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Monomial, PolyError, Rational, Var};

/// Sparse multivariate polynomial over the rationals.
///
/// Zero coefficients are never stored, so equality is structural.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

/// Result of [`Poly::weight_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero polynomial, homogeneous of every weight.
    Zero,
    Homogeneous(u32),
    Inhomogeneous,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Self::constant(Rational::new(n.into(), d.into()))
    }

    pub fn var(v: Var) -> Self {
        Self::term(Rational::one(), Monomial::var(v))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(it: I) -> Self {
        let mut p = Poly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// The constant value, if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Leading term under the graded lexicographic order.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.vars()).collect()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn weight_check(&self) -> Homogeneity {
        let mut ws = self.terms.keys().map(Monomial::weight);
        match ws.next() {
            None => Homogeneity::Zero,
            Some(w) => {
                if ws.all(|x| x == w) {
                    Homogeneity::Homogeneous(w)
                } else {
                    Homogeneity::Inhomogeneous
                }
            }
        }
    }

    /// True when every term has weight `w` (vacuously for zero).
    pub fn is_homogeneous_of(&self, w: u32) -> bool {
        self.terms.keys().all(|m| m.weight() == w)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, c: &Rational, mono: &Monomial) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.mul(mono), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative.
    pub fn partial(&self, v: Var) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            if let Some((e, lowered)) = m.lower(v) {
                out.add_term(lowered, c * Rational::from_integer(e.into()));
            }
        }
        out
    }

    /// Composes with `assignment`. Variables without an image pass through unchanged.
    pub fn substitute(&self, assignment: &HashMap<Var, Poly>) -> Poly {
        let mut powers: HashMap<Var, Vec<Poly>> = HashMap::new();
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in &self.terms {
            let mut kept = Monomial::one();
            let mut image = Poly::constant(c.clone());
            for &(v, e) in m.factors() {
                match assignment.get(&v) {
                    Some(img) => {
                        let table = powers.entry(v).or_insert_with(|| vec![Poly::one()]);
                        while table.len() <= e as usize {
                            let next = &table[table.len() - 1] * img;
                            table.push(next);
                        }
                        image = &image * &table[e as usize];
                    }
                    None => kept = kept.mul(&Monomial::power(v, e)),
                }
            }
            for (im, ic) in image.terms {
                let key = im.mul(&kept);
                *acc.entry(key).or_insert_with(Rational::zero) += ic;
            }
        }
        Poly::from_hash(acc)
    }

    /// Evaluates at a rational point; every variable must be assigned.
    pub fn evaluate(&self, point: &HashMap<Var, Rational>) -> Result<Rational, PolyError> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.factors() {
                let x = point
                    .get(&v)
                    .ok_or_else(|| PolyError::UnassignedVariable(v.to_string()))?;
                t *= num_traits::pow(x.clone(), e as usize);
            }
            total += t;
        }
        Ok(total)
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let (lm, lc) = divisor.leading()?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.terms.clone();
        let mut quotient = Poly::zero();
        while let Some((m, c)) = rem.iter().next_back() {
            let qm = m.div(&lm)?;
            let qc = c / &lc;
            for (dm, dc) in &divisor.terms {
                let key = dm.mul(&qm);
                let delta = dc * &qc;
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(-delta);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() -= delta;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                }
            }
            quotient.terms.insert(qm, qc);
        }
        Some(quotient)
    }

    /// Coefficients in `v`: `result[i]` multiplies `v^i`.
    pub fn coefficients_in(&self, v: Var) -> Vec<Poly> {
        let mut out = vec![Poly::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            let rest = m.div(&Monomial::power(v, e)).expect("factor present");
            out[e as usize].add_term(rest, c.clone());
        }
        out
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Splits into `monomial-in-`vars` → coefficient polynomial`, treating
    /// everything outside `vars` as coefficients.
    pub fn collect_by(&self, vars: &BTreeSet<Var>) -> BTreeMap<Monomial, Poly> {
        let mut out: BTreeMap<Monomial, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (inside, outside): (Vec<_>, Vec<_>) =
                m.factors().iter().partition(|(v, _)| vars.contains(v));
            let key = Monomial::from_factors(inside);
            let coef = Monomial::from_factors(outside);
            out.entry(key).or_default().add_term(coef, c.clone());
        }
        out
    }

    pub fn max_abs_coefficient(&self) -> Rational {
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }

    fn from_hash(acc: HashMap<Monomial, Rational>) -> Poly {
        Poly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl From<Var> for Poly {
    fn from(v: Var) -> Self {
        Poly::var(v)
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (big, small) = if self.len() >= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        if self.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            return rhs.mul_monomial(c, m);
        }
        if rhs.len() == 1 {
            let (m, c) = rhs.terms.iter().next().unwrap();
            return self.mul_monomial(c, m);
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.len() * rhs.len() / 2 + 1);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let c = ca * cb;
                match acc.entry(ma.mul(mb)) {
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::hash_map::Entry::Occupied(mut e) => *e.get_mut() += c,
                }
            }
        }
        Poly::from_hash(acc)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |a, b| a + b)
    }
}

impl std::fmt::Debug for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Display::fmt(self, f)
    }
}
