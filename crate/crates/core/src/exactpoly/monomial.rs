use std::cmp::Ordering;

use smallvec::SmallVec;

use super::Var;

/// A power product. Factors are kept sorted by variable with no zero exponents.
///
/// `Ord` is graded lexicographic (total degree first), which is a monomial
/// order; exact division relies on that.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    degree: u32,
    factors: SmallVec<[(Var, u32); 4]>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: Var) -> Self {
        Self::power(v, 1)
    }

    pub fn power(v: Var, e: u32) -> Self {
        let mut m = Self::one();
        if e > 0 {
            m.factors.push((v, e));
            m.degree = e;
        }
        m
    }

    /// Builds a monomial from arbitrary `(var, exponent)` pairs, merging repeats.
    pub fn from_factors<I: IntoIterator<Item = (Var, u32)>>(it: I) -> Self {
        it.into_iter()
            .fold(Self::one(), |acc, (v, e)| acc.mul(&Self::power(v, e)))
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn weight(&self) -> u32 {
        self.factors.iter().map(|(v, e)| v.weight() * e).sum()
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.factors
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.factors
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.factors.iter().map(|(v, _)| *v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut factors = SmallVec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.factors, &other.factors);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    factors.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    factors.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    factors.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        factors.extend_from_slice(&a[i..]);
        factors.extend_from_slice(&b[j..]);
        Monomial {
            degree: self.degree + other.degree,
            factors,
        }
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.degree > self.degree {
            return None;
        }
        let mut factors = SmallVec::with_capacity(self.factors.len());
        let mut j = 0;
        for &(v, e) in &self.factors {
            if j < other.factors.len() && other.factors[j].0 < v {
                return None;
            }
            if j < other.factors.len() && other.factors[j].0 == v {
                let d = other.factors[j].1;
                j += 1;
                match e.cmp(&d) {
                    Ordering::Less => return None,
                    Ordering::Equal => {}
                    Ordering::Greater => factors.push((v, e - d)),
                }
            } else {
                factors.push((v, e));
            }
        }
        if j < other.factors.len() {
            return None;
        }
        Some(Monomial {
            degree: self.degree - other.degree,
            factors,
        })
    }

    /// Lowers the exponent of `v` by one; `None` when `v` is absent.
    pub(crate) fn lower(&self, v: Var) -> Option<(u32, Monomial)> {
        let i = self.factors.binary_search_by(|(w, _)| w.cmp(&v)).ok()?;
        let e = self.factors[i].1;
        let mut m = self.clone();
        if e == 1 {
            m.factors.remove(i);
        } else {
            m.factors[i].1 -= 1;
        }
        m.degree -= 1;
        Some((e, m))
    }

    /// Factors in canonical display order: ascending weight, then name.
    pub fn canonical_factors(&self) -> Vec<(String, u32, u32)> {
        let mut out: Vec<_> = self
            .factors
            .iter()
            .map(|(v, e)| (v.name().to_string(), v.weight(), *e))
            .collect();
        out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            for (a, b) in self.factors.iter().zip(other.factors.iter()) {
                if a.0 != b.0 {
                    // the side carrying the earlier variable is larger
                    return b.0.cmp(&a.0);
                }
                if a.1 != b.1 {
                    return a.1.cmp(&b.1);
                }
            }
            self.factors.len().cmp(&other.factors.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(n: &str) -> Var {
        Var::named(n).unwrap()
    }

    #[test]
    fn mul_div_round_trip() {
        let a = Monomial::from_factors([(v("x2"), 2), (v("y4"), 1)]);
        let b = Monomial::from_factors([(v("x2"), 1), (v("z6"), 3)]);
        let ab = a.mul(&b);
        assert_eq!(ab.degree(), 7);
        assert_eq!(ab.exponent(v("x2")), 3);
        assert_eq!(ab.weight(), 3 * 2 + 4 + 18);
        assert_eq!(ab.div(&b).unwrap(), a);
        assert_eq!(ab.div(&a).unwrap(), b);
        assert!(a.div(&b).is_none());
    }

    #[test]
    fn order_is_compatible_with_multiplication() {
        let ms = [
            Monomial::one(),
            Monomial::var(v("x2")),
            Monomial::var(v("x3")),
            Monomial::from_factors([(v("x2"), 1), (v("x3"), 1)]),
            Monomial::power(v("x3"), 2),
        ];
        let c = Monomial::from_factors([(v("y4"), 2), (v("x2"), 1)]);
        for a in &ms {
            assert!(Monomial::one() <= *a);
            for b in &ms {
                assert_eq!(a.cmp(b), a.mul(&c).cmp(&b.mul(&c)));
            }
        }
    }
}
