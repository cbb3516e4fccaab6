//! Dense linear systems over the rationals.

use num_traits::{One, Zero};

use crate::exactpoly::Rational;

/// Row echelon data for `A x = b`.
#[derive(Debug, Clone)]
pub struct Echelon {
    /// Pivot column of each nonzero row.
    pub pivots: Vec<usize>,
    /// Reduced rows `[A | b]`.
    pub rows: Vec<Vec<Rational>>,
    pub consistent: bool,
    pub unknowns: usize,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_unique(&self) -> bool {
        self.consistent && self.rank() == self.unknowns
    }

    /// The solution with all free unknowns set to zero.
    pub fn particular(&self) -> Option<Vec<Rational>> {
        if !self.consistent {
            return None;
        }
        let mut x = vec![Rational::zero(); self.unknowns];
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            x[p] = row[self.unknowns].clone();
        }
        Some(x)
    }
}

/// Gauss-Jordan elimination of the equations `(coefficients, rhs)`.
pub fn reduce(eqs: &[(Vec<Rational>, Rational)], unknowns: usize) -> Echelon {
    let mut rows: Vec<Vec<Rational>> = eqs
        .iter()
        .map(|(a, b)| {
            let mut r = a.clone();
            r.resize(unknowns, Rational::zero());
            r.push(b.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..unknowns {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / &rows[r][c];
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let consistent = rows[r..].iter().all(|row| row[unknowns].is_zero());
    rows.truncate(r);
    Echelon {
        pivots,
        rows,
        consistent,
        unknowns,
    }
}

/// A solution of the system (free unknowns zero), or `None` if inconsistent.
pub fn solve(eqs: &[(Vec<Rational>, Rational)], unknowns: usize) -> Option<Vec<Rational>> {
    reduce(eqs, unknowns).particular()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn unique_and_inconsistent() {
        let eqs = vec![(vec![q(1), q(1)], q(3)), (vec![q(1), q(-1)], q(1))];
        let e = reduce(&eqs, 2);
        assert!(e.is_unique());
        assert_eq!(e.particular().unwrap(), vec![q(2), q(1)]);
        let bad = vec![(vec![q(1), q(1)], q(3)), (vec![q(2), q(2)], q(1))];
        assert!(solve(&bad, 2).is_none());
        let under = reduce(&[(vec![q(0), q(2)], q(4))], 2);
        assert!(!under.is_unique());
        assert_eq!(under.particular().unwrap(), vec![q(0), q(2)]);
    }
}
