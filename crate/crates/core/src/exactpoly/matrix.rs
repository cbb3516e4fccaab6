use num_bigint::BigInt;
use num_traits::One;

use super::{Poly, PolyError, Rational, Var};

/// Dense matrix of polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            entries: vec![Poly::zero(); rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Poly) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Result<Self, PolyError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(PolyError::Ragged);
        }
        Ok(PolyMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Poly::one() } else { Poly::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn row(&self, i: usize) -> &[Poly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> PolyMatrix {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    ///
    /// Rows are first scaled to integer coefficients; the product of the
    /// scale factors is divided out at the end.
    pub fn determinant(&self) -> Result<Poly, PolyError> {
        if self.rows != self.cols {
            return Err(PolyError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Poly::one());
        }
        let mut scale = BigInt::one();
        let mut a: Vec<Vec<Poly>> = (0..n)
            .map(|i| {
                let l = self
                    .row(i)
                    .iter()
                    .fold(BigInt::one(), |acc, p| num_integer::lcm(acc, p.denominator_lcm()));
                let f = Rational::from_integer(l.clone());
                scale *= l;
                self.row(i).iter().map(|p| p.scale(&f)).collect()
            })
            .collect();

        let mut negate = false;
        let mut prev = Poly::one();
        for k in 0..n - 1 {
            // cheapest nonzero pivot in column k
            let pivot = (k..n)
                .filter(|&i| !a[i][k].is_zero())
                .min_by_key(|&i| a[i][k].len());
            let Some(p) = pivot else {
                return Ok(Poly::zero());
            };
            if p != k {
                a.swap(p, k);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                    a[i][j] = num
                        .div_exact(&prev)
                        .expect("Bareiss step divides exactly");
                }
                a[i][k] = Poly::zero();
            }
            prev = a[k][k].clone();
        }
        let mut det = a[n - 1][n - 1].clone();
        if negate {
            det = -det;
        }
        Ok(det.scale(&Rational::new(BigInt::one(), scale)))
    }
}

/// Sylvester matrix of `f` and `h` in `v`: `deg h` shifted rows of `f`'s
/// coefficients (highest first), then `deg f` shifted rows of `h`'s.
pub fn sylvester(f: &Poly, h: &Poly, v: Var) -> Result<PolyMatrix, PolyError> {
    if f.is_zero() || h.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let fc = f.coefficients_in(v);
    let hc = h.coefficients_in(v);
    let (m, n) = (fc.len() - 1, hc.len() - 1);
    let size = m + n;
    let mut s = PolyMatrix::zeros(size, size);
    for r in 0..n {
        for (i, c) in fc.iter().rev().enumerate() {
            s.set(r, r + i, c.clone());
        }
    }
    for r in 0..m {
        for (i, c) in hc.iter().rev().enumerate() {
            s.set(n + r, r + i, c.clone());
        }
    }
    Ok(s)
}

/// Resultant of `f` and `h` with respect to `v`.
pub fn resultant(f: &Poly, h: &Poly, v: Var) -> Result<Poly, PolyError> {
    sylvester(f, h, v)?.determinant()
}

impl Default for PolyMatrix {
    fn default() -> Self {
        PolyMatrix::zeros(0, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::parse;

    fn p(s: &str) -> Poly {
        parse(s).unwrap()
    }

    #[test]
    fn genus_one_matrix_determinant() {
        let t = PolyMatrix::from_rows(vec![
            vec![p("4*l4"), p("6*l6")],
            vec![p("6*l6"), p("-4/3*l4^2")],
        ])
        .unwrap();
        assert_eq!(t.determinant().unwrap(), p("-4/3*(4*l4^3 + 27*l6^2)"));
    }

    #[test]
    fn identity_and_errors() {
        assert_eq!(PolyMatrix::identity(5).determinant().unwrap(), Poly::one());
        assert!(matches!(
            PolyMatrix::zeros(2, 3).determinant(),
            Err(PolyError::NotSquare { .. })
        ));
        assert!(PolyMatrix::zeros(3, 3).determinant().unwrap().is_zero());
    }

    #[test]
    fn needs_pivoting() {
        let m = PolyMatrix::from_rows(vec![
            vec![Poly::zero(), p("x2")],
            vec![p("y4"), p("1/3")],
        ])
        .unwrap();
        assert_eq!(m.determinant().unwrap(), p("-x2*y4"));
    }

    #[test]
    fn cubic_discriminant() {
        let x = Var::named("X").unwrap();
        let f = p("X^3 + l4*X + l6");
        let r = resultant(&f, &f.partial(x), x).unwrap();
        assert_eq!(r, p("4*l4^3 + 27*l6^2"));
    }

    #[test]
    fn coprime_linear_forms() {
        let x = Var::named("X").unwrap();
        let r = resultant(&p("X"), &p("X - 1"), x).unwrap();
        assert_eq!(r.as_constant().unwrap(), Rational::from_integer((-1).into()));
        assert!(matches!(
            resultant(&Poly::zero(), &p("X"), x),
            Err(PolyError::ZeroPolynomial)
        ));
    }
}
