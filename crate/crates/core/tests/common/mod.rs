#![allow(dead_code)]

use std::collections::HashMap;

use hyperderiv::{Poly, PolyMatrix};

/// Determinant by Laplace expansion along the first row, memoized on the
/// set of columns still available. Division-free and independent of the
/// elimination code under test.
pub fn cofactor_det(m: &PolyMatrix) -> Poly {
    assert_eq!(m.rows(), m.cols());
    let n = m.rows();
    let mut memo: HashMap<u32, Poly> = HashMap::new();
    fn go(m: &PolyMatrix, row: usize, cols: u32, memo: &mut HashMap<u32, Poly>) -> Poly {
        if row == m.rows() {
            return Poly::one();
        }
        if let Some(p) = memo.get(&cols) {
            return p.clone();
        }
        let mut acc = Poly::zero();
        let mut sign = 1;
        for c in 0..m.cols() {
            if cols & (1 << c) == 0 {
                continue;
            }
            let entry = m.get(row, c);
            if !entry.is_zero() {
                let minor = go(m, row + 1, cols & !(1 << c), memo);
                let term = entry * &minor;
                acc = if sign > 0 { acc + term } else { acc - term };
            }
            sign = -sign;
        }
        memo.insert(cols, acc.clone());
        acc
    }
    go(m, 0, (1u32 << n) - 1, &mut memo)
}
