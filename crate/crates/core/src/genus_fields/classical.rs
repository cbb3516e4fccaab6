//! Classical `wp` symbols in terms of the `x` coordinates.
//!
//! A symbol is written `wp{i}` or `wp{i}_{k1}_{k2}..`: `i` derivatives in the
//! first direction followed by derivatives in the odd directions `k1, k2, ..`.
//! Indices equal to 1 fold into `i`.

use std::collections::HashMap;

use super::{FieldCatalog, FieldError, GenusContext};
use crate::exactpoly::{Poly, Var};

pub struct SymbolDictionary<'a> {
    ctx: &'a GenusContext,
    catalog: &'a FieldCatalog,
}

/// `(i, K)` with `K` sorted and free of 1s.
pub fn parse_symbol(name: &str) -> Option<(u32, Vec<u32>)> {
    let rest = name.strip_prefix("wp")?;
    let mut parts = rest.split('_');
    let mut i: u32 = parts.next()?.parse().ok()?;
    let mut ks = Vec::new();
    for p in parts {
        let k: u32 = p.parse().ok()?;
        if k == 1 {
            i += 1;
        } else if k % 2 == 1 {
            ks.push(k);
        } else {
            return None;
        }
    }
    ks.sort_unstable();
    Some((i, ks))
}

impl<'a> SymbolDictionary<'a> {
    pub fn new(ctx: &'a GenusContext, catalog: &'a FieldCatalog) -> Self {
        SymbolDictionary { ctx, catalog }
    }

    fn l(&self, k: u32) -> Result<&'a super::Derivation, FieldError> {
        self.catalog.get(&format!("L{k}"))
    }

    pub fn symbol(&self, i: u32, ks: &[u32]) -> Result<Poly, FieldError> {
        let bad = || FieldError::UnknownSymbol(format!("wp{i}{}", ks.iter().map(|k| format!("_{k}")).collect::<String>()));
        let ring = &self.ctx.ring;
        match ks {
            [] => match i {
                0 | 1 => Err(bad()),
                2..=4 => ring.x_var(i as i64 - 1, 1).map(Poly::var).ok_or_else(bad),
                _ => Ok(self.l(1)?.apply(&self.symbol(i - 1, ks)?)),
            },
            [j] => match i {
                0 => Err(bad()),
                1..=3 => ring.x_var(i as i64, *j as i64).map(Poly::var).ok_or_else(bad),
                _ => Ok(self.l(1)?.apply(&self.symbol(i - 1, ks)?)),
            },
            [k, l] if i == 0 => {
                ring.w_var(*k as i64, *l as i64).ok_or_else(bad)?;
                Ok(self.ctx.jm.w_expr(*k as i64, *l as i64))
            }
            [init @ .., last] => Ok(self.l(*last)?.apply(&self.symbol(i, init)?)),
        }
    }

    pub fn lookup(&self, name: &str) -> Result<Poly, FieldError> {
        let (i, ks) = parse_symbol(name).ok_or_else(|| FieldError::UnknownSymbol(name.to_string()))?;
        self.symbol(i, &ks)
    }

    /// Replaces every `wp` symbol and then every map or auxiliary name.
    pub fn translate(&self, p: &Poly) -> Result<Poly, FieldError> {
        let mut assignment: HashMap<Var, Poly> = HashMap::new();
        for v in p.vars() {
            if v.name().starts_with("wp") {
                assignment.insert(v, self.lookup(&v.name())?);
            }
        }
        Ok(self.ctx.resolve(&p.substitute(&assignment)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbols_parse_and_fold() {
        assert_eq!(parse_symbol("wp2"), Some((2, vec![])));
        assert_eq!(parse_symbol("wp0_5_3"), Some((0, vec![3, 5])));
        assert_eq!(parse_symbol("wp0_1_3"), Some((1, vec![3])));
        assert_eq!(parse_symbol("wp1_4"), None);
        assert_eq!(parse_symbol("x2"), None);
    }
}
