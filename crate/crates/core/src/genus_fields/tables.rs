//! Commutator tables, the genus-2 normalization and the classical forms.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use super::printed::{self, Row};
use super::{FieldCatalog, FieldError, GenusBuild, GenusContext, SymbolDictionary};
use crate::claim::Claim;
use crate::derivation::{verify_bracket_relation, BracketRelation, Derivation};
use crate::exactpoly::{Poly, Rational, Var};
use crate::lambda_space::{commutator_matrix, commutator_pairs};
use crate::linsolve;

/// `[left, right] = sum coefficient * field`, coefficients in `x` (and parameters).
#[derive(Debug, Clone, PartialEq)]
pub struct TableEntry {
    pub left: String,
    pub right: String,
    pub terms: Vec<(Poly, String)>,
}

impl TableEntry {
    pub fn label(&self) -> String {
        format!("[{},{}]", self.left, self.right)
    }

    /// Terms with equal fields merged, zero coefficients dropped, in field order.
    pub fn collected(&self, order: &[String]) -> Vec<(Poly, String)> {
        order
            .iter()
            .filter_map(|f| {
                let c: Poly = self.terms.iter().filter(|(_, n)| n == f).map(|(c, _)| c.clone()).sum();
                (!c.is_zero()).then(|| (c, f.clone()))
            })
            .collect()
    }
}

impl Serialize for TableEntry {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("TableEntry", 3)?;
        st.serialize_field("bracket", &self.label())?;
        let terms: Vec<(String, &str)> = self.terms.iter().map(|(c, f)| (c.to_string(), f.as_str())).collect();
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

fn entry(row: &Row, translate: &dyn Fn(&str) -> Result<Poly, FieldError>) -> Result<TableEntry, FieldError> {
    Ok(TableEntry {
        left: row.left.to_string(),
        right: row.right.to_string(),
        terms: row
            .terms
            .iter()
            .map(|(c, f)| Ok((translate(c)?, f.to_string())))
            .collect::<Result<_, FieldError>>()?,
    })
}

fn grading_rows(catalog: &FieldCatalog) -> Vec<TableEntry> {
    catalog.fields[1..]
        .iter()
        .map(|f| TableEntry {
            left: "L0".into(),
            right: f.name.clone(),
            terms: vec![(Poly::int(f.weight), f.name.clone())],
        })
        .collect()
}

fn odd_rows(catalog: &FieldCatalog) -> Vec<TableEntry> {
    let odd: Vec<&Derivation> = catalog.odd().collect();
    let mut out = Vec::new();
    for (a, l) in odd.iter().enumerate() {
        for r in &odd[a + 1..] {
            out.push(TableEntry {
                left: l.name.clone(),
                right: r.name.clone(),
                terms: Vec::new(),
            });
        }
    }
    out
}

/// The genus-3 brackets of two even fields: the structure matrix of the
/// parameter-space fields pulled back along the map, plus half of `half`.
fn genus3_even_rows(
    ctx: &GenusContext,
    half: &[[&str; 3]; 10],
    translate: &dyn Fn(&str) -> Result<Poly, FieldError>,
) -> Result<Vec<TableEntry>, FieldError> {
    let m = commutator_matrix(&ctx.curve()).expect("genus 3");
    let halve = Rational::new(1.into(), 2.into());
    commutator_pairs(3)
        .into_iter()
        .enumerate()
        .map(|(r, (i, j))| {
            let mut terms: Vec<(Poly, String)> = (0..m.cols())
                .map(|k| (ctx.resolve(m.get(r, k)), format!("L{}", 2 * k)))
                .collect();
            for (c, f) in half[r].iter().zip(["L1", "L3", "L5"]) {
                terms.push((translate(c)?.scale(&halve), f.to_string()));
            }
            Ok(TableEntry {
                left: format!("L{i}"),
                right: format!("L{j}"),
                terms,
            })
        })
        .collect()
}

/// The complete polynomial commutator table of a genus.
pub fn bracket_table(build: &GenusBuild) -> Result<Vec<TableEntry>, FieldError> {
    let ctx = &build.ctx;
    let tr = |s: &str| Ok(ctx.parse_resolved(s));
    let rows = |rs: &[Row]| rs.iter().map(|r| entry(r, &tr)).collect::<Result<Vec<_>, _>>();
    match build.catalog.genus {
        1 => rows(printed::genus1::TABLE),
        2 => rows(printed::genus2::TABLE),
        _ => {
            use printed::genus3 as p;
            let mut out = grading_rows(&build.catalog);
            out.extend(odd_rows(&build.catalog));
            out.extend(rows(&p::WITH_L1[1..])?);
            out.extend(rows(p::WITH_L3)?);
            out.extend(rows(p::WITH_L5)?);
            out.extend(genus3_even_rows(ctx, &p::HALF, &tr)?);
            Ok(out)
        }
    }
}

/// The same table written with classical symbols, translated to `x`.
pub fn classical_table(build: &GenusBuild, dict: &SymbolDictionary<'_>) -> Result<Vec<TableEntry>, FieldError> {
    let ctx = &build.ctx;
    let tr = |s: &str| dict.translate(&crate::exactpoly::poly(s));
    let rows = |rs: &[Row]| rs.iter().map(|r| entry(r, &tr)).collect::<Result<Vec<_>, _>>();
    match build.catalog.genus {
        1 => rows(printed::genus1::CLASSICAL),
        2 => rows(printed::genus2::CLASSICAL),
        _ => {
            use printed::genus3 as p;
            let mut out = rows(p::CLASSICAL_WITH_L1)?;
            out.extend(rows(p::CLASSICAL_WITH_L3)?);
            out.extend(rows(p::CLASSICAL_WITH_L5)?);
            out.extend(genus3_even_rows(ctx, &p::CLASSICAL_HALF, &tr)?);
            Ok(out)
        }
    }
}

/// One claim per row: the bracket of the catalog fields minus the expansion.
pub fn verify_table(id: &str, catalog: &FieldCatalog, table: &[TableEntry]) -> Vec<Claim> {
    use rayon::prelude::*;
    table
        .par_iter()
        .map(|e| {
            let cid = format!("{id}_{}_{}", e.left, e.right);
            let resolved = (|| -> Result<Claim, FieldError> {
                let left = catalog.get(&e.left)?;
                let right = catalog.get(&e.right)?;
                let expansion = e
                    .terms
                    .iter()
                    .map(|(c, f)| Ok((c.clone(), catalog.get(f)?)))
                    .collect::<Result<Vec<_>, FieldError>>()?;
                let rel = BracketRelation { left, right, expansion };
                Ok(verify_bracket_relation(&cid, &e.label(), &rel))
            })();
            resolved.unwrap_or_else(|err| Claim::fail(&cid, e.label(), err.to_string()))
        })
        .collect()
}

/// Checks the classical table both as bracket relations and term by term
/// against the polynomial table (at zero parameters).
pub fn verify_classical_tables(build: &GenusBuild) -> Vec<Claim> {
    let g = build.catalog.genus;
    let catalog = build.catalog.with_params_zero();
    let dict = SymbolDictionary::new(&build.ctx, &catalog);
    let anchor = "classical commutator table";
    let classical = match classical_table(build, &dict) {
        Ok(t) => t,
        Err(e) => return vec![Claim::fail(format!("g{g}_classical"), anchor, e.to_string())],
    };
    let poly_table = match bracket_table(build) {
        Ok(t) => t,
        Err(e) => return vec![Claim::fail(format!("g{g}_classical"), anchor, e.to_string())],
    };
    let zero: HashMap<Var, Poly> = build.catalog.params.iter().map(|v| (*v, Poly::zero())).collect();
    let order: Vec<String> = catalog.fields.iter().map(|f| f.name.clone()).collect();
    let mut agree = Claim::new(format!("g{g}_classical_matches_polynomial"), "classical and polynomial tables agree term by term");
    for c in &classical {
        let Some(p) = poly_table.iter().find(|p| p.left == c.left && p.right == c.right) else {
            agree.push(format!("{} missing from the polynomial table", c.label()), Poly::one());
            continue;
        };
        let p = TableEntry {
            terms: p.terms.iter().map(|(q, f)| (q.substitute(&zero), f.clone())).collect(),
            ..p.clone()
        };
        for f in &order {
            let coef = |e: &TableEntry| -> Poly { e.terms.iter().filter(|(_, n)| n == f).map(|(q, _)| q.clone()).sum() };
            agree.expect_eq(format!("{} coefficient of {f}", c.label()), &coef(c), &coef(&p));
        }
    }
    let mut out = verify_table(&format!("g{g}_classical"), &catalog, &classical);
    out.push(agree);
    out
}

/// The residual coefficients of the prescribed brackets with `L1`, as
/// polynomials in the parameters (one per monomial in `x`).
pub fn normalization_residuals(ctx: &GenusContext, catalog: &FieldCatalog) -> Result<Vec<(String, Poly)>, FieldError> {
    let xs: BTreeSet<Var> = ctx.ring.x_vars().into_iter().collect();
    let mut out = Vec::new();
    for row in printed::genus2::NORMALIZATION {
        let left = catalog.get(row.left)?;
        let right = catalog.get(row.right)?;
        let expansion = row
            .terms
            .iter()
            .map(|(c, f)| Ok((ctx.parse_resolved(c), catalog.get(f)?)))
            .collect::<Result<Vec<_>, FieldError>>()?;
        let residual = BracketRelation { left, right, expansion }.residual();
        for (v, p) in residual.action() {
            for (m, c) in p.collect_by(&xs) {
                out.push((format!("[{},{}]({v}) at {}", row.left, row.right, Poly::term(Rational::from_integer(1.into()), m)), c));
            }
        }
    }
    Ok(out)
}

/// Values of the parameters making the prescribed brackets hold.
#[derive(Debug, Clone, PartialEq)]
pub struct ParameterSolution {
    pub values: Vec<(Var, Rational)>,
    pub unique: bool,
}

impl ParameterSolution {
    pub fn as_map(&self) -> HashMap<Var, Rational> {
        self.values.iter().cloned().collect()
    }
}

/// Solves the affine system in the parameters; fails if it is inconsistent
/// or not affine.
pub fn solve_genus2_normalization(build: &GenusBuild) -> Result<ParameterSolution, FieldError> {
    let params = &build.catalog.params;
    let residuals = normalization_residuals(&build.ctx, &build.catalog)?;
    let mut eqs = Vec::new();
    for (label, q) in residuals {
        let mut row = vec![Rational::from_integer(0.into()); params.len()];
        let mut rhs = Rational::from_integer(0.into());
        for (m, c) in q.terms() {
            if m.is_one() {
                rhs = -c.clone();
                continue;
            }
            let idx = (m.degree() == 1)
                .then(|| m.vars().next())
                .flatten()
                .and_then(|v| params.iter().position(|p| *p == v))
                .ok_or_else(|| FieldError::Normalization(format!("{label} is not affine in the parameters: {q}")))?;
            row[idx] = c.clone();
        }
        eqs.push((row, rhs));
    }
    let ech = linsolve::reduce(&eqs, params.len());
    let values = ech
        .particular()
        .ok_or_else(|| FieldError::Normalization("the conditions are inconsistent".into()))?;
    Ok(ParameterSolution {
        values: params.iter().copied().zip(values).collect(),
        unique: ech.is_unique(),
    })
}
