//! Published formulas, checked literally.

use std::collections::HashMap;
use std::sync::OnceLock;

use hyperderiv::derivation::BracketRelation;
use hyperderiv::exactpoly::poly;
use hyperderiv::genus_fields::{
    bracket_table, build_aux, build_genus, classical_table, solve_genus2_normalization, verify_table, GenusBuild,
    SymbolDictionary,
};
use hyperderiv::lambda_space::{commutator_matrix, verify_commutator_matrix, CurveModel};
use hyperderiv::{Poly, Rational, Var};

fn build(g: u32) -> &'static GenusBuild {
    static B: [OnceLock<GenusBuild>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];
    B[g as usize - 1].get_or_init(|| build_genus(g).unwrap())
}

fn v(name: &str) -> Var {
    Var::named(name).unwrap()
}

/// `field(var)` at zero parameters, compared with `expected` after resolving map names.
fn assert_action(g: u32, field: &str, var: &str, expected: &str) {
    let b = build(g);
    let f = b.catalog.with_params_zero();
    let got = f.get(field).unwrap().on(v(var));
    assert_eq!(got, b.ctx.parse_resolved(expected), "g{g} {field}({var})");
}

#[test]
fn maps_as_published() {
    let g1 = &build(1).ctx.map;
    assert_eq!(g1.get(v("l4")).unwrap(), &poly("-3*x2^2 + 1/2*x4"));
    assert_eq!(g1.get(v("l6")).unwrap(), &poly("2*x2^3 + 1/4*x3^2 - 1/2*x2*x4"));
    let g2 = &build(2).ctx.map;
    assert_eq!(g2.get(v("l10")).unwrap(), &poly("2*x2*y4^2 + 1/4*y5^2 - 1/2*y4*y6"));
    let g3 = &build(3).ctx.map;
    assert_eq!(g3.get(v("l14")).unwrap(), &poly("2*x2*z6^2 + 1/4*z7^2 - 1/2*z6*z8"));
    assert_eq!(g3.get(v("l12")).unwrap(), &poly("4*x2*y4*z6 - 1/2*(y6*z6 - y5*z7 + y4*z8) + z6^2"));
    assert_eq!(build(3).ctx.jm.w_expr(3, 3), poly("3*x2*y4 - 1/2*y6 + 3*z6"));
}

#[test]
fn euler_and_first_fields() {
    assert_action(3, "L0", "z8", "8*z8");
    assert_action(1, "L1", "x2", "x3");
    assert_action(1, "L1", "x4", "12*x2*x3");
    assert_action(2, "L1", "y6", "4*(2*x2*y5 + x3*y4)");
    assert_action(3, "L1", "z8", "4*(x3*z6 + 2*x2*z7)");
}

#[test]
fn odd_fields_as_published() {
    assert_action(3, "L3", "y4", "x3*y4 - x2*y5 + z7");
    assert_action(3, "L5", "z6", "y5*z6 - y4*z7");
    assert_action(2, "L3", "y6", "8*x2*x3*y4 - 8*x2^2*y5 + x4*y5 - x3*y6 + 4*y4*y5");
}

#[test]
fn auxiliary_polynomials_as_published() {
    let a3 = build_aux(3).unwrap();
    assert_eq!(a3["p11"], poly("y5*z6 - y4*z7"));
    assert_eq!(a3["w13"], poly("-y5*x2*z6 + x2*y4*z7 - 1/2*y6*z7 + 1/2*y5*z8 + z6*z7"));
    let a2 = build_aux(2).unwrap();
    assert_eq!(a2["w9"], poly("-x2*x3*y4 + x2^2*y5 - 1/2*(x4*y5 - x3*y6) + y4*y5"));
}

#[test]
fn even_fields_as_published() {
    assert_action(1, "L2", "x2", "2/3*x4 - 2*x2^2");
    assert_action(1, "L2", "x3", "3*x2*x3");
    assert_action(1, "L2", "x4", "2*x2*x4 + 3*x3^2");
    assert_action(3, "L6", "z6", "-8/7*l8*y4 + 4*l6*z6 - 2*x2*y4*z6 + y6*z6 - y5*z7 + 2*z6^2");
    assert_action(3, "L2", "x2", "12/7*l4 + 2*x2^2 + 4*y4");
    assert_action(2, "L2", "x2", "8/5*l4 + 2*x2^2 + 4*y4");
    assert_action(2, "L2", "y4", "-4/5*l4*x2 + 2*x2*y4");
    assert_action(2, "L2", "x3", "3*x2*x3 + 5*y5");
}

#[test]
fn build_claims_hold() {
    for g in 1..=3 {
        for c in &build(g).claims {
            assert!(c.holds(), "{}: {:?}", c.id, c.witness());
        }
    }
}

#[test]
fn parameter_space_as_published() {
    let m1 = CurveModel::new(1).unwrap();
    assert_eq!(m1.f(), poly("X^3 + l4*X + l6"));
    assert_eq!(m1.discriminant(), poly("4*l4^3 + 27*l6^2"));
    let t = m1.t_matrix();
    assert_eq!([t.get(0, 0), t.get(0, 1), t.get(1, 0), t.get(1, 1)], [&poly("4*l4"), &poly("6*l6"), &poly("6*l6"), &poly("-4/3*l4^2")]);
    assert_eq!(t.determinant().unwrap(), poly("-4/3*(4*l4^3 + 27*l6^2)"));
    let m3 = CurveModel::new(3).unwrap();
    assert_eq!(m3.f(), poly("X^7 + l4*X^5 + l6*X^4 + l8*X^3 + l10*X^2 + l12*X + l14"));
    assert_eq!(m3.t_matrix().determinant().unwrap(), m3.discriminant().scale(&Rational::new((-64).into(), 7.into())));
    let l2 = m1.field(2).unwrap();
    assert_eq!(l2.on(v("l4")), poly("6*l6"));
    assert_eq!(l2.on(v("l6")), poly("-4/3*l4^2"));
}

#[test]
fn structure_matrix_entries() {
    let m = commutator_matrix(&CurveModel::new(3).unwrap()).unwrap();
    assert_eq!(m.get(0, 3), &Poly::int(2));
    assert_eq!(m.get(9, 0), &Poly::zero());
    assert_eq!(m.get(3, 4), &poly("-4/7*l4"));
}

#[test]
fn corrupted_structure_matrix_fails() {
    let model = CurveModel::new(3).unwrap();
    let mut m = commutator_matrix(&model).unwrap();
    assert!(verify_commutator_matrix(&model, &m).iter().all(|c| c.holds()));
    m.set(0, 3, Poly::int(3));
    let claims = verify_commutator_matrix(&model, &m);
    assert!(!claims[0].holds());
    assert!(claims[1..].iter().all(|c| c.holds()));
}

fn table_row(g: u32, left: &str, right: &str) -> hyperderiv::genus_fields::TableEntry {
    bracket_table(build(g))
        .unwrap()
        .into_iter()
        .find(|e| e.left == left && e.right == right)
        .unwrap_or_else(|| panic!("[{left},{right}] in the genus {g} table"))
}

#[test]
fn selected_table_rows() {
    let b3 = build(3);
    let l35 = b3.catalog.get("L3").unwrap().bracket(b3.catalog.get("L5").unwrap());
    assert!(l35.is_zero());
    let r = table_row(3, "L1", "L2");
    assert_eq!(r.collected(&["L1".into(), "L3".into()]), vec![(poly("x2"), "L1".into()), (poly("-1"), "L3".into())]);
    for (g, l, r) in [(3, "L1", "L2"), (3, "L3", "L2"), (3, "L5", "L10"), (3, "L8", "L10"), (2, "L3", "L2"), (1, "L1", "L2")] {
        let e = table_row(g, l, r);
        let claim = verify_table("row", &build(g).catalog, &[e]).remove(0);
        assert!(claim.holds(), "g{g} [{l},{r}]: {:?}", claim.witness());
    }
}

#[test]
fn corrupted_table_row_fails() {
    let mut e = table_row(3, "L1", "L2");
    e.terms[0].0 = &e.terms[0].0 + &Poly::one();
    assert!(!verify_table("row", &build(3).catalog, &[e]).remove(0).holds());
}

#[test]
fn normalization_and_hatted_bracket() {
    let b = build(2);
    let sol = solve_genus2_normalization(b).unwrap();
    assert!(sol.unique);
    assert!(sol.values.iter().all(|(_, q)| *q == Rational::from_integer(0.into())));
    let cat = b.catalog.specialize(&sol.as_map());
    let f = |n: &str| cat.get(n).unwrap();
    let rel = BracketRelation {
        left: f("L2"),
        right: f("L4"),
        expansion: vec![
            (b.ctx.parse_resolved("8/5*l6"), f("L0")),
            (b.ctx.parse_resolved("-8/5*l4"), f("L2")),
            (Poly::int(2), f("L6")),
            (poly("-1/2*y5"), f("L1")),
            (poly("1/2*x3"), f("L3")),
        ],
    };
    assert!(rel.residual().is_zero());
}

#[test]
fn classical_table_needs_zero_parameters() {
    let b = build(2);
    let at = |alpha: i64| {
        let values: HashMap<Var, Rational> = b
            .catalog
            .params
            .iter()
            .map(|p| (*p, Rational::from_integer(if p.name().as_ref() == "alpha" { alpha } else { 0 }.into())))
            .collect();
        let cat = b.catalog.specialize(&values);
        let dict = SymbolDictionary::new(&b.ctx, &cat);
        let table = classical_table(b, &dict).unwrap();
        verify_table("c", &cat, &table).iter().all(|c| c.holds())
    };
    assert!(at(0));
    assert!(!at(1));
}

#[test]
fn classical_symbols_translate() {
    let b1 = build(1);
    let d1 = SymbolDictionary::new(&b1.ctx, &b1.catalog);
    assert_eq!(d1.lookup("wp2").unwrap(), poly("x2"));
    assert_eq!(d1.lookup("wp4").unwrap(), poly("x4"));
    let b2 = build(2);
    let c2 = b2.catalog.with_params_zero();
    let d2 = SymbolDictionary::new(&b2.ctx, &c2);
    assert_eq!(d2.lookup("wp1_3").unwrap(), poly("y4"));
    assert_eq!(d2.lookup("wp0_3_3").unwrap(), b2.ctx.jm.w_expr(3, 3));
    // the row of [L3, L2] in classical form: (wp1_3 - l4, 0, -3)
    assert_eq!(d2.translate(&poly("wp1_3 - l4")).unwrap(), b2.ctx.parse_resolved("y4 - l4"));
}
