//! Values derived here independently of the code paths that produce them.

mod common;

use common::cofactor_det;
use hyperderiv::derivation::verify_pushforward;
use hyperderiv::dubrovin::{generate_relations, verify_relations_vanish, JacobiMap, XRing};
use hyperderiv::exactpoly::{poly, sylvester};
use hyperderiv::genus_fields::{build_genus, field_matrix};
use hyperderiv::lambda_space::{constant_ratio, expected_det_constant, expected_multipliers, CurveModel};
use hyperderiv::{Poly, PolyMatrix, Rational, Var};

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

#[test]
fn genus_two_resultant_matches_cofactor_expansion() {
    let model = CurveModel::new(2).unwrap();
    let f = model.f();
    let x = CurveModel::x_var();
    let s = sylvester(&f, &f.partial(x), x).unwrap();
    assert_eq!((s.rows(), s.cols()), (9, 9));
    let oracle = cofactor_det(&s);
    assert_eq!(model.discriminant(), oracle);
    assert_eq!(s.determinant().unwrap(), oracle);
    assert!(oracle.is_homogeneous_of(40));
}

#[test]
fn parameter_space_determinants_match_cofactor_expansion() {
    for g in 1..=3 {
        let t = CurveModel::new(g).unwrap().t_matrix();
        assert_eq!(t.determinant().unwrap(), cofactor_det(&t), "genus {g}");
    }
}

#[test]
fn genus_two_constants_are_frozen() {
    // not printed; computed once and frozen
    let model = CurveModel::new(2).unwrap();
    let det = model.t_matrix().determinant().unwrap();
    assert_eq!(constant_ratio(&det, &model.discriminant()), Some(q(16, 5)));
    assert_eq!(expected_det_constant(2), Some(q(16, 5)));
    let expected = expected_multipliers(2).unwrap();
    for (field, m) in model.fields().iter().zip(&expected) {
        assert_eq!(field.apply(&det), &det * m, "{}", field.name);
    }
}

#[test]
fn genus_one_pushforward_by_hand() {
    // 6 l6 o p = 6 (2 x2^3 + x3^2/4 - x2 x4 / 2)
    let b = build_genus(1).unwrap();
    let l2 = b.catalog.get("L2").unwrap();
    let l4 = b.ctx.map.get(Var::named("l4").unwrap()).unwrap();
    let hand = poly("12*x2^3 + 3/2*x3^2 - 3*x2*x4");
    assert_eq!(l2.apply(l4), hand);
    let down = CurveModel::new(1).unwrap().field(2).unwrap();
    assert!(verify_pushforward("g1", "", l2, &b.ctx.map, &down).holds());
}

#[test]
fn relations_vanish_by_substitution() {
    for g in 1..=3 {
        let ring = XRing::new(g);
        let rels = generate_relations(&ring);
        let jm = JacobiMap::for_genus(g).unwrap();
        let all: std::collections::HashMap<Var, Poly> = jm.assignment();
        for r in &rels {
            assert!(r.poly.substitute(&all).is_zero(), "g{g} {}", r.label);
        }
        assert!(verify_relations_vanish("v", &rels, &jm).holds());
    }
}

/// The lifted determinant identity evaluated at rational points, with no
/// symbolic expansion: det of the numeric field matrix against `c det T`
/// at the image point.
#[test]
fn lifted_determinant_at_random_points() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for (g, c) in [(1u32, 4i64), (2, -16), (3, -64)] {
        let b = build_genus(g).unwrap();
        let cat = b.catalog.with_params_zero();
        let rows: Vec<_> = cat.fields.iter().collect();
        let f = field_matrix(&b.ctx, &rows);
        let t = b.ctx.curve().t_matrix();
        for _ in 0..3 {
            let point: std::collections::HashMap<Var, Rational> = b
                .ctx
                .ring
                .x_vars()
                .into_iter()
                .map(|v| (v, Rational::from_integer(rng.random_range(-50i64..=50).into())))
                .collect();
            let fx = PolyMatrix::from_fn(f.rows(), f.cols(), |i, j| Poly::constant(f.get(i, j).evaluate(&point).unwrap()));
            let lam: std::collections::HashMap<Var, Rational> = b
                .ctx
                .map
                .components()
                .iter()
                .map(|(v, p)| (*v, p.evaluate(&point).unwrap()))
                .collect();
            let tx = PolyMatrix::from_fn(t.rows(), t.cols(), |i, j| Poly::constant(t.get(i, j).evaluate(&lam).unwrap()));
            let lhs = fx.determinant().unwrap();
            let rhs = tx.determinant().unwrap().scale(&Rational::from_integer(c.into()));
            assert_eq!(lhs, rhs, "genus {g}");
            assert!(!lhs.is_zero());
        }
    }
}
