mod common;

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use common::cofactor_det;
use hyperderiv::derivation::{ladder_complete, ladder_from_partner, Derivation};
use hyperderiv::dubrovin::{eliminate, generate_relations, JacobiMap, XRing};
use hyperderiv::genus_fields::{build_genus, build_l1, build_odd, bracket_table, verify_table, GenusBuild};
use hyperderiv::lambda_space::monomials_of_weight;
use hyperderiv::suite::{pit_witness, PitConfig};
use hyperderiv::{parse, Homogeneity, Monomial, Poly, PolyMatrix, Rational, Var};
use proptest::prelude::*;

fn vars() -> Vec<Var> {
    ["x2", "x3", "x4", "x5"].iter().map(|n| Var::named(n).unwrap()).collect()
}

fn coeff() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..=2, 4).prop_map(|es| Monomial::from_factors(vars().into_iter().zip(es)))
}

fn arb_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((monomial(), coeff()), 0..5).prop_map(Poly::from_terms)
}

/// A homogeneous polynomial of weight `w` in `x2..x5`.
fn homogeneous(w: i64) -> impl Strategy<Value = Poly> {
    let monos = monomials_of_weight(&vars(), w);
    let n = monos.len();
    prop::collection::vec(coeff(), n).prop_map(move |cs| Poly::from_terms(monos.clone().into_iter().zip(cs)))
}

fn arb_derivation(name: &'static str) -> impl Strategy<Value = Derivation> {
    prop::collection::vec(arb_poly(), 4).prop_map(move |ps| Derivation::new(name, 0, vars().into_iter().zip(ps)))
}

fn genus3() -> &'static GenusBuild {
    static B: OnceLock<GenusBuild> = OnceLock::new();
    B.get_or_init(|| build_genus(3).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Poly::one(), a.clone());
    }

    #[test]
    fn display_parse_roundtrip(a in arb_poly()) {
        prop_assert_eq!(parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn weights_add_under_products(a in homogeneous(5), b in homogeneous(6)) {
        let p = &a * &b;
        if a.is_zero() || b.is_zero() {
            prop_assert_eq!(p.weight_check(), Homogeneity::Zero);
        } else {
            prop_assert_eq!(p.weight_check(), Homogeneity::Homogeneous(11));
        }
        for v in vars() {
            prop_assert!(a.partial(v).is_homogeneous_of(5u32.saturating_sub(v.weight())));
        }
    }

    #[test]
    fn bareiss_matches_cofactor(n in 1usize..=4, entries in prop::collection::vec(arb_poly(), 16)) {
        let m = PolyMatrix::from_fn(n, n, |i, j| entries[i * 4 + j].clone());
        prop_assert_eq!(m.determinant().unwrap(), cofactor_det(&m));
    }

    #[test]
    fn substitution_composes(p in arb_poly(), a in arb_poly(), b in arb_poly()) {
        let vs = vars();
        let first: HashMap<Var, Poly> = [(vs[0], a.clone())].into();
        let second: HashMap<Var, Poly> = [(vs[1], b.clone())].into();
        let composed: HashMap<Var, Poly> = [(vs[0], a.substitute(&second)), (vs[1], b)].into();
        prop_assert_eq!(p.substitute(&first).substitute(&second), p.substitute(&composed));
    }

    #[test]
    fn derivations_obey_leibniz(d in arb_derivation("D"), a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(d.apply(&(&a * &b)), &(&d.apply(&a) * &b) + &(&a * &d.apply(&b)));
    }

    #[test]
    fn brackets_are_antisymmetric(d in arb_derivation("D"), e in arb_derivation("E"), p in arb_poly()) {
        let de = d.bracket(&e);
        prop_assert!(de.plus(&e.bracket(&d)).is_zero());
        prop_assert_eq!(de.apply(&p), d.apply(&e.apply(&p)) - e.apply(&d.apply(&p)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn genus3_fields_satisfy_jacobi(i in 0usize..9, j in 0usize..9, k in 0usize..9) {
        let f = &genus3().catalog.fields;
        let (a, b, c) = (&f[i], &f[j], &f[k]);
        let sum = a.bracket(&b.bracket(c)).plus(&b.bracket(&c.bracket(a))).plus(&c.bracket(&a.bracket(b)));
        prop_assert!(sum.is_zero());
    }

    #[test]
    fn genus3_bracket_weights_add(i in 0usize..9, j in 0usize..9) {
        let f = &genus3().catalog.fields;
        let br = f[i].bracket(&f[j]);
        for v in genus3().ctx.ring.x_vars() {
            let w = v.weight() as i64 + f[i].weight + f[j].weight;
            prop_assert!(w >= 0 || br.on(v).is_zero());
            prop_assert!(br.on(v).is_homogeneous_of(w.max(0) as u32));
        }
    }

    #[test]
    fn ladder_keeps_seeds_and_ignores_base_order(
        s in prop::sample::select(vec![3i64, 5]),
        bases in Just(vec![1i64, 3, 5]).prop_shuffle(),
    ) {
        let b = genus3();
        let ring = &b.ctx.ring;
        let l1 = build_l1(ring);
        let target = build_odd(ring, &b.ctx.jm, &l1, s).unwrap();
        let bases: Vec<Var> = bases.iter().map(|&j| ring.x_var(1, j).unwrap()).collect();
        let seeds: BTreeMap<Var, Poly> = bases.iter().map(|v| (*v, target.on(*v))).collect();
        let ladder = ladder_from_partner(&l1, &bases);
        let rebuilt = ladder_complete("L", s, &seeds, &l1, &Derivation::zero("0", s + 1), &ladder, &ring.x_vars()).unwrap();
        for (v, p) in &seeds {
            prop_assert_eq!(&rebuilt.on(*v), p);
        }
        prop_assert!(rebuilt.minus(&target).is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn elimination_ignores_relation_order(
        (g, order) in (1u32..=3).prop_flat_map(|g| {
            let n = generate_relations(&XRing::new(g)).len();
            (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        }),
    ) {
        let ring = XRing::new(g);
        let all = generate_relations(&ring);
        let rels: Vec<_> = order.iter().map(|&i| all[i].clone()).collect();
        let jm = eliminate(&ring, &rels).unwrap();
        let reference = JacobiMap::for_genus(g).unwrap();
        prop_assert_eq!(jm.lambda, reference.lambda);
        prop_assert_eq!(jm.w, reference.w);
    }

    #[test]
    fn pit_agrees_with_exact_on_corrupted_claims(
        row in 0usize..40,
        noise in arb_poly(),
        seed in any::<u64>(),
    ) {
        let b = genus3();
        let table = bracket_table(b).unwrap();
        let e = &table[row % table.len()];
        let mut claim = verify_table("t", &b.catalog, std::slice::from_ref(e)).remove(0);
        let cfg = PitConfig::new(3, 1 << 20, seed).unwrap();
        prop_assert!(claim.witness().is_none());
        prop_assert!(pit_witness(&claim, &cfg).is_none());
        claim.residuals[0].1 = &claim.residuals[0].1 + &noise;
        prop_assert_eq!(claim.witness().is_some(), !noise.is_zero());
        prop_assert_eq!(pit_witness(&claim, &cfg).is_some(), !noise.is_zero());
    }
}
