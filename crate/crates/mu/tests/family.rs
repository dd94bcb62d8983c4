use leibniz_constructions::{make_n_n1, minimal_faithful_action};
use leibniz_core::scalar::{frac, int, zero};
use leibniz_core::{induced_module_action, is_leibniz, is_lie, quotient, squares_ideal, Scalar, Subspace, Vector};
use leibniz_mu::*;
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..7, 1i64..5).prop_map(|(n, d)| frac(n, d))
}

fn nonzero() -> impl Strategy<Value = Scalar> {
    (1i64..7, 1i64..5, any::<bool>()).prop_map(|(n, d, neg)| frac(if neg { -n } else { n }, d))
}

fn params() -> impl Strategy<Value = MuParams> {
    proptest::array::uniform8(scalar()).prop_map(MuParams)
}

fn transform() -> impl Strategy<Value = MuTransform> {
    (nonzero(), nonzero(), scalar(), scalar(), nonzero())
        .prop_map(|(a, m, m3, m4, t)| MuTransform::new(a, m, m3, m4, t).unwrap())
}

#[test]
fn q_recursion_and_product_form() {
    for m in 1..=12 {
        for k in 2..=12 {
            assert_eq!(q_coeff(m, k).unwrap(), q_coeff(m, k - 1).unwrap() + q_coeff(m - 1, k).unwrap(), "Q({m},{k})");
        }
    }
}

#[test]
fn n4_general_assembly_is_the_mu_table() {
    // alpha5 and gamma_{2,3} are forced at n = 4 by the restrictions
    let p = MuParams([int(2), frac(1, 3), int(-1), int(4), int(5), frac(-2, 7), int(3), frac(3, 2)]);
    let mut g = GeneralParams::zero(4);
    g.alpha = [p.0[0].clone(), p.0[1].clone(), p.0[2].clone(), p.0[3].clone(), frac(-3, 2) * &p.0[7]];
    g.beta = vec![p.0[4].clone(), p.0[5].clone()];
    g.gamma.insert((2, 1), p.0[6].clone());
    g.gamma.insert((2, 2), p.0[7].clone());
    g.gamma.insert((2, 3), int(-2) * &p.0[2]);
    assert!(constraint_residuals(&g).iter().all(|r| *r == zero()));
    let t = general_table_unchecked(&g).unwrap();
    assert_eq!(t.entries().collect::<Vec<_>>(), mu4_table(&p).entries().collect::<Vec<_>>());
}

#[test]
fn zero_parameters_squares_ideal() {
    let t = mu4_table(&MuParams::zero());
    let i = squares_ideal(&t);
    assert!(i.same_space(&Subspace::span(8, (4..7).map(|k| Vector::unit(8, k)).collect())));
}

#[test]
fn representatives_are_leibniz_and_pairwise_distinct() {
    let fams = representative_families();
    let samples = [int(2), int(3), int(5)];
    let mut all = Vec::new();
    for (fi, f) in fams.iter().enumerate() {
        let free = f.free_slots().len();
        let reps: Vec<MuParams> =
            if free == 0 { vec![f.instantiate(&[])] } else { samples.iter().map(|v| f.instantiate(&vec![v.clone(); free])).collect() };
        for r in reps {
            assert!(is_leibniz(&mu4_table(&r)), "{}", f.label());
            assert_eq!(mu4_normalize(&r), Normalized::Exact { family: fi, representative: r.clone(), witness: MuTransform::identity() });
            all.push((fi, r));
        }
    }
    let mut over_extension = Vec::new();
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            let ((fa, a), (fb, b)) = (&all[i], &all[j]);
            match mu4_iso_verdict(a, b) {
                IsoVerdict::NotIsomorphic => {}
                IsoVerdict::NeedsRoot => over_extension.push((*fa, *fb)),
                IsoVerdict::Isomorphic(g) => panic!("{a} and {b} are isomorphic via {g:?}"),
            }
            if fa != fb {
                assert_ne!(signature(a), signature(b));
            }
        }
    }
    // only the family whose alpha1 is defined up to squares collapses over an extension
    let redundant = fams.iter().position(|f| f.label() == "mu(a1,1,0,0,0,0,0,1)").unwrap();
    assert!(!over_extension.is_empty());
    assert!(over_extension.iter().all(|&(a, b)| a == redundant && b == redundant), "{over_extension:?}");
}

#[test]
fn redundant_modulus_rescales_by_squares() {
    let a = MuParams([int(3), int(1), zero(), zero(), zero(), zero(), zero(), int(1)]);
    let b = MuParams([int(12), int(1), zero(), zero(), zero(), zero(), zero(), int(1)]);
    let g = mu4_is_isomorphic(&a, &b).unwrap();
    assert_eq!(mu4_transform_action(&a, &g), b);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tables_are_leibniz(p in params()) {
        prop_assert!(is_leibniz(&mu4_table(&p)));
    }

    #[test]
    fn quotient_and_module(p in params()) {
        prop_assume!(p.alpha2() != &zero() || p.alpha3() != &zero());
        let t = mu4_table(&p);
        let i = squares_ideal(&t);
        prop_assert!(i.same_space(&Subspace::span(8, (4..8).map(|k| Vector::unit(8, k)).collect())));
        let q = quotient(&t, &i).unwrap();
        prop_assert!(is_lie(&q.tensor));
        let model = make_n_n1(4).unwrap();
        prop_assert_eq!(q.tensor.entries().collect::<Vec<_>>(), model.entries().collect::<Vec<_>>());
        let m = induced_module_action(&t, &i).unwrap();
        let want = minimal_faithful_action(4).unwrap();
        prop_assert_eq!(m.entries().collect::<Vec<_>>(), want.entries().collect::<Vec<_>>());
    }

    #[test]
    fn action_composes(p in params(), g in transform(), h in transform()) {
        let step = mu4_transform_action(&mu4_transform_action(&p, &g), &h);
        prop_assert_eq!(step, mu4_transform_action(&p, &g.then(&h)));
        prop_assert_eq!(mu4_transform_action(&mu4_transform_action(&p, &g), &g.inverse()), p);
        prop_assert_eq!(g.then(&g.inverse()), MuTransform::identity());
    }

    #[test]
    fn zero_patterns_are_invariant(p in params(), g in transform()) {
        let q = mu4_transform_action(&p, &g);
        for i in [0usize, 1, 2, 3, 5, 7] {
            prop_assert_eq!(p.0[i] == zero(), q.0[i] == zero());
        }
        prop_assert_eq!(signature(&p), signature(&q));
    }

    #[test]
    fn full_basis_change_matches_action(p in params(), g in transform()) {
        let b = full_basis_change(&p, &g, &MuExtras::default()).unwrap();
        let moved = leibniz_core::apply_basis_change(&mu4_table(&p), &b).unwrap();
        prop_assert_eq!(moved, mu4_table(&mu4_transform_action(&p, &g)));
    }

    #[test]
    fn orbit_points_are_recognized(p in params(), g in transform()) {
        let q = mu4_transform_action(&p, &g);
        let w = mu4_is_isomorphic(&p, &q).expect("same orbit");
        prop_assert_eq!(mu4_transform_action(&p, &w), q.clone());
        prop_assert_eq!(mu4_normalize(&p).family(), mu4_normalize(&q).family());
    }

    #[test]
    fn normalize_is_idempotent(p in params()) {
        if let Normalized::Exact { family, representative, .. } = mu4_normalize(&p) {
            match mu4_normalize(&representative) {
                Normalized::Exact { family: f2, representative: r2, witness } => {
                    prop_assert_eq!(f2, family);
                    prop_assert_eq!(r2, representative);
                    prop_assert_eq!(witness, MuTransform::identity());
                }
                other => prop_assert!(false, "{:?}", other),
            }
        }
    }
}

#[test]
fn root_requiring_families() {
    let fams = representative_families();
    let needing: Vec<String> = fams.iter().filter(|f| f.root_index() > 1).map(|f| format!("{} [{}]", f.label(), f.root_index())).collect();
    println!("{needing:#?}");
    assert_eq!(needing.len(), 19);
    assert!(needing.contains(&"mu(0,1,1,0,1,b2,0,0) [3]".to_string()));
}
