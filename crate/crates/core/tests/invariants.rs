use leibniz_core::scalar::{frac, int};
use leibniz_core::{
    apply_basis_change, is_leibniz, is_lie, is_nilpotent, leibniz_residuals, quotient, series_dims, squares_ideal,
    tensor_from_json, tensor_to_json, BasisChange, Matrix, StructureTensor, Vector,
};
use proptest::prelude::*;

/// Two-dimensional non-Lie example: `[e2, e2] = e1`.
fn cyclic_square() -> StructureTensor {
    let mut t = StructureTensor::with_prefix(2, "e");
    t.add(1, 1, 0, int(1));
    t
}

/// Three-dimensional Heisenberg algebra `[x, y] = -[y, x] = z`.
fn heisenberg() -> StructureTensor {
    let mut t = StructureTensor::with_prefix(3, "x");
    t.add(0, 1, 2, int(1));
    t.add(1, 0, 2, int(-1));
    t
}

/// Five-dimensional Leibniz algebra, not Lie: the Heisenberg algebra acting on a
/// two-dimensional right module through its centre-free quotient.
fn extended() -> StructureTensor {
    let mut t = StructureTensor::with_prefix(5, "x");
    t.add(0, 1, 2, int(1));
    t.add(1, 0, 2, int(-1));
    t.add(3, 0, 4, int(1));
    t.add(0, 0, 4, int(1));
    t
}

#[test]
fn small_examples() {
    let c = cyclic_square();
    assert!(is_leibniz(&c));
    assert!(!is_lie(&c));
    let i = squares_ideal(&c);
    assert_eq!(i.dim(), 1);
    assert_eq!(quotient(&c, &i).unwrap().tensor.dim(), 1);

    let h = heisenberg();
    assert!(is_lie(&h));
    assert_eq!(series_dims(&h), vec![3, 1, 0]);
    assert!(is_nilpotent(&h));

    let e = extended();
    assert!(is_leibniz(&e), "{:?}", leibniz_residuals(&e).first());
    assert!(!is_lie(&e));
}

#[test]
fn idempotent_bracket_is_not_leibniz() {
    // [[e,e],e] = e while [[e,e],e] + [e,[e,e]] = 2e
    let mut t = StructureTensor::with_prefix(1, "e");
    t.add(0, 0, 0, int(1));
    let r = leibniz_residuals(&t);
    assert_eq!(r.len(), 1);
    assert_eq!(r[0].triple, (0, 0, 0));
}

fn invertible(n: usize) -> impl Strategy<Value = BasisChange> {
    proptest::collection::vec((-2i64..3, 1i64..3), n * n).prop_filter_map("singular", move |v| {
        let rows = v.chunks(n).map(|r| r.iter().map(|&(a, b)| frac(a, b)).collect()).collect();
        BasisChange::new(Matrix::from_rows(rows)).ok()
    })
}

fn random_tensor(n: usize) -> impl Strategy<Value = StructureTensor> {
    proptest::collection::vec((0..n, 0..n, 0..n, -4i64..5, 1i64..4), 0..12).prop_map(move |entries| {
        let mut t = StructureTensor::with_prefix(n, "v");
        for (i, j, k, a, b) in entries {
            t.add(i, j, k, frac(a, b));
        }
        t
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn basis_changes_preserve_the_identity_and_the_series(p in invertible(5)) {
        let e = extended();
        let moved = apply_basis_change(&e, &p).unwrap();
        prop_assert!(is_leibniz(&moved));
        prop_assert!(!is_lie(&moved));
        prop_assert_eq!(series_dims(&moved), series_dims(&e));
        prop_assert_eq!(squares_ideal(&moved).dim(), squares_ideal(&e).dim());
        prop_assert_eq!(apply_basis_change(&moved, &p.inverse()).unwrap(), e);
    }

    #[test]
    fn leibniz_failure_survives_basis_change(t in random_tensor(3), p in invertible(3)) {
        let moved = apply_basis_change(&t, &p).unwrap();
        prop_assert_eq!(is_leibniz(&moved), is_leibniz(&t));
        prop_assert_eq!(is_lie(&moved), is_lie(&t));
    }

    #[test]
    fn json_emit_parse_emit_is_stable(t in random_tensor(4), pretty in any::<bool>()) {
        let once = tensor_to_json(&t, pretty);
        let back = tensor_from_json(&once).unwrap();
        prop_assert_eq!(&back, &t);
        prop_assert_eq!(tensor_to_json(&back, pretty), once);
    }

    #[test]
    fn bracket_is_bilinear(t in random_tensor(3), a in proptest::collection::vec(-3i64..4, 3), b in proptest::collection::vec(-3i64..4, 3), c in -3i64..4) {
        let u = Vector { coords: a.iter().map(|&x| int(x)).collect() };
        let v = Vector { coords: b.iter().map(|&x| int(x)).collect() };
        let lhs = t.bracket(&u.scaled(&int(c)).add(&v), &v).unwrap();
        let rhs = t.bracket(&u, &v).unwrap().scaled(&int(c)).add(&t.bracket(&v, &v).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}
