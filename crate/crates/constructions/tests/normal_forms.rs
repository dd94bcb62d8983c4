use leibniz_constructions::{
    direct_sum, make_heisenberg_h1, make_n_n1, make_q2n, match_filiform_normal_form, minimal_faithful_action,
    FiliformNormalForm,
};
use leibniz_core::scalar::{frac, int};
use leibniz_core::{apply_basis_change, is_leibniz, is_lie, series_dims, BasisChange, Matrix, StructureTensor};
use proptest::prelude::*;

fn lower_unitriangular(n: usize) -> impl Strategy<Value = BasisChange> {
    proptest::collection::vec((-3i64..4, 1i64..3), n * n).prop_map(move |v| {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { int(1) } else if i > j { frac(v[i * n + j].0, v[i * n + j].1) } else { int(0) }).collect())
            .collect();
        BasisChange::new(Matrix::from_rows(rows)).unwrap()
    })
}

fn scaled(n: usize) -> impl Strategy<Value = BasisChange> {
    (lower_unitriangular(n), proptest::collection::vec(1i64..4, n)).prop_map(move |(l, d)| {
        let diag = Matrix::from_rows((0..n).map(|i| (0..n).map(|j| if i == j { int(d[i]) } else { int(0) }).collect()).collect());
        l.then(&BasisChange::new(diag).unwrap())
    })
}

fn check_recovered(t: &StructureTensor, want: FiliformNormalForm) -> Result<(), TestCaseError> {
    let (form, p) = match_filiform_normal_form(t).unwrap().expect("naturally graded");
    prop_assert_eq!(form, want);
    prop_assert!(apply_basis_change(t, &p).unwrap().entries().eq(want.tensor().entries()));
    Ok(())
}

#[test]
fn heisenberg_and_sums() {
    let h = make_heisenberg_h1();
    assert!(is_lie(&h));
    assert_eq!(series_dims(&h), vec![3, 1, 0]);
    let s = direct_sum(&[make_n_n1(4).unwrap(), make_n_n1(3).unwrap(), h]).unwrap();
    assert_eq!(s.dim(), 10);
    assert!(is_lie(&s));
    assert_eq!(s.labels()[7], "1_3");
}

#[test]
fn minimal_action_is_a_faithful_module() {
    for n in 3..=8 {
        let rep = minimal_faithful_action(n).unwrap();
        assert!(rep.is_representation(&make_n_n1(n).unwrap()));
        assert!(rep.is_faithful());
        assert_eq!(rep.module_dim(), n);
    }
}

#[test]
fn too_small_dimensions_are_rejected() {
    assert!(make_n_n1(2).is_err());
    assert!(make_q2n(2).is_err());
    assert!(direct_sum(&[]).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn scrambled_models_are_recognized(n in 3usize..8, p in scaled(7)) {
        let size = n;
        let sub = BasisChange::new(Matrix::from_rows(p.matrix().data[..size].iter().map(|r| r[..size].to_vec()).collect())).unwrap();
        let t = apply_basis_change(&make_n_n1(n).unwrap(), &sub).unwrap();
        prop_assert!(is_leibniz(&t));
        check_recovered(&t, FiliformNormalForm::Model(n))?;
    }

    #[test]
    fn scrambled_pairings_are_recognized(m in 3usize..5, p in scaled(8)) {
        let size = 2 * m;
        let sub = BasisChange::new(Matrix::from_rows(p.matrix().data[..size].iter().map(|r| r[..size].to_vec()).collect())).unwrap();
        let t = apply_basis_change(&make_q2n(m).unwrap(), &sub).unwrap();
        check_recovered(&t, FiliformNormalForm::Pairing(m))?;
    }
}
