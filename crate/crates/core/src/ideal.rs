//! The squares ideal, quotients and the induced module on an ideal.

use num_traits::Zero;

use crate::error::AlgebraError;
use crate::linalg::{Matrix, Subspace, Vector};
use crate::module::ModuleAction;
use crate::tensor::StructureTensor;

fn brackets_with_basis(t: &StructureTensor, s: &Subspace) -> Vec<Vector> {
    let n = t.dim();
    let mut out = Vec::new();
    for u in &s.reduced_basis {
        let us = u.to_sparse();
        for j in 0..n {
            out.push(Vector::from_sparse(n, &t.bracket_basis_right(&us, j)));
            out.push(Vector::from_sparse(n, &t.bracket_basis_left(j, &us)));
        }
    }
    out
}

/// Smallest two-sided ideal containing every square `[v, v]`.
pub fn squares_ideal(t: &StructureTensor) -> Subspace {
    let n = t.dim();
    let mut gens = Vec::new();
    for i in 0..n {
        for j in i..n {
            let mut s = t.get(i, j).cloned().unwrap_or_default();
            if i != j {
                if let Some(b) = t.get(j, i) {
                    crate::linalg::sparse_axpy(&mut s, &crate::scalar::one(), b);
                }
            }
            if !s.is_empty() {
                gens.push(Vector::from_sparse(n, &s));
            }
        }
    }
    let mut ideal = Subspace::span(n, gens);
    loop {
        let grown = ideal.sum(&Subspace::span(n, brackets_with_basis(t, &ideal)));
        if grown.dim() == ideal.dim() {
            return ideal;
        }
        ideal = grown;
    }
}

pub fn is_ideal(t: &StructureTensor, s: &Subspace) -> bool {
    brackets_with_basis(t, s).iter().all(|v| s.contains(v))
}

/// `L / I` on the complement spanned by the non-pivot unit vectors of `I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    pub tensor: StructureTensor,
    /// Old basis indices whose images form the quotient basis.
    pub complement: Vec<usize>,
    /// Coordinate projection, `quotient_dim x dim`.
    pub projection: Matrix,
}

pub fn quotient(t: &StructureTensor, ideal: &Subspace) -> Result<Quotient, AlgebraError> {
    let n = t.dim();
    if ideal.ambient_dim != n {
        return Err(AlgebraError::DimensionMismatch { expected: n, got: ideal.ambient_dim });
    }
    if !is_ideal(t, ideal) {
        return Err(AlgebraError::NotAnIdeal);
    }
    let complement: Vec<usize> = (0..n).filter(|c| !ideal.pivots.contains(c)).collect();
    let m = complement.len();
    let mut projection = Matrix::zeros(m, n);
    for c in 0..n {
        let r = ideal.reduce(&Vector::unit(n, c));
        for (a, &k) in complement.iter().enumerate() {
            projection.data[a][c] = r.coords[k].clone();
        }
    }
    let labels = complement.iter().map(|&c| t.labels()[c].clone()).collect();
    let mut q = StructureTensor::new(labels);
    for (a, &i) in complement.iter().enumerate() {
        for (b, &j) in complement.iter().enumerate() {
            if let Some(v) = t.get(i, j) {
                let image = projection.apply(&Vector::from_sparse(n, v));
                for (k, c) in image.coords.into_iter().enumerate() {
                    if !c.is_zero() {
                        q.add(a, b, k, c);
                    }
                }
            }
        }
    }
    Ok(Quotient { tensor: q, complement, projection })
}

/// Action of `L / I` on `I` by `(i, x + I) -> [i, x]`, in the reduced basis of `I`
/// and the quotient basis of [`quotient`].
pub fn induced_module_action(t: &StructureTensor, ideal: &Subspace) -> Result<ModuleAction, AlgebraError> {
    let q = quotient(t, ideal)?;
    let n = t.dim();
    for u in &ideal.reduced_basis {
        let us = u.to_sparse();
        if (0..n).any(|j| !t.bracket_basis_left(j, &us).is_empty()) {
            return Err(AlgebraError::NotRightAnnihilated);
        }
    }
    let mut action = ModuleAction::new(ideal.dim(), q.complement.len());
    for (a, u) in ideal.reduced_basis.iter().enumerate() {
        let us = u.to_sparse();
        for (x, &c) in q.complement.iter().enumerate() {
            let image = Vector::from_sparse(n, &t.bracket_basis_right(&us, c));
            let coords = ideal.coordinates(&image).expect("ideal is closed");
            for (k, v) in coords.into_iter().enumerate() {
                if !v.is_zero() {
                    action.add(a, x, k, v);
                }
            }
        }
    }
    Ok(action)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::is_lie;
    use crate::scalar::int;

    /// Basis (a, e, f): [a,a] = e, [e,a] = f.
    fn small() -> StructureTensor {
        let mut t = StructureTensor::new(vec!["a".into(), "e".into(), "f".into()]);
        t.add(0, 0, 1, int(1));
        t.add(1, 0, 2, int(1));
        t
    }

    #[test]
    fn closure_picks_up_brackets() {
        let i = squares_ideal(&small());
        assert_eq!(i.dim(), 2);
        assert!(i.contains(&Vector::unit(3, 1)));
        assert!(i.contains(&Vector::unit(3, 2)));
        let q = quotient(&small(), &i).unwrap();
        assert_eq!(q.tensor.dim(), 1);
        assert!(is_lie(&q.tensor));
    }

    #[test]
    fn lie_tensor_has_zero_squares() {
        let mut t = StructureTensor::zero(3);
        t.add(0, 1, 2, int(1));
        t.add(1, 0, 2, int(-1));
        assert_eq!(squares_ideal(&t).dim(), 0);
        let q = quotient(&t, &Subspace::zero(3)).unwrap();
        assert_eq!(q.tensor, t);
        let m = induced_module_action(&t, &Subspace::zero(3)).unwrap();
        assert_eq!(m.module_dim(), 0);
    }

    #[test]
    fn non_ideal_rejected() {
        let t = small();
        let s = Subspace::span(3, vec![Vector::unit(3, 1)]);
        assert_eq!(quotient(&t, &s), Err(AlgebraError::NotAnIdeal));
    }

    #[test]
    fn left_action_rejected() {
        let mut t = small();
        t.add(0, 1, 2, int(1));
        let i = squares_ideal(&t);
        assert_eq!(induced_module_action(&t, &i), Err(AlgebraError::NotRightAnnihilated));
    }
}
