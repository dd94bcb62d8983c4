//! Leibniz identity residuals and the Lie predicate.

use rayon::prelude::*;

use crate::linalg::{sparse_axpy, SparseVec, Vector};
use crate::scalar::Scalar;
use crate::tensor::StructureTensor;

/// A nonzero residual at a basis triple (0-based indices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residual {
    pub triple: (usize, usize, usize),
    pub value: Vector,
}

/// `[[b_i,b_j],b_k] - [[b_i,b_k],b_j] - [b_i,[b_j,b_k]]` as a sparse vector.
pub fn residual_at(t: &StructureTensor, i: usize, j: usize, k: usize) -> SparseVec {
    let one = Scalar::from_integer(1.into());
    let neg = -one.clone();
    let mut out = SparseVec::new();
    if let Some(ij) = t.get(i, j) {
        sparse_axpy(&mut out, &one, &t.bracket_basis_right(ij, k));
    }
    if let Some(ik) = t.get(i, k) {
        sparse_axpy(&mut out, &neg, &t.bracket_basis_right(ik, j));
    }
    if let Some(jk) = t.get(j, k) {
        sparse_axpy(&mut out, &neg, &t.bracket_basis_left(i, jk));
    }
    out
}

/// All nonzero residuals over the full `dim^3` triple scan, sorted by triple.
///
/// The scan is split over the first index with rayon; the indexed collect keeps
/// the serial order, so parallel and serial runs return identical lists.
pub fn leibniz_residuals(t: &StructureTensor) -> Vec<Residual> {
    let n = t.dim();
    (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let mut local = Vec::new();
            for j in 0..n {
                for k in 0..n {
                    let r = residual_at(t, i, j, k);
                    if !r.is_empty() {
                        local.push(Residual { triple: (i, j, k), value: Vector::from_sparse(n, &r) });
                    }
                }
            }
            local
        })
        .collect()
}

/// Serial reference scan, kept to pin the parallel output.
pub fn leibniz_residuals_serial(t: &StructureTensor) -> Vec<Residual> {
    let n = t.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let r = residual_at(t, i, j, k);
                if !r.is_empty() {
                    out.push(Residual { triple: (i, j, k), value: Vector::from_sparse(n, &r) });
                }
            }
        }
    }
    out
}

pub fn is_leibniz(t: &StructureTensor) -> bool {
    leibniz_residuals(t).is_empty()
}

pub fn is_lie(t: &StructureTensor) -> bool {
    t.is_antisymmetric() && is_leibniz(t)
}
