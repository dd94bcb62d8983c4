//! Sparse structure-constant tensors.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::AlgebraError;
use crate::linalg::{add_entry, sparse_axpy, SparseVec, Vector};
use crate::scalar::Scalar;

/// Bracket table `[b_i, b_j] = sum_k c_ij^k b_k` on an ordered basis.
///
/// Indices are 0-based in memory and 1-based in JSON. Absent pairs bracket to zero
/// and no zero coefficient is ever stored, so derived `PartialEq` is table equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureTensor {
    dim: usize,
    labels: Vec<String>,
    entries: BTreeMap<(usize, usize), SparseVec>,
}

impl StructureTensor {
    pub fn new(labels: Vec<String>) -> Self {
        StructureTensor { dim: labels.len(), labels, entries: BTreeMap::new() }
    }

    /// Basis labelled `prefix1..prefixN`.
    pub fn with_prefix(dim: usize, prefix: &str) -> Self {
        Self::new((1..=dim).map(|i| format!("{prefix}{i}")).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.dim);
        self.labels = labels;
    }

    /// Adds `c` to the coefficient of `b_k` in `[b_i, b_j]` (0-based).
    pub fn add(&mut self, i: usize, j: usize, k: usize, c: Scalar) {
        assert!(i < self.dim && j < self.dim && k < self.dim, "index out of range");
        let e = self.entries.entry((i, j)).or_default();
        add_entry(e, k, c);
        if e.is_empty() {
            self.entries.remove(&(i, j));
        }
    }

    /// Replaces `[b_i, b_j]` wholesale.
    pub fn set(&mut self, i: usize, j: usize, v: SparseVec) {
        let v: SparseVec = v.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        if v.is_empty() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&SparseVec> {
        self.entries.get(&(i, j))
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &SparseVec)> {
        self.entries.iter()
    }

    pub fn nonzero_pairs(&self) -> usize {
        self.entries.len()
    }

    pub fn bracket_sparse(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, a) in u {
            for (j, b) in v {
                if let Some(e) = self.entries.get(&(*i, *j)) {
                    sparse_axpy(&mut out, &(a * b), e);
                }
            }
        }
        out
    }

    /// `[b_i, v]` for a basis vector on the left.
    pub fn bracket_basis_left(&self, i: usize, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (j, b) in v {
            if let Some(e) = self.entries.get(&(i, *j)) {
                sparse_axpy(&mut out, b, e);
            }
        }
        out
    }

    /// `[v, b_j]` for a basis vector on the right.
    pub fn bracket_basis_right(&self, v: &SparseVec, j: usize) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, a) in v {
            if let Some(e) = self.entries.get(&(*i, j)) {
                sparse_axpy(&mut out, a, e);
            }
        }
        out
    }

    pub fn bracket(&self, u: &Vector, v: &Vector) -> Result<Vector, AlgebraError> {
        for w in [u, v] {
            if w.dim() != self.dim {
                return Err(AlgebraError::DimensionMismatch { expected: self.dim, got: w.dim() });
            }
        }
        Ok(Vector::from_sparse(self.dim, &self.bracket_sparse(&u.to_sparse(), &v.to_sparse())))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.first_antisymmetry_failure().is_none()
    }

    /// First pair (i, j) with `[b_i,b_j] + [b_j,b_i] != 0`, 0-based.
    pub fn first_antisymmetry_failure(&self) -> Option<(usize, usize)> {
        for i in 0..self.dim {
            for j in i..self.dim {
                let mut s = self.get(i, j).cloned().unwrap_or_default();
                if let Some(t) = self.get(j, i) {
                    sparse_axpy(&mut s, &Scalar::from_integer(1.into()), t);
                }
                if !s.is_empty() {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn zero(dim: usize) -> Self {
        Self::with_prefix(dim, "b")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn stores_no_zeros() {
        let mut t = StructureTensor::zero(3);
        t.add(0, 1, 2, int(1));
        t.add(0, 1, 2, int(-1));
        assert_eq!(t.nonzero_pairs(), 0);
        assert_eq!(t, StructureTensor::zero(3));
    }

    #[test]
    fn bracket_bilinear() {
        let mut t = StructureTensor::zero(3);
        t.add(1, 0, 2, int(1));
        t.add(0, 1, 2, int(-1));
        let u = Vector { coords: vec![int(1), int(1), int(0)] };
        let x1 = Vector::unit(3, 0);
        assert_eq!(t.bracket(&u, &x1).unwrap(), Vector::unit(3, 2));
        assert!(t.bracket(&Vector::zeros(3), &u).unwrap().is_zero());
        assert!(t.bracket(&Vector::zeros(2), &u).is_err());
        assert!(t.is_antisymmetric());
        t.add(2, 2, 0, int(1));
        assert_eq!(t.first_antisymmetry_failure(), Some((2, 2)));
    }
}
