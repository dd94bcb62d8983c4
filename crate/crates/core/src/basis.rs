//! Basis changes of structure tensors.

use crate::error::AlgebraError;
use crate::linalg::{Matrix, Vector};
use crate::tensor::StructureTensor;

/// Invertible matrix whose column `j` holds the coordinates of the new basis vector
/// `b'_j` in the old basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisChange {
    matrix: Matrix,
    inverse: Matrix,
}

impl BasisChange {
    pub fn new(matrix: Matrix) -> Result<Self, AlgebraError> {
        let inverse = matrix.inverse()?;
        Ok(BasisChange { matrix, inverse })
    }

    pub fn from_columns(cols: &[Vector]) -> Result<Self, AlgebraError> {
        Self::new(Matrix::from_columns(cols))
    }

    pub fn identity(dim: usize) -> Self {
        BasisChange { matrix: Matrix::identity(dim), inverse: Matrix::identity(dim) }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn inverse(&self) -> BasisChange {
        BasisChange { matrix: self.inverse.clone(), inverse: self.matrix.clone() }
    }

    /// `self` followed by `next` (whose columns are written in the intermediate basis).
    pub fn then(&self, next: &BasisChange) -> BasisChange {
        BasisChange { matrix: self.matrix.mul(&next.matrix), inverse: next.inverse.mul(&self.inverse) }
    }

    /// Old coordinates to new coordinates.
    pub fn to_new(&self, v: &Vector) -> Vector {
        self.inverse.apply(v)
    }
}

/// The same algebra written in the basis given by the columns of `p`.
pub fn apply_basis_change(t: &StructureTensor, p: &BasisChange) -> Result<StructureTensor, AlgebraError> {
    let n = t.dim();
    if p.dim() != n {
        return Err(AlgebraError::DimensionMismatch { expected: n, got: p.dim() });
    }
    let cols: Vec<_> = (0..n).map(|j| p.matrix.column(j).to_sparse()).collect();
    let mut out = StructureTensor::new(t.labels().to_vec());
    for i in 0..n {
        for j in 0..n {
            let b = t.bracket_sparse(&cols[i], &cols[j]);
            if b.is_empty() {
                continue;
            }
            let coords = p.to_new(&Vector::from_sparse(n, &b));
            out.set(i, j, coords.to_sparse());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use proptest::prelude::*;

    fn n41() -> StructureTensor {
        let mut t = StructureTensor::with_prefix(4, "x");
        for i in 1..3 {
            t.add(i, 0, i + 1, int(1));
            t.add(0, i, i + 1, int(-1));
        }
        t
    }

    #[test]
    fn identity_leaves_table() {
        assert_eq!(apply_basis_change(&n41(), &BasisChange::identity(4)).unwrap(), n41());
    }

    #[test]
    fn scaling_first_vector_doubles() {
        let mut m = Matrix::identity(4);
        m.data[0][0] = int(2);
        let t = apply_basis_change(&n41(), &BasisChange::new(m).unwrap()).unwrap();
        assert_eq!(t.get(1, 0).unwrap().get(&2), Some(&int(2)));
    }

    #[test]
    fn singular_rejected() {
        assert!(BasisChange::new(Matrix::zeros(2, 2)).is_err());
    }

    proptest! {
        #[test]
        fn change_then_inverse_is_identity(entries in proptest::collection::vec(-3i64..4, 16)) {
            let mut m = Matrix::identity(4);
            for (k, e) in entries.iter().enumerate() {
                m.data[k / 4][k % 4] += int(*e);
            }
            prop_assume!(m.rank() == 4);
            let p = BasisChange::new(m).unwrap();
            let there = apply_basis_change(&n41(), &p).unwrap();
            let back = apply_basis_change(&there, &p.inverse()).unwrap();
            prop_assert_eq!(back, n41());
        }
    }
}
