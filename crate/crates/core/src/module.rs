//! Right modules `V x L -> V` given by sparse action tables.

use std::collections::BTreeMap;

use crate::linalg::{add_entry, sparse_axpy, Matrix, SparseVec, Vector};
use crate::scalar::Scalar;
use crate::tensor::StructureTensor;

/// `(e_i, x_j) = sum_k a_ij^k e_k`, 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleAction {
    module_dim: usize,
    algebra_dim: usize,
    entries: BTreeMap<(usize, usize), SparseVec>,
}

impl ModuleAction {
    pub fn new(module_dim: usize, algebra_dim: usize) -> Self {
        ModuleAction { module_dim, algebra_dim, entries: BTreeMap::new() }
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn add(&mut self, e: usize, x: usize, k: usize, c: Scalar) {
        assert!(e < self.module_dim && k < self.module_dim && x < self.algebra_dim, "index out of range");
        let slot = self.entries.entry((e, x)).or_default();
        add_entry(slot, k, c);
        if slot.is_empty() {
            self.entries.remove(&(e, x));
        }
    }

    pub fn get(&self, e: usize, x: usize) -> Option<&SparseVec> {
        self.entries.get(&(e, x))
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &SparseVec)> {
        self.entries.iter()
    }

    /// `(v, u)` extended bilinearly.
    pub fn act(&self, v: &SparseVec, u: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (e, a) in v {
            for (x, b) in u {
                if let Some(r) = self.entries.get(&(*e, *x)) {
                    sparse_axpy(&mut out, &(a * b), r);
                }
            }
        }
        out
    }

    /// Matrix of `v -> (v, x_j)` acting on column vectors.
    pub fn matrix_of(&self, x: usize) -> Matrix {
        let mut m = Matrix::zeros(self.module_dim, self.module_dim);
        for e in 0..self.module_dim {
            if let Some(r) = self.entries.get(&(e, x)) {
                for (k, c) in r {
                    m.data[*k][e] = c.clone();
                }
            }
        }
        m
    }

    /// First failure of `(e, [x,y]) = ((e,x),y) - ((e,y),x)` as (e, x, y), 0-based.
    pub fn first_representation_failure(&self, algebra: &StructureTensor) -> Option<(usize, usize, usize)> {
        assert_eq!(algebra.dim(), self.algebra_dim);
        let unit = |i: usize| -> SparseVec { [(i, Scalar::from_integer(1.into()))].into_iter().collect() };
        for x in 0..self.algebra_dim {
            for y in 0..self.algebra_dim {
                let xy = algebra.get(x, y).cloned().unwrap_or_default();
                for e in 0..self.module_dim {
                    let ev = unit(e);
                    let lhs = self.act(&ev, &xy);
                    let mut rhs = self.act(&self.act(&ev, &unit(x)), &unit(y));
                    let minus = self.act(&self.act(&ev, &unit(y)), &unit(x));
                    sparse_axpy(&mut rhs, &Scalar::from_integer((-1).into()), &minus);
                    if lhs != rhs {
                        return Some((e, x, y));
                    }
                }
            }
        }
        None
    }

    pub fn is_representation(&self, algebra: &StructureTensor) -> bool {
        self.first_representation_failure(algebra).is_none()
    }

    /// The map `x -> matrix_of(x)` is injective.
    pub fn is_faithful(&self) -> bool {
        let n = self.module_dim;
        let flat: Vec<Vector> = (0..self.algebra_dim)
            .map(|x| Vector { coords: self.matrix_of(x).data.into_iter().flatten().collect() })
            .collect();
        crate::linalg::Subspace::rank_of(n * n, &flat) == self.algebra_dim
    }
}
