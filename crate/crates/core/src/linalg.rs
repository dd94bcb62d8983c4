//! Exact linear algebra: dense vectors, sparse echelon reduction, subspaces and matrices.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::AlgebraError;
use crate::scalar::Scalar;

/// Sparse vector keyed by 0-based coordinate. Never stores zeros.
pub type SparseVec = BTreeMap<usize, Scalar>;

pub fn sparse_axpy(acc: &mut SparseVec, c: &Scalar, v: &SparseVec) {
    for (k, x) in v {
        add_entry(acc, *k, c * x);
    }
}

pub fn add_entry(acc: &mut SparseVec, k: usize, x: Scalar) {
    if x.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match acc.entry(k) {
        Entry::Vacant(e) => {
            e.insert(x);
        }
        Entry::Occupied(mut e) => {
            let s = e.get() + x;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    pub coords: Vec<Scalar>,
}

impl Vector {
    pub fn zeros(dim: usize) -> Self {
        Vector { coords: vec![Scalar::zero(); dim] }
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.coords[i] = Scalar::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn to_sparse(&self) -> SparseVec {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect()
    }

    pub fn from_sparse(dim: usize, v: &SparseVec) -> Self {
        let mut out = Self::zeros(dim);
        for (k, c) in v {
            out.coords[*k] = c.clone();
        }
        out
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        Vector { coords: self.coords.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, other: &Vector) -> Self {
        Vector { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Vector) -> Self {
        Vector { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect() }
    }
}

/// Incremental row echelon form over sparse rows, first-nonzero pivoting.
///
/// Rows are normalized so the pivot entry is 1. `reduce` clears every pivot column
/// of its argument, so the remainder is zero exactly when the row lies in the span.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.keys().copied().collect()
    }

    pub fn reduce(&self, row: &SparseVec) -> SparseVec {
        let mut r = row.clone();
        let mut cursor = 0usize;
        loop {
            let next = r.range(cursor..).find(|(k, _)| self.rows.contains_key(k)).map(|(k, c)| (*k, c.clone()));
            let Some((p, c)) = next else { break };
            sparse_axpy(&mut r, &-c, &self.rows[&p]);
            cursor = p + 1;
        }
        r
    }

    /// Inserts a row; returns its pivot if it was independent.
    pub fn insert(&mut self, row: &SparseVec) -> Option<usize> {
        let r = self.reduce(row);
        let (&p, lead) = r.iter().next()?;
        let inv = lead.recip();
        let r: SparseVec = r.into_iter().map(|(k, c)| (k, c * &inv)).collect();
        self.rows.insert(p, r);
        Some(p)
    }

    /// Fully reduced rows, ordered by pivot.
    pub fn reduced_rows(&self) -> Vec<(usize, SparseVec)> {
        let mut out: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for (&p, row) in self.rows.iter().rev() {
            let mut r = row.clone();
            let hits: Vec<(usize, Scalar)> =
                r.iter().filter(|(k, _)| **k != p && out.contains_key(k)).map(|(k, c)| (*k, c.clone())).collect();
            for (q, c) in hits {
                sparse_axpy(&mut r, &-c, &out[&q]);
            }
            out.insert(p, r);
        }
        out.into_iter().collect()
    }
}

/// A linear subspace of `F^ambient_dim` with its reduced row echelon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    pub ambient_dim: usize,
    pub generators: Vec<Vector>,
    pub reduced_basis: Vec<Vector>,
    pub pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(ambient_dim: usize, generators: Vec<Vector>) -> Self {
        let mut e = Echelon::new();
        for g in &generators {
            assert_eq!(g.dim(), ambient_dim, "generator dimension");
            e.insert(&g.to_sparse());
        }
        let rows = e.reduced_rows();
        Subspace {
            ambient_dim,
            generators,
            pivots: rows.iter().map(|(p, _)| *p).collect(),
            reduced_basis: rows.iter().map(|(_, r)| Vector::from_sparse(ambient_dim, r)).collect(),
        }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self::span(ambient_dim, vec![])
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::span(ambient_dim, (0..ambient_dim).map(|i| Vector::unit(ambient_dim, i)).collect())
    }

    pub fn dim(&self) -> usize {
        self.reduced_basis.len()
    }

    /// Remainder of `v` after clearing the pivot columns.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut r = v.clone();
        for (p, row) in self.pivots.iter().zip(&self.reduced_basis) {
            let c = r.coords[*p].clone();
            if !c.is_zero() {
                r = r.sub(&row.scaled(&c));
            }
        }
        r
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.reduced_basis.iter().all(|v| self.contains(v))
    }

    /// Coordinates of a member of the subspace in `reduced_basis`.
    pub fn coordinates(&self, v: &Vector) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|p| v.coords[*p].clone()).collect())
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut g = self.reduced_basis.clone();
        g.extend(other.reduced_basis.iter().cloned());
        Subspace::span(self.ambient_dim, g)
    }

    pub fn same_space(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.reduced_basis == other.reduced_basis
    }

    /// Rank check helper shared with callers that only need independence.
    pub fn rank_of(ambient_dim: usize, vectors: &[Vector]) -> usize {
        let mut e = Echelon::new();
        for v in vectors {
            assert_eq!(v.dim(), ambient_dim);
            e.insert(&v.to_sparse());
        }
        e.rank()
    }
}

/// Dense matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<Scalar>>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![vec![Scalar::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = Scalar::one();
        }
        m
    }

    pub fn from_rows(data: Vec<Vec<Scalar>>) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        assert!(data.iter().all(|r| r.len() == cols), "ragged matrix");
        Matrix { rows, cols, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vector]) -> Self {
        let n = cols.first().map_or(0, Vector::dim);
        let mut m = Self::zeros(n, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for i in 0..n {
                m.data[i][j] = c.coords[i].clone();
            }
        }
        m
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector { coords: (0..self.rows).map(|i| self.data[i][j].clone()).collect() }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k][j];
                    if !b.is_zero() {
                        out.data[i][j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.dim());
        Vector {
            coords: self
                .data
                .iter()
                .map(|row| row.iter().zip(&v.coords).fold(Scalar::zero(), |acc, (a, b)| acc + a * b))
                .collect(),
        }
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new();
        for r in &self.data {
            e.insert(&Vector { coords: r.clone() }.to_sparse());
        }
        e.rank()
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Matrix, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::DimensionMismatch { expected: self.rows, got: self.cols });
        }
        let n = self.rows;
        let mut a = self.data.clone();
        let mut inv = Self::identity(n).data;
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(AlgebraError::SingularBasisChange)?;
            a.swap(col, piv);
            inv.swap(col, piv);
            let s = a[col][col].recip();
            for x in a[col].iter_mut() {
                *x *= &s;
            }
            for x in inv[col].iter_mut() {
                *x *= &s;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for c in 0..n {
                    let d = &f * &a[col][c];
                    a[r][c] -= d;
                    let d = &f * &inv[col][c];
                    inv[r][c] -= d;
                }
            }
        }
        Ok(Matrix { rows: n, cols: n, data: inv })
    }

    /// Basis of the right null space `{x : A x = 0}`.
    pub fn nullspace(&self) -> Vec<Vector> {
        let mut e = Echelon::new();
        for r in &self.data {
            e.insert(&Vector { coords: r.clone() }.to_sparse());
        }
        let rows = e.reduced_rows();
        let pivots: Vec<usize> = rows.iter().map(|(p, _)| *p).collect();
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = Vector::unit(self.cols, free);
            for (p, row) in &rows {
                if let Some(c) = row.get(&free) {
                    v.coords[*p] = -c.clone();
                }
            }
            out.push(v);
        }
        out
    }
}

/// Solves `A x = b` for sparse rows over `ncols` unknowns; `None` if inconsistent.
/// Free unknowns are set to zero.
pub fn solve_sparse(rows: &[(SparseVec, Scalar)], ncols: usize) -> Option<Vec<Scalar>> {
    let mut e = Echelon::new();
    for (row, rhs) in rows {
        let mut r = row.clone();
        add_entry(&mut r, ncols, -rhs.clone());
        e.insert(&r);
    }
    if e.pivots().contains(&ncols) {
        return None;
    }
    let mut x = vec![Scalar::zero(); ncols];
    for (p, row) in e.reduced_rows() {
        // row: x_p + sum c_k x_k - rhs = 0 with all other pivots eliminated
        x[p] = -row.get(&ncols).cloned().unwrap_or_else(Scalar::zero);
    }
    Some(x)
}
