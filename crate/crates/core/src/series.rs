//! Lower central series, filiform test and the natural gradation.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::basis::{apply_basis_change, BasisChange};
use crate::error::AlgebraError;
use crate::identities::is_lie;
use crate::linalg::{add_entry, solve_sparse, Matrix, SparseVec, Subspace, Vector};
use crate::scalar::{int, Scalar};
use crate::tensor::StructureTensor;

/// `L^1 = L`, `L^{k+1} = [L^k, L]`, up to and including the first repeated term
/// (which is not listed twice).
pub fn lower_central_series(t: &StructureTensor) -> Vec<Subspace> {
    let n = t.dim();
    let mut out = vec![Subspace::full(n)];
    loop {
        let last = out.last().expect("nonempty");
        let mut gens = Vec::new();
        for u in &last.reduced_basis {
            let us = u.to_sparse();
            for j in 0..n {
                let v = t.bracket_basis_right(&us, j);
                if !v.is_empty() {
                    gens.push(Vector::from_sparse(n, &v));
                }
            }
        }
        let next = Subspace::span(n, gens);
        if next.dim() == last.dim() {
            return out;
        }
        let done = next.dim() == 0;
        out.push(next);
        if done {
            return out;
        }
    }
}

pub fn series_dims(t: &StructureTensor) -> Vec<usize> {
    lower_central_series(t).iter().map(Subspace::dim).collect()
}

pub fn is_nilpotent(t: &StructureTensor) -> bool {
    series_dims(t).last() == Some(&0)
}

/// `dim L^i = n - i` for `2 <= i <= n`.
pub fn is_filiform(t: &StructureTensor) -> bool {
    let n = t.dim();
    let dims = series_dims(t);
    let at = |i: usize| dims.get(i - 1).copied().unwrap_or(*dims.last().expect("nonempty"));
    (2..=n).all(|i| at(i) == n - i)
}

/// `Gr(L)` on a section basis: layer `i` is spanned by the reduced rows of `L^i`
/// whose pivots are not pivots of `L^{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedAlgebra {
    pub layers: Vec<Subspace>,
    /// Section vectors in old coordinates, ordered by layer.
    pub sections: Vec<Vector>,
    /// Layer index (1-based) of each section vector.
    pub weights: Vec<usize>,
    pub induced: StructureTensor,
}

impl GradedAlgebra {
    pub fn layer_dims(&self) -> Vec<usize> {
        self.layers.iter().map(Subspace::dim).collect()
    }

    /// Basis change from the original basis to the section basis.
    pub fn adapted_basis(&self) -> BasisChange {
        BasisChange::from_columns(&self.sections).expect("sections form a basis")
    }
}

pub fn natural_gradation(t: &StructureTensor) -> Result<GradedAlgebra, AlgebraError> {
    let n = t.dim();
    let series = lower_central_series(t);
    if series.last().map(Subspace::dim) != Some(0) {
        return Err(AlgebraError::NotNilpotent);
    }
    let depth = series.len() - 1;
    let mut sections = Vec::new();
    let mut weights = Vec::new();
    let mut labels = Vec::new();
    let mut layers = Vec::new();
    for i in 0..depth {
        let (here, below) = (&series[i], &series[i + 1]);
        let mut layer = Vec::new();
        for (p, row) in here.pivots.iter().zip(&here.reduced_basis) {
            if !below.pivots.contains(p) {
                layer.push(row.clone());
                labels.push(t.labels()[*p].clone());
                weights.push(i + 1);
            }
        }
        sections.extend(layer.iter().cloned());
        layers.push(Subspace::span(n, layer));
    }
    let mut induced = StructureTensor::new(labels);
    let sparse: Vec<SparseVec> = sections.iter().map(Vector::to_sparse).collect();
    for a in 0..n {
        for b in 0..n {
            let v = Vector::from_sparse(n, &t.bracket_sparse(&sparse[a], &sparse[b]));
            let w = weights[a] + weights[b];
            if w > depth {
                if !v.is_zero() {
                    return Err(AlgebraError::InvalidParameter("bracket leaves the filtration".into()));
                }
                continue;
            }
            if !series[w - 1].contains(&v) {
                return Err(AlgebraError::InvalidParameter("bracket leaves the filtration".into()));
            }
            let r = series[w].reduce(&v);
            for (k, s) in sections.iter().enumerate() {
                if weights[k] != w {
                    continue;
                }
                let p = s.coords.iter().position(|c| !c.is_zero()).expect("nonzero section");
                let c = r.coords[p].clone();
                if !c.is_zero() {
                    induced.add(a, b, k, c);
                }
            }
        }
    }
    Ok(GradedAlgebra { layers, sections, weights, induced })
}

fn same_table(a: &StructureTensor, b: &StructureTensor) -> bool {
    a.dim() == b.dim() && a.entries().eq(b.entries())
}

/// A derivation `D` with `D = i` on `L^i / L^{i+1}`, in the original basis.
///
/// Such a derivation is diagonalizable with eigenspaces complementing the series,
/// so it exists exactly when `L` is isomorphic to `Gr(L)`. The search is an affine
/// linear system in the strictly filtration-raising part of `D`.
pub fn grading_derivation(t: &StructureTensor) -> Result<Option<Matrix>, AlgebraError> {
    let g = natural_gradation(t)?;
    let n = t.dim();
    let p = g.adapted_basis();
    let a_t = apply_basis_change(t, &p)?;
    let w = &g.weights;
    let mut unknowns = BTreeMap::new();
    for k in 0..n {
        for a in 0..n {
            if w[k] > w[a] {
                let idx = unknowns.len();
                unknowns.insert((k, a), idx);
            }
        }
    }
    let nu = unknowns.len();
    let mut rows: Vec<(SparseVec, Scalar)> = Vec::new();
    let neg = |x: &Scalar| -x.clone();
    for a in 0..n {
        for b in 0..n {
            let mut eqs: BTreeMap<usize, (SparseVec, Scalar)> = BTreeMap::new();
            if let Some(c) = a_t.get(a, b) {
                for (m, cm) in c {
                    let e = eqs.entry(*m).or_insert_with(|| (SparseVec::new(), Scalar::zero()));
                    e.1 += cm * int(w[*m] as i64 - w[a] as i64 - w[b] as i64);
                    for k in 0..n {
                        if let Some(&u) = unknowns.get(&(k, *m)) {
                            let e = eqs.entry(k).or_insert_with(|| (SparseVec::new(), Scalar::zero()));
                            add_entry(&mut e.0, u, cm.clone());
                        }
                    }
                }
            }
            for k in 0..n {
                if let (Some(&u), Some(c)) = (unknowns.get(&(k, a)), a_t.get(k, b)) {
                    for (m, cm) in c {
                        let e = eqs.entry(*m).or_insert_with(|| (SparseVec::new(), Scalar::zero()));
                        add_entry(&mut e.0, u, neg(cm));
                    }
                }
                if let (Some(&u), Some(c)) = (unknowns.get(&(k, b)), a_t.get(a, k)) {
                    for (m, cm) in c {
                        let e = eqs.entry(*m).or_insert_with(|| (SparseVec::new(), Scalar::zero()));
                        add_entry(&mut e.0, u, neg(cm));
                    }
                }
            }
            for (_, (row, c)) in eqs {
                if !row.is_empty() || !c.is_zero() {
                    rows.push((row, -c));
                }
            }
        }
    }
    let Some(x) = solve_sparse(&rows, nu) else { return Ok(None) };
    let mut d = Matrix::zeros(n, n);
    for a in 0..n {
        d.data[a][a] = int(w[a] as i64);
    }
    for (&(k, a), &u) in &unknowns {
        d.data[k][a] = x[u].clone();
    }
    let pm = p.matrix();
    let pinv = p.inverse();
    Ok(Some(pm.mul(&d).mul(pinv.matrix())))
}

/// Eigenvectors of a grading derivation, grouped by weight `1..`.
pub fn grading_eigenspaces(d: &Matrix, max_weight: usize) -> Vec<Vec<Vector>> {
    (1..=max_weight)
        .map(|w| {
            let mut m = d.clone();
            for i in 0..m.rows {
                m.data[i][i] -= int(w as i64);
            }
            m.nullspace()
        })
        .collect()
}

/// Whether a filiform Lie algebra is isomorphic to its natural gradation.
///
/// Tries the section basis first; if the table is not already homogeneous there,
/// falls back to the grading-derivation system.
pub fn is_naturally_graded_iso(t: &StructureTensor) -> Result<bool, AlgebraError> {
    if !is_filiform(t) || !is_lie(t) {
        return Err(AlgebraError::NotFiliformLie);
    }
    let g = natural_gradation(t)?;
    if same_table(&apply_basis_change(t, &g.adapted_basis())?, &g.induced) {
        return Ok(true);
    }
    Ok(grading_derivation(t)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model(n: usize) -> StructureTensor {
        let mut t = StructureTensor::with_prefix(n, "x");
        for i in 1..n - 1 {
            t.add(i, 0, i + 1, int(1));
            t.add(0, i, i + 1, int(-1));
        }
        t
    }

    #[test]
    fn model_series_and_gradation() {
        assert_eq!(series_dims(&model(5)), vec![5, 3, 2, 1, 0]);
        assert!(is_filiform(&model(7)));
        let g = natural_gradation(&model(5)).unwrap();
        assert_eq!(g.layer_dims(), vec![2, 1, 1, 1]);
        assert_eq!(g.induced, model(5));
        assert!(is_naturally_graded_iso(&model(6)).unwrap());
        assert!(grading_derivation(&model(6)).unwrap().is_some());
    }

    #[test]
    fn abelian_cases() {
        let t = StructureTensor::zero(3);
        assert_eq!(series_dims(&t), vec![3, 0]);
        assert!(!is_filiform(&t));
        let g = natural_gradation(&t).unwrap();
        assert_eq!(g.layer_dims(), vec![3]);
        assert_eq!(g.induced.nonzero_pairs(), 0);
        assert_eq!(is_naturally_graded_iso(&t), Err(AlgebraError::NotFiliformLie));
    }

    #[test]
    fn non_nilpotent_rejected() {
        let mut t = StructureTensor::zero(2);
        t.add(1, 0, 1, int(1));
        t.add(0, 1, 1, int(-1));
        assert_eq!(natural_gradation(&t), Err(AlgebraError::NotNilpotent));
    }

    #[test]
    fn perturbed_model_is_not_graded() {
        // n_{5,1} with [x2,x3] = x5 added
        let mut t = model(5);
        t.add(1, 2, 4, int(1));
        t.add(2, 1, 4, int(-1));
        assert!(is_lie(&t));
        assert!(is_filiform(&t));
        let g = natural_gradation(&t).unwrap();
        assert_eq!(g.induced, model(5));
        assert!(!is_naturally_graded_iso(&t).unwrap());
    }

    #[test]
    fn derivation_found_after_scrambling() {
        // a graded algebra written in a non-adapted basis still admits the derivation
        let mut m = Matrix::identity(5);
        m.data[4][0] = int(3);
        m.data[3][1] = int(-2);
        m.data[2][0] = int(1);
        let t = apply_basis_change(&model(5), &BasisChange::new(m).unwrap()).unwrap();
        let d = grading_derivation(&t).unwrap().expect("graded");
        let spaces = grading_eigenspaces(&d, 4);
        assert_eq!(spaces.iter().map(Vec::len).collect::<Vec<_>>(), vec![2, 1, 1, 1]);
        assert!(is_naturally_graded_iso(&t).unwrap());
    }
}
