//! Fock modules of the model filiform algebra, truncated by total degree, and the
//! Leibniz algebras obtained by letting polynomials sit in the right annihilator.
//!
//! Polynomials are infinite-dimensional; every product that would leave the
//! truncation is reported as [`FockError::Overflow`], never dropped.

mod poly;

pub use poly::TruncatedPolySpace;

use leibniz_core::linalg::{add_entry, sparse_axpy, SparseVec};
use leibniz_core::scalar::{int, one};
use leibniz_core::{BasisChange, Matrix, ModuleAction, Scalar, StructureTensor, Subspace, Vector};
use num_traits::Zero;
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FockError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("product reaches degree {degree}, above the truncation {max}")]
    Overflow { degree: usize, max: usize },
}

fn factorial(k: usize) -> Scalar {
    (1..=k as i64).fold(one(), |acc, i| acc * int(i))
}

/// Action of the model algebra `x_1..x_n` on polynomials of degree at most `D`:
/// `x_1` differentiates and `x_i` multiplies by `x^{n-i} / (n-i)!` for `i >= 2`.
#[derive(Debug, Clone)]
pub struct FockAction {
    n: usize,
    space: TruncatedPolySpace,
}

pub fn fock_action(n: usize, max_degree: usize) -> Result<FockAction, FockError> {
    if n < 3 || max_degree < n {
        return Err(FockError::InvalidParameter(format!("need n >= 3 and D >= n, got n = {n}, D = {max_degree}")));
    }
    Ok(FockAction { n, space: TruncatedPolySpace::new(1, max_degree) })
}

impl FockAction {
    pub fn space(&self) -> &TruncatedPolySpace {
        &self.space
    }

    /// `(x^t, x_i)` with 0-based `i`.
    pub fn act(&self, t: usize, i: usize) -> Result<SparseVec, FockError> {
        let mut out = SparseVec::new();
        let d = self.space.max_degree();
        if i == 0 {
            if t > 0 {
                out.insert(t - 1, int(t as i64));
            }
            return Ok(out);
        }
        let raise = self.n - 1 - i;
        if t + raise > d {
            return Err(FockError::Overflow { degree: t + raise, max: d });
        }
        out.insert(t + raise, factorial(raise).recip());
        Ok(out)
    }

    /// Every representable entry, plus the (monomial, generator) pairs that overflow.
    pub fn window_table(&self) -> (ModuleAction, Vec<(usize, usize)>) {
        let mut m = ModuleAction::new(self.space.len(), self.n);
        let mut overflow = Vec::new();
        for t in 0..self.space.len() {
            for i in 0..self.n {
                match self.act(t, i) {
                    Ok(v) => {
                        for (k, c) in v {
                            m.add(t, i, k, c);
                        }
                    }
                    Err(_) => overflow.push((t, i)),
                }
            }
        }
        (m, overflow)
    }
}

/// What a finite generator is, by block.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    Unit(usize),
    Power(usize, usize),
    Derivative(usize),
}

/// Finite part (one model algebra per block in Fock basis) plus the truncated
/// polynomial module, with monomials acting only from the left.
#[derive(Debug, Clone)]
pub struct FockAlgebra {
    blocks: Vec<usize>,
    generators: Vec<Generator>,
    finite_part: StructureTensor,
    module_part: TruncatedPolySpace,
    safe_degree: usize,
    unit_scale: Scalar,
}

fn finite_block_tensor(blocks: &[usize]) -> (StructureTensor, Vec<Generator>) {
    let many = blocks.len() > 1;
    let suffix = |b: usize| if many { format!("_{}", b + 1) } else { String::new() };
    let mut generators = Vec::new();
    let mut labels = Vec::new();
    for (b, &n) in blocks.iter().enumerate() {
        generators.push(Generator::Unit(b));
        labels.push(format!("1{}", suffix(b)));
        for j in 1..=n - 2 {
            generators.push(Generator::Power(b, j));
            labels.push(format!("xbar^{j}{}", suffix(b)));
        }
        generators.push(Generator::Derivative(b));
        labels.push(format!("d{}", suffix(b)));
    }
    let mut t = StructureTensor::new(labels);
    let mut off = 0;
    for &n in blocks {
        let d = off + n - 1;
        for i in 1..=n - 2 {
            // [xbar^i, d] = i xbar^{i-1}, with xbar^0 the unit
            t.add(off + i, d, off + i - 1, int(i as i64));
            t.add(d, off + i, off + i - 1, int(-(i as i64)));
        }
        off += n;
    }
    (t, generators)
}

/// The single-block algebra on `{1, xbar, ..., xbar^{n-2}, d} + {x^t : t <= D}`.
pub fn build_fr(n: usize, max_degree: usize) -> Result<FockAlgebra, FockError> {
    if n < 3 || max_degree < n {
        return Err(FockError::InvalidParameter(format!("need n >= 3 and D >= n, got n = {n}, D = {max_degree}")));
    }
    Ok(FockAlgebra::new(vec![n], max_degree))
}

/// Several blocks acting on polynomials in one variable per block.
pub fn build_fr_direct_sum(dims: &[usize], max_degree: usize) -> Result<FockAlgebra, FockError> {
    if dims.is_empty() || dims.iter().any(|&n| n < 3) {
        return Err(FockError::InvalidParameter(format!("every block needs n >= 3, got {dims:?}")));
    }
    let top = *dims.iter().max().expect("nonempty");
    if max_degree < top {
        return Err(FockError::InvalidParameter(format!("need D >= {top}, got {max_degree}")));
    }
    Ok(FockAlgebra::new(dims.to_vec(), max_degree))
}

/// Result of the degree-windowed Leibniz scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowReport {
    pub checked: usize,
    /// Triples with a monomial operand above `safe_degree`.
    pub outside_window: usize,
    /// Triples inside the degree window whose nested products still overflow.
    pub overflowed: usize,
    pub residuals: Vec<((usize, usize, usize), SparseVec)>,
}

impl FockAlgebra {
    fn new(blocks: Vec<usize>, max_degree: usize) -> Self {
        let (finite_part, generators) = finite_block_tensor(&blocks);
        let raise = blocks.iter().max().expect("nonempty") - 2;
        FockAlgebra {
            module_part: TruncatedPolySpace::new(blocks.len(), max_degree),
            safe_degree: max_degree - raise,
            blocks,
            generators,
            finite_part,
            unit_scale: one(),
        }
    }

    /// Same algebra but with `[m, 1_i] = c m`. Only meaningful for mutation tests.
    pub fn with_unit_action_scale(mut self, c: Scalar) -> Self {
        self.unit_scale = c;
        self
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn finite_part(&self) -> &StructureTensor {
        &self.finite_part
    }

    pub fn module_part(&self) -> &TruncatedPolySpace {
        &self.module_part
    }

    pub fn safe_degree(&self) -> usize {
        self.safe_degree
    }

    pub fn finite_dim(&self) -> usize {
        self.finite_part.dim()
    }

    pub fn dim(&self) -> usize {
        self.finite_dim() + self.module_part.len()
    }

    pub fn generator(&self, i: usize) -> Generator {
        self.generators[i]
    }

    /// Index of a finite generator in the combined basis.
    pub fn generator_index(&self, g: Generator) -> Option<usize> {
        self.generators.iter().position(|&h| h == g)
    }

    /// Index of a monomial in the combined basis.
    pub fn monomial_index(&self, exps: &[u32]) -> Option<usize> {
        self.module_part.index_of(exps).map(|i| i + self.finite_dim())
    }

    pub fn labels(&self) -> Vec<String> {
        let mut l = self.finite_part.labels().to_vec();
        l.extend((0..self.module_part.len()).map(|i| self.module_part.label(i)));
        l
    }

    /// `[m, g]` for a monomial `m` (index into the module part) and generator `g`.
    pub fn act(&self, m: usize, g: usize) -> Result<SparseVec, FockError> {
        let exps = self.module_part.monomial(m);
        let off = self.finite_dim();
        let max = self.module_part.max_degree();
        let mut out = SparseVec::new();
        match self.generators[g] {
            Generator::Unit(_) => {
                add_entry(&mut out, off + m, self.unit_scale.clone());
            }
            Generator::Power(b, j) => {
                let mut e = exps.to_vec();
                e[b] += j as u32;
                let degree = e.iter().map(|&t| t as usize).sum();
                let k = self.module_part.index_of(&e).ok_or(FockError::Overflow { degree, max })?;
                out.insert(off + k, one());
            }
            Generator::Derivative(b) => {
                if exps[b] > 0 {
                    let mut e = exps.to_vec();
                    e[b] -= 1;
                    let k = self.module_part.index_of(&e).expect("lower degree exists");
                    out.insert(off + k, int(exps[b] as i64));
                }
            }
        }
        Ok(out)
    }

    /// Bracket of two combined basis elements.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Result<SparseVec, FockError> {
        let f = self.finite_dim();
        match (i < f, j < f) {
            (true, true) => Ok(self.finite_part.get(i, j).cloned().unwrap_or_default()),
            (false, true) => self.act(i - f, j),
            _ => Ok(SparseVec::new()),
        }
    }

    pub fn bracket(&self, u: &SparseVec, v: &SparseVec) -> Result<SparseVec, FockError> {
        let mut out = SparseVec::new();
        for (i, a) in u {
            for (j, b) in v {
                let r = self.bracket_basis(*i, *j)?;
                sparse_axpy(&mut out, &(a * b), &r);
            }
        }
        Ok(out)
    }

    fn residual(&self, i: usize, j: usize, k: usize) -> Result<SparseVec, FockError> {
        let e = |x: usize| -> SparseVec { [(x, one())].into_iter().collect() };
        let ij = self.bracket_basis(i, j)?;
        let ik = self.bracket_basis(i, k)?;
        let jk = self.bracket_basis(j, k)?;
        let mut out = self.bracket(&ij, &e(k))?;
        sparse_axpy(&mut out, &int(-1), &self.bracket(&ik, &e(j))?);
        sparse_axpy(&mut out, &int(-1), &self.bracket(&e(i), &jk)?);
        Ok(out)
    }

    fn in_window(&self, x: usize) -> bool {
        x < self.finite_dim() || self.module_part.degree(x - self.finite_dim()) <= self.safe_degree
    }

    /// Tensor on the combined basis holding every representable product; the pairs
    /// whose product overflows are returned alongside. Overflowing products are
    /// monomials, so the tensor is exact modulo the monomial ideal.
    pub fn window_tensor(&self) -> (StructureTensor, Vec<(usize, usize)>) {
        let mut t = StructureTensor::new(self.labels());
        let mut overflow = Vec::new();
        for i in 0..self.dim() {
            for j in 0..self.finite_dim() {
                match self.bracket_basis(i, j) {
                    Ok(v) => t.set(i, j, v),
                    Err(_) => overflow.push((i, j)),
                }
            }
        }
        (t, overflow)
    }

    /// Span of the monomials in the combined basis.
    pub fn monomial_ideal(&self) -> Subspace {
        let n = self.dim();
        Subspace::span(n, (self.finite_dim()..n).map(|i| Vector::unit(n, i)).collect())
    }

    /// For one block: the basis change sending the Fock basis to the model basis,
    /// `x_1 = d` and `x_i = xbar^{n-i} / (n-i)!`.
    pub fn model_rescaling(&self) -> Option<BasisChange> {
        let [n] = self.blocks[..] else { return None };
        let mut m = Matrix::zeros(n, n);
        m.data[n - 1][0] = one();
        for i in 2..=n {
            m.data[n - i][i - 1] = factorial(n - i).recip();
        }
        Some(BasisChange::new(m).expect("diagonal up to order"))
    }
}

/// Leibniz identity over all triples whose monomial operands have degree at most
/// `safe_degree` and whose nested products stay representable.
pub fn check_leibniz_windowed(f: &FockAlgebra) -> WindowReport {
    let n = f.dim();
    let per_i: Vec<WindowReport> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut r = WindowReport { checked: 0, outside_window: 0, overflowed: 0, residuals: Vec::new() };
            for j in 0..n {
                for k in 0..n {
                    if !(f.in_window(i) && f.in_window(j) && f.in_window(k)) {
                        r.outside_window += 1;
                        continue;
                    }
                    match f.residual(i, j, k) {
                        Ok(v) => {
                            r.checked += 1;
                            if !v.is_empty() {
                                r.residuals.push(((i, j, k), v));
                            }
                        }
                        Err(_) => r.overflowed += 1,
                    }
                }
            }
            r
        })
        .collect();
    per_i.into_iter().fold(
        WindowReport { checked: 0, outside_window: 0, overflowed: 0, residuals: Vec::new() },
        |mut acc, r| {
            acc.checked += r.checked;
            acc.outside_window += r.outside_window;
            acc.overflowed += r.overflowed;
            acc.residuals.extend(r.residuals);
            acc
        },
    )
}

/// Whether every residual coefficient is zero; convenience for reports.
pub fn window_is_clean(r: &WindowReport) -> bool {
    r.residuals.iter().all(|(_, v)| v.values().all(Zero::is_zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use leibniz_core::scalar::frac;

    fn unit(i: usize) -> SparseVec {
        [(i, one())].into_iter().collect()
    }

    #[test]
    fn action_entries() {
        let a = fock_action(5, 10).unwrap();
        assert_eq!(a.act(4, 0).unwrap(), [(3, int(4))].into_iter().collect());
        assert!(a.act(0, 0).unwrap().is_empty());
        // x_2 multiplies by x^3 / 3!
        assert_eq!(a.act(2, 1).unwrap(), [(5, frac(1, 6))].into_iter().collect());
        assert_eq!(a.act(8, 1), Err(FockError::Overflow { degree: 11, max: 10 }));
        assert!(fock_action(5, 4).is_err());
    }

    #[test]
    fn single_block_table() {
        let f = build_fr(4, 6).unwrap();
        let d = f.generator_index(Generator::Derivative(0)).unwrap();
        let x2 = f.generator_index(Generator::Power(0, 2)).unwrap();
        let x1 = f.generator_index(Generator::Power(0, 1)).unwrap();
        let u = f.generator_index(Generator::Unit(0)).unwrap();
        assert_eq!(f.bracket_basis(x2, d).unwrap(), [(x1, int(2))].into_iter().collect());
        assert_eq!(f.bracket_basis(d, x1).unwrap(), [(u, int(-1))].into_iter().collect());
        let m3 = f.monomial_index(&[3]).unwrap();
        let m5 = f.monomial_index(&[5]).unwrap();
        assert_eq!(f.bracket_basis(m3, x2).unwrap(), unit(m5));
        assert!(f.bracket_basis(u, m3).unwrap().is_empty());
        assert_eq!(f.bracket_basis(m3, u).unwrap(), unit(m3));
        assert_eq!(f.safe_degree(), 4);
        assert!(f.bracket_basis(m5, x2).is_err());
    }

    #[test]
    fn multivariate_table() {
        let f = build_fr_direct_sum(&[4, 3], 6).unwrap();
        let m = f.monomial_index(&[2, 1]).unwrap();
        let d2 = f.generator_index(Generator::Derivative(1)).unwrap();
        assert_eq!(f.bracket_basis(m, d2).unwrap(), unit(f.monomial_index(&[2, 0]).unwrap()));
        let xb = f.generator_index(Generator::Power(0, 1)).unwrap();
        let u2 = f.generator_index(Generator::Unit(1)).unwrap();
        assert!(f.bracket_basis(xb, u2).unwrap().is_empty());
        for b in 0..2 {
            let u = f.generator_index(Generator::Unit(b)).unwrap();
            assert_eq!(f.bracket_basis(m, u).unwrap(), unit(m));
        }
    }

    #[test]
    fn small_windows_are_clean() {
        let r = check_leibniz_windowed(&build_fr(3, 6).unwrap());
        assert!(r.residuals.is_empty());
        assert!(r.checked > 0);
        let r = check_leibniz_windowed(&build_fr(4, 8).unwrap());
        assert!(r.residuals.is_empty());
        assert!(window_is_clean(&r));
    }

    #[test]
    fn doubled_unit_action_is_caught() {
        let f = build_fr(4, 8).unwrap().with_unit_action_scale(int(2));
        let r = check_leibniz_windowed(&f);
        assert!(!r.residuals.is_empty());
        let d = f.generator_index(Generator::Derivative(0)).unwrap();
        let xb = f.generator_index(Generator::Power(0, 1)).unwrap();
        let u = f.generator_index(Generator::Unit(0)).unwrap();
        let m2 = f.monomial_index(&[2]).unwrap();
        assert!(r.residuals.iter().any(|(t, _)| *t == (m2, d, xb)));
        assert!(!r.residuals.iter().any(|(t, _)| *t == (m2, u, u)));
    }
}
