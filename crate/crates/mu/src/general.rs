//! The `2n`-dimensional family over the model filiform algebra `x_1..x_n` with the
//! minimal faithful module `e_1..e_n`, and the linear restrictions on its parameters.

use std::collections::BTreeMap;

use leibniz_core::linalg::add_entry;
use leibniz_core::scalar::{frac, int, zero};
use leibniz_core::{leibniz_residuals, Residual, Scalar, StructureTensor};

use crate::q::q;
use crate::MuError;

/// `alpha[0..5]`, `beta[k-1]` for `1 <= k <= n-2`, `gamma[(i, k)]` for
/// `2 <= i <= n/2`, `1 <= k <= n-1`. Missing gammas read as zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralParams {
    pub n: usize,
    pub alpha: [Scalar; 5],
    pub beta: Vec<Scalar>,
    pub gamma: BTreeMap<(usize, usize), Scalar>,
}

impl GeneralParams {
    pub fn zero(n: usize) -> Self {
        GeneralParams {
            n,
            alpha: std::array::from_fn(|_| zero()),
            beta: vec![zero(); n.saturating_sub(2)],
            gamma: BTreeMap::new(),
        }
    }

    /// Number of scalar parameters: 5 alphas, `n-2` betas, `(n/2 - 1)(n-1)` gammas.
    pub fn count(n: usize) -> usize {
        5 + (n - 2) + (n / 2 - 1) * (n - 1)
    }

    /// Parameter names in flat order.
    pub fn names(n: usize) -> Vec<String> {
        let mut out: Vec<String> = (1..=5).map(|i| format!("alpha{i}")).collect();
        out.extend((1..=n - 2).map(|k| format!("beta{k}")));
        for i in 2..=n / 2 {
            out.extend((1..n).map(|k| format!("gamma{i},{k}")));
        }
        out
    }

    /// Flat index of the first gamma.
    pub fn gamma_offset(n: usize) -> usize {
        5 + (n - 2)
    }

    pub fn to_flat(&self) -> Vec<Scalar> {
        let mut out: Vec<Scalar> = self.alpha.to_vec();
        out.extend(self.beta.iter().cloned());
        for i in 2..=self.n / 2 {
            out.extend((1..self.n).map(|k| self.g(i, k)));
        }
        out
    }

    pub fn from_flat(n: usize, v: &[Scalar]) -> Result<Self, MuError> {
        if n < 4 || v.len() != Self::count(n) {
            return Err(MuError::IndexRange(format!("n = {n} with {} parameters", v.len())));
        }
        let mut p = GeneralParams::zero(n);
        for i in 0..5 {
            p.alpha[i] = v[i].clone();
        }
        p.beta = v[5..5 + n - 2].to_vec();
        let mut idx = Self::gamma_offset(n);
        for i in 2..=n / 2 {
            for k in 1..n {
                if v[idx] != zero() {
                    p.gamma.insert((i, k), v[idx].clone());
                }
                idx += 1;
            }
        }
        Ok(p)
    }

    fn a(&self, i: usize) -> Scalar {
        self.alpha[i - 1].clone()
    }

    fn b(&self, k: usize) -> Scalar {
        debug_assert!((1..=self.n - 2).contains(&k), "beta index {k}");
        self.beta[k - 1].clone()
    }

    fn g(&self, i: usize, k: usize) -> Scalar {
        self.gamma.get(&(i, k)).cloned().unwrap_or_else(zero)
    }
}

fn sign(e: usize) -> Scalar {
    if e % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

fn binom(n: usize, k: usize) -> Scalar {
    if k > n {
        return zero();
    }
    (0..k).fold(int(1), |acc, i| acc * int((n - i) as i64) / int(i as i64 + 1))
}

struct Builder {
    n: usize,
    t: StructureTensor,
    strict: bool,
}

impl Builder {
    fn x(&self, i: usize) -> usize {
        i - 1
    }

    fn e(&self, k: usize) -> usize {
        self.n + k - 1
    }

    fn add_x(&mut self, i: usize, j: usize, k: usize, c: Scalar) {
        let (i, j, k) = (self.x(i), self.x(j), self.x(k));
        self.t.add(i, j, k, c);
    }

    fn add_e(&mut self, i: usize, j: usize, k: usize, c: Scalar) {
        let (i, j, k) = (self.x(i), self.x(j), self.e(k));
        self.t.add(i, j, k, c);
    }

    fn gamma(&self, p: &GeneralParams, i: usize, k: usize) -> Scalar {
        if self.strict {
            debug_assert!((2..=self.n / 2).contains(&i) && (1..self.n).contains(&k), "gamma index ({i}, {k})");
        }
        p.g(i, k)
    }
}

fn labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).chain((1..=n).map(|i| format!("e{i}"))).collect()
}

/// The full table for `n >= 5`; `n = 4` is the dedicated eight-parameter table.
pub fn general_table(p: &GeneralParams) -> Result<StructureTensor, MuError> {
    if p.n < 5 {
        return Err(MuError::UseMu4(p.n));
    }
    check_shape(p)?;
    Ok(build(p, true))
}

/// Same assembly without the `n >= 5` guard; at `n = 4` several index ranges are
/// vacuous and the result must be compared against the eight-parameter table.
pub fn general_table_unchecked(p: &GeneralParams) -> Result<StructureTensor, MuError> {
    if p.n < 4 {
        return Err(MuError::IndexRange(format!("n = {} is below 4", p.n)));
    }
    check_shape(p)?;
    Ok(build(p, false))
}

fn check_shape(p: &GeneralParams) -> Result<(), MuError> {
    if p.beta.len() != p.n - 2 {
        return Err(MuError::IndexRange(format!("expected {} betas, got {}", p.n - 2, p.beta.len())));
    }
    if let Some(&(i, k)) = p.gamma.keys().find(|&&(i, k)| !(2..=p.n / 2).contains(&i) || !(1..p.n).contains(&k)) {
        return Err(MuError::IndexRange(format!("gamma({i}, {k}) outside 2..={} x 1..={}", p.n / 2, p.n - 1)));
    }
    Ok(())
}

fn build(p: &GeneralParams, strict: bool) -> StructureTensor {
    let n = p.n;
    let h = n / 2;
    let mut b = Builder { n, t: StructureTensor::new(labels(n)), strict };
    let a = |i| p.a(i);

    // module action
    for i in 2..n {
        let (ei, x1, el) = (b.e(i), b.x(1), b.e(i - 1));
        b.t.add(ei, x1, el, int(1));
    }
    for j in 2..=n {
        let (en, xj, el) = (b.e(n), b.x(j), b.e(n + 1 - j));
        b.t.add(en, xj, el, int(1));
    }

    // products with x_1 and x_n
    b.add_e(1, 1, n - 1, a(1));
    b.add_e(1, 1, n, a(2));
    for j in 2..n {
        b.add_x(1, j, j + 1, int(-1));
    }
    b.add_x(2, 1, 3, int(1));
    b.add_e(2, 1, n, a(3));
    for i in 3..n {
        b.add_x(i, 1, i + 1, int(1));
        b.add_e(i, 1, n + 2 - i, -a(2));
    }
    b.add_e(1, n, 1, a(4));
    b.add_e(1, n, 2, a(2));
    b.add_e(n, 1, 1, -a(4));
    b.add_e(n, 1, 2, -int(2) * a(2));
    b.add_e(2, n, 1, a(5));
    b.add_e(2, n, 2, a(3));

    // inner products
    for k in 1..=n - 2 {
        b.add_e(2, 2, k, p.b(k));
    }
    for i in 2..=h {
        for k in 1..n {
            let c = b.gamma(p, i, k);
            b.add_e(i + 1, i, k, c);
        }
    }
    for j in 0..n - 4 {
        for i in 3..=(n + 1 - j) / 2 {
            for s in 0..=(j + 1) / 2 {
                for k in 1..=n - 2 - j + 2 * s {
                    let c = sign(s) * q(s, j + 2 - 2 * s) * b.gamma(p, i + s - 1, j + 1 - 2 * s + k);
                    b.add_e(i, i + j, k, c);
                }
            }
        }
    }
    for j in 3..n {
        b.add_e(2, j, n + 2 - j, -int(j as i64 - 2) * a(3));
        for k in 1..=n - j {
            b.add_e(2, j, k, p.b(j - 2 + k));
        }
        for s in 2..=(j + 1) / 2 {
            for k in 1..=n + 2 * s - 2 - j {
                let c = sign(s + 1) * q(s - 1, j + 2 - 2 * s) * b.gamma(p, s, j + 1 - 2 * s + k);
                b.add_e(2, j, k, c);
            }
        }
    }

    // high products [x_i, x_{n+p-i}], p = 2
    for i in 3..=(n + 3) / 2 {
        let j = n + 2 - i;
        b.add_e(i, j, 1, sign(i) * a(5));
        b.add_e(i, j, 2, sign(i) * int(n as i64 - 1) * a(3));
        let ranges = [(2, i - 2, 1, usize::MAX), (i - 1, h, 1, i - 2)];
        for (s_lo, s_hi, t_lo, t_cap) in ranges {
            for s in s_lo..=s_hi {
                for t in t_lo..=s.min(t_cap) {
                    for k in 1..=2 * s - 2 {
                        let c = sign(s + i) * q(s - t, n + 1 - 2 * s) * b.gamma(p, s, n + 1 - 2 * s + k);
                        b.add_e(i, j, k, c);
                    }
                }
            }
        }
    }
    // p = 3
    for i in 4..=(n + 4) / 2 {
        let j = n + 3 - i;
        b.add_e(i, j, 1, sign(i + 1) * int((i as i64 - 3) * (n as i64 - 1)) * a(3));
        let ranges = [(2, i - 3, usize::MAX), (i - 2, h, i - 3)];
        for (s_lo, s_hi, t_cap) in ranges {
            for s in s_lo..=s_hi {
                for t in 1..=s.min(t_cap) {
                    for k in 1..=(2 * s).saturating_sub(3) {
                        let c = sign(s + i + 1)
                            * int((i - 2 - t) as i64)
                            * q(s - t, n + 1 - 2 * s)
                            * b.gamma(p, s, n + 2 - 2 * s + k);
                        b.add_e(i, j, k, c);
                    }
                }
            }
        }
    }
    // p >= 4
    for pp in 4..n {
        for i in pp + 1..=(n + pp + 1) / 2 {
            let j = n + pp - i;
            let ranges = [(pp / 2 + 1, i - pp, usize::MAX), ((i - pp + 1).max(pp / 2 + 1), h, i - pp)];
            for (s_lo, s_hi, t_cap) in ranges {
                for s in s_lo..=s_hi {
                    for t in 1..=s.min(t_cap) {
                        for k in 1..=2 * s - pp {
                            let c = sign(s + i + pp)
                                * binom(i - 2 - t, pp - 2)
                                * q(s - t, n + 1 - 2 * s)
                                * b.gamma(p, s, n + pp - 1 - 2 * s + k);
                            b.add_e(i, j, k, c);
                        }
                    }
                }
            }
        }
    }

    // [x_a, x_b] = [x_{b+1}, x_{a-1}] for 2 <= b, a >= b + 2
    for a_ in 1..=n {
        for b_ in 2..=n {
            if a_ >= b_ + 2 {
                let (xa, xb) = (b.x(a_), b.x(b_));
                debug_assert!(b.t.get(xa, xb).is_none(), "[x{a_}, x{b_}] assigned twice");
                let src = b.t.get(b.x(b_ + 1), b.x(a_ - 1)).cloned().unwrap_or_default();
                b.t.set(xa, xb, src);
            }
        }
    }
    b.t
}

/// Left-hand sides of the restrictions on the parameters: one system for even `n`,
/// another for odd `n`. All of them vanish exactly on the Leibniz locus.
pub fn constraint_residuals(p: &GeneralParams) -> Vec<Scalar> {
    let n = p.n;
    let h = n / 2;
    let g = |i: usize, k: usize| p.g(i, k);
    let half = frac(1, 2);
    let mut out = Vec::new();
    if n % 2 == 0 {
        let sq = |s: usize| -> Scalar { (1..=s).map(|t| q(s - t, n + 1 - 2 * s)).sum() };
        let tail = |shift: usize| -> Scalar { (2..=h).map(|s| sign(s) * g(s, n + shift - 2 * s) * sq(s)).sum() };
        out.push(p.a(5) + tail(2) - sign(h) * &half * g(h, 2));
        out.push(int(n as i64 - 1) * p.a(3) + tail(3) - sign(h) * &half * g(h, 3));
        for k in 3..n - 1 {
            let s_sum: Scalar = ((k + 3) / 2..=h).map(|s| sign(s) * g(s, n + 1 - 2 * s + k) * sq(s)).sum();
            out.push(s_sum - sign(h) * &half * g(h, k + 1));
        }
        for l in 2..h {
            for k in 1..=n - 2 * l {
                let mut e = zero();
                for s in (k + 1) / 2 + l..=h {
                    let w: Scalar = (1..=s.min(h - l))
                        .map(|t| {
                            (binom(h + l - 2 - t, 2 * l - 2) + &half * binom(h + l - 2 - t, 2 * l - 3))
                                * q(s - t, n + 1 - 2 * s)
                        })
                        .sum();
                    e += sign(s) * g(s, n + 2 * l - 1 - 2 * s + k) * w;
                }
                for s in (h - l + 1).max((k + 1) / 2 + l)..=h {
                    e += &half * sign(s) * g(s, n + 2 * l - 1 - 2 * s + k) * q(s + l - 1 - h, n + 1 - 2 * s);
                }
                out.push(e);
            }
        }
    } else {
        let weight = |s: usize| -> Scalar {
            (1..=s).map(|t| (int((h - t) as i64) + &half) * q(s - t, n + 1 - 2 * s)).sum()
        };
        let first: Scalar = (2..=h).map(|s| sign(s) * g(s, n + 3 - 2 * s) * weight(s)).sum();
        out.push(frac(2 * h as i64 - 1, 2) * int(n as i64 - 1) * p.a(3) + first);
        for k in 2..n - 3 {
            out.push(((k + 4) / 2..=h).map(|s| sign(s) * g(s, n + 2 - 2 * s + k) * weight(s)).sum());
        }
        for l in 3..=h {
            for k in 1..=n - 2 * l {
                let mut e = zero();
                for s in k / 2 + l..=h {
                    let w: Scalar = (1..=s.min(h - l + 1))
                        .map(|t| {
                            (binom(h + l - 2 - t, 2 * l - 3) + &half * binom(h + l - 2 - t, 2 * l - 4))
                                * q(s - t, n + 1 - 2 * s)
                        })
                        .sum();
                    e += sign(s) * g(s, n + 2 * l - 2 - 2 * s + k) * w;
                }
                for s in (h - l + 2).max(k / 2 + l)..=h {
                    e += &half * sign(s) * g(s, n + 2 * l - 2 - 2 * s + k) * q(s + l - 2 - h, n + 1 - 2 * s);
                }
                out.push(e);
            }
        }
    }
    out
}

/// Independent check: build the table and scan every basis triple for the
/// Leibniz identity. Empty exactly when the parameters give a Leibniz algebra.
pub fn bruteforce_constraint_oracle(p: &GeneralParams) -> Result<Vec<Residual>, MuError> {
    let t = if p.n == 4 { general_table_unchecked(p)? } else { general_table(p)? };
    Ok(leibniz_residuals(&t))
}

/// Both residual maps are linear in the parameters; these are their matrices,
/// one column per flat parameter.
pub fn constraint_matrix(n: usize) -> Vec<Vec<Scalar>> {
    let cols: Vec<Vec<Scalar>> = (0..GeneralParams::count(n))
        .map(|c| constraint_residuals(&unit_params(n, c)))
        .collect();
    transpose(&cols)
}

/// Rows are indexed by (triple, output coordinate) pairs that are nonzero for some parameter.
pub fn oracle_matrix(n: usize) -> Result<Vec<Vec<Scalar>>, MuError> {
    let count = GeneralParams::count(n);
    let mut rows: BTreeMap<(usize, usize, usize, usize), Vec<Scalar>> = BTreeMap::new();
    for c in 0..count {
        for r in bruteforce_constraint_oracle(&unit_params(n, c))? {
            let (i, j, k) = r.triple;
            for (m, v) in r.value.coords.iter().enumerate() {
                if *v != zero() {
                    let row = rows.entry((i, j, k, m)).or_insert_with(|| vec![zero(); count]);
                    row[c] = v.clone();
                }
            }
        }
    }
    Ok(rows.into_values().collect())
}

fn unit_params(n: usize, c: usize) -> GeneralParams {
    let mut v = vec![zero(); GeneralParams::count(n)];
    v[c] = int(1);
    GeneralParams::from_flat(n, &v).expect("consistent length")
}

fn transpose(cols: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let rows = cols.first().map_or(0, Vec::len);
    (0..rows).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect()
}

/// Sparse form of a dense row, for the linear solvers.
pub fn sparse_row(row: &[Scalar]) -> leibniz_core::SparseVec {
    let mut out = leibniz_core::SparseVec::new();
    for (i, c) in row.iter().enumerate() {
        add_entry(&mut out, i, c.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use leibniz_core::{Subspace, Vector};

    fn span(rows: Vec<Vec<Scalar>>, dim: usize) -> Subspace {
        Subspace::span(dim, rows.into_iter().map(|coords| Vector { coords }).collect())
    }

    #[test]
    fn flat_round_trip() {
        let n = 7;
        let v: Vec<Scalar> = (0..GeneralParams::count(n)).map(|i| frac(i as i64 % 5 - 2, 3)).collect();
        assert_eq!(GeneralParams::from_flat(n, &v).unwrap().to_flat(), v);
        assert_eq!(GeneralParams::names(n).len(), v.len());
        assert_eq!(GeneralParams::count(6), 5 + 4 + 2 * 5);
    }

    #[test]
    fn boundary_products() {
        let mut p = GeneralParams::zero(6);
        p.alpha[1] = int(3);
        p.alpha[3] = int(5);
        let t = general_table(&p).unwrap();
        // [x_n, x_1] = -alpha4 e_1 - 2 alpha2 e_2
        let v = t.get(5, 0).unwrap();
        assert_eq!(v.get(&6), Some(&int(-5)));
        assert_eq!(v.get(&7), Some(&int(-6)));
        for i in 3..=6 {
            assert!(t.get(i - 1, 5).is_none());
        }
        assert!(matches!(general_table(&GeneralParams::zero(4)), Err(MuError::UseMu4(4))));
    }

    #[test]
    fn squares_follow_the_gamma_shift() {
        let n = 8;
        let mut p = GeneralParams::zero(n);
        for i in 2..=n / 2 {
            for k in 1..n {
                p.gamma.insert((i, k), int((i * 10 + k) as i64));
            }
        }
        let t = build(&p, true);
        for i in 3..=(n + 1) / 2 {
            let got = t.get(i - 1, i - 1).cloned().unwrap_or_default();
            for k in 1..=n - 2 {
                let want = frac(1, 2) * p.g(i - 1, k + 1);
                assert_eq!(got.get(&(n + k - 1)).cloned().unwrap_or_else(zero), want, "[x{i},x{i}] e{k}");
            }
        }
    }

    #[test]
    fn zero_gamma_family_is_unconstrained() {
        let mut p = GeneralParams::zero(7);
        p.alpha[0] = int(2);
        p.alpha[1] = int(-1);
        p.alpha[3] = frac(1, 3);
        p.beta[0] = int(4);
        assert!(constraint_residuals(&p).iter().all(|r| *r == zero()));
        assert!(bruteforce_constraint_oracle(&p).unwrap().is_empty());
    }

    #[test]
    fn loci_agree_for_small_n() {
        for n in 5..=7 {
            let dim = GeneralParams::count(n);
            let c = span(constraint_matrix(n), dim);
            let o = span(oracle_matrix(n).unwrap(), dim);
            assert!(c.same_space(&o), "n = {n}: constraint rank {}, oracle rank {}", c.dim(), o.dim());
        }
    }
}
