//! Named algebras: the model filiform algebra, the even-dimensional filiform
//! algebra with a central pairing, the Heisenberg algebra, direct sums, and the
//! minimal faithful module of the model filiform algebra.

mod normal_form;

pub use normal_form::{match_filiform_normal_form, FiliformNormalForm};

use leibniz_core::scalar::int;
use leibniz_core::{ModuleAction, StructureTensor};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("dimension parameter must be at least 3, got {0}")]
    TooSmall(usize),
    #[error("direct sum of an empty sequence")]
    EmptySum,
}

fn check(n: usize) -> Result<(), ConstructionError> {
    if n < 3 {
        Err(ConstructionError::TooSmall(n))
    } else {
        Ok(())
    }
}

/// `[x_i, x_1] = -[x_1, x_i] = x_{i+1}` for `2 <= i <= n-1`.
pub fn make_n_n1(n: usize) -> Result<StructureTensor, ConstructionError> {
    check(n)?;
    let mut t = StructureTensor::with_prefix(n, "x");
    for i in 1..n - 1 {
        t.add(i, 0, i + 1, int(1));
        t.add(0, i, i + 1, int(-1));
    }
    Ok(t)
}

/// Dimension `2n`: `[x_i, x_1] = -[x_1, x_i] = x_{i+1}` for `2 <= i <= 2n-2` and
/// `[x_i, x_{2n+1-i}] = -[x_{2n+1-i}, x_i] = (-1)^i x_{2n}` for `2 <= i <= n`.
pub fn make_q2n(n: usize) -> Result<StructureTensor, ConstructionError> {
    check(n)?;
    let d = 2 * n;
    let mut t = StructureTensor::with_prefix(d, "x");
    for i in 1..d - 2 {
        t.add(i, 0, i + 1, int(1));
        t.add(0, i, i + 1, int(-1));
    }
    for i in 2..=n {
        let j = d + 1 - i;
        let s = if i % 2 == 0 { 1 } else { -1 };
        t.add(i - 1, j - 1, d - 1, int(s));
        t.add(j - 1, i - 1, d - 1, int(-s));
    }
    Ok(t)
}

/// Basis `(1, xbar, d)` with the single product `[xbar, d] = -[d, xbar] = 1`.
pub fn make_heisenberg_h1() -> StructureTensor {
    let mut t = StructureTensor::new(vec!["1".into(), "xbar".into(), "d".into()]);
    t.add(1, 2, 0, int(1));
    t.add(2, 1, 0, int(-1));
    t
}

/// Block-diagonal sum. Labels get a `_b` block suffix when there is more than one part.
pub fn direct_sum(parts: &[StructureTensor]) -> Result<StructureTensor, ConstructionError> {
    if parts.is_empty() {
        return Err(ConstructionError::EmptySum);
    }
    if parts.len() == 1 {
        return Ok(parts[0].clone());
    }
    let labels = parts
        .iter()
        .enumerate()
        .flat_map(|(b, p)| p.labels().iter().map(move |l| format!("{l}_{}", b + 1)))
        .collect();
    let mut t = StructureTensor::new(labels);
    let mut off = 0;
    for p in parts {
        for (&(i, j), v) in p.entries() {
            for (k, c) in v {
                t.add(off + i, off + j, off + k, c.clone());
            }
        }
        off += p.dim();
    }
    Ok(t)
}

/// Right action of the model algebra on `span(e_1..e_n)`:
/// `(e_i, x_1) = e_{i-1}` for `2 <= i <= n-1` and `(e_n, x_j) = e_{n+1-j}` for `2 <= j <= n`.
pub fn minimal_faithful_action(n: usize) -> Result<ModuleAction, ConstructionError> {
    check(n)?;
    let mut m = ModuleAction::new(n, n);
    for i in 2..n {
        m.add(i - 1, 0, i - 2, int(1));
    }
    for j in 2..=n {
        m.add(n - 1, j - 1, n - j, int(1));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use leibniz_core::{is_filiform, is_lie, leibniz_residuals, series_dims, Vector};

    #[test]
    fn model_four() {
        let t = make_n_n1(4).unwrap();
        assert_eq!(t.nonzero_pairs(), 4);
        assert_eq!(t.get(1, 0).unwrap().get(&2), Some(&int(1)));
        assert_eq!(t.get(2, 0).unwrap().get(&3), Some(&int(1)));
        assert_eq!(t.get(0, 1).unwrap().get(&2), Some(&int(-1)));
        assert_eq!(t.get(0, 2).unwrap().get(&3), Some(&int(-1)));
        let x2 = Vector::unit(4, 1);
        let x1 = Vector::unit(4, 0);
        assert_eq!(t.bracket(&x2, &x1).unwrap(), Vector::unit(4, 2));
        assert_eq!(t.bracket(&x1.add(&x2), &x1).unwrap(), Vector::unit(4, 2));
        assert_eq!(series_dims(&t), vec![4, 2, 1, 0]);
    }

    #[test]
    fn q6_pairing() {
        let t = make_q2n(3).unwrap();
        assert_eq!(t.get(1, 4).unwrap().get(&5), Some(&int(1)));
        assert_eq!(t.get(2, 3).unwrap().get(&5), Some(&int(-1)));
        assert!(is_lie(&t));
        assert!(is_filiform(&t));
    }

    #[test]
    fn q8_series_and_residuals() {
        let t = make_q2n(4).unwrap();
        assert!(leibniz_residuals(&t).is_empty());
        assert_eq!(series_dims(&t), vec![8, 6, 5, 4, 3, 2, 1, 0]);
    }

    #[test]
    fn heisenberg() {
        let h = make_heisenberg_h1();
        assert!(is_lie(&h));
        assert_eq!(h.get(1, 2).unwrap().get(&0), Some(&int(1)));
        assert!((0..3).all(|j| h.get(0, j).is_none()));
        assert_eq!(series_dims(&h), vec![3, 1, 0]);
        assert!(is_filiform(&h));
    }

    #[test]
    fn sums() {
        let a = make_n_n1(4).unwrap();
        let b = make_n_n1(3).unwrap();
        let s = direct_sum(&[a.clone(), b]).unwrap();
        assert_eq!(s.dim(), 7);
        assert!(is_lie(&s));
        assert_eq!(series_dims(&s), vec![7, 3, 1, 0]);
        assert_eq!(direct_sum(&[a.clone()]).unwrap(), a);
        assert_eq!(direct_sum(&[]), Err(ConstructionError::EmptySum));
    }

    #[test]
    fn small_n_rejected() {
        assert_eq!(make_n_n1(2), Err(ConstructionError::TooSmall(2)));
        assert_eq!(make_q2n(2), Err(ConstructionError::TooSmall(2)));
        assert!(minimal_faithful_action(1).is_err());
    }

    #[test]
    fn faithful_module_entries() {
        let m = minimal_faithful_action(4).unwrap();
        assert_eq!(m.get(3, 2).unwrap().get(&1), Some(&int(1)));
        assert!(m.get(0, 0).is_none());
        assert_eq!(m.get(3, 3).unwrap().get(&0), Some(&int(1)));
        assert!(m.is_representation(&make_n_n1(4).unwrap()));
        assert!(m.is_faithful());
    }
}
