//! Monomial bases of polynomials of bounded total degree.

use std::collections::HashMap;

/// Monomials `x_1^{t_1} ... x_s^{t_s}` with `sum t_i <= D`, ordered by total degree and
/// then lexicographically with `x_1` largest (so `x_1` precedes `x_2` in degree one).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedPolySpace {
    vars: usize,
    max_degree: usize,
    monomials: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
}

fn compositions(vars: usize, total: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if vars == 1 {
        prefix.push(total as u32);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for first in (0..=total).rev() {
        prefix.push(first as u32);
        compositions(vars - 1, total - first, prefix, out);
        prefix.pop();
    }
}

impl TruncatedPolySpace {
    pub fn new(vars: usize, max_degree: usize) -> Self {
        assert!(vars >= 1, "at least one variable");
        let mut monomials = Vec::new();
        for d in 0..=max_degree {
            compositions(vars, d, &mut Vec::new(), &mut monomials);
        }
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        TruncatedPolySpace { vars, max_degree, monomials, index }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomial(&self, i: usize) -> &[u32] {
        &self.monomials[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.monomials[i].iter().map(|&t| t as usize).sum()
    }

    pub fn index_of(&self, exps: &[u32]) -> Option<usize> {
        self.index.get(exps).copied()
    }

    pub fn label(&self, i: usize) -> String {
        let m = &self.monomials[i];
        if self.vars == 1 {
            return format!("x^{}", m[0]);
        }
        let parts: Vec<String> = m.iter().enumerate().filter(|(_, &t)| t > 0).map(|(v, t)| format!("x{}^{t}", v + 1)).collect();
        if parts.is_empty() {
            "x^0".into()
        } else {
            parts.join("*")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn ordering() {
        let p = TruncatedPolySpace::new(2, 2);
        let got: Vec<Vec<u32>> = (0..p.len()).map(|i| p.monomial(i).to_vec()).collect();
        assert_eq!(got, vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(p.label(4), "x1^1*x2^1");
    }

    proptest::proptest! {
        #[test]
        fn count_is_binomial(s in 1usize..4, d in 0usize..9) {
            let p = TruncatedPolySpace::new(s, d);
            proptest::prop_assert_eq!(p.len(), binom(d + s, s));
            for i in 1..p.len() {
                proptest::prop_assert!(p.degree(i - 1) <= p.degree(i));
                proptest::prop_assert_eq!(p.index_of(p.monomial(i)), Some(i));
            }
        }
    }
}
