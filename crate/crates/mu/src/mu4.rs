//! The eight-parameter family of 8-dimensional Leibniz algebras over the model
//! filiform algebra of dimension 4, and the basis changes that move its parameters.

use std::fmt;

use leibniz_core::scalar::{format_scalar, frac, int, one, parse_scalar, zero};
use leibniz_core::{BasisChange, Scalar, SparseVec, StructureTensor, Vector};

use crate::MuError;

pub const MU_NAMES: [&str; 8] = ["alpha1", "alpha2", "alpha3", "alpha4", "beta1", "beta2", "gamma1", "gamma2"];

/// `(alpha1, alpha2, alpha3, alpha4, beta1, beta2, gamma1, gamma2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MuParams(pub [Scalar; 8]);

impl MuParams {
    pub fn zero() -> Self {
        MuParams(std::array::from_fn(|_| zero()))
    }

    pub fn from_ints(v: [i64; 8]) -> Self {
        MuParams(v.map(int))
    }

    /// Comma-separated exact fractions, e.g. `1,0,-1/2,0,0,0,0,1`.
    pub fn parse(s: &str) -> Result<Self, MuError> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 8 {
            return Err(MuError::InvalidParameter(format!("expected 8 comma-separated values, got {}", parts.len())));
        }
        let mut out = MuParams::zero();
        for (slot, p) in out.0.iter_mut().zip(parts) {
            *slot = parse_scalar(p).map_err(|e| MuError::InvalidParameter(e.to_string()))?;
        }
        Ok(out)
    }

    pub fn alpha1(&self) -> &Scalar {
        &self.0[0]
    }
    pub fn alpha2(&self) -> &Scalar {
        &self.0[1]
    }
    pub fn alpha3(&self) -> &Scalar {
        &self.0[2]
    }
    pub fn alpha4(&self) -> &Scalar {
        &self.0[3]
    }
    pub fn beta1(&self) -> &Scalar {
        &self.0[4]
    }
    pub fn beta2(&self) -> &Scalar {
        &self.0[5]
    }
    pub fn gamma1(&self) -> &Scalar {
        &self.0[6]
    }
    pub fn gamma2(&self) -> &Scalar {
        &self.0[7]
    }

    /// Which parameters are nonzero.
    pub fn support(&self) -> [bool; 8] {
        std::array::from_fn(|i| self.0[i] != zero())
    }
}

impl fmt::Display for MuParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_scalar).collect();
        write!(f, "{}", parts.join(","))
    }
}

fn x(i: usize) -> usize {
    i - 1
}

fn e(i: usize) -> usize {
    3 + i
}

/// Basis `x1..x4, e1..e4`. The product `[x2, x4]` carries `+alpha3 e2`, the sign
/// forced by the general boundary formula `[x2, xn] = alpha5 e1 + alpha3 e2`;
/// with `-alpha3 e2` the identity fails at `(x2, x1, x3)` whenever `alpha3 != 0`.
pub fn mu4_table(p: &MuParams) -> StructureTensor {
    let [a1, a2, a3, a4, b1, b2, g1, g2] = p.0.clone();
    let labels = (1..=4).map(|i| format!("x{i}")).chain((1..=4).map(|i| format!("e{i}"))).collect();
    let mut t = StructureTensor::new(labels);
    let mut put = |i: usize, j: usize, terms: Vec<(usize, Scalar)>| {
        for (k, c) in terms {
            t.add(i, j, k, c);
        }
    };
    put(e(2), x(1), vec![(e(1), one())]);
    put(e(3), x(1), vec![(e(2), one())]);
    put(e(4), x(2), vec![(e(3), one())]);
    put(e(4), x(3), vec![(e(2), one())]);
    put(e(4), x(4), vec![(e(1), one())]);
    put(x(1), x(2), vec![(x(3), int(-1))]);
    put(x(1), x(3), vec![(x(4), int(-1))]);
    put(x(1), x(1), vec![(e(3), a1), (e(4), a2.clone())]);
    put(x(2), x(1), vec![(x(3), one()), (e(4), a3.clone())]);
    put(x(1), x(4), vec![(e(1), a4.clone()), (e(2), a2.clone())]);
    put(x(3), x(1), vec![(x(4), one()), (e(3), -a2.clone())]);
    put(x(4), x(1), vec![(e(1), -a4), (e(2), int(-2) * &a2)]);
    put(x(2), x(2), vec![(e(1), b1), (e(2), b2.clone())]);
    put(x(3), x(2), vec![(e(1), g1.clone()), (e(2), g2.clone()), (e(3), int(-2) * &a3)]);
    put(x(4), x(3), vec![(e(1), -a3.clone())]);
    put(x(3), x(3), vec![(e(1), frac(1, 2) * &g2), (e(2), -a3.clone())]);
    put(x(4), x(2), vec![(e(1), frac(1, 2) * &g2), (e(2), -a3.clone())]);
    put(x(2), x(3), vec![(e(1), b2 - g1), (e(2), -g2.clone()), (e(3), a3.clone())]);
    put(x(2), x(4), vec![(e(1), frac(-3, 2) * &g2), (e(2), a3)]);
    t
}

/// `x1' = P1 x1 + ...`, `x2' = M2 x2 + M3 x3 + M4 x4 + ...`, `e4' = T4 e4 + ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuTransform {
    pub p1: Scalar,
    pub m2: Scalar,
    pub m3: Scalar,
    pub m4: Scalar,
    pub t4: Scalar,
}

impl MuTransform {
    pub fn new(p1: Scalar, m2: Scalar, m3: Scalar, m4: Scalar, t4: Scalar) -> Result<Self, MuError> {
        if p1 == zero() || m2 == zero() || t4 == zero() {
            return Err(MuError::DegenerateTransform);
        }
        Ok(MuTransform { p1, m2, m3, m4, t4 })
    }

    pub fn identity() -> Self {
        MuTransform { p1: one(), m2: one(), m3: zero(), m4: zero(), t4: one() }
    }

    /// Diagonal part only.
    pub fn torus(p1: Scalar, m2: Scalar, t4: Scalar) -> Result<Self, MuError> {
        Self::new(p1, m2, zero(), zero(), t4)
    }

    /// `M3^2 - 2 M2 M4`, the only combination of `M3, M4` the parameters see.
    pub fn shear(&self) -> Scalar {
        &self.m3 * &self.m3 - int(2) * &self.m2 * &self.m4
    }

    /// Acting by `self` and then by `next`.
    pub fn then(&self, next: &MuTransform) -> MuTransform {
        let (a, m, m3, m4, t) = (&self.p1, &self.m2, &self.m3, &self.m4, &self.t4);
        MuTransform {
            p1: a * &next.p1,
            m2: m * &next.m2,
            m3: &next.m2 * m3 + &next.m3 * a * m,
            m4: &next.m2 * m4 + &next.m3 * a * m3 + &next.m4 * a * a * m,
            t4: t * &next.t4,
        }
    }

    pub fn inverse(&self) -> MuTransform {
        let (a, m, t) = (&self.p1, &self.m2, &self.t4);
        let p1 = a.recip();
        let m2 = m.recip();
        let m3 = -&self.m3 / (a * m * m);
        let m4 = -(&m2 * &self.m4 + &m3 * a * &self.m3) / (a * a * m);
        MuTransform { p1, m2, m3, m4, t4: t.recip() }
    }

    /// Same parameter action? (Transforms with equal torus part and shear act identically.)
    pub fn acts_like(&self, other: &MuTransform) -> bool {
        self.p1 == other.p1 && self.m2 == other.m2 && self.t4 == other.t4 && self.shear() == other.shear()
    }
}

/// The primed parameters after the basis change `g`.
pub fn mu4_transform_action(p: &MuParams, g: &MuTransform) -> MuParams {
    let [a1, a2, a3, a4, b1, b2, g1, g2] = &p.0;
    let (pp, m, t) = (&g.p1, &g.m2, &g.t4);
    let w = g.shear();
    MuParams([
        a1 * pp * pp / (t * m),
        a2 * pp * pp / t,
        a3 * pp * m / t,
        a4 * pp / t,
        (b1 * m * m + g2 * &w / int(2)) / (t * pp * pp * m),
        b2 * m / (t * pp),
        (g1 * m * m - a3 * &w) / (t * pp * m),
        g2 * m / t,
    ])
}

/// Coefficients of the basis change that never move the parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuExtras {
    pub p3: Scalar,
    pub p4: Scalar,
    pub t1: Scalar,
    pub q1: Scalar,
    pub n1: Scalar,
}

impl Default for MuExtras {
    fn default() -> Self {
        MuExtras { p3: zero(), p4: zero(), t1: zero(), q1: zero(), n1: zero() }
    }
}

fn sv(terms: Vec<(usize, Scalar)>) -> SparseVec {
    let mut out = SparseVec::new();
    for (k, c) in terms {
        leibniz_core::linalg::add_entry(&mut out, k, c);
    }
    out
}

fn neg(v: &SparseVec) -> SparseVec {
    v.iter().map(|(k, c)| (*k, -c.clone())).collect()
}

/// The full 8x8 basis change of `mu4_table(p)` determined by `g` and `extras`.
/// The remaining coefficients are forced by requiring the new table to be
/// `mu4_table(mu4_transform_action(p, g))`.
pub fn full_basis_change(p: &MuParams, g: &MuTransform, extras: &MuExtras) -> Result<BasisChange, MuError> {
    let [a1, a2, a3, _, _, b2, _, g2] = &p.0;
    let (p1, m2, m3, m4, t4) = (&g.p1, &g.m2, &g.m3, &g.m4, &g.t4);
    let MuExtras { p3, p4, t1, q1, n1 } = extras;
    let two = int(2);
    let t2 = -(t4 * p4) / p1;
    let t3 = -(t4 * p3) / p1;
    let n4 = a3 * m3;
    let q4 = a2 * p1 * m3 / m2;
    let q3 = (a3 * p3 * p3 * m2 + a1 * p1 * p1 * m3 - a2 * p1 * p3 * m3) / (p1 * m2);
    let q2 = (&two * a2 * t1 * p1 * p1 * m2 - g2 * t4 * p3 * p3 * m2 + &two * a3 * t4 * p3 * p4 * m2
        - &two * a2 * t4 * p1 * p4 * m3
        + &two * a1 * t4 * p1 * p1 * m4)
        / (&two * t4 * p1 * m2);
    let n3 = -(a3 * p4 * m2 * m2 - a3 * p3 * m2 * m3 + a2 * p1 * m3 * m3 - a2 * p1 * m2 * m4) / (p1 * m2);
    let n2 = (a3 * t1 * p1 * m2 * m2 - b2 * t4 * p3 * m2 * m2 + g2 * t4 * p4 * m2 * m2 - g2 * t4 * p3 * m2 * m3
        + a3 * t4 * p3 * m2 * m4
        - a2 * t4 * p1 * m3 * m4)
        / (t4 * p1 * m2);

    let t = mu4_table(p);
    let nx1 = sv(vec![(x(1), p1.clone()), (x(3), p3.clone()), (x(4), p4.clone()), (e(1), q1.clone()), (e(2), q2), (e(3), q3), (e(4), q4)]);
    let nx2 = sv(vec![(x(2), m2.clone()), (x(3), m3.clone()), (x(4), m4.clone()), (e(1), n1.clone()), (e(2), n2), (e(3), n3), (e(4), n4)]);
    let ne4 = sv(vec![(e(1), t1.clone()), (e(2), t2), (e(3), t3), (e(4), t4.clone())]);
    let nx3 = neg(&t.bracket_sparse(&nx1, &nx2));
    let nx4 = neg(&t.bracket_sparse(&nx1, &nx3));
    let ne3 = t.bracket_sparse(&ne4, &nx2);
    let ne2 = t.bracket_sparse(&ne4, &nx3);
    let ne1 = t.bracket_sparse(&ne4, &nx4);
    let cols: Vec<Vector> = [nx1, nx2, nx3, nx4, ne1, ne2, ne3, ne4].iter().map(|v| Vector::from_sparse(8, v)).collect();
    BasisChange::from_columns(&cols).map_err(|_| MuError::DegenerateTransform)
}
