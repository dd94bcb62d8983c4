//! Orbits of the eight-parameter family under basis changes, and the list of
//! pairwise non-isomorphic representatives.
//!
//! The parameters see a transform only through the torus part `(P1, M2, T4)` and
//! the shear `w = M3^2 - 2 M2 M4`. The shear is used once to move a tuple onto a
//! slice (kill `gamma1` if `alpha3 != 0`, else kill `beta1` if `gamma2 != 0`);
//! on the slice only the torus acts, each parameter by a character `P1^a M2^m T4^t`.

use leibniz_core::scalar::{int, one, pow_i, rational_root, zero};
use leibniz_core::Scalar;

use crate::mu4::{mu4_transform_action, MuParams, MuTransform};

/// Exponents of `(P1, M2, T4)` by which each parameter is multiplied.
pub const CHARACTERS: [[i64; 3]; 8] = [
    [2, -1, -1],
    [2, 0, -1],
    [1, 1, -1],
    [1, 0, -1],
    [-2, 1, -1],
    [-1, 1, -1],
    [-1, 1, -1],
    [0, 1, -1],
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    Zero,
    One,
    Free,
}

use Slot::{Free as F, One as O, Zero as Z};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    pub slots: [Slot; 8],
    /// Not in the published list; covers orbits the list misses.
    pub supplementary: bool,
}

const PUBLISHED: [[Slot; 8]; 69] = [
    [F, F, O, O, F, F, Z, O],
    [F, O, O, Z, F, F, Z, O],
    [O, Z, O, Z, F, F, Z, O],
    [F, O, O, O, F, F, Z, Z],
    [O, Z, O, O, F, F, Z, Z],
    [Z, Z, O, O, O, F, Z, Z],
    [Z, Z, O, O, Z, O, Z, Z],
    [Z, Z, O, O, Z, Z, Z, Z],
    [O, O, O, Z, F, F, Z, Z],
    [Z, O, O, Z, O, F, Z, Z],
    [Z, O, O, Z, Z, O, Z, Z],
    [Z, O, O, Z, Z, Z, Z, Z],
    [O, Z, O, Z, O, F, Z, Z],
    [O, Z, O, Z, Z, O, Z, Z],
    [Z, Z, O, Z, O, F, Z, Z],
    [Z, Z, O, Z, Z, O, Z, Z],
    [Z, Z, O, Z, Z, Z, Z, Z],
    [F, O, Z, O, Z, F, F, O],
    [F, Z, Z, O, Z, O, F, O],
    [F, Z, Z, O, Z, Z, O, O],
    [F, Z, Z, O, Z, Z, Z, O],
    [F, O, Z, Z, Z, O, F, O],
    [F, O, Z, Z, Z, Z, O, O],
    [F, O, Z, Z, Z, Z, Z, O],
    [O, Z, Z, Z, Z, O, F, O],
    [O, Z, Z, Z, Z, Z, O, O],
    [O, Z, Z, Z, Z, Z, Z, O],
    [Z, Z, Z, Z, Z, O, F, O],
    [Z, Z, Z, Z, Z, Z, O, O],
    [Z, Z, Z, Z, Z, Z, Z, O],
    [O, O, Z, O, F, F, F, Z],
    [Z, O, Z, O, O, F, F, Z],
    [Z, O, Z, O, Z, O, F, Z],
    [Z, O, Z, O, Z, Z, O, Z],
    [Z, O, Z, O, Z, Z, Z, Z],
    [O, Z, Z, O, O, F, F, Z],
    [O, Z, Z, O, Z, O, F, Z],
    [O, Z, Z, O, Z, Z, O, Z],
    [O, Z, Z, O, Z, Z, Z, Z],
    [Z, Z, Z, O, O, O, F, Z],
    [Z, Z, Z, O, O, Z, O, Z],
    [Z, Z, Z, O, O, Z, Z, Z],
    [Z, Z, Z, O, Z, O, O, Z],
    [Z, Z, Z, O, Z, O, Z, Z],
    [Z, Z, Z, O, Z, Z, O, Z],
    [Z, Z, Z, O, Z, Z, Z, Z],
    [O, O, Z, Z, O, F, F, Z],
    [O, O, Z, Z, Z, O, F, Z],
    [O, O, Z, Z, Z, Z, O, Z],
    [O, O, Z, Z, Z, Z, Z, Z],
    [O, Z, Z, Z, O, O, F, Z],
    [O, Z, Z, Z, O, Z, O, Z],
    [O, Z, Z, Z, O, Z, Z, Z],
    [O, Z, Z, Z, Z, O, O, Z],
    [O, Z, Z, Z, Z, O, Z, Z],
    [O, Z, Z, Z, Z, Z, O, Z],
    [O, Z, Z, Z, Z, Z, Z, Z],
    [Z, O, Z, Z, O, O, F, Z],
    [Z, O, Z, Z, O, Z, O, Z],
    [Z, O, Z, Z, O, Z, Z, Z],
    [Z, O, Z, Z, Z, O, F, Z],
    [Z, O, Z, Z, Z, Z, O, Z],
    [Z, O, Z, Z, Z, Z, Z, Z],
    [Z, Z, Z, Z, O, O, F, Z],
    [Z, Z, Z, Z, Z, O, F, Z],
    [Z, Z, Z, Z, O, Z, O, Z],
    [Z, Z, Z, Z, O, Z, Z, Z],
    [Z, Z, Z, Z, Z, Z, O, Z],
    [Z, Z, Z, Z, Z, Z, Z, Z],
];

const SUPPLEMENTARY: [[Slot; 8]; 2] = [[Z, Z, O, Z, F, F, Z, O], [O, Z, O, Z, Z, Z, Z, Z]];

/// The published representatives followed by the supplementary ones.
pub fn representative_families() -> Vec<Family> {
    PUBLISHED
        .iter()
        .map(|s| Family { slots: *s, supplementary: false })
        .chain(SUPPLEMENTARY.iter().map(|s| Family { slots: *s, supplementary: true }))
        .collect()
}

pub const PUBLISHED_COUNT: usize = 69;

impl Family {
    pub fn matches(&self, support: &[bool; 8]) -> bool {
        self.slots.iter().zip(support).all(|(s, &nz)| match s {
            Slot::Zero => !nz,
            Slot::One => nz,
            Slot::Free => true,
        })
    }

    pub fn free_slots(&self) -> Vec<usize> {
        (0..8).filter(|&i| self.slots[i] == Slot::Free).collect()
    }

    /// Fills the free slots in order.
    pub fn instantiate(&self, free: &[Scalar]) -> MuParams {
        let mut it = free.iter();
        MuParams(std::array::from_fn(|i| match self.slots[i] {
            Slot::Zero => zero(),
            Slot::One => one(),
            Slot::Free => it.next().cloned().unwrap_or_else(zero),
        }))
    }

    /// `mu(...)` with free slots shown by name.
    pub fn label(&self) -> String {
        const SHORT: [&str; 8] = ["a1", "a2", "a3", "a4", "b1", "b2", "g1", "g2"];
        let parts: Vec<&str> = self
            .slots
            .iter()
            .enumerate()
            .map(|(i, s)| match s {
                Slot::Zero => "0",
                Slot::One => "1",
                Slot::Free => SHORT[i],
            })
            .collect();
        format!("mu({})", parts.join(","))
    }

    /// Index of the lattice spanned by the characters of the slots fixed to 1
    /// inside the lattice of all characters it could reach; above 1 means some
    /// rational tuples in this family only normalize after adjoining a root.
    pub fn root_index(&self) -> i64 {
        let rows: Vec<[i64; 3]> = (0..8).filter(|&i| self.slots[i] == Slot::One).map(|i| CHARACTERS[i]).collect();
        if rows.is_empty() {
            return 1;
        }
        let d = diagonalize(&rows);
        d.diag.iter().filter(|&&x| x != 0).product()
    }
}

/// Families whose slot pattern accepts `support`.
pub fn matching_families(support: &[bool; 8]) -> Vec<usize> {
    representative_families().iter().enumerate().filter(|(_, f)| f.matches(support)).map(|(i, _)| i).collect()
}

/// Moves `p` onto the slice and returns the slice point with the shear used.
pub fn slice(p: &MuParams) -> (MuParams, MuTransform) {
    let w = if p.alpha3() != &zero() {
        p.gamma1() / p.alpha3()
    } else if p.gamma2() != &zero() {
        -int(2) * p.beta1() / p.gamma2()
    } else {
        zero()
    };
    let g = MuTransform { p1: one(), m2: one(), m3: zero(), m4: -w / int(2), t4: one() };
    (mu4_transform_action(p, &g), g)
}

/// Zero-pattern of the slice point; constant on orbits.
pub fn signature(p: &MuParams) -> [bool; 8] {
    slice(p).0.support()
}

/// `U A V = diag`, with `U`, `V` unimodular and nonnegative diagonal.
struct Diagonal {
    u: Vec<Vec<i64>>,
    v: Vec<Vec<i64>>,
    diag: Vec<i64>,
}

fn diagonalize(a: &[[i64; 3]]) -> Diagonal {
    let r = a.len();
    let c = 3;
    let mut s: Vec<Vec<i64>> = a.iter().map(|row| row.to_vec()).collect();
    let mut u: Vec<Vec<i64>> = (0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect()).collect();
    let mut v: Vec<Vec<i64>> = (0..c).map(|i| (0..c).map(|j| i64::from(i == j)).collect()).collect();
    let mut diag = Vec::new();
    for t in 0..r.min(c) {
        loop {
            let pivot = (t..r)
                .flat_map(|i| (t..c).map(move |j| (i, j)))
                .filter(|&(i, j)| s[i][j] != 0)
                .min_by_key(|&(i, j)| s[i][j].abs());
            let Some((pi, pj)) = pivot else { break };
            s.swap(t, pi);
            u.swap(t, pi);
            for row in s.iter_mut() {
                row.swap(t, pj);
            }
            for row in v.iter_mut() {
                row.swap(t, pj);
            }
            let mut clean = true;
            for i in t + 1..r {
                let q = s[i][t] / s[t][t];
                if q != 0 {
                    for j in 0..c {
                        s[i][j] -= q * s[t][j];
                    }
                    for j in 0..r {
                        u[i][j] -= q * u[t][j];
                    }
                }
                clean &= s[i][t] == 0;
            }
            for j in t + 1..c {
                let q = s[t][j] / s[t][t];
                if q != 0 {
                    for i in 0..r {
                        s[i][j] -= q * s[i][t];
                    }
                    for row in v.iter_mut() {
                        row[j] -= q * row[t];
                    }
                }
                clean &= s[t][j] == 0;
            }
            if clean {
                break;
            }
        }
        if s[t][t] < 0 {
            for j in 0..c {
                s[t][j] = -s[t][j];
            }
            for j in 0..r {
                u[t][j] = -u[t][j];
            }
        }
        diag.push(s[t][t]);
    }
    Diagonal { u, v, diag }
}

/// Result of solving `P1^a M2^m T4^t = c` for a set of characters over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TorusSolution {
    Solved([Scalar; 3]),
    /// Solvable after adjoining a root, not over the rationals.
    NeedsRoot,
    /// No solution over any field.
    Inconsistent,
}

fn solve_exact(eqs: &[([i64; 3], Scalar)]) -> TorusSolution {
    if eqs.is_empty() {
        return TorusSolution::Solved([one(), one(), one()]);
    }
    let rows: Vec<[i64; 3]> = eqs.iter().map(|(a, _)| *a).collect();
    let d = diagonalize(&rows);
    let transformed = |r: usize| -> Scalar {
        eqs.iter().zip(&d.u[r]).fold(one(), |acc, ((_, c), &e)| acc * pow_i(c, e))
    };
    let degree = |r: usize| d.diag.get(r).copied().unwrap_or(0);
    if (0..eqs.len()).any(|r| degree(r) == 0 && transformed(r) != one()) {
        return TorusSolution::Inconsistent;
    }
    let mut y = [one(), one(), one()];
    for r in (0..eqs.len()).filter(|&r| degree(r) != 0) {
        match rational_root(&transformed(r), degree(r) as u32) {
            Some(root) => y[r] = root,
            None => return TorusSolution::NeedsRoot,
        }
    }
    // u_j = prod_l y_l^{V_jl}
    let u: [Scalar; 3] = std::array::from_fn(|j| (0..3).fold(one(), |acc, l| acc * pow_i(&y[l], d.v[j][l])));
    debug_assert!(eqs.iter().all(|(a, c)| &character(a, &u) == c));
    TorusSolution::Solved(u)
}

fn character(a: &[i64; 3], u: &[Scalar; 3]) -> Scalar {
    (0..3).fold(one(), |acc, j| acc * pow_i(&u[j], a[j]))
}

/// Solves with `P1 = 1` added when that stays solvable; remaining free
/// directions are set to 1.
pub fn solve_torus(eqs: &[([i64; 3], Scalar)]) -> TorusSolution {
    let mut pinned = eqs.to_vec();
    pinned.push(([1, 0, 0], one()));
    match solve_exact(&pinned) {
        TorusSolution::Solved(u) => TorusSolution::Solved(u),
        _ => solve_exact(eqs),
    }
}

fn torus_transform(u: [Scalar; 3]) -> MuTransform {
    let [p1, m2, t4] = u;
    MuTransform { p1, m2, m3: zero(), m4: zero(), t4 }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoVerdict {
    Isomorphic(MuTransform),
    /// Isomorphic only after adjoining a root to the rationals.
    NeedsRoot,
    NotIsomorphic,
}

pub fn mu4_iso_verdict(p: &MuParams, q: &MuParams) -> IsoVerdict {
    let (sp, gp) = slice(p);
    let (sq, gq) = slice(q);
    if sp.support() != sq.support() {
        return IsoVerdict::NotIsomorphic;
    }
    let eqs: Vec<([i64; 3], Scalar)> =
        (0..8).filter(|&i| sp.0[i] != zero()).map(|i| (CHARACTERS[i], &sq.0[i] / &sp.0[i])).collect();
    match solve_torus(&eqs) {
        TorusSolution::Solved(u) => IsoVerdict::Isomorphic(gp.then(&torus_transform(u)).then(&gq.inverse())),
        TorusSolution::NeedsRoot => IsoVerdict::NeedsRoot,
        TorusSolution::Inconsistent => IsoVerdict::NotIsomorphic,
    }
}

/// A transform taking `p` to `q` over the rationals, if one exists.
pub fn mu4_is_isomorphic(p: &MuParams, q: &MuParams) -> Option<MuTransform> {
    match mu4_iso_verdict(p, q) {
        IsoVerdict::Isomorphic(g) => Some(g),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Normalized {
    Exact { family: usize, representative: MuParams, witness: MuTransform },
    /// The slots fixed to 1 cannot all be reached over the rationals.
    NeedsRoot { family: usize, slice_point: MuParams, slice_witness: MuTransform },
}

impl Normalized {
    pub fn family(&self) -> usize {
        match self {
            Normalized::Exact { family, .. } | Normalized::NeedsRoot { family, .. } => *family,
        }
    }
}

pub fn mu4_normalize(p: &MuParams) -> Normalized {
    let (s, g) = slice(p);
    let support = s.support();
    let fams = representative_families();
    let matches = matching_families(&support);
    assert_eq!(matches.len(), 1, "slice support {support:?} matches {matches:?}");
    let family = matches[0];
    let eqs: Vec<([i64; 3], Scalar)> =
        (0..8).filter(|&i| fams[family].slots[i] == Slot::One).map(|i| (CHARACTERS[i], s.0[i].recip())).collect();
    match solve_torus(&eqs) {
        TorusSolution::Solved(u) => {
            let witness = g.then(&torus_transform(u));
            let representative = mu4_transform_action(p, &witness);
            Normalized::Exact { family, representative, witness }
        }
        _ => Normalized::NeedsRoot { family, slice_point: s, slice_witness: g },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use leibniz_core::scalar::frac;

    #[test]
    fn table_sizes() {
        let f = representative_families();
        assert_eq!(f.len(), PUBLISHED_COUNT + 2);
        assert_eq!(f.iter().filter(|x| !x.supplementary).count(), 69);
        assert_eq!(f[0].label(), "mu(a1,a2,1,1,b1,b2,0,1)");
    }

    #[test]
    fn every_slice_pattern_has_one_family() {
        for bits in 0u32..256 {
            let support: [bool; 8] = std::array::from_fn(|i| bits >> i & 1 == 1);
            // slice conditions
            if (support[2] && support[6]) || (!support[2] && support[7] && support[4]) {
                continue;
            }
            assert_eq!(matching_families(&support).len(), 1, "{support:?}");
        }
    }

    #[test]
    fn diagonalization_is_exact() {
        let rows = vec![[2, -1, -1], [1, 1, -1], [0, 1, -1], [-2, 1, -1]];
        let d = diagonalize(&rows);
        for r in 0..rows.len() {
            for c in 0..3 {
                let mut acc = 0;
                for i in 0..rows.len() {
                    for j in 0..3 {
                        acc += d.u[r][i] * rows[i][j] * d.v[j][c];
                    }
                }
                let want = if r == c { d.diag[r] } else { 0 };
                assert_eq!(acc, want);
            }
        }
    }

    #[test]
    fn scaling_example() {
        let p = MuParams::from_ints([2, 0, 0, 0, 0, 0, 0, 0]);
        let q = MuParams::from_ints([1, 0, 0, 0, 0, 0, 0, 0]);
        let g = mu4_is_isomorphic(&p, &q).unwrap();
        assert_eq!(&g.p1 * &g.p1 / (&g.t4 * &g.m2), frac(1, 2));
        assert_eq!(g.p1, one());
        assert_eq!(mu4_transform_action(&p, &g), q);
    }

    #[test]
    fn gamma2_separates() {
        let p = MuParams::from_ints([0, 0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(mu4_is_isomorphic(&p, &MuParams::zero()), None);
        assert_eq!(mu4_is_isomorphic(&p, &p).unwrap(), MuTransform::identity());
    }

    #[test]
    fn cube_root_branch_is_flagged() {
        // alpha2, alpha3, beta1 fixed to 1; the torus reaches them only through cubes
        let p = MuParams::from_ints([0, 1, 1, 0, 2, 0, 0, 0]);
        assert!(matches!(mu4_normalize(&p), Normalized::NeedsRoot { .. }));
        let q = MuParams::from_ints([0, 1, 1, 0, 8, 0, 0, 0]);
        assert!(matches!(mu4_normalize(&q), Normalized::Exact { .. }));
    }

    #[test]
    fn generic_alpha3_alpha4_gamma2_lands_in_first_family() {
        let p = MuParams([int(3), frac(1, 2), int(-2), int(5), int(1), int(7), int(4), frac(2, 3)]);
        let Normalized::Exact { family, representative, witness } = mu4_normalize(&p) else { panic!() };
        assert_eq!(family, 0);
        assert_eq!(mu4_transform_action(&p, &witness), representative);
        assert!(representative_families()[0].matches(&representative.support()));
        assert_eq!(&representative.0[2..4], &[one(), one()]);
        assert_eq!(representative.0[7], one());
        assert_eq!(mu4_normalize(&MuParams::zero()).family(), 68);
    }
}
