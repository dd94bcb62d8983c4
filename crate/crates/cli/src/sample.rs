//! Seeded random inputs for the property runs.

use leibniz_core::linalg::solve_sparse;
use leibniz_core::scalar::{frac, zero};
use leibniz_core::{Matrix, Scalar};
use leibniz_mu::{constraint_matrix, representative_families, sparse_row, GeneralParams, MuParams, MuTransform};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 20_240_601;

/// Independent stream per sample index, so any single sample can be replayed.
pub fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(index);
    r
}

pub fn scalar(rng: &mut impl Rng) -> Scalar {
    frac(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

pub fn nonzero_scalar(rng: &mut impl Rng) -> Scalar {
    let n = rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 };
    frac(n, rng.gen_range(1..=5))
}

pub fn mu_params(rng: &mut impl Rng) -> MuParams {
    MuParams(std::array::from_fn(|_| scalar(rng)))
}

pub fn mu_transform(rng: &mut impl Rng) -> MuTransform {
    MuTransform::new(nonzero_scalar(rng), nonzero_scalar(rng), scalar(rng), scalar(rng), nonzero_scalar(rng))
        .expect("nonzero diagonal")
}

/// A random representative (free slots filled at random) moved by a random transform.
/// Returns the family index, the representative and the moved tuple.
pub fn orbit_point(rng: &mut impl Rng) -> (usize, MuParams, MuParams) {
    let fams = representative_families();
    let f = rng.gen_range(0..fams.len());
    let free: Vec<Scalar> = fams[f].free_slots().iter().map(|_| scalar(rng)).collect();
    let rep = fams[f].instantiate(&free);
    let moved = leibniz_mu::mu4_transform_action(&rep, &mu_transform(rng));
    (f, rep, moved)
}

pub fn general_params(n: usize, rng: &mut impl Rng) -> GeneralParams {
    let v: Vec<Scalar> = (0..GeneralParams::count(n)).map(|_| scalar(rng)).collect();
    GeneralParams::from_flat(n, &v).expect("length matches")
}

/// Random alphas and betas, then gammas solved so every restriction holds.
/// Falls back to a random point of the solution space if the gammas alone cannot absorb the alphas and betas.
pub fn constraint_solution(n: usize, c: &[Vec<Scalar>], rng: &mut impl Rng) -> GeneralParams {
    let count = GeneralParams::count(n);
    let off = GeneralParams::gamma_offset(n);
    let mut v: Vec<Scalar> = (0..count).map(|_| scalar(rng)).collect();
    let rows: Vec<_> = c
        .iter()
        .map(|row| {
            let value: Scalar = row.iter().zip(&v).map(|(a, b)| a * b).sum();
            (sparse_row(&row[off..]), -value)
        })
        .collect();
    match solve_sparse(&rows, count - off) {
        Some(delta) => {
            for (i, d) in delta.into_iter().enumerate() {
                v[off + i] += d;
            }
        }
        None => {
            let basis = Matrix::from_rows(c.to_vec()).nullspace();
            v = vec![zero(); count];
            for b in basis {
                let k = scalar(rng);
                for (slot, x) in v.iter_mut().zip(&b.coords) {
                    *slot += &k * x;
                }
            }
        }
    }
    GeneralParams::from_flat(n, &v).expect("length matches")
}

/// Convenience for callers without a precomputed matrix.
pub fn constraint_solution_fresh(n: usize, rng: &mut impl Rng) -> GeneralParams {
    constraint_solution(n, &constraint_matrix(n), rng)
}
