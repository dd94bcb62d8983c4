//! Leibniz algebras `L` with `L/I` the model filiform algebra and `I` its minimal
//! faithful module: the general `2n`-dimensional family with its linear
//! restrictions, and the complete dimension-8 family with its classification.

mod classify;
mod general;
mod mu4;
mod q;

pub use classify::{
    matching_families, mu4_is_isomorphic, mu4_iso_verdict, mu4_normalize, representative_families, signature, slice,
    solve_torus, Family, IsoVerdict, Normalized, Slot, TorusSolution, CHARACTERS, PUBLISHED_COUNT,
};
pub use general::{
    bruteforce_constraint_oracle, constraint_matrix, constraint_residuals, general_table, general_table_unchecked,
    oracle_matrix, sparse_row, GeneralParams,
};
pub use mu4::{full_basis_change, mu4_table, mu4_transform_action, MuExtras, MuParams, MuTransform, MU_NAMES};
pub use q::q_coeff;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MuError {
    #[error("index out of range: {0}")]
    IndexRange(String),
    #[error("n = {0}: use the dedicated eight-parameter table")]
    UseMu4(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("transform needs P1 M2 T4 != 0")]
    DegenerateTransform,
}
