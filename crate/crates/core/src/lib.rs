//! Exact structure-constant algebras over the rationals.
//!
//! Tables are sparse maps `(i, j) -> [(k, c)]`; every computation is exact.

pub mod basis;
pub mod error;
pub mod identities;
pub mod ideal;
pub mod json;
pub mod linalg;
pub mod module;
pub mod scalar;
pub mod series;
pub mod tensor;

pub use basis::{apply_basis_change, BasisChange};
pub use error::AlgebraError;
pub use identities::{is_leibniz, is_lie, leibniz_residuals, Residual};
pub use ideal::{induced_module_action, is_ideal, quotient, squares_ideal, Quotient};
pub use json::{tensor_from_json, tensor_to_json};
pub use linalg::{Matrix, SparseVec, Subspace, Vector};
pub use module::ModuleAction;
pub use scalar::{format_scalar, parse_scalar, Scalar};
pub use series::{
    grading_derivation, grading_eigenspaces, is_filiform, is_naturally_graded_iso, is_nilpotent, lower_central_series,
    natural_gradation, series_dims, GradedAlgebra,
};
pub use tensor::StructureTensor;
