//! Exact verification inside the group algebra of GL_n(F_q) over Q(ζ_p).
//!
//! Everything here is brute force and guarded by the size limits in
//! [`crate::guard`].

mod algebra;
mod cyclotomic;
mod matrix;

pub use algebra::{
    algebra_mul, basis_check, commutativity_check, double_coset_reps, e_mu, levi_embedding_check, psi_mu_eval,
    psi_mu_exponent, structure_constants, t_v, GroupAlgebraElement, HeckeBasis, StructureTable,
};
pub use cyclotomic::Cyclotomic;
pub use matrix::GlMatrix;

use thiserror::Error;

use crate::guard::GuardExceeded;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("not an element of U: {0}")]
    NotUnipotent(String),
    #[error("incompatible operands: {0}")]
    Mismatch(String),
    #[error("counterexample: {0}")]
    Counterexample(String),
    #[error(transparent)]
    Guard(#[from] GuardExceeded),
}
