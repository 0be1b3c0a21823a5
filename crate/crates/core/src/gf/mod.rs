//! Arithmetic in F_q and F_q[X], factorization, and the label set of monic
//! irreducibles with nonzero constant term.

mod factor;
mod field;
mod poly;

pub use factor::{
    enumerate_irreducibles, enumerate_monic, enumerate_monic_units, factorize, is_irreducible, Factorization,
};
pub use field::{is_prime, FieldSpec, FqElement, MAX_FIELD_ORDER};
pub use poly::PolyFq;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroExtensionDegree,
    #[error("field of order {p}^{k} exceeds the supported maximum {MAX_FIELD_ORDER}")]
    FieldTooLarge { p: u32, k: u32 },
    #[error("element index {index} does not belong to a field of order {q}")]
    ForeignElement { index: u32, q: u32 },
    #[error("invalid coordinate vector {0:?}")]
    BadCoordinates(Vec<u32>),
    #[error("inverse of zero")]
    InverseOfZero,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("the zero polynomial has no factorization")]
    ZeroPolynomial,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("bad argument: {0}")]
    BadArgument(String),
}
