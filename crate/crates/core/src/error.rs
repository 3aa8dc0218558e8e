use thiserror::Error;

use crate::Q;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("coroot of isotropic root {0} is not supported")]
    IsotropicCoroot(String),

    #[error("weight is not typical: (λ+ρ, β) = 0 for β ∈ {{{}}}", .vanishing.join(", "))]
    NotTypical { vanishing: Vec<String> },

    #[error("weight is not dominant integral: label {index} = {value}")]
    NotDominant { index: usize, value: Q },

    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },

    #[error("dimension formula produced {0}, not a positive integer")]
    NonIntegralDimension(Q),

    #[error("operation requires {expected}, got {got}")]
    UnsupportedAlgebra { expected: &'static str, got: String },

    #[error("weight is outside the desk class: {0}")]
    OutsideDeskClass(String),

    #[error("coordinate {0} is not bounded by any inequality or cap")]
    Unbounded(usize),

    #[error("multi-exponent {0} does not lie in {1}")]
    NotInPolytope(String, String),

    #[error("invariant violated: {0}")]
    Invariant(String),
}
