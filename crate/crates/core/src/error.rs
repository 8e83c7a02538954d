use thiserror::Error;

use crate::exact::Rational;
use crate::poly::Basis;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("{field}: {message}")]
    InvalidSpec { field: &'static str, message: String },

    #[error("cannot parse rational {input:?} in field {field}")]
    ParseRational { field: String, input: String },

    #[error("basis mismatch: expected {expected:?}, found {found:?}")]
    BasisMismatch { expected: Basis, found: Basis },

    #[error("operation requires a pure power q(G) = tau*G^l")]
    NotPurePower,

    #[error("operation requires a {expected} system")]
    WrongKind { expected: &'static str },

    #[error("lower parameter #{index} ({param}) reaches zero at term {term}")]
    LowerParameterExhausted {
        index: usize,
        param: Rational,
        term: usize,
    },

    #[error("term {term} does not clear to a polynomial (nonzero remainder)")]
    NonPolynomialTerm { term: usize },

    #[error("normalizing constant vanishes: Pochhammer factor ({param})_{m} is zero")]
    DegenerateNormalization { param: Rational, m: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid complex value ({re}, {im})")]
    NonFinite { re: f64, im: f64 },

    #[error("graph: {0}")]
    Graph(String),

    #[error("unknown preset {0:?}")]
    UnknownPreset(String),
}

pub type Result<T> = std::result::Result<T, Error>;
