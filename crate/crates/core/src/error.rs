//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("the zero polynomial has no roots to isolate")]
    ZeroPolynomial,

    #[error("polynomial is not squarefree; take the squarefree part first")]
    NotSquarefree,

    #[error("defining polynomial must be monic with integer coefficients")]
    NotMonicInteger,

    #[error("defining polynomial must have degree at least 2, got {0}")]
    DegreeTooSmall(usize),

    #[error("defining polynomial is reducible over Q: {witness}")]
    Reducible { witness: String },

    #[error("coordinate vector has length {got}, field has degree {expected}")]
    CoordLength { expected: usize, got: usize },

    #[error("division by zero in the field")]
    DivisionByZero,

    #[error("element is not a unit of Z[theta]: {0}")]
    NotAUnit(String),

    #[error("operation requires a unit-verified subgroup")]
    NotUnitVerified,

    #[error("operation requires a totally-positive-verified subgroup")]
    NotTotallyPositiveVerified,

    #[error("field has no complex embeddings (t = 0)")]
    NoComplexEmbeddings,

    #[error("field has no real embeddings (s = 0)")]
    NoRealEmbeddings,

    #[error("complex embedding pair index {index} out of range 1..={t}")]
    ComplexIndexOutOfRange { index: usize, t: usize },

    #[error("embedding index {index} out of range 1..={count}")]
    EmbeddingIndexOutOfRange { index: usize, count: usize },

    #[error("invalid precision: working {working} exceeds cap {cap}")]
    InvalidPrecision { working: u32, cap: u32 },

    #[error("invalid input for the OT construction: {check} failed: {detail}")]
    InvalidOtInput { check: String, detail: String },

    #[error("malformed number literal: {0}")]
    BadNumberLiteral(String),
}
