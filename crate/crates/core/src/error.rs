use thiserror::Error;

use crate::scalar::FieldDescriptor;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("mixed-field operands: {0} and {1}")]
    FieldMismatch(FieldDescriptor, FieldDescriptor),
    #[error("sign undefined over {0}")]
    SignUndefined(FieldDescriptor),
    #[error("the zero polynomial has no dope matrix")]
    ZeroPolynomial,
    #[error("nodes must be pairwise distinct (entries {0} and {1} coincide)")]
    DuplicateNodes(usize, usize),
    #[error("matrix is not dope: {0}")]
    NotDope(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("{0}")]
    Domain(String),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("flat count exceeded the cap of {cap}")]
    FlatCapExceeded { cap: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
