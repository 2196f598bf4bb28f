//! Coxeter systems given by a Coxeter matrix.
//!
//! Elements are interned per system and identified by their matrix in the
//! geometric representation, which is faithful.

mod faithful;
mod matrix;
mod rep;
mod system;

pub use faithful::{faithfulness_checks, FaithfulnessReport};
pub use matrix::CoxeterMatrix;
pub use rep::{RepKind, ReflectionRep};
pub use system::{CoxeterSystem, Element, Side};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoxeterError {
    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("2cos(pi/{m}) is not available in Q(2cos(pi/{field_order}))")]
    UnsupportedField { m: u32, field_order: u32 },
    #[error("elements belong to different Coxeter systems")]
    MixedSystems,
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("generator index {0} out of range")]
    GeneratorOutOfRange(usize),
}
