//! Algebraic toric sets parameterized by graphs over finite fields, with the
//! parameters of their evaluation codes and binomial generators of their ideals.

pub mod catalog;
pub mod cli;
pub mod code;
pub mod field;
pub mod generators;
pub mod graph;
pub mod groebner;
pub mod ideal;
pub mod limits;
pub mod linalg;
pub mod monomial;
pub mod suite;
pub mod toric;

use thiserror::Error;

pub use field::{FieldElem, FieldSpec};
pub use graph::Graph;
pub use ideal::Binomial;
pub use limits::Limits;
pub use monomial::ExponentVector;
pub use toric::ToricSet;

/// Any error surfaced by the library, with a CLI exit code.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] field::FieldError),
    #[error(transparent)]
    Graph(#[from] graph::GraphError),
    #[error(transparent)]
    Toric(#[from] toric::ToricError),
    #[error(transparent)]
    Code(#[from] code::CodeError),
    #[error(transparent)]
    Ideal(#[from] ideal::IdealError),
    #[error(transparent)]
    Generators(#[from] generators::GeneratorError),
    #[error(transparent)]
    Groebner(#[from] groebner::GroebnerError),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Verification(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// 2 for bad input, 3 for an exceeded cap, 4 for a failed verification.
    pub fn exit_code(&self) -> i32 {
        use code::CodeError as C;
        use ideal::IdealError as I;
        match self {
            Error::Toric(toric::ToricError::EnumerationTooLarge { .. })
            | Error::Code(C::MatrixTooLarge { .. } | C::SearchTooLarge { .. })
            | Error::Ideal(I::MatrixTooLarge { .. } | I::Code(C::MatrixTooLarge { .. } | C::SearchTooLarge { .. }))
            | Error::Groebner(groebner::GroebnerError::TooLarge { .. }) => 3,
            Error::Ideal(I::GeneratorDoesNotVanish { .. } | I::NotGenerating)
            | Error::Code(C::NonMonotone { .. })
            | Error::Verification(_) => 4,
            _ => 2,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
