//! Exact verification of weak Hopf algebras, their Yetter-Drinfeld modules,
//! weak entwining structures and the Drinfeld double.
//!
//! All algebras are finite-dimensional and given by structure constants over
//! `Q` or a prime field `F_p`. Every identity is checked exactly on basis
//! elements; failures carry the first counterexample.

pub mod double;
pub mod duality;
pub mod entwining;
pub mod exactlin;
pub mod report;
pub mod weakbialg;
pub mod weakhopf;
pub mod yetterdrinfeld;

pub use report::{Check, Report, Witness};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("field error: {0}")]
    Field(String),
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("malformed groupoid: {0}")]
    MalformedGroupoid(String),
    #[error("grading supported on a non-loop morphism: {0}")]
    BadSupport(String),
    #[error("variant mismatch: {0}")]
    VariantMismatch(String),
    #[error("map is not well defined: {0}")]
    NotWellDefined(String),
    #[error("antipode candidate is not bijective")]
    NotBijective,
    #[error("invalid input: {0}")]
    Invalid(String),
}
