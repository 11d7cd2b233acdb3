//! Exact character computations for the two reductive groups in play.
//!
//! - [`a3`]: characters of rank-three type A (the 4x4 general linear
//!   group), evaluated from cached weight-multiplicity tables, with an
//!   independent alternant-quotient route for cross-checking.
//! - [`c2`]: characters of the rank-two symplectic group, with a numeric
//!   Weyl-quotient route that refuses degenerate points and a total
//!   symbolic route obtained by exact Laurent division.
//! - [`lr`]: tensor-product decompositions of the characters used on the
//!   two sides of the series identities, both as a closed-form index set
//!   and as a brute-force tableau count.

pub mod a3;
pub mod c2;
pub mod lr;

use thiserror::Error;

/// Errors raised by torus-point validation and character evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharError {
    /// The coordinates do not describe a valid torus point.
    #[error("invalid torus point: {0}")]
    InvalidPoint(String),
    /// The Weyl-quotient denominator vanishes, so the numeric character
    /// route is undefined at this point.
    #[error("alternant denominator vanishes: {0}")]
    DegeneratePoint(String),
}
