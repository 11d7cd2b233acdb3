//! Exact-arithmetic engine for verifying a family of Rankin-Selberg
//! local identities.
//!
//! - Every computation is exact: arbitrary-precision rationals, truncated
//!   multivariate power series, and small finite fields. No floating point
//!   appears anywhere in the crate.
//! - Each identity check builds its two sides by independent routes and
//!   compares them coefficient by coefficient, reporting the first
//!   discrepant monomial on failure.
//! - Checks implement a common trait and register themselves by name in
//!   [`suite::registry`], so front ends can select them dynamically.

pub mod chars;
pub mod coset;
pub mod lgroup;
pub mod padic;
pub mod rat;
pub mod series;
pub mod subst;
pub mod suite;
pub mod verify;
