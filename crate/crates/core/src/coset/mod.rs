//! Brute-force finite-field verification of the double-coset and
//! unipotent-stabilizer claims that control the unfolding of the
//! paired Eisenstein series.
//!
//! Everything here is exhaustive: subgroups are enumerated by shape
//! scans or breadth-first closure, and double cosets are identified
//! through orbits of one parabolic on the flag variety of the other.
//! The counts come out of several independent routes (order formulas,
//! direct scans, orbit sums) so a convention slip in any one of them
//! shows up as a mismatch.

pub mod gl4;
pub mod gu4;

use thiserror::Error;

/// Errors from the finite-field enumerations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CosetError {
    /// The exhaustive scans are only feasible over tiny fields.
    #[error("field of size {0} is beyond the enumeration guard")]
    FieldTooLarge(u8),
}

/// One double coset: a named representative, the orbit that labels
/// it, and the number of group elements it contains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetClass {
    /// Cycle notation for the representative permutation.
    pub rep: &'static str,
    /// Which orbit on the flag variety labels this coset.
    pub orbit: usize,
    /// Number of group elements in the double coset.
    pub size: u64,
}
