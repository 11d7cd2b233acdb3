//! Exact evaluations of the one-variable local integrals that collapse
//! the unipotent integration in the unramified computation.
//!
//! - [`shell_integral_oracle`] gives the mass an oscillating additive
//!   character leaves on each valuation shell, relative to a conductor
//!   bound `vb`: full shells contribute `q^-k (1 - q)`, the first shell
//!   past the bound contributes the cancellation term `-q^-vb`, and
//!   deeper shells vanish.
//! - [`inner_integral_closed`] is the closed form
//!   `(1 - q x)(1 - x^(m+1)) / (1 - x)` that the shell masses telescope
//!   to; [`inner_integral_shell_sum`] recomputes it term by term so the
//!   two routes check each other.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::rat::{pow_int, Rat};

/// Errors from the local-integral evaluations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PadicError {
    /// Shell indices start at 1; index 0 is the units, not a shell.
    #[error("shell index must be at least 1, got {0}")]
    InvalidShellIndex(u32),
    /// The closed form has a removable singularity at `x = 1` that this
    /// implementation does not take limits through.
    #[error("closed form is undefined at x = 1")]
    PoleAtOne,
}

/// Character mass on the valuation shell `k >= 1` for conductor bound
/// `vb`.
pub fn shell_integral_oracle(vb: u32, k: u32, q: &Rat) -> Result<Rat, PadicError> {
    if k == 0 {
        return Err(PadicError::InvalidShellIndex(k));
    }
    let value = if k <= vb {
        pow_int(q, -i64::from(k)) * (Rat::one() - q)
    } else if k == vb + 1 {
        -pow_int(q, -i64::from(vb))
    } else {
        Rat::zero()
    };
    Ok(value)
}

/// Closed form `(1 - q x)(1 - x^(m+1)) / (1 - x)` of the inner integral.
pub fn inner_integral_closed(m: u32, x: &Rat, q: &Rat) -> Result<Rat, PadicError> {
    if x.is_one() {
        return Err(PadicError::PoleAtOne);
    }
    let num = (Rat::one() - q * x) * (Rat::one() - pow_int(x, i64::from(m) + 1));
    Ok(num / (Rat::one() - x))
}

/// The same integral assembled from shell masses:
/// `1 + sum over k of (q x)^k * shell(m, k, q)`.
pub fn inner_integral_shell_sum(m: u32, x: &Rat, q: &Rat) -> Result<Rat, PadicError> {
    let qx = q * x;
    let mut acc = Rat::one();
    for k in 1..=m + 1 {
        let shell = shell_integral_oracle(m, k, q)?;
        acc = acc + pow_int(&qx, i64::from(k)) * shell;
    }
    Ok(acc)
}
