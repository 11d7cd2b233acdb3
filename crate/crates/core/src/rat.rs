//! Exact rational scalars shared by every module in the crate.
//!
//! - [`Rat`] is an arbitrary-precision rational; all arithmetic on it is
//!   exact, and nothing in this crate ever rounds.
//! - The constructors panic on zero denominators, which are programmer
//!   errors rather than data errors.
//! - [`rat_str`] renders the canonical `"num/den"` form used in reports,
//!   with the denominator always present and positive.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational number. Every scalar computation in this crate stays in
/// this type.
pub type Rat = BigRational;

/// Builds the rational `n / d`.
///
/// Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer rational `n`.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Raises `base` to an integer power by repeated squaring.
///
/// Negative exponents invert the result; panics when asked to invert zero.
pub fn pow_int(base: &Rat, exp: i64) -> Rat {
    if exp == 0 {
        return Rat::one();
    }
    let mut acc = Rat::one();
    let mut sq = base.clone();
    let mut e = exp.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * &sq;
        }
        e >>= 1;
        if e > 0 {
            sq = &sq * &sq;
        }
    }
    if exp < 0 {
        assert!(!acc.is_zero(), "zero cannot be raised to a negative power");
        acc.recip()
    } else {
        acc
    }
}

/// Canonical `"num/den"` rendering used in JSON reports and diagnostics.
pub fn rat_str(x: &Rat) -> String {
    format!("{}/{}", x.numer(), x.denom())
}
