//! Univariate polynomials with constant term one and their reciprocal
//! power-series expansions.
//!
//! - [`RecipPoly`] models the denominators of local factors: products of
//!   `1 - (eigenvalue) * T` kept as exact coefficient vectors.
//! - [`series_from_recip`] expands `1 / p(T)` by the standard linear
//!   recurrence and maps `T^k` to `scale^k * image^k` inside a target
//!   multivariate window, so local factors become series in the global
//!   variables in one step.
//! - [`polynomial_series`] embeds `p(T)` itself the same way, for the
//!   finite correction factors that multiply a reciprocal.

use std::fmt;

use num_traits::{One, Zero};

use super::{MSeries, Monomial, SeriesError};
use crate::rat::{pow_int, rat_str, Rat};

/// A univariate polynomial `1 + c_1 T + ... + c_d T^d` in a named variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecipPoly {
    var: String,
    coeffs: Vec<Rat>,
}

impl RecipPoly {
    /// Wraps an explicit coefficient vector, index `i` holding the
    /// coefficient of `T^i`. The constant coefficient must be one.
    pub fn new(var: &str, coeffs: Vec<Rat>) -> Result<Self, SeriesError> {
        match coeffs.first() {
            Some(c0) if c0.is_one() => {}
            Some(c0) => return Err(SeriesError::ConstantTermNotOne(rat_str(c0))),
            None => return Err(SeriesError::ConstantTermNotOne("nothing".to_string())),
        }
        let mut coeffs = coeffs;
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Ok(Self { var: var.to_string(), coeffs })
    }

    /// The constant polynomial 1.
    pub fn one(var: &str) -> Self {
        Self { var: var.to_string(), coeffs: vec![Rat::one()] }
    }

    /// The product of `1 - e * T` over the given eigenvalues.
    pub fn from_eigenvalues(var: &str, eigenvalues: &[Rat]) -> Self {
        let mut coeffs = vec![Rat::one()];
        for e in eigenvalues {
            // Multiply the running product by (1 - e T).
            let mut next = vec![Rat::zero(); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i] = &next[i] + c;
                next[i + 1] = &next[i + 1] - &(c * e);
            }
            coeffs = next;
        }
        Self { var: var.to_string(), coeffs }
    }

    /// The variable name.
    pub fn var(&self) -> &str {
        &self.var
    }

    /// Coefficients, constant term first.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Degree of the polynomial (zero for the constant 1).
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Product of two polynomials in the same variable.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        if self.var != other.var {
            return Err(SeriesError::VarMismatch(self.var.clone(), other.var.clone()));
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Self::new(&self.var, coeffs)
    }

    /// The polynomial with `T` replaced by `T^2`.
    pub fn subst_square(&self) -> Self {
        let mut coeffs = vec![Rat::zero(); 2 * self.coeffs.len() - 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * i] = c.clone();
        }
        Self { var: self.var.clone(), coeffs }
    }

    /// Evaluates the polynomial at a rational point.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Coefficients `b_0, b_1, ...` of `1 / p(T)` up to and including
    /// `T^len`, via `b_k = -(c_1 b_{k-1} + ... + c_d b_{k-d})`.
    fn recip_coeffs(&self, len: usize) -> Vec<Rat> {
        let mut b = Vec::with_capacity(len + 1);
        b.push(Rat::one());
        for k in 1..=len {
            let mut acc = Rat::zero();
            for i in 1..self.coeffs.len().min(k + 1) {
                acc = &acc + &(&self.coeffs[i] * &b[k - i]);
            }
            b.push(-acc);
        }
        b
    }
}

impl fmt::Display for RecipPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() && i > 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", rat_str(c))?,
                1 => write!(f, "{}*{}", rat_str(c), self.var)?,
                _ => write!(f, "{}*{}^{}", rat_str(c), self.var, i)?,
            }
        }
        Ok(())
    }
}

/// Expands `1 / p(T)` and maps `T^k` to `scale^k * image^k` inside the
/// window given by `vars` and `trunc`.
pub fn series_from_recip(
    p: &RecipPoly,
    image: &Monomial,
    scale: &Rat,
    vars: &[&str],
    trunc: u32,
) -> Result<MSeries, SeriesError> {
    embed(p, image, scale, vars, trunc, true)
}

/// Embeds `p(T)` itself (not its reciprocal) the same way.
pub fn polynomial_series(
    p: &RecipPoly,
    image: &Monomial,
    scale: &Rat,
    vars: &[&str],
    trunc: u32,
) -> Result<MSeries, SeriesError> {
    embed(p, image, scale, vars, trunc, false)
}

fn embed(
    p: &RecipPoly,
    image: &Monomial,
    scale: &Rat,
    vars: &[&str],
    trunc: u32,
    invert: bool,
) -> Result<MSeries, SeriesError> {
    let d = image.total_degree();
    if d == 0 || scale.is_zero() {
        return Err(SeriesError::NonUnitSubstitution(p.var.clone()));
    }
    let max_k = (trunc / d) as usize;
    let coeffs: Vec<Rat> = if invert {
        p.recip_coeffs(max_k)
    } else {
        p.coeffs.iter().take(max_k + 1).cloned().collect()
    };
    let mut out = MSeries::new(vars, trunc);
    for (k, c) in coeffs.iter().enumerate() {
        let term = c * &pow_int(scale, k as i64);
        out.add_term(&image.pow(k as u32), &term)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn eigenvalue_product_expands_correctly() {
        let p = RecipPoly::from_eigenvalues("T", &[rat_int(1), rat_int(2)]);
        assert_eq!(p.coeffs(), &[rat_int(1), rat_int(-3), rat_int(2)]);
        let q = RecipPoly::from_eigenvalues("T", &[rat_int(1)])
            .mul(&RecipPoly::from_eigenvalues("T", &[rat_int(2)]))
            .unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn constant_term_must_be_one() {
        let err = RecipPoly::new("T", vec![rat_int(2)]).unwrap_err();
        assert_eq!(err, SeriesError::ConstantTermNotOne("2/1".to_string()));
    }

    #[test]
    fn reciprocal_of_quadratic_matches_hand_expansion() {
        // 1 / ((1 - T)(1 - 2T)) = 1 + 3T + 7T^2 + ... with b_k = 2^(k+1) - 1.
        let p = RecipPoly::from_eigenvalues("T", &[rat_int(1), rat_int(2)]);
        let s = series_from_recip(&p, &Monomial::var("X"), &rat_int(1), &["X"], 2).unwrap();
        let expect = MSeries::from_terms(
            &["X"],
            2,
            &[
                (Monomial::one(), rat_int(1)),
                (Monomial::var("X"), rat_int(3)),
                (Monomial::var("X").pow(2), rat_int(7)),
            ],
        )
        .unwrap();
        assert_eq!(s, expect);
    }

    #[test]
    fn reciprocal_matches_independent_geometric_expansion() {
        // Independent route: with p = 1 - (3T - 2T^2), the reciprocal is
        // the geometric sum over powers of (3T - 2T^2). Comparing the two
        // expansions exercises the linear recurrence against plain series
        // arithmetic.
        let p = RecipPoly::from_eigenvalues("T", &[rat_int(1), rat_int(2)]);
        let trunc = 8;
        let s = series_from_recip(&p, &Monomial::var("X"), &rat_int(1), &["X"], trunc).unwrap();
        let base = MSeries::from_terms(
            &["X"],
            trunc,
            &[
                (Monomial::var("X"), rat_int(3)),
                (Monomial::var("X").pow(2), rat_int(-2)),
            ],
        )
        .unwrap();
        let mut geom = MSeries::one(&["X"], trunc);
        let mut power = MSeries::one(&["X"], trunc);
        for _ in 1..=trunc {
            power = power.mul(&base).unwrap();
            geom = geom.add(&power).unwrap();
        }
        assert_eq!(s, geom);
    }

    #[test]
    fn reciprocal_times_polynomial_is_one() {
        let p = RecipPoly::from_eigenvalues(
            "T",
            &[rat(1, 2), rat_int(-3), rat(2, 5), rat_int(1)],
        );
        let trunc = 10;
        let inv = series_from_recip(&p, &Monomial::var("X"), &rat(2, 3), &["X"], trunc).unwrap();
        let poly = polynomial_series(&p, &Monomial::var("X"), &rat(2, 3), &["X"], trunc).unwrap();
        assert_eq!(inv.mul(&poly).unwrap(), MSeries::one(&["X"], trunc));
    }

    #[test]
    fn squaring_the_variable_matches_coefficient_spreading() {
        let p = RecipPoly::from_eigenvalues("T", &[rat(3, 7)]);
        let sq = p.subst_square();
        assert_eq!(sq.coeffs(), &[rat_int(1), rat_int(0), rat(-3, 7)]);
        // (pq)(T^2) = p(T^2) q(T^2).
        let q = RecipPoly::from_eigenvalues("T", &[rat_int(2), rat(-1, 3)]);
        let lhs = p.mul(&q).unwrap().subst_square();
        let rhs = p.subst_square().mul(&q.subst_square()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluation_uses_exact_arithmetic() {
        let p = RecipPoly::from_eigenvalues("T", &[rat_int(1), rat_int(2)]);
        // p(1/3) = (1 - 1/3)(1 - 2/3) = 2/9.
        assert_eq!(p.eval(&rat(1, 3)), rat(2, 9));
    }

    #[test]
    fn scaled_geometric_series() {
        // 1 / (1 - T) at T -> q X gives sum of q^k X^k.
        let p = RecipPoly::from_eigenvalues("T", &[rat_int(1)]);
        let q = rat(1, 3);
        let s = series_from_recip(&p, &Monomial::var("X"), &q, &["X"], 4).unwrap();
        for k in 0..=4u32 {
            assert_eq!(
                s.coeff(&Monomial::var("X").pow(k)).unwrap(),
                crate::rat::pow_int(&q, i64::from(k))
            );
        }
    }
}
