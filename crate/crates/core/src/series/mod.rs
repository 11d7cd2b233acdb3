//! Truncated multivariate power series over exact rationals.
//!
//! - A series lives in a fixed, ordered variable list (at most 8 names)
//!   with a fixed total-degree bound (at most 120); every operation stays
//!   inside that window and drops higher-order terms soundly.
//! - Exponent vectors are packed into one `u64` key, a byte per variable
//!   with the first variable in the most significant position, so numeric
//!   key order equals lexicographic order on exponent vectors.
//! - Mixing series with different variable lists or truncation bounds is
//!   rejected with a [`SeriesError`] instead of being silently coerced.
//! - Zero coefficients are never stored, so structural equality of the
//!   coefficient maps is semantic equality of the truncated series.

pub mod recip;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::rat::{pow_int, rat_str, Rat};

/// Largest number of variables a series may carry.
pub const MAX_VARS: usize = 8;

/// Largest supported total-degree truncation bound.
pub const MAX_TRUNC: u32 = 120;

/// Errors raised by series construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    /// Two series with different variable lists were combined.
    #[error("variable lists differ: [{0}] vs [{1}]")]
    VarMismatch(String, String),
    /// Two series with different truncation bounds were combined.
    #[error("truncation bounds differ: {0} vs {1}")]
    DegreeMismatch(u32, u32),
    /// A coefficient beyond the truncation bound was requested.
    #[error("monomial of degree {0} lies beyond the truncation bound {1}")]
    BeyondTruncation(u32, u32),
    /// A monomial or substitution referenced a variable the series lacks.
    #[error("variable {0} is not available here")]
    UnknownVariable(String),
    /// A substitution image had total degree zero, which would make
    /// truncation unsound.
    #[error("substitution image for {0} must have positive total degree and a nonzero scale")]
    NonUnitSubstitution(String),
    /// A reciprocal was requested of something not normalized to constant
    /// term one.
    #[error("constant coefficient must be 1, found {0}")]
    ConstantTermNotOne(String),
}

/// A formal product of named variables with nonnegative exponents.
///
/// Exponent-zero entries are never stored, so equal monomials compare equal
/// structurally.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: BTreeMap<String, u32>,
}

impl Monomial {
    /// The empty product.
    pub fn one() -> Self {
        Self::default()
    }

    /// A single variable to the first power.
    pub fn var(name: &str) -> Self {
        Self::from_pairs(&[(name, 1)])
    }

    /// Builds a monomial from `(name, exponent)` pairs; repeated names add
    /// and zero exponents are dropped.
    pub fn from_pairs(pairs: &[(&str, u32)]) -> Self {
        let mut exps: BTreeMap<String, u32> = BTreeMap::new();
        for &(name, e) in pairs {
            if e > 0 {
                *exps.entry(name.to_string()).or_insert(0) += e;
            }
        }
        Self { exps }
    }

    /// The exponent of `name`, zero when absent.
    pub fn exp(&self, name: &str) -> u32 {
        self.exps.get(name).copied().unwrap_or(0)
    }

    /// Sum of all exponents.
    pub fn total_degree(&self) -> u32 {
        self.exps.values().sum()
    }

    /// Product of two monomials.
    pub fn mul(&self, other: &Self) -> Self {
        let mut exps = self.exps.clone();
        for (name, e) in &other.exps {
            *exps.entry(name.clone()).or_insert(0) += e;
        }
        Self { exps }
    }

    /// The monomial raised to the `k`-th power.
    pub fn pow(&self, k: u32) -> Self {
        if k == 0 {
            return Self::one();
        }
        let exps = self.exps.iter().map(|(n, e)| (n.clone(), e * k)).collect();
        Self { exps }
    }

    /// Iterates `(name, exponent)` pairs in name order.
    pub fn vars(&self) -> impl Iterator<Item = (&str, u32)> {
        self.exps.iter().map(|(n, e)| (n.as_str(), *e))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (name, e) in &self.exps {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A multivariate power series truncated at a fixed total degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MSeries {
    vars: Vec<String>,
    trunc: u32,
    coeffs: BTreeMap<u64, Rat>,
}

/// Image of one variable under a substitution: a scalar times a monomial
/// of positive total degree.
#[derive(Debug, Clone)]
pub struct VarImage {
    pub scale: Rat,
    pub mono: Monomial,
}

impl VarImage {
    /// Image that sends a variable to `mono` with no scalar.
    pub fn plain(mono: Monomial) -> Self {
        Self { scale: crate::rat::rat_int(1), mono }
    }
}

impl MSeries {
    /// The zero series in the given variables and truncation bound.
    ///
    /// Panics when the variable list is empty, has more than
    /// [`MAX_VARS`] entries, repeats a name, or when `trunc` exceeds
    /// [`MAX_TRUNC`]; these are programmer errors, not data errors.
    pub fn new(vars: &[&str], trunc: u32) -> Self {
        assert!(
            !vars.is_empty() && vars.len() <= MAX_VARS,
            "a series needs between 1 and {MAX_VARS} variables"
        );
        assert!(trunc <= MAX_TRUNC, "truncation bound {trunc} exceeds {MAX_TRUNC}");
        let names: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        for (i, a) in names.iter().enumerate() {
            for b in &names[i + 1..] {
                assert!(a != b, "repeated variable name {a}");
            }
        }
        Self { vars: names, trunc, coeffs: BTreeMap::new() }
    }

    /// The constant series 1.
    pub fn one(vars: &[&str], trunc: u32) -> Self {
        let mut s = Self::new(vars, trunc);
        s.coeffs.insert(0, crate::rat::rat_int(1));
        s
    }

    /// The series consisting of a single term.
    pub fn monomial(
        vars: &[&str],
        trunc: u32,
        mono: &Monomial,
        coeff: &Rat,
    ) -> Result<Self, SeriesError> {
        let mut s = Self::new(vars, trunc);
        s.add_term(mono, coeff)?;
        Ok(s)
    }

    /// Builds a series from explicit terms; repeated monomials add.
    pub fn from_terms(
        vars: &[&str],
        trunc: u32,
        terms: &[(Monomial, Rat)],
    ) -> Result<Self, SeriesError> {
        let mut s = Self::new(vars, trunc);
        for (m, c) in terms {
            s.add_term(m, c)?;
        }
        Ok(s)
    }

    /// The ordered variable list.
    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// The total-degree truncation bound.
    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    /// Whether every coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    fn var_index(&self, name: &str) -> Result<usize, SeriesError> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| SeriesError::UnknownVariable(name.to_string()))
    }

    /// Translates a monomial into per-variable exponents plus total degree.
    fn exps_of(&self, mono: &Monomial) -> Result<(Vec<u32>, u32), SeriesError> {
        let mut exps = vec![0u32; self.vars.len()];
        let mut degree = 0u32;
        for (name, e) in mono.vars() {
            exps[self.var_index(name)?] = e;
            degree += e;
        }
        Ok((exps, degree))
    }

    fn pack(exps: &[u32]) -> u64 {
        let mut key = 0u64;
        for &e in exps {
            debug_assert!(e <= 0xFF);
            key = (key << 8) | u64::from(e);
        }
        key
    }

    fn unpack(&self, key: u64) -> Vec<u32> {
        let n = self.vars.len();
        (0..n)
            .map(|i| ((key >> (8 * (n - 1 - i))) & 0xFF) as u32)
            .collect()
    }

    fn key_degree(key: u64) -> u32 {
        key.to_be_bytes().iter().map(|&b| u32::from(b)).sum()
    }

    fn mono_of_key(&self, key: u64) -> Monomial {
        let exps = self.unpack(key);
        let pairs: Vec<(&str, u32)> = self
            .vars
            .iter()
            .zip(exps)
            .map(|(n, e)| (n.as_str(), e))
            .collect();
        Monomial::from_pairs(&pairs)
    }

    fn check_same_shape(&self, other: &Self) -> Result<(), SeriesError> {
        if self.vars != other.vars {
            return Err(SeriesError::VarMismatch(
                self.vars.join(","),
                other.vars.join(","),
            ));
        }
        if self.trunc != other.trunc {
            return Err(SeriesError::DegreeMismatch(self.trunc, other.trunc));
        }
        Ok(())
    }

    /// Adds `coeff * mono` in place. Terms beyond the truncation bound are
    /// dropped, which is the ring semantics of the truncated window.
    pub fn add_term(&mut self, mono: &Monomial, coeff: &Rat) -> Result<(), SeriesError> {
        if coeff.is_zero() {
            return Ok(());
        }
        let (exps, degree) = self.exps_of(mono)?;
        if degree > self.trunc {
            return Ok(());
        }
        let key = Self::pack(&exps);
        let slot = self.coeffs.entry(key).or_insert_with(Rat::zero);
        *slot = &*slot + coeff;
        if slot.is_zero() {
            self.coeffs.remove(&key);
        }
        Ok(())
    }

    /// The coefficient of `mono`, zero when absent.
    ///
    /// Asking for a coefficient beyond the truncation bound is an error:
    /// the truncated object carries no information there.
    pub fn coeff(&self, mono: &Monomial) -> Result<Rat, SeriesError> {
        let (exps, degree) = self.exps_of(mono)?;
        if degree > self.trunc {
            return Err(SeriesError::BeyondTruncation(degree, self.trunc));
        }
        Ok(self
            .coeffs
            .get(&Self::pack(&exps))
            .cloned()
            .unwrap_or_else(Rat::zero))
    }

    /// Sum of two series over the same window.
    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (key, c) in &other.coeffs {
            let slot = out.coeffs.entry(*key).or_insert_with(Rat::zero);
            *slot = &*slot + c;
            if slot.is_zero() {
                out.coeffs.remove(key);
            }
        }
        Ok(out)
    }

    /// Difference of two series over the same window.
    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (key, c) in &other.coeffs {
            let slot = out.coeffs.entry(*key).or_insert_with(Rat::zero);
            *slot = &*slot - c;
            if slot.is_zero() {
                out.coeffs.remove(key);
            }
        }
        Ok(out)
    }

    /// Product of two series over the same window, truncated at the bound.
    ///
    /// Because truncation is by total degree, this product is exactly
    /// associative: dropping a term early never changes a retained
    /// coefficient.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_same_shape(other)?;
        let rhs: Vec<(u64, u32, &Rat)> = other
            .coeffs
            .iter()
            .map(|(k, c)| (*k, Self::key_degree(*k), c))
            .collect();
        let mut acc: BTreeMap<u64, Rat> = BTreeMap::new();
        for (ka, ca) in &self.coeffs {
            let da = Self::key_degree(*ka);
            if da > self.trunc {
                continue;
            }
            for (kb, db, cb) in &rhs {
                if da + db > self.trunc {
                    continue;
                }
                // Per-variable exponents stay at or below the truncation
                // bound (at most 120), so byte-wise addition cannot carry.
                let key = ka + kb;
                let slot = acc.entry(key).or_insert_with(Rat::zero);
                *slot = &*slot + &(ca * *cb);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Self { vars: self.vars.clone(), trunc: self.trunc, coeffs: acc })
    }

    /// The series multiplied by a scalar.
    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::new(
                &self.vars.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
                self.trunc,
            );
        }
        let coeffs = self.coeffs.iter().map(|(k, v)| (*k, v * c)).collect();
        Self { vars: self.vars.clone(), trunc: self.trunc, coeffs }
    }

    /// Substitutes every variable by a scalar-times-monomial image over a
    /// new variable list, truncating at `trunc`.
    ///
    /// Every image must have positive total degree so that the truncated
    /// input determines the truncated output; for the same reason `trunc`
    /// must not exceed this series' bound.
    pub fn substitute(
        &self,
        images: &BTreeMap<String, VarImage>,
        target_vars: &[&str],
        trunc: u32,
    ) -> Result<Self, SeriesError> {
        assert!(
            trunc <= self.trunc,
            "substitution cannot widen the truncation window ({trunc} > {})",
            self.trunc
        );
        for v in &self.vars {
            let img = images
                .get(v)
                .ok_or_else(|| SeriesError::UnknownVariable(v.clone()))?;
            if img.mono.total_degree() == 0 || img.scale.is_zero() {
                return Err(SeriesError::NonUnitSubstitution(v.clone()));
            }
        }
        let mut out = Self::new(target_vars, trunc);
        for (key, c) in &self.coeffs {
            let exps = self.unpack(*key);
            let mut mono = Monomial::one();
            let mut coeff = c.clone();
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let img = &images[&self.vars[i]];
                mono = mono.mul(&img.mono.pow(e));
                coeff = coeff * pow_int(&img.scale, i64::from(e));
            }
            out.add_term(&mono, &coeff)?;
        }
        Ok(out)
    }

    /// Iterates `(monomial, coefficient)` pairs in lexicographic order on
    /// exponent vectors (first variable most significant).
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &Rat)> {
        self.coeffs.iter().map(|(k, c)| (self.mono_of_key(*k), c))
    }

    /// The first monomial (in the iteration order of [`MSeries::terms`])
    /// where two series disagree, with both coefficients.
    pub fn first_difference(
        &self,
        other: &Self,
    ) -> Result<Option<(Monomial, Rat, Rat)>, SeriesError> {
        self.check_same_shape(other)?;
        let mut keys: Vec<u64> = self
            .coeffs
            .keys()
            .chain(other.coeffs.keys())
            .copied()
            .collect();
        keys.sort_unstable();
        keys.dedup();
        for key in keys {
            let a = self.coeffs.get(&key).cloned().unwrap_or_else(Rat::zero);
            let b = other.coeffs.get(&key).cloned().unwrap_or_else(Rat::zero);
            if a != b {
                return Ok(Some((self.mono_of_key(key), a, b)));
            }
        }
        Ok(None)
    }
}

impl fmt::Display for MSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mono, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if mono.total_degree() == 0 {
                write!(f, "{}", rat_str(c))?;
            } else {
                write!(f, "{}*{}", rat_str(c), mono)?;
            }
        }
        Ok(())
    }
}
