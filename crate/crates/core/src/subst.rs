//! The dictionary between complex parameters and series variables.
//!
//! Every identity in this crate is checked after substituting
//! `q^(linear form in the parameters)` for each series variable.  Each
//! Euler factor in the identities is then a signed monomial in the
//! series variables times a power of `q`.  This module records those
//! claims as data and verifies them symbolically:
//!
//! - [`LinearForm`] is exact linear algebra over named parameters.
//! - [`SubstEntry`] pairs a factor's parameter argument with the
//!   monomial it is claimed to become; [`verify_tables`] recomputes the
//!   argument from the monomial and fails loudly on any mismatch.
//! - [`split_audit_rows`] records how the three-variable identity
//!   degenerates onto the two-variable one when the two auxiliary
//!   parameters are tied together.
//! - [`cleared_factor`] turns an entry into the polynomial factor used
//!   on the series side, clearing monomial denominators.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::rat::{pow_int, rat, rat_int, Rat};
use crate::series::{MSeries, Monomial, SeriesError};

/// An affine-linear expression in named parameters with exact rational
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    coeffs: BTreeMap<String, Rat>,
    constant: Rat,
}

impl LinearForm {
    /// Builds a form from `(parameter, coefficient)` pairs plus a
    /// constant term.  Zero coefficients are dropped.
    pub fn new(pairs: &[(&str, Rat)], constant: Rat) -> Self {
        let mut coeffs = BTreeMap::new();
        for (name, c) in pairs {
            if !c.is_zero() {
                let slot = coeffs.entry(name.to_string()).or_insert_with(Rat::zero);
                *slot += c;
                if slot.is_zero() {
                    coeffs.remove(*name);
                }
            }
        }
        LinearForm { coeffs, constant }
    }

    /// The constant form `c`.
    pub fn constant(c: Rat) -> Self {
        LinearForm {
            coeffs: BTreeMap::new(),
            constant: c,
        }
    }

    /// The coefficient of `name`, zero if absent.
    pub fn coeff(&self, name: &str) -> Rat {
        self.coeffs.get(name).cloned().unwrap_or_else(Rat::zero)
    }

    /// The constant term.
    pub fn constant_term(&self) -> &Rat {
        &self.constant
    }

    pub fn add(&self, other: &LinearForm) -> LinearForm {
        let mut out = self.clone();
        for (name, c) in &other.coeffs {
            let slot = out.coeffs.entry(name.clone()).or_insert_with(Rat::zero);
            *slot += c;
            if slot.is_zero() {
                out.coeffs.remove(name);
            }
        }
        out.constant += &other.constant;
        out
    }

    pub fn scale(&self, c: &Rat) -> LinearForm {
        if c.is_zero() {
            return LinearForm::constant(Rat::zero());
        }
        LinearForm {
            coeffs: self.coeffs.iter().map(|(n, v)| (n.clone(), v * c)).collect(),
            constant: &self.constant * c,
        }
    }

    /// Replaces every occurrence of `name` by `replacement`.
    pub fn substitute_var(&self, name: &str, replacement: &LinearForm) -> LinearForm {
        let c = self.coeff(name);
        if c.is_zero() {
            return self.clone();
        }
        let mut out = self.clone();
        out.coeffs.remove(name);
        out.add(&replacement.scale(&c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty() && self.constant.is_zero()
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, c) in &self.coeffs {
            if first {
                if c == &rat_int(1) {
                    write!(f, "{name}")?;
                } else if c == &rat_int(-1) {
                    write!(f, "-{name}")?;
                } else {
                    write!(f, "{c}*{name}")?;
                }
                first = false;
            } else if c > &Rat::zero() {
                if c == &rat_int(1) {
                    write!(f, " + {name}")?;
                } else {
                    write!(f, " + {c}*{name}")?;
                }
            } else {
                let a = -c.clone();
                if a == rat_int(1) {
                    write!(f, " - {name}")?;
                } else {
                    write!(f, " - {a}*{name}")?;
                }
            }
        }
        if first {
            write!(f, "{}", self.constant)?;
        } else if self.constant > Rat::zero() {
            write!(f, " + {}", self.constant)?;
        } else if self.constant < Rat::zero() {
            write!(f, " - {}", -self.constant.clone())?;
        }
        Ok(())
    }
}

fn form(pairs: &[(&str, i64)], constant: Rat) -> LinearForm {
    let owned: Vec<(&str, Rat)> = pairs.iter().map(|&(n, c)| (n, rat_int(c))).collect();
    LinearForm::new(&owned, constant)
}

/// Argument carried by the series variable `X`: `2w + s1 - s2 - 1/2`.
pub fn form_x() -> LinearForm {
    form(&[("w", 2), ("s1", 1), ("s2", -1)], rat(-1, 2))
}

/// Argument carried by the series variable `Y`: `2s1 + 2s2 - 1`.
pub fn form_y() -> LinearForm {
    form(&[("s1", 2), ("s2", 2)], rat_int(-1))
}

/// Argument carried by the series variable `Z`: `2w - s1 + s2 - 1/2`.
pub fn form_z() -> LinearForm {
    form(&[("w", 2), ("s1", -1), ("s2", 1)], rat(-1, 2))
}

/// Argument carried by the series variable `U`: `2w - 1/2`.
pub fn form_u() -> LinearForm {
    form(&[("w", 2)], rat(-1, 2))
}

/// Argument carried by the series variable `V`: `3s - 1`.
pub fn form_v() -> LinearForm {
    form(&[("s", 3)], rat_int(-1))
}

/// One factor of an identity: the parameter argument it is claimed to
/// carry, and the signed monomial it is claimed to equal after the
/// substitution `variable = q^(base form)`.
#[derive(Debug, Clone)]
pub struct SubstEntry {
    /// Stable factor name, used in reports.
    pub name: &'static str,
    /// The argument of the factor as a form in the parameters.
    pub target: LinearForm,
    /// Exponent of the bare `q` in the monomial image.
    pub q_exp: i64,
    /// Series-variable exponents of the monomial image; negative
    /// entries are monomial denominators.
    pub mono: Vec<(&'static str, i64)>,
}

impl SubstEntry {
    fn new(
        name: &'static str,
        target: LinearForm,
        q_exp: i64,
        mono: &[(&'static str, i64)],
    ) -> Self {
        SubstEntry {
            name,
            target,
            q_exp,
            mono: mono.to_vec(),
        }
    }

    /// The cleared polynomial factor for this entry at a specific `q`:
    /// `den - q^q_exp * num` where `num / den` is the monomial image.
    pub fn factor(&self, q: &Rat, vars: &[&str], trunc: u32) -> Result<MSeries, SeriesError> {
        cleared_factor(&self.mono, &pow_int(q, self.q_exp), vars, trunc)
    }
}

/// A substitution table whose claimed monomial fails to reproduce the
/// claimed argument.  Reaching this is an internal inconsistency, not a
/// falsified identity.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("substitution table {table}, entry {name}: monomial induces argument {induced}, table claims {target}")]
pub struct TableError {
    pub table: String,
    pub name: String,
    pub induced: String,
    pub target: String,
}

/// Factor dictionary for the three-variable identity over `X, Y, Z`.
pub fn gl4_entries() -> Vec<SubstEntry> {
    vec![
        SubstEntry::new("zeta-4w", form(&[("w", 4)], rat_int(0)), 1, &[("X", 1), ("Z", 1)]),
        SubstEntry::new(
            "zeta-4s1",
            form(&[("s1", 4)], rat_int(0)),
            1,
            &[("X", 1), ("Y", 1), ("Z", -1)],
        ),
        SubstEntry::new(
            "zeta-4s2",
            form(&[("s2", 4)], rat_int(0)),
            1,
            &[("X", -1), ("Y", 1), ("Z", 1)],
        ),
        SubstEntry::new(
            "zeta-4w-1",
            form(&[("w", 4)], rat_int(-1)),
            0,
            &[("X", 1), ("Z", 1)],
        ),
        SubstEntry::new(
            "zeta-4s1+4s2-2",
            form(&[("s1", 4), ("s2", 4)], rat_int(-2)),
            0,
            &[("Y", 2)],
        ),
        SubstEntry::new("L-std-arg", form_x(), 0, &[("X", 1)]),
        SubstEntry::new("L-wedge2-arg", form_y(), 0, &[("Y", 1)]),
        SubstEntry::new("L-wedge3-arg", form_z(), 0, &[("Z", 1)]),
    ]
}

/// Factor dictionary for the two-variable identity over `U, V`.
pub fn gu_entries() -> Vec<SubstEntry> {
    vec![
        SubstEntry::new("zeta-4w", form(&[("w", 4)], rat_int(0)), 1, &[("U", 2)]),
        SubstEntry::new("zeta-3s", form(&[("s", 3)], rat_int(0)), 1, &[("V", 1)]),
        SubstEntry::new(
            "zetaE-3s-inert",
            form(&[("s", 6)], rat_int(0)),
            2,
            &[("V", 2)],
        ),
        SubstEntry::new(
            "zeta-4w-1",
            form(&[("w", 4)], rat_int(-1)),
            0,
            &[("U", 2)],
        ),
        SubstEntry::new("zeta-6s-2", form(&[("s", 6)], rat_int(-2)), 0, &[("V", 2)]),
        SubstEntry::new("L-std-arg", form_u(), 0, &[("U", 1)]),
        SubstEntry::new("L-wedge2-arg", form_v(), 0, &[("V", 1)]),
    ]
}

fn base_form(var: &str) -> Option<LinearForm> {
    match var {
        "X" => Some(form_x()),
        "Y" => Some(form_y()),
        "Z" => Some(form_z()),
        "U" => Some(form_u()),
        "V" => Some(form_v()),
        _ => None,
    }
}

/// Recomputes each entry's claimed argument from the base forms of
/// its monomial image and rejects the table on the first mismatch.
pub fn verify_table(table: &str, entries: &[SubstEntry]) -> Result<(), TableError> {
    for entry in entries {
        let mut induced = LinearForm::constant(rat_int(entry.q_exp));
        for (var, exp) in &entry.mono {
            let base = base_form(var).unwrap_or_else(|| {
                panic!("substitution table {table} uses unknown variable {var}");
            });
            induced = induced.add(&base.scale(&rat_int(*exp)));
        }
        if induced != entry.target {
            return Err(TableError {
                table: table.to_string(),
                name: entry.name.to_string(),
                induced: induced.to_string(),
                target: entry.target.to_string(),
            });
        }
    }
    Ok(())
}

/// Recomputes every claimed monomial image in both tables from the
/// base forms.  Run before any identity check; a failure means the
/// encoded dictionary itself is wrong.
pub fn verify_tables() -> Result<(), TableError> {
    verify_table("three-variable", &gl4_entries())?;
    verify_table("two-variable", &gu_entries())?;
    Ok(())
}

/// The polynomial `den - scale * num` over `vars`, where the signed
/// exponent list `mono` means `num / den`.  This is the zeta or L
/// factor reciprocal with monomial denominators cleared.
pub fn cleared_factor(
    mono: &[(&str, i64)],
    scale: &Rat,
    vars: &[&str],
    trunc: u32,
) -> Result<MSeries, SeriesError> {
    let mut num = Monomial::one();
    let mut den = Monomial::one();
    for (var, exp) in mono {
        if *exp > 0 {
            num = num.mul(&Monomial::var(var).pow(*exp as u32));
        } else if *exp < 0 {
            den = den.mul(&Monomial::var(var).pow((-exp) as u32));
        }
    }
    let mut out = MSeries::monomial(vars, trunc, &den, &rat_int(1))?;
    out.add_term(&num, &-scale.clone())?;
    Ok(out)
}

/// One row of the split-case audit: a factor of the three-variable
/// identity, its argument, and the argument it must become when the
/// auxiliary parameters are tied by `s1 = s2 = (3/4)s`.
#[derive(Debug, Clone)]
pub struct SplitAuditRow {
    pub factor: &'static str,
    pub gl4: LinearForm,
    pub expected: LinearForm,
}

/// Specializes a form in `w, s1, s2` by `s1 = s2 = (3/4)s`.
pub fn split_specialization(f: &LinearForm) -> LinearForm {
    let tie = form(&[("s", 3)], rat_int(0)).scale(&rat(1, 4));
    f.substitute_var("s1", &tie).substitute_var("s2", &tie)
}

/// The factor-by-factor degeneration of the three-variable identity
/// onto the two-variable split case.
pub fn split_audit_rows() -> Vec<SplitAuditRow> {
    let row = |factor, gl4, expected| SplitAuditRow {
        factor,
        gl4,
        expected,
    };
    vec![
        row("L-std-arg", form_x(), form_u()),
        row("L-wedge2-arg", form_y(), form_v()),
        row("L-wedge3-arg", form_z(), form_u()),
        row(
            "zeta-4w",
            form(&[("w", 4)], rat_int(0)),
            form(&[("w", 4)], rat_int(0)),
        ),
        row(
            "zeta-4s1",
            form(&[("s1", 4)], rat_int(0)),
            form(&[("s", 3)], rat_int(0)),
        ),
        row(
            "zeta-4s2",
            form(&[("s2", 4)], rat_int(0)),
            form(&[("s", 3)], rat_int(0)),
        ),
        row(
            "zeta-4w-1",
            form(&[("w", 4)], rat_int(-1)),
            form(&[("w", 4)], rat_int(-1)),
        ),
        row(
            "zeta-4s1+4s2-2",
            form(&[("s1", 4), ("s2", 4)], rat_int(-2)),
            form(&[("s", 6)], rat_int(-2)),
        ),
    ]
}

/// Runs the split-case audit; returns the name of the first factor
/// whose specialized argument disagrees with the recorded expectation.
pub fn run_split_audit() -> Result<(), String> {
    for row in split_audit_rows() {
        let got = split_specialization(&row.gl4);
        if got != row.expected {
            return Err(format!(
                "factor {}: specializes to {}, expected {}",
                row.factor, got, row.expected
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_self_check() {
        verify_tables().unwrap();
    }

    #[test]
    fn broken_entry_is_caught() {
        let bad = SubstEntry::new("zeta-4w", form(&[("w", 4)], rat_int(0)), 1, &[("X", 2)]);
        let err = verify_table("three-variable", &[bad]).unwrap_err();
        assert_eq!(err.name, "zeta-4w");
        assert!(err.to_string().contains("monomial induces"));
    }

    #[test]
    fn cleared_factor_shapes() {
        let vars = ["X", "Y", "Z"];
        let q = rat(1, 3);

        // X * Y / Z with scale q clears to Z - q X Y.
        let f = cleared_factor(&[("X", 1), ("Y", 1), ("Z", -1)], &q, &vars, 6).unwrap();
        let z = Monomial::var("Z");
        let xy = Monomial::var("X").mul(&Monomial::var("Y"));
        assert_eq!(f.coeff(&z).unwrap(), rat_int(1));
        assert_eq!(f.coeff(&xy).unwrap(), -q.clone());
        assert_eq!(f.term_count(), 2);

        // U^2 with scale -1 clears to 1 + U^2.
        let g = cleared_factor(&[("U", 2)], &rat_int(-1), &["U", "V"], 6).unwrap();
        assert_eq!(g.coeff(&Monomial::one()).unwrap(), rat_int(1));
        assert_eq!(g.coeff(&Monomial::var("U").pow(2)).unwrap(), rat_int(1));
    }

    #[test]
    fn entry_factor_uses_its_q_power() {
        let entries = gu_entries();
        let inert = entries
            .iter()
            .find(|e| e.name == "zetaE-3s-inert")
            .unwrap();
        let f = inert.factor(&rat(1, 5), &["U", "V"], 4).unwrap();
        let v2 = Monomial::var("V").pow(2);
        assert_eq!(f.coeff(&v2).unwrap(), rat(-1, 25));
    }

    /// The diagonal torus element with entries `(abc, bc, c, 1)` carries
    /// two equal weight systems: the integrand route multiplies the four
    /// factors
    /// `|t1/t4| * |t1 t3 / (t2 t4)|^2w * |t1 t2 t4 / t3^3|^s1 * |t2^3 / (t1 t3 t4)|^s2`,
    /// and the series route multiplies the half-sum weight
    /// `|a^3 b^4 c^3|^(1/2)` by `|ac|^(2w - 1/2) |a b^2 / c|^(s1 - 1/4) |b^2 c / a|^(s2 - 1/4)`.
    /// Both must induce the same linear form in the exponent of each of
    /// `|a|, |b|, |c|`.
    #[test]
    fn torus_reparametrization() {
        // Exponents of (a, b, c) in each diagonal entry.
        let t = [[1i64, 1, 1], [0, 1, 1], [0, 0, 1], [0, 0, 0]];
        // (coefficient on each t_i, weight form) per integrand factor.
        let factors: Vec<([i64; 4], LinearForm)> = vec![
            ([1, 0, 0, -1], LinearForm::constant(rat_int(1))),
            ([1, -1, 1, -1], form(&[("w", 2)], rat_int(0))),
            ([1, 1, -3, 1], form(&[("s1", 1)], rat_int(0))),
            ([-1, 3, -1, -1], form(&[("s2", 1)], rat_int(0))),
        ];
        let lhs: Vec<LinearForm> = (0..3)
            .map(|coord| {
                let mut acc = LinearForm::constant(rat_int(0));
                for (te, weight) in &factors {
                    let mult: i64 = (0..4).map(|i| te[i] * t[i][coord]).sum();
                    acc = acc.add(&weight.scale(&rat_int(mult)));
                }
                acc
            })
            .collect();

        // Series route: half-sum exponents (3, 4, 3)/2, then the three
        // shifted weights on the monomials ac, a b^2 / c, b^2 c / a.
        let half = [rat(3, 2), rat(4, 2), rat(3, 2)];
        let mono_exps = [[1i64, 0, 1], [1, 2, -1], [-1, 2, 1]];
        let weights = [
            form(&[("w", 2)], rat(-1, 2)),
            form(&[("s1", 1)], rat(-1, 4)),
            form(&[("s2", 1)], rat(-1, 4)),
        ];
        let rhs: Vec<LinearForm> = (0..3)
            .map(|coord| {
                let mut acc = LinearForm::constant(half[coord].clone());
                for k in 0..3 {
                    acc = acc.add(&weights[k].scale(&rat_int(mono_exps[k][coord])));
                }
                acc
            })
            .collect();

        assert_eq!(lhs, rhs);
        assert_eq!(lhs[0], form(&[("w", 2), ("s1", 1), ("s2", -1)], rat_int(1)));
        assert_eq!(lhs[1], form(&[("s1", 2), ("s2", 2)], rat_int(1)));
        assert_eq!(lhs[2], form(&[("w", 2), ("s1", -1), ("s2", 1)], rat_int(1)));
    }

    /// The per-index weights in the main unramified sum must be exactly
    /// the base forms: index totals `(l + n, l + 2m - n, -l + 2m + n)`
    /// against the three shifted weights give `form_x` per `l`,
    /// `form_y` per `m`, `form_z` per `n`.
    #[test]
    fn sum_index_weights_are_the_base_forms() {
        let w = form(&[("w", 2)], rat(-1, 2));
        let s1 = form(&[("s1", 1)], rat(-1, 4));
        let s2 = form(&[("s2", 1)], rat(-1, 4));
        let per_l = w.add(&s1).add(&s2.scale(&rat_int(-1)));
        let per_m = s1.scale(&rat_int(2)).add(&s2.scale(&rat_int(2)));
        let per_n = w.add(&s1.scale(&rat_int(-1))).add(&s2);
        assert_eq!(per_l, form_x());
        assert_eq!(per_m, form_y());
        assert_eq!(per_n, form_z());
    }

    #[test]
    fn split_audit_passes() {
        run_split_audit().unwrap();
        // Spot-check the tie itself.
        assert_eq!(split_specialization(&form_x()), form_u());
        assert_eq!(split_specialization(&form_y()), form_v());
        assert_eq!(split_specialization(&form_z()), form_u());
    }

    #[test]
    fn linear_form_display() {
        assert_eq!(form_x().to_string(), "s1 - s2 + 2*w - 1/2");
        assert_eq!(LinearForm::constant(rat_int(0)).to_string(), "0");
    }

    #[test]
    fn substitute_var_handles_absent_and_cancel() {
        let f = form(&[("s1", 2), ("w", 1)], rat_int(0));
        let g = f.substitute_var("s2", &LinearForm::constant(rat_int(7)));
        assert_eq!(f, g);
        let h = f.substitute_var("s1", &form(&[("w", -1)], rat(1, 2)).scale(&rat(1, 2)));
        assert_eq!(h, LinearForm::constant(rat(1, 2)));
    }
}
