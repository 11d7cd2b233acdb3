//! The seeded identity checks and their shared comparison plumbing.
//!
//! Each check is a pure function of explicit parameters plus a
//! [`Comparator`], and reports the first located discrepancy when two
//! sides disagree.  The comparator also owns the fault-injection
//! switch: a tampered comparator perturbs its left input before
//! comparing, which proves every comparison path can actually fail and
//! produces a genuine located discrepancy when it does.

pub mod gl4;
pub mod gu22;
pub mod sample;

use std::fmt;

use num_traits::One;

use crate::rat::{rat_int, rat_str, Rat};
use crate::series::recip::RecipPoly;
use crate::series::{MSeries, Monomial};
use crate::subst::LinearForm;

/// The first point where two sides of an identity disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    /// A monomial, coefficient index, or named quantity.
    pub location: String,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "at {}: left {} != right {}",
            self.location, self.lhs, self.rhs
        )
    }
}

/// Exact equality comparisons with an optional deliberate fault.
#[derive(Debug, Clone, Copy)]
pub struct Comparator {
    tamper: bool,
}

impl Comparator {
    /// The honest comparator used in normal runs.
    pub fn strict() -> Self {
        Comparator { tamper: false }
    }

    /// A comparator that perturbs its left input before comparing, to
    /// demonstrate the failure path end to end.
    pub fn tampered() -> Self {
        Comparator { tamper: true }
    }

    /// Whether this comparator injects a fault.
    pub fn is_tampered(&self) -> bool {
        self.tamper
    }

    /// Coefficient-wise series equality; reports the first differing
    /// monomial in lexicographic order.
    pub fn series(
        &self,
        context: &str,
        lhs: &MSeries,
        rhs: &MSeries,
    ) -> Result<(), Discrepancy> {
        let effective;
        let lhs = if self.tamper {
            let mut t = lhs.clone();
            t.add_term(&Monomial::one(), &Rat::one())
                .expect("constant term is always inside the window");
            effective = t;
            &effective
        } else {
            lhs
        };
        match lhs
            .first_difference(rhs)
            .expect("check constructed both sides over the same window")
        {
            None => Ok(()),
            Some((mono, a, b)) => Err(Discrepancy {
                location: format!("{context}: coefficient of {mono}"),
                lhs: rat_str(&a),
                rhs: rat_str(&b),
            }),
        }
    }

    /// Exact scalar equality.
    pub fn rats(&self, context: &str, lhs: &Rat, rhs: &Rat) -> Result<(), Discrepancy> {
        let lhs = if self.tamper {
            lhs + rat_int(1)
        } else {
            lhs.clone()
        };
        if &lhs == rhs {
            Ok(())
        } else {
            Err(Discrepancy {
                location: context.to_string(),
                lhs: rat_str(&lhs),
                rhs: rat_str(rhs),
            })
        }
    }

    /// Exact integer equality, for orders and cardinalities.
    pub fn counts(&self, context: &str, lhs: u64, rhs: u64) -> Result<(), Discrepancy> {
        let lhs = if self.tamper { lhs + 1 } else { lhs };
        if lhs == rhs {
            Ok(())
        } else {
            Err(Discrepancy {
                location: context.to_string(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            })
        }
    }

    /// Element-wise equality of two ordered lists (sorted multisets);
    /// reports a cardinality mismatch or the first differing index.
    pub fn items<T: PartialEq + fmt::Display>(
        &self,
        context: &str,
        lhs: &[T],
        rhs: &[T],
    ) -> Result<(), Discrepancy> {
        let lhs_len = if self.tamper {
            lhs.len() + 1
        } else {
            lhs.len()
        };
        if lhs_len != rhs.len() {
            return Err(Discrepancy {
                location: format!("{context}: cardinality"),
                lhs: lhs_len.to_string(),
                rhs: rhs.len().to_string(),
            });
        }
        for (i, (a, b)) in lhs.iter().zip(rhs).enumerate() {
            if a != b {
                return Err(Discrepancy {
                    location: format!("{context}: entry {i}"),
                    lhs: a.to_string(),
                    rhs: b.to_string(),
                });
            }
        }
        Ok(())
    }

    /// Coefficient-wise polynomial equality.
    pub fn polys(
        &self,
        context: &str,
        lhs: &RecipPoly,
        rhs: &RecipPoly,
    ) -> Result<(), Discrepancy> {
        let mut a: Vec<Rat> = lhs.coeffs().to_vec();
        if self.tamper {
            a[0] += rat_int(1);
        }
        let b = rhs.coeffs();
        let len = a.len().max(b.len());
        for k in 0..len {
            let ak = a.get(k).cloned().unwrap_or_else(|| rat_int(0));
            let bk = b.get(k).cloned().unwrap_or_else(|| rat_int(0));
            if ak != bk {
                return Err(Discrepancy {
                    location: format!("{context}: coefficient of {}^{k}", lhs.var()),
                    lhs: rat_str(&ak),
                    rhs: rat_str(&bk),
                });
            }
        }
        Ok(())
    }

    /// Equality of affine-linear parameter expressions.
    pub fn forms(
        &self,
        context: &str,
        lhs: &LinearForm,
        rhs: &LinearForm,
    ) -> Result<(), Discrepancy> {
        let lhs = if self.tamper {
            lhs.add(&LinearForm::constant(rat_int(1)))
        } else {
            lhs.clone()
        };
        if &lhs == rhs {
            Ok(())
        } else {
            Err(Discrepancy {
                location: context.to_string(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn strict_series_comparison_locates_first_monomial() {
        let vars = ["X", "Y"];
        let x = Monomial::var("X");
        let y = Monomial::var("Y");
        let mut a = MSeries::one(&vars, 4);
        a.add_term(&x, &rat_int(2)).unwrap();
        a.add_term(&y, &rat_int(5)).unwrap();
        let mut b = MSeries::one(&vars, 4);
        b.add_term(&x, &rat_int(2)).unwrap();
        b.add_term(&y, &rat_int(7)).unwrap();

        let cmp = Comparator::strict();
        cmp.series("probe", &a, &a.clone()).unwrap();
        let d = cmp.series("probe", &a, &b).unwrap_err();
        assert_eq!(d.location, "probe: coefficient of Y");
        assert_eq!(d.lhs, "5/1");
        assert_eq!(d.rhs, "7/1");
    }

    #[test]
    fn tampered_comparators_always_fail() {
        let cmp = Comparator::tampered();
        let vars = ["X"];
        let s = MSeries::one(&vars, 3);
        assert!(cmp.series("probe", &s, &s).is_err());
        assert!(cmp.rats("probe", &rat(1, 2), &rat(1, 2)).is_err());
        assert!(cmp.counts("probe", 7, 7).is_err());
        assert!(cmp.items("probe", &[1, 2], &[1, 2]).is_err());
        let p = RecipPoly::from_eigenvalues("T", &[rat_int(2)]);
        assert!(cmp.polys("probe", &p, &p).is_err());
        let f = LinearForm::constant(rat(1, 4));
        assert!(cmp.forms("probe", &f, &f).is_err());
    }

    #[test]
    fn item_comparison_reports_cardinality_then_entries() {
        let cmp = Comparator::strict();
        let d = cmp.items("probe", &[1, 2, 3], &[1, 2]).unwrap_err();
        assert_eq!(d.location, "probe: cardinality");
        let d = cmp.items("probe", &[1, 9], &[1, 2]).unwrap_err();
        assert_eq!(d.location, "probe: entry 1");
    }

    #[test]
    fn poly_comparison_pads_shorter_side() {
        let cmp = Comparator::strict();
        let p = RecipPoly::from_eigenvalues("T", &[rat_int(1), rat_int(2)]);
        let q = RecipPoly::from_eigenvalues("T", &[rat_int(1)]);
        let d = cmp.polys("probe", &p, &q).unwrap_err();
        assert!(d.location.contains("coefficient of T^1"));
    }
}
