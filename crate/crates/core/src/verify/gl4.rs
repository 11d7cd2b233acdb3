//! Checks for the three-variable identity chain: the character-sum
//! identity, the three product closures behind it, and the fully
//! assembled unramified value.
//!
//! Every telescoped geometric factor is expanded term by term inside
//! the truncation window; nothing here ever divides by `1 - XZ`,
//! `X - YZ`, or `Z - XY`, so no sampled point can hit a spurious pole.
//! The assembled check multiplies both sides by the same cleared
//! denominator polynomials instead.

use num_traits::{One, Zero};

use crate::chars::a3::{A3Evaluator, SatakePointA3, WeightA3};
use crate::lgroup::{recip_gl4_std, recip_gl4_wedge2, recip_gl4_wedge3};
use crate::rat::Rat;
use crate::series::recip::series_from_recip;
use crate::series::{MSeries, Monomial};
use crate::subst::{gl4_entries, SubstEntry};

use super::{Comparator, Discrepancy};

/// Series window for the three-variable identities.
pub const GL4_VARS: [&str; 3] = ["X", "Y", "Z"];

/// Looks up a factor by name in a substitution table.
pub fn entry<'a>(entries: &'a [SubstEntry], name: &str) -> &'a SubstEntry {
    entries
        .iter()
        .find(|e| e.name == name)
        .unwrap_or_else(|| panic!("substitution table has no entry named {name}"))
}

/// The positive monomial image of a table entry, for factors whose
/// image has no denominator.
pub fn entry_monomial(e: &SubstEntry) -> Monomial {
    let mut mono = Monomial::one();
    for (var, exp) in &e.mono {
        assert!(
            *exp > 0,
            "entry {} has a denominator and no plain monomial image",
            e.name
        );
        mono = mono.mul(&Monomial::var(var).pow(*exp as u32));
    }
    mono
}

/// The character-weighted triple sum with all three telescoped factors
/// expanded term by term, truncated at total degree `d`.
///
/// The term contributed by weight indices `(l, m, n)` and expansion
/// indices `(alpha, beta, gamma)` is
/// `X^(l-alpha+beta+gamma) Y^(m+alpha+gamma) Z^(n+alpha+beta-gamma)`,
/// of total degree `l+m+n+alpha+2beta+gamma`.
pub fn lhs_gl4_sum(pt: &SatakePointA3, d: u32) -> MSeries {
    let mut ev = A3Evaluator::new(pt.clone());
    let mut out = MSeries::new(&GL4_VARS, d);
    for l in 0..=d {
        for m in 0..=d - l {
            for n in 0..=d - l - m {
                let a = ev.eval(WeightA3::new(l, m, n));
                if a.is_zero() {
                    continue;
                }
                let base = l + m + n;
                for alpha in 0..=l {
                    if base + alpha > d {
                        break;
                    }
                    for beta in 0..=m {
                        if base + alpha + 2 * beta > d {
                            break;
                        }
                        for gamma in 0..=n {
                            if base + alpha + 2 * beta + gamma > d {
                                break;
                            }
                            let mono = Monomial::from_pairs(&[
                                ("X", l - alpha + beta + gamma),
                                ("Y", m + alpha + gamma),
                                ("Z", n + alpha + beta - gamma),
                            ]);
                            out.add_term(&mono, &a)
                                .expect("expansion terms stay inside the window");
                        }
                    }
                }
            }
        }
    }
    out
}

/// The factored side of the character-sum identity:
/// `(sum of A[t,0,v] X^t Z^v) * (sum of A[0,u,0] Y^u)`.
pub fn rhs_lemma_product(pt: &SatakePointA3, d: u32) -> MSeries {
    let mut ev = A3Evaluator::new(pt.clone());
    let mut left = MSeries::new(&GL4_VARS, d);
    for t in 0..=d {
        for v in 0..=d - t {
            let mono = Monomial::from_pairs(&[("X", t), ("Z", v)]);
            left.add_term(&mono, &ev.eval(WeightA3::new(t, 0, v)))
                .expect("within window");
        }
    }
    let mut right = MSeries::new(&GL4_VARS, d);
    for u in 0..=d {
        right
            .add_term(&Monomial::var("Y").pow(u), &ev.eval(WeightA3::new(0, u, 0)))
            .expect("within window");
    }
    left.mul(&right).expect("same window")
}

/// Coefficient-wise equality of the triple sum and the two-factor
/// product, with a one-off probe that the sum is a symmetric function
/// of the parameter coordinates.
pub fn check_lemma_2_2(
    pt: &SatakePointA3,
    d: u32,
    symmetry_probe: bool,
    cmp: &Comparator,
) -> Result<(), Discrepancy> {
    let lhs = lhs_gl4_sum(pt, d);
    let rhs = rhs_lemma_product(pt, d);
    cmp.series("character sum against product form", &lhs, &rhs)?;
    if symmetry_probe {
        let a = pt.alpha();
        let permuted =
            SatakePointA3::new([a[1].clone(), a[2].clone(), a[0].clone(), a[3].clone()])
                .expect("permuting coordinates preserves the constraints");
        let lhs_perm = lhs_gl4_sum(&permuted, d);
        cmp.series("coordinate-permutation symmetry", &lhs, &lhs_perm)?;
    }
    Ok(())
}

/// The three closed product forms for the one- and two-row character
/// generating functions:
///
/// 1. `sum of A[t,0,0] X^t` is the reciprocal standard factor at `X`;
/// 2. `sum of A[0,u,0] Y^u` is `(1 - Y^2)` times the reciprocal
///    second-exterior factor at `Y`;
/// 3. `sum of A[t,0,v] X^t Z^v` is `(1 - XZ)` times the product of the
///    reciprocal standard factor at `X` and third-exterior factor at `Z`.
pub fn check_littlewood_closures(
    pt: &SatakePointA3,
    d: u32,
    cmp: &Comparator,
) -> Result<(), Discrepancy> {
    let mut ev = A3Evaluator::new(pt.clone());
    let one = Rat::one();

    let vars_x = ["X"];
    let mut sum1 = MSeries::new(&vars_x, d);
    for t in 0..=d {
        sum1.add_term(&Monomial::var("X").pow(t), &ev.eval(WeightA3::new(t, 0, 0)))
            .expect("within window");
    }
    let ser_std = series_from_recip(
        &recip_gl4_std(pt, "T"),
        &Monomial::var("X"),
        &one,
        &vars_x,
        d,
    )
    .expect("positive-degree image");
    cmp.series("one-row closure in X", &sum1, &ser_std)?;

    let vars_y = ["Y"];
    let mut sum2 = MSeries::new(&vars_y, d);
    for u in 0..=d {
        sum2.add_term(&Monomial::var("Y").pow(u), &ev.eval(WeightA3::new(0, u, 0)))
            .expect("within window");
    }
    let mut y2 = MSeries::one(&vars_y, d);
    y2.add_term(&Monomial::var("Y").pow(2), &-one.clone())
        .expect("within window");
    let ser_w2 = series_from_recip(
        &recip_gl4_wedge2(pt, "T"),
        &Monomial::var("Y"),
        &one,
        &vars_y,
        d,
    )
    .expect("positive-degree image");
    let rhs2 = y2.mul(&ser_w2).expect("same window");
    cmp.series("middle-row closure in Y", &sum2, &rhs2)?;

    let vars_xz = ["X", "Z"];
    let mut sum3 = MSeries::new(&vars_xz, d);
    for t in 0..=d {
        for v in 0..=d - t {
            let mono = Monomial::from_pairs(&[("X", t), ("Z", v)]);
            sum3.add_term(&mono, &ev.eval(WeightA3::new(t, 0, v)))
                .expect("within window");
        }
    }
    let mut xz = MSeries::one(&vars_xz, d);
    xz.add_term(
        &Monomial::var("X").mul(&Monomial::var("Z")),
        &-one.clone(),
    )
    .expect("within window");
    let ser_std_x = series_from_recip(
        &recip_gl4_std(pt, "T"),
        &Monomial::var("X"),
        &one,
        &vars_xz,
        d,
    )
    .expect("positive-degree image");
    let ser_w3_z = series_from_recip(
        &recip_gl4_wedge3(pt, "T"),
        &Monomial::var("Z"),
        &one,
        &vars_xz,
        d,
    )
    .expect("positive-degree image");
    let rhs3 = xz
        .mul(&ser_std_x)
        .and_then(|s| s.mul(&ser_w3_z))
        .expect("same window");
    cmp.series("two-row closure in X and Z", &sum3, &rhs3)?;

    Ok(())
}

/// The assembled unramified value, end to end.
///
/// Both sides of the statement are multiplied by the same three
/// cleared zeta reciprocals `(1 - qXZ)`, `(Z - qXY)`, `(X - qYZ)`, so
/// the comparison is between polynomials-times-series with no Laurent
/// division.  Every factor is built from the substitution table, which
/// must have passed its self-check.  The cleared multiplier's lowest
/// term has degree 2, so a window of degree `d` certifies the
/// underlying identity through degree `d - 2`.
pub fn check_thm_2_1(
    pt: &SatakePointA3,
    q: &Rat,
    d: u32,
    cmp: &Comparator,
) -> Result<(), Discrepancy> {
    let entries = gl4_entries();
    let one = Rat::one();

    let z4w = entry(&entries, "zeta-4w")
        .factor(q, &GL4_VARS, d)
        .expect("table factor");
    let z4s1 = entry(&entries, "zeta-4s1")
        .factor(q, &GL4_VARS, d)
        .expect("table factor");
    let z4s2 = entry(&entries, "zeta-4s2")
        .factor(q, &GL4_VARS, d)
        .expect("table factor");

    let lhs = lhs_gl4_sum(pt, d)
        .mul(&z4w)
        .and_then(|s| s.mul(&z4s1))
        .and_then(|s| s.mul(&z4s2))
        .expect("same window");

    let l_std = series_from_recip(
        &recip_gl4_std(pt, "T"),
        &entry_monomial(entry(&entries, "L-std-arg")),
        &one,
        &GL4_VARS,
        d,
    )
    .expect("positive-degree image");
    let l_w2 = series_from_recip(
        &recip_gl4_wedge2(pt, "T"),
        &entry_monomial(entry(&entries, "L-wedge2-arg")),
        &one,
        &GL4_VARS,
        d,
    )
    .expect("positive-degree image");
    let l_w3 = series_from_recip(
        &recip_gl4_wedge3(pt, "T"),
        &entry_monomial(entry(&entries, "L-wedge3-arg")),
        &one,
        &GL4_VARS,
        d,
    )
    .expect("positive-degree image");
    let z4w1 = entry(&entries, "zeta-4w-1")
        .factor(q, &GL4_VARS, d)
        .expect("table factor");
    let zy2 = entry(&entries, "zeta-4s1+4s2-2")
        .factor(q, &GL4_VARS, d)
        .expect("table factor");

    let rhs = l_std
        .mul(&l_w2)
        .and_then(|s| s.mul(&l_w3))
        .and_then(|s| s.mul(&z4w1))
        .and_then(|s| s.mul(&zy2))
        .and_then(|s| s.mul(&z4w))
        .and_then(|s| s.mul(&z4s1))
        .and_then(|s| s.mul(&z4s2))
        .expect("same window");

    cmp.series("assembled unramified value, cleared form", &lhs, &rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    fn sample_point() -> SatakePointA3 {
        let a1 = rat(2, 1);
        let a2 = rat(-1, 3);
        let a3 = rat(5, 4);
        let a4 = rat_int(1) / (&a1 * &a2 * &a3);
        SatakePointA3::new([a1, a2, a3, a4]).unwrap()
    }

    #[test]
    fn triple_sum_base_cases() {
        let pt = sample_point();
        let s0 = lhs_gl4_sum(&pt, 0);
        assert_eq!(s0.coeff(&Monomial::one()).unwrap(), rat_int(1));
        assert_eq!(s0.term_count(), 1);

        let s1 = lhs_gl4_sum(&pt, 1);
        assert_eq!(s1.coeff(&Monomial::var("X")).unwrap(), pt.elementary(1));
        assert_eq!(s1.coeff(&Monomial::var("Y")).unwrap(), pt.elementary(2));
        assert_eq!(s1.coeff(&Monomial::var("Z")).unwrap(), pt.elementary(3));
    }

    #[test]
    fn character_sum_identity_holds() {
        let cmp = Comparator::strict();
        check_lemma_2_2(&sample_point(), 6, true, &cmp).unwrap();
    }

    #[test]
    fn character_sum_identity_can_fail() {
        let cmp = Comparator::tampered();
        let err = check_lemma_2_2(&sample_point(), 2, false, &cmp).unwrap_err();
        assert!(err.location.contains("coefficient of"));
    }

    #[test]
    fn closures_hold_and_pin_the_mixed_coefficient() {
        let pt = sample_point();
        let cmp = Comparator::strict();
        check_littlewood_closures(&pt, 6, &cmp).unwrap();

        // The X Z coefficient of the two-row closure is e1*e3 - 1.
        let mut ev = A3Evaluator::new(pt.clone());
        assert_eq!(
            ev.eval(WeightA3::new(1, 0, 1)),
            pt.elementary(1) * pt.elementary(3) - rat_int(1)
        );
    }

    #[test]
    fn assembled_value_holds_at_the_unit_point() {
        let pt = SatakePointA3::new([rat_int(1), rat_int(1), rat_int(1), rat_int(1)]).unwrap();
        let cmp = Comparator::strict();
        check_thm_2_1(&pt, &rat(1, 2), 6, &cmp).unwrap();
    }

    #[test]
    fn assembled_value_holds_at_a_generic_point() {
        let cmp = Comparator::strict();
        check_thm_2_1(&sample_point(), &rat(1, 3), 6, &cmp).unwrap();
    }

    #[test]
    fn assembled_value_can_fail() {
        let cmp = Comparator::tampered();
        assert!(check_thm_2_1(&sample_point(), &rat(1, 3), 3, &cmp).is_err());
    }
}
