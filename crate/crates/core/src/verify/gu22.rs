//! Checks for the two-variable identity chain of the quasi-split
//! unitary similitude group: the torus sum at an inert place, its
//! closed product form, the factor dictionary to the rank-two
//! similitude group, and the assembled values at inert and split
//! places.

use std::collections::BTreeMap;

use num_traits::One;

use crate::chars::a3::SatakePointA3;
use crate::chars::c2::{char_c2_total, SatakePointC2, WeightC2};
use crate::lgroup::{
    recip_gl4_std, recip_gl4_wedge2, recip_gl4_wedge3, recip_gsp4_spin, recip_gsp4_std,
    recip_gu_std_inert, recip_gu_wedge2_inert, TwistedClass,
};
use crate::rat::{pow_int, rat_int, Rat};
use crate::series::recip::{series_from_recip, RecipPoly};
use crate::series::{MSeries, Monomial, VarImage};
use crate::subst::{cleared_factor, gu_entries, split_audit_rows, split_specialization};

use super::gl4::{self, entry, entry_monomial};
use super::{Comparator, Discrepancy};

/// Series window for the two-variable identities.
pub const GU_VARS: [&str; 2] = ["U", "V"];

/// Torus value at valuations `(m, n)`, defined through the rank-two
/// character dictionary: the weight is `(m + n, m)` in partition
/// coordinates.  The orientation of the dictionary is pinned by the
/// calibration comparisons in [`check_bfg_identity`].
pub fn k_value(pt: &SatakePointC2, m: u32, n: u32) -> Rat {
    char_c2_total(pt, WeightC2::new(m + n, m))
}

/// The inert-place torus sum: each `(m, n)` contributes its K value
/// times `U^(2m) V^n` times two telescoped geometric factors, expanded
/// term by term as `U^(2j)` for `j <= n` and `V^(2i)` for `i <= m`.
pub fn lhs_gu22_inert_sum(pt: &SatakePointC2, d: u32) -> MSeries {
    let mut out = MSeries::new(&GU_VARS, d);
    let mut m = 0;
    while 2 * m <= d {
        for n in 0..=d - 2 * m {
            let k = k_value(pt, m, n);
            let base = 2 * m + n;
            for j in 0..=n {
                if base + 2 * j > d {
                    break;
                }
                for i in 0..=m {
                    if base + 2 * j + 2 * i > d {
                        break;
                    }
                    let mono =
                        Monomial::from_pairs(&[("U", 2 * m + 2 * j), ("V", n + 2 * i)]);
                    out.add_term(&mono, &k)
                        .expect("expansion terms stay inside the window");
                }
            }
        }
        m += 1;
    }
    out
}

/// The torus sum against its closed product form: the reciprocal
/// five-dimensional standard factor at `U^2`, times the reciprocal
/// spin factor at `V`, times `(1 - U^4)`.
///
/// Before the series comparison, two calibration coefficients are
/// pinned against independent eigenvalue sums: the `V` coefficient
/// must be the spin trace and the `U^2` coefficient the standard
/// trace.  These fix the orientation of the weight dictionary in
/// [`k_value`] (in particular the `U^2` coefficient is `K[1,0]`
/// alone).
pub fn check_bfg_identity(
    pt: &SatakePointC2,
    d: u32,
    cmp: &Comparator,
) -> Result<(), Discrepancy> {
    let lhs = lhs_gu22_inert_sum(pt, d);

    if d >= 2 {
        let spin_trace: Rat = pt
            .spin_eigenvalues()
            .iter()
            .fold(rat_int(0), |acc, e| acc + e);
        let std_trace: Rat = pt
            .std5_eigenvalues()
            .iter()
            .fold(rat_int(0), |acc, e| acc + e);
        cmp.rats(
            "calibration: V coefficient against the spin trace",
            &lhs.coeff(&Monomial::var("V")).expect("within window"),
            &spin_trace,
        )?;
        cmp.rats(
            "calibration: U^2 coefficient against the standard trace",
            &lhs.coeff(&Monomial::var("U").pow(2))
                .expect("within window"),
            &std_trace,
        )?;
    }

    let one = Rat::one();
    let ser_std = series_from_recip(
        &recip_gsp4_std(pt, "T"),
        &Monomial::var("U").pow(2),
        &one,
        &GU_VARS,
        d,
    )
    .expect("positive-degree image");
    let ser_spin = series_from_recip(
        &recip_gsp4_spin(pt, "T"),
        &Monomial::var("V"),
        &one,
        &GU_VARS,
        d,
    )
    .expect("positive-degree image");
    let mut u4 = MSeries::one(&GU_VARS, d);
    u4.add_term(&Monomial::var("U").pow(4), &-one.clone())
        .expect("within window");
    let rhs = ser_std
        .mul(&ser_spin)
        .and_then(|s| s.mul(&u4))
        .expect("same window");
    cmp.series("torus sum against closed product", &lhs, &rhs)
}

/// The two polynomial identities tying the twisted-coset factors to
/// the rank-two similitude factors, with their degree and parity
/// bookkeeping:
///
/// 1. the second-exterior factor equals the spin factor times
///    `(1 - T^2)`, both of degree 6;
/// 2. the standard factor is even of degree 8, and times `(1 - T^2)`
///    equals the five-dimensional standard factor at `T^2`.
pub fn check_prop_gsp4l(cls: &TwistedClass, cmp: &Comparator) -> Result<(), Discrepancy> {
    let pt = cls.gsp4_point();
    let one_minus_t2 = RecipPoly::new(
        "T",
        vec![rat_int(1), rat_int(0), rat_int(-1)],
    )
    .expect("unit constant term");

    let lhs_w2 = recip_gu_wedge2_inert(cls, "T");
    cmp.counts(
        "second-exterior factor degree",
        lhs_w2.degree() as u64,
        6,
    )?;
    let rhs_w2 = recip_gsp4_spin(&pt, "T")
        .mul(&one_minus_t2)
        .expect("same variable");
    cmp.polys("second-exterior factor identity", &lhs_w2, &rhs_w2)?;

    let lhs_std = recip_gu_std_inert(cls, "T");
    cmp.counts("standard factor degree", lhs_std.degree() as u64, 8)?;
    let zero = rat_int(0);
    for (k, c) in lhs_std.coeffs().iter().enumerate() {
        if k % 2 == 1 {
            cmp.rats(
                &format!("standard factor parity: coefficient of T^{k}"),
                c,
                &zero,
            )?;
        }
    }
    let lhs_std_cleared = lhs_std.mul(&one_minus_t2).expect("same variable");
    let rhs_std = recip_gsp4_std(&pt, "T").subst_square();
    cmp.polys("standard factor identity", &lhs_std_cleared, &rhs_std)
}

/// The assembled inert-place value, end to end.
///
/// Both sides are multiplied by the reciprocal zeta prefactors
/// `(1 - qU^2)` and `(1 - q^2 V^2)`; all remaining factors are
/// polynomial in `U, V`, so no clearing monomial is needed.  The
/// quadratic-character factor contributes `(1 + U^2)` because the
/// character takes the value -1 at the uniformizer when the place is
/// inert.
pub fn check_thm_3_2_inert(
    cls: &TwistedClass,
    q: &Rat,
    d: u32,
    cmp: &Comparator,
) -> Result<(), Discrepancy> {
    let pt = cls.gsp4_point();
    let entries = gu_entries();
    let one = Rat::one();

    let z4w = entry(&entries, "zeta-4w")
        .factor(q, &GU_VARS, d)
        .expect("table factor");
    let ze3s = entry(&entries, "zetaE-3s-inert")
        .factor(q, &GU_VARS, d)
        .expect("table factor");

    let lhs = lhs_gu22_inert_sum(&pt, d)
        .mul(&z4w)
        .and_then(|s| s.mul(&ze3s))
        .expect("same window");

    let l_std = series_from_recip(
        &recip_gu_std_inert(cls, "T"),
        &entry_monomial(entry(&entries, "L-std-arg")),
        &one,
        &GU_VARS,
        d,
    )
    .expect("positive-degree image");
    let l_w2 = series_from_recip(
        &recip_gu_wedge2_inert(cls, "T"),
        &entry_monomial(entry(&entries, "L-wedge2-arg")),
        &one,
        &GU_VARS,
        d,
    )
    .expect("positive-degree image");
    let eps_entry = entry(&entries, "zeta-4w-1");
    let eps = cleared_factor(
        &eps_entry.mono,
        &-pow_int(q, eps_entry.q_exp),
        &GU_VARS,
        d,
    )
    .expect("table factor");
    let z6s2 = entry(&entries, "zeta-6s-2")
        .factor(q, &GU_VARS, d)
        .expect("table factor");

    let rhs = l_std
        .mul(&l_w2)
        .and_then(|s| s.mul(&eps))
        .and_then(|s| s.mul(&z6s2))
        .and_then(|s| s.mul(&z4w))
        .and_then(|s| s.mul(&ze3s))
        .expect("same window");

    cmp.series("assembled inert value, cleared form", &lhs, &rhs)
}

/// The split-place reduction, in two stages.
///
/// First the argument audit: tying the auxiliary parameters by
/// `s1 = s2 = (3/4)s` must send every factor argument of the
/// three-variable identity to its recorded two-variable counterpart
/// (the two single-parameter zetas pair up into the split quadratic
/// extension zeta, and the shifted zeta becomes the split
/// quadratic-character factor).
///
/// Then the series identity: the three-variable torus sum under
/// `X -> U, Y -> V, Z -> U` must equal the standard-at-`U`,
/// second-exterior-at-`V`, third-exterior-at-`U` product with split
/// zeta shapes, both sides multiplied by the reciprocal prefactors
/// `(1 - qU^2)(1 - qV)^2`.
pub fn check_thm_3_2_split(
    pt: &SatakePointA3,
    q: &Rat,
    d: u32,
    cmp: &Comparator,
) -> Result<(), Discrepancy> {
    for row in split_audit_rows() {
        cmp.forms(
            &format!("argument audit: {}", row.factor),
            &split_specialization(&row.gl4),
            &row.expected,
        )?;
    }

    let entries = gu_entries();
    let one = Rat::one();

    let mut images = BTreeMap::new();
    images.insert("X".to_string(), VarImage::plain(Monomial::var("U")));
    images.insert("Y".to_string(), VarImage::plain(Monomial::var("V")));
    images.insert("Z".to_string(), VarImage::plain(Monomial::var("U")));
    let s = gl4::lhs_gl4_sum(pt, d)
        .substitute(&images, &GU_VARS, d)
        .expect("degree-preserving images");

    let z4w = entry(&entries, "zeta-4w")
        .factor(q, &GU_VARS, d)
        .expect("table factor");
    let z3s = entry(&entries, "zeta-3s")
        .factor(q, &GU_VARS, d)
        .expect("table factor");

    let lhs = s
        .mul(&z4w)
        .and_then(|s| s.mul(&z3s))
        .and_then(|s| s.mul(&z3s))
        .expect("same window");

    let l_std = series_from_recip(
        &recip_gl4_std(pt, "T"),
        &entry_monomial(entry(&entries, "L-std-arg")),
        &one,
        &GU_VARS,
        d,
    )
    .expect("positive-degree image");
    let l_w2 = series_from_recip(
        &recip_gl4_wedge2(pt, "T"),
        &entry_monomial(entry(&entries, "L-wedge2-arg")),
        &one,
        &GU_VARS,
        d,
    )
    .expect("positive-degree image");
    let l_w3 = series_from_recip(
        &recip_gl4_wedge3(pt, "T"),
        &entry_monomial(entry(&entries, "L-std-arg")),
        &one,
        &GU_VARS,
        d,
    )
    .expect("positive-degree image");
    let eps_split = entry(&entries, "zeta-4w-1")
        .factor(q, &GU_VARS, d)
        .expect("table factor");
    let z6s2 = entry(&entries, "zeta-6s-2")
        .factor(q, &GU_VARS, d)
        .expect("table factor");

    let rhs = l_std
        .mul(&l_w2)
        .and_then(|s| s.mul(&l_w3))
        .and_then(|s| s.mul(&eps_split))
        .and_then(|s| s.mul(&z6s2))
        .and_then(|s| s.mul(&z4w))
        .and_then(|s| s.mul(&z3s))
        .and_then(|s| s.mul(&z3s))
        .expect("same window");

    cmp.series("assembled split value, cleared form", &lhs, &rhs)
}
