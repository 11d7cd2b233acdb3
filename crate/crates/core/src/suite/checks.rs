//! The fourteen registered checks: each wires seeded samples and a
//! comparator into one of the verification functions, records its
//! effective parameters (sampled points included), and reports the
//! first located discrepancy on failure.

use std::collections::BTreeMap;
use std::time::Instant;

use num_traits::One;

use crate::chars::a3::{char_a3_alternant, A3Evaluator, SatakePointA3, WeightA3};
use crate::chars::c2::{char_c2, char_c2_total, SatakePointC2, WeightC2};
use crate::chars::lr::{lr_closed_form, lr_oracle};
use crate::coset::gl4::{
    borel_order_formula, gl4_double_cosets, p_order_formula, product_set_sizes_f2,
    q_order_formula, stabilizer_claims,
};
use crate::coset::gu4::gu4_double_cosets;
use crate::lgroup::TwistedClass;
use crate::padic::{inner_integral_closed, inner_integral_shell_sum};
use crate::rat::{rat_int, rat_str, Rat};
use crate::verify::gl4::{check_lemma_2_2, check_littlewood_closures, check_thm_2_1};
use crate::verify::gu22::{
    check_bfg_identity, check_prop_gsp4l, check_thm_3_2_inert, check_thm_3_2_split,
};
use crate::verify::sample::Sampler;
use crate::verify::{Comparator, Discrepancy};

use super::{finish, Check, CheckReport, RunCtx};

fn comparator(ctx: &RunCtx) -> Comparator {
    if ctx.tamper {
        Comparator::tampered()
    } else {
        Comparator::strict()
    }
}

fn fmt_a3(pt: &SatakePointA3) -> String {
    let a = pt.alpha();
    format!(
        "alpha=({}, {}, {}, {})",
        rat_str(&a[0]),
        rat_str(&a[1]),
        rat_str(&a[2]),
        rat_str(&a[3])
    )
}

fn fmt_c2(a: &Rat, b: &Rat) -> String {
    format!("(a,b)=({}, {})", rat_str(a), rat_str(b))
}

/// Triple character sum against the two-factor product form, with a
/// coordinate-permutation probe on the first trial.
pub struct LemmaTripleSum;

impl Check for LemmaTripleSum {
    fn name(&self) -> &'static str {
        "lemma-2-2"
    }
    fn summary(&self) -> &'static str {
        "triple character sum collapses to the product of its two boundary slices"
    }
    fn default_degree(&self) -> Option<u32> {
        Some(12)
    }
    fn default_trials(&self) -> Option<u32> {
        Some(20)
    }
    fn run(&self, ctx: &RunCtx) -> CheckReport {
        let started = Instant::now();
        let d = ctx.degree.unwrap_or(12);
        let trials = ctx.trials.unwrap_or(20);
        let cmp = comparator(ctx);
        let mut sampler = Sampler::new(ctx.seed, self.name(), ctx.q_bound);
        let mut params = BTreeMap::new();
        params.insert("degree".into(), d.to_string());
        params.insert("trials".into(), trials.to_string());
        let mut outcome = Ok(());
        for i in 0..trials {
            let pt = sampler.point_a3();
            params.insert(format!("sample.{i:02}"), fmt_a3(&pt));
            if let Err(e) = check_lemma_2_2(&pt, d, i == 0, &cmp) {
                outcome = Err(e);
                break;
            }
        }
        finish(self.name(), params, started, outcome)
    }
}

/// The three closed product forms for boundary slices of the triple
/// sum.
pub struct LittlewoodClosures;

impl Check for LittlewoodClosures {
    fn name(&self) -> &'static str {
        "littlewood-closures"
    }
    fn summary(&self) -> &'static str {
        "one- and two-row character generating functions match their product forms"
    }
    fn default_degree(&self) -> Option<u32> {
        Some(10)
    }
    fn default_trials(&self) -> Option<u32> {
        Some(20)
    }
    fn run(&self, ctx: &RunCtx) -> CheckReport {
        let started = Instant::now();
        let d = ctx.degree.unwrap_or(10);
        let trials = ctx.trials.unwrap_or(20);
        let cmp = comparator(ctx);
        let mut sampler = Sampler::new(ctx.seed, self.name(), ctx.q_bound);
        let mut params = BTreeMap::new();
        params.insert("degree".into(), d.to_string());
        params.insert("trials".into(), trials.to_string());
        let mut outcome = Ok(());
        for i in 0..trials {
            let pt = sampler.point_a3();
            params.insert(format!("sample.{i:02}"), fmt_a3(&pt));
            if let Err(e) = check_littlewood_closures(&pt, d, &cmp) {
                outcome = Err(e);
                break;
            }
        }
        finish(self.name(), params, started, outcome)
    }
}

/// The assembled unramified value on the linear group, in cleared
/// polynomial form.
pub struct UnramifiedGl4Value;

impl Check for UnramifiedGl4Value {
    fn name(&self) -> &'static str {
        "thm-2-1"
    }
    fn summary(&self) -> &'static str {
        "full series sum equals the three-factor product over the zeta prefactor"
    }
    fn default_degree(&self) -> Option<u32> {
        Some(8)
    }
    fn default_trials(&self) -> Option<u32> {
        Some(20)
    }
    fn run(&self, ctx: &RunCtx) -> CheckReport {
        let started = Instant::now();
        let d = ctx.degree.unwrap_or(8);
        let trials = ctx.trials.unwrap_or(20);
        let cmp = comparator(ctx);
        let mut sampler = Sampler::new(ctx.seed, self.name(), ctx.q_bound);
        let mut params = BTreeMap::new();
        params.insert("degree".into(), d.to_string());
        params.insert("trials".into(), trials.to_string());
        let mut outcome = Ok(());
        for i in 0..trials {
            let pt = sampler.point_a3();
            let q = sampler.unit_rat();
            params.insert(
                format!("sample.{i:02}"),
                format!("{} q={}", fmt_a3(&pt), rat_str(&q)),
            );
            if let Err(e) = check_thm_2_1(&pt, &q, d, &cmp) {
                outcome = Err(e);
                break;
            }
        }
        finish(self.name(), params, started, outcome)
    }
}

/// Closed evaluations of the rank-one integrals against shell-by-shell
/// summation.
pub struct InnerIntegrals;

impl Check for InnerIntegrals {
    fn name(&self) -> &'static str {
        "inner-integrals"
    }
    fn summary(&self) -> &'static str {
        "closed form of the quadratic-locus integral matches its shell decomposition"
    }
    fn default_trials(&self) -> Option<u32> {
        Some(10)
    }
    fn run(&self, ctx: &RunCtx) -> CheckReport {
        let started = Instant::now();
        let trials = ctx.trials.unwrap_or(10);
        let cmp = comparator(ctx);
        let mut sampler = Sampler::new(ctx.seed, self.name(), ctx.q_bound);
        let mut params = BTreeMap::new();
        params.insert("trials".into(), trials.to_string());
        params.insert("valuations".into(), "0..=6".into());
        let mut outcome = Ok(());
        'trials: for i in 0..trials {
            let x = sampler.nonzero_rat_avoiding_one();
            let q = sampler.unit_rat();
            params.insert(
                format!("sample.{i:02}"),
                format!("x={} q={}", rat_str(&x), rat_str(&q)),
            );
            for m in 0..=6 {
                let closed = inner_integral_closed(m, &x, &q).expect("x avoids the pole");
                let shells = inner_integral_shell_sum(m, &x, &q).expect("x avoids the pole");
                if let Err(e) = cmp.rats(
                    &format!("integral at valuation {m}, x={}, q={}", rat_str(&x), rat_str(&q)),
                    &closed,
                    &shells,
                ) {
                    outcome = Err(e);
                    break 'trials;
                }
            }
        }
        finish(self.name(), params, started, outcome)
    }
}

/// Weight-table character evaluation against the alternant quotients,
/// plus dimension pinning at the trivial point.
pub struct CharacterOracles;

impl CharacterOracles {
    fn body(
        &self,
        ctx: &RunCtx,
        cmp: &Comparator,
        params: &mut BTreeMap<String, String>,
    ) -> Result<(), Discrepancy> {
        let trials = ctx.trials.unwrap_or(50);
        params.insert("trials".into(), trials.to_string());
        params.insert("weightBound".into(), "5".into());
        let one = Rat::one();

        // Dimensions of the three fundamental representations on the
        // linear side and the two on the symplectic side.
        cmp.counts("standard dimension", WeightA3::new(1, 0, 0).dim(), 4)?;
        cmp.counts("second-exterior dimension", WeightA3::new(0, 1, 0).dim(), 6)?;
        cmp.counts("third-exterior dimension", WeightA3::new(0, 0, 1).dim(), 4)?;
        cmp.counts("short-root dimension", WeightC2::new(1, 0).dim(), 4)?;
        cmp.counts("five-dimensional dimension", WeightC2::new(1, 1).dim(), 5)?;

        // At the trivial point every character must equal the
        // dimension given by the closed product formula.
        let trivial =
            SatakePointA3::new([one.clone(), one.clone(), one.clone(), one.clone()])
                .expect("trivial point is valid");
        let mut ev0 = A3Evaluator::new(trivial);
        let trivial_c2 =
            SatakePointC2::new(one.clone(), one.clone()).expect("trivial point is valid");
        for l in 0..=5u32 {
            for m in 0..=(5 - l) {
                for n in 0..=(5 - l - m) {
                    let w = WeightA3::new(l, m, n);
                    cmp.rats(
                        &format!("trivial-point character against dimension at {w}"),
                        &ev0.eval(w),
                        &rat_int(w.dim() as i64),
                    )?;
                }
            }
        }
        for lam1 in 0..=5u32 {
            for lam2 in 0..=lam1.min(5 - lam1) {
                let w = WeightC2::new(lam1, lam2);
                cmp.rats(
                    &format!("trivial-point character against dimension at {w}"),
                    &char_c2_total(&trivial_c2, w),
                    &rat_int(w.dim() as i64),
                )?;
            }
        }

        let mut sampler = Sampler::new(ctx.seed, self.name(), ctx.q_bound);
        for i in 0..trials {
            let pa = sampler.point_a3_regular();
            let pc = sampler.point_c2_regular();
            params.insert(
                format!("sample.{i:02}"),
                format!("{} {}", fmt_a3(&pa), fmt_c2(pc.a(), pc.b())),
            );
            let mut ev = A3Evaluator::new(pa.clone());
            for l in 0..=5u32 {
                for m in 0..=(5 - l) {
                    for n in 0..=(5 - l - m) {
                        let w = WeightA3::new(l, m, n);
                        let alt = char_a3_alternant(&pa, w).expect("regular point");
                        cmp.rats(
                            &format!("weight tables against the alternant at {w}"),
                            &ev.eval(w),
                            &alt,
                        )?;
                    }
                }
            }
            for lam1 in 0..=5u32 {
                for lam2 in 0..=lam1.min(5 - lam1) {
                    let w = WeightC2::new(lam1, lam2);
                    let numeric = char_c2(&pc, w).expect("regular point");
                    cmp.rats(
                        &format!("division route against the alternant at {w}"),
                        &char_c2_total(&pc, w),
                        &numeric,
                    )?;
                }
            }
        }
        Ok(())
    }
}

impl Check for CharacterOracles {
    fn name(&self) -> &'static str {
        "char-oracles"
    }
    fn summary(&self) -> &'static str {
        "two independent character evaluators agree at regular sampled points"
    }
    fn default_trials(&self) -> Option<u32> {
        Some(50)
    }
    fn run(&self, ctx: &RunCtx) -> CheckReport {
        let started = Instant::now();
        let cmp = comparator(ctx);
        let mut params = BTreeMap::new();
        let outcome = self.body(ctx, &cmp, &mut params);
        finish(self.name(), params, started, outcome)
    }
}

/// Closed-form tensor decomposition against the brute-force tableau
/// oracle.
pub struct BranchingClosedForm;

impl Check for BranchingClosedForm {
    fn name(&self) -> &'static str {
        "lr-closed-form"
    }
    fn summary(&self) -> &'static str {
        "closed-form product decomposition matches the lattice-word enumeration"
    }
    fn run(&self, ctx: &RunCtx) -> CheckReport {
        let started = Instant::now();
        let cmp = comparator(ctx);
        let mut params = BTreeMap::new();
        params.insert("indexBound".into(), "4".into());
        params.insert("cases".into(), "125".into());
        let mut outcome = Ok(());
        'outer: for t in 0..=4u32 {
            for u in 0..=4u32 {
                for v in 0..=4u32 {
                    let closed = lr_closed_form(t, u, v);
                    let oracle = lr_oracle(t, u, v);
                    if let Err(e) = cmp.items(
                        &format!("decomposition multiset at (t,u,v)=({t},{u},{v})"),
                        &closed,
                        &oracle,
                    ) {
                        outcome = Err(e);
                        break 'outer;
                    }
                }
            }
        }
        finish(self.name(), params, started, outcome)
    }
}

/// The two-variable Hecke series against its two-factor product
/// form, with trace calibrations.
pub struct HeckeSeriesIdentity;

impl Check for HeckeSeriesIdentity {
    fn name(&self) -> &'static str {
        "bfg-identity"
    }
    fn summary(&self) -> &'static str {
        "two-variable Hecke series equals the spin-times-standard product form"
    }
    fn default_degree(&self) -> Option<u32> {
        Some(10)
    }
    fn default_trials(&self) -> Option<u32> {
        Some(20)
    }
    fn run(&self, ctx: &RunCtx) -> CheckReport {
        let started = Instant::now();
        let d = ctx.degree.unwrap_or(10);
        let trials = ctx.trials.unwrap_or(20);
        let cmp = comparator(ctx);
        let mut sampler = Sampler::new(ctx.seed, self.name(), ctx.q_bound);
        let mut params = BTreeMap::new();
        params.insert("degree".into(), d.to_string());
        params.insert("trials".into(), trials.to_string());
        let mut outcome = Ok(());
        for i in 0..trials {
            let pt = sampler.point_c2();
            params.insert(format!("sample.{i:02}"), fmt_c2(pt.a(), pt.b()));
            if let Err(e) = check_bfg_identity(&pt, d, &cmp) {
                outcome = Err(e);
                break;
            }
        }
        finish(self.name(), params, started, outcome)
    }
}

/// The degree, parity, and factorization dictionary between the
/// unitary and symplectic local factors.
pub struct DualGroupDictionary;

impl Check for DualGroupDictionary {
    fn name(&self) -> &'static str {
        "prop-3-1"
    }
    fn summary(&self) -> &'static str {
        "unitary local factors factor through the symplectic ones with even degree-8 standard"
    }
    fn default_trials(&self) -> Option<u32> {
        Some(50)
    }
    fn run(&self, ctx: &RunCtx) -> CheckReport {
        let started = Instant::now();
        let trials = ctx.trials.unwrap_or(50);
        let cmp = comparator(ctx);
        let mut sampler = Sampler::new(ctx.seed, self.name(), ctx.q_bound);
        let mut params = BTreeMap::new();
        params.insert("trials".into(), trials.to_string());
        let mut outcome = Ok(());
        for i in 0..trials {
            let a = sampler.nonzero_rat();
            let b = sampler.nonzero_rat();
            params.insert(format!("sample.{i:02}"), fmt_c2(&a, &b));
            let cls = TwistedClass::new(a, b).expect("nonzero parameters");
            if let Err(e) = check_prop_gsp4l(&cls, &cmp) {
                outcome = Err(e);
                break;
            }
        }
        finish(self.name(), params, started, outcome)
    }
}

/// The assembled unramified value on the unitary group at an inert
/// place.
pub struct UnitaryInertValue;

impl Check for UnitaryInertValue {
    fn name(&self) -> &'static str {
        "thm-3-2-inert"
    }
    fn summary(&self) -> &'static str {
        "inert-place series sum equals the standard-times-exterior product form"
    }
    fn default_degree(&self) -> Option<u32> {
        Some(8)
    }
    fn default_trials(&self) -> Option<u32> {
        Some(20)
    }
    fn run(&self, ctx: &RunCtx) -> CheckReport {
        let started = Instant::now();
        let d = ctx.degree.unwrap_or(8);
        let trials = ctx.trials.unwrap_or(20);
        let cmp = comparator(ctx);
        let mut sampler = Sampler::new(ctx.seed, self.name(), ctx.q_bound);
        let mut params = BTreeMap::new();
        params.insert("degree".into(), d.to_string());
        params.insert("trials".into(), trials.to_string());
        let mut outcome = Ok(());
        for i in 0..trials {
            let a = sampler.nonzero_rat();
            let b = sampler.nonzero_rat();
            let q = sampler.unit_rat();
            params.insert(
                format!("sample.{i:02}"),
                format!("{} q={}", fmt_c2(&a, &b), rat_str(&q)),
            );
            let cls = TwistedClass::new(a, b).expect("nonzero parameters");
            if let Err(e) = check_thm_3_2_inert(&cls, &q, d, &cmp) {
                outcome = Err(e);
                break;
            }
        }
        finish(self.name(), params, started, outcome)
    }
}

/// The split-place value: argument audit plus the substituted series
/// identity.
pub struct UnitarySplitValue;

impl Check for UnitarySplitValue {
    fn name(&self) -> &'static str {
        "thm-3-2-split"
    }
    fn summary(&self) -> &'static str {
        "split-place value reduces to the linear-group identity under variable collapse"
    }
    fn default_degree(&self) -> Option<u32> {
        Some(8)
    }
    fn default_trials(&self) -> Option<u32> {
        Some(10)
    }
    fn run(&self, ctx: &RunCtx) -> CheckReport {
        let started = Instant::now();
        let d = ctx.degree.unwrap_or(8);
        let trials = ctx.trials.unwrap_or(10);
        let cmp = comparator(ctx);
        let mut sampler = Sampler::new(ctx.seed, self.name(), ctx.q_bound);
        let mut params = BTreeMap::new();
        params.insert("degree".into(), d.to_string());
        params.insert("trials".into(), trials.to_string());
        let mut outcome = Ok(());
        for i in 0..trials {
            let pt = sampler.point_a3();
            let q = sampler.unit_rat();
            params.insert(
                format!("sample.{i:02}"),
                format!("{} q={}", fmt_a3(&pt), rat_str(&q)),
            );
            if let Err(e) = check_thm_3_2_split(&pt, &q, d, &cmp) {
                outcome = Err(e);
                break;
            }
        }
        finish(self.name(), params, started, outcome)
    }
}

fn gl4_coset_body(
    p: u8,
    expected_planes: u64,
    with_product_sets: bool,
    cmp: &Comparator,
    params: &mut BTreeMap<String, String>,
) -> Result<(), Discrepancy> {
    params.insert("field".into(), p.to_string());
    let d = gl4_double_cosets(p).expect("field within the enumeration guard");
    for c in &d.classes {
        params.insert(format!("coset.{}", c.rep), c.size.to_string());
    }
    cmp.counts("double cosets", d.orbit_count as u64, 4)?;
    let mut ids: Vec<usize> = d.classes.iter().map(|c| c.orbit).collect();
    ids.sort_unstable();
    ids.dedup();
    cmp.counts(
        "distinct cosets among the named representatives",
        ids.len() as u64,
        d.classes.len() as u64,
    )?;
    cmp.counts("planes", d.plane_count as u64, expected_planes)?;
    cmp.counts(
        "plane-stabilizer scan against the Levi product formula",
        d.p_order,
        p_order_formula(p),
    )?;
    cmp.counts(
        "flag-stabilizer scan against the Levi product formula",
        d.q_order,
        q_order_formula(p),
    )?;
    cmp.counts(
        "triangular-subgroup scan against its order formula",
        d.borel_order,
        borel_order_formula(p),
    )?;
    cmp.counts(
        "coset sizes partition the group",
        d.total(),
        d.group_order,
    )?;
    let identity_class = d
        .classes
        .iter()
        .find(|c| c.rep == "1")
        .expect("identity representative registered");
    cmp.counts(
        "identity coset against the parabolic product set size",
        identity_class.size,
        d.q_order * d.p_order / d.borel_order,
    )?;
    if with_product_sets {
        let (sizes, union) = product_set_sizes_f2();
        cmp.counts("elementwise product-set union rebuilds the group", union, d.group_order)?;
        let orbit_route: Vec<u64> = d.classes.iter().map(|c| c.size).collect();
        cmp.items(
            "elementwise product-set sizes against the orbit route",
            &sizes,
            &orbit_route,
        )?;
    }
    Ok(())
}

/// Double cosets of the two parabolics in the linear group over F2,
/// with an elementwise product-set cross-check.
pub struct Gl4CosetsF2;

impl Check for Gl4CosetsF2 {
    fn name(&self) -> &'static str {
        "gl4-cosets-f2"
    }
    fn summary(&self) -> &'static str {
        "exactly four double cosets over F2, sizes partition the group"
    }
    fn run(&self, ctx: &RunCtx) -> CheckReport {
        let started = Instant::now();
        let cmp = comparator(ctx);
        let mut params = BTreeMap::new();
        let outcome = gl4_coset_body(2, 35, true, &cmp, &mut params);
        finish(self.name(), params, started, outcome)
    }
}

/// The same decomposition over F3, confirming the count is not an
/// artifact of the two-element field.
pub struct Gl4CosetsF3;

impl Check for Gl4CosetsF3 {
    fn name(&self) -> &'static str {
        "gl4-cosets-f3"
    }
    fn summary(&self) -> &'static str {
        "exactly four double cosets over F3, sizes partition the group"
    }
    fn run(&self, ctx: &RunCtx) -> CheckReport {
        let started = Instant::now();
        let cmp = comparator(ctx);
        let mut params = BTreeMap::new();
        let outcome = gl4_coset_body(3, 130, false, &cmp, &mut params);
        finish(self.name(), params, started, outcome)
    }
}

/// Elementwise conjugation claims for the unipotent families attached
/// to the two middle cosets.
pub struct Gl4Stabilizers;

impl Check for Gl4Stabilizers {
    fn name(&self) -> &'static str {
        "gl4-stabilizers"
    }
    fn summary(&self) -> &'static str {
        "unipotent families conjugate into the flag parabolic; controls escape"
    }
    fn run(&self, ctx: &RunCtx) -> CheckReport {
        let started = Instant::now();
        let cmp = comparator(ctx);
        let mut params = BTreeMap::new();
        params.insert("fields".into(), "2,3".into());
        let mut outcome = Ok(());
        'fields: for p in [2u8, 3] {
            let rep = stabilizer_claims(p).expect("field within the enumeration guard");
            let claims = [
                ("block radicals lie inside the plane parabolic", rep.radicals_in_p),
                ("first family conjugates into the flag parabolic", rep.corner_3_1_lands_in_q),
                ("second family conjugates into the flag parabolic", rep.corner_1_3_lands_in_q),
                ("negative controls conjugate outside", rep.controls_escape_q),
            ];
            for (what, holds) in claims {
                if let Err(e) = cmp.counts(&format!("{what} over F{p}"), u64::from(holds), 1) {
                    outcome = Err(e);
                    break 'fields;
                }
            }
        }
        finish(self.name(), params, started, outcome)
    }
}

/// Double cosets of the unitary group over F2 via orbits on isotropic
/// planes.
pub struct Gu4Cosets;

impl Gu4Cosets {
    fn body(
        &self,
        cmp: &Comparator,
        params: &mut BTreeMap<String, String>,
    ) -> Result<(), Discrepancy> {
        let d = gu4_double_cosets();
        for c in &d.classes {
            params.insert(format!("coset.{}", c.rep), c.size.to_string());
        }
        cmp.counts(
            "group order: closure against the product formula",
            d.group_order,
            d.formula_order,
        )?;
        cmp.counts("unitary unipotent uppers", d.upper_count as u64, 64)?;
        cmp.counts("torus points", d.torus_count as u64, 9)?;
        cmp.counts("isotropic planes", d.isotropic_planes as u64, 27)?;
        cmp.counts("isotropic lines", d.isotropic_lines as u64, 45)?;
        cmp.counts("double cosets", d.orbit_count as u64, 2)?;
        cmp.counts(
            "distinct cosets among the named representatives",
            u64::from(d.classes[0].orbit != d.classes[1].orbit),
            1,
        )?;
        cmp.counts("coset sizes partition the group", d.total(), d.group_order)?;
        cmp.counts(
            "plane transitivity ties the stabilizer order to the group order",
            d.p_order * d.isotropic_planes as u64,
            d.group_order,
        )?;
        cmp.counts(
            "line transitivity ties the stabilizer order to the group order",
            d.q_order * d.isotropic_lines as u64,
            d.group_order,
        )?;
        let identity_class = d
            .classes
            .iter()
            .find(|c| c.rep == "1")
            .expect("identity representative registered");
        cmp.counts(
            "identity coset against the parabolic product set size",
            identity_class.size,
            d.q_order * d.p_order / d.borel_order,
        )?;
        let mut sizes: Vec<u64> = d.classes.iter().map(|c| c.size).collect();
        sizes.sort_unstable();
        cmp.items("coset sizes", &sizes, &[8640u64, 69120])?;
        Ok(())
    }
}

impl Check for Gu4Cosets {
    fn name(&self) -> &'static str {
        "gu4-cosets"
    }
    fn summary(&self) -> &'static str {
        "exactly two double cosets in the unitary group over F2"
    }
    fn run(&self, ctx: &RunCtx) -> CheckReport {
        let started = Instant::now();
        let cmp = comparator(ctx);
        let mut params = BTreeMap::new();
        let outcome = self.body(&cmp, &mut params);
        finish(self.name(), params, started, outcome)
    }
}
