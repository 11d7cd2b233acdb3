//! The check registry and runner:
//!
//! - every verification is a [`Check`] behind a trait object,
//!   registered under a stable kebab-case name;
//! - a [`RunCtx`] carries the shared knobs (degree and trial
//!   overrides, seed, sampling bound, fault injection);
//! - [`run_selected`] executes checks on a small thread pool capped
//!   by `RS_VERIFY_THREADS` and returns reports in name order;
//! - a [`SuiteReport`] renders as plain text or as JSON that is
//!   byte-identical across runs with the same configuration and seed,
//!   apart from the elapsed-time fields.

pub mod checks;

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use crate::verify::Discrepancy;

/// Shared execution parameters for a run of one or more checks.
#[derive(Debug, Clone)]
pub struct RunCtx {
    /// Series window override; each check falls back to its default.
    pub degree: Option<u32>,
    /// Trial-count override; each check falls back to its default.
    pub trials: Option<u32>,
    /// Root seed; each check derives an independent stream from it.
    pub seed: u64,
    /// Bound on sampled numerators and denominators.
    pub q_bound: i64,
    /// When set, comparators perturb one side to force a failure.
    pub tamper: bool,
}

impl RunCtx {
    /// Defaults matching the command-line interface.
    pub fn new(seed: u64) -> Self {
        RunCtx {
            degree: None,
            trials: None,
            seed,
            q_bound: 20,
            tamper: false,
        }
    }
}

/// Outcome of a single check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    /// Lowercase label used in reports.
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

/// What one check reports back.
#[derive(Debug, Clone)]
pub struct CheckReport {
    /// Registered name.
    pub name: &'static str,
    /// Effective parameters, including every sampled point.
    pub params: BTreeMap<String, String>,
    pub status: Status,
    /// The first located failure, present exactly when status is fail.
    pub discrepancy: Option<Discrepancy>,
    /// Wall-clock time; the only nondeterministic field.
    pub elapsed_ms: u128,
}

/// A named verification strategy.
pub trait Check: Send + Sync {
    /// Stable registry name.
    fn name(&self) -> &'static str;
    /// One-line description of what is being compared.
    fn summary(&self) -> &'static str;
    /// Default series window, when the check has one.
    fn default_degree(&self) -> Option<u32> {
        None
    }
    /// Default number of sampled trials, when the check has one.
    fn default_trials(&self) -> Option<u32> {
        None
    }
    /// Executes the check under the given context.
    fn run(&self, ctx: &RunCtx) -> CheckReport;
}

/// Wraps a check body's outcome into a report with timing.
pub(crate) fn finish(
    name: &'static str,
    params: BTreeMap<String, String>,
    started: Instant,
    outcome: Result<(), Discrepancy>,
) -> CheckReport {
    let (status, discrepancy) = match outcome {
        Ok(()) => (Status::Pass, None),
        Err(d) => (Status::Fail, Some(d)),
    };
    CheckReport {
        name,
        params,
        status,
        discrepancy,
        elapsed_ms: started.elapsed().as_millis(),
    }
}

/// All checks, sorted by name.
pub fn registry() -> Vec<Box<dyn Check>> {
    let mut all: Vec<Box<dyn Check>> = vec![
        Box::new(checks::LemmaTripleSum),
        Box::new(checks::LittlewoodClosures),
        Box::new(checks::UnramifiedGl4Value),
        Box::new(checks::InnerIntegrals),
        Box::new(checks::CharacterOracles),
        Box::new(checks::BranchingClosedForm),
        Box::new(checks::HeckeSeriesIdentity),
        Box::new(checks::DualGroupDictionary),
        Box::new(checks::UnitaryInertValue),
        Box::new(checks::UnitarySplitValue),
        Box::new(checks::Gl4CosetsF2),
        Box::new(checks::Gl4CosetsF3),
        Box::new(checks::Gl4Stabilizers),
        Box::new(checks::Gu4Cosets),
    ];
    all.sort_by_key(|c| c.name());
    all
}

/// Looks a check up by its registered name.
pub fn find(name: &str) -> Option<Box<dyn Check>> {
    registry().into_iter().find(|c| c.name() == name)
}

fn thread_cap() -> usize {
    if let Ok(v) = std::env::var("RS_VERIFY_THREADS") {
        if let Ok(n) = v.trim().parse::<usize>() {
            return n.max(1);
        }
    }
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}

/// Runs the given checks, in parallel up to the thread cap, and
/// returns their reports ordered by check name.
pub fn run_selected(selected: &[Box<dyn Check>], ctx: &RunCtx) -> Vec<CheckReport> {
    let workers = thread_cap().min(selected.len().max(1));
    let mut slots: Vec<Option<CheckReport>> = Vec::new();
    slots.resize_with(selected.len(), || None);
    if workers <= 1 {
        for (i, c) in selected.iter().enumerate() {
            slots[i] = Some(c.run(ctx));
        }
    } else {
        let next = AtomicUsize::new(0);
        let results = Mutex::new(&mut slots);
        std::thread::scope(|scope| {
            for _ in 0..workers {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= selected.len() {
                        break;
                    }
                    let report = selected[i].run(ctx);
                    results.lock().expect("worker panicked")[i] = Some(report);
                });
            }
        });
    }
    let mut reports: Vec<CheckReport> = slots
        .into_iter()
        .map(|r| r.expect("every slot filled"))
        .collect();
    reports.sort_by_key(|r| r.name);
    reports
}

/// A full run: version, seed, and the per-check reports.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub version: String,
    pub seed: u64,
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    /// Assembles a report from finished checks.
    pub fn new(seed: u64, checks: Vec<CheckReport>) -> Self {
        SuiteReport {
            version: env!("CARGO_PKG_VERSION").to_string(),
            seed,
            checks,
        }
    }

    /// True when every check passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    /// JSON rendering; deterministic for a fixed configuration and
    /// seed except for the `elapsedMs` fields.
    pub fn to_json(&self) -> serde_json::Value {
        let checks: Vec<serde_json::Value> = self
            .checks
            .iter()
            .map(|c| {
                let mut obj = serde_json::Map::new();
                obj.insert("name".into(), serde_json::json!(c.name));
                obj.insert("params".into(), serde_json::json!(c.params));
                obj.insert("status".into(), serde_json::json!(c.status.as_str()));
                if let Some(d) = &c.discrepancy {
                    obj.insert(
                        "discrepancy".into(),
                        serde_json::json!({
                            "location": d.location,
                            "lhs": d.lhs,
                            "rhs": d.rhs,
                        }),
                    );
                }
                obj.insert("elapsedMs".into(), serde_json::json!(c.elapsed_ms as u64));
                serde_json::Value::Object(obj)
            })
            .collect();
        serde_json::json!({
            "version": self.version,
            "seed": self.seed,
            "checks": checks,
        })
    }

    /// Plain-text rendering, one line per check plus a tally.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let width = self
            .checks
            .iter()
            .map(|c| c.name.len())
            .max()
            .unwrap_or(0);
        for c in &self.checks {
            let label = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
            };
            out.push_str(&format!(
                "{:width$}  {}  {:>6} ms\n",
                c.name, label, c.elapsed_ms
            ));
            if let Some(d) = &c.discrepancy {
                out.push_str(&format!("{:width$}  {}\n", "", d));
            }
        }
        let failed = self
            .checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .count();
        if failed == 0 {
            out.push_str(&format!("all {} checks passed\n", self.checks.len()));
        } else {
            out.push_str(&format!(
                "{failed} of {} checks failed\n",
                self.checks.len()
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_sorted_and_named_uniquely() {
        let names: Vec<&str> = registry().iter().map(|c| c.name()).collect();
        let mut sorted = names.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(names, sorted);
        assert_eq!(names.len(), 14);
    }

    #[test]
    fn find_resolves_registered_names_only() {
        assert!(find("lemma-2-2").is_some());
        assert!(find("gu4-cosets").is_some());
        assert!(find("no-such-check").is_none());
    }

    #[test]
    fn json_shape_is_stable() {
        let report = SuiteReport::new(
            7,
            vec![CheckReport {
                name: "lr-closed-form",
                params: BTreeMap::new(),
                status: Status::Pass,
                discrepancy: None,
                elapsed_ms: 3,
            }],
        );
        let v = report.to_json();
        assert_eq!(v["seed"], 7);
        assert_eq!(v["checks"][0]["name"], "lr-closed-form");
        assert_eq!(v["checks"][0]["status"], "pass");
        assert!(v["checks"][0].get("discrepancy").is_none());
    }

    #[test]
    fn text_marks_failures_and_tallies() {
        let report = SuiteReport::new(
            1,
            vec![CheckReport {
                name: "bfg-identity",
                params: BTreeMap::new(),
                status: Status::Fail,
                discrepancy: Some(Discrepancy {
                    location: "coefficient of V".into(),
                    lhs: "1".into(),
                    rhs: "2".into(),
                }),
                elapsed_ms: 1,
            }],
        );
        let text = report.to_text();
        assert!(text.contains("FAIL"));
        assert!(text.contains("coefficient of V"));
        assert!(text.contains("1 of 1 checks failed"));
    }
}
