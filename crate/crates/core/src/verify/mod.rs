//! The identity suite: independent checks run in parallel and collected into
//! a report that depends only on the seed.

mod checks;
mod gen;

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

pub use checks::CHECKS;

pub const DEFAULT_SEED: u64 = 20_260_101;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Result of one check: a one-line summary and, on failure, a short trace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub summary: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub trace: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn get(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "seed {}", self.seed)?;
        for c in &self.checks {
            let s = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
            };
            writeln!(f, "{s} {} ({}): {}", c.id, c.anchor, c.summary)?;
            for t in &c.trace {
                writeln!(f, "    {t}")?;
            }
        }
        let passed = self.checks.iter().filter(|c| c.status == Status::Pass).count();
        writeln!(f, "{passed}/{} passed", self.checks.len())
    }
}

/// What a check function returns when it ran to completion.
pub(crate) struct Outcome {
    pub summary: String,
    pub failures: Vec<String>,
}

/// Failures kept in a trace.
const TRACE_LIMIT: usize = 8;

pub(crate) type CheckFn = fn(&mut ChaCha8Rng, u64) -> Result<Outcome>;

pub struct CheckSpec {
    pub id: &'static str,
    pub anchor: &'static str,
    pub(crate) run: CheckFn,
}

/// Ids of every check, in report order.
pub fn check_ids() -> Vec<&'static str> {
    let mut ids: Vec<_> = CHECKS.iter().map(|c| c.id).collect();
    ids.sort_unstable();
    ids
}

fn run_one(index: usize, spec: &CheckSpec, seed: u64) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ index as u64);
    let (status, summary, trace) = match (spec.run)(&mut rng, seed) {
        Ok(o) if o.failures.is_empty() => (Status::Pass, o.summary, Vec::new()),
        Ok(o) => {
            let n = o.failures.len();
            let mut t: Vec<String> = o.failures.into_iter().take(TRACE_LIMIT).collect();
            if n > TRACE_LIMIT {
                t.push(format!("... {} more", n - TRACE_LIMIT));
            }
            (Status::Fail, o.summary, t)
        }
        Err(e) => (Status::Fail, "error".into(), vec![e.to_string()]),
    };
    CheckResult { id: spec.id.into(), anchor: spec.anchor.into(), status, summary, trace }
}

/// Runs the selected checks on the current rayon pool, sorted by id.
pub(crate) fn run_checks(seed: u64, select: impl Fn(&str) -> bool + Sync) -> Vec<CheckResult> {
    let mut out: Vec<CheckResult> = CHECKS
        .par_iter()
        .enumerate()
        .filter(|(_, c)| select(c.id))
        .map(|(i, c)| run_one(i, c, seed))
        .collect();
    out.sort_by(|a, b| a.id.cmp(&b.id));
    out
}

/// Runs the suite, optionally restricted to one check id and to a thread count.
pub fn run_suite(seed: u64, filter: Option<&str>, threads: Option<usize>) -> Result<Report> {
    if let Some(f) = filter {
        if !CHECKS.iter().any(|c| c.id == f) {
            return Err(Error::Parse(format!("unknown check `{f}`")));
        }
    }
    let go = || Report { seed, checks: run_checks(seed, |id| filter.is_none_or(|f| f == id)) };
    match threads {
        None => Ok(go()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| Error::Unsupported(e.to_string()))?;
            Ok(pool.install(go))
        }
    }
}

/// Text report for the whole suite.
pub fn paper_suite(seed: u64) -> Result<Report> {
    run_suite(seed, None, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_sorted() {
        let ids = check_ids();
        assert_eq!(ids.len(), 18);
        let mut dedup = ids.clone();
        dedup.dedup();
        assert_eq!(dedup, ids);
    }

    #[test]
    fn filter_selects_one_check() {
        let r = run_suite(7, Some("b9-word-problem"), Some(2)).unwrap();
        assert_eq!(r.checks.len(), 1);
        assert!(r.all_pass(), "{r}");
        assert!(run_suite(7, Some("no-such-check"), None).is_err());
    }

    #[test]
    fn seeded_checks_repeat() {
        let a = run_suite(3, Some("gn-relations"), Some(1)).unwrap();
        let b = run_suite(3, Some("gn-relations"), None).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.to_string(), b.to_string());
    }
}
