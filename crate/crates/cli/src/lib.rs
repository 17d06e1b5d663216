//! Front end for the Grassmannian qKZ / quantum K-theory toolkit: subcommand
//! plumbing, JSON and text emission, and the verification suite.

pub mod export;
pub mod fixtures;
pub mod suites;

use std::fmt::Write as _;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Duration;

use exact_algebra::Check;
use serde::Serialize;
use thiserror::Error;

pub use export::{export, ExportError, Format, MatrixDoc};
pub use suites::{run_suite, SuiteConfig, Tolerances, SUITE_NAMES};

/// Environment variable holding the worker count for suite runs.
pub const WORKERS_VAR: &str = "GRASSMANN_WORKERS";

#[derive(Debug, Error, PartialEq)]
pub enum ConfigError {
    #[error("unknown suite `{0}` (known: {known})", known = SUITE_NAMES.join(", "))]
    UnknownSuite(String),
    #[error("max_n must lie in 1..=5, got {0}")]
    MaxN(usize),
    #[error("bad tolerance {0}")]
    Tolerance(f64),
    #[error("worker count must be positive")]
    Workers,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub suite: String,
    pub id: String,
    pub anchor: String,
    pub passed: bool,
    pub detail: String,
}

/// A sampled numeric point, printed so that failures can be replayed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Sample {
    pub label: String,
    pub z: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub suites: Vec<String>,
    pub seed: u64,
    pub max_n: usize,
    pub samples: Vec<Sample>,
    pub checks: Vec<CheckRecord>,
    /// Wall time; kept out of the JSON so reports are byte-reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn count_in(&self, suite: &str) -> (usize, usize) {
        let all: Vec<&CheckRecord> = self.checks.iter().filter(|c| c.suite == suite).collect();
        (all.iter().filter(|c| c.passed).count(), all.len())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suites: {}  seed: {}  max_n: {}", self.suites.join(","), self.seed, self.max_n);
        for s in &self.samples {
            let _ = writeln!(out, "sample {}: z = {:?}", s.label, s.z);
        }
        for c in &self.checks {
            let _ = write!(out, "[{}] {}/{} ({})", if c.passed { "pass" } else { "FAIL" }, c.suite, c.id, c.anchor);
            if !c.detail.is_empty() {
                let _ = write!(out, ": {}", c.detail);
            }
            out.push('\n');
        }
        let failed = self.failures().count();
        let _ = writeln!(out, "{} checks, {} failed", self.checks.len(), failed);
        out
    }
}

/// Worker count from `GRASSMANN_WORKERS`, else the available parallelism.
pub fn workers_from_env() -> Result<usize, ConfigError> {
    match std::env::var(WORKERS_VAR) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(0) | Err(_) => Err(ConfigError::Workers),
            Ok(w) => Ok(w),
        },
        Err(_) => Ok(std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)),
    }
}

/// A unit of suite work; `size` is the largest `n` it touches (0 = unbounded table).
pub struct Job {
    pub suite: &'static str,
    pub size: usize,
    pub run: Box<dyn FnOnce() -> Vec<Check> + Send>,
}

impl Job {
    pub fn new(suite: &'static str, size: usize, run: impl FnOnce() -> Vec<Check> + Send + 'static) -> Job {
        Job { suite, size, run: Box::new(run) }
    }
}

/// Run jobs on `workers` threads pulling from a shared queue; output is
/// sorted by (suite, id) so it does not depend on scheduling.
pub fn run_jobs(jobs: Vec<Job>, workers: usize) -> Vec<CheckRecord> {
    let slots: Vec<Mutex<Option<Job>>> = jobs.into_iter().map(|j| Mutex::new(Some(j))).collect();
    let next = AtomicUsize::new(0);
    let out = Mutex::new(Vec::new());
    std::thread::scope(|s| {
        for _ in 0..workers.max(1).min(slots.len().max(1)) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(slot) = slots.get(i) else { break };
                let job = slot.lock().expect("slot").take().expect("job taken once");
                let suite = job.suite;
                let checks = match std::panic::catch_unwind(std::panic::AssertUnwindSafe(job.run)) {
                    Ok(c) => c,
                    Err(_) => vec![Check::new(format!("job {i} panicked"), "panic", false, "")],
                };
                let recs: Vec<CheckRecord> = checks
                    .into_iter()
                    .map(|c| CheckRecord { suite: suite.to_string(), id: c.id, anchor: c.anchor, passed: c.passed, detail: c.detail })
                    .collect();
                out.lock().expect("results").extend(recs);
            });
        }
    });
    let mut v = out.into_inner().expect("results");
    v.sort_by(|a, b| (&a.suite, &a.id, &a.detail).cmp(&(&b.suite, &b.id, &b.detail)));
    v
}
