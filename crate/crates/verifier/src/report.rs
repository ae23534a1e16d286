//! Per-suite and whole-run reports, as text and JSON.

use std::fmt::Write as _;

use serde::Serialize;

use crate::config::SuiteConfig;
use crate::suites::{Outcome, SuiteId, WITNESS_FLOOR};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite_id: SuiteId,
    pub samples: usize,
    pub max_residual: f64,
    pub mean_residual: f64,
    pub tolerance: f64,
    /// Residual of the negative-control witness; must exceed the witness
    /// floor for the suite to pass.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_residual: Option<f64>,
    pub passed: bool,
    #[serde(skip)]
    pub elapsed_ms: u64,
}

impl SuiteReport {
    pub fn from_outcome(id: SuiteId, outcome: &Outcome, tolerance: f64, elapsed_ms: u64) -> Self {
        let samples = outcome.residuals.len();
        // NaN poisons max so a non-finite residual can never pass
        let max_residual = outcome.residuals.iter().fold(0.0f64, |m, &r| {
            if r.is_nan() || m.is_nan() {
                f64::NAN
            } else {
                m.max(r)
            }
        });
        let mean_residual = if samples == 0 {
            0.0
        } else {
            outcome.residuals.iter().sum::<f64>() / samples as f64
        };
        let witness_ok = outcome.witness.is_none_or(|w| w > WITNESS_FLOOR);
        SuiteReport {
            suite_id: id,
            samples,
            max_residual,
            mean_residual,
            tolerance,
            witness_residual: outcome.witness,
            passed: samples > 0 && max_residual < tolerance && witness_ok,
            elapsed_ms,
        }
    }

    pub fn to_text_line(&self, timings: bool) -> String {
        let mut line = format!(
            "{:<4} {:<20} n={:<5} max={:.3e} mean={:.3e} tol={:.0e}",
            if self.passed { "PASS" } else { "FAIL" },
            self.suite_id.as_str(),
            self.samples,
            self.max_residual,
            self.mean_residual,
            self.tolerance,
        );
        if let Some(w) = self.witness_residual {
            let _ = write!(line, " witness={w:.3e} (> {WITNESS_FLOOR:.0e})");
        }
        if timings {
            let _ = write!(line, " {}ms", self.elapsed_ms);
        }
        line
    }
}

/// Same as [`SuiteReport`] but with the timing field serialized.
#[derive(Serialize)]
struct TimedSuiteReport<'a> {
    #[serde(flatten)]
    report: &'a SuiteReport,
    elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub config: SuiteConfig,
    pub suites: Vec<SuiteReport>,
    pub passed: bool,
}

impl RunReport {
    pub fn new(config: SuiteConfig, suites: Vec<SuiteReport>) -> Self {
        let passed = suites.iter().all(|s| s.passed);
        RunReport {
            config,
            suites,
            passed,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }

    /// Pretty JSON. Without `timings` the output depends only on the config,
    /// so repeated runs are byte-identical.
    pub fn to_json(&self, timings: bool) -> String {
        let out = if timings {
            #[derive(Serialize)]
            struct Timed<'a> {
                config: &'a SuiteConfig,
                suites: Vec<TimedSuiteReport<'a>>,
                passed: bool,
            }
            serde_json::to_string_pretty(&Timed {
                config: &self.config,
                suites: self
                    .suites
                    .iter()
                    .map(|report| TimedSuiteReport {
                        report,
                        elapsed_ms: report.elapsed_ms,
                    })
                    .collect(),
                passed: self.passed,
            })
        } else {
            serde_json::to_string_pretty(self)
        };
        let mut s = out.expect("report values serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self, timings: bool) -> String {
        let mut s = format!("seed {}\n", self.config.seed);
        for suite in &self.suites {
            s.push_str(&suite.to_text_line(timings));
            s.push('\n');
        }
        let failed = self.suites.iter().filter(|r| !r.passed).count();
        let _ = writeln!(
            s,
            "{}: {} of {} suites passed",
            if self.passed { "OK" } else { "FAILED" },
            self.suites.len() - failed,
            self.suites.len()
        );
        s
    }
}
