use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::Serialize;

use crate::Rational;

/// Outcome of a single identity check.
///
/// `passed` holds exactly when `residual <= tolerance`; exact checks report
/// residual 0 or 1 with tolerance 0. Guard rejections are reported with
/// `skipped = true` (and the sentinel residual 1 over tolerance 0); summaries
/// and exit codes never count a skipped case as a failure.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub check_id: String,
    pub inputs: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub skipped: bool,
    pub terms_used: u64,
}

impl VerificationReport {
    pub fn numeric(
        check_id: &str,
        inputs: BTreeMap<String, String>,
        lhs: Complex64,
        rhs: Complex64,
        residual: f64,
        tolerance: f64,
        terms_used: u64,
    ) -> Self {
        debug_assert!(residual.is_finite() && residual >= 0.0);
        VerificationReport {
            check_id: check_id.to_string(),
            inputs,
            lhs: render_complex(lhs),
            rhs: render_complex(rhs),
            residual,
            tolerance,
            passed: residual <= tolerance,
            skipped: false,
            terms_used,
        }
    }

    /// An exact comparison: residual 0 when the sides agree, 1 otherwise.
    pub fn exact(
        check_id: &str,
        inputs: BTreeMap<String, String>,
        lhs: String,
        rhs: String,
        equal: bool,
    ) -> Self {
        VerificationReport {
            check_id: check_id.to_string(),
            inputs,
            lhs,
            rhs,
            residual: if equal { 0.0 } else { 1.0 },
            tolerance: 0.0,
            passed: equal,
            skipped: false,
            terms_used: 0,
        }
    }

    pub fn skip(check_id: &str, mut inputs: BTreeMap<String, String>, reason: &str) -> Self {
        inputs.insert("skip_reason".to_string(), reason.to_string());
        VerificationReport {
            check_id: check_id.to_string(),
            inputs,
            lhs: String::new(),
            rhs: String::new(),
            residual: 1.0,
            tolerance: 0.0,
            passed: false,
            skipped: true,
            terms_used: 0,
        }
    }

    pub fn failure(check_id: &str, mut inputs: BTreeMap<String, String>, reason: &str) -> Self {
        inputs.insert("error".to_string(), reason.to_string());
        VerificationReport {
            check_id: check_id.to_string(),
            inputs,
            lhs: String::new(),
            rhs: String::new(),
            residual: 1.0,
            tolerance: 0.0,
            passed: false,
            skipped: false,
            terms_used: 0,
        }
    }

    pub fn failed(&self) -> bool {
        !self.passed && !self.skipped
    }
}

pub fn render_complex(v: Complex64) -> String {
    format!("{}{}{}i", v.re, if v.im < 0.0 { "" } else { "+" }, v.im)
}

pub fn render_rational(r: Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Per-check pass/fail/skip counts plus suite totals.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct SuiteSummary {
    pub counts: BTreeMap<String, Counts>,
    pub passed: u64,
    pub failed: u64,
    pub skipped: u64,
    pub all_passed: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Counts {
    pub pass: u64,
    pub fail: u64,
    pub skip: u64,
}

impl SuiteSummary {
    pub fn from_reports(reports: &[VerificationReport]) -> Self {
        let mut summary = SuiteSummary::default();
        for r in reports {
            let c = summary.counts.entry(r.check_id.clone()).or_default();
            if r.skipped {
                c.skip += 1;
                summary.skipped += 1;
            } else if r.passed {
                c.pass += 1;
                summary.passed += 1;
            } else {
                c.fail += 1;
                summary.failed += 1;
            }
        }
        summary.all_passed = summary.failed == 0;
        summary
    }
}
