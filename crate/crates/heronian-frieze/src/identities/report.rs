//! Structured results for identity checks.
//!
//! Every identity check in this module tree produces a [`CheckReport`]: the
//! name of the identity, the indices it was instantiated with, the residuals
//! it computed, and a verdict.  Residuals come in two flavours:
//!
//! * **exact** — differences of rational expressions that a theorem claims
//!   vanish.  The verdict is [`Verdict::Holds`] iff every residual is exactly
//!   the rational number zero; there is no tolerance on this path.
//! * **float** — values from the floating-point chord-product oracle, where
//!   square roots force approximate arithmetic.  The verdict is
//!   [`Verdict::Holds`] iff every residual is within
//!   [`ORACLE_RELATIVE_TOLERANCE`] of zero, relative to a caller-supplied
//!   scale (the largest summand entering the computation).
//!
//! A check whose hypotheses the input fails to satisfy is reported as
//! [`Verdict::Skipped`] with the violated hypothesis spelled out in
//! `reason`, rather than silently omitted; the theorems verified here have
//! sharp parity and divisibility hypotheses that are worth surfacing.
//!
//! Reports serialize to the JSON shape
//! `{"identity": …, "params": {…}, "residuals": […], "verdict": …,
//! "reason"?: …}` with exact residuals rendered as `["num", "den"]` string
//! pairs and oracle residuals as plain numbers.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::rational::ExactRational;

/// Relative tolerance for the floating-point chord-product oracle.
///
/// An oracle value multiplies up to `C(n-1, 2)` square-root factors, each
/// contributing a fraction of an ulp of rounding error; at the instance
/// sizes verified here the accumulated error stays below a few dozen ulps.
/// `1e-9` is loose enough that a correct implementation never trips it and
/// tight enough that a wrong sign, index, or exponent (which changes the
/// value by whole factors) always does.
pub const ORACLE_RELATIVE_TOLERANCE: f64 = 1e-9;

/// Parameter assignment a check was instantiated with, keyed by argument
/// name (`"m"`, `"q"`, …).  A `BTreeMap` keeps serialization and report
/// ordering deterministic.
pub type CheckParams = BTreeMap<String, i64>;

/// Outcome of a single identity check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    /// Every residual vanished (exactly, or within the oracle tolerance).
    Holds,
    /// At least one residual failed to vanish.
    Violated,
    /// The check's hypotheses were not satisfied; see the report's reason.
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = match self {
            Verdict::Holds => "holds",
            Verdict::Violated => "violated",
            Verdict::Skipped => "skipped",
        };
        f.write_str(word)
    }
}

/// Residuals computed by a check: exact rationals or oracle floats.
///
/// The untagged serialization renders the exact path as a list of
/// `["num", "den"]` pairs and the oracle path as a list of numbers, which is
/// also how the two arms are told apart when parsing a report back in.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Residuals {
    /// Differences of rational expressions; zero means the identity holds.
    Exact(Vec<ExactRational>),
    /// Floating-point oracle differences, judged against a relative scale.
    Float(Vec<f64>),
}

impl Residuals {
    /// The exact residuals, if this is the exact arm.
    pub fn as_exact(&self) -> Option<&[ExactRational]> {
        match self {
            Residuals::Exact(values) => Some(values),
            Residuals::Float(_) => None,
        }
    }

    /// The floating-point residuals, if this is the oracle arm.
    pub fn as_float(&self) -> Option<&[f64]> {
        match self {
            Residuals::Exact(_) => None,
            Residuals::Float(values) => Some(values),
        }
    }

    /// Number of residuals recorded.
    pub fn len(&self) -> usize {
        match self {
            Residuals::Exact(values) => values.len(),
            Residuals::Float(values) => values.len(),
        }
    }

    /// True when no residuals were recorded (e.g. a skipped check).
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Result of one identity check on one parameter assignment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    /// Name tag of the identity (matches the CLI selection tags).
    pub identity: String,
    /// The indices/arguments the check was instantiated with.
    pub params: CheckParams,
    /// The residuals the check computed (empty for most skips).
    pub residuals: Residuals,
    /// Whether the identity held, was violated, or could not be checked.
    pub verdict: Verdict,
    /// For skipped checks, the hypothesis that failed; for informational
    /// reports, what the residual means.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
}

impl CheckReport {
    /// Report for an exact-arithmetic check: holds iff every residual is
    /// exactly zero.
    pub fn exact(
        identity: impl Into<String>,
        params: &[(&str, i64)],
        residuals: Vec<ExactRational>,
    ) -> Self {
        let verdict = if residuals.iter().all(ExactRational::is_zero) {
            Verdict::Holds
        } else {
            Verdict::Violated
        };
        CheckReport {
            identity: identity.into(),
            params: params_map(params),
            residuals: Residuals::Exact(residuals),
            verdict,
            reason: None,
        }
    }

    /// Report for a floating-point oracle check: holds iff every residual
    /// satisfies `|residual| <= ORACLE_RELATIVE_TOLERANCE * scale`.
    ///
    /// `scale` should be the largest absolute summand entering the
    /// computation, so that the tolerance is relative to the magnitudes that
    /// actually cancelled.
    pub fn float(
        identity: impl Into<String>,
        params: &[(&str, i64)],
        residuals: Vec<f64>,
        scale: f64,
    ) -> Self {
        let bound = ORACLE_RELATIVE_TOLERANCE * scale.abs();
        let within = |r: &f64| r.is_finite() && r.abs() <= bound;
        let verdict = if residuals.iter().all(within) {
            Verdict::Holds
        } else {
            Verdict::Violated
        };
        CheckReport {
            identity: identity.into(),
            params: params_map(params),
            residuals: Residuals::Float(residuals),
            verdict,
            reason: None,
        }
    }

    /// Report for a check whose hypotheses the input does not satisfy.
    pub fn skipped(
        identity: impl Into<String>,
        params: &[(&str, i64)],
        reason: impl Into<String>,
    ) -> Self {
        CheckReport {
            identity: identity.into(),
            params: params_map(params),
            residuals: Residuals::Exact(Vec::new()),
            verdict: Verdict::Skipped,
            reason: Some(reason.into()),
        }
    }

    /// Report computed for information only, without a pass/fail claim:
    /// the residual is recorded but the verdict stays `Skipped`.
    ///
    /// Used where a determinant is computable but no theorem asserts that it
    /// vanishes (so neither `holds` nor `violated` would be honest).
    pub fn informational(
        identity: impl Into<String>,
        params: &[(&str, i64)],
        residuals: Vec<ExactRational>,
        reason: impl Into<String>,
    ) -> Self {
        CheckReport {
            identity: identity.into(),
            params: params_map(params),
            residuals: Residuals::Exact(residuals),
            verdict: Verdict::Skipped,
            reason: Some(reason.into()),
        }
    }

    /// True when the verdict is [`Verdict::Violated`].
    pub fn is_violated(&self) -> bool {
        self.verdict == Verdict::Violated
    }

    /// One-line human-readable summary, e.g.
    /// `det3 {i=1, j=2, k=3, l=4}: holds`.
    pub fn summary_line(&self) -> String {
        let mut line = self.identity.clone();
        if !self.params.is_empty() {
            let joined = self
                .params
                .iter()
                .map(|(key, value)| format!("{key}={value}"))
                .collect::<Vec<_>>()
                .join(", ");
            line.push_str(&format!(" {{{joined}}}"));
        }
        line.push_str(&format!(": {}", self.verdict));
        if let Some(reason) = &self.reason {
            line.push_str(&format!(" ({reason})"));
        }
        line
    }
}

/// Builds a parameter map from `(name, value)` pairs.
pub fn params_map(pairs: &[(&str, i64)]) -> CheckParams {
    pairs
        .iter()
        .map(|(key, value)| ((*key).to_owned(), *value))
        .collect()
}

/// Sorts reports by `(identity, params)` so that output order is
/// deterministic regardless of the order checks were executed in.
///
/// Parameter maps compare entry-wise (keys then values, numerically), so
/// `{b=2}` sorts before `{b=10}`.
pub fn sort_reports(reports: &mut [CheckReport]) {
    reports.sort_by(|left, right| {
        left.identity
            .cmp(&right.identity)
            .then_with(|| left.params.cmp(&right.params))
    });
}
