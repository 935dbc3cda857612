//! The record emitted by every identity check.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::numeric::{ExtReal, SeriesValue};

/// Outcome of one identity check.
///
/// `passed` is always `|residual| <= tolerance`; the constructor is the only
/// place it is set. Equality ignores `elapsed`, so two runs of the same
/// check compare equal when their numerical outcome is identical.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub check_id: String,
    pub inputs: BTreeMap<String, String>,
    pub residual: ExtReal,
    pub tolerance: ExtReal,
    pub passed: bool,
    #[serde(serialize_with = "ser_ms", rename = "elapsed_ms")]
    pub elapsed: Duration,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub annotation: Option<String>,
}

fn ser_ms<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

impl PartialEq for VerifyReport {
    fn eq(&self, other: &Self) -> bool {
        self.check_id == other.check_id
            && self.inputs == other.inputs
            && self.residual == other.residual
            && self.tolerance == other.tolerance
            && self.passed == other.passed
            && self.annotation == other.annotation
    }
}

impl VerifyReport {
    pub fn new<'a>(
        check_id: &str,
        inputs: impl IntoIterator<Item = (&'a str, String)>,
        residual: ExtReal,
        tolerance: ExtReal,
    ) -> Self {
        let residual = residual.abs();
        let passed = !residual.is_nan() && residual <= tolerance;
        VerifyReport {
            check_id: check_id.to_string(),
            inputs: inputs
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
            residual,
            tolerance,
            passed,
            elapsed: Duration::ZERO,
            annotation: None,
        }
    }

    /// Residual `|a − b|` against the summed claimed errors plus `slack`.
    pub fn agreement<'a>(
        check_id: &str,
        inputs: impl IntoIterator<Item = (&'a str, String)>,
        a: &SeriesValue,
        b: &SeriesValue,
        slack: &ExtReal,
    ) -> Self {
        let tol = &a.abs_err + &b.abs_err + slack;
        VerifyReport::new(check_id, inputs, a.gap(b), tol)
    }

    /// A failed report for a check whose computation itself errored.
    pub fn errored<'a>(
        check_id: &str,
        inputs: impl IntoIterator<Item = (&'a str, String)>,
        err: &crate::Error,
    ) -> Self {
        let mut r = VerifyReport::new(check_id, inputs, ExtReal::infinity(34), ExtReal::zero(34));
        r.passed = false;
        r.annotation = Some(format!("error: {err}"));
        r
    }

    pub fn annotate(mut self, note: impl Into<String>) -> Self {
        self.annotation = Some(note.into());
        self
    }

    pub fn timed(mut self, start: Instant) -> Self {
        self.elapsed = start.elapsed();
        self
    }

    /// Recomputes the pass flag from the residual and tolerance.
    pub fn consistent(&self) -> bool {
        self.passed == (!self.residual.is_nan() && self.residual.abs() <= self.tolerance)
    }

    /// Sort key: check id, then the rendered inputs.
    pub(crate) fn sort_key(&self) -> (String, Vec<(String, String)>) {
        (
            self.check_id.clone(),
            self.inputs
                .iter()
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        )
    }
}
