//! Identity checks.
//!
//! Every identity linking the computed quantities becomes a residual check
//! that yields a [`VerifyReport`]. Cross-representation checks use the sum
//! of the claimed error bounds as tolerance, so a failure points at a bound
//! that was claimed too tight, not merely at a wrong digit.
//!
//! Checks are grouped under string ids (see [`CHECK_IDS`]); [`run_suite`]
//! runs a selection over default grids in parallel and returns the reports
//! sorted by id and inputs.

mod constants;
mod identities;
mod integrals;
mod report;
mod routes;
mod structure;

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;

use crate::error::{domain, Error, Result};
use crate::numeric::{ExtReal, SeriesValue, DEFAULT_DIGITS};

pub use identities::{check_cotangent, check_lemma31};
pub use integrals::{check_vanishing_integral, check_vanishing_integrals, VanishingIntegral};
pub use report::VerifyReport;
pub use structure::{check_g_functions, check_zero_structure, zero_scan, DIGAMMA_ZERO};

/// Tolerance settings shared by every check.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TolPolicy {
    /// Absolute target handed to each series evaluation.
    pub tol: f64,
    /// Precision of the grid arguments, in decimal digits.
    pub digits: u32,
    /// Added to the summed claimed errors of agreement checks.
    pub slack: f64,
}

impl Default for TolPolicy {
    fn default() -> Self {
        TolPolicy {
            tol: 1e-12,
            digits: DEFAULT_DIGITS,
            slack: 0.0,
        }
    }
}

impl TolPolicy {
    pub fn new(tol: f64, digits: u32) -> Result<Self> {
        if !(tol > 0.0 && tol <= 1e-3) {
            return Err(domain(format!(
                "suite tolerance must lie in (0, 1e-3], got {tol:e}"
            )));
        }
        if digits < 16 {
            return Err(domain(format!(
                "suite precision must be at least 16 digits, got {digits}"
            )));
        }
        Ok(TolPolicy {
            tol,
            digits,
            slack: 0.0,
        })
    }

    pub(crate) fn num(&self, v: &str) -> ExtReal {
        ExtReal::parse(v, self.digits).expect("grid literal parses")
    }

    pub(crate) fn slack(&self) -> ExtReal {
        ExtReal::from_f64(self.slack, self.digits)
    }
}

type Check = fn(&TolPolicy) -> Vec<VerifyReport>;

const REGISTRY: &[(&str, Check)] = &[
    ("apostol", constants::apostol),
    ("cotangent", identities::cotangent),
    ("delta", constants::delta),
    ("deriv_shift", identities::deriv_shift),
    ("derivative_law", integrals::derivative_law),
    ("difference", routes::difference),
    ("digamma_rational", routes::digamma_rational),
    ("dilcher", constants::dilcher),
    ("eta", constants::eta),
    ("g_functions", structure::g_functions),
    ("gamma1_routes", routes::gamma1_routes),
    ("hasse", routes::hasse),
    ("integral", integrals::integral),
    ("laurent", routes::laurent),
    ("lemma31", identities::lemma31),
    ("lerch", routes::lerch),
    ("rational_gamma1", routes::rational_gamma1),
    ("recurrence", identities::recurrence),
    ("representations", routes::representations),
    ("shift", identities::shift),
    ("sign_near_zero", structure::sign_near_zero),
    ("vanishing_integrals", integrals::vanishing_integrals),
    ("weierstrass", identities::weierstrass),
    ("zero_structure", structure::zero_structure),
];

/// Every check id, in sorted order.
pub const CHECK_IDS: [&str; 24] = [
    "apostol",
    "cotangent",
    "delta",
    "deriv_shift",
    "derivative_law",
    "difference",
    "digamma_rational",
    "dilcher",
    "eta",
    "g_functions",
    "gamma1_routes",
    "hasse",
    "integral",
    "laurent",
    "lemma31",
    "lerch",
    "rational_gamma1",
    "recurrence",
    "representations",
    "shift",
    "sign_near_zero",
    "vanishing_integrals",
    "weierstrass",
    "zero_structure",
];

/// Resolves a selection to registered ids; `all` selects every check.
pub fn resolve_selection<S: AsRef<str>>(selection: &[S]) -> Result<Vec<&'static str>> {
    let mut ids = BTreeSet::new();
    for s in selection {
        let s = s.as_ref().trim();
        if s == "all" {
            ids.extend(CHECK_IDS);
            continue;
        }
        match CHECK_IDS.iter().find(|&&id| id == s) {
            Some(id) => {
                ids.insert(*id);
            }
            None => return Err(Error::UnknownCheck(s.to_string())),
        }
    }
    Ok(ids.into_iter().collect())
}

/// Runs the selected checks over their default grids.
///
/// The result is sorted by check id and then by inputs, so it does not
/// depend on scheduling. An empty selection yields an empty report.
pub fn run_suite<S: AsRef<str>>(selection: &[S], policy: &TolPolicy) -> Result<Vec<VerifyReport>> {
    let ids = resolve_selection(selection)?;
    let mut reports: Vec<VerifyReport> = ids
        .par_iter()
        .flat_map(|id| {
            let check = REGISTRY
                .iter()
                .find(|(name, _)| name == id)
                .expect("registered")
                .1;
            check(policy)
        })
        .collect();
    reports.sort_by_cached_key(|r| r.sort_key());
    Ok(reports)
}

/// Numbers a check compares, before they become a report.
pub(crate) struct Outcome {
    residual: ExtReal,
    tolerance: ExtReal,
    note: Option<String>,
}

impl Outcome {
    pub(crate) fn new(residual: ExtReal, tolerance: ExtReal) -> Self {
        Outcome {
            residual,
            tolerance,
            note: None,
        }
    }

    /// `|a − b|` against `abs_err_a + abs_err_b + slack`.
    pub(crate) fn agree(a: &SeriesValue, b: &SeriesValue, slack: &ExtReal) -> Self {
        Outcome::new(a.gap(b), &a.abs_err + &b.abs_err + slack)
    }

    /// Passes iff `holds`; the residual is `miss` when it does not.
    pub(crate) fn property(holds: bool, miss: ExtReal) -> Self {
        let digits = miss.digits();
        let residual = match (holds, miss.is_zero()) {
            (true, _) => ExtReal::zero(digits),
            (false, true) => ExtReal::one(digits),
            (false, false) => miss.abs(),
        };
        Outcome::new(residual, ExtReal::zero(digits))
    }

    pub(crate) fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Runs one grid point, turning a computation error into a failed report.
pub(crate) fn point(
    id: &str,
    inputs: Vec<(&'static str, String)>,
    f: impl FnOnce() -> Result<Outcome>,
) -> VerifyReport {
    let start = Instant::now();
    let report = match f() {
        Ok(o) => {
            let r = VerifyReport::new(id, inputs, o.residual, o.tolerance);
            match o.note {
                Some(n) => r.annotate(n),
                None => r,
            }
        }
        Err(e) => VerifyReport::errored(id, inputs, &e),
    };
    report.timed(start)
}

pub(crate) fn show(x: &ExtReal) -> String {
    x.to_decimal(20)
}
