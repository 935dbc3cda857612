//! Hasse's globally convergent series for the Hurwitz zeta function,
//!
//! ```text
//! ζ(s, x) = 1/(s−1) Σ_{n≥0} 1/(n+1) Σ_{k=0..n} (−1)^k C(n,k) (x+k)^(1−s).
//! ```
//!
//! The inner sums are `n`-th forward differences of `t ↦ t^(1−s)`; they
//! cancel catastrophically, so each pass runs with `n` extra bits. For
//! non-integer `s` the outer terms decay only algebraically, so the error
//! claim combines the consecutive-small-terms stop rule with a tail
//! estimate from the observed decay rate. When that estimate cannot be
//! brought under `tol` within the term budget the call fails rather than
//! report a value with a fictitious bound.

use rug::Float;

use crate::error::{domain, Error, Result};
use crate::numeric::ext::{digits_to_bits, working_digits};
use crate::numeric::{CompensatedSum, ExtReal, SeriesValue};

/// Outer-term budget of the first pass; doubled on each retry.
const FIRST_BUDGET: usize = 64;

/// Largest outer-term budget.
pub const MAX_BUDGET: usize = 4096;

/// Consecutive sub-threshold outer terms required before stopping.
const QUIET_RUN: usize = 5;

/// Pole exclusion radius around `s = 1`.
const POLE_RADIUS: f64 = 1e-6;

/// `ζ(s, x)` from Hasse's series, to absolute tolerance `tol`.
pub fn hurwitz_hasse(s: &ExtReal, x: &ExtReal, tol: f64) -> Result<SeriesValue> {
    hurwitz_hasse_budget(s, x, tol, MAX_BUDGET)
}

/// [`hurwitz_hasse`] with the outer-term budget capped at `max_budget`.
pub fn hurwitz_hasse_budget(
    s: &ExtReal,
    x: &ExtReal,
    tol: f64,
    max_budget: usize,
) -> Result<SeriesValue> {
    if !x.is_positive() {
        return Err(domain(format!("Hurwitz shift x must be > 0, got {x}")));
    }
    if (s - 1).abs().to_f64() <= POLE_RADIUS {
        return Err(Error::Pole { s: s.to_string() });
    }
    if !(tol > 0.0) {
        return Err(domain("tolerance must be positive"));
    }
    let digits = working_digits(s.digits().max(x.digits()), tol);
    if s.is_integer() && !s.is_positive() {
        let degree = (1 - s.to_i64().unwrap_or(0)) as usize;
        return terminating(s, x, degree, digits);
    }
    let mut budget = FIRST_BUDGET;
    loop {
        match pass(s, x, tol, budget, digits) {
            Ok(v) => return Ok(v),
            Err(estimate) if budget >= max_budget => {
                return Err(Error::NotConverged {
                    what: "hurwitz_hasse",
                    detail: format!(
                    "tail estimate {estimate:.3e} exceeds tol {tol:.1e} after {budget} outer terms"
                ),
                })
            }
            Err(_) => budget *= 2,
        }
    }
}

/// Working bits for a pass with `budget` outer terms.
fn pass_bits(s: &ExtReal, x: &ExtReal, budget: usize, digits: u32) -> u32 {
    let growth = ((s - 1).abs().to_f64() * (x.to_f64() + budget as f64 + 1.0).log2()).ceil();
    digits_to_bits(digits) + budget as u32 + growth as u32 + 64
}

/// Inner sums `T_n = Σ_k (−1)^k C(n,k) (x+k)^(1−s)` for `n ≤ budget`,
/// by repeated in-place differencing.
fn inner_sums(s: &ExtReal, x: &ExtReal, budget: usize, bits: u32) -> Vec<Float> {
    let e = Float::with_val(bits, 1 - s.as_float());
    let xb = Float::with_val(bits, x.as_float());
    let mut v: Vec<Float> = (0..=budget)
        .map(|j| {
            let base = Float::with_val(bits, &xb + j as u32);
            let ln = base.ln();
            Float::with_val(bits, &ln * &e).exp()
        })
        .collect();
    let mut out = Vec::with_capacity(budget + 1);
    out.push(v[0].clone());
    for n in 1..=budget {
        for j in 0..=budget - n {
            let cur = std::mem::replace(&mut v[j], Float::new(2));
            v[j] = Float::with_val(bits, &v[j + 1] - &cur);
        }
        // v[0] now holds the n-th forward difference Δ^n h(x) = (−1)^n T_n.
        let t = if n % 2 == 0 {
            v[0].clone()
        } else {
            Float::with_val(bits, -&v[0])
        };
        out.push(t);
    }
    out
}

fn pass(
    s: &ExtReal,
    x: &ExtReal,
    tol: f64,
    budget: usize,
    digits: u32,
) -> std::result::Result<SeriesValue, f64> {
    let bits = pass_bits(s, x, budget, digits);
    let inner = inner_sums(s, x, budget, bits);
    let sm1 = Float::with_val(bits, s.as_float() - 1u32);
    let mut acc = CompensatedSum::new(digits);
    let mut mags: Vec<f64> = Vec::with_capacity(budget + 1);
    let mut quiet = 0;
    let mut estimate = f64::INFINITY;
    for (n, t) in inner.iter().enumerate() {
        let term = Float::with_val(bits, t / &sm1) / (n as u32 + 1);
        let mag = term.to_f64().abs();
        acc.add(&ExtReal::from_float(term).with_digits(digits));
        mags.push(mag);
        quiet = if mag < tol / 10.0 { quiet + 1 } else { 0 };
        if quiet >= QUIET_RUN && n >= 16 {
            estimate = tail_estimate(&mags);
            if estimate <= tol / 2.0 {
                let value = acc.value();
                let err = ExtReal::from_f64(estimate, digits) + acc.rounding_bound();
                return Ok(SeriesValue::new(value, err, n as u64 + 1, "hasse"));
            }
        }
    }
    if estimate.is_infinite() {
        estimate = tail_estimate(&mags);
    }
    Err(estimate)
}

/// Tail bound for outer terms decaying like `n^(−α)`, with `α` read off the
/// largest terms near `n` and near `n/2`; twice the integral estimate
/// `|t_n| n / (α − 1)`.
fn tail_estimate(mags: &[f64]) -> f64 {
    let n = mags.len() - 1;
    let window = |end: usize| {
        mags[end.saturating_sub(4)..=end]
            .iter()
            .cloned()
            .fold(0.0, f64::max)
    };
    let a = window(n);
    if a == 0.0 {
        return 0.0;
    }
    let b = window(n / 2);
    if b <= a {
        return f64::INFINITY;
    }
    let alpha = (b / a).log2() / ((n as f64) / ((n / 2) as f64)).log2();
    if alpha <= 1.05 {
        return f64::INFINITY;
    }
    2.0 * a * n as f64 / (alpha - 1.0)
}

/// For `s = 1 − d` with `d ≥ 1` the inner sums vanish beyond `n = d`, so
/// the series is a finite sum.
fn terminating(s: &ExtReal, x: &ExtReal, degree: usize, digits: u32) -> Result<SeriesValue> {
    let bits = pass_bits(s, x, degree, digits);
    let inner = inner_sums(s, x, degree, bits);
    let sm1 = Float::with_val(bits, s.as_float() - 1u32);
    let mut acc = CompensatedSum::new(digits);
    for (n, t) in inner.iter().enumerate() {
        let term = Float::with_val(bits, t / &sm1) / (n as u32 + 1);
        acc.add(&ExtReal::from_float(term).with_digits(digits));
    }
    let value = acc.value();
    let err = acc.rounding_bound() + value.ulp();
    Ok(SeriesValue::new(value, err, degree as u64 + 1, "hasse"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta::hurwitz_em;

    fn r(v: &str) -> ExtReal {
        ExtReal::parse(v, 34).unwrap()
    }

    #[test]
    fn terminating_cases() {
        let v = hurwitz_hasse(&r("0"), &r("1"), 1e-12).unwrap();
        assert!((&v.value + &r("0.5")).abs().to_f64() < 1e-25);
        let v = hurwitz_hasse(&r("-1"), &r("1"), 1e-12).unwrap();
        assert!((&v.value - &ExtReal::from_ratio(-1, 12, 34)).abs().to_f64() < 1e-25);
        let v = hurwitz_hasse(&r("0"), &r("0.25"), 1e-12).unwrap();
        assert!((&v.value - &r("0.25")).abs().to_f64() < 1e-25);
    }

    #[test]
    fn basel_needs_loose_tolerance() {
        let v = hurwitz_hasse(&r("2"), &r("1"), 1e-2).unwrap();
        let want = ExtReal::pi(34).square() / 6;
        assert!((&v.value - &want).abs() <= v.abs_err);
        assert!(matches!(
            hurwitz_hasse(&r("2"), &r("1"), 1e-12),
            Err(Error::NotConverged { .. })
        ));
    }

    #[test]
    fn agrees_with_em_when_converged() {
        let s = r("1.5");
        let x = r("3");
        let h = hurwitz_hasse(&s, &x, 1e-6).unwrap();
        let e = hurwitz_em(&s, &x).unwrap();
        assert!(h.agrees_with(&e));
    }

    #[test]
    fn pole_and_domain() {
        assert!(matches!(
            hurwitz_hasse(&r("1.0000001"), &r("1"), 1e-6),
            Err(Error::Pole { .. })
        ));
        assert!(hurwitz_hasse(&r("2"), &r("0"), 1e-6).is_err());
    }
}
