//! The constants `η_n` of `ζ'(s)/ζ(s)` and `δ_n` of `ζ(s) − 1/(s−1)`.
//!
//! `log[(s−1)ζ(s)] = −Σ_{k≥1} η_{k−1} (s−1)^k / k`, and
//! `δ_n = (−1)^n [ζ^(n)(0) + n!]`.

use crate::error::{cap, domain, Error, Result};
use crate::numeric::euler_maclaurin::{EmKernel, DEFAULT_ORDER};
use crate::numeric::ext::working_digits;
use crate::numeric::{CompensatedSum, ExtReal, LogPoly, SeriesValue, DEFAULT_DIGITS};
use crate::stieltjes::{gamma_n, Method, StieltjesQuery};

use super::mangoldt::primes_up_to;
use super::power_series::PowerSeries;

/// Largest `n` accepted by [`eta`].
pub const MAX_ETA_ORDER: u32 = 6;

/// Largest von Mangoldt budget accepted by the series route.
pub const MAX_ETA_TERMS: u64 = 100_000_000;

/// How [`eta`] evaluates `η_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EtaRoute {
    /// Partial sum of the von Mangoldt series to `terms`; the series
    /// converges conditionally at prime-number-theorem rate, so no error
    /// bound is claimed.
    Series { terms: u64 },
    /// Coefficient extraction from the Laurent series of `ζ` built out of
    /// `γ_0..γ_{n+1}`.
    FromGamma,
}

pub fn eta(n: u32, route: EtaRoute, tol: f64) -> Result<SeriesValue> {
    cap("n", u64::from(n), u64::from(MAX_ETA_ORDER))?;
    match route {
        EtaRoute::Series { terms } => eta_series(n, terms, working_digits(DEFAULT_DIGITS, tol)),
        EtaRoute::FromGamma => eta_from_gamma(n, tol),
    }
}

fn factorial(n: u32, digits: u32) -> ExtReal {
    (2..=i64::from(n)).fold(ExtReal::one(digits), |acc, k| acc * k)
}

/// `(−1)^n/n! Σ_{k≤K} [Λ(k) log^n k / k − (log^(n+1)(k+1) − log^(n+1) k)/(n+1)]`;
/// the second part telescopes to `log^(n+1)(K+1)/(n+1)`.
fn eta_series(n: u32, terms: u64, digits: u32) -> Result<SeriesValue> {
    if terms < 2 {
        return Err(domain(format!("eta series needs K >= 2, got {terms}")));
    }
    if terms > MAX_ETA_TERMS {
        return Err(Error::BudgetExceeded(format!(
            "eta series budget K = {terms} exceeds {MAX_ETA_TERMS}"
        )));
    }
    let p = n as i32;
    let mut acc = CompensatedSum::new(digits);
    for prime in primes_up_to(terms) {
        let lp = ExtReal::from_u64(prime, digits).ln();
        let mut q = prime;
        let mut m = 1i64;
        loop {
            let ln_q = &lp * m;
            let t = &lp * ln_q.powi(p) / &ExtReal::from_u64(q, digits);
            acc.add(&t);
            match q.checked_mul(prime) {
                Some(next) if next <= terms => {
                    q = next;
                    m += 1;
                }
                _ => break,
            }
        }
    }
    let end = ExtReal::from_u64(terms + 1, digits).ln().powi(p + 1) / (i64::from(n) + 1);
    acc.add(&-end);
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    let value = acc.value() * sign / factorial(n, digits);
    Ok(SeriesValue::new(
        value,
        ExtReal::infinity(digits),
        terms,
        "von_mangoldt_series",
    ))
}

/// `η_n = −(n+1) [w^(n+1)] log P(w)`, `P(w) = 1 + Σ_j (−1)^j γ_j w^(j+1)/j!`.
fn eta_coefficient(n: u32, gammas: &[ExtReal], digits: u32) -> Result<ExtReal> {
    let mut coeffs = vec![ExtReal::one(digits)];
    for (j, g) in gammas.iter().enumerate() {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        coeffs.push(g * sign / factorial(j as u32, digits));
    }
    let log = PowerSeries::new(coeffs)?.log()?;
    let c = log
        .coeff(n as usize + 1)
        .expect("series order covers n + 1");
    Ok(-(c * (i64::from(n) + 1)))
}

fn eta_from_gamma(n: u32, tol: f64) -> Result<SeriesValue> {
    let gamma_tol = tol / (8.0 * (f64::from(n) + 2.0));
    let digits = working_digits(DEFAULT_DIGITS, gamma_tol);
    let one = ExtReal::one(digits);
    let mut gs = Vec::new();
    let mut used = 0;
    for j in 0..=n + 1 {
        let g = gamma_n(&StieltjesQuery::new(
            j,
            one.clone(),
            Method::SeriesB,
            gamma_tol,
        )?)?;
        used += g.terms_used;
        gs.push(g);
    }
    let values: Vec<ExtReal> = gs.iter().map(|g| g.value.clone()).collect();
    let value = eta_coefficient(n, &values, digits)?;
    // First-order propagation, measured by perturbing one γ_j at a time.
    let mut err = value.ulp() * 8;
    for (j, g) in gs.iter().enumerate() {
        let mut bumped = values.clone();
        bumped[j] = &bumped[j] + &g.abs_err;
        let moved = eta_coefficient(n, &bumped, digits)?;
        err += (moved - &value).abs() * 2;
    }
    Ok(SeriesValue::new(value, err, used, "laurent_log"))
}

/// Largest `n` accepted by [`delta`].
pub const MAX_DELTA_ORDER: u32 = 2;

/// `δ_n = lim_N [Σ_{k≤N} log^n k − ∫_1^N log^n x dx − ½ log^n N]`, the
/// limit replaced by the Euler–Maclaurin corrections at `N`.
pub fn delta(n: u32, big_n: u64, tol: f64) -> Result<SeriesValue> {
    cap("n", u64::from(n), u64::from(MAX_DELTA_ORDER))?;
    if big_n < 10 {
        return Err(domain(format!("delta needs N >= 10, got {big_n}")));
    }
    let digits = working_digits(DEFAULT_DIGITS, tol);
    let p = n as i32;
    let mut acc = CompensatedSum::new(digits);
    for k in 2..=big_n {
        acc.add(&ExtReal::from_u64(k, digits).ln().powi(p));
    }
    if n == 0 {
        acc.add(&ExtReal::one(digits));
    }
    let nn = ExtReal::from_u64(big_n, digits);
    let ln_n = nn.ln();
    // ∫_1^N log^n = (−1)^n n! (−1 + N Σ_{j≤n} (−1)^j log^j N / j!).
    let mut inner = ExtReal::zero(digits);
    for j in 0..=n {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        inner += ln_n.powi(j as i32) * sign / factorial(j, digits);
    }
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    let integral = (&nn * &inner - 1) * sign * factorial(n, digits);
    acc.add(&-integral);
    acc.add(&-(ln_n.powi(p) / 2));
    let kernel = EmKernel::new(LogPoly::log_power(n, digits), DEFAULT_ORDER, digits);
    let (corr, err) = kernel.corrections(&nn);
    acc.add(&corr);
    let err = err + acc.rounding_bound();
    Ok(SeriesValue::new(acc.value(), err, big_n, "euler_maclaurin"))
}

#[cfg(test)]
mod tests {
    use super::*;

    const GAMMA: &str = "0.5772156649015328606065120900824024310422";

    fn r(v: &str) -> ExtReal {
        ExtReal::parse(v, 34).unwrap()
    }

    #[test]
    fn eta_from_gamma_values() {
        let cases = [
            (0, "-0.5772156649015328606065120900824024310422"),
            (1, "0.1875462328403652245972033846054415883839"),
            (2, "-0.0516886320331928938020082230836041634454"),
            (3, "0.01475165882545374406458023681437551036264"),
            (4, "-0.00452447788849537874124611609916498275662"),
        ];
        for (n, want) in cases {
            let v = eta(n, EtaRoute::FromGamma, 1e-14).unwrap();
            let gap = (&v.value - &r(want)).abs();
            assert!(
                gap.to_f64() < 1e-14 && gap <= v.abs_err,
                "n={n} gap={gap} err={}",
                v.abs_err
            );
        }
    }

    #[test]
    fn eta_series_route() {
        let v = eta(0, EtaRoute::Series { terms: 100_000 }, 1e-10).unwrap();
        assert!(!v.has_bound());
        assert!((v.value + r(GAMMA)).abs().to_f64() < 0.01);
        assert!(eta(
            0,
            EtaRoute::Series {
                terms: MAX_ETA_TERMS + 1
            },
            1e-10
        )
        .is_err());
        assert!(eta(7, EtaRoute::FromGamma, 1e-10).is_err());
    }

    #[test]
    fn delta_values() {
        let v = delta(0, 1000, 1e-20).unwrap();
        assert!((&v.value - &r("0.5")).abs().to_f64() < 1e-25);
        let v = delta(1, 1000, 1e-20).unwrap();
        let want = (ExtReal::pi(v.value.digits()) * 2).ln() / 2 - 1;
        assert!(
            (&v.value - &want).abs() <= v.abs_err,
            "{} {} {}",
            v.value,
            want,
            v.abs_err
        );
        assert!((&v.value - &want).abs().to_f64() < 1e-20);
        let v = delta(2, 1000, 1e-20).unwrap();
        let want = r("-2.006356455908584851210100026729960438199") + 2;
        assert!((&v.value - &want).abs().to_f64() < 1e-20);
        assert!(delta(3, 1000, 1e-10).is_err());
        assert!(delta(1, 5, 1e-10).is_err());
    }
}
