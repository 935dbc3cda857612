//! Generalized Stieltjes constants `γ_n(x)`.
//!
//! `γ_n(x)` are the Laurent coefficients of the Hurwitz zeta function,
//!
//! ```text
//! ζ(s, x) = 1/(s−1) + Σ_n (−1)^n/n! γ_n(x) (s−1)^n,
//! ```
//!
//! computed here from four representations: Berndt's limit, the telescoped
//! series with `x` in every term ([`Method::SeriesB`]), the variant with
//! `x` in the first term only ([`Method::SeriesC`]) and Coffey's
//! incomplete-gamma series ([`Method::Coffey`]).

mod coffey;
mod rational;

pub use coffey::incgamma_int;
pub(crate) use rational::zeta_coefficient;
pub use rational::{gamma1_alt, gamma1_rational, RationalArg};

use std::time::Instant;

use crate::error::{cap, domain, Result};
use crate::numeric::euler_maclaurin::{tailed_sum, TailSum, DEFAULT_ORDER};
use crate::numeric::ext::working_digits;
use crate::numeric::{CompensatedSum, ExtReal, LogPoly, SeriesValue};
use crate::verify::VerifyReport;
use crate::zeta::zeta_deriv0_diff;

/// Largest order accepted by [`StieltjesQuery`].
pub const MAX_ORDER: u32 = 8;

/// Smallest `x` accepted by [`Method::SeriesB`]; below it `log^(n+1) x`
/// cancels against the `k = 0` term.
pub const SERIES_B_MIN_X: f64 = 1e-6;

/// Representation used by [`gamma_n`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Raw partial sum of Berndt's limit at `terms`; no error bound.
    Limit {
        terms: u64,
    },
    SeriesB,
    SeriesC,
    /// Coffey's series started at index `m` (0 is the plain form).
    Coffey {
        m: u64,
    },
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Limit { .. } => "limit",
            Method::SeriesB => "series_b",
            Method::SeriesC => "series_c",
            Method::Coffey { .. } => "coffey",
        }
    }
}

/// A validated request for `γ_n(x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct StieltjesQuery {
    pub n: u32,
    pub x: ExtReal,
    pub method: Method,
    pub tol: f64,
}

impl StieltjesQuery {
    pub fn new(n: u32, x: ExtReal, method: Method, tol: f64) -> Result<Self> {
        cap("n", u64::from(n), u64::from(MAX_ORDER))?;
        if !x.is_positive() {
            return Err(domain(format!("gamma_n needs x > 0, got {x}")));
        }
        if !(tol > 0.0 && tol <= 1.0) {
            return Err(domain(format!("tolerance must lie in (0, 1], got {tol:e}")));
        }
        if let Method::Limit { terms } = method {
            if terms == 0 {
                return Err(domain("the limit method needs at least one term"));
            }
        }
        Ok(StieltjesQuery { n, x, method, tol })
    }

    /// Digits used by the evaluation: the input precision, raised to twice
    /// the digits of `tol` when that is larger.
    pub fn digits(&self) -> u32 {
        working_digits(self.x.digits(), self.tol)
    }
}

/// `log^n t / t`.
pub(crate) fn summand(n: u32, digits: u32) -> LogPoly {
    LogPoly::log_over_t(n, digits)
}

/// `log^(n+1) t / (n+1)`, the antiderivative of [`summand`].
pub(crate) fn summand_integral(n: u32, digits: u32) -> LogPoly {
    LogPoly::log_power(n + 1, digits).scale(&ExtReal::from_ratio(1, i64::from(n) + 1, digits))
}

/// `γ_n(x)` by the method in the query.
pub fn gamma_n(q: &StieltjesQuery) -> Result<SeriesValue> {
    match q.method {
        Method::Limit { terms } => Ok(limit(q.n, &q.x.with_digits(q.digits()), terms)),
        Method::SeriesB => series_b(q),
        Method::SeriesC => series_c(q),
        Method::Coffey { m } => coffey::coffey(q, m),
    }
}

/// `Σ_{k=0..N} log^n(k+x)/(k+x) − log^(n+1)(N+x)/(n+1)`.
fn limit(n: u32, x: &ExtReal, terms: u64) -> SeriesValue {
    let digits = x.digits();
    let p = n as i32;
    let mut acc = CompensatedSum::new(digits);
    for k in 0..=terms {
        let a = x + &ExtReal::from_u64(k, digits);
        acc.add(&(a.ln().powi(p) / &a));
    }
    let end = x + &ExtReal::from_u64(terms, digits);
    acc.add(&-(end.ln().powi(p + 1) / i64::from(n + 1)));
    SeriesValue::new(acc.value(), ExtReal::infinity(digits), terms + 1, "limit")
}

fn series_b(q: &StieltjesQuery) -> Result<SeriesValue> {
    if q.x.to_f64() < SERIES_B_MIN_X {
        return Err(domain(format!(
            "series_b needs x >= {SERIES_B_MIN_X:e}; use series_c for smaller x"
        )));
    }
    let digits = q.digits();
    let x = q.x.with_digits(digits);
    let n = q.n;
    let p = n as i32;
    let np1 = i64::from(n) + 1;
    let f = summand(n, digits);
    let big_f = summand_integral(n, digits);
    let one = ExtReal::one(digits);
    // Σ_h c_h A_h(M+h) = F(M+x) − [G(M+1+x) − G(M+x)] → 0, G' = F.
    let tail = TailSum::new(DEFAULT_ORDER, digits)
        .part(one.clone(), &f, x.clone())
        .part(-&one, &big_f, &x + 1)
        .part(one, &big_f, x.clone());
    let prefix = -(x.ln().powi(p + 1) / np1);
    let mut ln_next: Option<ExtReal> = None;
    let term = |k: u64| {
        let a = &x + &ExtReal::from_u64(k, digits);
        let ln_a = ln_next.take().unwrap_or_else(|| a.ln());
        let ln_b = (&a + 1).ln();
        let la = ln_a.powi(p + 1);
        let lb = ln_b.powi(p + 1);
        let fa = ln_a.powi(p) / &a;
        let scale = fa.to_f64().abs() + (la.to_f64().abs() + lb.to_f64().abs()) / np1 as f64;
        let v = fa - (lb - la) / np1;
        ln_next = Some(ln_b);
        (v, scale)
    };
    tailed_sum("series_b", 0, q.tol, &tail, &prefix, term)
}

fn series_c(q: &StieltjesQuery) -> Result<SeriesValue> {
    let digits = q.digits();
    let x = q.x.with_digits(digits);
    let n = q.n;
    let p = n as i32;
    let np1 = i64::from(n) + 1;
    let f = summand(n, digits);
    let big_f = summand_integral(n, digits);
    let one = ExtReal::one(digits);
    // F(M+x) − [G(M+2) − G(M+1)] → 0.
    let tail = TailSum::new(DEFAULT_ORDER, digits)
        .part(one.clone(), &f, x.clone())
        .part(-&one, &big_f, ExtReal::from_i64(2, digits))
        .part(one.clone(), &big_f, one);
    let mut ln_next: Option<ExtReal> = None;
    let term = |k: u64| {
        let a = &x + &ExtReal::from_u64(k, digits);
        let fa = a.ln().powi(p) / &a;
        let j = ExtReal::from_u64(k + 1, digits);
        let ln_j = ln_next.take().unwrap_or_else(|| j.ln());
        let ln_j1 = (&j + 1).ln();
        let lj = ln_j.powi(p + 1);
        let lj1 = ln_j1.powi(p + 1);
        let scale = fa.to_f64().abs() + (lj.to_f64().abs() + lj1.to_f64().abs()) / np1 as f64;
        let v = fa - (lj1 - lj) / np1;
        ln_next = Some(ln_j1);
        (v, scale)
    };
    tailed_sum("series_c", 0, q.tol, &tail, &ExtReal::zero(digits), term)
}

/// `γ_n(x) − γ_n(y) = Σ_{k≥0} [log^n(k+x)/(k+x) − log^n(k+y)/(k+y)]`.
pub fn gamma_diff(n: u32, x: &ExtReal, y: &ExtReal, tol: f64) -> Result<SeriesValue> {
    cap("n", u64::from(n), u64::from(MAX_ORDER))?;
    if !x.is_positive() || !y.is_positive() {
        return Err(domain(format!("gamma_diff needs x, y > 0, got {x}, {y}")));
    }
    let digits = working_digits(x.digits().max(y.digits()), tol);
    if x == y {
        return Ok(SeriesValue::new(
            ExtReal::zero(digits),
            ExtReal::zero(digits),
            1,
            "gamma_diff",
        ));
    }
    let x = x.with_digits(digits);
    let y = y.with_digits(digits);
    let p = n as i32;
    let f = summand(n, digits);
    let one = ExtReal::one(digits);
    let tail = TailSum::new(DEFAULT_ORDER, digits)
        .part(one.clone(), &f, x.clone())
        .part(-one, &f, y.clone());
    let term = |k: u64| {
        let kk = ExtReal::from_u64(k, digits);
        let a = &x + &kk;
        let b = &y + &kk;
        let fa = a.ln().powi(p) / &a;
        let fb = b.ln().powi(p) / &b;
        let scale = fa.to_f64().abs() + fb.to_f64().abs();
        (fa - fb, scale)
    };
    tailed_sum("gamma_diff", 0, tol, &tail, &ExtReal::zero(digits), term)
}

/// `∫_1^u γ_n(x) dx = (−1)^(n+1)/(n+1) [ζ^(n+1)(0, u) − ζ^(n+1)(0)]`.
pub fn stieltjes_integral(n: u32, u: &ExtReal, tol: f64) -> Result<SeriesValue> {
    if !u.is_positive() {
        return Err(domain(format!("stieltjes_integral needs u > 0, got {u}")));
    }
    let d = zeta_deriv0_diff(n, u, tol * (f64::from(n) + 1.0))?;
    let sign = if n.is_multiple_of(2) { -1 } else { 1 };
    let c = ExtReal::from_ratio(sign, i64::from(n) + 1, d.value.digits());
    Ok(d.scaled(&c).with_method("zeta_deriv0_diff"))
}

/// Residual of `γ_n(1+x) − γ_n(x) = −log^n x / x`, both sides by
/// [`Method::SeriesB`]; the tolerance is the summed claimed errors.
pub fn gamma_recurrence_check(n: u32, x: &ExtReal, tol: f64) -> Result<VerifyReport> {
    let start = Instant::now();
    let qa = StieltjesQuery::new(n, x + 1, Method::SeriesB, tol)?;
    let qb = StieltjesQuery::new(n, x.clone(), Method::SeriesB, tol)?;
    let a = gamma_n(&qa)?;
    let b = gamma_n(&qb)?;
    let x = x.with_digits(qa.digits());
    let rhs = -(x.ln().powi(n as i32) / &x);
    let residual = &a.value - &b.value - &rhs;
    let tolerance = &a.abs_err + &b.abs_err + rhs.ulp() * 4;
    let inputs = [("n", n.to_string()), ("x", x.to_decimal(20))];
    Ok(VerifyReport::new("recurrence", inputs, residual, tolerance).timed(start))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: &str) -> ExtReal {
        ExtReal::parse(v, 34).unwrap()
    }

    fn q(n: u32, x: &str, m: Method, tol: f64) -> SeriesValue {
        gamma_n(&StieltjesQuery::new(n, r(x), m, tol).unwrap()).unwrap()
    }

    const G1: &str = "-0.07281584548367672486058637587490131913774";

    #[test]
    fn euler_gamma() {
        let v = q(0, "1", Method::SeriesB, 1e-14);
        let want = r("0.5772156649015328606065120900824024310422");
        assert!((&v.value - &want).abs() <= v.abs_err);
        assert!(v.abs_err.to_f64() < 1e-14);
    }

    #[test]
    fn first_constant_all_routes() {
        let want = r(G1);
        for m in [
            Method::SeriesB,
            Method::SeriesC,
            Method::Coffey { m: 0 },
            Method::Coffey { m: 3 },
        ] {
            let v = q(1, "1", m, 1e-15);
            assert!(
                (&v.value - &want).abs().to_f64() < 1e-15,
                "{m:?}: {}",
                v.value
            );
        }
        let lim = q(1, "1", Method::Limit { terms: 10_000 }, 1e-12);
        assert!(!lim.has_bound());
        assert!((&lim.value - &want).abs().to_f64() < 1e-3);
    }

    #[test]
    fn shifted_arguments() {
        let cases = [
            (0, "0.5", "1.963510026021423479440976332998755567193"),
            (2, "0.25", "7.679704425808516527200568221049176808605"),
            (3, "1.5", "-0.001374969733521780118282031573459749152706"),
            (4, "0.75", "0.009374660196672176611387458735939060205678"),
        ];
        for (n, x, want) in cases {
            for m in [Method::SeriesB, Method::SeriesC] {
                let v = q(n, x, m, 1e-20);
                let gap = (&v.value - &r(want)).abs();
                assert!(
                    gap <= v.abs_err && gap.to_f64() < 1e-20,
                    "n={n} x={x} {m:?} gap={gap}"
                );
            }
        }
    }

    #[test]
    fn small_x_needs_series_c() {
        let err = gamma_n(&StieltjesQuery::new(1, r("1e-7"), Method::SeriesB, 1e-10).unwrap());
        assert!(err.is_err());
        let v = q(1, "0.001", Method::SeriesC, 1e-10);
        assert!(
            (&v.value - &r("-6907.827389044854089638755831281760906336"))
                .abs()
                .to_f64()
                < 1e-9
        );
    }

    #[test]
    fn query_validation() {
        assert!(StieltjesQuery::new(9, r("1"), Method::SeriesB, 1e-10).is_err());
        assert!(StieltjesQuery::new(1, r("0"), Method::SeriesB, 1e-10).is_err());
        assert!(StieltjesQuery::new(1, r("1"), Method::SeriesB, 0.0).is_err());
        assert!(StieltjesQuery::new(1, r("1"), Method::Limit { terms: 0 }, 1e-3).is_err());
    }

    #[test]
    fn differences() {
        assert!(gamma_diff(2, &r("0.3"), &r("0.3"), 1e-12)
            .unwrap()
            .value
            .is_zero());
        let v = gamma_diff(0, &r("0.5"), &r("1"), 1e-16).unwrap();
        assert!((&v.value - &(ExtReal::ln2(34) * 2)).abs().to_f64() < 1e-16);
        let v = gamma_diff(1, &r("1"), &r("2"), 1e-16).unwrap();
        assert!(v.value.abs().to_f64() < 1e-16);
    }

    #[test]
    fn integral_closed_form() {
        let v = stieltjes_integral(0, &r("2"), 1e-14).unwrap();
        assert!(v.value.abs().to_f64() < 1e-14);
        let v = stieltjes_integral(1, &r("2"), 1e-14).unwrap();
        assert!(v.value.abs().to_f64() < 1e-14);
        let v = stieltjes_integral(0, &r("3"), 1e-14).unwrap();
        assert!((&v.value + &ExtReal::ln2(34)).abs().to_f64() < 1e-14);
    }

    #[test]
    fn recurrence() {
        for (n, x) in [(0, "1"), (1, "1"), (2, "e"), (3, "0.4")] {
            let rep = gamma_recurrence_check(n, &r(x), 1e-14).unwrap();
            assert!(rep.passed, "n={n} x={x} residual={}", rep.residual);
        }
    }
}
