//! Digamma and log-gamma by telescoped series.

use crate::error::{domain, Result};
use crate::numeric::euler_maclaurin::{tailed_sum, TailSum, DEFAULT_ORDER};
use crate::numeric::ext::working_digits;
use crate::numeric::{ExtReal, LogPoly, SeriesValue, DEFAULT_DIGITS};
use crate::stieltjes::{gamma_n, Method, RationalArg, StieltjesQuery};

fn positive(x: &ExtReal, what: &str) -> Result<()> {
    if x.is_positive() {
        Ok(())
    } else {
        Err(domain(format!("{what} needs x > 0, got {x}")))
    }
}

/// `ψ(x)` from `ψ(1+x) = log(1+x) − Σ_{k≥1} [1/(k+x) − log(1 + 1/(k+x))]`
/// and `ψ(x) = ψ(1+x) − 1/x`.
pub fn digamma(x: &ExtReal, tol: f64) -> Result<SeriesValue> {
    positive(x, "digamma")?;
    let digits = working_digits(x.digits(), tol);
    let x = x.with_digits(digits);
    let one = ExtReal::one(digits);
    let ln = LogPoly::log_power(1, digits);
    // log(M+x) − [A(M+1+x) − A(M+x)] → 0 with A = t log t − t.
    let tail = TailSum::new(DEFAULT_ORDER, digits)
        .part(one.clone(), &LogPoly::log_over_t(0, digits), x.clone())
        .part(-&one, &ln, &x + 1)
        .part(one, &ln, x.clone());
    let term = |k: u64| {
        let a = &x + &ExtReal::from_u64(k, digits);
        let inv = a.recip();
        let v = &inv - &inv.ln_1p();
        let scale = inv.to_f64() * 2.0;
        (v, scale)
    };
    let s = tailed_sum("digamma", 1, tol, &tail, &ExtReal::zero(digits), term)?;
    let shift = (&x + 1).ln() - x.recip();
    Ok(s.negated().shifted(&shift))
}

/// `log Γ(x)` from `log Γ(x+1) = Σ_{k≥1} [x log(1 + 1/k) − log(1 + x/k)]`
/// and `log Γ(x) = log Γ(x+1) − log x`.
pub fn log_gamma(x: &ExtReal, tol: f64) -> Result<SeriesValue> {
    positive(x, "log_gamma")?;
    let digits = working_digits(x.digits(), tol);
    let x = x.with_digits(digits);
    let ln = LogPoly::log_power(1, digits);
    // x A(M+1) + (1−x) A(M) − A(M+x) → 0 with A = t log t − t.
    let tail = TailSum::new(DEFAULT_ORDER, digits)
        .part(x.clone(), &ln, ExtReal::one(digits))
        .part(-(&x - 1), &ln, ExtReal::zero(digits))
        .part(ExtReal::from_i64(-1, digits), &ln, x.clone());
    let xf = x.to_f64().abs();
    let term = |k: u64| {
        let kk = ExtReal::from_u64(k, digits);
        let a = &x * &kk.recip().ln_1p();
        let b = (&x / &kk).ln_1p();
        let scale = a.to_f64().abs() + b.to_f64().abs() + xf;
        (a - b, scale)
    };
    let s = tailed_sum("log_gamma", 1, tol, &tail, &ExtReal::zero(digits), term)?;
    Ok(s.shifted(&-x.ln()))
}

/// `ψ(p/q) = −γ − log 2πq − (π/2) cot(πp/q) − 2 Σ_{r=1..q−1} cos(2πrp/q) log Γ(r/q)`.
///
/// The sum stops at `r = q − 1`; the `r = q` term has the factor
/// `log Γ(1) = 0`.
pub fn digamma_rational(r: RationalArg, tol: f64) -> Result<SeriesValue> {
    let q = r.q() as i64;
    let part_tol = tol / (2.0 * q as f64 + 2.0);
    let digits = working_digits(DEFAULT_DIGITS, part_tol);
    let g = gamma_n(&StieltjesQuery::new(
        0,
        ExtReal::one(digits),
        Method::SeriesB,
        part_tol,
    )?)?;
    let pi = ExtReal::pi(digits);
    let angle = &pi * r.p() as i64 / q;
    let mut value = -&g.value - (&pi * 2 * q).ln() - &pi / 2 * angle.cot();
    let mut err = g.abs_err.clone();
    let mut used = g.terms_used;
    for j in 1..q {
        let c = (&pi * 2 * (j * r.p() as i64) / q).cos();
        let lg = log_gamma(&ExtReal::from_ratio(j, q, digits), part_tol)?;
        value -= &c * &lg.value * 2;
        err += c.abs() * &lg.abs_err * 2;
        used += lg.terms_used;
    }
    err += value.ulp() * (q + 4);
    Ok(SeriesValue::new(value, err, used, "gauss_rational"))
}

#[cfg(test)]
mod tests {
    use super::*;

    const GAMMA: &str = "0.5772156649015328606065120900824024310422";

    fn r(v: &str) -> ExtReal {
        ExtReal::parse(v, 34).unwrap()
    }

    #[test]
    fn digamma_values() {
        let v = digamma(&r("1"), 1e-20).unwrap();
        assert!((&v.value + &r(GAMMA)).abs() <= v.abs_err);
        let v = digamma(&r("2"), 1e-20).unwrap();
        assert!((&v.value - &(1 - r(GAMMA))).abs().to_f64() < 1e-20);
        let v = digamma(&r("0.5"), 1e-20).unwrap();
        let want = -r(GAMMA) - ExtReal::ln2(34) * 2;
        assert!((&v.value - &want).abs().to_f64() < 1e-20);
        let v = digamma(&r("0.3"), 1e-20).unwrap();
        assert!(
            (&v.value - &r("-3.502524222200132988964494507371981599538"))
                .abs()
                .to_f64()
                < 1e-20
        );
        assert!(digamma(&r("0"), 1e-10).is_err());
    }

    #[test]
    fn log_gamma_values() {
        for x in ["1", "2"] {
            assert!(log_gamma(&r(x), 1e-20).unwrap().value.abs().to_f64() < 1e-20);
        }
        let v = log_gamma(&r("0.5"), 1e-20).unwrap();
        assert!((&v.value - &(ExtReal::pi(34).ln() / 2)).abs().to_f64() < 1e-20);
        let sq = (v.value * 2).exp();
        assert!((sq - ExtReal::pi(34)).abs().to_f64() < 1e-19);
        let v = log_gamma(&r("2.5"), 1e-20).unwrap();
        assert!((&v.value - &r("0.2846828704729191596324946696827019243201")).abs() <= v.abs_err);
    }

    #[test]
    fn rational_digamma_closed_forms() {
        let v = digamma_rational(RationalArg::new(1, 2).unwrap(), 1e-15).unwrap();
        let want = -r(GAMMA) - ExtReal::ln2(34) * 2;
        assert!((&v.value - &want).abs().to_f64() < 1e-15);
        let v = digamma_rational(RationalArg::new(1, 4).unwrap(), 1e-15).unwrap();
        let want = -r(GAMMA) - ExtReal::ln2(34) * 3 - ExtReal::pi(34) / 2;
        assert!((&v.value - &want).abs().to_f64() < 1e-15);
    }
}
