//! Hurwitz zeta and its `s`-derivatives by Euler–Maclaurin summation.

use crate::error::{domain, Error, Result};
use crate::numeric::euler_maclaurin::{tailed_sum, TailSum};
use crate::numeric::ext::working_digits;
use crate::numeric::{ExtReal, LogPoly, SeriesValue};

/// Correction order used for the zeta sums (through `B_16`).
const ZETA_ORDER: u32 = 8;

/// Lowest `s` for which the order-8 expansion still represents the
/// analytic continuation.
const MIN_S: i64 = -(2 * ZETA_ORDER as i64 - 1);

/// A validated Hurwitz argument pair.
#[derive(Clone, Debug, PartialEq)]
pub struct ZetaArg {
    pub s: ExtReal,
    pub x: ExtReal,
}

impl ZetaArg {
    pub fn new(s: ExtReal, x: ExtReal) -> Result<Self> {
        if !x.is_positive() {
            return Err(domain(format!("Hurwitz shift x must be > 0, got {x}")));
        }
        if s == 1 {
            return Err(Error::Pole { s: s.to_string() });
        }
        Ok(ZetaArg { s, x })
    }

    pub fn em(&self) -> Result<SeriesValue> {
        hurwitz_em(&self.s, &self.x)
    }

    pub fn hasse(&self, tol: f64) -> Result<SeriesValue> {
        super::hasse::hurwitz_hasse(&self.s, &self.x, tol)
    }
}

/// Default absolute target for `hurwitz_em`: six digits short of the
/// working precision.
fn default_tol(digits: u32) -> f64 {
    10f64.powi(-(digits.saturating_sub(6).min(300) as i32))
}

/// `ζ(s, x)` by partial summation plus Euler–Maclaurin correction, at the
/// precision of the inputs.
pub fn hurwitz_em(s: &ExtReal, x: &ExtReal) -> Result<SeriesValue> {
    let digits = s.digits().max(x.digits());
    hurwitz_deriv_em(s, x, 0, default_tol(digits))
}

/// `∂^m/∂s^m ζ(s, x) = (−1)^m Σ_{k≥0} log^m(k+x) (k+x)^(−s)`, analytically
/// continued through the Euler–Maclaurin remainder.
pub fn hurwitz_deriv_em(s: &ExtReal, x: &ExtReal, m: u32, tol: f64) -> Result<SeriesValue> {
    if !x.is_positive() {
        return Err(domain(format!("Hurwitz shift x must be > 0, got {x}")));
    }
    if *s == 1 {
        return Err(Error::Pole { s: s.to_string() });
    }
    if *s < MIN_S {
        return Err(domain(format!("hurwitz_em supports s >= {MIN_S}, got {s}")));
    }
    let digits = working_digits(s.digits().max(x.digits()), tol);
    let s = s.with_digits(digits);
    let x = x.with_digits(digits);
    let g = LogPoly::log_power(m, digits).with_offset(s.clone());
    let tail = TailSum::new(ZETA_ORDER, digits).part(ExtReal::one(digits), &g, x.clone());
    let neg_s = -&s;
    let term = |k: u64| {
        let a = &x + &ExtReal::from_u64(k, digits);
        let ln_a = a.ln();
        let mut v = (&neg_s * &ln_a).exp();
        if m > 0 {
            v *= ln_a.powi(m as i32);
        }
        let scale = v.to_f64().abs();
        (v, scale)
    };
    let sum = tailed_sum("hurwitz_em", 0, tol, &tail, &ExtReal::zero(digits), term)?;
    Ok(if m % 2 == 1 { sum.negated() } else { sum })
}

/// `ζ'(s) = −Σ log k / k^s` for real `s > 1`.
pub fn zeta_prime_int(s: &ExtReal, tol: f64) -> Result<SeriesValue> {
    if !(*s > 1) {
        return Err(domain(format!("zeta_prime_int needs s > 1, got {s}")));
    }
    let one = ExtReal::one(s.digits());
    Ok(hurwitz_deriv_em(s, &one, 1, tol)?.with_method("zeta_prime_em"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: &str) -> ExtReal {
        ExtReal::parse(v, 34).unwrap()
    }

    fn close(a: &ExtReal, b: &ExtReal, tol: f64) -> bool {
        (a - b).abs().to_f64() < tol
    }

    #[test]
    fn basel_at_half_shift() {
        let v = hurwitz_em(&r("2"), &r("0.5")).unwrap();
        let want = ExtReal::pi(34).square() / 2;
        assert!(close(&v.value, &want, 1e-15));
        assert!(v.abs_err.to_f64() < 1e-20);
    }

    #[test]
    fn zeta_at_zero_is_linear_in_x() {
        let v = hurwitz_em(&r("0"), &r("0.25")).unwrap();
        assert!(close(&v.value, &r("0.25"), 1e-15));
        let v1 = hurwitz_em(&r("0"), &r("1")).unwrap();
        assert!(close(&v1.value, &r("-0.5"), 1e-15));
        let v2 = hurwitz_em(&r("0"), &r("2")).unwrap();
        assert!(close(&(&v2.value - &v1.value), &r("-1"), 1e-15));
    }

    #[test]
    fn negative_s_and_apery() {
        let v = hurwitz_em(&r("-1"), &r("1")).unwrap();
        assert!(close(&v.value, &ExtReal::from_ratio(-1, 12, 34), 1e-25));
        let v = hurwitz_em(&r("3"), &r("1")).unwrap();
        assert!(close(
            &v.value,
            &r("1.202056903159594285399738161511449990765"),
            1e-28
        ));
        let v = hurwitz_em(&r("2.5"), &r("0.3")).unwrap();
        assert!(close(
            &v.value,
            &r("21.06923920224772302695535832408384665764"),
            1e-26
        ));
    }

    #[test]
    fn pole_and_domain() {
        assert!(matches!(
            hurwitz_em(&r("1"), &r("1")),
            Err(Error::Pole { .. })
        ));
        assert!(hurwitz_em(&r("2"), &r("0")).is_err());
        assert!(hurwitz_em(&r("-20"), &r("1")).is_err());
        assert!(ZetaArg::new(r("2"), r("-1")).is_err());
    }

    #[test]
    fn zeta_prime_values() {
        let v = zeta_prime_int(&r("2"), 1e-14).unwrap();
        assert!(close(
            &v.value,
            &r("-0.9375482543158437537025740945678649778979"),
            1e-12
        ));
        let v = zeta_prime_int(&r("10"), 1e-14).unwrap();
        assert!(v.value.is_negative());
        assert!(v.value.abs().to_f64() < 2.0 * 2f64.ln() / 1024.0);
        assert!(zeta_prime_int(&r("1"), 1e-12).is_err());
    }

    #[test]
    fn zeta_prime_matches_finite_difference() {
        let s = r("3");
        let h = ExtReal::pow10_neg(10, 34);
        let one = r("1");
        let up = hurwitz_em(&(&s + &h), &one).unwrap().value;
        let dn = hurwitz_em(&(&s - &h), &one).unwrap().value;
        let fd = (up - dn) / (&h * 2);
        let v = zeta_prime_int(&s, 1e-14).unwrap();
        assert!(close(&v.value, &fd, 1e-8));
    }
}
