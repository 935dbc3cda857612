//! Dilcher's generalized gamma functions `Γ_k`.
//!
//! `log Γ_k(x+1) = −γ_k x + Σ_{j≥1} [x log^k j / j − (log^(k+1)(j+x) − log^(k+1) j)/(k+1)]`,
//! so that `Γ_k(x+1) = exp(log^(k+1) x/(k+1)) Γ_k(x)` and `Γ_0 = Γ`.

use crate::error::{cap, domain, Result};
use crate::numeric::euler_maclaurin::{tailed_sum, TailSum, DEFAULT_ORDER};
use crate::numeric::ext::working_digits;
use crate::numeric::{
    accelerate_alternating_checked, CompensatedSum, ExtReal, SeriesValue, DEFAULT_DIGITS,
};
use crate::stieltjes::{gamma_n, Method, StieltjesQuery};
use crate::stieltjes::{summand, summand_integral, zeta_coefficient};

/// Largest `k` accepted by [`dilcher_log_gamma_k`].
pub const MAX_DILCHER_ORDER: u32 = 4;

/// The series part `Σ_{j≥1} [...]` alone, without `−γ_k x`.
pub(crate) fn dilcher_sum(k: u32, x: &ExtReal, tol: f64) -> Result<SeriesValue> {
    let digits = working_digits(x.digits(), tol);
    let x = x.with_digits(digits);
    let p = k as i32;
    let np1 = i64::from(k) + 1;
    let f = summand(k, digits);
    let big_f = summand_integral(k, digits);
    let zero = ExtReal::zero(digits);
    let one = ExtReal::one(digits);
    // x F(M) − [G(M+x) − G(M)] → 0, G' = F.
    let tail = TailSum::new(DEFAULT_ORDER, digits)
        .part(x.clone(), &f, zero.clone())
        .part(-&one, &big_f, x.clone())
        .part(one, &big_f, zero.clone());
    let xf = x.to_f64().abs();
    let term = |j: u64| {
        let jj = ExtReal::from_u64(j, digits);
        let ln_j = jj.ln();
        let a = &x * &ln_j.powi(p) / &jj;
        let lx = (&jj + &x).ln().powi(p + 1);
        let lj = ln_j.powi(p + 1);
        let scale = a.to_f64().abs() + (lx.to_f64().abs() + lj.to_f64().abs()) / np1 as f64 + xf;
        (a - (lx - lj) / np1, scale)
    };
    tailed_sum("dilcher", 1, tol, &tail, &zero, term)
}

/// `log Γ_k(x+1)` for `x > −1`.
pub fn dilcher_log_gamma_k(k: u32, x: &ExtReal, tol: f64) -> Result<SeriesValue> {
    cap("k", u64::from(k), u64::from(MAX_DILCHER_ORDER))?;
    if !(*x > -1) {
        return Err(domain(format!("dilcher_log_gamma_k needs x > -1, got {x}")));
    }
    let s = dilcher_sum(k, x, tol / 2.0)?;
    let digits = s.value.digits();
    if x.is_zero() {
        return Ok(s);
    }
    let g = gamma_n(&StieltjesQuery::new(
        k,
        ExtReal::one(digits),
        Method::SeriesB,
        tol / (2.0 * x.to_f64().abs().max(1.0)),
    )?)?;
    let gx = g.scaled(&x.with_digits(digits));
    Ok(s.minus(&gx).with_method("dilcher"))
}

/// `Σ_{n≥1} (−1)^n/(n+1) [H_n ζ(n+1) + ζ'(n+1)] x^(n+1)` for `−1 < x ≤ 1`,
/// which equals `log Γ_1(x+1) + γ_1 x`.
///
/// For `x > 0` the series alternates and is accelerated; for `x < 0` every
/// term has the same sign and it is summed directly with a geometric tail
/// bound.
pub fn dilcher_series61(x: &ExtReal, tol: f64) -> Result<SeriesValue> {
    if !(*x > -1 && *x <= 1) {
        return Err(domain(format!(
            "dilcher_series61 needs -1 < x <= 1, got {x}"
        )));
    }
    if !(tol > 0.0 && tol <= 1.0) {
        return Err(domain(format!("tolerance must lie in (0, 1], got {tol:e}")));
    }
    let xf = x.to_f64();
    if x.is_zero() {
        return Ok(SeriesValue::exact(
            ExtReal::zero(x.digits()),
            "power_series",
        ));
    }
    if xf > 0.0 {
        let base = 3.0 + 8f64.sqrt();
        let k = ((6.0 * 0.36 / tol).ln() / base.ln()).ceil().max(4.0) as usize + 2;
        let coef_tol = tol / (4.0 * k as f64);
        let digits = working_digits(DEFAULT_DIGITS.max(x.digits()), coef_tol);
        let x = x.with_digits(digits);
        let coefficient = |i: usize| -> Result<SeriesValue> {
            let a = zeta_coefficient(i as u64 + 1, digits, coef_tol)?;
            Ok(a.scaled(&x.powi(i as i32 + 2)))
        };
        let s = accelerate_alternating_checked(coefficient, k, digits)?;
        return Ok(s.negated().with_method("crvz_alternating"));
    }
    // a_n ≤ ζ(2)(1 + log n)/(n+1) ≤ 2, decreasing for n ≥ 2.
    let r = xf.abs();
    let digits = working_digits(DEFAULT_DIGITS.max(x.digits()), tol);
    let x = x.with_digits(digits);
    let mut acc = CompensatedSum::new(digits);
    let mut err = ExtReal::zero(digits);
    let mut n = 1u64;
    loop {
        let a = zeta_coefficient(n, digits, tol / 64.0)?;
        let w = x.powi(n as i32 + 1);
        let sign = if n.is_multiple_of(2) { 1 } else { -1 };
        acc.add(&(&a.value * &w * sign));
        err += &a.abs_err * &w.abs();
        let m = (n + 1) as f64;
        let bound = 1.645 * (1.0 + m.ln()) / (m + 1.0) * r.powf(m + 1.0) / (1.0 - r);
        if bound < tol / 4.0 {
            let err = err + ExtReal::from_f64(bound, digits) + acc.rounding_bound();
            return Ok(SeriesValue::new(acc.value(), err, n, "power_series"));
        }
        n += 1;
    }
}
