//! Chebyshev-weighted acceleration of alternating series.
//!
//! Implements algorithm 1 of Cohen, Rodriguez Villegas and Zagier,
//! "Convergence acceleration of alternating series" (2000), for sums
//! `Σ_{k≥0} (−1)^k a_k`.

use super::ext::ExtReal;
use super::series::SeriesValue;
use crate::error::{domain, Result};

/// `Σ (−1)^k a_k` from the first `terms` coefficients.
pub fn accelerate_alternating(
    mut a: impl FnMut(usize) -> ExtReal,
    terms: usize,
    digits: u32,
) -> Result<SeriesValue> {
    accelerate_alternating_checked(
        |k| Ok(SeriesValue::exact(a(k), "coefficient")),
        terms,
        digits,
    )
}

/// As [`accelerate_alternating`], for coefficients that carry their own
/// error bounds; those are propagated through the weights.
pub fn accelerate_alternating_checked(
    mut a: impl FnMut(usize) -> Result<SeriesValue>,
    terms: usize,
    digits: u32,
) -> Result<SeriesValue> {
    if terms < 4 {
        return Err(domain(format!(
            "accelerate_alternating needs K >= 4, got {terms}"
        )));
    }
    let wd = digits + 10;
    let n = terms as i64;
    let base = ExtReal::from_i64(8, wd).sqrt() + 3;
    let dn = base.powi(terms as i32);
    let d = (&dn + &dn.recip()) / 2;
    let mut b = ExtReal::from_i64(-1, wd);
    let mut c = -&d;
    let mut s = ExtReal::zero(wd);
    let mut max_a = ExtReal::zero(wd);
    let mut coef_err = ExtReal::zero(wd);
    for k in 0..terms {
        let ak = a(k)?;
        c = &b - &c;
        s += &c * &ak.value;
        coef_err += c.abs() * &ak.abs_err;
        max_a = max_a.max(&ak.value.abs());
        let ki = k as i64;
        b = b * ((ki + n) * (ki - n) * 2) / ((2 * ki + 1) * (ki + 1));
    }
    let value = (&s / &d).with_digits(digits);
    let trunc = max_a * 3 / &dn;
    let err = trunc + coef_err / &d + value.ulp();
    Ok(SeriesValue::new(
        value,
        err.with_digits(digits),
        terms as u64,
        "crvz_alternating",
    ))
}
