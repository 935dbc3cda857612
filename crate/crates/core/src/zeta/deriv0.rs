//! Derivatives of the Hurwitz zeta function at `s = 0`.

use crate::error::{cap, domain, Error, Result};
use crate::numeric::euler_maclaurin::{tailed_sum, TailSum, DEFAULT_ORDER};
use crate::numeric::ext::working_digits;
use crate::numeric::{ExtReal, LogPoly, SeriesValue};
use crate::stieltjes::{gamma_n, Method, StieltjesQuery};

/// Highest `k` accepted by [`zeta_deriv0_diff`].
pub const MAX_DIFF_ORDER: u32 = 6;

/// `ζ^(k+1)(0, x) − ζ^(k+1)(0)` from
///
/// ```text
/// (−1)^(k+1) [ζ^(k+1)(0,x) − ζ^(k+1)(0)]
///     = log^(k+1) x + Σ_{n≥1} [G(n+x) − G(n) − x (G(n+1) − G(n))],
/// ```
///
/// `G = log^(k+1)`. The summand is a second difference of `G`, so its tail
/// telescopes: `A(M+x) − (1−x) A(M) − x A(M+1) → 0` for the antiderivative.
pub fn zeta_deriv0_diff(k: u32, x: &ExtReal, tol: f64) -> Result<SeriesValue> {
    cap("k", u64::from(k), u64::from(MAX_DIFF_ORDER))?;
    if !x.is_positive() {
        return Err(domain(format!("zeta_deriv0_diff needs x > 0, got {x}")));
    }
    let digits = working_digits(x.digits(), tol);
    let x = x.with_digits(digits);
    let p = k as i32 + 1;
    let g = LogPoly::log_power(k + 1, digits);
    let one = ExtReal::one(digits);
    let tail = TailSum::new(DEFAULT_ORDER, digits)
        .part(one.clone(), &g, x.clone())
        .part(&x - 1, &g, ExtReal::zero(digits))
        .part(-&x, &g, one.clone());
    let prefix = x.ln().powi(p);
    let xf = x.to_f64().abs();
    let mut ln_next: Option<ExtReal> = None;
    let term = |n: u64| {
        let nn = ExtReal::from_u64(n, digits);
        let ln_n = ln_next.take().unwrap_or_else(|| nn.ln());
        let ln_n1 = (&nn + 1).ln();
        let g_n = ln_n.powi(p);
        let g_n1 = ln_n1.powi(p);
        let g_nx = (&nn + &x).ln().powi(p);
        let v = &g_nx - &g_n - &(&x * &(&g_n1 - &g_n));
        let scale =
            g_nx.to_f64().abs() + (1.0 + xf) * g_n.to_f64().abs() + xf * g_n1.to_f64().abs();
        ln_next = Some(ln_n1);
        (v, scale)
    };
    let inner = tailed_sum("zeta_deriv0_diff", 1, tol, &tail, &prefix, term)?;
    Ok(if k.is_multiple_of(2) {
        inner.negated()
    } else {
        inner
    })
}

/// `ζ^(n)(0)` for `n ≤ 2` from closed forms:
/// `ζ(0) = −1/2`, `ζ'(0) = −½ ln 2π` and
/// `ζ''(0) = γ₁ + ½γ² − π²/24 − ½ ln² 2π`.
pub fn zeta_deriv0_const(n: u32, tol: f64) -> Result<SeriesValue> {
    let digits = working_digits(crate::DEFAULT_DIGITS, tol);
    let two_pi_ln = (ExtReal::pi(digits) * 2).ln();
    match n {
        0 => Ok(SeriesValue::exact(
            ExtReal::from_ratio(-1, 2, digits),
            "closed_form",
        )),
        1 => Ok(SeriesValue::exact(-(two_pi_ln / 2), "closed_form")),
        2 => {
            let one = ExtReal::one(digits);
            let g0 = gamma_n(&StieltjesQuery::new(
                0,
                one.clone(),
                Method::SeriesB,
                tol / 4.0,
            )?)?;
            let g1 = gamma_n(&StieltjesQuery::new(1, one, Method::SeriesB, tol / 4.0)?)?;
            let pi2 = ExtReal::pi(digits).square();
            let rest = g0.value.square() / 2 - pi2 / 24 - two_pi_ln.square() / 2;
            let value = &g1.value + &rest;
            let err = &g1.abs_err + &(&g0.abs_err * &(g0.value.abs() + 1)) + value.ulp();
            Ok(SeriesValue::new(
                value,
                err,
                g0.terms_used + g1.terms_used,
                "apostol_ramanujan",
            ))
        }
        _ => Err(Error::Unsupported(format!(
            "zeta^({n})(0) is only available for n <= 2; use zeta_deriv0_diff for differences"
        ))),
    }
}

/// `ζ^(k)(0, x)` with its order and argument.
#[derive(Clone, Debug, PartialEq)]
pub struct ZetaDeriv0 {
    pub order: u32,
    pub x: ExtReal,
    pub value: SeriesValue,
}

/// Full value `ζ^(k)(0, x)` for `k ≤ 2`: `ζ(0, x) = ½ − x` for `k = 0`,
/// otherwise the difference series plus the constant `ζ^(k)(0)`.
pub fn zeta_deriv0(k: u32, x: &ExtReal, tol: f64) -> Result<ZetaDeriv0> {
    if !x.is_positive() {
        return Err(domain(format!("zeta_deriv0 needs x > 0, got {x}")));
    }
    let value = match k {
        0 => {
            let digits = working_digits(x.digits(), tol);
            let v = ExtReal::from_ratio(1, 2, digits) - x.with_digits(digits);
            SeriesValue::exact(v, "closed_form")
        }
        1 | 2 => {
            let diff = zeta_deriv0_diff(k - 1, x, tol / 2.0)?;
            let c = zeta_deriv0_const(k, tol / 2.0)?;
            diff.plus(&c).with_method("zeta_deriv0_diff+closed_form")
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "zeta^({k})(0, x) needs zeta^({k})(0), available only for k <= 2"
            )))
        }
    };
    Ok(ZetaDeriv0 {
        order: k,
        x: x.clone(),
        value,
    })
}
