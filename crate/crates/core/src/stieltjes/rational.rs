//! `γ₁` at rational arguments and the alternating zeta series for `γ₁`.

use serde::Serialize;

use super::{gamma_n, Method, StieltjesQuery};
use crate::error::{domain, Error, Result};
use crate::numeric::ext::working_digits;
use crate::numeric::{
    accelerate_alternating_checked, harmonic, ExtReal, SeriesValue, DEFAULT_DIGITS,
};
use crate::related::{digamma, log_gamma};
use crate::zeta::{hurwitz_deriv_em, zeta_deriv0_const, zeta_deriv0_diff, zeta_prime_int};

/// A reduced proper fraction `p/q`, `0 < p < q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RationalArg {
    p: u64,
    q: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl RationalArg {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if p == 0 || p >= q {
            return Err(domain(format!(
                "{p}/{q} is not a proper fraction with 0 < p < q"
            )));
        }
        if gcd(p, q) != 1 {
            return Err(domain(format!("{p}/{q} is not reduced")));
        }
        Ok(RationalArg { p, q })
    }

    /// All reduced proper fractions with denominator `q`.
    pub fn with_denominator(q: u64) -> Vec<RationalArg> {
        (1..q)
            .filter(|&p| gcd(p, q) == 1)
            .map(|p| RationalArg { p, q })
            .collect()
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn value(&self, digits: u32) -> ExtReal {
        ExtReal::from_ratio(self.p as i64, self.q as i64, digits)
    }
}

impl std::fmt::Display for RationalArg {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// `γ₁(p/q)` from the closed form
///
/// ```text
/// γ₁ + [γ + log 2πq][γ + ψ(p/q)] + Σ_j cos(2πjp/q) ζ''(0, j/q)
///    + π Σ_j sin(2πjp/q) log Γ(j/q) + ½ log² q + log q log 2π,
/// ```
///
/// `j = 1..q−1`, with `ζ''(0, j/q)` from the difference series plus
/// `ζ''(0)`.
pub fn gamma1_rational(r: RationalArg, tol: f64) -> Result<SeriesValue> {
    let q = r.q as i64;
    let terms = 2 * (q - 1) + 4;
    let part_tol =
        tol / (4.0 * terms as f64 * (1.0 + (2.0 * std::f64::consts::PI * q as f64).ln()));
    let digits = working_digits(DEFAULT_DIGITS, part_tol);
    let one = ExtReal::one(digits);
    let g0 = gamma_n(&StieltjesQuery::new(
        0,
        one.clone(),
        Method::SeriesB,
        part_tol,
    )?)?;
    let g1 = gamma_n(&StieltjesQuery::new(1, one, Method::SeriesB, part_tol)?)?;
    let psi = digamma(&r.value(digits), part_tol)?;
    let c2 = zeta_deriv0_const(2, part_tol)?;
    let pi = ExtReal::pi(digits);
    let ln_q = ExtReal::from_i64(q, digits).ln();
    let ln_2pi = (&pi * 2).ln();

    let lead = &g0.value + &(&ln_2pi + &ln_q);
    let g_plus_psi = &g0.value + &psi.value;
    let mut value = &g1.value + &(&lead * &g_plus_psi);
    let mut err = &g1.abs_err + &(lead.abs() * &psi.abs_err) + g_plus_psi.abs() * &g0.abs_err;
    let mut used = g0.terms_used + g1.terms_used + psi.terms_used;
    for j in 1..q {
        let xj = ExtReal::from_ratio(j, q, digits);
        let angle = &pi * 2 * (j * r.p as i64) / q;
        let (c, s) = (angle.cos(), angle.sin());
        let d2 = zeta_deriv0_diff(1, &xj, part_tol)?.plus(&c2);
        let lg = log_gamma(&xj, part_tol)?;
        value += &c * &d2.value + &pi * &s * &lg.value;
        err += c.abs() * &d2.abs_err + &pi * s.abs() * &lg.abs_err;
        used += d2.terms_used + lg.terms_used;
    }
    value += ln_q.square() / 2 + &ln_q * &ln_2pi;
    err += value.ulp() * terms;
    Ok(SeriesValue::new(value, err, used, "rational_closed_form"))
}

/// `γ₁ = Σ_{n≥1} (−1)^n a_n`, `a_n = [H_n ζ(n+1) + ζ'(n+1)]/(n+1)`, summed
/// by alternating-series acceleration.
///
/// Every `a_n` is checked to be positive (see [`Error::Invariant`]).
pub fn gamma1_alt(tol: f64) -> Result<SeriesValue> {
    if !(tol > 0.0 && tol <= 1.0) {
        return Err(domain(format!("tolerance must lie in (0, 1], got {tol:e}")));
    }
    // a_1 < 0.36 bounds every coefficient; CRVZ error is 3 max|a| / 5.828^K.
    let base = 3.0 + 8f64.sqrt();
    let k = ((6.0 * 0.36 / tol).ln() / base.ln()).ceil().max(4.0) as usize + 2;
    let coef_tol = tol / (4.0 * k as f64);
    let digits = working_digits(DEFAULT_DIGITS, coef_tol);
    let coefficient = |i: usize| zeta_coefficient(i as u64 + 1, digits, coef_tol);
    let sum = accelerate_alternating_checked(coefficient, k, digits)?;
    Ok(sum.negated().with_method("crvz_alternating"))
}

/// `a_n = [H_n ζ(n+1) + ζ'(n+1)]/(n+1)` for `n ≥ 1`, which must be
/// positive; a non-positive value means the zeta values are wrong and is
/// reported as [`Error::Invariant`].
pub(crate) fn zeta_coefficient(n: u64, digits: u32, tol: f64) -> Result<SeriesValue> {
    let s = ExtReal::from_u64(n + 1, digits);
    let one = ExtReal::one(digits);
    let z = hurwitz_deriv_em(&s, &one, 0, tol)?;
    let zp = zeta_prime_int(&s, tol)?;
    let h = harmonic(n, digits)?;
    let a = (&h * &z.value + &zp.value) / (n as i64 + 1);
    let err = (&h * &z.abs_err + &zp.abs_err) / (n as i64 + 1) + a.ulp();
    if !a.is_positive() {
        return Err(Error::Invariant(format!(
            "coefficient a_{n} = {} of the zeta series for gamma_1 is not positive",
            a.to_decimal(12)
        )));
    }
    Ok(SeriesValue::new(
        a,
        err,
        z.terms_used + zp.terms_used,
        "coefficient",
    ))
}
