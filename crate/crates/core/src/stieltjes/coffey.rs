//! Coffey's series for `γ_n(x)` through incomplete gamma functions of
//! integer order.
//!
//! With `a = j + x` and `b = a + 1` the summand is
//!
//! ```text
//! log^n b − log^n a − [log^(n+1) b − log^(n+1) a]/(n+1)
//!   − (a + ½) (n{Γ(n, log a) − Γ(n, log b)} − {Γ(n+1, log a) − Γ(n+1, log b)}),
//! ```
//!
//! which equals the trapezoid defect `[f(a) + f(b)]/2 − ∫_a^b f` of
//! `f = log^n t / t`, so its tail is a pure Euler–Maclaurin correction.

use super::{summand, StieltjesQuery};
use crate::error::{domain, Error, Result};
use crate::numeric::euler_maclaurin::{tailed_sum, TailSum, DEFAULT_ORDER};
use crate::numeric::{CompensatedSum, ExtReal, SeriesValue};

/// Extra digits for the cancelling incomplete-gamma differences.
const GUARD_DIGITS: u32 = 16;

/// `Γ(n, t) = (n−1)! e^(−t) Σ_{m<n} t^m/m!` for integer `n ≥ 1`, `t ≥ 0`.
pub fn incgamma_int(n: u32, t: &ExtReal) -> Result<ExtReal> {
    if n == 0 {
        return Err(Error::Unsupported(
            "incomplete gamma of order 0 is the exponential integral".into(),
        ));
    }
    if t.is_negative() {
        return Err(domain(format!("incgamma_int needs t >= 0, got {t}")));
    }
    Ok(incgamma_finite(n, t))
}

/// The finite form without the sign restriction on `t`; Coffey's summand
/// evaluates it at `log(j + x) < 0` when `j + x < 1`.
fn incgamma_finite(n: u32, t: &ExtReal) -> ExtReal {
    let digits = t.digits();
    let mut term = ExtReal::one(digits);
    let mut acc = ExtReal::one(digits);
    for m in 1..i64::from(n) {
        term = term * t / m;
        acc += &term;
    }
    let mut fact = ExtReal::one(digits);
    for m in 2..i64::from(n) {
        fact *= m;
    }
    fact * acc * (-t).exp()
}

pub(super) fn coffey(q: &StieltjesQuery, m: u64) -> Result<SeriesValue> {
    if q.n == 0 {
        let mut b = q.clone();
        b.method = super::Method::SeriesB;
        return Ok(super::gamma_n(&b)?.with_method("series_b (coffey n = 0)"));
    }
    let digits = q.digits() + GUARD_DIGITS;
    let x = q.x.with_digits(digits);
    let n = q.n;
    let p = n as i32;
    let np1 = i64::from(n) + 1;
    let f = summand(n, digits);
    let tail =
        TailSum::new(DEFAULT_ORDER, digits).trapezoid_part(ExtReal::one(digits), &f, x.clone());

    let mut pre = CompensatedSum::new(digits);
    for k in 0..=m {
        let a = &x + &ExtReal::from_u64(k, digits);
        pre.add(&(a.ln().powi(p) / &a));
    }
    let am = &x + &ExtReal::from_u64(m, digits);
    let ln_am = am.ln();
    pre.add(&-(ln_am.powi(p + 1) / np1));
    pre.add(&-(ln_am.powi(p) / &am / 2));
    let prefix = pre.value();

    let mut carry: Option<(ExtReal, ExtReal, ExtReal)> = None;
    let gammas = |t: &ExtReal| {
        (
            incgamma_finite(n, t) * i64::from(n),
            incgamma_finite(n + 1, t),
        )
    };
    let term = |j: u64| {
        let a = &x + &ExtReal::from_u64(j, digits);
        let b = &a + 1;
        let (ln_a, ga_n, ga_n1) = carry.take().unwrap_or_else(|| {
            let l = a.ln();
            let (g, g1) = gammas(&l);
            (l, g, g1)
        });
        let ln_b = b.ln();
        let (gb_n, gb_n1) = gammas(&ln_b);
        let pa = ln_a.powi(p);
        let pb = ln_b.powi(p);
        let la = &pa * &ln_a;
        let lb = &pb * &ln_b;
        let weight = &a + &ExtReal::from_ratio(1, 2, digits);
        let inc = (&ga_n - &gb_n) - (&ga_n1 - &gb_n1);
        let scale = pa.to_f64().abs()
            + pb.to_f64().abs()
            + (la.to_f64().abs() + lb.to_f64().abs()) / np1 as f64
            + weight.to_f64() * (ga_n1.to_f64().abs() + gb_n1.to_f64().abs());
        let v = (&pb - &pa) - (&lb - &la) / np1 - weight * inc;
        carry = Some((ln_b, gb_n, gb_n1));
        (v, scale)
    };
    let v = tailed_sum("coffey", m, q.tol, &tail, &prefix, term)?;
    let digits = q.digits();
    Ok(SeriesValue::new(
        v.value.with_digits(digits),
        &v.abs_err + &v.value.with_digits(digits).ulp(),
        v.terms_used,
        v.method,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn incomplete_gamma_values() {
        let zero = ExtReal::zero(34);
        assert_eq!(incgamma_int(1, &zero).unwrap(), ExtReal::one(34));
        let two = ExtReal::from_i64(2, 34);
        let v = incgamma_int(1, &two).unwrap();
        assert!((&v - &(-&two).exp()).abs() <= v.ulp() * 2);
        let one = ExtReal::one(34);
        let v = incgamma_int(3, &one).unwrap();
        let want = (-&one).exp() * 5;
        assert!((&v - &want).abs() <= v.ulp() * 4);
        assert!(incgamma_int(0, &one).is_err());
        assert!(incgamma_int(2, &-one).is_err());
    }

    #[test]
    fn incomplete_gamma_against_quadrature() {
        // ∫_1^∞ u² e^(−u) du, with the substitution u = 1 + v/(1−v).
        use crate::numeric::{quad_gl, Grading};
        let d = 34;
        let one = ExtReal::one(d);
        let r = quad_gl(
            |v| {
                let w = ExtReal::one(d) - v;
                let u = &ExtReal::one(d) + &(v / &w);
                Ok(u.square() * (-&u).exp() / w.square())
            },
            &ExtReal::zero(d),
            &one,
            16,
            20,
            Grading::Uniform,
        )
        .unwrap();
        let v = incgamma_int(3, &one).unwrap();
        assert!((&r.value - &v).abs().to_f64() < 1e-12);
    }
}
