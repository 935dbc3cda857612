//! Exact algebraic identities and functional equations.

use rayon::prelude::*;

use super::{point, show, Outcome, TolPolicy, VerifyReport};
use crate::error::{domain, Result};
use crate::numeric::euler_maclaurin::{tailed_sum, TailSum, DEFAULT_ORDER};
use crate::numeric::ext::working_digits;
use crate::numeric::{CompensatedSum, ExtReal, LogPoly, SeriesValue};
use crate::related::{digamma, log_gamma};
use crate::stieltjes::gamma_recurrence_check;
use crate::zeta::{hurwitz_em, zeta_deriv0_diff};

/// Residual bound of the telescoping identity, which is exact algebra.
const LEMMA31_TOL: f64 = 1e-28;

/// The telescoping identity
///
/// ```text
/// log^(n+1)(N+x) = log^(n+1)(1+x) − (n+1) ∫_N^(N+1) log^n(x+t)/(x+t) dt
///                  + Σ_{k=1..N} [log^(n+1)(k+1+x) − log^(n+1)(k+x)],
/// ```
///
/// with the integral in closed form and the sum taken term by term.
pub fn check_lemma31(n: u32, x: &ExtReal, big_n: u64, policy: &TolPolicy) -> VerifyReport {
    let inputs = vec![
        ("N", big_n.to_string()),
        ("n", n.to_string()),
        ("x", show(x)),
    ];
    point("lemma31", inputs, || {
        if x.is_negative() || big_n == 0 || big_n > 1000 || n > 8 {
            return Err(domain(format!(
                "lemma31 needs x >= 0, 1 <= N <= 1000, n <= 8; got n={n} x={x} N={big_n}"
            )));
        }
        let digits = working_digits(policy.digits.max(x.digits()), LEMMA31_TOL);
        let x = x.with_digits(digits);
        let p = n as i32 + 1;
        let l = |t: &ExtReal| t.ln().powi(p);
        let nn = ExtReal::from_u64(big_n, digits);
        let lhs = l(&(&nn + &x));
        let integral = (l(&(&nn + &x + 1)) - l(&(&nn + &x))) / (i64::from(n) + 1);
        let mut rhs = CompensatedSum::new(digits);
        rhs.add(&l(&(&x + 1)));
        rhs.add(&-(integral * (i64::from(n) + 1)));
        let mut prev = l(&(&x + 1));
        for k in 1..=big_n {
            let next = l(&(&x + (k as i64 + 1)));
            rhs.add(&(&next - &prev));
            prev = next;
        }
        Ok(
            Outcome::new(lhs - rhs.value(), ExtReal::from_f64(LEMMA31_TOL, digits))
                .note("integral term carries the factor n+1"),
        )
    })
}

pub(super) fn lemma31(policy: &TolPolicy) -> Vec<VerifyReport> {
    let grid = [
        (0, "0", 1),
        (1, "0", 1000),
        (2, "0.5", 10),
        (3, "pi", 100),
        (4, "e", 500),
        (5, "10", 1000),
        (0, "7.25", 37),
    ];
    grid.par_iter()
        .map(|&(n, x, big_n)| check_lemma31(n, &policy.num(x), big_n, policy))
        .collect()
}

/// `π cot(πx) = ψ(1−x) − ψ(x)` and `π cot(πx) = 1/x + Σ_{n≥1} 2x/(x² − n²)`,
/// one report per route.
pub fn check_cotangent(x: &ExtReal, policy: &TolPolicy) -> Vec<VerifyReport> {
    let inputs = |route: &str| vec![("route", route.to_string()), ("x", show(x))];
    let valid = || -> Result<u32> {
        if !(x.is_positive() && *x < 1) {
            return Err(domain(format!("cotangent check needs 0 < x < 1, got {x}")));
        }
        Ok(working_digits(policy.digits.max(x.digits()), policy.tol))
    };
    let closed = |digits: u32| {
        let pi = ExtReal::pi(digits);
        let v = &pi * &(&pi * &x.with_digits(digits)).cot();
        let err = v.ulp() * 8;
        SeriesValue::new(v, err, 0, "closed_form")
    };
    let reflection = point("cotangent", inputs("digamma"), || {
        let digits = valid()?;
        let x = x.with_digits(digits);
        let a = closed(digits);
        let b = digamma(&(1 - &x), policy.tol)?.minus(&digamma(&x, policy.tol)?);
        Ok(Outcome::agree(&a, &b, &policy.slack()).note("pi*cot(pi x) = psi(1-x) - psi(x)"))
    });
    let fractions = point("cotangent", inputs("partial_fractions"), || {
        let digits = valid()?;
        let x = x.with_digits(digits);
        let a = closed(digits);
        let b = partial_fractions(&x, policy.tol)?;
        Ok(Outcome::agree(&a, &b, &policy.slack()).note(
            "pi*cot(pi x) = 1/x + sum 2x/(x^2 - n^2); the uncorrected form cot(pi x) = 1/x + sum 1/(x^2 - n^2) fails",
        ))
    });
    vec![reflection, fractions]
}

fn partial_fractions(x: &ExtReal, tol: f64) -> Result<SeriesValue> {
    let digits = x.digits();
    let inv = LogPoly::log_over_t(0, digits);
    // 2x/(x² − n²) = 1/(n+x) − 1/(n−x); ln(M+x) − ln(M−x) → 0.
    let tail = TailSum::new(DEFAULT_ORDER, digits)
        .part(ExtReal::one(digits), &inv, x.clone())
        .part(ExtReal::from_i64(-1, digits), &inv, -x);
    let x2 = x.square();
    let two_x = x * 2;
    let term = |n: u64| {
        let nn = ExtReal::from_u64(n, digits);
        let v = &two_x / &(&x2 - &nn.square());
        let scale = v.to_f64().abs();
        (v, scale)
    };
    tailed_sum("partial_fractions", 1, tol, &tail, &x.recip(), term)
}

pub(super) fn cotangent(policy: &TolPolicy) -> Vec<VerifyReport> {
    ["1/6", "1/4", "1/3", "1/2", "2/3", "0.9"]
        .par_iter()
        .flat_map(|x| check_cotangent(&policy.num(x), policy))
        .collect()
}

pub(super) fn recurrence(policy: &TolPolicy) -> Vec<VerifyReport> {
    let xs = ["0.25", "0.5", "1", "e", "pi"];
    let grid: Vec<(u32, &str)> = (0..3)
        .flat_map(|n| xs.iter().map(move |&x| (n, x)))
        .collect();
    grid.par_iter()
        .map(|&(n, x)| {
            let x = policy.num(x);
            gamma_recurrence_check(n, &x, policy.tol).unwrap_or_else(|e| {
                VerifyReport::errored("recurrence", [("n", n.to_string()), ("x", show(&x))], &e)
            })
        })
        .collect()
}

/// `ζ(s, 1+x) = ζ(s, x) − x^(−s)`.
pub(super) fn shift(policy: &TolPolicy) -> Vec<VerifyReport> {
    let grid: Vec<(&str, &str)> = ["-1.5", "0.5", "2", "3.5"]
        .iter()
        .flat_map(|&s| ["0.3", "2"].into_iter().map(move |x| (s, x)))
        .collect();
    grid.par_iter()
        .map(|&(s, x)| {
            let (s, x) = (policy.num(s), policy.num(x));
            point("shift", vec![("s", show(&s)), ("x", show(&x))], || {
                // Widen first so that x + 1 is exact.
                let wide = x.with_digits(x.digits() + 8);
                let a = hurwitz_em(&s, &(&wide + 1))?;
                let b = hurwitz_em(&s, &wide)?;
                let d = b.value.digits();
                let b = b.shifted(&-x.with_digits(d).pow(&-s.with_digits(d)));
                Ok(Outcome::agree(&a, &b, &policy.slack()))
            })
        })
        .collect()
}

/// `ζ^(k+1)(0, 1+x) = ζ^(k+1)(0, x) + (−1)^k log^(k+1) x` on the
/// differences `ζ^(k+1)(0, ·) − ζ^(k+1)(0)`.
pub(super) fn deriv_shift(policy: &TolPolicy) -> Vec<VerifyReport> {
    let grid: Vec<(u32, &str)> = (0..4)
        .flat_map(|k| ["0.4", "2.5"].into_iter().map(move |x| (k, x)))
        .collect();
    grid.par_iter()
        .map(|&(k, x)| {
            let x = policy.num(x);
            point(
                "deriv_shift",
                vec![("k", k.to_string()), ("x", show(&x))],
                || {
                    let a = zeta_deriv0_diff(k, &(&x + 1), policy.tol)?;
                    let b = zeta_deriv0_diff(k, &x, policy.tol)?;
                    let step = x.with_digits(b.value.digits()).ln().powi(k as i32 + 1);
                    let step = if k % 2 == 0 { step } else { -step };
                    Ok(Outcome::agree(&a, &b.shifted(&step), &policy.slack()))
                },
            )
        })
        .collect()
}

/// `log Γ(x+1) = log Γ(x) + log x`, and `log Γ(½) = ½ log π`.
pub(super) fn weierstrass(policy: &TolPolicy) -> Vec<VerifyReport> {
    let mut out: Vec<VerifyReport> = ["0.3", "1.3", "2.3"]
        .par_iter()
        .map(|x| {
            let x = policy.num(x);
            point(
                "weierstrass",
                vec![("relation", "recurrence".into()), ("x", show(&x))],
                || {
                    let a = log_gamma(&(&x + 1), policy.tol)?;
                    let b = log_gamma(&x, policy.tol)?;
                    let ln_x = x.with_digits(b.value.digits()).ln();
                    Ok(Outcome::agree(&a, &b.shifted(&ln_x), &policy.slack()))
                },
            )
        })
        .collect();
    let half = policy.num("0.5");
    out.push(point(
        "weierstrass",
        vec![("relation", "half".into()), ("x", show(&half))],
        || {
            let a = log_gamma(&half, policy.tol)?;
            let pi = ExtReal::pi(a.value.digits());
            let b = SeriesValue::new(pi.ln() / 2, pi.ulp(), 0, "closed_form");
            Ok(Outcome::agree(&a, &b, &policy.slack()))
        },
    ));
    out
}
