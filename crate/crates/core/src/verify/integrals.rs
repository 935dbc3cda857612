//! Checks that integrate or differentiate computed functions numerically.

use rayon::prelude::*;

use super::{point, show, Outcome, TolPolicy, VerifyReport};
use crate::error::{domain, Result};
use crate::numeric::ext::working_digits;
use crate::numeric::{quad_gl, ExtReal, Grading, SeriesValue};
use crate::stieltjes::{gamma_n, stieltjes_integral, Method, StieltjesQuery};
use crate::zeta::{zeta_deriv0_const, zeta_deriv0_diff};

/// Slack added to the quadrature error for the `γ_n` and `ζ'(0, ·)`
/// integrals.
const VANISHING_SLACK: f64 = 1e-8;

/// Slack for the `ζ''(0, ·)` integral, whose log-squared singularity at 0
/// is harder on the quadrature.
const VANISHING_SLACK_SECOND: f64 = 1e-7;

/// Integrals that vanish identically.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VanishingIntegral {
    /// `∫_1^2 γ_n(x) dx = 0`.
    Gamma(u32),
    /// `∫_0^1 ζ'(0, x) dx = 0`.
    ZetaPrime,
    /// `∫_0^1 ζ''(0, x) dx = 0`.
    ZetaSecond,
}

fn gamma_c(n: u32, x: &ExtReal, tol: f64) -> Result<SeriesValue> {
    gamma_n(&StieltjesQuery::new(n, x.clone(), Method::SeriesC, tol)?)
}

/// Integrates `γ_n` (series C) over `[a, b]`; the error adds the
/// evaluation tolerance over the interval to the quadrature estimate.
fn integrate_gamma(n: u32, a: &ExtReal, b: &ExtReal, tol: f64) -> Result<SeriesValue> {
    let mut q = quad_gl(
        |t| Ok(gamma_c(n, t, tol)?.value),
        a,
        b,
        4,
        12,
        Grading::Uniform,
    )?;
    q.abs_err += ExtReal::from_f64(tol * (b - a).abs().to_f64(), a.digits());
    Ok(q)
}

/// Residual `|∫|` against the quadrature error plus the fixed slack.
pub fn check_vanishing_integral(kind: VanishingIntegral, policy: &TolPolicy) -> VerifyReport {
    let (label, n) = match kind {
        VanishingIntegral::Gamma(n) => ("gamma_n_1_2", Some(n)),
        VanishingIntegral::ZetaPrime => ("zeta1_0_1", None),
        VanishingIntegral::ZetaSecond => ("zeta2_0_1", None),
    };
    let mut inputs = vec![("integral", label.to_string())];
    if let Some(n) = n {
        inputs.push(("n", n.to_string()));
    }
    point("vanishing_integrals", inputs, || {
        let d = policy.digits;
        let eval_tol = policy.tol.max(1e-11);
        let (q, slack) = match kind {
            VanishingIntegral::Gamma(n) => {
                if n > 3 {
                    return Err(domain(format!(
                        "vanishing integral check needs n <= 3, got {n}"
                    )));
                }
                let q = integrate_gamma(n, &ExtReal::one(d), &ExtReal::from_i64(2, d), eval_tol)?;
                (q, VANISHING_SLACK)
            }
            VanishingIntegral::ZetaPrime | VanishingIntegral::ZetaSecond => {
                let k = if kind == VanishingIntegral::ZetaPrime {
                    0
                } else {
                    1
                };
                let c = zeta_deriv0_const(k + 1, eval_tol)?;
                let f = |t: &ExtReal| Ok(&zeta_deriv0_diff(k, t, eval_tol)?.value + &c.value);
                let grading = Grading::SingularLeft { ratio: 0.15 };
                let mut q = quad_gl(f, &ExtReal::zero(d), &ExtReal::one(d), 24, 20, grading)?;
                q.abs_err += ExtReal::from_f64(eval_tol, d) + &c.abs_err;
                let slack = if k == 0 {
                    VANISHING_SLACK
                } else {
                    VANISHING_SLACK_SECOND
                };
                (q, slack)
            }
        };
        Ok(Outcome::new(
            q.value.clone(),
            &q.abs_err + &ExtReal::from_f64(slack, d),
        ))
    })
}

/// `∫_1^2 γ_n = 0`, `∫_0^1 ζ'(0, x) dx = 0` and `∫_0^1 ζ''(0, x) dx = 0`.
pub fn check_vanishing_integrals(n: u32, policy: &TolPolicy) -> Vec<VerifyReport> {
    [
        VanishingIntegral::Gamma(n),
        VanishingIntegral::ZetaPrime,
        VanishingIntegral::ZetaSecond,
    ]
    .par_iter()
    .map(|&k| check_vanishing_integral(k, policy))
    .collect()
}

pub(super) fn vanishing_integrals(policy: &TolPolicy) -> Vec<VerifyReport> {
    let kinds: Vec<VanishingIntegral> = (0..=3)
        .map(VanishingIntegral::Gamma)
        .chain([VanishingIntegral::ZetaPrime, VanishingIntegral::ZetaSecond])
        .collect();
    kinds
        .par_iter()
        .map(|&k| check_vanishing_integral(k, policy))
        .collect()
}

/// Finite-difference step of the derivative law.
const FD_STEP: f64 = 1e-8;

/// `∂/∂x ζ^(n+1)(0, x) = (n+1)(−1)^(n+1) γ_n(x)`, the left side by a
/// central difference of step `1e-8`.
pub(super) fn derivative_law(policy: &TolPolicy) -> Vec<VerifyReport> {
    let grid: Vec<(u32, &str)> = (0..3)
        .flat_map(|n| ["0.5", "1.5"].into_iter().map(move |x| (n, x)))
        .collect();
    grid.par_iter()
        .map(|&(n, x)| {
            let x = policy.num(x);
            point(
                "derivative_law",
                vec![("n", n.to_string()), ("x", show(&x))],
                || {
                    let diff_tol = 1e-16;
                    let digits = working_digits(policy.digits, diff_tol);
                    let x = x.with_digits(digits);
                    let h = ExtReal::from_f64(FD_STEP, digits);
                    let up = zeta_deriv0_diff(n, &(&x + &h), diff_tol)?;
                    let down = zeta_deriv0_diff(n, &(&x - &h), diff_tol)?;
                    let fd = (&up.value - &down.value) / &(&h * 2);
                    let fd_err = (&up.abs_err + &down.abs_err) / &(&h * 2);
                    let g = gamma_n(&StieltjesQuery::new(
                        n,
                        x.clone(),
                        Method::SeriesB,
                        policy.tol,
                    )?)?;
                    let sign = if n % 2 == 0 { -1 } else { 1 };
                    let rhs = g.scaled(&ExtReal::from_i64(sign * (i64::from(n) + 1), digits));
                    let claimed = (&fd_err + &rhs.abs_err) * 10;
                    let tol = claimed.max(&ExtReal::from_f64(1e-6, digits));
                    Ok(Outcome::new(fd - &rhs.value, tol).note("central difference, h = 1e-8"))
                },
            )
        })
        .collect()
}

/// `∫_1^u γ_n(x) dx` by quadrature against the closed form in zeta
/// derivatives.
pub(super) fn integral(policy: &TolPolicy) -> Vec<VerifyReport> {
    let grid: Vec<(u32, &str)> = (0..3)
        .flat_map(|n| ["0.5", "1.5", "3"].into_iter().map(move |u| (n, u)))
        .collect();
    grid.par_iter()
        .map(|&(n, u)| {
            let u = policy.num(u);
            point(
                "integral",
                vec![("n", n.to_string()), ("u", show(&u))],
                || {
                    let one = ExtReal::one(policy.digits);
                    let q = if u > 1 {
                        integrate_gamma(n, &one, &u, policy.tol)?
                    } else {
                        integrate_gamma(n, &u, &one, policy.tol)?.negated()
                    };
                    let closed = stieltjes_integral(n, &u, policy.tol)?;
                    Ok(Outcome::agree(&q, &closed, &policy.slack()))
                },
            )
        })
        .collect()
}
