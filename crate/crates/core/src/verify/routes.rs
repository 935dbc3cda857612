//! Agreement between independent representations of the same quantity.

use rayon::prelude::*;

use super::{point, show, Outcome, TolPolicy, VerifyReport};
use crate::error::Result;
use crate::numeric::{ExtReal, SeriesValue};
use crate::related::{digamma, digamma_rational as gauss_digamma, log_gamma};
use crate::stieltjes::{
    gamma1_alt, gamma1_rational, gamma_diff, gamma_n, Method, RationalArg, StieltjesQuery,
};
use crate::zeta::{hurwitz_em, hurwitz_hasse_budget, zeta_deriv0_diff};

fn gamma(n: u32, x: &ExtReal, method: Method, tol: f64) -> Result<SeriesValue> {
    gamma_n(&StieltjesQuery::new(n, x.clone(), method, tol)?)
}

/// Slack factor on the summed errors when comparing the Coffey series.
const COFFEY_SLACK: i64 = 10;

/// Series B against series C for `n ≤ 4`, and the Coffey series against
/// series B for `1 ≤ n ≤ 4` within ten times the summed errors.
pub(super) fn representations(policy: &TolPolicy) -> Vec<VerifyReport> {
    let xs = ["0.25", "0.5", "1", "1.5", "2", "pi"];
    let grid: Vec<(u32, &str)> = (0..=4)
        .flat_map(|n| xs.iter().map(move |&x| (n, x)))
        .collect();
    grid.par_iter()
        .flat_map(|&(n, x)| {
            let x = policy.num(x);
            let b = gamma(n, &x, Method::SeriesB, policy.tol);
            let inputs = |route: &str| {
                vec![
                    ("n", n.to_string()),
                    ("route", route.to_string()),
                    ("x", show(&x)),
                ]
            };
            let mut out = vec![point("representations", inputs("series_c"), || {
                let c = gamma(n, &x, Method::SeriesC, policy.tol)?;
                Ok(Outcome::agree(&b.clone()?, &c, &policy.slack()))
            })];
            if n >= 1 {
                out.push(point("representations", inputs("coffey"), || {
                    let b = b.clone()?;
                    let c = gamma(n, &x, Method::Coffey { m: 0 }, policy.tol)?;
                    let tol = (&b.abs_err + &c.abs_err) * COFFEY_SLACK + policy.slack();
                    Ok(Outcome::new(b.gap(&c), tol))
                }));
            }
            out
        })
        .collect()
}

/// `γ₁` by series B, series C and the alternating zeta series, pairwise.
pub(super) fn gamma1_routes(policy: &TolPolicy) -> Vec<VerifyReport> {
    let one = policy.num("1");
    let routes: Vec<(&str, Result<SeriesValue>)> = vec![
        ("series_b", gamma(1, &one, Method::SeriesB, policy.tol)),
        ("series_c", gamma(1, &one, Method::SeriesC, policy.tol)),
        ("alternating", gamma1_alt(policy.tol)),
    ];
    let mut out = Vec::new();
    for i in 0..routes.len() {
        for j in i + 1..routes.len() {
            let pair = format!("{}-{}", routes[i].0, routes[j].0);
            out.push(point("gamma1_routes", vec![("pair", pair)], || {
                let (a, b) = (routes[i].1.clone()?, routes[j].1.clone()?);
                Ok(Outcome::agree(&a, &b, &policy.slack()))
            }));
        }
    }
    out
}

/// `γ_n(x) − γ_n(y)` as one series against the difference of two.
pub(super) fn difference(policy: &TolPolicy) -> Vec<VerifyReport> {
    let grid = [
        (0, "0.5", "1"),
        (1, "1", "2"),
        (2, "0.25", "3"),
        (3, "1.5", "pi"),
        (4, "2", "0.75"),
    ];
    grid.par_iter()
        .map(|&(n, x, y)| {
            let (x, y) = (policy.num(x), policy.num(y));
            point(
                "difference",
                vec![("n", n.to_string()), ("x", show(&x)), ("y", show(&y))],
                || {
                    let d = gamma_diff(n, &x, &y, policy.tol)?;
                    let a = gamma(n, &x, Method::SeriesB, policy.tol)?;
                    let b = gamma(n, &y, Method::SeriesB, policy.tol)?;
                    Ok(Outcome::agree(&d, &a.minus(&b), &policy.slack()))
                },
            )
        })
        .collect()
}

/// `ζ'(0, x) − ζ'(0) = log Γ(x)`.
pub(super) fn lerch(policy: &TolPolicy) -> Vec<VerifyReport> {
    ["0.25", "0.5", "1", "1.5", "2", "3"]
        .par_iter()
        .map(|x| {
            let x = policy.num(x);
            point("lerch", vec![("x", show(&x))], || {
                let a = zeta_deriv0_diff(0, &x, policy.tol)?;
                let b = log_gamma(&x, policy.tol)?;
                Ok(Outcome::agree(&a, &b, &policy.slack()))
            })
        })
        .collect()
}

/// Bound on the omitted Laurent terms at `s − 1 = 0.1`.
const LAURENT_TOL: f64 = 1e-9;

/// `ζ(s, x) − 1/(s−1) = Σ_{n≤6} (−1)^n γ_n(x) (s−1)^n / n!` up to the
/// truncation, at `s = 1.1`.
pub(super) fn laurent(policy: &TolPolicy) -> Vec<VerifyReport> {
    ["1", "0.5"]
        .par_iter()
        .map(|x| {
            let x = policy.num(x);
            let s = policy.num("1.1");
            point("laurent", vec![("s", show(&s)), ("x", show(&x))], || {
                let z = hurwitz_em(&s, &x)?;
                let w = &s - 1;
                let lhs = z.shifted(&-w.recip());
                let mut value = ExtReal::zero(policy.digits);
                let mut err = ExtReal::zero(policy.digits);
                let mut coeff = ExtReal::one(policy.digits);
                for n in 0..=6u32 {
                    if n > 0 {
                        coeff = -(coeff * &w) / i64::from(n);
                    }
                    let g = gamma(n, &x, Method::SeriesB, policy.tol)?;
                    value += &coeff * &g.value;
                    err += coeff.abs() * &g.abs_err;
                }
                let rhs = SeriesValue::new(value, err, 0, "laurent_sum");
                let tol =
                    &lhs.abs_err + &rhs.abs_err + ExtReal::from_f64(LAURENT_TOL, policy.digits);
                Ok(Outcome::new(lhs.gap(&rhs), tol).note("terms n <= 6"))
            })
        })
        .collect()
}

/// Hasse tolerances, loosest first; the tightest one reached is compared.
const HASSE_LADDER: [f64; 5] = [1e-1, 1e-2, 1e-4, 1e-6, 1e-8];

/// Outer-term budget of the Hasse series inside the suite.
const HASSE_BUDGET: usize = 1024;

/// Hasse's series against Euler–Maclaurin: the terminating cases at
/// non-positive integers, and a 5×5 grid at the tightest tolerance the
/// Hasse series reaches within its term budget.
pub(super) fn hasse(policy: &TolPolicy) -> Vec<VerifyReport> {
    let mut grid: Vec<(&str, &str)> = vec![("-1", "1"), ("0", "0.25"), ("-3", "0.5")];
    for s in ["-2.5", "-0.5", "0.5", "1.5", "3"] {
        for x in ["1", "1.5", "2", "3", "5"] {
            grid.push((s, x));
        }
    }
    grid.par_iter()
        .map(|&(s, x)| {
            let (s, x) = (policy.num(s), policy.num(x));
            let mut best: Option<(f64, SeriesValue)> = None;
            let mut last_err = None;
            for tol in HASSE_LADDER {
                match hurwitz_hasse_budget(&s, &x, tol, HASSE_BUDGET) {
                    Ok(h) => best = Some((tol, h)),
                    Err(e) => {
                        last_err = Some(e);
                        break;
                    }
                }
            }
            match best {
                Some((tol, h)) => {
                    let inputs = vec![
                        ("s", show(&s)),
                        ("tol", format!("{tol:e}")),
                        ("x", show(&x)),
                    ];
                    point("hasse", inputs, || {
                        let e = hurwitz_em(&s, &x)?;
                        Ok(Outcome::agree(&h, &e, &policy.slack()))
                    })
                }
                None => {
                    let err = last_err.expect("ladder is non-empty");
                    VerifyReport::errored(
                        "hasse",
                        [("s", show(&s)), ("tol", "none".into()), ("x", show(&x))],
                        &err,
                    )
                }
            }
        })
        .collect()
}

/// The rational closed form for `γ₁(p/q)` against series B for `q ≤ 6`,
/// and the `¼, ¾` pair sum `2γ₁ − 7 log² 2 − 6γ log 2`.
pub(super) fn rational_gamma1(policy: &TolPolicy) -> Vec<VerifyReport> {
    let args: Vec<RationalArg> = (2..=6).flat_map(RationalArg::with_denominator).collect();
    let mut out: Vec<VerifyReport> = args
        .par_iter()
        .map(|&r| {
            point("rational_gamma1", vec![("r", r.to_string())], || {
                let a = gamma1_rational(r, policy.tol)?;
                let b = gamma(1, &r.value(policy.digits), Method::SeriesB, policy.tol)?;
                Ok(Outcome::agree(&a, &b, &policy.slack()))
            })
        })
        .collect();
    out.push(point(
        "rational_gamma1",
        vec![("r", "1/4+3/4".into())],
        || {
            let a = gamma1_rational(RationalArg::new(1, 4)?, policy.tol)?;
            let b = gamma1_rational(RationalArg::new(3, 4)?, policy.tol)?;
            let one = ExtReal::one(policy.digits);
            let g0 = gamma(0, &one, Method::SeriesB, policy.tol)?;
            let g1 = gamma(1, &one, Method::SeriesB, policy.tol)?;
            let l2 = ExtReal::ln2(g0.value.digits());
            let value = &g1.value * 2 - l2.square() * 7 - &g0.value * &l2 * 6;
            let err = &g1.abs_err * 2 + &g0.abs_err * &l2 * 6 + value.ulp() * 4;
            let closed = SeriesValue::new(value, err, 0, "pair_sum");
            Ok(Outcome::agree(&a.plus(&b), &closed, &policy.slack()))
        },
    ));
    out
}

/// Gauss's formula for `ψ(p/q)` against the digamma series for `q ≤ 8`,
/// and the closed forms at `½` and `¼`.
pub(super) fn digamma_rational(policy: &TolPolicy) -> Vec<VerifyReport> {
    let args: Vec<RationalArg> = (2..=8).flat_map(RationalArg::with_denominator).collect();
    let mut out: Vec<VerifyReport> = args
        .par_iter()
        .map(|&r| {
            point(
                "digamma_rational",
                vec![("r", r.to_string()), ("route", "series".into())],
                || {
                    let a = gauss_digamma(r, policy.tol)?;
                    let b = digamma(&r.value(policy.digits), policy.tol)?;
                    Ok(Outcome::agree(&a, &b, &policy.slack()))
                },
            )
        })
        .collect();
    for (p, q) in [(1, 2), (1, 4)] {
        out.push(point(
            "digamma_rational",
            vec![("r", format!("{p}/{q}")), ("route", "closed".into())],
            || {
                let a = gauss_digamma(RationalArg::new(p, q)?, policy.tol)?;
                let one = ExtReal::one(a.value.digits());
                let g = gamma(0, &one, Method::SeriesB, policy.tol)?;
                let l2 = ExtReal::ln2(a.value.digits());
                // ψ(½) = −γ − 2 log 2, ψ(¼) = −γ − 3 log 2 − π/2.
                let rest = if q == 2 {
                    -(l2 * 2)
                } else {
                    -(l2 * 3) - ExtReal::pi(a.value.digits()) / 2
                };
                let closed = g.negated().shifted(&rest);
                Ok(Outcome::agree(&a, &closed, &policy.slack()))
            },
        ));
    }
    out
}
