//! Checks on the `η_n`, `δ_n` and Dilcher constants.

use rayon::prelude::*;

use super::{point, show, Outcome, TolPolicy, VerifyReport};
use crate::error::Result;
use crate::numeric::{CompensatedSum, ExtReal, SeriesValue};
use crate::related::{
    delta as delta_n, dilcher_log_gamma_k, dilcher_series61, eta as eta_n, log_gamma, von_mangoldt,
    EtaRoute,
};
use crate::stieltjes::{gamma1_alt, gamma_n, Method, StieltjesQuery};
use crate::zeta::{zeta_deriv0_const, zeta_deriv0_diff};

fn gamma(n: u32, x: &ExtReal, method: Method, tol: f64) -> Result<SeriesValue> {
    gamma_n(&StieltjesQuery::new(n, x.clone(), method, tol)?)
}

/// Decades at which the von Mangoldt trend is sampled.
const TREND_DECADES: [u64; 3] = [10_000, 100_000, 1_000_000];

/// Bound on `|Σ_{k≤K} (Λ(k)−1)/k + 2γ|` at the last decade.
const TREND_BOUND: f64 = 0.05;

/// `Σ_{k≤K} (Λ(k) − 1)/k` at each of `decades`.
fn mangoldt_partials(decades: &[u64], digits: u32) -> Result<Vec<ExtReal>> {
    let last = *decades.last().expect("non-empty");
    let table = von_mangoldt(last)?;
    let mut acc = CompensatedSum::new(digits);
    let mut out = Vec::new();
    for k in 1..=last {
        acc.add(&((table.lambda(k, digits) - 1) / &ExtReal::from_u64(k, digits)));
        if decades.contains(&k) {
            out.push(acc.value());
        }
    }
    Ok(out)
}

/// `η_0 = −γ`, the signs `η_n = (−1)^(n+1) c_n` with `c_n > 0`, the series
/// route near `−γ`, and the von Mangoldt trend towards `−2γ`.
pub(super) fn eta(policy: &TolPolicy) -> Vec<VerifyReport> {
    let mut out: Vec<VerifyReport> = (0..=4u32)
        .into_par_iter()
        .map(|n| {
            point(
                "eta",
                vec![("n", n.to_string()), ("property", "sign".into())],
                || {
                    let v = eta_n(n, EtaRoute::FromGamma, policy.tol)?;
                    let positive_expected = n % 2 == 1;
                    let holds =
                        v.value.is_positive() == positive_expected && v.abs_err < v.value.abs();
                    Ok(Outcome::property(holds, v.value.clone())
                        .note(format!("eta_{n} = {}", v.value.to_decimal(16))))
                },
            )
        })
        .collect();
    out.push(point(
        "eta",
        vec![("n", "0".into()), ("property", "minus_euler".into())],
        || {
            let v = eta_n(0, EtaRoute::FromGamma, policy.tol)?;
            let g = gamma(0, &policy.num("1"), Method::SeriesB, policy.tol)?;
            Ok(Outcome::agree(&v, &g.negated(), &policy.slack()))
        },
    ));
    out.push(point(
        "eta",
        vec![("n", "0".into()), ("property", "series_route".into())],
        || {
            let big_k = *TREND_DECADES.last().expect("non-empty");
            let s = eta_n(0, EtaRoute::Series { terms: big_k }, policy.tol)?;
            let g = eta_n(0, EtaRoute::FromGamma, policy.tol)?;
            let tol = ExtReal::from_f64(TREND_BOUND, policy.digits);
            Ok(Outcome::new(&s.value - &g.value, tol)
                .note(format!("K = {big_k}, no error bound claimed")))
        },
    ));
    let partials = mangoldt_partials(&TREND_DECADES, policy.digits);
    let gaps = || -> Result<Vec<ExtReal>> {
        let g = gamma(0, &policy.num("1"), Method::SeriesB, policy.tol)?;
        let two_g = &g.value * 2;
        Ok(partials
            .clone()?
            .iter()
            .map(|p| (p + &two_g).abs())
            .collect())
    };
    let describe = |gaps: &[ExtReal]| {
        let parts: Vec<String> = TREND_DECADES
            .iter()
            .zip(gaps)
            .map(|(k, g)| format!("K={k}: {}", g.to_decimal(6)))
            .collect();
        format!("|sum + 2 gamma| {}", parts.join(", "))
    };
    out.push(point(
        "eta",
        vec![("n", "0".into()), ("property", "trend_bound".into())],
        || {
            let gaps = gaps()?;
            let last = gaps.last().expect("non-empty").clone();
            let note = describe(&gaps);
            Ok(Outcome::new(last, ExtReal::from_f64(TREND_BOUND, policy.digits)).note(note))
        },
    ));
    out.push(point(
        "eta",
        vec![("n", "0".into()), ("property", "trend_monotone".into())],
        || {
            let gaps = gaps()?;
            let mut worst = ExtReal::zero(policy.digits);
            for w in gaps.windows(2) {
                worst = worst.max(&(&w[1] - &w[0]));
            }
            let holds = !worst.is_positive();
            Ok(Outcome::property(holds, worst).note(describe(&gaps)))
        },
    ));
    out
}

/// Cut-off of the Euler–Maclaurin evaluation of `δ_n`.
const DELTA_N: u64 = 1000;

/// `δ_0 = ½`, `δ_1 = ½ log 2π − 1`, `δ_2 = ζ''(0) + 2`.
pub(super) fn delta(policy: &TolPolicy) -> Vec<VerifyReport> {
    (0..=2u32)
        .into_par_iter()
        .map(|n| {
            point(
                "delta",
                vec![("N", DELTA_N.to_string()), ("n", n.to_string())],
                || {
                    let v = delta_n(n, DELTA_N, policy.tol)?;
                    let d = v.value.digits();
                    let want = match n {
                        0 => SeriesValue::exact(ExtReal::from_ratio(1, 2, d), "closed_form"),
                        1 => {
                            let w = (ExtReal::pi(d) * 2).ln() / 2 - 1;
                            SeriesValue::new(w.clone(), w.ulp() * 2, 0, "closed_form")
                        }
                        _ => zeta_deriv0_const(2, policy.tol)?.shifted(&ExtReal::from_i64(2, d)),
                    };
                    Ok(Outcome::agree(&v, &want, &policy.slack()))
                },
            )
        })
        .collect()
}

/// `ζ''(0) = γ₁ + ½γ² − π²/24 − ½ log² 2π` with `ζ''(0)` from `δ_2` and
/// `γ₁` from the alternating series, plus `ζ^(n)(0)/n!` lying in
/// `(−1.2, −0.8)` for `n = 1, 2`.
pub(super) fn apostol(policy: &TolPolicy) -> Vec<VerifyReport> {
    let relation = point("apostol", vec![("property", "relation".into())], || {
        let from_delta = delta_n(2, DELTA_N, policy.tol)?;
        let d = from_delta.value.digits();
        let second = from_delta.shifted(&ExtReal::from_i64(-2, d));
        let g1 = gamma1_alt(policy.tol)?;
        let g0 = gamma(0, &ExtReal::one(d), Method::SeriesC, policy.tol)?;
        let two_pi_ln = (ExtReal::pi(d) * 2).ln();
        let value = &g1.value + &(g0.value.square() / 2)
            - ExtReal::pi(d).square() / 24
            - two_pi_ln.square() / 2;
        let err = &g1.abs_err + &(&g0.abs_err * &(g0.value.abs() + 1)) + value.ulp() * 4;
        let closed = SeriesValue::new(value, err, 0, "closed_form");
        Ok(Outcome::agree(&second, &closed, &policy.slack()))
    });
    let mut out = vec![relation];
    for n in [1u32, 2] {
        out.push(point(
            "apostol",
            vec![("n", n.to_string()), ("property", "bounded".into())],
            || {
                let v = delta_n(n, DELTA_N, policy.tol)?;
                let d = v.value.digits();
                // ζ^(n)(0) = (−1)^n δ_n − n!.
                let fact = if n == 1 { 1 } else { 2 };
                let signed = if n == 1 { -&v.value } else { v.value.clone() };
                let scaled = (signed - fact) / fact;
                let lo = ExtReal::from_f64(-1.2, d);
                let hi = ExtReal::from_f64(-0.8, d);
                let miss = (&lo - &scaled).max(&(&scaled - &hi));
                let holds = scaled > lo && scaled < hi;
                Ok(Outcome::property(holds, miss)
                    .note(format!("zeta^({n})(0)/{n}! = {}", scaled.to_decimal(10))))
            },
        ));
    }
    out
}

/// Dilcher's `Γ_k`: `Γ_k(1) = Γ_k(2) = 1`, `Γ_0 = Γ`, the functional
/// equation `log Γ_k(x+1) − log Γ_k(x) = log^(k+1) x/(k+1)`, and the power
/// series `ζ''(0,x) − ζ''(0) − 2γ₁x = log² x − 2 Σ_n (…) x^(n+1)`,
/// which at `x = 1` gives `γ₁`.
pub(super) fn dilcher(policy: &TolPolicy) -> Vec<VerifyReport> {
    let mut jobs: Vec<Box<dyn Fn() -> VerifyReport + Send + Sync + '_>> = Vec::new();
    for k in 0..=4u32 {
        for x in ["0", "1"] {
            jobs.push(Box::new(move || {
                let x = policy.num(x);
                point(
                    "dilcher",
                    vec![
                        ("k", k.to_string()),
                        ("property", "unit".into()),
                        ("x", show(&x)),
                    ],
                    || {
                        let v = dilcher_log_gamma_k(k, &x, policy.tol)?;
                        let tol = &v.abs_err + &v.value.ulp();
                        Ok(Outcome::new(v.value, tol))
                    },
                )
            }));
        }
    }
    jobs.push(Box::new(move || {
        let x = policy.num("1.5");
        point(
            "dilcher",
            vec![
                ("k", "0".into()),
                ("property", "log_gamma".into()),
                ("x", show(&x)),
            ],
            || {
                let a = dilcher_log_gamma_k(0, &x, policy.tol)?;
                let b = log_gamma(&(&x + 1), policy.tol)?;
                Ok(Outcome::agree(&a, &b, &policy.slack()))
            },
        )
    }));
    for k in [1u32, 2] {
        for x in ["0.5", "2"] {
            jobs.push(Box::new(move || {
                let x = policy.num(x);
                point(
                    "dilcher",
                    vec![
                        ("k", k.to_string()),
                        ("property", "recurrence".into()),
                        ("x", show(&x)),
                    ],
                    || {
                        let a = dilcher_log_gamma_k(k, &x, policy.tol)?;
                        let b = dilcher_log_gamma_k(k, &(&x - 1), policy.tol)?;
                        let d = a.value.digits();
                        let step = x.with_digits(d).ln().powi(k as i32 + 1) / (i64::from(k) + 1);
                        Ok(Outcome::agree(&a, &b.shifted(&step), &policy.slack()))
                    },
                )
            }));
        }
    }
    for x in ["1/4", "1/2", "3/4", "1"] {
        jobs.push(Box::new(move || {
            let x = policy.num(x);
            point(
                "dilcher",
                vec![
                    ("k", "1".into()),
                    ("property", "power_series".into()),
                    ("x", show(&x)),
                ],
                || {
                    let s = dilcher_series61(&x, policy.tol)?;
                    let d = s.value.digits();
                    let g1 = gamma(1, &ExtReal::one(d), Method::SeriesB, policy.tol)?;
                    if x == 1 {
                        return Ok(
                            Outcome::agree(&s, &g1, &policy.slack()).note("x = 1 gives gamma_1")
                        );
                    }
                    let x = x.with_digits(d);
                    let lhs = zeta_deriv0_diff(1, &x, policy.tol)?.minus(&g1.scaled(&(&x * 2)));
                    let rhs = s
                        .scaled(&ExtReal::from_i64(-2, d))
                        .shifted(&x.ln().square());
                    Ok(Outcome::agree(&lhs, &rhs, &policy.slack()))
                },
            )
        }));
    }
    jobs.par_iter().map(|job| job()).collect()
}
