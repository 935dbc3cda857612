//! Qualitative structure of `γ_n(x)`: zeros on `[1, 2]`, signs near 0, and
//! the `g_k` functions.

use rayon::prelude::*;

use super::{point, show, Outcome, TolPolicy, VerifyReport};
use crate::error::{domain, Result};
use crate::numeric::euler_maclaurin::{tailed_sum, TailSum, DEFAULT_ORDER};
use crate::numeric::ext::working_digits;
use crate::numeric::{find_root_bisect, ExtReal, LogPoly, SeriesValue};
use crate::stieltjes::{gamma_n, Method, StieltjesQuery};
use crate::zeta::zeta_deriv0_diff;

/// The positive zero of the digamma function.
pub const DIGAMMA_ZERO: &str = "1.461632144968362341262659542325721328468";

/// Scan resolution on `[1, 2]`.
const SCAN_POINTS: u64 = 256;

/// Width of the bisection bracket for located roots.
const ROOT_WIDTH: f64 = 1e-12;

/// Accepted distance between the located digamma zero and [`DIGAMMA_ZERO`].
const ROOT_TOL: f64 = 1e-9;

fn gamma_c(n: u32, x: &ExtReal, tol: f64) -> Result<ExtReal> {
    Ok(gamma_n(&StieltjesQuery::new(n, x.clone(), Method::SeriesC, tol)?)?.value)
}

/// Roots of `γ_n` on `[1, 2]`: sign changes on a 256-interval grid,
/// each refined by bisection.
pub fn zero_scan(n: u32, policy: &TolPolicy) -> Result<Vec<ExtReal>> {
    if n > 3 {
        return Err(domain(format!("zero scan needs n <= 3, got {n}")));
    }
    let d = policy.digits;
    let scan_tol = policy.tol.max(1e-10);
    let xs: Vec<ExtReal> = (0..=SCAN_POINTS)
        .map(|i| ExtReal::one(d) + ExtReal::from_ratio(i as i64, SCAN_POINTS as i64, d))
        .collect();
    let values = xs
        .par_iter()
        .map(|x| gamma_c(n, x, scan_tol))
        .collect::<Result<Vec<_>>>()?;
    let brackets: Vec<usize> = (0..SCAN_POINTS as usize)
        .filter(|&i| values[i].is_negative() != values[i + 1].is_negative())
        .collect();
    let width = ExtReal::from_f64(ROOT_WIDTH, d);
    brackets
        .par_iter()
        .map(|&i| find_root_bisect(|x| gamma_c(n, x, policy.tol), &xs[i], &xs[i + 1], &width))
        .collect()
}

/// `γ_0` has its zero at the digamma zero; `γ_n`, `n = 1, 2, 3`, changes
/// sign at least twice on `[1, 2]`.
pub fn check_zero_structure(n: u32, policy: &TolPolicy) -> VerifyReport {
    point("zero_structure", vec![("n", n.to_string())], || {
        let roots = zero_scan(n, policy)?;
        let listed: Vec<String> = roots.iter().map(|r| r.to_decimal(14)).collect();
        let note = format!("roots on [1,2]: [{}]", listed.join(", "));
        let d = policy.digits;
        if n == 0 {
            let alpha = ExtReal::parse(DIGAMMA_ZERO, d)?;
            let nearest = roots
                .iter()
                .map(|r| (r - &alpha).abs())
                .reduce(|a, b| a.min(&b))
                .unwrap_or_else(|| ExtReal::infinity(d));
            return Ok(Outcome::new(nearest, ExtReal::from_f64(ROOT_TOL, d)).note(note));
        }
        let missing = 2i64 - roots.len() as i64;
        Ok(Outcome::property(missing <= 0, ExtReal::from_i64(missing.max(0), d)).note(note))
    })
}

pub(super) fn zero_structure(policy: &TolPolicy) -> Vec<VerifyReport> {
    (0..=3u32)
        .into_par_iter()
        .map(|n| check_zero_structure(n, policy))
        .collect()
}

/// `Σ_{n≥0} [log^(k+1)(n+x) − log^(k+1)(n+1) − (k+1)(x−1) log^k(n+1)/(n+1)]`.
fn g_series(k: u32, x: &ExtReal, tol: f64) -> Result<SeriesValue> {
    let digits = working_digits(x.digits(), tol);
    let x = x.with_digits(digits);
    let p = k as i32;
    let big_g = LogPoly::log_power(k + 1, digits);
    let f = LogPoly::log_over_t(k, digits);
    let one = ExtReal::one(digits);
    let c = (&x - 1) * (i64::from(k) + 1);
    // A(M+x) − A(M+1) − (x−1) G(M+1) → 0 for A' = G.
    let tail = TailSum::new(DEFAULT_ORDER, digits)
        .part(one.clone(), &big_g, x.clone())
        .part(-&one, &big_g, one.clone())
        .part(-&c, &f, one);
    let term = |n: u64| {
        let a = &x + &ExtReal::from_u64(n, digits);
        let b = ExtReal::from_u64(n + 1, digits);
        let ln_b = b.ln();
        let ga = a.ln().powi(p + 1);
        let gb = ln_b.powi(p + 1);
        let fb = &c * &ln_b.powi(p) / &b;
        let scale = ga.to_f64().abs() + gb.to_f64().abs() + fb.to_f64().abs();
        (ga - gb - fb, scale)
    };
    tailed_sum("g_series", 0, tol, &tail, &ExtReal::zero(digits), term)
}

/// `g_1` and `g_2` two ways: from zeta derivatives and `γ_k`, and from the
/// direct series. The `log Γ` and `g_1` terms common to both sides cancel,
/// leaving
///
/// ```text
/// (−1)^(k+1)/(k+1) [ζ^(k+1)(0,x) − ζ^(k+1)(0)] − (x−1) γ_k = S_k(x)/(k+1).
/// ```
pub fn check_g_functions(x: &ExtReal, policy: &TolPolicy) -> Vec<VerifyReport> {
    [1u32, 2]
        .par_iter()
        .map(|&k| {
            point(
                "g_functions",
                vec![("k", k.to_string()), ("x", show(x))],
                || {
                    if !x.is_positive() {
                        return Err(domain(format!("g-function check needs x > 0, got {x}")));
                    }
                    let d = working_digits(x.digits(), policy.tol);
                    let xd = x.with_digits(d);
                    let np1 = i64::from(k) + 1;
                    let sign = if k % 2 == 0 { -1 } else { 1 };
                    let diff = zeta_deriv0_diff(k, &xd, policy.tol)?;
                    let g = gamma_n(&StieltjesQuery::new(
                        k,
                        ExtReal::one(d),
                        Method::SeriesB,
                        policy.tol,
                    )?)?;
                    let lhs = diff
                        .scaled(&ExtReal::from_ratio(sign, np1, d))
                        .minus(&g.scaled(&(&xd - 1)));
                    let rhs = g_series(k, &xd, policy.tol)?.scaled(&ExtReal::from_ratio(1, np1, d));
                    Ok(Outcome::agree(&lhs, &rhs, &policy.slack()))
                },
            )
        })
        .collect()
}

pub(super) fn g_functions(policy: &TolPolicy) -> Vec<VerifyReport> {
    ["0.5", "1", "2", "3"]
        .par_iter()
        .flat_map(|x| check_g_functions(&policy.num(x), policy))
        .collect()
}

/// `γ_{2m}(x) → +∞` and `γ_{2m+1}(x) → −∞` as `x → 0⁺`, at `x = 10⁻³`,
/// with `γ_2(10⁻³) > 0.9 · 10³ log² 10³ − 1`.
pub(super) fn sign_near_zero(policy: &TolPolicy) -> Vec<VerifyReport> {
    let x = policy.num("0.001");
    let mut out: Vec<VerifyReport> = (0..=3u32)
        .into_par_iter()
        .map(|n| {
            point(
                "sign_near_zero",
                vec![
                    ("n", n.to_string()),
                    ("property", "sign".into()),
                    ("x", show(&x)),
                ],
                || {
                    let v = gamma_c(n, &x, policy.tol)?;
                    let holds = v.is_positive() == (n % 2 == 0);
                    Ok(Outcome::property(holds, v.clone())
                        .note(format!("gamma_{n}(x) = {}", v.to_decimal(12))))
                },
            )
        })
        .collect();
    out.push(point(
        "sign_near_zero",
        vec![
            ("n", "2".into()),
            ("property", "magnitude".into()),
            ("x", show(&x)),
        ],
        || {
            let v = gamma_c(2, &x, policy.tol)?;
            let bound = x.recip() * x.ln().square() * 9 / 10 - 1;
            let miss = &bound - &v;
            Ok(Outcome::property(v > bound, miss)
                .note(format!("gamma_2(x) = {}", v.to_decimal(12))))
        },
    ));
    out
}
