//! Composite Gauss–Legendre quadrature.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::ext::{digits_to_bits, ExtReal};
use super::series::SeriesValue;
use super::sum::CompensatedSum;
use crate::error::{domain, Error, Result};

/// Extra digits carried by nodes and weights beyond the caller's precision.
const GUARD_DIGITS: u32 = 8;

/// How panels are laid out on `[a, b]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Grading {
    Uniform,
    /// Panel widths shrink geometrically by `ratio` towards `a`, for an
    /// integrable singularity at the left endpoint.
    SingularLeft {
        ratio: f64,
    },
}

type Rule = Arc<Vec<(ExtReal, ExtReal)>>;

/// Nodes and weights of the `n`-point rule on `[-1, 1]`, computed once per
/// `(n, digits)` and shared.
pub fn gauss_legendre_rule(n: usize, digits: u32) -> Rule {
    static CACHE: OnceLock<Mutex<HashMap<(usize, u32), Rule>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(r) = cache.lock().expect("rule cache poisoned").get(&(n, digits)) {
        return r.clone();
    }
    let rule = Arc::new(compute_rule(n, digits));
    cache
        .lock()
        .expect("rule cache poisoned")
        .entry((n, digits))
        .or_insert(rule)
        .clone()
}

fn compute_rule(n: usize, digits: u32) -> Vec<(ExtReal, ExtReal)> {
    let wd = digits + 10;
    let tiny = ExtReal::from_i64(2, wd).powi(-(digits_to_bits(digits) as i32) - 4);
    let mut half = Vec::with_capacity(n / 2 + 1);
    for i in 0..n.div_ceil(2) {
        let guess = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut x = ExtReal::from_f64(guess, wd);
        let mut dp = ExtReal::zero(wd);
        for _ in 0..200 {
            let (p, d) = legendre(n, &x);
            let dx = &p / &d;
            x -= &dx;
            dp = d;
            if dx.abs() <= tiny {
                let (_, d) = legendre(n, &x);
                dp = d;
                break;
            }
        }
        let w = ExtReal::from_i64(2, wd) / ((ExtReal::one(wd) - x.square()) * dp.square());
        half.push((x, w));
    }
    let mut rule = Vec::with_capacity(n);
    for (x, w) in &half {
        rule.push((-x.with_digits(digits), w.with_digits(digits)));
    }
    let last = half.len() - 1;
    for (i, (x, w)) in half.iter().enumerate().rev() {
        if n % 2 == 1 && i == last {
            continue;
        }
        rule.push((x.with_digits(digits), w.with_digits(digits)));
    }
    if n % 2 == 1 {
        // The middle node is exactly zero.
        let mid = n / 2;
        rule[mid].0 = ExtReal::zero(digits);
    }
    rule
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre(n: usize, x: &ExtReal) -> (ExtReal, ExtReal) {
    let wd = x.digits();
    let mut p0 = ExtReal::one(wd);
    let mut p1 = x.clone();
    for j in 2..=n as i64 {
        let p2 = (x * &p1 * (2 * j - 1) - &p0 * (j - 1)) / j;
        p0 = p1;
        p1 = p2;
    }
    let d = (x * &p1 - &p0) * n as i64 / (x.square() - 1);
    (p1, d)
}

fn breakpoints(a: &ExtReal, b: &ExtReal, panels: usize, grading: Grading) -> Vec<ExtReal> {
    let width = b - a;
    match grading {
        Grading::Uniform => (0..=panels)
            .map(|i| a + &(&width * i as i64 / panels as i64))
            .collect(),
        Grading::SingularLeft { ratio } => {
            let r = ExtReal::from_f64(ratio, a.digits());
            let mut pts = vec![a.clone()];
            for i in 1..=panels {
                pts.push(a + &(&width * r.powi((panels - i) as i32)));
            }
            pts
        }
    }
}

fn bisect(pts: &[ExtReal]) -> Vec<ExtReal> {
    let mut out = Vec::with_capacity(2 * pts.len());
    for w in pts.windows(2) {
        out.push(w[0].clone());
        out.push((&w[0] + &w[1]) / 2);
    }
    out.extend(pts.last().cloned());
    out
}

fn integrate<F>(f: &mut F, pts: &[ExtReal], rule: &[(ExtReal, ExtReal)]) -> Result<(ExtReal, f64)>
where
    F: FnMut(&ExtReal) -> Result<ExtReal>,
{
    let digits = rule.first().map_or(34, |r| r.0.digits());
    let mut acc = CompensatedSum::new(digits);
    for w in pts.windows(2) {
        let half = (&w[1] - &w[0]) / 2;
        let mid = (&w[0] + &w[1]) / 2;
        for (x, wt) in rule {
            let node = &mid + &(&half * x);
            let fx = f(&node)?;
            if !fx.is_finite() {
                return Err(Error::NonFinite {
                    node: node.to_decimal(20),
                });
            }
            let v = fx * wt * &half;
            acc.add(&v);
        }
    }
    Ok((acc.value(), acc.magnitude()))
}

/// Composite Gauss–Legendre integral of `f` over `[a, b]`.
///
/// The value returned is the refined (`2 × panels`) estimate; `abs_err` is
/// its distance from the `panels` estimate plus the rounding budget.
pub fn quad_gl<F>(
    mut f: F,
    a: &ExtReal,
    b: &ExtReal,
    panels: usize,
    nodes: usize,
    grading: Grading,
) -> Result<SeriesValue>
where
    F: FnMut(&ExtReal) -> Result<ExtReal>,
{
    if !(a < b) {
        return Err(domain("quad_gl needs a < b"));
    }
    if panels == 0 || nodes == 0 {
        return Err(domain("quad_gl needs at least one panel and one node"));
    }
    if let Grading::SingularLeft { ratio } = grading {
        if !(ratio > 0.0 && ratio < 1.0) {
            return Err(domain("grading ratio must lie in (0, 1)"));
        }
    }
    let digits = a.digits().max(b.digits());
    let wd = digits + GUARD_DIGITS;
    let rule = gauss_legendre_rule(nodes, wd);
    let (aw, bw) = (a.with_digits(wd), b.with_digits(wd));
    let coarse = breakpoints(&aw, &bw, panels, grading);
    let fine = bisect(&coarse);
    let (q1, _) = integrate(&mut f, &coarse, &rule)?;
    let (q2, mag) = integrate(&mut f, &fine, &rule)?;
    let value = q2.with_digits(digits);
    let rounding = value.ulp() + ExtReal::from_f64(mag, digits) * value.epsilon() * 4;
    let err = (q1 - &q2).abs().with_digits(digits) + rounding;
    let evals = (nodes * panels * 3) as u64;
    Ok(SeriesValue::new(value, err, evals, "gauss_legendre"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_weights_sum_to_two() {
        for n in [1, 2, 5, 20, 33] {
            let rule = gauss_legendre_rule(n, 40);
            assert_eq!(rule.len(), n);
            let s: ExtReal = rule.iter().fold(ExtReal::zero(40), |acc, (_, w)| acc + w);
            assert!((s - 2).abs() < ExtReal::pow10_neg(38, 40));
        }
    }

    #[test]
    fn x_squared_is_exact() {
        let (a, b) = (ExtReal::zero(34), ExtReal::one(34));
        let r = quad_gl(|x| Ok(x.square()), &a, &b, 1, 32, Grading::Uniform).unwrap();
        let third = ExtReal::from_ratio(1, 3, 34);
        assert!((&r.value - &third).abs() <= third.ulp());
    }

    #[test]
    fn log_with_singular_grading() {
        let (a, b) = (ExtReal::zero(34), ExtReal::one(34));
        let g = Grading::SingularLeft { ratio: 0.15 };
        let r = quad_gl(|x| Ok(x.ln()), &a, &b, 24, 20, g).unwrap();
        assert!((&r.value + 1).abs() < ExtReal::pow10_neg(12, 34));
    }

    #[test]
    fn arctan_integral() {
        let (a, b) = (ExtReal::zero(34), ExtReal::one(34));
        let r = quad_gl(
            |x| Ok((x.square() + 1).recip()),
            &a,
            &b,
            2,
            20,
            Grading::Uniform,
        )
        .unwrap();
        let want = ExtReal::pi(34) / 4;
        assert!((&r.value - &want).abs() < ExtReal::pow10_neg(12, 34));
    }

    #[test]
    fn non_finite_is_reported() {
        let (a, b) = (ExtReal::from_i64(-1, 34), ExtReal::one(34));
        let err = quad_gl(|x| Ok(x.recip()), &a, &b, 1, 3, Grading::Uniform).unwrap_err();
        assert!(matches!(err, Error::NonFinite { .. }));
    }
}
