//! Euler–Maclaurin tail corrections for log-polynomial summands.
//!
//! For a smooth `f` decaying at infinity,
//!
//! ```text
//! Σ_{k≥0} f(a+k) = ∫_a^∞ f + f(a)/2 − Σ_{j=1..J} B_{2j}/(2j)! f^(2j−1)(a) + R_J
//! ```
//!
//! and `|R_J|` is estimated by the first omitted correction. Series whose
//! summands are linear combinations of shifted log-polynomials use the same
//! expansion termwise, with the integrals replaced by antiderivatives; see
//! [`TailSum`].

use super::bernoulli::em_weight_ext;
use super::ext::ExtReal;
use super::logpoly::LogPoly;
use super::series::SeriesValue;
use super::sum::CompensatedSum;
use crate::error::{domain, Error, Result};

/// Largest correction order accepted.
pub const MAX_ORDER: u32 = 8;

/// Default correction order (through `B_8`).
pub const DEFAULT_ORDER: u32 = 4;

/// Largest partial-sum length the adaptive drivers will try.
pub const MAX_TERMS: u64 = 1 << 22;

/// Precomputed odd derivatives of `f` and Bernoulli weights for the local
/// correction `f(a)/2 − Σ_j B_{2j}/(2j)! f^(2j−1)(a)`.
#[derive(Clone, Debug)]
pub struct EmKernel {
    f: LogPoly,
    odd: Vec<LogPoly>,
    weights: Vec<ExtReal>,
}

impl EmKernel {
    pub fn new(f: LogPoly, order: u32, digits: u32) -> Self {
        let mut odd = Vec::with_capacity(order as usize + 1);
        let mut d = f.diff();
        for j in 0..=order {
            odd.push(d.clone());
            if j < order {
                d = d.diff().diff();
            }
        }
        let weights = (1..=order + 1).map(|j| em_weight_ext(j, digits)).collect();
        EmKernel { f, odd, weights }
    }

    pub fn function(&self) -> &LogPoly {
        &self.f
    }

    pub fn order(&self) -> u32 {
        self.weights.len() as u32 - 1
    }

    /// The local correction at `a` and the magnitude of the first omitted
    /// term.
    pub fn local(&self, a: &ExtReal) -> (ExtReal, ExtReal) {
        let ln_a = a.ln();
        let j_max = self.order() as usize;
        let mut acc = CompensatedSum::new(a.digits());
        acc.add(&(self.f.eval_with_ln(a, &ln_a) / 2));
        for j in 0..j_max {
            acc.add(&-(&self.weights[j] * self.odd[j].eval_with_ln(a, &ln_a)));
        }
        let err = (&self.weights[j_max] * self.odd[j_max].eval_with_ln(a, &ln_a)).abs();
        (acc.value(), err)
    }

    /// Same as [`local`](Self::local) without the `f(a)/2` endpoint term.
    pub fn corrections(&self, a: &ExtReal) -> (ExtReal, ExtReal) {
        let (v, e) = self.local(a);
        (v - self.f.eval(a) / 2, e)
    }
}

/// `Σ_{k≥N} f(k) − ∫_N^∞ f(t) dt` by Euler–Maclaurin with `J` corrections.
pub fn em_tail(f: &LogPoly, n: u64, order: u32) -> Result<SeriesValue> {
    if n < 2 {
        return Err(domain(format!("em_tail needs N >= 2, got {n}")));
    }
    if order > MAX_ORDER {
        return Err(domain(format!(
            "em_tail order J = {order} exceeds {MAX_ORDER}"
        )));
    }
    check_decays(f)?;
    let digits = f.terms().map(|t| t.coeff.digits()).max().unwrap_or(34);
    let a = ExtReal::from_u64(n, digits);
    em_tail_at(f, &a, order)
}

/// Real-start variant: `Σ_{k≥0} f(a+k) − ∫_a^∞ f`.
pub fn em_tail_at(f: &LogPoly, a: &ExtReal, order: u32) -> Result<SeriesValue> {
    check_decays(f)?;
    if f.is_empty() {
        return Ok(SeriesValue::new(
            ExtReal::zero(a.digits()),
            ExtReal::zero(a.digits()),
            1,
            "euler_maclaurin",
        ));
    }
    let kernel = EmKernel::new(f.clone(), order, a.digits());
    let (v, e) = kernel.local(a);
    Ok(SeriesValue::new(
        v,
        e,
        u64::from(order) + 1,
        "euler_maclaurin",
    ))
}

fn check_decays(f: &LogPoly) -> Result<()> {
    let decays = match f.offset() {
        None => f.min_inv_power().is_none_or(|p| p >= 1),
        Some(s) => f
            .min_inv_power()
            .is_none_or(|p| (s + i64::from(p)).is_positive()),
    };
    if decays {
        Ok(())
    } else {
        Err(domain(
            "em_tail: a term with inv_power 0 makes the tail divergent",
        ))
    }
}

/// Tail `Σ_{k≥N} Σ_h c_h g_h(k + s_h)` of a series whose summand is a
/// linear combination of shifted log-polynomials.
///
/// Each piece contributes `−c_h A_h(N+s_h) + c_h EM(g_h, N+s_h)` where `A_h`
/// is the canonical antiderivative. This is exact as an asymptotic
/// expansion whenever `Σ_h c_h A_h(M + s_h) → 0` as `M → ∞`, which holds
/// for every telescoped summand in this crate (the callers document it).
#[derive(Clone, Debug)]
pub struct TailSum {
    order: u32,
    digits: u32,
    kernels: Vec<EmKernel>,
    parts: Vec<Part>,
}

#[derive(Clone, Debug)]
struct Part {
    coeff: ExtReal,
    kernel: usize,
    shift: ExtReal,
    /// Subtract the antiderivative (a plain summand) or `g/2` (a
    /// trapezoid-rule defect, see [`TailSum::trapezoid_part`]).
    integral: bool,
}

impl TailSum {
    pub fn new(order: u32, digits: u32) -> Self {
        TailSum {
            order: order.min(MAX_ORDER),
            digits,
            kernels: Vec::new(),
            parts: Vec::new(),
        }
    }

    /// Adds `coeff · g(k + shift)` to the summand.
    pub fn part(self, coeff: ExtReal, g: &LogPoly, shift: ExtReal) -> Self {
        self.push(coeff, g, shift, true)
    }

    /// Adds `coeff · ([g(a) + g(a+1)]/2 − ∫_a^{a+1} g)` with `a = k + shift`
    /// to the summand. Its tail is the Euler–Maclaurin correction alone.
    pub fn trapezoid_part(self, coeff: ExtReal, g: &LogPoly, shift: ExtReal) -> Self {
        self.push(coeff, g, shift, false)
    }

    fn push(mut self, coeff: ExtReal, g: &LogPoly, shift: ExtReal, integral: bool) -> Self {
        let kernel = match self.kernels.iter().position(|k| k.function() == g) {
            Some(i) => i,
            None => {
                self.kernels
                    .push(EmKernel::new(g.clone(), self.order, self.digits));
                self.kernels.len() - 1
            }
        };
        self.parts.push(Part {
            coeff,
            kernel,
            shift,
            integral,
        });
        self
    }

    /// Tail value from index `n` on, with its error estimate.
    pub fn eval(&self, n: u64) -> (ExtReal, ExtReal) {
        let big_n = ExtReal::from_u64(n, self.digits);
        let mut acc = CompensatedSum::new(self.digits);
        let mut err = ExtReal::zero(self.digits);
        for p in &self.parts {
            let a = &big_n + &p.shift;
            let k = &self.kernels[p.kernel];
            let (local, e) = k.local(&a);
            let sub = if p.integral {
                k.function().antiderivative(&a)
            } else {
                k.function().eval(&a) / 2
            };
            let scale = (p.coeff.abs() * (local.abs() + sub.abs())).to_f64();
            acc.add_with_scale(&(&p.coeff * (local - sub)), scale);
            err += p.coeff.abs() * e;
        }
        (acc.value(), err + acc.rounding_bound())
    }
}

/// Adaptive partial sum plus Euler–Maclaurin tail.
///
/// `term(k)` returns the `k`-th summand and a magnitude scale for the
/// rounding budget. The partial-sum length starts at 8 beyond `first` and
/// grows ×4 until the claimed tail error is below `tol/4`.
pub(crate) fn tailed_sum(
    method: &'static str,
    first: u64,
    tol: f64,
    tail: &TailSum,
    prefix: &ExtReal,
    mut term: impl FnMut(u64) -> (ExtReal, f64),
) -> Result<SeriesValue> {
    let digits = tail.digits;
    let target = ExtReal::from_f64(tol / 4.0, digits);
    let mut n = first + 8;
    let (tail_value, tail_err) = loop {
        let (v, e) = tail.eval(n);
        if e <= target {
            break (v, e);
        }
        if n >= MAX_TERMS {
            return Err(Error::NotConverged {
                what: method,
                detail: format!("tail error {} above tol/4 at N = {n}", e.to_decimal(3)),
            });
        }
        n *= 4;
    };
    let mut acc = CompensatedSum::new(digits);
    acc.add(prefix);
    for k in first..n {
        let (v, scale) = term(k);
        acc.add_with_scale(&v, scale);
    }
    acc.add_with_scale(&tail_value, 0.0);
    let err = tail_err + acc.rounding_bound();
    Ok(SeriesValue::new(acc.value(), err, n - first, method))
}
