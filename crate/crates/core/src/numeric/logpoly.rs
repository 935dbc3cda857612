//! Finite sums of `c · log^m(t) / t^p` and their calculus.

use std::collections::BTreeMap;
use std::fmt;

use super::ext::ExtReal;
use super::sum::CompensatedSum;

/// One term `coeff · log^log_power(t) / t^inv_power`.
#[derive(Clone, Debug, PartialEq)]
pub struct LogTerm {
    pub coeff: ExtReal,
    pub log_power: u32,
    pub inv_power: u32,
}

/// A log-polynomial `Σ c · log^m(t) / t^(p + s)`.
///
/// `s` is an optional real exponent shared by all terms (absent means 0);
/// it lets Hurwitz-type summands `log^m(t) · t^(-s)` use the same calculus.
/// Terms are keyed by `(m, p)`, so like terms are merged on construction
/// and zero coefficients are dropped.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct LogPoly {
    terms: BTreeMap<(u32, u32), ExtReal>,
    offset: Option<ExtReal>,
}

impl LogPoly {
    pub fn zero() -> Self {
        LogPoly::default()
    }

    pub fn monomial(coeff: ExtReal, log_power: u32, inv_power: u32) -> Self {
        let mut f = LogPoly::zero();
        f.push(coeff, log_power, inv_power);
        f
    }

    /// `log^m(t) / t`, the summand shape of the Stieltjes series.
    pub fn log_over_t(m: u32, digits: u32) -> Self {
        LogPoly::monomial(ExtReal::one(digits), m, 1)
    }

    /// `log^m(t)` (no inverse power).
    pub fn log_power(m: u32, digits: u32) -> Self {
        LogPoly::monomial(ExtReal::one(digits), m, 0)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = LogTerm>) -> Self {
        let mut f = LogPoly::zero();
        for t in terms {
            f.push(t.coeff, t.log_power, t.inv_power);
        }
        f
    }

    /// Multiplies every term by `t^(-s)`.
    pub fn with_offset(mut self, s: ExtReal) -> Self {
        self.offset = if s.is_zero() { None } else { Some(s) };
        self
    }

    pub fn offset(&self) -> Option<&ExtReal> {
        self.offset.as_ref()
    }

    fn push(&mut self, coeff: ExtReal, m: u32, p: u32) {
        let key = (m, p);
        let merged = match self.terms.remove(&key) {
            Some(c) => c + coeff,
            None => coeff,
        };
        if !merged.is_zero() {
            self.terms.insert(key, merged);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = LogTerm> + '_ {
        self.terms.iter().map(|(&(m, p), c)| LogTerm {
            coeff: c.clone(),
            log_power: m,
            inv_power: p,
        })
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_inv_power(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, p)| p).min()
    }

    pub fn max_log_power(&self) -> u32 {
        self.terms.keys().map(|&(m, _)| m).max().unwrap_or(0)
    }

    /// Sum of two polynomials sharing the same offset.
    pub fn add(&self, other: &LogPoly) -> LogPoly {
        assert_eq!(self.offset, other.offset, "LogPoly offsets differ");
        let mut out = self.clone();
        for (&(m, p), c) in &other.terms {
            out.push(c.clone(), m, p);
        }
        out
    }

    pub fn scale(&self, c: &ExtReal) -> LogPoly {
        let mut out = LogPoly {
            terms: BTreeMap::new(),
            offset: self.offset.clone(),
        };
        for (&(m, p), a) in &self.terms {
            out.push(a * c, m, p);
        }
        out
    }

    /// Derivative in `t`, using
    /// `d/dt log^m t / t^q = m log^(m-1) t / t^(q+1) - q log^m t / t^(q+1)`.
    pub fn diff(&self) -> LogPoly {
        let mut out = LogPoly {
            terms: BTreeMap::new(),
            offset: self.offset.clone(),
        };
        for (&(m, p), c) in &self.terms {
            if m > 0 {
                out.push(c * i64::from(m), m - 1, p + 1);
            }
            let q = match &self.offset {
                Some(s) => s + i64::from(p),
                None => ExtReal::from_i64(i64::from(p), c.digits()),
            };
            if !q.is_zero() {
                out.push(-(c * &q), m, p + 1);
            }
        }
        out
    }

    pub fn eval(&self, t: &ExtReal) -> ExtReal {
        self.eval_with_ln(t, &t.ln())
    }

    /// Evaluation when `ln t` is already known. `log^0` is 1 everywhere,
    /// including at `t = 1`.
    pub fn eval_with_ln(&self, t: &ExtReal, ln_t: &ExtReal) -> ExtReal {
        let digits = t.digits();
        if self.terms.is_empty() {
            return ExtReal::zero(digits);
        }
        let scale = match &self.offset {
            Some(s) => (-(s * ln_t)).exp(),
            None => ExtReal::one(digits),
        };
        let max_m = self.max_log_power();
        let max_p = self.terms.keys().map(|&(_, p)| p).max().unwrap_or(0);
        let logs = powers(ln_t, max_m);
        let inv = powers(&t.recip(), max_p);
        let mut acc = CompensatedSum::new(digits);
        for (&(m, p), c) in &self.terms {
            acc.add(&(c * &logs[m as usize] * &inv[p as usize]));
        }
        acc.value() * scale
    }

    /// Value at `t` of the canonical antiderivative: each term integrates to
    /// `log^(m+1) t/(m+1)` when its total exponent is 1 and otherwise to
    /// `t^r Σ_j (-1)^(m-j) m!/j! log^j t / r^(m-j+1)` with `r = 1 - exponent`.
    pub fn antiderivative(&self, t: &ExtReal) -> ExtReal {
        let digits = t.digits();
        let ln_t = t.ln();
        let max_m = self.max_log_power() + 1;
        let logs = powers(&ln_t, max_m);
        let mut acc = CompensatedSum::new(digits);
        for (&(m, p), c) in &self.terms {
            let r = match &self.offset {
                Some(s) => -(s + i64::from(p)) + 1,
                None => ExtReal::from_i64(1 - i64::from(p), digits),
            };
            if r.is_zero() {
                acc.add(&(c * &logs[m as usize + 1] / i64::from(m + 1)));
                continue;
            }
            let t_r = match &self.offset {
                Some(_) => (&r * &ln_t).exp(),
                None => t.powi(1 - p as i32),
            };
            let mut inner = CompensatedSum::new(digits);
            // m!/j! built downwards from j = m.
            let mut ratio = ExtReal::one(digits);
            let rinv = r.recip();
            let mut rpow = rinv.clone();
            for j in (0..=m).rev() {
                let sign = if (m - j) % 2 == 0 { 1 } else { -1 };
                inner.add(&(&ratio * &logs[j as usize] * &rpow * sign));
                ratio *= i64::from(j.max(1));
                rpow *= &rinv;
            }
            acc.add(&(c * &t_r * inner.value()));
        }
        acc.value()
    }
}

fn powers(base: &ExtReal, max: u32) -> Vec<ExtReal> {
    let mut out = Vec::with_capacity(max as usize + 1);
    out.push(ExtReal::one(base.digits()));
    for i in 1..=max as usize {
        let next = &out[i - 1] * base;
        out.push(next);
    }
    out
}

/// Derivative of a log-polynomial; see [`LogPoly::diff`].
pub fn logpoly_diff(f: &LogPoly) -> LogPoly {
    f.diff()
}

impl fmt::Display for LogPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let off = self
            .offset
            .as_ref()
            .map(|s| format!("+{}", s.to_decimal(6)));
        for (i, (&(m, p), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(
                f,
                "{}*log^{m}(t)/t^({p}{})",
                c.to_decimal(8),
                off.as_deref().unwrap_or("")
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one() -> ExtReal {
        ExtReal::one(34)
    }

    #[test]
    fn derivative_of_constant_is_zero() {
        assert!(LogPoly::monomial(one(), 0, 0).diff().is_empty());
    }

    #[test]
    fn derivative_of_log_over_t() {
        let d = LogPoly::monomial(one(), 1, 1).diff();
        let want = LogPoly::from_terms([
            LogTerm {
                coeff: one(),
                log_power: 0,
                inv_power: 2,
            },
            LogTerm {
                coeff: -one(),
                log_power: 1,
                inv_power: 2,
            },
        ]);
        assert_eq!(d, want);
    }

    #[test]
    fn second_derivative_matches_finite_difference() {
        let f = LogPoly::monomial(one(), 2, 1);
        let d2 = f.diff().diff();
        let t = ExtReal::from_i64(10, 34);
        let h = ExtReal::pow10_neg(8, 34);
        let fd = (f.eval(&(&t + &h)) - f.eval(&t) * 2 + f.eval(&(&t - &h))) / (&h * &h);
        assert!((d2.eval(&t) - fd).abs() < ExtReal::pow10_neg(15, 34));
        // A 1e-20 match needs a fourth-order stencil.
        let h = ExtReal::pow10_neg(5, 34);
        let at = |k: i64| f.eval(&(&t + &(&h * k)));
        let fd4 = (-at(2) + at(1) * 16 - at(0) * 30 + at(-1) * 16 - at(-2)) / (&h * &h * 12);
        assert!((d2.eval(&t) - fd4).abs() < ExtReal::pow10_neg(20, 34));
    }

    #[test]
    fn log_power_zero_convention() {
        let f = LogPoly::monomial(one(), 0, 1);
        assert_eq!(f.eval(&one()), one());
        let g = LogPoly::monomial(one(), 3, 1);
        assert!(g.eval(&one()).is_zero());
    }

    #[test]
    fn antiderivatives_differentiate_back() {
        let f = LogPoly::from_terms([
            LogTerm {
                coeff: one(),
                log_power: 2,
                inv_power: 0,
            },
            LogTerm {
                coeff: ExtReal::from_i64(3, 34),
                log_power: 1,
                inv_power: 1,
            },
            LogTerm {
                coeff: -one(),
                log_power: 3,
                inv_power: 2,
            },
        ]);
        let t = ExtReal::from_ratio(37, 10, 34);
        let h = ExtReal::pow10_neg(6, 34);
        let a = |x: &ExtReal| f.antiderivative(x);
        let d = (a(&(&t + &h)) * 8 - a(&(&t - &h)) * 8 - a(&(&t + &(&h * 2)))
            + a(&(&t - &(&h * 2))))
            / (&h * 12);
        assert!((d - f.eval(&t)).abs() < ExtReal::pow10_neg(20, 34));
    }

    #[test]
    fn offset_antiderivative() {
        let s = ExtReal::from_ratio(5, 2, 34);
        let f = LogPoly::monomial(one(), 1, 0).with_offset(s);
        let t = ExtReal::from_i64(3, 34);
        let h = ExtReal::pow10_neg(6, 34);
        let a = |x: &ExtReal| f.antiderivative(x);
        let d = (a(&(&t + &h)) * 8 - a(&(&t - &h)) * 8 - a(&(&t + &(&h * 2)))
            + a(&(&t - &(&h * 2))))
            / (&h * 12);
        assert!((d - f.eval(&t)).abs() < ExtReal::pow10_neg(20, 34));
    }
}
