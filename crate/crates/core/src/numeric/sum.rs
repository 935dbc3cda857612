//! Deterministic compensated summation.

use super::ext::{ExtReal, DEFAULT_DIGITS};
use crate::error::{domain, Result};

/// Running Neumaier (improved Kahan–Babuška) sum.
///
/// Terms are folded in the order they arrive, so identical input sequences
/// give bit-identical sums. Besides the value, the accumulator tracks the
/// sum of absolute values of everything added, which callers use to bound
/// the rounding error of the whole summation.
#[derive(Clone, Debug)]
pub struct CompensatedSum {
    sum: ExtReal,
    comp: ExtReal,
    magnitude: f64,
    count: u64,
}

impl CompensatedSum {
    pub fn new(digits: u32) -> Self {
        CompensatedSum {
            sum: ExtReal::zero(digits),
            comp: ExtReal::zero(digits),
            magnitude: 0.0,
            count: 0,
        }
    }

    pub fn add(&mut self, x: &ExtReal) {
        self.add_with_scale(x, x.to_f64().abs());
    }

    /// Adds `x`, recording `scale` (rather than `|x|`) as its contribution
    /// to the rounding budget. Use this when `x` was itself formed by
    /// cancellation between larger quantities.
    pub fn add_with_scale(&mut self, x: &ExtReal, scale: f64) {
        let t = &self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (&self.sum - &t) + x;
        } else {
            self.comp += (x - &t) + &self.sum;
        }
        self.sum = t;
        self.magnitude += scale;
        self.count += 1;
    }

    pub fn value(&self) -> ExtReal {
        &self.sum + &self.comp
    }

    /// Sum of the magnitudes fed in so far.
    pub fn magnitude(&self) -> f64 {
        self.magnitude
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    /// Conservative bound on the accumulated rounding error: a few units
    /// of roundoff per unit of magnitude added.
    pub fn rounding_bound(&self) -> ExtReal {
        let eps = self.sum.epsilon();
        let mag = ExtReal::from_f64(self.magnitude, self.sum.digits());
        eps * mag * 4
    }
}

/// Compensated sum of `terms` in the given order. The empty sum is zero.
pub fn comp_sum(terms: &[ExtReal]) -> ExtReal {
    let digits = terms
        .iter()
        .map(ExtReal::digits)
        .max()
        .unwrap_or(DEFAULT_DIGITS);
    let mut acc = CompensatedSum::new(digits);
    for t in terms {
        acc.add(t);
    }
    acc.value()
}

/// Harmonic number `H_n = 1 + 1/2 + ... + 1/n`.
pub fn harmonic(n: u64, digits: u32) -> Result<ExtReal> {
    if n == 0 {
        return Err(domain("harmonic(n) requires n >= 1"));
    }
    let mut acc = CompensatedSum::new(digits);
    let one = ExtReal::one(digits);
    for k in 1..=n {
        acc.add(&(&one / k as i64));
    }
    Ok(acc.value())
}
