//! Truncated power series in one variable.

use std::ops::{Add, Mul};

use crate::error::{domain, Result};
use crate::numeric::ExtReal;

/// `Σ_{j≤M} c_j w^j`, all products truncated at order `M`.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<ExtReal>,
}

impl PowerSeries {
    /// Series from `c_0..c_M`; the order is `coeffs.len() − 1`.
    pub fn new(coeffs: Vec<ExtReal>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(domain("a power series needs at least one coefficient"));
        }
        Ok(PowerSeries { coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, j: usize) -> Option<&ExtReal> {
        self.coeffs.get(j)
    }

    pub fn coeffs(&self) -> &[ExtReal] {
        &self.coeffs
    }

    fn digits(&self) -> u32 {
        self.coeffs.iter().map(ExtReal::digits).max().unwrap_or(34)
    }

    /// Formal derivative; the order drops by one (a constant stays a
    /// constant zero).
    pub fn derivative(&self) -> PowerSeries {
        if self.coeffs.len() == 1 {
            return PowerSeries {
                coeffs: vec![ExtReal::zero(self.digits())],
            };
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| c * j as i64)
            .collect();
        PowerSeries { coeffs }
    }

    /// Formal `log` of a series with `c_0 = 1`, from `(log P)' = P'/P`:
    /// `q_k = c_k − (1/k) Σ_{j=1..k−1} j q_j c_{k−j}`.
    pub fn log(&self) -> Result<PowerSeries> {
        if self.coeffs[0] != 1 {
            return Err(domain("formal log needs constant term 1"));
        }
        let d = self.digits();
        let m = self.order();
        let mut q = vec![ExtReal::zero(d); m + 1];
        for k in 1..=m {
            let mut acc = &self.coeffs[k] * k as i64;
            for (j, qj) in q.iter().enumerate().take(k).skip(1) {
                acc -= qj * &self.coeffs[k - j] * j as i64;
            }
            q[k] = acc / k as i64;
        }
        Ok(PowerSeries { coeffs: q })
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;

    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let m = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..=m).map(|j| &self.coeffs[j] + &rhs.coeffs[j]).collect(),
        }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;

    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let m = self.order().min(rhs.order());
        let d = self.digits().max(rhs.digits());
        let coeffs = (0..=m)
            .map(|k| {
                (0..=k).fold(ExtReal::zero(d), |acc, j| {
                    acc + &self.coeffs[j] * &rhs.coeffs[k - j]
                })
            })
            .collect();
        PowerSeries { coeffs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(v: &[i64]) -> PowerSeries {
        PowerSeries::new(v.iter().map(|&c| ExtReal::from_i64(c, 34)).collect()).unwrap()
    }

    #[test]
    fn ring_operations() {
        let a = ps(&[1, 1]);
        let sq = &a * &a;
        assert_eq!(sq.coeffs(), ps(&[1, 2]).coeffs());
        let a = ps(&[1, 1, 0]);
        assert_eq!((&a * &a).coeffs(), ps(&[1, 2, 1]).coeffs());
        assert_eq!((&a + &a).coeffs(), ps(&[2, 2, 0]).coeffs());
        assert_eq!(ps(&[5, 3, 2]).derivative().coeffs(), ps(&[3, 4]).coeffs());
    }

    #[test]
    fn log_of_one_plus_w() {
        let l = ps(&[1, 1, 0, 0, 0, 0]).log().unwrap();
        for k in 1..=5i64 {
            let want = ExtReal::from_ratio(if k % 2 == 1 { 1 } else { -1 }, k, 34);
            assert!((l.coeff(k as usize).unwrap() - &want).abs().to_f64() < 1e-32);
        }
        assert!(ps(&[2, 1]).log().is_err());
    }

    #[test]
    fn log_of_square_doubles() {
        let a = ps(&[1, 3, -2, 7, 1]);
        let la = a.log().unwrap();
        let l2 = (&a * &a).log().unwrap();
        for k in 0..=4 {
            let d = l2.coeff(k).unwrap() - &(la.coeff(k).unwrap() * 2);
            assert!(d.abs().to_f64() < 1e-28);
        }
    }
}
