//! Exact Bernoulli numbers.

use std::sync::OnceLock;

use rug::{Integer, Rational};

use super::ext::ExtReal;
use crate::error::{domain, Result};

/// Largest even index kept in the cache.
pub const MAX_INDEX: u32 = 60;

/// An even-index Bernoulli number `B_index` as an exact fraction.
#[derive(Clone, Debug, PartialEq)]
pub struct Bernoulli {
    pub index: u32,
    pub value: Rational,
}

impl Bernoulli {
    pub fn numerator(&self) -> &Integer {
        self.value.numer()
    }

    pub fn denominator(&self) -> &Integer {
        self.value.denom()
    }
}

/// `B_0 ..= B_MAX_INDEX` by the Akiyama–Tanigawa recurrence, built once.
fn table() -> &'static [Rational] {
    static TABLE: OnceLock<Vec<Rational>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let n = MAX_INDEX as usize;
        let mut a: Vec<Rational> = Vec::with_capacity(n + 1);
        let mut out = Vec::with_capacity(n + 1);
        for m in 0..=n {
            a.push(Rational::from((1, m as u32 + 1)));
            for j in (1..=m).rev() {
                let diff = Rational::from(&a[j - 1] - &a[j]);
                a[j - 1] = diff * j as u32;
            }
            out.push(a[0].clone());
        }
        // The recurrence yields B_1 = +1/2; only even indices are used.
        out
    })
}

/// `B_index` for even `2 <= index <= MAX_INDEX`.
pub fn bernoulli(index: u32) -> Result<Bernoulli> {
    if index == 0 || index % 2 == 1 || index > MAX_INDEX {
        return Err(domain(format!(
            "Bernoulli index must be even and in 2..={MAX_INDEX}, got {index}"
        )));
    }
    Ok(Bernoulli {
        index,
        value: table()[index as usize].clone(),
    })
}

/// Euler–Maclaurin weight `B_{2j} / (2j)!` as an exact fraction.
pub fn em_weight(j: u32) -> Rational {
    let b = &table()[2 * j as usize];
    let mut fact = Integer::from(1);
    for i in 2..=2 * j {
        fact *= i;
    }
    Rational::from(b / fact)
}

/// `B_{2j} / (2j)!` rounded to `digits`.
pub fn em_weight_ext(j: u32, digits: u32) -> ExtReal {
    ExtReal::from_rational(&em_weight(j), digits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn known_values() {
        assert_eq!(bernoulli(2).unwrap().value, q(1, 6));
        assert_eq!(bernoulli(4).unwrap().value, q(-1, 30));
        assert_eq!(bernoulli(6).unwrap().value, q(1, 42));
        assert_eq!(bernoulli(8).unwrap().value, q(-1, 30));
        assert_eq!(bernoulli(10).unwrap().value, q(5, 66));
        assert_eq!(bernoulli(12).unwrap().value, q(-691, 2730));
        let b20 = bernoulli(20).unwrap();
        assert_eq!(*b20.numerator(), -174611);
        assert_eq!(*b20.denominator(), 330);
    }

    #[test]
    fn rejects_bad_indices() {
        assert!(bernoulli(0).is_err());
        assert!(bernoulli(3).is_err());
        assert!(bernoulli(MAX_INDEX + 2).is_err());
    }

    #[test]
    fn weights() {
        assert_eq!(em_weight(1), q(1, 12));
        assert_eq!(em_weight(2), q(-1, 720));
        assert_eq!(em_weight(3), q(1, 30240));
    }
}
