//! Extended-precision real scalar.
//!
//! `ExtReal` wraps an MPFR float whose precision is chosen in decimal
//! digits. Every elementary operation is correctly rounded at the precision
//! of its widest operand, so results are bit-reproducible for fixed inputs.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Float, Rational};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Default working precision in significant decimal digits.
pub const DEFAULT_DIGITS: u32 = 34;

/// Largest precision accepted anywhere in the crate.
pub const MAX_DIGITS: u32 = 2000;

const LOG2_10: f64 = std::f64::consts::LOG2_10;

/// Binary precision needed to carry `digits` significant decimal digits.
pub fn digits_to_bits(digits: u32) -> u32 {
    (f64::from(digits.max(1)) * LOG2_10).ceil() as u32
}

/// Decimal digits carried by a binary precision.
pub fn bits_to_digits(bits: u32) -> u32 {
    (f64::from(bits) / LOG2_10).floor() as u32
}

/// Number of decimal digits a tolerance asks for (`1e-12` asks for 12).
pub fn tol_digits(tol: f64) -> u32 {
    if !(tol > 0.0) || !tol.is_finite() {
        return 0;
    }
    (-tol.log10()).ceil().max(1.0) as u32
}

/// Working precision for a computation with target tolerance `tol`:
/// at least `base` digits and at least twice the digits of `tol`.
pub fn working_digits(base: u32, tol: f64) -> u32 {
    base.max(2 * tol_digits(tol)).min(MAX_DIGITS)
}

/// Real number at a configurable precision.
#[derive(Clone, Debug, PartialEq, PartialOrd)]
pub struct ExtReal(Float);

impl ExtReal {
    pub fn from_float(f: Float) -> Self {
        ExtReal(f)
    }

    pub fn as_float(&self) -> &Float {
        &self.0
    }

    pub fn into_float(self) -> Float {
        self.0
    }

    pub fn zero(digits: u32) -> Self {
        ExtReal(Float::new(digits_to_bits(digits)))
    }

    pub fn one(digits: u32) -> Self {
        Self::from_i64(1, digits)
    }

    pub fn from_i64(v: i64, digits: u32) -> Self {
        ExtReal(Float::with_val(digits_to_bits(digits), v))
    }

    pub fn from_u64(v: u64, digits: u32) -> Self {
        ExtReal(Float::with_val(digits_to_bits(digits), v))
    }

    /// Exact binary value of `v`; note that `0.1_f64` is not one tenth.
    pub fn from_f64(v: f64, digits: u32) -> Self {
        ExtReal(Float::with_val(digits_to_bits(digits), v))
    }

    /// Correctly rounded `p / q`.
    pub fn from_ratio(p: i64, q: i64, digits: u32) -> Self {
        assert!(q != 0, "zero denominator");
        Self::from_rational(&Rational::from((p, q)), digits)
    }

    pub fn from_rational(r: &Rational, digits: u32) -> Self {
        ExtReal(Float::with_val(digits_to_bits(digits), r))
    }

    /// Parses a decimal literal, a fraction `p/q`, or one of `pi`, `e`.
    pub fn parse(s: &str, digits: u32) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::Parse(s.to_string());
        match t {
            "pi" | "π" => return Ok(Self::pi(digits)),
            "e" => return Ok(Self::one(digits).exp()),
            _ => {}
        }
        if let Some((p, q)) = t.split_once('/') {
            let p: Rational = p.trim().parse().map_err(|_| bad())?;
            let q: Rational = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            return Ok(Self::from_rational(&(p / q), digits));
        }
        let parsed = Float::parse(t).map_err(|_| bad())?;
        let f = Float::with_val(digits_to_bits(digits), parsed);
        if f.is_finite() {
            Ok(ExtReal(f))
        } else {
            Err(bad())
        }
    }

    pub fn pi(digits: u32) -> Self {
        ExtReal(Float::with_val(digits_to_bits(digits), Constant::Pi))
    }

    pub fn ln2(digits: u32) -> Self {
        ExtReal(Float::with_val(digits_to_bits(digits), Constant::Log2))
    }

    pub fn infinity(digits: u32) -> Self {
        ExtReal(Float::with_val(
            digits_to_bits(digits),
            rug::float::Special::Infinity,
        ))
    }

    /// `10^-d` at the given precision.
    pub fn pow10_neg(d: u32, digits: u32) -> Self {
        Self::from_i64(10, digits).powi(-(d as i32))
    }

    pub fn bits(&self) -> u32 {
        self.0.prec()
    }

    pub fn digits(&self) -> u32 {
        bits_to_digits(self.0.prec())
    }

    /// Rounds (or widens) to `digits` significant digits.
    pub fn with_digits(&self, digits: u32) -> Self {
        ExtReal(Float::with_val(digits_to_bits(digits), &self.0))
    }

    /// Widens to at least `digits`; never narrows.
    pub fn at_least(&self, digits: u32) -> Self {
        if self.digits() >= digits {
            self.clone()
        } else {
            self.with_digits(digits)
        }
    }

    fn unary(&self, f: impl FnOnce(&Float) -> Float) -> Self {
        ExtReal(f(&self.0))
    }

    pub fn ln(&self) -> Self {
        let p = self.0.prec();
        self.unary(|x| Float::with_val(p, x.ln_ref()))
    }

    /// `ln(1 + self)`, accurate for small arguments.
    pub fn ln_1p(&self) -> Self {
        let p = self.0.prec();
        self.unary(|x| Float::with_val(p, x.ln_1p_ref()))
    }

    pub fn exp(&self) -> Self {
        let p = self.0.prec();
        self.unary(|x| Float::with_val(p, x.exp_ref()))
    }

    pub fn sqrt(&self) -> Self {
        let p = self.0.prec();
        self.unary(|x| Float::with_val(p, x.sqrt_ref()))
    }

    pub fn abs(&self) -> Self {
        let p = self.0.prec();
        self.unary(|x| Float::with_val(p, x.abs_ref()))
    }

    pub fn recip(&self) -> Self {
        let p = self.0.prec();
        self.unary(|x| Float::with_val(p, x.recip_ref()))
    }

    pub fn sin(&self) -> Self {
        let p = self.0.prec();
        self.unary(|x| Float::with_val(p, x.sin_ref()))
    }

    pub fn cos(&self) -> Self {
        let p = self.0.prec();
        self.unary(|x| Float::with_val(p, x.cos_ref()))
    }

    pub fn cot(&self) -> Self {
        let p = self.0.prec();
        self.unary(|x| Float::with_val(p, x.cot_ref()))
    }

    pub fn square(&self) -> Self {
        let p = self.0.prec();
        self.unary(|x| Float::with_val(p, x.square_ref()))
    }

    pub fn powi(&self, n: i32) -> Self {
        let p = self.0.prec();
        self.unary(|x| Float::with_val(p, x.pow(n)))
    }

    pub fn pow(&self, e: &ExtReal) -> Self {
        let p = self.0.prec().max(e.0.prec());
        ExtReal(Float::with_val(p, (&self.0).pow(&e.0)))
    }

    pub fn is_finite(&self) -> bool {
        self.0.is_finite()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_nan(&self) -> bool {
        self.0.is_nan()
    }

    /// Strictly negative (zero and NaN are not).
    pub fn is_negative(&self) -> bool {
        self.0 < 0
    }

    pub fn is_positive(&self) -> bool {
        self.0 > 0
    }

    /// Is this an integer value?
    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    /// Nearest `i64`, if finite and in range.
    pub fn to_i64(&self) -> Option<i64> {
        self.0.to_integer().and_then(|i| i.to_i64())
    }

    pub fn max(&self, other: &ExtReal) -> ExtReal {
        if self.0 >= other.0 {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub fn min(&self, other: &ExtReal) -> ExtReal {
        if self.0 <= other.0 {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Relative unit roundoff at this precision, `2^(1 - bits)`.
    pub fn epsilon(&self) -> ExtReal {
        let p = self.0.prec();
        ExtReal(Float::with_val(p, 1) >> (p - 1))
    }

    /// Unit in the last place of this value (of one for zero).
    pub fn ulp(&self) -> ExtReal {
        let p = self.0.prec();
        let exp = self.0.get_exp().unwrap_or(1);
        let one = Float::with_val(p, 1);
        let shift = exp - p as i32;
        if shift >= 0 {
            ExtReal(one << shift as u32)
        } else {
            ExtReal(one >> (-shift) as u32)
        }
    }

    /// Decimal rendering with at most `digits` significant digits.
    /// Trailing zeros are dropped; very large or small magnitudes use
    /// scientific notation.
    pub fn to_decimal(&self, digits: usize) -> String {
        if self.0.is_nan() {
            return "nan".into();
        }
        if self.0.is_infinite() {
            return if self.0 < 0 {
                "-inf".into()
            } else {
                "inf".into()
            };
        }
        if self.0.is_zero() {
            return "0".into();
        }
        let (neg, mant, exp) = self.0.to_sign_string_exp(10, Some(digits.max(1)));
        let mant = mant.trim_end_matches('0');
        let mant = if mant.is_empty() { "0" } else { mant };
        let exp = exp.unwrap_or(0);
        let len = mant.len() as i32;
        let body = if (-8..=0).contains(&exp) {
            format!("0.{}{}", "0".repeat((-exp) as usize), mant)
        } else if exp > 0 && exp < len {
            format!("{}.{}", &mant[..exp as usize], &mant[exp as usize..])
        } else if exp >= len && exp <= 30 {
            format!("{}{}", mant, "0".repeat((exp - len) as usize))
        } else if len == 1 {
            format!("{}e{}", mant, exp - 1)
        } else {
            format!("{}.{}e{}", &mant[..1], &mant[1..], exp - 1)
        };
        if neg {
            format!("-{body}")
        } else {
            body
        }
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(self.digits() as usize);
        f.write_str(&self.to_decimal(digits))
    }
}

impl Serialize for ExtReal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl PartialEq<i64> for ExtReal {
    fn eq(&self, other: &i64) -> bool {
        self.0 == *other
    }
}

impl PartialOrd<i64> for ExtReal {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0.partial_cmp(other)
    }
}

impl Neg for ExtReal {
    type Output = ExtReal;
    fn neg(self) -> ExtReal {
        ExtReal(-self.0)
    }
}

impl Neg for &ExtReal {
    type Output = ExtReal;
    fn neg(self) -> ExtReal {
        ExtReal(Float::with_val(self.0.prec(), -&self.0))
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $atr:ident, $am:ident, $op:tt) => {
        impl $tr<&ExtReal> for &ExtReal {
            type Output = ExtReal;
            fn $m(self, rhs: &ExtReal) -> ExtReal {
                let p = self.0.prec().max(rhs.0.prec());
                ExtReal(Float::with_val(p, &self.0 $op &rhs.0))
            }
        }
        impl $tr<ExtReal> for ExtReal {
            type Output = ExtReal;
            fn $m(self, rhs: ExtReal) -> ExtReal {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&ExtReal> for ExtReal {
            type Output = ExtReal;
            fn $m(self, rhs: &ExtReal) -> ExtReal {
                (&self).$m(rhs)
            }
        }
        impl $tr<ExtReal> for &ExtReal {
            type Output = ExtReal;
            fn $m(self, rhs: ExtReal) -> ExtReal {
                self.$m(&rhs)
            }
        }
        impl $tr<i64> for &ExtReal {
            type Output = ExtReal;
            fn $m(self, rhs: i64) -> ExtReal {
                ExtReal(Float::with_val(self.0.prec(), &self.0 $op rhs))
            }
        }
        impl $tr<i64> for ExtReal {
            type Output = ExtReal;
            fn $m(self, rhs: i64) -> ExtReal {
                (&self).$m(rhs)
            }
        }
        impl $tr<&ExtReal> for i64 {
            type Output = ExtReal;
            fn $m(self, rhs: &ExtReal) -> ExtReal {
                ExtReal(Float::with_val(rhs.0.prec(), self $op &rhs.0))
            }
        }
        impl $tr<ExtReal> for i64 {
            type Output = ExtReal;
            fn $m(self, rhs: ExtReal) -> ExtReal {
                self.$m(&rhs)
            }
        }
        impl $atr<&ExtReal> for ExtReal {
            fn $am(&mut self, rhs: &ExtReal) {
                *self = (&*self).$m(rhs);
            }
        }
        impl $atr<ExtReal> for ExtReal {
            fn $am(&mut self, rhs: ExtReal) {
                *self = (&*self).$m(&rhs);
            }
        }
        impl $atr<i64> for ExtReal {
            fn $am(&mut self, rhs: i64) {
                *self = (&*self).$m(rhs);
            }
        }
    };
}

binop!(Add, add, AddAssign, add_assign, +);
binop!(Sub, sub, SubAssign, sub_assign, -);
binop!(Mul, mul, MulAssign, mul_assign, *);
binop!(Div, div, DivAssign, div_assign, /);
