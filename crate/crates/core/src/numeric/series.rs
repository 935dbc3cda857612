//! The value-with-error record returned by every series evaluation.

use serde::Serialize;

use super::ext::ExtReal;

/// A computed quantity with a claimed absolute error bound.
///
/// `abs_err` may be `+inf` for routes that have no effective bound (the
/// raw limit formula, the conditionally convergent von Mangoldt series).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SeriesValue {
    pub value: ExtReal,
    pub abs_err: ExtReal,
    pub terms_used: u64,
    pub method: String,
}

impl SeriesValue {
    pub fn new(
        value: ExtReal,
        abs_err: ExtReal,
        terms_used: u64,
        method: impl Into<String>,
    ) -> Self {
        SeriesValue {
            value,
            abs_err: abs_err.abs(),
            terms_used: terms_used.max(1),
            method: method.into(),
        }
    }

    /// A value that carries only its own rounding error.
    pub fn exact(value: ExtReal, method: impl Into<String>) -> Self {
        let err = value.ulp();
        SeriesValue::new(value, err, 1, method)
    }

    /// Does `other` lie within the summed error bars of `self`?
    pub fn agrees_with(&self, other: &SeriesValue) -> bool {
        self.gap(other) <= &self.abs_err + &other.abs_err
    }

    pub fn gap(&self, other: &SeriesValue) -> ExtReal {
        (&self.value - &other.value).abs()
    }

    pub fn has_bound(&self) -> bool {
        self.abs_err.is_finite()
    }

    pub fn plus(&self, other: &SeriesValue) -> SeriesValue {
        self.combine(other, &self.value + &other.value)
    }

    pub fn minus(&self, other: &SeriesValue) -> SeriesValue {
        self.combine(other, &self.value - &other.value)
    }

    fn combine(&self, other: &SeriesValue, value: ExtReal) -> SeriesValue {
        let err = &self.abs_err + &other.abs_err + value.ulp();
        SeriesValue {
            value,
            abs_err: err,
            terms_used: self.terms_used + other.terms_used,
            method: self.method.clone(),
        }
    }

    /// Adds an exactly known (up to rounding) quantity.
    pub fn shifted(&self, by: &ExtReal) -> SeriesValue {
        let value = &self.value + by;
        let err = &self.abs_err + value.ulp();
        SeriesValue {
            value,
            abs_err: err,
            ..self.clone()
        }
    }

    pub fn scaled(&self, c: &ExtReal) -> SeriesValue {
        let value = &self.value * c;
        let err = &self.abs_err * &c.abs() + value.ulp();
        SeriesValue {
            value,
            abs_err: err,
            ..self.clone()
        }
    }

    pub fn negated(&self) -> SeriesValue {
        SeriesValue {
            value: -&self.value,
            ..self.clone()
        }
    }

    pub fn with_method(mut self, method: impl Into<String>) -> SeriesValue {
        self.method = method.into();
        self
    }
}
