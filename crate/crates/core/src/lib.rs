//! Generalized Stieltjes constants and their relatives at high precision.
//!
//! The crate evaluates `γ_n(x)`, derivatives of the Hurwitz zeta function
//! at `s = 0`, and the adjacent constant families (digamma, log-gamma,
//! `η_n`, `δ_n`, Dilcher's generalized gamma functions) through several
//! independent series representations, each returning a [`SeriesValue`]
//! with a claimed error bound. The [`verify`] module turns the identities
//! linking these quantities into residual checks.
//!
//! ```
//! use stieltjes::{gamma_n, ExtReal, Method, StieltjesQuery};
//!
//! let x = ExtReal::one(34);
//! let q = StieltjesQuery::new(1, x, Method::SeriesB, 1e-12).unwrap();
//! let g1 = gamma_n(&q).unwrap();
//! assert!((g1.value.to_f64() + 0.0728158454836767).abs() < 1e-12);
//! ```

// `!(a < b)` guards also reject NaN; that is the intent.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod numeric;
pub mod related;
pub mod stieltjes;
pub mod verify;
pub mod zeta;

pub use error::{Error, Result};
pub use numeric::{ExtReal, LogPoly, SeriesValue, DEFAULT_DIGITS};
pub use related::*;
pub use stieltjes::*;
pub use verify::{run_suite, TolPolicy, VerifyReport, CHECK_IDS};
pub use zeta::*;
