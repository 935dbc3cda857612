//! Precision substrate: the extended-precision scalar, compensated
//! summation, Bernoulli numbers, log-polynomial calculus, Euler–Maclaurin
//! tails, alternating-series acceleration, quadrature and root finding.

pub mod alternating;
pub mod bernoulli;
pub mod euler_maclaurin;
pub mod ext;
pub mod logpoly;
pub mod quadrature;
pub mod roots;
pub mod series;
pub mod sum;

pub use alternating::{accelerate_alternating, accelerate_alternating_checked};
pub use bernoulli::{bernoulli, Bernoulli};
pub use euler_maclaurin::{em_tail, em_tail_at, EmKernel, TailSum};
pub use ext::{working_digits, ExtReal, DEFAULT_DIGITS};
pub use logpoly::{logpoly_diff, LogPoly, LogTerm};
pub use quadrature::{quad_gl, Grading};
pub use roots::find_root_bisect;
pub use series::SeriesValue;
pub use sum::{comp_sum, harmonic, CompensatedSum};
