//! The Hurwitz zeta function `ζ(s, x)` for real `s`, its `s`-derivatives,
//! and derivatives at `s = 0`.

mod deriv0;
mod hasse;
mod hurwitz;

pub use deriv0::{zeta_deriv0, zeta_deriv0_const, zeta_deriv0_diff, ZetaDeriv0, MAX_DIFF_ORDER};
pub use hasse::{hurwitz_hasse, hurwitz_hasse_budget, MAX_BUDGET as HASSE_MAX_BUDGET};
pub use hurwitz::{hurwitz_deriv_em, hurwitz_em, zeta_prime_int, ZetaArg};
