//! Constant families adjacent to `γ_n(x)`: digamma and log-gamma, the von
//! Mangoldt function, the `η_n` and `δ_n` constants and Dilcher's
//! generalized gamma functions.

mod dilcher;
mod eta;
mod gamma;
mod mangoldt;
mod power_series;

#[allow(unused_imports)]
pub(crate) use dilcher::dilcher_sum;
pub use dilcher::{dilcher_log_gamma_k, dilcher_series61, MAX_DILCHER_ORDER};
pub use eta::{delta, eta, EtaRoute, MAX_DELTA_ORDER, MAX_ETA_ORDER, MAX_ETA_TERMS};
pub use gamma::{digamma, digamma_rational, log_gamma};
pub use mangoldt::{mangoldt_excess, primes_up_to, von_mangoldt, VonMangoldtTable};
pub use power_series::PowerSeries;
