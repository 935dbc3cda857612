//! The `η_n` constants of `ζ'/ζ` and the `δ_n` constants of
//! `ζ(s) − 1/(s−1)` at `s = 0`, with the von Mangoldt partial sums that
//! approach `η_0` slowly.

use stieltjes::{delta, eta, EtaRoute};

fn main() -> stieltjes::Result<()> {
    let tol = 1e-14;
    for n in 0..=4 {
        let v = eta(n, EtaRoute::FromGamma, tol)?;
        println!("eta_{n}   = {:>22}", v.value.to_decimal(16));
    }
    for terms in [1_000u64, 10_000, 100_000] {
        let v = eta(0, EtaRoute::Series { terms }, tol)?;
        println!(
            "eta_0 by von Mangoldt sum to {terms:>6}: {}",
            v.value.to_decimal(8)
        );
    }
    for n in 0..=2 {
        let v = delta(n, 1000, tol)?;
        println!(
            "delta_{n} = {:>22}  ± {}",
            v.value.to_decimal(16),
            v.abs_err.to_decimal(2)
        );
    }
    Ok(())
}
