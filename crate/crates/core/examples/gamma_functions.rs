//! Digamma, log-gamma and Dilcher's generalized gamma functions `Γ_k`.

use stieltjes::{digamma, dilcher_log_gamma_k, log_gamma, ExtReal};

fn main() -> stieltjes::Result<()> {
    let tol = 1e-15;
    for x in ["0.1", "0.5", "1.5", "10"] {
        let x = ExtReal::parse(x, 34)?;
        println!(
            "x = {:<5} psi = {:>22}  log_gamma = {:>22}",
            x.to_decimal(4),
            digamma(&x, tol)?.value.to_decimal(18),
            log_gamma(&x, tol)?.value.to_decimal(18)
        );
    }
    let x = ExtReal::parse("0.5", 34)?;
    for k in 0..=3 {
        let v = dilcher_log_gamma_k(k, &x, tol)?;
        println!("log Gamma_{k}(1/2) = {:>22}", v.value.to_decimal(18));
    }
    Ok(())
}
