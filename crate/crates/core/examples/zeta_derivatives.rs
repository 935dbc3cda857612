//! Derivatives of the Hurwitz zeta function at `s = 0`, and Lerch's
//! formula `ζ'(0, x) − ζ'(0) = log Γ(x)` as a check.

use stieltjes::{log_gamma, zeta_deriv0, zeta_deriv0_diff, ExtReal};

fn main() -> stieltjes::Result<()> {
    let tol = 1e-15;
    for x in ["0.25", "0.5", "1", "2", "pi"] {
        let x = ExtReal::parse(x, 34)?;
        let d1 = zeta_deriv0(1, &x, tol)?;
        let d2 = zeta_deriv0(2, &x, tol)?;
        let lerch = zeta_deriv0_diff(0, &x, tol)?.gap(&log_gamma(&x, tol)?);
        println!(
            "x = {:<8} zeta'(0,x) = {:>22}  zeta''(0,x) = {:>22}  |Lerch gap| = {}",
            x.to_decimal(6),
            d1.value.value.to_decimal(18),
            d2.value.value.to_decimal(18),
            lerch.to_decimal(2)
        );
    }
    Ok(())
}
