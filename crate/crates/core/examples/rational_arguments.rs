//! Closed forms at rational arguments: `γ_1(p/q)` through values of the
//! gamma function and `ψ(p/q)` by Gauss's formula, each against the
//! general series.

use stieltjes::{
    digamma, digamma_rational, gamma1_rational, gamma_n, Method, RationalArg, StieltjesQuery,
};

fn main() -> stieltjes::Result<()> {
    let tol = 1e-14;
    println!(
        "{:>5}  {:>24}  {:>9}  {:>24}  {:>9}",
        "p/q", "gamma_1(p/q)", "gap", "psi(p/q)", "gap"
    );
    for q in 2..=6 {
        for r in RationalArg::with_denominator(q) {
            let closed = gamma1_rational(r, tol)?;
            let series = gamma_n(&StieltjesQuery::new(1, r.value(34), Method::SeriesB, tol)?)?;
            let gauss = digamma_rational(r, tol)?;
            let psi = digamma(&r.value(34), tol)?;
            println!(
                "{:>5}  {:>24}  {:>9}  {:>24}  {:>9}",
                r.to_string(),
                closed.value.to_decimal(18),
                closed.gap(&series).to_decimal(2),
                gauss.value.to_decimal(18),
                gauss.gap(&psi).to_decimal(2)
            );
        }
    }
    Ok(())
}
