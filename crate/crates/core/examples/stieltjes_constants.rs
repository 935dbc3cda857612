//! The classical Stieltjes constants `γ_0 … γ_8` at full working precision.
//!
//! Run with `cargo run --example stieltjes_constants`.

use stieltjes::{gamma_n, ExtReal, Method, StieltjesQuery};

fn main() -> stieltjes::Result<()> {
    let one = ExtReal::one(40);
    for n in 0..=8 {
        let q = StieltjesQuery::new(n, one.clone(), Method::SeriesB, 1e-18)?;
        let v = gamma_n(&q)?;
        println!(
            "gamma_{n} = {:>26}  ± {}  ({} terms)",
            v.value.to_decimal(22),
            v.abs_err.to_decimal(2),
            v.terms_used
        );
    }
    Ok(())
}
