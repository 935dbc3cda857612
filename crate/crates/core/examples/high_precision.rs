//! `γ_1` to 60 digits by three independent routes. The working precision
//! follows the tolerance: twice its digit count at least.

use stieltjes::{gamma1_alt, gamma_n, ExtReal, Method, StieltjesQuery};

fn main() -> stieltjes::Result<()> {
    let tol = 1e-30;
    let one = ExtReal::one(70);
    let b = gamma_n(&StieltjesQuery::new(1, one.clone(), Method::SeriesB, tol)?)?;
    let c = gamma_n(&StieltjesQuery::new(1, one, Method::SeriesC, tol)?)?;
    let alt = gamma1_alt(tol)?;
    for v in [&b, &c, &alt] {
        println!(
            "{:<12} {}  ± {}",
            v.method,
            v.value.to_decimal(40),
            v.abs_err.to_decimal(2)
        );
    }
    println!("largest gap {}", b.gap(&c).max(&b.gap(&alt)).to_decimal(2));
    Ok(())
}
