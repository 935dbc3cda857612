//! One `γ_n(x)` by every available representation: the raw limit, the two
//! telescoped series and the incomplete-gamma series.

use stieltjes::{gamma_n, ExtReal, Method, StieltjesQuery};

fn main() -> stieltjes::Result<()> {
    let x = ExtReal::parse("0.75", 34)?;
    let n = 2;
    let methods = [
        Method::Limit { terms: 100_000 },
        Method::SeriesB,
        Method::SeriesC,
        Method::Coffey { m: 0 },
        Method::Coffey { m: 3 },
    ];
    println!("gamma_{n}({x})");
    for method in methods {
        let v = gamma_n(&StieltjesQuery::new(n, x.clone(), method, 1e-12)?)?;
        println!(
            "  {:<9} {:>24}  ± {}",
            v.method,
            v.value.to_decimal(20),
            v.abs_err.to_decimal(2)
        );
    }
    println!("(the limit route carries no error bound: its abs_err is infinite)");
    Ok(())
}
