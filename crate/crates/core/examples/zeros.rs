//! Sign changes of `γ_n(x)` on `[1, 2]`; the zero of `γ_0 = −ψ` is the
//! positive zero of the digamma function.

use stieltjes::verify::zero_scan;
use stieltjes::TolPolicy;

fn main() -> stieltjes::Result<()> {
    let policy = TolPolicy::default();
    for n in 0..=3 {
        let roots: Vec<String> = zero_scan(n, &policy)?
            .iter()
            .map(|r| r.to_decimal(13))
            .collect();
        println!("gamma_{n}: zeros on [1,2] at [{}]", roots.join(", "));
    }
    Ok(())
}
