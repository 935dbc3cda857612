//! Hasse's globally convergent series against the Euler–Maclaurin
//! continuation of `ζ(s, x)`, including negative `s`.

use stieltjes::{hurwitz_em, hurwitz_hasse, ExtReal};

fn main() -> stieltjes::Result<()> {
    let cases = [
        ("-1", "1", 1e-12),
        ("0", "0.25", 1e-12),
        ("-2.5", "3", 1e-8),
        ("0.5", "2", 1e-6),
    ];
    for (s, x, tol) in cases {
        let (s, x) = (ExtReal::parse(s, 34)?, ExtReal::parse(x, 34)?);
        let h = hurwitz_hasse(&s, &x, tol)?;
        let e = hurwitz_em(&s, &x)?;
        println!(
            "zeta({s}, {x}): hasse {:>22} ({} terms)  euler-maclaurin {:>22}  gap {}",
            h.value.to_decimal(16),
            h.terms_used,
            e.value.to_decimal(16),
            h.gap(&e).to_decimal(2)
        );
    }
    Ok(())
}
