//! The numerical substrate on its own: Euler–Maclaurin tails, Gauss–Legendre
//! quadrature, alternating-series acceleration and Bernoulli numbers.

use stieltjes::numeric::{accelerate_alternating, bernoulli, em_tail, harmonic, quad_gl, Grading};
use stieltjes::{ExtReal, LogPoly};

fn main() -> stieltjes::Result<()> {
    let d = 34;
    // Σ_{k≥10} 1/k² − ∫_10^∞ dt/t², so ζ(2) = Σ_{k<10} 1/k² + 1/10 + tail.
    let f = LogPoly::monomial(ExtReal::one(d), 0, 2);
    let tail = em_tail(&f, 10, 4)?;
    let mut head = ExtReal::from_ratio(1, 10, d);
    for k in 1..10 {
        head += ExtReal::from_u64(k * k, d).recip();
    }
    let zeta2 = head + &tail.value;
    let exact = ExtReal::pi(d).square() / 6;
    println!(
        "zeta(2) by Euler-Maclaurin: {}  (error {})",
        zeta2.to_decimal(30),
        (zeta2 - &exact).abs().to_decimal(2)
    );

    // ∫_0^1 4/(1+t²) dt = π.
    let q = quad_gl(
        |t| Ok(ExtReal::from_i64(4, d) / &(t.square() + 1)),
        &ExtReal::zero(d),
        &ExtReal::one(d),
        4,
        16,
        Grading::Uniform,
    )?;
    println!(
        "pi by quadrature:          {}  ± {}",
        q.value.to_decimal(30),
        q.abs_err.to_decimal(2)
    );

    // log 2 = Σ (−1)^k/(k+1).
    let ln2 = accelerate_alternating(|k| ExtReal::from_u64(k as u64 + 1, d).recip(), 50, d)?;
    println!(
        "log 2 accelerated:         {}  ± {}",
        ln2.value.to_decimal(30),
        ln2.abs_err.to_decimal(2)
    );

    println!("H_10 = {}", harmonic(10, d)?.to_decimal(30));
    for k in [2, 4, 6, 8, 10, 12] {
        let b = bernoulli(k)?;
        println!("B_{k} = {}/{}", b.numerator(), b.denominator());
    }
    Ok(())
}
