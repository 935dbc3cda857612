//! Property tests for the numerical substrate and the verifier contract.

use proptest::prelude::*;

use stieltjes::numeric::{
    bernoulli, em_tail, logpoly_diff, quad_gl, CompensatedSum, Grading, LogTerm,
};
use stieltjes::verify::{check_cotangent, check_lemma31};
use stieltjes::{
    gamma_n, hurwitz_em, run_suite, ExtReal, LogPoly, Method, StieltjesQuery, TolPolicy,
};

const D: u32 = 34;

fn ext(v: f64) -> ExtReal {
    ExtReal::from_f64(v, D)
}

/// Dyadic coefficients, so linear combinations are exact.
fn term() -> impl Strategy<Value = LogTerm> {
    (-20i64..=20, 0u32..=3, 2u32..=4).prop_map(|(c, m, p)| LogTerm {
        coeff: ExtReal::from_ratio(c, 8, D),
        log_power: m,
        inv_power: p,
    })
}

fn logpoly(max_terms: usize) -> impl Strategy<Value = LogPoly> {
    prop::collection::vec(term(), 1..=max_terms).prop_map(LogPoly::from_terms)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, failure_persistence: None, ..ProptestConfig::default() })]

    /// The tail from `N` equals the brute-force block `N..M` with its
    /// integral removed, plus the tail from `M`.
    #[test]
    fn em_tail_self_consistent(f in logpoly(3), n in 10u64..200) {
        prop_assume!(!f.is_empty());
        let m = n + 1500;
        let near = em_tail(&f, n, 4).unwrap();
        let far = em_tail(&f, m, 4).unwrap();
        let mut block = CompensatedSum::new(D);
        for k in n..m {
            block.add(&f.eval(&ExtReal::from_u64(k, D)));
        }
        let integral = f.antiderivative(&ExtReal::from_u64(m, D)) - f.antiderivative(&ExtReal::from_u64(n, D));
        let rebuilt = block.value() - integral + &far.value;
        let gap = (&near.value - &rebuilt).abs();
        let claimed = (&near.abs_err + &far.abs_err) * 10 + ext(1e-30);
        prop_assert!(gap <= claimed, "gap {} > 10 x claimed {}", gap, claimed);
    }

    #[test]
    fn logpoly_diff_is_linear(f in logpoly(3), g in logpoly(3), a in -9i64..=9, b in -9i64..=9) {
        let (a, b) = (ExtReal::from_i64(a, D), ExtReal::from_i64(b, D));
        let lhs = logpoly_diff(&f.scale(&a).add(&g.scale(&b)));
        let rhs = logpoly_diff(&f).scale(&a).add(&logpoly_diff(&g).scale(&b));
        prop_assert_eq!(lhs, rhs);
    }

    /// Polynomials of degree up to `2·nodes − 1` on `[0, 1]` integrate
    /// exactly, up to a few ulps of the coefficient mass.
    #[test]
    fn quad_gl_is_exact_on_polynomials(nodes in 1usize..=10, coeffs in prop::collection::vec(-5i64..=5, 20)) {
        let degree = 2 * nodes - 1;
        let cs = &coeffs[..=degree];
        let f = |t: &ExtReal| {
            let mut acc = ExtReal::zero(D);
            for c in cs.iter().rev() {
                acc = acc * t + *c;
            }
            Ok(acc)
        };
        let q = quad_gl(f, &ExtReal::zero(D), &ExtReal::one(D), 1, nodes, Grading::Uniform).unwrap();
        let mut exact = ExtReal::zero(D);
        for (j, c) in cs.iter().enumerate() {
            exact += ExtReal::from_ratio(*c, j as i64 + 1, D);
        }
        let mass: i64 = cs.iter().map(|c| c.abs()).sum::<i64>() + 1;
        let allowance = ExtReal::one(D).ulp() * (8 * mass);
        prop_assert!((&q.value - &exact).abs() <= allowance);
    }

    /// `ζ(s, x+1) − ζ(s, x) = −x^(−s)`.
    #[test]
    fn hurwitz_shift(s in -1.8f64..4.0, x in 0.2f64..6.0) {
        prop_assume!((s - 1.0).abs() > 1e-3);
        let (s, x) = (ExtReal::from_f64(s, 50), ExtReal::from_f64(x, 50));
        let a = hurwitz_em(&s, &(&x + 1)).unwrap();
        let b = hurwitz_em(&s, &x).unwrap();
        let d = b.value.digits();
        let step = x.with_digits(d).pow(&-s.with_digits(d));
        let gap = (&a.value - &b.value + &step).abs();
        prop_assert!(gap <= &a.abs_err + &b.abs_err + step.ulp() * 4);
    }

    /// Series B and series C agree within their summed claimed errors.
    #[test]
    fn series_b_and_c_agree(n in 0u32..=3, x in 0.2f64..5.0) {
        let x = ext(x);
        let b = gamma_n(&StieltjesQuery::new(n, x.clone(), Method::SeriesB, 1e-12).unwrap()).unwrap();
        let c = gamma_n(&StieltjesQuery::new(n, x, Method::SeriesC, 1e-12).unwrap()).unwrap();
        prop_assert!(b.agrees_with(&c), "gap {} vs {} + {}", b.gap(&c), b.abs_err, c.abs_err);
    }

    /// The telescoping rewrite holds for any order, shift and cut-off.
    #[test]
    fn lemma31_random(n in 0u32..=5, x in 0.0f64..10.0, big_n in 1u64..=1000) {
        let r = check_lemma31(n, &ext(x), big_n, &TolPolicy::default());
        prop_assert!(r.passed, "{:?}", r);
    }

    /// `passed` is recomputable from `residual` and `tolerance`.
    #[test]
    fn passed_flag_is_recomputable(x in 0.05f64..0.95) {
        for r in check_cotangent(&ext(x), &TolPolicy::default()) {
            prop_assert_eq!(r.passed, r.residual.abs() <= r.tolerance);
        }
    }

    /// Decimal rendering at full precision round-trips through parsing.
    #[test]
    fn decimal_round_trip(v in -1e12f64..1e12, digits in 30u32..60) {
        let x = full_mantissa(v, digits);
        let text = x.to_decimal(digits as usize + 5);
        let back = ExtReal::parse(&text, digits).unwrap();
        prop_assert_eq!(back.to_decimal(digits as usize + 5), text);
    }
}

/// An irrational value with a full mantissa.
fn full_mantissa(v: f64, digits: u32) -> ExtReal {
    ExtReal::from_f64(v.abs() + 1.0, digits).sqrt() / 3
}

#[test]
fn bernoulli_low_orders_are_exact() {
    for (k, num, den) in [(2u32, 1i64, 6i64), (4, -1, 30), (6, 1, 42), (8, -1, 30)] {
        let b = bernoulli(k).unwrap();
        assert_eq!(
            (
                b.numerator().to_i64().unwrap(),
                b.denominator().to_i64().unwrap()
            ),
            (num, den),
            "B_{k}"
        );
    }
}

#[test]
fn suite_is_deterministic() {
    let policy = TolPolicy::default();
    let ids = ["lemma31", "cotangent", "lerch", "difference"];
    let a = run_suite(&ids, &policy).unwrap();
    let b = run_suite(&ids, &policy).unwrap();
    assert_eq!(a, b);
    assert!(a.iter().all(|r| r.passed));
}

/// `(s−1) ζ(s, x) → 1` as `s → 1`, with the first correction `(s−1) γ_0(x)`.
#[test]
fn pole_residue() {
    for x in ["0.25", "1", "1.7"] {
        let x = ExtReal::parse(x, D).unwrap();
        let g0 =
            gamma_n(&StieltjesQuery::new(0, x.clone(), Method::SeriesB, 1e-12).unwrap()).unwrap();
        for d in 2..=6 {
            let eps = ExtReal::from_f64(10f64.powi(-d), D);
            let z = hurwitz_em(&(&eps + 1), &x).unwrap();
            let residue = (&z.value * &eps - 1).abs();
            assert!(
                residue.to_f64() <= 5.0 * g0.value.to_f64().abs() * 10f64.powi(-d),
                "x = {x}, d = {d}"
            );
        }
    }
}
