//! The von Mangoldt function by sieve.

use crate::error::{domain, Result};
use crate::numeric::{CompensatedSum, ExtReal};

/// `Λ(k)` for `k ≤ limit`, stored as the prime base of each prime power
/// (0 elsewhere) so the logarithms are exact at any precision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VonMangoldtTable {
    base: Vec<u32>,
}

/// Builds the table for `2 ≤ N ≤ 2^32 − 1`.
pub fn von_mangoldt(n: u64) -> Result<VonMangoldtTable> {
    if n < 2 {
        return Err(domain(format!("von_mangoldt needs N >= 2, got {n}")));
    }
    if n > u64::from(u32::MAX) {
        return Err(domain(format!("von_mangoldt limit {n} exceeds 2^32 - 1")));
    }
    let n = n as usize;
    let mut base = vec![0u32; n + 1];
    let mut composite = vec![false; n + 1];
    for p in 2..=n {
        if composite[p] {
            continue;
        }
        let mut m = p * p;
        while m <= n {
            composite[m] = true;
            m += p;
        }
        let mut q = p;
        loop {
            base[q] = p as u32;
            match q.checked_mul(p) {
                Some(next) if next <= n => q = next,
                _ => break,
            }
        }
    }
    Ok(VonMangoldtTable { base })
}

impl VonMangoldtTable {
    pub fn limit(&self) -> u64 {
        self.base.len() as u64 - 1
    }

    /// `p` when `k = p^m`, `m ≥ 1`.
    pub fn prime_base(&self, k: u64) -> Option<u64> {
        match self.base.get(k as usize) {
            Some(&p) if p != 0 => Some(u64::from(p)),
            _ => None,
        }
    }

    pub fn lambda(&self, k: u64, digits: u32) -> ExtReal {
        match self.prime_base(k) {
            Some(p) => ExtReal::from_u64(p, digits).ln(),
            None => ExtReal::zero(digits),
        }
    }

    /// `(k, p)` for every prime power `k = p^m ≤ limit`, increasing in `k`.
    pub fn prime_powers(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.base
            .iter()
            .enumerate()
            .filter(|(_, &p)| p != 0)
            .map(|(k, &p)| (k as u64, u64::from(p)))
    }

    /// Chebyshev's `ψ(N) = Σ_{k≤N} Λ(k) = log lcm(1..N)`.
    pub fn chebyshev_psi(&self, digits: u32) -> ExtReal {
        let mut acc = CompensatedSum::new(digits);
        for (_, p) in self.prime_powers() {
            acc.add(&ExtReal::from_u64(p, digits).ln());
        }
        acc.value()
    }
}

/// Primes up to `n` from a bit-packed sieve of Eratosthenes.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let words = (n as usize >> 6) + 1;
    let mut composite = vec![0u64; words];
    let mut out = Vec::new();
    let mut p = 2u64;
    while p <= n {
        if composite[(p >> 6) as usize] >> (p & 63) & 1 == 0 {
            out.push(p);
            let mut m = p * p;
            while m <= n {
                composite[(m >> 6) as usize] |= 1 << (m & 63);
                m += p;
            }
        }
        p += 1;
    }
    out
}

/// `Σ_{k≤K} (Λ(k) − 1) log^n k / k`.
pub fn mangoldt_excess(n: u32, table: &VonMangoldtTable, digits: u32) -> ExtReal {
    let p = n as i32;
    let mut acc = CompensatedSum::new(digits);
    for k in 1..=table.limit() {
        let kk = ExtReal::from_u64(k, digits);
        let ln_k = kk.ln();
        let weight = table.lambda(k, digits) - 1;
        let term = if n == 0 {
            weight
        } else {
            weight * ln_k.powi(p)
        };
        acc.add(&(term / &kk));
    }
    acc.value()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::Integer;

    #[test]
    fn small_values() {
        let t = von_mangoldt(100).unwrap();
        assert_eq!(t.prime_base(9), Some(3));
        assert_eq!(t.prime_base(12), None);
        assert_eq!(t.prime_base(1), None);
        assert_eq!(t.prime_base(97), Some(97));
        assert_eq!(t.prime_base(64), Some(2));
        let s = t.lambda(2, 34) + t.lambda(4, 34) + t.lambda(8, 34);
        assert!((s - ExtReal::ln2(34) * 3).abs().to_f64() < 1e-32);
        assert!(von_mangoldt(1).is_err());
    }

    #[test]
    fn sieve_agrees_with_table() {
        let t = von_mangoldt(1000).unwrap();
        let primes: Vec<u64> = t
            .prime_powers()
            .filter(|&(k, p)| k == p)
            .map(|(k, _)| k)
            .collect();
        assert_eq!(primes, primes_up_to(1000));
        assert_eq!(primes_up_to(1_000_000).len(), 78_498);
    }

    #[test]
    fn chebyshev_is_log_lcm() {
        let n = 300u32;
        let t = von_mangoldt(u64::from(n)).unwrap();
        let mut l = Integer::from(1);
        for k in 1..=n {
            l.lcm_u_mut(k);
        }
        let want = ExtReal::from_float(rug::Float::with_val(200, &l))
            .with_digits(40)
            .ln();
        assert!((t.chebyshev_psi(40) - want).abs().to_f64() < 1e-36);
    }
}
