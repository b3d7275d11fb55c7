//! Divisors, the Möbius and Euler functions, and cyclotomic polynomials.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::exactpoly::Poly;

/// Prime factorization of a positive integer, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Trial division. Panics on zero.
    pub fn of(n: u64) -> Self {
        assert!(n >= 1, "factorization of zero");
        let mut factors = Vec::new();
        let mut rest = n;
        let mut p = 2u64;
        while p * p <= rest {
            if rest.is_multiple_of(p) {
                let mut e = 0;
                while rest.is_multiple_of(p) {
                    rest /= p;
                    e += 1;
                }
                factors.push((p, e));
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if rest > 1 {
            factors.push((rest, 1));
        }
        Factorization { factors }
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn value(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product()
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }
}

/// All positive divisors of `n`, increasing.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1, "divisors of zero");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn mobius(n: u64) -> i64 {
    let f = Factorization::of(n);
    if !f.is_squarefree() {
        0
    } else if f.factors().len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn euler_phi(n: u64) -> u64 {
    Factorization::of(n)
        .factors()
        .iter()
        .map(|&(p, e)| (p - 1) * p.pow(e - 1))
        .product()
}

fn cyclotomic_cache() -> &'static RwLock<HashMap<u64, Poly>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Poly>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The `d`-th cyclotomic polynomial, from `Φ_d = (x^d - 1) / Π_{e | d, e < d} Φ_e`.
///
/// Results are memoized process-wide. Concurrent callers computing the same
/// `d` insert identical values, so a lost race is harmless.
pub fn cyclotomic(d: u64) -> Poly {
    assert!(d >= 1, "cyclotomic polynomial of order zero");
    if let Some(p) = cyclotomic_cache().read().unwrap().get(&d) {
        return p.clone();
    }
    let proper = divisors(d)
        .into_iter()
        .filter(|&e| e < d)
        .fold(Poly::one(), |acc, e| &acc * &cyclotomic(e));
    let phi = Poly::x_pow_plus(d as usize, -1)
        .exact_div(&proper)
        .expect("x^d - 1 is divisible by the lower cyclotomic factors");
    cyclotomic_cache()
        .write()
        .unwrap()
        .entry(d)
        .or_insert_with(|| phi.clone());
    phi
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(6), vec![1, 2, 3, 6]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }

    #[test]
    fn divisors_match_brute_force() {
        for n in 1..=300u64 {
            let brute: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
            assert_eq!(divisors(n), brute, "n = {n}");
        }
    }

    #[test]
    fn mobius_examples() {
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(4), 0);
        assert_eq!(mobius(6), 1);
        assert_eq!(mobius(30), -1);
    }

    #[test]
    fn phi_matches_gcd_count() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(6), 2);
        assert_eq!(euler_phi(8), 4);
        for n in 1..=300u64 {
            let brute = (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64;
            assert_eq!(euler_phi(n), brute, "n = {n}");
        }
    }

    #[test]
    fn factorization_reconstructs() {
        for n in 1..=500u64 {
            let f = Factorization::of(n);
            assert_eq!(f.value(), n);
            assert!(f.factors().windows(2).all(|w| w[0].0 < w[1].0));
            assert!(f.factors().iter().all(|&(_, e)| e >= 1));
        }
    }

    #[test]
    fn divisor_sums() {
        for n in 1..=200u64 {
            let ds = divisors(n);
            assert_eq!(ds.iter().map(|&d| euler_phi(d)).sum::<u64>(), n);
            let mu: i64 = ds.iter().map(|&d| mobius(d)).sum();
            assert_eq!(mu, i64::from(n == 1));
        }
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic(1), Poly::from_i64s(&[-1, 1]));
        assert_eq!(cyclotomic(4), Poly::from_i64s(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), Poly::from_i64s(&[1, -1, 1]));
        assert_eq!(cyclotomic(5), Poly::from_i64s(&[1, 1, 1, 1, 1]));
        assert_eq!(cyclotomic(8), Poly::from_i64s(&[1, 0, 0, 0, 1]));
    }

    #[test]
    fn cyclotomic_105_has_a_coefficient_minus_two() {
        let c = cyclotomic(105);
        assert_eq!(c.coeff(7), BigInt::from(-2));
        assert_eq!(c.coeff(41), BigInt::from(-2));
    }

    #[test]
    fn cyclotomic_products_give_x_n_minus_one() {
        for n in 1..=200u64 {
            let prod = divisors(n)
                .into_iter()
                .fold(Poly::one(), |acc, d| &acc * &cyclotomic(d));
            assert_eq!(prod, Poly::x_pow_plus(n as usize, -1), "n = {n}");
            assert_eq!(cyclotomic(n).degree().finite(), Some(euler_phi(n) as usize));
            assert!(cyclotomic(n).is_monic());
        }
    }
}
