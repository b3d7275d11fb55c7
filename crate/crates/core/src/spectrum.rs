//! Conversions between a product of cyclotomic polynomials, its profile of
//! primitive-root multiplicities `N_d`, and the cumulative counts `M_d`.
//!
//! For a polynomial whose roots are `n`-th roots of unity, `N_d` counts the
//! roots that are primitive `d`-th roots and `M_d` counts roots `ζ` with
//! `ζ^d = 1`. The two are related by `M_d = Σ_{e|d} N_e` and its Möbius
//! inverse, and the polynomial is `Π Φ_d^{N_d/φ(d)}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactpoly::Poly;
use crate::numtheory::{cyclotomic, divisors, euler_phi, mobius};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error("{poly} is not a product of cyclotomic polynomials of order dividing {order}")]
    NonCyclotomicFactor { poly: Poly, order: u64 },
    #[error("{d} does not divide {order}")]
    NotADivisor { d: u64, order: u64 },
    #[error("no M value supplied for divisor {d} of {order}")]
    MissingDivisor { d: u64, order: u64 },
    #[error("Möbius inversion gives N_{d} = {value} < 0")]
    NegativeCount { d: u64, value: i64 },
    #[error("N_{d} = {value} is not a multiple of phi({d}) = {phi}")]
    NonOrbitCount { d: u64, value: u64, phi: u64 },
    #[error("order must be positive")]
    ZeroOrder,
}

/// Multiplicities `N_d` of primitive `d`-th roots of unity, for `d | order`.
///
/// Zero counts are not stored, so two profiles of the same polynomial and
/// order compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawProfile")]
pub struct CyclotomicProfile {
    order: u64,
    counts: BTreeMap<u64, u64>,
}

#[derive(Deserialize)]
struct RawProfile {
    order: u64,
    counts: BTreeMap<u64, u64>,
}

impl TryFrom<RawProfile> for CyclotomicProfile {
    type Error = SpectrumError;

    fn try_from(raw: RawProfile) -> Result<Self, SpectrumError> {
        CyclotomicProfile::new(raw.order, raw.counts)
    }
}

impl CyclotomicProfile {
    pub fn new(order: u64, counts: BTreeMap<u64, u64>) -> Result<Self, SpectrumError> {
        if order == 0 {
            return Err(SpectrumError::ZeroOrder);
        }
        let mut kept = BTreeMap::new();
        for (d, value) in counts {
            if d == 0 || !order.is_multiple_of(d) {
                return Err(SpectrumError::NotADivisor { d, order });
            }
            let phi = euler_phi(d);
            if value % phi != 0 {
                return Err(SpectrumError::NonOrbitCount { d, value, phi });
            }
            if value > 0 {
                kept.insert(d, value);
            }
        }
        Ok(CyclotomicProfile {
            order,
            counts: kept,
        })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Nonzero `N_d`, keyed by `d`.
    pub fn counts(&self) -> &BTreeMap<u64, u64> {
        &self.counts
    }

    pub fn count(&self, d: u64) -> u64 {
        self.counts.get(&d).copied().unwrap_or(0)
    }

    /// Degree of the represented polynomial.
    pub fn degree(&self) -> u64 {
        self.counts.values().sum()
    }

    /// `(d, exponent of Φ_d)` pairs, increasing in `d`.
    pub fn exponents(&self) -> Vec<(u64, u64)> {
        self.counts
            .iter()
            .map(|(&d, &n)| (d, n / euler_phi(d)))
            .collect()
    }

    /// `M_d` for every divisor of the order.
    pub fn m_values(&self) -> BTreeMap<u64, u64> {
        divisors(self.order)
            .into_iter()
            .map(|d| (d, self.m_unchecked(d)))
            .collect()
    }

    fn m_unchecked(&self, d: u64) -> u64 {
        self.counts
            .iter()
            .filter(|(&e, _)| d.is_multiple_of(e))
            .map(|(_, &n)| n)
            .sum()
    }
}

/// Peels cyclotomic factors `Φ_d`, `d | order`, off `f`.
///
/// Divisors are tried by decreasing `φ(d)`, ties by decreasing `d`; the
/// residual must be the constant 1.
pub fn profile_from_poly(f: &Poly, order: u64) -> Result<CyclotomicProfile, SpectrumError> {
    if order == 0 {
        return Err(SpectrumError::ZeroOrder);
    }
    let non_cyclotomic = || SpectrumError::NonCyclotomicFactor {
        poly: f.clone(),
        order,
    };
    if !f.is_monic() {
        return Err(non_cyclotomic());
    }
    let mut ds: Vec<(u64, u64)> = divisors(order)
        .into_iter()
        .map(|d| (euler_phi(d), d))
        .collect();
    ds.sort_unstable_by(|a, b| b.cmp(a));

    let mut residual = f.clone();
    let mut counts = BTreeMap::new();
    for (phi, d) in ds {
        let phi_d = cyclotomic(d);
        let mut found = 0;
        while residual.degree() >= phi_d.degree() {
            match residual.exact_div(&phi_d) {
                Ok(q) => {
                    residual = q;
                    found += phi;
                }
                Err(_) => break,
            }
        }
        if found > 0 {
            counts.insert(d, found);
        }
    }
    if !residual.is_one() {
        return Err(non_cyclotomic());
    }
    Ok(CyclotomicProfile { order, counts })
}

/// `M_d = Σ_{e|d} N_e`, the number of roots `ζ` with `ζ^d = 1`.
pub fn m_from_profile(p: &CyclotomicProfile, d: u64) -> Result<u64, SpectrumError> {
    if d == 0 || !p.order.is_multiple_of(d) {
        return Err(SpectrumError::NotADivisor { d, order: p.order });
    }
    Ok(p.m_unchecked(d))
}

/// Möbius inversion `N_d = Σ_{e|d} μ(d/e) M_e`.
///
/// `m_values` must hold exactly one entry for every divisor of `order`.
pub fn profile_from_m(
    order: u64,
    m_values: &BTreeMap<u64, u64>,
) -> Result<CyclotomicProfile, SpectrumError> {
    if order == 0 {
        return Err(SpectrumError::ZeroOrder);
    }
    if let Some(&d) = m_values
        .keys()
        .find(|&&d| d == 0 || !order.is_multiple_of(d))
    {
        return Err(SpectrumError::NotADivisor { d, order });
    }
    let ds = divisors(order);
    if let Some(&d) = ds.iter().find(|d| !m_values.contains_key(d)) {
        return Err(SpectrumError::MissingDivisor { d, order });
    }
    let mut counts = BTreeMap::new();
    for &d in &ds {
        let value: i64 = divisors(d)
            .into_iter()
            .map(|e| mobius(d / e) * m_values[&e] as i64)
            .sum();
        if value < 0 {
            return Err(SpectrumError::NegativeCount { d, value });
        }
        counts.insert(d, value as u64);
    }
    CyclotomicProfile::new(order, counts)
}

/// `Π_d Φ_d^{N_d/φ(d)}`.
pub fn poly_from_profile(p: &CyclotomicProfile) -> Poly {
    p.exponents().into_iter().fold(Poly::one(), |acc, (d, k)| {
        &acc * &cyclotomic(d).pow(k as u32)
    })
}

/// Human-readable factored form, e.g. `(x - 1)^2(x + 1)^2`.
pub fn factored_display(p: &CyclotomicProfile) -> String {
    let exps = p.exponents();
    if exps.is_empty() {
        return "1".to_string();
    }
    let single = exps.len() == 1;
    exps.iter()
        .map(|&(d, k)| {
            let phi = cyclotomic(d);
            let bare = single && k == 1;
            match (bare, k) {
                (true, _) => phi.to_string(),
                (false, 1) => format!("({phi})"),
                _ => format!("({phi})^{k}"),
            }
        })
        .collect()
}
