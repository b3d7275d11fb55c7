//! Newton's identities over exact rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::model::TraceSequence;
use super::OracleError;
use crate::exactpoly::Poly;

/// The monic degree-`2g` polynomial whose roots have power sums `ts`.
///
/// `k e_k = Σ_{i=1..k} (-1)^(i-1) e_(k-i) p_i`, and the coefficient of
/// `x^(2g-k)` is `(-1)^k e_k`.
pub fn charpoly_from_traces(ts: &TraceSequence) -> Result<Poly, OracleError> {
    let degree = 2 * ts.g() as usize;
    let mut elementary: Vec<BigRational> = Vec::with_capacity(degree + 1);
    elementary.push(BigRational::one());
    for k in 1..=degree {
        let mut acc = BigRational::zero();
        for i in 1..=k {
            let term =
                &elementary[k - i] * BigRational::from_integer(BigInt::from(ts.at(i as u64)));
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        let e_k = acc / BigRational::from_integer(BigInt::from(k));
        if !e_k.is_integer() {
            return Err(OracleError::NonIntegralCoefficient { k: k as u64 });
        }
        elementary.push(e_k);
    }
    let mut coeffs = vec![BigInt::zero(); degree + 1];
    for (k, e_k) in elementary.into_iter().enumerate() {
        let c = e_k.to_integer();
        coeffs[degree - k] = if k % 2 == 0 { c } else { -c };
    }
    Ok(Poly::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ts(g: u64, p: &[i64]) -> TraceSequence {
        TraceSequence::new(g, p.to_vec()).unwrap()
    }

    #[test]
    fn reconstruction_examples() {
        assert_eq!(
            charpoly_from_traces(&ts(2, &[4, 0, 0, 0, -4, 0, 0, 0])).unwrap(),
            Poly::from_i64s(&[1, 0, 0, 0, 1])
        );
        assert_eq!(
            charpoly_from_traces(&ts(2, &[4, -4])).unwrap(),
            Poly::from_i64s(&[1, 4, 6, 4, 1])
        );
        assert_eq!(
            charpoly_from_traces(&ts(1, &[2])).unwrap(),
            Poly::from_i64s(&[1, -2, 1])
        );
    }

    #[test]
    fn primitive_fifth_roots() {
        // Φ_5 has p_j = -1 for 5 ∤ j
        assert_eq!(
            charpoly_from_traces(&ts(2, &[4, -1, -1, -1, -1])).unwrap(),
            Poly::from_i64s(&[1, 1, 1, 1, 1])
        );
    }

    #[test]
    fn inconsistent_sums_are_rejected() {
        // p_1 = 1, p_2 = 0 gives e_2 = 1/2
        assert_eq!(
            charpoly_from_traces(&ts(1, &[2, 1, 0])),
            Err(OracleError::NonIntegralCoefficient { k: 2 })
        );
    }
}
