//! Rotation models `y^2 = x^s0 · Π_{i=1..t} (x^nbar - c_i)` and their lifts.
//!
//! Roots of unity are additive exponents modulo `2 nbar`: the exponent `k`
//! stands for `exp(2πi k / (2 nbar))`. The rotation `x ↦ ξx` has `ξ` at
//! exponent 2, and a lift `(x, y) ↦ (ξx, λy)` is determined by the exponent
//! `ell` of `λ`.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::OracleError;

/// A hyperelliptic curve with the rotation `x ↦ ξx` of order `nbar` on the
/// quotient line.
///
/// The branch locus is `t` free orbits of size `nbar`, plus `x = 0` when
/// `s0 = 1` and `x = ∞` when `sinf = 1`. The constants `c_i` never matter:
/// free orbits contain no fixed point of a nontrivial rotation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CurveModel {
    pub nbar: u64,
    pub t: u64,
    pub s0: u8,
    pub sinf: u8,
    pub g: u64,
}

impl CurveModel {
    /// Fills in `sinf` from the parity of `deg F = t·nbar + s0` and the genus
    /// from `2g + 2 = t·nbar + s0 + sinf`.
    pub fn new(nbar: u64, t: u64, s0: u8) -> Result<Self, OracleError> {
        if nbar == 0 {
            return Err(OracleError::InvalidModel("nbar must be positive".into()));
        }
        if s0 > 1 {
            return Err(OracleError::InvalidModel(format!(
                "s0 = {s0} is not 0 or 1"
            )));
        }
        let deg_f = t * nbar + u64::from(s0);
        let sinf = (deg_f % 2) as u8;
        let branch = deg_f + u64::from(sinf);
        if branch < 6 {
            return Err(OracleError::InvalidModel(format!(
                "{branch} branch points give genus below 2"
            )));
        }
        Ok(CurveModel {
            nbar,
            t,
            s0,
            sinf,
            g: (branch - 2) / 2,
        })
    }

    pub fn branch_points(&self) -> u64 {
        self.t * self.nbar + u64::from(self.s0) + u64::from(self.sinf)
    }

    fn modulus(&self) -> u64 {
        2 * self.nbar
    }
}

impl fmt::Display for CurveModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "model(g={}, nbar={}, t={}, s0={}, sinf={})",
            self.g, self.nbar, self.t, self.s0, self.sinf
        )
    }
}

/// A lift `(x, y) ↦ (ξx, λy)`; `ell` is the exponent of `λ` mod `2 nbar` and
/// `n` the order of the lift.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Lift {
    pub ell: u64,
    pub n: u64,
}

impl Lift {
    fn new(ell: u64, nbar: u64) -> Self {
        let modulus = 2 * nbar;
        let ell = ell % modulus;
        let lambda_order = modulus / ell.gcd(&modulus);
        Lift {
            ell,
            n: nbar.lcm(&lambda_order),
        }
    }
}

/// All models of genus `g` with `nbar <= 2g + 2`.
pub fn enumerate_models(g: u64) -> Vec<CurveModel> {
    let total = 2 * g + 2;
    let mut models = Vec::new();
    for nbar in 1..=total {
        for s0 in 0..=1u8 {
            for t in 0..=total / nbar {
                if let Ok(m) = CurveModel::new(nbar, t, s0) {
                    if m.g == g {
                        models.push(m);
                    }
                }
            }
        }
    }
    models
}

/// The two lifts, `ell = s0` and `ell = s0 + nbar`. They differ by `ι`.
///
/// `F(ξx) = ξ^s0 F(x)` forces `λ^2 = ξ^s0`, i.e. `ell ≡ s0 (mod nbar)`.
pub fn lifts(m: &CurveModel) -> [Lift; 2] {
    let s0 = u64::from(m.s0);
    [Lift::new(s0, m.nbar), Lift::new(s0 + m.nbar, m.nbar)]
}

/// Number of points fixed by `α^j`, for `1 <= j < n`.
pub fn fixed_points(m: &CurveModel, l: &Lift, j: u64) -> Result<u64, OracleError> {
    if j == 0 || j >= l.n {
        return Err(OracleError::OutOfRange { j, n: l.n });
    }
    let modulus = m.modulus();
    let lambda_j = (j * l.ell) % modulus;
    if j.is_multiple_of(m.nbar) {
        // ξ^j = 1 and λ^j = ±1; λ^j = 1 would make α^j the identity
        assert_eq!(lambda_j, m.nbar, "α^{j} is the identity below its order");
        return Ok(m.branch_points());
    }
    // ξ^j ≠ 1: only the fibers over 0 and ∞ can hold fixed points
    let over_zero = if m.s0 == 1 {
        1
    } else if lambda_j == 0 {
        2
    } else {
        0
    };
    // chart u = 1/x, w = y / x^(g+1) at infinity: w ↦ λ ξ^-(g+1) w
    let twist = (l.ell as i128 - 2 * (m.g as i128 + 1)).rem_euclid(modulus as i128) as u64;
    let over_infinity = if m.sinf == 1 {
        1
    } else if (j * twist).is_multiple_of(modulus) {
        2
    } else {
        0
    };
    Ok(over_zero + over_infinity)
}

/// Power sums `p_j = tr((α^*)^j)` of the eigenvalues of `α^*` on the
/// Jacobian, one period long; `p_0 = 2g`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceSequence {
    g: u64,
    p: Vec<i64>,
}

impl TraceSequence {
    pub fn new(g: u64, p: Vec<i64>) -> Result<Self, OracleError> {
        let bound = 2 * g as i64;
        match p.first() {
            None => return Err(OracleError::InvalidTraceSequence("empty period".into())),
            Some(&p0) if p0 != bound => {
                return Err(OracleError::InvalidTraceSequence(format!(
                    "p(0) = {p0}, expected 2g = {bound}"
                )))
            }
            _ => {}
        }
        if let Some((j, v)) = p.iter().enumerate().find(|(_, v)| v.abs() > bound) {
            return Err(OracleError::InvalidTraceSequence(format!(
                "|p({j})| = {} exceeds 2g = {bound}",
                v.abs()
            )));
        }
        Ok(TraceSequence { g, p })
    }

    pub fn g(&self) -> u64 {
        self.g
    }

    pub fn period(&self) -> u64 {
        self.p.len() as u64
    }

    /// `p_j`, read periodically.
    pub fn at(&self, j: u64) -> i64 {
        self.p[(j % self.period()) as usize]
    }

    pub fn values(&self) -> &[i64] {
        &self.p
    }
}

/// `p_j = 2 - #Fix(α^j)` by the Lefschetz fixed-point formula for a tame
/// nontrivial automorphism.
pub fn trace_sequence(m: &CurveModel, l: &Lift) -> TraceSequence {
    let mut p = Vec::with_capacity(l.n as usize);
    p.push(2 * m.g as i64);
    for j in 1..l.n {
        let fix = fixed_points(m, l, j).expect("j is below the order");
        p.push(2 - fix as i64);
    }
    TraceSequence::new(m.g, p).expect("fixed-point counts stay within 0..=2g+2")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_examples() {
        let models = enumerate_models(2);
        let has = |nbar, t, s0, sinf| {
            models
                .iter()
                .any(|m| (m.nbar, m.t, m.s0, m.sinf) == (nbar, t, s0, sinf))
        };
        assert!(has(5, 1, 0, 1));
        assert!(has(5, 1, 1, 0));
        assert!(has(4, 1, 1, 1));
        assert!(models.iter().all(|m| m.nbar != 7));
        assert!(models.iter().all(|m| m.g == 2 && m.branch_points() == 6));
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for g in 2..=8u64 {
            let mut brute = Vec::new();
            for nbar in 1..=2 * g + 2 {
                for s0 in 0..=1u64 {
                    for sinf in 0..=1u64 {
                        for t in 0..=2 * g + 2 {
                            if t * nbar + s0 + sinf == 2 * g + 2
                                && (t * nbar + s0 + sinf) % 2 == 0
                                && sinf == (t * nbar + s0) % 2
                            {
                                brute.push((nbar, t, s0 as u8, sinf as u8));
                            }
                        }
                    }
                }
            }
            let mut got: Vec<_> = enumerate_models(g)
                .iter()
                .map(|m| (m.nbar, m.t, m.s0, m.sinf))
                .collect();
            brute.sort();
            got.sort();
            assert_eq!(got, brute, "g = {g}");
        }
    }

    #[test]
    fn model_validation() {
        assert!(CurveModel::new(0, 1, 0).is_err());
        assert!(CurveModel::new(3, 1, 2).is_err());
        // 2 branch points: genus 0
        assert!(CurveModel::new(1, 2, 0).is_err());
        let m = CurveModel::new(3, 2, 1).unwrap();
        assert_eq!((m.sinf, m.g), (1, 3));
    }

    #[test]
    fn lift_examples() {
        let m = CurveModel::new(5, 1, 0).unwrap();
        assert_eq!(lifts(&m), [Lift { ell: 0, n: 5 }, Lift { ell: 5, n: 10 }]);

        let m = CurveModel::new(4, 1, 1).unwrap();
        assert_eq!(lifts(&m), [Lift { ell: 1, n: 8 }, Lift { ell: 5, n: 8 }]);

        let m = CurveModel::new(1, 6, 0).unwrap();
        assert_eq!(lifts(&m), [Lift { ell: 0, n: 1 }, Lift { ell: 1, n: 2 }]);
    }

    #[test]
    fn lift_orders_are_nbar_or_twice() {
        for g in 2..=10 {
            for m in enumerate_models(g) {
                for l in lifts(&m) {
                    assert!(l.n == m.nbar || l.n == 2 * m.nbar, "{m} {l:?}");
                    assert_eq!(
                        (2 * l.ell) % (2 * m.nbar),
                        (2 * u64::from(m.s0)) % (2 * m.nbar)
                    );
                }
            }
        }
    }

    #[test]
    fn fixed_point_examples() {
        let m = CurveModel::new(5, 1, 0).unwrap();
        let l = lifts(&m)[0];
        assert_eq!(fixed_points(&m, &l, 1).unwrap(), 3);

        let m = CurveModel::new(4, 1, 1).unwrap();
        let l = lifts(&m)[0];
        assert_eq!(fixed_points(&m, &l, 1).unwrap(), 2);
        assert_eq!(fixed_points(&m, &l, 4).unwrap(), 6);

        assert!(matches!(
            fixed_points(&m, &l, 8),
            Err(OracleError::OutOfRange { j: 8, n: 8 })
        ));
        assert!(fixed_points(&m, &l, 0).is_err());
    }

    #[test]
    fn involution_fixes_weierstrass_points() {
        for g in 2..=9 {
            for m in enumerate_models(g) {
                for l in lifts(&m) {
                    for j in 1..l.n {
                        let iota = j % m.nbar == 0;
                        let fix = fixed_points(&m, &l, j).unwrap();
                        if iota {
                            assert_eq!(fix, 2 * g + 2);
                        } else {
                            assert!(fix <= 4);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn trace_examples() {
        let m = CurveModel::new(1, 6, 0).unwrap();
        let [id, iota] = lifts(&m);
        assert_eq!(trace_sequence(&m, &id).values(), &[4]);
        assert_eq!(trace_sequence(&m, &iota).values(), &[4, -4]);

        let m = CurveModel::new(4, 1, 1).unwrap();
        let ts = trace_sequence(&m, &lifts(&m)[0]);
        assert_eq!(ts.values(), &[4, 0, 0, 0, -4, 0, 0, 0]);
        assert_eq!(ts.at(12), -4);
    }

    #[test]
    fn trace_sequence_validation() {
        assert!(TraceSequence::new(2, vec![]).is_err());
        assert!(TraceSequence::new(2, vec![3, 0]).is_err());
        assert!(TraceSequence::new(2, vec![4, 5]).is_err());
        assert!(TraceSequence::new(2, vec![4, -4]).is_ok());
    }
}
