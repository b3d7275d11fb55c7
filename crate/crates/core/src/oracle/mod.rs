//! Independent ground truth for the closed-form polynomials.
//!
//! Builds rotation models of hyperelliptic curves in characteristic 0,
//! counts the fixed points of every power of each lift, turns the counts
//! into traces on the Jacobian and rebuilds the characteristic polynomial
//! with Newton's identities. Nothing here consults [`crate::theorem`]
//! except [`verify`], which compares the two.

mod model;
mod newton;
pub mod verify;

use thiserror::Error;

use crate::exactpoly::Poly;
use crate::theorem::Triple;

pub use model::{
    enumerate_models, fixed_points, lifts, trace_sequence, CurveModel, Lift, TraceSequence,
};
pub use newton::charpoly_from_traces;
pub use verify::{
    realizations, survey_range, survey_range_sequential, verify_range, Mismatch, VerificationReport,
};

#[cfg(feature = "parallel")]
pub use verify::survey_range_parallel;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("power {j} is outside 1..{n}")]
    OutOfRange { j: u64, n: u64 },
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("invalid trace sequence: {0}")]
    InvalidTraceSequence(String),
    #[error("elementary symmetric function e_{k} is not an integer")]
    NonIntegralCoefficient { k: u64 },
    #[error("verification failed: {0}")]
    VerificationFailure(Box<Mismatch>),
}

/// One lift of one model, with the polynomial the oracle assigns to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    pub model: CurveModel,
    pub lift: Lift,
    pub triple: Triple,
    pub poly: Poly,
}

/// Runs the whole oracle pipeline on one lift.
pub fn realize(model: &CurveModel, lift: &Lift) -> Result<Realization, OracleError> {
    let ts = trace_sequence(model, lift);
    let poly = charpoly_from_traces(&ts)?;
    Ok(Realization {
        model: *model,
        lift: *lift,
        triple: Triple::new(model.g, lift.n, model.nbar),
        poly,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fifth_root_model_pins_infinity_twist() {
        // only the correct twist at ∞ yields Φ_5 for the order-5 lift
        let m = CurveModel::new(5, 1, 0).unwrap();
        let r = realize(&m, &lifts(&m)[0]).unwrap();
        assert_eq!(r.triple, Triple::new(2, 5, 5));
        assert_eq!(r.poly, Poly::from_i64s(&[1, 1, 1, 1, 1]));
        let r = realize(&m, &lifts(&m)[1]).unwrap();
        assert_eq!(r.triple, Triple::new(2, 10, 5));
        assert_eq!(r.poly, Poly::from_i64s(&[1, -1, 1, -1, 1]));
    }

    #[test]
    fn identity_and_involution() {
        let m = CurveModel::new(1, 8, 0).unwrap();
        let [id, iota] = lifts(&m);
        assert_eq!(
            realize(&m, &id).unwrap().poly,
            Poly::from_i64s(&[-1, 1]).pow(6)
        );
        assert_eq!(
            realize(&m, &iota).unwrap().poly,
            Poly::from_i64s(&[1, 1]).pow(6)
        );
    }
}
