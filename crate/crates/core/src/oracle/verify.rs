//! Exhaustive comparison of oracle polynomials with the closed forms.
//!
//! Work is split per model. The parallel and sequential drivers collect
//! per-model outcomes in enumeration order, so the report does not depend
//! on how the models were scheduled.

use std::collections::BTreeSet;
use std::fmt;

#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::Serialize;

use super::{enumerate_models, lifts, realize, CurveModel, OracleError, Realization};
use crate::exactpoly::Poly;
use crate::numtheory::divisors;
use crate::spectrum::{m_from_profile, profile_from_poly};
use crate::theorem::{charpoly_cases, classify, CaseTag, Triple};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Mismatch {
    /// The oracle could not produce a polynomial.
    Oracle {
        model: CurveModel,
        ell: u64,
        error: String,
    },
    /// A realized triple fails the closed-form congruences.
    RejectedTriple {
        triple: Triple,
        model: CurveModel,
        ell: u64,
        reason: String,
    },
    NotACandidate {
        triple: Triple,
        model: CurveModel,
        ell: u64,
        oracle: Poly,
        candidates: Vec<Poly>,
    },
    /// Some `M_d` of the oracle polynomial is odd, or the polynomial is not
    /// cyclotomic of the right order.
    Spectrum {
        triple: Triple,
        model: CurveModel,
        ell: u64,
        detail: String,
    },
    /// The two lifts differ by `ι` but their polynomials are not `f(x)`, `f(-x)`.
    Duality {
        model: CurveModel,
        first: Poly,
        second: Poly,
    },
    /// A model realizing an ambiguous triple misses one of its candidates.
    AmbiguityUnrealized {
        triple: Triple,
        model: CurveModel,
        realized: Vec<Poly>,
        candidates: Vec<Poly>,
    },
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mismatch::Oracle { model, ell, error } => {
                write!(f, "{model}, ell={ell}: oracle failed: {error}")
            }
            Mismatch::RejectedTriple {
                triple,
                model,
                ell,
                reason,
            } => write!(f, "{model}, ell={ell} realizes rejected {triple}: {reason}"),
            Mismatch::NotACandidate {
                triple,
                model,
                ell,
                oracle,
                ..
            } => write!(
                f,
                "{model}, ell={ell}: oracle polynomial {oracle} is not a candidate for {triple}"
            ),
            Mismatch::Spectrum {
                triple,
                model,
                ell,
                detail,
            } => write!(f, "{model}, ell={ell}, {triple}: {detail}"),
            Mismatch::Duality {
                model,
                first,
                second,
            } => write!(
                f,
                "{model}: lifts give {first} and {second}, not f(x) and f(-x)"
            ),
            Mismatch::AmbiguityUnrealized { triple, model, .. } => {
                write!(f, "{model} does not realize both candidates of {triple}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub genus_range: [u64; 2],
    pub models_checked: u64,
    pub lifts_checked: u64,
    /// Models whose two lifts share an ambiguous triple.
    pub ambiguous_models_checked: u64,
    pub mismatches: Vec<Mismatch>,
    /// Admissible triples no model realizes. Not failures.
    pub not_witnessed: Vec<Triple>,
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }

    /// Fails with the first mismatch, if any.
    pub fn into_result(self) -> Result<Self, OracleError> {
        match self.mismatches.first() {
            Some(m) => Err(OracleError::VerificationFailure(Box::new(m.clone()))),
            None => Ok(self),
        }
    }
}

#[derive(Debug, Default)]
struct ModelOutcome {
    lifts: u64,
    ambiguous: bool,
    mismatches: Vec<Mismatch>,
    witnessed: Vec<Triple>,
}

fn check_lift(real: &Realization, out: &mut ModelOutcome) {
    let Realization {
        model,
        lift,
        triple,
        poly,
    } = real;
    match charpoly_cases(triple.g, triple.n, triple.nbar) {
        Err(e) => out.mismatches.push(Mismatch::RejectedTriple {
            triple: *triple,
            model: *model,
            ell: lift.ell,
            reason: e.to_string(),
        }),
        Ok(res) if !res.candidates.contains(poly) => out.mismatches.push(Mismatch::NotACandidate {
            triple: *triple,
            model: *model,
            ell: lift.ell,
            oracle: poly.clone(),
            candidates: res.candidates,
        }),
        Ok(_) => out.witnessed.push(*triple),
    }

    let spectrum = |detail: String| Mismatch::Spectrum {
        triple: *triple,
        model: *model,
        ell: lift.ell,
        detail,
    };
    match profile_from_poly(poly, triple.n) {
        Err(e) => out.mismatches.push(spectrum(e.to_string())),
        Ok(profile) => {
            for d in divisors(triple.n) {
                let m = m_from_profile(&profile, d).expect("d divides n");
                if !m.is_multiple_of(2) {
                    out.mismatches
                        .push(spectrum(format!("M_{d} = {m} is not twice a genus")));
                }
            }
        }
    }
}

fn check_model(model: &CurveModel) -> ModelOutcome {
    let mut out = ModelOutcome::default();
    let mut realized = Vec::with_capacity(2);
    for lift in lifts(model) {
        out.lifts += 1;
        match realize(model, &lift) {
            Ok(real) => {
                check_lift(&real, &mut out);
                realized.push(real);
            }
            Err(e) => out.mismatches.push(Mismatch::Oracle {
                model: *model,
                ell: lift.ell,
                error: e.to_string(),
            }),
        }
    }
    let [first, second] = realized.as_slice() else {
        return out;
    };
    if second.poly != first.poly.substitute_neg() {
        out.mismatches.push(Mismatch::Duality {
            model: *model,
            first: first.poly.clone(),
            second: second.poly.clone(),
        });
    }
    if model.s0 == 0 && first.triple == second.triple {
        let t = first.triple;
        if let Ok(res) = charpoly_cases(t.g, t.n, t.nbar) {
            if res.case.tag == CaseTag::D2 {
                out.ambiguous = true;
                let got = [first.poly.clone(), second.poly.clone()];
                let covers = got[0] != got[1] && res.candidates.iter().all(|c| got.contains(c));
                if !covers {
                    out.mismatches.push(Mismatch::AmbiguityUnrealized {
                        triple: t,
                        model: *model,
                        realized: got.to_vec(),
                        candidates: res.candidates,
                    });
                }
            }
        }
    }
    out
}

fn models_in(g_min: u64, g_max: u64) -> Vec<CurveModel> {
    (g_min.max(2)..=g_max).flat_map(enumerate_models).collect()
}

fn aggregate(g_min: u64, g_max: u64, outcomes: Vec<ModelOutcome>) -> VerificationReport {
    let mut report = VerificationReport {
        genus_range: [g_min, g_max],
        models_checked: outcomes.len() as u64,
        lifts_checked: 0,
        ambiguous_models_checked: 0,
        mismatches: Vec::new(),
        not_witnessed: Vec::new(),
    };
    let mut witnessed = BTreeSet::new();
    for out in outcomes {
        report.lifts_checked += out.lifts;
        report.ambiguous_models_checked += u64::from(out.ambiguous);
        report.mismatches.extend(out.mismatches);
        witnessed.extend(out.witnessed);
    }
    report.not_witnessed = (g_min.max(2)..=g_max)
        .flat_map(classify)
        .map(|r| r.triple)
        .filter(|t| !witnessed.contains(t))
        .collect();
    report
}

pub fn survey_range_sequential(g_min: u64, g_max: u64) -> VerificationReport {
    let outcomes = models_in(g_min, g_max).iter().map(check_model).collect();
    aggregate(g_min, g_max, outcomes)
}

/// Checks models on the current rayon pool.
#[cfg(feature = "parallel")]
pub fn survey_range_parallel(g_min: u64, g_max: u64) -> VerificationReport {
    let outcomes = models_in(g_min, g_max)
        .par_iter()
        .map(check_model)
        .collect();
    aggregate(g_min, g_max, outcomes)
}

/// Checks every model and lift for genera `g_min..=g_max` on `jobs` threads.
///
/// `jobs <= 1`, or a build without the `parallel` feature, runs sequentially.
pub fn survey_range(g_min: u64, g_max: u64, jobs: usize) -> VerificationReport {
    #[cfg(feature = "parallel")]
    if jobs > 1 {
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            return pool.install(|| survey_range_parallel(g_min, g_max));
        }
    }
    let _ = jobs;
    survey_range_sequential(g_min, g_max)
}

/// [`survey_range`] on all available cores, failing on the first mismatch.
pub fn verify_range(g_min: u64, g_max: u64) -> Result<VerificationReport, OracleError> {
    #[cfg(feature = "parallel")]
    let report = survey_range_parallel(g_min, g_max);
    #[cfg(not(feature = "parallel"))]
    let report = survey_range_sequential(g_min, g_max);
    report.into_result()
}

/// Every lift of every model of genus `g`.
pub fn realizations(g: u64) -> Result<Vec<Realization>, OracleError> {
    enumerate_models(g)
        .iter()
        .flat_map(|m| lifts(m).map(move |l| (*m, l)))
        .map(|(m, l)| realize(&m, &l))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_two_is_clean_and_complete() {
        let report = verify_range(2, 2).unwrap();
        assert!(report.not_witnessed.is_empty());
        assert_eq!(report.lifts_checked, 2 * report.models_checked);
    }

    #[test]
    fn genus_three_realizes_both_involution_polynomials() {
        let polys: Vec<Poly> = realizations(3)
            .unwrap()
            .into_iter()
            .filter(|r| r.triple == Triple::new(3, 2, 2))
            .map(|r| r.poly)
            .collect();
        let lin = |c| Poly::from_i64s(&[c, 1]);
        assert!(polys.contains(&(&lin(-1).pow(2) * &lin(1).pow(4))));
        assert!(polys.contains(&(&lin(-1).pow(4) * &lin(1).pow(2))));
    }

    #[test]
    fn wrong_candidate_is_reported() {
        let report = VerificationReport {
            genus_range: [2, 2],
            models_checked: 0,
            lifts_checked: 0,
            ambiguous_models_checked: 0,
            mismatches: vec![Mismatch::Duality {
                model: CurveModel::new(1, 6, 0).unwrap(),
                first: Poly::one(),
                second: Poly::one(),
            }],
            not_witnessed: vec![],
        };
        assert!(matches!(
            report.into_result(),
            Err(OracleError::VerificationFailure(_))
        ));
    }

    #[test]
    fn sequential_and_requested_jobs_agree() {
        assert_eq!(survey_range_sequential(2, 6), survey_range(2, 6, 3));
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_matches_sequential() {
        assert_eq!(survey_range_sequential(2, 9), survey_range_parallel(2, 9));
    }
}
