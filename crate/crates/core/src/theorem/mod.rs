//! Closed-form characteristic polynomials of hyperelliptic automorphisms.
//!
//! An automorphism `α` of order `n` of a hyperelliptic curve of genus `g`
//! induces an automorphism of order `nbar` on the genus-0 quotient by the
//! hyperelliptic involution `ι`, and `n` is either `nbar` or `2 nbar`. The
//! triple `(g, n, nbar)` pins down the characteristic polynomial of `α` on
//! the Jacobian up to one binary ambiguity, which only occurs when `nbar` is
//! even, `n = nbar` and `(2g+2)/nbar` is even.
//!
//! The cases are tagged as follows:
//!
//! | tag  | parity of `nbar` | `n`        | congruence on `2g` mod `nbar` |
//! |------|------------------|------------|-------------------------------|
//! | `B`  | odd              | `nbar`     | `0`, `-1` or `-2`             |
//! | `A`  | odd              | `2 nbar`   | `0`, `-1` or `-2`             |
//! | `D1` | even             | `nbar`     | `-2`, `(2g+2)/nbar` odd       |
//! | `D2` | even             | `nbar`     | `-2`, `(2g+2)/nbar` even      |
//! | `C`  | even             | `2 nbar`   | `0`                           |

mod cases;
mod classify;
mod lemmas;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactpoly::{Poly, PolyError};

pub use cases::{
    candidate_e1, charpoly_cases, charpoly_cases_with, match_case, match_case_with, predicted_m,
};
pub use classify::classify;
pub use lemmas::{inertia_options, quotient_genus, CharClass, InertiaGroup, Parity, RamConfig};

/// Lowest genus accepted by [`match_case_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GenusFloor {
    /// `g >= 2`: the curve is hyperelliptic.
    #[default]
    Hyperelliptic,
    /// `g >= 1`, for exploring the formulas on genus-1 double covers.
    Relaxed,
}

impl GenusFloor {
    pub fn min_genus(self) -> u64 {
        match self {
            GenusFloor::Hyperelliptic => 2,
            GenusFloor::Relaxed => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triple {
    pub g: u64,
    pub n: u64,
    pub nbar: u64,
}

impl Triple {
    pub fn new(g: u64, n: u64, nbar: u64) -> Self {
        Triple { g, n, nbar }
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(g={}, n={}, nbar={})", self.g, self.n, self.nbar)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseTag {
    B,
    A,
    D1,
    D2,
    C,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseTag::B => "B",
            CaseTag::A => "A",
            CaseTag::D1 => "D1",
            CaseTag::D2 => "D2",
            CaseTag::C => "C",
        };
        f.write_str(s)
    }
}

/// The matched case, with the residue of `2g` mod `nbar` written as 0, -1 or -2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TheoremCase {
    pub tag: CaseTag,
    pub congruence_class: i8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPolyResult {
    pub triple: Triple,
    pub case: TheoremCase,
    /// One candidate, or two for case `D2` with the `(x-1)^2` quotient first.
    pub candidates: Vec<Poly>,
}

impl CharPolyResult {
    pub fn is_ambiguous(&self) -> bool {
        self.candidates.len() == 2
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error("inadmissible triple {triple}: {reason}")]
    InadmissibleTriple { triple: Triple, reason: String },
    #[error("no curve realizes {config}: {reason}")]
    NonIntegralGenus { config: RamConfig, reason: String },
    #[error("{config} is not possible in characteristic 2")]
    NotPossibleConfiguration { config: RamConfig },
    #[error("inertia groups for m {parity} in characteristic {char_class} are not covered")]
    UncoveredByLemma {
        parity: Parity,
        char_class: CharClass,
    },
    #[error("e1 = {e1} is inconsistent with case {tag} of {triple}")]
    InvalidE1 {
        triple: Triple,
        tag: CaseTag,
        e1: u8,
    },
    #[error("{d} does not divide the order {n}")]
    NotADivisor { d: u64, n: u64 },
    #[error("invalid ramification configuration: {0}")]
    InvalidRamConfig(String),
    #[error("internal formula error: {0}")]
    Formula(#[from] PolyError),
}
