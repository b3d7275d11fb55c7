//! Quotients of a hyperelliptic curve by a cyclic group `⟨β⟩` of order `m`
//! not containing the hyperelliptic involution `ι`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::TheoremError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CharClass {
    NotTwo,
    Two,
}

impl fmt::Display for CharClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CharClass::NotTwo => "not two",
            CharClass::Two => "two",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of(m: u64) -> Self {
        if m.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        })
    }
}

/// Genus `g` of the curve, order `m` of `β`, and the number `e` of points of
/// the base curve ramified both in the quotient double cover and in the
/// degree-`m` cover of genus-0 curves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RamConfig {
    g: u64,
    m: u64,
    e: u8,
    char_class: CharClass,
}

impl RamConfig {
    /// Checks `g >= 2`, `m >= 1`, `e <= 2`, and that an even `m` equals 2
    /// in characteristic 2.
    pub fn new(g: u64, m: u64, e: u8, char_class: CharClass) -> Result<Self, TheoremError> {
        if g < 2 {
            return Err(TheoremError::InvalidRamConfig(format!(
                "genus {g} is below 2"
            )));
        }
        if m == 0 {
            return Err(TheoremError::InvalidRamConfig("m must be positive".into()));
        }
        if e > 2 {
            return Err(TheoremError::InvalidRamConfig(format!("e = {e} exceeds 2")));
        }
        if char_class == CharClass::Two && m.is_multiple_of(2) && m != 2 {
            return Err(TheoremError::InvalidRamConfig(format!(
                "an even-order automorphism of the line in characteristic 2 has order 2, not {m}"
            )));
        }
        Ok(RamConfig {
            g,
            m,
            e,
            char_class,
        })
    }

    pub fn g(&self) -> u64 {
        self.g
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn e(&self) -> u8 {
        self.e
    }

    pub fn char_class(&self) -> CharClass {
        self.char_class
    }
}

impl fmt::Display for RamConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(g={}, m={}, e={}, char {})",
            self.g, self.m, self.e, self.char_class
        )
    }
}

/// `2h` as `numerator / m + offset`, or a direct value.
enum TwiceGenus {
    Ratio { numerator: u64, offset: i64 },
    Direct(i64),
}

/// Genus `h` of the quotient by `⟨β⟩`.
pub fn quotient_genus(cfg: &RamConfig) -> Result<u64, TheoremError> {
    let g = cfg.g;
    let m = cfg.m;
    let odd = m % 2 == 1;
    let expr = match (cfg.char_class, odd, cfg.e) {
        (_, true, 0) => TwiceGenus::Ratio {
            numerator: 2 * g + 2,
            offset: -2,
        },
        (_, true, 1) => TwiceGenus::Ratio {
            numerator: 2 * g + 1,
            offset: -1,
        },
        (_, true, _) => TwiceGenus::Ratio {
            numerator: 2 * g,
            offset: 0,
        },
        (CharClass::NotTwo, false, e) => TwiceGenus::Ratio {
            numerator: 2 * g + 2,
            offset: i64::from(e) - 2,
        },
        (CharClass::Two, false, 0) => TwiceGenus::Direct(g as i64 - 1),
        (CharClass::Two, false, 1) => TwiceGenus::Direct(if g.is_multiple_of(2) {
            g as i64
        } else {
            g as i64 + 1
        }),
        (CharClass::Two, false, _) => {
            return Err(TheoremError::NotPossibleConfiguration { config: *cfg })
        }
    };
    let non_integral = |reason: String| TheoremError::NonIntegralGenus {
        config: *cfg,
        reason,
    };
    let twice_h = match expr {
        TwiceGenus::Ratio { numerator, offset } => {
            if numerator % m != 0 {
                return Err(non_integral(format!("{m} does not divide {numerator}")));
            }
            (numerator / m) as i64 + offset
        }
        TwiceGenus::Direct(v) => v,
    };
    if twice_h < 0 {
        return Err(non_integral(format!("2h = {twice_h} is negative")));
    }
    if twice_h % 2 != 0 {
        return Err(non_integral(format!("2h = {twice_h} is odd")));
    }
    Ok((twice_h / 2) as u64)
}

/// Subgroups of `G = ⟨β, ι⟩` that can occur as inertia groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum InertiaGroup {
    Trivial,
    Iota,
    Beta,
    IotaBeta,
    Whole,
}

impl fmt::Display for InertiaGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InertiaGroup::Trivial => "1",
            InertiaGroup::Iota => "⟨ι⟩",
            InertiaGroup::Beta => "⟨β⟩",
            InertiaGroup::IotaBeta => "⟨ιβ⟩",
            InertiaGroup::Whole => "G",
        })
    }
}

pub fn inertia_options(
    parity: Parity,
    char_class: CharClass,
) -> Result<Vec<InertiaGroup>, TheoremError> {
    use InertiaGroup::*;
    match (parity, char_class) {
        (Parity::Odd, _) => Ok(vec![Trivial, Iota, Beta, Whole]),
        (Parity::Even, CharClass::NotTwo) => Ok(vec![Trivial, Iota, Beta, IotaBeta]),
        (Parity::Even, CharClass::Two) => {
            Err(TheoremError::UncoveredByLemma { parity, char_class })
        }
    }
}
