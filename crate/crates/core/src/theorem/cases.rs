use crate::exactpoly::{Poly, PolyError};

use super::{CaseTag, CharPolyResult, GenusFloor, TheoremCase, TheoremError, Triple};

fn inadmissible(triple: Triple, reason: impl Into<String>) -> TheoremError {
    TheoremError::InadmissibleTriple {
        triple,
        reason: reason.into(),
    }
}

/// Residue class of `2g` mod `nbar` among 0, -1, -2, preferring 0 when several
/// coincide (only possible for `nbar <= 2`).
fn congruence_class(g: u64, nbar: u64) -> Option<i8> {
    [(0i8, 2 * g), (-1, 2 * g + 1), (-2, 2 * g + 2)]
        .into_iter()
        .find(|&(_, v)| v % nbar == 0)
        .map(|(c, _)| c)
}

pub fn match_case(g: u64, n: u64, nbar: u64) -> Result<TheoremCase, TheoremError> {
    match_case_with(g, n, nbar, GenusFloor::Hyperelliptic)
}

pub fn match_case_with(
    g: u64,
    n: u64,
    nbar: u64,
    floor: GenusFloor,
) -> Result<TheoremCase, TheoremError> {
    let triple = Triple::new(g, n, nbar);
    if g < floor.min_genus() {
        return Err(inadmissible(
            triple,
            format!("genus must be at least {}", floor.min_genus()),
        ));
    }
    if nbar == 0 || n == 0 {
        return Err(inadmissible(triple, "orders must be positive"));
    }
    let doubled = if n == nbar {
        false
    } else if n == 2 * nbar {
        true
    } else {
        return Err(inadmissible(triple, "n must equal nbar or 2*nbar"));
    };

    if nbar % 2 == 1 {
        let class = congruence_class(g, nbar).ok_or_else(|| {
            inadmissible(
                triple,
                format!("2g = {} is not 0, -1 or -2 mod {nbar}", 2 * g),
            )
        })?;
        let tag = if doubled { CaseTag::A } else { CaseTag::B };
        return Ok(TheoremCase {
            tag,
            congruence_class: class,
        });
    }

    if doubled {
        if !(2 * g).is_multiple_of(nbar) {
            return Err(inadmissible(
                triple,
                format!("2g = {} is not 0 mod {nbar}", 2 * g),
            ));
        }
        return Ok(TheoremCase {
            tag: CaseTag::C,
            congruence_class: 0,
        });
    }

    if !(2 * g + 2).is_multiple_of(nbar) {
        return Err(inadmissible(
            triple,
            format!("2g = {} is not -2 mod {nbar}", 2 * g),
        ));
    }
    let tag = if ((2 * g + 2) / nbar) % 2 == 1 {
        CaseTag::D1
    } else {
        CaseTag::D2
    };
    Ok(TheoremCase {
        tag,
        congruence_class: -2,
    })
}

/// `(x^nbar + sign)^power / denom`.
fn quotient(nbar: u64, sign: i64, power: u64, denom: &Poly) -> Result<Poly, PolyError> {
    Poly::x_pow_plus(nbar as usize, sign)
        .pow(power as u32)
        .exact_div(denom)
}

/// The three odd-`nbar` expressions, indexed by congruence class 0, -1, -2.
/// `sign` is -1 for `n = nbar` and +1 for `n = 2 nbar`.
fn odd_branch(g: u64, nbar: u64, sign: i64, class: i8) -> Result<Poly, PolyError> {
    let linear = Poly::x_pow_plus(1, sign);
    match class {
        0 => quotient(nbar, sign, 2 * g / nbar, &Poly::one()),
        -1 => quotient(nbar, sign, (2 * g + 1) / nbar, &linear),
        -2 => quotient(nbar, sign, (2 * g + 2) / nbar, &linear.pow(2)),
        _ => unreachable!("congruence class is 0, -1 or -2"),
    }
}

pub fn charpoly_cases(g: u64, n: u64, nbar: u64) -> Result<CharPolyResult, TheoremError> {
    charpoly_cases_with(g, n, nbar, GenusFloor::Hyperelliptic)
}

pub fn charpoly_cases_with(
    g: u64,
    n: u64,
    nbar: u64,
    floor: GenusFloor,
) -> Result<CharPolyResult, TheoremError> {
    let case = match_case_with(g, n, nbar, floor)?;
    let minus_one = Poly::x_pow_plus(1, -1);
    let plus_one = Poly::x_pow_plus(1, 1);
    let candidates = match case.tag {
        CaseTag::B | CaseTag::A => {
            let sign = if case.tag == CaseTag::B { -1 } else { 1 };
            if nbar == 1 {
                let all = [0, -1, -2]
                    .into_iter()
                    .map(|c| odd_branch(g, 1, sign, c))
                    .collect::<Result<Vec<_>, _>>()?;
                assert!(
                    all.windows(2).all(|w| w[0] == w[1]),
                    "the three expressions disagree for nbar = 1 at g = {g}"
                );
            }
            vec![odd_branch(g, nbar, sign, case.congruence_class)?]
        }
        CaseTag::D1 => vec![quotient(
            nbar,
            -1,
            (2 * g + 2) / nbar,
            &(&minus_one * &plus_one),
        )?],
        CaseTag::D2 => {
            let k = (2 * g + 2) / nbar;
            vec![
                quotient(nbar, -1, k, &minus_one.pow(2))?,
                quotient(nbar, -1, k, &plus_one.pow(2))?,
            ]
        }
        CaseTag::C => vec![quotient(nbar, 1, 2 * g / nbar, &Poly::one())?],
    };
    Ok(CharPolyResult {
        triple: Triple::new(g, n, nbar),
        case,
        candidates,
    })
}

/// Values of `e1` (points of the base ramified in both covers) that go with
/// each candidate of [`charpoly_cases`], in candidate order.
///
/// Case `C` does not use `e1`; it is reported as 2.
pub fn candidate_e1(case: TheoremCase) -> Vec<u8> {
    match case.tag {
        CaseTag::B | CaseTag::A => vec![class_e1(case.congruence_class)],
        CaseTag::D1 => vec![1],
        CaseTag::D2 => vec![0, 2],
        CaseTag::C => vec![2],
    }
}

fn class_e1(class: i8) -> u8 {
    (class + 2) as u8
}

/// `M_d`, twice the genus of the quotient by `⟨α^d⟩`, computed from the
/// ramification count `e1` without reference to any polynomial.
pub fn predicted_m(g: u64, n: u64, nbar: u64, d: u64, e1: u8) -> Result<u64, TheoremError> {
    let case = match_case(g, n, nbar)?;
    let triple = Triple::new(g, n, nbar);
    if d == 0 || !n.is_multiple_of(d) {
        return Err(TheoremError::NotADivisor { d, n });
    }
    let invalid = || TheoremError::InvalidE1 {
        triple,
        tag: case.tag,
        e1,
    };
    if e1 > 2 {
        return Err(invalid());
    }
    match case.tag {
        CaseTag::B | CaseTag::A => {
            if nbar > 1 && e1 != class_e1(case.congruence_class) {
                return Err(invalid());
            }
            if case.tag == CaseTag::A {
                // α^nbar = ι; odd d puts ι in ⟨α^d⟩, even d reduces to ια
                if d % 2 == 1 {
                    return Ok(0);
                }
                return Ok(odd_cyclic_m(g, nbar, d / 2, e1));
            }
            Ok(odd_cyclic_m(g, nbar, d, e1))
        }
        CaseTag::D1 | CaseTag::D2 => {
            let k = (2 * g + 2) / n;
            if u64::from(e1) % 2 != k % 2 {
                return Err(invalid());
            }
            if d % 2 == 1 {
                Ok(k * d + u64::from(e1) - 2)
            } else {
                Ok(k * d - 2)
            }
        }
        CaseTag::C => {
            if (n / d).is_multiple_of(2) {
                Ok(0)
            } else {
                Ok(2 * g * d / n)
            }
        }
    }
}

/// The odd-order cyclic case, where `e_d = e_1` for every `d`.
fn odd_cyclic_m(g: u64, nbar: u64, d: u64, e1: u8) -> u64 {
    match e1 {
        0 => (2 * g + 2) * d / nbar - 2,
        1 => (2 * g + 1) * d / nbar - 1,
        _ => 2 * g * d / nbar,
    }
}
