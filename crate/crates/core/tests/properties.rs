use std::collections::BTreeMap;

use autjac::exactpoly::Poly;
use autjac::numtheory::{divisors, euler_phi};
use autjac::spectrum::{poly_from_profile, profile_from_m, profile_from_poly, CyclotomicProfile};
use autjac::theorem::{charpoly_cases, quotient_genus, CaseTag, CharClass, RamConfig};
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-50i64..50, 0..8).prop_map(|c| Poly::from_i64s(&c))
}

fn nonzero_poly() -> impl Strategy<Value = Poly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

/// A random profile of order `n`: each divisor gets some multiple of `φ(d)`.
fn profile() -> impl Strategy<Value = CyclotomicProfile> {
    (1u64..=36).prop_flat_map(|n| {
        let ds = divisors(n);
        prop::collection::vec(0u64..3, ds.len()).prop_map(move |ks| {
            let counts: BTreeMap<u64, u64> = ds
                .iter()
                .zip(ks)
                .filter(|(_, k)| *k > 0)
                .map(|(&d, k)| (d, k * euler_phi(d)))
                .collect();
            CyclotomicProfile::new(n, counts).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn exact_division_undoes_multiplication(a in poly(), b in nonzero_poly()) {
        let prod = &a * &b;
        prop_assert_eq!(prod.exact_div(&b).unwrap(), a);
    }

    #[test]
    fn negation_is_an_involution(a in poly()) {
        prop_assert_eq!(a.substitute_neg().substitute_neg(), a);
    }

    #[test]
    fn degrees_add(a in nonzero_poly(), b in nonzero_poly(), k in 0u32..5) {
        let da = a.degree().finite().unwrap();
        let db = b.degree().finite().unwrap();
        prop_assert_eq!((&a * &b).degree().finite(), Some(da + db));
        prop_assert_eq!(a.pow(k).degree().finite(), Some(da * k as usize));
    }

    #[test]
    fn profiles_round_trip(p in profile()) {
        let f = poly_from_profile(&p);
        prop_assert_eq!(f.degree().finite(), Some(p.degree() as usize));
        prop_assert_eq!(&profile_from_poly(&f, p.order()).unwrap(), &p);
        let m = p.m_values();
        prop_assert_eq!(&profile_from_m(p.order(), &m).unwrap(), &p);
        // M_d only grows along divisibility
        for (&d, &md) in &m {
            for (&e, &me) in &m {
                if e % d == 0 {
                    prop_assert!(me >= md);
                }
            }
        }
    }

    #[test]
    fn quotient_genus_is_monotone_in_g(
        g in 2u64..60,
        m in 1u64..16,
        e in 0u8..=2,
        two in any::<bool>(),
    ) {
        let c = if two { CharClass::Two } else { CharClass::NotTwo };
        let h = |g| RamConfig::new(g, m, e, c).ok().and_then(|cfg| quotient_genus(&cfg).ok());
        if let (Some(a), Some(b)) = (h(g), h(g + 2 * m)) {
            prop_assert!(b >= a);
        }
    }

    #[test]
    fn candidates_are_cyclotomic_of_degree_2g(g in 2u64..40, nbar in 1u64..84, double in any::<bool>()) {
        let n = if double { 2 * nbar } else { nbar };
        if let Ok(res) = charpoly_cases(g, n, nbar) {
            prop_assert_eq!(res.candidates.len(), if res.case.tag == CaseTag::D2 { 2 } else { 1 });
            for f in &res.candidates {
                prop_assert_eq!(f.degree().finite(), Some(2 * g as usize));
                let prof = profile_from_poly(f, n).unwrap();
                prop_assert_eq!(prof.m_values()[&n], 2 * g);
            }
            if res.case.tag == CaseTag::D2 {
                prop_assert_eq!(res.candidates[0].substitute_neg(), res.candidates[1].clone());
            }
        }
    }
}
