use super::{charpoly_cases, CharPolyResult};

/// Every admissible `(n, nbar)` for genus `g`, ordered by `n` then `nbar`.
///
/// Every admissible `nbar` divides one of `2g`, `2g+1`, `2g+2`, so the
/// search stops at `2g + 2`.
pub fn classify(g: u64) -> Vec<CharPolyResult> {
    let mut entries: Vec<CharPolyResult> = (1..=2 * g + 2)
        .flat_map(|nbar| [nbar, 2 * nbar].map(move |n| (n, nbar)))
        .filter_map(|(n, nbar)| charpoly_cases(g, n, nbar).ok())
        .collect();
    entries.sort_by_key(|r| (r.triple.n, r.triple.nbar));
    entries
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_two_pairs() {
        let pairs: Vec<(u64, u64)> = classify(2)
            .iter()
            .map(|r| (r.triple.n, r.triple.nbar))
            .collect();
        assert_eq!(
            pairs,
            vec![
                (1, 1),
                (2, 1),
                (2, 2),
                (3, 3),
                (4, 2),
                (5, 5),
                (6, 3),
                (6, 6),
                (8, 4),
                (10, 5)
            ]
        );
    }

    #[test]
    fn genus_three_has_ambiguous_involution() {
        let entries = classify(3);
        let inv = entries
            .iter()
            .find(|r| r.triple.n == 2 && r.triple.nbar == 2)
            .unwrap();
        assert!(inv.is_ambiguous());
    }

    #[test]
    fn below_genus_two_is_empty() {
        assert!(classify(1).is_empty());
        assert!(classify(0).is_empty());
    }
}
