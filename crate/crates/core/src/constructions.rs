//! Explicit total dominator colorings of `KG(n, 2)` and the canonical
//! optimal proper coloring.
//!
//! All colorings here index vertices of `kneser_graph(n, 2)`, i.e. pairs in
//! lexicographic order. Class order follows the construction, not the
//! serialization order.

use crate::coloring::Coloring;
use crate::error::{Error, Result};

/// Lexicographic rank of the pair `{a, b}` (`a < b`) among the 2-subsets
/// of `{1..n}`.
pub fn pair_index(n: u32, a: u32, b: u32) -> usize {
    debug_assert!(1 <= a && a < b && b <= n);
    let (n, a, b) = (n as usize, a as usize, b as usize);
    (a - 1) * n - a * (a - 1) / 2 + (b - a - 1)
}

fn coloring_from_pair_classes(n: u32, classes: &[Vec<(u32, u32)>]) -> Coloring {
    let order = (n as usize) * (n as usize - 1) / 2;
    let index_classes: Vec<Vec<usize>> = classes
        .iter()
        .map(|class| class.iter().map(|&(a, b)| pair_index(n, a, b)).collect())
        .collect();
    Coloring::from_classes(order, &index_classes).expect("construction classes partition the pairs")
}

/// The six fixed base classes shared by every construction with `n >= 6`;
/// they cover exactly the fifteen pairs inside `{1..6}`.
const BASE_SIX: [&[(u32, u32)]; 6] = [
    &[(1, 2)],
    &[(3, 4)],
    &[(2, 5), (2, 6), (5, 6)],
    &[(1, 5), (1, 6)],
    &[(1, 3), (2, 3), (3, 5), (3, 6)],
    &[(1, 4), (2, 4), (4, 5), (4, 6)],
];

fn general_classes(n: u32) -> Vec<Vec<(u32, u32)>> {
    let mut classes: Vec<Vec<(u32, u32)>> = BASE_SIX.iter().map(|c| c.to_vec()).collect();
    // class i takes every pair on symbol i not used by an earlier class:
    // {i,k} for k <= 6 and for k > i
    for i in 7..=n {
        let mut class: Vec<(u32, u32)> = (1..=6).map(|k| (k, i)).collect();
        class.extend((i + 1..=n).map(|k| (i, k)));
        classes.push(class);
    }
    classes
}

/// The tabulated total dominator coloring for `5 <= n <= 9`: 6 classes for
/// `n = 5` and `n = 6`, otherwise `n` classes.
pub fn table1_coloring(n: u32) -> Result<Coloring> {
    match n {
        5 => {
            let classes: Vec<Vec<(u32, u32)>> = vec![
                vec![(1, 2)],
                vec![(3, 4)],
                vec![(2, 5)],
                vec![(1, 5)],
                vec![(1, 3), (2, 3), (3, 5)],
                vec![(1, 4), (2, 4), (4, 5)],
            ];
            Ok(coloring_from_pair_classes(5, &classes))
        }
        6..=9 => Ok(coloring_from_pair_classes(n, &general_classes(n))),
        _ => Err(Error::InvalidParameter(format!(
            "tabulated colorings cover 5 <= n <= 9, got n={n}"
        ))),
    }
}

/// The general n-class total dominator coloring of `KG(n, 2)` for `n >= 7`:
/// six fixed base classes plus one residual star per symbol `7..=n`.
pub fn general_tdc(n: u32) -> Result<Coloring> {
    if n < 7 {
        return Err(Error::InvalidParameter(format!(
            "the general model needs n >= 7, got n={n}"
        )));
    }
    if n > 64 {
        return Err(Error::InvalidParameter(format!(
            "ground set capped at 64 symbols, got n={n}"
        )));
    }
    Ok(coloring_from_pair_classes(n, &general_classes(n)))
}

/// A minimum proper coloring of `KG(n, 2)` in canonical position for
/// `n >= 5`: stars `F_i = {{i,j} : j > i}` for `i <= n-3` and the triangle
/// on `{n-2, n-1, n}`. Optimal (`n - 2` classes) but never total dominator.
pub fn canonical_optimal_coloring(n: u32) -> Result<Coloring> {
    if n < 5 {
        return Err(Error::InvalidParameter(format!(
            "canonical optimal coloring needs n >= 5, got n={n}"
        )));
    }
    if n > 64 {
        return Err(Error::InvalidParameter(format!(
            "ground set capped at 64 symbols, got n={n}"
        )));
    }
    let mut classes: Vec<Vec<(u32, u32)>> = (1..=n - 3)
        .map(|i| (i + 1..=n).map(|j| (i, j)).collect())
        .collect();
    classes.push(vec![(n - 2, n - 1), (n - 2, n), (n - 1, n)]);
    Ok(coloring_from_pair_classes(n, &classes))
}

/// Dispatch: the known-optimal total dominator coloring of `KG(n, 2)` for
/// `n >= 5` (6 classes for `n` in `{5, 6}`, else `n` classes).
pub fn construct_tdc(n: u32) -> Result<Coloring> {
    match n {
        0..=4 => Err(Error::InvalidParameter(format!(
            "total dominator colorings are constructed for n >= 5, got n={n}"
        ))),
        5 | 6 => table1_coloring(n),
        _ => general_tdc(n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{is_proper, is_total_dominator, symbol_class_counts};
    use crate::graph::{kneser_graph, PairVertex, Symbol};

    fn class_pairs(n: u32, c: &Coloring) -> Vec<Vec<PairVertex>> {
        let g = kneser_graph(n, 2).unwrap();
        c.labeled_classes(&g).unwrap()
    }

    fn pairs(entries: &[(u32, u32)]) -> Vec<PairVertex> {
        entries.iter().map(|&(a, b)| PairVertex::new(a, b).unwrap()).collect()
    }

    #[test]
    fn pair_index_is_lexicographic() {
        let g = kneser_graph(7, 2).unwrap();
        let labels = g.pair_labels().unwrap();
        for (idx, p) in labels.iter().enumerate() {
            assert_eq!(pair_index(7, p.lo().get(), p.hi().get()), idx);
        }
    }

    #[test]
    fn table_row_5_is_frozen() {
        let c = table1_coloring(5).unwrap();
        assert_eq!(c.k(), 6);
        let classes = class_pairs(5, &c);
        assert_eq!(classes[0], pairs(&[(1, 2)]));
        assert_eq!(classes[1], pairs(&[(3, 4)]));
        assert_eq!(classes[2], pairs(&[(2, 5)]));
        assert_eq!(classes[3], pairs(&[(1, 5)]));
        assert_eq!(classes[4], pairs(&[(1, 3), (2, 3), (3, 5)]));
        assert_eq!(classes[5], pairs(&[(1, 4), (2, 4), (4, 5)]));
    }

    #[test]
    fn table_row_6_is_frozen() {
        let c = table1_coloring(6).unwrap();
        assert_eq!(c.k(), 6);
        let classes = class_pairs(6, &c);
        assert_eq!(classes[2], pairs(&[(2, 5), (2, 6), (5, 6)]));
        assert_eq!(classes[3], pairs(&[(1, 5), (1, 6)]));
        assert_eq!(classes[4], pairs(&[(1, 3), (2, 3), (3, 5), (3, 6)]));
        assert_eq!(classes[5], pairs(&[(1, 4), (2, 4), (4, 5), (4, 6)]));
    }

    #[test]
    fn table_rows_verify_as_total_dominator() {
        for n in 5..=9u32 {
            let g = kneser_graph(n, 2).unwrap();
            let c = table1_coloring(n).unwrap();
            let expected_k = if n <= 6 { 6 } else { n as usize };
            assert_eq!(c.k(), expected_k, "n={n}");
            assert!(is_proper(&g, &c).unwrap(), "n={n}");
            assert!(is_total_dominator(&g, &c).unwrap(), "n={n}");
        }
        assert!(table1_coloring(4).is_err());
        assert!(table1_coloring(10).is_err());
    }

    #[test]
    fn residual_class_of_row_8() {
        let c = table1_coloring(8).unwrap();
        assert_eq!(c.k(), 8);
        let classes = class_pairs(8, &c);
        assert_eq!(
            classes[6],
            pairs(&[(1, 7), (2, 7), (3, 7), (4, 7), (5, 7), (6, 7), (7, 8)])
        );
        assert_eq!(classes[7], pairs(&[(1, 8), (2, 8), (3, 8), (4, 8), (5, 8), (6, 8)]));
    }

    #[test]
    fn general_model_matches_table_and_scales() {
        for n in 7..=9u32 {
            assert_eq!(general_tdc(n).unwrap(), table1_coloring(n).unwrap());
        }
        assert!(general_tdc(6).is_err());
        let c = general_tdc(12).unwrap();
        assert_eq!(c.k(), 12);
        let g = kneser_graph(12, 2).unwrap();
        assert!(is_total_dominator(&g, &c).unwrap());
    }

    #[test]
    fn frozen_symbol_counts_on_row_6() {
        // symbol 5 meets classes V3 (25), V4 (15), V5 (35), V6 (45)
        let g = kneser_graph(6, 2).unwrap();
        let c = table1_coloring(6).unwrap();
        let counts = symbol_class_counts(&g, &c).unwrap();
        assert_eq!(counts[&Symbol::new(5).unwrap()], 4);
    }

    #[test]
    fn canonical_optimal_is_frozen_and_not_tdc() {
        let c = canonical_optimal_coloring(6).unwrap();
        assert_eq!(c.k(), 4);
        let classes = class_pairs(6, &c);
        assert_eq!(classes[0], pairs(&[(1, 2), (1, 3), (1, 4), (1, 5), (1, 6)]));
        assert_eq!(classes[1], pairs(&[(2, 3), (2, 4), (2, 5), (2, 6)]));
        assert_eq!(classes[2], pairs(&[(3, 4), (3, 5), (3, 6)]));
        assert_eq!(classes[3], pairs(&[(4, 5), (4, 6), (5, 6)]));
        let g = kneser_graph(6, 2).unwrap();
        assert!(is_proper(&g, &c).unwrap());
        assert!(!is_total_dominator(&g, &c).unwrap());
        assert!(canonical_optimal_coloring(4).is_err());
    }

    #[test]
    fn dispatch_class_counts() {
        assert_eq!(construct_tdc(5).unwrap().k(), 6);
        assert_eq!(construct_tdc(6).unwrap().k(), 6);
        assert_eq!(construct_tdc(7).unwrap().k(), 7);
        assert_eq!(construct_tdc(11).unwrap().k(), 11);
        assert!(construct_tdc(4).is_err());
        for n in 7..=9u32 {
            assert_eq!(construct_tdc(n).unwrap(), table1_coloring(n).unwrap());
        }
    }
}
