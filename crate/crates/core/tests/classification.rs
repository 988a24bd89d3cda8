mod common;

use common::{all_odd_sets, DETERMINANTS};
use superqa::classify::{
    classify_all, classify_with, det_symmetrized, is_nondegenerate, top_degree, RibbonSearch,
};
use superqa::superdata::SuperAData;

fn data(r: usize, odd: &[usize], n: u32) -> SuperAData {
    SuperAData::build(r, odd, n).unwrap()
}

#[test]
fn determinant_tables() {
    for (r, odd, det) in DETERMINANTS {
        assert_eq!(
            det_symmetrized(&data(r, odd, 4)).unwrap(),
            det,
            "r={r} J={odd:?}"
        );
    }
}

#[test]
fn nondegeneracy_examples() {
    assert!(is_nondegenerate(&data(2, &[1, 2], 4)).unwrap());
    for n in [4, 6, 8, 10] {
        assert!(!is_nondegenerate(&data(3, &[1, 2, 3], n)).unwrap());
    }
    assert!(!is_nondegenerate(&data(4, &[1], 6)).unwrap());
}

#[test]
fn determinant_parity_law_and_all_odd_closed_form() {
    for r in 2..=8 {
        for odd in all_odd_sets(r) {
            let d = det_symmetrized(&data(r, &odd, 4)).unwrap();
            if r % 2 == 0 {
                assert!(d % 2 != 0, "r={r} J={odd:?}");
            } else {
                assert!(d % 2 == 0, "r={r} J={odd:?}");
            }
        }
        let all: Vec<usize> = (1..=r).collect();
        let d = det_symmetrized(&data(r, &all, 4)).unwrap();
        let expected = if r % 2 == 1 {
            0
        } else if (r / 2) % 2 == 0 {
            1
        } else {
            -1
        };
        assert_eq!(d, expected, "r={r}");
    }
}

#[test]
fn top_degree_examples() {
    assert_eq!(top_degree(&data(2, &[1, 2], 8)), vec![0, 0]);
    assert_eq!(top_degree(&data(2, &[1], 8)), vec![2, 0]);
    assert_eq!(top_degree(&data(3, &[1, 2, 3], 8)), vec![1, 0, 1]);
}

#[test]
fn classification_examples() {
    let rep = classify_all(&data(2, &[1, 2], 4)).unwrap();
    assert!(rep.unimodular && rep.modular);
    assert_eq!(rep.spherical_pivot, Some(vec![2, 2]));
    assert_eq!(rep.ribbon_count(), 4);
    assert_eq!(rep.ribbon_pairs.iter().filter(|p| p.spherical).count(), 1);

    let rep = classify_all(&data(2, &[1], 6)).unwrap();
    assert!(!rep.unimodular && rep.spherical_pivot.is_none());
    assert_eq!(rep.ribbon_count(), 0);

    let rep = classify_all(&data(3, &[1, 2, 3], 4)).unwrap();
    assert!(!rep.unimodular);
    assert_eq!(rep.ribbon_count(), 0);
}

#[test]
fn ribbon_counts_match_closed_form_up_to_rank_six() {
    for r in 2..=6 {
        for odd in all_odd_sets(r) {
            for n in [4, 6, 8] {
                let d = data(r, &odd, n);
                let search = if r <= 3 {
                    RibbonSearch::Exhaustive
                } else {
                    RibbonSearch::Congruence
                };
                let rep = classify_with(&d, search).unwrap();
                let expected = if odd.len() == r && r % 2 == 0 {
                    1 << r
                } else {
                    0
                };
                assert_eq!(rep.ribbon_count(), expected, "r={r} J={odd:?} N={n}");
                assert_eq!(rep.unimodular, expected > 0);
            }
        }
    }
}

#[test]
fn exhaustive_and_congruence_searches_agree() {
    for odd in all_odd_sets(4) {
        let d = data(4, &odd, 4);
        assert_eq!(
            classify_with(&d, RibbonSearch::Exhaustive).unwrap(),
            classify_with(&d, RibbonSearch::Congruence).unwrap()
        );
    }
}
