use proptest::prelude::*;
use superqa::scalar::LaurentInt;
use superqa::tangle::{
    cross_check_cyclotomic, invariant_braid, invariant_tangle, knot_db, knot_lookup,
    skein_recursion, skein_verify, torus2_formula, BraidSpec, CapKind, CrossSign, CupKind,
    KnotStatus, MorseTangle, Orient, Piece,
};

fn lp(s: &str) -> LaurentInt {
    s.parse().unwrap()
}

fn braid(strands: usize, word: &[i32]) -> BraidSpec {
    BraidSpec::new(strands, word.to_vec()).unwrap()
}

#[test]
fn knot_table_reproduced() {
    let mut evaluated = 0;
    for entry in knot_db() {
        let Some(b) = &entry.braid else {
            assert_eq!(entry.status, KnotStatus::Unconfirmed, "{}", entry.name);
            continue;
        };
        assert_eq!(
            b.components(),
            if entry.name.contains('^') { 2 } else { 1 },
            "{}",
            entry.name
        );
        assert_eq!(
            invariant_braid(b).unwrap(),
            entry.expected,
            "{}",
            entry.name
        );
        evaluated += 1;
    }
    assert_eq!(evaluated, 19);
}

#[test]
fn knot_lookup_by_name_and_alias() {
    assert_eq!(knot_lookup("3_1").unwrap().expected, lp("2q^2+4q+3"));
    assert_eq!(
        knot_lookup("10_132").unwrap().expected,
        lp("4q^2+4q-3+10q^-2+8q^-3+2q^-4")
    );
    assert_eq!(knot_lookup("10_132").unwrap().status, KnotStatus::Reference);
    assert!(knot_lookup("no_such_knot").is_err());
    for entry in knot_db() {
        for alias in &entry.aliases {
            assert_eq!(knot_lookup(alias).unwrap().name, entry.name);
        }
    }
}

#[test]
fn torus_links_match_closed_form() {
    for b in -15..=15i64 {
        let word = vec![if b > 0 { 1 } else { -1 }; b.unsigned_abs() as usize];
        let value = if b == 0 {
            // The split two-component unlink.
            invariant_braid(&braid(2, &[])).unwrap()
        } else {
            invariant_braid(&braid(2, &word)).unwrap()
        };
        assert_eq!(value, torus2_formula(b), "T(2,{b})");
    }
}

#[test]
fn torus_links_match_skein_recursion() {
    for b in -50..=50i64 {
        assert_eq!(skein_recursion(b).unwrap(), torus2_formula(b), "T(2,{b})");
    }
}

#[test]
fn torus_formula_values() {
    assert_eq!(torus2_formula(1), LaurentInt::one());
    assert_eq!(torus2_formula(2), lp("-2q-2"));
    assert_eq!(torus2_formula(3), lp("2q^2+4q+3"));
    assert_eq!(torus2_formula(-3), lp("3+4q^-1+2q^-2"));
    assert_eq!(torus2_formula(0), LaurentInt::zero());
}

fn parsed<S: AsRef<str>>(v: &[S]) -> Vec<LaurentInt> {
    v.iter().map(|x| lp(x.as_ref())).collect()
}

#[test]
fn skein_report() {
    let r = skein_verify().unwrap();
    // (x - 1)^2 (x - q^-1), low degree first.
    assert_eq!(
        parsed(&r.min_poly),
        parsed(&["-q^-1", "1+2q^-1", "-2-q^-1", "1"])
    );
    // x^3 + (2 + q^-1) x^2 + (1 + 2 q^-1) x + q^-1
    assert_eq!(
        parsed(&r.signed_min_poly),
        parsed(&["q^-1", "1+2q^-1", "2+q^-1", "1"])
    );
    assert_eq!(r.end_dim, 3);
    assert_eq!(r.e_rank, 4);
    assert!(r.e_is_projection);
    assert!(r.spans_endomorphisms);
    assert_eq!(r.twist, "-1");
    let spec: Vec<(LaurentInt, usize, usize)> = r
        .spectrum
        .iter()
        .map(|e| (lp(&e.value), e.geometric, e.algebraic))
        .collect();
    assert_eq!(spec.len(), 2);
    assert!(spec.contains(&(LaurentInt::one(), 9, 12)));
    assert!(spec.contains(&(lp("q^-1"), 4, 4)));
}

#[test]
fn morse_and_braid_closures_agree() {
    for entry in knot_db() {
        let Some(b) = &entry.braid else { continue };
        if b.strands > 4 {
            continue;
        }
        let t = b.to_morse().unwrap();
        assert_eq!(t.writhe(), b.writhe());
        assert_eq!(t.components().unwrap(), b.components());
        assert_eq!(
            invariant_tangle(&t).unwrap(),
            entry.expected,
            "{}",
            entry.name
        );
    }
}

#[test]
fn morse_json_round_trip() {
    let t = braid(3, &[1, -2, 1, -2]).to_morse().unwrap();
    let back = MorseTangle::from_json(&t.to_json()).unwrap();
    assert_eq!(back, t);
    assert!(MorseTangle::from_json("[[{\"id\":\"up\"},{\"id\":\"up\"}]]").is_err());
    assert!(MorseTangle::from_json("not json").is_err());
}

fn id(o: Orient) -> Piece {
    Piece::Id { id: o }
}

#[test]
fn curls_are_framing_corrected() {
    use Orient::{Down, Up};
    for x in [CrossSign::Pos, CrossSign::Neg] {
        let right = MorseTangle {
            slices: vec![
                vec![id(Up), Piece::Cup { cup: CupKind::Coev }],
                vec![
                    Piece::Cross {
                        x,
                        orient: [Up, Up],
                    },
                    id(Down),
                ],
                vec![
                    id(Up),
                    Piece::Cap {
                        cap: CapKind::EvRight,
                    },
                ],
            ],
        };
        let left = MorseTangle {
            slices: vec![
                vec![
                    Piece::Cup {
                        cup: CupKind::CoevRight,
                    },
                    id(Up),
                ],
                vec![
                    id(Down),
                    Piece::Cross {
                        x,
                        orient: [Up, Up],
                    },
                ],
                vec![Piece::Cap { cap: CapKind::Ev }, id(Up)],
            ],
        };
        for t in [right, left] {
            assert_eq!(t.writhe().abs(), 1);
            assert_eq!(invariant_tangle(&t).unwrap(), LaurentInt::one());
        }
    }
}

/// Right curl whose crossing joins the through strand to a downward arc,
/// optionally preceded by a cancelling pair of mixed crossings.
fn mixed_curl(with_pair: bool) -> MorseTangle {
    use Orient::{Down, Up};
    let pos = Piece::Cross {
        x: CrossSign::Pos,
        orient: [Up, Down],
    };
    let neg = Piece::Cross {
        x: CrossSign::Neg,
        orient: [Down, Up],
    };
    let mut slices = vec![vec![id(Up), Piece::Cup { cup: CupKind::Coev }]];
    if with_pair {
        slices.push(vec![id(Up), pos]);
        slices.push(vec![id(Up), neg]);
    }
    slices.push(vec![id(Up), pos]);
    slices.push(vec![
        Piece::Cap {
            cap: CapKind::EvRight,
        },
        id(Up),
    ]);
    MorseTangle { slices }
}

#[test]
fn mixed_orientation_moves() {
    for with_pair in [false, true] {
        let t = mixed_curl(with_pair);
        assert_eq!(t.writhe(), -1);
        assert_eq!(t.components().unwrap(), 1);
        assert_eq!(invariant_tangle(&t).unwrap(), LaurentInt::one());
    }
}

#[test]
fn cut_strand_independence() {
    for entry in knot_db() {
        let Some(b) = &entry.braid else { continue };
        if b.strands > 4 {
            continue;
        }
        for cut in 0..b.strands {
            let c = BraidSpec::with_cut(b.strands, b.word.clone(), cut).unwrap();
            assert_eq!(
                invariant_braid(&c).unwrap(),
                entry.expected,
                "{} cut {cut}",
                entry.name
            );
        }
    }
}

#[test]
fn mirror_law_on_table() {
    for entry in knot_db() {
        let Some(b) = &entry.braid else { continue };
        assert_eq!(
            invariant_braid(&b.mirror()).unwrap(),
            entry.expected.mirror(),
            "{}",
            entry.name
        );
    }
}

#[test]
fn symbolic_specializes_to_root_of_unity() {
    for order in [8, 12] {
        for entry in knot_db() {
            let Some(b) = &entry.braid else { continue };
            let (symbolic, direct) = cross_check_cyclotomic(b, order).unwrap();
            assert_eq!(symbolic, direct, "{} at N = {order}", entry.name);
        }
    }
}

#[test]
fn invalid_braids_are_rejected() {
    assert!(BraidSpec::new(2, vec![2]).is_err());
    assert!(BraidSpec::new(3, vec![0]).is_err());
    assert!(BraidSpec::with_cut(3, vec![1], 3).is_err());
    assert_eq!(BraidSpec::parse_word("1, -2,1").unwrap(), vec![1, -2, 1]);
    assert!(BraidSpec::parse_word("1,x").is_err());
}

fn word_strategy(strands: usize, max_len: usize) -> impl Strategy<Value = Vec<i32>> {
    let g = strands as i32 - 1;
    prop::collection::vec(
        (1..=g, any::<bool>()).prop_map(|(i, s)| if s { i } else { -i }),
        0..=max_len,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn markov_conjugation(word in word_strategy(3, 6), g in word_strategy(3, 1)) {
        prop_assume!(!g.is_empty());
        let base = invariant_braid(&braid(3, &word)).unwrap();
        let mut conj = g.clone();
        conj.extend(&word);
        conj.push(-g[0]);
        prop_assert_eq!(invariant_braid(&braid(3, &conj)).unwrap(), base);
    }

    #[test]
    fn markov_stabilization(word in word_strategy(3, 6), positive in any::<bool>()) {
        let base = invariant_braid(&braid(3, &word)).unwrap();
        let mut stab = word.clone();
        stab.push(if positive { 3 } else { -3 });
        prop_assert_eq!(invariant_braid(&braid(4, &stab)).unwrap(), base);
    }

    #[test]
    fn mirror_law_random(word in word_strategy(3, 7)) {
        let b = braid(3, &word);
        prop_assert_eq!(invariant_braid(&b.mirror()).unwrap(), invariant_braid(&b).unwrap().mirror());
    }

    #[test]
    fn cut_independence_random(word in word_strategy(3, 7), cut in 0usize..3) {
        let b = BraidSpec::with_cut(3, word.clone(), cut).unwrap();
        prop_assert_eq!(invariant_braid(&b).unwrap(), invariant_braid(&braid(3, &word)).unwrap());
    }

    #[test]
    fn morse_matches_trace_random(word in word_strategy(3, 5), cut in 0usize..3) {
        let b = BraidSpec::with_cut(3, word, cut).unwrap();
        prop_assert_eq!(invariant_tangle(&b.to_morse().unwrap()).unwrap(), invariant_braid(&b).unwrap());
    }
}
