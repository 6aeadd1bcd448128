use deckkit::deck::{count_induced, deck_profile, CardShape};
use deckkit::graph::{enumerate_maxdeg2, parse_spec, AnyGraph, Component, MaxDeg2Graph};
use deckkit::recon::{
    degree_data_from_deck, gen_equal_pair, reconstruct, rho_formula, rho_search, ImpostorFamily,
    Method, Outcome, PairKind, Universe,
};
use num_bigint::BigInt;

fn nonisomorphic(a: &AnyGraph, b: &AnyGraph) -> bool {
    match (a, b) {
        (AnyGraph::MaxDeg2(x), AnyGraph::MaxDeg2(y)) => x != y,
        _ => {
            let (x, y) = (a.to_general().unwrap(), b.to_general().unwrap());
            x.degree_list() != y.degree_list() || x.edge_count() != y.edge_count() || {
                let cx = deckkit::graph::canonical_code(&x);
                let cy = deckkit::graph::canonical_code(&y);
                matches!((cx, cy), (Ok(cx), Ok(cy)) if cx != cy)
            }
        }
    }
}

#[test]
fn long_path_count_from_cards() {
    for n in 1..=12 {
        for g in enumerate_maxdeg2(n) {
            for k in 2..=n.min(7) {
                let s = |shape: CardShape| BigInt::from(count_induced(&g, &shape).unwrap());
                let lhs = g
                    .components()
                    .iter()
                    .filter(|c| matches!(c, Component::Path(l) if *l + 1 >= k))
                    .count();
                let cycles = if k >= 3 {
                    s(CardShape::cycle(k))
                } else {
                    BigInt::from(0)
                };
                let rhs = s(CardShape::path(k - 1)) - s(CardShape::path(k)) - k * cycles;
                assert_eq!(BigInt::from(lhs), rhs, "{g}, k={k}");
            }
        }
    }
}

#[test]
fn round_trip_at_the_formula_value() {
    for n in 1..=11 {
        for g in enumerate_maxdeg2(n) {
            let report = rho_formula(&g).unwrap();
            // Below order 6 the formula can undershoot; search decides there.
            let k = if report.small_graph_anomaly {
                rho_search(&g, Universe::MaxDeg2).unwrap()
            } else {
                report.rho
            };
            let r = reconstruct(&deck_profile(&g, k).unwrap(), n).unwrap();
            assert_eq!(r.unique(), Some(&g), "{g} at k={k}");
        }
    }
}

#[test]
fn paths_and_cycles_are_ambiguous_one_below() {
    for n in 6..=11 {
        for g in [
            MaxDeg2Graph::path(n).unwrap(),
            MaxDeg2Graph::cycle(n).unwrap(),
        ] {
            let k = rho_formula(&g).unwrap().rho;
            let r = reconstruct(&deck_profile(&g, k - 1).unwrap(), n).unwrap();
            assert!(
                matches!(&r.outcome, Outcome::Ambiguous(gs) if gs.contains(&g)),
                "{g}"
            );
        }
    }
}

#[test]
fn card_count_route_and_search_agree() {
    for n in 1..=10 {
        for g in enumerate_maxdeg2(n) {
            for k in 1..=n.min(6) {
                let r = reconstruct(&deck_profile(&g, k).unwrap(), n).unwrap();
                assert!(r.candidates().contains(&g), "{g}, k={k}");
                if r.method == Method::CardCounts {
                    assert_eq!(r.unique(), Some(&g));
                }
            }
        }
    }
}

#[test]
fn degree_data_examples() {
    let data = |spec: &str| {
        let g = parse_spec(spec).unwrap();
        let d = degree_data_from_deck(&deck_profile(&g, 3).unwrap(), g.order()).unwrap();
        (d.edges.to_string(), d.incidences.to_string())
    };
    assert_eq!(data("C6"), ("6".into(), "6".into()));
    assert_eq!(data("P5"), ("4".into(), "3".into()));
    assert_eq!(data("3P1"), ("0".into(), "0".into()));
}

#[test]
fn witness_pairs_are_sound() {
    let mut kinds = Vec::new();
    for k in 1..=6usize {
        for q in 1..=2 * k + 3 {
            for r in 1..=2 * k + 3 {
                if q + r > 24 {
                    continue;
                }
                if q >= (k + 1).max(3) && r >= (k + 1).max(3) {
                    kinds.push(PairKind::Fact1 { q, r, k });
                }
                if q >= (k + 1).max(3) && r + 1 >= k {
                    kinds.push(PairKind::Fact2 { q, r, k });
                }
                if q >= k.max(2) && r >= k.max(2) && q != r {
                    kinds.push(PairKind::Fact3 { q, r, k });
                }
            }
        }
    }
    kinds.extend((3..=24).map(|n| PairKind::Connectedness { n }));
    for m in 4..=9 {
        kinds.push(PairKind::Degree3Impostor(
            ImpostorFamily::CycleWithIsolated { m },
        ));
    }
    for m in 5..=9 {
        kinds.push(PairKind::Degree3Impostor(
            ImpostorFamily::PathWithIsolated { m },
        ));
    }
    kinds.push(PairKind::Degree3Impostor(ImpostorFamily::Paw));
    kinds.push(PairKind::Degree3Impostor(ImpostorFamily::CompleteFour));
    for kind in kinds {
        let p = gen_equal_pair(kind).unwrap();
        let (a, b) = p.decks().unwrap();
        assert_eq!(a, b, "{kind:?}");
        assert!(nonisomorphic(&p.a, &p.b), "{kind:?}");
        // The smaller cycle is a card of only one side one size up.
        let separates = match kind {
            PairKind::Fact1 { q, r, k } | PairKind::Fact2 { q, r, k } => {
                q == k + 1 || (r == k + 1 && matches!(kind, PairKind::Fact1 { .. }))
            }
            PairKind::Connectedness { .. } => true,
            _ => false,
        };
        if separates && p.k < p.a.order() {
            let (a, b) = p.decks_at(p.k + 1).unwrap();
            assert_ne!(a, b, "{kind:?} at k+1");
        }
    }
}

#[test]
fn impostors_have_different_degrees() {
    for m in 4..=9 {
        let p = gen_equal_pair(PairKind::Degree3Impostor(
            ImpostorFamily::CycleWithIsolated { m },
        ))
        .unwrap();
        let (da, db) = (
            deckkit::graph::degree_list(&p.a),
            deckkit::graph::degree_list(&p.b),
        );
        assert_ne!(da, db);
        assert_eq!(da.iter().max(), Some(&2));
        assert_eq!(db.iter().max(), Some(&3));
    }
}

#[test]
fn cycle_plus_vertex_three_deck_counts() {
    // Recorded values: P2+P1 cards in C_m + P_1 number m(m-3).
    for m in 4..=12 {
        let g = MaxDeg2Graph::new(vec![Component::Cycle(m), Component::Path(1)]).unwrap();
        let d = deck_profile(&g, 3).unwrap();
        let count = d.count(&CardShape::Linear(parse_spec("P2+P1").unwrap()));
        assert_eq!(count, (m * (m - 3)).into(), "C{m}+P1");
    }
}

#[test]
fn degree_three_impostor_counts() {
    let counts = |fam| {
        let p = gen_equal_pair(PairKind::Degree3Impostor(fam)).unwrap();
        let (a, b) = p.decks().unwrap();
        assert_eq!(a, b);
        [
            CardShape::cycle(3),
            CardShape::path(3),
            CardShape::Linear(parse_spec("P2+P1").unwrap()),
        ]
        .map(|s| a.count(&s).to_string())
    };
    assert_eq!(counts(ImpostorFamily::Paw), ["1", "2", "29"]);
    assert_eq!(counts(ImpostorFamily::CompleteFour), ["4", "0", "156"]);
}
