use std::collections::BTreeMap;

use deckkit::deck::deck_profile;
use deckkit::graph::{canonical_code, enumerate_maxdeg2, parse_spec, Component};
use deckkit::oracle::find_equivalence_classes;
use deckkit::recon::Universe;

#[test]
fn larger_cards_refine_smaller_ones() {
    for n in 3..=12 {
        let reports: Vec<_> = (1..=n.min(6))
            .map(|k| find_equivalence_classes(n, k, Universe::MaxDeg2).unwrap())
            .collect();
        for w in reports.windows(2) {
            assert!(w[1].refines(&w[0]), "maxdeg2 n={n}, k={}", w[1].k);
        }
    }
    for n in 3..=6 {
        let reports: Vec<_> = (1..n)
            .map(|k| find_equivalence_classes(n, k, Universe::GENERAL).unwrap())
            .collect();
        for w in reports.windows(2) {
            assert!(w[1].refines(&w[0]), "general n={n}, k={}", w[1].k);
        }
    }
}

#[test]
fn long_components_group_by_edge_count() {
    for n in 2..=16 {
        for k in 2..=n.min(5) {
            let mut by_deck: BTreeMap<String, Vec<usize>> = BTreeMap::new();
            let mut by_edges: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            let graphs: Vec<_> = enumerate_maxdeg2(n)
                .into_iter()
                .filter(|g| {
                    g.components().iter().all(|c| match *c {
                        Component::Cycle(l) => l > k,
                        Component::Path(l) => l + 1 >= k,
                    })
                })
                .collect();
            for (i, g) in graphs.iter().enumerate() {
                by_deck
                    .entry(deck_profile(g, k).unwrap().to_json())
                    .or_default()
                    .push(i);
                by_edges.entry(g.edge_count()).or_default().push(i);
            }
            let mut a: Vec<_> = by_deck.into_values().collect();
            let mut b: Vec<_> = by_edges.into_values().collect();
            a.sort();
            b.sort();
            assert_eq!(a, b, "n={n}, k={k}");
        }
    }
}

#[test]
fn five_vertex_three_deck_classes() {
    let r = find_equivalence_classes(5, 3, Universe::GENERAL).unwrap();
    assert_eq!(r.graphs, 34);
    assert_eq!(r.classes.len(), 2);
    for class in &r.classes {
        assert_eq!(class.len(), 2);
        assert_eq!(class[0].edges, class[1].edges);
    }
    // P5 and C4+P1 are told apart by their P3 cards (three against four).
    let label = |spec: &str| {
        canonical_code(&parse_spec(spec).unwrap().to_general().unwrap())
            .unwrap()
            .to_string()
    };
    let (p5, c4p1) = (label("P5"), label("C4+P1"));
    assert!(!r
        .classes
        .iter()
        .any(|c| c.iter().any(|m| m.label == p5) && c.iter().any(|m| m.label == c4p1)));
}

#[test]
fn six_vertex_five_deck_survey() {
    let r = find_equivalence_classes(6, 5, Universe::GENERAL).unwrap();
    assert_eq!(r.graphs, 156);
    assert!(r.refines(&find_equivalence_classes(6, 4, Universe::GENERAL).unwrap()));
    for class in &r.classes {
        assert!(class.windows(2).all(|w| w[0].edges == w[1].edges));
    }
}

#[test]
fn maxdeg2_classes_sit_inside_general_ones() {
    for (n, k) in [(5, 3), (6, 3), (7, 3), (7, 4), (8, 4)] {
        let general = find_equivalence_classes(n, k, Universe::GENERAL).unwrap();
        let maxdeg2 = find_equivalence_classes(n, k, Universe::MaxDeg2).unwrap();
        for class in &maxdeg2.classes {
            let codes: Vec<String> = class
                .iter()
                .map(|m| {
                    let g = parse_spec(&m.label).unwrap().to_general().unwrap();
                    canonical_code(&g).unwrap().to_string()
                })
                .collect();
            assert!(
                general
                    .classes
                    .iter()
                    .any(|c| codes.iter().all(|x| c.iter().any(|m| &m.label == x))),
                "n={n}, k={k}: {codes:?}"
            );
        }
    }
}
