use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::deck::DeckProfile;
use crate::error::Result;
use crate::recon::{general_index, maxdeg2_index, Universe};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Member {
    /// Component spec for max-degree-2 graphs, canonical code otherwise.
    pub label: String,
    pub connected: bool,
    pub edges: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub n: usize,
    pub k: usize,
    pub universe: &'static str,
    /// Size of the universe searched.
    pub graphs: usize,
    /// Groups of at least two graphs with equal `k`-decks.
    pub classes: Vec<Vec<Member>>,
}

impl EquivalenceReport {
    /// Whether every class of `self` lies inside a class of `coarser`.
    pub fn refines(&self, coarser: &EquivalenceReport) -> bool {
        let mut owner: BTreeMap<&str, usize> = BTreeMap::new();
        for (i, class) in coarser.classes.iter().enumerate() {
            for m in class {
                owner.insert(&m.label, i);
            }
        }
        self.classes.iter().all(|class| {
            let homes: HashSet<Option<&usize>> =
                class.iter().map(|m| owner.get(m.label.as_str())).collect();
            homes.len() == 1 && !homes.contains(&None)
        })
    }
}

/// Groups decks by fingerprint, then splits each bucket by direct
/// comparison so a hash collision can never merge distinct decks. Classes
/// are ordered by their first member; members keep universe order.
fn group(decks: &[DeckProfile]) -> Vec<Vec<usize>> {
    let mut buckets: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for (i, d) in decks.iter().enumerate() {
        buckets.entry(d.fingerprint()).or_default().push(i);
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for bucket in buckets.into_values() {
        let mut split: Vec<Vec<usize>> = Vec::new();
        for i in bucket {
            match split.iter_mut().find(|c| decks[c[0]] == decks[i]) {
                Some(c) => c.push(i),
                None => split.push(vec![i]),
            }
        }
        classes.extend(split.into_iter().filter(|c| c.len() >= 2));
    }
    classes.sort_by_key(|c| c[0]);
    classes
}

/// Every nontrivial `k`-deck equivalence class among the `n`-vertex graphs
/// of `universe`.
pub fn find_equivalence_classes(
    n: usize,
    k: usize,
    universe: Universe,
) -> Result<EquivalenceReport> {
    let (members, classes) = match universe {
        Universe::MaxDeg2 => {
            let ix = maxdeg2_index(n, k)?;
            let members: Vec<Member> = ix
                .graphs
                .iter()
                .map(|g| Member {
                    label: g.to_string(),
                    connected: g.is_connected(),
                    edges: g.edge_count(),
                })
                .collect();
            (members, group(&ix.decks))
        }
        Universe::General { allow_order_nine } => {
            let ix = general_index(n, k, allow_order_nine)?;
            let members: Vec<Member> = ix
                .graphs
                .iter()
                .map(|g| Member {
                    label: crate::graph::canonical_code(g)
                        .expect("order within bound")
                        .to_string(),
                    connected: g.is_connected(),
                    edges: g.edge_count(),
                })
                .collect();
            (members, group(&ix.decks))
        }
    };
    Ok(EquivalenceReport {
        n,
        k,
        universe: universe.name(),
        graphs: members.len(),
        classes: classes
            .into_iter()
            .map(|c| c.into_iter().map(|i| members[i].clone()).collect())
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn groups_split_by_content() {
        use crate::deck::deck_profile;
        use crate::graph::parse_spec;
        let decks: Vec<DeckProfile> = ["C9", "P9", "C5+C4", "C6+C3"]
            .iter()
            .map(|s| deck_profile(&parse_spec(s).unwrap(), 3).unwrap())
            .collect();
        assert_eq!(group(&decks), vec![vec![0, 2]]);
    }

    #[test]
    fn maxdeg2_nine_three() {
        let r = find_equivalence_classes(9, 3, Universe::MaxDeg2).unwrap();
        let c9 = r.classes.iter().find(|c| c[0].label == "C9").unwrap();
        let labels: Vec<&str> = c9.iter().map(|m| m.label.as_str()).collect();
        assert_eq!(labels, ["C9", "C5+C4"]);
        assert!(c9[0].connected && !c9[1].connected);
    }

    #[test]
    fn refinement() {
        let r3 = find_equivalence_classes(10, 3, Universe::MaxDeg2).unwrap();
        let r4 = find_equivalence_classes(10, 4, Universe::MaxDeg2).unwrap();
        assert!(r4.refines(&r3));
        assert!(!r3.refines(&r4));
    }
}
