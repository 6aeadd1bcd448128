use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::canon::{canonical_code, decode};
use crate::graph::{Component, GeneralGraph, MaxDeg2Graph};

/// Every isomorphism class of `n`-vertex graphs with maximum degree at most
/// 2, in descending canonical order.
pub fn enumerate_maxdeg2(n: usize) -> Vec<MaxDeg2Graph> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend_maxdeg2(n, None, &mut current, &mut out);
    out
}

// Components are appended in non-decreasing canonical order, so each
// multiset is produced once.
fn extend_maxdeg2(
    remaining: usize,
    last: Option<Component>,
    current: &mut Vec<Component>,
    out: &mut Vec<MaxDeg2Graph>,
) {
    if remaining == 0 {
        out.push(MaxDeg2Graph::from_sorted_unchecked(current.clone()));
        return;
    }
    let max_len = last.map_or(remaining, |c| c.order().min(remaining));
    for len in (1..=max_len).rev() {
        for comp in [Component::Cycle(len), Component::Path(len)] {
            if comp.is_cycle() && len < 3 {
                continue;
            }
            if let Some(prev) = last {
                if comp < prev {
                    continue;
                }
            }
            current.push(comp);
            extend_maxdeg2(remaining - len, Some(comp), current, out);
            current.pop();
        }
    }
}

/// Largest order accepted by [`enumerate_general`] without opting in.
pub const GENERAL_DEFAULT_MAX: usize = 8;
/// Largest order accepted at all.
pub const GENERAL_OPT_IN_MAX: usize = 9;

static GENERAL_CACHE: [OnceLock<Vec<GeneralGraph>>; GENERAL_OPT_IN_MAX + 1] =
    [const { OnceLock::new() }; GENERAL_OPT_IN_MAX + 1];

/// One representative per isomorphism class of `n`-vertex graphs, each in
/// its canonical labeling, sorted by canonical code.
///
/// Order 9 (274,668 classes, a few minutes of work) requires
/// `allow_order_nine`. Results are memoized per order.
pub fn enumerate_general(n: usize, allow_order_nine: bool) -> Result<&'static [GeneralGraph]> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "general enumeration needs n >= 1".into(),
        ));
    }
    let limit = if allow_order_nine {
        GENERAL_OPT_IN_MAX
    } else {
        GENERAL_DEFAULT_MAX
    };
    if n > limit {
        return Err(Error::SizeExceeded {
            what: "general enumeration order",
            got: n,
            limit,
        });
    }
    Ok(general_cached(n))
}

fn general_cached(n: usize) -> &'static [GeneralGraph] {
    GENERAL_CACHE[n].get_or_init(|| {
        if n == 1 {
            return vec![GeneralGraph::new(1).unwrap()];
        }
        let smaller = general_cached(n - 1);
        // Deleting any vertex of an n-vertex graph leaves a graph isomorphic
        // to one of the smaller representatives, so every class appears
        // among the one-vertex extensions.
        let mut codes: Vec<u64> = smaller
            .par_iter()
            .flat_map_iter(|base| {
                (0..1u64 << (n - 1)).map(move |nbrs| {
                    let mut rows: Vec<u64> = base.rows().to_vec();
                    rows.push(nbrs);
                    for (v, row) in rows.iter_mut().enumerate().take(n - 1) {
                        *row |= (nbrs >> v & 1) << (n - 1);
                    }
                    let g = GeneralGraph::from_adjacency(rows).expect("valid extension");
                    canonical_code(&g)
                        .expect("order within canonical bound")
                        .bits()
                })
            })
            .collect();
        codes.par_sort_unstable();
        codes.dedup();
        codes.into_iter().map(|bits| decode(n, bits)).collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Independent count: split the vertices between a path part (integer
    /// partitions) and a cycle part (partitions into parts >= 3).
    fn partition_count(n: usize, min_part: usize) -> usize {
        fn go(n: usize, max: usize, min: usize) -> usize {
            if n == 0 {
                return 1;
            }
            (min..=max.min(n)).map(|p| go(n - p, p, min)).sum()
        }
        go(n, n, min_part)
    }

    fn maxdeg2_count(n: usize) -> usize {
        (0..=n)
            .map(|a| partition_count(a, 1) * partition_count(n - a, 3))
            .sum()
    }

    #[test]
    fn order_three() {
        let got: Vec<String> = enumerate_maxdeg2(3).iter().map(|g| g.to_string()).collect();
        assert_eq!(got, vec!["C3", "P3", "P2+P1", "3P1"]);
    }

    #[test]
    fn order_zero_is_empty_graph() {
        assert_eq!(enumerate_maxdeg2(0), vec![MaxDeg2Graph::empty()]);
    }

    #[test]
    fn counts_match_partition_oracle() {
        for n in 0..=16 {
            let all = enumerate_maxdeg2(n);
            assert_eq!(all.len(), maxdeg2_count(n), "n={n}");
            let distinct: HashSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
            assert!(all.iter().all(|g| g.order() == n && g.max_degree() <= 2));
        }
    }

    #[test]
    fn general_counts_are_frozen() {
        let expected = [1, 2, 4, 11, 34, 156, 1044, 12346];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(
                enumerate_general(i + 1, false).unwrap().len(),
                want,
                "n={}",
                i + 1
            );
        }
    }

    // Dedup of every labeled graph reproduces the extension-based catalog.
    #[test]
    fn general_matches_labeled_dedup() {
        for n in 1..=6 {
            let pairs = n * (n - 1) / 2;
            let mut codes: HashSet<u64> = HashSet::new();
            for bits in 0..1u64 << pairs {
                codes.insert(canonical_code(&decode(n, bits)).unwrap().bits());
            }
            let ours: HashSet<u64> = enumerate_general(n, false)
                .unwrap()
                .iter()
                .map(|g| canonical_code(g).unwrap().bits())
                .collect();
            assert_eq!(codes, ours, "n={n}");
        }
    }

    #[test]
    fn general_bounds() {
        assert!(enumerate_general(0, false).is_err());
        assert!(matches!(
            enumerate_general(9, false),
            Err(Error::SizeExceeded { .. })
        ));
        assert!(matches!(
            enumerate_general(10, true),
            Err(Error::SizeExceeded { .. })
        ));
    }
}
