//! Canonical labeling of small graphs.
//!
//! The code of a graph is its lexicographically smallest upper-triangle
//! adjacency string over vertex orderings. Pairs are read column by column,
//! `(0,1), (0,2), (1,2), (0,3), ...`, and the first pair is the most
//! significant bit of [`CanonicalCode::bits`], so numeric order is
//! lexicographic order.
//!
//! The minimum is taken over orderings that list vertices by their stable
//! colour-refinement class. Refinement classes are isomorphism invariant,
//! so the restricted minimum is still a complete invariant. Within the
//! classes the search is exhaustive, cut only by prefix bounds and by
//! skipping twin vertices (swapping two twins is an automorphism that fixes
//! every vertex already placed).

use std::fmt;

use crate::error::{ensure_size, Error, Result};
use crate::graph::GeneralGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    n: u8,
    bits: u64,
}

impl CanonicalCode {
    pub const MAX_ORDER: usize = 10;

    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// The graph whose labeled encoding is this code.
    pub fn to_graph(&self) -> GeneralGraph {
        decode(self.n as usize, self.bits)
    }

    /// Parses the `G<n>:<hex>` form and checks that it is canonical.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Malformed(format!("bad canonical code {s:?}"));
        let rest = s.strip_prefix('G').ok_or_else(bad)?;
        let (n, hex) = rest.split_once(':').ok_or_else(bad)?;
        let n: usize = n.parse().map_err(|_| bad())?;
        ensure_size("canonical code order", n, Self::MAX_ORDER)?;
        let bits = u64::from_str_radix(hex, 16).map_err(|_| bad())?;
        let width = n * n.saturating_sub(1) / 2;
        if width < 64 && bits >> width != 0 {
            return Err(bad());
        }
        let code = CanonicalCode { n: n as u8, bits };
        if canonical_code(&code.to_graph())? != code {
            return Err(Error::Malformed(format!("{s} is not in canonical form")));
        }
        Ok(code)
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G{}:{:x}", self.n, self.bits)
    }
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Encodes `g` under the identity labeling.
#[cfg(test)]
pub(crate) fn labeled_bits(g: &GeneralGraph) -> u64 {
    let n = g.order();
    let mut bits = 0u64;
    for j in 1..n {
        for i in 0..j {
            bits = bits << 1 | g.has_edge(i, j) as u64;
        }
    }
    bits
}

pub(crate) fn decode(n: usize, bits: u64) -> GeneralGraph {
    let total = pair_count(n);
    let mut adj = vec![0u64; n];
    let mut t = 0;
    for j in 1..n {
        for i in 0..j {
            if bits >> (total - 1 - t) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            t += 1;
        }
    }
    GeneralGraph::from_adjacency(adj).expect("decoded adjacency is symmetric")
}

/// Canonical code of `g`; requires at most [`CanonicalCode::MAX_ORDER`] vertices.
pub fn canonical_code(g: &GeneralGraph) -> Result<CanonicalCode> {
    let n = g.order();
    ensure_size(
        "graph order for canonical code",
        n,
        CanonicalCode::MAX_ORDER,
    )?;
    let adj: Vec<u16> = g.rows().iter().map(|&r| r as u16).collect();
    let color = refine(&adj);
    let mut slot_color = color.clone();
    slot_color.sort_unstable();
    let mut search = Search {
        n,
        total: pair_count(n),
        adj: &adj,
        color: &color,
        slot_color: &slot_color,
        placed: Vec::with_capacity(n),
        used: 0,
        best: None,
    };
    search.dfs(0);
    Ok(CanonicalCode {
        n: n as u8,
        bits: search.best.unwrap_or(0),
    })
}

/// Stable colour refinement seeded by degree. Colours are ranks of
/// isomorphism-invariant signatures.
fn refine(adj: &[u16]) -> Vec<u32> {
    let n = adj.len();
    let mut color: Vec<u32> = adj.iter().map(|r| r.count_ones()).collect();
    let mut classes = rank_in_place(&mut color);
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = (0..n)
                    .filter(|&u| adj[v] >> u & 1 == 1)
                    .map(|u| color[u])
                    .collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        if distinct.len() == classes {
            return color;
        }
        classes = distinct.len();
        color = sigs
            .iter()
            .map(|s| distinct.binary_search(s).unwrap() as u32)
            .collect();
    }
}

fn rank_in_place(values: &mut [u32]) -> usize {
    let mut distinct = values.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    for v in values.iter_mut() {
        *v = distinct.binary_search(v).unwrap() as u32;
    }
    distinct.len()
}

struct Search<'a> {
    n: usize,
    total: usize,
    adj: &'a [u16],
    color: &'a [u32],
    slot_color: &'a [u32],
    placed: Vec<usize>,
    used: u16,
    best: Option<u64>,
}

impl Search<'_> {
    fn dfs(&mut self, code: u64) {
        let depth = self.placed.len();
        if depth == self.n {
            if self.best.map_or(true, |b| code < b) {
                self.best = Some(code);
            }
            return;
        }
        let want = self.slot_color[depth];
        let prefix_bits = pair_count(depth + 1);
        let mut tried: u16 = 0;
        for v in 0..self.n {
            if self.used >> v & 1 == 1 || self.color[v] != want {
                continue;
            }
            if self.is_twin_of_tried(v, tried) {
                continue;
            }
            tried |= 1 << v;
            let mut column = 0u64;
            for &u in &self.placed {
                column = column << 1 | (self.adj[u] >> v & 1) as u64;
            }
            let next = code << depth | column;
            if let Some(best) = self.best {
                if next > best >> (self.total - prefix_bits) {
                    continue;
                }
            }
            self.placed.push(v);
            self.used |= 1 << v;
            self.dfs(next);
            self.used &= !(1 << v);
            self.placed.pop();
        }
    }

    fn is_twin_of_tried(&self, v: usize, tried: u16) -> bool {
        let mut rest = tried;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let nu = self.adj[u] & !(1 << v);
            let nv = self.adj[v] & !(1 << u);
            if nu == nv {
                return true;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    /// Reference: minimum over every permutation, no pruning.
    fn naive_code(g: &GeneralGraph) -> u64 {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = u64::MAX;
        heap_permutations(&mut perm, n, &mut |p| {
            let mut bits = 0u64;
            for j in 1..n {
                for i in 0..j {
                    bits = bits << 1 | g.has_edge(p[i], p[j]) as u64;
                }
            }
            best = best.min(bits);
        });
        if n < 2 {
            0
        } else {
            best
        }
    }

    fn heap_permutations(a: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k <= 1 {
            f(a);
            return;
        }
        for i in 0..k {
            heap_permutations(a, k - 1, f);
            let j = if k % 2 == 0 { i } else { 0 };
            a.swap(j, k - 1);
        }
    }

    fn all_labeled(n: usize) -> impl Iterator<Item = GeneralGraph> {
        let pairs = pair_count(n);
        (0..1u64 << pairs).map(move |bits| decode(n, bits))
    }

    #[test]
    fn relabeled_path_has_same_code() {
        let a = GeneralGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let b = GeneralGraph::from_edges(3, &[(0, 2), (2, 1)]).unwrap();
        assert_eq!(canonical_code(&a).unwrap(), canonical_code(&b).unwrap());
    }

    #[test]
    fn cycle_and_path_differ() {
        let c4 = GeneralGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let p4 = GeneralGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_ne!(canonical_code(&c4).unwrap(), canonical_code(&p4).unwrap());
    }

    #[test]
    fn star_labelings_agree() {
        let codes: Vec<_> = (0..4)
            .map(|c| {
                let edges: Vec<_> = (0..4).filter(|&v| v != c).map(|v| (c, v)).collect();
                canonical_code(&GeneralGraph::from_edges(4, &edges).unwrap()).unwrap()
            })
            .collect();
        assert!(codes.windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn rejects_large_graphs() {
        let g = GeneralGraph::new(11).unwrap();
        assert!(matches!(
            canonical_code(&g),
            Err(Error::SizeExceeded { .. })
        ));
    }

    #[test]
    fn code_decodes_to_isomorphic_graph() {
        for g in all_labeled(5) {
            let code = canonical_code(&g).unwrap();
            assert_eq!(canonical_code(&code.to_graph()).unwrap(), code);
            assert_eq!(code.to_graph().degree_list(), g.degree_list());
        }
    }

    // Same partition of labeled graphs as the unpruned minimum.
    #[test]
    fn agrees_with_unpruned_minimum() {
        for n in 0..=5 {
            let mut pairs = std::collections::HashMap::new();
            for g in all_labeled(n) {
                let fast = canonical_code(&g).unwrap().bits();
                let slow = naive_code(&g);
                let prev = pairs.insert(fast, slow);
                assert!(prev.is_none() || prev == Some(slow), "n={n}");
            }
            let mut slows: Vec<u64> = pairs.values().copied().collect();
            slows.sort_unstable();
            slows.dedup();
            assert_eq!(slows.len(), pairs.len(), "n={n}");
        }
    }

    #[test]
    fn invariant_under_random_permutations() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for n in 1..=7 {
            for _ in 0..20 {
                let bits: u64 = rand::Rng::gen::<u64>(&mut rng) & ((1u64 << pair_count(n)) - 1);
                let g = decode(n, bits);
                let code = canonical_code(&g).unwrap();
                let mut perm: Vec<usize> = (0..n).collect();
                for _ in 0..100 {
                    perm.shuffle(&mut rng);
                    assert_eq!(canonical_code(&g.permute(&perm).unwrap()).unwrap(), code);
                }
            }
        }
    }

    #[test]
    fn parse_roundtrip_and_rejects_noncanonical() {
        let p3 = GeneralGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let code = canonical_code(&p3).unwrap();
        assert_eq!(CanonicalCode::parse(&code.to_string()).unwrap(), code);
        let other = labeled_bits(&p3);
        if other != code.bits() {
            assert!(CanonicalCode::parse(&format!("G3:{other:x}")).is_err());
        }
        assert!(CanonicalCode::parse("G3").is_err());
        assert!(CanonicalCode::parse("G3:ff").is_err());
    }
}
