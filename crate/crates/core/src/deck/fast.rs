//! Closed-form card counts for paths and cycles, and the componentwise
//! convolution that assembles the deck of any max-degree-2 graph.
//!
//! A j-subset of a path or cycle induces the linear forest given by its
//! maximal runs of consecutive chosen vertices. For a run multiset with `p`
//! runs there are `p!/prod(mult!)` run orders; the unchosen vertices then
//! fix the gaps.

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::deck::{CardShape, DeckProfile};
use crate::error::{Error, Result};
use crate::graph::{Component, MaxDeg2Graph};
use crate::numeric::{binomial, multinomial, part_multiplicities, partitions};

/// Card counts of `P_n` at card size `j`: runs are placed into the
/// `n - j + 1` gaps around the unchosen vertices, at most one per gap.
pub fn path_card_counts(n: usize, j: usize) -> Result<DeckProfile> {
    if j > n {
        return Err(Error::InvalidArgument(format!(
            "card size {j} exceeds path length {n}"
        )));
    }
    let mut d = DeckProfile::new(n, j);
    for (parts, count) in path_runs(n, j) {
        d.add(runs_shape(&parts), count);
    }
    Ok(d)
}

/// Card counts of `C_m` at card size `j`. For `0 < j < m`, a run multiset
/// with `p` runs occurs `(m/p) * p!/prod(mult!) * C(m - j - 1, p - 1)` times.
pub fn cycle_card_counts(m: usize, j: usize) -> Result<DeckProfile> {
    if m < 3 {
        return Err(Error::InvalidLength {
            kind: "cycle",
            len: m,
        });
    }
    if j > m {
        return Err(Error::InvalidArgument(format!(
            "card size {j} exceeds cycle length {m}"
        )));
    }
    let mut d = DeckProfile::new(m, j);
    for (shape, count) in cycle_runs(m, j) {
        d.add(shape, count);
    }
    Ok(d)
}

fn runs_shape(parts: &[usize]) -> CardShape {
    CardShape::Linear(MaxDeg2Graph::from_sorted_unchecked(
        parts.iter().map(|&p| Component::Path(p)).collect(),
    ))
}

fn path_runs(n: usize, j: usize) -> Vec<(Vec<usize>, BigUint)> {
    let gaps = n - j + 1;
    partitions(j)
        .into_iter()
        .filter(|parts| parts.len() <= gaps)
        .map(|parts| {
            let count = multinomial(&part_multiplicities(&parts)) * binomial(gaps, parts.len());
            (parts, count)
        })
        .collect()
}

fn cycle_runs(m: usize, j: usize) -> Vec<(CardShape, BigUint)> {
    if j == m {
        return vec![(CardShape::cycle(m), 1u32.into())];
    }
    if j == 0 {
        return vec![(CardShape::empty(), 1u32.into())];
    }
    let free = m - j;
    partitions(j)
        .into_iter()
        .filter(|parts| parts.len() <= free)
        .map(|parts| {
            let p = parts.len();
            let numer = BigUint::from(m)
                * multinomial(&part_multiplicities(&parts))
                * binomial(free - 1, p - 1);
            let p_big = BigUint::from(p);
            debug_assert_eq!(&numer % &p_big, BigUint::default());
            (runs_shape(&parts), numer / p_big)
        })
        .collect()
}

type Partial = HashMap<Vec<Component>, BigUint>;

fn component_pieces(c: Component, k: usize) -> Vec<Vec<(Vec<Component>, BigUint)>> {
    let top = c.order().min(k);
    (0..=top)
        .map(|j| {
            let shapes: Vec<(CardShape, BigUint)> = match c {
                Component::Path(n) => path_runs(n, j)
                    .into_iter()
                    .map(|(parts, cnt)| (runs_shape(&parts), cnt))
                    .collect(),
                Component::Cycle(m) => cycle_runs(m, j),
            };
            shapes
                .into_iter()
                .map(|(s, cnt)| match s {
                    CardShape::Linear(g) => (g.components().to_vec(), cnt),
                    CardShape::General(_) => unreachable!("path and cycle cards are linear"),
                })
                .collect()
        })
        .collect()
}

fn merge_sorted(a: &[Component], b: &[Component]) -> Vec<Component> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Exact `k`-deck of a max-degree-2 graph.
///
/// Components are folded in one at a time; the partial profile is indexed
/// by the number of card vertices used so far and never exceeds `k`.
pub fn deck_profile(g: &MaxDeg2Graph, k: usize) -> Result<DeckProfile> {
    let n = g.order();
    if k > n {
        return Err(Error::InvalidArgument(format!(
            "card size {k} exceeds order {n}"
        )));
    }
    let mut state: Vec<Partial> = vec![Partial::new(); k + 1];
    state[0].insert(Vec::new(), 1u32.into());
    let mut piece_cache: HashMap<Component, Vec<Vec<(Vec<Component>, BigUint)>>> = HashMap::new();
    let mut consumed = 0;
    for &c in g.components() {
        let pieces = piece_cache
            .entry(c)
            .or_insert_with(|| component_pieces(c, k));
        let mut next: Vec<Partial> = vec![Partial::new(); k + 1];
        for (used, partial) in state.iter().enumerate().take(consumed.min(k) + 1) {
            for (shape, count) in partial {
                for (j, options) in pieces.iter().enumerate().take(k - used + 1) {
                    for (piece, mult) in options {
                        let merged = merge_sorted(shape, piece);
                        *next[used + j].entry(merged).or_default() += count * mult;
                    }
                }
            }
        }
        state = next;
        consumed += c.order();
    }
    let mut d = DeckProfile::new(n, k);
    for (comps, count) in state.swap_remove(k) {
        d.add(
            CardShape::Linear(MaxDeg2Graph::from_sorted_unchecked(comps)),
            count,
        );
    }
    Ok(d)
}
