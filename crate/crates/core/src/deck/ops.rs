use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::deck::{deck_profile, deck_profile_bruteforce, CardShape, DeckProfile};
use crate::error::{Error, Result};
use crate::graph::{Component, MaxDeg2Graph};

fn card_subdeck(shape: &CardShape, j: usize) -> Result<DeckProfile> {
    match shape {
        CardShape::Linear(g) => deck_profile(g, j),
        CardShape::General(code) => deck_profile_bruteforce(&code.to_graph(), j),
    }
}

/// Derives the `(k-1)`-deck from a `k`-deck.
///
/// Every `(k-1)`-card lies in exactly `n - k + 1` of the `k`-cards, so the
/// summed sub-decks of all cards must divide evenly.
pub fn restrict_deck(d: &DeckProfile) -> Result<DeckProfile> {
    let (n, k) = (d.n(), d.k());
    if k == 0 {
        return Err(Error::InvalidArgument("cannot restrict a 0-deck".into()));
    }
    if k > n {
        return Err(Error::InconsistentDeck(format!(
            "card size {k} exceeds order {n}"
        )));
    }
    let mut acc: BTreeMap<CardShape, BigUint> = BTreeMap::new();
    for (shape, count) in d.iter() {
        if shape.order() != k {
            return Err(Error::InconsistentDeck(format!(
                "card {shape} does not have {k} vertices"
            )));
        }
        for (sub, c) in card_subdeck(shape, k - 1)?.iter() {
            *acc.entry(sub.clone()).or_default() += count * c;
        }
    }
    let divisor = BigUint::from(n - k + 1);
    let mut out = DeckProfile::new(n, k - 1);
    for (shape, total) in acc {
        let (q, r) = total.div_rem(&divisor);
        if !r.is_zero() {
            return Err(Error::InconsistentDeck(format!(
                "{total} occurrences of {shape} are not divisible by {divisor}"
            )));
        }
        out.add(shape, q);
    }
    Ok(out)
}

/// All decks `D_0 .. D_k` obtained by repeated restriction; index is card size.
pub fn restriction_chain(d: &DeckProfile) -> Result<Vec<DeckProfile>> {
    let mut chain = vec![d.clone()];
    while chain.last().unwrap().k() > 0 {
        let next = restrict_deck(chain.last().unwrap())?;
        chain.push(next);
    }
    chain.reverse();
    Ok(chain)
}

/// `s(g, h)`: number of induced subgraphs of `g` isomorphic to `h`.
pub fn count_induced(g: &MaxDeg2Graph, h: &CardShape) -> Result<BigUint> {
    let k = h.order();
    if k > g.order() {
        return Err(Error::InvalidArgument(format!(
            "pattern has {k} vertices but the host only {}",
            g.order()
        )));
    }
    Ok(deck_profile(g, k)?.count(h))
}

/// Number of `k`-element independent sets: the multiplicity of `P1^k`.
pub fn independent_set_count(g: &MaxDeg2Graph, k: usize) -> Result<BigUint> {
    if k > g.order() {
        return Ok(BigUint::zero());
    }
    Ok(deck_profile(g, k)?.count(&CardShape::independent(k)))
}

pub fn decks_equal(a: &DeckProfile, b: &DeckProfile) -> bool {
    a == b
}

/// Linear forest with `mult` copies of `P_len` for each entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearForest {
    parts: BTreeMap<usize, usize>,
}

impl LinearForest {
    /// Builds from `(path length, multiplicity)` pairs; lengths must be
    /// distinct and positive, multiplicities positive.
    pub fn new(parts: &[(usize, usize)]) -> Result<Self> {
        let mut map = BTreeMap::new();
        for &(len, mult) in parts {
            if len == 0 || mult == 0 {
                return Err(Error::InvalidArgument(format!(
                    "bad forest part P{len} x{mult}"
                )));
            }
            if map.insert(len, mult).is_some() {
                return Err(Error::InvalidArgument(format!(
                    "path length {len} listed twice"
                )));
            }
        }
        Ok(Self { parts: map })
    }

    /// Reads a forest from a graph without cycles.
    pub fn from_graph(g: &MaxDeg2Graph) -> Result<Self> {
        let mut parts = BTreeMap::new();
        for &c in g.components() {
            match c {
                Component::Path(len) => *parts.entry(len).or_default() += 1,
                Component::Cycle(_) => {
                    return Err(Error::InvalidArgument(format!(
                        "{g} is not a linear forest"
                    )))
                }
            }
        }
        Ok(Self { parts })
    }

    pub fn order(&self) -> usize {
        self.parts.iter().map(|(l, m)| l * m).sum()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.parts.contains_key(&1)
    }

    pub fn parts(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().map(|(&l, &m)| (l, m))
    }

    pub fn to_graph(&self) -> MaxDeg2Graph {
        let comps = self
            .parts
            .iter()
            .flat_map(|(&l, &m)| std::iter::repeat(Component::Path(l)).take(m))
            .collect();
        MaxDeg2Graph::new(comps).expect("path lengths are positive")
    }

    /// Every linear forest on exactly `k` vertices.
    pub fn all_of_order(k: usize) -> Vec<LinearForest> {
        crate::numeric::partitions(k)
            .into_iter()
            .map(|parts| {
                let mut map = BTreeMap::new();
                for p in parts {
                    *map.entry(p).or_default() += 1;
                }
                LinearForest { parts: map }
            })
            .collect()
    }
}

impl fmt::Display for LinearForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_graph())
    }
}

/// `s'(P_n, L)` at vertex `w_h` (1-based): induced copies of `L` in `P_n`
/// that use `w_h` as one of the copy's isolated vertices. Counted by direct
/// subset enumeration.
pub fn s_prime(n: usize, forest: &LinearForest, h: usize) -> Result<BigUint> {
    if !forest.has_isolated_vertex() {
        return Err(Error::NoIsolatedVertex(forest.to_string()));
    }
    if h == 0 || h > n {
        return Err(Error::InvalidArgument(format!(
            "vertex w_{h} is not on P_{n}"
        )));
    }
    if n > 63 {
        return Err(Error::SizeExceeded {
            what: "host path length",
            got: n,
            limit: 63,
        });
    }
    let k = forest.order();
    let target = forest.to_graph();
    let pivot = h - 1;
    let mut count = 0u64;
    let mut chosen = Vec::with_capacity(k);
    enumerate_subsets(n, k, 0, &mut chosen, &mut |set| {
        if !set.contains(&pivot) {
            return;
        }
        let picked = |v: usize| set.binary_search(&v).is_ok();
        let isolated = (pivot == 0 || !picked(pivot - 1)) && !picked(pivot + 1);
        if isolated && runs_of(set) == target {
            count += 1;
        }
    });
    Ok(count.into())
}

fn enumerate_subsets(
    n: usize,
    k: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if chosen.len() == k {
        f(chosen);
        return;
    }
    for v in start..n {
        if n - v < k - chosen.len() {
            break;
        }
        chosen.push(v);
        enumerate_subsets(n, k, v + 1, chosen, f);
        chosen.pop();
    }
}

fn runs_of(sorted: &[usize]) -> MaxDeg2Graph {
    let mut comps = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i + 1;
        while j < sorted.len() && sorted[j] == sorted[j - 1] + 1 {
            j += 1;
        }
        comps.push(Component::Path(j - i));
        i = j;
    }
    MaxDeg2Graph::new(comps).expect("runs are nonempty")
}
