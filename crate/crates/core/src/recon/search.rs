use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::Serialize;

use crate::deck::{deck_profile, deck_profile_bruteforce, DeckProfile};
use crate::error::{ensure_size, Error, Result};
use crate::graph::{enumerate_general, enumerate_maxdeg2, GeneralGraph, MaxDeg2Graph};

/// Largest order searched in the max-degree-2 universe.
pub const MAXDEG2_SEARCH_MAX: usize = 18;

/// Candidate graphs against which uniqueness of a deck is tested.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Universe {
    /// Every graph with maximum degree at most 2, up to
    /// [`MAXDEG2_SEARCH_MAX`] vertices.
    MaxDeg2,
    /// Every graph; order 9 needs the opt-in.
    General { allow_order_nine: bool },
}

impl Universe {
    pub const GENERAL: Universe = Universe::General {
        allow_order_nine: false,
    };

    pub fn name(&self) -> &'static str {
        match self {
            Universe::MaxDeg2 => "maxdeg2",
            Universe::General { .. } => "general",
        }
    }
}

/// Graphs of one universe and order grouped by their `k`-deck. Groups keep
/// the enumeration order of their members.
pub struct DeckIndex<G> {
    pub graphs: Vec<G>,
    pub decks: Vec<DeckProfile>,
    groups: HashMap<DeckProfile, Vec<usize>>,
}

impl<G> DeckIndex<G> {
    fn build(graphs: Vec<G>, deck: impl Fn(&G) -> Result<DeckProfile> + Sync + Send) -> Result<Self>
    where
        G: Sync,
    {
        let decks: Vec<DeckProfile> = graphs.par_iter().map(deck).collect::<Result<_>>()?;
        let mut groups: HashMap<DeckProfile, Vec<usize>> = HashMap::new();
        for (i, d) in decks.iter().enumerate() {
            groups.entry(d.clone()).or_default().push(i);
        }
        Ok(Self {
            graphs,
            decks,
            groups,
        })
    }

    /// Indices of the graphs whose deck equals `d`.
    pub fn members(&self, d: &DeckProfile) -> &[usize] {
        self.groups.get(d).map_or(&[], Vec::as_slice)
    }

    /// Every group with at least two members, ordered by first member.
    pub fn nontrivial_groups(&self) -> Vec<&[usize]> {
        let mut out: Vec<&[usize]> = self
            .groups
            .values()
            .filter(|v| v.len() >= 2)
            .map(Vec::as_slice)
            .collect();
        out.sort_by_key(|v| v[0]);
        out
    }
}

type Cache<G> = Mutex<HashMap<(usize, usize), Arc<DeckIndex<G>>>>;

fn maxdeg2_cache() -> &'static Cache<MaxDeg2Graph> {
    static C: OnceLock<Cache<MaxDeg2Graph>> = OnceLock::new();
    C.get_or_init(Default::default)
}

fn general_cache() -> &'static Cache<GeneralGraph> {
    static C: OnceLock<Cache<GeneralGraph>> = OnceLock::new();
    C.get_or_init(Default::default)
}

fn check_k(n: usize, k: usize) -> Result<()> {
    if k > n {
        return Err(Error::InvalidArgument(format!(
            "card size {k} exceeds order {n}"
        )));
    }
    Ok(())
}

/// All max-degree-2 graphs of order `n`, indexed by `k`-deck. Memoized.
pub fn maxdeg2_index(n: usize, k: usize) -> Result<Arc<DeckIndex<MaxDeg2Graph>>> {
    ensure_size("max-degree-2 universe order", n, MAXDEG2_SEARCH_MAX)?;
    check_k(n, k)?;
    if let Some(ix) = maxdeg2_cache().lock().unwrap().get(&(n, k)) {
        return Ok(ix.clone());
    }
    let ix = Arc::new(DeckIndex::build(enumerate_maxdeg2(n), |g| {
        deck_profile(g, k)
    })?);
    maxdeg2_cache().lock().unwrap().insert((n, k), ix.clone());
    Ok(ix)
}

/// All graphs of order `n`, indexed by brute-force `k`-deck. Memoized.
pub fn general_index(
    n: usize,
    k: usize,
    allow_order_nine: bool,
) -> Result<Arc<DeckIndex<GeneralGraph>>> {
    let graphs = enumerate_general(n, allow_order_nine)?;
    check_k(n, k)?;
    if let Some(ix) = general_cache().lock().unwrap().get(&(n, k)) {
        return Ok(ix.clone());
    }
    let ix = Arc::new(DeckIndex::build(graphs.to_vec(), |g| {
        deck_profile_bruteforce(g, k)
    })?);
    general_cache().lock().unwrap().insert((n, k), ix.clone());
    Ok(ix)
}

/// Number of graphs in the universe that share `g`'s `k`-deck, `g` included.
pub fn class_size(g: &MaxDeg2Graph, k: usize, universe: Universe) -> Result<usize> {
    let n = g.order();
    match universe {
        Universe::MaxDeg2 => Ok(maxdeg2_index(n, k)?.members(&deck_profile(g, k)?).len()),
        Universe::General { allow_order_nine } => {
            let d = deck_profile_bruteforce(&g.to_general()?, k)?;
            Ok(general_index(n, k, allow_order_nine)?.members(&d).len())
        }
    }
}

/// Least `k` for which no other graph of the universe with the same number
/// of vertices has the same `k`-deck as `g`.
pub fn rho_search(g: &MaxDeg2Graph, universe: Universe) -> Result<usize> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    for k in 1..=g.order() {
        if class_size(g, k, universe)? == 1 {
            return Ok(k);
        }
    }
    unreachable!("the full deck identifies the graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_spec;

    fn g(s: &str) -> MaxDeg2Graph {
        parse_spec(s).unwrap()
    }

    #[test]
    fn small_general_values() {
        assert_eq!(rho_search(&g("C8"), Universe::GENERAL).unwrap(), 4);
        assert_eq!(rho_search(&g("P8"), Universe::GENERAL).unwrap(), 5);
        // C4+P1 has four P3 cards in its 3-deck to P5's three, so P5 is
        // already unique at k = 3.
        assert_eq!(rho_search(&g("P5"), Universe::GENERAL).unwrap(), 3);
    }

    #[test]
    fn maxdeg2_universe_is_never_harder() {
        for s in ["C6", "P6", "C4+P2", "C3+C3", "P3+P2+P1"] {
            let a = rho_search(&g(s), Universe::MaxDeg2).unwrap();
            let b = rho_search(&g(s), Universe::GENERAL).unwrap();
            assert!(a <= b, "{s}: {a} > {b}");
        }
    }

    #[test]
    fn limits() {
        assert!(matches!(
            rho_search(&g("P19"), Universe::MaxDeg2),
            Err(Error::SizeExceeded { .. })
        ));
        assert!(matches!(
            rho_search(&g("P9"), Universe::GENERAL),
            Err(Error::SizeExceeded { .. })
        ));
        assert!(matches!(
            rho_search(&MaxDeg2Graph::empty(), Universe::MaxDeg2),
            Err(Error::EmptyGraph)
        ));
    }
}
