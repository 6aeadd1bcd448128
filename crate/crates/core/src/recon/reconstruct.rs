use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::deck::{deck_profile, restriction_chain, CardShape, DeckProfile};
use crate::error::{Error, Result};
use crate::graph::{Component, MaxDeg2Graph};
use crate::recon::search::maxdeg2_index;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Unique(MaxDeg2Graph),
    /// Every max-degree-2 graph with this deck, in canonical order.
    Ambiguous(Vec<MaxDeg2Graph>),
    Inconsistent(String),
}

/// Which route produced the answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Component counts read off the deck, then confirmed by recomputation.
    CardCounts,
    /// Exhaustive search over the max-degree-2 graphs of the given order.
    UniverseSearch,
    /// The deck was rejected before either route ran.
    Validation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconResult {
    pub outcome: Outcome,
    pub method: Method,
}

impl ReconResult {
    pub fn unique(&self) -> Option<&MaxDeg2Graph> {
        match &self.outcome {
            Outcome::Unique(g) => Some(g),
            _ => None,
        }
    }

    /// The candidate graphs: one for `Unique`, several for `Ambiguous`.
    pub fn candidates(&self) -> &[MaxDeg2Graph] {
        match &self.outcome {
            Outcome::Unique(g) => std::slice::from_ref(g),
            Outcome::Ambiguous(gs) => gs,
            Outcome::Inconsistent(_) => &[],
        }
    }

    fn inconsistent(reason: impl Into<String>) -> Self {
        Self {
            outcome: Outcome::Inconsistent(reason.into()),
            method: Method::Validation,
        }
    }
}

#[derive(Serialize)]
struct ReconJson<'a> {
    outcome: &'static str,
    graphs: Vec<String>,
    reason: Option<&'a str>,
    method: Method,
}

impl Serialize for ReconResult {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (outcome, reason) = match &self.outcome {
            Outcome::Unique(_) => ("unique", None),
            Outcome::Ambiguous(_) => ("ambiguous", None),
            Outcome::Inconsistent(r) => ("inconsistent", Some(r.as_str())),
        };
        ReconJson {
            outcome,
            graphs: self.candidates().iter().map(|g| g.to_string()).collect(),
            reason,
            method: self.method,
        }
        .serialize(s)
    }
}

/// Recovers a max-degree-2 graph on `n` vertices from its `k`-deck.
///
/// Component counts are read from the deck when the card counts pin down
/// every component with more than `k` vertices; the result is confirmed by
/// recomputing its deck. Otherwise every max-degree-2 graph of order `n` is
/// tried. Errors only when that search would exceed its size limit.
pub fn reconstruct(d: &DeckProfile, n: usize) -> Result<ReconResult> {
    if d.n() != n {
        return Ok(ReconResult::inconsistent(format!(
            "deck is for {} vertices, not {n}",
            d.n()
        )));
    }
    if d.k() > n {
        return Ok(ReconResult::inconsistent(format!(
            "card size {} exceeds {n}",
            d.k()
        )));
    }
    if let Err(e) = d.check_consistent() {
        return Ok(ReconResult::inconsistent(e.to_string()));
    }
    if let Some((shape, _)) = d.iter().find(|(s, _)| !s.is_linear()) {
        return Ok(ReconResult::inconsistent(format!(
            "card {shape} has a vertex of degree 3 or more"
        )));
    }
    let chain = match restriction_chain(d) {
        Ok(c) => c,
        Err(Error::InconsistentDeck(reason)) => return Ok(ReconResult::inconsistent(reason)),
        Err(e) => return Err(e),
    };
    match from_card_counts(&chain, n) {
        Ok(Some(g)) if deck_profile(&g, d.k())? == *d => {
            return Ok(ReconResult {
                outcome: Outcome::Unique(g),
                method: Method::CardCounts,
            })
        }
        Ok(_) => {}
        Err(reason) => return Ok(ReconResult::inconsistent(reason)),
    }
    universe_search(d, n)
}

fn universe_search(d: &DeckProfile, n: usize) -> Result<ReconResult> {
    let ix = maxdeg2_index(n, d.k())?;
    let found: Vec<MaxDeg2Graph> = ix
        .members(d)
        .iter()
        .map(|&i| ix.graphs[i].clone())
        .collect();
    let outcome = match found.len() {
        0 => Outcome::Inconsistent("no graph with maximum degree 2 has this deck".into()),
        1 => Outcome::Unique(found.into_iter().next().unwrap()),
        _ => Outcome::Ambiguous(found),
    };
    Ok(ReconResult {
        outcome,
        method: Method::UniverseSearch,
    })
}

fn small(x: &BigUint, what: &str) -> std::result::Result<usize, String> {
    x.to_usize()
        .ok_or_else(|| format!("{what} count {x} is out of range"))
}

/// Reads the components off `chain` (decks indexed by card size). `Ok(None)`
/// when the counts do not determine the components with more than `k`
/// vertices; `Err` when they are contradictory.
fn from_card_counts(
    chain: &[DeckProfile],
    n: usize,
) -> std::result::Result<Option<MaxDeg2Graph>, String> {
    let k = chain.len() - 1;
    if k < 2 {
        return Ok(None);
    }
    let dk = &chain[k];
    let s_pk = small(&dk.count(&CardShape::path(k)), "P_k")?;
    let s_ck = if k >= 3 {
        small(&dk.count(&CardShape::cycle(k)), "C_k")?
    } else {
        0
    };
    let s_pk1 = small(&chain[k - 1].count(&CardShape::path(k - 1)), "P_(k-1)")?;

    // Path components with at least k-1 vertices.
    let long_paths = BigInt::from(s_pk1) - BigInt::from(s_pk) - BigInt::from(k * s_ck);
    if long_paths.is_negative() {
        return Err(format!("negative long-path count {long_paths}"));
    }

    let mut known: Vec<Component> = Vec::new();
    if s_pk == 0 {
        // Nothing has more than k vertices.
    } else if long_paths.is_zero() && s_pk <= 2 * k + 1 {
        if s_pk <= k {
            return Err(format!(
                "{s_pk} copies of P_{k} cannot come from cycles longer than {k}"
            ));
        }
        known.push(Component::Cycle(s_pk));
    } else if long_paths == BigInt::from(1u8) && s_pk <= k {
        let len = s_pk + k - 1;
        if len > k {
            known.push(Component::Path(len));
        }
    } else {
        return Ok(None);
    }

    for j in (1..=k).rev() {
        let dj = &chain[j];
        if j >= 3 {
            let cycles = small(&dj.count(&CardShape::cycle(j)), "cycle")?;
            known.extend(std::iter::repeat(Component::Cycle(j)).take(cycles));
        }
        let cards = BigInt::from(dj.count(&CardShape::path(j)));
        let explained: usize = known.iter().map(|c| c.induced_paths(j)).sum();
        let paths = cards - BigInt::from(explained);
        if paths.is_negative() {
            return Err(format!(
                "P_{j} cards are fewer than the known components account for"
            ));
        }
        let paths = paths.to_usize().ok_or("path count out of range")?;
        known.extend(std::iter::repeat(Component::Path(j)).take(paths));
    }
    let used: usize = known.iter().map(Component::order).sum();
    if used != n {
        return Err(format!(
            "components use {used} vertices but the deck has {n}"
        ));
    }
    Ok(Some(
        MaxDeg2Graph::new(known).expect("component lengths are valid"),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_spec;

    fn g(s: &str) -> MaxDeg2Graph {
        parse_spec(s).unwrap()
    }

    fn recon(s: &str, k: usize) -> ReconResult {
        let h = g(s);
        reconstruct(&deck_profile(&h, k).unwrap(), h.order()).unwrap()
    }

    #[test]
    fn cycle_plus_path() {
        let r = recon("C7+P3", 5);
        assert_eq!(r.unique(), Some(&g("C7+P3")));
        assert_eq!(r.method, Method::CardCounts);
        // One below, every graph on 10 vertices and 9 edges whose cycles
        // exceed 4 vertices and whose paths have at least 3 shares the deck.
        let r = recon("C7+P3", 4);
        assert_eq!(
            r.candidates(),
            &[g("P10"), g("C7+P3"), g("C6+P4"), g("C5+P5")][..]
        );
    }

    #[test]
    fn nine_cycle_three_deck() {
        let r = recon("C9", 3);
        assert_eq!(r.candidates(), &[g("C9"), g("C5+C4")][..]);
        assert_eq!(r.method, Method::UniverseSearch);
    }

    #[test]
    fn one_deck_of_p3() {
        let r = recon("P3", 1);
        assert!(matches!(r.outcome, Outcome::Ambiguous(ref v) if v.contains(&g("P3"))));
        assert_eq!(recon("P3", 2).unique(), Some(&g("P3")));
    }

    #[test]
    fn bad_total_is_inconsistent() {
        let mut d = deck_profile(&g("P3"), 2).unwrap();
        d.add(CardShape::path(2), 1u32.into());
        let r = reconstruct(&d, 3).unwrap();
        assert!(matches!(r.outcome, Outcome::Inconsistent(_)));
    }

    #[test]
    fn wrong_order_is_inconsistent() {
        let d = deck_profile(&g("P5"), 3).unwrap();
        assert!(matches!(
            reconstruct(&d, 6).unwrap().outcome,
            Outcome::Inconsistent(_)
        ));
    }

    #[test]
    fn serializes_with_named_fields() {
        let v = serde_json::to_value(recon("C7+P3", 5)).unwrap();
        assert_eq!(v["outcome"], "unique");
        assert_eq!(v["graphs"][0], "C7+P3");
        assert_eq!(v["method"], "card_counts");
    }
}
