use num_bigint::BigUint;
use serde::Serialize;

use crate::deck::{restrict_deck, CardShape, DeckProfile};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeData {
    #[serde(serialize_with = "decimal")]
    pub edges: BigUint,
    /// Pairs of edges sharing a vertex, `sum_v C(d(v), 2)`.
    #[serde(serialize_with = "decimal")]
    pub incidences: BigUint,
}

fn decimal<S: serde::Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

/// Edge and incidence counts from a `k`-deck with `k >= 3`.
///
/// Each edge is a `P2` card of the 2-deck. Two edges meeting at a vertex
/// span either an induced `P3` or a triangle, and a triangle holds three
/// such pairs.
pub fn degree_data_from_deck(d: &DeckProfile, n: usize) -> Result<DegreeData> {
    if d.k() < 3 {
        return Err(Error::InvalidArgument(format!(
            "need cards of at least 3 vertices, got {}",
            d.k()
        )));
    }
    if d.n() != n {
        return Err(Error::InconsistentDeck(format!(
            "deck is for {} vertices, not {n}",
            d.n()
        )));
    }
    let mut d3 = d.clone();
    while d3.k() > 3 {
        d3 = restrict_deck(&d3)?;
    }
    let d2 = restrict_deck(&d3)?;
    let incidences = d3.count(&CardShape::path(3)) + 3u32 * d3.count(&CardShape::cycle(3));
    Ok(DegreeData {
        edges: d2.count(&CardShape::path(2)),
        incidences,
    })
}
