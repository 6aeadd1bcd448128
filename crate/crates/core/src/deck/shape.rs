use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{canonical_code, CanonicalCode, Component, GeneralGraph, MaxDeg2Graph};

/// Isomorphism class of a card.
///
/// Every card with maximum degree at most 2 is stored as `Linear`, whatever
/// route produced it; only cards containing a vertex of degree 3 or more
/// use a canonical code. Each class therefore has exactly one key.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CardShape {
    Linear(MaxDeg2Graph),
    General(CanonicalCode),
}

impl CardShape {
    pub fn empty() -> Self {
        CardShape::Linear(MaxDeg2Graph::empty())
    }

    pub fn path(k: usize) -> Self {
        CardShape::Linear(MaxDeg2Graph::path(k).expect("path length >= 1"))
    }

    pub fn cycle(k: usize) -> Self {
        CardShape::Linear(MaxDeg2Graph::cycle(k).expect("cycle length >= 3"))
    }

    /// The edgeless card `P1^k`.
    pub fn independent(k: usize) -> Self {
        CardShape::Linear(MaxDeg2Graph::from_sorted_unchecked(vec![
            Component::Path(1);
            k
        ]))
    }

    pub fn order(&self) -> usize {
        match self {
            CardShape::Linear(g) => g.order(),
            CardShape::General(c) => c.order(),
        }
    }

    pub fn is_linear(&self) -> bool {
        matches!(self, CardShape::Linear(_))
    }

    /// Classifies a labeled card.
    pub fn of_graph(g: &GeneralGraph) -> Result<Self> {
        match MaxDeg2Graph::from_general(g) {
            Some(lin) => Ok(CardShape::Linear(lin)),
            None => Ok(CardShape::General(canonical_code(g)?)),
        }
    }

    pub fn to_general(&self) -> Result<GeneralGraph> {
        match self {
            CardShape::Linear(g) => g.to_general(),
            CardShape::General(c) => Ok(c.to_graph()),
        }
    }

    pub fn key(&self) -> String {
        match self {
            CardShape::Linear(g) => g.card_key(),
            CardShape::General(c) => c.to_string(),
        }
    }

    /// Inverse of [`CardShape::key`].
    pub fn parse_key(key: &str) -> Result<Self> {
        if key == "empty" {
            return Ok(Self::empty());
        }
        if key.starts_with('G') {
            let code = CanonicalCode::parse(key)?;
            if code.to_graph().max_degree() <= 2 {
                return Err(Error::Malformed(format!(
                    "{key} has maximum degree at most 2 and must use the linear form"
                )));
            }
            return Ok(CardShape::General(code));
        }
        let mut comps = Vec::new();
        for term in key.split('+') {
            let bad = || Error::Malformed(format!("bad card key term {term:?} in {key:?}"));
            let (body, mult) = match term.split_once('^') {
                Some((b, m)) => (b, m.parse::<usize>().map_err(|_| bad())?),
                None => (term, 1),
            };
            if mult == 0 {
                return Err(bad());
            }
            let mut chars = body.chars();
            let kind = chars.next().ok_or_else(bad)?;
            let len: usize = chars.as_str().parse().map_err(|_| bad())?;
            let comp = match kind {
                'C' => Component::cycle(len)?,
                'P' => Component::path(len)?,
                _ => return Err(bad()),
            };
            comps.extend(std::iter::repeat(comp).take(mult));
        }
        Ok(CardShape::Linear(MaxDeg2Graph::new(comps)?))
    }
}

impl fmt::Display for CardShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_roundtrip() {
        for key in ["empty", "C5+P3+P1^2", "P1^4", "C4^2+C3"] {
            assert_eq!(CardShape::parse_key(key).unwrap().key(), key);
        }
        let k13 = GeneralGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let shape = CardShape::of_graph(&k13).unwrap();
        assert!(!shape.is_linear());
        assert_eq!(CardShape::parse_key(&shape.key()).unwrap(), shape);
    }

    #[test]
    fn low_degree_cards_are_linear() {
        let g = GeneralGraph::from_edges(5, &[(0, 2), (2, 4), (1, 3)]).unwrap();
        assert_eq!(CardShape::of_graph(&g).unwrap().key(), "P3+P2");
    }

    #[test]
    fn rejects_bad_keys() {
        for key in ["", "C2", "Q3", "P3^0", "P3+", "G3:3"] {
            assert!(CardShape::parse_key(key).is_err(), "{key}");
        }
    }
}
