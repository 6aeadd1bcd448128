//! Graph representations: max-degree-2 graphs as component multisets, small
//! labeled graphs as adjacency bitmasks, canonical codes and enumerators.

mod canon;
mod enumerate;
mod general;
mod maxdeg2;
mod parse;

pub(crate) use canon::decode;
pub use canon::{canonical_code, CanonicalCode};
pub use enumerate::{
    enumerate_general, enumerate_maxdeg2, GENERAL_DEFAULT_MAX, GENERAL_OPT_IN_MAX,
};
pub use general::GeneralGraph;
pub use maxdeg2::{Component, MaxDeg2Graph};
pub use parse::parse_spec;

/// Either kind of graph, for operations defined on both.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyGraph {
    MaxDeg2(MaxDeg2Graph),
    General(GeneralGraph),
}

impl AnyGraph {
    pub fn order(&self) -> usize {
        match self {
            AnyGraph::MaxDeg2(g) => g.order(),
            AnyGraph::General(g) => g.order(),
        }
    }

    pub fn to_general(&self) -> crate::Result<GeneralGraph> {
        match self {
            AnyGraph::MaxDeg2(g) => g.to_general(),
            AnyGraph::General(g) => Ok(g.clone()),
        }
    }
}

/// Sorted degree multiset of either graph kind.
pub fn degree_list(g: &AnyGraph) -> Vec<usize> {
    match g {
        AnyGraph::MaxDeg2(g) => g.degree_list(),
        AnyGraph::General(g) => g.degree_list(),
    }
}
