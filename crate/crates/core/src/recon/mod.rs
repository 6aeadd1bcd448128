//! The reconstruction number of max-degree-2 graphs, reconstruction from a
//! deck, and equal-deck constructions.

mod degree;
mod reconstruct;
mod rho;
mod search;
mod witness;

pub use degree::{degree_data_from_deck, DegreeData};
pub use reconstruct::{reconstruct, Method, Outcome, ReconResult};
pub use rho::{epsilon_values, in_family_f, rho_formula, EpsilonValues, RhoReport};
pub use search::{
    class_size, general_index, maxdeg2_index, rho_search, DeckIndex, Universe, MAXDEG2_SEARCH_MAX,
};
pub use witness::{
    deck_of, gen_equal_pair, manvel_g, manvel_h, spider_y, EqualPair, ImpostorFamily, PairKind,
};
