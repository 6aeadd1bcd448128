//! Exact k-decks: the componentwise engine for max-degree-2 graphs, the
//! subset-enumeration reference for general graphs, and deck algebra.

mod brute;
mod fast;
mod ops;
mod profile;
mod shape;

pub use brute::deck_profile_bruteforce;
pub use fast::{cycle_card_counts, deck_profile, path_card_counts};
pub use ops::{
    count_induced, decks_equal, independent_set_count, restrict_deck, restriction_chain, s_prime,
    LinearForest,
};
pub use profile::DeckProfile;
pub use shape::CardShape;
