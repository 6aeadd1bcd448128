//! Exact k-deck computation for graphs with maximum degree 2.
//!
//! * [`graph`]: component-multiset and adjacency-bitmask graphs, canonical
//!   codes, enumeration of small graph universes.
//! * [`deck`]: k-deck profiles, fast for max-degree-2 graphs and by subset
//!   enumeration for arbitrary small graphs.
//! * [`recon`]: the reconstruction number formula, reconstruction from a
//!   deck, and generators of equal-deck pairs.
//! * [`oracle`]: exhaustive surveys and committed fixtures.

pub mod deck;
pub mod error;
pub mod graph;
pub mod numeric;
pub mod oracle;
pub mod recon;

pub use error::{Error, Result};
