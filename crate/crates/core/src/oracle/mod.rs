//! Exhaustive surveys and committed fixtures: the ground truth the fast
//! engines are checked against.

mod classes;
mod fixtures;
mod stanley;

pub use classes::{find_equivalence_classes, EquivalenceReport, Member};
pub use fixtures::{fixture_dump, FixtureScope, CYCLE_TABLE, GENERAL_DECKS, MANIFEST, PATH_TABLE};
pub use stanley::{cycle_independent_sets, stanley_sweep, StanleyReport};
