use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::deck::{deck_profile_bruteforce, DeckProfile};
use crate::error::Result;
use crate::graph::{canonical_code, enumerate_general, MaxDeg2Graph};

/// Which fixture files to regenerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixtureScope {
    /// All tables plus the manifest.
    All,
    PathCounts,
    CycleCounts,
    GeneralDecks,
}

pub const PATH_TABLE: &str = "path_card_counts.json";
pub const CYCLE_TABLE: &str = "cycle_card_counts.json";
pub const GENERAL_DECKS: &str = "general_decks_n5_k3.json";
pub const MANIFEST: &str = "manifest.json";

const TABLE_MAX_N: usize = 12;
const TABLE_MAX_J: usize = 6;

fn deck_value(d: &DeckProfile) -> Value {
    serde_json::from_str(&d.to_json()).expect("deck JSON parses")
}

fn render(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("fixture serializes");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct TableRow {
    order: usize,
    card_size: usize,
    deck: Value,
}

/// Card counts of `P_n` or `C_n` by subset enumeration, so the table is
/// independent of the closed forms it is later checked against.
fn table(cycles: bool) -> Result<String> {
    let mut rows = Vec::new();
    let start = if cycles { 3 } else { 1 };
    for n in start..=TABLE_MAX_N {
        let g = if cycles {
            MaxDeg2Graph::cycle(n)?
        } else {
            MaxDeg2Graph::path(n)?
        }
        .to_general()?;
        for j in 0..=TABLE_MAX_J.min(n) {
            rows.push(TableRow {
                order: n,
                card_size: j,
                deck: deck_value(&deck_profile_bruteforce(&g, j)?),
            });
        }
    }
    Ok(render(&rows))
}

#[derive(Serialize)]
struct GeneralRow {
    graph: String,
    edges: Vec<(usize, usize)>,
    deck: Value,
}

fn general_decks() -> Result<String> {
    let rows = enumerate_general(5, false)?
        .iter()
        .map(|g| {
            Ok(GeneralRow {
                graph: canonical_code(g)?.to_string(),
                edges: g.edges(),
                deck: deck_value(&deck_profile_bruteforce(g, 3)?),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(render(&rows))
}

#[derive(Serialize)]
struct ManifestEntry {
    scope: &'static str,
    parameters: BTreeMap<&'static str, usize>,
    sha256: String,
}

/// Writes the selected fixture files into `dir`, returning the paths
/// written. Output is byte-stable across runs.
pub fn fixture_dump(scope: FixtureScope, dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let want = |s: FixtureScope| scope == FixtureScope::All || scope == s;
    let mut files: Vec<(
        &'static str,
        &'static str,
        BTreeMap<&'static str, usize>,
        String,
    )> = Vec::new();
    if want(FixtureScope::PathCounts) {
        let p = BTreeMap::from([("max_order", TABLE_MAX_N), ("max_card_size", TABLE_MAX_J)]);
        files.push((PATH_TABLE, "path_card_counts", p, table(false)?));
    }
    if want(FixtureScope::CycleCounts) {
        let p = BTreeMap::from([("max_order", TABLE_MAX_N), ("max_card_size", TABLE_MAX_J)]);
        files.push((CYCLE_TABLE, "cycle_card_counts", p, table(true)?));
    }
    if want(FixtureScope::GeneralDecks) {
        let p = BTreeMap::from([("order", 5), ("card_size", 3)]);
        files.push((GENERAL_DECKS, "general_decks", p, general_decks()?));
    }
    let mut written = Vec::new();
    let mut manifest: BTreeMap<&str, ManifestEntry> = BTreeMap::new();
    for (name, scope_name, parameters, body) in files {
        let path = dir.join(name);
        fs::write(&path, &body)?;
        written.push(path);
        let sha256 = hex::encode(Sha256::digest(body.as_bytes()));
        manifest.insert(
            name,
            ManifestEntry {
                scope: scope_name,
                parameters,
                sha256,
            },
        );
    }
    if scope == FixtureScope::All {
        let path = dir.join(MANIFEST);
        fs::write(&path, render(&manifest))?;
        written.push(path);
    }
    Ok(written)
}
