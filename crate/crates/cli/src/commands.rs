use std::fmt::Write;
use std::fs;
use std::path::{Path, PathBuf};

use deckkit::deck::{deck_profile, deck_profile_bruteforce, DeckProfile};
use deckkit::graph::{
    parse_spec, GeneralGraph, MaxDeg2Graph, GENERAL_DEFAULT_MAX, GENERAL_OPT_IN_MAX,
};
use deckkit::oracle::{find_equivalence_classes, fixture_dump, FixtureScope};
use deckkit::recon::{
    self, rho_formula, rho_search, Outcome as Recon, Universe, MAXDEG2_SEARCH_MAX,
};
use deckkit::{Error, Result};
use serde_json::json;

use crate::{table, Outcome, ScopeArg, UniverseArg};

fn spec_deck(spec: &str, k: usize, brute: bool) -> Result<(MaxDeg2Graph, DeckProfile)> {
    let g = parse_spec(spec)?;
    let d = if brute {
        deck_profile_bruteforce(&g.to_general()?, k)?
    } else {
        deck_profile(&g, k)?
    };
    Ok((g, d))
}

fn deck_json(d: &DeckProfile) -> serde_json::Value {
    serde_json::from_str(&d.to_json()).expect("deck JSON parses")
}

pub fn deck(
    graph: Option<String>,
    edges: Option<PathBuf>,
    k: usize,
    brute: bool,
) -> Result<Outcome> {
    let (title, d) = match (graph, edges) {
        (Some(spec), _) => {
            let (g, d) = spec_deck(&spec, k, brute)?;
            (format!("D_{k}({g})"), d)
        }
        (None, Some(path)) => {
            let g = GeneralGraph::parse_edge_list(&fs::read_to_string(&path)?)?;
            (
                format!("D_{k}({})", path.display()),
                deck_profile_bruteforce(&g, k)?,
            )
        }
        (None, None) => return Err(Error::InvalidArgument("give --graph or --edges".into())),
    };
    Ok(Outcome {
        code: 0,
        text: table::deck(&d, &title),
        json: deck_json(&d),
    })
}

pub fn compare(g1: &str, g2: &str, k: usize, brute: bool) -> Result<Outcome> {
    let (a, da) = spec_deck(g1, k, brute)?;
    let (b, db) = spec_deck(g2, k, brute)?;
    if a.order() != b.order() {
        return Err(Error::InvalidArgument(format!(
            "{a} has {} vertices but {b} has {}",
            a.order(),
            b.order()
        )));
    }
    let diff = da.first_difference(&db);
    let (text, first) = match &diff {
        None => (
            format!("D_{k}({a}) = D_{k}({b})\n"),
            serde_json::Value::Null,
        ),
        Some((shape, x, y)) => (
            format!("D_{k}({a}) != D_{k}({b}): card {shape} appears {x} times against {y}\n"),
            json!({ "card": shape.key(), "g1": x.to_string(), "g2": y.to_string() }),
        ),
    };
    Ok(Outcome {
        code: u8::from(diff.is_some()),
        text,
        json: json!({ "g1": a.to_string(), "g2": b.to_string(), "k": k, "equal": diff.is_none(), "first_difference": first }),
    })
}

pub fn rho(spec: &str, verify: Option<UniverseArg>, nmax: Option<usize>) -> Result<Outcome> {
    let g = parse_spec(spec)?;
    let report = rho_formula(&g)?;
    let mut text = String::new();
    writeln!(text, "{g}: rho = {}", report.rho).unwrap();
    writeln!(
        text,
        "  m = {}, m' = {}, epsilon = {}, epsilon' = {}, k_G = {}, in F = {}",
        report.m,
        report.m_prime,
        report.epsilon,
        report.epsilon_prime,
        report.k_g,
        report.in_family_f
    )
    .unwrap();
    if report.small_graph_anomaly {
        writeln!(
            text,
            "  warning: k_G <= 2 with a vertex of degree 2; the formula may undershoot here"
        )
        .unwrap();
    }
    let mut json = serde_json::to_value(&report).expect("report serializes");
    let mut code = 0;
    if let Some(which) = verify {
        let universe = match which {
            UniverseArg::Maxdeg2 => {
                let limit = nmax.unwrap_or(MAXDEG2_SEARCH_MAX);
                check_order(g.order(), limit)?;
                Universe::MaxDeg2
            }
            UniverseArg::General => {
                let limit = nmax.unwrap_or(GENERAL_DEFAULT_MAX).min(GENERAL_OPT_IN_MAX);
                check_order(g.order(), limit)?;
                Universe::General {
                    allow_order_nine: limit >= 9,
                }
            }
        };
        let searched = rho_search(&g, universe)?;
        let agree = searched == report.rho;
        code = u8::from(!agree);
        writeln!(
            text,
            "  search over the {} universe: {searched} ({})",
            universe.name(),
            if agree {
                "verified"
            } else {
                "DISAGREES with the formula"
            }
        )
        .unwrap();
        json["search"] = json!({ "universe": universe.name(), "rho": searched, "agrees": agree });
    }
    Ok(Outcome { code, text, json })
}

fn check_order(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::SizeExceeded {
            what: "order for verification",
            got: n,
            limit,
        });
    }
    Ok(())
}

pub fn reconstruct(path: &Path, n: Option<usize>) -> Result<Outcome> {
    let d = DeckProfile::from_json(&fs::read_to_string(path)?)?;
    let n = n.unwrap_or(d.n());
    let r = recon::reconstruct(&d, n)?;
    let (code, text) = match &r.outcome {
        Recon::Unique(g) => (0, format!("unique: {g}\n")),
        Recon::Ambiguous(gs) => {
            let mut t = format!(
                "ambiguous: {} max-degree-2 graphs share this deck\n",
                gs.len()
            );
            for g in gs {
                writeln!(t, "  {g}").unwrap();
            }
            (1, t)
        }
        Recon::Inconsistent(reason) => (2, format!("inconsistent: {reason}\n")),
    };
    Ok(Outcome {
        code,
        text,
        json: serde_json::to_value(&r).expect("result serializes"),
    })
}

pub fn pairs(n: usize, k: usize, universe: UniverseArg, allow_order_nine: bool) -> Result<Outcome> {
    let universe = match universe {
        UniverseArg::Maxdeg2 => Universe::MaxDeg2,
        UniverseArg::General => Universe::General { allow_order_nine },
    };
    let report = find_equivalence_classes(n, k, universe)?;
    let mut rows = Vec::new();
    for (i, class) in report.classes.iter().enumerate() {
        for m in class {
            rows.push(vec![
                (i + 1).to_string(),
                m.label.clone(),
                m.edges.to_string(),
                if m.connected { "yes" } else { "no" }.to_string(),
            ]);
        }
    }
    let mut text = format!(
        "{} universe, n = {n}, k = {k}: {} graphs, {} classes with equal {k}-decks\n",
        report.universe,
        report.graphs,
        report.classes.len()
    );
    if !rows.is_empty() {
        text += &table::columns(&["class", "graph", "edges", "connected"], &rows);
    }
    Ok(Outcome {
        code: 0,
        text,
        json: serde_json::to_value(&report).expect("report serializes"),
    })
}

pub fn fixtures(out: &Path, scope: ScopeArg) -> Result<Outcome> {
    let scope = match scope {
        ScopeArg::All => FixtureScope::All,
        ScopeArg::Path => FixtureScope::PathCounts,
        ScopeArg::Cycle => FixtureScope::CycleCounts,
        ScopeArg::General => FixtureScope::GeneralDecks,
    };
    let written = fixture_dump(scope, out)?;
    let names: Vec<String> = written.iter().map(|p| p.display().to_string()).collect();
    let text = names.iter().map(|n| format!("wrote {n}\n")).collect();
    Ok(Outcome {
        code: 0,
        text,
        json: json!({ "written": names }),
    })
}
