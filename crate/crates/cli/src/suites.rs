use deckkit::deck::{deck_profile, deck_profile_bruteforce, CardShape};
use deckkit::graph::{degree_list, enumerate_maxdeg2, parse_spec, Component, MaxDeg2Graph};
use deckkit::oracle::{cycle_independent_sets, stanley_sweep};
use deckkit::recon::{gen_equal_pair, rho_formula, rho_search, ImpostorFamily, PairKind, Universe};
use deckkit::{Error, Result};
use serde::Serialize;

use crate::{table, Outcome, Suite};

#[derive(Serialize)]
struct Row {
    check: String,
    instances: usize,
    passed: bool,
    detail: String,
}

impl Row {
    fn new(
        check: impl Into<String>,
        instances: usize,
        failures: &[String],
        detail: impl Into<String>,
    ) -> Self {
        let mut detail = detail.into();
        if !failures.is_empty() {
            let shown: Vec<&str> = failures.iter().take(5).map(String::as_str).collect();
            detail = format!("{} failing: {}", failures.len(), shown.join("; "));
        }
        Row {
            check: check.into(),
            instances,
            passed: failures.is_empty(),
            detail,
        }
    }
}

pub fn run(suite: Suite, max_n: Option<usize>) -> Result<Outcome> {
    let (name, rows) = match suite {
        Suite::Main => ("main", main_grid(max_n.unwrap_or(30))?),
        Suite::Stanley => ("stanley", stanley(max_n.unwrap_or(18))?),
        Suite::Exceptions => ("exceptions", exceptions(max_n.unwrap_or(9))?),
        Suite::Manvel => ("manvel", manvel(max_n.unwrap_or(5))?),
        Suite::Rho => ("rho", rho(max_n.unwrap_or(14))?),
    };
    let all = rows.iter().all(|r| r.passed);
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.check.clone(),
                r.instances.to_string(),
                if r.passed { "ok" } else { "FAIL" }.to_string(),
                r.detail.clone(),
            ]
        })
        .collect();
    let mut text = table::columns(&["check", "instances", "result", "detail"], &cells);
    text += &format!(
        "suite {name}: {}\n",
        if all { "all checks hold" } else { "FAILED" }
    );
    let json = serde_json::json!({ "suite": name, "passed": all, "checks": rows });
    Ok(Outcome {
        code: u8::from(!all),
        text,
        json,
    })
}

fn pair_rows(label: &str, kinds: Vec<PairKind>) -> Result<Row> {
    let mut failures = Vec::new();
    for kind in &kinds {
        let p = gen_equal_pair(*kind)?;
        let (a, b) = p.decks()?;
        if a != b {
            failures.push(format!("{} vs {}", p.a_name, p.b_name));
        }
    }
    Ok(Row::new(label, kinds.len(), &failures, ""))
}

/// Equal decks for `C_{q+r}` / `C_q + C_r`, `P_{q+r}` / `C_q + P_r` and
/// `P_{q-1} + P_r` / `P_q + P_{r-1}` under their hypotheses, for `k <= 6`
/// and `q, r <= 2k + 3` with `q + r <= max_n`; then `2C_k` against
/// `C_{2k}`, which must differ.
fn main_grid(max_n: usize) -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    for k in 1..=6usize {
        let (mut f1, mut f2, mut f3) = (Vec::new(), Vec::new(), Vec::new());
        let hi = 2 * k + 3;
        for q in 1..=hi {
            for r in 1..=hi {
                if q + r > max_n {
                    continue;
                }
                if q >= (k + 1).max(3) && r >= (k + 1).max(3) {
                    f1.push(PairKind::Fact1 { q, r, k });
                }
                if q >= (k + 1).max(3) && r + 1 >= k {
                    f2.push(PairKind::Fact2 { q, r, k });
                }
                if q >= k.max(2) && r >= k.max(2) && q != r {
                    f3.push(PairKind::Fact3 { q, r, k });
                }
            }
        }
        rows.push(pair_rows(&format!("C(q+r) ~ Cq+Cr, k={k}"), f1)?);
        rows.push(pair_rows(&format!("P(q+r) ~ Cq+Pr, k={k}"), f2)?);
        rows.push(pair_rows(&format!("P(q-1)+Pr ~ Pq+P(r-1), k={k}"), f3)?);
    }
    let mut failures = Vec::new();
    let mut count = 0;
    for k in 3..=6 {
        if 2 * k > max_n {
            continue;
        }
        count += 1;
        let two = MaxDeg2Graph::new(vec![Component::Cycle(k); 2])?;
        if deck_profile(&two, k)? == deck_profile(&MaxDeg2Graph::cycle(2 * k)?, k)? {
            failures.push(format!("k={k}"));
        }
    }
    rows.push(Row::new(
        "2Ck differs from C2k, k=3..6",
        count,
        &failures,
        "",
    ));
    Ok(rows)
}

fn stanley(max_n: usize) -> Result<Vec<Row>> {
    if max_n > 24 {
        return Err(Error::SizeExceeded {
            what: "stanley order",
            got: max_n,
            limit: 24,
        });
    }
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    let mut count = 0;
    for n in 3..=max_n.min(12) {
        let c = MaxDeg2Graph::cycle(n)?.to_general()?;
        for k in 1..n.min(7) {
            count += 1;
            let brute = deck_profile_bruteforce(&c, k)?.count(&CardShape::independent(k));
            if Some(&brute) != cycle_independent_sets(n, k).as_ref() {
                failures.push(format!("C{n}, k={k}"));
            }
        }
    }
    rows.push(Row::new(
        "closed form vs subset count on C_n",
        count,
        &failures,
        "n <= 12",
    ));
    for k in 1..=6 {
        let mut failures = Vec::new();
        let mut graphs = 0;
        for n in k..=max_n {
            let r = stanley_sweep(n, k)?;
            graphs += r.graphs.len();
            if !r.holds() {
                failures.push(format!("n={n}"));
            }
        }
        rows.push(Row::new(
            format!("equal {k}-decks and f_{k}"),
            graphs,
            &failures,
            format!("n <= {max_n}"),
        ));
    }
    Ok(rows)
}

fn exceptions(max_m: usize) -> Result<Vec<Row>> {
    let mut families = vec![ImpostorFamily::Paw, ImpostorFamily::CompleteFour];
    families.extend((4..=max_m).map(|m| ImpostorFamily::CycleWithIsolated { m }));
    families.extend((5..=max_m).map(|m| ImpostorFamily::PathWithIsolated { m }));
    let mut rows = Vec::new();
    for fam in families {
        let p = gen_equal_pair(PairKind::Degree3Impostor(fam))?;
        let (a, b) = p.decks()?;
        let mut failures = Vec::new();
        if a != b {
            failures.push("3-decks differ".to_string());
        }
        if degree_list(&p.a) == degree_list(&p.b) {
            failures.push("degree lists agree".to_string());
        }
        let detail = format!(
            "C3 {}, P3 {}, P2+P1 {}",
            a.count(&CardShape::cycle(3)),
            a.count(&CardShape::path(3)),
            a.count(&CardShape::Linear(parse_spec("P2+P1")?)),
        );
        rows.push(Row::new(
            format!("{} ~ {}", p.a_name, p.b_name),
            1,
            &failures,
            detail,
        ));
    }
    Ok(rows)
}

fn manvel(max_k: usize) -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    for k in 3..=max_k.min(5) {
        let p = gen_equal_pair(PairKind::ManvelForest { k })?;
        let (a, b) = p.decks()?;
        let (da, db) = (degree_list(&p.a), degree_list(&p.b));
        let mut failures = Vec::new();
        if a != b {
            failures.push(format!("D_{k} differ"));
        }
        if da.last() != Some(&k) || db.last() != Some(&(k - 1)) {
            failures.push("unexpected maximum degrees".to_string());
        }
        let detail = format!("{} vertices, max degree {} vs {}", p.a.order(), k, k - 1);
        rows.push(Row::new(format!("G_{k} ~ H_{k}"), 1, &failures, detail));
    }
    Ok(rows)
}

/// Formula against search: every max-degree-2 graph of order 6..=8 over all
/// graphs, and those of order 6..=max_n whose largest component has at
/// least 6 vertices over max-degree-2 graphs.
fn rho(max_n: usize) -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    for n in 6..=max_n.min(8) {
        let mut failures = Vec::new();
        let graphs = enumerate_maxdeg2(n);
        for g in &graphs {
            let (f, s) = (rho_formula(g)?.rho, rho_search(g, Universe::GENERAL)?);
            if f != s {
                failures.push(format!("{g}: {f} vs {s}"));
            }
        }
        rows.push(Row::new(
            format!("all graphs, n={n}"),
            graphs.len(),
            &failures,
            "",
        ));
    }
    for n in 6..=max_n {
        let mut failures = Vec::new();
        let graphs: Vec<MaxDeg2Graph> = enumerate_maxdeg2(n)
            .into_iter()
            .filter(|g| g.components()[0].order() >= 6)
            .collect();
        for g in &graphs {
            let (f, s) = (rho_formula(g)?.rho, rho_search(g, Universe::MaxDeg2)?);
            if f != s {
                failures.push(format!("{g}: {f} vs {s}"));
            }
        }
        rows.push(Row::new(
            format!("max-degree-2 graphs, n={n}"),
            graphs.len(),
            &failures,
            "",
        ));
    }
    Ok(rows)
}
