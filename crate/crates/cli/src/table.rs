use std::fmt::Write;

use deckkit::deck::DeckProfile;

/// Longest card listing printed; `--json` is never truncated.
pub const MAX_ROWS: usize = 50;

pub fn deck(d: &DeckProfile, title: &str) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "{title}: n = {}, k = {}, {} cards, {} shapes",
        d.n(),
        d.k(),
        d.total(),
        d.len()
    )
    .unwrap();
    let rows: Vec<(String, String)> = d.iter().map(|(s, c)| (c.to_string(), s.key())).collect();
    let width = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
    for (count, key) in rows.iter().take(MAX_ROWS) {
        writeln!(out, "  {count:>width$}  {key}").unwrap();
    }
    if rows.len() > MAX_ROWS {
        writeln!(
            out,
            "  ... {} more shapes (use --json for all)",
            rows.len() - MAX_ROWS
        )
        .unwrap();
    }
    out
}

/// Left-aligned columns separated by two spaces.
pub fn columns(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, cell) in width.iter_mut().zip(r) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, (cell, w)) in cells.iter().zip(&width).enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            write!(s, "{cell:<w$}").unwrap();
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for r in rows.iter().take(MAX_ROWS) {
        out += &line(r.iter().map(String::as_str).collect());
    }
    if rows.len() > MAX_ROWS {
        writeln!(
            out,
            "... {} more rows (use --json for all)",
            rows.len() - MAX_ROWS
        )
        .unwrap();
    }
    out
}
