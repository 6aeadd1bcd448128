use num_bigint::BigUint;
use num_integer::Integer;
use serde::Serialize;

use crate::deck::{deck_profile, CardShape};
use crate::error::{ensure_size, Result};
use crate::graph::{Component, MaxDeg2Graph};
use crate::numeric::{binomial, partitions};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StanleyReport {
    pub n: usize,
    pub k: usize,
    /// Every 2-regular graph on `n` vertices whose cycles exceed `k` vertices.
    pub graphs: Vec<String>,
    pub decks_identical: bool,
    /// Common number of `k`-element independent sets, when there is one.
    #[serde(serialize_with = "decimal_opt")]
    pub f_k: Option<BigUint>,
    /// `n / (n - k) * C(n - k, k)`; absent when `n = k`.
    #[serde(serialize_with = "decimal_opt")]
    pub closed_form: Option<BigUint>,
}

impl StanleyReport {
    pub fn holds(&self) -> bool {
        self.decks_identical
            && (self.graphs.is_empty() || (self.f_k.is_some() && self.f_k == self.closed_form))
    }
}

fn decimal_opt<S: serde::Serializer>(
    x: &Option<BigUint>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.collect_str(v),
        None => s.serialize_none(),
    }
}

/// `n / (n - k) * C(n - k, k)`, the number of `k`-element independent sets
/// of `C_n`.
pub fn cycle_independent_sets(n: usize, k: usize) -> Option<BigUint> {
    if k >= n {
        return None;
    }
    let (q, r) = (BigUint::from(n) * binomial(n - k, k)).div_rem(&BigUint::from(n - k));
    debug_assert!(r == BigUint::from(0u8));
    Some(q)
}

/// Compares the `k`-decks of all 2-regular `n`-vertex graphs whose cycles
/// have more than `k` vertices.
pub fn stanley_sweep(n: usize, k: usize) -> Result<StanleyReport> {
    ensure_size("order", n, 24)?;
    ensure_size("card size", k, 7)?;
    let min_cycle = (k + 1).max(3);
    let graphs: Vec<MaxDeg2Graph> = partitions(n)
        .into_iter()
        .filter(|p| p.iter().all(|&x| x >= min_cycle))
        .map(|p| {
            MaxDeg2Graph::new(p.into_iter().map(Component::Cycle).collect()).expect("lengths >= 3")
        })
        .collect();
    let k = k.min(n);
    let decks = graphs
        .iter()
        .map(|g| deck_profile(g, k))
        .collect::<Result<Vec<_>>>()?;
    let decks_identical = decks.windows(2).all(|w| w[0] == w[1]);
    let counts: Vec<BigUint> = decks
        .iter()
        .map(|d| d.count(&CardShape::independent(k)))
        .collect();
    let f_k = match counts.split_first() {
        Some((first, rest)) if rest.iter().all(|c| c == first) => Some(first.clone()),
        _ => None,
    };
    Ok(StanleyReport {
        n,
        k,
        graphs: graphs.iter().map(|g| g.to_string()).collect(),
        decks_identical,
        f_k,
        closed_form: cycle_independent_sets(n, k),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eighteen_five() {
        let r = stanley_sweep(18, 5).unwrap();
        assert_eq!(
            r.graphs,
            ["C18", "C12+C6", "C11+C7", "C10+C8", "2C9", "3C6"]
        );
        assert!(r.holds());
    }

    #[test]
    fn vacuous_when_n_equals_k() {
        let r = stanley_sweep(4, 4).unwrap();
        assert!(r.graphs.is_empty());
        assert!(r.holds());
    }

    #[test]
    fn closed_form_small() {
        assert_eq!(cycle_independent_sets(5, 2), Some(5u32.into()));
        assert_eq!(cycle_independent_sets(6, 3), Some(2u32.into()));
        assert_eq!(cycle_independent_sets(3, 3), None);
    }

    #[test]
    fn limits() {
        assert!(stanley_sweep(25, 3).is_err());
        assert!(stanley_sweep(20, 8).is_err());
    }
}
