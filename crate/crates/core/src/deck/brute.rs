use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use rayon::prelude::*;

use crate::deck::{CardShape, DeckProfile};
use crate::error::{ensure_size, Error, Result};
use crate::graph::{decode, CanonicalCode, GeneralGraph};

type ShapeCache = RwLock<HashMap<(u8, u64), CardShape>>;

fn shape_cache() -> &'static ShapeCache {
    static CACHE: OnceLock<ShapeCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Shape of the `k`-vertex card with the given labeled encoding.
fn classify(k: usize, bits: u64) -> Result<CardShape> {
    if let Some(s) = shape_cache().read().unwrap().get(&(k as u8, bits)) {
        return Ok(s.clone());
    }
    let shape = CardShape::of_graph(&decode(k, bits))?;
    shape_cache()
        .write()
        .unwrap()
        .insert((k as u8, bits), shape.clone());
    Ok(shape)
}

/// Tallies labeled card encodings over every `k`-subset containing `first`
/// as its smallest vertex.
fn tally_from(g: &GeneralGraph, k: usize, first: usize, out: &mut HashMap<u64, u64>) {
    fn go(
        g: &GeneralGraph,
        k: usize,
        chosen: &mut Vec<usize>,
        code: u64,
        next: usize,
        out: &mut HashMap<u64, u64>,
    ) {
        let depth = chosen.len();
        if depth == k {
            *out.entry(code).or_default() += 1;
            return;
        }
        let n = g.order();
        for v in next..=n - (k - depth) {
            let row = g.row(v);
            let mut column = 0u64;
            for &u in chosen.iter() {
                column = column << 1 | (row >> u & 1);
            }
            chosen.push(v);
            go(g, k, chosen, code << depth | column, v + 1, out);
            chosen.pop();
        }
    }
    let mut chosen = vec![first];
    go(g, k, &mut chosen, 0, first + 1, out);
}

/// Reference `k`-deck: visits all `C(n, k)` vertex subsets and classifies
/// each induced card. Cards must have at most [`CanonicalCode::MAX_ORDER`]
/// vertices.
pub fn deck_profile_bruteforce(g: &GeneralGraph, k: usize) -> Result<DeckProfile> {
    let n = g.order();
    if k > n {
        return Err(Error::InvalidArgument(format!(
            "card size {k} exceeds order {n}"
        )));
    }
    ensure_size("card size", k, CanonicalCode::MAX_ORDER)?;
    let mut d = DeckProfile::new(n, k);
    if k == 0 {
        d.add(CardShape::empty(), 1u32.into());
        return Ok(d);
    }
    let tally = |range: std::ops::Range<usize>| {
        let mut local = HashMap::new();
        for first in range {
            tally_from(g, k, first, &mut local);
        }
        local
    };
    let starts = 0..=n - k;
    let merged: HashMap<u64, u64> = if n >= 24 {
        starts
            .into_par_iter()
            .map(|first| tally(first..first + 1))
            .reduce(HashMap::new, |mut a, b| {
                for (code, c) in b {
                    *a.entry(code).or_default() += c;
                }
                a
            })
    } else {
        tally(0..n - k + 1)
    };
    for (bits, count) in merged {
        d.add(classify(k, bits)?, count.into());
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::binomial;

    #[test]
    fn triangle_three_deck() {
        let k3 = GeneralGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let d = deck_profile_bruteforce(&k3, 3).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d.count(&CardShape::cycle(3)), 1u32.into());
    }

    #[test]
    fn totals_are_binomial() {
        let g =
            GeneralGraph::from_edges(7, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (5, 3)]).unwrap();
        for k in 0..=7 {
            assert_eq!(
                deck_profile_bruteforce(&g, k).unwrap().total(),
                binomial(7, k)
            );
        }
    }

    #[test]
    fn p4_and_claw_differ_at_three() {
        let p4 = GeneralGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let k13 = GeneralGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let a = deck_profile_bruteforce(&p4, 3).unwrap();
        let b = deck_profile_bruteforce(&k13, 3).unwrap();
        assert_eq!(a.count(&CardShape::path(3)), 2u32.into());
        assert_eq!(b.count(&CardShape::path(3)), 3u32.into());
        assert_ne!(a, b);
    }

    #[test]
    fn size_limits() {
        let g = GeneralGraph::new(12).unwrap();
        assert!(matches!(
            deck_profile_bruteforce(&g, 11),
            Err(Error::SizeExceeded { .. })
        ));
        assert!(deck_profile_bruteforce(&g, 13).is_err());
    }

    #[test]
    fn parallel_path_matches_serial() {
        // 30 vertices takes the parallel branch; compare against the
        // componentwise deck of the same graph.
        let spec = crate::graph::parse_spec("C9+P8+C5+P4+3P1+C3").unwrap();
        let g = spec.to_general().unwrap();
        assert_eq!(g.order(), 32);
        assert_eq!(
            deck_profile_bruteforce(&g, 4).unwrap(),
            crate::deck::deck_profile(&spec, 4).unwrap()
        );
    }
}
