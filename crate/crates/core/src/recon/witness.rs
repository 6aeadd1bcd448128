use serde::Serialize;

use crate::deck::{deck_profile, deck_profile_bruteforce, DeckProfile};
use crate::error::{Error, Result};
use crate::graph::{AnyGraph, Component, GeneralGraph, MaxDeg2Graph};

/// Families of graphs with maximum degree 3 sharing a 3-deck with a
/// max-degree-2 graph that has an isolated vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ImpostorFamily {
    /// `C_m + P_1` against `Y_{m+1}`, `m >= 4`.
    CycleWithIsolated { m: usize },
    /// `P_m + P_1` against `Y_{m-1} + P_2`, `m >= 5`.
    PathWithIsolated { m: usize },
    /// `P_4 + C_3 + P_1` against the paw plus `2P_2`.
    Paw,
    /// `4C_3 + 4P_1` against `K_4 + 6P_2`.
    CompleteFour,
}

/// Equal-deck constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairKind {
    /// `C_{q+r}` and `C_q + C_r`, `q, r >= k+1`.
    Fact1 {
        q: usize,
        r: usize,
        k: usize,
    },
    /// `P_{q+r}` and `C_q + P_r`, `q >= k+1`, `r >= k-1`.
    Fact2 {
        q: usize,
        r: usize,
        k: usize,
    },
    /// `P_{q-1} + P_r` and `P_q + P_{r-1}`, `q, r >= k`, `q != r`.
    Fact3 {
        q: usize,
        r: usize,
        k: usize,
    },
    /// Absorbing a cycle into a path; same graphs and hypotheses as `Fact2`.
    CyclePath {
        q: usize,
        r: usize,
        k: usize,
    },
    /// Splitting a cycle in two; same graphs and hypotheses as `Fact1`.
    CycleSplit {
        q: usize,
        r: usize,
        k: usize,
    },
    /// `P_n` and `C_{ceil(n/2)+1} + P_{floor(n/2)-1}` at `k = floor(n/2)`;
    /// the second graph is disconnected. At `n = 3` the path part is empty.
    Connectedness {
        n: usize,
    },
    /// The star forests `G_k` (maximum degree `k`) and `H_k` (maximum
    /// degree `k-1`), `2 <= k <= 5`.
    ManvelForest {
        k: usize,
    },
    Degree3Impostor(ImpostorFamily),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualPair {
    pub kind: PairKind,
    pub a: AnyGraph,
    pub b: AnyGraph,
    pub a_name: String,
    pub b_name: String,
    /// Card size at which the decks agree.
    pub k: usize,
}

impl EqualPair {
    pub fn decks(&self) -> Result<(DeckProfile, DeckProfile)> {
        Ok((deck_of(&self.a, self.k)?, deck_of(&self.b, self.k)?))
    }

    pub fn decks_at(&self, k: usize) -> Result<(DeckProfile, DeckProfile)> {
        Ok((deck_of(&self.a, k)?, deck_of(&self.b, k)?))
    }
}

#[derive(Serialize)]
struct GraphJson<'a> {
    name: &'a str,
    order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    edges: Option<Vec<(usize, usize)>>,
}

impl<'a> GraphJson<'a> {
    fn new(name: &'a str, g: &AnyGraph) -> Self {
        let edges = match g {
            AnyGraph::MaxDeg2(_) => None,
            AnyGraph::General(g) => Some(g.edges()),
        };
        GraphJson {
            name,
            order: g.order(),
            edges,
        }
    }
}

impl Serialize for EqualPair {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            kind: PairKind,
            a: GraphJson<'a>,
            b: GraphJson<'a>,
            k: usize,
        }
        Out {
            kind: self.kind,
            a: GraphJson::new(&self.a_name, &self.a),
            b: GraphJson::new(&self.b_name, &self.b),
            k: self.k,
        }
        .serialize(s)
    }
}

/// `k`-deck of either graph kind: componentwise for max-degree-2 graphs,
/// by subset enumeration otherwise.
pub fn deck_of(g: &AnyGraph, k: usize) -> Result<DeckProfile> {
    match g {
        AnyGraph::MaxDeg2(g) => deck_profile(g, k),
        AnyGraph::General(g) => deck_profile_bruteforce(g, k),
    }
}

fn hyp(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Hypothesis(msg()))
    }
}

fn lin(comps: Vec<Component>) -> Result<(AnyGraph, String)> {
    let g = MaxDeg2Graph::new(comps)?;
    let name = g.to_string();
    Ok((AnyGraph::MaxDeg2(g), name))
}

fn cycle_split(q: usize, r: usize, k: usize) -> Result<[(AnyGraph, String); 2]> {
    hyp(q >= k + 1 && r >= k + 1, || {
        format!("need q, r >= k+1 = {}, got q={q}, r={r}", k + 1)
    })?;
    hyp(q >= 3 && r >= 3, || {
        format!("cycles need 3 vertices, got q={q}, r={r}")
    })?;
    Ok([
        lin(vec![Component::Cycle(q + r)])?,
        lin(vec![Component::Cycle(q), Component::Cycle(r)])?,
    ])
}

fn cycle_path(q: usize, r: usize, k: usize) -> Result<[(AnyGraph, String); 2]> {
    hyp(q >= k + 1 && q >= 3, || {
        format!("need q >= max(k+1, 3), got q={q}, k={k}")
    })?;
    hyp(r + 1 >= k && r >= 1, || {
        format!("need r >= max(k-1, 1), got r={r}, k={k}")
    })?;
    Ok([
        lin(vec![Component::Path(q + r)])?,
        lin(vec![Component::Cycle(q), Component::Path(r)])?,
    ])
}

/// The spider with legs of length 1, 1 and `r - 3`: a tree on `r` vertices
/// with three leaves. Vertex 0 is the branch vertex.
pub fn spider_y(r: usize) -> Result<GeneralGraph> {
    hyp(r >= 4, || format!("Y_r needs r >= 4, got {r}"))?;
    let mut edges = vec![(0, 1), (0, 2), (0, 3)];
    edges.extend((3..r - 1).map(|v| (v, v + 1)));
    GeneralGraph::from_edges(r, &edges)
}

fn star_forest(parts: impl Iterator<Item = (usize, usize)>) -> Result<GeneralGraph> {
    let mut edges = Vec::new();
    let mut n = 0;
    for (copies, leaves) in parts {
        for _ in 0..copies {
            edges.extend((1..=leaves).map(|l| (n, n + l)));
            n += leaves + 1;
        }
    }
    GeneralGraph::from_edges(n, &edges)
}

fn binomial_usize(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `G_k`: `C(k, 2i)` copies of `K_{1,k-2i}` for `0 <= i <= floor(k/2)`.
pub fn manvel_g(k: usize) -> Result<GeneralGraph> {
    star_forest((0..=k / 2).map(|i| (binomial_usize(k, 2 * i), k - 2 * i)))
}

/// `H_k`: `C(k, 2i+1)` copies of `K_{1,k-2i-1}` for `0 <= i <= floor((k-1)/2)`.
pub fn manvel_h(k: usize) -> Result<GeneralGraph> {
    star_forest((0..=(k - 1) / 2).map(|i| (binomial_usize(k, 2 * i + 1), k - 2 * i - 1)))
}

fn general(g: GeneralGraph, name: impl Into<String>) -> (AnyGraph, String) {
    (AnyGraph::General(g), name.into())
}

fn matching(pairs: usize) -> Result<GeneralGraph> {
    GeneralGraph::from_edges(
        2 * pairs,
        &(0..pairs).map(|i| (2 * i, 2 * i + 1)).collect::<Vec<_>>(),
    )
}

/// Builds the pair for `kind` after checking its hypotheses.
pub fn gen_equal_pair(kind: PairKind) -> Result<EqualPair> {
    let (pair, k) = match kind {
        PairKind::Fact1 { q, r, k } | PairKind::CycleSplit { q, r, k } => {
            (cycle_split(q, r, k)?, k)
        }
        PairKind::Fact2 { q, r, k } | PairKind::CyclePath { q, r, k } => (cycle_path(q, r, k)?, k),
        PairKind::Fact3 { q, r, k } => {
            hyp(q >= k && r >= k, || {
                format!("need q, r >= k = {k}, got q={q}, r={r}")
            })?;
            hyp(q >= 2 && r >= 2, || {
                format!("need q, r >= 2, got q={q}, r={r}")
            })?;
            hyp(q != r, || format!("q = r = {q} gives the same graph twice"))?;
            let a = lin(vec![Component::Path(q - 1), Component::Path(r)])?;
            let b = lin(vec![Component::Path(q), Component::Path(r - 1)])?;
            ([a, b], k)
        }
        PairKind::Connectedness { n } => {
            hyp(n >= 3, || format!("need n >= 3, got {n}"))?;
            let (q, r) = (n.div_ceil(2) + 1, n / 2 - 1);
            let mut other = vec![Component::Cycle(q)];
            if r > 0 {
                other.push(Component::Path(r));
            }
            ([lin(vec![Component::Path(n)])?, lin(other)?], n / 2)
        }
        PairKind::ManvelForest { k } => {
            hyp((2..=5).contains(&k), || {
                format!("need 2 <= k <= 5, got {k}")
            })?;
            (
                [
                    general(manvel_g(k)?, format!("G_{k}")),
                    general(manvel_h(k)?, format!("H_{k}")),
                ],
                k,
            )
        }
        PairKind::Degree3Impostor(family) => (impostor(family)?, 3),
    };
    let [(a, a_name), (b, b_name)] = pair;
    Ok(EqualPair {
        kind,
        a,
        b,
        a_name,
        b_name,
        k,
    })
}

fn impostor(family: ImpostorFamily) -> Result<[(AnyGraph, String); 2]> {
    Ok(match family {
        ImpostorFamily::CycleWithIsolated { m } => {
            hyp(m >= 4, || format!("need m >= 4, got {m}"))?;
            [
                lin(vec![Component::Cycle(m), Component::Path(1)])?,
                general(spider_y(m + 1)?, format!("Y_{}", m + 1)),
            ]
        }
        ImpostorFamily::PathWithIsolated { m } => {
            hyp(m >= 5, || format!("need m >= 5, got {m}"))?;
            [
                lin(vec![Component::Path(m), Component::Path(1)])?,
                general(
                    spider_y(m - 1)?.disjoint_union(&matching(1)?)?,
                    format!("Y_{}+P2", m - 1),
                ),
            ]
        }
        ImpostorFamily::Paw => {
            let paw = GeneralGraph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (0, 3)])?;
            [
                lin(vec![
                    Component::Path(4),
                    Component::Cycle(3),
                    Component::Path(1),
                ])?,
                general(paw.disjoint_union(&matching(2)?)?, "K13^+ +2P2"),
            ]
        }
        ImpostorFamily::CompleteFour => {
            let k4 =
                GeneralGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])?;
            let mut a = vec![Component::Cycle(3); 4];
            a.extend([Component::Path(1); 4]);
            [
                lin(a)?,
                general(k4.disjoint_union(&matching(6)?)?, "K4+6P2"),
            ]
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::degree_list;

    fn equal(kind: PairKind) -> bool {
        let p = gen_equal_pair(kind).unwrap();
        let (a, b) = p.decks().unwrap();
        a == b
    }

    #[test]
    fn fact2_example() {
        let p = gen_equal_pair(PairKind::Fact2 { q: 5, r: 3, k: 4 }).unwrap();
        assert_eq!(
            (p.a_name.as_str(), p.b_name.as_str(), p.k),
            ("P8", "C5+P3", 4)
        );
        assert!(equal(p.kind));
    }

    #[test]
    fn connectedness_nine() {
        let p = gen_equal_pair(PairKind::Connectedness { n: 9 }).unwrap();
        assert_eq!(
            (p.a_name.as_str(), p.b_name.as_str(), p.k),
            ("P9", "C6+P3", 4)
        );
        assert!(equal(p.kind));
        let p3 = gen_equal_pair(PairKind::Connectedness { n: 3 }).unwrap();
        assert_eq!(
            (p3.a_name.as_str(), p3.b_name.as_str(), p3.k),
            ("P3", "C3", 1)
        );
    }

    #[test]
    fn manvel_three() {
        let p = gen_equal_pair(PairKind::ManvelForest { k: 3 }).unwrap();
        // K_{1,3} + 3K_{1,1} against 3K_{1,2} + K_{1,0}.
        assert_eq!(degree_list(&p.a), vec![1, 1, 1, 1, 1, 1, 1, 1, 1, 3]);
        assert_eq!(degree_list(&p.b), vec![0, 1, 1, 1, 1, 1, 1, 2, 2, 2]);
        assert!(equal(p.kind));
    }

    #[test]
    fn manvel_orders() {
        assert_eq!(manvel_g(5).unwrap().order(), 56);
        assert_eq!(manvel_h(5).unwrap().order(), 56);
        assert_eq!(manvel_g(4).unwrap().max_degree(), 4);
        assert_eq!(manvel_h(4).unwrap().max_degree(), 3);
    }

    #[test]
    fn impostors() {
        for fam in [
            ImpostorFamily::CycleWithIsolated { m: 4 },
            ImpostorFamily::CycleWithIsolated { m: 7 },
            ImpostorFamily::PathWithIsolated { m: 5 },
            ImpostorFamily::PathWithIsolated { m: 8 },
            ImpostorFamily::Paw,
            ImpostorFamily::CompleteFour,
        ] {
            let p = gen_equal_pair(PairKind::Degree3Impostor(fam)).unwrap();
            assert!(equal(p.kind), "{fam:?}");
            assert_ne!(degree_list(&p.a), degree_list(&p.b));
        }
    }

    #[test]
    fn spider_shape() {
        let y = spider_y(6).unwrap();
        assert_eq!(y.degree_list(), vec![1, 1, 1, 2, 2, 3]);
        assert!(y.is_connected());
        assert!(spider_y(3).is_err());
    }

    #[test]
    fn hypotheses_enforced() {
        let bad = [
            PairKind::Fact1 { q: 4, r: 5, k: 4 },
            PairKind::Fact2 { q: 5, r: 2, k: 4 },
            PairKind::Fact3 { q: 5, r: 5, k: 3 },
            PairKind::Fact3 { q: 2, r: 5, k: 3 },
            PairKind::Connectedness { n: 2 },
            PairKind::ManvelForest { k: 6 },
            PairKind::Degree3Impostor(ImpostorFamily::CycleWithIsolated { m: 3 }),
            PairKind::Degree3Impostor(ImpostorFamily::PathWithIsolated { m: 4 }),
        ];
        for kind in bad {
            assert!(
                matches!(gen_equal_pair(kind), Err(Error::Hypothesis(_))),
                "{kind:?}"
            );
        }
    }

    #[test]
    fn serializes_both_sides() {
        let p = gen_equal_pair(PairKind::Degree3Impostor(ImpostorFamily::Paw)).unwrap();
        let v = serde_json::to_value(&p).unwrap();
        assert_eq!(v["a"]["name"], "P4+C3+P1");
        assert_eq!(v["b"]["edges"].as_array().unwrap().len(), 6);
        assert_eq!(v["k"], 3);
    }
}
