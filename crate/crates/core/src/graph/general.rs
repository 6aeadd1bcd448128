use crate::error::{ensure_size, Error, Result};

/// Small labeled simple graph, one adjacency bitmask per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneralGraph {
    n: usize,
    adj: Vec<u64>,
}

impl GeneralGraph {
    /// Vertex bound imposed by the 64-bit adjacency rows.
    pub const MAX_ORDER: usize = 64;

    pub fn new(n: usize) -> Result<Self> {
        ensure_size("general graph order", n, Self::MAX_ORDER)?;
        Ok(Self { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, checking symmetry and loops.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        ensure_size("general graph order", n, Self::MAX_ORDER)?;
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        for (v, &row) in adj.iter().enumerate() {
            if row & !full != 0 {
                return Err(Error::Malformed(format!(
                    "vertex {v} has out-of-range neighbor"
                )));
            }
            if row >> v & 1 == 1 {
                return Err(Error::Malformed(format!("loop at vertex {v}")));
            }
            let mut rest = row;
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if adj[u] >> v & 1 == 0 {
                    return Err(Error::Malformed(format!("asymmetric edge {v}-{u}")));
                }
            }
        }
        Ok(Self { n, adj })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidArgument(format!(
                "edge {u}-{v} out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Sorted (ascending) degree multiset.
    pub fn degree_list(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub(crate) fn edges_within(&self, verts: u64) -> usize {
        let mut total = 0;
        let mut rest = verts;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            total += (self.adj[v] & verts).count_ones() as usize;
        }
        total / 2
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<GeneralGraph> {
        if perm.len() != self.n {
            return Err(Error::InvalidArgument("permutation length mismatch".into()));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidArgument("not a permutation".into()));
            }
        }
        let mut out = GeneralGraph::new(self.n)?;
        for (u, v) in self.edges() {
            out.add_edge(perm[u], perm[v])?;
        }
        Ok(out)
    }

    /// Induced subgraph on `verts` (ascending), relabeled `0..verts.len()`.
    pub fn induced(&self, verts: &[usize]) -> GeneralGraph {
        let mut out = GeneralGraph {
            n: verts.len(),
            adj: vec![0; verts.len()],
        };
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    out.adj[i] |= 1 << j;
                    out.adj[j] |= 1 << i;
                }
            }
        }
        out
    }

    pub fn disjoint_union(&self, other: &GeneralGraph) -> Result<GeneralGraph> {
        let mut out = GeneralGraph::new(self.n + other.n)?;
        for (u, v) in self.edges() {
            out.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            out.add_edge(self.n + u, self.n + v)?;
        }
        Ok(out)
    }

    /// Parses the edge-list format: first line `n m`, then `m` lines `u v`
    /// with 0-based endpoints. Blank lines are skipped.
    pub fn parse_edge_list(text: &str) -> Result<GeneralGraph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (lineno, header) = lines
            .next()
            .ok_or_else(|| Error::Malformed("edge list is empty".into()))?;
        let nums = parse_pair(header, lineno)?;
        let (n, m) = nums;
        let mut g = GeneralGraph::new(n)?;
        let mut read = 0;
        for (lineno, line) in lines {
            let (u, v) = parse_pair(line, lineno)?;
            if u >= n || v >= n || u == v {
                return Err(Error::Malformed(format!(
                    "line {lineno}: invalid edge {u} {v}"
                )));
            }
            if g.has_edge(u, v) {
                return Err(Error::Malformed(format!(
                    "line {lineno}: duplicate edge {u} {v}"
                )));
            }
            g.add_edge(u, v)?;
            read += 1;
        }
        if read != m {
            return Err(Error::Malformed(format!(
                "header declares {m} edges, found {read}"
            )));
        }
        Ok(g)
    }

    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut s = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize> {
        it.next()
            .ok_or_else(|| Error::Malformed(format!("line {lineno}: expected two integers")))?
            .parse::<usize>()
            .map_err(|e| Error::Malformed(format!("line {lineno}: {e}")))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(Error::Malformed(format!("line {lineno}: trailing tokens")));
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_degrees() {
        let k13 = GeneralGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(k13.degree_list(), vec![1, 1, 1, 3]);
        assert_eq!(k13.max_degree(), 3);
    }

    #[test]
    fn edge_list_roundtrip() {
        let g = GeneralGraph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let parsed = GeneralGraph::parse_edge_list(&g.to_edge_list()).unwrap();
        assert_eq!(parsed, g);
    }

    #[test]
    fn edge_list_errors() {
        assert!(GeneralGraph::parse_edge_list("").is_err());
        assert!(GeneralGraph::parse_edge_list("3 2\n0 1\n").is_err());
        assert!(GeneralGraph::parse_edge_list("3 1\n0 3\n").is_err());
        assert!(GeneralGraph::parse_edge_list("3 1\n1 1\n").is_err());
        assert!(GeneralGraph::parse_edge_list("3 2\n0 1\n1 0\n").is_err());
        assert!(GeneralGraph::parse_edge_list("65 0\n").is_err());
    }

    #[test]
    fn components_and_induced() {
        let g = GeneralGraph::from_edges(6, &[(0, 1), (1, 2), (4, 5)]).unwrap();
        assert_eq!(g.connected_components(), vec![0b111, 0b1000, 0b110000]);
        let h = g.induced(&[1, 2, 4, 5]);
        assert_eq!(h.edges(), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn adjacency_validation() {
        assert!(GeneralGraph::from_adjacency(vec![0b10, 0b00]).is_err());
        assert!(GeneralGraph::from_adjacency(vec![0b1]).is_err());
        assert!(GeneralGraph::from_adjacency(vec![0b10, 0b01]).is_ok());
    }
}
