use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::GeneralGraph;

/// A connected graph with maximum degree at most 2.
///
/// Lengths are vertex counts, so `Path(1)` is an isolated vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Component {
    Cycle(usize),
    Path(usize),
}

impl Component {
    pub fn cycle(len: usize) -> Result<Self> {
        if len < 3 {
            return Err(Error::InvalidLength { kind: "cycle", len });
        }
        Ok(Component::Cycle(len))
    }

    pub fn path(len: usize) -> Result<Self> {
        if len < 1 {
            return Err(Error::InvalidLength { kind: "path", len });
        }
        Ok(Component::Path(len))
    }

    pub fn order(&self) -> usize {
        match *self {
            Component::Cycle(n) | Component::Path(n) => n,
        }
    }

    pub fn edge_count(&self) -> usize {
        match *self {
            Component::Cycle(n) => n,
            Component::Path(n) => n - 1,
        }
    }

    pub fn is_cycle(&self) -> bool {
        matches!(self, Component::Cycle(_))
    }

    pub fn letter(&self) -> char {
        match self {
            Component::Cycle(_) => 'C',
            Component::Path(_) => 'P',
        }
    }

    /// Number of induced copies of `P_j` inside this component.
    pub fn induced_paths(&self, j: usize) -> usize {
        if j == 0 {
            return 1;
        }
        match *self {
            Component::Cycle(m) if j < m => m,
            Component::Cycle(_) => 0,
            Component::Path(m) if j <= m => m - j + 1,
            Component::Path(_) => 0,
        }
    }
}

// Canonical order: larger first, cycle before path on equal size.
impl Ord for Component {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .order()
            .cmp(&self.order())
            .then_with(|| other.is_cycle().cmp(&self.is_cycle()))
    }
}

impl PartialOrd for Component {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter(), self.order())
    }
}

/// Graph with maximum degree at most 2, stored as its multiset of path and
/// cycle components in canonical order. Structural equality is isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MaxDeg2Graph {
    components: Vec<Component>,
}

impl MaxDeg2Graph {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a graph from components that are already validated.
    pub fn new(mut components: Vec<Component>) -> Result<Self> {
        for c in &components {
            match *c {
                Component::Cycle(len) if len < 3 => {
                    return Err(Error::InvalidLength { kind: "cycle", len })
                }
                Component::Path(0) => {
                    return Err(Error::InvalidLength {
                        kind: "path",
                        len: 0,
                    })
                }
                _ => {}
            }
        }
        components.sort();
        Ok(Self { components })
    }

    pub(crate) fn from_sorted_unchecked(components: Vec<Component>) -> Self {
        debug_assert!(components.windows(2).all(|w| w[0] <= w[1]));
        Self { components }
    }

    pub fn cycle(len: usize) -> Result<Self> {
        Ok(Self {
            components: vec![Component::cycle(len)?],
        })
    }

    pub fn path(len: usize) -> Result<Self> {
        Ok(Self {
            components: vec![Component::path(len)?],
        })
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn order(&self) -> usize {
        self.components.iter().map(Component::order).sum()
    }

    pub fn edge_count(&self) -> usize {
        self.components.iter().map(Component::edge_count).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() == 1
    }

    pub fn count(&self, c: Component) -> usize {
        self.components.iter().filter(|&&x| x == c).count()
    }

    pub fn contains(&self, c: Component) -> bool {
        self.components.contains(&c)
    }

    pub fn max_degree(&self) -> usize {
        self.components
            .iter()
            .map(|c| match *c {
                Component::Cycle(_) => 2,
                Component::Path(1) => 0,
                Component::Path(2) => 1,
                Component::Path(_) => 2,
            })
            .max()
            .unwrap_or(0)
    }

    /// Sorted (ascending) degree multiset.
    pub fn degree_list(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.order());
        for c in &self.components {
            match *c {
                Component::Cycle(n) => out.extend(std::iter::repeat(2).take(n)),
                Component::Path(1) => out.push(0),
                Component::Path(n) => {
                    out.extend([1, 1]);
                    out.extend(std::iter::repeat(2).take(n - 2));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Disjoint union.
    pub fn union(&self, other: &MaxDeg2Graph) -> MaxDeg2Graph {
        let mut components = Vec::with_capacity(self.components.len() + other.components.len());
        let (mut i, mut j) = (0, 0);
        while i < self.components.len() && j < other.components.len() {
            if self.components[i] <= other.components[j] {
                components.push(self.components[i]);
                i += 1;
            } else {
                components.push(other.components[j]);
                j += 1;
            }
        }
        components.extend_from_slice(&self.components[i..]);
        components.extend_from_slice(&other.components[j..]);
        MaxDeg2Graph { components }
    }

    /// Number of induced copies of `P_j`.
    pub fn induced_paths(&self, j: usize) -> usize {
        self.components.iter().map(|c| c.induced_paths(j)).sum()
    }

    /// Groups equal components: `(component, multiplicity)` in canonical order.
    pub fn runs(&self) -> Vec<(Component, usize)> {
        let mut out: Vec<(Component, usize)> = Vec::new();
        for &c in &self.components {
            match out.last_mut() {
                Some((last, n)) if *last == c => *n += 1,
                _ => out.push((c, 1)),
            }
        }
        out
    }

    /// Labeled realization: components in canonical order, each one's
    /// vertices consecutive, cycles closed from the last vertex to the first.
    pub fn to_general(&self) -> Result<GeneralGraph> {
        let mut g = GeneralGraph::new(self.order())?;
        let mut base = 0;
        for c in &self.components {
            let len = c.order();
            for i in 1..len {
                g.add_edge(base + i - 1, base + i)?;
            }
            if c.is_cycle() {
                g.add_edge(base + len - 1, base)?;
            }
            base += len;
        }
        Ok(g)
    }

    /// Decomposes a general graph with maximum degree at most 2.
    pub fn from_general(g: &GeneralGraph) -> Option<MaxDeg2Graph> {
        if g.max_degree() > 2 {
            return None;
        }
        let components = g
            .connected_components()
            .into_iter()
            .map(|verts| {
                let len = verts.count_ones() as usize;
                let edges: usize = g.edges_within(verts);
                if edges == len && len >= 3 {
                    Component::Cycle(len)
                } else {
                    Component::Path(len)
                }
            })
            .collect();
        let mut comps: Vec<Component> = components;
        comps.sort();
        Some(MaxDeg2Graph { components: comps })
    }

    /// Card-style key: `C5+P3+P1^2`, or `empty` for the graph on no vertices.
    pub fn card_key(&self) -> String {
        if self.is_empty() {
            return "empty".to_string();
        }
        self.runs()
            .iter()
            .map(|(c, mult)| {
                if *mult == 1 {
                    c.to_string()
                } else {
                    format!("{c}^{mult}")
                }
            })
            .collect::<Vec<_>>()
            .join("+")
    }
}

/// Component-string rendering: `2C5+P3+3P1`, `empty` for no components.
impl fmt::Display for MaxDeg2Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("empty");
        }
        let mut first = true;
        for (c, mult) in self.runs() {
            if !first {
                f.write_str("+")?;
            }
            first = false;
            if mult > 1 {
                write!(f, "{mult}")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
