use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Component, MaxDeg2Graph};

/// Component statistics feeding the reconstruction-number formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EpsilonValues {
    /// Order of a largest component.
    pub m: usize,
    /// Order of a largest component once one largest component is removed.
    pub m_prime: usize,
    pub epsilon: u8,
    pub epsilon_prime: u8,
}

impl EpsilonValues {
    pub fn k_g(&self) -> usize {
        (self.m / 2 + self.epsilon as usize).max(self.m_prime + self.epsilon_prime as usize)
    }
}

/// Computes `(m, m', epsilon, epsilon')`.
///
/// The `epsilon'` cases are tried in a fixed order: the value 2 case, then
/// the three value 1 cases, otherwise 0.
pub fn epsilon_values(g: &MaxDeg2Graph) -> Result<EpsilonValues> {
    let comps = g.components();
    let m = comps.first().ok_or(Error::EmptyGraph)?.order();
    let m_prime = comps.get(1).map_or(0, Component::order);
    let has_path = |len: usize| len >= 1 && g.contains(Component::Path(len));

    let epsilon = has_path(m) as u8;
    let epsilon_prime = if m_prime + 1 < m && has_path(m_prime) {
        2
    } else if (m_prime + 1 == m && has_path(m_prime))
        || (m_prime < m && m_prime >= 2 && has_path(m_prime - 1) && !has_path(m_prime))
        || (m_prime == m && g.count(Component::Path(m)) >= 2)
    {
        1
    } else {
        0
    };
    Ok(EpsilonValues {
        m,
        m_prime,
        epsilon,
        epsilon_prime,
    })
}

/// Membership in the family of max-degree-2 graphs whose 3-deck is shared
/// with a graph of maximum degree 3: an isolated vertex together with a
/// component of order at least 5, a 4-cycle, `P4 + C3`, or four triangles
/// alongside four isolated vertices.
pub fn in_family_f(g: &MaxDeg2Graph) -> bool {
    let isolated = g.count(Component::Path(1));
    if isolated == 0 {
        return false;
    }
    g.components().iter().any(|c| c.order() >= 5)
        || g.contains(Component::Cycle(4))
        || (g.contains(Component::Path(4)) && g.contains(Component::Cycle(3)))
        || (g.count(Component::Cycle(3)) >= 4 && isolated >= 4)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RhoReport {
    pub graph: String,
    pub m: usize,
    pub m_prime: usize,
    pub epsilon: u8,
    pub epsilon_prime: u8,
    pub k_g: usize,
    pub in_family_f: bool,
    pub rho: usize,
    /// Set when `k_g <= 2` although the graph has a vertex of degree 2. The
    /// formula is known to undershoot on some of these small graphs; the
    /// search oracle is authoritative there.
    pub small_graph_anomaly: bool,
}

pub fn rho_formula(g: &MaxDeg2Graph) -> Result<RhoReport> {
    let eps = epsilon_values(g)?;
    let k_g = eps.k_g();
    let in_f = in_family_f(g);
    let rho = if k_g == 3 && in_f { 4 } else { k_g };
    Ok(RhoReport {
        graph: g.to_string(),
        m: eps.m,
        m_prime: eps.m_prime,
        epsilon: eps.epsilon,
        epsilon_prime: eps.epsilon_prime,
        k_g,
        in_family_f: in_f,
        rho,
        small_graph_anomaly: k_g <= 2 && g.max_degree() == 2,
    })
}
