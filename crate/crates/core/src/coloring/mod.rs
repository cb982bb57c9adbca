//! Edge colouring: Vizing colourings, the exact chromatic index, the
//! fractional chromatic index and adjacency-lemma certificates.

mod critical;
mod exact;
mod fractional;
pub mod lp;
mod vizing;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

pub use critical::{criticality_certificates, is_delta_critical, AdjacencyLemma, Violation};
pub use exact::{chi_prime_exact, chromatic_index, color_with, ChiPrimeMethod, ChromaticIndex, DEFAULT_CHI_LIMIT};
pub use fractional::{
    fractional_chi_prime, fractional_via_lp, maximal_matchings, FractionalIndex, FractionalWitness,
    DEFAULT_FRACTIONAL_LIMIT, DEFAULT_LP_EDGE_LIMIT,
};
pub use vizing::vizing_color;

/// Assignment of colour indices to edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    colors: BTreeMap<Edge, usize>,
}

impl EdgeColoring {
    pub fn new() -> Self {
        EdgeColoring { colors: BTreeMap::new() }
    }

    /// Pairs colours with `g.edges()` by position.
    pub fn from_edge_colors(g: &Graph, colors: &[usize]) -> Self {
        assert_eq!(colors.len(), g.m());
        EdgeColoring { colors: g.edges().iter().copied().zip(colors.iter().copied()).collect() }
    }

    pub fn set(&mut self, u: usize, v: usize, color: usize) {
        self.colors.insert((u.min(v), u.max(v)), color);
    }

    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        self.colors.get(&(u.min(v), u.max(v))).copied()
    }

    /// Number of distinct colours in use.
    pub fn num_colors(&self) -> usize {
        let mut used: Vec<usize> = self.colors.values().copied().collect();
        used.sort_unstable();
        used.dedup();
        used.len()
    }

    /// One more than the largest colour index in use.
    pub fn palette_size(&self) -> usize {
        self.colors.values().max().map_or(0, |&c| c + 1)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, usize)> + '_ {
        self.colors.iter().map(|(&e, &c)| (e, c))
    }
}

impl Default for EdgeColoring {
    fn default() -> Self {
        Self::new()
    }
}

/// A set of pairwise vertex-disjoint edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching(Vec<Edge>);

impl Matching {
    /// Returns `None` if two edges share a vertex.
    pub fn new(edges: impl IntoIterator<Item = Edge>) -> Option<Self> {
        let mut edges: Vec<Edge> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        edges.sort_unstable();
        edges.dedup();
        let mut ends: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        ends.sort_unstable();
        let len = ends.len();
        ends.dedup();
        (ends.len() == len).then_some(Matching(edges))
    }

    pub fn edges(&self) -> &[Edge] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// True iff every edge is coloured and adjacent edges get different colours.
pub fn validate_coloring(g: &Graph, col: &EdgeColoring) -> Result<bool> {
    let mut seen: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for &(u, v) in g.edges() {
        let c = col.get(u, v).ok_or(Error::UncoloredEdge(u, v))?;
        for x in [u, v] {
            if seen[x].contains(&c) {
                return Ok(false);
            }
            seen[x].push(c);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, path};

    #[test]
    fn validate_examples() {
        let k3 = complete_graph(3);
        let col = EdgeColoring::from_edge_colors(&k3, &[0, 1, 2]);
        assert_eq!(validate_coloring(&k3, &col), Ok(true));
        let p3 = path(3);
        let col = EdgeColoring::from_edge_colors(&p3, &[0, 0]);
        assert_eq!(validate_coloring(&p3, &col), Ok(false));
        let mut partial = EdgeColoring::new();
        partial.set(1, 0, 0);
        assert_eq!(validate_coloring(&p3, &partial), Err(Error::UncoloredEdge(1, 2)));
    }

    #[test]
    fn matchings_reject_shared_vertices() {
        assert!(Matching::new([(0, 1), (2, 3)]).is_some());
        assert!(Matching::new([(0, 1), (1, 2)]).is_none());
        assert_eq!(Matching::new([(1, 0)]).unwrap().edges(), &[(0, 1)]);
    }
}
