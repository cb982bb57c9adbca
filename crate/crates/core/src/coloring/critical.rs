//! Local degree conditions satisfied by every Δ-critical graph. A violated
//! condition certifies that the graph is not Δ-critical.

use serde::Serialize;

use super::{chi_prime_exact, color_with};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AdjacencyLemma {
    /// For an edge `uv`, `v` has at least `Δ − deg(u) + 1` neighbours of degree `Δ`.
    VizingAdjacency,
    /// For a path `uwv` with `deg(u) + deg(w) = Δ + 2`, every neighbour of `v`
    /// other than `u` and `w` has degree `Δ`.
    Zhang,
    /// For `v` adjacent to `u` and `w` with `deg(u) + deg(v) + deg(w) ≤ 2Δ + 1`,
    /// `v` and `w` have at most `deg(u) + deg(v) − Δ − 3` common neighbours
    /// other than `u`.
    SandersZhao,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub lemma: AdjacencyLemma,
    /// `[u, v]`, `[u, w, v, x]` (x a low-degree neighbour of v), or `[u, v, w]`.
    pub vertices: Vec<usize>,
    /// Required minimum (Vizing) or allowed maximum (the other two).
    pub bound: i64,
    pub observed: i64,
}

/// Checks every instantiation of the three adjacency lemmas.
pub fn criticality_certificates(g: &Graph) -> Vec<Violation> {
    let delta = g.max_degree();
    let deg = |v: usize| g.degree(v);
    let mut out = Vec::new();

    for &(a, b) in g.edges() {
        for (u, v) in [(a, b), (b, a)] {
            let bound = delta as i64 - deg(u) as i64 + 1;
            let observed = g.neighbors(v).iter().filter(|&&x| deg(x) == delta).count() as i64;
            if observed < bound {
                out.push(Violation { lemma: AdjacencyLemma::VizingAdjacency, vertices: vec![u, v], bound, observed });
            }
        }
    }

    for w in 0..g.n() {
        for &u in g.neighbors(w) {
            if deg(u) + deg(w) != delta + 2 {
                continue;
            }
            for &v in g.neighbors(w).iter().filter(|&&v| v != u) {
                let low: Vec<usize> = g
                    .neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&x| x != u && x != w && deg(x) < delta)
                    .collect();
                if let Some(&x) = low.first() {
                    out.push(Violation {
                        lemma: AdjacencyLemma::Zhang,
                        vertices: vec![u, w, v, x],
                        bound: 0,
                        observed: low.len() as i64,
                    });
                }
            }
        }
    }

    for v in 0..g.n() {
        for &u in g.neighbors(v) {
            for &w in g.neighbors(v).iter().filter(|&&w| w != u) {
                if deg(u) + deg(v) + deg(w) > 2 * delta + 1 {
                    continue;
                }
                let bound = deg(u) as i64 + deg(v) as i64 - delta as i64 - 3;
                let observed = g
                    .neighbors(v)
                    .iter()
                    .filter(|&&x| x != u && x != w && g.has_edge(x, w))
                    .count() as i64;
                if observed > bound {
                    out.push(Violation { lemma: AdjacencyLemma::SandersZhao, vertices: vec![u, v, w], bound, observed });
                }
            }
        }
    }
    out
}

/// Class two, and every edge-deleted subgraph is `Δ(g)`-colourable. Graphs
/// with an isolated vertex are never critical (deleting it leaves a proper
/// subgraph with the same chromatic index).
pub fn is_delta_critical(g: &Graph, limit: usize) -> Result<bool> {
    if g.m() > limit {
        return Err(Error::TooLarge { size: g.m(), limit });
    }
    let delta = g.max_degree();
    if g.m() == 0 || (0..g.n()).any(|v| g.degree(v) == 0) {
        return Ok(false);
    }
    if chi_prime_exact(g, limit)? == delta {
        return Ok(false);
    }
    Ok(g.edges().iter().all(|&(u, v)| color_with(&g.without_edge(u, v), delta).is_some()))
}
