//! Edge-count bounds for graphs of bounded treewidth or degeneracy, and
//! overfullness.
//!
//! All three bounds are stated for `2|E|`:
//!
//! * treewidth: `Δn − (Δ−k)(Δ−k+1)`, for treewidth `k` and `Δ ≥ k`;
//! * rose: `2kn − k(k+1)`, for treewidth `k`;
//! * degenerate: `Δn − (Δ−k)(Δ−k+1)/2`, for `k`-degenerate graphs with `Δ ≥ k`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_OVERFULL_LIMIT: usize = 18;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BoundModel {
    #[serde(rename = "eq1_treewidth")]
    Treewidth,
    #[serde(rename = "eq2_rose")]
    Rose,
    #[serde(rename = "eq_degenerate")]
    Degenerate,
}

impl BoundModel {
    pub const ALL: [BoundModel; 3] = [BoundModel::Treewidth, BoundModel::Rose, BoundModel::Degenerate];

    pub fn name(self) -> &'static str {
        match self {
            BoundModel::Treewidth => "eq1_treewidth",
            BoundModel::Rose => "eq2_rose",
            BoundModel::Degenerate => "eq_degenerate",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub model: BoundModel,
    pub n: usize,
    pub delta: usize,
    pub k: usize,
    /// Largest `2|E|` the bound allows.
    pub rhs: i64,
    /// Actual `2|E|`.
    pub actual: i64,
    pub tight: bool,
}

impl BoundReport {
    pub fn holds(&self) -> bool {
        self.actual <= self.rhs
    }
}

pub fn edge_bound_rhs(n: usize, delta: usize, k: usize, model: BoundModel) -> Result<i64> {
    if n < k + 1 {
        return Err(Error::HypothesisViolated(format!("n = {n} < k + 1 = {}", k + 1)));
    }
    let (n, delta, k) = (n as i64, delta as i64, k as i64);
    let loss = (delta - k) * (delta - k + 1);
    match model {
        BoundModel::Rose => Ok(2 * k * n - k * (k + 1)),
        _ if delta < k => Err(Error::HypothesisViolated(format!("Δ = {delta} < k = {k}"))),
        BoundModel::Treewidth => Ok(delta * n - loss),
        // (Δ−k)(Δ−k+1) is a product of consecutive integers, hence even.
        BoundModel::Degenerate => Ok(delta * n - loss / 2),
    }
}

/// Compares `2|E(g)|` against the bound. The caller vouches for `k`
/// (treewidth for the first two models, degeneracy for the third).
pub fn check_edge_bound(g: &Graph, k: usize, model: BoundModel) -> Result<BoundReport> {
    let delta = g.max_degree();
    let rhs = edge_bound_rhs(g.n(), delta, k, model)?;
    let actual = 2 * g.m() as i64;
    Ok(BoundReport { model, n: g.n(), delta, k, rhs, actual, tight: actual == rhs })
}

/// Odd order `n` and more than `Δ(n−1)/2` edges.
pub fn is_overfull(g: &Graph) -> bool {
    g.n() % 2 == 1 && 2 * g.m() > g.max_degree() * (g.n() - 1)
}

/// Searches odd vertex sets `S`, `|S| ≥ 3`, containing a maximum-degree
/// vertex, for one inducing an overfull subgraph `H` with `Δ(H) = Δ(G)`.
/// Returns the smallest such set (ties by lowest bitmask).
pub fn find_overfull_subgraph(g: &Graph, limit: usize) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    if n > limit || n > 30 {
        return Err(Error::TooLarge { size: n, limit: limit.min(30) });
    }
    let delta = g.max_degree();
    if delta == 0 {
        return Ok(None);
    }
    let adj = g.adjacency_masks();
    let top: u64 = (0..n).filter(|&v| g.degree(v) == delta).fold(0, |m, v| m | 1 << v);
    let mut best: Option<(u32, u64)> = None;
    for s in 1u64..(1 << n) {
        let size = s.count_ones();
        if size < 3 || size % 2 == 0 || s & top == 0 {
            continue;
        }
        if best.is_some_and(|(b, _)| size >= b) {
            continue;
        }
        let (mut twice_edges, mut inner_delta) = (0u32, 0u32);
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (adj[v] & s).count_ones();
            twice_edges += d;
            inner_delta = inner_delta.max(d);
        }
        if inner_delta as usize == delta && twice_edges as usize > delta * (size as usize - 1) {
            best = Some((size, s));
        }
    }
    Ok(best.map(|(_, s)| (0..n).filter(|&v| s & 1 << v != 0).collect()))
}

/// `Δ ≥ k + √k`, decided in integers as `Δ ≥ k` and `(Δ−k)² ≥ k`.
pub fn lemma4_applies(delta: usize, k: usize) -> bool {
    delta >= k && (delta - k) * (delta - k) >= k
}

/// `Δ ≥ k + 1/2 + √(2k + 1/4)`, decided in integers as
/// `2Δ−2k−1 ≥ 0` and `(2Δ−2k−1)² ≥ 8k+1`.
pub fn degenerate_fractional_applies(delta: usize, k: usize) -> bool {
    let x = 2 * delta as i64 - 2 * k as i64 - 1;
    x >= 0 && x * x >= 8 * k as i64 + 1
}

/// For a graph of treewidth at most `k` with `Δ ≥ k + √k`, returns whether
/// the graph is not overfull (the expected answer is always `true`).
pub fn verify_lemma4(g: &Graph, k: usize) -> Result<bool> {
    let delta = g.max_degree();
    if !lemma4_applies(delta, k) {
        return Err(Error::HypothesisViolated(format!(
            "Δ = {delta} is below k + √k for k = {k}"
        )));
    }
    Ok(!is_overfull(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle, path_power, petersen, Graph};
    use proptest::prelude::*;

    /// K_5 plus two vertices joined to all of it.
    fn apex_5_2() -> Graph {
        let mut pairs: Vec<(usize, usize)> = complete_graph(5).edges().to_vec();
        for a in 5..7 {
            pairs.extend((0..5).map(|v| (v, a)));
        }
        Graph::new(7, pairs).unwrap()
    }

    #[test]
    fn rhs_examples() {
        assert_eq!(edge_bound_rhs(7, 6, 5, BoundModel::Treewidth), Ok(40));
        assert_eq!(edge_bound_rhs(7, 6, 5, BoundModel::Rose), Ok(40));
        assert_eq!(edge_bound_rhs(5, 3, 2, BoundModel::Degenerate), Ok(14));
        assert!(matches!(edge_bound_rhs(7, 3, 5, BoundModel::Treewidth), Err(Error::HypothesisViolated(_))));
        assert!(matches!(edge_bound_rhs(3, 3, 5, BoundModel::Rose), Err(Error::HypothesisViolated(_))));
        assert_eq!(edge_bound_rhs(7, 3, 5, BoundModel::Rose), Ok(40));
    }

    #[test]
    fn check_examples() {
        let r = check_edge_bound(&apex_5_2(), 5, BoundModel::Treewidth).unwrap();
        assert_eq!((r.actual, r.rhs, r.tight), (40, 40, true));
        let r = check_edge_bound(&path_power(100, 4), 4, BoundModel::Treewidth).unwrap();
        assert_eq!((r.delta, r.actual, r.rhs, r.tight), (8, 780, 780, true));
        let r = check_edge_bound(&complete_graph(4), 3, BoundModel::Treewidth).unwrap();
        assert_eq!((r.actual, r.rhs, r.tight), (12, 12, true));
    }

    #[test]
    fn overfull_examples() {
        assert!(is_overfull(&complete_graph(3)));
        assert!(!is_overfull(&complete_graph(4)));
        assert!(is_overfull(&apex_5_2()));
        assert!(!is_overfull(&Graph::empty(1)));
    }

    #[test]
    fn overfull_subgraph_examples() {
        assert_eq!(find_overfull_subgraph(&petersen(), 18), Ok(None));
        assert_eq!(find_overfull_subgraph(&apex_5_2(), 18), Ok(Some((0..7).collect())));
        let k3_plus = complete_graph(3).disjoint_union(&Graph::empty(1));
        assert_eq!(find_overfull_subgraph(&k3_plus, 18), Ok(Some(vec![0, 1, 2])));
        assert_eq!(find_overfull_subgraph(&Graph::empty(5), 18), Ok(None));
        assert!(matches!(find_overfull_subgraph(&Graph::empty(19), 18), Err(Error::TooLarge { .. })));
        // A pendant vertex on C_5 raises Δ to 3 and no odd set reaches density 3.
        let mut pairs: Vec<(usize, usize)> = cycle(5).edges().to_vec();
        pairs.push((0, 5));
        assert_eq!(find_overfull_subgraph(&Graph::new(6, pairs).unwrap(), 18), Ok(None));
    }

    #[test]
    fn lemma4_examples() {
        assert!(matches!(verify_lemma4(&complete_graph(6), 5), Err(Error::HypothesisViolated(_))));
        assert!(matches!(verify_lemma4(&apex_5_2(), 5), Err(Error::HypothesisViolated(_))));
        // Exact threshold: k = 4 needs Δ ≥ 6.
        assert!(!lemma4_applies(5, 4));
        assert!(lemma4_applies(6, 4));
        assert!(lemma4_applies(0, 0));
        // Star K_{1,5}: treewidth 1, Δ = 5.
        assert_eq!(verify_lemma4(&crate::graph::star(5), 1), Ok(true));
    }

    #[test]
    fn degenerate_threshold_matches_real_arithmetic() {
        for k in 0..60usize {
            for delta in k..k + 30 {
                let real = delta as f64 >= k as f64 + 0.5 + (2.0 * k as f64 + 0.25).sqrt();
                assert_eq!(degenerate_fractional_applies(delta, k), real, "k={k} Δ={delta}");
            }
        }
    }

    proptest! {
        #[test]
        fn treewidth_bound_never_weaker_than_rose(k in 1usize..20, extra in 0usize..20, dn in 0usize..40) {
            let delta = k + extra;
            let n = delta + 1 + dn;
            let tw = edge_bound_rhs(n, delta, k, BoundModel::Treewidth).unwrap();
            let rose = edge_bound_rhs(n, delta, k, BoundModel::Rose).unwrap();
            if delta < 2 * k && n > delta + 1 {
                prop_assert!(tw < rose);
            } else if delta == 2 * k || n == delta + 1 {
                prop_assert_eq!(tw, rose);
            }
        }
    }
}
