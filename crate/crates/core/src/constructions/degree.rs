//! Graphic degree sequences.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DegreeSequence, Graph};

/// Why a sequence is not graphic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GraphicFailure {
    OddSum,
    /// `Σ_{i≤ℓ} d_i > ℓ(ℓ−1) + Σ_{i>ℓ} min(d_i, ℓ)` at this `ℓ` (1-based).
    Inequality { l: usize, lhs: usize, rhs: usize },
}

/// The first failing Erdős–Gallai condition, or `None` if `d` is graphic.
pub fn erdos_gallai_failure(d: &DegreeSequence) -> Option<GraphicFailure> {
    if d.sum() % 2 == 1 {
        return Some(GraphicFailure::OddSum);
    }
    let v = d.values();
    let mut lhs = 0;
    for l in 1..=v.len() {
        lhs += v[l - 1];
        let rhs = l * (l - 1) + v[l..].iter().map(|&x| x.min(l)).sum::<usize>();
        if lhs > rhs {
            return Some(GraphicFailure::Inequality { l, lhs, rhs });
        }
    }
    None
}

pub fn erdos_gallai_graphic(d: &DegreeSequence) -> bool {
    erdos_gallai_failure(d).is_none()
}

/// Havel–Hakimi realisation; vertex `i` receives degree `d_i`.
pub fn havel_hakimi_realize(d: &DegreeSequence) -> Result<Graph> {
    let n = d.len();
    let mut residual: Vec<usize> = d.values().to_vec();
    let mut edges = Vec::with_capacity(d.sum() / 2);
    loop {
        let mut order: Vec<usize> = (0..n).filter(|&v| residual[v] > 0).collect();
        if order.is_empty() {
            break;
        }
        order.sort_by_key(|&v| (std::cmp::Reverse(residual[v]), v));
        let u = order[0];
        let need = residual[u];
        if need > order.len() - 1 {
            return Err(Error::NotGraphic);
        }
        residual[u] = 0;
        for &w in &order[1..=need] {
            residual[w] -= 1;
            edges.push((u, w));
        }
    }
    Graph::new(n, edges)
}

/// The sequence `(c × (r+1), c−1, …, 1)` of length `c + r`.
pub fn lemma7_sequence(c: usize, r: usize) -> DegreeSequence {
    let mut values = vec![c; r + 1];
    values.extend((1..c).rev());
    DegreeSequence::sorted(values)
}

/// `4 | c(2r+c+1)` and `r² ≥ c`. When both hold the sequence of
/// [`lemma7_sequence`] is graphic; this is asserted.
pub fn lemma7_check(c: usize, r: usize) -> bool {
    let ok = (c * (2 * r + c + 1)) % 4 == 0 && r * r >= c;
    if ok {
        assert!(erdos_gallai_graphic(&lemma7_sequence(c, r)), "sufficiency for c = {c}, r = {r}");
    }
    ok
}
