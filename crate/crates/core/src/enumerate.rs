//! Isomorphism classes of small graphs.
//!
//! Graphs on `n` vertices are grown from those on `n − 1` by adding a vertex
//! with every possible neighbourhood and keeping one representative per
//! canonical form. The canonical form is computed by colour refinement with
//! individualisation of each vertex in the first non-singleton cell.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order supported by [`canonical_form`] (the code fits in 64 bits).
pub const MAX_CANONICAL_ORDER: usize = 11;
/// Largest order supported by [`enumerate_graphs`].
pub const MAX_ENUMERATION_ORDER: usize = 9;

/// Refines `colors` to the coarsest equitable partition finer than it.
/// Colours are ranks `0..`, and the relative order of existing cells is kept.
fn refine(adj: &[u64], colors: &mut [usize]) {
    let n = colors.len();
    let mut cells = {
        let mut seen = colors.to_vec();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    };
    loop {
        let signature: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> =
                    (0..n).filter(|&u| adj[v] & 1 << u != 0).map(|u| colors[u]).collect();
                around.sort_unstable();
                (colors[v], around)
            })
            .collect();
        let mut distinct: Vec<&(usize, Vec<usize>)> = signature.iter().collect();
        distinct.sort();
        distinct.dedup();
        for v in 0..n {
            colors[v] = distinct.binary_search(&&signature[v]).unwrap();
        }
        if distinct.len() == cells {
            return;
        }
        cells = distinct.len();
    }
}

fn code_of(adj: &[u64], colors: &[usize]) -> u64 {
    let mut code = 0u64;
    for (v, &row) in adj.iter().enumerate() {
        for u in 0..v {
            if row & 1 << u != 0 {
                let (a, b) = (colors[u].max(colors[v]), colors[u].min(colors[v]));
                code |= 1 << (a * (a - 1) / 2 + b);
            }
        }
    }
    code
}

fn search(adj: &[u64], mut colors: Vec<usize>, best: &mut Option<(u64, Vec<usize>)>) {
    refine(adj, &mut colors);
    let n = colors.len();
    let mut size = vec![0usize; n];
    for &c in &colors {
        size[c] += 1;
    }
    let Some(cell) = (0..n).find(|&c| size[c] > 1) else {
        let code = code_of(adj, &colors);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, colors));
        }
        return;
    };
    for v in (0..n).filter(|&v| colors[v] == cell) {
        let split: Vec<usize> = (0..n)
            .map(|u| 2 * colors[u] + usize::from(colors[u] == cell && u != v))
            .collect();
        search(adj, split, best);
    }
}

/// Canonical labelling: `position[v]` is the new label of `v`, and the code
/// (the upper triangle of the relabelled adjacency matrix) is equal for two
/// graphs exactly when they are isomorphic.
pub fn canonical_labeling(g: &Graph) -> Result<(u64, Vec<usize>)> {
    if g.n() > MAX_CANONICAL_ORDER {
        return Err(Error::TooLarge { size: g.n(), limit: MAX_CANONICAL_ORDER });
    }
    if g.n() == 0 {
        return Ok((0, Vec::new()));
    }
    let adj = g.adjacency_masks();
    let mut best = None;
    search(&adj, vec![0; g.n()], &mut best);
    Ok(best.expect("search reaches a discrete partition"))
}

pub fn canonical_form(g: &Graph) -> Result<(usize, u64)> {
    Ok((g.n(), canonical_labeling(g)?.0))
}

/// The graph relabelled canonically.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let (_, position) = canonical_labeling(g)?;
    Graph::new(g.n(), g.edges().iter().map(|&(u, v)| (position[u], position[v])))
}

/// One canonical representative of every isomorphism class of graphs on
/// exactly `n` vertices, ordered by canonical code.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::TooLarge { size: n, limit: MAX_ENUMERATION_ORDER });
    }
    let mut level = vec![Graph::empty(0)];
    for order in 1..=n {
        let mut next: BTreeMap<u64, Graph> = BTreeMap::new();
        let v = order - 1;
        for g in &level {
            for subset in 0u64..1 << v {
                let extra = (0..v).filter(|&u| subset & 1 << u != 0).map(|u| (u, v));
                let h = Graph::new(order, g.edges().iter().copied().chain(extra))?;
                let (code, _) = canonical_labeling(&h)?;
                if !next.contains_key(&code) {
                    next.insert(code, canonical_graph(&h)?);
                }
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

/// All graphs on `1..=n_max` vertices.
pub fn enumerate_up_to(n_max: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.extend(enumerate_graphs(n)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complement, cycle, path, petersen};

    #[test]
    fn known_counts() {
        let counts: Vec<usize> = (0..=7).map(|n| enumerate_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156, 1044]);
    }

    #[test]
    fn isomorphic_relabellings_agree() {
        let c5 = cycle(5);
        let relabelled = Graph::new(5, c5.edges().iter().map(|&(u, v)| ((u * 2) % 5, (v * 2) % 5))).unwrap();
        assert_eq!(canonical_form(&c5), canonical_form(&relabelled));
        assert_eq!(canonical_form(&c5), canonical_form(&complement(&c5)));
        assert_ne!(canonical_form(&path(5)), canonical_form(&c5));
        let p = petersen();
        assert_eq!(canonical_graph(&p).unwrap().m(), 15);
    }
}
