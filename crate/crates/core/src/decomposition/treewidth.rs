//! Exact treewidth by dynamic programming over vertex subsets.
//!
//! For a set `S` of vertices eliminated first, `tw(S) = min_{v ∈ S}
//! max(tw(S \ v), q(S \ v, v))`, where `q(S, v)` counts the vertices outside
//! `S ∪ {v}` reachable from `v` through `S`. The treewidth is `tw(V)`.

use std::collections::BTreeSet;

use super::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_TREEWIDTH_LIMIT: usize = 20;

/// Neighbours of `v` in the graph obtained by eliminating the set `s`.
fn q_value(adj: &[u64], s: u64, v: usize) -> u32 {
    let mut comp = adj[v] & s;
    let mut done = 0u64;
    let mut reach = adj[v];
    while comp != done {
        let mut fresh = comp & !done;
        done = comp;
        while fresh != 0 {
            let x = fresh.trailing_zeros() as usize;
            fresh &= fresh - 1;
            reach |= adj[x];
            comp |= adj[x] & s;
        }
    }
    (reach & !s & !(1u64 << v)).count_ones()
}

/// Returns the treewidth of `g` and a decomposition of that width, built from
/// the lexicographically smallest optimal elimination order.
pub fn treewidth_exact(g: &Graph, limit: usize) -> Result<(usize, TreeDecomposition)> {
    let n = g.n();
    if n > limit || n > 30 {
        return Err(Error::TooLarge { size: n, limit: limit.min(30) });
    }
    if n == 0 {
        return Ok((0, TreeDecomposition::new(vec![BTreeSet::new()], vec![], Some(0))));
    }
    let adj = g.adjacency_masks();
    let full: u64 = (1u64 << n) - 1;
    let size = 1usize << n;

    let mut tw = vec![u8::MAX; size];
    tw[0] = 0;
    for s in 1..size as u64 {
        let mut best = u8::MAX;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let prev = s & !(1 << v);
            let cand = tw[prev as usize].max(q_value(&adj, prev, v) as u8);
            best = best.min(cand);
        }
        tw[s as usize] = best;
    }
    let width = tw[full as usize];

    // completable[p]: the vertices outside p can be eliminated after p
    // without exceeding the optimal width.
    let mut completable = vec![false; size];
    completable[full as usize] = true;
    for p in (0..full).rev() {
        let mut out = full & !p;
        while out != 0 {
            let v = out.trailing_zeros() as usize;
            out &= out - 1;
            if completable[(p | 1 << v) as usize] && q_value(&adj, p, v) as u8 <= width {
                completable[p as usize] = true;
                break;
            }
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut prefix = 0u64;
    while prefix != full {
        let v = (0..n)
            .find(|&v| {
                prefix & (1 << v) == 0
                    && completable[(prefix | 1 << v) as usize]
                    && q_value(&adj, prefix, v) as u8 <= width
            })
            .expect("an optimal completion exists");
        order.push(v);
        prefix |= 1 << v;
    }
    let td = decomposition_from_elimination(g, &order);
    debug_assert_eq!(td.width(), width as usize);
    Ok((width as usize, td))
}

fn fill_in(g: &Graph, order: &[usize]) -> (Vec<usize>, Vec<BTreeSet<usize>>) {
    let n = g.n();
    assert_eq!(order.len(), n, "elimination order must list every vertex");
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut nbrs: Vec<BTreeSet<usize>> =
        (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut higher = vec![BTreeSet::new(); n];
    for &v in order {
        let later: BTreeSet<usize> = nbrs[v].iter().copied().filter(|&w| pos[w] > pos[v]).collect();
        for &a in &later {
            for &b in &later {
                if a != b {
                    nbrs[a].insert(b);
                }
            }
        }
        higher[v] = later;
    }
    (pos, higher)
}

/// Width of the decomposition induced by an elimination order.
pub fn elimination_width(g: &Graph, order: &[usize]) -> usize {
    let (_, higher) = fill_in(g, order);
    higher.iter().map(BTreeSet::len).max().unwrap_or(0)
}

/// Greedy minimum-degree elimination order (ties to the smallest vertex),
/// computed on the filled graph. Its width is an upper bound on treewidth.
pub fn min_degree_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut nbrs: Vec<BTreeSet<usize>> =
        (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| alive[v]).min_by_key(|&v| (nbrs[v].len(), v)).unwrap();
        alive[v] = false;
        order.push(v);
        let around: Vec<usize> = nbrs[v].iter().copied().collect();
        for &a in &around {
            nbrs[a].remove(&v);
            for &b in &around {
                if a != b {
                    nbrs[a].insert(b);
                }
            }
        }
    }
    order
}

/// Standard decomposition from an elimination order: one bag per vertex,
/// `{v} ∪` its later neighbours in the filled graph, attached to the bag of
/// the earliest such neighbour. Component roots are chained together.
pub fn decomposition_from_elimination(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.n();
    if n == 0 {
        return TreeDecomposition::new(vec![BTreeSet::new()], vec![], Some(0));
    }
    let (pos, higher) = fill_in(g, order);
    // Bag-node i belongs to order[i].
    let bags = order
        .iter()
        .map(|&v| {
            let mut b = higher[v].clone();
            b.insert(v);
            b
        })
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    let mut roots = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        match higher[v].iter().map(|&w| pos[w]).min() {
            Some(parent) => edges.push((i, parent)),
            None => roots.push(i),
        }
    }
    for pair in roots.windows(2) {
        edges.push((pair[0], pair[1]));
    }
    TreeDecomposition::new(bags, edges, Some(n - 1))
}
