//! Exact chromatic index by backtracking.

use serde::Serialize;

use super::{vizing_color, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default cap on the number of edges for the exact solver.
pub const DEFAULT_CHI_LIMIT: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChiPrimeMethod {
    Exact,
    VizingUpper,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticIndex {
    pub value: usize,
    pub method: ChiPrimeMethod,
    pub coloring: EdgeColoring,
}

/// `χ'(g) ∈ {Δ, Δ+1}`, decided exactly. Fails with `TooLarge` when `g`
/// has more than `limit` edges.
pub fn chi_prime_exact(g: &Graph, limit: usize) -> Result<usize> {
    if g.m() > limit {
        return Err(Error::TooLarge { size: g.m(), limit });
    }
    let delta = g.max_degree();
    let value = if vizing_color(g).palette_size() <= delta || color_with(g, delta).is_some() {
        delta
    } else {
        delta + 1
    };
    assert!(value == delta || value == delta + 1, "Vizing's theorem");
    Ok(value)
}

/// Exact value with a witness colouring when `g` is within `limit`;
/// otherwise the Vizing colouring as an upper bound.
pub fn chromatic_index(g: &Graph, limit: usize) -> ChromaticIndex {
    let vizing = vizing_color(g);
    let delta = g.max_degree();
    if vizing.palette_size() <= delta {
        return ChromaticIndex { value: delta, method: ChiPrimeMethod::Exact, coloring: vizing };
    }
    if g.m() > limit {
        return ChromaticIndex {
            value: vizing.palette_size(),
            method: ChiPrimeMethod::VizingUpper,
            coloring: vizing,
        };
    }
    match color_with(g, delta) {
        Some(coloring) => ChromaticIndex { value: delta, method: ChiPrimeMethod::Exact, coloring },
        None => ChromaticIndex { value: delta + 1, method: ChiPrimeMethod::Exact, coloring: vizing },
    }
}

/// Odd vertex set with more than `colors·(|S|−1)/2` induced edges; such a
/// set cannot be coloured with `colors` colours.
fn has_odd_obstruction(g: &Graph, colors: usize) -> bool {
    if g.n() > 20 {
        return false;
    }
    let adj = g.adjacency_masks();
    (1u64..1 << g.n()).any(|s| {
        let size = s.count_ones() as usize;
        if size < 3 || size % 2 == 0 {
            return false;
        }
        let twice: usize = (0..g.n())
            .filter(|&v| s & 1 << v != 0)
            .map(|v| (adj[v] & s).count_ones() as usize)
            .sum();
        twice > colors * (size - 1)
    })
}

/// A proper colouring with at most `colors` colours, if one exists.
///
/// Edges at a maximum-degree vertex are pre-coloured `0, 1, …`. The search
/// then repeatedly branches on the uncoloured edge with the fewest available
/// colours (ties: larger endpoint degree, then lexicographic), and opens at
/// most one previously unused colour per branch.
pub fn color_with(g: &Graph, colors: usize) -> Option<EdgeColoring> {
    let m = g.m();
    if m == 0 {
        return Some(EdgeColoring::new());
    }
    if colors < g.max_degree() || colors > 64 || has_odd_obstruction(g, colors) {
        return None;
    }
    let edges = g.edges();
    let rank: Vec<usize> = {
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by_key(|&i| {
            let (u, v) = edges[i];
            (std::cmp::Reverse(g.degree(u).max(g.degree(v))), edges[i])
        });
        let mut rank = vec![0; m];
        for (r, &i) in order.iter().enumerate() {
            rank[i] = r;
        }
        rank
    };
    let mut search = Search {
        edges,
        rank,
        all: if colors == 64 { u64::MAX } else { (1u64 << colors) - 1 },
        used: vec![0; g.n()],
        color: vec![usize::MAX; m],
        opened: 0,
    };
    let hub = (0..g.n()).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap();
    for (c, &w) in g.neighbors(hub).iter().enumerate() {
        let e = g.edge_index(hub, w).unwrap();
        search.assign(e, c);
    }
    search.opened = g.degree(hub);
    if !search.run(m - g.degree(hub)) {
        return None;
    }
    Some(EdgeColoring::from_edge_colors(g, &search.color))
}

struct Search<'a> {
    edges: &'a [(usize, usize)],
    rank: Vec<usize>,
    all: u64,
    used: Vec<u64>,
    color: Vec<usize>,
    /// Colours `0..opened` have been used somewhere.
    opened: usize,
}

impl Search<'_> {
    fn assign(&mut self, e: usize, c: usize) {
        let (u, v) = self.edges[e];
        self.color[e] = c;
        self.used[u] |= 1 << c;
        self.used[v] |= 1 << c;
    }

    fn unassign(&mut self, e: usize) {
        let (u, v) = self.edges[e];
        let c = self.color[e];
        self.color[e] = usize::MAX;
        self.used[u] &= !(1 << c);
        self.used[v] &= !(1 << c);
    }

    fn available(&self, e: usize) -> u64 {
        let (u, v) = self.edges[e];
        self.all & !(self.used[u] | self.used[v])
    }

    fn run(&mut self, remaining: usize) -> bool {
        if remaining == 0 {
            return true;
        }
        let mut best: Option<(u32, usize, usize)> = None;
        for e in 0..self.edges.len() {
            if self.color[e] != usize::MAX {
                continue;
            }
            let key = (self.available(e).count_ones(), self.rank[e], e);
            if key.0 == 0 {
                return false;
            }
            if best.is_none_or(|b| (key.0, key.1) < (b.0, b.1)) {
                best = Some(key);
            }
        }
        let (_, _, e) = best.expect("an uncoloured edge remains");
        let mut options = self.available(e);
        if self.opened < 64 {
            // Unopened colours are interchangeable: keep only the first.
            let unopened = self.all & !((1u64 << self.opened) - 1);
            let first_new = unopened & unopened.wrapping_neg();
            options &= !unopened | first_new;
        }
        while options != 0 {
            let c = options.trailing_zeros() as usize;
            options &= options - 1;
            let opened_before = self.opened;
            self.opened = self.opened.max(c + 1);
            self.assign(e, c);
            if self.run(remaining - 1) {
                return true;
            }
            self.unassign(e);
            self.opened = opened_before;
        }
        false
    }
}
