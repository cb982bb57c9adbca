//! Fractional chromatic index.
//!
//! [`fractional_chi_prime`] uses the odd-set characterisation
//! `χ'_f = max(Δ, max_{S odd, |S| ≥ 3} 2|E(S)|/(|S|−1))`.
//! [`fractional_via_lp`] is an independent check: it solves the covering
//! program over matchings directly, in exact arithmetic.

use num_traits::{One, Zero};
use serde::Serialize;

use super::lp::{LinearProgram, LpOutcome};
use super::Matching;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::narrow;
use crate::{BigRational, Rational};

pub const DEFAULT_FRACTIONAL_LIMIT: usize = 18;
pub const DEFAULT_LP_EDGE_LIMIT: usize = 20;
const MATCHING_CAP: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FractionalWitness {
    /// The value is `Δ`, attained at this vertex (none for the empty graph).
    MaxDegree { vertex: Option<usize> },
    /// The value is `2|E(S)|/(|S|−1)` for this odd set.
    OddSet { vertices: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionalIndex {
    pub value: Rational,
    pub witness: FractionalWitness,
}

impl FractionalIndex {
    /// Recomputes the value from the witness alone.
    pub fn witness_value(&self, g: &Graph) -> Rational {
        match &self.witness {
            FractionalWitness::MaxDegree { vertex } => {
                Rational::from_integer(vertex.map_or(0, |v| g.degree(v)) as i64)
            }
            FractionalWitness::OddSet { vertices } => {
                let h = g.induced(vertices);
                Rational::new(2 * h.m() as i64, vertices.len() as i64 - 1)
            }
        }
    }
}

pub fn fractional_chi_prime(g: &Graph, limit: usize) -> Result<FractionalIndex> {
    let n = g.n();
    if n > limit || n > 30 {
        return Err(Error::TooLarge { size: n, limit: limit.min(30) });
    }
    let delta = g.max_degree();
    let mut best = FractionalIndex {
        value: Rational::from_integer(delta as i64),
        witness: FractionalWitness::MaxDegree {
            vertex: (0..n).find(|&v| g.degree(v) == delta),
        },
    };
    if n < 3 {
        return Ok(best);
    }
    let adj = g.adjacency_masks();
    let mut best_set: Option<(u32, u64)> = None;
    for s in 1u64..1 << n {
        let size = s.count_ones();
        if size < 3 || size % 2 == 0 {
            continue;
        }
        let mut twice = 0i64;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            twice += (adj[v] & s).count_ones() as i64;
        }
        let density = Rational::new(twice, size as i64 - 1);
        let improves = density > best.value
            || (density == best.value
                && best_set.is_some_and(|(bs, bm)| (size, s) < (bs, bm)));
        if improves {
            best.value = density;
            best_set = Some((size, s));
        }
    }
    if let Some((_, s)) = best_set {
        best.witness = FractionalWitness::OddSet {
            vertices: (0..n).filter(|&v| s & 1 << v != 0).collect(),
        };
    }
    Ok(best)
}

/// All inclusion-maximal matchings, in lexicographic order of edge lists.
pub fn maximal_matchings(g: &Graph) -> Vec<Matching> {
    fn extend(
        g: &Graph,
        i: usize,
        covered: &mut Vec<bool>,
        chosen: &mut Vec<(usize, usize)>,
        out: &mut Vec<Matching>,
    ) {
        let edges = g.edges();
        if out.len() > MATCHING_CAP {
            return;
        }
        if i == edges.len() {
            if edges.iter().all(|&(u, v)| covered[u] || covered[v]) {
                out.push(Matching(chosen.clone()));
            }
            return;
        }
        let (u, v) = edges[i];
        if !covered[u] && !covered[v] {
            covered[u] = true;
            covered[v] = true;
            chosen.push((u, v));
            extend(g, i + 1, covered, chosen, out);
            chosen.pop();
            covered[u] = false;
            covered[v] = false;
        }
        extend(g, i + 1, covered, chosen, out);
    }
    let mut out = Vec::new();
    extend(g, 0, &mut vec![false; g.n()], &mut Vec::new(), &mut out);
    out
}

/// `min Σ λ_M` over matchings `M` with every edge covered exactly once,
/// solved through its dual `max Σ y_e` subject to `Σ_{e ∈ M} y_e ≤ 1`.
///
/// Dual constraints are added lazily: start with one greedy maximal matching
/// per edge, then repeatedly add the most violated maximal matching until
/// none is violated.
pub fn fractional_via_lp(g: &Graph, edge_limit: usize) -> Result<Rational> {
    let m = g.m();
    if m > edge_limit {
        return Err(Error::TooLarge { size: m, limit: edge_limit });
    }
    if m == 0 {
        return Ok(Rational::zero());
    }
    let all = maximal_matchings(g);
    if all.len() > MATCHING_CAP {
        return Err(Error::TooLarge { size: all.len(), limit: MATCHING_CAP });
    }
    let index = |e: &(usize, usize)| g.edge_index(e.0, e.1).expect("matching edge of g");
    let incidence: Vec<Vec<usize>> = all.iter().map(|mm| mm.edges().iter().map(index).collect()).collect();

    let mut active: Vec<usize> = Vec::new();
    for e in 0..m {
        if let Some(j) = incidence.iter().position(|row| row.contains(&e)) {
            if !active.contains(&j) {
                active.push(j);
            }
        }
    }
    loop {
        let mut lp = LinearProgram::<BigRational>::new(vec![BigRational::one(); m]);
        for &j in &active {
            let mut row = vec![BigRational::zero(); m];
            for &e in &incidence[j] {
                row[e] = BigRational::one();
            }
            lp.add_row(row, BigRational::one());
        }
        let LpOutcome::Optimal(sol) = lp.maximize() else {
            unreachable!("every edge lies in an active constraint, so y is bounded");
        };
        let load = |j: usize| -> BigRational {
            incidence[j].iter().map(|&e| sol.primal[e].clone()).fold(BigRational::zero(), |a, b| a + b)
        };
        let violated = (0..all.len())
            .map(|j| (load(j), j))
            .filter(|(l, _)| *l > BigRational::one())
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        match violated {
            Some((_, j)) => active.push(j),
            None => {
                return narrow(&sol.value)
                    .ok_or_else(|| Error::HypothesisViolated("value does not fit in i64".into()))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle, petersen};

    fn apex_5_2() -> Graph {
        let mut pairs: Vec<(usize, usize)> = complete_graph(5).edges().to_vec();
        for a in 5..7 {
            pairs.extend((0..5).map(|v| (v, a)));
        }
        Graph::new(7, pairs).unwrap()
    }

    #[test]
    fn odd_set_examples() {
        let c5 = fractional_chi_prime(&cycle(5), 18).unwrap();
        assert_eq!(c5.value, Rational::new(5, 2));
        assert_eq!(c5.witness, FractionalWitness::OddSet { vertices: vec![0, 1, 2, 3, 4] });
        let p = fractional_chi_prime(&petersen(), 18).unwrap();
        assert_eq!(p.value, Rational::from_integer(3));
        assert!(matches!(p.witness, FractionalWitness::MaxDegree { vertex: Some(0) }));
        let a = fractional_chi_prime(&apex_5_2(), 18).unwrap();
        assert_eq!(a.value, Rational::new(20, 3));
        assert_eq!(a.witness_value(&apex_5_2()), a.value);
        assert!(fractional_chi_prime(&Graph::empty(19), 18).is_err());
        assert_eq!(fractional_chi_prime(&Graph::empty(0), 18).unwrap().value, Rational::zero());
    }

    #[test]
    fn lp_examples() {
        assert_eq!(fractional_via_lp(&cycle(5), 20), Ok(Rational::new(5, 2)));
        assert_eq!(fractional_via_lp(&complete_graph(4), 20), Ok(Rational::from_integer(3)));
        assert_eq!(fractional_via_lp(&complete_graph(3), 20), Ok(Rational::from_integer(3)));
        assert_eq!(fractional_via_lp(&apex_5_2(), 20), Ok(Rational::new(20, 3)));
        assert_eq!(fractional_via_lp(&Graph::empty(3), 20), Ok(Rational::zero()));
        assert!(matches!(fractional_via_lp(&complete_graph(7), 20), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn maximal_matching_enumeration() {
        // P_4 (0-1-2-3): {01, 23} and {12}.
        let ms = maximal_matchings(&crate::graph::path(4));
        let lists: Vec<Vec<(usize, usize)>> = ms.iter().map(|m| m.edges().to_vec()).collect();
        assert_eq!(lists, vec![vec![(0, 1), (2, 3)], vec![(1, 2)]]);
        // K_4 has three perfect matchings and nothing else maximal.
        assert_eq!(maximal_matchings(&complete_graph(4)).len(), 3);
    }
}
