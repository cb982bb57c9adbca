//! Seeded random generators. All randomness comes from SplitMix64, so a
//! seed produces the same graph on every platform.

use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::decomposition::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::Rational;

fn probability(p: Rational) -> Result<(u64, u64)> {
    if *p.numer() < 0 || p.numer() > p.denom() {
        return Err(Error::BadParams(format!("probability {p} outside [0, 1]")));
    }
    Ok((*p.numer() as u64, *p.denom() as u64))
}

fn keep(rng: &mut SplitMix64, (num, den): (u64, u64)) -> bool {
    rng.gen_range(0..den) < num
}

/// A random `k`-tree on `n` vertices with its smooth decomposition of
/// width `k`. Starts from `K_{k+1}` on `0..=k`; vertex `v > k` is joined to a
/// `k`-clique chosen uniformly among all `k`-cliques present so far.
pub fn random_ktree(n: usize, k: usize, rng: &mut SplitMix64) -> Result<(Graph, TreeDecomposition)> {
    if n < k + 1 {
        return Err(Error::BadParams(format!("n = {n} is below k + 1 = {}", k + 1)));
    }
    let first: Vec<usize> = (0..=k).collect();
    let mut bags = vec![first.clone()];
    let mut tree_edges = Vec::new();
    // Each k-clique with a bag that contains it.
    let mut cliques: Vec<(Vec<usize>, usize)> = (0..=k)
        .map(|skip| (first.iter().copied().filter(|&x| x != skip).collect(), 0))
        .collect();
    let mut edges: Vec<(usize, usize)> = (0..=k).flat_map(|u| (u + 1..=k).map(move |v| (u, v))).collect();
    for v in k + 1..n {
        let (clique, host) = cliques[rng.gen_range(0..cliques.len())].clone();
        edges.extend(clique.iter().map(|&u| (u, v)));
        let node = bags.len();
        let mut bag = clique.clone();
        bag.push(v);
        bags.push(bag);
        tree_edges.push((host, node));
        for skip in &clique {
            let mut next: Vec<usize> = clique.iter().copied().filter(|x| x != skip).collect();
            next.push(v);
            cliques.push((next, node));
        }
    }
    let g = Graph::new(n, edges)?;
    let bag_refs: Vec<&[usize]> = bags.iter().map(Vec::as_slice).collect();
    Ok((g, TreeDecomposition::from_bags(&bag_refs, &tree_edges)))
}

/// A random `k`-tree with each edge kept independently with probability
/// `keep_prob`. Treewidth is at most `k`.
pub fn random_partial_ktree(n: usize, k: usize, keep_prob: Rational, seed: u64) -> Result<Graph> {
    let p = probability(keep_prob)?;
    let mut rng = SplitMix64::seed_from_u64(seed);
    let (g, _) = random_ktree(n, k, &mut rng)?;
    let kept: Vec<(usize, usize)> = g.edges().iter().copied().filter(|_| keep(&mut rng, p)).collect();
    Graph::new(n, kept)
}

/// `G(n, p)`: each pair `u < v`, in lexicographic order, is an edge with
/// probability `p`.
pub fn random_gnp(n: usize, p: Rational, seed: u64) -> Result<Graph> {
    let p = probability(p)?;
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if keep(&mut rng, p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}
