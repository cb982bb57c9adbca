//! Small rooted trees over bag-node ids and the two edge-sum quantities
//! used by the edge-count argument.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

/// `[x]^+ = max(x, 0)`.
pub fn positive_part(x: i64) -> i64 {
    x.max(0)
}

/// A tree on arbitrary node ids with a distinguished root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    root: usize,
    parent: BTreeMap<usize, usize>,
    adj: BTreeMap<usize, BTreeSet<usize>>,
}

impl RootedTree {
    /// Builds a rooted tree from its node set and undirected edges.
    pub fn from_edges(
        nodes: impl IntoIterator<Item = usize>,
        edges: impl IntoIterator<Item = (usize, usize)>,
        root: usize,
    ) -> Result<Self> {
        let mut adj: BTreeMap<usize, BTreeSet<usize>> =
            nodes.into_iter().map(|v| (v, BTreeSet::new())).collect();
        let mut edge_count = 0;
        for (a, b) in edges {
            if a == b || !adj.contains_key(&a) || !adj.contains_key(&b) {
                return Err(Error::InvalidDecomposition(format!("bad tree edge ({a}, {b})")));
            }
            if adj.get_mut(&a).unwrap().insert(b) {
                edge_count += 1;
            }
            adj.get_mut(&b).unwrap().insert(a);
        }
        if !adj.contains_key(&root) {
            return Err(Error::InvalidDecomposition(format!("root {root} is not a node")));
        }
        if edge_count + 1 != adj.len() {
            return Err(Error::InvalidDecomposition("not a tree".into()));
        }
        let mut parent = BTreeMap::new();
        let mut seen = BTreeSet::from([root]);
        let mut stack = vec![root];
        while let Some(s) = stack.pop() {
            for &t in &adj[&s] {
                if seen.insert(t) {
                    parent.insert(t, s);
                    stack.push(t);
                }
            }
        }
        if seen.len() != adj.len() {
            return Err(Error::InvalidDecomposition("tree is disconnected".into()));
        }
        Ok(RootedTree { root, parent, adj })
    }

    /// Path on nodes `0..len`, rooted at 0.
    pub fn path(len: usize) -> Self {
        Self::from_edges(0..len, (1..len).map(|i| (i - 1, i)), 0).expect("path is a tree")
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn nodes(&self) -> impl Iterator<Item = usize> + '_ {
        self.adj.keys().copied()
    }

    pub fn contains(&self, s: usize) -> bool {
        self.adj.contains_key(&s)
    }

    pub fn parent(&self, s: usize) -> Option<usize> {
        self.parent.get(&s).copied()
    }

    pub fn neighbors(&self, s: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj.get(&s).into_iter().flatten().copied()
    }

    /// Both orientations `(s, t)` of every tree edge.
    pub fn oriented_edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .flat_map(|(&s, ts)| ts.iter().map(move |&t| (s, t)))
            .collect()
    }

    /// `|T_{s→t}|`: size of the component of `T - st` containing `s`.
    pub fn side_size(&self, s: usize, t: usize) -> usize {
        let mut seen = BTreeSet::from([s, t]);
        let mut stack = vec![s];
        let mut count = 0;
        while let Some(x) = stack.pop() {
            count += 1;
            for y in self.neighbors(x) {
                if seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        count
    }

    /// True if `set` is non-empty and induces a connected subtree.
    pub fn is_subtree(&self, set: &BTreeSet<usize>) -> bool {
        let Some(&start) = set.iter().next() else {
            return false;
        };
        if !set.iter().all(|s| self.contains(*s)) {
            return false;
        }
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for y in self.neighbors(x) {
                if set.contains(&y) && seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        seen.len() == set.len()
    }

    fn check_d(&self, d: usize) -> Result<()> {
        if d == 0 || d > self.len() {
            return Err(Error::BadD { d, size: self.len() });
        }
        Ok(())
    }

    fn excess(&self, d: usize, s: usize, t: usize) -> i64 {
        positive_part(d as i64 - self.side_size(s, t) as i64)
    }
}

/// `Σ_{(s,t): st ∈ E(T)} [d − |T_{s→t}|]^+`, which is at least `d(d−1)`.
pub fn tree_lemma1_sum(tree: &RootedTree, d: usize) -> Result<i64> {
    tree.check_d(d)?;
    Ok(tree
        .oriented_edges()
        .into_iter()
        .map(|(s, t)| tree.excess(d, s, t))
        .sum())
}

/// `Σ_{(s,t) ∈ δ⁺(T*)} [d − |T_{s→t}|]^+`, which is at most `[d − |T*|]^+`.
pub fn tree_lemma2_lhs(tree: &RootedTree, subtree: &BTreeSet<usize>, d: usize) -> Result<i64> {
    tree.check_d(d)?;
    if !tree.is_subtree(subtree) {
        return Err(Error::NotASubtree);
    }
    Ok(subtree
        .iter()
        .flat_map(|&s| tree.neighbors(s).map(move |t| (s, t)))
        .filter(|(_, t)| !subtree.contains(t))
        .map(|(s, t)| tree.excess(d, s, t))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(leaves: usize) -> RootedTree {
        RootedTree::from_edges(0..=leaves, (1..=leaves).map(|l| (0, l)), 0).unwrap()
    }

    #[test]
    fn lemma1_examples() {
        assert_eq!(tree_lemma1_sum(&RootedTree::path(3), 3).unwrap(), 6);
        // Oriented edges of K_{1,3}: leaf→centre contributes 1, centre→leaf 0.
        assert_eq!(tree_lemma1_sum(&star(3), 2).unwrap(), 3);
        assert_eq!(tree_lemma1_sum(&RootedTree::path(4), 2).unwrap(), 2);
        assert_eq!(tree_lemma1_sum(&RootedTree::path(4), 0), Err(Error::BadD { d: 0, size: 4 }));
        assert!(tree_lemma1_sum(&RootedTree::path(4), 5).is_err());
    }

    #[test]
    fn lemma2_examples() {
        let p = RootedTree::path(4);
        let all: BTreeSet<usize> = (0..4).collect();
        assert_eq!(tree_lemma2_lhs(&p, &all, 2).unwrap(), 0);
        // T* = {b} on a–b–c–d: (b,a) leaves {b,c,d} (contributes 0), (b,c)
        // leaves {a,b} (contributes 1); the bound is [3 − 1]^+ = 2.
        let b = BTreeSet::from([1]);
        assert_eq!(tree_lemma2_lhs(&p, &b, 3).unwrap(), 1);
        for tstar in [BTreeSet::from([0]), BTreeSet::from([1, 2]), BTreeSet::from([3])] {
            assert_eq!(tree_lemma2_lhs(&p, &tstar, 4).unwrap(), 4 - tstar.len() as i64);
        }
        assert_eq!(tree_lemma2_lhs(&p, &BTreeSet::from([0, 2]), 2), Err(Error::NotASubtree));
        assert_eq!(tree_lemma2_lhs(&p, &BTreeSet::new(), 2), Err(Error::NotASubtree));
    }

    #[test]
    fn rejects_non_trees() {
        assert!(RootedTree::from_edges(0..3, [(0, 1)], 0).is_err());
        assert!(RootedTree::from_edges(0..3, [(0, 1), (1, 2), (2, 0)], 0).is_err());
        assert!(RootedTree::from_edges(0..2, [(0, 1)], 5).is_err());
        let t = RootedTree::from_edges([7], [], 7).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.parent(7), None);
    }

    #[test]
    fn side_sizes() {
        let p = RootedTree::path(5);
        assert_eq!(p.side_size(1, 2), 2);
        assert_eq!(p.side_size(2, 1), 3);
        assert_eq!(p.parent(3), Some(2));
    }
}
