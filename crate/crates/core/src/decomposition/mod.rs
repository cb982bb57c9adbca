//! Tree decompositions: validation, smoothing, vertex subtrees and the
//! leaving-vertex map of smooth decompositions.

mod tree;
mod treewidth;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use tree::{positive_part, tree_lemma1_sum, tree_lemma2_lhs, RootedTree};
pub use treewidth::{
    decomposition_from_elimination, elimination_width, min_degree_order, treewidth_exact,
    DEFAULT_TREEWIDTH_LIMIT,
};

/// A tree over bag-nodes `0..len` with one vertex set per node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    bags: Vec<BTreeSet<usize>>,
    tree_edges: Vec<(usize, usize)>,
    root: Option<usize>,
}

/// Result of [`validate_decomposition`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Validation {
    pub valid: bool,
    pub width: usize,
    pub smooth: bool,
    /// First violated condition, if any.
    pub reason: Option<String>,
}

impl TreeDecomposition {
    pub fn new(
        bags: Vec<BTreeSet<usize>>,
        tree_edges: Vec<(usize, usize)>,
        root: Option<usize>,
    ) -> Self {
        let tree_edges = tree_edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        TreeDecomposition { bags, tree_edges, root }
    }

    /// Convenience constructor from bag slices.
    pub fn from_bags(bags: &[&[usize]], tree_edges: &[(usize, usize)]) -> Self {
        let bags = bags.iter().map(|b| b.iter().copied().collect()).collect();
        Self::new(bags, tree_edges.to_vec(), None)
    }

    /// Path decomposition of the `k`-th power of a path on `n` vertices:
    /// bags `{i, …, i+k}`.
    pub fn path_power(n: usize, k: usize) -> Self {
        if n <= k + 1 {
            return Self::new(vec![(0..n).collect()], vec![], Some(0));
        }
        let bags = (0..n - k).map(|i| (i..=i + k).collect()).collect();
        let edges = (1..n - k).map(|i| (i - 1, i)).collect();
        Self::new(bags, edges, Some(0))
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    pub fn bags(&self) -> &[BTreeSet<usize>] {
        &self.bags
    }

    pub fn bag(&self, node: usize) -> &BTreeSet<usize> {
        &self.bags[node]
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.tree_edges
    }

    pub fn root(&self) -> usize {
        self.root.unwrap_or(0)
    }

    /// Maximum bag size minus one (0 for an empty decomposition).
    pub fn width(&self) -> usize {
        self.bags.iter().map(BTreeSet::len).max().unwrap_or(0).saturating_sub(1)
    }

    pub fn tree(&self) -> Result<RootedTree> {
        RootedTree::from_edges(0..self.len(), self.tree_edges.iter().copied(), self.root())
    }

    fn is_tree_edge(&self, s: usize, t: usize) -> bool {
        self.tree_edges.contains(&(s.min(t), s.max(t)))
    }

    pub fn to_json(&self) -> String {
        let doc = DecompositionJson {
            nodes: (0..self.len()).collect(),
            tree_edges: self.tree_edges.iter().map(|&(a, b)| [a, b]).collect(),
            bags: self
                .bags
                .iter()
                .enumerate()
                .map(|(i, b)| (i.to_string(), b.iter().copied().collect()))
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("serialisable")
    }

    /// Parses the decomposition JSON. Node ids may be arbitrary integers;
    /// they are renumbered densely in the order of `nodes`.
    pub fn from_json(text: &str) -> Result<Self> {
        let bad = |msg: String| Error::Parse { line: 0, msg };
        let doc: DecompositionJson =
            serde_json::from_str(text).map_err(|e| bad(format!("decomposition JSON: {e}")))?;
        let index: BTreeMap<usize, usize> =
            doc.nodes.iter().enumerate().map(|(i, &id)| (id, i)).collect();
        if index.len() != doc.nodes.len() {
            return Err(bad("duplicate node ids".into()));
        }
        let lookup = |id: usize| index.get(&id).copied().ok_or_else(|| bad(format!("unknown node {id}")));
        let mut bags = vec![BTreeSet::new(); doc.nodes.len()];
        for (key, verts) in &doc.bags {
            let id: usize = key.parse().map_err(|_| bad(format!("bad node key {key:?}")))?;
            bags[lookup(id)?] = verts.iter().copied().collect();
        }
        let edges = doc
            .tree_edges
            .iter()
            .map(|&[a, b]| Ok((lookup(a)?, lookup(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(bags, edges, None))
    }
}

#[derive(Serialize, Deserialize)]
struct DecompositionJson {
    nodes: Vec<usize>,
    tree_edges: Vec<[usize; 2]>,
    bags: BTreeMap<String, Vec<usize>>,
}

/// Checks vertex coverage, edge coverage and connectivity of every `T(v)`,
/// then the two smoothness conditions.
pub fn validate_decomposition(g: &Graph, td: &TreeDecomposition) -> Result<Validation> {
    for (bag, verts) in td.bags.iter().enumerate() {
        if let Some(&vertex) = verts.iter().find(|&&v| v >= g.n()) {
            return Err(Error::BagVertexOutOfRange { bag, vertex, n: g.n() });
        }
    }
    let width = td.width();
    let invalid = |reason: String| Ok(Validation { valid: false, width, smooth: false, reason: Some(reason) });

    if td.is_empty() {
        return invalid("no bag-nodes".into());
    }
    let tree = match td.tree() {
        Ok(t) => t,
        Err(e) => return invalid(e.to_string()),
    };
    let mut holders = vec![BTreeSet::new(); g.n()];
    for (node, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            holders[v].insert(node);
        }
    }
    if let Some(v) = (0..g.n()).find(|&v| holders[v].is_empty()) {
        return invalid(format!("vertex {v} is in no bag"));
    }
    if let Some(&(u, v)) = g
        .edges()
        .iter()
        .find(|&&(u, v)| !td.bags.iter().any(|b| b.contains(&u) && b.contains(&v)))
    {
        return invalid(format!("edge ({u}, {v}) is in no bag"));
    }
    if let Some(v) = (0..g.n()).find(|&v| !tree.is_subtree(&holders[v])) {
        return invalid(format!("bags containing vertex {v} are not connected"));
    }
    let smooth = td.bags.iter().all(|b| b.len() == width + 1)
        && td
            .tree_edges
            .iter()
            .all(|&(s, t)| td.bags[s].intersection(&td.bags[t]).count() == width);
    Ok(Validation { valid: true, width, smooth, reason: None })
}

/// Converts a valid decomposition of width `k` into a smooth one of the
/// same width: nested neighbours are contracted, undersized bags are padded
/// from a neighbour, and edges whose bags differ in several vertices are
/// subdivided into a chain that swaps one vertex per step.
pub fn smooth(g: &Graph, td: &TreeDecomposition) -> Result<TreeDecomposition> {
    let check = validate_decomposition(g, td)?;
    if !check.valid {
        return Err(Error::InvalidDecomposition(check.reason.unwrap_or_default()));
    }
    let k = check.width;
    let mut bags: Vec<BTreeSet<usize>> = td.bags.clone();
    let mut alive = vec![true; bags.len()];
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); bags.len()];
    for &(s, t) in &td.tree_edges {
        adj[s].insert(t);
        adj[t].insert(s);
    }

    loop {
        if let Some((from, into)) = nested_pair(&bags, &adj, &alive) {
            alive[from] = false;
            for x in std::mem::take(&mut adj[from]) {
                adj[x].remove(&from);
                if x != into {
                    adj[x].insert(into);
                    adj[into].insert(x);
                }
            }
            continue;
        }
        let short = (0..bags.len()).find(|&s| alive[s] && bags[s].len() < k + 1);
        let Some(s) = short else { break };
        // With no nested neighbours, every neighbour has a vertex s lacks.
        let t = *adj[s].iter().next().ok_or_else(|| {
            Error::InvalidDecomposition("isolated undersized bag".into())
        })?;
        let x = *bags[t].difference(&bags[s]).next().expect("neighbour bags are not nested");
        bags[s].insert(x);
    }

    let ids: Vec<usize> = (0..bags.len()).filter(|&s| alive[s]).collect();
    let mut renumber = vec![usize::MAX; bags.len()];
    for (i, &s) in ids.iter().enumerate() {
        renumber[s] = i;
    }
    let mut out_bags: Vec<BTreeSet<usize>> = ids.iter().map(|&s| bags[s].clone()).collect();
    let mut out_edges = Vec::new();
    for &s in &ids {
        for &t in adj[s].iter().filter(|&&t| t > s) {
            let leaving: Vec<usize> = bags[s].difference(&bags[t]).copied().collect();
            let entering: Vec<usize> = bags[t].difference(&bags[s]).copied().collect();
            let mut prev = renumber[s];
            let mut current = bags[s].clone();
            for (a, b) in leaving.iter().zip(&entering).take(leaving.len() - 1) {
                current.remove(a);
                current.insert(*b);
                out_bags.push(current.clone());
                let node = out_bags.len() - 1;
                out_edges.push((prev, node));
                prev = node;
            }
            out_edges.push((prev, renumber[t]));
        }
    }
    Ok(TreeDecomposition::new(out_bags, out_edges, Some(0)))
}

fn nested_pair(
    bags: &[BTreeSet<usize>],
    adj: &[BTreeSet<usize>],
    alive: &[bool],
) -> Option<(usize, usize)> {
    for s in (0..bags.len()).filter(|&s| alive[s]) {
        for &t in &adj[s] {
            if bags[s].is_subset(&bags[t]) {
                return Some((s, t));
            }
        }
    }
    None
}

/// `T(v)`: the bag-nodes whose bags contain `v`, rooted at the smallest such
/// node.
pub fn subtree_of_vertex(td: &TreeDecomposition, v: usize) -> Result<RootedTree> {
    let nodes: BTreeSet<usize> = (0..td.len()).filter(|&s| td.bags[s].contains(&v)).collect();
    let root = *nodes.first().ok_or(Error::UnknownVertex(v))?;
    let edges = td
        .tree_edges
        .iter()
        .copied()
        .filter(|(s, t)| nodes.contains(s) && nodes.contains(t));
    RootedTree::from_edges(nodes.iter().copied(), edges, root)
}

/// The unique vertex of `B_s \ B_t` for a tree edge `st` of a smooth
/// decomposition.
pub fn leaving_vertex(td: &TreeDecomposition, s: usize, t: usize) -> Result<usize> {
    if s >= td.len() || t >= td.len() || !td.is_tree_edge(s, t) {
        return Err(Error::NotTreeEdge(s, t));
    }
    let mut diff = td.bags[s].difference(&td.bags[t]);
    match (diff.next(), diff.next()) {
        (Some(&v), None) if td.bags[s].len() == td.bags[t].len() => Ok(v),
        _ => Err(Error::NotSmooth),
    }
}

/// Leaving vertex of every oriented tree edge, in the order of
/// [`RootedTree::oriented_edges`].
pub fn leaving_map(td: &TreeDecomposition) -> Result<Vec<((usize, usize), usize)>> {
    let tree = td.tree()?;
    tree.oriented_edges()
        .into_iter()
        .map(|(s, t)| Ok(((s, t), leaving_vertex(td, s, t)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle, path, Graph};

    fn p4_decomposition() -> TreeDecomposition {
        TreeDecomposition::from_bags(&[&[0, 1], &[1, 2], &[2, 3]], &[(0, 1), (1, 2)])
    }

    #[test]
    fn validate_examples() {
        let v = validate_decomposition(&path(4), &p4_decomposition()).unwrap();
        assert!(v.valid && v.smooth);
        assert_eq!(v.width, 1);

        let tri = complete_graph(3);
        let single = TreeDecomposition::from_bags(&[&[0, 1, 2]], &[]);
        let v = validate_decomposition(&tri, &single).unwrap();
        assert!(v.valid && v.smooth);
        assert_eq!(v.width, 2);

        let split = TreeDecomposition::from_bags(&[&[0, 1], &[1, 2]], &[(0, 1)]);
        let v = validate_decomposition(&tri, &split).unwrap();
        assert!(!v.valid);
        assert!(v.reason.unwrap().contains("(0, 2)"));
    }

    #[test]
    fn validate_rejects_broken_subtrees_and_bad_vertices() {
        let td = TreeDecomposition::from_bags(&[&[0, 1], &[1, 2], &[0, 2]], &[(0, 1), (1, 2)]);
        let v = validate_decomposition(&cycle(3), &td).unwrap();
        assert!(!v.valid);
        assert!(v.reason.unwrap().contains("vertex 0"));
        let td = TreeDecomposition::from_bags(&[&[0, 7]], &[]);
        assert_eq!(
            validate_decomposition(&path(2), &td),
            Err(Error::BagVertexOutOfRange { bag: 0, vertex: 7, n: 2 })
        );
        let missing = TreeDecomposition::from_bags(&[&[0, 1]], &[]);
        assert!(!validate_decomposition(&path(3), &missing).unwrap().valid);
        let cyclic = TreeDecomposition::from_bags(&[&[0, 1], &[1, 2], &[1]], &[(0, 1), (1, 2), (2, 0)]);
        assert!(!validate_decomposition(&path(3), &cyclic).unwrap().valid);
    }

    #[test]
    fn smooth_examples() {
        let tri = complete_graph(3);
        let td = TreeDecomposition::from_bags(&[&[0, 1, 2], &[1, 2]], &[(0, 1)]);
        let s = smooth(&tri, &td).unwrap();
        assert_eq!(s.bags(), &[BTreeSet::from([0, 1, 2])]);

        let s = smooth(&path(4), &p4_decomposition()).unwrap();
        assert_eq!(s, TreeDecomposition::new(p4_decomposition().bags, vec![(0, 1), (1, 2)], Some(0)));

        let mut pairs: Vec<(usize, usize)> = complete_graph(4).edges().to_vec();
        pairs.push((0, 4));
        let g = Graph::new(5, pairs).unwrap();
        let td = TreeDecomposition::from_bags(&[&[0, 1, 2, 3], &[0, 4]], &[(0, 1)]);
        let s = smooth(&g, &td).unwrap();
        assert_eq!(s.bags(), &[BTreeSet::from([0, 1, 2, 3]), BTreeSet::from([0, 1, 2, 4])]);
        let v = validate_decomposition(&g, &s).unwrap();
        assert!(v.valid && v.smooth);
        assert_eq!(v.width, 3);
    }

    #[test]
    fn smooth_subdivides_distant_bags() {
        // Bags {0,1,2} and {2,3,4} differ in two vertices on each side.
        let g = Graph::new(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let td = TreeDecomposition::from_bags(&[&[0, 1, 2], &[2, 3, 4]], &[(0, 1)]);
        let s = smooth(&g, &td).unwrap();
        let v = validate_decomposition(&g, &s).unwrap();
        assert!(v.valid && v.smooth);
        assert_eq!(v.width, 2);
        assert_eq!(s.len(), 5 - 2);
    }

    #[test]
    fn smooth_rejects_invalid() {
        let split = TreeDecomposition::from_bags(&[&[0, 1], &[1, 2]], &[(0, 1)]);
        assert!(matches!(smooth(&complete_graph(3), &split), Err(Error::InvalidDecomposition(_))));
    }

    #[test]
    fn vertex_subtrees() {
        let td = p4_decomposition();
        let t = subtree_of_vertex(&td, 1).unwrap();
        assert_eq!(t.nodes().collect::<Vec<_>>(), vec![0, 1]);
        let single = TreeDecomposition::from_bags(&[&[0, 1, 2]], &[]);
        assert_eq!(subtree_of_vertex(&single, 2).unwrap().len(), 1);
        assert_eq!(subtree_of_vertex(&td, 9), Err(Error::UnknownVertex(9)));
    }

    #[test]
    fn leaving_vertices() {
        let td = p4_decomposition();
        assert_eq!(leaving_vertex(&td, 0, 1), Ok(0));
        assert_eq!(leaving_vertex(&td, 1, 0), Ok(2));
        assert_eq!(leaving_vertex(&td, 0, 2), Err(Error::NotTreeEdge(0, 2)));
        let rough = TreeDecomposition::from_bags(&[&[0, 1, 2], &[2, 3, 4]], &[(0, 1)]);
        assert_eq!(leaving_vertex(&rough, 0, 1), Err(Error::NotSmooth));
    }

    #[test]
    fn json_round_trip_with_sparse_ids() {
        let text = r#"{"nodes":[10,20,30],"tree_edges":[[10,20],[20,30]],
                       "bags":{"10":[0,1],"20":[1,2],"30":[2,3]}}"#;
        let td = TreeDecomposition::from_json(text).unwrap();
        assert_eq!(td, p4_decomposition());
        assert_eq!(TreeDecomposition::from_json(&td.to_json()).unwrap(), td);
        assert!(TreeDecomposition::from_json(r#"{"nodes":[1],"tree_edges":[[1,2]],"bags":{}}"#).is_err());
    }
}
