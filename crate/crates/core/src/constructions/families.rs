//! Extremal families for the edge bounds.

use std::collections::BTreeSet;

use num_integer::Roots;
use serde::Serialize;

use super::degree::havel_hakimi_realize;
use crate::decomposition::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::{complement, path_power, DegreeSequence, Graph};

/// Smallest `k` in `k0..=k0+8` with `k ≡ ⌊√k⌋ (mod 8)` and `k` not a square.
pub fn select_k(k0: usize) -> Result<usize> {
    if k0 < 4 {
        return Err(Error::BadParams(format!("k0 = {k0} must be at least 4")));
    }
    let k = (k0..=k0 + 8)
        .find(|&k| {
            let s = k.sqrt();
            k % 8 == s % 8 && s * s != k
        })
        .expect("a suitable k exists in every window of nine");
    Ok(k)
}

/// `K_k` on `0..k` plus `r` independent vertices `k..k+r`, each joined to the
/// whole clique.
pub fn construct_apex(k: usize, r: usize) -> Result<Graph> {
    if k == 0 || r == 0 {
        return Err(Error::BadParams(format!("apex needs k, r ≥ 1 (got k = {k}, r = {r})")));
    }
    let clique = (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v)));
    let spokes = (k..k + r).flat_map(|a| (0..k).map(move |v| (v, a)));
    Graph::new(k + r, clique.chain(spokes))
}

/// The complement of `K_{1,1} ⊔ K_{1,2} ⊔ … ⊔ K_{1,p}`. Vertices `0..p` are
/// the star centres (`i` has `i+1` leaves); the leaves follow star by star.
pub fn construct_stars_complement(p: usize) -> Result<Graph> {
    if p == 0 {
        return Err(Error::BadParams("p must be at least 1".into()));
    }
    let n = p * (p + 1) / 2 + p;
    let mut stars = Vec::new();
    let mut next = p;
    for centre in 0..p {
        for _ in 0..=centre {
            stars.push((centre, next));
            next += 1;
        }
    }
    Ok(complement(&Graph::new(n, stars)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TightParams {
    pub k: usize,
    pub delta: usize,
    pub c: usize,
    pub r: usize,
    pub n: usize,
}

impl TightParams {
    /// Explicit parameters; `Δ` even, `k < Δ`, `k > Δ/2`, `4 | c(2r+c+1)`,
    /// `r² ≥ c` and `n ≥ 4k` are required.
    pub fn new(k: usize, delta: usize, n: usize) -> Result<Self> {
        let bad = |msg: String| Err(Error::BadParams(msg));
        if delta % 2 == 1 {
            return bad(format!("Δ = {delta} must be even"));
        }
        if delta <= k || 2 * k <= delta {
            return bad(format!("need Δ/2 < k < Δ (k = {k}, Δ = {delta})"));
        }
        let (c, r) = (k - delta / 2, delta - k);
        if (c * (2 * r + c + 1)) % 4 != 0 {
            return bad(format!("4 does not divide c(2r+c+1) for c = {c}, r = {r}"));
        }
        if r * r < c {
            return bad(format!("r² < c for c = {c}, r = {r}"));
        }
        if n < 4 * k {
            return bad(format!("n = {n} is below 4k = {}", 4 * k));
        }
        Ok(TightParams { k, delta, c, r, n })
    }

    /// `k = select_k(k0)` and `Δ = k + ⌊√k⌋`.
    pub fn from_k0(k0: usize, n: usize) -> Result<Self> {
        let k = select_k(k0)?;
        TightParams::new(k, k + k.sqrt(), n)
    }

    /// `(k, k+1, …, Δ−1, Δ, …, Δ, Δ−1, …, k+1, k)` in vertex order.
    pub fn target_degrees(&self) -> Vec<usize> {
        let TightParams { k, delta, n, .. } = *self;
        (1..=n).map(|i| (k - 1 + i).min(delta).min(k + n - i)).collect()
    }

    /// `Δn − (Δ−k)(Δ−k+1)`.
    pub fn twice_edges(&self) -> usize {
        self.delta * self.n - self.r * (self.r + 1)
    }
}

/// A graph with the target degrees, contained in the `k`-th power of a path,
/// together with the path-power decomposition of width `k`.
pub fn construct_tight(params: &TightParams) -> Result<(Graph, TreeDecomposition)> {
    let TightParams { k, delta, c, r, n } = *params;
    let half = delta / 2;
    // 1-based indices as in the construction; v_i is vertex i−1.
    let mirror = |i: usize| n + 1 - i;
    let mut edges: BTreeSet<(usize, usize)> = path_power(n, half).edges().iter().copied().collect();
    let mut add = |i: usize, j: usize| {
        for (a, b) in [(i, j), (mirror(j), mirror(i))] {
            assert!(edges.insert((a - 1, b - 1)), "edge v{a}v{b} created twice");
        }
    };
    for i in 1..=r {
        for j in i + half + 1..=i + k {
            add(i, j);
        }
    }
    for i in r + 1..=half {
        for j in i + half + 1..=delta + 1 {
            add(i, j);
        }
    }

    let mut degree = vec![0usize; n];
    for &(u, v) in &edges {
        degree[u] += 1;
        degree[v] += 1;
    }
    for i in 1..=n.div_ceil(2) {
        let expected = match i {
            i if i <= r + 1 => k - 1 + i,
            i if i <= half + 1 => delta,
            i if i <= k + 1 => delta + i - half - 1,
            i if i <= delta + 1 => k + half,
            _ => delta,
        };
        assert_eq!(degree[i - 1], expected, "degree of v{i} after augmentation");
    }

    // Excess (1, 2, …, c−1, c × (r+1)) on v_{Δ/2+2}, …, v_{Δ+1}.
    let excess: Vec<usize> = (1..=c).chain(std::iter::repeat(c).take(r)).collect();
    let h = havel_hakimi_realize(&DegreeSequence::sorted(excess.clone()))
        .map_err(|_| Error::EmbedFail(format!("excess sequence for c = {c}, r = {r} is not graphic")))?;
    // Sorted position p (descending excess) sits at index Δ+1−p.
    let place = |p: usize| delta + 1 - p;
    for &(a, b) in h.edges() {
        let (i, j) = (place(b), place(a));
        for (x, y) in [(i, j), (mirror(j), mirror(i))] {
            if !edges.remove(&(x - 1, y - 1)) {
                return Err(Error::EmbedFail(format!("v{x}v{y} is not an edge of P'")));
            }
        }
    }

    let g = Graph::new(n, edges)?;
    if g.degrees() != params.target_degrees() {
        return Err(Error::EmbedFail("degree sequence differs from the target".into()));
    }
    Ok((g, TreeDecomposition::path_power(n, k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::is_overfull;
    use crate::decomposition::validate_decomposition;

    #[test]
    fn select_k_scan() {
        assert_eq!(select_k(4), Ok(11));
        assert_eq!(select_k(11), Ok(11));
        assert_eq!(select_k(12), Ok(20));
        for k0 in 4..200 {
            let k = select_k(k0).unwrap();
            assert!((k0..=k0 + 8).contains(&k));
            let c = k - (k + k.sqrt()) / 2;
            assert_eq!(c % 4, 0, "k = {k}");
        }
    }

    #[test]
    fn apex_counts() {
        let g = construct_apex(5, 2).unwrap();
        assert_eq!((g.n(), g.m(), g.max_degree()), (7, 20, 6));
        assert_eq!(construct_apex(6, 3).unwrap().m(), 33);
        assert!(construct_apex(0, 1).is_err());
    }

    #[test]
    fn stars_complement_small() {
        let g2 = construct_stars_complement(2).unwrap();
        assert_eq!(g2.degrees(), vec![3, 2, 3, 3, 3]);
        assert_eq!(g2.m(), 7);
        let g1 = construct_stars_complement(1).unwrap();
        assert_eq!((g1.n(), g1.m()), (2, 0));
        let g5 = construct_stars_complement(5).unwrap();
        assert_eq!((g5.n(), g5.max_degree()), (20, 18));
    }

    #[test]
    fn tight_example_k8() {
        for n in [32, 33] {
            let params = TightParams::new(8, 10, n).unwrap();
            let (g, td) = construct_tight(&params).unwrap();
            let mut expected = vec![8, 9];
            expected.extend(std::iter::repeat(10).take(n - 4));
            expected.extend([9, 8]);
            assert_eq!(g.degrees(), expected);
            assert_eq!(2 * g.m(), 10 * n - 6);
            let val = validate_decomposition(&g, &td).unwrap();
            assert!(val.valid && val.width == 8);
            assert_eq!(is_overfull(&g), n % 2 == 1);
        }
        assert_eq!(construct_tight(&TightParams::new(8, 10, 32).unwrap()).unwrap().0.m(), 157);
    }

    #[test]
    fn tight_from_k0() {
        let p = TightParams::from_k0(4, 44).unwrap();
        assert_eq!((p.k, p.delta, p.c, p.r), (11, 14, 4, 3));
        let (g, _) = construct_tight(&p).unwrap();
        assert_eq!(2 * g.m(), 14 * 44 - 12);
        let (g45, _) = construct_tight(&TightParams::from_k0(4, 45).unwrap()).unwrap();
        assert!(is_overfull(&g45));
    }

    #[test]
    fn tight_params_rejected() {
        assert!(TightParams::new(8, 11, 40).is_err());
        assert!(TightParams::new(8, 10, 31).is_err());
        assert!(TightParams::new(9, 10, 40).is_err());
        assert!(TightParams::from_k0(3, 100).is_err());
    }
}
