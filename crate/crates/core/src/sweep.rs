//! Checking statements over graph corpora.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;
use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{GraphFacts, Limits, Statement, Verdict};
use crate::constructions::random_partial_ktree;
use crate::decomposition::treewidth_exact;
use crate::enumerate::enumerate_up_to;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SweepSource {
    /// Every graph on `1..=n_max` vertices, up to isomorphism.
    Exhaustive { n_max: usize },
    /// `count` partial `k`-trees; sample `i` has a uniform order in
    /// `n_min..=n_max`. With `force_delta`, edges at maximum-degree vertices
    /// are removed until `Δ ≤ force_delta`, and only samples with exactly
    /// that maximum degree and treewidth exactly `k` are kept; `count` then
    /// counts kept samples.
    PartialKtree {
        n_min: usize,
        n_max: usize,
        k: usize,
        #[serde(serialize_with = "serialize_rational")]
        keep_prob: Rational,
        count: usize,
        seed: u64,
        force_delta: Option<usize>,
    },
}

fn serialize_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    pub source: SweepSource,
    pub statements: Vec<Statement>,
    pub limits: Limits,
}

/// Attempts per requested sample before a forced-degree sweep gives up.
const FORCE_ATTEMPTS_PER_SAMPLE: usize = 200;

/// Removes edges at the smallest maximum-degree vertex, towards its
/// highest-degree neighbour, until `Δ ≤ target`.
pub fn trim_to_max_degree(g: &Graph, target: usize) -> Graph {
    let mut g = g.clone();
    while g.max_degree() > target {
        let delta = g.max_degree();
        let u = (0..g.n()).find(|&v| g.degree(v) == delta).unwrap();
        let w = *g.neighbors(u).iter().max_by_key(|&&w| (g.degree(w), std::cmp::Reverse(w))).unwrap();
        g = g.without_edge(u, w);
    }
    g
}

impl SweepSource {
    pub fn corpus(&self, limits: Limits) -> Result<Vec<Graph>> {
        match *self {
            SweepSource::Exhaustive { n_max } => enumerate_up_to(n_max),
            SweepSource::PartialKtree { n_min, n_max, k, keep_prob, count, seed, force_delta } => {
                if n_min < k + 1 || n_max < n_min {
                    return Err(Error::BadParams(format!(
                        "need k + 1 ≤ n_min ≤ n_max (k = {k}, n_min = {n_min}, n_max = {n_max})"
                    )));
                }
                let mut seeds = SplitMix64::seed_from_u64(seed);
                let mut out = Vec::with_capacity(count);
                let mut attempts = 0;
                while out.len() < count {
                    if force_delta.is_some() && attempts >= count.max(1) * FORCE_ATTEMPTS_PER_SAMPLE {
                        return Err(Error::BadParams(format!(
                            "only {} of {count} samples reached the forced maximum degree",
                            out.len()
                        )));
                    }
                    attempts += 1;
                    let n = seeds.gen_range(n_min..=n_max);
                    let g = random_partial_ktree(n, k, keep_prob, seeds.gen())?;
                    match force_delta {
                        None => out.push(g),
                        Some(target) => {
                            let g = trim_to_max_degree(&g, target);
                            if g.max_degree() == target
                                && treewidth_exact(&g, limits.treewidth).is_ok_and(|(tw, _)| tw == k)
                            {
                                out.push(g);
                            }
                        }
                    }
                }
                Ok(out)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct StatementCounts {
    /// Graphs whose hypotheses held and whose conclusion was decided.
    pub checked: usize,
    pub passed: usize,
    pub failed: usize,
    pub not_applicable: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub statement: Statement,
    /// Position in the corpus.
    pub index: usize,
    #[serde(skip)]
    pub graph: Graph,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub schema: u32,
    pub config: SweepConfig,
    pub graphs: usize,
    pub counts: BTreeMap<Statement, StatementCounts>,
    /// The first failing graph per statement, in corpus order.
    pub counterexamples: Vec<Counterexample>,
}

impl SweepReport {
    pub fn failures(&self) -> usize {
        self.counts.values().map(|c| c.failed).sum()
    }
}

/// Verdicts for every graph of `corpus` (computed in parallel, reported in
/// corpus order).
pub fn sweep_corpus(corpus: &[Graph], statements: &[Statement], limits: Limits) -> Vec<Vec<Verdict>> {
    corpus
        .par_iter()
        .map(|g| {
            let facts = GraphFacts::new(g, limits);
            statements.iter().map(|&s| facts.verdict(s)).collect()
        })
        .collect()
}

pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport> {
    let corpus = config.source.corpus(config.limits)?;
    let verdicts = sweep_corpus(&corpus, &config.statements, config.limits);
    let mut counts: BTreeMap<Statement, StatementCounts> =
        config.statements.iter().map(|&s| (s, StatementCounts::default())).collect();
    let mut counterexamples = Vec::new();
    for (index, row) in verdicts.iter().enumerate() {
        for (&statement, &verdict) in config.statements.iter().zip(row) {
            let c = counts.get_mut(&statement).unwrap();
            match verdict {
                Verdict::Pass => {
                    c.checked += 1;
                    c.passed += 1;
                }
                Verdict::Fail => {
                    c.checked += 1;
                    c.failed += 1;
                    if !counterexamples.iter().any(|x: &Counterexample| x.statement == statement) {
                        counterexamples.push(Counterexample { statement, index, graph: corpus[index].clone() });
                    }
                }
                Verdict::NotApplicable => c.not_applicable += 1,
                Verdict::Skipped => c.skipped += 1,
            }
        }
    }
    Ok(SweepReport { schema: 1, config: config.clone(), graphs: corpus.len(), counts, counterexamples })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::random_partial_ktree;

    #[test]
    fn exhaustive_small() {
        let config = SweepConfig {
            source: SweepSource::Exhaustive { n_max: 5 },
            statements: Statement::ALL.to_vec(),
            limits: Limits::default(),
        };
        let report = run_sweep(&config).unwrap();
        assert_eq!(report.graphs, 1 + 2 + 4 + 11 + 34);
        assert_eq!(report.failures(), 0);
        assert!(report.counts[&Statement::Prop3].checked > 0);
        let json = serde_json::to_string(&report).unwrap();
        assert_eq!(json, serde_json::to_string(&run_sweep(&config).unwrap()).unwrap());
    }

    #[test]
    fn forced_degree_samples() {
        let source = SweepSource::PartialKtree {
            n_min: 10,
            n_max: 12,
            k: 4,
            keep_prob: Rational::new(9, 10),
            count: 5,
            seed: 1,
            force_delta: Some(7),
        };
        let corpus = source.corpus(Limits::default()).unwrap();
        assert_eq!(corpus.len(), 5);
        for g in &corpus {
            assert_eq!(g.max_degree(), 7);
        }
    }

    #[test]
    fn trimming() {
        let g = random_partial_ktree(14, 4, Rational::from_integer(1), 3).unwrap();
        let t = trim_to_max_degree(&g, 5);
        assert!(t.max_degree() <= 5);
        assert!(t.edges().iter().all(|&(u, v)| g.has_edge(u, v)));
    }
}
