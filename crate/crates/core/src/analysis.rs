//! Per-graph analysis: every measure the crate computes, plus a verdict for
//! each class-one statement whose hypotheses can be certified.

use std::cell::OnceCell;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::bounds::{check_edge_bound, find_overfull_subgraph, is_overfull, lemma4_applies, BoundModel, BoundReport};
use crate::coloring::{
    chromatic_index, criticality_certificates, fractional_chi_prime, ChiPrimeMethod, ChromaticIndex,
    FractionalIndex, FractionalWitness, Violation, DEFAULT_CHI_LIMIT, DEFAULT_FRACTIONAL_LIMIT,
};
use crate::decomposition::{elimination_width, min_degree_order, treewidth_exact, DEFAULT_TREEWIDTH_LIMIT};
use crate::graph::{degeneracy, Graph};
use crate::Rational;

/// Size caps for the exponential solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Limits {
    /// Vertices, for exact treewidth.
    pub treewidth: usize,
    /// Edges, for the exact chromatic index.
    pub chi: usize,
    /// Vertices, for the odd-set searches.
    pub fractional: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            treewidth: DEFAULT_TREEWIDTH_LIMIT,
            chi: DEFAULT_CHI_LIMIT,
            fractional: DEFAULT_FRACTIONAL_LIMIT,
        }
    }
}

/// Class-one statements checked against graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Statement {
    /// Treewidth `k`, `Δ ≥ k + √k` ⇒ `χ' = Δ` (conjectured).
    Conjecture2,
    /// Treewidth `k`, `Δ ≥ k + √k` ⇒ not overfull.
    Lemma4,
    /// Treewidth `k ≥ 4`, `Δ ≥ 2k − 1` ⇒ `χ' = Δ`.
    Prop1,
    /// Treewidth `k`, `Δ ≥ k` ⇒ `2|E| ≤ Δn − (Δ−k)(Δ−k+1)`.
    Prop3,
    /// Treewidth `k`, `Δ ≥ k + √k` ⇒ `χ'_f = Δ`.
    Theorem3,
}

impl Statement {
    pub const ALL: [Statement; 5] =
        [Statement::Conjecture2, Statement::Lemma4, Statement::Prop1, Statement::Prop3, Statement::Theorem3];

    pub fn id(self) -> &'static str {
        match self {
            Statement::Conjecture2 => "conjecture2",
            Statement::Lemma4 => "lemma4",
            Statement::Prop1 => "prop1",
            Statement::Prop3 => "prop3",
            Statement::Theorem3 => "theorem3",
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Statement {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Statement::ALL
            .into_iter()
            .find(|st| st.id() == s)
            .ok_or_else(|| format!("unknown statement `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
    /// Hypotheses hold but the conclusion is beyond the solver limits.
    Skipped,
}

/// A value, or `"skipped"` when its solver limit was exceeded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Computed<T> {
    Value(T),
    Skipped,
}

impl<T> Computed<T> {
    pub fn value(&self) -> Option<&T> {
        match self {
            Computed::Value(v) => Some(v),
            Computed::Skipped => None,
        }
    }
}

impl<T: Serialize> Serialize for Computed<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Computed::Value(v) => v.serialize(s),
            Computed::Skipped => s.serialize_str("skipped"),
        }
    }
}

/// Exact treewidth, or the interval `[degeneracy, min-degree width]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum TreewidthValue {
    Exact(usize),
    Range([usize; 2]),
}

impl TreewidthValue {
    /// A certified upper bound.
    pub fn upper(self) -> usize {
        match self {
            TreewidthValue::Exact(k) | TreewidthValue::Range([_, k]) => k,
        }
    }

    /// A certified lower bound.
    pub fn lower(self) -> usize {
        match self {
            TreewidthValue::Exact(k) | TreewidthValue::Range([k, _]) => k,
        }
    }

    pub fn exact(self) -> Option<usize> {
        match self {
            TreewidthValue::Exact(k) => Some(k),
            TreewidthValue::Range(_) => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RationalValue {
    pub num: i64,
    pub den: i64,
}

impl From<Rational> for RationalValue {
    fn from(r: Rational) -> Self {
        RationalValue { num: *r.numer(), den: *r.denom() }
    }
}

/// Lazily computed measures of one graph.
pub struct GraphFacts<'a> {
    g: &'a Graph,
    limits: Limits,
    degeneracy: OnceCell<usize>,
    treewidth: OnceCell<TreewidthValue>,
    chi: OnceCell<ChromaticIndex>,
    fractional: OnceCell<Computed<FractionalIndex>>,
}

impl<'a> GraphFacts<'a> {
    pub fn new(g: &'a Graph, limits: Limits) -> Self {
        GraphFacts {
            g,
            limits,
            degeneracy: OnceCell::new(),
            treewidth: OnceCell::new(),
            chi: OnceCell::new(),
            fractional: OnceCell::new(),
        }
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    pub fn degeneracy(&self) -> usize {
        *self.degeneracy.get_or_init(|| degeneracy(self.g).0)
    }

    pub fn treewidth(&self) -> TreewidthValue {
        *self.treewidth.get_or_init(|| match treewidth_exact(self.g, self.limits.treewidth) {
            Ok((k, _)) => TreewidthValue::Exact(k),
            Err(_) => {
                let upper = elimination_width(self.g, &min_degree_order(self.g));
                TreewidthValue::Range([self.degeneracy(), upper])
            }
        })
    }

    pub fn chromatic_index(&self) -> &ChromaticIndex {
        self.chi.get_or_init(|| chromatic_index(self.g, self.limits.chi))
    }

    pub fn fractional(&self) -> &Computed<FractionalIndex> {
        self.fractional.get_or_init(|| match fractional_chi_prime(self.g, self.limits.fractional) {
            Ok(f) => Computed::Value(f),
            Err(_) => Computed::Skipped,
        })
    }

    /// `Some(true)` when `χ' = Δ` is decided, `None` when only an upper
    /// bound of `Δ + 1` is known.
    fn class_one(&self) -> Option<bool> {
        let ci = self.chromatic_index();
        let delta = self.g.max_degree();
        match ci.method {
            ChiPrimeMethod::Exact => Some(ci.value == delta),
            ChiPrimeMethod::VizingUpper => (ci.value == delta).then_some(true),
        }
    }

    /// Verdict for one statement. The hypotheses `Δ ≥ k`, `Δ ≥ k + √k` and
    /// `Δ ≥ 2k − 1` only get weaker as `k` shrinks, so the treewidth upper
    /// bound certifies them; `k ≥ 4` is checked against the lower bound.
    pub fn verdict(&self, statement: Statement) -> Verdict {
        let g = self.g;
        let delta = g.max_degree();
        let k = self.treewidth().upper();
        let from = |b: bool| if b { Verdict::Pass } else { Verdict::Fail };
        let dense = lemma4_applies(delta, k);
        match statement {
            Statement::Prop3 => match check_edge_bound(g, k, BoundModel::Treewidth) {
                Ok(report) if delta >= k => from(report.holds()),
                _ => Verdict::NotApplicable,
            },
            Statement::Lemma4 if dense => from(!is_overfull(g)),
            Statement::Theorem3 if dense => match self.fractional() {
                Computed::Value(f) => from(f.value == Rational::from_integer(delta as i64)),
                Computed::Skipped => Verdict::Skipped,
            },
            Statement::Conjecture2 if dense => self.class_one().map_or(Verdict::Skipped, from),
            Statement::Prop1 if self.treewidth().lower() >= 4 && delta + 1 >= 2 * k => self.class_one().map_or(Verdict::Skipped, from),
            _ => Verdict::NotApplicable,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub degeneracy: usize,
    pub treewidth: TreewidthValue,
    pub chi_prime: usize,
    pub chi_prime_method: ChiPrimeMethod,
    pub chi_prime_fractional: Computed<RationalValue>,
    pub fractional_witness: Computed<FractionalWitness>,
    pub overfull: bool,
    pub overfull_subgraph: Computed<Option<Vec<usize>>>,
    pub bounds: BTreeMap<&'static str, Computed<Option<BoundReport>>>,
    pub critical_certificates: Vec<Violation>,
    pub verdicts: BTreeMap<Statement, Verdict>,
}

/// Runs every measure within `limits`. Bounds are `null` when the model's
/// hypotheses fail; the treewidth models use the certified upper bound.
pub fn analyze(g: &Graph, limits: Limits) -> AnalysisReport {
    let facts = GraphFacts::new(g, limits);
    let ci = facts.chromatic_index();
    let fractional = facts.fractional();
    let mut bounds = BTreeMap::new();
    for model in BoundModel::ALL {
        let k = match model {
            BoundModel::Degenerate => facts.degeneracy(),
            _ => facts.treewidth().upper(),
        };
        bounds.insert(model.name(), Computed::Value(check_edge_bound(g, k, model).ok()));
    }
    AnalysisReport {
        schema: 1,
        n: g.n(),
        m: g.m(),
        max_degree: g.max_degree(),
        degeneracy: facts.degeneracy(),
        treewidth: facts.treewidth(),
        chi_prime: ci.value,
        chi_prime_method: ci.method,
        chi_prime_fractional: match fractional {
            Computed::Value(f) => Computed::Value(f.value.into()),
            Computed::Skipped => Computed::Skipped,
        },
        fractional_witness: match fractional {
            Computed::Value(f) => Computed::Value(f.witness.clone()),
            Computed::Skipped => Computed::Skipped,
        },
        overfull: is_overfull(g),
        overfull_subgraph: match find_overfull_subgraph(g, limits.fractional) {
            Ok(s) => Computed::Value(s),
            Err(_) => Computed::Skipped,
        },
        bounds,
        critical_certificates: criticality_certificates(g),
        verdicts: Statement::ALL.into_iter().map(|s| (s, facts.verdict(s))).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::construct_apex;
    use crate::graph::{complete_graph, path_power, petersen};

    #[test]
    fn petersen_report() {
        let r = analyze(&petersen(), Limits::default());
        assert_eq!(r.treewidth, TreewidthValue::Exact(4));
        assert_eq!((r.chi_prime, r.chi_prime_method), (4, ChiPrimeMethod::Exact));
        assert_eq!(r.chi_prime_fractional, Computed::Value(RationalValue { num: 3, den: 1 }));
        assert!(!r.overfull);
    }

    #[test]
    fn triangle_report() {
        let r = analyze(&complete_graph(3), Limits::default());
        assert!(r.overfull);
        assert_eq!(r.chi_prime, 3);
        assert_eq!(r.overfull_subgraph, Computed::Value(Some(vec![0, 1, 2])));
    }

    #[test]
    fn apex_verdicts() {
        let r = analyze(&construct_apex(5, 2).unwrap(), Limits::default());
        assert_eq!(r.verdicts[&Statement::Lemma4], Verdict::NotApplicable);
        assert_eq!(r.verdicts[&Statement::Prop3], Verdict::Pass);
        assert!(r.bounds["eq1_treewidth"].value().unwrap().as_ref().unwrap().tight);
    }

    #[test]
    fn over_limits() {
        let g = path_power(40, 3);
        let r = analyze(&g, Limits { treewidth: 20, chi: 10, fractional: 18 });
        assert_eq!(r.treewidth, TreewidthValue::Range([3, 3]));
        assert_eq!(r.chi_prime_fractional, Computed::Skipped);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["chi_prime_fractional"], "skipped");
        assert_eq!(json["treewidth"], serde_json::json!([3, 3]));
        assert_eq!(json["schema"], 1);
        assert_eq!(r.verdicts[&Statement::Prop3], Verdict::Pass);
        assert_eq!(r.verdicts[&Statement::Lemma4], Verdict::Pass);
        assert_eq!(r.verdicts[&Statement::Theorem3], Verdict::Skipped);
    }

    #[test]
    fn statement_ids_round_trip() {
        for s in Statement::ALL {
            assert_eq!(s.id().parse::<Statement>(), Ok(s));
            assert_eq!(serde_json::to_value(s).unwrap(), s.id());
        }
        assert!("prop2".parse::<Statement>().is_err());
    }
}
