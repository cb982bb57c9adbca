use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use edgetw::analysis::{analyze, Limits, Statement};
use edgetw::bounds::{check_edge_bound, is_overfull, BoundModel};
use edgetw::constructions::{
    construct_apex, construct_stars_complement, construct_tight, erdos_gallai_failure, havel_hakimi_realize,
    lemma7_sequence, random_partial_ktree, GraphicFailure, TightParams,
};
use edgetw::decomposition::{smooth, treewidth_exact, validate_decomposition, TreeDecomposition};
use edgetw::graph::{degeneracy, parse_edge_list, to_edge_list};
use edgetw::sweep::{run_sweep, SweepConfig, SweepSource};
use edgetw::{DegreeSequence, Graph, Rational};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "edgetw", version, about = "Treewidth, edge bounds and edge colouring of small graphs")]
struct Cli {
    /// Vertex cap for exact treewidth.
    #[arg(long, global = true, default_value_t = edgetw::decomposition::DEFAULT_TREEWIDTH_LIMIT)]
    limit_treewidth: usize,
    /// Edge cap for the exact chromatic index.
    #[arg(long, global = true, default_value_t = edgetw::coloring::DEFAULT_CHI_LIMIT)]
    limit_chi: usize,
    /// Vertex cap for the odd-set searches.
    #[arg(long, global = true, default_value_t = edgetw::coloring::DEFAULT_FRACTIONAL_LIMIT)]
    limit_fractional: usize,
    /// Seed for random generators.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report every measure of a graph as JSON.
    Analyze { graph: PathBuf },
    /// Build a graph family and verify it.
    Construct {
        #[command(subcommand)]
        family: Family,
        /// Write `<OUT>.el` and the sidecar `<OUT>.json` instead of printing
        /// the edge list.
        #[arg(long, short, global = true)]
        out: Option<PathBuf>,
    },
    /// Realise a degree sequence.
    Realize {
        /// Non-increasing degrees.
        degrees: Vec<usize>,
        /// Use the sequence `(c × (r+1), c−1, …, 1)` instead.
        #[arg(long, num_args = 2, value_names = ["C", "R"], conflicts_with = "degrees")]
        lemma7: Option<Vec<usize>>,
    },
    /// Exact tree decomposition as JSON.
    Decompose {
        graph: PathBuf,
        /// Make the decomposition smooth.
        #[arg(long)]
        smooth: bool,
    },
    /// Check a decomposition JSON against a graph.
    Validate { graph: PathBuf, decomposition: PathBuf },
    /// Check statements over a corpus.
    Sweep {
        #[command(subcommand)]
        source: SourceArgs,
        /// Comma-separated statement ids (default: all).
        #[arg(long, global = true, value_delimiter = ',')]
        statements: Vec<Statement>,
        /// Directory for counterexample edge lists.
        #[arg(long, global = true, default_value = ".")]
        dump_dir: PathBuf,
    },
}

#[derive(Subcommand)]
enum Family {
    /// `K_k` plus `r` vertices joined to all of it.
    Apex {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
    },
    /// Degree-extremal graph inside a path power.
    Tight(TightArgs),
    /// Complement of the stars `K_{1,1}, …, K_{1,p}`.
    Stars {
        #[arg(long)]
        p: usize,
    },
    /// Random partial `k`-tree.
    Ktree {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Edge keep probability, e.g. `1/2`.
        #[arg(long, default_value = "1")]
        keep: Rational,
    },
}

#[derive(Args)]
struct TightArgs {
    #[arg(long)]
    n: usize,
    /// Derive `k` and `Δ` from this starting value.
    #[arg(long, conflicts_with_all = ["k", "delta"])]
    k0: Option<usize>,
    #[arg(long, requires = "delta")]
    k: Option<usize>,
    #[arg(long, requires = "k")]
    delta: Option<usize>,
}

#[derive(Subcommand)]
enum SourceArgs {
    /// All graphs up to isomorphism.
    Exhaustive {
        #[arg(long)]
        n_max: usize,
    },
    /// Random partial k-trees.
    Ktree {
        #[arg(long)]
        n_min: Option<usize>,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "1")]
        keep: Rational,
        #[arg(long)]
        count: usize,
        /// Trim to this maximum degree and keep samples of exact treewidth k.
        #[arg(long)]
        force_delta: Option<usize>,
    },
}

/// Exit code 1 for negative answers, 2 for bad input.
enum Failure {
    Negative(String),
    Input(anyhow::Error),
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.into())
    }
}

type CliResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn limits(cli: &Cli) -> Limits {
    Limits { treewidth: cli.limit_treewidth, chi: cli.limit_chi, fractional: cli.limit_fractional }
}

fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Writes to stdout; a closed pipe (e.g. `| head`) is not an error.
fn emit(text: &str) -> anyhow::Result<()> {
    match io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn print_json(value: &impl serde::Serialize) -> anyhow::Result<()> {
    emit(&(serde_json::to_string_pretty(value)? + "\n"))
}

fn run(cli: &Cli) -> CliResult {
    match &cli.command {
        Command::Analyze { graph } => print_json(&analyze(&read_graph(graph)?, limits(cli)))?,
        Command::Construct { family, out } => construct(cli, family, out.as_deref())?,
        Command::Realize { degrees, lemma7 } => realize(cli, degrees, lemma7.as_deref())?,
        Command::Decompose { graph, smooth: want_smooth } => {
            let g = read_graph(graph)?;
            let (_, td) = treewidth_exact(&g, cli.limit_treewidth)?;
            let td = if *want_smooth { smooth(&g, &td)? } else { td };
            emit(&(td.to_json() + "\n"))?;
        }
        Command::Validate { graph, decomposition } => {
            let g = read_graph(graph)?;
            let text = fs::read_to_string(decomposition)
                .with_context(|| format!("reading {}", decomposition.display()))?;
            let v = validate_decomposition(&g, &TreeDecomposition::from_json(&text)?)?;
            print_json(&v)?;
            if !v.valid {
                return Err(Failure::Negative(format!(
                    "invalid decomposition: {}",
                    v.reason.unwrap_or_default()
                )));
            }
        }
        Command::Sweep { source, statements, dump_dir } => sweep(cli, source, statements, dump_dir)?,
    }
    Ok(())
}

fn construct(cli: &Cli, family: &Family, out: Option<&Path>) -> CliResult {
    let mut checks: Vec<(&str, bool)> = Vec::new();
    let (name, params, g, td, bound) = match *family {
        Family::Apex { k, r } => {
            let g = construct_apex(k, r)?;
            let bound = check_edge_bound(&g, k, BoundModel::Treewidth)?;
            checks.push(("bound_tight", bound.tight));
            ("apex", json!({ "k": k, "r": r }), g, None, Some(bound))
        }
        Family::Tight(TightArgs { n, k0, k, delta }) => {
            let params = match (k0, k, delta) {
                (Some(k0), _, _) => TightParams::from_k0(k0, n)?,
                (None, Some(k), Some(delta)) => TightParams::new(k, delta, n)?,
                _ => return Err(anyhow!("tight needs --k0 or both --k and --delta").into()),
            };
            let (g, td) = construct_tight(&params)?;
            checks.push(("degrees_match_target", g.degrees() == params.target_degrees()));
            checks.push(("twice_edges_identity", 2 * g.m() == params.twice_edges()));
            checks.push(("overfull_iff_odd", is_overfull(&g) == (n % 2 == 1)));
            let bound = check_edge_bound(&g, params.k, BoundModel::Treewidth)?;
            checks.push(("bound_tight", bound.tight));
            ("tight", serde_json::to_value(params)?, g, Some(td), Some(bound))
        }
        Family::Stars { p } => {
            let g = construct_stars_complement(p)?;
            let k = g.n() - 1 - p;
            checks.push(("degenerate", degeneracy(&g).0 <= k));
            let bound = check_edge_bound(&g, k, BoundModel::Degenerate)?;
            checks.push(("bound_tight", bound.tight));
            ("stars", json!({ "p": p, "k": k }), g, None, Some(bound))
        }
        Family::Ktree { n, k, keep } => {
            let g = random_partial_ktree(n, k, keep, cli.seed)?;
            let params = json!({ "n": n, "k": k, "keep": keep.to_string(), "seed": cli.seed });
            ("ktree", params, g, None, None)
        }
    };
    let mut verification = serde_json::Map::new();
    for (key, ok) in &checks {
        verification.insert(key.to_string(), Value::Bool(*ok));
    }
    if let Some(td) = &td {
        let v = validate_decomposition(&g, td)?;
        checks.push(("decomposition_valid", v.valid));
        verification.insert("decomposition_valid".into(), Value::Bool(v.valid));
        verification.insert("decomposition_width".into(), json!(v.width));
    }
    verification.insert("overfull".into(), Value::Bool(is_overfull(&g)));
    verification.insert(
        "treewidth_exact".into(),
        match treewidth_exact(&g, cli.limit_treewidth) {
            Ok((k, _)) => json!(k),
            Err(_) => json!("skipped"),
        },
    );
    let sidecar = json!({
        "schema": 1,
        "family": name,
        "params": params,
        "n": g.n(),
        "m": g.m(),
        "max_degree": g.max_degree(),
        "degree_sequence": g.degrees(),
        "bound": bound,
        "verification": verification,
        "decomposition": td.as_ref().map(|td| serde_json::from_str::<Value>(&td.to_json())).transpose()?,
    });
    if let Some((key, _)) = checks.iter().find(|(_, ok)| !ok) {
        return Err(Failure::Negative(format!("self-verification failed: {key}")));
    }
    match out {
        Some(prefix) => {
            let el = prefix.with_extension("el");
            let side = prefix.with_extension("json");
            fs::write(&el, to_edge_list(&g)).with_context(|| format!("writing {}", el.display()))?;
            fs::write(&side, serde_json::to_string_pretty(&sidecar)?)
                .with_context(|| format!("writing {}", side.display()))?;
            print_json(&sidecar)?;
        }
        None if cli.json => print_json(&sidecar)?,
        None => emit(&to_edge_list(&g))?,
    }
    Ok(())
}

fn realize(cli: &Cli, degrees: &[usize], lemma7: Option<&[usize]>) -> CliResult {
    let seq = match lemma7 {
        Some(&[c, r]) => lemma7_sequence(c, r),
        _ => DegreeSequence::new(degrees.to_vec())?,
    };
    if let Some(failure) = erdos_gallai_failure(&seq) {
        if cli.json {
            print_json(&json!({ "schema": 1, "graphic": false, "failure": failure }))?;
        }
        let reason = match failure {
            GraphicFailure::OddSum => "odd degree sum".to_string(),
            GraphicFailure::Inequality { l, lhs, rhs } => format!("failing l = {l} ({lhs} > {rhs})"),
        };
        return Err(Failure::Negative(format!("not graphic: {reason}")));
    }
    let g = havel_hakimi_realize(&seq)?;
    if cli.json {
        print_json(&json!({ "schema": 1, "graphic": true, "edge_list": to_edge_list(&g) }))?;
    } else {
        emit(&to_edge_list(&g))?;
    }
    Ok(())
}

fn sweep(cli: &Cli, source: &SourceArgs, statements: &[Statement], dump_dir: &Path) -> CliResult {
    let source = match *source {
        SourceArgs::Exhaustive { n_max } => SweepSource::Exhaustive { n_max },
        SourceArgs::Ktree { n_min, n_max, k, keep, count, force_delta } => SweepSource::PartialKtree {
            n_min: n_min.unwrap_or(n_max),
            n_max,
            k,
            keep_prob: keep,
            count,
            seed: cli.seed,
            force_delta,
        },
    };
    let statements = if statements.is_empty() { Statement::ALL.to_vec() } else { statements.to_vec() };
    let report = run_sweep(&SweepConfig { source, statements, limits: limits(cli) })?;
    let mut dumped = Vec::new();
    if !report.counterexamples.is_empty() {
        fs::create_dir_all(dump_dir).with_context(|| format!("creating {}", dump_dir.display()))?;
    }
    for c in &report.counterexamples {
        let path = dump_dir.join(format!("counterexample_{}_{}.el", c.statement, c.index));
        fs::write(&path, to_edge_list(&c.graph)).with_context(|| format!("writing {}", path.display()))?;
        dumped.push(path);
    }
    if cli.json {
        print_json(&report)?;
    } else {
        let mut table = format!("graphs: {}\n", report.graphs);
        table += &format!("{:<12} {:>8} {:>8} {:>8} {:>8} {:>8}\n", "statement", "checked", "passed", "failed", "n/a", "skipped");
        for (s, c) in &report.counts {
            table += &format!(
                "{:<12} {:>8} {:>8} {:>8} {:>8} {:>8}\n",
                s.id(),
                c.checked,
                c.passed,
                c.failed,
                c.not_applicable,
                c.skipped
            );
        }
        emit(&table)?;
    }
    if report.failures() > 0 {
        let files: Vec<String> = dumped.iter().map(|p| p.display().to_string()).collect();
        return Err(Failure::Negative(format!("{} failures; counterexamples: {}", report.failures(), files.join(", "))));
    }
    Ok(())
}
