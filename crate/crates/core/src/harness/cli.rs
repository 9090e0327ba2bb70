//! The `treex` command line.
//!
//! Exit codes: 0 embedded/confirmed, 1 not embedded/counterexample/refuted,
//! 2 usage or input error, 3 inconclusive (timeout or heuristic gave up).

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::constructions::{
    gen_broom, gen_caterpillar, gen_cliques_apex, gen_complete_bipartite, gen_g, gen_h, gen_h_prime,
    ExtremalParams, GraphMeta, TaggedGraph,
};
use crate::embedding::{
    auto_embed, exact_embed, greedy_min_degree_embed, strategy_embed, validate_embedding, Budget,
    EmbedConstraints, EmbedVerdict, VerdictKind,
};
use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, TreeGraph};
use crate::rational::parse_rational;

use super::format::{read_graph_file, write_graph, write_witness, GraphFormat};
use super::stress::{run_stress, write_jsonl, StressConfig};
use super::sweep::{run_sweep, write_csv, ExtremalFamily};
use super::verify::run_verify_example;

#[derive(Parser, Debug)]
#[command(name = "treex", version, about = "Extremal tree-embedding constructions and an exact containment oracle")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Master seed for random families.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Wall-clock budget for solver runs.
    #[arg(long, global = true)]
    pub timeout_ms: Option<u64>,
    /// Output file (stdout when absent).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Graph file format for `gen`.
    #[arg(long, global = true, value_enum)]
    pub format: Option<GraphFormat>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a host graph or tree.
    Gen(GenArgs),
    /// Decide whether a tree embeds in a host.
    Check(CheckArgs),
    /// Confirm that the broom tree misses an extremal host.
    VerifyExample(VerifyArgs),
    /// Compare degrees of the extremal families with their closed forms.
    Sweep(SweepArgs),
    /// Random search for counterexamples near the degree thresholds.
    Stress(StressArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenFamily {
    H,
    G,
    Hprime,
    Broom,
    Kbip,
    Apex,
    Caterpillar,
    Path,
    Complete,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub family: GenFamily,
    #[arg(long)]
    pub ell: Option<usize>,
    #[arg(long)]
    pub c: Option<usize>,
    /// Defaults to c·ℓ(ℓ+1).
    #[arg(long)]
    pub k: Option<usize>,
    /// Star orders of a broom, e.g. `4,4,4`.
    #[arg(long, value_delimiter = ',')]
    pub stars: Vec<usize>,
    #[arg(long)]
    pub n1: Option<usize>,
    #[arg(long)]
    pub n2: Option<usize>,
    #[arg(long)]
    pub clique_order: Option<usize>,
    #[arg(long)]
    pub cliques: Option<usize>,
    /// Spine length of a caterpillar, or edge count of a path.
    #[arg(long)]
    pub path_edges: Option<usize>,
    /// Pendant leaves per spine vertex of a caterpillar.
    #[arg(long, value_delimiter = ',')]
    pub leaves: Vec<usize>,
    /// Order of a complete graph.
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Solver {
    Exact,
    Greedy,
    Strategy,
    Auto,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[arg(long)]
    pub tree: PathBuf,
    #[arg(long)]
    pub host: PathBuf,
    #[arg(long, value_enum, default_value = "auto")]
    pub solver: Solver,
    #[arg(long)]
    pub max_nodes: Option<u64>,
    /// Write `<tree> <host>` pairs when the tree embeds.
    #[arg(long)]
    pub witness_out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub family: ExtremalFamily,
    #[arg(long)]
    pub ell: usize,
    #[arg(long)]
    pub c: usize,
    #[arg(long)]
    pub max_nodes: Option<u64>,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    pub ell_list: Vec<usize>,
    #[arg(long, value_delimiter = ',', required = true)]
    pub c_list: Vec<usize>,
    #[arg(long, value_enum, default_value = "h")]
    pub family: ExtremalFamily,
}

#[derive(Args, Debug)]
pub struct StressArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub n: usize,
    /// Decimal or fraction, e.g. `0`, `0.1`, `1/12`.
    #[arg(long, default_value = "0")]
    pub alpha: String,
    #[arg(long, default_value_t = 50)]
    pub trials: usize,
    #[arg(long)]
    pub max_tree_degree: Option<usize>,
    /// Search nodes per solver call.
    #[arg(long, default_value_t = 2_000_000)]
    pub max_nodes: u64,
    /// Add wall-clock `elapsed_ms` to each row (breaks byte-identical reruns).
    #[arg(long)]
    pub with_timings: bool,
}

fn budget(timeout_ms: Option<u64>, max_nodes: Option<u64>) -> Budget {
    Budget {
        max_nodes,
        time_limit: timeout_ms.map(Duration::from_millis),
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: Cli) -> Result<i32> {
    let out = cli.out.as_deref();
    match cli.command {
        Command::Gen(args) => run_gen(&args, out, cli.format.unwrap_or_default()),
        Command::Check(args) => run_check(&args, cli.timeout_ms),
        Command::VerifyExample(args) => {
            let report = run_verify_example(args.family, args.ell, args.c, budget(cli.timeout_ms, args.max_nodes))?;
            emit(out, &report.render())?;
            Ok(report.outcome.exit_code())
        }
        Command::Sweep(args) => {
            let rows = run_sweep(args.family, &args.ell_list, &args.c_list)?;
            let mut buf = Vec::new();
            write_csv(&rows, &mut buf)?;
            emit(out, &String::from_utf8_lossy(&buf))?;
            Ok(0)
        }
        Command::Stress(args) => {
            let cfg = StressConfig {
                k: args.k,
                n: args.n,
                alpha: parse_rational(&args.alpha)?,
                trials: args.trials,
                seed: cli.seed.unwrap_or(0),
                max_tree_degree: args.max_tree_degree,
                max_nodes: args.max_nodes,
                with_timings: args.with_timings,
            };
            let (rows, summary) = run_stress(&cfg)?;
            let mut buf = Vec::new();
            write_jsonl(&rows, &mut buf)?;
            emit(out, &String::from_utf8_lossy(&buf))?;
            eprintln!(
                "trials={} embedded={} counterexamples={} inconclusive={} unconfirmed={}",
                rows.len(),
                summary.embedded,
                summary.counterexamples,
                summary.inconclusive,
                summary.unconfirmed
            );
            Ok(if summary.counterexamples > 0 { 1 } else { 0 })
        }
    }
}

fn need(v: Option<usize>, flag: &str, family: GenFamily) -> Result<usize> {
    v.ok_or_else(|| Error::InvalidParams(format!("--{flag} is required for family {family:?}")))
}

fn extremal(args: &GenArgs) -> Result<ExtremalParams> {
    let ell = need(args.ell, "ell", args.family)?;
    let c = args.c.unwrap_or(1);
    match args.k {
        Some(k) => ExtremalParams::new(ell, c, k),
        None => ExtremalParams::with_c(ell, c),
    }
}

fn tree_output(t: TreeGraph, meta: GraphMeta) -> TaggedGraph {
    TaggedGraph {
        graph: t.into_graph(),
        meta,
    }
}

fn generate(args: &GenArgs) -> Result<TaggedGraph> {
    let f = args.family;
    Ok(match f {
        GenFamily::H => gen_h(extremal(args)?)?,
        GenFamily::G => gen_g(extremal(args)?)?,
        GenFamily::Hprime => gen_h_prime(extremal(args)?)?,
        GenFamily::Kbip => gen_complete_bipartite(need(args.n1, "n1", f)?, need(args.n2, "n2", f)?)?,
        GenFamily::Apex => gen_cliques_apex(need(args.clique_order, "clique-order", f)?, need(args.cliques, "cliques", f)?)?,
        GenFamily::Broom => {
            let stars = if !args.stars.is_empty() {
                args.stars.clone()
            } else {
                // T_{k,ℓ}: ℓ stars of order k/ℓ
                let p = extremal(args)?;
                vec![p.k / p.ell; p.ell]
            };
            let t = gen_broom(&stars)?;
            let mut meta = GraphMeta::family("broom");
            meta.k = Some(t.edge_count());
            meta.root = Some(0);
            meta.stars = Some(stars);
            tree_output(t, meta)
        }
        GenFamily::Caterpillar => {
            let p = need(args.path_edges, "path-edges", f)?;
            let t = gen_caterpillar(p, &args.leaves)?;
            let mut meta = GraphMeta::family("caterpillar");
            meta.k = Some(t.edge_count());
            meta.leaf_counts = Some(args.leaves.clone());
            tree_output(t, meta)
        }
        GenFamily::Path => {
            let t = TreeGraph::path(need(args.path_edges, "path-edges", f)?);
            let mut meta = GraphMeta::family("path");
            meta.k = Some(t.edge_count());
            tree_output(t, meta)
        }
        GenFamily::Complete => TaggedGraph {
            graph: SimpleGraph::complete(need(args.n, "n", f)?),
            meta: GraphMeta::family("complete"),
        },
    })
}

fn run_gen(args: &GenArgs, out: Option<&Path>, format: GraphFormat) -> Result<i32> {
    let tg = generate(args)?;
    let text = write_graph(&tg.graph, Some(&tg.meta), format)?;
    let stats = tg.graph.degree_stats()?;
    let mut summary = format!(
        "{}: n={} m={} δ={} Δ={}",
        tg.meta.family,
        tg.graph.n(),
        tg.graph.edge_count(),
        stats.min,
        stats.max
    );
    for (part, size) in &tg.meta.parts {
        summary.push_str(&format!(" {part}={size}"));
    }
    match out {
        Some(p) => {
            std::fs::write(p, text)?;
            println!("{summary}");
        }
        None => {
            print!("{text}");
            eprintln!("{summary}");
        }
    }
    Ok(0)
}

fn run_check(args: &CheckArgs, timeout_ms: Option<u64>) -> Result<i32> {
    let tree = read_graph_file(&args.tree)?.into_tree()?;
    let host = read_graph_file(&args.host)?.graph;
    let b = budget(timeout_ms, args.max_nodes);
    let v: EmbedVerdict = match args.solver {
        Solver::Exact => exact_embed(&tree, &host, &EmbedConstraints::none(), b)?,
        Solver::Greedy => greedy_min_degree_embed(&tree, &host),
        Solver::Strategy => strategy_embed(&tree, &host, tree.edge_count(), b)?,
        Solver::Auto => auto_embed(&tree, &host, b)?,
    };
    if let Some(w) = v.witness() {
        validate_embedding(&tree, &host, &w.map)
            .map_err(|e| Error::Internal(format!("solver produced an invalid witness: {e}")))?;
        if let Some(p) = &args.witness_out {
            std::fs::write(p, write_witness(&w.map))?;
        }
    }
    println!("{}", v.kind());
    println!(
        "stage={} nodes={} elapsed_ms={}",
        serde_json::to_value(v.stage)?.as_str().unwrap_or("?"),
        v.nodes_explored,
        v.elapsed.as_millis()
    );
    Ok(match v.kind() {
        VerdictKind::Embedded => 0,
        VerdictKind::NotEmbedded => 1,
        VerdictKind::Timeout | VerdictKind::Unknown => 3,
    })
}
