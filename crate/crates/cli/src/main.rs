//! Command-line front end: graph ingestion, fixture generators, pipeline
//! commands, and certificate verification. Artifacts are JSON; identical
//! (input, flags, seed) produce byte-identical files. Exit codes: 0 ok,
//! 1 validation failure, 2 inconclusive oracle, 64 usage.

mod artifact;
mod gen;
mod verify;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};

use coarse_decomp::decomposition::{
    build_tree_decomposition, coarse_treewidth_pipeline, validate_tree_decomposition, Branch,
    BuildConfig,
};
use coarse_decomp::error::{validation, Error, Result};
use coarse_decomp::family::{
    build_layered_family, degeneracy, degeneracy_layering, LayeredFamily,
    DEFAULT_MINIMALITY_BUDGET,
};
use coarse_decomp::graph::{Graph, Vertex};
use coarse_decomp::lp::ab::{restrict_dual_to_upward_minimal, solve_ab_lp};
use coarse_decomp::lp::balanced::{restrict_balanced_dual_to_upward_minimal, solve_balanced_lp};
use coarse_decomp::lp::{check_strong_duality, LpConfig, Mode};
use coarse_decomp::menger::{
    coarse_menger_pipeline, menger_max_flow, MengerPipelineOutcome, DEFAULT_ORACLE_BUDGET,
};
use coarse_decomp::partition::greedy_four_radius_partition;
use coarse_decomp::rounding::{round_ab_separator, round_balanced_separator};
use coarse_decomp::sampling::{sample_dense_subgraph, sample_path_multiset};

use artifact::{envelope, Artifact};

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Fast,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Exact => Mode::Exact,
            ModeArg::Fast => Mode::Fast,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BranchArg {
    Auto,
    Rounding,
    Sampling,
}

impl From<BranchArg> for Branch {
    fn from(b: BranchArg) -> Branch {
        match b {
            BranchArg::Auto => Branch::Auto,
            BranchArg::Rounding => Branch::Rounding,
            BranchArg::Sampling => Branch::Sampling,
        }
    }
}

/// Comma-separated vertex ids.
#[derive(Clone, Default)]
struct VertexList(Vec<Vertex>);

impl std::str::FromStr for VertexList {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s.trim().is_empty() {
            return Ok(VertexList(Vec::new()));
        }
        s.split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| format!("bad vertex id {t:?}: {e}")))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(VertexList)
    }
}

#[derive(Args, Clone)]
struct Common {
    /// LP solver mode
    #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
    mode: ModeArg,
    /// Seed for randomized steps
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Certificate tolerance
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
    /// Cap on enumerated constraint paths
    #[arg(long, default_value_t = 200_000)]
    path_cap: usize,
    /// Artifact file; JSON goes to stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Common {
    fn lp(&self) -> Result<LpConfig> {
        if self.tol <= 0.0 {
            return Err(validation("tolerance must be positive"));
        }
        if self.path_cap == 0 {
            return Err(validation("path cap must be positive"));
        }
        Ok(LpConfig {
            mode: self.mode.into(),
            cert_tol: self.tol,
            path_cap: self.path_cap,
            ..LpConfig::default()
        })
    }
}

#[derive(Parser)]
#[command(
    name = "coarse-decomp",
    version,
    about = "Coarse tree decompositions and coarse Menger certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Partition the vertices into parts with radius-4 coverable components
    Partition {
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Build the degeneracy-layered set family and audit its witnessing
    Family {
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Solve the A-B separator LP over the layered family
    LpAb {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        a: VertexList,
        #[arg(long)]
        b: VertexList,
        #[command(flatten)]
        common: Common,
    },
    /// Round the A-B LP into a separator with a fractional-cover bound
    RoundAb {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        a: VertexList,
        #[arg(long)]
        b: VertexList,
        #[command(flatten)]
        common: Common,
    },
    /// Solve the balanced-separator LP for a center set X
    LpBalanced {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        x: VertexList,
        #[command(flatten)]
        common: Common,
    },
    /// Round the balanced LP into a downward closed balanced separator
    RoundBalanced {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        x: VertexList,
        #[command(flatten)]
        common: Common,
    },
    /// Sample a low-congestion A-B path multiset from the LP dual
    SamplePaths {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        a: VertexList,
        #[arg(long)]
        b: VertexList,
        /// Draw count parameter; defaults to the smallest admissible value
        #[arg(long)]
        ell: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Sample a subgraph through X that every family set barely meets
    SampleSubgraph {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        x: VertexList,
        /// Triple count; defaults to the smallest admissible value
        #[arg(long)]
        ell: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Build a tree decomposition over the degeneracy-layered family
    Treedecomp {
        #[arg(long)]
        graph: PathBuf,
        /// Terminal vertices the root bag must contain
        #[arg(long, default_value = "")]
        x: VertexList,
        /// Padding target per recursion node
        #[arg(long)]
        pad_cap: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// End-to-end coarse treewidth pipeline with lifted, audited bags
    PipelineTw {
        #[arg(long)]
        graph: PathBuf,
        /// Excluded clique-minor order driving the part-count bound
        #[arg(long, default_value_t = 2)]
        t: usize,
        #[arg(long)]
        pad_cap: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Classical Menger: k disjoint A-B paths or a smaller separator
    Menger {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        a: VertexList,
        #[arg(long)]
        b: VertexList,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        common: Common,
    },
    /// End-to-end coarse Menger: anticomplete packing or scattered separator
    PipelineMenger {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        a: VertexList,
        #[arg(long)]
        b: VertexList,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 2)]
        t: usize,
        /// Force the dichotomy branch instead of the threshold comparison
        #[arg(long, value_enum, default_value_t = BranchArg::Auto)]
        branch: BranchArg,
        /// Node budget for the exhaustive packing oracle
        #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET)]
        budget: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Re-verify a JSON artifact against its graph
    Verify {
        #[arg(long)]
        cert: PathBuf,
        #[arg(long)]
        graph: PathBuf,
    },
    /// Generate a fixture graph as edge-list text
    Gen {
        /// Grid graph: rows cols
        #[arg(long, num_args = 2, value_names = ["ROWS", "COLS"])]
        grid: Option<Vec<usize>>,
        /// Path on n vertices
        #[arg(long)]
        path: Option<usize>,
        /// Star on n vertices
        #[arg(long)]
        star: Option<usize>,
        /// Cycle on n vertices
        #[arg(long)]
        cycle: Option<usize>,
        /// Random graph: n p
        #[arg(long, num_args = 2, value_names = ["N", "P"])]
        gnp: Option<Vec<String>>,
        /// Theta graph: edges-per-branch branches
        #[arg(long, num_args = 2, value_names = ["LEN", "BRANCHES"])]
        theta: Option<Vec<usize>>,
        /// Disjoint paths: width length
        #[arg(long, num_args = 2, value_names = ["WIDTH", "LENGTH"])]
        corridor: Option<Vec<usize>>,
        /// Two stars joined by a path: size bridge-edges
        #[arg(long, num_args = 2, value_names = ["SIZE", "BRIDGE"])]
        two_balls: Option<Vec<usize>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn load_graph(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    Graph::from_edge_list(&text)
}

/// The canonical family every LP command runs over: the degeneracy
/// layering of the input graph.
fn canonical_family(g: &Graph) -> Result<(LayeredFamily, Vec<Vec<Vertex>>, usize)> {
    let (d, _) = degeneracy(g);
    let layering = degeneracy_layering(g, d)?;
    let parts = layering.parts().to_vec();
    let fam = build_layered_family(g, layering)?;
    Ok((fam, parts, d))
}

fn emit(out: &Option<PathBuf>, art: Artifact, summary: String) -> Result<()> {
    let text = art.to_pretty()?;
    match out {
        Some(p) => {
            std::fs::write(p, text)?;
            println!("{summary}");
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::BudgetExhausted(_) | Error::SamplingFailed { .. } | Error::PathOverflow { .. } => 2,
        _ => 1,
    }
}

fn check_threads_env() -> Result<()> {
    // worker cap accepted for forward compatibility; current solvers are
    // single-threaded, so only validity is enforced
    if let Ok(v) = std::env::var("COARSE_DECOMP_THREADS") {
        match v.parse::<usize>() {
            Ok(t) if t >= 1 => {}
            _ => {
                return Err(validation(format!(
                    "COARSE_DECOMP_THREADS must be a positive integer, got {v:?}"
                )))
            }
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    check_threads_env()?;
    match cli.command {
        Command::Partition { graph, common } => {
            let g = load_graph(&graph)?;
            let cfg = common.lp()?;
            let rp = greedy_four_radius_partition(&g)?;
            let all: Vec<Vertex> = (0..g.n()).collect();
            rp.validate(&g, &all)?;
            let count = rp.part_count();
            let payload = artifact::PartitionPayload { partition: rp, part_count: count };
            let art =
                envelope("four-radius-partition", "partition", &g, &cfg, common.seed, payload)?;
            emit(
                &common.out,
                art,
                format!(
                    "four-radius partition: {count} parts over {} vertices, all witnesses verified",
                    g.n()
                ),
            )
        }
        Command::Family { graph, common } => {
            let g = load_graph(&graph)?;
            let cfg = common.lp()?;
            let (fam, layering, d) = canonical_family(&g)?;
            let witnessing = fam.verify_witnessing(&g, 4 * d);
            if !witnessing.ok {
                return Err(validation("family is not 4d-witnessing"));
            }
            let family = fam.to_json();
            let summary = format!(
                "layered family: {} sets, thickness {}, degeneracy {d}, witnessing 4d ok",
                family.sets.len(),
                family.thickness
            );
            let payload =
                artifact::FamilyPayload { degeneracy: d, layering, family, witnessing };
            let art = envelope("layered-family", "family", &g, &cfg, common.seed, payload)?;
            emit(&common.out, art, summary)
        }
        Command::LpAb { graph, a, b, common } => {
            let g = load_graph(&graph)?;
            let cfg = common.lp()?;
            let (fam, layering, _) = canonical_family(&g)?;
            let solution = solve_ab_lp(&g, &fam, &a.0, &b.0, &cfg)?;
            let dual_objective = solution.dual_objective();
            let duality_ok = solution.mode != Mode::Exact
                || check_strong_duality(solution.objective, dual_objective, cfg.cert_tol);
            let summary = format!(
                "ab lp: objective {:.6}, dual {:.6}, duality ok {duality_ok}",
                solution.objective, dual_objective
            );
            let payload = artifact::AbLpPayload {
                a: a.0,
                b: b.0,
                layering,
                solution,
                dual_objective,
                duality_ok,
            };
            let art = envelope("ab-lp", "lp-ab", &g, &cfg, common.seed, payload)?;
            emit(&common.out, art, summary)
        }
        Command::RoundAb { graph, a, b, common } => {
            let g = load_graph(&graph)?;
            let cfg = common.lp()?;
            let (fam, layering, _) = canonical_family(&g)?;
            let solution = solve_ab_lp(&g, &fam, &a.0, &b.0, &cfg)?;
            let certificate = round_ab_separator(&g, &fam, &a.0, &b.0, &solution, &cfg)?;
            let summary = format!(
                "ab separator: {} vertices, fcov {:.4}, separation verified {}",
                certificate.separator.len(),
                certificate.fcov,
                certificate.separation_verified
            );
            let payload = artifact::AbSeparatorPayload {
                a: a.0,
                b: b.0,
                layering,
                lp_objective: solution.objective,
                certificate,
            };
            let art = envelope("ab-separator", "round-ab", &g, &cfg, common.seed, payload)?;
            emit(&common.out, art, summary)
        }
        Command::LpBalanced { graph, x, common } => {
            let g = load_graph(&graph)?;
            let cfg = common.lp()?;
            let (fam, layering, _) = canonical_family(&g)?;
            let solution = solve_balanced_lp(&g, &fam, &x.0, &cfg)?;
            let summary = format!(
                "balanced lp: objective {:.6} over |X| = {}",
                solution.objective,
                solution.xs.len()
            );
            let payload = artifact::BalancedLpPayload {
                xs: solution.xs.clone(),
                layering,
                mode: solution.mode,
                objective: solution.objective,
                weights: solution.x.clone(),
                dual_objective: solution.dual.as_ref().map(|d| d.objective),
            };
            let art = envelope("balanced-lp", "lp-balanced", &g, &cfg, common.seed, payload)?;
            emit(&common.out, art, summary)
        }
        Command::RoundBalanced { graph, x, common } => {
            let g = load_graph(&graph)?;
            let cfg = common.lp()?;
            let (fam, layering, _) = canonical_family(&g)?;
            let solution = solve_balanced_lp(&g, &fam, &x.0, &cfg)?;
            let certificate = round_balanced_separator(&g, &fam, &solution, &cfg)?;
            let summary = format!(
                "balanced separator: {} vertices, largest fraction {:.3}, downward closed {}",
                certificate.separator.len(),
                certificate.largest_fraction,
                certificate.downward_closed
            );
            let payload = artifact::BalancedSeparatorPayload {
                xs: solution.xs.clone(),
                layering,
                lp_objective: solution.objective,
                certificate,
            };
            let art =
                envelope("balanced-separator", "round-balanced", &g, &cfg, common.seed, payload)?;
            emit(&common.out, art, summary)
        }
        Command::SamplePaths { graph, a, b, ell, common } => {
            let g = load_graph(&graph)?;
            let cfg = common.lp()?;
            let (fam, layering, _) = canonical_family(&g)?;
            let solution = solve_ab_lp(&g, &fam, &a.0, &b.0, &cfg)?;
            let restricted = restrict_dual_to_upward_minimal(
                &g,
                &fam,
                &a.0,
                &b.0,
                &solution,
                DEFAULT_MINIMALITY_BUDGET,
            )?;
            let f = restricted.dual_objective();
            if f <= 0.0 {
                return Err(validation("terminals are not connected; nothing to sample"));
            }
            let floor = ((4.0 * g.n() as f64 * f).log2() / 6.0).ceil().max(1.0) as usize;
            let ell = ell.unwrap_or(floor).max(floor);
            let packing = sample_path_multiset(&g, &fam, &a.0, &b.0, &restricted, ell, common.seed)?;
            let summary = format!(
                "path packing: {} paths, congestion {}/{}, intersection {}/{}",
                packing.paths.len(),
                packing.max_congestion,
                packing.congestion_bound,
                packing.max_intersection,
                packing.intersection_bound
            );
            let payload = artifact::PathPackingPayload { a: a.0, b: b.0, layering, packing };
            let art = envelope("path-packing", "sample-paths", &g, &cfg, common.seed, payload)?;
            emit(&common.out, art, summary)
        }
        Command::SampleSubgraph { graph, x, ell, common } => {
            let g = load_graph(&graph)?;
            let cfg = common.lp()?;
            let (fam, layering, _) = canonical_family(&g)?;
            let solution = solve_balanced_lp(&g, &fam, &x.0, &cfg)?;
            let dual = solution
                .dual
                .as_ref()
                .ok_or_else(|| validation("dense sampling needs the exact solver's dual"))?;
            let (restricted, _) = restrict_balanced_dual_to_upward_minimal(
                &g,
                &fam,
                dual,
                DEFAULT_MINIMALITY_BUDGET,
            )?;
            let f = restricted.objective;
            if f <= 0.0 {
                return Err(validation("the dual carries no mass; X is too sparse to sample"));
            }
            let floor = (7.0 * (f * (g.n() as f64).log2() + solution.xs.len() as f64 + 2.0))
                .ceil()
                .max(1.0) as usize;
            let ell = ell.unwrap_or(floor).max(floor);
            let sample = sample_dense_subgraph(&g, &fam, &solution.xs, &restricted, ell, common.seed)?;
            let summary = format!(
                "sampled subgraph: {} vertices, membership {}/{:.2}",
                sample.vertices.len(),
                sample.max_membership,
                sample.membership_bound
            );
            let payload =
                artifact::SampledSubgraphPayload { xs: solution.xs.clone(), layering, sample };
            let art =
                envelope("sampled-subgraph", "sample-subgraph", &g, &cfg, common.seed, payload)?;
            emit(&common.out, art, summary)
        }
        Command::Treedecomp { graph, x, pad_cap, common } => {
            let g = load_graph(&graph)?;
            let cfg = common.lp()?;
            let (fam, layering, _) = canonical_family(&g)?;
            let build = BuildConfig { pad_cap, lp: cfg, seed: common.seed };
            let (decomposition, ledger) = build_tree_decomposition(&g, &fam, &x.0, &build)?;
            let report = validate_tree_decomposition(&g, &decomposition, Some(&fam));
            if !report.ok {
                return Err(validation(format!(
                    "decomposition invalid: {}",
                    report.detail.as_deref().unwrap_or("no detail recorded")
                )));
            }
            let summary = format!(
                "tree decomposition: {} nodes, max bag {}, max witnesses {}, valid",
                decomposition.nodes.len(),
                decomposition.max_bag(),
                decomposition.max_witnesses()
            );
            let payload = artifact::TreeDecompPayload {
                x: x.0,
                layering,
                decomposition,
                ledger,
                report,
            };
            let art = envelope("tree-decomposition", "treedecomp", &g, &cfg, common.seed, payload)?;
            emit(&common.out, art, summary)
        }
        Command::PipelineTw { graph, t, pad_cap, common } => {
            let g = load_graph(&graph)?;
            let cfg = common.lp()?;
            let build = BuildConfig { pad_cap, lp: cfg, seed: common.seed };
            let result = coarse_treewidth_pipeline(&g, t, &build)?;
            if !result.report.ok {
                return Err(validation(format!(
                    "lifted decomposition invalid: {}",
                    result.report.detail.as_deref().unwrap_or("no detail recorded")
                )));
            }
            let summary = format!(
                "treewidth pipeline: {} parts, quotient n {}, {} nodes, max bag {}, quality ok {}",
                result.part_count,
                result.quotient_n,
                result.decomposition.nodes.len(),
                result.decomposition.max_bag(),
                result.quality.ok
            );
            let payload = artifact::TwPipelinePayload { t, result };
            let art = envelope("treewidth-pipeline", "pipeline-tw", &g, &cfg, common.seed, payload)?;
            emit(&common.out, art, summary)
        }
        Command::Menger { graph, a, b, k, common } => {
            let g = load_graph(&graph)?;
            let cfg = common.lp()?;
            let result = menger_max_flow(&g, &a.0, &b.0, k)?;
            let summary = match (&result.paths, &result.separator) {
                (Some(p), _) => format!("menger: {} disjoint paths", p.len()),
                (_, Some(s)) => {
                    format!("menger: separator of {} vertices < k = {k}", s.len())
                }
                _ => unreachable!(),
            };
            let payload = artifact::MengerPayload { a: a.0, b: b.0, result };
            let art = envelope("menger-result", "menger", &g, &cfg, common.seed, payload)?;
            emit(&common.out, art, summary)
        }
        Command::PipelineMenger { graph, a, b, k, t, branch, budget, common } => {
            let g = load_graph(&graph)?;
            let cfg = common.lp()?;
            if budget == 0 {
                return Err(validation("oracle budget must be positive"));
            }
            let result = coarse_menger_pipeline(
                &g,
                t,
                &a.0,
                &b.0,
                k,
                branch.into(),
                budget,
                &cfg,
                common.seed,
            )?;
            let summary = match &result.outcome {
                MengerPipelineOutcome::Packing(p) => format!(
                    "menger pipeline ({}): anticomplete packing of {} paths",
                    result.branch,
                    p.paths.len()
                ),
                MengerPipelineOutcome::Separator(s) => format!(
                    "menger pipeline ({}): separator of {} vertices around {} centers",
                    result.branch,
                    s.separator.len(),
                    s.centers.len()
                ),
            };
            let payload = artifact::MengerPipelinePayload { a: a.0, b: b.0, t, k, result };
            let art =
                envelope("menger-pipeline", "pipeline-menger", &g, &cfg, common.seed, payload)?;
            emit(&common.out, art, summary)
        }
        Command::Verify { cert, graph } => {
            let g = load_graph(&graph)?;
            let text = std::fs::read_to_string(&cert)?;
            let art: Artifact = serde_json::from_str(&text)
                .map_err(|e| validation(format!("artifact does not parse: {e}")))?;
            let summary = verify::verify_artifact(&g, &art)?;
            println!("verify: pass - {summary}");
            Ok(())
        }
        Command::Gen { grid, path, star, cycle, gnp, theta, corridor, two_balls, seed, out } => {
            let mut picks: Vec<(&str, Graph)> = Vec::new();
            if let Some(d) = grid {
                picks.push(("grid", gen::grid(d[0], d[1])?));
            }
            if let Some(n) = path {
                picks.push(("path", gen::path(n)?));
            }
            if let Some(n) = star {
                picks.push(("star", gen::star(n)?));
            }
            if let Some(n) = cycle {
                picks.push(("cycle", gen::cycle(n)?));
            }
            if let Some(args) = gnp {
                let n = args[0]
                    .parse::<usize>()
                    .map_err(|e| validation(format!("bad gnp vertex count: {e}")))?;
                let p = args[1]
                    .parse::<f64>()
                    .map_err(|e| validation(format!("bad gnp probability: {e}")))?;
                picks.push(("gnp", gen::gnp(n, p, seed)?));
            }
            if let Some(d) = theta {
                picks.push(("theta", gen::theta(d[0], d[1])?));
            }
            if let Some(d) = corridor {
                picks.push(("corridor", gen::corridor(d[0], d[1])?));
            }
            if let Some(d) = two_balls {
                picks.push(("two-balls", gen::two_balls(d[0], d[1])?));
            }
            if picks.len() != 1 {
                // wrong flag arity is a usage problem, handled by main
                return Err(Error::Parse {
                    line: 0,
                    msg: "gen needs exactly one generator flag".into(),
                });
            }
            let (kind, g) = picks.pop().unwrap();
            let text = gen::to_edge_list(&g);
            match out {
                Some(p) => {
                    std::fs::write(p, text)?;
                    println!("wrote {kind} graph: n = {}, m = {}", g.n(), g.m());
                }
                None => print!("{text}"),
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let _ = e.print();
            let _ = Cli::command();
            return ExitCode::from(64);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            // gen flag misuse surfaces as a usage error, matching clap's path
            let code = if matches!(&e, Error::Parse { line: 0, .. }) { 64 } else { exit_code(&e) };
            eprintln!("error: {e}");
            ExitCode::from(code)
        }
    }
}
