//! `semipair` — solve, cross-check, generate, and benchmark semipaired
//! domination instances from the command line.
//!
//! Exit codes: 0 success, 1 invalid solution or failed property, 2 parse or
//! I/O error, 3 precondition violation (wrong graph class, bad parameters),
//! 4 search budget exceeded.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use semipair::block::{build_block_tree, compute_beo};
use semipair::generate::{random_block_graph, random_bounded_degree_graph};
use semipair::graph::{emit_edge_list, parse_edge_list, Graph};
use semipair::harness::{self, Fault, HarnessConfig};
use semipair::oracle::{
    min_dominating_set, min_paired_dominating, min_semipaired_dominating, min_vertex_cover,
    OracleBudget, OracleError,
};
use semipair::reductions::{
    apx_reduction, degree_split, gp4, gp5, split_reduction, GadgetGraph,
};
use semipair::solver::{emit_solution, parse_solution, solve_block_graph, verify_solution};

const EXIT_INVALID: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;
const EXIT_BUDGET: u8 = 4;

const DEFAULT_SEED: u64 = 7;

#[derive(Parser)]
#[command(name = "semipair", version, about)]
struct RunConfig {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve minimum semipaired domination on a connected block graph
    Solve {
        /// Edge-list file: `n m` header, then one `u v` line per edge
        graph: PathBuf,
        /// Where to write the solution (default: the input with a .sol extension)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Brute-force minimum sets on small graphs of any class
    Exact {
        graph: PathBuf,
        /// dom = dominating, pd = paired dominating, spd = semipaired
        /// dominating, vc = vertex cover
        #[arg(long, value_enum)]
        problem: Problem,
        /// Largest vertex count the search will accept
        #[arg(long = "budget-n", default_value_t = 22)]
        budget_n: usize,
    },
    /// Verify a solution file against a graph
    Check { graph: PathBuf, solution: PathBuf },
    /// Print the elimination tree: one `v parent level` line per vertex
    Tree { graph: PathBuf },
    /// Build gadget graphs and random instances
    Gen {
        #[command(subcommand)]
        kind: GenCmd,
    },
    /// Cross-check solver, oracles, and gadget identities on random trials
    Harness {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long = "n-max", default_value_t = 12)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
        /// Deliberately corrupt solver output before checking (harness self-test)
        #[arg(long, value_enum, hide = true)]
        fault: Option<FaultArg>,
    },
    /// Time the solver on random block graphs; one `n m millis` line per size
    Bench {
        /// Comma-separated instance sizes
        #[arg(long, value_delimiter = ',', default_value = "10000,100000,1000000")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Problem {
    Dom,
    Pd,
    Spd,
    Vc,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Lines,
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    CorruptPairing,
}

#[derive(Subcommand)]
enum GenCmd {
    /// Hang a 4-edge pendant path off every vertex of the input
    Gp4(GadgetArgs),
    /// Join a fresh 5-vertex path at its center to every vertex of the input
    Gp5(GadgetArgs),
    /// Split graph doubling the input's domination number
    Split(GadgetArgs),
    /// Bipartite max-degree-4 graph tied to the input's vertex cover number
    Apx4(GadgetArgs),
    /// Rewire every degree-4 vertex of the input through a 7-vertex widget
    Degsplit(GadgetArgs),
    /// Random connected block graph
    RandomBlock {
        #[arg(long)]
        n: usize,
        #[arg(long = "max-clique", default_value_t = 4)]
        max_clique: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value = "out")]
        out: String,
    },
    /// Random connected graph with a degree cap
    RandomDeg {
        #[arg(long)]
        n: usize,
        #[arg(long = "max-deg", default_value_t = 3)]
        max_deg: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value = "out")]
        out: String,
    },
}

#[derive(clap::Args)]
struct GadgetArgs {
    /// Source graph edge-list file
    #[arg(long)]
    input: PathBuf,
    /// Output prefix: writes <out>.graph and <out>.roles
    #[arg(long, default_value = "out")]
    out: String,
}

struct Failure {
    code: u8,
    msg: String,
}

fn fail(code: u8, msg: impl Into<String>) -> Failure {
    Failure {
        code,
        msg: msg.into(),
    }
}

fn main() -> ExitCode {
    let cfg = RunConfig::parse();
    match run(cfg) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn run(cfg: RunConfig) -> Result<u8, Failure> {
    match cfg.cmd {
        Cmd::Solve { graph, out } => cmd_solve(&graph, out),
        Cmd::Exact {
            graph,
            problem,
            budget_n,
        } => cmd_exact(&graph, problem, budget_n),
        Cmd::Check { graph, solution } => cmd_check(&graph, &solution),
        Cmd::Tree { graph } => cmd_tree(&graph),
        Cmd::Gen { kind } => cmd_gen(kind),
        Cmd::Harness {
            seed,
            trials,
            n_max,
            format,
            fault,
        } => cmd_harness(seed, trials, n_max, format, fault),
        Cmd::Bench { sizes, seed } => cmd_bench(&sizes, seed),
    }
}

fn read_graph(path: &PathBuf) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| fail(EXIT_PARSE, format!("cannot read {}: {e}", path.display())))?;
    parse_edge_list(&text).map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text)
        .map_err(|e| fail(EXIT_PARSE, format!("cannot write {}: {e}", path.display())))
}

fn oracle_failure(e: OracleError) -> Failure {
    let code = match e {
        OracleError::TooManyVertices { .. }
        | OracleError::SubsetCapExceeded { .. }
        | OracleError::TimedOut { .. } => EXIT_BUDGET,
        _ => EXIT_PRECONDITION,
    };
    fail(code, e.to_string())
}

fn cmd_solve(graph: &PathBuf, out: Option<PathBuf>) -> Result<u8, Failure> {
    let g = read_graph(graph)?;
    let s = solve_block_graph(&g).map_err(|e| {
        fail(
            EXIT_PRECONDITION,
            format!("{e}; `semipair exact --problem spd` handles small graphs of any class"),
        )
    })?;
    let out = out.unwrap_or_else(|| graph.with_extension("sol"));
    write_file(&out, &emit_solution(&s))?;
    println!("gamma_pr2 {}", s.size());
    Ok(0)
}

fn cmd_exact(graph: &PathBuf, problem: Problem, budget_n: usize) -> Result<u8, Failure> {
    let g = read_graph(graph)?;
    let budget = OracleBudget::with_max_n(budget_n);
    let set_line = |members: &[usize]| {
        let words: Vec<String> = members.iter().map(|v| v.to_string()).collect();
        format!("set {}", words.join(" "))
    };
    match problem {
        Problem::Dom => {
            let d = min_dominating_set(&g, &budget).map_err(oracle_failure)?;
            println!("size {}", d.len());
            println!("{}", set_line(d.members()));
        }
        Problem::Vc => {
            let c = min_vertex_cover(&g, &budget).map_err(oracle_failure)?;
            println!("size {}", c.len());
            println!("{}", set_line(c.members()));
        }
        Problem::Pd | Problem::Spd => {
            let s = match problem {
                Problem::Pd => min_paired_dominating(&g, &budget),
                _ => min_semipaired_dominating(&g, &budget),
            }
            .map_err(oracle_failure)?;
            let words: Vec<String> = s.pairs().iter().map(|(a, b)| format!("{a}:{b}")).collect();
            println!("size {}", s.size());
            println!("pairs {}", words.join(" "));
        }
    }
    Ok(0)
}

fn cmd_check(graph: &PathBuf, solution: &PathBuf) -> Result<u8, Failure> {
    let g = read_graph(graph)?;
    let text = std::fs::read_to_string(solution)
        .map_err(|e| fail(EXIT_PARSE, format!("cannot read {}: {e}", solution.display())))?;
    let s = parse_solution(&text, g.n())
        .map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", solution.display())))?;
    match verify_solution(&g, &s) {
        Ok(()) => {
            println!("valid");
            Ok(0)
        }
        Err(viols) => {
            println!("invalid: {}", viols[0]);
            Ok(EXIT_INVALID)
        }
    }
}

fn cmd_tree(graph: &PathBuf) -> Result<u8, Failure> {
    let g = read_graph(graph)?;
    let order = compute_beo(&g).map_err(|e| fail(EXIT_PRECONDITION, e.to_string()))?;
    let tree = build_block_tree(&g, &order).map_err(|e| fail(EXIT_PRECONDITION, e.to_string()))?;
    print!("{}", tree.dump());
    Ok(0)
}

fn emit_gadget(gg: &GadgetGraph, prefix: &str) -> Result<u8, Failure> {
    write_file(&PathBuf::from(format!("{prefix}.graph")), &emit_edge_list(&gg.graph))?;
    write_file(&PathBuf::from(format!("{prefix}.roles")), &gg.vmap.emit())?;
    println!("{} {}", gg.graph.n(), gg.graph.m());
    Ok(0)
}

fn emit_random(g: &Graph, prefix: &str) -> Result<u8, Failure> {
    write_file(&PathBuf::from(format!("{prefix}.graph")), &emit_edge_list(g))?;
    println!("{} {}", g.n(), g.m());
    Ok(0)
}

fn cmd_gen(kind: GenCmd) -> Result<u8, Failure> {
    let build = |args: &GadgetArgs,
                 f: fn(&Graph) -> Result<GadgetGraph, semipair::reductions::ReductionError>|
     -> Result<u8, Failure> {
        let g = read_graph(&args.input)?;
        let gg = f(&g).map_err(|e| fail(EXIT_PRECONDITION, e.to_string()))?;
        emit_gadget(&gg, &args.out)
    };
    match kind {
        GenCmd::Gp4(args) => build(&args, gp4),
        GenCmd::Gp5(args) => build(&args, gp5),
        GenCmd::Split(args) => build(&args, split_reduction),
        GenCmd::Apx4(args) => build(&args, apx_reduction),
        GenCmd::Degsplit(args) => build(&args, degree_split),
        GenCmd::RandomBlock {
            n,
            max_clique,
            seed,
            out,
        } => {
            let g = random_block_graph(seed, n, max_clique)
                .map_err(|e| fail(EXIT_PRECONDITION, e.to_string()))?;
            emit_random(&g, &out)
        }
        GenCmd::RandomDeg {
            n,
            max_deg,
            seed,
            out,
        } => {
            let g = random_bounded_degree_graph(seed, n, max_deg)
                .map_err(|e| fail(EXIT_PRECONDITION, e.to_string()))?;
            emit_random(&g, &out)
        }
    }
}

fn cmd_harness(
    seed: u64,
    trials: usize,
    n_max: usize,
    format: Format,
    fault: Option<FaultArg>,
) -> Result<u8, Failure> {
    if trials == 0 {
        eprintln!("warning: 0 trials requested; every property passes vacuously");
    }
    let cfg = HarnessConfig {
        seed,
        trials,
        n_max,
        fault: fault.map(|FaultArg::CorruptPairing| Fault::CorruptPairing),
    };
    let reports = harness::run(&cfg);
    let mut failures = 0;
    for r in &reports {
        match format {
            Format::Human => {
                let verdict = if r.passed { "PASS" } else { "FAIL" };
                println!("{verdict} {} ({} trials)", r.name, r.trials);
                if let Some(w) = &r.witness {
                    println!("  witness: {w}");
                }
            }
            Format::Lines => {
                let verdict = if r.passed { "pass" } else { "fail" };
                let tail = r.witness.as_deref().unwrap_or_default();
                println!("prop {} {verdict} {} {tail}", r.name, r.trials);
            }
        }
        if !r.passed {
            failures += 1;
        }
    }
    match format {
        Format::Human => {
            if failures == 0 {
                println!("all {} properties hold", reports.len());
            } else {
                println!("{failures} of {} properties failed", reports.len());
            }
        }
        Format::Lines => {
            println!("verdict {}", if failures == 0 { "pass" } else { "fail" });
        }
    }
    Ok(if failures == 0 { 0 } else { EXIT_INVALID })
}

fn cmd_bench(sizes: &[usize], seed: u64) -> Result<u8, Failure> {
    for (i, &n) in sizes.iter().enumerate() {
        let g = random_block_graph(seed.wrapping_add(i as u64), n, 4)
            .map_err(|e| fail(EXIT_PRECONDITION, e.to_string()))?;
        let mut best = f64::INFINITY;
        for _ in 0..3 {
            let start = Instant::now();
            let s = solve_block_graph(&g).map_err(|e| fail(EXIT_PRECONDITION, e.to_string()))?;
            let millis = start.elapsed().as_secs_f64() * 1e3;
            std::hint::black_box(s.size());
            best = best.min(millis);
        }
        println!("{} {} {:.3}", g.n(), g.m(), best);
    }
    Ok(0)
}
