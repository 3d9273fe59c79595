//! `ftbasis`: solve, verify, generate, and benchmark fault-tolerant basis
//! instances.
//!
//! Exit codes: 0 solved / verified true, 2 invalid input or solver mismatch,
//! 3 correctly decided that no solution exists (or verify false), 4
//! enumeration budget exceeded, 1 internal error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ftbasis::generators::{gen_general_position, gen_random, GenSpec};
use ftbasis::ops::{full_rank, is_fault_tolerant};
use ftbasis::zoo::PartitionMatroid;
use ftbasis::{
    fault_witness, solve_bruteforce, solve_fpt, solve_partition_unit, solve_rank_le2, ElementSet,
    Error as CoreError, FptOptions, Instance, InstancePayload, Matroid, SearchOptions,
    SolveReport, WeightMap,
};

const SOLUTION_FORMAT_VERSION: &str = "ftb-solution/1";

const EXIT_OK: u8 = 0;
const EXIT_INTERNAL: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_NO_SOLUTION: u8 = 3;
const EXIT_BUDGET: u8 = 4;

#[derive(Parser)]
#[command(name = "ftbasis", version, about = "Minimum fault-tolerant bases in matroids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
#[allow(clippy::large_enum_variant)]
enum Command {
    /// Solve an instance: find a minimum k-fault-tolerant basis or decide
    /// that none exists (exit 3).
    Solve(SolveArgs),
    /// Check whether a given element set tolerates k failures; prints a
    /// witnessing failure set when it does not.
    Verify(VerifyArgs),
    /// Generate an instance file from a family specification.
    Gen(GenArgs),
    /// Run solvers over a corpus directory and write a CSV table.
    Bench(BenchArgs),
}

#[derive(Args)]
struct SolveArgs {
    /// Instance JSON file.
    instance: PathBuf,
    /// Number of tolerated failures.
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum, default_value_t = SolverChoice::Auto)]
    solver: SolverChoice,
    /// Subset-enumeration budget for the exact solvers.
    #[arg(long, default_value_t = 1 << 24)]
    budget: u64,
    /// Worker threads for candidate verification (1 = reproducible timings).
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Write the fpt recursion trace as JSON to this path.
    #[arg(long)]
    trace: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    instance: PathBuf,
    #[arg(long)]
    k: usize,
    /// Element ids, comma separated (e.g. --elements 0,2,5).
    #[arg(long, value_delimiter = ',', required = true)]
    elements: Vec<u32>,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    family: String,
    /// Output path for the instance JSON ("-" for stdout).
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long)]
    blocks: Option<usize>,
    #[arg(long)]
    cap_max: Option<usize>,
    #[arg(long)]
    positions: Option<usize>,
    #[arg(long)]
    edge_percent: Option<u8>,
    #[arg(long)]
    vertices: Option<usize>,
    #[arg(long)]
    edges: Option<usize>,
    #[arg(long)]
    max_entry: Option<u64>,
    /// Points file for the general-position family: a JSON array of [x, y]
    /// pairs (rational strings or numbers).
    #[arg(long)]
    points: Option<PathBuf>,
    /// Number of random grid points for seeded general-position instances.
    #[arg(long)]
    count: Option<usize>,
    #[arg(long)]
    grid: Option<u64>,
    /// Subset-selection target p (general-position family).
    #[arg(long)]
    p: Option<usize>,
    /// Pad the lifted matroid to this rank (general-position family).
    #[arg(long)]
    pad: Option<usize>,
}

#[derive(Args)]
struct BenchArgs {
    /// Directory of instance JSON files.
    #[arg(long)]
    corpus: PathBuf,
    #[arg(long)]
    k: usize,
    /// Comma-separated solver list.
    #[arg(long, value_delimiter = ',', default_values_t = [SolverChoice::Fpt, SolverChoice::Bruteforce])]
    solvers: Vec<SolverChoice>,
    /// Output CSV path ("-" for stdout).
    #[arg(long)]
    out: PathBuf,
    #[arg(long, default_value_t = 1 << 24)]
    budget: u64,
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum SolverChoice {
    Auto,
    Fpt,
    Bruteforce,
    Partition,
    Rank2,
}

impl std::fmt::Display for SolverChoice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            SolverChoice::Auto => "auto",
            SolverChoice::Fpt => "fpt",
            SolverChoice::Bruteforce => "bruteforce",
            SolverChoice::Partition => "partition",
            SolverChoice::Rank2 => "rank2",
        };
        f.write_str(name)
    }
}

#[derive(Serialize)]
struct SolutionDoc {
    version: &'static str,
    exists: bool,
    elements: Vec<u32>,
    size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    weight: Option<u128>,
    verified: bool,
    stats: SolutionStats,
}

#[derive(Serialize)]
struct SolutionStats {
    oracle_calls: u64,
    subsets_examined: u64,
    wall_ms: f64,
    solver: String,
}

/// Errors that carry their process exit code.
struct CmdError {
    code: u8,
    message: String,
}

impl CmdError {
    fn input(message: impl Into<String>) -> Self {
        CmdError {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }

    fn internal(message: impl Into<String>) -> Self {
        CmdError {
            code: EXIT_INTERNAL,
            message: message.into(),
        }
    }
}

impl From<CoreError> for CmdError {
    fn from(err: CoreError) -> Self {
        let code = match err {
            CoreError::Input(_) => EXIT_INPUT,
            CoreError::Budget { .. } => EXIT_BUDGET,
        };
        CmdError {
            code,
            message: err.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Solve(args) => cmd_solve(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Gen(args) => cmd_gen(&args),
        Command::Bench(args) => cmd_bench(&args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}

fn load_instance(path: &Path) -> Result<Instance, CmdError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CmdError::input(format!("cannot read {}: {e}", path.display())))?;
    Ok(Instance::from_json(&text)?)
}

/// The solver actually executed, picked from the requested choice, the
/// instance kind, and the matroid rank.
fn resolve_solver(
    choice: SolverChoice,
    instance: &Instance,
    m: &dyn Matroid,
    weighted: bool,
) -> Result<SolverChoice, CmdError> {
    let unit_partition = matches!(
        &instance.payload,
        InstancePayload::Partition { capacities, .. } if capacities.iter().all(|&c| c == 1)
    );
    match choice {
        SolverChoice::Auto => {
            if full_rank(m) <= 2 {
                Ok(SolverChoice::Rank2)
            } else if unit_partition {
                Ok(SolverChoice::Partition)
            } else if weighted {
                // The fpt path is unweighted; fall back to the weighted
                // exact search rather than silently dropping the weights.
                Ok(SolverChoice::Bruteforce)
            } else {
                Ok(SolverChoice::Fpt)
            }
        }
        SolverChoice::Fpt if weighted => Err(CmdError::input(
            "the fpt solver is unweighted; use --solver bruteforce (exact) or remove the weights",
        )),
        SolverChoice::Partition if !unit_partition => Err(CmdError::input(
            "--solver partition requires a partition instance with unit capacities",
        )),
        other => Ok(other),
    }
}

fn run_solver(
    solver: SolverChoice,
    instance: &Instance,
    m: &dyn Matroid,
    k: usize,
    opts: &SearchOptions,
    trace_out: Option<&PathBuf>,
) -> Result<SolveReport, CmdError> {
    let weights = instance.weight_map();
    if trace_out.is_some() && solver != SolverChoice::Fpt {
        return Err(CmdError::input(format!(
            "--trace is produced by the fpt solver, but {solver} was selected"
        )));
    }
    match solver {
        SolverChoice::Fpt => {
            let fpt_opts = FptOptions {
                search: opts.clone(),
                capture_trace: trace_out.is_some(),
                ..Default::default()
            };
            let out = solve_fpt(m, k, &fpt_opts)?;
            if let (Some(path), Some(trace)) = (trace_out, &out.trace) {
                let json = serde_json::to_string_pretty(trace)
                    .map_err(|e| CmdError::internal(format!("trace serialization: {e}")))?;
                fs::write(path, json)
                    .map_err(|e| CmdError::input(format!("cannot write {}: {e}", path.display())))?;
            }
            Ok(out.report)
        }
        SolverChoice::Bruteforce => Ok(solve_bruteforce(m, k, weights.as_ref(), opts)?),
        SolverChoice::Partition => {
            let pm = match &instance.payload {
                InstancePayload::Partition { blocks, capacities } => {
                    PartitionMatroid::new(blocks.clone(), capacities.clone())?
                }
                _ => unreachable!("resolve_solver enforces the partition kind"),
            };
            let w = weights.unwrap_or_else(|| WeightMap::unit(m.ground_size()));
            // Unit capacities: the matroid's own rank equals the block count.
            Ok(solve_partition_unit(&pm, &w, pm.block_count(), k)?)
        }
        SolverChoice::Rank2 => {
            let w = weights.unwrap_or_else(|| WeightMap::unit(m.ground_size()));
            Ok(solve_rank_le2(m, &w, k)?)
        }
        SolverChoice::Auto => unreachable!("auto is resolved before running"),
    }
}

fn cmd_solve(args: &SolveArgs) -> Result<u8, CmdError> {
    let instance = load_instance(&args.instance)?;
    let m = instance.build_oracle()?;
    if args.threads == 0 {
        return Err(CmdError::input("--threads must be at least 1"));
    }
    let opts = SearchOptions {
        budget: args.budget,
        threads: args.threads,
    };
    let started = Instant::now();
    let solver = resolve_solver(args.solver, &instance, &m, instance.weights.is_some())?;
    let report = run_solver(solver, &instance, &m, args.k, &opts, args.trace.as_ref())?;
    let wall_ms = started.elapsed().as_secs_f64() * 1e3;
    let solve_calls = m.oracle_calls();

    // A positive answer is re-verified against the original oracle before it
    // is reported.
    let verified = match &report.solution {
        Some(solution) => {
            if !is_fault_tolerant(&m, solution, args.k) {
                return Err(CmdError::internal(format!(
                    "solver {solver} returned a set that fails verification"
                )));
            }
            true
        }
        None => false,
    };

    let doc = SolutionDoc {
        version: SOLUTION_FORMAT_VERSION,
        exists: report.exists,
        elements: report
            .solution
            .clone()
            .map(Vec::<u32>::from)
            .unwrap_or_default(),
        size: report.size.unwrap_or(0),
        weight: report.weight,
        verified,
        stats: SolutionStats {
            oracle_calls: solve_calls,
            subsets_examined: report.subsets_examined,
            wall_ms,
            solver: solver.to_string(),
        },
    };
    println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    Ok(if report.exists { EXIT_OK } else { EXIT_NO_SOLUTION })
}

#[derive(Serialize)]
struct VerifyDoc {
    fault_tolerant: bool,
    k: usize,
    rank: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<u32>>,
}

fn cmd_verify(args: &VerifyArgs) -> Result<u8, CmdError> {
    let instance = load_instance(&args.instance)?;
    let m = instance.build_oracle()?;
    let n = m.ground_size();
    if let Some(&bad) = args.elements.iter().find(|&&e| e as usize >= n) {
        return Err(CmdError::input(format!(
            "element {bad} is out of range (ground set has {n} elements)"
        )));
    }
    let b: ElementSet = args.elements.iter().copied().collect();
    let witness = fault_witness(&m, &b, args.k);
    let doc = VerifyDoc {
        fault_tolerant: witness.is_none(),
        k: args.k,
        rank: full_rank(&m),
        witness: witness.map(Vec::<u32>::from),
    };
    println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    Ok(if doc.fault_tolerant { EXIT_OK } else { EXIT_NO_SOLUTION })
}

fn require<T: Copy>(value: Option<T>, flag: &str, family: &str) -> Result<T, CmdError> {
    value.ok_or_else(|| CmdError::input(format!("--family {family} requires {flag}")))
}

fn read_points(path: &Path) -> Result<Vec<(String, String)>, CmdError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CmdError::input(format!("cannot read {}: {e}", path.display())))?;
    let raw: Vec<(serde_json::Value, serde_json::Value)> = serde_json::from_str(&text)
        .map_err(|e| CmdError::input(format!("points file: {e}")))?;
    raw.iter()
        .map(|(x, y)| Ok((coord_to_string(x)?, coord_to_string(y)?)))
        .collect()
}

fn coord_to_string(v: &serde_json::Value) -> Result<String, CmdError> {
    match v {
        serde_json::Value::String(s) => Ok(s.clone()),
        serde_json::Value::Number(n) => Ok(n.to_string()),
        other => Err(CmdError::input(format!(
            "points must be strings or numbers, found {other}"
        ))),
    }
}

fn cmd_gen(args: &GenArgs) -> Result<u8, CmdError> {
    let family = args.family.as_str();
    let seed = args.seed.unwrap_or(0);
    let mut echo: Option<(usize, usize)> = None;
    let instance = match family {
        "tight" => gen_random(&GenSpec::Tight {
            r: require(args.r, "--r", family)?,
            k: require(args.k, "--k", family)?,
            n: require(args.n, "--n", family)?,
        })?,
        "uniform" => gen_random(&GenSpec::Uniform {
            r: require(args.r, "--r", family)?,
            n: require(args.n, "--n", family)?,
        })?,
        "graphic-cycle" => gen_random(&GenSpec::GraphicCycle {
            n: require(args.n, "--n", family)?,
        })?,
        "graphic-complete" => gen_random(&GenSpec::GraphicComplete {
            n: require(args.n, "--n", family)?,
        })?,
        "random-gf2" => gen_random(&GenSpec::RandomGf2 {
            dim: require(args.dim, "--dim", family)?,
            n: require(args.n, "--n", family)?,
            seed,
        })?,
        "random-rational" => gen_random(&GenSpec::RandomRational {
            dim: require(args.dim, "--dim", family)?,
            n: require(args.n, "--n", family)?,
            max_entry: args.max_entry.unwrap_or(9),
            seed,
        })?,
        "random-partition" => gen_random(&GenSpec::RandomPartition {
            n: require(args.n, "--n", family)?,
            blocks: require(args.blocks, "--blocks", family)?,
            cap_max: args.cap_max.unwrap_or(1),
            seed,
        })?,
        "random-transversal" => gen_random(&GenSpec::RandomTransversal {
            n: require(args.n, "--n", family)?,
            positions: require(args.positions, "--positions", family)?,
            edge_percent: args.edge_percent.unwrap_or(50),
            seed,
        })?,
        "random-graphic" => gen_random(&GenSpec::RandomGraphic {
            vertices: require(args.vertices, "--vertices", family)?,
            edges: require(args.edges, "--edges", family)?,
            seed,
        })?,
        "general-position" => {
            let p = require(args.p, "--p", family)?;
            let pad = require(args.pad, "--pad", family)?;
            if let Some(points_path) = &args.points {
                let points = read_points(points_path)?;
                let (inst, k, b) = gen_general_position(&points, p, pad)?;
                echo = Some((k, b));
                inst
            } else {
                let count = require(args.count, "--count (or --points)", family)?;
                let inst = gen_random(&GenSpec::GeneralPosition {
                    points: count,
                    p,
                    pad_to_rank: pad,
                    grid: args.grid.unwrap_or(8),
                    seed,
                })?;
                let params = &inst.generator.as_ref().expect("stamped").params;
                echo = Some((params["k"] as usize, params["b"] as usize));
                inst
            }
        }
        other => {
            return Err(CmdError::input(format!(
                "unknown family {other:?}; expected one of tight, uniform, graphic-cycle, \
                 graphic-complete, random-gf2, random-rational, random-partition, \
                 random-transversal, random-graphic, general-position"
            )))
        }
    };
    let text = instance.to_json_pretty();
    if args.out.as_os_str() == "-" {
        print!("{text}");
    } else {
        fs::write(&args.out, text)
            .map_err(|e| CmdError::input(format!("cannot write {}: {e}", args.out.display())))?;
    }
    if let Some((k, b)) = echo {
        println!("{}", serde_json::json!({ "k": k, "b": b }));
    }
    Ok(EXIT_OK)
}

fn cmd_bench(args: &BenchArgs) -> Result<u8, CmdError> {
    let mut paths: Vec<PathBuf> = fs::read_dir(&args.corpus)
        .map_err(|e| CmdError::input(format!("cannot read {}: {e}", args.corpus.display())))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|ext| ext == "json"))
        .collect();
    paths.sort();
    if paths.is_empty() {
        return Err(CmdError::input(format!(
            "no .json instances in {}",
            args.corpus.display()
        )));
    }
    let opts = SearchOptions {
        budget: args.budget,
        threads: args.threads.max(1),
    };

    let mut rows: Vec<Vec<String>> = Vec::new();
    for path in &paths {
        let name = path
            .file_name()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        let (instance, n, r) = match load_instance(path) {
            Ok(instance) => {
                let m = instance.build_oracle().expect("validated on load");
                let (n, r) = (m.ground_size(), full_rank(&m));
                (Some(instance), n, r)
            }
            Err(err) => {
                for &solver in &args.solvers {
                    rows.push(error_row(&name, 0, 0, args.k, solver, &err.message));
                }
                continue;
            }
        };
        let instance = instance.expect("set above");
        for &solver in &args.solvers {
            // Fresh oracle per run: query counts start at zero.
            let m = instance.build_oracle().expect("validated on load");
            let started = Instant::now();
            let outcome = resolve_solver(solver, &instance, &m, instance.weights.is_some())
                .and_then(|resolved| run_solver(resolved, &instance, &m, args.k, &opts, None));
            let wall_ms = started.elapsed().as_secs_f64() * 1e3;
            match outcome {
                Ok(report) => {
                    let status = match &report.solution {
                        Some(sol) if !is_fault_tolerant(&m, sol, args.k) => "verify-failed",
                        Some(_) => "ok",
                        None => "no-solution",
                    };
                    rows.push(vec![
                        name.clone(),
                        n.to_string(),
                        r.to_string(),
                        args.k.to_string(),
                        solver.to_string(),
                        report.size.map(|s| s.to_string()).unwrap_or_default(),
                        report.weight.map(|w| w.to_string()).unwrap_or_default(),
                        m.oracle_calls().to_string(),
                        report.subsets_examined.to_string(),
                        format!("{wall_ms:.3}"),
                        status.to_string(),
                    ]);
                }
                Err(err) => {
                    rows.push(error_row(&name, n, r, args.k, solver, &err.message));
                }
            }
        }
    }

    let mut writer: csv::Writer<Box<dyn std::io::Write>> =
        if args.out.as_os_str() == "-" {
            csv::Writer::from_writer(Box::new(std::io::stdout()))
        } else {
            let file = fs::File::create(&args.out).map_err(|e| {
                CmdError::input(format!("cannot write {}: {e}", args.out.display()))
            })?;
            csv::Writer::from_writer(Box::new(file))
        };
    writer
        .write_record([
            "instance",
            "n",
            "r",
            "k",
            "solver",
            "size",
            "weight",
            "oracle_calls",
            "subsets_examined",
            "wall_ms",
            "status",
        ])
        .and_then(|()| {
            rows.iter().try_for_each(|row| writer.write_record(row))
        })
        .map_err(|e| CmdError::internal(format!("csv: {e}")))?;
    writer
        .flush()
        .map_err(|e| CmdError::internal(format!("csv: {e}")))?;
    Ok(EXIT_OK)
}

fn error_row(
    name: &str,
    n: usize,
    r: usize,
    k: usize,
    solver: SolverChoice,
    message: &str,
) -> Vec<String> {
    vec![
        name.to_string(),
        n.to_string(),
        r.to_string(),
        k.to_string(),
        solver.to_string(),
        String::new(),
        String::new(),
        String::new(),
        String::new(),
        String::new(),
        format!("error: {message}"),
    ]
}
