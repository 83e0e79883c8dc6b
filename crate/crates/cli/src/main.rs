//! `cyclesat` command-line front end.
//!
//! Exit status: 0 on success or a true verdict, 1 on a false verdict, 2 on
//! usage or input errors, 3 when a time budget runs out.

mod input;

use std::fs::OpenOptions;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cyclesat::bounds::eval_bounds;
use cyclesat::constructions::{
    build_h1, build_h2, build_h3, build_wheel, CoreCheck, LabeledGraph,
};
use cyclesat::graph::{encode_edge_list, graph6_encode};
use cyclesat::oracle::{exact_min_with, FloorPolicy, OracleConfig, OracleOutcome, SatMode};
use cyclesat::saturation::{greedy_saturate, random_pair_order, verify, Certificate, Mode, Verdict};
use cyclesat::suitability::{mine_suitable, MineOutcome, MinerConfig, SuitabilityMode};

use input::{read_graph, read_text};

#[derive(Parser)]
#[command(name = "cyclesat", version, about = "Cycle saturation toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph from one of the construction families.
    Construct(ConstructArgs),
    /// Decide C_k-saturation or semisaturation of a graph.
    Verify(VerifyArgs),
    /// Evaluate the closed-form bounds at (n, k).
    Bounds(BoundsArgs),
    /// Exact minimum edge count by exhaustive search.
    Oracle(OracleArgs),
    /// Smallest suitable graph on k vertices.
    MineSuitable(MineArgs),
    /// Re-check a certificate against a graph.
    Certify(CertifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    H1,
    H2,
    H3,
    Wheel,
    Greedy,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(clap::Args)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    k: usize,
    /// Order, for h1 and greedy.
    #[arg(long)]
    n: Option<usize>,
    /// Number of attached paths, for h2 and h3.
    #[arg(long)]
    t: Option<usize>,
    /// Spikes on the wheel, or vertices left bare in h3.
    #[arg(long, default_value_t = 0)]
    r: usize,
    /// Spikes on the default wheel core of h2 and h3.
    #[arg(long, default_value_t = 0)]
    core_r: usize,
    /// Core graph file for h2 and h3 instead of a wheel.
    #[arg(long, requires = "core_labels")]
    core: Option<PathBuf>,
    /// Label sidecar for `--core`; must name a1 and a2.
    #[arg(long)]
    core_labels: Option<PathBuf>,
    /// Skip the suitability check on the core.
    #[arg(long)]
    unchecked: bool,
    /// Seed for the greedy pair order.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    format: Format,
    /// Write the vertex label sidecar here.
    #[arg(long)]
    labels: Option<PathBuf>,
}

#[derive(clap::Args)]
struct VerifyArgs {
    #[arg(long)]
    k: usize,
    #[arg(long, default_value = "saturated")]
    mode: Mode,
    /// Graph file; standard input when absent.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Write the certificate here when the verdict is true.
    #[arg(long)]
    cert: Option<PathBuf>,
}

#[derive(clap::Args)]
#[command(group = clap::ArgGroup::new("order").required(true).args(["n", "range"]))]
struct BoundsArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: Option<usize>,
    /// Inclusive range such as `10..20`.
    #[arg(long, value_parser = parse_range)]
    range: Option<(usize, usize)>,
    #[arg(long)]
    csv: bool,
}

#[derive(clap::Args)]
struct OracleArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    mode: SatMode,
    #[arg(long, default_value_t = 1)]
    shards: usize,
    #[arg(long, env = "CYCLESAT_BUDGET_SECONDS")]
    max_seconds: Option<f64>,
    /// Largest order accepted; defaults per mode.
    #[arg(long)]
    ceiling: Option<usize>,
    /// Start from n - 1 edges instead of the proven lower bounds.
    #[arg(long)]
    connectivity_floor: bool,
    /// Append the result to this CSV file.
    #[arg(long)]
    golden: Option<PathBuf>,
}

#[derive(clap::Args)]
struct MineArgs {
    #[arg(long)]
    k: usize,
    /// Mine {k, k+2}-suitable graphs.
    #[arg(long)]
    plus: bool,
    #[arg(long, default_value_t = 1)]
    shards: usize,
    #[arg(long, env = "CYCLESAT_BUDGET_SECONDS")]
    max_seconds: Option<f64>,
    #[arg(long, default_value_t = MinerConfig::default().ceiling)]
    ceiling: usize,
}

#[derive(clap::Args)]
struct CertifyArgs {
    #[arg(long)]
    cert: PathBuf,
    /// Graph file; standard input when absent.
    #[arg(long = "in")]
    input: Option<PathBuf>,
}

/// Marker for runs stopped by the time budget.
#[derive(Debug)]
struct BudgetExhausted;

impl std::fmt::Display for BudgetExhausted {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("time budget exhausted")
    }
}

impl std::error::Error for BudgetExhausted {}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected N1..N2, got {s:?}"))?;
    let lo: usize = a.trim().parse().map_err(|e| format!("bad range start: {e}"))?;
    let hi: usize = b
        .trim_start_matches('=')
        .trim()
        .parse()
        .map_err(|e| format!("bad range end: {e}"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

fn budget(seconds: Option<f64>) -> Result<Option<Duration>> {
    seconds
        .map(|s| Duration::try_from_secs_f64(s).with_context(|| format!("invalid time budget {s}")))
        .transpose()
}

/// Writes to standard output; a reader closing the pipe early is not an error.
fn emit(text: &str) -> Result<()> {
    let mut stdout = std::io::stdout().lock();
    match stdout.write_all(text.as_bytes()).and_then(|()| stdout.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn verdict_code(holds: bool) -> ExitCode {
    if holds {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Construct(a) => construct(a),
        Command::Verify(a) => verify_cmd(a),
        Command::Bounds(a) => bounds(a),
        Command::Oracle(a) => oracle(a),
        Command::MineSuitable(a) => mine(a),
        Command::Certify(a) => certify(a),
    };
    match result {
        Ok(code) => code,
        Err(e) if e.is::<BudgetExhausted>() => {
            eprintln!("cyclesat: {e}");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("cyclesat: error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn load_core(args: &ConstructArgs) -> Result<LabeledGraph> {
    match (&args.core, &args.core_labels) {
        (Some(path), Some(labels)) => {
            let g = read_graph(Some(path))?;
            let text = read_text(labels)?;
            LabeledGraph::from_sidecar(g, &text)
                .with_context(|| format!("malformed label sidecar {}", labels.display()))
        }
        _ => Ok(build_wheel(args.k, args.core_r)?.labeled),
    }
}

fn construct(args: ConstructArgs) -> Result<ExitCode> {
    let need = |v: Option<usize>, flag: &str| v.with_context(|| format!("--{flag} is required for this family"));
    let check = if args.unchecked {
        CoreCheck::Unchecked
    } else {
        CoreCheck::Verify
    };
    let labeled = match args.family {
        FamilyArg::H1 => build_h1(args.k, need(args.n, "n")?)?.labeled,
        FamilyArg::Wheel => build_wheel(args.k, args.r)?.labeled,
        FamilyArg::H2 => build_h2(&load_core(&args)?, args.k, need(args.t, "t")?, check)?.labeled,
        FamilyArg::H3 => build_h3(&load_core(&args)?, args.k, need(args.t, "t")?, args.r, check)?.labeled,
        FamilyArg::Greedy => {
            let n = need(args.n, "n")?;
            if args.k < 3 || n < args.k {
                bail!("greedy needs n >= k >= 3, got n = {n}, k = {}", args.k);
            }
            let order = random_pair_order(n, &mut ChaCha8Rng::seed_from_u64(args.seed));
            LabeledGraph::new(greedy_saturate(n, args.k, &order)?, Default::default())
        }
    };
    let g = labeled.graph();
    match args.format {
        Format::Graph6 => println!("{}", graph6_encode(g)),
        Format::Edgelist => print!("{}", encode_edge_list(g)),
    }
    if let Some(path) = &args.labels {
        std::fs::write(path, labeled.to_sidecar())
            .with_context(|| format!("cannot write labels to {}", path.display()))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn verify_cmd(args: VerifyArgs) -> Result<ExitCode> {
    let g = read_graph(args.input.as_deref())?;
    let verdict = verify(&g, args.k, args.mode)?;
    let name = args.mode.to_string().to_uppercase();
    match &verdict {
        Verdict::Holds(cert) => {
            println!("{name}");
            if let Some(path) = &args.cert {
                std::fs::write(path, cert.to_string())
                    .with_context(|| format!("cannot write certificate to {}", path.display()))?;
            }
        }
        Verdict::ContainsCycle(c) => {
            let cycle: Vec<String> = c.vertices().iter().map(|v| v.to_string()).collect();
            println!("NOT {name}: contains C_{}: {}", args.k, cycle.join(" "));
        }
        Verdict::Unsaturated { u, v } => {
            println!("NOT {name}: adding ({u}, {v}) creates no new C_{}", args.k);
        }
    }
    Ok(verdict_code(verdict.holds()))
}

fn certify(args: CertifyArgs) -> Result<ExitCode> {
    let text = read_text(&args.cert)?;
    let cert: Certificate = text
        .parse()
        .with_context(|| format!("malformed certificate {}", args.cert.display()))?;
    let g = read_graph(args.input.as_deref())?;
    match cert.validate(&g) {
        Ok(()) => {
            println!(
                "VALID: {} certificate for k = {} with {} witnesses",
                cert.mode(),
                cert.k(),
                cert.witnesses().len()
            );
            Ok(ExitCode::SUCCESS)
        }
        Err(e) => {
            println!("INVALID: {e}");
            Ok(ExitCode::from(1))
        }
    }
}

fn bounds(args: BoundsArgs) -> Result<ExitCode> {
    let (lo, hi) = match (args.n, args.range) {
        (Some(n), None) => (n, n),
        (None, Some(r)) => r,
        _ => bail!("give exactly one of --n and --range"),
    };
    let ranged = args.range.is_some();
    let mut out = String::new();
    for n in lo..=hi {
        let table = eval_bounds(n, args.k);
        if args.csv {
            let csv = table.to_csv();
            let mut lines = csv.lines();
            let header = lines.next().unwrap_or_default();
            let prefix = if ranged { format!("{n},") } else { String::new() };
            if n == lo {
                out.push_str(if ranged { "n," } else { "" });
                out.push_str(header);
                out.push('\n');
            }
            for line in lines {
                out.push_str(&prefix);
                out.push_str(line);
                out.push('\n');
            }
        } else {
            if n > lo {
                out.push('\n');
            }
            out.push_str(&table.to_string());
        }
    }
    emit(&out)?;
    Ok(ExitCode::SUCCESS)
}

fn oracle(args: OracleArgs) -> Result<ExitCode> {
    let config = OracleConfig {
        ceiling: args.ceiling,
        shards: args.shards.max(1),
        time_budget: budget(args.max_seconds)?,
        floor: if args.connectivity_floor {
            FloorPolicy::Connectivity
        } else {
            FloorPolicy::Bounds
        },
    };
    let result = exact_min_with(args.n, args.k, args.mode, &config)?;
    let label = format!("{}({}, C{})", args.mode, args.n, args.k);
    eprintln!(
        "examined {} graphs in {:.2?}",
        result.graphs_examined, result.elapsed
    );
    match &result.outcome {
        OracleOutcome::Exact { value, witness, .. } => {
            let code = graph6_encode(witness);
            println!("{label} = {value}");
            println!("{code}");
            if let Some(path) = &args.golden {
                append_golden(path, &format!("{},{},{},{value},{code}", args.n, args.k, args.mode))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        OracleOutcome::AtLeast(m) => {
            println!("{label} >= {m}");
            Err(BudgetExhausted.into())
        }
    }
}

fn append_golden(path: &std::path::Path, row: &str) -> Result<()> {
    let fresh = std::fs::metadata(path).map(|m| m.len() == 0).unwrap_or(true);
    let mut file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .with_context(|| format!("cannot open golden file {}", path.display()))?;
    if fresh {
        writeln!(file, "n,k,mode,value,witness")?;
    }
    writeln!(file, "{row}")?;
    Ok(())
}

fn mine(args: MineArgs) -> Result<ExitCode> {
    let mode = if args.plus {
        SuitabilityMode::KPlus2
    } else {
        SuitabilityMode::K
    };
    let config = MinerConfig {
        ceiling: args.ceiling,
        shards: args.shards.max(1),
        time_budget: budget(args.max_seconds)?,
    };
    let result = mine_suitable(args.k, mode, &config)?;
    eprintln!("examined {} graphs", result.graphs_examined);
    match result.outcome {
        MineOutcome::Found(w) => {
            let (a1, a2) = w.labeled.special().expect("mined graphs carry a1 and a2");
            println!("s({}) = {} [{mode}]", args.k, w.edges);
            println!("{}", graph6_encode(w.labeled.graph()));
            println!("a1={a1} a2={a2}");
            Ok(ExitCode::SUCCESS)
        }
        MineOutcome::NotFound => {
            println!("no {mode}-suitable graph on {} vertices", args.k);
            Ok(ExitCode::from(1))
        }
        MineOutcome::TimedOut { at_least } => {
            println!("s({}) >= {at_least} [{mode}]", args.k);
            Err(BudgetExhausted.into())
        }
    }
}
