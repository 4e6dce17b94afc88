use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};

use mixnull::families::{gen_cycle, gen_for_k, gen_family, FamilySpec};
use mixnull::invariants::{ped, ped_closure};
use mixnull::report::analyze;
use mixnull::verify::{graph6, verify_all, verify_graphs, EnumerationScope, DEFAULT_ORIENTATION_CAP};
use mixnull::MixedGraph;

/// Exit status for usage and parse errors.
const USAGE: u8 = 2;
/// Exit status for a found violation or an impossible request.
const REFUSED: u8 = 1;
/// Exit status for an internal consistency failure.
const INTERNAL: u8 = 70;

#[derive(Parser)]
#[command(name = "mixnull", version, about = "Nullity and inertia of mixed graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a JSON report for one mixed graph.
    Analyze {
        /// Graph file in text format, or `-` for stdin.
        path: PathBuf,
    },
    /// Check every small graph and orientation; exit 1 on any violation.
    Verify(VerifyArgs),
    /// Emit a graph from the star-with-attachments family.
    Family(FamilyArgs),
    /// Delete a pendant vertex and its neighbour.
    Ped {
        path: PathBuf,
        /// Repeat until no pendant vertex is left.
        #[arg(long)]
        closure: bool,
    },
    /// Emit a mixed cycle with a given signature.
    Cycle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        sigma: usize,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 6)]
    nmax: usize,
    #[arg(long, default_value_t = 1)]
    nmin: usize,
    #[arg(long, default_value_t = 9)]
    emax: usize,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Read underlying graphs from a graph6 file instead of enumerating.
    #[arg(long, value_name = "PATH")]
    graph6: Option<PathBuf>,
    /// Include disconnected graphs.
    #[arg(long)]
    all_graphs: bool,
    /// Check one orientation of each pair related by reversing every arc.
    #[arg(long)]
    halve: bool,
    /// Largest number of orientations allowed for one graph.
    #[arg(long, default_value_t = DEFAULT_ORIENTATION_CAP)]
    cap: u64,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long, requires_all = ["s2", "s3"], conflicts_with_all = ["c", "k"])]
    s1: Option<usize>,
    #[arg(long, requires = "s1")]
    s2: Option<usize>,
    #[arg(long, requires = "s1")]
    s3: Option<usize>,
    /// Cyclomatic number; picks the attachment counts from `--k`.
    #[arg(long, requires = "k")]
    c: Option<usize>,
    /// Distance of the nullity from `n - 2m + 2c`.
    #[arg(long, requires = "c")]
    k: Option<usize>,
    /// 0 leaves every edge undirected; other values pick random orientations.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the expected invariants here instead of stderr.
    #[arg(long, value_name = "PATH")]
    meta: Option<PathBuf>,
}

struct Failure {
    code: u8,
    error: anyhow::Error,
}

fn usage(error: impl Into<anyhow::Error>) -> Failure {
    Failure { code: USAGE, error: error.into() }
}

fn refused(error: impl Into<anyhow::Error>) -> Failure {
    Failure { code: REFUSED, error: error.into() }
}

fn read_input(path: &Path) -> anyhow::Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn read_graph(path: &Path) -> Result<MixedGraph, Failure> {
    let text = read_input(path).map_err(usage)?;
    text.parse().with_context(|| format!("parsing {}", path.display())).map_err(usage)
}

fn emit(text: &str) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    out.write_all(text.as_bytes()).and_then(|_| out.flush()).map_err(|e| usage(anyhow!(e)))
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialise");
    s.push('\n');
    s
}

fn run_verify(args: VerifyArgs) -> Result<(), Failure> {
    let report = match &args.graph6 {
        Some(path) => {
            let text = read_input(path).map_err(usage)?;
            let graphs = graph6::decode_all(&text).map_err(usage)?;
            verify_graphs(&graphs, args.cap, args.halve, args.jobs).map_err(usage)?
        }
        None => {
            let scope = EnumerationScope {
                n_min: args.nmin,
                n_max: args.nmax,
                e_max: args.emax,
                connected_only: !args.all_graphs,
                orientation_cap: args.cap,
                halve: args.halve,
            };
            verify_all(&scope, args.jobs).map_err(usage)?
        }
    };
    emit(&json(&report))?;
    if report.is_clean() {
        Ok(())
    } else {
        Err(refused(anyhow!("{} violations found", report.violation_count)))
    }
}

fn run_family(args: FamilyArgs) -> Result<(), Failure> {
    let spec = match (args.s1, args.s2, args.s3, args.c, args.k) {
        (Some(s1), Some(s2), Some(s3), None, None) => FamilySpec::new(s1, s2, s3),
        (None, None, None, Some(c), Some(k)) => gen_for_k(c, k).map_err(usage)?,
        _ => return Err(usage(anyhow!("give either --s1 --s2 --s3 or --c --k"))),
    };
    let spec = spec.with_seed(args.seed);
    let g = gen_family(&spec).map_err(usage)?;
    let e = spec.expected();
    let meta = serde_json::json!({
        "spec": spec,
        "expected": e,
        "upper": e.n as i64 - 2 * e.m as i64 + 2 * e.c as i64,
    });
    match &args.meta {
        Some(path) => fs::write(path, json(&meta)).with_context(|| format!("writing {}", path.display())).map_err(usage)?,
        None => eprint!("{}", json(&meta)),
    }
    emit(&g.to_text())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze { path } => emit(&json(&analyze(&read_graph(&path)?))),
        Command::Verify(args) => run_verify(args),
        Command::Family(args) => run_family(args),
        Command::Ped { path, closure } => {
            let g = read_graph(&path)?;
            let reduced = if closure { ped_closure(&g) } else { ped(&g).map_err(refused)?.graph };
            emit(&reduced.to_text())
        }
        Command::Cycle { n, sigma } => emit(&gen_cycle(n, sigma).map_err(usage)?.to_text()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match std::panic::catch_unwind(|| run(cli)) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(Failure { code, error })) => {
            eprintln!("error: {error:#}");
            ExitCode::from(code)
        }
        Err(_) => {
            eprintln!("error: internal consistency check failed");
            ExitCode::from(INTERNAL)
        }
    }
}
