use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gtwidth::Family;

mod jobs;

use jobs::{Failure, Job, Options, Report};

#[derive(Parser)]
#[command(name = "gtwidth", version, about = "Gromov width lower bounds for coadjoint orbits of U(n), SO(2n+1) and SO(2n)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct WeightArgs {
    /// Group family: u, so-odd (SO(2n+1)) or so-even (SO(2n)).
    group: Family,
    /// Rank n.
    n: usize,
    /// Comma-separated entries of λ, integers or p/q (e.g. 3,1/2,-1/2).
    #[arg(allow_hyphen_values = true)]
    lambda: String,
}

#[derive(Subcommand)]
enum Command {
    /// Print r, r', condition (*), dimensions and width information.
    Bound {
        #[command(flatten)]
        weight: WeightArgs,
    },
    /// Print the simplex-embedding certificate.
    Certificate {
        #[command(flatten)]
        weight: WeightArgs,
        /// Also write the H-representation of the polytope to this file.
        #[arg(long, value_name = "PATH")]
        emit_hrep: Option<PathBuf>,
    },
    /// Run the edge, vertex, sampling and optional Ψ checks.
    Verify {
        #[command(flatten)]
        weight: WeightArgs,
        /// Number of random orbit points.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Tolerance on polytope inequalities for sampled points.
        #[arg(long, default_value_t = gtwidth::oracle::sampling::MEMBERSHIP_TOL)]
        tol: f64,
        #[arg(long, env = "GTWIDTH_SEED", default_value_t = 0)]
        seed: u64,
        /// Also check that Ψ is symplectic in dimension 2N.
        #[arg(long, value_name = "N")]
        psi: Option<usize>,
        /// Sample points for the Ψ check.
        #[arg(long, default_value_t = 1000)]
        psi_points: usize,
    },
    /// Run one JSON job per input line; write one JSON report per line.
    Batch {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
    },
}

fn job(command: &str, w: WeightArgs, options: Options) -> Job {
    Job {
        command: command.into(),
        group: w.group,
        n: w.n,
        lambda: w
            .lambda
            .split(',')
            .map(|s| jobs::RationalInput::Text(s.trim().to_string()))
            .collect(),
        options,
    }
}

fn print(report: &Report) {
    let json = serde_json::to_string_pretty(report).expect("reports serialize");
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let _ = writeln!(std::io::stdout().lock(), "{json}");
}

fn run_single(job: Job) -> ExitCode {
    match jobs::run(&job) {
        Ok(report) => {
            print(&report);
            ExitCode::from(report.exit_code())
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run_batch(input: PathBuf, output: PathBuf, threads: Option<usize>) -> ExitCode {
    let lines: Vec<String> = match fs::File::open(&input) {
        Ok(f) => match BufReader::new(f).lines().collect() {
            Ok(l) => l,
            Err(e) => return io_error(&input, e),
        },
        Err(e) => return io_error(&input, e),
    };
    let lines: Vec<String> = lines.into_iter().filter(|l| !l.trim().is_empty()).collect();
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(k) = threads {
        builder = builder.num_threads(k.max(1));
    }
    let pool = builder.build().expect("thread pool");
    let results: Vec<(String, u8)> = pool.install(|| {
        use rayon::prelude::*;
        lines.par_iter().map(|l| jobs::run_line(l)).collect()
    });
    let file = match fs::File::create(&output) {
        Ok(f) => f,
        Err(e) => return io_error(&output, e),
    };
    let mut out = BufWriter::new(file);
    let mut code = 0;
    for (line, c) in &results {
        if let Err(e) = writeln!(out, "{line}") {
            return io_error(&output, e);
        }
        code = code.max(*c);
    }
    if let Err(e) = out.flush() {
        return io_error(&output, e);
    }
    ExitCode::from(code)
}

fn io_error(path: &std::path::Path, e: std::io::Error) -> ExitCode {
    let f = Failure::bad_input(format!("{}: {e}", path.display()));
    eprintln!("error: {}", f.message);
    ExitCode::from(f.code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Bound { weight } => run_single(job("bound", weight, Options::default())),
        Command::Certificate { weight, emit_hrep } => run_single(job(
            "certificate",
            weight,
            Options {
                emit_hrep,
                ..Options::default()
            },
        )),
        Command::Verify {
            weight,
            samples,
            tol,
            seed,
            psi,
            psi_points,
        } => run_single(job(
            "verify",
            weight,
            Options {
                samples: Some(samples),
                tol: Some(tol),
                seed: Some(seed),
                psi,
                psi_points: Some(psi_points),
                emit_hrep: None,
            },
        )),
        Command::Batch {
            input,
            output,
            jobs,
        } => run_batch(input, output, jobs),
    }
}
