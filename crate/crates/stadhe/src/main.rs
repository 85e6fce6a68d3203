use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use stadhe::config::Scenario;
use stadhe::oracle::run_oracle;
use stadhe::report::Report;
use stadhe::run::{evolve, exit_code, trajectories, verify, VerifyOptions};
use stadhe::{load_scenario, RunError};

#[derive(Parser)]
#[command(name = "stadhe", version, about = "Dirac-Hestenes verification runner")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Verb {
    /// Run verification suites on a scenario and print a report.
    Verify {
        #[arg(long)]
        scenario: PathBuf,
        /// Suite name or `all`; defaults to the scenario's list.
        #[arg(long)]
        suite: Option<String>,
        /// Per-axis sample grid instead of Halton points.
        #[arg(long)]
        grid: Option<usize>,
        /// Finite-difference step for the two-engine comparison.
        #[arg(long)]
        step: Option<f64>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Multiplies every upper-bound tolerance.
        #[arg(long, default_value_t = 1.0)]
        tol_scale: f64,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, env = "STADHE_THREADS")]
        threads: Option<usize>,
    },
    /// Homomorphism check of the matrix representation on random pairs.
    Oracle {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Lattice convergence study; writes snapshots and convergence.txt.
    Evolve {
        #[arg(long)]
        scenario: PathBuf,
        /// Time step on every grid (default courant·dz).
        #[arg(long)]
        step: Option<f64>,
        #[arg(long, default_value = "evolve-out")]
        out: PathBuf,
    },
    /// Velocity and energy-flow streamlines.
    Trajectories {
        #[arg(long)]
        scenario: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// JSON schemas of the scenario and report formats.
    Schema,
}

fn load(path: &Path) -> Result<(Scenario, PathBuf), RunError> {
    load_scenario(path)
}

fn pool(threads: Option<usize>) -> Result<rayon::ThreadPool, RunError> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        if n == 0 {
            return Err(RunError::Config { key: "--threads".into(), message: "must be at least 1".into() });
        }
        b = b.num_threads(n);
    }
    b.build().map_err(|e| RunError::Io(e.to_string()))
}

fn run(cli: Cli) -> Result<u8, RunError> {
    match cli.verb {
        Verb::Verify { scenario, suite, grid, step, out, format, tol_scale, seed, threads } => {
            let (sc, base) = load(&scenario)?;
            let opts = VerifyOptions { suite, grid, step, tol_scale, seed };
            let report = pool(threads)?.install(|| verify(&sc, &base, &opts))?;
            let text = match format {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
            };
            match out {
                Some(p) => std::fs::write(&p, text).map_err(|e| RunError::Io(format!("{}: {e}", p.display())))?,
                None => print!("{text}"),
            }
            Ok(if report.all_pass() { 0 } else { 1 })
        }
        Verb::Oracle { samples, seed } => {
            if samples == 0 {
                return Err(RunError::Config { key: "--samples".into(), message: "must be at least 1".into() });
            }
            let start = std::time::Instant::now();
            let outcome = run_oracle(samples, seed);
            let elapsed = start.elapsed().as_secs_f64();
            let mut v = serde_json::to_value(&outcome).expect("serialises");
            v["elapsed_seconds"] = serde_json::json!(elapsed);
            println!("{}", serde_json::to_string_pretty(&v).expect("serialises"));
            Ok(if outcome.pass { 0 } else { 1 })
        }
        Verb::Evolve { scenario, step, out } => {
            let (sc, base) = load(&scenario)?;
            let study = evolve(&sc, &base, step, &out)?;
            print!("{}", study.table());
            Ok(0)
        }
        Verb::Trajectories { scenario, seed, out } => {
            let (sc, base) = load(&scenario)?;
            let run = trajectories(&sc, &base, seed, out.as_deref())?;
            println!("max_divergence {:e}", run.max_divergence);
            println!("early_terminations {}", run.early_terminations);
            Ok(0)
        }
        Verb::Schema => {
            let v = serde_json::json!({
                "scenario": schemars::schema_for!(Scenario),
                "report": schemars::schema_for!(Report),
            });
            println!("{}", serde_json::to_string_pretty(&v).expect("serialises"));
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("stadhe: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
