use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use bhk_mirror::linalg::parse_rat;
use bhk_mirror::verify::{
    run_analyze, run_check_unified, run_dual, run_rings, run_verify, Engine, Failure, InputSpec,
    RingSide, RunOptions,
};

#[derive(Parser)]
#[command(
    name = "bhk-mirror",
    version,
    about = "Exact A/B ring tables and mirror checks for Berglund-Huebsch data"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Weights, Calabi-Yau type, groups, lattice indices, nondegeneracy.
    Analyze(Common),
    /// One bigraded table.
    Rings(Common),
    /// The dual datum as an input document.
    Dual(Common),
    /// Tables of the datum and its dual, and the duality verdicts.
    Verify(Common),
    /// The two finiteness conditions on toric mirror data.
    CheckUnified(Common),
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Complex,
    Orbifold,
    #[value(name = "orbifold-only")]
    OrbifoldOnly,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    A,
    B,
}

#[derive(Args)]
struct Common {
    /// Input document (JSON).
    input: PathBuf,
    #[arg(long, value_enum)]
    engine: Option<EngineArg>,
    #[arg(long, value_enum, default_value = "b", ignore_case = true)]
    side: SideArg,
    #[arg(long, allow_negative_numbers = true)]
    window_margin: Option<i64>,
    /// Rational "p/q" or integer.
    #[arg(long)]
    degree_bound: Option<String>,
    /// Print the machine-readable report.
    #[arg(long)]
    json: bool,
    #[arg(long)]
    threads: Option<usize>,
}

fn input_error(msg: String) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn failure(f: Failure) -> ExitCode {
    eprintln!("error: {f}");
    ExitCode::from(f.exit_code() as u8)
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn print_json(v: &Value) {
    emit(&(serde_json::to_string_pretty(v).expect("JSON serializes") + "\n"));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (Command::Analyze(c)
    | Command::Rings(c)
    | Command::Dual(c)
    | Command::Verify(c)
    | Command::CheckUnified(c)) = &cli.command;
    if let Some(n) = c.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            return input_error(format!("cannot configure {n} threads: {e}"));
        }
    }
    let text = match std::fs::read_to_string(&c.input) {
        Ok(t) => t,
        Err(e) => return input_error(format!("{}: {e}", c.input.display())),
    };
    let spec = match InputSpec::parse(&text) {
        Ok(s) => s,
        Err(e) => return input_error(format!("{}: {e}", c.input.display())),
    };
    let degree_bound = match c.degree_bound.as_deref().map(|s| parse_rat(s).ok_or(s)) {
        None => None,
        Some(Ok(r)) => Some(r),
        Some(Err(s)) => return input_error(format!("--degree-bound `{s}` is not a rational")),
    };
    let options = RunOptions {
        engine: c.engine.map(|e| match e {
            EngineArg::Complex => Engine::Complex,
            EngineArg::Orbifold | EngineArg::OrbifoldOnly => Engine::Orbifold,
            EngineArg::Both => Engine::Both,
        }),
        window_margin: c.window_margin,
        degree_bound,
    };
    match &cli.command {
        Command::Analyze(_) => match run_analyze(&spec) {
            Ok(v) => print_json(&v),
            Err(f) => return failure(f),
        },
        Command::Dual(_) => match run_dual(&spec) {
            Ok(v) => print_json(if c.json { &v } else { &v["input"] }),
            Err(f) => return failure(f),
        },
        Command::Rings(_) => {
            let side = match c.side {
                SideArg::A => RingSide::A,
                SideArg::B => RingSide::B,
            };
            match run_rings(&spec, side, &options) {
                Ok(t) if c.json => print_json(&t.to_json()),
                Ok(t) => {
                    emit(&format!("{t}\n{}", t.grid().unwrap_or_default()));
                }
                Err(f) => return failure(f),
            }
        }
        Command::Verify(_) => match run_verify(&spec, &options) {
            Ok(r) => {
                if c.json {
                    print_json(&r.to_json());
                } else {
                    emit(&r.render());
                }
                if !r.passed() {
                    return ExitCode::from(1);
                }
            }
            Err(f) => return failure(f),
        },
        Command::CheckUnified(_) => match run_check_unified(&spec, &options) {
            Ok(r) => {
                if c.json {
                    print_json(&r.to_json());
                } else {
                    emit(&r.render());
                }
                if !r.status().is_pass() {
                    return ExitCode::from(1);
                }
            }
            Err(f) => return failure(f),
        },
    }
    ExitCode::SUCCESS
}
