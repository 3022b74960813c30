//! The full duality report for a datum: tables from both engines and the
//! five verdicts. Reads an input document if a path is given, otherwise
//! uses the quadric pair `x^2 + y^2` with `<J>` (ĉ = 0).
//!
//! cargo run --example verify -- fixtures/elliptic_cubic.json

use bhk_mirror::verify::{run_verify, InputSpec, RunOptions};

const QUADRIC_PAIR: &str =
    r#"{"mode":"bh","matrix":[[2,0],[0,2]],"group":{"generators":[["1/2","1/2"]]}}"#;

fn main() {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}")),
        None => QUADRIC_PAIR.to_string(),
    };
    let spec = InputSpec::parse(&text).expect("valid input document");
    match run_verify(&spec, &RunOptions::default()) {
        Ok(report) => {
            print!("{}", report.render());
            println!("all verdicts pass: {}", report.passed());
        }
        Err(f) => eprintln!("error: {f} (exit code {})", f.exit_code()),
    }
}
