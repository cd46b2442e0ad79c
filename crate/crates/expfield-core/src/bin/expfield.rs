//! Command-line front end: parse an `.efd` document and run one command
//! against it. Exit codes: 0 success, 1 failed --assert, 2 input error,
//! 3 resource limit.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use expfield_core::cli::{execute, exit_code, render_text, Options, COMMANDS};
use expfield_core::doc::parse;
use expfield_core::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Parser, Debug)]
#[command(
    name = "expfield",
    about = "Exact computations on finitely presented partial exponential fields",
    after_help = "Commands: validate, td, ldim, delta, xi-dim, cl-member, exchange,\n\
                  khovanskii-verify, ecl-cl-check, strong, extend-derivation,\n\
                  ax-check, dim, chain, essential"
)]
struct Cli {
    /// Command to run (see list below)
    command: String,

    /// Path to the .efd document
    file: PathBuf,

    /// Command arguments: a field name, then tuples, elements,
    /// certificate names, or name=value assignments as required
    args: Vec<String>,

    /// Search bound for integer coordinates in subspace enumerations
    #[arg(long, default_value_t = 3)]
    bound: u32,

    /// Relativization: "base" (default), "Q", or comma-separated generators
    #[arg(long)]
    over: Option<String>,

    /// Output format
    #[arg(long, value_enum, default_value = "json")]
    format: Format,

    /// Exit 1 unless the report verdict equals this value
    #[arg(long)]
    assert: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if !COMMANDS.contains(&cli.command.as_str()) {
        eprintln!(
            "error: unknown command {}; expected one of {}",
            cli.command,
            COMMANDS.join(", ")
        );
        return ExitCode::from(2);
    }
    let src = match fs::read_to_string(&cli.file) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: cannot read {}: {}", cli.file.display(), e);
            return ExitCode::from(2);
        }
    };
    let doc = match parse(&src) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("error: {}", e);
            return ExitCode::from(2);
        }
    };
    let opts = Options {
        bound: cli.bound,
        over: cli.over.clone(),
        ..Options::default()
    };
    let result = execute(&cli.command, &doc, &cli.args, &opts);
    let code = exit_code(&result, cli.assert.as_deref());
    match &result {
        Ok(report) => match cli.format {
            Format::Json => println!("{}", serde_json::to_string_pretty(report).unwrap()),
            Format::Text => print!("{}", render_text(report)),
        },
        Err(e) => {
            eprintln!("error: {}", e);
            if let Error::ResourceLimit { .. } = e {
                eprintln!("hint: raise EXPFIELD_SPAIR_BUDGET to allow more S-pair reductions");
            }
        }
    }
    ExitCode::from(code as u8)
}
