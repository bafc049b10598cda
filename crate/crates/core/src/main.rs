use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use qsinf::poincare::PortraitOptions;
use qsinf::report::{batch_exit_code, parse_error_report, parse_input, run_system, Input, OracleMode, Outcome};

#[derive(Clone, Copy, ValueEnum)]
enum Oracle {
    None,
    Tensor,
    Numeric,
    All,
}

impl From<Oracle> for OracleMode {
    fn from(o: Oracle) -> Self {
        match o {
            Oracle::None => OracleMode::None,
            Oracle::Tensor => OracleMode::Tensor,
            Oracle::Numeric => OracleMode::Numeric,
            Oracle::All => OracleMode::All,
        }
    }
}

/// Classify quadratic differential systems by their behaviour at infinity.
///
/// Exit codes: 0 classified, 2 invalid system, 3 no unique table row,
/// 4 malformed input, 5 internal inconsistency.
#[derive(Parser)]
#[command(name = "qsinf", version)]
struct Args {
    /// JSON file with one system or an array of systems; `-` reads stdin.
    #[arg(long, default_value = "-")]
    input: String,
    /// Write an SVG portrait near infinity (batch entries get `-N` before the extension).
    #[arg(long)]
    svg: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "tensor")]
    oracle: Oracle,
    #[arg(long)]
    pretty: bool,
}

fn numbered(path: &Path, i: usize) -> PathBuf {
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let name = match path.extension() {
        Some(ext) => format!("{stem}-{i}.{}", ext.to_string_lossy()),
        None => format!("{stem}-{i}"),
    };
    path.with_file_name(name)
}

fn emit<T: Serialize>(value: &T, pretty: bool) {
    let text = if pretty { serde_json::to_string_pretty(value) } else { serde_json::to_string(value) };
    let mut out = io::stdout().lock();
    let _ = writeln!(out, "{}", text.expect("reports serialize"));
}

fn write_svg(path: &Path, outcome: &Outcome) -> io::Result<()> {
    match &outcome.svg {
        Some(svg) => std::fs::write(path, svg),
        None => Ok(()),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let text = if args.input == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf).map(|_| buf)
    } else {
        std::fs::read_to_string(&args.input)
    };
    let text = match text {
        Ok(t) => t,
        Err(e) => {
            emit(&serde_json::json!({ "error": { "kind": "io", "message": e.to_string() } }), args.pretty);
            return ExitCode::from(4);
        }
    };
    let input = match parse_input(&text) {
        Ok(input) => input,
        Err(e) => {
            emit(&parse_error_report(&e), args.pretty);
            return ExitCode::from(4);
        }
    };
    let mode = OracleMode::from(args.oracle);
    let opts = PortraitOptions::default();
    let portrait = args.svg.as_ref().map(|_| &opts);
    let code = match input {
        Input::Single(s) => {
            let outcome = run_system(&s, mode, portrait);
            if let Some(path) = &args.svg {
                if let Err(e) = write_svg(path, &outcome) {
                    eprintln!("cannot write {}: {e}", path.display());
                }
            }
            emit(&outcome.report, args.pretty);
            outcome.exit_code
        }
        Input::Batch(systems) => {
            let outcomes: Vec<Outcome> = systems.par_iter().map(|s| run_system(s, mode, portrait)).collect();
            if let Some(path) = &args.svg {
                for (i, o) in outcomes.iter().enumerate() {
                    if let Err(e) = write_svg(&numbered(path, i), o) {
                        eprintln!("cannot write svg {i}: {e}");
                    }
                }
            }
            let reports: Vec<_> = outcomes.iter().map(|o| &o.report).collect();
            emit(&reports, args.pretty);
            batch_exit_code(outcomes.iter().map(|o| o.exit_code))
        }
    };
    ExitCode::from(code as u8)
}
