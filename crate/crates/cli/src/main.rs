use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use triality_core::parameters;
use triality_core::suites::{run_suites, Suite};
use triality_core::triality;

const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "triality", version, about = "Exact verification of Spin(8) triality and G2 endoscopic data")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and write a report.
    Verify {
        /// A suite name or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Report path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Compute and dump a derived object.
    Compute {
        #[command(subcommand)]
        what: ComputeTarget,
    },
    /// Enumerate combinatorial data.
    Enumerate {
        #[command(subcommand)]
        what: EnumerateTarget,
    },
}

#[derive(Subcommand)]
enum ComputeTarget {
    /// The derivative of triality on so(8) in the basis e_i e_j.
    Dtheta {
        #[arg(long)]
        dump: PathBuf,
    },
}

#[derive(Subcommand)]
enum EnumerateTarget {
    /// Parameter shapes of the given total dimension.
    Shapes {
        #[arg(long, default_value_t = 8)]
        total: u32,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Md,
}

fn parse_suites(name: &str) -> Result<Vec<Suite>, String> {
    if name == "all" {
        Ok(Suite::ALL.to_vec())
    } else {
        name.parse::<Suite>().map(|s| vec![s])
    }
}

fn write(path: &Path, contents: &str) -> Result<(), String> {
    fs::write(path, contents).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Verify { suite, seed, samples, out, format } => {
            let suites = match parse_suites(&suite) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("error: {e}; expected one of {} or all", Suite::ALL.map(|s| s.name()).join(", "));
                    return Ok(EXIT_USAGE);
                }
            };
            let report = run_suites(&suites, seed, samples);
            let text = match format {
                Format::Json => report.to_json(),
                Format::Md => report.to_markdown(),
            };
            match out {
                Some(path) => write(&path, &text)?,
                None => print!("{text}"),
            }
            for c in report.checks().filter(|c| c.status != triality_core::report::Status::Pass) {
                eprintln!("{}: {} (expected {}, got {})", c.status, c.name, c.expected, c.actual);
            }
            Ok(report.exit_code() as u8)
        }
        Command::Compute { what: ComputeTarget::Dtheta { dump } } => {
            let m = triality::standard_dtheta();
            let text = serde_json::to_string_pretty(&m.to_json()).map_err(|e| e.to_string())?;
            write(&dump, &(text + "\n"))?;
            Ok(0)
        }
        Command::Enumerate { what: EnumerateTarget::Shapes { total, out } } => {
            let shapes = parameters::enumerate_shapes(total);
            let doc = json!({
                "total": total,
                "count": shapes.len(),
                "shapes": shapes.iter().map(|s| s.to_json()).collect::<Vec<_>>(),
            });
            let text = serde_json::to_string_pretty(&doc).map_err(|e| e.to_string())?;
            write(&out, &(text + "\n"))?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
