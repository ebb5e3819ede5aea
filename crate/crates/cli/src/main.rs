use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use weak_hopf::exactlin::Field;
use whopf_cli::{build, emit, generate_example, read_spec, render_spec, run_suite, CliError, Suite, FIELD_ENV};

/// Exact verification of weak Hopf algebras, Yetter-Drinfeld modules and
/// Drinfeld doubles.
///
/// The environment variable WHOPF_FIELD (`rational`, `prime 7`, `F7`)
/// overrides the field of every spec file.
#[derive(Parser)]
#[command(name = "whopf", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        file: PathBuf,
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Also write the report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export the Drinfeld double of a weak Hopf or groupoid spec.
    Double {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export the dual weak Hopf algebra.
    Dual {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate an example spec: group_algebra n, discrete_groupoid k,
    /// pair_groupoid k, groupoid <family> k, graded_yd <family> k <degree>.
    Example {
        name: String,
        params: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn field_override() -> Option<String> {
    std::env::var(FIELD_ENV).ok().filter(|s| !s.trim().is_empty())
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let field = field_override();
    match cli.command {
        Command::Verify { file, suite, format, out } => {
            let suite = Suite::from_str(&suite)?;
            let obj = build(&read_spec(&file)?, field.as_deref())?;
            let run = run_suite(&obj, suite)?;
            let text = match format {
                Format::Json => run.to_json(),
                Format::Text => run.to_text(),
            };
            if let Some(path) = &out {
                emit(&text, Some(path))?;
            }
            print!("{text}");
            Ok(run.passed())
        }
        Command::Double { file, out } => {
            let obj = build(&read_spec(&file)?, field.as_deref())?;
            emit(&render_spec(&whopf_cli::double_spec(&obj)?), out.as_deref())?;
            Ok(true)
        }
        Command::Dual { file, out } => {
            let obj = build(&read_spec(&file)?, field.as_deref())?;
            emit(&render_spec(&whopf_cli::dual_spec(&obj)?), out.as_deref())?;
            Ok(true)
        }
        Command::Example { name, params, out } => {
            let f = Field::from_str(field.as_deref().unwrap_or("rational")).map_err(|e| CliError::Field(e.to_string()))?;
            emit(&render_spec(&generate_example(&name, &params, f)?), out.as_deref())?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("whopf: {e}");
            ExitCode::from(2)
        }
    }
}
