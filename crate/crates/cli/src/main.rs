mod emit;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use cactus_sieve::heckerep::Normalization;
use cactus_sieve::tableau::Shape;
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "cactus-sieve",
    version,
    about = "Exact checks of promotion, cactus and Hecke actions on standard tableaux"
)]
struct Cli {
    /// Process shapes in parallel; output is identical either way.
    #[arg(long, global = true)]
    parallel: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reproduce the six 5x5 matrices of the (3,3) worked example.
    PaperExample {
        /// Directory holding the reference matrices as `<name>.txt`.
        #[arg(long)]
        fixtures: Option<PathBuf>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run relation, certificate and sieving suites over shapes.
    Verify {
        kind: VerifyKind,
        #[command(flatten)]
        scope: Scope,
        /// Normalization of the cactus generators.
        #[arg(long, default_value = "example", value_parser = parse_normalization)]
        normalization: Normalization,
        /// Largest size for which the cactus presentation is checked on the
        /// seminormal matrices (exact products get slow beyond this).
        #[arg(long, default_value_t = 5)]
        presentation_max_size: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Write one object for one shape.
    Emit {
        object: EmitObject,
        /// Polynomial kind for `polynomial`.
        #[arg(value_parser = ["q_hook", "maj"])]
        kind: Option<String>,
        #[arg(long, value_parser = parse_shape)]
        shape: Shape,
        #[arg(long, default_value = "example", value_parser = parse_normalization)]
        normalization: Normalization,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Scope {
    /// A single shape, e.g. `3,3`.
    #[arg(long, value_parser = parse_shape)]
    shape: Option<Shape>,
    /// Every shape of size 2 up to this bound.
    #[arg(long)]
    max_size: Option<usize>,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    output: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyKind {
    Hecke,
    Cactus,
    Interp,
    Csp,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EmitObject {
    U,
    Sigma,
    T,
    That,
    Phat,
    D,
    Polynomial,
    Orbits,
}

pub fn count(n: usize, one: &str, many: &str) -> String {
    format!("{n} {}", if n == 1 { one } else { many })
}

fn parse_shape(s: &str) -> Result<Shape, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_normalization(s: &str) -> Result<Normalization, String> {
    s.parse().map_err(|e| format!("{e}"))
}

/// What a command produced and how the process should exit.
pub struct Outcome {
    pub body: String,
    /// Mismatch details for standard error.
    pub diagnostics: Option<String>,
    pub ok: bool,
}

pub enum Failure {
    Usage(String),
    Internal(String),
}

impl From<cactus_sieve::Error> for Failure {
    fn from(e: cactus_sieve::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

fn run(cli: Cli) -> Result<(Outcome, Option<PathBuf>), Failure> {
    match cli.command {
        Command::PaperExample { fixtures, out } => {
            if let Some(dir) = fixtures.as_deref().filter(|d| !d.is_dir()) {
                return Err(Failure::Usage(format!(
                    "{} is not a directory",
                    dir.display()
                )));
            }
            Ok((
                emit::worked_example(fixtures.as_deref(), out.output)?,
                out.out,
            ))
        }
        Command::Verify {
            kind,
            scope,
            normalization,
            presentation_max_size,
            out,
        } => {
            if out.output == Format::Latex {
                return Err(Failure::Usage("verify reports are json or text".into()));
            }
            let shapes = match (scope.shape, scope.max_size) {
                (Some(s), _) => vec![s],
                (None, Some(n)) => verify::sweep_shapes(n),
                (None, None) => unreachable!("clap requires a scope"),
            };
            let outcome = verify::run(
                kind,
                &shapes,
                verify::Settings {
                    normalization,
                    presentation_max_size,
                },
                cli.parallel,
                out.output,
            )?;
            Ok((outcome, out.out))
        }
        Command::Emit {
            object,
            kind,
            shape,
            normalization,
            out,
        } => {
            let outcome = emit::emit(object, kind.as_deref(), &shape, normalization, out.output)?;
            Ok((outcome, out.out))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((outcome, path)) => {
            let written = match &path {
                Some(p) => std::fs::write(p, &outcome.body)
                    .map_err(|e| format!("cannot write {}: {e}", p.display())),
                None => {
                    print!("{}", outcome.body);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if let Some(d) = outcome.diagnostics {
                eprint!("{d}");
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
