//! `initforms` command-line front-end.
//!
//! Every command writes one JSON object to stdout. Exit codes: 0 verified or
//! plain success, 1 failed, 2 hypothesis fails, 3 input or validation error.

mod commands;
pub mod json;
mod theorem;

use std::fmt;
use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use initforms::{Error, Status};
use serde_json::{json, Value};

pub use theorem::run_job;

pub const SCHEMA: &str = "1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_HYPOTHESIS: i32 = 2;
pub const EXIT_ERROR: i32 = 3;

pub fn exit_code(status: Status) -> i32 {
    match status {
        Status::Verified => EXIT_OK,
        Status::Failed => EXIT_FAILED,
        Status::HypothesisFails => EXIT_HYPOTHESIS,
    }
}

/// Bad input: unparsable text, malformed JSON, inconsistent arities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub message: String,
    pub position: Option<usize>,
}

impl CliError {
    pub fn invalid(message: impl Into<String>) -> Self {
        CliError { message: message.into(), position: None }
    }

    pub fn context(mut self, what: &str) -> Self {
        self.message = format!("{what}: {}", self.message);
        self
    }

    fn to_json(&self) -> Value {
        let mut out = json!({"schema": SCHEMA, "status": "error", "error": self.message});
        if let Some(pos) = self.position {
            out["position"] = json!(pos);
        }
        out
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let position = match e {
            Error::Syntax { pos, .. } | Error::ZNotAllowed { pos } => Some(pos),
            _ => None,
        };
        CliError { message: e.to_string(), position }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Parser, Debug)]
#[command(name = "initforms", version, about = "Weighted initial forms, Newton polytopes and additive-group actions")]
struct Cli {
    /// Output format; `text` prints one `key: value` line per field.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Polynomial arithmetic.
    #[command(subcommand)]
    Poly(PolyCmd),
    /// Weighted degree and initial form of a polynomial.
    Initform {
        /// Weight as JSON, e.g. `[[1],[1]]`, `[1,2]` or `["1/2","-1"]`.
        #[arg(long)]
        w: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Newton polytopes.
    #[command(subcommand)]
    Newton(NewtonCmd),
    /// Additive-group actions given by comma-separated images.
    #[command(subcommand)]
    Action(ActionCmd),
    /// Run a theorem job file (`-` reads stdin).
    Theorem {
        #[arg(long)]
        job: String,
    },
    /// Run a seeded randomized suite.
    Fuzz {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: u64,
    },
}

#[derive(Subcommand, Debug)]
enum PolyCmd {
    /// Canonical form and term list.
    Parse {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Number of variables (default: the largest index used).
        #[arg(long)]
        nvars: Option<usize>,
    },
    /// Product of two polynomials.
    Mul {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        nvars: Option<usize>,
    },
    /// Whether `g` divides `f`, with the quotient.
    Divides {
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(long)]
        nvars: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum NewtonCmd {
    /// Hull vertices with separating weights.
    Vertices {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Vertices with every coordinate nonzero.
    Intruders {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Cross-check intruders against monomial initial forms.
    Criterion {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
}

#[derive(Subcommand, Debug)]
enum ActionCmd {
    /// Check the coaction axioms for `σ(x1), .., σ(xm)`.
    Validate { images: String },
    /// `exp(zD)` for a locally nilpotent `D` given by `D(x1), .., D(xm)`.
    Exp { derivation: String },
    /// Whether `f` is invariant.
    Invariant {
        #[arg(long)]
        action: String,
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Whether the action witnesses `f ∈ k[x1..xn]` as a stable invariant.
    StableWitness {
        #[arg(long)]
        action: String,
        #[arg(long)]
        n: usize,
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => format!("{value}\n"),
        Format::Text => {
            let mut out = String::new();
            if let Value::Object(map) = value {
                for (k, v) in map {
                    match v {
                        Value::String(s) => out.push_str(&format!("{k}: {s}\n")),
                        other => out.push_str(&format!("{k}: {other}\n")),
                    }
                }
            } else {
                out.push_str(&format!("{value}\n"));
            }
            out
        }
    }
}

fn dispatch(command: Command, stdin: &mut dyn Read) -> Result<(i32, Value), CliError> {
    match command {
        Command::Poly(PolyCmd::Parse { expr, nvars }) => commands::poly_parse(&expr, nvars),
        Command::Poly(PolyCmd::Mul { a, b, nvars }) => commands::poly_mul(&a, &b, nvars),
        Command::Poly(PolyCmd::Divides { g, f, nvars }) => commands::poly_divides(&g, &f, nvars),
        Command::Initform { w, expr } => commands::initform(&w, &expr),
        Command::Newton(NewtonCmd::Vertices { expr }) => commands::newton_vertices(&expr),
        Command::Newton(NewtonCmd::Intruders { expr }) => commands::newton_intruders(&expr),
        Command::Newton(NewtonCmd::Criterion { expr }) => commands::newton_criterion(&expr),
        Command::Action(ActionCmd::Validate { images }) => commands::action_validate(&images),
        Command::Action(ActionCmd::Exp { derivation }) => commands::action_exp(&derivation),
        Command::Action(ActionCmd::Invariant { action, f }) => commands::action_invariant(&action, &f),
        Command::Action(ActionCmd::StableWitness { action, n, f }) => commands::action_stable_witness(&action, n, &f),
        Command::Theorem { job } => {
            let text = if job == "-" {
                let mut s = String::new();
                stdin.read_to_string(&mut s).map_err(|e| CliError::invalid(format!("reading stdin: {e}")))?;
                s
            } else {
                std::fs::read_to_string(&job).map_err(|e| CliError::invalid(format!("reading {job}: {e}")))?
            };
            let job: Value =
                serde_json::from_str(&text).map_err(|e| CliError::invalid(format!("job is not valid JSON: {e}")))?;
            let report = run_job(&job)?;
            Ok((exit_code(report.status), report.to_json()))
        }
        Command::Fuzz { suite, seed, count } => commands::fuzz(&suite, seed, count),
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    EXIT_OK
                }
                _ => EXIT_ERROR,
            };
            if code == EXIT_OK {
                return Outcome { code, stdout: e.to_string() };
            }
            let err = CliError::invalid(e.to_string().trim_end().to_string());
            return Outcome { code, stdout: render(&err.to_json(), Format::Json) };
        }
    };
    log::debug!("command: {:?}", cli.command);
    match dispatch(cli.command, stdin) {
        Ok((code, value)) => Outcome { code, stdout: render(&value, cli.format) },
        Err(e) => {
            log::info!("input error: {e}");
            Outcome { code: EXIT_ERROR, stdout: render(&e.to_json(), cli.format) }
        }
    }
}
