//! Command-line front end.

pub mod input;
pub mod report;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::field::VectorField;
use crate::poly::BiPoly;
use crate::search::{search_curves, BoundRule, SearchConfig, SearchError};
use crate::singular::SingularError;
use crate::verdict::{Status, Verdict};

use input::SystemFile;
use report::{InputEcho, Report, SCHEMA};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Unavailable(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } => 2,
            CliError::Validation(_) => 3,
            CliError::Unavailable(_) => 4,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "darboux", version, about = "Invariant algebraic curves of planar polynomial vector fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Search and compare against degrees up to N (overrides the bound rule).
    #[arg(long, global = true, value_name = "N")]
    pub max_degree: Option<u32>,
    /// smooth | nodal | k:<K> | explicit:<N>
    #[arg(long, global = true, value_name = "RULE")]
    pub bound_rule: Option<BoundRule>,
    /// First shear t in x -> x + t*y tried by the genus computation.
    #[arg(long, global = true, value_name = "T", allow_hyphen_values = true)]
    pub shear_seed: Option<i64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Degree, Darboux divisor and equilibria of the field.
    Analyze { file: PathBuf },
    /// Cofactors and checks for each curve in the file.
    Verify { file: PathBuf },
    /// Search for invariant curves up to the degree bound.
    Search { file: PathBuf },
    /// Singular points and genus of each curve in the file.
    Genus { file: PathBuf },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Analyze { .. } => "analyze",
            Command::Verify { .. } => "verify",
            Command::Search { .. } => "search",
            Command::Genus { .. } => "genus",
        }
    }

    fn file(&self) -> &Path {
        match self {
            Command::Analyze { file } | Command::Verify { file } | Command::Search { file } | Command::Genus { file } => {
                file
            }
        }
    }
}

struct Context {
    sys: SystemFile,
    rule: BoundRule,
    seed: i64,
}

impl Context {
    fn field(&self) -> Result<Option<VectorField>, CliError> {
        match (&self.sys.p, &self.sys.q) {
            (None, None) => Ok(None),
            (Some(p), Some(q)) => VectorField::new(p.value.clone(), q.value.clone())
                .map(Some)
                .map_err(|e| CliError::Validation(format!("invalid field: {e}"))),
            _ => Err(CliError::Validation("P and Q must both be given".into())),
        }
    }

    fn require_field(&self) -> Result<VectorField, CliError> {
        self.field()?
            .ok_or_else(|| CliError::Validation("the file defines no field (P and Q)".into()))
    }

    fn curves(&self) -> Result<Vec<&BiPoly>, CliError> {
        if self.sys.curves.is_empty() {
            return Err(CliError::Validation("the file defines no curve (f = ...)".into()));
        }
        self.sys
            .curves
            .iter()
            .map(|c| {
                if c.value.degree() < 1 {
                    Err(CliError::Validation(format!("line {}: curve is constant", c.line)))
                } else {
                    Ok(&c.value)
                }
            })
            .collect()
    }

    fn echo(&self) -> InputEcho {
        InputEcho {
            p: self.sys.p.as_ref().map(|s| s.value.to_string()),
            q: self.sys.q.as_ref().map(|s| s.value.to_string()),
            curves: self.sys.curves.iter().map(|c| c.value.to_string()).collect(),
            rule: self.rule.to_string(),
            shear_seed: self.seed,
        }
    }
}

/// Per-curve genus result; curves whose analysis could not finish carry the
/// reason instead.
#[derive(Serialize)]
#[serde(untagged)]
enum GenusEntry {
    Done(Box<report::GenusOut>),
    Failed { f: String, error: String, status: Verdict },
}

fn run_command(cli: &Cli, ctx: &Context) -> Result<Value, CliError> {
    let to_value = |v: Result<Value, serde_json::Error>| v.map_err(|e| CliError::Validation(e.to_string()));
    match &cli.command {
        Command::Analyze { .. } => {
            let field = ctx.require_field()?;
            to_value(serde_json::to_value(report::analyze(&field).map_err(CliError::Validation)?))
        }
        Command::Verify { .. } => {
            let field = ctx.require_field()?;
            let out: Vec<report::VerifyOut> = ctx
                .curves()?
                .into_iter()
                .map(|f| report::verify(&field, f, ctx.rule, ctx.seed))
                .collect();
            to_value(serde_json::to_value(out))
        }
        Command::Search { .. } => {
            let field = ctx.require_field()?;
            let r = search_curves(&field, SearchConfig::new(ctx.rule)).map_err(|e| match e {
                SearchError::DicriticalInfinity => CliError::Unavailable(format!(
                    "search unavailable: {e}; supply candidate curves with `f = ...` and use `verify`"
                )),
            })?;
            to_value(serde_json::to_value(report::search_out(ctx.rule, &r)))
        }
        Command::Genus { .. } => {
            let field = ctx.field()?;
            let mut out = Vec::new();
            for f in ctx.curves()? {
                let entry = match report::genus_out(field.as_ref(), f, ctx.seed) {
                    Ok(g) => GenusEntry::Done(Box::new(g)),
                    Err(e @ (SingularError::NonReducedCurve | SingularError::ConstantCurve)) => {
                        return Err(CliError::Validation(format!("curve {f}: {e}")))
                    }
                    Err(e) => GenusEntry::Failed {
                        f: f.to_string(),
                        error: e.to_string(),
                        status: Verdict::new(Status::Uncertified, e.to_string()),
                    },
                };
                out.push(entry);
            }
            to_value(serde_json::to_value(out))
        }
    }
}

/// Runs the CLI and returns the text written to stdout.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let path = cli.command.file();
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let sys = SystemFile::parse(&text)?;
    let rule = match (cli.max_degree, cli.bound_rule, sys.max_degree, sys.bound_rule) {
        (Some(n), ..) => BoundRule::Explicit(n),
        (None, Some(r), ..) => r,
        (None, None, Some(n), _) => BoundRule::Explicit(n),
        (None, None, None, Some(r)) => r,
        _ => BoundRule::Smooth,
    };
    let seed = cli.shear_seed.or(sys.shear_seed).unwrap_or(0);
    let ctx = Context { sys, rule, seed };
    let result = run_command(cli, &ctx)?;
    let report = Report {
        schema: SCHEMA,
        tool: format!("darboux {}", env!("CARGO_PKG_VERSION")),
        command: cli.command.name(),
        input: ctx.echo(),
        result,
    };
    if cli.json {
        let mut s = serde_json::to_string_pretty(&report).map_err(|e| CliError::Validation(e.to_string()))?;
        s.push('\n');
        Ok(s)
    } else {
        let value = serde_json::to_value(&report).map_err(|e| CliError::Validation(e.to_string()))?;
        let mut s = String::new();
        render_text(&mut s, &value, 0);
        Ok(s)
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Object(_) | Value::Array(_))
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

/// Indented `key: value` rendering of a report.
fn render_text(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            // A verdict renders on one line.
            if let (Some(Value::String(status)), Some(Value::String(detail)), 2) =
                (map.get("status"), map.get("detail"), map.len())
            {
                let _ = writeln!(out, "{pad}{status} ({detail})");
                return;
            }
            for (k, val) in map {
                if is_scalar(val) {
                    let _ = writeln!(out, "{pad}{k}: {}", scalar_text(val));
                } else if val.as_array().is_some_and(|a| a.is_empty()) {
                    let _ = writeln!(out, "{pad}{k}: none");
                } else if let Some(Value::String(status)) = val.get("status").filter(|_| val.as_object().unwrap().len() == 2) {
                    let detail = val.get("detail").map(scalar_text).unwrap_or_default();
                    let _ = writeln!(out, "{pad}{k}: {status} ({detail})");
                } else {
                    let _ = writeln!(out, "{pad}{k}:");
                    render_text(out, val, indent + 1);
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if is_scalar(item) {
                    let _ = writeln!(out, "{pad}- {}", scalar_text(item));
                } else if item.as_array().is_some_and(|a| a.iter().all(is_scalar)) {
                    let parts: Vec<String> = item.as_array().unwrap().iter().map(scalar_text).collect();
                    let _ = writeln!(out, "{pad}- [{}]", parts.join(", "));
                } else {
                    let _ = writeln!(out, "{pad}-");
                    render_text(out, item, indent + 1);
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar_text(other));
        }
    }
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(s) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
