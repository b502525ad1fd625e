mod commands;
mod suites;

use algcomb::{Error, Guards, Result};
use clap::{CommandFactory, FromArgMatches, Parser, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "algcomb", version, about = "Exact checkers, constructions and brute-force oracles for algebraic combinatorics")]
pub struct Cli {
    /// Input: a file path, inline JSON (or a multi-line edge list), or `-` for stdin.
    #[arg(long = "in", global = true, value_name = "PATH|JSON")]
    input: Option<String>,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Raise or lower a search budget, e.g. `--guard kakeya_points=16`.
    #[arg(long = "guard", global = true, value_name = "NAME=VALUE", value_parser = parse_guard)]
    guards: Vec<(String, u128)>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: commands::Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

fn parse_guard(s: &str) -> std::result::Result<(String, u128), String> {
    let (name, value) = s.split_once('=').ok_or_else(|| format!("expected NAME=VALUE, got `{s}`"))?;
    let value = value.trim().replace('_', "").parse().map_err(|e| format!("guard value `{value}`: {e}"))?;
    Ok((name.trim().to_string(), value))
}

/// What every handler sees: raw input, seed and budgets.
pub struct Ctx {
    input: Option<String>,
    pub seed: u64,
    pub guards: Guards,
}

impl Ctx {
    pub fn text(&self) -> Result<String> {
        match self.input.as_deref() {
            None => Err(Error::InvalidInput("this command needs --in".into())),
            Some("-") => {
                let mut s = String::new();
                std::io::stdin()
                    .read_to_string(&mut s)
                    .map_err(|e| Error::InvalidInput(format!("reading stdin: {e}")))?;
                Ok(s)
            }
            Some(s) if s.trim_start().starts_with(['{', '[']) => Ok(s.to_string()),
            Some(s) if s.contains('\n') && !std::path::Path::new(s).exists() => Ok(s.to_string()),
            Some(path) => {
                std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("reading {path}: {e}")))
            }
        }
    }

    pub fn json<T: serde::de::DeserializeOwned>(&self) -> Result<T> {
        algcomb::io::from_json(&self.text()?)
    }
}

/// A finished check: the report and whether every asserted property held.
pub struct Outcome {
    pub report: Value,
    pub ok: bool,
}

impl Outcome {
    pub fn new<T: Serialize>(report: &T, ok: bool) -> Result<Self> {
        let report =
            serde_json::to_value(report).map_err(|e| Error::InvalidInput(format!("report not serialisable: {e}")))?;
        Ok(Outcome { report, ok })
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidInput(_) => "invalid_input",
        Error::DimensionMismatch(_) => "dimension_mismatch",
        Error::NonPrime(_) => "non_prime",
        Error::GuardExceeded { .. } => "guard_exceeded",
        Error::Precondition(_) => "precondition",
        Error::TheoremViolation(_) => "theorem_violation",
    }
}

fn command_path(m: &clap::ArgMatches) -> String {
    let mut parts = Vec::new();
    let mut cur = m;
    while let Some((name, sub)) = cur.subcommand() {
        parts.push(name.to_string());
        cur = sub;
    }
    if let Some(name) = m.subcommand_matches("suite").and_then(|s| s.get_one::<commands::SuiteName>("name")) {
        parts.push(format!("{name:?}").to_lowercase());
    }
    parts.join(" ")
}

fn render_text(env: &Value) -> String {
    let mut out = String::new();
    for key in ["command", "status"] {
        out.push_str(&format!("{key}: {}\n", env[key].as_str().unwrap_or_default()));
    }
    out.push_str(&format!("seed: {}\n", env["seed"]));
    match &env["report"] {
        Value::Object(map) => {
            for (k, v) in map {
                out.push_str(&format!("{k}: {v}\n"));
            }
        }
        v => out.push_str(&format!("report: {v}\n")),
    }
    out
}

fn main() -> ExitCode {
    let matches = match Cli::command().try_get_matches() {
        Ok(m) => m,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(2);
        }
    };
    let path = command_path(&matches);

    let mut guards = Guards::default();
    let mut overrides = serde_json::Map::new();
    let mut result = Ok(());
    for (name, value) in &cli.guards {
        result = result.and_then(|_| guards.set(name, *value));
        overrides.insert(name.clone(), json!(value.to_string()));
    }
    let ctx = Ctx { input: cli.input.clone(), seed: cli.seed, guards };
    let outcome = result.and_then(|_| commands::dispatch(&cli.command, &ctx));

    let (status, report, code) = match outcome {
        Ok(o) if o.ok => ("pass", o.report, 0),
        Ok(o) => ("fail", o.report, 1),
        Err(e) => {
            eprintln!("algcomb: {e}");
            let code = if matches!(e, Error::TheoremViolation(_)) { 1 } else { 2 };
            let status = if code == 1 { "fail" } else { "error" };
            (status, json!({ "error": error_kind(&e), "message": e.to_string() }), code)
        }
    };
    let mut env = json!({
        "version": env!("CARGO_PKG_VERSION"),
        "seed": cli.seed,
        "command": path,
        "status": status,
        "report": report,
    });
    if !overrides.is_empty() {
        env["guards"] = Value::Object(overrides);
    }
    let mut doc = match cli.format {
        Format::Json => serde_json::to_string_pretty(&env).expect("JSON values serialise"),
        Format::Text => render_text(&env),
    };
    if !doc.ends_with('\n') {
        doc.push('\n');
    }
    let written = match &cli.out {
        Some(p) => std::fs::write(p, doc.as_bytes()),
        None => std::io::stdout().lock().write_all(doc.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("algcomb: writing report: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
