//! The `lambda-check` command line: parse flags, build the space, run the
//! requested checks and write a canonical JSON or text report.
//!
//! ```text
//! lambda-check --group triadic --space x1:1 --check axiom3 --expect fail
//! ```
//!
//! Exit status is 0 when every check matches its `--expect` (or, with no
//! expectations, when every check passes), 1 otherwise, 2 on usage errors.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::checker::{run_check, CheckConfig, CheckName, CheckReport};
use crate::group::GroupId;
use crate::space::Space;

pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Expectation {
    Pass,
    Fail,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "lambda-check", version, about = "Seeded checks of the Λ-tree axioms on built-in spaces")]
struct Args {
    /// int, rational, dyadic, triadic, zsqrt2 or lex-int
    #[arg(long)]
    group: GroupId,
    /// interval:a..b, tree:@file, tree:star, x1:λ0, x2, x3:a or l1grid:side
    #[arg(long)]
    space: Option<String>,
    /// metric, axiom1, axiom2, axiom3, unique, fork, condition-a or all (repeatable)
    #[arg(long = "check", required = true)]
    checks: Vec<String>,
    /// pass or fail, paired in order with --check
    #[arg(long = "expect")]
    expect: Vec<Expectation>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long = "chain-depth", default_value_t = 20)]
    chain_depth: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("cannot write {path}: {source}")]
    Output { path: String, source: std::io::Error },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub group: GroupId,
    pub space: Option<String>,
    pub checks: Vec<CheckName>,
    pub expect: Vec<Expectation>,
    pub seed: u64,
    pub samples: usize,
    pub chain_depth: usize,
    pub format: Format,
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn check_config(&self) -> CheckConfig {
        CheckConfig { seed: self.seed, samples: self.samples, numerator_bound: None, chain_depth: self.chain_depth }
    }

    fn build_space(&self) -> Result<Option<Space>, String> {
        self.space
            .as_deref()
            .map(|spec| Space::parse_spec(self.group, spec).map_err(|e| e.to_string()))
            .transpose()
    }
}

pub fn parse_config<I, T>(argv: I) -> Result<RunConfig, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = Args::try_parse_from(argv).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut checks = Vec::new();
    for name in &args.checks {
        if name == "all" {
            checks.extend(CheckName::ALL);
        } else {
            checks.push(name.parse::<CheckName>().map_err(CliError::Config)?);
        }
    }
    if !args.expect.is_empty() && args.expect.len() != checks.len() {
        return Err(CliError::Config(format!(
            "{} expectations for {} checks; give one --expect per check",
            args.expect.len(),
            checks.len()
        )));
    }
    let config = RunConfig {
        group: args.group,
        space: args.space,
        checks,
        expect: args.expect,
        seed: args.seed,
        samples: args.samples,
        chain_depth: args.chain_depth,
        format: args.format,
        out: args.out,
    };
    config.check_config().validate().map_err(CliError::Config)?;
    let space = config.build_space().map_err(CliError::Config)?;
    if space.is_none() {
        if let Some(c) = config.checks.iter().find(|c| c.needs_space()) {
            return Err(CliError::Config(format!("check `{c}` needs --space")));
        }
    }
    Ok(config)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    #[serde(flatten)]
    pub report: CheckReport,
    pub expect: Option<Expectation>,
    /// Whether the outcome agrees with the expectation (with none, whether it passed).
    pub as_expected: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub version: u32,
    pub tool: String,
    pub config: RunConfig,
    pub checks: Vec<CheckOutcome>,
    pub error: Option<String>,
    pub exit_code: i32,
}

pub fn run(config: &RunConfig) -> RunReport {
    let mut report = RunReport {
        version: REPORT_VERSION,
        tool: format!("lambda-check {}", env!("CARGO_PKG_VERSION")),
        config: config.clone(),
        checks: Vec::new(),
        error: None,
        exit_code: 1,
    };
    let space = match config.build_space() {
        Ok(space) => space,
        Err(e) => {
            report.error = Some(e);
            return report;
        }
    };
    let cfg = config.check_config();
    let results: Vec<Result<CheckReport, String>> = std::thread::scope(|scope| {
        let handles: Vec<_> = config
            .checks
            .iter()
            .map(|&name| {
                let (space, cfg) = (space.as_ref(), &cfg);
                scope.spawn(move || run_check(name, config.group, space, cfg))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("check thread panicked")).collect()
    });
    for (i, result) in results.into_iter().enumerate() {
        match result {
            Ok(check) => {
                let expect = config.expect.get(i).copied();
                let wanted = expect.is_none_or(|e| e == Expectation::Pass);
                report.checks.push(CheckOutcome { as_expected: check.pass == wanted, report: check, expect });
            }
            Err(e) => {
                report.error = Some(e);
                return report;
            }
        }
    }
    report.exit_code = if report.checks.iter().all(|c| c.as_expected) { 0 } else { 1 };
    report
}

/// Canonical JSON: object keys sorted, two-space indentation, trailing newline.
pub fn to_json(report: &RunReport) -> String {
    let value = serde_json::to_value(report).expect("report serializes");
    let mut out = serde_json::to_string_pretty(&value).expect("value serializes");
    out.push('\n');
    out
}

pub fn to_text(report: &RunReport) -> String {
    let mut out = String::new();
    let c = &report.config;
    let _ = writeln!(
        out,
        "{} | group {} | space {} | seed {} | samples {}",
        report.tool,
        c.group,
        c.space.as_deref().unwrap_or("-"),
        c.seed,
        c.samples
    );
    for outcome in &report.checks {
        let r = &outcome.report;
        let verdict = if r.pass { "PASS" } else { "FAIL" };
        let expected = match outcome.expect {
            Some(e) if outcome.as_expected => format!(" (expected {})", if e == Expectation::Pass { "pass" } else { "fail" }),
            Some(_) => " (UNEXPECTED)".to_string(),
            None => String::new(),
        };
        let mut line = format!("{:<12} {verdict}{expected} [{} samples]", r.name.as_str(), r.samples);
        if let Some(w) = &r.witness {
            let _ = write!(line, " {}: {}", w.relation, w.statement);
            let points: Vec<String> = w.points.iter().map(|(k, v)| format!("{k}={v}")).collect();
            if !points.is_empty() {
                let _ = write!(line, " | {}", points.join(" "));
            }
            if !w.chain.is_empty() {
                let _ = write!(line, " | chain {}", w.chain.join(" < "));
            }
        }
        if let Some(note) = &r.note {
            let _ = write!(line, " | note: {note}");
        }
        out.push_str(&line);
        out.push('\n');
    }
    if let Some(e) = &report.error {
        let _ = writeln!(out, "error: {e}");
    }
    let _ = writeln!(out, "exit {}", report.exit_code);
    out
}

pub fn emit(report: &RunReport, format: Format) -> String {
    match format {
        Format::Json => to_json(report),
        Format::Text => to_text(report),
    }
}

/// Entry point of the binary; returns the process exit status.
pub fn main_with<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match parse_config(argv) {
        Ok(config) => config,
        Err(CliError::Usage(msg)) => {
            // clap renders --help and --version as "errors" too.
            let help = msg.starts_with("Seeded") || msg.starts_with("lambda-check ");
            let _ = if help { write!(stdout, "{msg}") } else { write!(stderr, "{msg}") };
            return if help { 0 } else { 2 };
        }
        Err(e) => {
            let _ = writeln!(stderr, "lambda-check: {e}");
            return 2;
        }
    };
    let report = run(&config);
    let bytes = emit(&report, config.format);
    match &config.out {
        Some(path) => {
            if let Err(source) = std::fs::write(path, &bytes) {
                let _ = writeln!(stderr, "lambda-check: {}", CliError::Output { path: path.display().to_string(), source });
                return 2;
            }
        }
        None => {
            let _ = stdout.write_all(bytes.as_bytes());
        }
    }
    if let Some(e) = &report.error {
        let _ = writeln!(stderr, "lambda-check: {e}");
    }
    report.exit_code
}
