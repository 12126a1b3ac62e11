//! Argument definitions and command dispatch. Every command renders to a
//! string so that output can be tested without spawning the binary.

use std::fmt::Write;

use cfk::complex::ComplexJson;
use cfk::invariants::{d1, d1_from_reduced, tau, tau_from_reduced, InvariantReport};
use cfk::reduction::ReduceOptions;
use cfk::tensor::{sum_knot, sum_via_free};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::checks::{criterion_ids, run_checks};
use crate::examples::{run_example, ExampleReport, Tag};
use crate::expr::{parse_knot_expr, KnotExpr};
use crate::{render, CliError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Ascii,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Pipeline {
    /// Reduce each summand, then tensor with the next one.
    Reduced,
    /// Tensor the free complexes, then compute directly.
    Full,
}

#[derive(Debug, Parser)]
#[command(name = "cfk", version, about = "Knot Floer complexes over F2[U]: reduction, connected sums, tau and d1")]
pub struct Cli {
    /// Truncation depth for reductions.
    #[arg(long, global = true, env = "CFK_DEPTH")]
    pub depth: Option<u32>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Ascii)]
    pub format: Format,
    /// Re-run every reduction at twice the depth and compare (the default).
    #[arg(long, global = true, overrides_with = "no_verify")]
    pub verify: bool,
    /// Skip the doubled-depth stability check.
    #[arg(long, global = true, overrides_with = "verify")]
    pub no_verify: bool,
    /// Seed for the sampled structural checks.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// tau, d1, surgery d-invariants and four-genus bounds.
    Invariants {
        expr: String,
        /// Surgery coefficient N for d(S^3_N(K)).
        #[arg(long, default_value_t = 1)]
        surgery: i64,
        #[arg(long, value_enum, default_value_t = Pipeline::Reduced)]
        pipeline: Pipeline,
    },
    /// The reduced complex of a knot, summands reduced first.
    Reduce { expr: String },
    /// The free complex of a knot (the full tensor product for sums).
    Show {
        expr: String,
        /// Show the reduced complex instead.
        #[arg(long)]
        reduced: bool,
    },
    /// Run the acceptance criteria.
    Verify {
        /// Comma-separated criterion numbers; all by default.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
        /// Run criteria one after another instead of concurrently.
        #[arg(long)]
        sequential: bool,
    },
    /// Reproduce a worked example.
    Examples {
        #[arg(value_enum)]
        tag: Tag,
        /// Family parameter for k_p and j_p.
        #[arg(long)]
        p: Option<i64>,
    },
}

/// Rendered output; `success` is false when a check inside failed.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub success: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, success: true }
    }
}

impl Cli {
    pub fn reduce_options(&self) -> ReduceOptions {
        ReduceOptions { depth: self.depth, verify: !self.no_verify }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output types serialize");
    s.push('\n');
    s
}

fn complex_output(c: &ComplexJson, format: Format) -> String {
    match format {
        Format::Ascii => render::ascii(c),
        Format::Json => json(c),
        Format::Dot => render::dot(c),
    }
}

fn parse(text: &str) -> Result<KnotExpr, CliError> {
    Ok(parse_knot_expr(text)?)
}

fn no_dot(format: Format, command: &str) -> Result<(), CliError> {
    if format == Format::Dot {
        return Err(CliError::Usage(format!("--format dot does not apply to {command}")));
    }
    Ok(())
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let opts = cli.reduce_options();
    match &cli.command {
        Command::Invariants { expr, surgery, pipeline } => {
            no_dot(cli.format, "invariants")?;
            let e = parse(expr)?;
            let parts = e.summands()?;
            let (t, d) = match pipeline {
                Pipeline::Reduced => {
                    let r = sum_knot(&parts, &opts)?;
                    (tau_from_reduced(&r)?, d1_from_reduced(&r)?)
                }
                Pipeline::Full => {
                    let c = sum_via_free(&parts)?;
                    (tau(&c)?, d1(&c)?)
                }
            };
            let report = InvariantReport::new(e.to_string(), t, d, *surgery)?;
            Ok(Output::ok(match cli.format {
                Format::Json => json(&report),
                _ => invariants_text(&report),
            }))
        }
        Command::Reduce { expr } => {
            let r = sum_knot(&parse(expr)?.summands()?, &opts)?;
            Ok(Output::ok(complex_output(&r.to_json(), cli.format)))
        }
        Command::Show { expr, reduced } => {
            let parts = parse(expr)?.summands()?;
            let c = if *reduced { sum_knot(&parts, &opts)?.to_json() } else { sum_via_free(&parts)?.to_json() };
            Ok(Output::ok(complex_output(&c, cli.format)))
        }
        Command::Verify { only, sequential } => {
            no_dot(cli.format, "verify")?;
            let ids: Vec<u8> = if only.is_empty() { criterion_ids().collect() } else { only.clone() };
            if let Some(bad) = ids.iter().find(|id| !criterion_ids().any(|k| k == **id)) {
                return Err(CliError::Usage(format!("no criterion {bad}; they run from 1 to 11")));
            }
            let outcomes = run_checks(&ids, cli.seed, !sequential);
            let success = outcomes.iter().all(|o| o.passed());
            let text = match cli.format {
                Format::Json => json(&outcomes.iter().map(VerifyRecord::from).collect::<Vec<_>>()),
                _ => outcomes.iter().map(|o| format!("{o}\n")).collect(),
            };
            Ok(Output { text, success })
        }
        Command::Examples { tag, p } => {
            let report = run_example(*tag, *p, &opts)?;
            let text = match cli.format {
                Format::Json => json(&report),
                Format::Ascii => example_text(&report),
                Format::Dot => report.figures.iter().map(|f| render::dot(&f.complex)).collect(),
            };
            Ok(Output { text, success: report.success() })
        }
    }
}

/// The per-criterion verdict without timings, which vary between runs.
#[derive(Serialize)]
struct VerifyRecord {
    id: u8,
    title: &'static str,
    passed: bool,
    correct: bool,
    within_budget: bool,
    budget_secs: u64,
    detail: String,
}

impl From<&crate::checks::CheckOutcome> for VerifyRecord {
    fn from(o: &crate::checks::CheckOutcome) -> Self {
        Self {
            id: o.id,
            title: o.title,
            passed: o.passed(),
            correct: o.correct,
            within_budget: o.within_budget(),
            budget_secs: o.budget.as_secs(),
            detail: o.detail.clone(),
        }
    }
}

fn invariants_text(r: &InvariantReport) -> String {
    let b = &r.bounds;
    let stronger = match b.stronger {
        cfk::invariants::StrongerBound::Tau => "tau",
        cfk::invariants::StrongerBound::D1 => "d1",
        cfk::invariants::StrongerBound::Equal => "equal",
    };
    let mut out = String::new();
    let _ = writeln!(out, "knot: {}", r.knot);
    let _ = writeln!(out, "tau: {}", r.tau);
    let _ = writeln!(out, "d1: {}", r.d1);
    let _ = writeln!(out, "d(S^3_{}(K)): {}", r.d_large.n, r.d_large.value);
    let _ = writeln!(out, "d_1/2(S^3_0(K)): {}", r.d_half_zero);
    let _ = writeln!(out, "four-genus bound from tau: {}", b.bound_tau);
    let _ = writeln!(out, "four-genus bound from d1: {}", b.bound_d1);
    let _ = writeln!(out, "stronger bound: {stronger}");
    out
}

fn example_text(r: &ExampleReport) -> String {
    let mut out = String::new();
    for f in &r.figures {
        let _ = writeln!(out, "== {} ==", f.title);
        out.push_str(&render::ascii(&f.complex));
        out.push('\n');
    }
    for v in &r.values {
        let _ = match (&v.expected, v.ok) {
            (None, _) => writeln!(out, "      {} = {}", v.what, v.value),
            (Some(_), true) => writeln!(out, "ok    {} = {}", v.what, v.value),
            (Some(e), false) => writeln!(out, "FAIL  {} = {} (expected {e})", v.what, v.value),
        };
    }
    out
}

/// Error report in the requested format.
pub fn error_text(e: &CliError, format: Format) -> String {
    match format {
        Format::Json => json(&serde_json::json!({ "error": { "kind": e.kind(), "message": e.to_string() } })),
        _ => format!("error: {e}\n"),
    }
}
