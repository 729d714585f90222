//! Command-line front end. Every command writes deterministic output for a
//! fixed set of flags.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 resource limit,
//! 3 verification failure.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use crate::budget::{Budget, DEFAULT_N_MAX};
use crate::error::{Error, Result};
use crate::field::{format_rational, parse_rational_list, FieldTag};
use crate::hales_jewett::{
    find_line_incremental, find_monochromatic_line, hj_number_exact, line_cells, Coloring,
};
use crate::hyperelliptic::{
    enumerate_points, verify_certificate, CertificateRecord, SplitHyperellipticCurve,
};
use crate::quadratic_rank::{
    build_independent_family, verify_family, EllipticCurveQ, FamilyConfig, FamilyDocument,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_RESOURCE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "hj-field",
    version,
    about = "Points from monochromatic lines, and certified rank growth"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Hales-Jewett line search and exact numbers.
    #[command(subcommand)]
    Hj(HjCommand),
    /// Certified points on y^2 = prod (x - a_i) over fp:P or qp:P:K.
    Points(PointsArgs),
    /// Independent non-torsion points over a tower of quadratic fields.
    Rank(RankArgs),
    /// Re-check certificates or a family document.
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
enum HjCommand {
    /// Find the first monochromatic line of a coloring.
    FindLine(FindLineArgs),
    /// Least N such that every k-coloring of [1,m]^N has a monochromatic line.
    Number(NumberArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args)]
struct FindLineArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    k: usize,
    /// Coloring file, sparse or dense form.
    #[arg(long, conflicts_with_all = ["random", "seed"], required_unless_present = "random")]
    coloring: Option<PathBuf>,
    /// Use a seeded pseudorandom coloring.
    #[arg(long, requires = "seed")]
    random: bool,
    #[arg(long)]
    seed: Option<u64>,
    /// Dimension; with --random and no --n, N = 1..=n-max is searched.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_N_MAX)]
    n_max: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct NumberArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n_cap: usize,
}

#[derive(Debug, Args)]
struct PointsArgs {
    /// fp:P or qp:P:K.
    #[arg(long)]
    field: String,
    /// Comma-separated roots, an even number of them.
    #[arg(long, allow_hyphen_values = true)]
    roots: String,
    /// Distinct x-coordinates to certify.
    #[arg(long, default_value_t = 10)]
    count: usize,
    #[arg(long, default_value_t = DEFAULT_N_MAX)]
    n_max: usize,
    /// Parameters c to try at most.
    #[arg(long, default_value_t = 10_000)]
    max_c: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Args)]
struct RankArgs {
    /// Three distinct integers.
    #[arg(long, allow_hyphen_values = true)]
    roots: String,
    #[arg(long, default_value_t = 5)]
    count: usize,
    #[arg(long, default_value_t = FamilyConfig::default().retry_budget)]
    retries: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// A certificate, an array of certificates, or a family document.
    #[arg(long)]
    certificate: PathBuf,
}

/// Runs one command; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let budget = Budget::from_env();
    let result = match cli.command {
        Command::Hj(HjCommand::FindLine(a)) => find_line(a, &budget, out),
        Command::Hj(HjCommand::Number(a)) => number(a, &budget, out),
        Command::Points(a) => points(a, &budget, out, err),
        Command::Rank(a) => rank(a, &budget, out, err),
        Command::Verify(a) => verify(a, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_resource_limit() {
                EXIT_RESOURCE
            } else {
                EXIT_USAGE
            }
        }
    }
}

fn reject_csv(format: Format) -> Result<()> {
    if format == Format::Csv {
        return Err(Error::Parse(
            "csv output is only available for point lists".into(),
        ));
    }
    Ok(())
}

fn find_line(a: FindLineArgs, budget: &Budget, out: &mut dyn Write) -> Result<i32> {
    reject_csv(a.format)?;
    let found = match (&a.coloring, a.n) {
        (Some(path), n) => {
            let coloring = Coloring::parse(&fs::read_to_string(path)?)?;
            if coloring.m() != a.m || coloring.k() != a.k || n.is_some_and(|n| n != coloring.n()) {
                return Err(Error::Parse(format!(
                    "file holds a {}-coloring of [1,{}]^{}, flags disagree",
                    coloring.k(),
                    coloring.m(),
                    coloring.n()
                )));
            }
            find_monochromatic_line(&coloring).map(|(t, c)| (coloring.n(), t, c))
        }
        (None, Some(n)) => {
            let coloring = Coloring::random(
                a.m,
                n,
                a.k,
                a.seed.expect("required by clap"),
                budget.max_cells,
            )?;
            find_monochromatic_line(&coloring).map(|(t, c)| (n, t, c))
        }
        (None, None) => {
            let seed = a.seed.expect("required by clap");
            let (m, k, cap) = (a.m, a.k, budget.max_cells);
            find_line_incremental(
                |n| Coloring::random(m, n, k, seed, cap).map(Some),
                m,
                a.n_max,
                cap,
            )?
            .map(|f| (f.n, f.template, f.color))
        }
    };
    match (a.format, found) {
        (Format::Json, Some((n, t, color))) => {
            let cells: Vec<String> = line_cells(&t, a.m)?.iter().map(|c| c.to_string()).collect();
            let v = serde_json::json!({"N": n, "template": t.to_string(), "color": color, "cells": cells});
            writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
        }
        (Format::Json, None) => writeln!(out, "{}", serde_json::json!({ "line": null }))?,
        (_, Some((n, t, color))) => writeln!(out, "N={n} template={t} color={color}")?,
        (_, None) => writeln!(out, "none")?,
    }
    Ok(EXIT_OK)
}

fn number(a: NumberArgs, budget: &Budget, out: &mut dyn Write) -> Result<i32> {
    match hj_number_exact(a.m, a.k, a.n_cap, budget.backtrack_cells)? {
        Some(n) => writeln!(out, "{n}")?,
        None => writeln!(out, "none")?,
    }
    Ok(EXIT_OK)
}

fn points(a: PointsArgs, budget: &Budget, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let field: FieldTag = a.field.parse()?;
    if field == FieldTag::RationalField {
        return Err(Error::UnsupportedField {
            field: a.field,
            reason: "points needs fp:P or qp:P:K".into(),
        });
    }
    let curve = SplitHyperellipticCurve::new(field, &parse_rational_list(&a.roots)?)?;
    let run = enumerate_points(
        &curve,
        field.parameter_stream().take(a.max_c),
        a.count,
        a.n_max,
        budget,
    )?;
    let summary = format!(
        "admissible={} successes={} failures={} skipped={} distinct_x={} family_size={} lower_bound={}",
        run.admissible,
        run.successes,
        run.failures,
        run.skipped,
        run.distinct_x(),
        run.family_size,
        run.distinct_lower_bound()
    );
    match a.format {
        Format::Json => {
            let records: Vec<CertificateRecord> = run
                .certificates
                .iter()
                .map(CertificateRecord::from)
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&records)?)?;
            writeln!(err, "{summary}")?;
        }
        Format::Csv => {
            writeln!(out, "x,y")?;
            for c in &run.certificates {
                writeln!(out, "{}", c.csv_row())?;
            }
            writeln!(err, "{summary}")?;
        }
        Format::Text => {
            writeln!(out, "{summary}")?;
            for c in &run.certificates {
                writeln!(
                    out,
                    "c={} N={} template={} x={} y={}",
                    format_rational(&c.c),
                    c.n,
                    c.template,
                    format_rational(&c.x),
                    format_rational(&c.y)
                )?;
            }
        }
    }
    if run.certificates.len() < a.count {
        writeln!(
            err,
            "found {} of {} requested points",
            run.certificates.len(),
            a.count
        )?;
    }
    Ok(EXIT_OK)
}

fn parse_int_roots(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("not an integer root: {t:?}")))
        })
        .collect()
}

fn rank(a: RankArgs, budget: &Budget, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    reject_csv(a.format)?;
    let curve = EllipticCurveQ::from_slice(&parse_int_roots(&a.roots)?)?;
    let config = FamilyConfig {
        retry_budget: a.retries,
        trial_division_bound: budget.trial_division_bound,
        ..FamilyConfig::default()
    };
    let family = build_independent_family(&curve, a.count, &config)?;
    match a.format {
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&family.to_document())?
        )?,
        _ => {
            for m in &family.members {
                writeln!(
                    out,
                    "p={} x_target={} c={} d={} w={} B={} p1={} p2={}",
                    m.p_steer,
                    m.x_target,
                    m.c,
                    m.d(),
                    format_rational(&m.w()),
                    m.torsion.bound,
                    m.torsion.p1,
                    m.torsion.p2
                )?;
            }
        }
    }
    if let Some(d) = &family.diagnostic {
        writeln!(err, "incomplete family: {d}")?;
        return Ok(EXIT_RESOURCE);
    }
    Ok(EXIT_OK)
}

fn verify(a: VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let value: Value = serde_json::from_str(&fs::read_to_string(&a.certificate)?)?;
    let reject = |err: &mut dyn Write, what: String, reason: String| -> Result<i32> {
        writeln!(err, "{what}: FAIL {reason}")?;
        Ok(EXIT_VERIFY)
    };
    if value.get("records").is_some() {
        let family = match serde_json::from_value::<FamilyDocument>(value)
            .map_err(Error::from)
            .and_then(|d| d.to_family())
        {
            Ok(f) => f,
            Err(e) => return reject(err, "family".into(), e.to_string()),
        };
        if let Err(reason) = verify_family(&family) {
            return reject(err, "family".into(), reason);
        }
        writeln!(out, "family: ok ({} members)", family.members.len())?;
        return Ok(EXIT_OK);
    }
    let items = match value {
        Value::Array(items) => items,
        single => vec![single],
    };
    let mut code = EXIT_OK;
    for (i, item) in items.into_iter().enumerate() {
        let what = format!("certificate {}", i + 1);
        let cert = match serde_json::from_value::<CertificateRecord>(item)
            .map_err(Error::from)
            .and_then(|r| r.to_certificate())
        {
            Ok(c) => c,
            Err(e) => {
                code = reject(err, what, e.to_string())?;
                continue;
            }
        };
        match verify_certificate(&cert.curve, &cert) {
            Ok(()) => writeln!(out, "{what}: ok")?,
            Err(f) => code = reject(err, what, f.to_string())?,
        }
    }
    Ok(code)
}
