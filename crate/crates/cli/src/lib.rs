//! Command-line front end for the `tribodet` library.
//!
//! [`run`] parses an argument list, writes results to `out` and diagnostics to
//! `err`, and returns the process exit status: 0 on success, 1 when an identity
//! check or a cross-method comparison fails, 2 on usage or parameter errors.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use tribodet::determinant::{make_entries, EntryRule, Method};
use tribodet::identities::{check_cases, registry, IdentityCase, IdentityReport, Summary};
use tribodet::sequences::{seq_range, SequenceKind};
use tribodet::series::{expand_rational, gf_catalog, GfFamily};
use tribodet::tilings::{count_tilings, enumerate_tilings, PieceSet, Placed};
use tribodet::{Error, ExactInt};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const DEFAULT_R_SET: [u32; 7] = [2, 3, 4, 5, 6, 7, 8];
pub const DEFAULT_NMAX: u32 = 24;

#[derive(Debug, Parser)]
#[command(
    name = "tribodet",
    version,
    about = "Exact Toeplitz-Hessenberg determinants over tribonacci-family sequences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Terms of a sequence family over an index range.
    Seq(SeqArgs),
    /// Determinant of a sequence-derived Toeplitz-Hessenberg matrix.
    Det(DetArgs),
    /// Count (and optionally list) tilings of a strip.
    Tilings(TilingArgs),
    /// Coefficients of a catalogued generating function.
    Gf(GfArgs),
    /// Check the identity registry.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputFormat {
    #[default]
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct SeqArgs {
    /// Family name, e.g. tribonacci or gen-tribonacci.
    kind: String,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    from: i64,
    #[arg(long)]
    to: i64,
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct DetArgs {
    #[arg(long, allow_negative_numbers = true)]
    a0: i64,
    #[arg(long)]
    kind: String,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    start: usize,
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    stride: u8,
    #[arg(short = 'n')]
    n: usize,
    /// recurrence, trudi-partitions, trudi-compositions, dense or all.
    #[arg(long, default_value = "recurrence")]
    method: String,
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct TilingArgs {
    #[arg(long)]
    length: usize,
    /// Comma-separated `length[:colors]` list, e.g. `1:2,3`.
    #[arg(long)]
    pieces: String,
    #[arg(long)]
    enumerate: bool,
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct GfArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    terms: usize,
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Comma-separated identity ids; defaults to the whole registry.
    #[arg(long, value_delimiter = ',')]
    ids: Option<Vec<String>>,
    /// Comma-separated r values.
    #[arg(long = "r-set", value_delimiter = ',')]
    r_set: Option<Vec<u32>>,
    #[arg(long, default_value_t = DEFAULT_NMAX)]
    nmax: u32,
    /// Stop reporting after the first failing record.
    #[arg(long)]
    fail_fast: bool,
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
}

/// One verification record, serialized identically to json and csv.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportRecord {
    pub id: String,
    pub r: u32,
    pub n: u32,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

impl From<&IdentityReport> for ReportRecord {
    fn from(rep: &IdentityReport) -> Self {
        ReportRecord {
            id: rep.id.clone(),
            r: rep.r,
            n: rep.n,
            lhs: rep.lhs.to_string(),
            rhs: rep.rhs.to_string(),
            pass: rep.pass,
        }
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(std::io::Error::other(e))
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(std::io::Error::other(e))
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Runs the CLI against the standard identity registry.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    run_with_registry(args, &registry(), out, err)
}

/// Runs the CLI with `cases` as the identity registry used by `verify`.
pub fn run_with_registry<I, S>(args: I, cases: &[IdentityCase], out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
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
    let outcome = match cli.command {
        Command::Seq(a) => seq(a, out),
        Command::Det(a) => det(a, out, err),
        Command::Tilings(a) => tilings(a, out),
        Command::Gf(a) => gf(a, out),
        Command::Verify(a) => verify(a, cases, out),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn join<T: ToString>(values: &[T]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn write_csv<T: Serialize>(out: &mut dyn Write, rows: &[T]) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(&mut *out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct TermRow {
    index: i64,
    value: String,
}

#[derive(Serialize)]
struct SeqDoc {
    kind: String,
    r: Option<u32>,
    from: i64,
    to: i64,
    terms: Vec<TermRow>,
}

fn seq(a: SeqArgs, out: &mut dyn Write) -> Outcome {
    let kind = SequenceKind::from_name(&a.kind, a.r)?;
    let terms: Vec<ExactInt> = seq_range(kind, a.from, a.to)?;
    match a.format {
        OutputFormat::Plain => writeln!(out, "{}", join(&terms))?,
        OutputFormat::Json | OutputFormat::Csv => {
            let rows: Vec<TermRow> = terms
                .iter()
                .enumerate()
                .map(|(i, v)| TermRow { index: a.from + i as i64, value: v.to_string() })
                .collect();
            if a.format == OutputFormat::Json {
                let doc = SeqDoc { kind: kind.name().to_string(), r: kind.r(), from: a.from, to: a.to, terms: rows };
                write_json(out, &doc)?;
            } else {
                write_csv(out, &rows)?;
            }
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct MethodRow {
    method: &'static str,
    value: String,
}

#[derive(Serialize)]
struct DetDoc {
    rule: String,
    n: usize,
    entries: Vec<String>,
    results: Vec<MethodRow>,
    agree: bool,
}

fn det(a: DetArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let kind = SequenceKind::from_name(&a.kind, a.r)?;
    if a.a0 == 0 {
        return Err(Failure::Usage("a0 must be nonzero".into()));
    }
    let methods: Vec<Method> = if a.method == "all" { Method::ALL.to_vec() } else { vec![a.method.parse()?] };
    let rule = EntryRule::new(kind, a.start, usize::from(a.stride), a.a0);
    let spec = make_entries::<ExactInt>(&rule, a.n)?;
    let mut results = Vec::with_capacity(methods.len());
    for m in &methods {
        results.push(MethodRow { method: m.name(), value: m.evaluate(&spec)?.to_string() });
    }
    let agree = results.windows(2).all(|w| w[0].value == w[1].value);
    match a.format {
        OutputFormat::Plain if results.len() == 1 => writeln!(out, "{}", results[0].value)?,
        OutputFormat::Plain => {
            for row in &results {
                writeln!(out, "{} {}", row.method, row.value)?;
            }
        }
        OutputFormat::Json => {
            let doc = DetDoc {
                rule: rule.to_string(),
                n: a.n,
                entries: spec.entries().iter().map(ToString::to_string).collect(),
                results,
                agree,
            };
            write_json(out, &doc)?;
        }
        OutputFormat::Csv => write_csv(out, &results)?,
    }
    if agree {
        Ok(EXIT_OK)
    } else {
        writeln!(err, "error: evaluation methods disagree")?;
        Ok(EXIT_CHECK_FAILED)
    }
}

fn render_tiling(tiling: &[Placed], pieces: &PieceSet) -> String {
    let colored = |len: u32| pieces.pieces().iter().any(|p| p.length == len && p.colors > 1);
    tiling
        .iter()
        .map(|p| if colored(p.length) { format!("{}:{}", p.length, p.color) } else { p.length.to_string() })
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Serialize)]
struct TilingDoc {
    length: usize,
    pieces: String,
    count: String,
    tilings: Option<Vec<String>>,
}

#[derive(Serialize)]
struct TilingRow {
    tiling: String,
}

fn tilings(a: TilingArgs, out: &mut dyn Write) -> Outcome {
    let pieces: PieceSet = a.pieces.parse()?;
    let count: ExactInt = count_tilings(a.length, &pieces);
    let listed = if a.enumerate {
        let all = enumerate_tilings(a.length, &pieces)?;
        Some(all.iter().map(|t| render_tiling(t, &pieces)).collect::<Vec<_>>())
    } else {
        None
    };
    match a.format {
        OutputFormat::Plain => {
            writeln!(out, "{count}")?;
            for t in listed.iter().flatten() {
                writeln!(out, "{t}")?;
            }
        }
        OutputFormat::Json => {
            let doc =
                TilingDoc { length: a.length, pieces: pieces.to_string(), count: count.to_string(), tilings: listed };
            write_json(out, &doc)?;
        }
        OutputFormat::Csv => match listed {
            Some(list) => write_csv(out, &list.into_iter().map(|tiling| TilingRow { tiling }).collect::<Vec<_>>())?,
            None => {
                #[derive(Serialize)]
                struct CountRow {
                    length: usize,
                    pieces: String,
                    count: String,
                }
                let row = CountRow { length: a.length, pieces: pieces.to_string(), count: count.to_string() };
                write_csv(out, &[row])?;
            }
        },
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct GfDoc {
    family: String,
    r: u32,
    numerator: String,
    denominator: String,
    coefficients: Vec<TermRow>,
}

fn gf(a: GfArgs, out: &mut dyn Write) -> Outcome {
    let family: GfFamily = a.family.parse()?;
    let r = match a.r {
        Some(r) => r,
        None if family.is_tribonacci_only() => 3,
        None => return Err(Failure::Usage(format!("family `{family}` needs --r"))),
    };
    if a.terms == 0 {
        return Err(Failure::Usage("--terms must be positive".into()));
    }
    let series = gf_catalog::<ExactInt>(family, r)?;
    let coeffs = expand_rational(&series, a.terms)?;
    match a.format {
        OutputFormat::Plain => writeln!(out, "{}", join(&coeffs))?,
        OutputFormat::Json | OutputFormat::Csv => {
            let rows: Vec<TermRow> =
                coeffs.iter().enumerate().map(|(i, v)| TermRow { index: i as i64 + 1, value: v.to_string() }).collect();
            if a.format == OutputFormat::Json {
                let doc = GfDoc {
                    family: family.to_string(),
                    r,
                    numerator: series.num.to_string(),
                    denominator: series.den.to_string(),
                    coefficients: rows,
                };
                write_json(out, &doc)?;
            } else {
                write_csv(out, &rows)?;
            }
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct SummaryDoc {
    total: usize,
    passed: usize,
    failed: usize,
}

#[derive(Serialize)]
struct VerifyDoc {
    reports: Vec<ReportRecord>,
    summary: SummaryDoc,
}

fn verify(a: VerifyArgs, cases: &[IdentityCase], out: &mut dyn Write) -> Outcome {
    let r_set = a.r_set.unwrap_or_else(|| DEFAULT_R_SET.to_vec());
    let verification = check_cases(cases, &r_set, a.nmax, a.ids.as_deref())?;
    let mut reports = verification.reports;
    let mut summary = verification.summary;
    if a.fail_fast {
        if let Some(first) = reports.iter().position(|r| !r.pass) {
            reports.truncate(first + 1);
            summary = Summary { total: reports.len(), passed: first, failed: 1 };
        }
    }
    let records: Vec<ReportRecord> = reports.iter().map(ReportRecord::from).collect();
    match a.format {
        OutputFormat::Plain => {
            for rec in &records {
                let verdict = if rec.pass { "pass" } else { "FAIL" };
                writeln!(out, "{} r={} n={} lhs={} rhs={} {verdict}", rec.id, rec.r, rec.n, rec.lhs, rec.rhs)?;
            }
            writeln!(out, "checked {}, passed {}, failed {}", summary.total, summary.passed, summary.failed)?;
        }
        OutputFormat::Json => {
            let doc = VerifyDoc {
                reports: records,
                summary: SummaryDoc { total: summary.total, passed: summary.passed, failed: summary.failed },
            };
            write_json(out, &doc)?;
        }
        OutputFormat::Csv => write_csv(out, &records)?,
    }
    Ok(if summary.failed == 0 { EXIT_OK } else { EXIT_CHECK_FAILED })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("tribodet").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn seq_plain() {
        let (code, out, _) = call(&["seq", "tribonacci", "--from", "0", "--to", "10", "--format", "plain"]);
        assert_eq!(code, 0);
        assert_eq!(out, "0 0 1 1 2 4 7 13 24 44 81\n");
        let (code, out, _) = call(&["seq", "gen-padovan", "--r", "4", "--from", "0", "--to", "4"]);
        assert_eq!((code, out.as_str()), (0, "1 0 0 0 1\n"));
    }

    #[test]
    fn seq_errors_exit_two() {
        assert_eq!(call(&["seq", "tribonacci", "--from", "5", "--to", "2"]).0, 2);
        assert_eq!(call(&["seq", "gen-tribonacci", "--from", "0", "--to", "2"]).0, 2);
        assert_eq!(call(&["seq", "nonsense", "--from", "0", "--to", "2"]).0, 2);
        let (code, _, err) = call(&["frobnicate"]);
        assert_eq!(code, 2);
        assert!(err.contains("Usage"));
    }

    #[test]
    fn det_all_methods() {
        let args =
            ["det", "--a0", "1", "--kind", "tribonacci", "--start", "3", "--stride", "2", "-n", "4", "--method", "all"];
        let (code, out, _) = call(&args);
        assert_eq!(code, 0);
        assert_eq!(out, "recurrence -13\ntrudi-partitions -13\ntrudi-compositions -13\ndense -13\n");
        let (code, out, _) =
            call(&["det", "--a0", "-1", "--kind", "tribonacci", "--start", "0", "--stride", "2", "-n", "6"]);
        assert_eq!((code, out.as_str()), (0, "100\n"));
        assert_eq!(
            call(&["det", "--a0", "1", "--kind", "tribonacci", "--start", "0", "--stride", "3", "-n", "4"]).0,
            2
        );
        assert_eq!(
            call(&["det", "--a0", "0", "--kind", "tribonacci", "--start", "0", "--stride", "1", "-n", "4"]).0,
            2
        );
    }

    #[test]
    fn tilings_and_gf() {
        let (code, out, _) = call(&["tilings", "--length", "3", "--pieces", "1,3", "--enumerate"]);
        assert_eq!((code, out.as_str()), (0, "2\n1 1 1\n3\n"));
        let (code, out, _) = call(&["tilings", "--length", "4", "--pieces", "1:2,3"]);
        assert_eq!((code, out.as_str()), (0, "20\n"));
        assert_eq!(call(&["tilings", "--length", "19", "--pieces", "1,2", "--enumerate"]).0, 2);
        let (code, out, _) = call(&["gf", "--family", "trib-even-entries-neg", "--terms", "5"]);
        assert_eq!((code, out.as_str()), (0, "0 1 2 8 28\n"));
        assert_eq!(call(&["gf", "--family", "even-entries", "--terms", "5"]).0, 2);
        assert_eq!(call(&["gf", "--family", "shifted-odd-entries", "--r", "4", "--terms", "5"]).0, 2);
    }

    #[test]
    fn verify_formats_carry_identical_records() {
        let (code, json, _) = call(&["verify", "--ids", "I-08", "--nmax", "10", "--format", "json"]);
        assert_eq!(code, 0);
        let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(doc["summary"]["failed"], 0);
        let reports = doc["reports"].as_array().unwrap();
        assert_eq!(reports.len(), 7);
        assert_eq!(reports[0]["lhs"], "0");

        let (_, csv_text, _) = call(&["verify", "--ids", "I-08", "--nmax", "10", "--format", "csv"]);
        let mut rdr = csv::Reader::from_reader(csv_text.as_bytes());
        assert_eq!(rdr.headers().unwrap(), vec!["id", "r", "n", "lhs", "rhs", "pass"]);
        let rows: Vec<csv::StringRecord> = rdr.records().map(|r| r.unwrap()).collect();
        assert_eq!(rows.len(), reports.len());
        for (row, rep) in rows.iter().zip(reports) {
            assert_eq!(&row[0], rep["id"].as_str().unwrap());
            assert_eq!(row[1].parse::<u64>().unwrap(), rep["r"].as_u64().unwrap());
            assert_eq!(row[2].parse::<u64>().unwrap(), rep["n"].as_u64().unwrap());
            assert_eq!(&row[3], rep["lhs"].as_str().unwrap());
            assert_eq!(&row[4], rep["rhs"].as_str().unwrap());
            assert_eq!(row[5].parse::<bool>().unwrap(), rep["pass"].as_bool().unwrap());
        }
    }

    #[test]
    fn verify_fail_fast_and_unknown_ids() {
        let (code, out, _) = call(&["verify", "--ids", "I-19", "--r-set", "4", "--nmax", "6", "--fail-fast"]);
        assert_eq!(code, 1);
        assert_eq!(out, "I-19 r=4 n=1 lhs=2 rhs=1 FAIL\nchecked 1, passed 0, failed 1\n");
        assert_eq!(call(&["verify", "--ids", "I-404"]).0, 2);
    }
}
