//! The `vcirc` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::addcode::vc_code;
use crate::error::Error;
use crate::gf::{Field, FieldRef};
use crate::properties::check_ring_properties;
use crate::search::{self, parse_table, verify_table, SearchConfig, SearchMode};
use crate::veccirc::{vec_circulant, vector_cyclic_shift, FieldVector, ShiftVector};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Parser, Debug)]
#[command(
    name = "vcirc",
    version,
    about = "Vector-circulant matrices over finite fields and vector-circulant based additive codes over GF(4)"
)]
pub struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Apply the lambda-vector-cyclic shift repeatedly
    Shift {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        v: String,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        /// Field order
        #[arg(long, default_value_t = 4)]
        q: u32,
    },
    /// Print cir_lambda(v)
    Circulant {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        v: String,
        #[arg(long, default_value_t = 4)]
        q: u32,
    },
    /// Randomized check of the ring and algebra properties
    RingCheck {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u32,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Parameters of the additive code generated by cir_lambda(v) over GF(4)
    Distance {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        v: String,
    },
    /// Recompute tabulated codes (built-in table by default)
    VerifyTable {
        /// Tab-separated table: n, lambda, v, d
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Search for half-rate codes with large minimum distance
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Exhaustive)]
        mode: ModeArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random draws (random mode)
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Allow exhaustive runs beyond the default work guard
        #[arg(long)]
        allow_large: bool,
        /// Skip shift vectors with lambda_0 = 0
        #[arg(long)]
        require_lambda0_nonzero: bool,
        #[arg(long, default_value_t = search::DEFAULT_MAX_WITNESSES)]
        max_witnesses: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exhaustive,
    Random,
}

impl From<ModeArg> for SearchMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Exhaustive => SearchMode::Exhaustive,
            ModeArg::Random => SearchMode::Random,
        }
    }
}

/// A failed command: message plus exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Internal(_) => EXIT_FAILURE,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        // a closed stdout (e.g. `| head`) is not an error
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure {
                code: EXIT_OK,
                message: String::new(),
            };
        }
        Failure {
            code: EXIT_FAILURE,
            message: e.to_string(),
        }
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
            } else {
                let _ = out.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(f) => {
            if !f.message.is_empty() {
                let _ = writeln!(err, "error: {}", f.message);
            }
            f.code
        }
    }
}

fn field_for(q: u32) -> std::result::Result<FieldRef, Failure> {
    Field::with_order(q).map_err(|e| match e {
        Error::NotPrimePower(_) => Failure::usage(format!("{q} is not a prime power")),
        other => other.into(),
    })
}

fn parse_pair(
    field: &FieldRef,
    lambda: &str,
    v: &str,
) -> std::result::Result<(ShiftVector, FieldVector), Failure> {
    let l = ShiftVector::parse(field.clone(), lambda)
        .map_err(|e| Failure::usage(format!("--lambda: {e}")))?;
    let v =
        FieldVector::parse(field.clone(), v).map_err(|e| Failure::usage(format!("--v: {e}")))?;
    if l.len() != v.len() {
        return Err(Failure::usage(format!(
            "length mismatch: lambda has {} coordinates, v has {}",
            l.len(),
            v.len()
        )));
    }
    Ok((l, v))
}

fn write_csv(
    out: &mut dyn Write,
    header: &[&str],
    rows: Vec<Vec<String>>,
) -> std::result::Result<(), Failure> {
    let fail = |e: csv::Error| match e.into_kind() {
        csv::ErrorKind::Io(io) => Failure::from(io),
        other => Failure {
            code: EXIT_FAILURE,
            message: format!("csv: {other:?}"),
        },
    };
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header).map_err(fail)?;
    for r in rows {
        w.write_record(&r).map_err(fail)?;
    }
    w.flush()?;
    Ok(())
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map_or(String::new(), |x| x.to_string())
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match &cli.command {
        Command::Shift {
            lambda,
            v,
            count,
            q,
        } => cmd_shift(cli.format, lambda, v, *count, *q, out),
        Command::Circulant { lambda, v, q } => cmd_circulant(cli.format, lambda, v, *q, out),
        Command::RingCheck { n, q, trials, seed } => {
            cmd_ring_check(cli.format, *n, *q, *trials, *seed, out, err)
        }
        Command::Distance { lambda, v } => cmd_distance(cli.format, lambda, v, out),
        Command::VerifyTable { file } => cmd_verify_table(cli.format, file.as_deref(), out),
        Command::Search {
            n,
            mode,
            seed,
            budget,
            workers,
            allow_large,
            require_lambda0_nonzero,
            max_witnesses,
        } => {
            let mut cfg = match mode {
                ModeArg::Exhaustive => SearchConfig::exhaustive(*n),
                ModeArg::Random => SearchConfig::random(*n, *seed, *budget),
            }
            .with_workers(*workers);
            if *allow_large {
                cfg = cfg.unguarded();
            }
            cfg.require_lambda0_nonzero = *require_lambda0_nonzero;
            cfg.max_witnesses = *max_witnesses;
            cmd_search(cli.format, &cfg, out)
        }
    }
}

fn cmd_shift(
    format: Format,
    lambda: &str,
    v: &str,
    count: u64,
    q: u32,
    out: &mut dyn Write,
) -> CmdResult {
    let field = field_for(q)?;
    let (l, start) = parse_pair(&field, lambda, v)?;
    let mut cur = start.clone();
    let mut steps = Vec::with_capacity(count as usize);
    for _ in 0..count {
        cur = vector_cyclic_shift(&l, &cur)?;
        steps.push(cur.to_string());
    }
    match format {
        Format::Text => {
            for s in &steps {
                writeln!(out, "{s}")?;
            }
        }
        Format::Json => {
            let j = json!({ "lambda": l.to_string(), "v": start.to_string(), "shifts": steps });
            writeln!(out, "{j}")?;
        }
        Format::Csv => {
            let rows = steps
                .iter()
                .enumerate()
                .map(|(i, s)| vec![(i + 1).to_string(), s.clone()])
                .collect();
            write_csv(out, &["step", "vector"], rows)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_circulant(format: Format, lambda: &str, v: &str, q: u32, out: &mut dyn Write) -> CmdResult {
    let field = field_for(q)?;
    let (l, a) = parse_pair(&field, lambda, v)?;
    let m = vec_circulant(&l, &a)?;
    let rows: Vec<String> = (0..m.rows()).map(|i| m.row_vector(i).to_string()).collect();
    match format {
        Format::Text | Format::Csv => {
            for r in &rows {
                writeln!(out, "{r}")?;
            }
        }
        Format::Json => {
            let j = json!({ "lambda": l.to_string(), "v": a.to_string(), "rows": rows });
            writeln!(out, "{j}")?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_ring_check(
    format: Format,
    n: usize,
    q: u32,
    trials: u64,
    seed: u64,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let field = field_for(q)?;
    if n == 0 {
        return Err(Failure::usage("--n must be at least 1"));
    }
    if trials == 0 {
        writeln!(
            err,
            "warning: --trials 0 checks nothing; reporting a vacuous pass"
        )?;
    }
    let report = check_ring_properties(field, n, trials, seed)?;
    match format {
        Format::Text => {
            for p in &report.properties {
                let status = if p.failures == 0 { "PASS" } else { "FAIL" };
                writeln!(
                    out,
                    "{status} {} ({} checked, {} failed)",
                    p.name, p.checked, p.failures
                )?;
                if let Some(ex) = &p.example {
                    writeln!(out, "     first failure: {ex}")?;
                }
            }
            writeln!(
                out,
                "GF({q}), n = {n}, {trials} trials, seed {seed}: {}",
                if report.all_pass() {
                    "all properties hold"
                } else {
                    "FAILURES"
                }
            )?;
        }
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string(&report).expect("serializable")
        )?,
        Format::Csv => {
            writeln!(out, "property,checked,failures")?;
            for p in &report.properties {
                writeln!(out, "{},{},{}", p.name, p.checked, p.failures)?;
            }
        }
    }
    Ok(if report.all_pass() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    })
}

fn cmd_distance(format: Format, lambda: &str, v: &str, out: &mut dyn Write) -> CmdResult {
    let field = Field::gf4();
    let (l, a) = parse_pair(&field, lambda, v)?;
    let code = vc_code(&l, &a)?;
    if code.dimension() == 0 {
        return Err(Failure::usage(
            "cir_lambda(v) generates the zero code (k = 0); its minimum distance is undefined",
        ));
    }
    let report = code.report()?;
    let note = code.classification()?.note;
    match format {
        Format::Text => {
            writeln!(out, "n = {}", report.n)?;
            writeln!(out, "lambda = {}", l)?;
            writeln!(out, "v = {}", a)?;
            writeln!(out, "k = {}", report.k)?;
            writeln!(out, "d = {}", report.d)?;
            writeln!(out, "classification = {}", report.classification)?;
            if let Some(note) = note {
                writeln!(out, "note: {note}")?;
            }
            writeln!(
                out,
                "weight distribution = {}",
                join(&report.weight_distribution)
            )?;
        }
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string(&report).expect("serializable")
        )?,
        Format::Csv => {
            let row = vec![
                report.n.to_string(),
                l.to_string(),
                a.to_string(),
                report.k.to_string(),
                report.d.to_string(),
                report.classification.to_string(),
                join(&report.weight_distribution),
            ];
            write_csv(
                out,
                &[
                    "n",
                    "lambda",
                    "v",
                    "k",
                    "d",
                    "classification",
                    "weight_distribution",
                ],
                vec![row],
            )?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify_table(
    format: Format,
    file: Option<&std::path::Path>,
    out: &mut dyn Write,
) -> CmdResult {
    let entries = match file {
        None => search::default_table(),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            parse_table(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?
        }
    };
    let report = verify_table(&entries)?;
    match format {
        Format::Text => {
            for r in &report.rows {
                let status = if r.pass { "PASS" } else { "FAIL" };
                let d = r.d.map_or("-".to_string(), |d| d.to_string());
                let class = r.classification.map_or("-".to_string(), |c| c.to_string());
                writeln!(
                    out,
                    "{status} n={:<2} lambda=({}) v=({}) k={} d={} expected d={} {} (expected {})",
                    r.n, r.lambda, r.v, r.k, d, r.expected_d, class, r.expected_classification
                )?;
            }
            writeln!(out, "{}/{} rows pass", report.passed, report.total)?;
        }
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string(&report).expect("serializable")
        )?,
        Format::Csv => {
            let rows = report
                .rows
                .iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        r.lambda.clone(),
                        r.v.clone(),
                        r.expected_d.to_string(),
                        r.k.to_string(),
                        opt(r.d),
                        opt(r.classification),
                        r.pass.to_string(),
                    ]
                })
                .collect();
            write_csv(
                out,
                &[
                    "n",
                    "lambda",
                    "v",
                    "expected_d",
                    "k",
                    "d",
                    "classification",
                    "pass",
                ],
                rows,
            )?;
        }
    }
    Ok(if report.all_pass() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    })
}

fn cmd_search(format: Format, cfg: &SearchConfig, out: &mut dyn Write) -> CmdResult {
    let result = search::search(cfg)?;
    match format {
        Format::Text => {
            write!(out, "mode = {}", result.mode)?;
            if let (Some(seed), Some(budget)) = (result.seed, result.budget) {
                write!(out, ", seed = {seed}, budget = {budget}")?;
            }
            writeln!(out)?;
            writeln!(
                out,
                "n = {}, candidates examined = {}, rank-deficient = {}, work units = {}",
                result.n, result.candidates_examined, result.rank_deficient, result.work_units
            )?;
            match result.d {
                None => writeln!(out, "no half-rate code found")?,
                Some(d) => {
                    let class = result
                        .classification
                        .map(|c| c.to_string())
                        .unwrap_or_default();
                    writeln!(out, "best d = {d} ({class})")?;
                    for w in &result.witnesses {
                        writeln!(out, "  lambda=({}) v=({})", w.lambda, w.v)?;
                    }
                }
            }
        }
        Format::Json => writeln!(out, "{}", result.to_json())?,
        Format::Csv => {
            let row = |lambda: &str, v: &str| {
                vec![
                    result.n.to_string(),
                    result.mode.to_string(),
                    opt(result.seed),
                    opt(result.budget),
                    result.candidates_examined.to_string(),
                    opt(result.d),
                    lambda.to_string(),
                    v.to_string(),
                ]
            };
            let mut rows: Vec<Vec<String>> = result
                .witnesses
                .iter()
                .map(|w| row(&w.lambda, &w.v))
                .collect();
            if rows.is_empty() {
                rows.push(row("", ""));
            }
            write_csv(
                out,
                &[
                    "n",
                    "mode",
                    "seed",
                    "budget",
                    "candidates_examined",
                    "d",
                    "lambda",
                    "v",
                ],
                rows,
            )?;
        }
    }
    Ok(EXIT_OK)
}
