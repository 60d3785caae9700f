//! `pythgap` command dispatch.
//!
//! Exit codes: 0 success, 1 verification mismatch or no prediction
//! candidates, 2 usage error.

pub mod output;

use std::ffi::OsString;
use std::io::Write;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use pythgap_core::oracle;
use pythgap_core::sequence::{self, assess_candidates, CandidateStatus, RejectReason, Verdict, DEFAULT_HORIZON};
use pythgap_core::triples::{params_to_triple, pell_to_params};
use pythgap_core::{fundamental_solutions, PellSolution, SequenceRow};

pub use output::Format;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "pythgap", version, about = "Primitive Pythagorean triples with a fixed leg gap")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rows k = 1..count of one seed orbit, or k = -count..count stitched.
    Enumerate {
        #[arg(long, default_value_t = 7)]
        gap: u64,
        /// `stitched`, a hypotenuse at k = 1 (13 or 17 for gap 7), or a 1-based seed index.
        #[arg(long)]
        seed: Option<Seed>,
        #[arg(long, default_value_t = 10)]
        count: u32,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Compare the sequences against a brute-force scan up to z-max.
    Verify {
        #[arg(long, default_value_t = 7)]
        gap: u64,
        #[arg(long)]
        z_max: u64,
        /// Threads for the brute-force scan.
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Fundamental solutions of p^2 - 2q^2 = +-N and their triples.
    Pell { n: u64 },
    /// Candidate coefficients A for a_{n+1} = A a_n - a_{n-1}.
    Predict {
        a0: BigInt,
        a1: BigInt,
        offset: BigInt,
        #[arg(long, default_value_t = DEFAULT_HORIZON)]
        horizon: i64,
    },
    /// Orbit table over an explicit index range, negative k included.
    Table {
        #[arg(long, default_value_t = 7)]
        gap: u64,
        #[arg(long)]
        seed: Option<Seed>,
        #[arg(long, allow_negative_numbers = true)]
        from: i64,
        #[arg(long, allow_negative_numbers = true)]
        to: i64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Seed {
    Stitched,
    Value(u64),
}

impl FromStr for Seed {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("stitched") {
            return Ok(Seed::Stitched);
        }
        s.parse().map(Seed::Value).map_err(|_| format!("expected `stitched` or a positive integer, got `{s}`"))
    }
}

/// Errors surfaced to the user with exit code 2.
#[derive(Debug)]
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

/// Picks the fundamental solution a seed selector names.
///
/// A value first matches the hypotenuse at k = 1 (so `13` and `17` for gap 7),
/// then falls back to a 1-based position in ascending order.
pub fn resolve_seed(gap: u64, value: u64) -> Result<PellSolution, String> {
    let fund = fundamental_solutions(gap).map_err(|e| e.to_string())?;
    for sol in &fund {
        let z = params_to_triple(&pell_to_params(sol), gap).map_err(|e| e.to_string())?.z;
        if z == BigInt::from(value) {
            return Ok(sol.clone());
        }
    }
    match usize::try_from(value).ok().and_then(|i| i.checked_sub(1)).and_then(|i| fund.get(i)) {
        Some(sol) => Ok(sol.clone()),
        None => Err(format!("unknown seed {value} for gap {gap}")),
    }
}

fn seed_rows(gap: u64, seed: Option<&Seed>, stitched: (i64, i64), single: (i64, i64)) -> Result<Vec<SequenceRow>, Usage> {
    match seed {
        Some(Seed::Stitched) => Ok(sequence::stitched_sequence(gap, stitched.0, stitched.1)?),
        Some(Seed::Value(v)) => {
            let sol = resolve_seed(gap, *v).map_err(Usage)?;
            Ok(sequence::orbit_rows(&sol, single.0, single.1)?)
        }
        None => match fundamental_solutions(gap)?.first() {
            Some(sol) => Ok(sequence::orbit_rows(sol, single.0, single.1)?),
            None => Ok(Vec::new()),
        },
    }
}

fn enumerate(out: &mut dyn Write, gap: u64, seed: Option<&Seed>, count: u32, format: Format) -> Result<i32, Usage> {
    if count == 0 {
        return Err(Usage("--count must be at least 1".into()));
    }
    let c = i64::from(count);
    let rows: Vec<SequenceRow> = seed_rows(gap, seed, (-c, c), (1, c))?
        .into_iter()
        .filter(|r| !r.is_degenerate())
        .collect();
    output::write_rows(out, &rows, format)?;
    Ok(EXIT_OK)
}

fn table(out: &mut dyn Write, gap: u64, seed: Option<&Seed>, from: i64, to: i64, format: Format) -> Result<i32, Usage> {
    if from > to {
        return Err(Usage(format!("--from {from} is after --to {to}")));
    }
    let rows = seed_rows(gap, seed, (from, to), (from, to))?;
    output::write_rows(out, &rows, format)?;
    Ok(EXIT_OK)
}

fn list(v: &[BigInt]) -> String {
    v.iter().map(|z| z.to_string()).collect::<Vec<_>>().join(",")
}

fn verify(out: &mut dyn Write, gap: u64, z_max: u64, workers: usize) -> Result<i32, Usage> {
    if z_max == 0 {
        return Err(Usage("--z-max must be at least 1".into()));
    }
    let cc = oracle::cross_check_chunked(gap, z_max, workers)?;
    if cc.is_equal() {
        writeln!(out, "EQUAL ({} triples)", cc.oracle.len())?;
        Ok(EXIT_OK)
    } else {
        writeln!(out, "MISMATCH (oracle {}, sequences {})", cc.oracle.len(), cc.sequence.len())?;
        writeln!(out, "missing: {}", list(&cc.missing))?;
        writeln!(out, "extra: {}", list(&cc.extra))?;
        Ok(EXIT_MISMATCH)
    }
}

fn pell(out: &mut dyn Write, n: u64) -> Result<i32, Usage> {
    let sols = fundamental_solutions(n)?;
    if sols.is_empty() {
        writeln!(out, "no solutions")?;
    }
    for sol in &sols {
        let t = params_to_triple(&pell_to_params(sol), n)?;
        writeln!(out, "{sol} norm {}{n} -> {t}", sol.norm_sign())?;
    }
    Ok(EXIT_OK)
}

fn predict(out: &mut dyn Write, a0: &BigInt, a1: &BigInt, offset: &BigInt, horizon: i64) -> Result<i32, Usage> {
    if offset <= &BigInt::from(0) {
        return Err(Usage("offset must be positive".into()));
    }
    let found = assess_candidates(a0, a1, offset, horizon)?;
    if found.is_empty() {
        writeln!(out, "no rational candidates")?;
        return Ok(EXIT_MISMATCH);
    }
    for c in &found {
        let detail = match (&c.status, &c.verdict) {
            (CandidateStatus::Accept, _) => "ACCEPT".to_string(),
            (CandidateStatus::AcceptSubsequence, _) => "ACCEPT-SUBSEQUENCE".to_string(),
            (CandidateStatus::Reject, Verdict::Reject(r)) => {
                let why = match r.reason {
                    RejectReason::NonInteger => format!("a{}={}", r.n, r.value),
                    RejectReason::NonPositive => format!("a{}={} not positive", r.n, r.value),
                    RejectReason::NotCompanionSquare => format!("2*a{}^2-{} not an odd square", r.n, offset),
                };
                format!("REJECT ({why})")
            }
            (CandidateStatus::Reject, Verdict::Accept) => unreachable!("rejected candidates carry a rejection"),
        };
        writeln!(out, "{} {detail}", c.a)?;
    }
    Ok(EXIT_OK)
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Enumerate { gap, seed, count, format } => enumerate(out, *gap, seed.as_ref(), *count, *format),
        Command::Verify { gap, z_max, workers } => verify(out, *gap, *z_max, *workers),
        Command::Pell { n } => pell(out, *n),
        Command::Predict { a0, a1, offset, horizon } => predict(out, a0, a1, offset, *horizon),
        Command::Table { gap, seed, from, to, format } => table(out, *gap, seed.as_ref(), *from, *to, *format),
    };
    match result {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}
