//! `qrdet` — exact verification of quadratic-residue determinant claims.
//!
//! Verbs: `jacobi` (one symbol), `check` (one claim at one point),
//! `sweep` (a claim over parameter ranges, streamed to a report file),
//! `selftest` (the full acceptance suite).
//!
//! Exit codes: 0 all-pass, 1 any FAIL, 2 usage or I/O error.

use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;

use qrdet::numtheory::{jacobi, OddModulus};
use qrdet::verify::{
    check_eqp, check_lemma21, check_lemma52, check_proof_congruence, check_remark11, check_s0,
    check_thm11, check_thm12, check_thm13, check_thm31, Status, VerificationRecord,
};
use qrdet_cli::report::{record_json, CsvSink, JsonlSink, RecordSink};
use qrdet_cli::selftest;
use qrdet_cli::sweep::{run_sweep, AxisSpec, CheckKind, Sampling, SweepSpec};
use qrdet_cli::CliError;

#[derive(Parser)]
#[command(name = "qrdet", version, about = "Exact checks of quadratic-residue determinant identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Jacobi symbol (a/n) for odd positive n
    #[command(allow_negative_numbers = true)]
    Jacobi {
        /// Upper argument; any integer, arbitrary size
        a: String,
        /// Lower argument; odd and positive, arbitrary size
        n: String,
    },
    /// Run one checker at one parameter point and print its record
    #[command(allow_negative_numbers = true)]
    Check {
        /// Which claim: thm11, remark11, thm12, thm13, s0, thm31, eqp,
        /// lem21, lem52, proofcong
        kind: String,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        c: Option<i64>,
        #[arg(long)]
        d: Option<i64>,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Sweep a claim over parameter ranges and write a report file
    Sweep {
        /// Which claim to sweep (same names as `check`)
        kind: String,
        /// Axis for n: "lo..hi", "v1,v2,…", or a single value
        #[arg(long, allow_hyphen_values = true)]
        n: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        c: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        d: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        p: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<String>,
        /// "exhaustive" (default) or `random:<count>`
        #[arg(long)]
        sampling: Option<String>,
        /// Seed for random sampling and for seed-parameterized claims
        #[arg(long)]
        seed: Option<u64>,
        /// Worker count (default: QRDET_JOBS or the available CPUs)
        #[arg(long)]
        jobs: Option<usize>,
        /// Report file path
        #[arg(long)]
        out: PathBuf,
        /// Report format: jsonl (canonical) or csv (lossy convenience)
        #[arg(long, default_value = "jsonl")]
        format: String,
    },
    /// Run the full acceptance suite, one line per criterion
    Selftest {
        #[arg(long)]
        jobs: Option<usize>,
    },
}

fn resolve_jobs(flag: Option<usize>) -> usize {
    if let Some(jobs) = flag {
        return jobs.max(1);
    }
    if let Ok(env) = std::env::var("QRDET_JOBS") {
        if let Ok(jobs) = env.parse::<usize>() {
            return jobs.max(1);
        }
    }
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn parse_bigint(text: &str, what: &str) -> Result<BigInt, CliError> {
    text.parse()
        .map_err(|_| CliError::Usage(format!("cannot parse {what} '{text}' as an integer")))
}

fn require<T: Copy>(value: Option<T>, flag: &str, kind: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("check '{kind}' requires --{flag}")))
}

fn run_check(
    kind: &str,
    n: Option<u64>,
    c: Option<i64>,
    d: Option<i64>,
    p: Option<u64>,
    k: Option<u64>,
    seed: Option<u64>,
) -> Result<VerificationRecord, CliError> {
    let record = match CheckKind::parse(kind)? {
        CheckKind::Thm11 => check_thm11(require(n, "n", kind)?, require(d, "d", kind)?)?,
        CheckKind::Remark11 => check_remark11(require(d, "d", kind)?)?,
        CheckKind::Thm12 => check_thm12(
            require(n, "n", kind)?,
            require(c, "c", kind)?,
            require(d, "d", kind)?,
        )?,
        CheckKind::Thm13 => check_thm13(
            require(p, "p", kind)?,
            require(c, "c", kind)?,
            require(d, "d", kind)?,
        )?,
        CheckKind::S0 => check_s0(require(p, "p", kind)?, require(d, "d", kind)?)?,
        CheckKind::Thm31 => check_thm31(require(n, "n", kind)?, seed.unwrap_or(0))?,
        CheckKind::EqP => check_eqp(require(n, "n", kind)?, seed.unwrap_or(0))?,
        CheckKind::Lem21 => check_lemma21(require(p, "p", kind)?, require(k, "k", kind)?)?,
        CheckKind::Lem52 => check_lemma52(require(p, "p", kind)?)?,
        CheckKind::ProofCong => {
            check_proof_congruence(require(p, "p", kind)?, require(d, "d", kind)?)?
        }
    };
    Ok(record)
}

fn parse_axis(text: &Option<String>) -> Result<Option<AxisSpec>, CliError> {
    text.as_deref().map(AxisSpec::parse).transpose()
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Jacobi { a, n } => {
            let a = parse_bigint(&a, "a")?;
            let n = OddModulus::from_bigint(&parse_bigint(&n, "n")?)?;
            println!("{}", jacobi(&a, &n));
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { kind, n, c, d, p, k, seed } => {
            let record = run_check(&kind, n, c, d, p, k, seed)?;
            println!("{}", record_json(&record, true));
            Ok(match record.status {
                Status::Pass | Status::Skip => ExitCode::SUCCESS,
                Status::Fail => ExitCode::from(1),
            })
        }
        Command::Sweep { kind, n, c, d, p, k, sampling, seed, jobs, out, format } => {
            let mut spec = SweepSpec::new(CheckKind::parse(&kind)?, resolve_jobs(jobs));
            spec.n = parse_axis(&n)?;
            spec.c = parse_axis(&c)?;
            spec.d = parse_axis(&d)?;
            spec.p = parse_axis(&p)?;
            spec.k = parse_axis(&k)?;
            spec.sampling = sampling.as_deref().map(Sampling::parse).transpose()?;
            spec.seed = seed;

            let file = BufWriter::new(File::create(&out)?);
            let mut sink: Box<dyn RecordSink> = match format.as_str() {
                "jsonl" => Box::new(JsonlSink::new(file)),
                "csv" => Box::new(CsvSink::new(file)),
                other => {
                    return Err(CliError::Usage(format!(
                        "unknown format '{other}' (expected jsonl or csv)"
                    )))
                }
            };
            let summary = run_sweep(&spec, sink.as_mut())?;
            println!("{}", summary.summary_line());
            Ok(if summary.fail == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Selftest { jobs } => {
            let all_passed = selftest::run_all(resolve_jobs(jobs))?;
            Ok(if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
