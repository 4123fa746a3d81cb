//! Sweep specifications and the parallel sweep runner.
//!
//! A sweep expands a [`SweepSpec`] into the full list of parameter points in
//! a fixed canonical order (documented per check kind below), evaluates them
//! on a bounded worker pool, and hands records to a sink in canonical order
//! regardless of the worker count — report files are byte-identical however
//! the work was scheduled.
//!
//! Axes enumerate hypothesis-satisfying values only: `n` axes are filtered
//! to the parity/range each claim requires and `p` axes to primes, so SKIP
//! records are reserved for residue-class exclusions (`p | cd`, `p | d`,
//! `p ≢ 1 (mod 4)`) that sweeps genuinely enumerate.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use qrdet::numtheory::is_prime;
use qrdet::verify::{
    check_eqp, check_lemma21, check_lemma52, check_proof_congruence, check_remark11, check_s0,
    check_thm11, check_thm12, check_thm13, check_thm31, SplitMix64, Status, VerificationRecord,
};

use crate::report::RecordSink;
use crate::CliError;

/// Which checker a command or sweep drives.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum CheckKind {
    Thm11,
    Remark11,
    Thm12,
    Thm13,
    S0,
    Thm31,
    EqP,
    Lem21,
    Lem52,
    ProofCong,
}

impl CheckKind {
    pub const ALL: [CheckKind; 10] = [
        CheckKind::Thm11,
        CheckKind::Remark11,
        CheckKind::Thm12,
        CheckKind::Thm13,
        CheckKind::S0,
        CheckKind::Thm31,
        CheckKind::EqP,
        CheckKind::Lem21,
        CheckKind::Lem52,
        CheckKind::ProofCong,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckKind::Thm11 => "thm11",
            CheckKind::Remark11 => "remark11",
            CheckKind::Thm12 => "thm12",
            CheckKind::Thm13 => "thm13",
            CheckKind::S0 => "s0",
            CheckKind::Thm31 => "thm31",
            CheckKind::EqP => "eqp",
            CheckKind::Lem21 => "lem21",
            CheckKind::Lem52 => "lem52",
            CheckKind::ProofCong => "proofcong",
        }
    }

    pub fn parse(s: &str) -> Result<Self, CliError> {
        Self::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| {
                CliError::Usage(format!(
                    "unknown check '{s}' (expected one of: {})",
                    Self::ALL.map(CheckKind::as_str).join(", ")
                ))
            })
    }
}

/// One parameter axis: an inclusive interval `lo..hi` or an explicit list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxisSpec {
    Interval(i64, i64),
    List(Vec<i64>),
}

impl AxisSpec {
    /// Parses `"a..b"` (inclusive), `"v1,v2,…"`, or a single value.
    pub fn parse(s: &str) -> Result<Self, CliError> {
        let bad = |_| CliError::Usage(format!("cannot parse axis '{s}'"));
        if let Some((lo, hi)) = s.split_once("..") {
            let lo: i64 = lo.trim().parse().map_err(bad)?;
            let hi: i64 = hi.trim().parse().map_err(bad)?;
            if lo > hi {
                return Err(CliError::Usage(format!("empty interval '{s}'")));
            }
            return Ok(AxisSpec::Interval(lo, hi));
        }
        if s.contains(',') {
            let values = s
                .split(',')
                .map(|v| v.trim().parse::<i64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(bad)?;
            return Ok(AxisSpec::List(values));
        }
        Ok(AxisSpec::List(vec![s.trim().parse().map_err(bad)?]))
    }

    fn values(&self) -> Vec<i64> {
        match self {
            AxisSpec::Interval(lo, hi) => (*lo..=*hi).collect(),
            AxisSpec::List(values) => values.clone(),
        }
    }
}

/// Point-generation policy: the full cartesian grid, or `count` seeded draws
/// per outer axis value.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Sampling {
    Exhaustive,
    Random { count: u32 },
}

impl Sampling {
    /// Parses `"exhaustive"` or `"random:<count>"`.
    pub fn parse(s: &str) -> Result<Self, CliError> {
        if s == "exhaustive" {
            return Ok(Sampling::Exhaustive);
        }
        if let Some(count) = s.strip_prefix("random:") {
            let count: u32 = count
                .parse()
                .map_err(|_| CliError::Usage(format!("bad sample count in '{s}'")))?;
            if count == 0 {
                return Err(CliError::Usage("sample count must be ≥ 1".into()));
            }
            return Ok(Sampling::Random { count });
        }
        Err(CliError::Usage(format!(
            "unknown sampling '{s}' (expected 'exhaustive' or 'random:<count>')"
        )))
    }
}

/// A fully described sweep. Missing axes fall back to per-check defaults
/// chosen to match the acceptance ranges.
#[derive(Clone, Debug)]
pub struct SweepSpec {
    pub check: CheckKind,
    pub n: Option<AxisSpec>,
    pub c: Option<AxisSpec>,
    pub d: Option<AxisSpec>,
    pub p: Option<AxisSpec>,
    pub k: Option<AxisSpec>,
    pub sampling: Option<Sampling>,
    pub seed: Option<u64>,
    pub jobs: usize,
}

impl SweepSpec {
    pub fn new(check: CheckKind, jobs: usize) -> Self {
        SweepSpec {
            check,
            n: None,
            c: None,
            d: None,
            p: None,
            k: None,
            sampling: None,
            seed: None,
            jobs,
        }
    }
}

/// One evaluated parameter point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckPoint {
    Thm11 { n: u64, d: i64 },
    Remark11 { d: i64 },
    Thm12 { n: u64, c: i64, d: i64 },
    Thm13 { p: u64, c: i64, d: i64, idx: Option<u32> },
    S0 { p: u64, d: i64 },
    Thm31 { n: u64, seed: u64 },
    EqP { n: u64, seed: u64 },
    Lem21 { p: u64, k: u64 },
    Lem52 { p: u64 },
    ProofCong { p: u64, d: i64 },
}

impl CheckPoint {
    /// Runs the checker for this point. Expansion only yields points the
    /// checkers accept, so parameter rejections cannot occur here.
    pub fn run(&self) -> VerificationRecord {
        let result = match *self {
            CheckPoint::Thm11 { n, d } => check_thm11(n, d),
            CheckPoint::Remark11 { d } => check_remark11(d),
            CheckPoint::Thm12 { n, c, d } => check_thm12(n, c, d),
            CheckPoint::Thm13 { p, c, d, idx } => check_thm13(p, c, d).map(|mut rec| {
                if let Some(idx) = idx {
                    rec.params.insert("idx", idx as i64);
                }
                rec
            }),
            CheckPoint::S0 { p, d } => check_s0(p, d),
            CheckPoint::Thm31 { n, seed } => check_thm31(n, seed),
            CheckPoint::EqP { n, seed } => check_eqp(n, seed),
            CheckPoint::Lem21 { p, k } => check_lemma21(p, k),
            CheckPoint::Lem52 { p } => check_lemma52(p),
            CheckPoint::ProofCong { p, d } => check_proof_congruence(p, d),
        };
        result.expect("sweep expansion yields valid parameter points")
    }
}

fn axis(values: &Option<AxisSpec>, default: AxisSpec) -> Vec<i64> {
    values.clone().unwrap_or(default).values()
}

fn prime_axis(values: &Option<AxisSpec>, default_lo: i64, default_hi: i64, min: u64) -> Vec<u64> {
    axis(values, AxisSpec::Interval(default_lo, default_hi))
        .into_iter()
        .filter(|&p| p >= min as i64 && is_prime(p as u64))
        .map(|p| p as u64)
        .collect()
}

fn require_seed(spec: &SweepSpec) -> Result<u64, CliError> {
    spec.seed
        .ok_or_else(|| CliError::Usage("random sampling requires --seed".into()))
}

fn reject_random(spec: &SweepSpec) -> Result<(), CliError> {
    if matches!(spec.sampling, Some(Sampling::Random { .. })) {
        return Err(CliError::Usage(format!(
            "check '{}' sweeps exhaustively; random sampling is not defined for it",
            spec.check.as_str()
        )));
    }
    Ok(())
}

/// Expands the spec into its parameter points in canonical order.
///
/// Canonical orders: outer axes ascend first (`n` or `p`), then `c`, then
/// `d` or `k`, then the sample index for random sampling.
pub fn expand_points(spec: &SweepSpec) -> Result<Vec<CheckPoint>, CliError> {
    let mut points = Vec::new();
    match spec.check {
        CheckKind::Thm11 => {
            reject_random(spec)?;
            let ns: Vec<u64> = axis(&spec.n, AxisSpec::Interval(5, 151))
                .into_iter()
                .filter(|&n| n >= 5 && n % 2 == 1)
                .map(|n| n as u64)
                .collect();
            for n in ns {
                for d in axis(&spec.d, AxisSpec::Interval(-6, 6)) {
                    points.push(CheckPoint::Thm11 { n, d });
                }
            }
        }
        CheckKind::Remark11 => {
            reject_random(spec)?;
            for d in axis(&spec.d, AxisSpec::Interval(-10, 10)) {
                points.push(CheckPoint::Remark11 { d });
            }
        }
        CheckKind::Thm12 => {
            reject_random(spec)?;
            let ns: Vec<u64> = axis(&spec.n, AxisSpec::Interval(3, 12))
                .into_iter()
                .filter(|&n| n >= 3)
                .map(|n| n as u64)
                .collect();
            for n in ns {
                for c in axis(&spec.c, AxisSpec::Interval(-4, 4)) {
                    for d in axis(&spec.d, AxisSpec::Interval(-5, 5)) {
                        if d != 0 {
                            points.push(CheckPoint::Thm12 { n, c, d });
                        }
                    }
                }
            }
        }
        CheckKind::Thm13 => {
            let primes = prime_axis(&spec.p, 5, 37, 3);
            match spec.sampling.unwrap_or(Sampling::Exhaustive) {
                Sampling::Exhaustive => {
                    for p in primes {
                        let cs = axis(&spec.c, AxisSpec::Interval(0, p as i64 - 1));
                        let ds = axis(&spec.d, AxisSpec::Interval(0, p as i64 - 1));
                        for &c in &cs {
                            for &d in &ds {
                                points.push(CheckPoint::Thm13 { p, c, d, idx: None });
                            }
                        }
                    }
                }
                Sampling::Random { count } => {
                    let seed = require_seed(spec)?;
                    for p in primes {
                        let mut rng = SplitMix64::derive(seed, p);
                        for idx in 0..count {
                            let c = rng.int_in(1, p as i64 - 1);
                            let d = rng.int_in(1, p as i64 - 1);
                            points.push(CheckPoint::Thm13 { p, c, d, idx: Some(idx) });
                        }
                    }
                }
            }
        }
        CheckKind::S0 => {
            reject_random(spec)?;
            for p in prime_axis(&spec.p, 3, 59, 3) {
                for d in axis(&spec.d, AxisSpec::Interval(1, p as i64 - 1)) {
                    points.push(CheckPoint::S0 { p, d });
                }
            }
        }
        CheckKind::Thm31 | CheckKind::EqP => {
            let default_n = if spec.check == CheckKind::Thm31 {
                AxisSpec::Interval(2, 8)
            } else {
                AxisSpec::Interval(1, 9)
            };
            let count = match spec.sampling.unwrap_or(Sampling::Random { count: 25 }) {
                Sampling::Random { count } => count,
                Sampling::Exhaustive => {
                    return Err(CliError::Usage(format!(
                        "check '{}' draws random vectors; use --sampling random:<count>",
                        spec.check.as_str()
                    )))
                }
            };
            let seed = require_seed(spec)?;
            let ns: Vec<u64> = axis(&spec.n, default_n)
                .into_iter()
                .filter(|&n| n >= 1)
                .map(|n| n as u64)
                .collect();
            for n in ns {
                for i in 0..count {
                    let point_seed = seed.wrapping_add(i as u64);
                    points.push(if spec.check == CheckKind::Thm31 {
                        CheckPoint::Thm31 { n, seed: point_seed }
                    } else {
                        CheckPoint::EqP { n, seed: point_seed }
                    });
                }
            }
        }
        CheckKind::Lem21 => {
            reject_random(spec)?;
            for p in prime_axis(&spec.p, 2, 47, 2) {
                let ks = axis(&spec.k, AxisSpec::Interval(0, 3 * (p as i64 - 1)));
                for k in ks {
                    if k >= 0 {
                        points.push(CheckPoint::Lem21 { p, k: k as u64 });
                    }
                }
            }
        }
        CheckKind::Lem52 => {
            reject_random(spec)?;
            for p in prime_axis(&spec.p, 2, 997, 2) {
                points.push(CheckPoint::Lem52 { p });
            }
        }
        CheckKind::ProofCong => {
            reject_random(spec)?;
            for p in prime_axis(&spec.p, 5, 47, 5) {
                for d in axis(&spec.d, AxisSpec::Interval(0, p as i64 - 1)) {
                    points.push(CheckPoint::ProofCong { p, d });
                }
            }
        }
    }
    Ok(points)
}

/// Totals of one sweep, partitioned by record status.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepSummary {
    pub pass: u64,
    pub fail: u64,
    pub skip: u64,
    pub elapsed: Duration,
}

impl SweepSummary {
    pub fn total(&self) -> u64 {
        self.pass + self.fail + self.skip
    }

    /// The one-line form printed after every sweep.
    pub fn summary_line(&self) -> String {
        format!(
            "PASS={} FAIL={} SKIP={} elapsed={:.3}s",
            self.pass,
            self.fail,
            self.skip,
            self.elapsed.as_secs_f64()
        )
    }
}

/// Points evaluated per scheduling batch; small enough to stream, large
/// enough to keep the pool busy.
const CHUNK: usize = 256;

/// Runs the sweep on `jobs` workers, handing records to `sink` in canonical
/// parameter order.
pub fn run_sweep(spec: &SweepSpec, sink: &mut dyn RecordSink) -> Result<SweepSummary, CliError> {
    let points = expand_points(spec)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.jobs.max(1))
        .build()?;
    let started = Instant::now();
    let mut summary = SweepSummary::default();
    for chunk in points.chunks(CHUNK) {
        let records: Vec<VerificationRecord> =
            pool.install(|| chunk.par_iter().map(CheckPoint::run).collect());
        for record in &records {
            match record.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skip => summary.skip += 1,
            }
            sink.write(record)?;
        }
    }
    sink.finish()?;
    summary.elapsed = started.elapsed();
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axis_parsing() {
        assert_eq!(AxisSpec::parse("5..151").unwrap(), AxisSpec::Interval(5, 151));
        assert_eq!(AxisSpec::parse("-6..6").unwrap(), AxisSpec::Interval(-6, 6));
        assert_eq!(
            AxisSpec::parse("1,4,-9").unwrap(),
            AxisSpec::List(vec![1, 4, -9])
        );
        assert_eq!(AxisSpec::parse("42").unwrap(), AxisSpec::List(vec![42]));
        assert!(AxisSpec::parse("9..5").is_err());
        assert!(AxisSpec::parse("x..y").is_err());
        assert!(AxisSpec::parse("1,two").is_err());
    }

    #[test]
    fn sampling_parsing() {
        assert_eq!(Sampling::parse("exhaustive").unwrap(), Sampling::Exhaustive);
        assert_eq!(
            Sampling::parse("random:200").unwrap(),
            Sampling::Random { count: 200 }
        );
        assert!(Sampling::parse("random:0").is_err());
        assert!(Sampling::parse("sometimes").is_err());
    }

    #[test]
    fn check_kind_round_trip() {
        for kind in CheckKind::ALL {
            assert_eq!(CheckKind::parse(kind.as_str()).unwrap(), kind);
        }
        assert!(CheckKind::parse("thm99").is_err());
    }

    #[test]
    fn thm11_expansion_filters_to_odd() {
        let mut spec = SweepSpec::new(CheckKind::Thm11, 1);
        spec.n = Some(AxisSpec::Interval(5, 15));
        spec.d = Some(AxisSpec::List(vec![1]));
        let points = expand_points(&spec).unwrap();
        let ns: Vec<u64> = points
            .iter()
            .map(|pt| match pt {
                CheckPoint::Thm11 { n, .. } => *n,
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(ns, vec![5, 7, 9, 11, 13, 15]);
    }

    #[test]
    fn thm13_exhaustive_counts() {
        let mut spec = SweepSpec::new(CheckKind::Thm13, 1);
        spec.p = Some(AxisSpec::List(vec![5, 6, 7])); // 6 filtered out
        let points = expand_points(&spec).unwrap();
        assert_eq!(points.len(), 25 + 49);
    }

    #[test]
    fn thm13_random_needs_seed_and_is_reproducible() {
        let mut spec = SweepSpec::new(CheckKind::Thm13, 1);
        spec.p = Some(AxisSpec::List(vec![41]));
        spec.sampling = Some(Sampling::Random { count: 5 });
        assert!(matches!(expand_points(&spec), Err(CliError::Usage(_))));
        spec.seed = Some(7);
        let a = expand_points(&spec).unwrap();
        let b = expand_points(&spec).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 5);
        for pt in &a {
            match pt {
                CheckPoint::Thm13 { p, c, d, idx } => {
                    assert_eq!(*p, 41);
                    assert!((1..41).contains(c) && (1..41).contains(d));
                    assert!(idx.is_some());
                }
                _ => unreachable!(),
            }
        }
    }

    #[test]
    fn random_sampling_rejected_for_exhaustive_checks() {
        let mut spec = SweepSpec::new(CheckKind::Lem52, 1);
        spec.sampling = Some(Sampling::Random { count: 3 });
        spec.seed = Some(1);
        assert!(matches!(expand_points(&spec), Err(CliError::Usage(_))));
    }

    #[test]
    fn small_sweep_runs_and_counts() {
        use crate::report::VecSink;
        let mut spec = SweepSpec::new(CheckKind::Remark11, 2);
        spec.d = Some(AxisSpec::Interval(-3, 3));
        let mut sink = VecSink::default();
        let summary = run_sweep(&spec, &mut sink).unwrap();
        assert_eq!(summary.pass, 7);
        assert_eq!(summary.fail, 0);
        assert_eq!(summary.total(), sink.records.len() as u64);
        let line = summary.summary_line();
        assert!(line.starts_with("PASS=7 FAIL=0 SKIP=0 elapsed="));
    }

    #[test]
    fn records_arrive_in_canonical_order() {
        use crate::report::VecSink;
        let mut spec = SweepSpec::new(CheckKind::Thm11, 4);
        spec.n = Some(AxisSpec::Interval(5, 13));
        spec.d = Some(AxisSpec::Interval(-1, 1));
        let mut sink = VecSink::default();
        run_sweep(&spec, &mut sink).unwrap();
        let keys: Vec<(i64, i64)> = sink
            .records
            .iter()
            .map(|r| (r.params["n"], r.params["d"]))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort_unstable();
        assert_eq!(keys, sorted);
        assert_eq!(keys.len(), 5 * 3);
        assert_eq!(keys[0], (5, -1));
    }

    #[test]
    fn lem21_dynamic_axis_tracks_p() {
        let mut spec = SweepSpec::new(CheckKind::Lem21, 1);
        spec.p = Some(AxisSpec::List(vec![3, 5]));
        let points = expand_points(&spec).unwrap();
        // 3(p−1)+1 points per prime: 7 for p=3, 13 for p=5
        assert_eq!(points.len(), 7 + 13);
    }
}
