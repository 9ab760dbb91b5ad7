//! Instrumented benchmark runs comparing the fast kernels with the naive DFT.
//!
//! A run first transforms one seeded random vector with a counting sink and
//! refuses to report unless the tallies equal [`predicted_counts`]. Timing
//! then takes the median over `trials` uncounted runs. The naive DFT is
//! timed only up to a size cutoff; above it only its analytic counts
//! (`n^2` multiplications, `n (n - 1)` additions) are reported.

use std::fmt::Write as _;
use std::hint::black_box;
use std::time::{Duration, Instant};

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldParams};
use crate::transform::{
    naive_counts, plan_transform, predicted_counts, NoCount, OpCounts, OutputOrder, TransformPlan,
    Variant,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchOptions {
    /// Largest `n` for which the naive DFT is actually run.
    pub measure_naive_up_to: u64,
    pub trials: usize,
    pub seed: u64,
}

impl Default for BenchOptions {
    fn default() -> Self {
        Self {
            measure_naive_up_to: 1 << 14,
            trials: 5,
            seed: 0x5eed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchReport {
    pub p: u32,
    pub n: u64,
    pub radices: Vec<usize>,
    pub variant: Variant,
    pub measured: OpCounts,
    pub predicted: OpCounts,
    pub naive: OpCounts,
    /// `naive / predicted`; `None` when the fast transform does no work (`n = 1`).
    pub mult_ratio: Option<Ratio<u64>>,
    pub add_ratio: Option<Ratio<u64>>,
    pub wall_clock_fft: Duration,
    pub wall_clock_naive: Option<Duration>,
}

impl BenchReport {
    /// Measured wall-clock speedup of the fast kernel over the naive DFT.
    pub fn time_ratio(&self) -> Option<f64> {
        let naive = self.wall_clock_naive?;
        Some(naive.as_secs_f64() / self.wall_clock_fft.as_secs_f64().max(1e-12))
    }
}

/// `trials` seeded random vectors of length `n`.
pub fn random_vectors(
    params: &FieldParams,
    n: usize,
    count: usize,
    seed: u64,
) -> Vec<Vec<FieldElement>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = params.modulus();
    (0..count)
        .map(|_| {
            (0..n)
                .map(|_| {
                    params
                        .element(rng.random_range(0..p) as u64)
                        .expect("in range")
                })
                .collect()
        })
        .collect()
}

fn median(mut samples: Vec<Duration>) -> Duration {
    samples.sort_unstable();
    samples[samples.len() / 2]
}

fn time_median(trials: usize, mut f: impl FnMut()) -> Duration {
    let samples = (0..trials.max(1))
        .map(|_| {
            let start = Instant::now();
            f();
            start.elapsed()
        })
        .collect();
    median(samples)
}

fn ratio(naive: u64, fast: u64) -> Option<Ratio<u64>> {
    (fast > 0).then(|| Ratio::new(naive, fast))
}

/// Counts and times one configuration; see the module docs.
pub fn run_benchmark(
    params: &FieldParams,
    n: u64,
    omega: Option<FieldElement>,
    radices: Option<&[usize]>,
    variant: Variant,
    options: &BenchOptions,
) -> Result<BenchReport> {
    let plan = plan_transform(params, n, omega, radices)?;
    run_with_plan(&plan, variant, options)
}

/// [`run_benchmark`] on an existing plan.
pub fn run_with_plan(
    plan: &TransformPlan,
    variant: Variant,
    options: &BenchOptions,
) -> Result<BenchReport> {
    let params = plan.params();
    let n = plan.len() as u64;
    let input = random_vectors(params, plan.len(), 1, options.seed).remove(0);

    let mut measured = OpCounts::default();
    plan.forward(&input, variant, OutputOrder::Natural, &mut measured)?;
    let predicted = predicted_counts(n, plan.radices(), variant)?;
    if measured != predicted {
        return Err(Error::CountMismatch {
            measured_mul: measured.multiplications,
            measured_add: measured.additions,
            predicted_mul: predicted.multiplications,
            predicted_add: predicted.additions,
        });
    }

    let wall_clock_fft = time_median(options.trials, || {
        black_box(
            plan.forward(
                black_box(&input),
                variant,
                OutputOrder::Natural,
                &mut NoCount,
            )
            .expect("length checked"),
        );
    });
    let wall_clock_naive = (n <= options.measure_naive_up_to).then(|| {
        time_median(options.trials, || {
            black_box(
                plan.naive_forward(black_box(&input), &mut NoCount)
                    .expect("length checked"),
            );
        })
    });

    let naive = naive_counts(n);
    Ok(BenchReport {
        p: params.modulus(),
        n,
        radices: plan.radices().to_vec(),
        variant,
        measured,
        predicted,
        naive,
        mult_ratio: ratio(naive.multiplications, predicted.multiplications),
        add_ratio: ratio(naive.additions, predicted.additions),
        wall_clock_fft,
        wall_clock_naive,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Human,
    Csv,
}

impl std::str::FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "human" => Ok(Self::Human),
            "csv" => Ok(Self::Csv),
            other => Err(format!("unknown format `{other}` (expected human or csv)")),
        }
    }
}

pub const CSV_HEADER: [&str; 14] = [
    "p",
    "n",
    "radices",
    "variant",
    "meas_mul",
    "meas_add",
    "pred_mul",
    "pred_add",
    "naive_mul",
    "naive_add",
    "mult_ratio",
    "add_ratio",
    "t_fft_ns",
    "t_naive_ns",
];

/// Decimal rendering of a ratio with at most four fractional digits,
/// rounded half up, trailing zeros removed: `36864/5 -> "7372.8"`.
pub fn format_ratio(r: &Ratio<u64>) -> String {
    const SCALE: u128 = 10_000;
    let num = *r.numer() as u128;
    let den = *r.denom() as u128;
    let scaled = (num * SCALE * 2 + den) / (den * 2);
    let (int, frac) = (scaled / SCALE, scaled % SCALE);
    if frac == 0 {
        return int.to_string();
    }
    let digits = format!("{frac:04}");
    format!("{int}.{}", digits.trim_end_matches('0'))
}

fn radices_field(radices: &[usize]) -> String {
    radices
        .iter()
        .map(|r| r.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// `2x14 3x2` style run-length summary of a schedule.
fn radices_summary(radices: &[usize]) -> String {
    if radices.is_empty() {
        return "(none)".into();
    }
    let mut parts: Vec<(usize, usize)> = Vec::new();
    for &r in radices {
        match parts.last_mut() {
            Some((last, count)) if *last == r => *count += 1,
            _ => parts.push((r, 1)),
        }
    }
    parts
        .iter()
        .map(|&(r, c)| {
            if c == 1 {
                r.to_string()
            } else {
                format!("{r}x{c}")
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn opt_ratio(r: &Option<Ratio<u64>>) -> String {
    r.as_ref().map(format_ratio).unwrap_or_default()
}

/// Renders reports; the output depends only on the reports.
///
/// CSV has a fixed header plus one row per report. Timings are integer
/// nanoseconds, and `t_naive_ns` is left empty when the naive DFT was not run.
pub fn emit_report(reports: &[BenchReport], format: ReportFormat) -> String {
    match format {
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(CSV_HEADER).expect("in-memory write");
            for r in reports {
                w.write_record([
                    r.p.to_string(),
                    r.n.to_string(),
                    radices_field(&r.radices),
                    r.variant.to_string(),
                    r.measured.multiplications.to_string(),
                    r.measured.additions.to_string(),
                    r.predicted.multiplications.to_string(),
                    r.predicted.additions.to_string(),
                    r.naive.multiplications.to_string(),
                    r.naive.additions.to_string(),
                    opt_ratio(&r.mult_ratio),
                    opt_ratio(&r.add_ratio),
                    r.wall_clock_fft.as_nanos().to_string(),
                    r.wall_clock_naive
                        .map(|d| d.as_nanos().to_string())
                        .unwrap_or_default(),
                ])
                .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("flush to Vec")).expect("ascii")
        }
        ReportFormat::Human => {
            let mut out = String::new();
            for r in reports {
                let _ = writeln!(
                    out,
                    "F_{} n = {} radices {} ({})",
                    r.p,
                    r.n,
                    radices_summary(&r.radices),
                    r.variant
                );
                let _ = writeln!(
                    out,
                    "  multiplications: measured {} predicted {} naive {} ratio {}",
                    r.measured.multiplications,
                    r.predicted.multiplications,
                    r.naive.multiplications,
                    opt_ratio(&r.mult_ratio)
                );
                let _ = writeln!(
                    out,
                    "  additions:       measured {} predicted {} naive {} ratio {}",
                    r.measured.additions,
                    r.predicted.additions,
                    r.naive.additions,
                    opt_ratio(&r.add_ratio)
                );
                let naive = match (r.wall_clock_naive, r.time_ratio()) {
                    (Some(t), Some(x)) => format!("{} ns (speedup {x:.1}x)", t.as_nanos()),
                    _ => "skipped".into(),
                };
                let _ = writeln!(
                    out,
                    "  time: fft {} ns, naive {naive}",
                    r.wall_clock_fft.as_nanos()
                );
            }
            out
        }
    }
}
