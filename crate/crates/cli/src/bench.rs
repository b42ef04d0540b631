//! Wall-clock comparison of the product expansion and the two partition
//! routes. Reporting only: nothing here passes or fails.

use std::hint::black_box;
use std::time::{Duration, Instant};

use pentaseries_core::{partial_product, partition_series, PartitionTable};
use serde::{Deserialize, Serialize};

pub const CSV_HEADER: &str = "task,n,wall_ns,max_coeff_bits";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchTask {
    /// `partial_product(n, n)`, O(n^2) big-int subtractions.
    Product,
    /// Partition numbers by inverting the closed form, O(n^2).
    Inverse,
    /// Partition numbers by the pentagonal recurrence, O(n^1.5).
    Recurrence,
}

impl BenchTask {
    pub const ALL: [BenchTask; 3] = [BenchTask::Product, BenchTask::Inverse, BenchTask::Recurrence];

    pub fn name(self) -> &'static str {
        match self {
            BenchTask::Product => "product",
            BenchTask::Inverse => "inverse",
            BenchTask::Recurrence => "recurrence",
        }
    }

    /// Runs the task once and returns the largest coefficient bit length.
    pub fn run(self, n: usize) -> u64 {
        match self {
            BenchTask::Product => black_box(partial_product(n, n)).max_coeff_bits(),
            BenchTask::Inverse => black_box(partition_series(n)).max_coeff_bits(),
            BenchTask::Recurrence => {
                let mut table = PartitionTable::new();
                table.extend_to(n);
                black_box(&table).values().iter().map(|v| v.bits()).max().unwrap_or(0)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub task: String,
    pub n: usize,
    pub wall_ns: u64,
    pub max_coeff_bits: u64,
}

impl BenchRecord {
    pub fn csv_row(&self) -> String {
        format!("{},{},{},{}", self.task, self.n, self.wall_ns, self.max_coeff_bits)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchOptions {
    pub warmup: usize,
    pub repetitions: usize,
}

impl Default for BenchOptions {
    fn default() -> Self {
        BenchOptions { warmup: 1, repetitions: 5 }
    }
}

fn median(mut samples: Vec<Duration>) -> Duration {
    samples.sort_unstable();
    samples[samples.len() / 2]
}

/// One record per task and size: the median wall time over
/// `options.repetitions` runs, after `options.warmup` discarded runs.
pub fn run_bench(sizes: &[usize], options: BenchOptions) -> Vec<BenchRecord> {
    let repetitions = options.repetitions.max(1);
    let mut records = Vec::with_capacity(sizes.len() * BenchTask::ALL.len());
    for &n in sizes {
        for task in BenchTask::ALL {
            for _ in 0..options.warmup {
                task.run(n);
            }
            let mut bits = 0;
            let samples = (0..repetitions)
                .map(|_| {
                    let start = Instant::now();
                    bits = task.run(n);
                    start.elapsed()
                })
                .collect();
            let wall_ns = u64::try_from(median(samples).as_nanos()).unwrap_or(u64::MAX).max(1);
            records.push(BenchRecord {
                task: task.name().to_owned(),
                n,
                wall_ns,
                max_coeff_bits: bits,
            });
        }
    }
    records
}

/// Least-squares slope of `ln(wall_ns)` against `ln(n)` for one task.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrowthFit {
    pub task: String,
    pub exponent: f64,
}

pub fn fit_growth_exponents(records: &[BenchRecord]) -> Vec<GrowthFit> {
    let mut fits = vec![];
    for task in BenchTask::ALL {
        let points: Vec<(f64, f64)> = records
            .iter()
            .filter(|r| r.task == task.name())
            .map(|r| ((r.n as f64).ln(), (r.wall_ns as f64).ln()))
            .collect();
        if let Some(exponent) = slope(&points) {
            fits.push(GrowthFit { task: task.name().to_owned(), exponent });
        }
    }
    fits
}

fn slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_of_power_law() {
        let recs: Vec<BenchRecord> = [100usize, 200, 400]
            .iter()
            .map(|&n| BenchRecord {
                task: "inverse".into(),
                n,
                wall_ns: (n * n) as u64,
                max_coeff_bits: 1,
            })
            .collect();
        let fits = fit_growth_exponents(&recs);
        assert_eq!(fits.len(), 1);
        assert!((fits[0].exponent - 2.0).abs() < 1e-9);
        assert!(fit_growth_exponents(&recs[..1]).is_empty());
    }

    #[test]
    fn median_picks_middle() {
        let d = |n| Duration::from_nanos(n);
        assert_eq!(median(vec![d(5), d(1), d(3)]), d(3));
    }

    #[test]
    fn smoke() {
        let recs = run_bench(&[50], BenchOptions { warmup: 0, repetitions: 1 });
        assert_eq!(recs.len(), 3);
        assert!(recs.iter().all(|r| r.wall_ns > 0));
        assert_eq!(recs[0].max_coeff_bits, 1);
        // p(50) = 204226
        assert_eq!(recs[1].max_coeff_bits, 18);
        assert_eq!(recs[1].max_coeff_bits, recs[2].max_coeff_bits);
    }
}
