//! Wall-clock scaling measurements for the quadratic solver.
//!
//! For each requested size the harness draws one random pair over the
//! alphabet `0..size`, does an untimed warm-up solve, then takes the
//! median of the timed repeats. Consecutive-size ratios make the
//! quadratic growth visible: doubling the size should land near 4.

use std::hint::black_box;
use std::time::{Duration, Instant};

use lcwis_core::rng::SplitMix64;
use lcwis_core::solve::lcwis;
use lcwis_core::{Sequence, Symbol};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BenchError {
    #[error("at least one size is required")]
    NoSizes,
    #[error("sizes must be strictly ascending ({0} then {1})")]
    NotAscending(usize, usize),
    #[error("sizes must be positive")]
    ZeroSize,
    #[error("repeats must be at least 1")]
    ZeroRepeats,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub size: usize,
    pub median: Duration,
    /// Median divided by the previous row's median; absent on the first row.
    pub ratio: Option<f64>,
}

pub fn run(sizes: &[usize], repeats: usize, seed: u64) -> Result<Vec<BenchRow>, BenchError> {
    if sizes.is_empty() {
        return Err(BenchError::NoSizes);
    }
    if sizes.contains(&0) {
        return Err(BenchError::ZeroSize);
    }
    for pair in sizes.windows(2) {
        if pair[0] >= pair[1] {
            return Err(BenchError::NotAscending(pair[0], pair[1]));
        }
    }
    if repeats == 0 {
        return Err(BenchError::ZeroRepeats);
    }

    let mut rng = SplitMix64::new(seed);
    let mut rows: Vec<BenchRow> = Vec::with_capacity(sizes.len());
    for &size in sizes {
        let mut draw = || {
            Sequence::new(
                (0..size)
                    .map(|_| Symbol::new(rng.below(size as u64) as u32))
                    .collect(),
            )
        };
        let a = draw();
        let b = draw();

        black_box(lcwis(black_box(&a), black_box(&b), false).value);
        let mut times: Vec<Duration> = (0..repeats)
            .map(|_| {
                let start = Instant::now();
                black_box(lcwis(black_box(&a), black_box(&b), false).value);
                start.elapsed()
            })
            .collect();
        times.sort();
        let median = times[repeats / 2];

        let ratio = rows
            .last()
            .map(|prev| median.as_secs_f64() / prev.median.as_secs_f64());
        rows.push(BenchRow {
            size,
            median,
            ratio,
        });
    }
    Ok(rows)
}
