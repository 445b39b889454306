//! Seeded Monte Carlo estimates of border statistics.
//!
//! Strings have i.i.d. uniform letters drawn from ChaCha8. Samples are split
//! into fixed blocks of [`BLOCK`]; block `b` uses stream `b` of the generator
//! seeded from the user seed, so results are bit-identical regardless of the
//! number of worker threads.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::AnalysisError;
use crate::prefix::{border_array_counted, max_border_stat, prefix_table_regular_counted};

pub const BLOCK: u64 = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Statistic {
    /// `B`: the longest border of any prefix, `max π[2..n]`.
    MaxPrefixBorder,
    /// `β[n]`: the longest border of the whole string.
    LongestBorder,
}

impl Statistic {
    pub fn of(self, x: &[u8]) -> usize {
        if x.is_empty() {
            return 0;
        }
        match self {
            Statistic::MaxPrefixBorder => max_border_stat(&prefix_table_regular_counted(x, &mut ())),
            Statistic::LongestBorder => border_array_counted(x, &mut ()).at(x.len()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub samples: u64,
    pub sum: u64,
    pub sum_squares: u128,
    pub mean: f64,
    /// Standard error of the mean.
    pub std_error: f64,
}

impl Estimate {
    fn from_sums(samples: u64, sum: u64, sum_squares: u128) -> Self {
        let m = samples as f64;
        let mean = sum as f64 / m;
        let var = if samples > 1 {
            ((sum_squares as f64) - m * mean * mean).max(0.0) / (m - 1.0)
        } else {
            0.0
        };
        Estimate {
            samples,
            sum,
            sum_squares,
            mean,
            std_error: (var / m).sqrt(),
        }
    }

    /// `|mean - target|` in units of the standard error.
    pub fn z_score(&self, target: f64) -> f64 {
        if self.std_error == 0.0 {
            if self.mean == target {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            (self.mean - target).abs() / self.std_error
        }
    }
}

pub fn random_letters(rng: &mut impl Rng, n: usize, sigma: usize, out: &mut Vec<u8>) {
    out.clear();
    out.extend((0..n).map(|_| rng.random_range(0..sigma) as u8));
}

/// Generator for block `block` of a run seeded with `seed`.
pub fn block_rng(seed: u64, block: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(block);
    rng
}

pub fn monte_carlo(
    n: usize,
    sigma: usize,
    samples: u64,
    seed: u64,
    statistic: Statistic,
) -> Result<Estimate, AnalysisError> {
    if samples == 0 {
        return Err(AnalysisError::InvalidArgument("samples must be at least 1".into()));
    }
    if !(1..=64).contains(&sigma) {
        return Err(AnalysisError::InvalidArgument(format!("σ = {sigma} is outside 1..=64")));
    }
    let blocks = samples.div_ceil(BLOCK);
    let (sum, sum_squares) = (0..blocks)
        .into_par_iter()
        .map(|b| {
            let mut rng = block_rng(seed, b);
            let mut x = Vec::with_capacity(n);
            let size = BLOCK.min(samples - b * BLOCK);
            let mut acc = (0u64, 0u128);
            for _ in 0..size {
                random_letters(&mut rng, n, sigma, &mut x);
                let v = statistic.of(&x) as u64;
                acc.0 += v;
                acc.1 += u128::from(v) * u128::from(v);
            }
            acc
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    Ok(Estimate::from_sums(samples, sum, sum_squares))
}
