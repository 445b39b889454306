//! Operation-count comparison of the prefix-table pipeline (ECP) and the
//! border-array baseline (ECB).

use std::fs::File;
use std::path::Path;

use serde::{de::DeserializeOwned, Deserialize, Serialize};

use crate::analysis::sampling::{block_rng, random_letters, BLOCK};
use crate::counter::OpCounter;
use crate::enhanced::{border_based, prefix_based};
use crate::enumerate::{check_budget, par_fold};
use crate::error::{AnalysisError, BudgetExceeded};

use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Algorithm {
    #[serde(rename = "ECP")]
    Ecp,
    #[serde(rename = "ECB")]
    Ecb,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Ecp => "ECP",
            Algorithm::Ecb => "ECB",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Sampled { samples: u64, seed: u64 },
}

/// One CSV row: `n,algorithm,count,total_ops,max_ops,mean_ops,mean_ops_per_n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRow {
    pub n: usize,
    pub algorithm: Algorithm,
    pub count: u64,
    pub total_ops: u64,
    pub max_ops: u64,
    pub mean_ops: f64,
    pub mean_ops_per_n: f64,
}

/// Exact per-length, per-algorithm sums of each counter.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Aggregate {
    pub count: u64,
    pub totals: OpCounter,
    pub max_total: u64,
}

impl Aggregate {
    fn add(&mut self, c: &OpCounter) {
        self.count += 1;
        self.totals += *c;
        self.max_total = self.max_total.max(c.total());
    }

    fn merge(mut self, other: Aggregate) -> Aggregate {
        self.count += other.count;
        self.totals += other.totals;
        self.max_total = self.max_total.max(other.max_total);
        self
    }

    pub fn mean_total(&self) -> f64 {
        self.totals.total() as f64 / self.count as f64
    }

    /// Mean inner-loop iterations per letter.
    pub fn mean_iterations_per_position(&self, n: usize) -> f64 {
        self.totals.inner_iterations as f64 / (self.count as f64 * n as f64)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentTable {
    pub sigma: usize,
    pub rows: Vec<ExperimentRow>,
    /// `(n, ECP, ECB)` exact aggregates behind the rows.
    pub aggregates: Vec<(usize, Aggregate, Aggregate)>,
}

impl ExperimentTable {
    pub fn aggregate(&self, n: usize) -> Option<(&Aggregate, &Aggregate)> {
        self.aggregates.iter().find(|a| a.0 == n).map(|a| (&a.1, &a.2))
    }

    /// `mean(ECP total) / mean(ECB total)` per length, computed exactly from
    /// the totals (both algorithms see the same strings).
    pub fn ratios(&self) -> Vec<(usize, f64)> {
        self.aggregates
            .iter()
            .map(|(n, p, b)| (*n, p.totals.total() as f64 / b.totals.total() as f64))
            .collect()
    }
}

type Pair = (Aggregate, Aggregate);

fn visit(acc: &mut Pair, x: &[u8]) {
    let mut ecp = OpCounter::new();
    prefix_based(x, &mut ecp);
    let mut ecb = OpCounter::new();
    border_based(x, &mut ecb);
    acc.0.add(&ecp);
    acc.1.add(&ecb);
}

fn merge(a: Pair, b: Pair) -> Pair {
    (a.0.merge(b.0), a.1.merge(b.1))
}

fn row(n: usize, algorithm: Algorithm, a: &Aggregate) -> ExperimentRow {
    let mean = a.mean_total();
    ExperimentRow {
        n,
        algorithm,
        count: a.count,
        total_ops: a.totals.total(),
        max_ops: a.max_total,
        mean_ops: mean,
        mean_ops_per_n: if n == 0 { 0.0 } else { mean / n as f64 },
    }
}

/// Runs both algorithms with counters over every (or a seeded sample of)
/// string of each length in `n_min..=n_max`. Exhaustive runs refuse when the
/// total number of strings exceeds `budget`; sampled runs refuse when
/// `samples` times the number of lengths does.
pub fn ops_experiment(
    n_min: usize,
    n_max: usize,
    sigma: usize,
    mode: Mode,
    budget: u64,
) -> Result<ExperimentTable, AnalysisError> {
    if n_min > n_max {
        return Err(AnalysisError::InvalidArgument(format!(
            "min n {n_min} exceeds max n {n_max}"
        )));
    }
    if !(1..=64).contains(&sigma) {
        return Err(AnalysisError::InvalidArgument(format!("σ = {sigma} is outside 1..=64")));
    }
    let lengths = (n_max - n_min + 1) as u64;
    match mode {
        Mode::Exhaustive => {
            let mut remaining = budget;
            for n in n_min..=n_max {
                remaining -= check_budget(sigma, n, remaining)?;
            }
        }
        Mode::Sampled { samples, .. } => {
            if samples == 0 {
                return Err(AnalysisError::InvalidArgument("samples must be at least 1".into()));
            }
            let requested = u128::from(samples) * u128::from(lengths);
            if requested > u128::from(budget) {
                return Err(BudgetExceeded {
                    requested,
                    limit: budget.into(),
                }
                .into());
            }
        }
    }

    let mut rows = Vec::new();
    let mut aggregates = Vec::new();
    for n in n_min..=n_max {
        let identity = || (Aggregate::default(), Aggregate::default());
        let (ecp, ecb) = match mode {
            Mode::Exhaustive => par_fold(sigma, n, identity, visit, merge),
            Mode::Sampled { samples, seed } => {
                // one stream family per length keeps lengths independent
                let seed = seed ^ (n as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
                (0..samples.div_ceil(BLOCK))
                    .into_par_iter()
                    .map(|b| {
                        let mut rng = block_rng(seed, b);
                        let mut acc = identity();
                        let mut x = Vec::with_capacity(n);
                        for _ in 0..BLOCK.min(samples - b * BLOCK) {
                            random_letters(&mut rng, n, sigma, &mut x);
                            visit(&mut acc, &x);
                        }
                        acc
                    })
                    .reduce(identity, merge)
            }
        };
        rows.push(row(n, Algorithm::Ecp, &ecp));
        rows.push(row(n, Algorithm::Ecb, &ecb));
        aggregates.push((n, ecp, ecb));
    }
    Ok(ExperimentTable {
        sigma,
        rows,
        aggregates,
    })
}

/// Writes `records` with a header row to `path`.
pub fn write_csv<T: Serialize>(records: &[T], path: &Path) -> Result<(), AnalysisError> {
    let file = File::create(path).map_err(|source| AnalysisError::Io {
        path: path.into(),
        source,
    })?;
    let mut w = csv::Writer::from_writer(file);
    for r in records {
        w.serialize(r).map_err(|source| AnalysisError::Csv {
            path: path.into(),
            source,
        })?;
    }
    w.flush().map_err(|source| AnalysisError::Io {
        path: path.into(),
        source,
    })
}

pub fn read_csv<T: DeserializeOwned>(path: &Path) -> Result<Vec<T>, AnalysisError> {
    let mut r = csv::Reader::from_path(path).map_err(|source| AnalysisError::Csv {
        path: path.into(),
        source,
    })?;
    r.deserialize()
        .collect::<Result<_, _>>()
        .map_err(|source| AnalysisError::Csv {
            path: path.into(),
            source,
        })
}

pub const EXPERIMENT_HEADER: &str = "n,algorithm,count,total_ops,max_ops,mean_ops,mean_ops_per_n";
pub const BOUNDS_HEADER: &str = "sigma,k,lower_num,lower_den,tail_num,tail_den,lower_dec,upper_dec";
