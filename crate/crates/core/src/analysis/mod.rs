//! Expected-border bounds, the operation-count experiment and supporting
//! censuses.

pub mod appendix;
pub mod experiment;
pub mod periodicity;
pub mod sampling;

pub use appendix::{
    border_length_census, border_length_count, border_tail_bound, expected_border_interval, expected_capped_border,
    expected_longest_border, intervals_nest, truncated_decimal, weighted_power_sum, weighted_power_sum_direct,
    BoundsRecord, BoundsResult,
};
pub use experiment::{ops_experiment, read_csv, write_csv, Aggregate, Algorithm, ExperimentRow, ExperimentTable, Mode};
pub use periodicity::{coverless_border_counts, scan_iterations_per_index, weakly_periodic_census};
pub use sampling::{monte_carlo, Estimate, Statistic};
