//! Operation counting shared by the instrumented algorithms.
//!
//! One operation is one letter comparison, one inner-loop step (border chain
//! or MNC chain) or one write to MEC, CMEC, PR or CPR. Both MEC algorithms
//! are counted under the same rule.

use std::fmt;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounter {
    pub symbol_comparisons: u64,
    pub inner_iterations: u64,
    pub array_writes: u64,
}

impl OpCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn total(&self) -> u64 {
        self.symbol_comparisons + self.inner_iterations + self.array_writes
    }

    /// Tab-separated `n, algorithm, symbol_comparisons, inner_iterations, array_writes, total`.
    pub fn tsv_row(&self, n: usize, algorithm: &str) -> String {
        format!(
            "{n}\t{algorithm}\t{}\t{}\t{}\t{}",
            self.symbol_comparisons,
            self.inner_iterations,
            self.array_writes,
            self.total()
        )
    }

    pub const TSV_HEADER: &'static str = "n\talgorithm\tsymbol_comparisons\tinner_iterations\tarray_writes\ttotal";
}

impl std::ops::AddAssign for OpCounter {
    fn add_assign(&mut self, rhs: Self) {
        self.symbol_comparisons += rhs.symbol_comparisons;
        self.inner_iterations += rhs.inner_iterations;
        self.array_writes += rhs.array_writes;
    }
}

impl fmt::Display for OpCounter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "comparisons={} iterations={} writes={} total={}",
            self.symbol_comparisons,
            self.inner_iterations,
            self.array_writes,
            self.total()
        )
    }
}

/// Sink for operation events. `()` discards them, so uninstrumented calls
/// compile to the bare algorithm.
pub(crate) trait Tally {
    fn compare(&mut self);
    fn step(&mut self);
    fn write(&mut self, count: u64);
}

impl Tally for () {
    #[inline(always)]
    fn compare(&mut self) {}
    #[inline(always)]
    fn step(&mut self) {}
    #[inline(always)]
    fn write(&mut self, _: u64) {}
}

impl Tally for OpCounter {
    #[inline(always)]
    fn compare(&mut self) {
        self.symbol_comparisons += 1;
    }
    #[inline(always)]
    fn step(&mut self) {
        self.inner_iterations += 1;
    }
    #[inline(always)]
    fn write(&mut self, count: u64) {
        self.array_writes += count;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn total_is_sum_of_parts() {
        let mut c = OpCounter::new();
        c.compare();
        c.compare();
        c.step();
        c.write(4);
        assert_eq!(c.total(), 7);
        assert_eq!(c.tsv_row(5, "ECP"), "5\tECP\t2\t1\t4\t7");
    }
}
