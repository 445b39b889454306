//! Coverless borders and the work they cause in the MEC scan.
//!
//! A coverless border of `x[1..j]` is a border whose prefix has no cover.
//! Such borders are weakly periodic, so their lengths at least double along
//! the border chain and there are at most `log₂ j` of them. Each inner
//! iteration of the MEC scan at start `i` visits one coverless prefix `q'` and
//! so corresponds to exactly one coverless border of `x[1..i+q'-1]`; summing
//! over `j` gives the total iteration count.

use crate::cover::cover_array_from_border;
use crate::enumerate::{check_budget, par_fold};
use crate::error::AnalysisError;
use crate::prefix::{border_array_counted, prefix_table_regular_counted};

/// For each `j`, the number of coverless nonempty borders of `x[1..j]`.
pub fn coverless_border_counts(x: &[u8]) -> Vec<usize> {
    let beta = border_array_counted(x, &mut ());
    let gamma = cover_array_from_border(&beta);
    let mut counts = vec![0usize; x.len()];
    // coverless borders of x[1..j]: those of x[1..β[j]], plus β[j] if coverless
    for j in 1..=x.len() {
        let b = beta.at(j);
        if b > 0 {
            counts[j - 1] = counts[b - 1] + usize::from(gamma.at(b) == 0);
        }
    }
    counts
}

/// Inner iterations of the MEC scan at each start index `i` (1-based; entry
/// 1 is always 0): the number of coverless prefixes of length `≤ π[i]`.
pub fn scan_iterations_per_index(x: &[u8]) -> Vec<usize> {
    let pi = prefix_table_regular_counted(x, &mut ());
    let beta = border_array_counted(x, &mut ());
    let gamma = cover_array_from_border(&beta);
    let mut coverless_upto = vec![0usize; x.len() + 1];
    for q in 1..=x.len() {
        coverless_upto[q] = coverless_upto[q - 1] + usize::from(gamma.at(q) == 0);
    }
    (1..=x.len())
        .map(|i| if i == 1 { 0 } else { coverless_upto[pi.at(i)] })
        .collect()
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PeriodicityCensus {
    pub strings: u64,
    /// Pairs `(x, j)` with `2^count > j`.
    pub violations: u64,
    /// Largest coverless-border count seen for any prefix.
    pub max_count: usize,
    pub first_violation: Option<(Vec<u8>, usize)>,
}

impl PeriodicityCensus {
    fn merge(mut self, other: Self) -> Self {
        self.strings += other.strings;
        self.violations += other.violations;
        self.max_count = self.max_count.max(other.max_count);
        self.first_violation = self.first_violation.or(other.first_violation);
        self
    }
}

/// Checks `count(j) ≤ log₂ j`, as `2^count(j) ≤ j`, for every prefix of
/// every string of length `n`.
pub fn weakly_periodic_census(n: usize, sigma: usize, budget: u64) -> Result<PeriodicityCensus, AnalysisError> {
    check_budget(sigma, n, budget)?;
    Ok(par_fold(
        sigma,
        n,
        PeriodicityCensus::default,
        |acc, x| {
            acc.strings += 1;
            for (j0, &c) in coverless_border_counts(x).iter().enumerate() {
                acc.max_count = acc.max_count.max(c);
                if (1u64 << c) > (j0 + 1) as u64 {
                    acc.violations += 1;
                    acc.first_violation.get_or_insert_with(|| (x.to_vec(), j0 + 1));
                }
            }
        },
        PeriodicityCensus::merge,
    ))
}

/// The first string of length `n` (in lexicographic order) and index `i`
/// where the scan does more than `⌊log₂ n⌋ + 1` inner iterations.
pub fn per_index_bound_counterexample(
    n: usize,
    sigma: usize,
    budget: u64,
) -> Result<Option<(Vec<u8>, usize, usize)>, AnalysisError> {
    check_budget(sigma, n, budget)?;
    let bound = n.checked_ilog2().map_or(0, |l| l as usize + 1);
    let mut x = vec![0u8; n];
    loop {
        if let Some((i0, &it)) = scan_iterations_per_index(&x)
            .iter()
            .enumerate()
            .find(|(_, &it)| it > bound)
        {
            return Ok(Some((x, i0 + 1, it)));
        }
        if !crate::enumerate::advance(sigma, &mut x) {
            return Ok(None);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counter::OpCounter;
    use crate::cover::CoverFlavor;
    use crate::enhanced::prefix_based;
    use crate::enumerate::DEFAULT_BUDGET;
    use crate::oracle::{brute_borders, brute_cover_array};
    use crate::strings::{Alphabet, RegularString};

    fn oracle_counts(x: &[u8]) -> Vec<usize> {
        let s = RegularString::from_indices(Alphabet::latin(3).unwrap(), x.to_vec()).unwrap();
        let gamma = brute_cover_array(&s, CoverFlavor::Regular);
        (1..=x.len())
            .map(|j| brute_borders(&s, j).into_iter().filter(|&b| gamma.at(b) == 0).count())
            .collect()
    }

    #[test]
    fn counts_match_oracle() {
        for x in [
            &[0u8, 1, 0, 1, 0, 0, 1, 0, 1, 0][..],
            &[0, 0, 0, 0, 0],
            &[0, 1, 2, 0, 1, 0, 1, 2, 0, 1],
        ] {
            assert_eq!(coverless_border_counts(x), oracle_counts(x));
        }
    }

    #[test]
    fn iterations_sum_to_coverless_borders() {
        let mut x = vec![0u8; 11];
        loop {
            let mut c = OpCounter::new();
            prefix_based(&x, &mut c);
            let total: usize = coverless_border_counts(&x).iter().sum();
            let per_index: usize = scan_iterations_per_index(&x).iter().sum();
            assert_eq!((c.inner_iterations as usize, per_index), (total, total));
            if !crate::enumerate::advance(2, &mut x) {
                break;
            }
        }
    }

    #[test]
    fn small_census_is_clean() {
        let c = weakly_periodic_census(10, 2, DEFAULT_BUDGET).unwrap();
        assert_eq!((c.strings, c.violations), (1024, 0));
    }

    #[test]
    fn per_index_bound_fails() {
        // a, ab, abb, abbb, abbbb are all coverless and all occur at 6
        let x = [0u8, 1, 1, 1, 1, 0, 1, 1, 1, 1];
        assert_eq!(scan_iterations_per_index(&x)[5], 5);
        assert!(per_index_bound_counterexample(10, 2, DEFAULT_BUDGET).unwrap().is_some());
    }
}
