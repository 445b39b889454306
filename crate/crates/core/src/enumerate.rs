//! Enumeration of all strings of a given length over `{0, .., σ-1}`.
//!
//! Strings are numbered in lexicographic order, most significant letter
//! first. Sweeps are split into contiguous index ranges so that any partition
//! visits every string exactly once.

use rayon::prelude::*;

use crate::error::BudgetExceeded;

/// Default cap on the number of strings a single sweep may visit.
pub const DEFAULT_BUDGET: u64 = 1 << 24;

/// `σ^n`, or `None` when it does not fit in a `u64`.
pub fn string_count(sigma: usize, n: usize) -> Option<u64> {
    u32::try_from(n).ok().and_then(|e| (sigma as u64).checked_pow(e))
}

/// `σ^n`, refused when it exceeds `budget`.
pub fn check_budget(sigma: usize, n: usize, budget: u64) -> Result<u64, BudgetExceeded> {
    match string_count(sigma, n) {
        Some(c) if c <= budget => Ok(c),
        c => Err(BudgetExceeded {
            requested: c.map_or_else(|| (sigma as u128).saturating_pow(n as u32), u128::from),
            limit: u128::from(budget),
        }),
    }
}

/// Writes the string with lexicographic rank `index` into `out`.
pub fn decode(sigma: usize, mut index: u64, out: &mut [u8]) {
    for slot in out.iter_mut().rev() {
        *slot = (index % sigma as u64) as u8;
        index /= sigma as u64;
    }
}

/// Steps `letters` to its lexicographic successor; false after the last string.
pub fn advance(sigma: usize, letters: &mut [u8]) -> bool {
    for slot in letters.iter_mut().rev() {
        if usize::from(*slot) + 1 < sigma {
            *slot += 1;
            return true;
        }
        *slot = 0;
    }
    false
}

/// Folds `visit` over every string of length `n` in parallel.
///
/// Each worker folds a contiguous range into its own accumulator from
/// `identity`; accumulators are merged with `merge`, which must be
/// associative and commutative for the result to be partition-independent.
pub fn par_fold<T, I, V, M>(sigma: usize, n: usize, identity: I, visit: V, merge: M) -> T
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    V: Fn(&mut T, &[u8]) + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    let total = string_count(sigma, n).expect("caller checks the budget first");
    const CHUNK: u64 = 1 << 12;
    let chunks = total.div_ceil(CHUNK);
    (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut acc = identity();
            let start = c * CHUNK;
            let end = (start + CHUNK).min(total);
            let mut letters = vec![0u8; n];
            decode(sigma, start, &mut letters);
            for _ in start..end {
                visit(&mut acc, &letters);
                advance(sigma, &mut letters);
            }
            acc
        })
        .reduce(&identity, &merge)
}
