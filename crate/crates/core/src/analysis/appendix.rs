//! Exact expected-border bounds.
//!
//! `B_k(w)` is the longest border of `w` of length at most `k`. For every
//! `n ≥ 2k`, `B̄_k(n) = B̄_k(2k)`, and the expected longest border `B̄(n)` lies
//! between `B̄_k(2k)` and `B̄_k(2k)` plus the probability-weighted contribution
//! of borders longer than `k`, bounded by
//! `σ^{-k}·(k(σ-1)+σ)/(σ-1)²`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Pow, Zero};
use serde::{Deserialize, Serialize};

use crate::cover::capped_border_of;
use crate::enumerate::{check_budget, par_fold};
use crate::error::AnalysisError;
use crate::prefix::border_array_counted;

fn big(v: usize) -> BigInt {
    BigInt::from(v)
}

fn require(cond: bool, message: impl FnOnce() -> String) -> Result<(), AnalysisError> {
    if cond {
        Ok(())
    } else {
        Err(AnalysisError::InvalidArgument(message()))
    }
}

/// Number of length-`n` strings over `σ` letters with a border of length
/// `k`: `σ^{n-k}`.
pub fn border_length_count(n: usize, k: usize, sigma: usize) -> Result<BigUint, AnalysisError> {
    require(k < n, || format!("border length {k} must be below n = {n}"))?;
    Ok(Pow::pow(BigUint::from(sigma), (n - k) as u64))
}

/// For each `k` in `1..n`, how many length-`n` strings have a border of
/// length `k`, by comparing `x[1..k]` with `x[n-k+1..n]` directly.
pub fn border_length_census(n: usize, sigma: usize, budget: u64) -> Result<Vec<u64>, AnalysisError> {
    check_budget(sigma, n, budget)?;
    let counts = par_fold(
        sigma,
        n,
        || vec![0u64; n.saturating_sub(1)],
        |acc, x| {
            for k in 1..n {
                if x[..k] == x[n - k..] {
                    acc[k - 1] += 1;
                }
            }
        },
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(s, t)| *s += t);
            a
        },
    );
    Ok(counts)
}

/// `Σ_{m=a}^{b} m·σ^m` in closed form:
/// `[σ^{b+1}(b(σ-1)-1) - σ^a((a-1)(σ-1)-1)] / (σ-1)²`.
pub fn weighted_power_sum(a: usize, b: usize, sigma: usize) -> Result<BigInt, AnalysisError> {
    require(1 <= a && a <= b, || format!("need 1 ≤ a ≤ b, got a = {a}, b = {b}"))?;
    require(sigma >= 2, || format!("need σ ≥ 2, got {sigma}"))?;
    let s = big(sigma);
    let d = &s - 1;
    let hi: BigInt = Pow::pow(&s, (b + 1) as u64) * (big(b) * &d - 1);
    let lo: BigInt = Pow::pow(&s, a as u64) * ((big(a) - 1) * &d - 1);
    let (q, r) = (hi - lo).div_rem(&(&d * &d));
    debug_assert!(r.is_zero());
    Ok(q)
}

/// `Σ_{m=a}^{b} m·σ^m` term by term.
pub fn weighted_power_sum_direct(a: usize, b: usize, sigma: usize) -> BigInt {
    (a..=b).map(|m| big(m) * Pow::pow(big(sigma), m as u64)).sum()
}

/// Exact `B̄_k(2k)`: the mean of `B_k(w)` over all `σ^{2k}` strings `w`.
pub fn expected_capped_border(k: usize, sigma: usize, budget: u64) -> Result<BigRational, AnalysisError> {
    require(k >= 1, || "k must be at least 1".into())?;
    require(sigma >= 1, || "σ must be at least 1".into())?;
    let count = check_budget(sigma, 2 * k, budget)?;
    let sum = par_fold(
        sigma,
        2 * k,
        || 0u64,
        |acc, w| {
            let beta = border_array_counted(w, &mut ());
            *acc += capped_border_of(&beta, w.len(), k) as u64;
        },
        |a, b| a + b,
    );
    Ok(BigRational::new(sum.into(), count.into()))
}

/// Exact `B̄(n)`: the mean longest border of the whole string over all `σ^n`
/// strings of length `n`.
pub fn expected_longest_border(n: usize, sigma: usize, budget: u64) -> Result<BigRational, AnalysisError> {
    let count = check_budget(sigma, n, budget)?;
    let sum = par_fold(
        sigma,
        n,
        || 0u64,
        |acc, w| {
            if !w.is_empty() {
                *acc += border_array_counted(w, &mut ()).at(w.len()) as u64;
            }
        },
        |a, b| a + b,
    );
    Ok(BigRational::new(sum.into(), count.into()))
}

/// `σ^{-k}·(k(σ-1)+σ)/(σ-1)²`.
pub fn border_tail_bound(k: usize, sigma: usize) -> Result<BigRational, AnalysisError> {
    require(k >= 1, || "k must be at least 1".into())?;
    require(sigma >= 2, || format!("need σ ≥ 2, got {sigma}"))?;
    let s = big(sigma);
    let d = &s - 1;
    let num = big(k) * &d + &s;
    let den = Pow::pow(&s, k as u64) * &d * &d;
    Ok(BigRational::new(num, den))
}

/// Truncates a nonnegative rational to `places` decimals.
pub fn truncated_decimal(value: &BigRational, places: usize) -> String {
    let scale = Pow::pow(BigInt::from(10u32), places as u64);
    let scaled = (value.numer() * &scale).div_floor(value.denom());
    let (whole, frac) = scaled.div_rem(&scale);
    if places == 0 {
        whole.to_string()
    } else {
        format!("{whole}.{:0>places$}", frac.to_string())
    }
}

/// Decimal places in CSV and summary renderings.
pub const DECIMAL_PLACES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsResult {
    pub sigma: usize,
    pub k: usize,
    pub lower: BigRational,
    pub tail: BigRational,
    pub upper: BigRational,
}

impl BoundsResult {
    pub fn lower_decimal(&self, places: usize) -> String {
        truncated_decimal(&self.lower, places)
    }

    pub fn upper_decimal(&self, places: usize) -> String {
        truncated_decimal(&self.upper, places)
    }

    pub fn to_record(&self) -> BoundsRecord {
        BoundsRecord {
            sigma: self.sigma,
            k: self.k,
            lower_num: self.lower.numer().to_string(),
            lower_den: self.lower.denom().to_string(),
            tail_num: self.tail.numer().to_string(),
            tail_den: self.tail.denom().to_string(),
            lower_dec: self.lower_decimal(DECIMAL_PLACES),
            upper_dec: self.upper_decimal(DECIMAL_PLACES),
        }
    }

    /// `sigma=2 k=11 → (1.6356…, 1.6420…)`, truncated to four places.
    pub fn summary_line(&self) -> String {
        format!(
            "sigma={} k={} → ({}…, {}…)",
            self.sigma,
            self.k,
            self.lower_decimal(4),
            self.upper_decimal(4)
        )
    }
}

/// One bounds CSV row. Numerators and denominators are exact decimal
/// integers; `lower_dec` and `upper_dec` are truncated renderings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsRecord {
    pub sigma: usize,
    pub k: usize,
    pub lower_num: String,
    pub lower_den: String,
    pub tail_num: String,
    pub tail_den: String,
    pub lower_dec: String,
    pub upper_dec: String,
}

pub fn expected_border_interval(k: usize, sigma: usize, budget: u64) -> Result<BoundsResult, AnalysisError> {
    let tail = border_tail_bound(k, sigma)?;
    let lower = expected_capped_border(k, sigma, budget)?;
    let upper = &lower + &tail;
    Ok(BoundsResult {
        sigma,
        k,
        lower,
        tail,
        upper,
    })
}

/// Whether each later interval lies inside every earlier one widened by
/// `slack` on the upper side. Lower ends must be nondecreasing exactly.
pub fn intervals_nest(results: &[BoundsResult], slack: &BigRational) -> bool {
    results.iter().enumerate().all(|(i, a)| {
        results[i + 1..]
            .iter()
            .all(|b| b.lower >= a.lower && b.upper <= &a.upper + slack)
    })
}
