//! Oracle sweeps: every production array checked against its brute-force
//! reference, exhaustively over small lengths or on seeded random inputs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cover::{compute_mnc, cover_array_regular, rooted_cover_array, CoverFlavor};
use crate::enhanced::{
    compute_mec, compute_mec_border_based, compute_mec_compressed, compute_mec_ind, compute_mec_prefix_based, MecResult,
};
use crate::enumerate::{check_budget, par_fold};
use crate::error::AnalysisError;
use crate::oracle::{
    brute_border_array, brute_cover_array, brute_mec, brute_mec_ind, brute_mnc, brute_prefix_table, OracleReport,
    OracleString,
};
use crate::prefix::{
    border_array_from_prefix, border_array_regular, compress, prefix_from_border, prefix_table_indeterminate,
    prefix_table_regular,
};
use crate::strings::{Alphabet, IndeterminateLetter, IndeterminateString, RegularString};

/// A MEC implementation under test.
pub type MecImpl = dyn Fn(&RegularString) -> MecResult + Sync;

/// The production pipeline: prefix table, MNC, then the MEC scan.
pub fn default_mec(x: &RegularString) -> MecResult {
    compute_mec_prefix_based(x, None)
}

/// Mismatch reports kept in a summary; the count is always exact.
const KEPT_REPORTS: usize = 20;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifySummary {
    pub strings: u64,
    pub comparisons: u64,
    pub mismatch_count: u64,
    pub mismatches: Vec<OracleReport>,
}

impl VerifySummary {
    pub fn is_clean(&self) -> bool {
        self.mismatch_count == 0
    }

    fn record(&mut self, report: OracleReport) {
        self.comparisons += 1;
        if !report.is_match() {
            self.mismatch_count += 1;
            if self.mismatches.len() < KEPT_REPORTS {
                self.mismatches.push(report);
            }
        }
    }

    pub fn merge(mut self, other: VerifySummary) -> VerifySummary {
        self.strings += other.strings;
        self.comparisons += other.comparisons;
        self.mismatch_count += other.mismatch_count;
        let room = KEPT_REPORTS.saturating_sub(self.mismatches.len());
        self.mismatches.extend(other.mismatches.into_iter().take(room));
        self
    }
}

/// Compares π, β (direct and from π), π from β, γ, MNC, MEC and CMEC (from
/// `mec`, the border-based baseline and the compressed variant) with the
/// oracles.
pub fn check_regular(x: &RegularString, mec: &MecImpl) -> VerifySummary {
    let mut s = VerifySummary {
        strings: 1,
        ..Default::default()
    };
    let name = x.describe();
    let mut cmp = |array: &str, reference: &[usize], candidate: &[usize]| {
        s.record(OracleReport::compare(&name, array, reference, candidate));
    };

    let pi_ref = brute_prefix_table(x);
    let pi = prefix_table_regular(x);
    cmp("pi", pi_ref.values(), pi.values());
    let beta_ref = brute_border_array(x);
    let beta = border_array_regular(x);
    cmp("beta", beta_ref.values(), beta.values());
    cmp(
        "beta_from_pi",
        beta_ref.values(),
        border_array_from_prefix(&pi).values(),
    );
    cmp("pi_from_beta", pi_ref.values(), prefix_from_border(&beta).values());

    let gamma_ref = brute_cover_array(x, CoverFlavor::Regular);
    cmp("gamma", gamma_ref.values(), cover_array_regular(x).values());
    let mnc = compute_mnc(&pi, CoverFlavor::Regular);
    cmp("MNC", &brute_mnc(&gamma_ref, mnc.b()), mnc.mnc());

    let reference = brute_mec(x);
    let candidate = mec(x);
    cmp("MEC", &reference.mec, &candidate.mec);
    cmp("CMEC", &reference.cmec, &candidate.cmec);
    let ecb = compute_mec_border_based(x, None);
    cmp("MEC_border", &reference.mec, &ecb.mec);
    cmp("CMEC_border", &reference.cmec, &ecb.cmec);
    let packed = compute_mec_compressed(&compress(&pi), &mnc);
    cmp("MEC_compressed", &reference.mec, &packed.mec);
    cmp("CMEC_compressed", &reference.cmec, &packed.cmec);
    s
}

/// π, rooted γ and MEC/CMEC of an indeterminate string against the oracles.
pub fn check_indeterminate(x: &IndeterminateString) -> VerifySummary {
    let mut s = VerifySummary {
        strings: 1,
        ..Default::default()
    };
    let name = x.describe();
    let mut cmp = |array: &str, reference: &[usize], candidate: &[usize]| {
        s.record(OracleReport::compare(&name, array, reference, candidate));
    };
    let pi = prefix_table_indeterminate(x);
    cmp("pi", brute_prefix_table(x).values(), pi.values());
    cmp(
        "gamma_rooted",
        brute_cover_array(x, CoverFlavor::Rooted).values(),
        rooted_cover_array(&pi).values(),
    );
    let reference = brute_mec_ind(x);
    let candidate = compute_mec_ind(&pi, None);
    cmp("MEC", &reference.mec, &candidate.mec);
    cmp("CMEC", &reference.cmec, &candidate.cmec);
    s
}

fn latin(sigma: usize) -> Result<Alphabet, AnalysisError> {
    Alphabet::latin(sigma).map_err(|e| AnalysisError::InvalidArgument(format!("sigma = {sigma}: {e}")))
}

/// All strings of every length `0..=n_max` over the first `sigma` letters.
pub fn verify_exhaustive(
    sigma: usize,
    n_max: usize,
    budget: u64,
    mec: &MecImpl,
) -> Result<VerifySummary, AnalysisError> {
    let alphabet = latin(sigma)?;
    let mut remaining = budget;
    for n in 0..=n_max {
        let count = check_budget(sigma, n, remaining)?;
        remaining -= count;
    }
    let summary = (0..=n_max)
        .map(|n| {
            par_fold(
                sigma,
                n,
                VerifySummary::default,
                |acc, letters| {
                    let x =
                        RegularString::from_indices(alphabet.clone(), letters.to_vec()).expect("indices below sigma");
                    *acc = std::mem::take(acc).merge(check_regular(&x, mec));
                },
                VerifySummary::merge,
            )
        })
        .fold(VerifySummary::default(), VerifySummary::merge);
    Ok(summary)
}

/// Uniform length in `1..=n_max`, alphabet size in `1..=sigma_max`; each
/// letter is a singleton with probability 1/2, else a uniform nonempty subset.
pub fn random_indeterminate(rng: &mut impl Rng, n_max: usize, sigma_max: usize) -> IndeterminateString {
    let sigma = rng.random_range(1..=sigma_max);
    let n = rng.random_range(1..=n_max);
    let full = (1u64 << sigma) - 1;
    let letters = (0..n)
        .map(|_| {
            let mask = if rng.random_bool(0.5) {
                1u64 << rng.random_range(0..sigma)
            } else {
                rng.random_range(1..=full)
            };
            IndeterminateLetter::from_mask(mask).expect("mask is nonzero")
        })
        .collect();
    let alphabet = Alphabet::latin(sigma).expect("sigma is small");
    IndeterminateString::new(alphabet, letters).expect("masks fit the alphabet")
}

/// `count` seeded random indeterminate strings checked against the oracles.
pub fn verify_random_indeterminate(count: usize, n_max: usize, sigma_max: usize, seed: u64) -> VerifySummary {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let inputs: Vec<_> = (0..count)
        .map(|_| random_indeterminate(&mut rng, n_max, sigma_max))
        .collect();
    inputs
        .par_iter()
        .map(check_indeterminate)
        .reduce(VerifySummary::default, VerifySummary::merge)
}

/// The indeterminate pipeline on all-singleton strings against the regular
/// one, for every string of length `1..=n_max`.
pub fn verify_singleton_agreement(sigma: usize, n_max: usize, budget: u64) -> Result<VerifySummary, AnalysisError> {
    let alphabet = latin(sigma)?;
    let mut remaining = budget;
    for n in 1..=n_max {
        remaining -= check_budget(sigma, n, remaining)?;
    }
    Ok((1..=n_max)
        .map(|n| {
            par_fold(
                sigma,
                n,
                VerifySummary::default,
                |acc, letters| {
                    let x =
                        RegularString::from_indices(alphabet.clone(), letters.to_vec()).expect("indices below sigma");
                    let pi = prefix_table_regular(&x);
                    let regular = compute_mec(&pi, &compute_mnc(&pi, CoverFlavor::Regular), None);
                    let embedded = crate::enhanced::mec_of_indeterminate(&x.to_indeterminate());
                    let name = x.to_string();
                    acc.strings += 1;
                    acc.record(OracleReport::compare(&name, "MEC", &regular.mec, &embedded.mec));
                    acc.record(OracleReport::compare(&name, "CMEC", &regular.cmec, &embedded.cmec));
                },
                VerifySummary::merge,
            )
        })
        .fold(VerifySummary::default(), VerifySummary::merge))
}
