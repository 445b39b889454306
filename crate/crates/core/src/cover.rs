//! Cover arrays and the maximum-no-cover (MNC) array.
//!
//! `γ[i]` is the length of the longest proper cover of `x[1..i]`, or 0.
//! The rooted flavour, for indeterminate strings, only asks each covering
//! occurrence to match the prefix, and so is read straight off `π`.

use crate::prefix::{border_array_from_prefix, border_array_regular, max_border_stat, BorderArray, PrefixTable};
use crate::strings::RegularString;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoverFlavor {
    Regular,
    Rooted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverArray {
    values: Vec<usize>,
    flavor: CoverFlavor,
}

impl CoverArray {
    pub fn from_parts(values: Vec<usize>, flavor: CoverFlavor) -> Self {
        CoverArray { values, flavor }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn flavor(&self) -> CoverFlavor {
        self.flavor
    }

    /// Every proper cover of `x[1..i]`, longest first.
    pub fn chain(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        std::iter::successors(Some(self.at(i)), move |&c| (c > 0).then(|| self.at(c))).take_while(|&c| c > 0)
    }
}

pub fn cover_array_regular(x: &RegularString) -> CoverArray {
    cover_array_from_border(&border_array_regular(x))
}

/// Cover array of a regular string from its border array.
///
/// `root[i]` is the shortest cover of `x[1..i]` (possibly `x[1..i]` itself);
/// the shortest cover of `x[1..i]` is either itself or the root of `β[i]`, and
/// the root `r` covers `x[1..i]` iff some `r`-covered prefix ends at or after
/// `i - r`. Once `x[1..i]` is known to have a cover, its longest cover is `β[i]`
/// when `β[i]` covers, otherwise `γ[β[i]]`.
///
/// `live[q]` is the last prefix end covered by `x[1..q]`. It is refreshed along
/// the whole cover chain of every prefix, so the cost is linear plus the total
/// length of the cover chains.
pub fn cover_array_from_border(beta: &BorderArray) -> CoverArray {
    let n = beta.len();
    // 1-based scratch arrays
    let mut gamma = vec![0usize; n + 1];
    let mut root = vec![0usize; n + 1];
    let mut live_root = vec![0usize; n + 1];
    let mut live = vec![0usize; n + 1];

    for i in 1..=n {
        let len = beta.at(i);
        root[i] = i;
        if len > 0 {
            let r = root[len];
            if i - live_root[r] <= r {
                root[i] = r;
                gamma[i] = if 2 * len >= i || live[len] >= i - len {
                    len
                } else {
                    gamma[len]
                };
                debug_assert!(gamma[i] > 0);
            }
        }
        live_root[root[i]] = i;
        live[i] = i;
        let mut c = gamma[i];
        while c > 0 {
            live[c] = i;
            c = gamma[c];
        }
    }

    gamma.remove(0);
    CoverArray {
        values: gamma,
        flavor: CoverFlavor::Regular,
    }
}

/// Rooted cover array from a prefix table: `γ_R[i]` is the largest `q < i`
/// whose prefix-match occurrences `{p : π[p] ≥ q}` chain from position 1 to
/// `i - q + 1` with no gap wider than `q`. Quadratic in the worst case.
pub fn rooted_cover_array(pi: &PrefixTable) -> CoverArray {
    let p = pi.values();
    let m = p.len();
    let mut gamma = vec![0usize; m];
    for q in 1..m {
        // rightmost position covered by the chain of occurrences so far
        let mut reach = q;
        let mut start = 2;
        while start <= m - q + 1 && start <= reach + 1 {
            if p[start - 1] >= q {
                reach = start + q - 1;
                gamma[reach - 1] = q;
            }
            start += 1;
        }
    }
    CoverArray {
        values: gamma,
        flavor: CoverFlavor::Rooted,
    }
}

/// `B`, the cover array of `x[1..B]` and `MNC[1..B]`, where `MNC[q]` is the
/// longest prefix of length at most `q` that has no cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MncComputation {
    b: usize,
    gamma: CoverArray,
    mnc: Vec<usize>,
}

impl MncComputation {
    fn new(b: usize, gamma: CoverArray) -> Self {
        let mut mnc = vec![0usize; b];
        for q in 1..=b {
            mnc[q - 1] = if gamma.at(q) == 0 { q } else { mnc[q - 2] };
        }
        let out = MncComputation { b, gamma, mnc };
        out.assert_invariants();
        out
    }

    fn assert_invariants(&self) {
        assert_eq!(self.gamma.len(), self.b);
        assert_eq!(self.mnc.len(), self.b);
        for q in 1..=self.b {
            let m = self.mnc[q - 1];
            assert!((1..=q).contains(&m), "MNC[{q}] = {m} out of range");
            assert_eq!(self.gamma.at(m), 0, "MNC[{q}] = {m} has a cover");
            assert!(
                (m + 1..=q).all(|r| self.gamma.at(r) > 0),
                "MNC[{q}] = {m} is not the longest coverless prefix"
            );
            if q > 1 {
                assert!(self.mnc[q - 2] <= m, "MNC decreases at {q}");
            }
        }
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn gamma(&self) -> &CoverArray {
        &self.gamma
    }

    pub fn mnc(&self) -> &[usize] {
        &self.mnc
    }

    /// `MNC[q]`, 1-based.
    #[inline]
    pub fn at(&self, q: usize) -> usize {
        self.mnc[q - 1]
    }
}

/// Computes `B`, then the cover array of `x[1..B]` of the requested flavour
/// from the truncated prefix table, then MNC.
pub fn compute_mnc(pi: &PrefixTable, flavor: CoverFlavor) -> MncComputation {
    let b = max_border_stat(pi);
    let head = pi.truncate(b);
    let gamma = match flavor {
        CoverFlavor::Regular => cover_array_from_border(&border_array_from_prefix(&head)),
        CoverFlavor::Rooted => rooted_cover_array(&head),
    };
    MncComputation::new(b, gamma)
}

/// Longest border of `x` of length at most `k`; pass `usize::MAX` for no cap.
pub fn longest_border_capped(x: &RegularString, k: usize) -> usize {
    if x.is_empty() {
        return 0;
    }
    let beta = border_array_regular(x);
    capped_border_of(&beta, x.len(), k)
}

/// Walks the border chain of `x[1..i]` down to the first length `≤ k`.
pub fn capped_border_of(beta: &BorderArray, i: usize, k: usize) -> usize {
    let mut b = beta.at(i);
    while b > k {
        b = beta.at(b);
    }
    b
}
