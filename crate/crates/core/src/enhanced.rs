//! Minimum enhanced cover arrays.
//!
//! For each prefix `x[1..j]`, `MEC[j]` is the length of the shortest border of
//! `x[1..j]` covering the maximum number of positions, and `CMEC[j]` is that
//! number; both are 0 when `x[1..j]` has no nonempty border.
//!
//! [`compute_mec`] drives everything off the prefix table. Each start position
//! `i ≥ 2` with `q = π[i] > 0` is an occurrence of every prefix of length at
//! most `q`; only the coverless ones (found by walking MNC) can be minimum
//! enhanced covers, since a cover of a border covers everything the border
//! does and is shorter. For each such `q'` the rightmost occurrence `PR[q']`
//! and covered-position count `CPR[q']` are advanced, and the entry at
//! `i + q' - 1` is updated with a `≥` test on MEC and a `>` test on CMEC so that
//! ties go to the shorter border.

use crate::counter::{OpCounter, Tally};
use crate::cover::{compute_mnc, cover_array_from_border, CoverFlavor, MncComputation};
use crate::prefix::{
    border_array_counted, prefix_table_indeterminate, prefix_table_regular_counted, BorderArray, CompressedPrefixTable,
    PrefixTable,
};
use crate::strings::{IndeterminateString, RegularString};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MecResult {
    pub mec: Vec<usize>,
    pub cmec: Vec<usize>,
}

impl MecResult {
    pub fn len(&self) -> usize {
        self.mec.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mec.is_empty()
    }

    /// Checks the array invariants against the prefix table the result came from.
    pub fn check(&self, pi: &PrefixTable) -> Result<(), String> {
        let n = pi.len();
        if self.mec.len() != n || self.cmec.len() != n {
            return Err(format!(
                "arrays have lengths {}, {} for n = {n}",
                self.mec.len(),
                self.cmec.len()
            ));
        }
        for i in 1..=n {
            let (q, c) = (self.mec[i - 1], self.cmec[i - 1]);
            if q >= i.max(1) && q != 0 {
                return Err(format!("MEC[{i}] = {q} is not proper"));
            }
            if c > i {
                return Err(format!("CMEC[{i}] = {c} exceeds {i}"));
            }
            let has_border = (2..=i).any(|s| pi.at(s) > i - s);
            if has_border != (q > 0) {
                return Err(format!("MEC[{i}] = {q} disagrees with the borders of x[1..{i}]"));
            }
            if q > 0 && pi.at(i - q + 1) < q {
                return Err(format!("MEC[{i}] = {q} is not a border"));
            }
        }
        Ok(())
    }
}

/// Per-length rightmost occurrence (`PR`) and covered-position count (`CPR`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageState {
    pub pr: Vec<usize>,
    pub cpr: Vec<usize>,
}

impl CoverageState {
    fn new<C: Tally>(b: usize, tally: &mut C) -> Self {
        tally.write(2 * b as u64);
        CoverageState {
            pr: vec![1; b],
            cpr: (1..=b).collect(),
        }
    }

    /// Records an occurrence of `x[1..q]` starting at `start` and returns the
    /// updated count of positions it covers.
    #[inline]
    fn occur<C: Tally>(&mut self, q: usize, start: usize, tally: &mut C) -> usize {
        let gap = start - self.pr[q - 1];
        self.cpr[q - 1] += gap.min(q);
        self.pr[q - 1] = start;
        tally.write(2);
        self.cpr[q - 1]
    }
}

struct MecArrays {
    mec: Vec<usize>,
    cmec: Vec<usize>,
}

impl MecArrays {
    fn new<C: Tally>(n: usize, tally: &mut C) -> Self {
        tally.write(2 * n as u64);
        MecArrays {
            mec: vec![0; n],
            cmec: vec![0; n],
        }
    }

    /// Offers border `q` of `x[1..end]` with coverage `covered`.
    #[inline]
    fn offer<C: Tally>(&mut self, end: usize, q: usize, covered: usize, tally: &mut C) {
        let t = end - 1;
        if covered >= self.cmec[t] {
            self.mec[t] = q;
            tally.write(1);
            if covered > self.cmec[t] {
                self.cmec[t] = covered;
                tally.write(1);
            }
        }
    }

    fn finish(self) -> MecResult {
        MecResult {
            mec: self.mec,
            cmec: self.cmec,
        }
    }
}

/// The main loop over `(i, π[i])` pairs with `i ≥ 2` and `π[i] > 0`.
fn mec_from_occurrences<C: Tally>(
    n: usize,
    occurrences: impl Iterator<Item = (usize, usize)>,
    mnc: &MncComputation,
    tally: &mut C,
) -> (MecResult, CoverageState) {
    let mut arrays = MecArrays::new(n, tally);
    let mut state = CoverageState::new(mnc.b(), tally);
    for (i, mut q) in occurrences {
        while q > 0 {
            tally.step();
            let qp = mnc.at(q);
            let covered = state.occur(qp, i, tally);
            arrays.offer(i + qp - 1, qp, covered, tally);
            q = qp - 1;
        }
    }
    (arrays.finish(), state)
}

fn mec_from_table<C: Tally>(pi: &PrefixTable, mnc: &MncComputation, tally: &mut C) -> (MecResult, CoverageState) {
    let occurrences = pi.values().iter().enumerate().skip(1).map(|(i, &q)| (i + 1, q));
    mec_from_occurrences(pi.len(), occurrences, mnc, tally)
}

/// MEC and CMEC from a prefix table and its MNC computation.
pub fn compute_mec(pi: &PrefixTable, mnc: &MncComputation, counter: Option<&mut OpCounter>) -> MecResult {
    compute_mec_with_state(pi, mnc, counter).0
}

/// As [`compute_mec`], also returning the final `PR` and `CPR` arrays.
pub fn compute_mec_with_state(
    pi: &PrefixTable,
    mnc: &MncComputation,
    counter: Option<&mut OpCounter>,
) -> (MecResult, CoverageState) {
    match counter {
        Some(c) => mec_from_table(pi, mnc, c),
        None => mec_from_table(pi, mnc, &mut ()),
    }
}

/// `PR` and `CPR` for every length `q ≤ b`, covered or not: each `i ≥ 2`
/// records an occurrence of every prefix of length at most `min(π[i], b)`.
///
/// The main loop only advances the coverless lengths, so the two states agree
/// exactly at the MNC fixed points `MNC[q] = q`. Cost is `Σ min(π[i], b)`.
pub fn coverage_by_occurrence(pi: &PrefixTable, b: usize) -> CoverageState {
    let mut state = CoverageState::new(b, &mut ());
    for i in 2..=pi.len() {
        for q in 1..=pi.at(i).min(b) {
            state.occur(q, i, &mut ());
        }
    }
    state
}

/// MEC for an indeterminate string: the same loop, with MNC built from the
/// rooted cover array.
pub fn compute_mec_ind(pi: &PrefixTable, counter: Option<&mut OpCounter>) -> MecResult {
    let mnc = compute_mnc(pi, CoverFlavor::Rooted);
    compute_mec(pi, &mnc, counter)
}

/// Prefix table, rooted MNC and MEC of an indeterminate string.
pub fn mec_of_indeterminate(x: &IndeterminateString) -> MecResult {
    compute_mec_ind(&prefix_table_indeterminate(x), None)
}

/// MEC driven by the POS/LEN form; zero entries of `π` never enter the loop.
pub fn compute_mec_compressed(c: &CompressedPrefixTable, mnc: &MncComputation) -> MecResult {
    mec_from_occurrences(c.n(), c.entries().skip(1), mnc, &mut ()).0
}

/// Prefix-table pipeline on a regular string: prefix table, MNC, MEC. With a
/// counter, letter comparisons of the prefix table are tallied along with the
/// main loop; MNC construction is not counted.
pub fn compute_mec_prefix_based(x: &RegularString, counter: Option<&mut OpCounter>) -> MecResult {
    match counter {
        Some(c) => prefix_based(x.letters(), c),
        None => prefix_based(x.letters(), &mut ()),
    }
}

pub(crate) fn prefix_based<C: Tally>(x: &[u8], tally: &mut C) -> MecResult {
    let pi = prefix_table_regular_counted(x, tally);
    let mnc = compute_mnc(&pi, CoverFlavor::Regular);
    mec_from_table(&pi, &mnc, tally).0
}

/// Border-array baseline.
///
/// Builds the failure function, then for every end position `j` walks the
/// full border chain `β[j], β[β[j]], ...`, skipping lengths that have a cover
/// and applying the same `PR`/`CPR` and MEC/CMEC updates as [`compute_mec`].
/// Every chain step is counted, coverless or not.
pub fn compute_mec_border_based(x: &RegularString, counter: Option<&mut OpCounter>) -> MecResult {
    match counter {
        Some(c) => border_based(x.letters(), c),
        None => border_based(x.letters(), &mut ()),
    }
}

pub(crate) fn border_based<C: Tally>(x: &[u8], tally: &mut C) -> MecResult {
    let n = x.len();
    let beta = border_array_counted(x, tally);
    let b = beta.values().iter().copied().max().unwrap_or(0);
    let head =
        BorderArray::from_values(beta.values()[..b].to_vec()).expect("prefix of a border array is a border array");
    let gamma = cover_array_from_border(&head);
    let mut arrays = MecArrays::new(n, tally);
    let mut state = CoverageState::new(b, tally);
    for end in 2..=n {
        let mut len = beta.at(end);
        while len > 0 {
            tally.step();
            if gamma.at(len) == 0 {
                let covered = state.occur(len, end - len + 1, tally);
                arrays.offer(end, len, covered, tally);
            }
            len = beta.at(len);
        }
    }
    arrays.finish()
}
