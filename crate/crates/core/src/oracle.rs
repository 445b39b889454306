//! Brute-force reference implementations.
//!
//! Everything here works from the definitions by direct letter comparison and
//! shares only the string and array types with the rest of the crate. Each
//! oracle first tabulates `L[p]`, the longest positionwise match of `x[p..]`
//! against a prefix, by naive extension; every later question ("does
//! `x[1..b]` occur at `p`?") is a lookup, so one string costs `O(n³)`.

use std::fmt::Write as _;

use crate::cover::{CoverArray, CoverFlavor};
use crate::enhanced::MecResult;
use crate::prefix::{BorderArray, PrefixTable};
use crate::strings::{letters_match, IndeterminateString, RegularString};

/// Strings the oracles can compare position by position.
pub trait OracleString {
    fn len(&self) -> usize;
    fn is_empty(&self) -> bool {
        self.len() == 0
    }
    /// Letter equality, 0-based.
    fn same(&self, a: usize, b: usize) -> bool;
    /// The match relation, 0-based; equality for regular strings.
    fn matches(&self, a: usize, b: usize) -> bool;
    fn describe(&self) -> String;
}

impl OracleString for RegularString {
    fn len(&self) -> usize {
        self.letters().len()
    }
    fn same(&self, a: usize, b: usize) -> bool {
        self.letters()[a] == self.letters()[b]
    }
    fn matches(&self, a: usize, b: usize) -> bool {
        self.same(a, b)
    }
    fn describe(&self) -> String {
        self.to_string()
    }
}

impl OracleString for IndeterminateString {
    fn len(&self) -> usize {
        self.letters().len()
    }
    fn same(&self, a: usize, b: usize) -> bool {
        self.letters()[a] == self.letters()[b]
    }
    fn matches(&self, a: usize, b: usize) -> bool {
        letters_match(self.letters()[a], self.letters()[b])
    }
    fn describe(&self) -> String {
        self.to_bracket_notation()
    }
}

/// `L[p]` (0-based `p`) under the relation `rel`.
fn match_lengths<S: OracleString + ?Sized>(x: &S, rel: impl Fn(usize, usize) -> bool) -> Vec<usize> {
    let n = x.len();
    (0..n)
        .map(|p| (0..n - p).take_while(|&j| rel(p + j, j)).count())
        .collect()
}

/// Prefix-match lengths: the prefix table itself.
fn prefix_lengths<S: OracleString + ?Sized>(x: &S) -> Vec<usize> {
    match_lengths(x, |a, b| x.matches(a, b))
}

pub fn brute_prefix_table<S: OracleString + ?Sized>(x: &S) -> PrefixTable {
    PrefixTable::from_values(prefix_lengths(x)).expect("naive match lengths form a prefix table")
}

/// Nonempty proper border lengths of `x[1..i]`, ascending.
pub fn brute_borders<S: OracleString + ?Sized>(x: &S, i: usize) -> Vec<usize> {
    (1..i).filter(|&b| (0..b).all(|j| x.matches(i - b + j, j))).collect()
}

/// Longest-border array by direct comparison; regular strings only.
pub fn brute_border_array(x: &RegularString) -> BorderArray {
    let values = (1..=x.len())
        .map(|i| brute_borders(x, i).last().copied().unwrap_or(0))
        .collect();
    BorderArray::from_values(values).expect("longest borders form a border array")
}

/// Positions of `x[1..i]` covered by occurrences of `x[1..b]` lying inside
/// `x[1..i]`, where `lengths[p-1] ≥ b` marks an occurrence at `p`.
fn covered(lengths: &[usize], i: usize, b: usize) -> usize {
    let mut count = 0;
    let mut reach = 0;
    for p in 1..=i + 1 - b {
        if lengths[p - 1] >= b {
            let end = p + b - 1;
            count += end - reach.max(p - 1);
            reach = end;
        }
    }
    count
}

/// Whether the occurrences recorded in `lengths` of `x[1..q]` cover `x[1..i]`.
fn tiles(lengths: &[usize], i: usize, q: usize) -> bool {
    lengths[i - q] >= q && covered(lengths, i, q) == i
}

/// Number of positions of `x[1..i]` covered by prefix-match occurrences of
/// `x[1..b]` inside `x[1..i]`.
pub fn brute_coverage<S: OracleString + ?Sized>(x: &S, i: usize, b: usize) -> usize {
    covered(&prefix_lengths(x), i, b)
}

/// Regular flavour: substring occurrences (letter equality). Rooted flavour:
/// prefix-match occurrences. The two coincide on regular strings.
pub fn brute_cover_array<S: OracleString + ?Sized>(x: &S, flavor: CoverFlavor) -> CoverArray {
    let lengths = match flavor {
        CoverFlavor::Regular => match_lengths(x, |a, b| x.same(a, b)),
        CoverFlavor::Rooted => prefix_lengths(x),
    };
    let values = (1..=x.len())
        .map(|i| (1..i).rev().find(|&q| tiles(&lengths, i, q)).unwrap_or(0))
        .collect();
    CoverArray::from_parts(values, flavor)
}

fn best_border(lengths: &[usize], i: usize, candidate: impl Fn(usize) -> bool) -> (usize, usize) {
    let mut best = (0, 0);
    for b in 1..i {
        if lengths[i - b] >= b && candidate(b) {
            let c = covered(lengths, i, b);
            if c > best.1 {
                best = (b, c);
            }
        }
    }
    best
}

/// For each prefix, the shortest border covering the most positions, among
/// all nonempty borders.
pub fn brute_mec(x: &RegularString) -> MecResult {
    let lengths = prefix_lengths(x);
    let (mec, cmec) = (1..=x.len()).map(|i| best_border(&lengths, i, |_| true)).unzip();
    MecResult { mec, cmec }
}

/// As [`brute_mec`], with candidates restricted to prefixes that have no
/// rooted cover.
pub fn brute_mec_ind<S: OracleString + ?Sized>(x: &S) -> MecResult {
    let lengths = prefix_lengths(x);
    let coverless: Vec<bool> = (0..=x.len())
        .map(|q| q > 0 && !(1..q).any(|r| tiles(&lengths, q, r)))
        .collect();
    let (mec, cmec) = (1..=x.len())
        .map(|i| best_border(&lengths, i, |b| coverless[b]))
        .unzip();
    MecResult { mec, cmec }
}

/// `MNC[1..b]` from the definition: the longest coverless prefix length `≤ q`.
pub fn brute_mnc(gamma: &CoverArray, b: usize) -> Vec<usize> {
    (1..=b)
        .map(|q| (1..=q).rev().find(|&r| gamma.at(r) == 0).expect("γ[1] = 0"))
        .collect()
}

/// One array compared against its reference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub input: String,
    pub array: String,
    pub reference: Vec<usize>,
    pub candidate: Vec<usize>,
    /// 1-based; `None` iff the arrays are equal.
    pub first_mismatch: Option<usize>,
}

impl OracleReport {
    pub const TSV_HEADER: &'static str = "input\tarray\tfirst_mismatch\treference\tcandidate";

    pub fn compare(input: &str, array: &str, reference: &[usize], candidate: &[usize]) -> Self {
        let first_mismatch = if reference == candidate {
            None
        } else {
            let common = reference.iter().zip(candidate).take_while(|(r, c)| r == c).count();
            Some(common + 1)
        };
        OracleReport {
            input: input.to_string(),
            array: array.to_string(),
            reference: reference.to_vec(),
            candidate: candidate.to_vec(),
            first_mismatch,
        }
    }

    pub fn is_match(&self) -> bool {
        self.first_mismatch.is_none()
    }

    pub fn tsv_row(&self) -> String {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        let mut out = String::new();
        let _ = write!(
            out,
            "{}\t{}\t{}\t{}\t{}",
            self.input,
            self.array,
            self.first_mismatch.map_or_else(|| "-".to_string(), |i| i.to_string()),
            join(&self.reference),
            join(&self.candidate)
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strings::{parse_indeterminate, parse_regular, IndeterminateMode};

    fn reg(s: &str) -> RegularString {
        parse_regular(s, None).unwrap()
    }

    #[test]
    fn prefix_and_borders() {
        let x = reg("ababaababa");
        assert_eq!(brute_prefix_table(&x).values(), [10, 0, 3, 0, 1, 5, 0, 3, 0, 1]);
        assert!(brute_prefix_table(&reg("")).is_empty());
        assert_eq!(brute_borders(&x, 10), [1, 3, 5]);
        assert!(brute_borders(&x, 1).is_empty());
        assert_eq!(brute_borders(&reg("aaaa"), 4), [1, 2, 3]);
        assert_eq!(brute_border_array(&x).values(), [0, 0, 1, 2, 3, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn coverage_counts() {
        let x = reg("ababaababa");
        assert_eq!(brute_coverage(&x, 10, 3), 10);
        assert_eq!(brute_coverage(&x, 10, 1), 6);
        assert_eq!(brute_coverage(&reg("aaaa"), 4, 3), 4);
    }

    #[test]
    fn cover_arrays() {
        assert_eq!(
            brute_cover_array(&reg("ababa"), CoverFlavor::Regular).values(),
            [0, 0, 0, 2, 3]
        );
        assert_eq!(brute_cover_array(&reg("abc"), CoverFlavor::Regular).values(), [0, 0, 0]);
        assert_eq!(brute_cover_array(&reg("ababaaba"), CoverFlavor::Regular).at(8), 3);
        let x = parse_indeterminate("a[ab]a", IndeterminateMode::Bracket, None).unwrap();
        assert_eq!(brute_cover_array(&x, CoverFlavor::Rooted).values(), [0, 1, 2]);
        // no letter of x equals [ab], so substring occurrences find no cover
        assert_eq!(brute_cover_array(&x, CoverFlavor::Regular).values(), [0, 0, 0]);
    }

    #[test]
    fn mec_examples() {
        let r = brute_mec(&reg("ababaababa"));
        assert_eq!(r.mec, [0, 0, 1, 2, 3, 1, 2, 3, 2, 3]);
        assert_eq!(r.cmec, [0, 0, 2, 4, 5, 4, 6, 8, 8, 10]);
        let r = brute_mec(&reg("abaababab"));
        assert_eq!(r.mec, [0, 0, 1, 1, 2, 3, 2, 3, 2]);
        assert_eq!(r.cmec, [0, 0, 2, 3, 4, 6, 6, 8, 8]);
        assert_eq!(brute_mec(&reg("abcd")).cmec, [0; 4]);
        let r = brute_mec(&reg("aaaa"));
        assert_eq!((r.mec, r.cmec), (vec![0, 1, 1, 1], vec![0, 2, 3, 4]));
    }

    #[test]
    fn indeterminate_mec() {
        let x = parse_indeterminate("a[ab]a", IndeterminateMode::Bracket, None).unwrap();
        let r = brute_mec_ind(&x);
        assert_eq!((r.mec, r.cmec), (vec![0, 1, 1], vec![0, 2, 3]));
        let y = reg("abaababab");
        assert_eq!(brute_mec_ind(&y.to_indeterminate()), brute_mec(&y));
    }

    #[test]
    fn report_rows() {
        let ok = OracleReport::compare("ab", "pi", &[2, 0], &[2, 0]);
        assert!(ok.is_match());
        assert_eq!(ok.tsv_row(), "ab\tpi\t-\t2,0\t2,0");
        let bad = OracleReport::compare("aa", "pi", &[2, 1], &[2, 0]);
        assert_eq!(bad.first_mismatch, Some(2));
        assert_eq!(OracleReport::compare("a", "x", &[1], &[1, 0]).first_mismatch, Some(2));
    }
}
