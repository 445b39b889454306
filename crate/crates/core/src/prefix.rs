//! Prefix tables, border arrays and the compressed POS/LEN form.
//!
//! `π[i]` is the length of the longest substring starting at `i` that matches
//! a prefix of the string; by convention `π[1] = n`. Arrays are stored
//! 0-based (`values[i - 1]` holds entry `i`) while their *values* are lengths
//! or 1-based positions, exactly as printed.

use crate::counter::Tally;
use crate::error::CompressError;
use crate::strings::{letters_match, IndeterminateString, RegularString};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrefixTable {
    values: Vec<usize>,
}

impl PrefixTable {
    /// Wraps raw values after checking `π[1] = n` and `π[i] ≤ n - i + 1`.
    pub fn from_values(values: Vec<usize>) -> Result<Self, String> {
        let n = values.len();
        if n > 0 && values[0] != n {
            return Err(format!("pi[1] = {} but n = {n}", values[0]));
        }
        if let Some(i) = (0..n).find(|&i| values[i] > n - i) {
            return Err(format!("pi[{}] = {} overruns the string", i + 1, values[i]));
        }
        Ok(PrefixTable { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Entry at 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    /// The prefix table of `x[1..m]`, derived without the string.
    pub fn truncate(&self, m: usize) -> PrefixTable {
        let m = m.min(self.len());
        PrefixTable {
            values: (0..m).map(|i| self.values[i].min(m - i)).collect(),
        }
    }

    pub fn into_values(self) -> Vec<usize> {
        self.values
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BorderArray {
    values: Vec<usize>,
}

impl BorderArray {
    /// Checks `β[1] = 0` and `β[i] ≤ β[i-1] + 1`.
    pub fn from_values(values: Vec<usize>) -> Result<Self, String> {
        if values.first().is_some_and(|&b| b != 0) {
            return Err("beta[1] must be 0".into());
        }
        if let Some(i) = (1..values.len()).find(|&i| values[i] > values[i - 1] + 1) {
            return Err(format!("beta[{}] grows by more than one", i + 1));
        }
        Ok(BorderArray { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    /// Border lengths of `x[1..i]` in decreasing order, excluding the empty border.
    pub fn chain(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        std::iter::successors(Some(self.at(i)), move |&b| (b > 0).then(|| self.at(b))).take_while(|&b| b > 0)
    }
}

/// Z-style prefix table with window reuse.
pub(crate) fn z_table<T: Eq, C: Tally>(s: &[T], tally: &mut C) -> Vec<usize> {
    let n = s.len();
    let mut z = vec![0; n];
    if n == 0 {
        return z;
    }
    z[0] = n;
    // [left, right) is the rightmost window known to match a prefix
    let (mut left, mut right) = (0, 0);
    for i in 1..n {
        if i < right && z[i - left] < right - i {
            z[i] = z[i - left];
            continue;
        }
        let mut k = right.saturating_sub(i);
        while i + k < n {
            tally.compare();
            if s[k] != s[i + k] {
                break;
            }
            k += 1;
        }
        z[i] = k;
        if i + k > right {
            left = i;
            right = i + k;
        }
    }
    z
}

pub fn prefix_table_regular(x: &RegularString) -> PrefixTable {
    PrefixTable {
        values: z_table(x.letters(), &mut ()),
    }
}

pub(crate) fn prefix_table_regular_counted<C: Tally>(x: &[u8], tally: &mut C) -> PrefixTable {
    PrefixTable {
        values: z_table(x, tally),
    }
}

/// Prefix table of an indeterminate string by plain match extension at every
/// position. Window reuse is unsound here because matching is not transitive,
/// so the worst case is quadratic.
pub fn prefix_table_indeterminate(x: &IndeterminateString) -> PrefixTable {
    let s = x.letters();
    let n = s.len();
    let mut values = vec![0; n];
    if n > 0 {
        values[0] = n;
    }
    for i in 1..n {
        let mut k = 0;
        while i + k < n && letters_match(s[k], s[i + k]) {
            k += 1;
        }
        values[i] = k;
    }
    PrefixTable { values }
}

/// `β[i] = max{b < i : π[i-b+1] ≥ b}`. Linear: each start `j` marks the ends
/// `j..j+π[j]-1` from the right and stops at the first end already marked by
/// an earlier, longer border.
pub fn border_array_from_prefix(pi: &PrefixTable) -> BorderArray {
    let p = pi.values();
    let n = p.len();
    let mut beta = vec![0; n];
    for (j, &pj) in p.iter().enumerate().skip(1) {
        for end in (j..j + pj).rev() {
            if beta[end] != 0 {
                break;
            }
            beta[end] = end - j + 1;
        }
    }
    BorderArray { values: beta }
}

/// Rebuilds the prefix table from a border array of a regular string.
///
/// A string with this border array is spelled by copying `x[β[i]]` into
/// position `i` whenever `β[i] > 0` and using a fresh letter otherwise; its
/// prefix table is the answer.
pub fn prefix_from_border(beta: &BorderArray) -> PrefixTable {
    let b = beta.values();
    let mut spelled: Vec<usize> = Vec::with_capacity(b.len());
    let mut fresh = 0;
    for (i, &len) in b.iter().enumerate() {
        if len > 0 && len <= i {
            spelled.push(spelled[len - 1]);
        } else {
            spelled.push(fresh);
            fresh += 1;
        }
    }
    PrefixTable {
        values: z_table(&spelled, &mut ()),
    }
}

pub fn border_array_regular(x: &RegularString) -> BorderArray {
    border_array_counted(x.letters(), &mut ())
}

/// Failure-function computation by border-chain extension.
pub(crate) fn border_array_counted<T: Eq, C: Tally>(s: &[T], tally: &mut C) -> BorderArray {
    let n = s.len();
    let mut beta = vec![0; n];
    for i in 1..n {
        let mut b = beta[i - 1];
        loop {
            tally.compare();
            if s[b] == s[i] {
                beta[i] = b + 1;
                break;
            }
            if b == 0 {
                break;
            }
            b = beta[b - 1];
        }
    }
    BorderArray { values: beta }
}

/// `B = max π[i]` over `i ≥ 2`: the longest border of any prefix. Zero when `n ≤ 1`.
pub fn max_border_stat(pi: &PrefixTable) -> usize {
    pi.values().iter().skip(1).copied().max().unwrap_or(0)
}

/// Nonzero entries of a prefix table: positions in `pos`, values in `len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompressedPrefixTable {
    n: usize,
    pos: Vec<usize>,
    len: Vec<usize>,
}

impl CompressedPrefixTable {
    pub fn new(pos: Vec<usize>, len: Vec<usize>) -> Result<Self, CompressError> {
        if pos.len() != len.len() {
            return Err(CompressError::LengthMismatch {
                pos: pos.len(),
                len: len.len(),
            });
        }
        let n = match pos.first() {
            None => 0,
            Some(&1) => len[0],
            Some(_) => return Err(CompressError::MissingFirst),
        };
        if n == 0 && !pos.is_empty() {
            return Err(CompressError::BadFirstLength);
        }
        for k in 0..pos.len() {
            if k > 0 && pos[k] <= pos[k - 1] {
                return Err(CompressError::NotIncreasing(k + 1));
            }
            if len[k] == 0 {
                return Err(CompressError::ZeroLength(k + 1));
            }
            if pos[k] + len[k] - 1 > n {
                return Err(CompressError::OutOfBounds(k + 1));
            }
        }
        Ok(CompressedPrefixTable { n, pos, len })
    }

    /// Length of the underlying string.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pos(&self) -> &[usize] {
        &self.pos
    }

    pub fn len(&self) -> &[usize] {
        &self.len
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pos.iter().copied().zip(self.len.iter().copied())
    }

    /// Two tab-separated columns with a `POS<TAB>LEN` header.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("POS\tLEN\n");
        for (p, l) in self.entries() {
            out.push_str(&format!("{p}\t{l}\n"));
        }
        out
    }

    pub fn from_tsv(text: &str) -> Result<Self, crate::error::ParseError> {
        use crate::error::ParseError;
        let mut lines = text.lines().enumerate();
        match lines.next() {
            Some((_, "POS\tLEN")) => {}
            _ => {
                return Err(ParseError::Table {
                    line: 1,
                    message: "expected header POS<TAB>LEN".into(),
                })
            }
        }
        let (mut pos, mut len) = (Vec::new(), Vec::new());
        for (i, line) in lines {
            let err = |m: &str| ParseError::Table {
                line: i + 1,
                message: m.to_string(),
            };
            let (p, l) = line.split_once('\t').ok_or_else(|| err("expected two columns"))?;
            pos.push(p.parse().map_err(|_| err("bad POS"))?);
            len.push(l.parse().map_err(|_| err("bad LEN"))?);
        }
        Self::new(pos, len).map_err(|e| ParseError::Table {
            line: 0,
            message: e.to_string(),
        })
    }
}

pub fn compress(pi: &PrefixTable) -> CompressedPrefixTable {
    let (pos, len) = pi
        .values()
        .iter()
        .enumerate()
        .filter(|&(_, &v)| v > 0)
        .map(|(i, &v)| (i + 1, v))
        .unzip();
    CompressedPrefixTable { n: pi.len(), pos, len }
}

pub fn decompress(c: &CompressedPrefixTable) -> PrefixTable {
    let mut values = vec![0; c.n];
    for (p, l) in c.entries() {
        values[p - 1] = l;
    }
    PrefixTable { values }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strings::{parse_indeterminate, parse_regular, IndeterminateMode};

    fn pi(s: &str) -> Vec<usize> {
        prefix_table_regular(&parse_regular(s, None).unwrap()).into_values()
    }

    #[test]
    fn regular_prefix_tables() {
        assert_eq!(pi("ababaababa"), [10, 0, 3, 0, 1, 5, 0, 3, 0, 1]);
        assert_eq!(pi("aaaa"), [4, 3, 2, 1]);
        assert_eq!(pi("abcd"), [4, 0, 0, 0]);
        assert!(pi("").is_empty());
    }

    #[test]
    fn indeterminate_prefix_tables() {
        let table = |s: &str| {
            prefix_table_indeterminate(&parse_indeterminate(s, IndeterminateMode::Bracket, None).unwrap()).into_values()
        };
        assert_eq!(table("a[ab]a"), [3, 2, 1]);
        assert_eq!(table("[ab][ab]"), [2, 1]);
        assert_eq!(table("ababaababa"), pi("ababaababa"));
    }

    #[test]
    fn border_arrays() {
        let x = parse_regular("ababaababa", None).unwrap();
        let expected = [0, 0, 1, 2, 3, 1, 2, 3, 4, 5];
        assert_eq!(border_array_regular(&x).values(), expected);
        assert_eq!(border_array_from_prefix(&prefix_table_regular(&x)).values(), expected);
        let from = |v: Vec<usize>| border_array_from_prefix(&PrefixTable::from_values(v).unwrap());
        assert_eq!(from(vec![4, 0, 0, 0]).values(), [0, 0, 0, 0]);
        assert_eq!(from(vec![4, 3, 2, 1]).values(), [0, 1, 2, 3]);
    }

    #[test]
    fn prefix_from_border_examples() {
        let b = BorderArray::from_values(vec![0, 1, 2, 3]).unwrap();
        assert_eq!(prefix_from_border(&b).values(), [4, 3, 2, 1]);
        let b = BorderArray::from_values(vec![0, 0, 1, 2, 3, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(prefix_from_border(&b).values(), [10, 0, 3, 0, 1, 5, 0, 3, 0, 1]);
    }

    #[test]
    fn border_chain_lists_all_borders() {
        let x = parse_regular("ababaababa", None).unwrap();
        let beta = border_array_regular(&x);
        assert_eq!(beta.chain(10).collect::<Vec<_>>(), [5, 3, 1]);
        assert_eq!(beta.chain(1).count(), 0);
    }

    #[test]
    fn max_border() {
        let t = |v: Vec<usize>| max_border_stat(&PrefixTable::from_values(v).unwrap());
        assert_eq!(t(pi("ababaababa")), 5);
        assert_eq!(t(vec![4, 0, 0, 0]), 0);
        assert_eq!(t(vec![4, 3, 2, 1]), 3);
        assert_eq!(t(vec![1]), 0);
        assert_eq!(t(vec![]), 0);
    }

    #[test]
    fn truncation_matches_prefix_string() {
        let full = prefix_table_regular(&parse_regular("ababaababa", None).unwrap());
        assert_eq!(full.truncate(5).values(), pi("ababa"));
    }

    #[test]
    fn compression() {
        let c = compress(&PrefixTable::from_values(pi("ababaababa")).unwrap());
        assert_eq!(c.pos(), [1, 3, 5, 6, 8, 10]);
        assert_eq!(c.len(), [10, 3, 1, 5, 3, 1]);
        let c = compress(&PrefixTable::from_values(vec![4, 0, 0, 0]).unwrap());
        assert_eq!((c.pos(), c.len()), (&[1][..], &[4][..]));
        assert_eq!(CompressedPrefixTable::from_tsv(&c.to_tsv()).unwrap(), c);
    }

    #[test]
    fn malformed_compressed_tables() {
        use CompressError::*;
        assert_eq!(
            CompressedPrefixTable::new(vec![1, 3, 3], vec![4, 1, 1]),
            Err(NotIncreasing(3))
        );
        assert_eq!(CompressedPrefixTable::new(vec![1, 3], vec![4, 0]), Err(ZeroLength(2)));
        assert_eq!(CompressedPrefixTable::new(vec![2], vec![4]), Err(MissingFirst));
        assert_eq!(
            CompressedPrefixTable::new(vec![1], vec![4, 1]),
            Err(LengthMismatch { pos: 1, len: 2 })
        );
        assert_eq!(CompressedPrefixTable::new(vec![1, 4], vec![4, 2]), Err(OutOfBounds(2)));
        assert!(CompressedPrefixTable::new(vec![], vec![]).is_ok());
    }

    #[test]
    fn invalid_raw_tables() {
        assert!(PrefixTable::from_values(vec![3, 0]).is_err());
        assert!(PrefixTable::from_values(vec![2, 2]).is_err());
        assert!(BorderArray::from_values(vec![0, 2]).is_err());
    }
}
