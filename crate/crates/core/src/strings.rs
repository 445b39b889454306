//! Alphabets, regular strings and indeterminate strings.
//!
//! Letters are stored as symbol indices into an [`Alphabet`]. An indeterminate
//! letter is a nonempty subset of the alphabet held as a 64-bit mask, so two
//! letters match exactly when their masks share a bit.

use std::fmt;

use crate::error::ParseError;

/// Maximum alphabet size; one bit per symbol in an [`IndeterminateLetter`].
pub const MAX_SIGMA: usize = 64;

/// An ordered set of distinct characters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    pub fn new(symbols: impl IntoIterator<Item = char>) -> Result<Self, ParseError> {
        let symbols: Vec<char> = symbols.into_iter().collect();
        if symbols.is_empty() {
            return Err(ParseError::EmptyAlphabet);
        }
        if symbols.len() > MAX_SIGMA {
            return Err(ParseError::AlphabetTooLarge(symbols.len()));
        }
        for (i, c) in symbols.iter().enumerate() {
            if symbols[..i].contains(c) {
                return Err(ParseError::DuplicateSymbol(*c));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// The first `sigma` lowercase letters, `a`, `b`, ...
    pub fn latin(sigma: usize) -> Result<Self, ParseError> {
        if sigma > 26 {
            return Err(ParseError::AlphabetTooLarge(sigma));
        }
        Self::new((b'a'..b'a' + sigma as u8).map(char::from))
    }

    /// The DNA alphabet `A, C, G, T`.
    pub fn dna() -> Self {
        Alphabet {
            symbols: vec!['A', 'C', 'G', 'T'],
        }
    }

    pub fn sigma(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn index_of(&self, c: char) -> Option<u8> {
        self.symbols.iter().position(|&s| s == c).map(|i| i as u8)
    }

    pub fn symbol(&self, index: u8) -> char {
        self.symbols[index as usize]
    }

    /// Bit mask with one bit set for every symbol of the alphabet.
    pub fn full_mask(&self) -> u64 {
        if self.sigma() == 64 {
            u64::MAX
        } else {
            (1u64 << self.sigma()) - 1
        }
    }
}

/// A string whose letters are single symbols.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RegularString {
    alphabet: Alphabet,
    letters: Vec<u8>,
}

impl RegularString {
    /// Builds a string from symbol indices, checking each against the alphabet.
    pub fn from_indices(alphabet: Alphabet, letters: Vec<u8>) -> Result<Self, ParseError> {
        if let Some(pos) = letters.iter().position(|&l| l as usize >= alphabet.sigma()) {
            return Err(ParseError::SymbolOutOfRange {
                position: pos + 1,
                index: letters[pos] as usize,
            });
        }
        Ok(RegularString { alphabet, letters })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Embeds the string as an indeterminate string of singletons.
    pub fn to_indeterminate(&self) -> IndeterminateString {
        IndeterminateString {
            alphabet: self.alphabet.clone(),
            letters: self
                .letters
                .iter()
                .map(|&l| IndeterminateLetter::singleton(l))
                .collect(),
        }
    }
}

impl fmt::Display for RegularString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &l in &self.letters {
            write!(f, "{}", self.alphabet.symbol(l))?;
        }
        Ok(())
    }
}

/// A nonempty set of symbol indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndeterminateLetter(u64);

impl IndeterminateLetter {
    /// Returns `None` for the empty set.
    pub fn from_mask(mask: u64) -> Option<Self> {
        (mask != 0).then_some(IndeterminateLetter(mask))
    }

    pub fn singleton(symbol: u8) -> Self {
        IndeterminateLetter(1u64 << symbol)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn contains(self, symbol: u8) -> bool {
        self.0 >> symbol & 1 == 1
    }

    pub fn members(self) -> impl Iterator<Item = u8> {
        (0..64u8).filter(move |&s| self.contains(s))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Always false: letters are nonempty sets.
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_singleton(self) -> bool {
        self.0.is_power_of_two()
    }
}

/// True iff the two letters share a symbol. Symmetric and reflexive, but
/// not transitive: `a ≈ {a,b}` and `{a,b} ≈ b` while `a ≉ b`.
#[inline]
pub fn letters_match(lambda: IndeterminateLetter, mu: IndeterminateLetter) -> bool {
    lambda.0 & mu.0 != 0
}

/// A string over nonempty subsets of an alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndeterminateString {
    alphabet: Alphabet,
    letters: Vec<IndeterminateLetter>,
}

impl IndeterminateString {
    pub fn new(alphabet: Alphabet, letters: Vec<IndeterminateLetter>) -> Result<Self, ParseError> {
        let full = alphabet.full_mask();
        if let Some(pos) = letters.iter().position(|l| l.mask() & !full != 0) {
            return Err(ParseError::SymbolOutOfRange {
                position: pos + 1,
                index: (letters[pos].mask() & !full).trailing_zeros() as usize,
            });
        }
        Ok(IndeterminateString { alphabet, letters })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn letters(&self) -> &[IndeterminateLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// A string is indeterminate iff some letter has two or more members.
    pub fn is_indeterminate(&self) -> bool {
        self.letters.iter().any(|l| !l.is_singleton())
    }

    /// The regular string this one embeds, if every letter is a singleton.
    pub fn to_regular(&self) -> Option<RegularString> {
        let letters = self
            .letters
            .iter()
            .map(|l| l.is_singleton().then(|| l.mask().trailing_zeros() as u8))
            .collect::<Option<Vec<_>>>()?;
        Some(RegularString {
            alphabet: self.alphabet.clone(),
            letters,
        })
    }

    /// Bracket notation: singletons as bare characters, larger sets as `[..]`.
    pub fn to_bracket_notation(&self) -> String {
        let mut out = String::new();
        for l in &self.letters {
            if l.is_singleton() {
                out.push(self.alphabet.symbol(l.mask().trailing_zeros() as u8));
            } else {
                out.push('[');
                out.extend(l.members().map(|s| self.alphabet.symbol(s)));
                out.push(']');
            }
        }
        out
    }

    /// IUPAC rendering; only meaningful over the DNA alphabet.
    pub fn to_iupac(&self) -> Option<String> {
        if self.alphabet != Alphabet::dna() {
            return None;
        }
        self.letters.iter().map(|l| iupac_code(l.mask() as u8)).collect()
    }
}

/// Parses a regular string. Without an alphabet, the alphabet is the sorted set
/// of distinct characters in `text`.
pub fn parse_regular(text: &str, alphabet: Option<&Alphabet>) -> Result<RegularString, ParseError> {
    let alphabet = match alphabet {
        Some(a) => a.clone(),
        None => {
            let mut symbols: Vec<char> = text.chars().collect();
            symbols.sort_unstable();
            symbols.dedup();
            if symbols.is_empty() {
                // the empty string still needs some alphabet
                symbols.push('a');
            }
            Alphabet::new(symbols)?
        }
    };
    let letters = text
        .chars()
        .enumerate()
        .map(|(i, c)| {
            alphabet.index_of(c).ok_or(ParseError::UnknownSymbol {
                position: i + 1,
                symbol: c,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RegularString { alphabet, letters })
}

/// Input notation for indeterminate strings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndeterminateMode {
    /// `a[ab]b`: bare characters are singletons, bracket groups are sets.
    Bracket,
    /// IUPAC nucleotide codes over `{A,C,G,T}`, case-insensitive.
    Iupac,
}

const IUPAC: [(char, u8); 15] = [
    ('A', 0b0001),
    ('C', 0b0010),
    ('G', 0b0100),
    ('T', 0b1000),
    ('R', 0b0101),
    ('Y', 0b1010),
    ('S', 0b0110),
    ('W', 0b1001),
    ('K', 0b1100),
    ('M', 0b0011),
    ('B', 0b1110),
    ('D', 0b1101),
    ('H', 0b1011),
    ('V', 0b0111),
    ('N', 0b1111),
];

fn iupac_mask(c: char) -> Option<u8> {
    let c = c.to_ascii_uppercase();
    IUPAC.iter().find(|(code, _)| *code == c).map(|&(_, m)| m)
}

fn iupac_code(mask: u8) -> Option<char> {
    IUPAC.iter().find(|(_, m)| *m == mask).map(|&(c, _)| c)
}

/// Parses an indeterminate string.
///
/// In bracket mode the alphabet is inferred from every character that appears,
/// inside or outside groups; `alphabet` overrides that inference. IUPAC mode
/// always uses `A, C, G, T` and ignores `alphabet`.
pub fn parse_indeterminate(
    text: &str,
    mode: IndeterminateMode,
    alphabet: Option<&Alphabet>,
) -> Result<IndeterminateString, ParseError> {
    match mode {
        IndeterminateMode::Iupac => {
            let letters = text
                .chars()
                .enumerate()
                .map(|(i, c)| {
                    iupac_mask(c)
                        .map(|m| IndeterminateLetter(m as u64))
                        .ok_or(ParseError::UnknownIupac {
                            position: i + 1,
                            symbol: c,
                        })
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(IndeterminateString {
                alphabet: Alphabet::dna(),
                letters,
            })
        }
        IndeterminateMode::Bracket => {
            let groups = split_bracket_groups(text)?;
            let alphabet = match alphabet {
                Some(a) => a.clone(),
                None => {
                    let mut symbols: Vec<char> = groups.iter().flatten().map(|&(_, c)| c).collect();
                    symbols.sort_unstable();
                    symbols.dedup();
                    if symbols.is_empty() {
                        symbols.push('a');
                    }
                    Alphabet::new(symbols)?
                }
            };
            let letters = groups
                .iter()
                .map(|group| {
                    let mut mask = 0u64;
                    for &(pos, c) in group {
                        let idx = alphabet.index_of(c).ok_or(ParseError::UnknownSymbol {
                            position: pos,
                            symbol: c,
                        })?;
                        mask |= 1u64 << idx;
                    }
                    Ok(IndeterminateLetter(mask))
                })
                .collect::<Result<Vec<_>, ParseError>>()?;
            Ok(IndeterminateString { alphabet, letters })
        }
    }
}

/// Splits bracket notation into letter groups of (1-based char position, char).
fn split_bracket_groups(text: &str) -> Result<Vec<Vec<(usize, char)>>, ParseError> {
    let mut groups = Vec::new();
    let mut open: Option<(usize, Vec<(usize, char)>)> = None;
    for (i, c) in text.chars().enumerate() {
        let pos = i + 1;
        match (c, open.as_mut()) {
            ('[', None) => open = Some((pos, Vec::new())),
            ('[', Some(_)) => return Err(ParseError::NestedBracket { position: pos }),
            (']', None) => return Err(ParseError::UnbalancedBracket { position: pos }),
            (']', Some(_)) => {
                let (start, members) = open.take().unwrap();
                if members.is_empty() {
                    return Err(ParseError::EmptyGroup { position: start });
                }
                groups.push(members);
            }
            (c, Some((_, members))) => members.push((pos, c)),
            (c, None) => groups.push(vec![(pos, c)]),
        }
    }
    if let Some((start, _)) = open {
        return Err(ParseError::UnbalancedBracket { position: start });
    }
    Ok(groups)
}
