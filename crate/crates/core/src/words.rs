//! Binary words under the factor order and the recursive word family
//! `α_{i+1} = α_i^{s_i} ᾱ_i^{s_i}` with `α_1 = 01`.
//!
//! All positions exposed by this module are 1-based.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Longest word any construction in this crate is allowed to materialize.
pub const MAX_WORD_LEN: u128 = 1 << 27;

/// Longest length the divergence scan will try before giving up.
pub const MAX_DIVERGENCE_SCAN: usize = 1 << 14;

/// A finite word over `{0, 1}`.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinaryWord(Vec<u8>);

impl BinaryWord {
    pub fn empty() -> Self {
        BinaryWord(Vec::new())
    }

    pub fn from_letters(letters: Vec<u8>) -> Result<Self> {
        if letters.iter().any(|&b| b > 1) {
            let shown: String = letters.iter().map(|b| b.to_string()).collect();
            return Err(Error::InvalidBinaryWord(shown));
        }
        Ok(BinaryWord(letters))
    }

    pub(crate) fn from_letters_unchecked(letters: Vec<u8>) -> Self {
        debug_assert!(letters.iter().all(|&b| b <= 1));
        BinaryWord(letters)
    }

    /// Every binary word of length `n`, in lexicographic order.
    pub fn all_of_length(n: usize) -> impl Iterator<Item = BinaryWord> {
        assert!(n < 64, "refusing to enumerate 2^{n} words");
        (0u64..1 << n).map(move |bits| {
            BinaryWord((0..n).map(|k| ((bits >> (n - 1 - k)) & 1) as u8).collect())
        })
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Ones complement: every letter `x` becomes `1 - x`.
    pub fn complement(&self) -> BinaryWord {
        BinaryWord(self.0.iter().map(|&b| 1 - b).collect())
    }

    pub fn concat(&self, other: &BinaryWord) -> BinaryWord {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        BinaryWord(letters)
    }

    /// The factor of length `len` starting at 1-based position `start`.
    pub fn factor(&self, start: usize, len: usize) -> Option<BinaryWord> {
        let begin = start.checked_sub(1)?;
        self.0
            .get(begin..begin + len)
            .map(|s| BinaryWord(s.to_vec()))
    }

    /// True iff `self` occurs as a contiguous subword of `host`.
    pub fn is_factor_of(&self, host: &BinaryWord) -> bool {
        is_factor(self, host)
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryWord({self})")
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        s.chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::InvalidBinaryWord(s.to_string())),
            })
            .collect::<Result<Vec<u8>>>()
            .map(BinaryWord)
    }
}

impl Serialize for BinaryWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BinaryWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An eventually constant sequence of positive integers `(s_1, s_2, ...)`.
///
/// Stored in normal form: the prefix never ends with a copy of the tail, so
/// `2,1,1` and `2,1` denote (and compare equal as) the same sequence.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SequenceSpec {
    prefix: Vec<u64>,
    tail: u64,
}

impl SequenceSpec {
    pub fn new(prefix: Vec<u64>, tail: u64) -> Result<Self> {
        if tail == 0 || prefix.contains(&0) {
            let mut terms: Vec<String> = prefix.iter().map(u64::to_string).collect();
            terms.push(tail.to_string());
            return Err(Error::InvalidSequence(terms.join(",")));
        }
        let mut prefix = prefix;
        while prefix.last() == Some(&tail) {
            prefix.pop();
        }
        Ok(SequenceSpec { prefix, tail })
    }

    /// The constant sequence `(c, c, c, ...)`.
    pub fn constant(c: u64) -> Result<Self> {
        Self::new(Vec::new(), c)
    }

    pub fn prefix(&self) -> &[u64] {
        &self.prefix
    }

    pub fn tail(&self) -> u64 {
        self.tail
    }

    /// The term `s_k` (1-based). `k = 0` is treated as `k = 1`.
    pub fn term(&self, k: usize) -> u64 {
        let k = k.max(1);
        self.prefix.get(k - 1).copied().unwrap_or(self.tail)
    }

    /// `s_1 s_2 ... s_k`, saturating.
    pub fn product(&self, k: usize) -> u128 {
        (1..=k).fold(1u128, |acc, j| acc.saturating_mul(self.term(j) as u128))
    }

    /// Number of indices after which every term equals the tail.
    fn significant_len(&self) -> usize {
        self.prefix.len()
    }

    /// Lexicographic comparison of the two infinite sequences.
    pub fn lex_cmp(&self, other: &SequenceSpec) -> Ordering {
        let horizon = self.significant_len().max(other.significant_len()) + 1;
        (1..=horizon)
            .map(|k| self.term(k).cmp(&other.term(k)))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }

    /// First 1-based index at which the two sequences differ.
    pub fn first_difference(&self, other: &SequenceSpec) -> Option<usize> {
        let horizon = self.significant_len().max(other.significant_len()) + 1;
        (1..=horizon).find(|&k| self.term(k) != other.term(k))
    }
}

impl PartialOrd for SequenceSpec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SequenceSpec {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lex_cmp(other)
    }
}

impl fmt::Display for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.prefix {
            write!(f, "{s},")?;
        }
        write!(f, "{}", self.tail)
    }
}

impl fmt::Debug for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SequenceSpec(")?;
        for s in &self.prefix {
            write!(f, "{s},")?;
        }
        write!(f, "{},...)", self.tail)
    }
}

impl FromStr for SequenceSpec {
    type Err = Error;

    /// Comma-separated positive integers; the last one repeats forever.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidSequence(s.to_string());
        let mut terms = s
            .split(',')
            .map(|t| t.trim().parse::<u64>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        let tail = terms.pop().ok_or_else(bad)?;
        SequenceSpec::new(terms, tail).map_err(|_| bad())
    }
}

impl Serialize for SequenceSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SequenceSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub fn complement(w: &BinaryWord) -> BinaryWord {
    w.complement()
}

/// `|α_i| = 2^i s_1 ... s_{i-1}`, saturating.
pub fn alpha_len(spec: &SequenceSpec, i: usize) -> u128 {
    if i >= 120 {
        return u128::MAX;
    }
    (1u128 << i).saturating_mul(spec.product(i.saturating_sub(1)))
}

pub fn alpha(spec: &SequenceSpec, i: usize) -> Result<BinaryWord> {
    if i == 0 {
        return Err(Error::ZeroIndex);
    }
    let len = alpha_len(spec, i);
    if len > MAX_WORD_LEN {
        return Err(Error::TooLarge(len));
    }
    let mut word = vec![0u8, 1];
    for k in 1..i {
        let reps = spec.term(k) as usize;
        let comp: Vec<u8> = word.iter().map(|&b| 1 - b).collect();
        let mut next = Vec::with_capacity(2 * reps * word.len());
        for _ in 0..reps {
            next.extend_from_slice(&word);
        }
        for _ in 0..reps {
            next.extend_from_slice(&comp);
        }
        word = next;
    }
    Ok(BinaryWord(word))
}

pub fn is_factor(u: &BinaryWord, w: &BinaryWord) -> bool {
    if u.len() > w.len() {
        return false;
    }
    u.is_empty() || w.0.windows(u.len()).any(|win| win == u.0.as_slice())
}

/// The distinct length-`n` factors of `w`, sorted.
pub fn factors_of_length(w: &BinaryWord, n: usize) -> BTreeSet<BinaryWord> {
    if n == 0 {
        return BTreeSet::from([BinaryWord::empty()]);
    }
    if n > w.len() {
        return BTreeSet::new();
    }
    let distinct: HashSet<&[u8]> = w.0.windows(n).collect();
    distinct
        .into_iter()
        .map(|s| BinaryWord(s.to_vec()))
        .collect()
}

/// Length bound beyond which every word of the language contains `α_i`:
/// `2^{i+2} s_1 ... s_i`.
pub fn f_bound(spec: &SequenceSpec, i: usize) -> Result<u128> {
    if i == 0 {
        return Err(Error::ZeroIndex);
    }
    Ok(2 * alpha_len(spec, i + 1))
}

/// Least `i` with `|α_i| >= max(n, 2)`.
fn slice_base_index(spec: &SequenceSpec, n: usize) -> usize {
    let target = n.max(2) as u128;
    (1..).find(|&i| alpha_len(spec, i) >= target).unwrap()
}

/// Index of the `α_j` whose length-`n` factors are exactly the length-`n`
/// words of the language.
pub fn slice_index(spec: &SequenceSpec, n: usize) -> usize {
    slice_base_index(spec, n) + 3
}

/// The length-`n` words of the factor-closed language generated by the `α_i`.
pub fn language_slice(spec: &SequenceSpec, n: usize) -> Result<BTreeSet<BinaryWord>> {
    if n == 0 {
        return Ok(BTreeSet::from([BinaryWord::empty()]));
    }
    let host = alpha(spec, slice_index(spec, n))?;
    Ok(factors_of_length(&host, n))
}

/// Cross-check for [`language_slice`] that does not rely on the `i + 3`
/// cutoff: walks `j = 1, 2, ...` until the factor set of `α_j` has stopped
/// growing for three consecutive steps.
pub fn language_slice_by_stabilization(
    spec: &SequenceSpec,
    n: usize,
) -> Result<BTreeSet<BinaryWord>> {
    if n == 0 {
        return Ok(BTreeSet::from([BinaryWord::empty()]));
    }
    let mut current = BTreeSet::new();
    let mut unchanged = 0;
    for j in 1.. {
        let next = factors_of_length(&alpha(spec, j)?, n);
        if !next.is_empty() && next == current {
            unchanged += 1;
            if unchanged == 3 {
                break;
            }
        } else {
            unchanged = 0;
        }
        current = next;
    }
    Ok(current)
}

/// Lazily built `α_j` words for one sequence, shared across many slice queries.
struct AlphaCache<'a> {
    spec: &'a SequenceSpec,
    words: Vec<Vec<u8>>,
}

impl<'a> AlphaCache<'a> {
    fn new(spec: &'a SequenceSpec) -> Self {
        AlphaCache {
            spec,
            words: Vec::new(),
        }
    }

    fn get(&mut self, j: usize) -> Result<&[u8]> {
        while self.words.len() < j {
            let next = alpha(self.spec, self.words.len() + 1)?;
            self.words.push(next.0);
        }
        Ok(&self.words[j - 1])
    }

    fn slice(&mut self, n: usize) -> Result<HashSet<Vec<u8>>> {
        let j = slice_index(self.spec, n);
        let host = self.get(j)?;
        Ok(host.windows(n).map(<[u8]>::to_vec).collect())
    }
}

fn check_ordered(s: &SequenceSpec, t: &SequenceSpec) -> Result<()> {
    match s.lex_cmp(t) {
        Ordering::Less => Ok(()),
        Ordering::Equal => Err(Error::EqualSequences),
        Ordering::Greater => Err(Error::Unordered {
            first: s.to_string(),
            second: t.to_string(),
        }),
    }
}

/// Least `M` at which the slices of `s` and `t` differ, found by scanning
/// `n = 1, 2, ...`. Requires `s` to precede `t` lexicographically; the
/// earlier sequence always has the strictly larger slice at `M`.
pub fn first_divergence(s: &SequenceSpec, t: &SequenceSpec) -> Result<usize> {
    check_ordered(s, t)?;
    let mut left = AlphaCache::new(s);
    let mut right = AlphaCache::new(t);
    for n in 1..=MAX_DIVERGENCE_SCAN {
        let a = left.slice(n)?;
        let b = right.slice(n)?;
        if a != b {
            return Ok(n);
        }
    }
    Err(Error::DivergenceNotFound(MAX_DIVERGENCE_SCAN))
}

/// `M = 2^I s_1 ... s_I + 2`, where `I` is the first index with `s_I != t_I`.
pub fn divergence_closed_form(s: &SequenceSpec, t: &SequenceSpec) -> Result<u128> {
    check_ordered(s, t)?;
    let first = s.first_difference(t).ok_or(Error::EqualSequences)?;
    Ok((1u128 << first).saturating_mul(s.product(first)) + 2)
}

/// Words of length `M` in the language of `s` but not of `t`, with `M` the
/// first divergence.
pub fn divergence_difference(
    s: &SequenceSpec,
    t: &SequenceSpec,
) -> Result<(usize, BTreeSet<BinaryWord>)> {
    let m = first_divergence(s, t)?;
    let ls = language_slice(s, m)?;
    let lt = language_slice(t, m)?;
    Ok((m, ls.difference(&lt).cloned().collect()))
}

/// Every 1-based start position at which `α_i` occurs in `α_j`, by direct scan.
pub fn alpha_embeddings(spec: &SequenceSpec, i: usize, j: usize) -> Result<BTreeSet<usize>> {
    if i == 0 {
        return Err(Error::ZeroIndex);
    }
    if i >= j {
        return Err(Error::IndexOrder { i, j });
    }
    let needle = alpha(spec, i)?;
    let host = alpha(spec, j)?;
    Ok(host
        .0
        .windows(needle.len())
        .enumerate()
        .filter(|(_, win)| *win == needle.0.as_slice())
        .map(|(p, _)| p + 1)
        .collect())
}

/// Occurrences of `α_i` in `α_j` read off the block structure: reading `α_j`
/// over the two-letter alphabet `{α_i, ᾱ_i}`, `α_i` starts at every `α_i`
/// block and at the midpoint of every adjacent `ᾱ_i ᾱ_i` pair.
pub fn alpha_embeddings_from_blocks(
    spec: &SequenceSpec,
    i: usize,
    j: usize,
) -> Result<BTreeSet<usize>> {
    if i == 0 {
        return Err(Error::ZeroIndex);
    }
    if i >= j {
        return Err(Error::IndexOrder { i, j });
    }
    let block = alpha(spec, i)?;
    let host = alpha(spec, j)?;
    let width = block.len();
    // true for an α_i block, false for ᾱ_i
    let blocks: Vec<bool> = host.0.chunks(width).map(|c| c[0] == block.0[0]).collect();
    let mut positions = BTreeSet::new();
    for (b, &is_alpha) in blocks.iter().enumerate() {
        if is_alpha {
            positions.insert(b * width + 1);
        }
    }
    for (b, pair) in blocks.windows(2).enumerate() {
        if !pair[0] && !pair[1] {
            positions.insert(b * width + width / 2 + 1);
        }
    }
    Ok(positions)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> SequenceSpec {
        s.parse().unwrap()
    }

    fn word(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    fn words(items: &[&str]) -> BTreeSet<BinaryWord> {
        items.iter().map(|s| word(s)).collect()
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement(&BinaryWord::empty()), BinaryWord::empty());
        assert_eq!(complement(&word("01")), word("10"));
        assert_eq!(complement(&word("01101001")), word("10010110"));
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha(&spec("1"), 3).unwrap(), word("01101001"));
        assert_eq!(alpha(&spec("2,1"), 2).unwrap(), word("01011010"));
        assert_eq!(alpha(&spec("2,1"), 3).unwrap(), word("0101101010100101"));
        assert_eq!(alpha(&spec("1"), 0), Err(Error::ZeroIndex));
    }

    #[test]
    fn alpha_rejects_huge_words() {
        assert!(matches!(alpha(&spec("1000"), 8), Err(Error::TooLarge(_))));
    }

    #[test]
    fn is_factor_examples() {
        assert!(is_factor(&BinaryWord::empty(), &word("0110")));
        assert!(is_factor(&word("11"), &word("0110")));
        assert!(!is_factor(&word("101"), &word("11")));
    }

    #[test]
    fn factors_of_length_examples() {
        assert_eq!(
            factors_of_length(&word("0110"), 2),
            words(&["01", "11", "10"])
        );
        assert_eq!(factors_of_length(&word("0110"), 0), words(&[""]));
        assert!(factors_of_length(&word("01"), 3).is_empty());
    }

    #[test]
    fn f_bound_examples() {
        assert_eq!(f_bound(&spec("1"), 1).unwrap(), 8);
        assert_eq!(f_bound(&spec("2,1"), 1).unwrap(), 16);
        assert_eq!(f_bound(&spec("2,1"), 2).unwrap(), 32);
        assert_eq!(f_bound(&spec("1"), 0), Err(Error::ZeroIndex));
    }

    #[test]
    fn language_slice_examples() {
        assert_eq!(
            language_slice(&spec("1"), 3).unwrap(),
            words(&["001", "010", "011", "100", "101", "110"])
        );
        assert_eq!(
            language_slice(&spec("1"), 4).unwrap(),
            words(&[
                "0010", "0100", "0101", "0110", "1001", "1010", "1011", "1101", "0011", "1100"
            ])
        );
        assert_eq!(
            language_slice(&spec("2,1"), 4).unwrap(),
            words(&["0010", "0100", "0101", "0110", "1001", "1010", "1011", "1101"])
        );
        assert_eq!(language_slice(&spec("3"), 0).unwrap(), words(&[""]));
    }

    #[test]
    fn divergence_examples() {
        assert_eq!(first_divergence(&spec("1"), &spec("2,1")).unwrap(), 4);
        assert_eq!(first_divergence(&spec("1"), &spec("1,2,1")).unwrap(), 6);
        assert_eq!(first_divergence(&spec("2,1"), &spec("2,2,1")).unwrap(), 10);
        assert_eq!(
            divergence_closed_form(&spec("2,1"), &spec("2,2,1")).unwrap(),
            10
        );
    }

    #[test]
    fn divergence_rejects_bad_order() {
        assert_eq!(
            first_divergence(&spec("1"), &spec("1,1,1")),
            Err(Error::EqualSequences)
        );
        assert!(matches!(
            first_divergence(&spec("2,1"), &spec("1")),
            Err(Error::Unordered { .. })
        ));
    }

    #[test]
    fn divergence_difference_is_the_published_pair() {
        let (m, diff) = divergence_difference(&spec("1"), &spec("2,1")).unwrap();
        assert_eq!(m, 4);
        assert_eq!(diff, words(&["0011", "1100"]));
    }

    #[test]
    fn embedding_examples() {
        let tm = spec("1");
        assert_eq!(alpha_embeddings(&tm, 1, 2).unwrap(), BTreeSet::from([1]));
        assert_eq!(
            alpha_embeddings(&tm, 1, 3).unwrap(),
            BTreeSet::from([1, 4, 7])
        );
        assert_eq!(alpha_embeddings(&tm, 2, 3).unwrap(), BTreeSet::from([1]));
        assert_eq!(
            alpha_embeddings(&tm, 3, 3),
            Err(Error::IndexOrder { i: 3, j: 3 })
        );
    }

    #[test]
    fn embeddings_match_block_reading() {
        for s in ["1", "2,1", "1,2,1", "3,1,2", "2,3,1"] {
            let sp = spec(s);
            for j in 2..=6 {
                for i in 1..j {
                    if alpha_len(&sp, j) > 1 << 16 {
                        continue;
                    }
                    assert_eq!(
                        alpha_embeddings(&sp, i, j).unwrap(),
                        alpha_embeddings_from_blocks(&sp, i, j).unwrap(),
                        "spec {s}, i = {i}, j = {j}"
                    );
                }
            }
        }
    }

    #[test]
    fn spec_parsing_and_normal_form() {
        assert_eq!(spec("2,1,1"), spec("2,1"));
        assert_eq!(spec("2,1").to_string(), "2,1");
        assert_eq!(spec("1").term(7), 1);
        assert_eq!(spec("4,2,1").term(2), 2);
        assert!("0".parse::<SequenceSpec>().is_err());
        assert!("".parse::<SequenceSpec>().is_err());
        assert!("1,x".parse::<SequenceSpec>().is_err());
    }

    #[test]
    fn lexicographic_order() {
        assert!(spec("1") < spec("2,1"));
        assert!(spec("1") < spec("1,2,1"));
        assert!(spec("2,1") < spec("2,2,1"));
        assert!(spec("1,1,1,2") > spec("1"));
        assert_eq!(spec("3").lex_cmp(&spec("3,3")), Ordering::Equal);
    }
}
