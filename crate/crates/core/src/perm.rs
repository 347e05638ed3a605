//! Permutations in one-line notation, pattern containment, the direct sum
//! and the first-entry inflation `σ ⊞ τ`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A permutation of `{1, ..., n}` in one-line notation. The empty
/// permutation (`n = 0`) is representable.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn empty() -> Self {
        Permutation(Vec::new())
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u8).collect())
    }

    /// Builds a permutation from 1-based values, checking that they form a
    /// bijection on `{1, ..., n}`.
    pub fn new(values: Vec<u8>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{values:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation(values))
    }

    pub fn from_values(values: &[usize]) -> Result<Self> {
        if values.len() > u8::MAX as usize || values.iter().any(|&v| v > u8::MAX as usize) {
            return Err(Error::InvalidPermutation(format!("{values:?}")));
        }
        Self::new(values.iter().map(|&v| v as u8).collect())
    }

    /// The pattern (standardization) of a sequence of distinct keys.
    pub fn pattern_of<T: Ord>(keys: &[T]) -> Permutation {
        let mut order: Vec<usize> = (0..keys.len()).collect();
        order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
        let mut values = vec![0u8; keys.len()];
        for (rank, &idx) in order.iter().enumerate() {
            values[idx] = rank as u8 + 1;
        }
        Permutation(values)
    }

    pub fn values(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `π(i)` for 1-based `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    /// The pattern formed by the entries at the given 0-based positions.
    pub fn restrict(&self, positions: &[usize]) -> Permutation {
        let keys: Vec<u8> = positions.iter().map(|&p| self.0[p]).collect();
        Permutation::pattern_of(&keys)
    }

    /// Every permutation of length `n`, in lexicographic order.
    pub fn all_of_length(n: usize) -> Vec<Permutation> {
        use itertools::Itertools;
        (1..=n as u8).permutations(n).map(Permutation).collect()
    }

    pub fn contains(&self, pattern: &Permutation) -> bool {
        contains(pattern, self)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() <= 9 {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(u8::to_string).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `2413` (single digits) or `10,1,2,...` (comma-separated).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidPermutation(s.to_string());
        let values: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        Permutation::from_values(&values).map_err(|_| bad())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let values = Vec::<u8>::deserialize(deserializer)?;
        Permutation::new(values).map_err(serde::de::Error::custom)
    }
}

/// True iff `host` has a subsequence order-isomorphic to `pattern`.
pub fn contains(pattern: &Permutation, host: &Permutation) -> bool {
    let k = pattern.len();
    if k == 0 {
        return true;
    }
    if k > host.len() {
        return false;
    }
    let mut chosen = Vec::with_capacity(k);
    extend_match(pattern.values(), host.values(), 0, &mut chosen)
}

fn extend_match(pattern: &[u8], host: &[u8], start: usize, chosen: &mut Vec<u8>) -> bool {
    let depth = chosen.len();
    if depth == pattern.len() {
        return true;
    }
    let remaining = pattern.len() - depth;
    for pos in start..=host.len() - remaining {
        let candidate = host[pos];
        let consistent = chosen
            .iter()
            .zip(pattern)
            .all(|(&h, &p)| (h < candidate) == (p < pattern[depth]));
        if consistent {
            chosen.push(candidate);
            if extend_match(pattern, host, pos + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// `σ ⊕ τ`: `τ` placed above and to the right of `σ`.
pub fn direct_sum(sigma: &Permutation, tau: &Permutation) -> Permutation {
    let m = sigma.len() as u8;
    let mut values = sigma.0.clone();
    values.extend(tau.0.iter().map(|&v| v + m));
    Permutation(values)
}

/// `σ ⊞ τ`: the first entry of `τ` inflated by `σ`. The result has length
/// `|σ| + |τ| - 1`. An empty `σ` deletes the first entry of `τ`.
///
/// # Panics
/// If `τ` is empty.
pub fn boxplus(sigma: &Permutation, tau: &Permutation) -> Permutation {
    assert!(
        !tau.is_empty(),
        "boxplus: the inflated permutation must be nonempty"
    );
    let m = sigma.len() as u8;
    let head = tau.0[0];
    let mut values = Vec::with_capacity(sigma.len() + tau.len() - 1);
    values.extend(sigma.0.iter().map(|&v| v + head - 1));
    values.extend(
        tau.0[1..]
            .iter()
            .map(|&v| if v < head { v } else { v + m - 1 }),
    );
    Permutation(values)
}

/// Folds `⊞` over a nonempty list of factors. `⊞` is associative, so the
/// grouping does not matter.
pub fn boxplus_all<'a, I>(factors: I) -> Option<Permutation>
where
    I: IntoIterator<Item = &'a Permutation>,
{
    let mut iter = factors.into_iter();
    let first = iter.next()?.clone();
    Some(iter.fold(first, |acc, next| boxplus(&acc, next)))
}

/// Prefix lengths `m` in `2..n` for which `π(1..m)` is an interval of values.
fn inflation_blocks(pi: &Permutation) -> impl Iterator<Item = usize> + '_ {
    let n = pi.len();
    let mut lo = u8::MAX;
    let mut hi = 0u8;
    (0..n.saturating_sub(1)).filter_map(move |idx| {
        lo = lo.min(pi.0[idx]);
        hi = hi.max(pi.0[idx]);
        let m = idx + 1;
        (m >= 2 && (hi - lo) as usize + 1 == m).then_some(m)
    })
}

/// True iff `π = σ ⊞ τ` with `|σ|, |τ| >= 2`; equivalently some prefix of
/// length `2 <= m <= n - 1` occupies an interval of values.
pub fn is_boxplus_decomposable(pi: &Permutation) -> bool {
    inflation_blocks(pi).next().is_some()
}

/// The decomposition `π = σ ⊞ τ` with the shortest nontrivial `σ`.
pub fn boxplus_split(pi: &Permutation) -> Option<(Permutation, Permutation)> {
    let m = inflation_blocks(pi).next()?;
    let sigma = pi.restrict(&(0..m).collect::<Vec<_>>());
    let lo = pi.0[..m].iter().min().copied().unwrap();
    let mut keys = Vec::with_capacity(pi.len() - m + 1);
    keys.push(lo);
    keys.extend_from_slice(&pi.0[m..]);
    Some((sigma, Permutation::pattern_of(&keys)))
}

/// Repeatedly splits off the shortest leading block, giving a full
/// `⊞`-factorization into indecomposable pieces.
pub fn boxplus_factorization(pi: &Permutation) -> Vec<Permutation> {
    let mut factors = Vec::new();
    let mut rest = pi.clone();
    while let Some((sigma, tau)) = boxplus_split(&rest) {
        factors.extend(boxplus_factorization(&sigma));
        rest = tau;
    }
    factors.push(rest);
    factors
}

/// Deletes the entry at 0-based position `idx` and standardizes.
pub fn delete_entry(pi: &Permutation, idx: usize) -> Permutation {
    let removed = pi.0[idx];
    Permutation(
        pi.0.iter()
            .enumerate()
            .filter(|&(k, _)| k != idx)
            .map(|(_, &v)| if v > removed { v - 1 } else { v })
            .collect(),
    )
}

pub fn one_point_deletions(pi: &Permutation) -> BTreeSet<Permutation> {
    (0..pi.len()).map(|idx| delete_entry(pi, idx)).collect()
}

/// Upside-down flip: `π(i) ↦ n + 1 - π(i)`.
pub fn complement_perm(pi: &Permutation) -> Permutation {
    let n = pi.len() as u8;
    Permutation(pi.0.iter().map(|&v| n + 1 - v).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn containment_examples() {
        assert!(contains(&p("32514"), &p("372694185")));
        assert!(!contains(&p("54321"), &p("372694185")));
        assert!(contains(&p("1"), &p("1")));
        assert!(contains(&Permutation::empty(), &p("21")));
        assert!(!contains(&p("123"), &p("21")));
    }

    #[test]
    fn direct_sum_examples() {
        assert_eq!(direct_sum(&p("1"), &p("1")), p("12"));
        assert_eq!(direct_sum(&p("21"), &p("21")), p("2143"));
        assert_eq!(direct_sum(&p("12"), &p("21")), p("1243"));
    }

    #[test]
    fn boxplus_examples() {
        assert_eq!(boxplus(&p("21"), &p("12")), p("213"));
        assert_eq!(boxplus(&p("12"), &p("21")), p("231"));
        assert_eq!(boxplus(&p("12"), &p("132")), p("1243"));
        assert_eq!(boxplus(&p("1"), &p("2413")), p("2413"));
        assert_eq!(boxplus(&p("2413"), &p("1")), p("2413"));
        assert_eq!(boxplus(&Permutation::empty(), &p("3142")), p("132"));
    }

    #[test]
    fn decomposability_examples() {
        assert!(is_boxplus_decomposable(&p("213")));
        assert!(!is_boxplus_decomposable(&p("1342")));
        assert!(!is_boxplus_decomposable(&p("2413")));
        assert!(!is_boxplus_decomposable(&p("1")));
        assert!(!is_boxplus_decomposable(&p("12")));
    }

    #[test]
    fn split_examples() {
        assert_eq!(boxplus_split(&p("213")), Some((p("21"), p("12"))));
        assert_eq!(boxplus_split(&p("2134")), Some((p("21"), p("123"))));
        assert_eq!(boxplus_split(&p("1342")), None);
        assert_eq!(
            boxplus_factorization(&p("2314")),
            vec![p("12"), p("21"), p("12")]
        );
    }

    #[test]
    fn deletion_examples() {
        assert_eq!(
            one_point_deletions(&p("2413")),
            BTreeSet::from([p("312"), p("213"), p("132"), p("231")])
        );
        assert_eq!(
            one_point_deletions(&p("1")),
            BTreeSet::from([Permutation::empty()])
        );
        assert_eq!(one_point_deletions(&p("12")), BTreeSet::from([p("1")]));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement_perm(&p("1342")), p("4213"));
        assert_eq!(complement_perm(&p("2413")), p("3142"));
        assert_eq!(complement_perm(&p("1")), p("1"));
    }

    #[test]
    fn text_forms() {
        assert_eq!(p("2413").to_string(), "2413");
        let long = p("10,1,2,3,4,5,6,7,8,9");
        assert_eq!(long.len(), 10);
        assert_eq!(long.to_string(), "10,1,2,3,4,5,6,7,8,9");
        assert!("1224".parse::<Permutation>().is_err());
        assert!("1a".parse::<Permutation>().is_err());
    }
}
