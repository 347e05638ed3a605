//! S-adic sequences over the morphisms `μ: 0 ↦ 01, 1 ↦ 10` and
//! `σ: 0 ↦ 00, 1 ↦ 11`, directed by words of the form `μσ^{t_1} μσ^{t_2} ...`,
//! and their factor complexity.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::{self, alpha_len, BinaryWord, SequenceSpec, MAX_WORD_LEN};

/// A constant-length morphism on `{0, 1}` whose image of `0` starts with `0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Morphism {
    image_of_0: BinaryWord,
    image_of_1: BinaryWord,
}

impl Morphism {
    pub fn new(image_of_0: BinaryWord, image_of_1: BinaryWord) -> Result<Self> {
        if image_of_0.len() != image_of_1.len() {
            return Err(Error::InvalidMorphism(format!(
                "images {image_of_0} and {image_of_1} differ in length"
            )));
        }
        if image_of_0.letters().first() != Some(&0) {
            return Err(Error::InvalidMorphism(format!(
                "image of 0 ({image_of_0}) must begin with 0"
            )));
        }
        Ok(Morphism {
            image_of_0,
            image_of_1,
        })
    }

    /// Thue–Morse morphism.
    pub fn mu() -> Self {
        Morphism {
            image_of_0: BinaryWord::from_letters_unchecked(vec![0, 1]),
            image_of_1: BinaryWord::from_letters_unchecked(vec![1, 0]),
        }
    }

    /// Letter doubling.
    pub fn sigma() -> Self {
        Morphism {
            image_of_0: BinaryWord::from_letters_unchecked(vec![0, 0]),
            image_of_1: BinaryWord::from_letters_unchecked(vec![1, 1]),
        }
    }

    pub fn image_of_0(&self) -> &BinaryWord {
        &self.image_of_0
    }

    pub fn image_of_1(&self) -> &BinaryWord {
        &self.image_of_1
    }

    pub fn width(&self) -> usize {
        self.image_of_0.len()
    }

    pub fn apply(&self, w: &BinaryWord) -> BinaryWord {
        apply_morphism(self, w)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Morphism) -> Morphism {
        Morphism {
            image_of_0: self.apply(&other.image_of_0),
            image_of_1: self.apply(&other.image_of_1),
        }
    }
}

pub fn apply_morphism(m: &Morphism, w: &BinaryWord) -> BinaryWord {
    let mut out = Vec::with_capacity(w.len() * m.width());
    for &b in w.letters() {
        let image = if b == 0 { &m.image_of_0 } else { &m.image_of_1 };
        out.extend_from_slice(image.letters());
    }
    BinaryWord::from_letters_unchecked(out)
}

/// `μσ^k`: `0 ↦ (01)^{2^k}`, `1 ↦ (10)^{2^k}`.
pub fn mu_k(k: u32) -> Morphism {
    let reps = 1usize << k;
    Morphism {
        image_of_0: BinaryWord::from_letters_unchecked([0, 1].repeat(reps)),
        image_of_1: BinaryWord::from_letters_unchecked([1, 0].repeat(reps)),
    }
}

/// The directive word `μσ^{t_1} μσ^{t_2} ...` with `t_k = tail` for all
/// `k` beyond the listed exponents.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DirectiveWord {
    exponents: Vec<u32>,
    tail: u32,
}

impl DirectiveWord {
    pub fn new(exponents: Vec<u32>, tail: u32) -> Self {
        let mut exponents = exponents;
        while exponents.last() == Some(&tail) {
            exponents.pop();
        }
        DirectiveWord { exponents, tail }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn tail(&self) -> u32 {
        self.tail
    }

    /// `t_k`, 1-based.
    pub fn exponent(&self, k: usize) -> u32 {
        self.exponents
            .get(k.max(1) - 1)
            .copied()
            .unwrap_or(self.tail)
    }

    /// The directive word whose limit has the same language as the word
    /// family of `spec`: `t_k = log2 s_k`.
    pub fn from_spec(spec: &SequenceSpec) -> Result<Self> {
        let log = |s: u64| {
            if s.is_power_of_two() {
                Ok(s.trailing_zeros())
            } else {
                Err(Error::NotPowerOfTwo(s))
            }
        };
        let exponents = spec
            .prefix()
            .iter()
            .map(|&s| log(s))
            .collect::<Result<_>>()?;
        Ok(DirectiveWord::new(exponents, log(spec.tail())?))
    }

    /// `s_k = 2^{t_k}`.
    pub fn to_spec(&self) -> Result<SequenceSpec> {
        let pow = |t: u32| {
            1u64.checked_shl(t)
                .filter(|_| t < 63)
                .ok_or_else(|| Error::InvalidDirective(self.to_string()))
        };
        let prefix = self
            .exponents
            .iter()
            .map(|&t| pow(t))
            .collect::<Result<_>>()?;
        SequenceSpec::new(prefix, pow(self.tail)?)
    }
}

impl fmt::Display for DirectiveWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.exponents {
            write!(f, "{t},")?;
        }
        write!(f, "{}", self.tail)
    }
}

impl fmt::Debug for DirectiveWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DirectiveWord({self},...)")
    }
}

impl FromStr for DirectiveWord {
    type Err = Error;

    /// Comma-separated exponents; the last one repeats forever.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidDirective(s.to_string());
        let mut terms = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        let tail = terms.pop().ok_or_else(bad)?;
        Ok(DirectiveWord::new(terms, tail))
    }
}

/// `μ_{t_1} ∘ ... ∘ μ_{t_i}` applied to `0`.
pub fn directive_image(d: &DirectiveWord, i: usize) -> Result<BinaryWord> {
    let mut word = BinaryWord::from_letters_unchecked(vec![0]);
    let mut len: u128 = 1;
    for k in (1..=i).rev() {
        let t = d.exponent(k);
        len = len.saturating_mul(2u128.saturating_pow(t + 1));
        if len > MAX_WORD_LEN {
            return Err(Error::TooLarge(len));
        }
        word = apply_morphism(&mu_k(t), &word);
    }
    Ok(word)
}

/// A prefix of the S-adic limit of `d` seeded with `000...`, of length at
/// least `min_length`.
pub fn sadic_prefix(d: &DirectiveWord, min_length: usize) -> Result<BinaryWord> {
    let mut i = 0;
    loop {
        let word = directive_image(d, i)?;
        if word.len() >= min_length {
            return Ok(word);
        }
        i += 1;
    }
}

fn require_powers_of_two(spec: &SequenceSpec) -> Result<()> {
    DirectiveWord::from_spec(spec).map(|_| ())
}

/// Number of distinct length-`n` factors of the S-adic sequence attached to
/// `spec`, computed exactly from the word family's language slice.
pub fn complexity(spec: &SequenceSpec, n: usize) -> Result<usize> {
    require_powers_of_two(spec)?;
    Ok(words::language_slice(spec, n)?.len())
}

/// Length-`n` factors of the first `len` letters of the S-adic sequence.
pub fn prefix_factors(d: &DirectiveWord, len: usize, n: usize) -> Result<BTreeSet<BinaryWord>> {
    let prefix = sadic_prefix(d, len)?;
    let window = &prefix.letters()[..len];
    if n == 0 {
        return Ok(BTreeSet::from([BinaryWord::empty()]));
    }
    let distinct: HashSet<&[u8]> = window.windows(n).collect();
    Ok(distinct
        .into_iter()
        .map(|s| BinaryWord::from_letters_unchecked(s.to_vec()))
        .collect())
}

/// Checks, for `1 <= n <= n_max`, that the length-`n` factors of a long
/// enough prefix of the S-adic sequence coincide with the language slice.
pub fn verify_sadic_language(spec: &SequenceSpec, n_max: usize) -> Result<bool> {
    let d = DirectiveWord::from_spec(spec)?;
    for n in 1..=n_max {
        let needed = alpha_len(spec, words::slice_index(spec, n)) + n as u128;
        if needed > MAX_WORD_LEN {
            return Err(Error::TooLarge(needed));
        }
        let from_sequence = prefix_factors(&d, needed as usize, n)?;
        if from_sequence != words::language_slice(spec, n)? {
            return Ok(false);
        }
    }
    Ok(true)
}
