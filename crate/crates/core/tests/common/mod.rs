#![allow(dead_code)]

use pinperm::words::divergence_closed_form;
use pinperm::{BinaryWord, PinLanguage, PinWord, SequenceSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn spec(s: &str) -> SequenceSpec {
    s.parse().unwrap()
}

pub fn pw(s: &str) -> PinWord {
    s.parse().unwrap()
}

pub fn word(s: &str) -> BinaryWord {
    s.parse().unwrap()
}

/// Every word of `P` with length in `lengths`.
pub fn p_words(lengths: std::ops::RangeInclusive<usize>) -> Vec<PinWord> {
    lengths
        .flat_map(|k| pinperm::pins::p_slice(&PinLanguage::All, k).unwrap())
        .collect()
}

fn random_spec(rng: &mut ChaCha8Rng) -> (Vec<u64>, u64) {
    let prefix = (0..rng.gen_range(0..=4))
        .map(|_| rng.gen_range(1..=3))
        .collect();
    (prefix, rng.gen_range(1..=3))
}

/// `count` distinct pairs `(s, t)` with `s` lexicographically first and
/// first divergence at most `max_m`, drawn from a fixed seed.
pub fn random_ordered_pairs(
    seed: u64,
    count: usize,
    max_m: u128,
) -> Vec<(SequenceSpec, SequenceSpec)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    while pairs.len() < count {
        let (prefix, tail) = random_spec(&mut rng);
        let s = SequenceSpec::new(prefix.clone(), tail).unwrap();
        let mut terms: Vec<u64> = (1..=prefix.len() + 2).map(|k| s.term(k)).collect();
        let k = rng.gen_range(0..terms.len());
        let old = terms[k];
        terms[k] = loop {
            let v = rng.gen_range(1..=3);
            if v != old {
                break v;
            }
        };
        let tail = terms.pop().unwrap();
        let t = SequenceSpec::new(terms, tail).unwrap();
        let (s, t) = if s < t { (s, t) } else { (t, s) };
        if s == t || pairs.contains(&(s.clone(), t.clone())) {
            continue;
        }
        if divergence_closed_form(&s, &t).unwrap() <= max_m {
            pairs.push((s, t));
        }
    }
    pairs
}
