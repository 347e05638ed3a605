//! Brute-force reference computations. Each one follows a definition
//! directly and shares no shortcut with the routine it is compared against.

use std::collections::{BTreeSet, HashSet};

use itertools::Itertools;

use crate::error::Result;
use crate::perm::{boxplus, Permutation};
use crate::pins::{realize, rho, PinLetter, PinWord};
use crate::words::{alpha, alpha_len, BinaryWord, SequenceSpec};

/// Membership in the factor closure of `ρ`, by searching every binary word
/// of length at most `|w|/2 + 1`.
pub fn in_p_by_search(w: &PinWord) -> bool {
    let max_len = w.len() / 2 + 1;
    (0..=max_len).any(|len| BinaryWord::all_of_length(len).any(|b| w.is_factor_of(&rho(&b))))
}

/// Every string of pin letters of length `n`, valid or not.
pub fn all_pin_strings(n: usize) -> impl Iterator<Item = PinWord> {
    std::iter::repeat_n(PinLetter::ALL, n)
        .multi_cartesian_product()
        .map(PinWord::from_letters_unchecked)
        .chain((n == 0).then(PinWord::empty))
}

/// `⊞`-decomposability by trying every pair `(σ, τ)` with both lengths at
/// least two.
pub fn is_boxplus_decomposable_brute(pi: &Permutation) -> bool {
    let n = pi.len();
    (2..n).any(|m| {
        let sigmas = Permutation::all_of_length(m);
        let taus = Permutation::all_of_length(n - m + 1);
        sigmas
            .iter()
            .any(|s| taus.iter().any(|t| &boxplus(s, t) == pi))
    })
}

/// All length-`k` patterns of `pi`.
pub fn subpermutations(pi: &Permutation, k: usize) -> BTreeSet<Permutation> {
    (0..pi.len())
        .combinations(k)
        .map(|positions| pi.restrict(&positions))
        .collect()
}

/// Length-`n` members of the class generated by `spec`, straight from the
/// definition as a downward closure: the union of all length-`n` patterns
/// of `ψ°(v)` over windows `v` of `ρ(α_j)`.
///
/// Windows grow until the union has not changed for `patience` consecutive
/// lengths. Any pattern of the host whose pins span at most `L` consecutive
/// pin indices is found inside a window of length `L`.
pub fn class_slice_by_closure(
    spec: &SequenceSpec,
    n: usize,
    patience: usize,
) -> Result<BTreeSet<Permutation>> {
    let j = (1..).find(|&j| alpha_len(spec, j) >= 256).unwrap();
    let host = rho(&alpha(spec, j)?);
    let mut found: HashSet<Permutation> = HashSet::new();
    let mut unchanged = 0;
    let mut window = n;
    while unchanged < patience && window <= host.len() {
        let before = found.len();
        let windows: BTreeSet<PinWord> = host.factors_of_length(window);
        for v in &windows {
            let pins = realize(v, false)?;
            let points = pins.pin_points();
            // subsets anchored at the window's first pin; others are covered
            // by windows starting further right
            for rest in (1..window).combinations(n - 1) {
                let mut chosen: Vec<_> =
                    std::iter::once(0).chain(rest).map(|k| points[k]).collect();
                chosen.sort_by_key(|p| p.x);
                let ys: Vec<usize> = chosen.iter().map(|p| p.y).collect();
                found.insert(Permutation::pattern_of(&ys));
            }
        }
        if found.len() == before && window > n {
            unchanged += 1;
        } else {
            unchanged = 0;
        }
        window += 1;
    }
    Ok(found.into_iter().collect())
}
