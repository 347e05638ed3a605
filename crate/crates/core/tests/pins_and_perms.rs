mod common;

use std::collections::{BTreeMap, HashSet};

use common::{p_words, pw};
use pinperm::oracle::{
    all_pin_strings, in_p_by_search, is_boxplus_decomposable_brute, subpermutations,
};
use pinperm::perm::{
    boxplus, boxplus_all, boxplus_factorization, complement_perm, is_boxplus_decomposable,
};
use pinperm::pins::{circ_to_bullet, is_in_p, psi_bullet, psi_circ, rho};
use pinperm::verify::{delete_pin, deletion_identity_holds};
use pinperm::{BinaryWord, Permutation, PinLetter, PinWord};
use proptest::prelude::*;

/// A random word of `P`: a factor of `ρ(b)` for a random binary `b`.
fn p_word(max_len: usize) -> impl Strategy<Value = PinWord> {
    (
        prop::collection::vec(0u8..=1, 1..=max_len / 2 + 2),
        any::<prop::sample::Index>(),
        1..=max_len,
    )
        .prop_map(|(bits, start, len)| {
            let host = rho(&BinaryWord::from_letters(bits).unwrap());
            let len = len.min(host.len());
            let start = start.index(host.len() - len + 1);
            host.slice(start, start + len)
        })
}

fn permutation(max_len: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_len)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|v| Permutation::from_values(&v).unwrap())
}

fn flip(w: &PinWord) -> PinWord {
    PinWord::new(
        w.letters()
            .iter()
            .map(|l| match l {
                PinLetter::Up => PinLetter::Down,
                PinLetter::Down => PinLetter::Up,
                PinLetter::RightUp => PinLetter::RightDown,
                PinLetter::RightDown => PinLetter::RightUp,
            })
            .collect(),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn factors_of_rho_images_are_in_p(w in p_word(16)) {
        prop_assert!(is_in_p(&w));
    }

    #[test]
    fn deletion_calculus(w in p_word(10)) {
        prop_assert!(deletion_identity_holds(&w).unwrap());
    }

    #[test]
    fn origin_shift(w in p_word(12).prop_filter("length at least 3", |w| w.len() >= 3)) {
        prop_assert_eq!(psi_circ(&w).unwrap(), psi_bullet(&circ_to_bullet(&w).unwrap()).unwrap());
    }

    #[test]
    fn pin_sequences_avoid_1432_and_4123(w in p_word(10)) {
        let pi = psi_circ(&w).unwrap();
        prop_assert!(!pi.contains(&"1432".parse().unwrap()));
        prop_assert!(!pi.contains(&"4123".parse().unwrap()));
    }

    #[test]
    fn complementation_flips_words(w in p_word(10)) {
        prop_assert_eq!(complement_perm(&psi_circ(&w).unwrap()), psi_circ(&flip(&w)).unwrap());
        prop_assert_eq!(complement_perm(&psi_bullet(&w).unwrap()), psi_bullet(&flip(&w)).unwrap());
    }

    #[test]
    fn factorization_rebuilds(pi in permutation(9)) {
        let parts = boxplus_factorization(&pi);
        prop_assert!(parts.iter().all(|p| !is_boxplus_decomposable(p)));
        prop_assert_eq!(boxplus_all(&parts).unwrap(), pi);
    }

    #[test]
    fn boxplus_lengths_and_identity(a in permutation(6), b in permutation(6)) {
        prop_assert_eq!(boxplus(&a, &b).len(), a.len() + b.len() - 1);
        let one = Permutation::identity(1);
        prop_assert_eq!(boxplus(&one, &a), a.clone());
        prop_assert_eq!(boxplus(&a, &one), a);
    }
}

#[test]
fn membership_matches_search_over_all_strings_of_length_8() {
    for n in 0..=8 {
        for w in all_pin_strings(n) {
            assert_eq!(is_in_p(&w), in_p_by_search(&w), "{w:?}");
        }
    }
}

#[test]
fn boxplus_is_associative_on_short_permutations() {
    let perms: Vec<Permutation> = (1..=4).flat_map(Permutation::all_of_length).collect();
    for a in &perms {
        for b in &perms {
            let ab = boxplus(a, b);
            for c in &perms {
                assert_eq!(boxplus(&ab, c), boxplus(a, &boxplus(b, c)), "{a} {b} {c}");
            }
        }
    }
}

#[test]
fn decomposability_is_complement_invariant_and_matches_pair_search() {
    for n in 1..=7 {
        for pi in Permutation::all_of_length(n) {
            let fast = is_boxplus_decomposable(&pi);
            assert_eq!(fast, is_boxplus_decomposable(&complement_perm(&pi)), "{pi}");
            assert_eq!(fast, is_boxplus_decomposable_brute(&pi), "{pi}");
        }
    }
}

#[test]
fn long_pin_sequences_are_indecomposable() {
    for w in p_words(3..=8) {
        assert!(!is_boxplus_decomposable(&psi_bullet(&w).unwrap()), "{w}");
        if w.len() >= 4 {
            assert!(!is_boxplus_decomposable(&psi_circ(&w).unwrap()), "{w}");
        }
    }
}

#[test]
fn bullet_is_injective_from_length_four() {
    for k in 4..=8 {
        let mut seen = HashSet::new();
        for w in p_words(k..=k) {
            assert!(seen.insert(psi_bullet(&w).unwrap()), "{w}");
        }
    }
}

#[test]
fn circ_is_unique_up_to_the_first_letter_from_length_five() {
    for k in 5..=8 {
        let mut groups: BTreeMap<Permutation, Vec<PinWord>> = BTreeMap::new();
        for w in p_words(k..=k) {
            groups.entry(psi_circ(&w).unwrap()).or_default().push(w);
        }
        for ws in groups.values() {
            assert!(ws.len() <= 2);
            if let [v, w] = ws.as_slice() {
                assert_eq!(v.letters()[1..], w.letters()[1..]);
                assert!(v.first().unwrap().is_right() && w.first().unwrap().is_right());
            }
        }
    }
}

#[test]
fn bounds_on_uniqueness_are_sharp() {
    assert_eq!(
        psi_bullet(&pw("u r_u d")).unwrap(),
        psi_bullet(&pw("r_d u r_u")).unwrap()
    );
    assert_eq!(
        psi_circ(&pw("u r_u u r_u")).unwrap(),
        psi_circ(&pw("r_d d r_d d")).unwrap()
    );
}

/// Indecomposable patterns of pin sequences are `1, 12, 21, 132, 312` or
/// some `ψ°(w)` with `w ∈ P`.
#[test]
fn indecomposable_patterns_are_pin_sequences() {
    let mut circ_images: HashSet<Permutation> = HashSet::new();
    for w in p_words(1..=7) {
        circ_images.insert(psi_circ(&w).unwrap());
    }
    let short: HashSet<Permutation> = ["1", "12", "21", "132", "312"]
        .iter()
        .map(|p| p.parse().unwrap())
        .collect();
    for w in p_words(7..=7) {
        let host = psi_circ(&w).unwrap();
        for k in 1..=7 {
            for pi in subpermutations(&host, k) {
                if !is_boxplus_decomposable(&pi) {
                    assert!(
                        short.contains(&pi) || circ_images.contains(&pi),
                        "{pi} in {w}"
                    );
                }
            }
        }
    }
}

#[test]
fn interior_deletion_figure() {
    let w = pw("d r_d u r_u d r_d u r_u d r_d");
    let expected = boxplus(
        &psi_circ(&pw("d r_d u r_u")).unwrap(),
        &psi_bullet(&pw("r_d u r_u d r_d")).unwrap(),
    );
    assert_eq!(delete_pin(&w, 5, false).unwrap(), expected);
}
