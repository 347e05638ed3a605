//! Enumeration of the permutation classes generated by pin languages.
//!
//! A permutation of length `n` lies in the class of a sequence exactly when
//! it can be written `ψ°(v_1) ⊞ ψ•(v_2) ⊞ ... ⊞ ψ•(v_ℓ)` with every `v_i` a
//! nonempty word of the sequence's pin language and `Σ|v_i| = n`. Since `⊞`
//! is associative the slices are built by a left fold over lengths.

use std::collections::{BTreeSet, HashSet};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::{boxplus, is_boxplus_decomposable, Permutation};
use crate::pins::{p_slice, psi_bullet, psi_circ, rho, PinLanguage, PinWord};
use crate::words::{divergence_difference, BinaryWord, SequenceSpec};

/// Default cap on enumerated lengths.
pub const DEFAULT_MAX_N: usize = 10;

/// The members of one class of one length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassSlice {
    pub spec: SequenceSpec,
    pub n: usize,
    pub members: BTreeSet<Permutation>,
}

impl ClassSlice {
    pub fn count(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, pi: &Permutation) -> bool {
        self.members.contains(pi)
    }
}

impl Serialize for ClassSlice {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("ClassSlice", 4)?;
        st.serialize_field("spec", &self.spec)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("count", &self.members.len())?;
        st.serialize_field("members", &self.members)?;
        st.end()
    }
}

fn check_length(n: usize, bound: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroLength);
    }
    if n > bound {
        return Err(Error::AboveBound { n, bound });
    }
    Ok(())
}

/// All class slices of one sequence up to a fixed length, computed once.
#[derive(Clone, Debug)]
pub struct ClassEnumerator {
    spec: SequenceSpec,
    /// `levels[n - 1]` holds the slice of length `n`.
    levels: Vec<BTreeSet<Permutation>>,
}

impl ClassEnumerator {
    /// Enumerates lengths `1..=n_max`; rejects `n_max > bound`.
    pub fn new(spec: &SequenceSpec, n_max: usize, bound: usize) -> Result<Self> {
        check_length(n_max, bound)?;
        let lang = PinLanguage::Spec(spec.clone());
        let mut circ: Vec<Vec<Permutation>> = vec![Vec::new()];
        let mut bullet: Vec<Vec<Permutation>> = vec![Vec::new()];
        for k in 1..=n_max {
            let words = p_slice(&lang, k)?;
            let mut c = BTreeSet::new();
            let mut b = BTreeSet::new();
            for w in &words {
                c.insert(psi_circ(w)?);
                b.insert(psi_bullet(w)?);
            }
            circ.push(c.into_iter().collect());
            bullet.push(b.into_iter().collect());
        }

        let mut levels: Vec<BTreeSet<Permutation>> = Vec::with_capacity(n_max);
        for m in 1..=n_max {
            let mut level: HashSet<Permutation> = circ[m].iter().cloned().collect();
            for k in 1..m {
                for head in &levels[k - 1] {
                    for tail in &bullet[m - k] {
                        level.insert(boxplus(head, tail));
                    }
                }
            }
            levels.push(level.into_iter().collect());
        }
        Ok(ClassEnumerator {
            spec: spec.clone(),
            levels,
        })
    }

    pub fn spec(&self) -> &SequenceSpec {
        &self.spec
    }

    pub fn n_max(&self) -> usize {
        self.levels.len()
    }

    pub fn members(&self, n: usize) -> Option<&BTreeSet<Permutation>> {
        n.checked_sub(1).and_then(|k| self.levels.get(k))
    }

    pub fn slice(&self, n: usize) -> Option<ClassSlice> {
        self.members(n).map(|members| ClassSlice {
            spec: self.spec.clone(),
            n,
            members: members.clone(),
        })
    }

    pub fn counts(&self) -> Vec<usize> {
        self.levels.iter().map(BTreeSet::len).collect()
    }
}

pub fn class_slice(spec: &SequenceSpec, n: usize, bound: usize) -> Result<ClassSlice> {
    let e = ClassEnumerator::new(spec, n, bound)?;
    Ok(e.slice(n).expect("enumerated up to n"))
}

/// `|C_n|` for `n = 1..=n_max`.
pub fn class_counts(spec: &SequenceSpec, n_max: usize, bound: usize) -> Result<Vec<usize>> {
    Ok(ClassEnumerator::new(spec, n_max, bound)?.counts())
}

/// `max_{n <= n_max} |C_n|^{1/n}`, a lower bound on the growth rate since
/// the counts are supermultiplicative.
pub fn fekete_lower_bound(spec: &SequenceSpec, n_max: usize, bound: usize) -> Result<f64> {
    Ok(fekete_from_counts(&class_counts(spec, n_max, bound)?))
}

pub fn fekete_from_counts(counts: &[usize]) -> f64 {
    counts
        .iter()
        .enumerate()
        .map(|(k, &c)| (c as f64).powf(1.0 / (k + 1) as f64))
        .fold(0.0, f64::max)
}

/// Pairs `(m, n)` with `m + n <= counts.len()` where `|C_{m+n}| < |C_m| |C_n|`.
pub fn supermultiplicativity_violations(counts: &[usize]) -> Vec<(usize, usize)> {
    let len = counts.len();
    let mut bad = Vec::new();
    for m in 1..len {
        for n in 1..=len - m {
            if counts[m + n - 1] < counts[m - 1] * counts[n - 1] {
                bad.push((m, n));
            }
        }
    }
    bad
}

/// How non-membership of the witness in the later class was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessRoute {
    /// Both slices of length `N` were enumerated.
    Enumeration,
    /// `N` exceeded the bound: the witness is `⊞`-indecomposable, so it could
    /// only be `ψ°(y)` or `1 ⊞ ψ•(y)` for pin words `y` of the later class,
    /// and none of those match.
    Indecomposable,
}

#[derive(Clone, Debug, Serialize)]
pub struct EnumerationDivergence {
    pub s: SequenceSpec,
    pub t: SequenceSpec,
    /// First length at which the word languages differ.
    pub m: usize,
    /// `2M - 1`, the length at which the classes are separated.
    pub n: usize,
    /// Word in the language of `s` but not `t` of length `M`.
    pub word: BinaryWord,
    /// `ρ(word)` with its last letter removed.
    pub pin_word: PinWord,
    pub witness: Permutation,
    /// Largest length at which slice containment was checked.
    pub checked_up_to: usize,
    /// `C_n(t) ⊆ C_n(s)` for every `n <= checked_up_to`.
    pub containment_holds: bool,
    /// `C_N(t) ⊊ C_N(s)` when `N` is within the bound.
    pub strict_at_n: Option<bool>,
    pub counts_s: Vec<usize>,
    pub counts_t: Vec<usize>,
    pub witness_in_s: bool,
    pub witness_excluded_from_t: bool,
    pub route: WitnessRoute,
    /// Smallest length within the bound at which the slices differ.
    pub first_strict: Option<usize>,
    /// Least member of `C(s) \ C(t)` at `first_strict`.
    pub separating: Option<Permutation>,
}

impl EnumerationDivergence {
    pub fn holds(&self) -> bool {
        self.containment_holds
            && self.strict_at_n.unwrap_or(true)
            && self.witness_in_s
            && self.witness_excluded_from_t
    }
}

/// Separates the classes of `s` and `t` (with `s` lexicographically first)
/// at length `N = 2M - 1`, reporting a witness in `C(s) \ C(t)`.
pub fn enumeration_divergence(
    s: &SequenceSpec,
    t: &SequenceSpec,
    bound: usize,
) -> Result<EnumerationDivergence> {
    let (m, difference) = divergence_difference(s, t)?;
    let n = 2 * m - 1;
    let word = difference
        .into_iter()
        .next()
        .expect("slices differ at the divergence length");
    let image = rho(&word);
    let pin_word = image.slice(0, image.len() - 1);
    let witness = psi_circ(&pin_word)?;

    let checked_up_to = n.min(bound);
    let es = ClassEnumerator::new(s, bound, bound)?;
    let et = ClassEnumerator::new(t, bound, bound)?;
    let containment_holds = (1..=checked_up_to).all(|k| {
        let (a, b) = (es.members(k).unwrap(), et.members(k).unwrap());
        b.is_subset(a)
    });

    let (strict_at_n, witness_in_s, witness_excluded_from_t, route) = if n <= bound {
        let (a, b) = (es.members(n).unwrap(), et.members(n).unwrap());
        (
            Some(b.len() < a.len() && b.is_subset(a)),
            a.contains(&witness),
            !b.contains(&witness),
            WitnessRoute::Enumeration,
        )
    } else {
        let in_s = PinLanguage::Spec(s.clone()).contains(&pin_word)?;
        let t_lang = PinLanguage::Spec(t.clone());
        let mut excluded = !is_boxplus_decomposable(&witness);
        if excluded {
            for y in p_slice(&t_lang, n)? {
                if psi_circ(&y)? == witness {
                    excluded = false;
                    break;
                }
            }
        }
        if excluded {
            for y in p_slice(&t_lang, n - 1)? {
                if psi_bullet(&y)? == witness {
                    excluded = false;
                    break;
                }
            }
        }
        (None, in_s, excluded, WitnessRoute::Indecomposable)
    };

    let first_strict = (1..=bound).find(|&k| es.members(k) != et.members(k));
    let separating = first_strict.and_then(|k| {
        es.members(k)
            .unwrap()
            .difference(et.members(k).unwrap())
            .next()
            .cloned()
    });

    Ok(EnumerationDivergence {
        s: s.clone(),
        t: t.clone(),
        m,
        n,
        word,
        pin_word,
        witness,
        checked_up_to,
        containment_holds,
        strict_at_n,
        counts_s: es.counts(),
        counts_t: et.counts(),
        witness_in_s,
        witness_excluded_from_t,
        route,
        first_strict,
        separating,
    })
}
