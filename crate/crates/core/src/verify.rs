//! Reproduction checks grouped into suites. Each check records what was
//! expected, what was computed, and the published statement it tests.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::Serialize;

use crate::classes::{
    enumeration_divergence, fekete_from_counts, supermultiplicativity_violations, ClassEnumerator,
};
use crate::error::{Error, Result};
use crate::oracle;
use crate::perm::{self, boxplus, complement_perm, is_boxplus_decomposable, Permutation};
use crate::pins::{
    self, p_slice, psi_bullet, psi_circ, psi_circ_or_empty, PinLanguage, PinLetter, PinWord,
};
use crate::sadic::{self, DirectiveWord, Morphism};
use crate::words::{self, BinaryWord, SequenceSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Words,
    Pins,
    Perm,
    Classes,
    Sadic,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Words,
        Suite::Pins,
        Suite::Perm,
        Suite::Classes,
        Suite::Sadic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Words => "words",
            Suite::Pins => "pins",
            Suite::Perm => "perm",
            Suite::Classes => "classes",
            Suite::Sadic => "sadic",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A suite name, or every suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteSelection {
    One(Suite),
    All,
}

impl SuiteSelection {
    pub fn suites(self) -> Vec<Suite> {
        match self {
            SuiteSelection::One(s) => vec![s],
            SuiteSelection::All => Suite::ALL.to_vec(),
        }
    }
}

impl FromStr for SuiteSelection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.eq_ignore_ascii_case("all") {
            return Ok(SuiteSelection::All);
        }
        Suite::ALL
            .iter()
            .find(|suite| suite.name().eq_ignore_ascii_case(s))
            .map(|&suite| SuiteSelection::One(suite))
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    /// The published statement this check reproduces.
    pub anchor: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

struct Recorder {
    suite: Suite,
    checks: Vec<Check>,
}

impl Recorder {
    fn new(suite: Suite) -> Self {
        Recorder {
            suite,
            checks: Vec::new(),
        }
    }

    fn eq(
        &mut self,
        name: impl Into<String>,
        anchor: &str,
        expected: impl ToString,
        actual: impl ToString,
    ) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        self.checks.push(Check {
            suite: self.suite,
            name: name.into(),
            anchor: anchor.to_string(),
            passed: expected == actual,
            expected,
            actual,
        });
    }

    /// A property that should hold; `detail` describes the first failure.
    fn holds(
        &mut self,
        name: impl Into<String>,
        anchor: &str,
        detail: std::result::Result<(), String>,
    ) {
        let actual = match detail {
            Ok(()) => "holds".to_string(),
            Err(msg) => msg,
        };
        self.eq(name, anchor, "holds", actual);
    }

    fn finish(self) -> Vec<Check> {
        self.checks
    }
}

fn first_failure<T, I, F>(items: I, mut ok: F) -> std::result::Result<(), String>
where
    I: IntoIterator<Item = T>,
    T: fmt::Display,
    F: FnMut(&T) -> Result<bool>,
{
    for item in items {
        match ok(&item) {
            Ok(true) => {}
            Ok(false) => return Err(format!("fails at {item}")),
            Err(e) => return Err(format!("error at {item}: {e}")),
        }
    }
    Ok(())
}

struct Indices(usize, usize);

impl From<(usize, usize)> for Indices {
    fn from((i, j): (usize, usize)) -> Self {
        Indices(i, j)
    }
}

impl fmt::Display for Indices {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(i, j) = ({}, {})", self.0, self.1)
    }
}

fn spec(s: &str) -> SequenceSpec {
    s.parse().expect("valid built-in spec")
}

fn pw(s: &str) -> PinWord {
    s.parse().expect("valid built-in pin word")
}

fn perm(s: &str) -> Permutation {
    s.parse().expect("valid built-in permutation")
}

fn set_string<T: fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    format!(
        "{{{}}}",
        items.into_iter().map(|x| x.to_string()).join(", ")
    )
}

fn word_set(words: &[&str]) -> String {
    let set: BTreeSet<BinaryWord> = words.iter().map(|w| w.parse().unwrap()).collect();
    set_string(set.iter().map(display_word))
}

fn display_word(w: &BinaryWord) -> String {
    if w.is_empty() {
        "ε".to_string()
    } else {
        w.to_string()
    }
}

fn slice_string(spec: &SequenceSpec, n: usize) -> String {
    match words::language_slice(spec, n) {
        Ok(set) => set_string(set.iter().map(display_word)),
        Err(e) => format!("error: {e}"),
    }
}

fn show<T: fmt::Display>(r: Result<T>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

pub fn run(selection: SuiteSelection) -> Vec<Check> {
    selection.suites().into_iter().flat_map(run_suite).collect()
}

pub fn run_suite(suite: Suite) -> Vec<Check> {
    match suite {
        Suite::Words => words_suite(),
        Suite::Pins => pins_suite(),
        Suite::Perm => perm_suite(),
        Suite::Classes => classes_suite(),
        Suite::Sadic => sadic_suite(),
    }
}

const WORD_TABLE: &str = "word family table";
const SLICE_DISPLAY: &str = "language slices of lengths 0 to 4";

fn words_suite() -> Vec<Check> {
    let mut r = Recorder::new(Suite::Words);
    let (tm, two) = (spec("1"), spec("2,1"));

    let table = [
        (&tm, ["01", "0110", "01101001", "0110100110010110"]),
        (
            &two,
            [
                "01",
                "01011010",
                "0101101010100101",
                "01011010101001011010010101011010",
            ],
        ),
    ];
    for (s, rows) in table {
        for (i, expected) in rows.iter().enumerate() {
            r.eq(
                format!("alpha({s}, {})", i + 1),
                WORD_TABLE,
                expected,
                show(words::alpha(s, i + 1)),
            );
        }
    }

    let shared = [
        word_set(&[""]),
        word_set(&["0", "1"]),
        word_set(&["00", "01", "10", "11"]),
        word_set(&["001", "010", "011", "100", "101", "110"]),
    ];
    for (n, expected) in shared.iter().enumerate() {
        for s in [&tm, &two] {
            r.eq(
                format!("L_{n}({s})"),
                SLICE_DISPLAY,
                expected,
                slice_string(s, n),
            );
        }
    }
    let four = [
        "0010", "0100", "0101", "0110", "1001", "1010", "1011", "1101",
    ];
    r.eq(
        "L_4(2,1)",
        SLICE_DISPLAY,
        word_set(&four),
        slice_string(&two, 4),
    );
    let mut four_tm = four.to_vec();
    four_tm.extend(["0011", "1100"]);
    r.eq(
        "L_4(1)",
        SLICE_DISPLAY,
        word_set(&four_tm),
        slice_string(&tm, 4),
    );
    r.eq(
        "L_4(1) minus L_4(2,1)",
        SLICE_DISPLAY,
        word_set(&["0011", "1100"]),
        match words::divergence_difference(&tm, &two) {
            Ok((_, diff)) => set_string(diff.iter().map(display_word)),
            Err(e) => format!("error: {e}"),
        },
    );

    let anchor = "languages first differ at length 4";
    r.eq(
        "first divergence by scan",
        anchor,
        4,
        show(words::first_divergence(&tm, &two)),
    );
    r.eq(
        "first divergence closed form",
        anchor,
        4,
        show(words::divergence_closed_form(&tm, &two)),
    );

    for s in [&tm, &two, &spec("3,1,2"), &spec("1,2")] {
        r.holds(
            format!("block recursion for {s}"),
            "alpha_(i+1) = alpha_i^s_i complement(alpha_i)^s_i",
            first_failure(1..=4usize, |&i| {
                let a = words::alpha(s, i)?;
                let block = a.letters().repeat(s.term(i) as usize);
                let comp = words::complement(&a).letters().repeat(s.term(i) as usize);
                Ok(words::alpha(s, i + 1)?.letters() == [block, comp].concat())
            }),
        );
        r.holds(
            format!("slice cutoff matches stabilization for {s}"),
            "factors of alpha_(i+3) exhaust the length-n slice",
            first_failure(0..=10usize, |&n| {
                Ok(words::language_slice(s, n)? == words::language_slice_by_stabilization(s, n)?)
            }),
        );
        r.holds(
            format!("embeddings of alpha_i in alpha_j for {s}"),
            "occurrences of alpha_i sit on block boundaries or mid-pair",
            first_failure(
                (1..=3usize)
                    .cartesian_product(1..=5usize)
                    .filter(|(i, j)| i < j)
                    .map(Indices::from),
                |ij| {
                    Ok(words::alpha_embeddings(s, ij.0, ij.1)?
                        == words::alpha_embeddings_from_blocks(s, ij.0, ij.1)?)
                },
            ),
        );
    }
    r.finish()
}

const FIGURE_WORD: &str = "d r_d u r_u u r_u d r_d u r_u d r_d d r_d u r_u";

fn pins_suite() -> Vec<Check> {
    let mut r = Recorder::new(Suite::Pins);

    r.eq(
        "rho(01101001)",
        "pin sequence figure",
        pw(FIGURE_WORD).verbose(),
        pins::rho(&"01101001".parse().unwrap()).verbose(),
    );
    // Plot coordinates as drawn, doubled so the origin sits at -1.
    let drawn = [-2, 1, -1, 3, 0, -4, 2, 5, -3, -6, 4, -8, -5, 7, -7, 6];
    let mut keys = vec![-1];
    keys.extend(drawn.iter().map(|y| 2 * y));
    r.eq(
        "figure points order-isomorphic to psi_bullet",
        "pin sequence figure",
        Permutation::pattern_of(&keys),
        show(psi_bullet(&pw(FIGURE_WORD))),
    );

    let p4 = p_slice(&PinLanguage::All, 4).unwrap_or_default();
    r.eq("|P_4|", "length-four pin words with origin", 12, p4.len());
    let table2 = [
        ("u r_u u r_u", "13524"),
        ("u r_u d r_d", "35142"),
        ("r_u u r_u u", "14253"),
        ("r_u u r_u d", "25314"),
        ("r_u d r_d u", "31452"),
        ("r_u d r_d d", "42513"),
        ("d r_d u r_u", "31524"),
        ("d r_d d r_d", "53142"),
        ("r_d u r_u u", "24153"),
        ("r_d u r_u d", "35214"),
        ("r_d d r_d u", "41352"),
        ("r_d d r_d d", "52413"),
    ];
    for (w, expected) in table2 {
        r.eq(
            format!("psi_bullet({w})"),
            "length-four pin words with origin",
            expected,
            show(psi_bullet(&pw(w))),
        );
    }
    r.eq(
        "table rows are exactly P_4",
        "length-four pin words with origin",
        set_string(p4.iter()),
        set_string(table2.iter().map(|(w, _)| pw(w)).collect::<BTreeSet<_>>()),
    );

    let sharp = "uniqueness bounds are sharp";
    for w in ["u r_u d", "r_d u r_u"] {
        r.eq(
            format!("psi_bullet({w})"),
            sharp,
            "2413",
            show(psi_bullet(&pw(w))),
        );
    }
    for w in ["u r_u u r_u", "r_d d r_d d"] {
        r.eq(
            format!("psi_circ({w})"),
            sharp,
            "2413",
            show(psi_circ(&pw(w))),
        );
    }

    r.holds(
        "membership matches search over rho images",
        "P is the factor closure of rho",
        first_failure((0..=6).flat_map(oracle::all_pin_strings), |w| {
            Ok(pins::is_in_p(w) == oracle::in_p_by_search(w))
        }),
    );

    let chart = "origin shift chart";
    for (v, phi) in [
        ("u r_u d r_d", "r_d d r_d"),
        ("d r_d u r_u", "r_u u r_u"),
        ("r_u u r_u d", "d r_d d"),
        ("r_d u r_u u", "d r_d u"),
        ("r_u d r_d u", "u r_u u"),
        ("r_d d r_d d", "u r_u d"),
    ] {
        r.eq(
            format!("phi({v})"),
            chart,
            pw(phi).verbose(),
            match pins::circ_to_bullet(&pw(v)) {
                Ok(w) => w.verbose(),
                Err(e) => format!("error: {e}"),
            },
        );
    }
    r.holds(
        "psi_circ(v) = psi_bullet(phi(v)) for 3 <= |v| <= 8",
        chart,
        first_failure(
            (3..=8).flat_map(|k| p_slice(&PinLanguage::All, k).unwrap_or_default()),
            |v| Ok(psi_circ(v)? == psi_bullet(&pins::circ_to_bullet(v)?)?),
        ),
    );

    for k in 4..=6 {
        r.holds(
            format!("psi_bullet injective on P_{k}"),
            "words with origin are unique from length 4",
            injective_bullet(k),
        );
    }
    for k in 5..=6 {
        r.holds(
            format!("psi_circ collisions on P_{k} differ only in the first letter"),
            "words without origin are unique up to the first letter from length 5",
            circ_collisions(k),
        );
    }
    r.finish()
}

pub(crate) fn injective_bullet(k: usize) -> std::result::Result<(), String> {
    let mut seen = std::collections::HashMap::new();
    for w in p_slice(&PinLanguage::All, k).map_err(|e| e.to_string())? {
        let pi = psi_bullet(&w).map_err(|e| e.to_string())?;
        if let Some(prev) = seen.insert(pi.clone(), w.clone()) {
            return Err(format!("{prev} and {w} both give {pi}"));
        }
    }
    Ok(())
}

/// `ψ°(v) = ψ°(w)` with `v != w` forces equal tails and right-pin heads.
pub(crate) fn circ_collisions(k: usize) -> std::result::Result<(), String> {
    let mut groups: std::collections::BTreeMap<Permutation, Vec<PinWord>> = Default::default();
    for w in p_slice(&PinLanguage::All, k).map_err(|e| e.to_string())? {
        groups
            .entry(psi_circ(&w).map_err(|e| e.to_string())?)
            .or_default()
            .push(w);
    }
    for (pi, ws) in groups {
        for (v, w) in ws.iter().tuple_combinations() {
            let same_tail = v.letters()[1..] == w.letters()[1..];
            let right_heads = v.letters()[0].is_right() && w.letters()[0].is_right();
            if !(same_tail && right_heads) {
                return Err(format!("{v} and {w} both give {pi}"));
            }
        }
    }
    Ok(())
}

const SHORT_TABLE: &str = "decompositions of permutations of length at most four";

enum Row {
    Words(&'static str, &'static [&'static str]),
    Product(
        &'static str,
        &'static [&'static str],
        &'static [&'static str],
    ),
    Bare(&'static str),
}

/// Expands a leading generic right pin `r` into both subscripts.
fn expand_generic(w: &str) -> Vec<PinWord> {
    match w.strip_prefix("r ") {
        Some(rest) => vec![pw(&format!("r_u {rest}")), pw(&format!("r_d {rest}"))],
        None if w == "r" => vec![pw("r_u"), pw("r_d")],
        None => vec![pw(w)],
    }
}

fn complement_word(w: &PinWord) -> PinWord {
    PinWord::from_letters_unchecked(
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
}

fn perm_suite() -> Vec<Check> {
    let mut r = Recorder::new(Suite::Perm);
    let rows = [
        Row::Words("1", &["u", "d", "r"]),
        Row::Words("12", &["r d", "d r_d"]),
        Row::Words("21", &["r u", "u r_u"]),
        Row::Product("123", &["12", "12"], &[]),
        Row::Words("132", &["r d r_d", "d r_d u"]),
        Row::Product("213", &["21", "12"], &["d r_d d"]),
        Row::Product("231", &["12", "21"], &["u r_u u"]),
        Row::Words("312", &["u r_u d", "r u r_u"]),
        Row::Product("321", &["21", "21"], &[]),
        Row::Product("1234", &["12", "12", "12"], &[]),
        Row::Product("1243", &["12", "132"], &[]),
        Row::Product("1324", &["132", "12"], &[]),
        Row::Words("1342", &["r d r_d u"]),
        Row::Words("1423", &["d r_d u r_u"]),
        Row::Bare("1432"),
        Row::Product("2134", &["21", "12", "12"], &[]),
        Row::Product("2143", &["21", "132"], &[]),
        Row::Product("2314", &["12", "21", "12"], &[]),
        Row::Product("2341", &["12", "12", "21"], &[]),
        Row::Words("2413", &["u r_u u r_u", "r d r_d d"]),
        Row::Product("2431", &["132", "21"], &[]),
    ];
    for row in &rows {
        let (target, factors, words, indecomposable) = match row {
            Row::Words(p, ws) => (*p, &[][..], *ws, true),
            Row::Product(p, fs, ws) => (*p, *fs, *ws, false),
            Row::Bare(p) => (*p, &[][..], &[][..], true),
        };
        let mut variants = vec![(perm(target), false)];
        if target.len() == 4 {
            variants.push((complement_perm(&perm(target)), true));
        }
        for (pi, flipped) in variants {
            let tr = |p: Permutation| if flipped { complement_perm(&p) } else { p };
            if !factors.is_empty() {
                let parts: Vec<Permutation> = factors.iter().map(|f| tr(perm(f))).collect();
                let product = perm::boxplus_all(&parts).unwrap();
                r.eq(
                    format!("{pi} = {}", parts.iter().join(" ⊞ ")),
                    SHORT_TABLE,
                    &pi,
                    product,
                );
            }
            for w in words.iter().flat_map(|w| expand_generic(w)) {
                let w = if flipped { complement_word(&w) } else { w };
                r.eq(
                    format!("{pi} = psi_circ({})", w.verbose()),
                    SHORT_TABLE,
                    &pi,
                    show(psi_circ(&w)),
                );
            }
            r.eq(
                format!("{pi} indecomposable"),
                SHORT_TABLE,
                indecomposable,
                !is_boxplus_decomposable(&pi),
            );
        }
    }
    let indecomposable_four: BTreeSet<Permutation> = Permutation::all_of_length(4)
        .into_iter()
        .filter(|p| !is_boxplus_decomposable(p))
        .collect();
    r.eq(
        "indecomposables of length 4",
        SHORT_TABLE,
        set_string(
            [
                "1342", "1423", "1432", "2413", "4213", "4132", "4123", "3142",
            ]
            .iter()
            .map(|p| perm(p))
            .collect::<BTreeSet<_>>(),
        ),
        set_string(&indecomposable_four),
    );
    for p in ["1432", "4123"] {
        let pi = perm(p);
        r.holds(
            format!("{p} avoided by every psi_circ(w), |w| <= 10"),
            "1432 and its complement are not pin-sequence patterns",
            first_failure(
                (4..=10).flat_map(|k| p_slice(&PinLanguage::All, k).unwrap_or_default()),
                |w| Ok(!psi_circ(w)?.contains(&pi)),
            ),
        );
    }

    r.eq(
        "1 ⊞ 2413",
        "1 is the identity for ⊞",
        "2413",
        boxplus(&perm("1"), &perm("2413")),
    );
    r.eq(
        "2413 ⊞ 1",
        "1 is the identity for ⊞",
        "2413",
        boxplus(&perm("2413"), &perm("1")),
    );
    r.eq(
        "deletions of 2413",
        "one-point deletions",
        set_string(["132", "213", "231", "312"]),
        set_string(perm::one_point_deletions(&perm("2413"))),
    );

    for n in 1..=6 {
        r.holds(
            format!("interval criterion matches pair search, n = {n}"),
            "⊞-decomposable iff a proper prefix is an interval",
            first_failure(Permutation::all_of_length(n), |p| {
                Ok(is_boxplus_decomposable(p) == oracle::is_boxplus_decomposable_brute(p))
            }),
        );
    }
    r.holds(
        "psi_bullet indecomposable for 3 <= |w| <= 7; psi_circ for 4 <= |w| <= 7",
        "long pin sequences are ⊞-indecomposable",
        first_failure(
            (3..=7).flat_map(|k| p_slice(&PinLanguage::All, k).unwrap_or_default()),
            |w| {
                let bullet = !is_boxplus_decomposable(&psi_bullet(w)?);
                let circ = w.len() < 4 || !is_boxplus_decomposable(&psi_circ(w)?);
                Ok(bullet && circ)
            },
        ),
    );

    let figure = pw("d r_d u r_u d r_d u r_u d r_d");
    r.eq(
        "delete pin 5 of the figure word",
        "interior pin deletion figure",
        boxplus(
            &psi_circ(&pw("d r_d u r_u")).unwrap(),
            &psi_bullet(&pw("r_d u r_u d r_d")).unwrap(),
        ),
        show(delete_pin(&figure, 5, false)),
    );
    r.holds(
        "deletion identity for 4 <= |w| <= 6",
        "deleting pin i gives psi(w_1..w_(i-1)) ⊞ psi_bullet(w_(i+1)..w_n)",
        first_failure(
            (4..=6).flat_map(|k| p_slice(&PinLanguage::All, k).unwrap_or_default()),
            deletion_identity_holds,
        ),
    );
    r.finish()
}

/// Deletes the `i`-th pin (1-based) from `ψ°(w)` or, with `with_origin`, from
/// `ψ•(w)`.
pub fn delete_pin(w: &PinWord, i: usize, with_origin: bool) -> Result<Permutation> {
    let config = pins::realize(w, with_origin)?;
    let point = config
        .pin_points()
        .get(i.wrapping_sub(1))
        .ok_or(Error::ZeroIndex)?;
    Ok(perm::delete_entry(&config.permutation(), point.x))
}

/// Checks the deletion identity at every pin of `w`, with and without the
/// origin.
pub fn deletion_identity_holds(w: &PinWord) -> Result<bool> {
    let n = w.len();
    for i in 1..=n {
        let (before, after) = (w.slice(0, i - 1), w.slice(i, n));
        let tail = psi_bullet(&after)?;
        if delete_pin(w, i, false)? != boxplus(&psi_circ_or_empty(&before)?, &tail) {
            return Ok(false);
        }
        if delete_pin(w, i, true)? != boxplus(&psi_bullet(&before)?, &tail) {
            return Ok(false);
        }
    }
    Ok(true)
}

const DISTINCT: &str = "distinct enumerations, separated at N = 2M - 1";

fn classes_suite() -> Vec<Check> {
    let mut r = Recorder::new(Suite::Classes);
    let (tm, two) = (spec("1"), spec("2,1"));
    let bound = 8;
    let (es, et) = match (
        ClassEnumerator::new(&tm, bound, bound),
        ClassEnumerator::new(&two, bound, bound),
    ) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => {
            r.eq(
                "enumeration",
                "class enumeration",
                "ok",
                format!("error: {e}"),
            );
            return r.finish();
        }
    };

    r.eq(
        "C_1(1)",
        "class slices",
        "{1}",
        set_string(es.members(1).unwrap()),
    );
    r.eq(
        "C_2(1)",
        "class slices",
        "{12, 21}",
        set_string(es.members(2).unwrap()),
    );
    r.eq("|C_3(1)|", "class slices", 6, es.members(3).unwrap().len());
    let c4 = es.members(4).unwrap();
    r.eq(
        "C_4(1) misses exactly 1432 and 4123",
        "1432 and its complement are not pin-sequence patterns",
        "{1432, 4123}",
        set_string(
            Permutation::all_of_length(4)
                .into_iter()
                .filter(|p| !c4.contains(p)),
        ),
    );

    for (s, e) in [(&tm, &es), (&two, &et)] {
        for n in 1..=5 {
            r.eq(
                format!("C_{n}({s}) equals closure of a long pin sequence"),
                "class members are the ⊞-products of pin words of the language",
                set_string(e.members(n).unwrap()),
                match oracle::class_slice_by_closure(s, n, 8) {
                    Ok(set) => set_string(&set),
                    Err(e) => format!("error: {e}"),
                },
            );
        }
        r.holds(
            format!("downward closure of C({s}) up to length {bound}"),
            "classes are closed under patterns",
            first_failure(2..=bound, |&n| {
                let lower = e.members(n - 1).unwrap();
                Ok(e.members(n)
                    .unwrap()
                    .iter()
                    .all(|p| perm::one_point_deletions(p).is_subset(lower)))
            }),
        );
    }

    let counts = es.counts();
    r.eq(
        "supermultiplicativity of |C_n(1)|, n <= 8",
        "growth rate bounded below by Fekete",
        "[]",
        format!("{:?}", supermultiplicativity_violations(&counts)),
    );
    let bounds: Vec<f64> = (1..=counts.len())
        .map(|k| fekete_from_counts(&counts[..k]))
        .collect();
    r.eq(
        "Fekete bound nondecreasing in n_max",
        "growth rate bounded below by Fekete",
        true,
        bounds.windows(2).all(|w| w[0] <= w[1]),
    );

    match enumeration_divergence(&tm, &two, bound) {
        Ok(d) => {
            r.eq("M", DISTINCT, 4, d.m);
            r.eq("N", DISTINCT, 7, d.n);
            r.eq(
                format!("C_n({two}) ⊆ C_n({tm}) for n <= N"),
                DISTINCT,
                true,
                d.containment_holds,
            );
            r.eq(
                "witness psi_circ(x) in C_N(1)",
                DISTINCT,
                true,
                d.witness_in_s,
            );
            r.eq(
                format!("witness {} outside C_N(2,1)", d.witness),
                DISTINCT,
                true,
                d.witness_excluded_from_t,
            );
            r.eq(
                "|C_N(2,1)| < |C_N(1)|",
                DISTINCT,
                "strict",
                match d.strict_at_n {
                    Some(true) => "strict".to_string(),
                    _ => format!(
                        "not strict: {} vs {}",
                        d.counts_t[d.n - 1],
                        d.counts_s[d.n - 1]
                    ),
                },
            );
            r.eq(
                "slices separate within the bound",
                "distinct enumerations",
                "some n <= 8",
                match d.first_strict {
                    Some(n) if n <= bound => "some n <= 8".to_string(),
                    other => format!("{other:?}"),
                },
            );
            if let (Some(n), Some(pi)) = (d.first_strict, &d.separating) {
                r.eq(
                    format!("{pi} separates the classes at n = {n}"),
                    "distinct enumerations",
                    true,
                    es.members(n).unwrap().contains(pi) && !et.members(n).unwrap().contains(pi),
                );
            }
        }
        Err(e) => r.eq("divergence", DISTINCT, "ok", format!("error: {e}")),
    }
    r.finish()
}

fn sadic_suite() -> Vec<Check> {
    let mut r = Recorder::new(Suite::Sadic);
    let specs = [spec("1"), spec("2,1"), spec("4,2,1")];

    r.eq(
        "mu sigma^k agrees with composition",
        "morphisms mu and sigma",
        true,
        (0..4).all(|k| {
            let mut m = Morphism::mu();
            for _ in 0..k {
                m = m.compose(&Morphism::sigma());
            }
            m == sadic::mu_k(k)
        }),
    );
    let tm: DirectiveWord = "0".parse().unwrap();
    r.eq(
        "Thue–Morse prefix",
        "S-adic limit",
        "0110100110010110",
        show(sadic::sadic_prefix(&tm, 16)),
    );

    for s in &specs {
        r.holds(
            format!("directive image of 0 for {s}"),
            "mu_t1 ... mu_ti (0) = alpha_i^s_i",
            first_failure(1..=4usize, |&i| {
                let d = DirectiveWord::from_spec(s)?;
                let a = words::alpha(s, i)?;
                Ok(sadic::directive_image(&d, i)?.letters()
                    == a.letters().repeat(s.term(i) as usize))
            }),
        );
        r.eq(
            format!("factors of the sequence for {s}, n <= 16"),
            "the S-adic sequence has the language of the word family",
            true,
            show(sadic::verify_sadic_language(s, 16)),
        );
        r.holds(
            format!("complexity of {s} at most 8n, n <= 64"),
            "linear complexity bound 8n",
            first_failure(1..=64usize, |&n| Ok(sadic::complexity(s, n)? <= 8 * n)),
        );
    }
    let (a, b) = (&specs[0], &specs[1]);
    let first = (1..=16).find(|&n| sadic::complexity(a, n).ok() != sadic::complexity(b, n).ok());
    r.eq(
        "first length with different complexity",
        "distinct complexity functions",
        "Some(4)",
        format!("{first:?}"),
    );
    r.eq(
        "complexity(1, 4)",
        "distinct complexity functions",
        10,
        show(sadic::complexity(a, 4)),
    );
    r.eq(
        "complexity(2,1, 4)",
        "distinct complexity functions",
        8,
        show(sadic::complexity(b, 4)),
    );
    r.finish()
}
