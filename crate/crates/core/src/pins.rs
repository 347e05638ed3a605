//! Rightward-yearning pin sequences.
//!
//! A pin word alternates between vertical pins (`u`, `d`) and right pins
//! (`r_u`, `r_d`), where a right pin's subscript records which side of the
//! origin it lies on. Binary words enter through `ρ: 0 ↦ d r_d, 1 ↦ u r_u`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::words::{self, BinaryWord, SequenceSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PinLetter {
    Up,
    Down,
    RightUp,
    RightDown,
}

impl PinLetter {
    pub const ALL: [PinLetter; 4] = [
        PinLetter::Up,
        PinLetter::Down,
        PinLetter::RightUp,
        PinLetter::RightDown,
    ];

    pub fn is_vertical(self) -> bool {
        matches!(self, PinLetter::Up | PinLetter::Down)
    }

    pub fn is_right(self) -> bool {
        !self.is_vertical()
    }

    /// True for pins that lie above the origin.
    pub fn is_upper(self) -> bool {
        matches!(self, PinLetter::Up | PinLetter::RightUp)
    }

    /// Single-character token: `u`, `d`, `R` (= r_u), `r` (= r_d).
    pub fn compact(self) -> &'static str {
        match self {
            PinLetter::Up => "u",
            PinLetter::Down => "d",
            PinLetter::RightUp => "R",
            PinLetter::RightDown => "r",
        }
    }

    pub fn verbose(self) -> &'static str {
        match self {
            PinLetter::Up => "u",
            PinLetter::Down => "d",
            PinLetter::RightUp => "r_u",
            PinLetter::RightDown => "r_d",
        }
    }
}

/// A word over the pin alphabet. Construction through [`PinWord::new`]
/// enforces alternation; membership in the factor closure of `ρ` is checked
/// separately by [`is_in_p`].
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PinWord(Vec<PinLetter>);

impl PinWord {
    pub fn empty() -> Self {
        PinWord(Vec::new())
    }

    pub fn new(letters: Vec<PinLetter>) -> Result<Self> {
        let word = PinWord(letters);
        word.check_alternation()?;
        Ok(word)
    }

    /// No invariant checks; used when enumerating arbitrary letter strings.
    pub fn from_letters_unchecked(letters: Vec<PinLetter>) -> Self {
        PinWord(letters)
    }

    pub fn letters(&self) -> &[PinLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<PinLetter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<PinLetter> {
        self.0.last().copied()
    }

    /// Letters `start..end` (0-based, half open).
    pub fn slice(&self, start: usize, end: usize) -> PinWord {
        PinWord(self.0[start..end].to_vec())
    }

    pub fn concat(&self, other: &PinWord) -> PinWord {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        PinWord(letters)
    }

    pub fn is_factor_of(&self, host: &PinWord) -> bool {
        self.is_empty() || host.0.windows(self.len()).any(|w| w == self.0.as_slice())
    }

    /// All length-`n` factors.
    pub fn factors_of_length(&self, n: usize) -> BTreeSet<PinWord> {
        if n > self.len() {
            return BTreeSet::new();
        }
        if n == 0 {
            return BTreeSet::from([PinWord::empty()]);
        }
        self.0.windows(n).map(|w| PinWord(w.to_vec())).collect()
    }

    fn check_alternation(&self) -> Result<()> {
        match self
            .0
            .windows(2)
            .position(|p| p[0].is_vertical() == p[1].is_vertical())
        {
            Some(k) => Err(Error::Alternation(k + 2)),
            None => Ok(()),
        }
    }

    fn check_subscripts(&self) -> Result<()> {
        let bad = self.0.windows(2).position(|p| {
            matches!(
                (p[0], p[1]),
                (PinLetter::Up, PinLetter::RightDown) | (PinLetter::Down, PinLetter::RightUp)
            )
        });
        match bad {
            Some(k) => Err(Error::Subscript(k + 2)),
            None => Ok(()),
        }
    }

    /// Space separated `u r_u d r_d` form.
    pub fn verbose(&self) -> String {
        self.0
            .iter()
            .map(|l| l.verbose())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for PinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_str(l.compact())?;
        }
        Ok(())
    }
}

impl fmt::Debug for PinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PinWord({})", self.verbose())
    }
}

impl FromStr for PinWord {
    type Err = Error;

    /// Accepts the compact form (`uRdr`) and the verbose form
    /// (`u r_u d r_d`, spaces optional). Alternation is enforced.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidPinWord(s.to_string());
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut letters = Vec::with_capacity(chars.len());
        let mut k = 0;
        while k < chars.len() {
            let letter = match chars[k] {
                'u' => PinLetter::Up,
                'd' => PinLetter::Down,
                'R' => PinLetter::RightUp,
                'r' if chars.get(k + 1) == Some(&'_') => {
                    k += 2;
                    match chars.get(k) {
                        Some('u') => PinLetter::RightUp,
                        Some('d') => PinLetter::RightDown,
                        _ => return Err(bad()),
                    }
                }
                'r' => PinLetter::RightDown,
                _ => return Err(bad()),
            };
            letters.push(letter);
            k += 1;
        }
        PinWord::new(letters)
    }
}

impl Serialize for PinWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.verbose())
    }
}

impl<'de> Deserialize<'de> for PinWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `ρ`: `0 ↦ d r_d`, `1 ↦ u r_u`.
pub fn rho(w: &BinaryWord) -> PinWord {
    let mut letters = Vec::with_capacity(2 * w.len());
    for &b in w.letters() {
        if b == 0 {
            letters.extend([PinLetter::Down, PinLetter::RightDown]);
        } else {
            letters.extend([PinLetter::Up, PinLetter::RightUp]);
        }
    }
    PinWord(letters)
}

/// Membership in the factor closure of `ρ({0,1}*)`: alternation plus
/// matching subscripts after every vertical pin.
pub fn is_in_p(w: &PinWord) -> bool {
    w.check_alternation().is_ok() && w.check_subscripts().is_ok()
}

/// Which pin language to slice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PinLanguage {
    /// The factor closure of `ρ` over all binary words.
    All,
    /// The factor closure of `ρ` over the language of one sequence.
    Spec(SequenceSpec),
}

impl PinLanguage {
    pub fn contains(&self, w: &PinWord) -> Result<bool> {
        if !is_in_p(w) {
            return Ok(false);
        }
        match self {
            PinLanguage::All => Ok(true),
            PinLanguage::Spec(_) => Ok(p_slice(self, w.len())?.contains(w)),
        }
    }
}

/// Binary words long enough that every length-`n` pin word is a factor of
/// the image of one of them.
fn binary_window(n: usize) -> usize {
    n.div_ceil(2) + 1
}

/// The length-`n` words of the pin language.
pub fn p_slice(lang: &PinLanguage, n: usize) -> Result<BTreeSet<PinWord>> {
    if n == 0 {
        return Ok(BTreeSet::from([PinWord::empty()]));
    }
    let sources: Vec<BinaryWord> = match lang {
        PinLanguage::All => BinaryWord::all_of_length(binary_window(n)).collect(),
        PinLanguage::Spec(spec) => words::language_slice(spec, binary_window(n))?
            .into_iter()
            .collect(),
    };
    let mut out = BTreeSet::new();
    for b in &sources {
        out.extend(rho(b).factors_of_length(n));
    }
    Ok(out)
}

/// A point by its (x-rank, y-rank), both 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Point {
    pub x: usize,
    pub y: usize,
}

/// Generic point set realized from a pin word. `points[0]` is the origin
/// when `has_origin` is set; the remaining points follow in pin order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PinConfiguration {
    pub points: Vec<Point>,
    pub has_origin: bool,
}

impl PinConfiguration {
    /// The permutation whose plot is order isomorphic to the points.
    pub fn permutation(&self) -> Permutation {
        let mut by_x = self.points.clone();
        by_x.sort_by_key(|p| p.x);
        let ys: Vec<usize> = by_x.iter().map(|p| p.y).collect();
        Permutation::pattern_of(&ys)
    }

    /// Pins only, origin dropped (indices into `points`).
    pub fn pin_points(&self) -> &[Point] {
        if self.has_origin {
            &self.points[1..]
        } else {
            &self.points
        }
    }
}

/// Places the origin and then one point per letter by rank insertion.
/// `x_order` and `y_order` hold point ids from left to right and bottom to
/// top; id 0 is the origin.
fn place(w: &PinWord) -> Result<(Vec<usize>, Vec<usize>)> {
    w.check_alternation()?;
    w.check_subscripts()?;
    let mut x_order = vec![0usize];
    let mut y_order = vec![0usize];
    for (k, &letter) in w.letters().iter().enumerate() {
        let id = k + 1;
        if k == 0 {
            x_order.push(id);
            if letter.is_upper() {
                y_order.push(id);
            } else {
                y_order.insert(0, id);
            }
            continue;
        }
        let top = y_order.len();
        let right = x_order.len();
        match letter {
            PinLetter::Up => {
                y_order.push(id);
                x_order.insert(right - 1, id);
            }
            PinLetter::Down => {
                y_order.insert(0, id);
                x_order.insert(right - 1, id);
            }
            PinLetter::RightUp => {
                x_order.push(id);
                y_order.insert(top - 1, id);
            }
            PinLetter::RightDown => {
                x_order.push(id);
                y_order.insert(1, id);
            }
        }
    }
    Ok((x_order, y_order))
}

/// Geometric realization of a pin word, with or without its origin.
pub fn realize(w: &PinWord, with_origin: bool) -> Result<PinConfiguration> {
    let (x_order, y_order) = place(w)?;
    let total = x_order.len();
    let mut xs = vec![0usize; total];
    let mut ys = vec![0usize; total];
    let skip = usize::from(!with_origin);
    let mut rank = 0;
    for &id in &x_order {
        if id == 0 && !with_origin {
            continue;
        }
        xs[id] = rank;
        rank += 1;
    }
    rank = 0;
    for &id in &y_order {
        if id == 0 && !with_origin {
            continue;
        }
        ys[id] = rank;
        rank += 1;
    }
    let points = (skip..total)
        .map(|id| Point {
            x: xs[id],
            y: ys[id],
        })
        .collect();
    Ok(PinConfiguration {
        points,
        has_origin: with_origin,
    })
}

/// The pattern of the pins `p_1 .. p_n`, origin excluded.
pub fn psi_circ(w: &PinWord) -> Result<Permutation> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(realize(w, false)?.permutation())
}

/// The pattern of `p_0, p_1, .., p_n`, origin included. `ψ•(ε) = 1`.
pub fn psi_bullet(w: &PinWord) -> Result<Permutation> {
    Ok(realize(w, true)?.permutation())
}

/// `ψ°` with the convention `ψ°(ε) = ε`.
pub fn psi_circ_or_empty(w: &PinWord) -> Result<Permutation> {
    if w.is_empty() {
        Ok(Permutation::empty())
    } else {
        psi_circ(w)
    }
}

/// The word `φ(v)` with `ψ°(v) = ψ•(φ(v))`, obtained by letting the first pin
/// play the origin. Defined for `|v| >= 3`.
pub fn circ_to_bullet(v: &PinWord) -> Result<PinWord> {
    use PinLetter::*;
    if v.len() < 3 {
        return Err(Error::InvalidPinWord(format!(
            "{v}: the origin shift needs at least three letters"
        )));
    }
    let l = v.letters();
    let (head, rest): (&[PinLetter], usize) = match (l[0], l[1], l[2]) {
        (Up, RightUp, _) => (&[RightDown], 2),
        (Down, RightDown, _) => (&[RightUp], 2),
        (RightUp | RightDown, Up, RightUp) => (&[Down, RightDown], 3),
        (RightUp | RightDown, Down, RightDown) => (&[Up, RightUp], 3),
        _ => return Err(Error::Subscript(2)),
    };
    let mut letters = head.to_vec();
    letters.extend_from_slice(&l[rest..]);
    Ok(PinWord(letters))
}

/// Removes the first letter.
pub fn delta_left(w: &PinWord) -> Result<PinWord> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(w.slice(1, w.len()))
}

/// Removes the last letter.
pub fn delta_right(w: &PinWord) -> Result<PinWord> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(w.slice(0, w.len() - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pw(s: &str) -> PinWord {
        s.parse().unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn rho_examples() {
        let tm: BinaryWord = "01101001".parse().unwrap();
        assert_eq!(
            rho(&tm),
            pw("d r_d u r_u u r_u d r_d u r_u d r_d d r_d u r_u")
        );
        assert_eq!(rho(&"0".parse().unwrap()), pw("d r_d"));
        assert_eq!(rho(&BinaryWord::empty()), PinWord::empty());
    }

    #[test]
    fn parsing_forms_agree() {
        assert_eq!(pw("uRdr"), pw("u r_u d r_d"));
        assert_eq!(pw("ur_udr_d"), pw("uRdr"));
        assert_eq!(pw("uRdr").verbose(), "u r_u d r_d");
        assert_eq!(pw("u r_u d r_d").to_string(), "uRdr");
        assert!(matches!(
            "uu".parse::<PinWord>(),
            Err(Error::Alternation(2))
        ));
        assert!("ux".parse::<PinWord>().is_err());
        assert!("r_x".parse::<PinWord>().is_err());
    }

    #[test]
    fn membership_examples() {
        assert!(is_in_p(&pw("d r_d u r_u")));
        assert!(!is_in_p(&pw("u r_d")));
        assert!(is_in_p(&pw("r_u u r_u u")));
        assert!(!is_in_p(&PinWord::from_letters_unchecked(vec![
            PinLetter::Up,
            PinLetter::Down
        ])));
    }

    #[test]
    fn p_slice_examples() {
        let all4 = p_slice(&PinLanguage::All, 4).unwrap();
        assert_eq!(all4.len(), 12);
        let all1 = p_slice(&PinLanguage::All, 1).unwrap();
        assert_eq!(
            all1,
            PinLetter::ALL.iter().map(|&l| PinWord(vec![l])).collect()
        );
        let tm = PinLanguage::Spec("1".parse().unwrap());
        let expected: BTreeSet<PinWord> = ["dr", "uR", "ru", "rd", "Ru", "Rd"]
            .iter()
            .map(|s| pw(s))
            .collect();
        assert_eq!(p_slice(&tm, 2).unwrap(), expected);
        assert_eq!(p_slice(&tm, 0).unwrap(), BTreeSet::from([PinWord::empty()]));
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi_circ(&pw("u r_u u r_u")).unwrap(), perm("2413"));
        assert_eq!(psi_circ(&pw("d r_d u")).unwrap(), perm("132"));
        assert_eq!(psi_circ(&pw("r_d d r_d d")).unwrap(), perm("2413"));
        assert_eq!(psi_circ(&PinWord::empty()), Err(Error::EmptyWord));

        assert_eq!(psi_bullet(&pw("u r_u u r_u")).unwrap(), perm("13524"));
        assert_eq!(psi_bullet(&pw("r_d d r_d d")).unwrap(), perm("52413"));
        assert_eq!(psi_bullet(&pw("u r_u d")).unwrap(), perm("2413"));
        assert_eq!(psi_bullet(&PinWord::empty()).unwrap(), perm("1"));
    }

    #[test]
    fn realize_small_cases() {
        let origin_only = realize(&PinWord::empty(), true).unwrap();
        assert_eq!(origin_only.points, vec![Point { x: 0, y: 0 }]);
        let c = realize(&pw("r_u d r_d"), true).unwrap();
        assert_eq!(c.points.len(), 4);
        let pins = PinConfiguration {
            points: c.pin_points().to_vec(),
            has_origin: false,
        };
        assert_eq!(pins.permutation(), perm("132"));
        assert!(matches!(
            realize(
                &PinWord::from_letters_unchecked(vec![PinLetter::Up, PinLetter::RightDown]),
                true
            ),
            Err(Error::Subscript(2))
        ));
    }

    #[test]
    fn origin_is_leftmost_and_splits_pins() {
        let w = pw("d r_d u r_u u r_u d r_d u r_u d r_d d r_d u r_u");
        let c = realize(&w, true).unwrap();
        let origin = c.points[0];
        assert_eq!(origin.x, 0);
        for (letter, p) in w.letters().iter().zip(c.pin_points()) {
            assert_eq!(p.y > origin.y, letter.is_upper());
        }
    }

    #[test]
    fn deltas() {
        assert_eq!(delta_left(&pw("dr_dur_u")).unwrap(), pw("r_dur_u"));
        assert_eq!(delta_right(&pw("dr_dur_u")).unwrap(), pw("dr_du"));
        assert_eq!(
            delta_left(&delta_right(&pw("d r_d")).unwrap()).unwrap(),
            PinWord::empty()
        );
        assert_eq!(delta_left(&PinWord::empty()), Err(Error::EmptyWord));
    }
}
