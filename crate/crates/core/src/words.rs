//! Free-group words over the basis `{a, b, c}`.
//!
//! Text format: lowercase letters are generators, uppercase letters are their
//! inverses (`A = a⁻¹`). Every [`ReducedWord`] is kept freely reduced, so its
//! length is the word length `|g|_A` of the element it represents.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// One of the three free generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Base {
    A,
    B,
    C,
}

/// A generator or its inverse.
///
/// Stored as a single code in `0..6`: `a, b, c, A, B, C`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(u8);

impl Letter {
    pub const A: Letter = Letter(0);
    pub const B: Letter = Letter(1);
    pub const C: Letter = Letter(2);
    pub const A_INV: Letter = Letter(3);
    pub const B_INV: Letter = Letter(4);
    pub const C_INV: Letter = Letter(5);

    /// All six letters in code order.
    pub const ALL: [Letter; 6] = [
        Letter::A,
        Letter::B,
        Letter::C,
        Letter::A_INV,
        Letter::B_INV,
        Letter::C_INV,
    ];

    pub fn new(base: Base, positive: bool) -> Letter {
        let idx = base as u8;
        Letter(if positive { idx } else { idx + 3 })
    }

    pub fn base(self) -> Base {
        match self.0 % 3 {
            0 => Base::A,
            1 => Base::B,
            _ => Base::C,
        }
    }

    /// `+1` for a generator, `-1` for an inverse.
    pub fn sign(self) -> i8 {
        if self.0 < 3 {
            1
        } else {
            -1
        }
    }

    pub fn is_positive(self) -> bool {
        self.0 < 3
    }

    #[inline]
    pub fn inverse(self) -> Letter {
        Letter((self.0 + 3) % 6)
    }

    pub fn is_c(self) -> bool {
        self.0 % 3 == 2
    }

    /// Compact code in `0..6`.
    #[inline]
    pub fn code(self) -> u8 {
        self.0
    }

    pub fn to_char(self) -> char {
        b"abcABC"[self.0 as usize] as char
    }

    pub fn from_char(ch: char) -> Option<Letter> {
        match ch {
            'a' => Some(Letter::A),
            'b' => Some(Letter::B),
            'c' => Some(Letter::C),
            'A' => Some(Letter::A_INV),
            'B' => Some(Letter::B_INV),
            'C' => Some(Letter::C_INV),
            _ => None,
        }
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// A freely reduced word; the canonical form of an element of `F(a,b,c)`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedWord {
    letters: Vec<Letter>,
}

impl ReducedWord {
    pub fn identity() -> ReducedWord {
        ReducedWord::default()
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> ReducedWord {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            push_reducing(&mut out, l);
        }
        ReducedWord { letters: out }
    }

    /// Wraps a sequence the caller knows is already freely reduced.
    ///
    /// Debug builds check the claim.
    pub(crate) fn from_reduced_unchecked(letters: Vec<Letter>) -> ReducedWord {
        debug_assert!(is_freely_reduced(&letters));
        ReducedWord { letters }
    }

    pub fn letter(l: Letter) -> ReducedWord {
        ReducedWord { letters: vec![l] }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    /// Graphical subword `self[start..end)`. Subwords of reduced words are reduced.
    pub fn subword(&self, start: usize, end: usize) -> ReducedWord {
        ReducedWord {
            letters: self.letters[start..end].to_vec(),
        }
    }

    pub fn prefix(&self, len: usize) -> ReducedWord {
        self.subword(0, len)
    }

    /// Whether the word lies in `F(a,b)`.
    pub fn is_c_free(&self) -> bool {
        !self.letters.iter().any(|l| l.is_c())
    }

    /// Whether every letter is a generator (no inverses).
    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| l.is_positive())
    }

    pub fn multiply(&self, other: &ReducedWord) -> ReducedWord {
        let mut out = self.letters.clone();
        out.reserve(other.len());
        for &l in &other.letters {
            push_reducing(&mut out, l);
        }
        ReducedWord { letters: out }
    }

    pub fn inverse(&self) -> ReducedWord {
        ReducedWord {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `self^n`; negative exponents power the inverse.
    pub fn power(&self, n: i64) -> ReducedWord {
        if n == 0 || self.is_empty() {
            return ReducedWord::identity();
        }
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let n = n.unsigned_abs() as usize;
        let cyc = base.cyclic_reduce();
        if n == 1 {
            return base;
        }
        // u w^n u⁻¹ with w cyclically reduced is already reduced.
        let mut letters = Vec::with_capacity(2 * cyc.conjugator.len() + n * cyc.core.len());
        letters.extend_from_slice(cyc.conjugator.letters());
        for _ in 0..n {
            letters.extend_from_slice(cyc.core.letters());
        }
        letters.extend(cyc.conjugator.letters.iter().rev().map(|l| l.inverse()));
        ReducedWord::from_reduced_unchecked(letters)
    }

    /// `self⁻¹ · other`, the label of the `X`-geodesic from `self` to `other`.
    pub fn left_divide(&self, other: &ReducedWord) -> ReducedWord {
        self.inverse().multiply(other)
    }

    /// `h · self · h⁻¹`.
    pub fn conjugate_by(&self, h: &ReducedWord) -> ReducedWord {
        h.multiply(self).multiply(&h.inverse())
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.first(), self.last()) {
            (Some(f), Some(l)) => self.len() == 1 || f != l.inverse(),
            _ => true,
        }
    }

    /// Splits `self = u · w · u⁻¹` with `w` cyclically reduced.
    pub fn cyclic_reduce(&self) -> CyclicWord {
        let n = self.letters.len();
        let mut k = 0;
        while 2 * k + 1 < n && self.letters[k] == self.letters[n - 1 - k].inverse() {
            k += 1;
        }
        CyclicWord {
            core: self.subword(k, n - k),
            conjugator: self.prefix(k),
        }
    }

    /// The unique root-free `r` and `e ≥ 1` with `self = r^e`.
    pub fn primitive_root(&self) -> Result<(ReducedWord, u64)> {
        if self.is_empty() {
            return Err(Error::IdentityHasNoRoot);
        }
        let cyc = self.cyclic_reduce();
        let period = smallest_dividing_period(cyc.core.letters());
        let exponent = (cyc.core.len() / period) as u64;
        let root_core = cyc.core.prefix(period);
        let root = ReducedWord::from_reduced_unchecked(
            cyc.conjugator
                .letters()
                .iter()
                .copied()
                .chain(root_core.letters.iter().copied())
                .chain(cyc.conjugator.letters.iter().rev().map(|l| l.inverse()))
                .collect(),
        );
        Ok((root, exponent))
    }

    /// Whether `self` is not a proper power.
    pub fn is_root_free(&self) -> bool {
        matches!(self.primitive_root(), Ok((_, 1)))
    }

    pub fn to_text(&self) -> String {
        self.letters.iter().map(|l| l.to_char()).collect()
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            // keep the empty word visible in logs
            write!(f, "1")
        } else {
            write!(f, "{}", self.to_text())
        }
    }
}

impl fmt::Debug for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ReducedWord({:?})", self.to_text())
    }
}

impl FromStr for ReducedWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

impl Serialize for ReducedWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_text())
    }
}

impl<'de> Deserialize<'de> for ReducedWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Parses the `a,b,c,A,B,C` text format and freely reduces the result.
pub fn parse(text: &str) -> Result<ReducedWord> {
    let mut out = Vec::with_capacity(text.len());
    for (position, ch) in text.chars().enumerate() {
        let l = Letter::from_char(ch).ok_or(Error::Parse { position, found: ch })?;
        push_reducing(&mut out, l);
    }
    Ok(ReducedWord { letters: out })
}

/// A cyclically reduced core together with its conjugator:
/// `original = conjugator · core · conjugator⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicWord {
    pub core: ReducedWord,
    pub conjugator: ReducedWord,
}

impl CyclicWord {
    /// `‖g‖_A`.
    pub fn cyclic_length(&self) -> usize {
        self.core.len()
    }

    pub fn original(&self) -> ReducedWord {
        self.core.conjugate_by(&self.conjugator)
    }
}

/// Shared primitive root of two nontrivial cyclically reduced words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommonRoot {
    pub root: ReducedWord,
    pub first_exponent: u64,
    pub second_exponent: u64,
}

/// Finds the root-free `u0` with `u1 = u0^r` and `u2 = u0^s`, if there is one.
///
/// Both inputs must be nontrivial and cyclically reduced; `None` otherwise too.
pub fn common_root(u1: &ReducedWord, u2: &ReducedWord) -> Option<CommonRoot> {
    if u1.is_empty() || u2.is_empty() || !u1.is_cyclically_reduced() || !u2.is_cyclically_reduced() {
        return None;
    }
    let (r1, e1) = u1.primitive_root().ok()?;
    let (r2, e2) = u2.primitive_root().ok()?;
    (r1 == r2).then_some(CommonRoot {
        root: r1,
        first_exponent: e1,
        second_exponent: e2,
    })
}

#[inline]
fn push_reducing(out: &mut Vec<Letter>, l: Letter) {
    if out.last() == Some(&l.inverse()) {
        out.pop();
    } else {
        out.push(l);
    }
}

pub(crate) fn is_freely_reduced(letters: &[Letter]) -> bool {
    letters.windows(2).all(|w| w[0] != w[1].inverse())
}

/// Border (failure) array: `border[i]` is the length of the longest proper
/// border of `s[..=i]`.
pub fn border_array<T: PartialEq>(s: &[T]) -> Vec<usize> {
    let mut border = vec![0; s.len()];
    let mut k = 0;
    for i in 1..s.len() {
        while k > 0 && s[i] != s[k] {
            k = border[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        border[i] = k;
    }
    border
}

/// Smallest `p` dividing `s.len()` with `s` equal to its length-`p` prefix
/// repeated. Returns `s.len()` for primitive strings (and 0 for empty).
pub fn smallest_dividing_period<T: PartialEq>(s: &[T]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let p = n - border_array(s)[n - 1];
    if n % p == 0 {
        p
    } else {
        n
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> ReducedWord {
        parse(s).unwrap()
    }

    #[test]
    fn parse_reduces() {
        assert_eq!(w("abBc").to_text(), "ac");
        assert!(w("").is_identity());
        assert!(w("aA").is_identity());
        assert!(w("abcCBA").is_identity());
    }

    #[test]
    fn parse_rejects_with_position() {
        assert_eq!(
            parse("abxc"),
            Err(Error::Parse {
                position: 2,
                found: 'x'
            })
        );
        assert!(matches!(parse("a b"), Err(Error::Parse { position: 1, .. })));
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(w("ab").multiply(&w("Ba")).to_text(), "aa");
        assert_eq!(w("ab").multiply(&w("c")).to_text(), "abc");
        let x = w("abCCa");
        assert!(x.multiply(&x.inverse()).is_identity());
    }

    #[test]
    fn invert_and_power() {
        assert_eq!(w("abC").inverse().to_text(), "cBA");
        assert_eq!(w("ab").power(3).to_text(), "ababab");
        assert_eq!(w("baB").power(2).to_text(), "baaB");
        assert_eq!(w("ab").power(-2).to_text(), "BABA");
        assert!(w("ab").power(0).is_identity());
    }

    #[test]
    fn cyclic_reduce_examples() {
        let c = w("baB").cyclic_reduce();
        assert_eq!((c.core.to_text(), c.conjugator.to_text()), ("a".into(), "b".into()));
        let c = w("abc").cyclic_reduce();
        assert_eq!((c.core.to_text(), c.conjugator.to_text()), ("abc".into(), "".into()));
        let c = w("baaB").cyclic_reduce();
        assert_eq!((c.core.to_text(), c.conjugator.to_text()), ("aa".into(), "b".into()));
        let c = w("").cyclic_reduce();
        assert!(c.core.is_empty() && c.conjugator.is_empty());
        assert_eq!(w("abA").cyclic_reduce().original(), w("abA"));
    }

    #[test]
    fn primitive_root_examples() {
        assert_eq!(w("abab").primitive_root().unwrap(), (w("ab"), 2));
        assert_eq!(w("aba").primitive_root().unwrap(), (w("aba"), 1));
        assert_eq!(w("baaB").primitive_root().unwrap(), (w("baB"), 2));
        assert_eq!(w("").primitive_root(), Err(Error::IdentityHasNoRoot));
        assert_eq!(w("AAA").primitive_root().unwrap(), (w("A"), 3));
    }

    #[test]
    fn common_root_examples() {
        let r = common_root(&w("abab"), &w("ababab")).unwrap();
        assert_eq!((r.root, r.first_exponent, r.second_exponent), (w("ab"), 2, 3));
        assert!(common_root(&w("ab"), &w("ba")).is_none());
        let r = common_root(&w("a"), &w("a")).unwrap();
        assert_eq!((r.root, r.first_exponent, r.second_exponent), (w("a"), 1, 1));
        assert!(common_root(&w("aba"), &w("a")).is_none());
    }

    #[test]
    fn period_of_strings() {
        assert_eq!(smallest_dividing_period(b"abcabc"), 3);
        assert_eq!(smallest_dividing_period(b"abcab"), 5);
        assert_eq!(smallest_dividing_period(b"aaaa"), 1);
        assert_eq!(smallest_dividing_period(b""), 0);
    }
}
