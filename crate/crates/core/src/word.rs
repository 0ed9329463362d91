//! Letters, positive words and signed words.
//!
//! Letters are small integer handles into an [`Alphabet`]; the alphabet is
//! kept sorted by name so that comparing handles agrees with comparing names.

use std::collections::HashMap;
use std::fmt;

use crate::error::WordError;

/// Handle to a letter of an [`Alphabet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub(crate) u32);

impl Letter {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_index(index: usize) -> Self {
        Letter(index as u32)
    }
}

/// Reserved token for the empty word.
pub const EMPTY_TOKEN: &str = "1";

/// Returns true if `name` may be used as a letter token.
pub fn is_valid_letter_name(name: &str) -> bool {
    !name.is_empty()
        && name != EMPTY_TOKEN
        && name
            .chars()
            .all(|c| !c.is_whitespace() && !c.is_control() && !matches!(c, '^' | '=' | ';' | '#'))
}

/// A finite set of named letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    index: HashMap<String, Letter>,
}

impl Alphabet {
    /// Builds an alphabet from names. Names are sorted; duplicates are rejected.
    pub fn new<I, S>(names: I) -> Result<Self, WordError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut names: Vec<String> = names.into_iter().map(Into::into).collect();
        for n in &names {
            if !is_valid_letter_name(n) {
                return Err(WordError::InvalidLetter(n.clone()));
            }
        }
        names.sort();
        for pair in names.windows(2) {
            if pair[0] == pair[1] {
                return Err(WordError::DuplicateLetter(pair[0].clone()));
            }
        }
        let index = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), Letter::from_index(i)))
            .collect();
        Ok(Alphabet { names, index })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.names.len()).map(Letter::from_index)
    }

    pub fn name(&self, letter: Letter) -> &str {
        &self.names[letter.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn lookup(&self, name: &str) -> Option<Letter> {
        self.index.get(name).copied()
    }

    pub fn contains(&self, letter: Letter) -> bool {
        letter.index() < self.names.len()
    }

    /// Parses a whitespace-separated positive word; `1` or blank is the empty word.
    pub fn parse_positive(&self, text: &str) -> Result<PositiveWord, WordError> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            if tok == EMPTY_TOKEN {
                continue;
            }
            let l = self
                .lookup(tok)
                .ok_or_else(|| WordError::UnknownLetter(tok.to_string()))?;
            letters.push(l);
        }
        Ok(PositiveWord(letters))
    }

    /// Parses a signed word made of `tok` and `tok^-1` tokens.
    pub fn parse_signed(&self, text: &str) -> Result<SignedWord, WordError> {
        let mut items = Vec::new();
        for tok in text.split_whitespace() {
            if tok == EMPTY_TOKEN {
                continue;
            }
            let (name, positive) = match tok.strip_suffix("^-1") {
                Some(base) => (base, false),
                None => (tok, true),
            };
            let l = self
                .lookup(name)
                .ok_or_else(|| WordError::UnknownLetter(name.to_string()))?;
            items.push(SignedLetter { letter: l, positive });
        }
        Ok(SignedWord(items))
    }

    pub fn display_positive<'a>(&'a self, w: &'a PositiveWord) -> impl fmt::Display + 'a {
        DisplayWith(move |f: &mut fmt::Formatter<'_>| {
            if w.is_empty() {
                return f.write_str(EMPTY_TOKEN);
            }
            for (i, l) in w.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                f.write_str(self.name(*l))?;
            }
            Ok(())
        })
    }

    pub fn display_signed<'a>(&'a self, w: &'a SignedWord) -> impl fmt::Display + 'a {
        DisplayWith(move |f: &mut fmt::Formatter<'_>| {
            if w.is_empty() {
                return f.write_str(EMPTY_TOKEN);
            }
            for (i, x) in w.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                f.write_str(self.name(x.letter))?;
                if !x.positive {
                    f.write_str("^-1")?;
                }
            }
            Ok(())
        })
    }
}

struct DisplayWith<F>(F);

impl<F> fmt::Display for DisplayWith<F>
where
    F: Fn(&mut fmt::Formatter<'_>) -> fmt::Result,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        (self.0)(f)
    }
}

/// A word over the alphabet, possibly empty.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PositiveWord(pub Vec<Letter>);

impl PositiveWord {
    pub fn empty() -> Self {
        PositiveWord(Vec::new())
    }

    pub fn letter(l: Letter) -> Self {
        PositiveWord(vec![l])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Letter> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, other: &PositiveWord) -> PositiveWord {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        PositiveWord(v)
    }

    /// Letters in reverse order.
    pub fn reversed(&self) -> PositiveWord {
        PositiveWord(self.0.iter().rev().copied().collect())
    }

    pub fn to_signed(&self) -> SignedWord {
        SignedWord(self.0.iter().map(|&l| SignedLetter::pos(l)).collect())
    }

    /// The signed word `self^-1`.
    pub fn to_inverse(&self) -> SignedWord {
        SignedWord(self.0.iter().rev().map(|&l| SignedLetter::neg(l)).collect())
    }
}

impl From<Vec<Letter>> for PositiveWord {
    fn from(v: Vec<Letter>) -> Self {
        PositiveWord(v)
    }
}

impl<'a> IntoIterator for &'a PositiveWord {
    type Item = &'a Letter;
    type IntoIter = std::slice::Iter<'a, Letter>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// A letter or the inverse of a letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedLetter {
    pub letter: Letter,
    pub positive: bool,
}

impl SignedLetter {
    pub fn pos(letter: Letter) -> Self {
        SignedLetter { letter, positive: true }
    }

    pub fn neg(letter: Letter) -> Self {
        SignedLetter { letter, positive: false }
    }

    pub fn inverse(self) -> Self {
        SignedLetter { letter: self.letter, positive: !self.positive }
    }
}

/// A word over letters and their formal inverses.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SignedWord(pub Vec<SignedLetter>);

impl SignedWord {
    pub fn empty() -> Self {
        SignedWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, SignedLetter> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[SignedLetter] {
        &self.0
    }

    /// Reverses the order and flips every sign.
    pub fn inverse(&self) -> SignedWord {
        SignedWord(self.0.iter().rev().map(|x| x.inverse()).collect())
    }

    /// Reverses the order, keeping signs. Maps left reversing over a
    /// presentation onto right reversing over its mirror image.
    pub fn mirror(&self) -> SignedWord {
        SignedWord(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &SignedWord) -> SignedWord {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        SignedWord(v)
    }

    pub fn positive_count(&self) -> usize {
        self.0.iter().filter(|x| x.positive).count()
    }

    pub fn negative_count(&self) -> usize {
        self.0.len() - self.positive_count()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|x| x.positive)
    }

    /// `u^-1 v`
    pub fn left_fraction(u: &PositiveWord, v: &PositiveWord) -> SignedWord {
        u.to_inverse().concat(&v.to_signed())
    }

    /// `v u^-1`
    pub fn right_fraction(v: &PositiveWord, u: &PositiveWord) -> SignedWord {
        v.to_signed().concat(&u.to_inverse())
    }

    /// Splits a word of shape `v u^-1` into `(v, u)`.
    pub fn as_right_fraction(&self) -> Option<(PositiveWord, PositiveWord)> {
        let split = self.0.iter().position(|x| !x.positive).unwrap_or(self.0.len());
        if self.0[split..].iter().any(|x| x.positive) {
            return None;
        }
        let v = self.0[..split].iter().map(|x| x.letter).collect();
        let u = self.0[split..].iter().rev().map(|x| x.letter).collect();
        Some((PositiveWord(v), PositiveWord(u)))
    }

    /// Splits a word of shape `u^-1 v` into `(u, v)`.
    pub fn as_left_fraction(&self) -> Option<(PositiveWord, PositiveWord)> {
        let split = self.0.iter().position(|x| x.positive).unwrap_or(self.0.len());
        if self.0[split..].iter().any(|x| !x.positive) {
            return None;
        }
        let u = self.0[..split].iter().rev().map(|x| x.letter).collect();
        let v = self.0[split..].iter().map(|x| x.letter).collect();
        Some((PositiveWord(u), PositiveWord(v)))
    }
}

impl From<Vec<SignedLetter>> for SignedWord {
    fn from(v: Vec<SignedLetter>) -> Self {
        SignedWord(v)
    }
}

impl<'a> IntoIterator for &'a SignedWord {
    type Item = &'a SignedLetter;
    type IntoIter = std::slice::Iter<'a, SignedLetter>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::new(["b", "a"]).unwrap()
    }

    #[test]
    fn alphabet_is_sorted_by_name() {
        let a = ab();
        assert_eq!(a.names(), &["a".to_string(), "b".to_string()]);
        assert!(a.lookup("a").unwrap() < a.lookup("b").unwrap());
    }

    #[test]
    fn rejects_bad_letters() {
        assert!(matches!(Alphabet::new(["a", "a"]), Err(WordError::DuplicateLetter(_))));
        assert!(matches!(Alphabet::new(["a^"]), Err(WordError::InvalidLetter(_))));
        assert!(matches!(Alphabet::new(["1"]), Err(WordError::InvalidLetter(_))));
        assert!(matches!(Alphabet::new(["x=y"]), Err(WordError::InvalidLetter(_))));
    }

    #[test]
    fn inverse_examples() {
        let a = ab();
        let w = a.parse_signed("a^-1 b a b^-1").unwrap();
        let inv = w.inverse();
        assert_eq!(a.display_signed(&inv).to_string(), "b a^-1 b^-1 a");
        assert_eq!(SignedWord::empty().inverse(), SignedWord::empty());
        let single = a.parse_signed("a").unwrap();
        assert_eq!(a.display_signed(&single.inverse()).to_string(), "a^-1");
    }

    #[test]
    fn fraction_shapes() {
        let a = ab();
        let w = a.parse_signed("a b b^-1 a^-1").unwrap();
        let (v, u) = w.as_right_fraction().unwrap();
        assert_eq!(a.display_positive(&v).to_string(), "a b");
        assert_eq!(a.display_positive(&u).to_string(), "a b");
        assert!(a.parse_signed("a^-1 b").unwrap().as_right_fraction().is_none());
        let (u, v) = a.parse_signed("a^-1 b").unwrap().as_left_fraction().unwrap();
        assert_eq!((u.len(), v.len()), (1, 1));
        assert_eq!(SignedWord::left_fraction(&u, &v), a.parse_signed("a^-1 b").unwrap());
    }

    #[test]
    fn empty_token() {
        let a = ab();
        assert!(a.parse_signed("1").unwrap().is_empty());
        assert_eq!(a.display_signed(&SignedWord::empty()).to_string(), "1");
        assert!(matches!(a.parse_signed("c"), Err(WordError::UnknownLetter(_))));
    }
}
