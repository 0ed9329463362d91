//! Relations, presentations and the syntactic conditions read off them.

use std::collections::HashMap;

use crate::error::PresentationError;
use crate::word::{Alphabet, Letter, PositiveWord};

/// Which stored side plays the role of `s v'` in a complement lookup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    LhsFirst,
    RhsFirst,
}

impl Orientation {
    pub fn tag(self) -> &'static str {
        match self {
            Orientation::LhsFirst => "lr",
            Orientation::RhsFirst => "rl",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        match tag {
            "lr" => Some(Orientation::LhsFirst),
            "rl" => Some(Orientation::RhsFirst),
            _ => None,
        }
    }
}

/// A relation `lhs = rhs`, stored with the smaller side first.
///
/// Equality ignores the id and the orientation in which it was written.
#[derive(Debug, Clone, Eq)]
pub struct Relation {
    pub id: usize,
    lhs: PositiveWord,
    rhs: PositiveWord,
}

impl PartialEq for Relation {
    fn eq(&self, other: &Self) -> bool {
        self.lhs == other.lhs && self.rhs == other.rhs
    }
}

impl Relation {
    pub fn new(id: usize, a: PositiveWord, b: PositiveWord) -> Result<Self, PresentationError> {
        if a.is_empty() || b.is_empty() {
            return Err(PresentationError::EmptySide);
        }
        if a == b {
            return Err(PresentationError::TrivialRelation);
        }
        let (lhs, rhs) = if a <= b { (a, b) } else { (b, a) };
        Ok(Relation { id, lhs, rhs })
    }

    pub fn lhs(&self) -> &PositiveWord {
        &self.lhs
    }

    pub fn rhs(&self) -> &PositiveWord {
        &self.rhs
    }

    /// Sides in the given orientation: `(first, second)`.
    pub fn sides(&self, o: Orientation) -> (&PositiveWord, &PositiveWord) {
        match o {
            Orientation::LhsFirst => (&self.lhs, &self.rhs),
            Orientation::RhsFirst => (&self.rhs, &self.lhs),
        }
    }

    pub fn same_as(&self, a: &PositiveWord, b: &PositiveWord) -> bool {
        (&self.lhs == a && &self.rhs == b) || (&self.lhs == b && &self.rhs == a)
    }
}

/// One way of closing a reversing cell.
///
/// For the right index, the relation reads `s·num = t·den`; for the left
/// index it reads `num·s = den·t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Complement {
    pub rel_id: usize,
    pub orientation: Orientation,
    pub num: PositiveWord,
    pub den: PositiveWord,
}

/// Result of [`Presentation::syntactic_flags`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SyntacticFlags {
    pub satisfies_cr: bool,
    pub satisfies_cl: bool,
    pub satisfies_c: bool,
    pub satisfies_ur: bool,
    pub is_r_complemented: bool,
    pub uniform_length: bool,
}

#[derive(Debug, Clone)]
pub struct Presentation {
    alphabet: Alphabet,
    relations: Vec<Relation>,
    right: HashMap<(Letter, Letter), Vec<Complement>>,
    left: HashMap<(Letter, Letter), Vec<Complement>>,
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet && self.relations == other.relations
    }
}

impl Eq for Presentation {}

impl Presentation {
    /// Builds a presentation; ids follow input order after dropping duplicates.
    pub fn new(
        alphabet: Alphabet,
        pairs: Vec<(PositiveWord, PositiveWord)>,
    ) -> Result<Self, PresentationError> {
        let mut relations: Vec<Relation> = Vec::with_capacity(pairs.len());
        for (a, b) in pairs {
            if a.iter().chain(b.iter()).any(|l| !alphabet.contains(*l)) {
                return Err(PresentationError::ForeignLetter);
            }
            let rel = Relation::new(relations.len(), a, b)?;
            if !relations.contains(&rel) {
                relations.push(rel);
            }
        }
        Ok(Self::from_relations(alphabet, relations))
    }

    pub fn free(alphabet: Alphabet) -> Self {
        Self::from_relations(alphabet, Vec::new())
    }

    fn from_relations(alphabet: Alphabet, relations: Vec<Relation>) -> Self {
        let mut right: HashMap<(Letter, Letter), Vec<Complement>> = HashMap::new();
        let mut left: HashMap<(Letter, Letter), Vec<Complement>> = HashMap::new();
        for rel in &relations {
            for o in [Orientation::LhsFirst, Orientation::RhsFirst] {
                let (x, y) = rel.sides(o);
                let xs = x.as_slice();
                let ys = y.as_slice();
                right.entry((xs[0], ys[0])).or_default().push(Complement {
                    rel_id: rel.id,
                    orientation: o,
                    num: PositiveWord(xs[1..].to_vec()),
                    den: PositiveWord(ys[1..].to_vec()),
                });
                left.entry((xs[xs.len() - 1], ys[ys.len() - 1])).or_default().push(Complement {
                    rel_id: rel.id,
                    orientation: o,
                    num: PositiveWord(xs[..xs.len() - 1].to_vec()),
                    den: PositiveWord(ys[..ys.len() - 1].to_vec()),
                });
            }
        }
        Presentation { alphabet, relations, right, left }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn relation(&self, id: usize) -> Option<&Relation> {
        self.relations.get(id)
    }

    pub fn contains_relation(&self, a: &PositiveWord, b: &PositiveWord) -> bool {
        self.relations.iter().any(|r| r.same_as(a, b))
    }

    /// Cells `s·v' = t·u'` usable to reverse `s^-1 t`, ordered by id then orientation.
    pub fn right_complements(&self, s: Letter, t: Letter) -> &[Complement] {
        self.right.get(&(s, t)).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Cells `v'·s = u'·t` usable to reverse `s t^-1`.
    pub fn left_complements(&self, s: Letter, t: Letter) -> &[Complement] {
        self.left.get(&(s, t)).map(Vec::as_slice).unwrap_or(&[])
    }

    /// All `(v', u', rel_id)` with a relation reading `s v' = t u'`.
    pub fn relations_for_pair(&self, s: Letter, t: Letter) -> Vec<(PositiveWord, PositiveWord, usize)> {
        self.right_complements(s, t)
            .iter()
            .map(|c| (c.num.clone(), c.den.clone(), c.rel_id))
            .collect()
    }

    /// A copy with one more relation; unchanged if it is already present.
    pub fn with_relation(&self, a: PositiveWord, b: PositiveWord) -> Result<Self, PresentationError> {
        if a.iter().chain(b.iter()).any(|l| !self.alphabet.contains(*l)) {
            return Err(PresentationError::ForeignLetter);
        }
        let rel = Relation::new(self.relations.len(), a, b)?;
        if self.relations.contains(&rel) {
            return Ok(self.clone());
        }
        let mut relations = self.relations.clone();
        relations.push(rel);
        Ok(Self::from_relations(self.alphabet.clone(), relations))
    }

    /// Same alphabet, every relation side written backwards. Left reversing
    /// over `self` is right reversing over the mirror, read backwards.
    pub fn mirror(&self) -> Self {
        let relations = self
            .relations
            .iter()
            .map(|r| {
                Relation::new(r.id, r.lhs.reversed(), r.rhs.reversed())
                    .expect("mirror of a valid relation is valid")
            })
            .collect();
        Self::from_relations(self.alphabet.clone(), relations)
    }

    pub fn syntactic_flags(&self) -> SyntacticFlags {
        let first_clash = self.relations.iter().any(|r| r.lhs.0[0] == r.rhs.0[0]);
        let last_clash = self
            .relations
            .iter()
            .any(|r| r.lhs.0.last() == r.rhs.0.last());
        let mut per_pair: HashMap<(Letter, Letter), usize> = HashMap::new();
        for r in &self.relations {
            let (x, y) = (r.lhs.0[0], r.rhs.0[0]);
            let key = if x <= y { (x, y) } else { (y, x) };
            *per_pair.entry(key).or_default() += 1;
        }
        let satisfies_ur = !first_clash && per_pair.values().all(|&n| n <= 1);
        SyntacticFlags {
            satisfies_cr: !first_clash,
            satisfies_cl: !last_clash,
            satisfies_c: !first_clash && !last_clash,
            satisfies_ur,
            is_r_complemented: satisfies_ur,
            uniform_length: self.relations.iter().all(|r| r.lhs.len() == r.rhs.len()),
        }
    }

    pub fn max_relation_len(&self) -> usize {
        self.relations
            .iter()
            .map(|r| r.lhs.len().max(r.rhs.len()))
            .max()
            .unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(letters: &[&str], rels: &[(&str, &str)]) -> Presentation {
        let a = Alphabet::new(letters.iter().copied()).unwrap();
        let pairs = rels
            .iter()
            .map(|(x, y)| (a.parse_positive(x).unwrap(), a.parse_positive(y).unwrap()))
            .collect();
        Presentation::new(a, pairs).unwrap()
    }

    #[test]
    fn canonical_orientation_and_dedup() {
        let p = pres(&["a", "b"], &[("b b", "a a"), ("a a", "b b"), ("b a", "a b")]);
        assert_eq!(p.relations().len(), 2);
        let al = p.alphabet();
        assert_eq!(al.display_positive(p.relations()[0].lhs()).to_string(), "a a");
        assert_eq!(p.relations()[1].id, 1);
    }

    #[test]
    fn aabb_pairs() {
        let p = pres(&["a", "b"], &[("a a", "b b"), ("a b", "b a")]);
        let a = p.alphabet().lookup("a").unwrap();
        let b = p.alphabet().lookup("b").unwrap();
        let got = p.relations_for_pair(a, b);
        assert_eq!(got.len(), 2);
        assert_eq!((got[0].0.clone(), got[0].1.clone(), got[0].2), (PositiveWord(vec![a]), PositiveWord(vec![b]), 0));
        assert_eq!((got[1].0.clone(), got[1].1.clone(), got[1].2), (PositiveWord(vec![b]), PositiveWord(vec![a]), 1));
        assert!(p.relations_for_pair(a, a).is_empty());
    }

    #[test]
    fn flags() {
        let b3 = pres(&["a", "b"], &[("a b a", "b a b")]);
        let f = b3.syntactic_flags();
        assert!(f.satisfies_cr && f.satisfies_c && f.satisfies_ur && f.is_r_complemented && f.uniform_length);
        let lee = pres(&["a", "b", "c"], &[("a b", "a c")]);
        assert!(!lee.syntactic_flags().satisfies_cr);
    }

    #[test]
    fn rejects_trivial_and_empty() {
        let a = Alphabet::new(["a"]).unwrap();
        let w = a.parse_positive("a").unwrap();
        assert_eq!(
            Presentation::new(a.clone(), vec![(w.clone(), w.clone())]).unwrap_err(),
            PresentationError::TrivialRelation
        );
        assert_eq!(
            Presentation::new(a, vec![(w, PositiveWord::empty())]).unwrap_err(),
            PresentationError::EmptySide
        );
    }
}
