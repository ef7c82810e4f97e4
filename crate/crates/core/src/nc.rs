//! Free associative algebras on tagged matrix generators.
//!
//! A generator is an entry `x_i^j` of a generating matrix; the tag names the
//! matrix. Words are compared degree first, then lexicographically
//! (graded lexicographic order), which fixes the pivot order of every
//! normal form in the crate.

use alloc::collections::BTreeMap;
use core::cmp::Ordering;
use core::fmt;

use smallvec::SmallVec;

use crate::field::Field;
use crate::linalg::axpy;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tag {
    /// Generating matrix of the algebra playing the role of functions.
    M,
    /// Non-modified reflection-equation generators.
    L,
    /// Modified reflection-equation generators.
    Lhat,
    /// Quantum partial derivatives.
    D,
    /// Shifted generating matrix `M = h I - ν N`.
    N,
    /// Shifted derivatives `D + h^-1 I`.
    Dhat,
    /// Basis vectors of `V` (entries carry only a row index).
    X,
}

impl Tag {
    pub fn name(self) -> &'static str {
        match self {
            Tag::M => "m",
            Tag::L => "l",
            Tag::Lhat => "lhat",
            Tag::D => "d",
            Tag::N => "n",
            Tag::Dhat => "dhat",
            Tag::X => "x",
        }
    }
}

/// The entry in row `i`, column `j` (0-based) of the matrix named by `tag`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen {
    pub tag: Tag,
    pub i: u8,
    pub j: u8,
}

impl Gen {
    pub fn new(tag: Tag, i: usize, j: usize) -> Self {
        Gen {
            tag,
            i: i as u8,
            j: j as u8,
        }
    }

    /// All `N^2` entries of a generating matrix, row by row; for `Tag::X`
    /// the `N` vector components.
    pub fn all(tag: Tag, n: usize) -> alloc::vec::Vec<Gen> {
        if tag == Tag::X {
            return (0..n).map(|i| Gen::new(tag, i, 0)).collect();
        }
        let mut v = alloc::vec::Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                v.push(Gen::new(tag, i, j));
            }
        }
        v
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tag == Tag::X {
            write!(f, "x{}", self.i + 1)
        } else {
            write!(f, "{}{}{}", self.tag.name(), self.i + 1, self.j + 1)
        }
    }
}

/// A word in the generators, ordered by length and then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub SmallVec<[Gen; 8]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn single(g: Gen) -> Self {
        let mut v = SmallVec::new();
        v.push(g);
        Word(v)
    }

    pub fn from_slice(g: &[Gen]) -> Self {
        Word(SmallVec::from_slice(g))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Gen] {
        &self.0
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Word(v)
    }

    /// Number of letters carrying the given tag.
    pub fn tag_degree(&self, tag: Tag) -> usize {
        self.0.iter().filter(|g| g.tag == tag).count()
    }
}

impl Ord for Word {
    fn cmp(&self, o: &Self) -> Ordering {
        self.0.len().cmp(&o.0.len()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite linear combination of words with nonzero coefficients.
#[derive(Clone, PartialEq)]
pub struct NcElement<F> {
    terms: BTreeMap<Word, F>,
}

impl<F: Field> Default for NcElement<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> NcElement<F> {
    pub fn zero() -> Self {
        NcElement { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::term(Word::empty(), c)
    }

    pub fn gen(g: Gen) -> Self {
        Self::term(Word::single(g), F::one())
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, F::one())
    }

    pub fn term(w: Word, c: F) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        NcElement { terms }
    }

    pub fn from_terms(terms: BTreeMap<Word, F>) -> Self {
        NcElement {
            terms: terms.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn terms(&self) -> &BTreeMap<Word, F> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Word, F> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Length of the longest word (0 for the zero element).
    pub fn degree(&self) -> usize {
        self.terms.keys().next_back().map_or(0, Word::len)
    }

    pub fn coeff(&self, w: &Word) -> F {
        self.terms.get(w).cloned().unwrap_or_else(F::zero)
    }

    /// The coefficient of the empty word.
    pub fn constant_term(&self) -> F {
        self.coeff(&Word::empty())
    }

    pub fn add_term(&mut self, w: Word, c: &F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                x.add_assign(c);
                if x.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    /// `self += c * o`.
    pub fn add_scaled(&mut self, c: &F, o: &Self) {
        axpy(&mut self.terms, c, &o.terms);
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.add_scaled(&F::one(), o);
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.add_scaled(&F::one().neg(), o);
        r
    }

    pub fn neg(&self) -> Self {
        self.scale(&F::one().neg())
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        NcElement {
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a.mul(c))).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (w1, a) in &self.terms {
            for (w2, b) in &o.terms {
                r.add_term(w1.concat(w2), &a.mul(b));
            }
        }
        r
    }

    /// Commutator `self * o - o * self`.
    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    /// Substitute every generator by an element (an algebra map from the
    /// free algebra).
    pub fn substitute(&self, f: &impl Fn(Gen) -> NcElement<F>) -> Self {
        let mut r = Self::zero();
        for (w, c) in &self.terms {
            let mut prod = Self::constant(c.clone());
            for g in w.letters() {
                prod = prod.mul(&f(*g));
            }
            r.add_scaled(&F::one(), &prod);
        }
        r
    }

    /// Apply a map to every coefficient.
    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> NcElement<G> {
        NcElement::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))).collect())
    }

    pub fn try_map_coeffs<G: Field, E>(&self, f: impl Fn(&F) -> Result<G, E>) -> Result<NcElement<G>, E> {
        let mut t = BTreeMap::new();
        for (w, c) in &self.terms {
            t.insert(w.clone(), f(c)?);
        }
        Ok(NcElement::from_terms(t))
    }
}

impl<F: Field> fmt::Display for NcElement<F> {
    /// Terms in increasing word order, e.g. `(q^2+1)/(q)*m11*m22 - m12*m21`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if w.is_empty() {
                write!(f, "({c})")?;
            } else if c.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "({c})*{w}")?;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for NcElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rat;

    fn g(i: usize, j: usize) -> Gen {
        Gen::new(Tag::M, i, j)
    }

    #[test]
    fn graded_lex_order() {
        let a = Word::from_slice(&[g(1, 1)]);
        let b = Word::from_slice(&[g(0, 0), g(0, 0)]);
        let c = Word::from_slice(&[g(0, 0), g(0, 1)]);
        assert!(a < b && b < c);
        assert!(Word::empty() < a);
    }

    #[test]
    fn arithmetic_drops_zeros() {
        let x = NcElement::<Rat>::gen(g(0, 1));
        let y = NcElement::<Rat>::gen(g(1, 0));
        assert!(x.sub(&x).is_zero());
        let c = x.commutator(&y);
        assert_eq!(c.len(), 2);
        assert_eq!(c.degree(), 2);
        assert_eq!(alloc::format!("{c}"), "m12*m21 + (-1)*m21*m12");
    }
}
