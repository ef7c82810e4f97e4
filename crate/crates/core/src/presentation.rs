//! Finitely presented algebras and degreewise normal forms.
//!
//! Equality modulo a two-sided ideal is decided by linear algebra: the part
//! of the ideal of (filtered) degree at most `d` is spanned by the products
//! `w1 · r · w2` with `r` a defining relation and `|w1| + deg r + |w2| <= d`.
//! A [`Reducer`] row-reduces that span once; the normal form of an element is
//! its residue after eliminating all pivot words, with pivots the largest
//! word of each row in graded lexicographic order. Reducers are immutable
//! after construction and can be shared freely between threads.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::braiding::Braiding;
use crate::error::Error;
use crate::field::Field;
use crate::linalg::Echelon;
use crate::nc::{Gen, NcElement, Tag, Word};
use crate::ncmatrix::NcMatrix;
use crate::operator::TensorOperator;

#[derive(Clone, Debug)]
pub struct Presentation<F: Field> {
    name: String,
    generators: Vec<Gen>,
    relations: Vec<NcElement<F>>,
}

/// Componentwise entries of `R X_1 R X_1 - X_1 R X_1 R` for the given
/// (possibly inverse) braiding matrix.
pub fn re_relation_matrix<F: Field>(r: &TensorOperator<F>, tag: Tag, n: usize) -> NcMatrix<F> {
    let x1 = NcMatrix::generating(tag, n).embed(0, 2);
    let lhs = x1.left_mul_op(r).right_mul_op(r).mul(&x1);
    let rhs = x1.mul(&x1.left_mul_op(r).right_mul_op(r));
    lhs.sub(&rhs)
}

/// Entries of `R X_1 - X_1 R`.
pub fn linear_commutator_matrix<F: Field>(r: &TensorOperator<F>, tag: Tag, n: usize) -> NcMatrix<F> {
    let x1 = NcMatrix::generating(tag, n).embed(0, 2);
    x1.left_mul_op(r).sub(&x1.right_mul_op(r))
}

impl<F: Field> Presentation<F> {
    pub fn new(name: impl Into<String>, generators: Vec<Gen>, relations: Vec<NcElement<F>>) -> Self {
        Presentation {
            name: name.into(),
            generators,
            relations: relations.into_iter().filter(|r| !r.is_zero()).collect(),
        }
    }

    /// The free algebra on the entries of one generating matrix (or on the
    /// vector components for `Tag::X`).
    pub fn free(tag: Tag, n: usize) -> Self {
        Presentation::new(format!("T({})", tag.name()), Gen::all(tag, n), Vec::new())
    }

    /// `R X_1 R X_1 = X_1 R X_1 R`.
    pub fn re(r: &Braiding<F>, tag: Tag) -> Self {
        let n = r.n();
        let rel = re_relation_matrix(r.matrix(), tag, n);
        Presentation::new(
            format!("RE({})", tag.name()),
            Gen::all(tag, n),
            rel.entries().map(|(_, e)| e.clone()).collect(),
        )
    }

    /// The same relations with `R^-1` in place of `R`.
    pub fn re_inverse(r: &Braiding<F>, tag: Tag) -> Self {
        let n = r.n();
        let rel = re_relation_matrix(r.inverse(), tag, n);
        Presentation::new(
            format!("RE^-1({})", tag.name()),
            Gen::all(tag, n),
            rel.entries().map(|(_, e)| e.clone()).collect(),
        )
    }

    /// `R X_1 R X_1 - X_1 R X_1 R = c (R X_1 - X_1 R)`; `c = 1` gives the
    /// modified algebra, `c = h` the shifted one.
    pub fn modified_re(r: &Braiding<F>, tag: Tag, c: &F) -> Self {
        let n = r.n();
        let rel = re_relation_matrix(r.matrix(), tag, n).sub(&linear_commutator_matrix(r.matrix(), tag, n).scale(c));
        Presentation::new(
            format!("mRE({})", tag.name()),
            Gen::all(tag, n),
            rel.entries().map(|(_, e)| e.clone()).collect(),
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[Gen] {
        &self.generators
    }

    pub fn relations(&self) -> &[NcElement<F>] {
        &self.relations
    }

    /// A copy with further relations adjoined.
    pub fn with_relations(&self, name: impl Into<String>, extra: impl IntoIterator<Item = NcElement<F>>) -> Self {
        let mut relations = self.relations.clone();
        relations.extend(extra.into_iter().filter(|r| !r.is_zero()));
        Presentation {
            name: name.into(),
            generators: self.generators.clone(),
            relations,
        }
    }

    /// True when every relation is homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        self.relations.iter().all(|r| {
            let d = r.degree();
            r.terms().keys().all(|w| w.len() == d)
        })
    }

    /// An independent spanning set of the relation space.
    pub fn independent_relations(&self) -> Vec<NcElement<F>> {
        let mut e: Echelon<Word, F> = Echelon::new();
        for r in &self.relations {
            e.insert(r.terms().clone());
        }
        e.back_substitute();
        e.rows().map(|(_, row)| NcElement::from_terms(row.clone())).collect()
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> Presentation<G> {
        Presentation {
            name: self.name.clone(),
            generators: self.generators.clone(),
            relations: self.relations.iter().map(|r| r.map_coeffs(&f)).collect(),
        }
    }

    pub fn try_map_coeffs<G: Field, E>(&self, f: impl Fn(&F) -> Result<G, E>) -> Result<Presentation<G>, E> {
        let mut relations = Vec::with_capacity(self.relations.len());
        for r in &self.relations {
            relations.push(r.try_map_coeffs(&f)?);
        }
        Ok(Presentation {
            name: self.name.clone(),
            generators: self.generators.clone(),
            relations,
        })
    }
}

/// All words of length `len` in the given generators.
pub fn words_of_length(generators: &[Gen], len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * generators.len());
        for w in &out {
            for g in generators {
                next.push(w.concat(&Word::single(*g)));
            }
        }
        out = next;
    }
    out
}

#[derive(Clone, Debug)]
pub struct Reducer<F: Field> {
    bound: usize,
    generators: Vec<Gen>,
    echelon: Echelon<Word, F>,
}

impl<F: Field> Reducer<F> {
    /// Row-reduce the degree-`<= bound` part of the ideal of `p`.
    pub fn new(p: &Presentation<F>, bound: usize) -> Self {
        let gens = p.generators().to_vec();
        let mut echelon: Echelon<Word, F> = Echelon::new();
        let mut ideal = p.independent_relations();
        ideal.sort_by_key(NcElement::degree);
        let words: Vec<Vec<Word>> = (0..=bound).map(|l| words_of_length(&gens, l)).collect();
        for r in &ideal {
            let dr = r.degree();
            if dr > bound {
                continue;
            }
            for extra in 0..=bound - dr {
                for left in 0..=extra {
                    for w1 in &words[left] {
                        for w2 in &words[extra - left] {
                            let mut v = alloc::collections::BTreeMap::new();
                            for (w, c) in r.terms() {
                                v.insert(w1.concat(w).concat(w2), c.clone());
                            }
                            echelon.insert(v);
                        }
                    }
                }
            }
        }
        Reducer {
            bound,
            generators: gens,
            echelon,
        }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn generators(&self) -> &[Gen] {
        &self.generators
    }

    /// Dimension of the ideal part that was row-reduced.
    pub fn ideal_dimension(&self) -> usize {
        self.echelon.rank()
    }

    /// Number of normal words of length exactly `len` (the dimension of the
    /// degree-`len` component for homogeneous presentations).
    pub fn normal_words(&self, len: usize) -> usize {
        let total = self.generators.len().pow(len as u32);
        let pivots = self.echelon.pivots().filter(|w| w.len() == len).count();
        total - pivots
    }

    /// Number of normal words of length at most `len`. For inhomogeneous
    /// presentations this is the dimension of the filtered piece of the
    /// quotient once the bound exceeds `len` by enough to expose every
    /// cancellation of leading parts.
    pub fn filtered_dimension(&self, len: usize) -> usize {
        let total: usize = (0..=len).map(|l| self.generators.len().pow(l as u32)).sum();
        let pivots = self.echelon.pivots().filter(|w| w.len() <= len).count();
        total - pivots
    }

    /// Canonical representative of `x` modulo the ideal.
    pub fn normal_form(&self, x: &NcElement<F>) -> Result<NcElement<F>, Error> {
        let d = x.degree();
        if d > self.bound {
            return Err(Error::DegreeOverflow {
                found: d,
                bound: self.bound,
            });
        }
        Ok(NcElement::from_terms(self.echelon.reduce(x.terms().clone())))
    }

    pub fn is_zero_mod(&self, x: &NcElement<F>) -> Result<bool, Error> {
        Ok(self.normal_form(x)?.is_zero())
    }

    pub fn equals_mod(&self, a: &NcElement<F>, b: &NcElement<F>) -> Result<bool, Error> {
        self.is_zero_mod(&a.sub(b))
    }
}
