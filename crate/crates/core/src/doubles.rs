//! Quantum doubles as rewriting systems.
//!
//! A double pairs an algebra `A` (vector fields or derivatives) with an
//! algebra `B` (functions). A mixed word is normal ordered when every
//! `B`-letter stands to the left of every `A`-letter. The permutation rule σ
//! rewrites an adjacent pair `a·b` into the span of `b'·a'`, `b'`, `a'` and
//! `1`; it is read off componentwise from a matrix relation once, at
//! construction. Equality in the double is equality of bi-normal forms: the
//! `B`-part reduced modulo the ideal of `B`, then the `A`-part modulo the
//! ideal of `A`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::braiding::Braiding;
use crate::error::Error;
use crate::field::Field;
use crate::linalg::{solve, Echelon, Vector};
use crate::nc::{Gen, NcElement, Tag, Word};
use crate::ncmatrix::NcMatrix;
use crate::operator::{digits, TensorOperator};
use crate::presentation::{Presentation, Reducer};

/// The doubles built from a Hecke symmetry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DoubleKind {
    /// Modified RE algebra acting by left vector fields:
    /// `R L̂_1 R M_1 = M_1 R L̂_1 R^-1 + R M_1`, `ε(L̂) = 0`.
    LeftMod,
    /// The same double in the generators `L = I - ν L̂`:
    /// `R L_1 R M_1 = M_1 R L_1 R^-1`, `ε(L) = I`.
    Left,
    /// Adjoint vector fields:
    /// `R L̂_1 R M_1 - M_1 R L̂_1 R = R M_1 - M_1 R`, `ε(L̂) = 0`.
    AdjMod,
    /// `R L_1 R M_1 = M_1 R L_1 R`, `ε(L) = I`.
    Adj,
    /// Quantum partial derivatives:
    /// `D_1 R M_1 R = R M_1 R^-1 D_1 + R`, `ε(D) = 0`, with `D` subject to
    /// the reflection equation for `R^-1`.
    Qpd,
    /// The RE algebra acting on the free tensor algebra of `V`:
    /// `R L_1 R x_1 = x_1 L_2`, `ε(L) = I`.
    Vec,
}

impl DoubleKind {
    pub const ALL: [DoubleKind; 6] = [
        DoubleKind::LeftMod,
        DoubleKind::Left,
        DoubleKind::AdjMod,
        DoubleKind::Adj,
        DoubleKind::Qpd,
        DoubleKind::Vec,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DoubleKind::LeftMod => "left-mod",
            DoubleKind::Left => "left",
            DoubleKind::AdjMod => "adj-mod",
            DoubleKind::Adj => "adj",
            DoubleKind::Qpd => "qpd",
            DoubleKind::Vec => "vec",
        }
    }

    pub fn a_tag(self) -> Tag {
        match self {
            DoubleKind::LeftMod | DoubleKind::AdjMod => Tag::Lhat,
            DoubleKind::Left | DoubleKind::Adj | DoubleKind::Vec => Tag::L,
            DoubleKind::Qpd => Tag::D,
        }
    }

    pub fn b_tag(self) -> Tag {
        match self {
            DoubleKind::Vec => Tag::X,
            _ => Tag::M,
        }
    }
}

/// `LHS - RHS` of the defining permutation relation of `kind`, with the
/// one-slot matrices `a` and `b` in place of the generating matrices.
///
/// Substituting other matrices (for instance `I - ν L̂` for `L`, or `M D`
/// for `L̂`) turns the relation into a consistency check.
pub fn permutation_relation<F: Field>(
    kind: DoubleKind,
    a: &NcMatrix<F>,
    b: &NcMatrix<F>,
    r: &Braiding<F>,
) -> NcMatrix<F> {
    let rm = r.matrix();
    let ri = r.inverse();
    let a1 = a.embed(0, 2);
    if kind == DoubleKind::Vec {
        let x1 = b.extend_identity(1);
        let lhs = a1.left_mul_op(rm).right_mul_op(rm).mul(&x1);
        return lhs.sub(&x1.mul(a));
    }
    let b1 = b.embed(0, 2);
    let ra_r = a1.left_mul_op(rm).right_mul_op(rm);
    match kind {
        DoubleKind::LeftMod => {
            let rhs = b1.right_mul_op(rm).mul(&a1).right_mul_op(ri).add(&b1.left_mul_op(rm));
            ra_r.mul(&b1).sub(&rhs)
        }
        DoubleKind::Left => ra_r.mul(&b1).sub(&b1.right_mul_op(rm).mul(&a1).right_mul_op(ri)),
        DoubleKind::AdjMod => {
            let lhs = ra_r.mul(&b1).sub(&b1.mul(&ra_r));
            lhs.sub(&b1.left_mul_op(rm).sub(&b1.right_mul_op(rm)))
        }
        DoubleKind::Adj => ra_r.mul(&b1).sub(&b1.mul(&ra_r)),
        DoubleKind::Qpd => {
            let lhs = a1.right_mul_op(rm).mul(&b1).right_mul_op(rm);
            let rhs = b1.left_mul_op(rm).right_mul_op(ri).mul(&a1);
            lhs.sub(&rhs).sub(&NcMatrix::from_operator(rm))
        }
        DoubleKind::Vec => unreachable!(),
    }
}

/// The rewriting table σ on pairs (A-generator, B-generator).
#[derive(Clone, Debug, PartialEq)]
pub struct PermutationRule<F: Field> {
    a_tag: Tag,
    b_tag: Tag,
    table: BTreeMap<(Gen, Gen), NcElement<F>>,
}

impl<F: Field> PermutationRule<F> {
    /// Solve the entries of a matrix relation, linear in the words `a·b`,
    /// for every such word. Words with an `A`-letter before a `B`-letter
    /// are the unknowns; all other words are known.
    pub fn extract(
        a_tag: Tag,
        b_tag: Tag,
        a_gens: &[Gen],
        b_gens: &[Gen],
        relation: &NcMatrix<F>,
    ) -> Result<Self, Error> {
        let is_unknown = |w: &Word| {
            let l = w.letters();
            l.windows(2).any(|p| p[0].tag == a_tag && p[1].tag == b_tag)
        };
        let mut e: Echelon<(bool, Word), F> = Echelon::new();
        for (_, entry) in relation.entries() {
            let v: Vector<(bool, Word), F> = entry
                .terms()
                .iter()
                .map(|(w, c)| ((is_unknown(w), w.clone()), c.clone()))
                .collect();
            e.insert(v);
        }
        e.back_substitute();
        let mut table = BTreeMap::new();
        for &a in a_gens {
            for &b in b_gens {
                let key = (true, Word::from_slice(&[a, b]));
                let row = e
                    .row(&key)
                    .ok_or_else(|| Error::InconsistentSystem(format!("the relation does not determine {a}*{b}")))?;
                let mut image = NcElement::zero();
                for ((unknown, w), c) in row {
                    if (*unknown, w) == (key.0, &key.1) {
                        continue;
                    }
                    if *unknown {
                        return Err(Error::InconsistentSystem(format!(
                            "{a}*{b} is tied to the unknown word {w}"
                        )));
                    }
                    image.add_term(w.clone(), &c.neg());
                }
                table.insert((a, b), image);
            }
        }
        if let Some((_, w)) = e.pivots().find(|(unknown, w)| !*unknown || w.len() != 2) {
            return Err(Error::InconsistentSystem(format!(
                "the relation constrains the word {w} beyond σ"
            )));
        }
        Ok(PermutationRule { a_tag, b_tag, table })
    }

    pub fn a_tag(&self) -> Tag {
        self.a_tag
    }

    pub fn b_tag(&self) -> Tag {
        self.b_tag
    }

    /// `σ(a ⊗ b)` as an element of `span{b'a', b', a', 1}`.
    pub fn image(&self, a: Gen, b: Gen) -> &NcElement<F> {
        &self.table[&(a, b)]
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(Gen, Gen), &NcElement<F>)> {
        self.table.iter()
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    /// Every image is a combination of `b'a'`, `b'`, `a'` and `1`.
    pub fn is_well_shaped(&self) -> bool {
        self.table.values().all(|img| {
            img.terms().keys().all(|w| match w.letters() {
                [] => true,
                [g] => g.tag == self.a_tag || g.tag == self.b_tag,
                [b, a] => b.tag == self.b_tag && a.tag == self.a_tag,
                _ => false,
            })
        })
    }

    /// Apply a coefficient map to every image.
    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> PermutationRule<G> {
        PermutationRule {
            a_tag: self.a_tag,
            b_tag: self.b_tag,
            table: self.table.iter().map(|(k, v)| (*k, v.map_coeffs(&f))).collect(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct QuantumDouble<F: Field> {
    name: String,
    a: Presentation<F>,
    b: Presentation<F>,
    sigma: PermutationRule<F>,
    counit: BTreeMap<Gen, F>,
}

/// Normal-ordered terms `(B-word, A-word) -> coefficient`.
type Split<F> = BTreeMap<(Word, Word), F>;

/// Pushed products of an `A`-word past a `B`-letter: `(B-word, A-word, coefficient)`.
type Pushed<F> = Vec<(Word, Word, F)>;

/// A matrix entry position with its residual.
pub type EntryWitness<F> = ((usize, usize), NcElement<F>);

fn add_split<F: Field>(acc: &mut Split<F>, key: (Word, Word), c: &F) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(&key) {
        Some(x) => {
            x.add_assign(c);
            if x.is_zero() {
                acc.remove(&key);
            }
        }
        None => {
            acc.insert(key, c.clone());
        }
    }
}

impl<F: Field> QuantumDouble<F> {
    pub fn new(
        name: impl Into<String>,
        a: Presentation<F>,
        b: Presentation<F>,
        sigma: PermutationRule<F>,
        counit: impl IntoIterator<Item = (Gen, F)>,
    ) -> Self {
        QuantumDouble {
            name: name.into(),
            a,
            b,
            sigma,
            counit: counit.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Build a double whose σ is extracted from a matrix relation.
    pub fn from_relation(
        name: impl Into<String>,
        a: Presentation<F>,
        b: Presentation<F>,
        relation: &NcMatrix<F>,
        counit: impl IntoIterator<Item = (Gen, F)>,
    ) -> Result<Self, Error> {
        let a_tag = a.generators()[0].tag;
        let b_tag = b.generators()[0].tag;
        let sigma = PermutationRule::extract(a_tag, b_tag, a.generators(), b.generators(), relation)?;
        Ok(Self::new(name, a, b, sigma, counit))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn a(&self) -> &Presentation<F> {
        &self.a
    }

    pub fn b(&self) -> &Presentation<F> {
        &self.b
    }

    pub fn sigma(&self) -> &PermutationRule<F> {
        &self.sigma
    }

    pub fn a_tag(&self) -> Tag {
        self.sigma.a_tag
    }

    pub fn b_tag(&self) -> Tag {
        self.sigma.b_tag
    }

    /// The same σ over another presentation of `B` (a quotient of the
    /// original one).
    pub fn with_b(&self, b: Presentation<F>) -> Self {
        QuantumDouble {
            name: format!("{}/{}", self.name, b.name()),
            a: self.a.clone(),
            b,
            sigma: self.sigma.clone(),
            counit: self.counit.clone(),
        }
    }

    pub fn counit_gen(&self, g: Gen) -> F {
        self.counit.get(&g).cloned().unwrap_or_else(F::zero)
    }

    /// `ε_A` on a word of `A`-letters.
    pub fn counit_word(&self, w: &Word) -> F {
        let mut acc = F::one();
        for g in w.letters() {
            let c = self.counit_gen(*g);
            if c.is_zero() {
                return c;
            }
            acc = acc.mul(&c);
        }
        acc
    }

    /// `ε_A` extended linearly to an element of `A`.
    pub fn counit(&self, a: &NcElement<F>) -> F {
        let mut acc = F::zero();
        for (w, c) in a.terms() {
            acc.add_mul(c, &self.counit_word(w));
        }
        acc
    }

    /// Split a normal-ordered word into its `B`-prefix and `A`-suffix.
    pub fn split(&self, w: &Word) -> Option<(Word, Word)> {
        let l = w.letters();
        let cut = l.iter().position(|g| g.tag == self.a_tag()).unwrap_or(l.len());
        if l[cut..].iter().any(|g| g.tag != self.a_tag()) {
            return None;
        }
        Some((Word::from_slice(&l[..cut]), Word::from_slice(&l[cut..])))
    }

    /// A rewriting session; it caches the normal orderings of `A`-word
    /// times `B`-letter products and should be reused across many calls.
    pub fn session(&self) -> Session<'_, F> {
        Session {
            double: self,
            memo: BTreeMap::new(),
        }
    }

    pub fn normal_order(&self, x: &NcElement<F>) -> NcElement<F> {
        self.session().normal_order(x)
    }

    /// `x ▷ b`: normal order `x·b` and apply `ε_A` to the trailing
    /// `A`-word of every term.
    pub fn act(&self, x: &NcElement<F>, b: &NcElement<F>) -> NcElement<F> {
        self.session().act(x, b)
    }

    /// Reducers for the two ideals up to the given degrees.
    pub fn reducers(&self, a_bound: usize, b_bound: usize) -> BiReducer<F> {
        BiReducer {
            a_tag: self.a_tag(),
            a: Reducer::new(&self.a, a_bound),
            b: Reducer::new(&self.b, b_bound),
        }
    }

    /// `ε_A` vanishes on every defining relation of `A`.
    pub fn check_counit(&self) -> Result<(), Error> {
        for rel in self.a.relations() {
            let v = self.counit(rel);
            if !v.is_zero() {
                return Err(Error::InvariantViolation(format!("ε({rel}) = {v}")));
            }
        }
        Ok(())
    }

    /// Rewriting `(relation of A)·b` and `a·(relation of B)` lands in the
    /// combined ideal for every generator `a`, `b`.
    pub fn check_ideal_compatibility(&self, red: &BiReducer<F>) -> Result<(), Error> {
        let mut s = self.session();
        for rel in self.a.relations() {
            for &g in self.b.generators() {
                let x = s.normal_order(&rel.mul(&NcElement::gen(g)));
                let nf = red.normal_form(&x)?;
                if !nf.is_zero() {
                    return Err(Error::InvariantViolation(format!("({rel})*{g} reduces to {nf}")));
                }
            }
        }
        for &g in self.a.generators() {
            for rel in self.b.relations() {
                let x = s.normal_order(&NcElement::gen(g).mul(rel));
                let nf = red.normal_form(&x)?;
                if !nf.is_zero() {
                    return Err(Error::InvariantViolation(format!("{g}*({rel}) reduces to {nf}")));
                }
            }
        }
        Ok(())
    }

    /// `(a1 a2) ▷ b = a1 ▷ (a2 ▷ b)` modulo the ideal of `B`.
    pub fn check_representation(
        &self,
        a1: &NcElement<F>,
        a2: &NcElement<F>,
        b: &NcElement<F>,
        red: &BiReducer<F>,
    ) -> Result<bool, Error> {
        let mut s = self.session();
        let lhs = s.act(&a1.mul(a2), b);
        let inner = s.act(a2, b);
        let rhs = s.act(a1, &inner);
        red.b().equals_mod(&lhs, &rhs)
    }
}

/// A rewriting context over one double with a cache of pushed products.
pub struct Session<'a, F: Field> {
    double: &'a QuantumDouble<F>,
    memo: BTreeMap<(Word, Gen), Pushed<F>>,
}

impl<F: Field> Session<'_, F> {
    /// Normal order `aw · b` for an `A`-word `aw` and a `B`-letter `b`. The
    /// last letter of `aw` is moved first, so every step applies σ to an
    /// adjacent pair.
    fn push(&mut self, aw: &Word, b: Gen) -> Pushed<F> {
        if aw.is_empty() {
            return alloc::vec![(Word::single(b), Word::empty(), F::one())];
        }
        if let Some(v) = self.memo.get(&(aw.clone(), b)) {
            return v.clone();
        }
        let l = aw.letters();
        let last = l[l.len() - 1];
        let prefix = Word::from_slice(&l[..l.len() - 1]);
        let image = self.double.sigma.image(last, b).clone();
        let b_tag = self.double.b_tag();
        let mut acc: Split<F> = BTreeMap::new();
        for (w, c) in image.terms() {
            let letters = w.letters();
            let (b_part, a_part) = match letters.first() {
                Some(g) if g.tag == b_tag => (Some(*g), Word::from_slice(&letters[1..])),
                _ => (None, w.clone()),
            };
            match b_part {
                Some(b2) => {
                    for (bw, a2, c2) in self.push(&prefix, b2) {
                        add_split(&mut acc, (bw, a2.concat(&a_part)), &c.mul(&c2));
                    }
                }
                None => add_split(&mut acc, (Word::empty(), prefix.concat(&a_part)), c),
            }
        }
        let out: Vec<(Word, Word, F)> = acc.into_iter().map(|((bw, a2), c)| (bw, a2, c)).collect();
        self.memo.insert((aw.clone(), b), out.clone());
        out
    }

    fn order_split(&mut self, x: &NcElement<F>) -> Split<F> {
        let a_tag = self.double.a_tag();
        let mut total: Split<F> = BTreeMap::new();
        for (w, c) in x.terms() {
            let mut state: Split<F> = BTreeMap::new();
            state.insert((Word::empty(), Word::empty()), c.clone());
            for &g in w.letters() {
                if g.tag == a_tag {
                    state = state
                        .into_iter()
                        .map(|((bw, aw), c)| ((bw, aw.concat(&Word::single(g))), c))
                        .collect();
                } else {
                    let mut next: Split<F> = BTreeMap::new();
                    for ((bw, aw), c) in state {
                        for (b2, a2, c2) in self.push(&aw, g) {
                            add_split(&mut next, (bw.concat(&b2), a2), &c.mul(&c2));
                        }
                    }
                    state = next;
                }
            }
            for (k, c) in state {
                add_split(&mut total, k, &c);
            }
        }
        total
    }

    /// Rewrite until every `B`-letter precedes every `A`-letter.
    pub fn normal_order(&mut self, x: &NcElement<F>) -> NcElement<F> {
        let mut out = NcElement::zero();
        for ((bw, aw), c) in self.order_split(x) {
            out.add_term(bw.concat(&aw), &c);
        }
        out
    }

    /// `x ▷ b` for `x` in `A` or a mixed element, and `b` in `B`.
    pub fn act(&mut self, x: &NcElement<F>, b: &NcElement<F>) -> NcElement<F> {
        let mut out = NcElement::zero();
        for ((bw, aw), c) in self.order_split(&x.mul(b)) {
            let e = self.double.counit_word(&aw);
            if !e.is_zero() {
                out.add_term(bw, &c.mul(&e));
            }
        }
        out
    }

    /// Entrywise normal ordering of a matrix.
    pub fn normal_order_matrix(&mut self, m: &NcMatrix<F>) -> NcMatrix<F> {
        let entries: Vec<_> = m.entries().map(|(p, e)| (*p, e.clone())).collect();
        NcMatrix::from_entries(
            m.n(),
            m.row_arity(),
            m.col_arity(),
            entries.into_iter().map(|(p, e)| (p, self.normal_order(&e))),
        )
    }

    /// The matrix action `(X ▷ Y)_IJ = Σ_K X_IK ▷ Y_KJ`.
    pub fn act_matrix(&mut self, x: &NcMatrix<F>, y: &NcMatrix<F>) -> NcMatrix<F> {
        assert!(
            x.n() == y.n() && x.col_arity() == y.row_arity(),
            "matrix shape mismatch"
        );
        let mut by_row: BTreeMap<usize, Vec<(usize, NcElement<F>)>> = BTreeMap::new();
        for ((r, c), e) in y.entries() {
            by_row.entry(*r).or_default().push((*c, e.clone()));
        }
        let xs: Vec<_> = x.entries().map(|(p, e)| (*p, e.clone())).collect();
        let mut out = Vec::new();
        for ((i, k), a) in xs {
            if let Some(row) = by_row.get(&k) {
                for (j, b) in row {
                    out.push(((i, *j), self.act(&a, b)));
                }
            }
        }
        NcMatrix::from_entries(x.n(), x.row_arity(), y.col_arity(), out)
    }
}

/// Degreewise reducers for both ideals of a double.
#[derive(Clone, Debug)]
pub struct BiReducer<F: Field> {
    a_tag: Tag,
    a: Reducer<F>,
    b: Reducer<F>,
}

impl<F: Field> BiReducer<F> {
    pub fn a(&self) -> &Reducer<F> {
        &self.a
    }

    pub fn b(&self) -> &Reducer<F> {
        &self.b
    }

    /// Bi-normal form of a normal-ordered element: the `B`-parts reduced
    /// for each `A`-word, then the `A`-parts for each `B`-word.
    pub fn normal_form(&self, x: &NcElement<F>) -> Result<NcElement<F>, Error> {
        let mut by_a: BTreeMap<Word, NcElement<F>> = BTreeMap::new();
        for (w, c) in x.terms() {
            let l = w.letters();
            let cut = l.iter().position(|g| g.tag == self.a_tag).unwrap_or(l.len());
            if l[cut..].iter().any(|g| g.tag != self.a_tag) {
                return Err(Error::InvariantViolation(format!("word {w} is not normal ordered")));
            }
            by_a.entry(Word::from_slice(&l[cut..]))
                .or_default()
                .add_term(Word::from_slice(&l[..cut]), c);
        }
        let mut by_b: BTreeMap<Word, NcElement<F>> = BTreeMap::new();
        for (aw, bpart) in by_a {
            for (bw, c) in self.b.normal_form(&bpart)?.terms() {
                by_b.entry(bw.clone()).or_default().add_term(aw.clone(), c);
            }
        }
        let mut out = NcElement::zero();
        for (bw, apart) in by_b {
            for (aw, c) in self.a.normal_form(&apart)?.terms() {
                out.add_term(bw.concat(aw), c);
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self, x: &NcElement<F>) -> Result<bool, Error> {
        Ok(self.normal_form(x)?.is_zero())
    }

    /// The first nonzero entry of a matrix of normal-ordered elements after
    /// reduction, if any.
    pub fn first_nonzero(&self, m: &NcMatrix<F>) -> Result<Option<EntryWitness<F>>, Error> {
        for (p, e) in m.entries() {
            let nf = self.normal_form(e)?;
            if !nf.is_zero() {
                return Ok(Some((*p, nf)));
            }
        }
        Ok(None)
    }
}

/// The A and B presentations, relation and counit of a double kind.
pub fn make_double<F: Field>(kind: DoubleKind, r: &Braiding<F>) -> Result<QuantumDouble<F>, Error> {
    let n = r.n();
    let a_tag = kind.a_tag();
    let a = match kind {
        DoubleKind::LeftMod | DoubleKind::AdjMod => Presentation::modified_re(r, a_tag, &F::one()),
        DoubleKind::Left | DoubleKind::Adj | DoubleKind::Vec => Presentation::re(r, a_tag),
        DoubleKind::Qpd => Presentation::re_inverse(r, a_tag),
    };
    let b = match kind {
        DoubleKind::Vec => Presentation::free(Tag::X, n),
        _ => Presentation::re(r, Tag::M),
    };
    let bm = if kind == DoubleKind::Vec {
        NcMatrix::vector(n)
    } else {
        NcMatrix::generating(Tag::M, n)
    };
    let relation = permutation_relation(kind, &NcMatrix::generating(a_tag, n), &bm, r);
    let counit: Vec<(Gen, F)> = match a_tag {
        Tag::L => (0..n).map(|i| (Gen::new(Tag::L, i, i), F::one())).collect(),
        _ => Vec::new(),
    };
    QuantumDouble::from_relation(kind.name(), a, b, &relation, counit)
}

/// The defining ideals of `Sym_R(V)` (images of `qI - R`) and `Λ_R(V)`
/// (images of `q^-1 I + R`) as quotients of the free tensor algebra.
pub fn vector_quotients<F: Field>(r: &Braiding<F>) -> (Presentation<F>, Presentation<F>) {
    let n = r.n();
    let q = r.q().clone();
    let id = TensorOperator::identity(n, 2);
    let sym_op = id.scale(&q).sub(r.matrix());
    let ext_op = id.scale(&q.inv().expect("q is invertible")).add(r.matrix());
    let images = |op: &TensorOperator<F>| -> Vec<NcElement<F>> {
        (0..op.dim())
            .map(|row| {
                let mut e = NcElement::zero();
                for (col, c) in op.row(row) {
                    let d = digits(n, 2, *col);
                    let w = Word::from_slice(&[Gen::new(Tag::X, d[0], 0), Gen::new(Tag::X, d[1], 0)]);
                    e.add_term(w, c);
                }
                e
            })
            .collect()
    };
    let gens = Gen::all(Tag::X, n);
    (
        Presentation::new("Sym_R(V)", gens.clone(), images(&sym_op)),
        Presentation::new("Λ_R(V)", gens, images(&ext_op)),
    )
}

/// The column `x_{i1} x_{i2} … x_{ik}` indexed by multi-indices of `V^{⊗k}`.
pub fn tensor_monomials<F: Field>(n: usize, k: usize) -> NcMatrix<F> {
    let rows = crate::operator::power(n, k);
    NcMatrix::from_entries(
        n,
        k,
        0,
        (0..rows).map(|i| {
            let w: Vec<Gen> = digits(n, k, i).into_iter().map(|d| Gen::new(Tag::X, d, 0)).collect();
            ((i, 0), NcElement::word(Word::from_slice(&w)))
        }),
    )
}

/// A solution `O` of `a ▷ Y = O · Y` (entrywise, modulo the ideal of `B`).
#[derive(Clone, Debug, PartialEq)]
pub struct ActionOperator<F: Field> {
    pub operator: TensorOperator<F>,
    /// False when the entries of `Y` are linearly dependent modulo the
    /// ideal, so that other operators satisfy the same equations.
    pub unique: bool,
}

/// Find a scalar operator `O` on the row space of `y` with
/// `a ▷ y_IJ = Σ_K O_IK y_KJ` modulo the ideal of `B`.
pub fn action_operator<F: Field>(
    double: &QuantumDouble<F>,
    a: &NcElement<F>,
    y: &NcMatrix<F>,
    red: &BiReducer<F>,
) -> Result<ActionOperator<F>, Error> {
    let n = y.n();
    let k = y.row_arity();
    let rows = y.rows();
    let cols = y.cols();
    let mut s = double.session();
    let mut basis: BTreeMap<(usize, usize), NcElement<F>> = BTreeMap::new();
    for (p, e) in y.entries() {
        basis.insert(*p, red.b().normal_form(e)?);
    }
    let mut acted: BTreeMap<(usize, usize), NcElement<F>> = BTreeMap::new();
    for (p, e) in y.entries() {
        let v = red.b().normal_form(&s.act(a, e))?;
        if !v.is_zero() {
            acted.insert(*p, v);
        }
    }
    let unknowns: Vec<usize> = (0..rows).collect();
    let mut entries = Vec::new();
    let mut unique = true;
    for i in 0..rows {
        let mut eqs: BTreeMap<(usize, Word), (Vector<usize, F>, F)> = BTreeMap::new();
        for ((kk, j), e) in &basis {
            for (w, c) in e.terms() {
                let slot = eqs
                    .entry((*j, w.clone()))
                    .or_insert_with(|| (BTreeMap::new(), F::zero()));
                slot.0.insert(*kk, c.clone());
            }
        }
        for j in 0..cols {
            if let Some(v) = acted.get(&(i, j)) {
                for (w, c) in v.terms() {
                    let slot = eqs
                        .entry((j, w.clone()))
                        .or_insert_with(|| (BTreeMap::new(), F::zero()));
                    slot.1 = c.clone();
                }
            }
        }
        let sol = solve(&unknowns, eqs.into_values()).ok_or_else(|| {
            Error::InconsistentSystem(format!("row {i} of the action on degree-{k} entries, N = {n}"))
        })?;
        unique &= sol.unique;
        entries.extend(sol.values.into_iter().map(|(kk, v)| (i, kk, v)));
    }
    Ok(ActionOperator {
        operator: TensorOperator::from_entries(n, k, entries),
        unique,
    })
}

/// Check `a ▷ y = O · y` entrywise modulo the ideal of `B`; returns the
/// first failing entry and its residual.
pub fn check_action_operator<F: Field>(
    double: &QuantumDouble<F>,
    a: &NcElement<F>,
    op: &TensorOperator<F>,
    y: &NcMatrix<F>,
    red: &BiReducer<F>,
) -> Result<Option<EntryWitness<F>>, Error> {
    let mut s = double.session();
    let expected = y.left_mul_op(op);
    for i in 0..y.rows() {
        for j in 0..y.cols() {
            let lhs = s.act(a, &y.entry(i, j));
            let diff = red.b().normal_form(&lhs.sub(&expected.entry(i, j)))?;
            if !diff.is_zero() {
                return Ok(Some(((i, j), diff)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rat;
    use crate::scalar::Scalar;

    fn g(tag: Tag, i: usize, j: usize) -> NcElement<Scalar> {
        NcElement::gen(Gen::new(tag, i, j))
    }

    #[test]
    fn left_double_at_n1_is_a_q_commutation() {
        let r = Braiding::standard_hecke(1, Scalar::q()).unwrap();
        let d = make_double(DoubleKind::Left, &r).unwrap();
        let l = Gen::new(Tag::L, 0, 0);
        let m = Gen::new(Tag::M, 0, 0);
        let expected = NcElement::term(Word::from_slice(&[m, l]), Scalar::monomial(crate::Param::Q, 1, -2));
        assert_eq!(d.sigma().image(l, m), &expected);
        assert!(d.sigma().is_well_shaped());
    }

    #[test]
    fn every_kind_extracts_at_n2() {
        let r = Braiding::standard_hecke(2, Rat::new(3, 2)).unwrap();
        for kind in DoubleKind::ALL {
            let d = make_double(kind, &r).unwrap();
            let b_gens = if kind == DoubleKind::Vec { 2 } else { 4 };
            assert_eq!(d.sigma().len(), 4 * b_gens, "{}", kind.name());
            assert!(d.sigma().is_well_shaped(), "{}", kind.name());
            d.check_counit().unwrap();
        }
    }

    #[test]
    fn pure_b_words_are_unchanged() {
        let r = Braiding::standard_hecke(2, Scalar::q()).unwrap();
        let d = make_double(DoubleKind::Qpd, &r).unwrap();
        let x = g(Tag::M, 0, 1).mul(&g(Tag::M, 1, 0));
        assert_eq!(d.normal_order(&x), x);
    }

    #[test]
    fn act_on_unit_is_counit() {
        let r = Braiding::standard_hecke(2, Scalar::q()).unwrap();
        let d = make_double(DoubleKind::Left, &r).unwrap();
        let a = g(Tag::L, 0, 0).mul(&g(Tag::L, 1, 1)).add(&g(Tag::L, 0, 1));
        assert_eq!(d.act(&a, &NcElement::one()), NcElement::one());
    }
}
