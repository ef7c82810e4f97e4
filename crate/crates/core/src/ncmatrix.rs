//! Matrices over a free algebra acting on tensor slots.
//!
//! An [`NcMatrix`] has rows indexed by `V^{⊗r}` and columns by `V^{⊗c}`
//! (flat lexicographic multi-indices), and entries in [`NcElement`]. Matrix
//! products keep the order of the entry factors, so `X · Y` has entries
//! `Σ_K X_IK Y_KJ` with `X_IK` on the left.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::braiding::Braiding;
use crate::error::Error;
use crate::field::Field;
use crate::nc::{Gen, NcElement, Tag};
use crate::operator::{digits, index, power, TensorOperator};

#[derive(Clone, Debug, PartialEq)]
pub struct NcMatrix<F: Field> {
    n: usize,
    row_arity: usize,
    col_arity: usize,
    entries: BTreeMap<(usize, usize), NcElement<F>>,
}

impl<F: Field> NcMatrix<F> {
    pub fn zero(n: usize, row_arity: usize, col_arity: usize) -> Self {
        NcMatrix {
            n,
            row_arity,
            col_arity,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_entries(
        n: usize,
        row_arity: usize,
        col_arity: usize,
        entries: impl IntoIterator<Item = ((usize, usize), NcElement<F>)>,
    ) -> Self {
        let mut m = Self::zero(n, row_arity, col_arity);
        for (pos, e) in entries {
            m.add_to(pos, &e);
        }
        m
    }

    /// The generating matrix `X = (x_i^j)` of a tag, on one slot.
    pub fn generating(tag: Tag, n: usize) -> Self {
        assert!(tag != Tag::X, "use `vector` for the tensor-algebra generators");
        let mut m = Self::zero(n, 1, 1);
        for g in Gen::all(tag, n) {
            m.entries.insert((g.i as usize, g.j as usize), NcElement::gen(g));
        }
        m
    }

    /// The column vector `x = (x_i)` with `N` rows and a single column.
    pub fn vector(n: usize) -> Self {
        let mut m = Self::zero(n, 1, 0);
        for g in Gen::all(Tag::X, n) {
            m.entries.insert((g.i as usize, 0), NcElement::gen(g));
        }
        m
    }

    /// A scalar operator viewed as a matrix with constant entries.
    pub fn from_operator(op: &TensorOperator<F>) -> Self {
        let k = op.arity();
        Self::from_entries(
            op.n(),
            k,
            k,
            op.entries().map(|(r, c, v)| ((r, c), NcElement::constant(v.clone()))),
        )
    }

    pub fn identity(n: usize, k: usize) -> Self {
        Self::from_operator(&TensorOperator::identity(n, k))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row_arity(&self) -> usize {
        self.row_arity
    }

    pub fn col_arity(&self) -> usize {
        self.col_arity
    }

    pub fn rows(&self) -> usize {
        power(self.n, self.row_arity)
    }

    pub fn cols(&self) -> usize {
        power(self.n, self.col_arity)
    }

    pub fn entry(&self, r: usize, c: usize) -> NcElement<F> {
        self.entries.get(&(r, c)).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &NcElement<F>)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest word length over all entries.
    pub fn degree(&self) -> usize {
        self.entries.values().map(NcElement::degree).max().unwrap_or(0)
    }

    fn add_to(&mut self, pos: (usize, usize), e: &NcElement<F>) {
        if e.is_zero() {
            return;
        }
        let slot = self.entries.entry(pos).or_default();
        slot.add_scaled(&F::one(), e);
        if slot.is_zero() {
            self.entries.remove(&pos);
        }
    }

    fn same_shape(&self, o: &Self) {
        assert!(
            self.n == o.n && self.row_arity == o.row_arity && self.col_arity == o.col_arity,
            "matrix shape mismatch"
        );
    }

    pub fn add(&self, o: &Self) -> Self {
        self.same_shape(o);
        let mut r = self.clone();
        for (pos, e) in &o.entries {
            r.add_to(*pos, e);
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&F::one().neg())
    }

    pub fn scale(&self, c: &F) -> Self {
        self.map_entries(|e| e.scale(c))
    }

    pub fn map_entries(&self, f: impl Fn(&NcElement<F>) -> NcElement<F>) -> Self {
        let mut r = Self::zero(self.n, self.row_arity, self.col_arity);
        for (pos, e) in &self.entries {
            let v = f(e);
            if !v.is_zero() {
                r.entries.insert(*pos, v);
            }
        }
        r
    }

    pub fn try_map_entries<E>(&self, f: impl Fn(&NcElement<F>) -> Result<NcElement<F>, E>) -> Result<Self, E> {
        let mut r = Self::zero(self.n, self.row_arity, self.col_arity);
        for (pos, e) in &self.entries {
            let v = f(e)?;
            if !v.is_zero() {
                r.entries.insert(*pos, v);
            }
        }
        Ok(r)
    }

    /// Substitute every generator by an element.
    pub fn substitute(&self, f: &impl Fn(Gen) -> NcElement<F>) -> Self {
        self.map_entries(|e| e.substitute(f))
    }

    /// `self · o` with entry products in the order `self_IK * o_KJ`.
    pub fn mul(&self, o: &Self) -> Self {
        assert!(self.n == o.n && self.col_arity == o.row_arity, "matrix shape mismatch");
        let mut by_row: BTreeMap<usize, Vec<(usize, &NcElement<F>)>> = BTreeMap::new();
        for ((r, c), e) in &o.entries {
            by_row.entry(*r).or_default().push((*c, e));
        }
        let mut out = Self::zero(self.n, self.row_arity, o.col_arity);
        for ((i, k), a) in &self.entries {
            if let Some(row) = by_row.get(k) {
                for (j, b) in row {
                    out.add_to((*i, *j), &a.mul(b));
                }
            }
        }
        out
    }

    /// `op · self` for a scalar operator.
    pub fn left_mul_op(&self, op: &TensorOperator<F>) -> Self {
        assert!(
            op.n() == self.n && op.arity() == self.row_arity,
            "matrix shape mismatch"
        );
        let mut out = Self::zero(self.n, self.row_arity, self.col_arity);
        let mut by_row: BTreeMap<usize, Vec<(usize, &NcElement<F>)>> = BTreeMap::new();
        for ((r, c), e) in &self.entries {
            by_row.entry(*r).or_default().push((*c, e));
        }
        for (i, k, a) in op.entries() {
            if let Some(row) = by_row.get(&k) {
                for (j, b) in row {
                    out.add_to((i, *j), &b.scale(a));
                }
            }
        }
        out
    }

    /// `self · op` for a scalar operator.
    pub fn right_mul_op(&self, op: &TensorOperator<F>) -> Self {
        assert!(
            op.n() == self.n && op.arity() == self.col_arity,
            "matrix shape mismatch"
        );
        let mut out = Self::zero(self.n, self.row_arity, self.col_arity);
        for ((i, k), a) in &self.entries {
            for (j, v) in op.row(*k) {
                out.add_to((*i, *j), &a.scale(v));
            }
        }
        out
    }

    /// Place a square matrix in slots `offset+1 ..= offset+arity` of
    /// `V^{⊗total}`, identity elsewhere.
    pub fn embed(&self, offset: usize, total: usize) -> Self {
        assert_eq!(self.row_arity, self.col_arity, "embedding needs a square matrix");
        let k = self.row_arity;
        assert!(offset + k <= total);
        let n = self.n;
        let left = power(n, offset);
        let right = power(n, total - offset - k);
        let inner = power(n, k);
        let mut out = Self::zero(n, total, total);
        for ((r, c), e) in &self.entries {
            for a in 0..left {
                for b in 0..right {
                    let row = (a * inner + r) * right + b;
                    let col = (a * inner + c) * right + b;
                    out.entries.insert((row, col), e.clone());
                }
            }
        }
        out
    }

    /// `self ⊗ I` on `extra` further slots appended to both rows and columns
    /// (works for rectangular matrices).
    pub fn extend_identity(&self, extra: usize) -> Self {
        let n = self.n;
        let right = power(n, extra);
        let mut out = Self::zero(n, self.row_arity + extra, self.col_arity + extra);
        for ((r, c), e) in &self.entries {
            for b in 0..right {
                out.entries.insert((r * right + b, c * right + b), e.clone());
            }
        }
        out
    }

    /// Partial weighted trace of a square matrix over slot `space` (1-based).
    pub fn rtrace(&self, space: usize, c: &[F]) -> Result<Self, Error> {
        let k = self.row_arity;
        assert_eq!(k, self.col_arity, "trace needs a square matrix");
        if space == 0 || space > k {
            return Err(Error::PositionOutOfRange {
                position: space,
                arity: k,
            });
        }
        let n = self.n;
        let s = space - 1;
        let mut out = Self::zero(n, k - 1, k - 1);
        for ((r, col), e) in &self.entries {
            let dr = digits(n, k, *r);
            let dc = digits(n, k, *col);
            if dr[s] != dc[s] {
                continue;
            }
            let mut rr = dr.clone();
            rr.remove(s);
            let mut cc = dc.clone();
            cc.remove(s);
            out.add_to((index(n, &rr), index(n, &cc)), &e.scale(&c[dr[s]]));
        }
        Ok(out)
    }

    /// Weighted trace over all slots.
    pub fn full_rtrace(&self, c: &[F]) -> NcElement<F> {
        let k = self.row_arity;
        assert_eq!(k, self.col_arity, "trace needs a square matrix");
        let mut acc = NcElement::zero();
        for ((r, col), e) in &self.entries {
            if r != col {
                continue;
            }
            let w = digits(self.n, k, *r).iter().fold(F::one(), |p, &d| p.mul(&c[d]));
            acc.add_scaled(&w, e);
        }
        acc
    }
}

/// Which conjugation builds the higher matrix copies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CopyVariant {
    /// `X_{k̄} = R_{k-1} X_{\overline{k-1}} R_{k-1}^{-1}`.
    Over,
    /// `X_{k̲} = R_{k-1}^{-1} X_{\underline{k-1}} R_{k-1}`.
    Under,
}

/// The matrix copy `X_k̄` or `X_k̲` of a square one-slot matrix on
/// `V^{⊗total}` (`1 <= k <= total`).
pub fn matrix_copy<F: Field>(
    x: &NcMatrix<F>,
    k: usize,
    total: usize,
    variant: CopyVariant,
    r: &Braiding<F>,
) -> NcMatrix<F> {
    assert!(k >= 1 && k <= total);
    let mut cur = x.embed(0, total);
    for j in 2..=k {
        let rj = r.lift(total, j - 1).expect("valid position");
        let rj_inv = r.lift_inverse(total, j - 1).expect("valid position");
        cur = match variant {
            CopyVariant::Over => cur.left_mul_op(&rj).right_mul_op(&rj_inv),
            CopyVariant::Under => cur.left_mul_op(&rj_inv).right_mul_op(&rj),
        };
    }
    cur
}

/// `X_1 X_2̄ … X_k̄` on `V^{⊗k}`.
pub fn monomial_matrix<F: Field>(x: &NcMatrix<F>, k: usize, r: &Braiding<F>) -> NcMatrix<F> {
    let mut acc = NcMatrix::identity(x.n(), k);
    for j in 1..=k {
        acc = acc.mul(&matrix_copy(x, j, k, CopyVariant::Over, r));
    }
    acc
}

/// The `p`-th matrix power of a one-slot matrix (`p >= 0`).
pub fn matrix_power<F: Field>(x: &NcMatrix<F>, p: usize) -> NcMatrix<F> {
    let mut acc = NcMatrix::identity(x.n(), 1);
    for _ in 0..p {
        acc = acc.mul(x);
    }
    acc
}
