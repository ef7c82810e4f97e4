//! Matrix and determinant Capelli identities in the double of
//! `D(R^-1)` and `M(R)`.
//!
//! With `L̂ = M D` the matrix identity reads
//! `A L̂_1 (L̂_2̄ + qI) … (L̂_k̄ + q^{k-1}(k-1)_q I) A = q^{k(k-1)} A M_1 … M_k̄ D_k̄ … D_1`
//! with `A = A^(k)`. Both sides are compared after bi-normal ordering and,
//! independently, as operators on low-degree monomials of `M(R)`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::braiding::Braiding;
use crate::doubles::{BiReducer, QuantumDouble};
use crate::error::Error;
use crate::field::Field;
use crate::heckerep::skew_symmetrizer;
use crate::nc::{NcElement, Tag, Word};
use crate::ncmatrix::{matrix_copy, CopyVariant, NcMatrix};
use crate::operator::TensorOperator;
use crate::presentation::words_of_length;
use crate::scalar::qint_in;

/// `A^(N) = |u⟩⟨v|` with `⟨v|u⟩ = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct StructurePair<F> {
    pub u: Vec<F>,
    pub v: Vec<F>,
}

impl<F: Field> StructurePair<F> {
    /// `⟨v|u⟩`.
    pub fn pairing(&self) -> F {
        let mut acc = F::zero();
        for (a, b) in self.v.iter().zip(&self.u) {
            acc.add_mul(a, b);
        }
        acc
    }

    /// `⟨v| X |u⟩` for a matrix over the algebra.
    pub fn sandwich(&self, x: &NcMatrix<F>) -> NcElement<F> {
        let mut acc = NcElement::zero();
        for ((i, j), e) in x.entries() {
            let c = self.v[*i].mul(&self.u[*j]);
            if !c.is_zero() {
                acc.add_scaled(&c, e);
            }
        }
        acc
    }

    /// `(c u, v / c)`.
    pub fn regauge(&self, c: &F) -> Self {
        let ci = c.inv().expect("nonzero gauge");
        StructurePair {
            u: self.u.iter().map(|x| x.mul(c)).collect(),
            v: self.v.iter().map(|x| x.mul(&ci)).collect(),
        }
    }
}

/// Splits a rank-one operator into `|u⟩⟨v|`, with the first nonzero
/// component of `u` equal to 1.
pub fn extract_uv<F: Field>(a: &TensorOperator<F>) -> Result<StructurePair<F>, Error> {
    let rank = a.rank();
    if rank != 1 {
        return Err(Error::RankNotOne(rank));
    }
    let dim = a.dim();
    let (pivot_row, pivot_col) = (0..dim)
        .flat_map(|i| a.row(i).iter().map(move |(j, _)| (i, *j)))
        .next()
        .expect("rank one operator is nonzero");
    let pivot = a.entry(pivot_row, pivot_col);
    let u: Vec<F> = (0..dim)
        .map(|i| a.entry(i, pivot_col).div(&pivot).expect("nonzero pivot"))
        .collect();
    let v: Vec<F> = (0..dim).map(|j| a.entry(pivot_row, j)).collect();
    Ok(StructurePair { u, v })
}

/// `det_R M = ⟨v| M_1 M_2̄ … M_N̄ |u⟩`, or for the derivative matrix
/// `det_{R^-1} D = ⟨v| D_N̄ … D_2̄ D_1 |u⟩` with copies built by `variant`.
pub fn det_r<F: Field>(tag: Tag, r: &Braiding<F>, pair: &StructurePair<F>, variant: CopyVariant) -> NcElement<F> {
    let n = r.n();
    let x = NcMatrix::generating(tag, n);
    let copies: Vec<NcMatrix<F>> = (1..=n).map(|j| matrix_copy(&x, j, n, variant, r)).collect();
    let mut acc = NcMatrix::identity(n, n);
    if tag == Tag::D {
        for c in copies.iter().rev() {
            acc = acc.mul(c);
        }
    } else {
        for c in &copies {
            acc = acc.mul(c);
        }
    }
    pair.sandwich(&acc)
}

/// `L̂_1 (L̂_2̄ + qI) … (L̂_k̄ + q^{k-1}(k-1)_q I)` on `V^{⊗k}` with `L̂ = M D`.
pub fn shifted_product<F: Field>(r: &Braiding<F>, k: usize) -> NcMatrix<F> {
    let n = r.n();
    let q = r.q();
    let lhat = NcMatrix::generating(Tag::M, n).mul(&NcMatrix::generating(Tag::D, n));
    let mut acc = NcMatrix::identity(n, k);
    for i in 1..=k {
        let shift = q
            .pow(i as i32 - 1)
            .expect("integer power")
            .mul(&qint_in(i as u32 - 1, q));
        let factor = matrix_copy(&lhat, i, k, CopyVariant::Over, r).add(&NcMatrix::identity(n, k).scale(&shift));
        acc = acc.mul(&factor);
    }
    acc
}

/// The left side `A L̂_1 (L̂_2̄ + qI) … A`.
pub fn capelli_lhs<F: Field>(r: &Braiding<F>, k: usize) -> NcMatrix<F> {
    let a = skew_symmetrizer(r, k);
    shifted_product(r, k).left_mul_op(&a).right_mul_op(&a)
}

/// The right side `q^{k(k-1)} A M_1 … M_k̄ D_k̄ … D_1`, optionally closed
/// by a second `A` on the right.
pub fn capelli_rhs<F: Field>(r: &Braiding<F>, k: usize, d_copies: CopyVariant, trailing_a: bool) -> NcMatrix<F> {
    let n = r.n();
    let a = skew_symmetrizer(r, k);
    let m = NcMatrix::generating(Tag::M, n);
    let d = NcMatrix::generating(Tag::D, n);
    let mut acc = NcMatrix::identity(n, k);
    for j in 1..=k {
        acc = acc.mul(&matrix_copy(&m, j, k, CopyVariant::Over, r));
    }
    for j in (1..=k).rev() {
        acc = acc.mul(&matrix_copy(&d, j, k, d_copies, r));
    }
    let kk = (k * (k - 1)) as i32;
    let mut out = acc.left_mul_op(&a).scale(&r.q().pow(kk).expect("integer power"));
    if trailing_a {
        out = out.right_mul_op(&a);
    }
    out
}

fn first_difference<F: Field>(
    double: &QuantumDouble<F>,
    lhs: &NcMatrix<F>,
    rhs: &NcMatrix<F>,
    red: &BiReducer<F>,
) -> Result<Option<String>, Error> {
    let mut s = double.session();
    let diff = s.normal_order_matrix(&lhs.sub(rhs));
    Ok(red
        .first_nonzero(&diff)?
        .map(|((i, j), e)| format!("entry ({i}, {j}) differs by {e}")))
}

/// Entrywise equality of bi-normal forms of both sides.
pub fn check_capelli_words<F: Field>(
    double: &QuantumDouble<F>,
    r: &Braiding<F>,
    k: usize,
    d_copies: CopyVariant,
    trailing_a: bool,
    red: &BiReducer<F>,
) -> Result<Option<String>, Error> {
    first_difference(
        double,
        &capelli_lhs(r, k),
        &capelli_rhs(r, k, d_copies, trailing_a),
        red,
    )
}

/// Both sides act identically on every `M`-word of length at most
/// `max_degree`.
pub fn check_capelli_operators<F: Field>(
    double: &QuantumDouble<F>,
    r: &Braiding<F>,
    k: usize,
    d_copies: CopyVariant,
    trailing_a: bool,
    max_degree: usize,
    red: &BiReducer<F>,
) -> Result<Option<String>, Error> {
    let diff = capelli_lhs(r, k).sub(&capelli_rhs(r, k, d_copies, trailing_a));
    let gens = double.b().generators().to_vec();
    let words: Vec<Word> = (0..=max_degree).flat_map(|d| words_of_length(&gens, d)).collect();
    let mut s = double.session();
    for w in &words {
        let y = NcElement::word(w.clone());
        for ((i, j), e) in diff.entries() {
            let v = red.b().normal_form(&s.act(e, &y))?;
            if !v.is_zero() {
                return Ok(Some(format!("entry ({i}, {j}) on {y} leaves {v}")));
            }
        }
    }
    Ok(None)
}

/// `Tr_{R(1..N)} A^(N) L̂_1 (L̂_2̄ + qI) … (L̂_N̄ + q^{N-1}(N-1)_q I)`.
pub fn det_capelli_lhs<F: Field>(r: &Braiding<F>) -> Result<NcElement<F>, Error> {
    let n = r.n();
    let c = r.rtrace_form()?;
    Ok(shifted_product(r, n)
        .left_mul_op(&skew_symmetrizer(r, n))
        .full_rtrace(c.weights()))
}

/// `q^-N det_R M det_{R^-1} D`.
pub fn det_capelli_rhs<F: Field>(r: &Braiding<F>, d_copies: CopyVariant) -> Result<NcElement<F>, Error> {
    let n = r.n();
    let pair = extract_uv(&skew_symmetrizer(r, n))?;
    let dm = det_r(Tag::M, r, &pair, CopyVariant::Over);
    let dd = det_r(Tag::D, r, &pair, d_copies);
    Ok(dm.mul(&dd).scale(&r.q().pow(-(n as i32)).expect("q is invertible")))
}

pub fn check_det_capelli<F: Field>(
    double: &QuantumDouble<F>,
    r: &Braiding<F>,
    d_copies: CopyVariant,
    red: &BiReducer<F>,
) -> Result<Option<String>, Error> {
    let diff = det_capelli_lhs(r)?.sub(&det_capelli_rhs(r, d_copies)?);
    let nf = red.normal_form(&double.normal_order(&diff))?;
    Ok((!nf.is_zero()).then(|| format!("the two sides differ by {nf}")))
}

/// The top-degree part of `det D · det M - c · det M · det D` vanishes after
/// bi-normal ordering; the witness is the surviving top-degree part. The two
/// determinants do not commute outright, even at the flip.
pub fn check_det_q_commutation<F: Field>(
    double: &QuantumDouble<F>,
    r: &Braiding<F>,
    c: &F,
    red: &BiReducer<F>,
) -> Result<Option<String>, Error> {
    let n = r.n();
    let pair = extract_uv(&skew_symmetrizer(r, n))?;
    let dm = det_r(Tag::M, r, &pair, CopyVariant::Over);
    let dd = det_r(Tag::D, r, &pair, CopyVariant::Over);
    let x = dd.mul(&dm).sub(&dm.mul(&dd).scale(c));
    let nf = red.normal_form(&double.normal_order(&x))?;
    let top: NcElement<F> = NcElement::from_terms(
        nf.terms()
            .iter()
            .filter(|(w, _)| w.len() == 2 * n)
            .map(|(w, v)| (w.clone(), v.clone()))
            .collect(),
    );
    Ok((!top.is_zero()).then(|| format!("top-degree defect {top}")))
}
