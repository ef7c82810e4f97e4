//! Central elements of reflection-equation algebras and their spectra.
//!
//! Power sums `Tr_R X^k` and the quantum elementary symmetric polynomials
//! `e_k(X) = Tr_{R(1..k)} A^(k) X_1 X_2̄ … X_k̄` are built as elements of the
//! free algebra. Their spectral characters on the modules `Im P_T(R)` are
//! evaluated from the quantum eigenvalues `χ_λ(μ_i) = q^{-2(λ_i + N - i)}`;
//! the eigenvalues are never adjoined to the algebra.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::braiding::{Braiding, RTraceForm};
use crate::doubles::{BiReducer, QuantumDouble};
use crate::error::Error;
use crate::field::Field;
use crate::heckerep::{content_sum_power, jucys_murphy_inverse, skew_symmetrizer, Partition};
use crate::nc::{Gen, NcElement, Tag};
use crate::ncmatrix::{matrix_power, monomial_matrix, NcMatrix};
use crate::operator::TensorOperator;
use crate::presentation::Reducer;
use crate::scalar::qint_in;

/// `Tr_R X^k` for the generating matrix of `tag`.
pub fn power_sum<F: Field>(k: usize, tag: Tag, c: &RTraceForm<F>) -> NcElement<F> {
    let n = c.weights().len();
    matrix_power(&NcMatrix::generating(tag, n), k).full_rtrace(c.weights())
}

/// `e_k(X) = Tr_{R(1..k)} (A^(k) X_1 X_2̄ … X_k̄)`; `e_0 = 1`.
pub fn elementary_symmetric<F: Field>(k: usize, tag: Tag, r: &Braiding<F>, c: &RTraceForm<F>) -> NcElement<F> {
    if k == 0 {
        return NcElement::one();
    }
    let mon = monomial_matrix(&NcMatrix::generating(tag, r.n()), k, r);
    mon.left_mul_op(&skew_symmetrizer(r, k)).full_rtrace(c.weights())
}

/// `X^N - q e_1 X^{N-1} + q^2 e_2 X^{N-2} - … + (-q)^N e_N I`.
pub fn cayley_hamilton_matrix<F: Field>(tag: Tag, r: &Braiding<F>, c: &RTraceForm<F>) -> NcMatrix<F> {
    let n = r.n();
    let x = NcMatrix::generating(tag, n);
    let mq = r.q().neg();
    let mut acc = NcMatrix::zero(n, 1, 1);
    for k in 0..=n {
        let e = elementary_symmetric(k, tag, r, c).scale(&mq.pow(k as i32).expect("integer power"));
        let p = matrix_power(&x, n - k);
        acc = acc.add(&p.map_entries(|entry| e.mul(entry)));
    }
    acc
}

/// Reduce every Cayley–Hamilton entry modulo the RE ideal; the witness is
/// the first nonvanishing entry and its normal form.
pub fn check_cayley_hamilton<F: Field>(r: &Braiding<F>, reducer: &Reducer<F>) -> Result<Option<String>, Error> {
    let c = r.rtrace_form()?;
    let ch = cayley_hamilton_matrix(Tag::M, r, &c);
    for ((i, j), e) in ch.entries() {
        let nf = reducer.normal_form(e)?;
        if !nf.is_zero() {
            return Ok(Some(format!("entry ({}, {}) reduces to {nf}", i + 1, j + 1)));
        }
    }
    Ok(None)
}

/// `x g - g x ≡ 0` for every generator `g`.
pub fn check_central<F: Field>(x: &NcElement<F>, gens: &[Gen], reducer: &Reducer<F>) -> Result<Option<String>, Error> {
    for &g in gens {
        let comm = x.commutator(&NcElement::gen(g));
        let nf = reducer.normal_form(&comm)?;
        if !nf.is_zero() {
            return Ok(Some(format!("[x, {g}] reduces to {nf}")));
        }
    }
    Ok(None)
}

/// `χ_λ(Tr_R L) = N_q / q^N - ν q^{-2N} Σ_boxes q^{-2c}`.
pub fn spectral_char_trl<F: Field>(lambda: &Partition, n: usize, q: &F) -> Result<F, Error> {
    if lambda.len() > n {
        return Err(Error::TooManyParts { parts: lambda.len(), n });
    }
    let qn = q.pow(n as i32).expect("integer power");
    let nu = q.sub(&q.inv().expect("q is invertible"));
    let first = qint_in(n as u32, q).div(&qn).expect("q is invertible");
    let second = nu
        .div(&qn.mul(&qn))
        .expect("q is invertible")
        .mul(&content_sum_power(lambda, q));
    Ok(first.sub(&second))
}

/// Character values of the central elements on `Im P_T(R)` for a shape `λ`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralCharacter<F> {
    pub partition: Partition,
    pub n: usize,
    pub q: F,
    /// `χ(Tr_R L)`.
    pub trl: F,
    /// `χ(μ_i) = q^{-2(λ_i + N - i)}`, `i = 1..N`.
    pub mu: Vec<F>,
    /// `χ(μ̂_i) = q^{-(λ_i + N - i)} (λ_i + N - i)_q`.
    pub mu_hat: Vec<F>,
    /// `χ(e_k)` for `k = 1..N`, from `q^k χ(e_k) = e_k(χ(μ))`.
    pub e: Vec<F>,
}

/// Elementary symmetric functions `e_1..e_m` of a list.
fn elementary_values<F: Field>(xs: &[F]) -> Vec<F> {
    let mut e = alloc::vec![F::zero(); xs.len() + 1];
    e[0] = F::one();
    for x in xs {
        for k in (1..e.len()).rev() {
            let t = e[k - 1].mul(x);
            e[k].add_assign(&t);
        }
    }
    e.remove(0);
    e
}

pub fn spectral_character<F: Field>(lambda: &Partition, n: usize, q: &F) -> Result<SpectralCharacter<F>, Error> {
    let trl = spectral_char_trl(lambda, n, q)?;
    let parts = lambda.padded(n);
    let mut mu = Vec::with_capacity(n);
    let mut mu_hat = Vec::with_capacity(n);
    for (i, &l) in parts.iter().enumerate() {
        let m = (l + n - 1 - i) as i32;
        mu.push(q.pow(-2 * m).expect("q is invertible"));
        mu_hat.push(q.pow(-m).expect("q is invertible").mul(&qint_in(m as u32, q)));
    }
    let e = elementary_values(&mu)
        .into_iter()
        .enumerate()
        .map(|(k, v)| v.mul(&q.pow(-(k as i32 + 1)).expect("q is invertible")))
        .collect();
    Ok(SpectralCharacter {
        partition: lambda.clone(),
        n,
        q: q.clone(),
        trl,
        mu,
        mu_hat,
        e,
    })
}

impl<F: Field> SpectralCharacter<F> {
    /// `χ(d_i) = q^-1 Π_{j≠i} (μ_i - q^-2 μ_j) / (μ_i - μ_j)`.
    pub fn d(&self) -> Vec<F> {
        let qi = self.q.inv().expect("q is invertible");
        let qi2 = qi.mul(&qi);
        (0..self.n)
            .map(|i| {
                let mut acc = qi.clone();
                for j in 0..self.n {
                    if j == i {
                        continue;
                    }
                    let num = self.mu[i].sub(&qi2.mul(&self.mu[j]));
                    let den = self.mu[i].sub(&self.mu[j]);
                    acc = acc.mul(&num.div(&den).expect("distinct quantum eigenvalues"));
                }
                acc
            })
            .collect()
    }

    /// `χ(Tr_R L^k) = Σ_i χ(μ_i)^k χ(d_i)`.
    pub fn power_sum(&self, k: usize) -> F {
        let mut acc = F::zero();
        for (m, d) in self.mu.iter().zip(self.d()) {
            acc.add_mul(&m.pow(k as i32).expect("integer power"), &d);
        }
        acc
    }

    /// `χ(e_k)`, with `χ(e_0) = 1` and zero above `N`.
    pub fn elementary(&self, k: usize) -> F {
        match k {
            0 => F::one(),
            k if k <= self.n => self.e[k - 1].clone(),
            _ => F::zero(),
        }
    }

    /// `χ(Tr_R L) = q^-1 Σ χ(μ_i)`.
    pub fn check_e1_consistency(&self) -> bool {
        let mut s = F::zero();
        for m in &self.mu {
            s.add_assign(m);
        }
        s.mul(&self.q.inv().expect("q is invertible")) == self.trl && self.elementary(1) == self.trl
    }

    /// The coefficients of `Π_i (x - χ(μ_i))`, expanded by repeated
    /// multiplication, are `(-1)^k q^k χ(e_k)`.
    pub fn check_vieta(&self) -> bool {
        let mut poly = alloc::vec![F::one()];
        for m in &self.mu {
            let mut next = alloc::vec![F::zero(); poly.len() + 1];
            for (i, c) in poly.iter().enumerate() {
                next[i].add_assign(c);
                next[i + 1].sub_assign(&c.mul(m));
            }
            poly = next;
        }
        let mq = self.q.neg();
        (0..=self.n).all(|k| poly[k] == mq.pow(k as i32).expect("integer power").mul(&self.elementary(k)))
    }

    /// `χ(μ_i) = 1 - ν χ(μ̂_i)`.
    pub fn check_mu_shift(&self) -> bool {
        let nu = self.q.sub(&self.q.inv().expect("q is invertible"));
        self.mu
            .iter()
            .zip(&self.mu_hat)
            .all(|(m, h)| *m == F::one().sub(&nu.mul(h)))
    }
}

/// The central elements whose spectra are examined.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpectralElement {
    /// `Tr_R L`.
    TraceL,
    /// `e_2(L)`.
    E2,
    /// `Tr_R L^p`.
    PowerSum(usize),
}

impl SpectralElement {
    pub fn name(self) -> String {
        match self {
            SpectralElement::TraceL => String::from("TRL"),
            SpectralElement::E2 => String::from("E2"),
            SpectralElement::PowerSum(p) => format!("P{p}"),
        }
    }

    /// The element of the RE algebra generated by `L`.
    pub fn element<F: Field>(self, r: &Braiding<F>, c: &RTraceForm<F>) -> NcElement<F> {
        match self {
            SpectralElement::TraceL => power_sum(1, Tag::L, c),
            SpectralElement::E2 => elementary_symmetric(2, Tag::L, r, c),
            SpectralElement::PowerSum(p) => power_sum(p, Tag::L, c),
        }
    }

    /// The predicted character value.
    pub fn character<F: Field>(self, chi: &SpectralCharacter<F>) -> F {
        match self {
            SpectralElement::TraceL => chi.trl.clone(),
            SpectralElement::E2 => chi.elementary(2),
            SpectralElement::PowerSum(p) => chi.power_sum(p),
        }
    }
}

/// The operator by which `Tr_R L` acts on degree-`k` monomials:
/// `Tr_{R(k+1)} J_{k+1}^{-1}`.
pub fn trace_action_operator<F: Field>(
    r: &Braiding<F>,
    c: &RTraceForm<F>,
    k: usize,
) -> Result<TensorOperator<F>, Error> {
    let jinv = jucys_murphy_inverse(r, k + 1).pop().expect("nonempty family");
    c.rtrace(&jinv, k + 1)
}

/// `O · P = χ · P`; the witness names the first differing entry.
pub fn check_operator_eigenvalue<F: Field>(o: &TensorOperator<F>, p: &TensorOperator<F>, chi: &F) -> Option<String> {
    let lhs = o.mul(p);
    let rhs = p.scale(chi);
    if lhs == rhs {
        return None;
    }
    let diff = lhs.sub(&rhs);
    let (i, j, v) = diff.entries().next().expect("nonzero difference");
    Some(format!("entry ({i}, {j}) of O·P - χ·P is {v}"))
}

/// `a ▷ (P · Mon)_IJ ≡ χ (P · Mon)_IJ` modulo the ideal of `B`, for the
/// degree-`k` monomial matrix of the function algebra of a double.
pub fn check_eigenvalue_on_monomials<F: Field>(
    double: &QuantumDouble<F>,
    a: &NcElement<F>,
    chi: &F,
    p: &TensorOperator<F>,
    r: &Braiding<F>,
    red: &BiReducer<F>,
) -> Result<Option<String>, Error> {
    let k = p.arity();
    let mon = monomial_matrix(&NcMatrix::generating(double.b_tag(), r.n()), k, r);
    let y = mon.left_mul_op(p);
    let mut s = double.session();
    for ((i, j), e) in y.entries() {
        let lhs = s.act(a, e);
        let nf = red.b().normal_form(&lhs.sub(&e.scale(chi)))?;
        if !nf.is_zero() {
            return Ok(Some(format!("entry ({i}, {j}) leaves the residual {nf}")));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Param, Scalar};

    fn q() -> Scalar {
        Scalar::q()
    }

    fn mono(c: i64, e: i32) -> Scalar {
        Scalar::monomial(Param::Q, c, e)
    }

    #[test]
    fn first_power_sums() {
        let r = Braiding::standard_hecke(1, q()).unwrap();
        let c = r.rtrace_form().unwrap();
        let m = NcElement::gen(Gen::new(Tag::M, 0, 0));
        assert_eq!(power_sum(1, Tag::M, &c), m.scale(&mono(1, -1)));
        let r2 = Braiding::standard_hecke(2, q()).unwrap();
        let c2 = r2.rtrace_form().unwrap();
        let expected = NcElement::gen(Gen::new(Tag::M, 0, 0))
            .scale(&mono(1, -1))
            .add(&NcElement::gen(Gen::new(Tag::M, 1, 1)).scale(&mono(1, -3)));
        assert_eq!(power_sum(1, Tag::M, &c2), expected);
        assert_eq!(elementary_symmetric(1, Tag::M, &r2, &c2), expected);
    }

    #[test]
    fn trace_characters_at_n2() {
        let two = |a: i32, b: i32| mono(1, a).add(&mono(1, b));
        let cases = [
            (alloc::vec![1], two(-1, -5)),
            (alloc::vec![2], two(-1, -7)),
            (alloc::vec![1, 1], two(-3, -5)),
        ];
        for (parts, expected) in cases {
            let lambda = Partition::new(parts);
            assert_eq!(spectral_char_trl(&lambda, 2, &q()).unwrap(), expected);
        }
        assert!(spectral_char_trl(&Partition::new(alloc::vec![1, 1, 1]), 2, &q()).is_err());
    }

    #[test]
    fn empty_partition_and_classical_limit() {
        let chi = spectral_character(&Partition::new(alloc::vec![]), 3, &q()).unwrap();
        assert_eq!(chi.mu, alloc::vec![mono(1, -4), mono(1, -2), Scalar::one()]);
        assert_eq!(chi.trl, qint_in(3, &q()).div(&mono(1, 3)).unwrap());
        let one = Scalar::one();
        let lambda = Partition::new(alloc::vec![2, 1]);
        assert_eq!(spectral_char_trl(&lambda, 3, &one).unwrap(), Scalar::from_i64(3));
        let classical = spectral_character(&lambda, 3, &one).unwrap();
        let expected: alloc::vec::Vec<Scalar> = [4, 2, 0].iter().map(|&v| Scalar::from_i64(v)).collect();
        assert_eq!(classical.mu_hat, expected);
    }

    #[test]
    fn character_identities() {
        for k in 0..=4 {
            for lambda in Partition::all(k) {
                for n in 1..=3 {
                    if lambda.len() > n {
                        continue;
                    }
                    let chi = spectral_character(&lambda, n, &q()).unwrap();
                    assert!(chi.check_e1_consistency(), "{lambda} N={n}");
                    assert!(chi.check_vieta());
                    assert!(chi.check_mu_shift());
                    assert_eq!(chi.power_sum(1), chi.trl, "{lambda} N={n}");
                }
            }
        }
    }
}
