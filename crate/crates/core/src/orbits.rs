//! Adjoint invariance of the power sums `Tr_R M^k` and the quantum orbit
//! quotients `M(R) / ⟨Tr_R M^k - α_k⟩`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::braiding::Braiding;
use crate::doubles::{BiReducer, QuantumDouble};
use crate::error::Error;
use crate::field::Field;
use crate::invariants::power_sum;
use crate::nc::{Gen, NcElement, Tag};
use crate::presentation::{Presentation, Reducer};

/// In the adjoint double (`L̂` acting on `M`): the normal-ordered
/// `l̂ · Tr_R M^k` equals `Tr_R M^k · l̂` for every generator `l̂`.
pub fn check_adjoint_commutation<F: Field>(
    double: &QuantumDouble<F>,
    r: &Braiding<F>,
    k: usize,
    red: &BiReducer<F>,
) -> Result<Option<String>, Error> {
    let c = r.rtrace_form()?;
    let t = power_sum(k, Tag::M, &c);
    let mut s = double.session();
    for g in Gen::all(double.a_tag(), r.n()) {
        let l = NcElement::gen(g);
        let diff = s.normal_order(&l.mul(&t)).sub(&t.mul(&l));
        let nf = red.normal_form(&diff)?;
        if !nf.is_zero() {
            return Ok(Some(format!("{g} fails to commute with the power sum: {nf}")));
        }
    }
    Ok(None)
}

/// Every adjoint vector field kills `Tr_R M^k`.
pub fn check_adjoint_annihilation<F: Field>(
    double: &QuantumDouble<F>,
    r: &Braiding<F>,
    k: usize,
    red: &BiReducer<F>,
) -> Result<Option<String>, Error> {
    let c = r.rtrace_form()?;
    let t = power_sum(k, Tag::M, &c);
    let mut s = double.session();
    for g in Gen::all(double.a_tag(), r.n()) {
        let v = red.b().normal_form(&s.act(&NcElement::gen(g), &t))?;
        if !v.is_zero() {
            return Ok(Some(format!("{g} acts on the power sum by {v}")));
        }
    }
    Ok(None)
}

/// `M(R)` with the inhomogeneous relations `Tr_R M^k = α_k`, `k = 1..N`.
#[derive(Clone, Debug)]
pub struct OrbitQuotient<F: Field> {
    pub alphas: Vec<F>,
    pub presentation: Presentation<F>,
}

impl<F: Field> OrbitQuotient<F> {
    /// A reducer for elements of degree `<= bound`, built with `slack`
    /// extra degrees so cancellations among leading parts are captured.
    pub fn reducer(&self, bound: usize, slack: usize) -> Reducer<F> {
        Reducer::new(&self.presentation, bound + slack)
    }
}

pub fn orbit_quotient<F: Field>(r: &Braiding<F>, alphas: &[F]) -> Result<OrbitQuotient<F>, Error> {
    let n = r.n();
    if alphas.len() != n {
        return Err(Error::BadConfig(format!(
            "{} level constants for N = {n}",
            alphas.len()
        )));
    }
    let c = r.rtrace_form()?;
    let extra = alphas
        .iter()
        .enumerate()
        .map(|(i, a)| power_sum(i + 1, Tag::M, &c).sub(&NcElement::constant(a.clone())));
    let presentation = Presentation::re(r, Tag::M).with_relations("orbit", extra);
    Ok(OrbitQuotient {
        alphas: alphas.to_vec(),
        presentation,
    })
}

/// `μ_i ≠ q² μ_j` for all ordered pairs `(i, j)`, including `i = j`.
pub fn genericity<F: Field>(mu: &[F], q: &F) -> bool {
    let q2 = q.mul(q);
    mu.iter().all(|mi| mu.iter().all(|mj| *mi != q2.mul(mj)))
}
