//! Quantum partial derivatives on the shifted algebra `M = h I - ν N`.
//!
//! In terms of `N` the derivative double reads
//! `D_1 R N_1 R - R N_1 R^-1 D_1 = R + h D_1 R`, with `N` satisfying the
//! modified reflection equation at level `h`. For involutive `R` the shifted
//! derivatives `D̂ = D + h^-1 I` obey the homogeneous-looking rule
//! `D̂_1 R N_1 R - R N_1 R D̂_1 = h D̂_1 R`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::braiding::Braiding;
use crate::doubles::{make_double, BiReducer, DoubleKind, QuantumDouble};
use crate::error::Error;
use crate::field::Field;
use crate::nc::{Gen, NcElement, Tag};
use crate::ncmatrix::NcMatrix;
use crate::presentation::Presentation;

/// `D_1 R N_1 R - R N_1 R^-1 D_1 - R - h D_1 R` for given matrices.
pub fn h_shifted_relation<F: Field>(d: &NcMatrix<F>, nm: &NcMatrix<F>, r: &Braiding<F>, h: &F) -> NcMatrix<F> {
    let d1 = d.embed(0, 2);
    let n1 = nm.embed(0, 2);
    let rm = r.matrix();
    let lhs = d1.right_mul_op(rm).mul(&n1.right_mul_op(rm));
    let rhs = n1.left_mul_op(rm).right_mul_op(r.inverse()).mul(&d1);
    lhs.sub(&rhs)
        .sub(&NcMatrix::from_operator(rm))
        .sub(&d1.right_mul_op(rm).scale(h))
}

/// The double of `D(R^-1)` and the level-`h` modified RE algebra in `N`.
pub fn h_shifted_double<F: Field>(r: &Braiding<F>, h: &F) -> Result<QuantumDouble<F>, Error> {
    let n = r.n();
    let a = Presentation::re_inverse(r, Tag::D);
    let b = Presentation::modified_re(r, Tag::N, h);
    let rel = h_shifted_relation(&NcMatrix::generating(Tag::D, n), &NcMatrix::generating(Tag::N, n), r, h);
    QuantumDouble::from_relation("QPD_h", a, b, &rel, Vec::new())
}

/// Inside the unshifted derivative double, `N = (h I - M) / ν` and
/// `D' = -ν D` satisfy the shifted relation and the level-`h` modified RE.
/// Requires `ν ≠ 0`.
pub fn check_h_shift_consistency<F: Field>(
    r: &Braiding<F>,
    h: &F,
    red: &BiReducer<F>,
) -> Result<Option<String>, Error> {
    let n = r.n();
    let nu = r.nu();
    let Some(nu_inv) = nu.inv() else {
        return Err(Error::ConsistencyFailure(String::from(
            "the shift needs q - q^-1 to be invertible",
        )));
    };
    let qpd = make_double(DoubleKind::Qpd, r)?;
    let m = NcMatrix::generating(Tag::M, n);
    let nm = NcMatrix::identity(n, 1).scale(h).sub(&m).scale(&nu_inv);
    let d = NcMatrix::generating(Tag::D, n).scale(&nu.neg());
    let mut s = qpd.session();
    let mixed = s.normal_order_matrix(&h_shifted_relation(&d, &nm, r, h));
    if let Some(((i, j), e)) = red.first_nonzero(&mixed)? {
        return Ok(Some(format!("mixed relation entry ({i}, {j}) leaves {e}")));
    }
    let subst = |g: Gen| nm.entry(g.i as usize, g.j as usize);
    for rel in Presentation::modified_re(r, Tag::N, h).relations() {
        let e = rel.substitute(&subst);
        let nf = red.b().normal_form(&e)?;
        if !nf.is_zero() {
            return Ok(Some(format!("modified relation leaves {nf}")));
        }
    }
    Ok(None)
}

/// `D̂_1 R N_1 R - R N_1 R D̂_1 - h D̂_1 R`.
pub fn shifted_derivative_relation<F: Field>(
    dh: &NcMatrix<F>,
    nm: &NcMatrix<F>,
    r: &Braiding<F>,
    h: &F,
) -> NcMatrix<F> {
    let d1 = dh.embed(0, 2);
    let n1 = nm.embed(0, 2);
    let rm = r.matrix();
    let rnr = n1.left_mul_op(rm).right_mul_op(rm);
    d1.right_mul_op(rm)
        .mul(&n1.right_mul_op(rm))
        .sub(&rnr.mul(&d1))
        .sub(&d1.right_mul_op(rm).scale(h))
}

/// The double of the shifted derivatives `D̂` (counit `h^-1 δ`) and the
/// level-`h` algebra in `N`; defined for involutive `R` only.
pub fn shifted_derivative_double<F: Field>(r: &Braiding<F>, h: &F) -> Result<QuantumDouble<F>, Error> {
    if !r.is_involutive() {
        return Err(Error::NotInvolutive);
    }
    let n = r.n();
    let hi = h
        .inv()
        .ok_or_else(|| Error::BadConfig(String::from("h must be nonzero")))?;
    let a = Presentation::re(r, Tag::Dhat);
    let b = Presentation::modified_re(r, Tag::N, h);
    let rel = shifted_derivative_relation(
        &NcMatrix::generating(Tag::Dhat, n),
        &NcMatrix::generating(Tag::N, n),
        r,
        h,
    );
    let counit: Vec<(Gen, F)> = (0..n).map(|i| (Gen::new(Tag::Dhat, i, i), hi.clone())).collect();
    QuantumDouble::from_relation("QPD_hat", a, b, &rel, counit)
}

/// `D̂ = D + h^-1 I` turns the shifted relation into the `D̂` relation,
/// checked inside the `h`-shifted double.
pub fn check_dhat_substitution<F: Field>(r: &Braiding<F>, h: &F, red: &BiReducer<F>) -> Result<Option<String>, Error> {
    let n = r.n();
    let hi = h
        .inv()
        .ok_or_else(|| Error::BadConfig(String::from("h must be nonzero")))?;
    let double = h_shifted_double(r, h)?;
    let dh = NcMatrix::generating(Tag::D, n).add(&NcMatrix::identity(n, 1).scale(&hi));
    let rel = shifted_derivative_relation(&dh, &NcMatrix::generating(Tag::N, n), r, h);
    let ordered = double.session().normal_order_matrix(&rel);
    Ok(red
        .first_nonzero(&ordered)?
        .map(|((i, j), e)| format!("entry ({i}, {j}) leaves {e}")))
}

/// Leibniz rule through the coproduct: with `∂̃ = h D̂` (counit `δ`),
/// `∂̃_i^j ▷ (a b) = Σ_k (∂̃_k^j ▷ a)(∂̃_i^k ▷ b)` when `first_contracted`
/// is false, or with the roles of the indices exchanged otherwise.
pub fn check_coproduct_leibniz<F: Field>(
    double: &QuantumDouble<F>,
    h: &F,
    a: &NcElement<F>,
    b: &NcElement<F>,
    first_contracted: bool,
    red: &BiReducer<F>,
) -> Result<Option<String>, Error> {
    let n = double
        .a()
        .generators()
        .iter()
        .map(|g| g.i as usize + 1)
        .max()
        .unwrap_or(0);
    let dt = |i: usize, j: usize| NcElement::gen(Gen::new(double.a_tag(), i, j)).scale(h);
    let mut s = double.session();
    let ab = a.mul(b);
    for i in 0..n {
        for j in 0..n {
            let lhs = s.act(&dt(i, j), &ab);
            let mut rhs = NcElement::zero();
            for k in 0..n {
                let (x, y) = if first_contracted {
                    (dt(i, k), dt(k, j))
                } else {
                    (dt(k, j), dt(i, k))
                };
                rhs = rhs.add(&s.act(&x, a).mul(&s.act(&y, b)));
            }
            let nf = red.b().normal_form(&lhs.sub(&rhs))?;
            if !nf.is_zero() {
                return Ok(Some(format!("({i}, {j}) on {a} · {b} leaves {nf}")));
            }
        }
    }
    Ok(None)
}
