use qdouble_core::braiding::Braiding;
use qdouble_core::capelli::{
    capelli_lhs, capelli_rhs, check_capelli_operators, check_capelli_words, check_det_capelli, check_det_q_commutation,
    det_r, extract_uv,
};
use qdouble_core::doubles::{make_double, DoubleKind};
use qdouble_core::heckerep::skew_symmetrizer;
use qdouble_core::invariants::check_central;
use qdouble_core::nc::{Gen, NcElement, Tag};
use qdouble_core::ncmatrix::CopyVariant;
use qdouble_core::presentation::{Presentation, Reducer};
use qdouble_core::{Field, Rat, Scalar};

fn gen(tag: Tag, i: usize, j: usize) -> NcElement<Scalar> {
    NcElement::gen(Gen::new(tag, i, j))
}

#[test]
fn matrix_capelli_words_exact_at_n2() {
    let r = Braiding::standard_hecke(2, Scalar::q()).unwrap();
    let d = make_double(DoubleKind::Qpd, &r).unwrap();
    let red = d.reducers(2, 2);
    for k in 1..=2 {
        assert_eq!(
            check_capelli_words(&d, &r, k, CopyVariant::Over, false, &red).unwrap(),
            None,
            "k = {k}"
        );
    }
}

#[test]
fn matrix_capelli_operators_exact_at_n2() {
    let r = Braiding::standard_hecke(2, Scalar::q()).unwrap();
    let d = make_double(DoubleKind::Qpd, &r).unwrap();
    let red = d.reducers(2, 2);
    for k in 1..=2 {
        let w = check_capelli_operators(&d, &r, k, CopyVariant::Over, false, 2, &red).unwrap();
        assert_eq!(w, None, "k = {k}");
    }
}

#[test]
fn derivative_copies_built_with_the_inverse_braiding_fail() {
    let r = Braiding::standard_hecke(2, Scalar::q()).unwrap();
    let d = make_double(DoubleKind::Qpd, &r).unwrap();
    let red = d.reducers(2, 2);
    assert!(check_capelli_words(&d, &r, 2, CopyVariant::Under, false, &red)
        .unwrap()
        .is_some());
    assert!(check_capelli_operators(&d, &r, 2, CopyVariant::Under, false, 2, &red)
        .unwrap()
        .is_some());
    assert!(check_det_capelli(&d, &r, CopyVariant::Under, &red).unwrap().is_some());
}

#[test]
fn dropping_the_shift_breaks_the_identity() {
    let r = Braiding::standard_hecke(2, Scalar::q()).unwrap();
    let d = make_double(DoubleKind::Qpd, &r).unwrap();
    let red = d.reducers(2, 2);
    let a = skew_symmetrizer(&r, 2);
    let lhat = qdouble_core::ncmatrix::NcMatrix::generating(Tag::M, 2)
        .mul(&qdouble_core::ncmatrix::NcMatrix::generating(Tag::D, 2));
    let unshifted = qdouble_core::ncmatrix::monomial_matrix(&lhat, 2, &r)
        .left_mul_op(&a)
        .right_mul_op(&a);
    let diff = d
        .session()
        .normal_order_matrix(&unshifted.sub(&capelli_rhs(&r, 2, CopyVariant::Over, false)));
    assert!(red.first_nonzero(&diff).unwrap().is_some());
    assert_ne!(capelli_lhs(&r, 2), unshifted);
}

#[test]
fn classical_capelli_at_the_flip() {
    let p = Braiding::<Scalar>::flip(2);
    let d = make_double(DoubleKind::Qpd, &p).unwrap();
    let red = d.reducers(2, 2);
    for k in 1..=2 {
        assert_eq!(
            check_capelli_words(&d, &p, k, CopyVariant::Over, false, &red).unwrap(),
            None
        );
    }
    assert_eq!(check_det_capelli(&d, &p, CopyVariant::Over, &red).unwrap(), None);
    // Classical determinant up to the normalization ⟨v|u⟩ = 1.
    let pair = extract_uv(&skew_symmetrizer(&p, 2)).unwrap();
    let det = det_r(Tag::M, &p, &pair, CopyVariant::Over);
    let comm = Reducer::new(&Presentation::re(&p, Tag::M), 2);
    let classical = gen(Tag::M, 0, 0)
        .mul(&gen(Tag::M, 1, 1))
        .sub(&gen(Tag::M, 1, 0).mul(&gen(Tag::M, 0, 1)));
    let ratio = Scalar::from_ratio(1, 2);
    assert!(comm.equals_mod(&det, &classical.scale(&ratio)).unwrap() || comm.equals_mod(&det, &classical).unwrap());
}

#[test]
fn determinant_capelli_exact_at_n2() {
    let r = Braiding::standard_hecke(2, Scalar::q()).unwrap();
    let d = make_double(DoubleKind::Qpd, &r).unwrap();
    let red = d.reducers(2, 2);
    assert_eq!(check_det_capelli(&d, &r, CopyVariant::Over, &red).unwrap(), None);
}

#[test]
fn determinant_capelli_in_one_dimension() {
    let r = Braiding::standard_hecke(1, Scalar::q()).unwrap();
    let d = make_double(DoubleKind::Qpd, &r).unwrap();
    let red = d.reducers(1, 1);
    assert_eq!(check_det_capelli(&d, &r, CopyVariant::Over, &red).unwrap(), None);
}

#[test]
fn determinants_are_central_and_q_commute() {
    let r = Braiding::standard_hecke(2, Scalar::q()).unwrap();
    let pair = extract_uv(&skew_symmetrizer(&r, 2)).unwrap();
    let det_m = det_r(Tag::M, &r, &pair, CopyVariant::Over);
    let det_d = det_r(Tag::D, &r, &pair, CopyVariant::Over);
    let red_m = Reducer::new(&Presentation::re(&r, Tag::M), 3);
    assert_eq!(check_central(&det_m, &Gen::all(Tag::M, 2), &red_m).unwrap(), None);
    let d = make_double(DoubleKind::Qpd, &r).unwrap();
    let red = d.reducers(2, 2);
    let comm = d.normal_order(&det_m.commutator(&det_d));
    assert!(!red.is_zero(&comm).unwrap());
    let c = Scalar::q().pow(-4).unwrap();
    assert_eq!(check_det_q_commutation(&d, &r, &c, &red).unwrap(), None);
    assert!(check_det_q_commutation(&d, &r, &Scalar::one(), &red).unwrap().is_some());
    // Gauge invariance of the determinant.
    let scaled = pair.regauge(&Scalar::q().add(&Scalar::from_i64(3)));
    assert_eq!(det_r(Tag::M, &r, &scaled, CopyVariant::Over), det_m);
}

#[test]
fn matrix_capelli_sampled_at_n3() {
    let r = Braiding::standard_hecke(3, Rat::new(2, 1)).unwrap();
    let d = make_double(DoubleKind::Qpd, &r).unwrap();
    let red = d.reducers(2, 2);
    for k in 1..=2 {
        assert_eq!(
            check_capelli_words(&d, &r, k, CopyVariant::Over, false, &red).unwrap(),
            None,
            "k = {k}"
        );
    }
}

#[test]
fn classical_determinants_commute_up_to_euler_terms() {
    let p = Braiding::<Scalar>::flip(2);
    let pair = extract_uv(&skew_symmetrizer(&p, 2)).unwrap();
    let det_m = det_r(Tag::M, &p, &pair, CopyVariant::Over);
    let det_d = det_r(Tag::D, &p, &pair, CopyVariant::Over);
    let d = make_double(DoubleKind::Qpd, &p).unwrap();
    let red = d.reducers(2, 2);
    let comm = red.normal_form(&d.normal_order(&det_d.commutator(&det_m))).unwrap();
    // [det ∂, det M] = 2 + Σ m_i^j ∂_j^i with both determinants halved by ⟨v|u⟩ = 1.
    let mut euler = NcElement::constant(Scalar::from_i64(2));
    for i in 0..2 {
        for j in 0..2 {
            euler = euler.add(&gen(Tag::M, i, j).mul(&gen(Tag::D, j, i)));
        }
    }
    assert_eq!(comm, euler);
}
