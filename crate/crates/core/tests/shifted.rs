use qdouble_core::braiding::Braiding;
use qdouble_core::doubles::{make_double, DoubleKind};
use qdouble_core::nc::{Gen, NcElement, Tag};
use qdouble_core::ncmatrix::{matrix_copy, CopyVariant, NcMatrix};
use qdouble_core::shifted::{
    check_coproduct_leibniz, check_dhat_substitution, check_h_shift_consistency, h_shifted_double,
    shifted_derivative_double,
};
use qdouble_core::{Error, Field, Scalar};

fn gen(tag: Tag, i: usize, j: usize) -> NcElement<Scalar> {
    NcElement::gen(Gen::new(tag, i, j))
}

#[test]
fn shift_is_consistent_with_the_derivative_double() {
    let r = Braiding::standard_hecke(2, Scalar::q()).unwrap();
    let qpd = make_double(DoubleKind::Qpd, &r).unwrap();
    let red = qpd.reducers(2, 2);
    for h in [Scalar::from_ratio(3, 7), Scalar::from_i64(-2), Scalar::zero()] {
        assert_eq!(check_h_shift_consistency(&r, &h, &red).unwrap(), None, "h = {h}");
    }
}

#[test]
fn shift_needs_a_deformed_braiding() {
    let p = Braiding::<Scalar>::flip(2);
    let qpd = make_double(DoubleKind::Qpd, &p).unwrap();
    let red = qpd.reducers(2, 2);
    assert!(check_h_shift_consistency(&p, &Scalar::h(), &red).is_err());
}

#[test]
fn shifted_double_is_well_defined() {
    let r = Braiding::standard_hecke(2, Scalar::q()).unwrap();
    let d = h_shifted_double(&r, &Scalar::from_ratio(3, 7)).unwrap();
    let red = d.reducers(2, 2);
    d.check_ideal_compatibility(&red).unwrap();
    let p = Braiding::<Scalar>::flip(2);
    let dp = h_shifted_double(&p, &Scalar::h()).unwrap();
    let red_p = dp.reducers(2, 2);
    dp.check_ideal_compatibility(&red_p).unwrap();
}

#[test]
fn derivatives_on_shifted_generators() {
    let r = Braiding::standard_hecke(2, Scalar::q()).unwrap();
    for h in [Scalar::from_ratio(3, 7), Scalar::zero()] {
        let d = h_shifted_double(&r, &h).unwrap();
        let d1 = NcMatrix::generating(Tag::D, 2).embed(0, 2);
        let n2 = matrix_copy(&NcMatrix::generating(Tag::N, 2), 2, 2, CopyVariant::Over, &r);
        assert_eq!(d.session().act_matrix(&d1, &n2), NcMatrix::from_operator(r.inverse()));
    }
}

#[test]
fn level_zero_is_the_derivative_double() {
    let r = Braiding::standard_hecke(2, Scalar::q()).unwrap();
    let d = h_shifted_double(&r, &Scalar::zero()).unwrap();
    let qpd = make_double(DoubleKind::Qpd, &r).unwrap();
    let rename = |x: &NcElement<Scalar>| {
        x.substitute(&|g: Gen| match g.tag {
            Tag::N => NcElement::gen(Gen { tag: Tag::M, ..g }),
            _ => NcElement::gen(g),
        })
    };
    for ((a, b), img) in d.sigma().entries() {
        let m = Gen { tag: Tag::M, ..*b };
        assert_eq!(rename(img), *qpd.sigma().image(*a, m));
    }
}

#[test]
fn classical_derivatives_on_shifted_generators() {
    let p = Braiding::<Scalar>::flip(2);
    let d = h_shifted_double(&p, &Scalar::h()).unwrap();
    for a in Gen::all(Tag::D, 2) {
        for b in Gen::all(Tag::N, 2) {
            let v = d.act(&NcElement::gen(a), &NcElement::gen(b));
            let expected = if a.j == b.i && a.i == b.j {
                NcElement::one()
            } else {
                NcElement::zero()
            };
            assert_eq!(v, expected, "{a} ▷ {b}");
        }
    }
    // On products the action carries h-corrections that vanish at h = 0.
    let x = gen(Tag::N, 0, 0).mul(&gen(Tag::N, 0, 0));
    let v = d.act(&gen(Tag::D, 0, 0), &x);
    assert!(v.terms().values().any(|c| !c.is_constant()), "{v}");
}

#[test]
fn shifted_derivatives_need_involutive_braiding() {
    let r = Braiding::standard_hecke(2, Scalar::q()).unwrap();
    assert!(matches!(
        shifted_derivative_double(&r, &Scalar::from_i64(2)),
        Err(Error::NotInvolutive)
    ));
}

#[test]
fn shifted_derivatives_match_the_diagonal_shift() {
    let p = Braiding::<Scalar>::flip(2);
    let h = Scalar::h();
    let dsh = h_shifted_double(&p, &h).unwrap();
    let red = dsh.reducers(2, 2);
    assert_eq!(check_dhat_substitution(&p, &h, &red).unwrap(), None);
    let dh = shifted_derivative_double(&p, &h).unwrap();
    let red_h = dh.reducers(2, 2);
    dh.check_ideal_compatibility(&red_h).unwrap();
    dh.check_counit().unwrap();
    // ∂̂ ▷ y = ∂ ▷ y + h^-1 δ y on sample elements.
    let hi = Scalar::h().inv().unwrap();
    let samples = [
        gen(Tag::N, 0, 1),
        gen(Tag::N, 1, 0).mul(&gen(Tag::N, 0, 0)),
        NcElement::one(),
    ];
    for i in 0..2 {
        for j in 0..2 {
            for y in &samples {
                let lhs = dh.act(&gen(Tag::Dhat, i, j), y);
                let mut rhs = dsh.act(&gen(Tag::D, i, j), y);
                if i == j {
                    rhs = rhs.add(&y.scale(&hi));
                }
                assert!(red_h.b().equals_mod(&lhs, &rhs).unwrap(), "({i}, {j}) on {y}");
            }
        }
    }
}

#[test]
fn coproduct_gives_the_leibniz_rule() {
    let p = Braiding::<Scalar>::flip(2);
    let h = Scalar::h();
    let dh = shifted_derivative_double(&p, &h).unwrap();
    let red = dh.reducers(2, 3);
    let samples = [
        NcElement::one(),
        gen(Tag::N, 0, 1),
        gen(Tag::N, 1, 1),
        gen(Tag::N, 1, 0).mul(&gen(Tag::N, 0, 0)),
    ];
    for a in &samples {
        for b in &samples {
            assert_eq!(
                check_coproduct_leibniz(&dh, &h, a, b, false, &red).unwrap(),
                None,
                "{a} · {b}"
            );
        }
    }
    // The other contraction order fails on mixed pairs.
    let w = check_coproduct_leibniz(&dh, &h, &gen(Tag::N, 0, 1), &gen(Tag::N, 1, 1), true, &red).unwrap();
    assert!(w.is_some());
}
