//! Verification suites: each function runs one family of identity checks and
//! returns ordered records. Everything is generic over the coefficient field,
//! so the same suite runs exactly over `Q(q)` or at a rational sample point.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::braiding::Braiding;
use crate::capelli::{check_capelli_operators, check_capelli_words, check_det_capelli};
use crate::doubles::{make_double, DoubleKind};
use crate::error::Error;
use crate::field::Field;
use crate::heckerep::{
    idempotent_family, jucys_murphy, skew_symmetrizer, standard_tableaux, tableau_label, young_idempotent_with,
    Partition,
};
use crate::invariants::{
    check_cayley_hamilton, check_eigenvalue_on_monomials, check_operator_eigenvalue, power_sum, spectral_character,
    trace_action_operator, SpectralElement,
};
use crate::nc::{Gen, NcElement, Tag};
use crate::ncmatrix::CopyVariant;
use crate::operator::TensorOperator;
use crate::orbits::{check_adjoint_annihilation, check_adjoint_commutation, genericity, orbit_quotient};
use crate::presentation::{Presentation, Reducer};
use crate::report::CheckRecord;
use crate::scalar::Scalar;
use crate::u2h::{Derivative, Pbw, U2h};

/// Suite names accepted by the driver.
pub const SUITES: [&str; 12] = [
    "braiding",
    "heckerep",
    "doubles",
    "spectrum",
    "conjecture",
    "cayley-hamilton",
    "capelli",
    "det-capelli",
    "adjoint",
    "orbits",
    "u2h",
    "guard",
];

/// Conventions every record is computed under.
pub const CONVENTIONS: [(&str, &str); 4] = [
    (
        "braiding",
        "R(x_i x_i) = q x_i x_i; i<j: R(x_i x_j) = x_j x_i; i>j: R(x_i x_j) = x_j x_i + (q - q^-1) x_i x_j",
    ),
    ("trace_weights", "C = diag(q^-1, q^-3, ..., q^(1-2N))"),
    ("copies", "X_k-bar = R_(k-1) X_(k-1)-bar R_(k-1)^-1"),
    ("word_order", "degree first, then lexicographic on (tag, row, column)"),
];

fn unit<E: ToString>(r: Result<(), E>) -> Result<Option<String>, E> {
    r.map(|()| None)
}

fn witness(ok: bool, msg: impl FnOnce() -> String) -> Option<String> {
    if ok {
        None
    } else {
        Some(msg())
    }
}

/// Braid relation, Hecke condition and `R^-1 = R - νI`.
pub fn braiding_checks<F: Field>(r: &Braiding<F>) -> Vec<CheckRecord> {
    let n = r.n();
    let id = TensorOperator::identity(n, 2);
    let inverse_is_shift = *r.inverse() == r.matrix().sub(&id.scale(&r.nu()));
    alloc::vec![
        CheckRecord::from_result(
            format!("braiding/N={n}/braid"),
            "braid relation R12 R23 R12 = R23 R12 R23",
            unit(r.check_braid())
        ),
        CheckRecord::from_result(
            format!("braiding/N={n}/hecke"),
            "Hecke condition (R - qI)(R + q^-1 I) = 0",
            unit(r.check_hecke())
        ),
        CheckRecord::from_witness(
            format!("braiding/N={n}/inverse"),
            "inverse braiding R^-1 = R - (q - q^-1) I",
            witness(inverse_is_shift, || String::from("R^-1 differs from R - nu I")),
        ),
    ]
}

/// The trace property of `C` and the first-power-sum consistency of the
/// spectral characters for every `λ ⊢ k ≤ k_max` with at most `N` rows.
pub fn guard_checks<F: Field>(r: &Braiding<F>, k_max: usize) -> Vec<CheckRecord> {
    let n = r.n();
    let mut out = Vec::new();
    let trace = r.rtrace_form().and_then(|c| c.check_trace_property(r));
    out.push(CheckRecord::from_result(
        format!("guard/N={n}/trace-property"),
        "R-trace property Tr_(2) R X_1 R^-1 = (Tr_R X) I",
        unit(trace),
    ));
    for k in 1..=k_max {
        for lambda in Partition::all(k) {
            if lambda.len() > n {
                continue;
            }
            let id = format!("guard/N={n}/lambda={lambda}/e1");
            let rec = match spectral_character(&lambda, n, r.q()) {
                Ok(chi) => CheckRecord::from_witness(
                    id,
                    "first power sum of quantum eigenvalues equals the Tr_R L character",
                    witness(chi.check_e1_consistency(), || {
                        format!("p1 = {} but chi(TrL) = {}", chi.power_sum(1), chi.trl)
                    }),
                )
                .with_value("chi", &chi.trl),
                Err(e) => CheckRecord::fail(id, "first power sum of quantum eigenvalues", e.to_string()),
            };
            out.push(rec);
        }
    }
    out
}

/// Jucys–Murphy commutativity, skew-symmetrizer idempotency and
/// skew-symmetry, idempotent completeness and orthogonality for `k ≤ k_max`,
/// and the bi-rank `(N|0)` condition.
pub fn heckerep_checks<F: Field>(r: &Braiding<F>, k_max: usize) -> Vec<CheckRecord> {
    let n = r.n();
    let mut out = Vec::new();
    for k in 1..=k_max {
        let jm = jucys_murphy(r, k);
        let mut comm = None;
        'outer: for i in 0..k {
            for j in i + 1..k {
                if jm[i].mul(&jm[j]) != jm[j].mul(&jm[i]) {
                    comm = Some(format!("J_{} J_{} != J_{} J_{}", i + 1, j + 1, j + 1, i + 1));
                    break 'outer;
                }
            }
        }
        out.push(CheckRecord::from_witness(
            format!("heckerep/N={n}/k={k}/jm-commute"),
            "Jucys-Murphy elements commute",
            comm,
        ));

        let a = skew_symmetrizer(r, k);
        out.push(CheckRecord::from_witness(
            format!("heckerep/N={n}/k={k}/skew-idempotent"),
            "skew-symmetrizer is idempotent",
            witness(a.mul(&a) == a, || String::from("A^2 != A")),
        ));
        let mq = r.q().inv().expect("q is invertible").neg();
        let mut skew = None;
        for i in 1..k {
            let ri = r.lift(k, i).expect("valid position");
            let target = a.scale(&mq);
            if a.mul(&ri) != target || ri.mul(&a) != target {
                skew = Some(format!("A R_{i} != -q^-1 A"));
                break;
            }
        }
        out.push(CheckRecord::from_witness(
            format!("heckerep/N={n}/k={k}/skew-symmetry"),
            "skew-symmetrizer absorbs braidings: A R_i = R_i A = -q^-1 A",
            skew,
        ));

        let id = format!("heckerep/N={n}/k={k}/idempotents");
        let anchor = "Young idempotents are orthogonal and sum to the identity";
        match idempotent_family(r, k) {
            Ok(family) => {
                let mut sum = TensorOperator::zero(n, k);
                let mut w = None;
                for (x, (tx, px)) in family.iter().enumerate() {
                    sum = sum.add(px);
                    for (ty, py) in family.iter().skip(x + 1) {
                        if w.is_none() && !px.mul(py).is_zero() {
                            w = Some(format!("P[{}] P[{}] != 0", tableau_label(tx), tableau_label(ty)));
                        }
                    }
                }
                if w.is_none() && sum != TensorOperator::identity(n, k) {
                    w = Some(String::from("sum of idempotents != I"));
                }
                out.push(CheckRecord::from_witness(id, anchor, w).with_value("count", family.len()));
            }
            Err(e) => out.push(CheckRecord::fail(id, anchor, e.to_string())),
        }
    }
    let top = skew_symmetrizer(r, n).rank();
    let beyond = skew_symmetrizer(r, n + 1);
    out.push(
        CheckRecord::from_witness(
            format!("heckerep/N={n}/bi-rank"),
            "bi-rank (N|0): rank A^(N) = 1 and A^(N+1) = 0",
            witness(top == 1 && beyond.is_zero(), || {
                format!("rank A^(N) = {top}, A^(N+1) zero: {}", beyond.is_zero())
            }),
        )
        .with_value("rank", top),
    );
    out
}

/// Ranks of the Young idempotents at `q = 1` against Weyl dimensions. The
/// idempotents are built over `Q(q)` and evaluated, since their defining
/// denominators vanish at `q = 1`.
pub fn weyl_rank_checks(n: usize, k_max: usize) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let one = crate::field::Rat::from_i64(1);
    let r = match Braiding::standard_hecke(n, Scalar::q()) {
        Ok(r) => r,
        Err(e) => {
            return alloc::vec![CheckRecord::fail(
                format!("heckerep/N={n}/weyl"),
                "Weyl ranks",
                e.to_string()
            )]
        }
    };
    for k in 1..=k_max {
        let jm = jucys_murphy(&r, k);
        for lambda in Partition::all(k) {
            if lambda.len() > n {
                continue;
            }
            let expected = lambda.weyl_dimension(n);
            let id = format!("heckerep/N={n}/lambda={lambda}/weyl-rank");
            let anchor = "projector rank at q = 1 equals the Weyl dimension";
            let mut w = None;
            for t in standard_tableaux(&lambda) {
                let rank = young_idempotent_with(&r, &t, &jm)
                    .map_err(|e| e.to_string())
                    .and_then(|p| p.try_map(|s| s.evaluate(&one)).map_err(|e| e.to_string()))
                    .map(|p| p.rank() as u64);
                match rank {
                    Ok(x) if x == expected => {}
                    Ok(x) => w = Some(format!("{}: rank {x}", tableau_label(&t))),
                    Err(e) => w = Some(e),
                }
                if w.is_some() {
                    break;
                }
            }
            out.push(CheckRecord::from_witness(id, anchor, w).with_value("dimension", expected));
        }
    }
    out
}

/// For every kind of double: the permutation rule preserves both ideals and
/// the counit kills the relations of `A`.
pub fn doubles_checks<F: Field>(r: &Braiding<F>, bound: usize) -> Vec<CheckRecord> {
    let n = r.n();
    DoubleKind::ALL
        .iter()
        .map(|&kind| {
            let id = format!("doubles/N={n}/{}", kind.name());
            let anchor = "permutation relations define a double: ideals preserved, counit well defined";
            let res = make_double(kind, r).and_then(|d| {
                let red = d.reducers(bound, bound);
                d.check_ideal_compatibility(&red)?;
                d.check_counit()
            });
            CheckRecord::from_result(id, anchor, unit(res))
        })
        .collect()
}

/// `rtrace_(k+1) J_(k+1)^-1` acts on `Im P_T` by the Tr_R L character, for
/// every `λ ⊢ k` with `k ≤ k_max` (or a single `λ`).
pub fn spectrum_checks<F: Field>(r: &Braiding<F>, k_max: usize, only: Option<&Partition>) -> Vec<CheckRecord> {
    let n = r.n();
    let mut out = Vec::new();
    let c = match r.rtrace_form() {
        Ok(c) => c,
        Err(e) => {
            return alloc::vec![CheckRecord::fail(
                format!("spectrum/N={n}"),
                "R-trace form",
                e.to_string()
            )]
        }
    };
    let ks: Vec<usize> = match only {
        Some(l) => alloc::vec![l.weight()],
        None => (1..=k_max).collect(),
    };
    for k in ks {
        let o = match trace_action_operator(r, &c, k) {
            Ok(o) => o,
            Err(e) => {
                out.push(CheckRecord::fail(
                    format!("spectrum/N={n}/k={k}"),
                    "trace action operator",
                    e.to_string(),
                ));
                continue;
            }
        };
        let jm = jucys_murphy(r, k);
        for lambda in Partition::all(k) {
            if lambda.len() > n || only.is_some_and(|l| *l != lambda) {
                continue;
            }
            let id = format!("spectrum/N={n}/lambda={lambda}");
            let anchor = "Tr_R L acts on the Young module of lambda by its spectral character";
            let chi = match spectral_character(&lambda, n, r.q()) {
                Ok(chi) => chi,
                Err(e) => {
                    out.push(CheckRecord::fail(id, anchor, e.to_string()));
                    continue;
                }
            };
            let mut w = None;
            for t in standard_tableaux(&lambda) {
                let res = young_idempotent_with(r, &t, &jm);
                w = match res {
                    Ok(p) => check_operator_eigenvalue(&o, &p, &chi.trl).map(|s| format!("{}: {s}", tableau_label(&t))),
                    Err(e) => Some(e.to_string()),
                };
                if w.is_some() {
                    break;
                }
            }
            out.push(CheckRecord::from_witness(id, anchor, w).with_value("chi", &chi.trl));
        }
    }
    out
}

/// Character-level consistency of the quantum eigenvalues for `λ ⊢ k ≤ k_max`
/// and, for `k ≤ word_k`, the action of `e_2(L)` and `Tr_R L^2` on Young
/// projected monomials in the left double. All records are conjectural.
pub fn conjecture_checks<F: Field>(r: &Braiding<F>, k_max: usize, word_k: usize) -> Vec<CheckRecord> {
    let n = r.n();
    let mut out = Vec::new();
    for k in 1..=k_max {
        for lambda in Partition::all(k) {
            if lambda.len() > n {
                continue;
            }
            let id = format!("conjecture/N={n}/lambda={lambda}/characters");
            let anchor = "quantum eigenvalues: e1 matches Tr_R L, Vieta and shift relations";
            let rec = match spectral_character(&lambda, n, r.q()) {
                Ok(chi) => {
                    let w = if !chi.check_e1_consistency() {
                        Some(String::from("e1 differs from chi(TrL)"))
                    } else if !chi.check_vieta() {
                        Some(String::from("Vieta relations fail"))
                    } else if !chi.check_mu_shift() {
                        Some(String::from("mu shift relation fails"))
                    } else {
                        None
                    };
                    CheckRecord::from_witness(id, anchor, w).with_value("e2", chi.elementary(2))
                }
                Err(e) => CheckRecord::fail(id, anchor, e.to_string()),
            };
            out.push(rec.conjectural());
        }
    }
    if word_k == 0 {
        return out;
    }
    let setup = r
        .rtrace_form()
        .and_then(|c| make_double(DoubleKind::Left, r).map(|d| (c, d)));
    let (c, d) = match setup {
        Ok(x) => x,
        Err(e) => {
            out.push(CheckRecord::fail(format!("conjecture/N={n}/words"), "left double", e.to_string()).conjectural());
            return out;
        }
    };
    let red = d.reducers(2, word_k);
    for element in [SpectralElement::E2, SpectralElement::PowerSum(2)] {
        let a = element.element(r, &c);
        for k in 2..=word_k {
            let jm = jucys_murphy(r, k);
            for lambda in Partition::all(k) {
                if lambda.len() > n {
                    continue;
                }
                let id = format!("conjecture/N={n}/lambda={lambda}/{}", element.name());
                let anchor = "central element acts on Young-projected monomials by its spectral character";
                let rec = match spectral_character(&lambda, n, r.q()) {
                    Ok(chi) => {
                        let value = element.character(&chi);
                        let mut w = None;
                        for t in standard_tableaux(&lambda) {
                            let res = young_idempotent_with(r, &t, &jm)
                                .and_then(|p| check_eigenvalue_on_monomials(&d, &a, &value, &p, r, &red));
                            w = match res {
                                Ok(x) => x.map(|s| format!("{}: {s}", tableau_label(&t))),
                                Err(e) => Some(e.to_string()),
                            };
                            if w.is_some() {
                                break;
                            }
                        }
                        CheckRecord::from_witness(id, anchor, w).with_value("chi", value)
                    }
                    Err(e) => CheckRecord::fail(id, anchor, e.to_string()),
                };
                out.push(rec.conjectural());
            }
        }
    }
    out
}

/// Every entry of the Cayley–Hamilton matrix lies in the RE ideal.
pub fn cayley_hamilton_checks<F: Field>(r: &Braiding<F>) -> Vec<CheckRecord> {
    let n = r.n();
    let red = Reducer::new(&Presentation::re(r, Tag::M), n);
    alloc::vec![CheckRecord::from_result(
        format!("cayley-hamilton/N={n}"),
        "quantum Cayley-Hamilton identity for the RE generating matrix",
        check_cayley_hamilton(r, &red),
    )]
}

/// The matrix Capelli identity for `k ≤ k_max` by normal forms in the
/// derivative double and by acting on monomials of degree `≤ degree`.
pub fn capelli_checks<F: Field>(r: &Braiding<F>, k_max: usize, degree: usize) -> Vec<CheckRecord> {
    let n = r.n();
    let d = match make_double(DoubleKind::Qpd, r) {
        Ok(d) => d,
        Err(e) => {
            return alloc::vec![CheckRecord::fail(
                format!("capelli/N={n}"),
                "derivative double",
                e.to_string()
            )]
        }
    };
    let red = d.reducers(k_max.max(1), k_max.max(degree));
    let anchor = "matrix Capelli identity";
    let mut out = Vec::new();
    for k in 1..=k_max {
        out.push(CheckRecord::from_result(
            format!("capelli/N={n}/k={k}/words"),
            anchor,
            check_capelli_words(&d, r, k, CopyVariant::Over, false, &red),
        ));
        out.push(CheckRecord::from_result(
            format!("capelli/N={n}/k={k}/operators"),
            anchor,
            check_capelli_operators(&d, r, k, CopyVariant::Over, false, degree, &red),
        ));
    }
    out
}

/// The determinant Capelli identity.
pub fn det_capelli_checks<F: Field>(r: &Braiding<F>) -> Vec<CheckRecord> {
    let n = r.n();
    let res = make_double(DoubleKind::Qpd, r).and_then(|d| {
        let red = d.reducers(n, n);
        check_det_capelli(&d, r, CopyVariant::Over, &red)
    });
    alloc::vec![CheckRecord::from_result(
        format!("det-capelli/N={n}"),
        "determinant Capelli identity",
        res
    )]
}

/// Power sums commute with the adjoint fields and are annihilated by their
/// action; the action of every field descends to `Tr_R M^k = α`.
pub fn adjoint_checks<F: Field>(r: &Braiding<F>, k_max: usize) -> Vec<CheckRecord> {
    let n = r.n();
    let setup = r
        .rtrace_form()
        .and_then(|c| make_double(DoubleKind::AdjMod, r).map(|d| (c, d)));
    let (c, d) = match setup {
        Ok(x) => x,
        Err(e) => {
            return alloc::vec![CheckRecord::fail(
                format!("adjoint/N={n}"),
                "adjoint double",
                e.to_string()
            )]
        }
    };
    let red = d.reducers(1, k_max);
    let mut out = Vec::new();
    for k in 1..=k_max {
        out.push(CheckRecord::from_result(
            format!("adjoint/N={n}/k={k}/commutation"),
            "adjoint fields commute with Tr_R M^k",
            check_adjoint_commutation(&d, r, k, &red),
        ));
        out.push(CheckRecord::from_result(
            format!("adjoint/N={n}/k={k}/annihilation"),
            "adjoint fields annihilate Tr_R M^k",
            check_adjoint_annihilation(&d, r, k, &red),
        ));
        let rel = power_sum(k, Tag::M, &c).sub(&NcElement::constant(F::from_i64(k as i64 + 2)));
        let mut w = None;
        for g in Gen::all(Tag::Lhat, n) {
            match red.b().is_zero_mod(&d.act(&NcElement::gen(g), &rel)) {
                Ok(true) => {}
                Ok(false) => w = Some(format!("{g} moves the orbit relation")),
                Err(e) => w = Some(e.to_string()),
            }
            if w.is_some() {
                break;
            }
        }
        out.push(CheckRecord::from_witness(
            format!("adjoint/N={n}/k={k}/descends"),
            "adjoint action descends to the quantum orbit",
            w,
        ));
    }
    out
}

/// The orbit quotient `Tr_R M^k = α_k` has the classical filtered dimension
/// in degree `≤ degree`, and the sample eigenvalues are generic.
pub fn orbit_checks<F: Field>(r: &Braiding<F>, alphas: &[F], degree: usize) -> Vec<CheckRecord> {
    let n = r.n();
    let id = format!("orbits/N={n}/degree={degree}");
    let anchor = "quantum orbit has the classical dimension count";
    let dims = orbit_quotient(r, alphas).and_then(|o| {
        let p = Braiding::<F>::flip(n);
        let oc = orbit_quotient(&p, alphas)?;
        Ok((
            o.reducer(degree, 1).filtered_dimension(degree),
            oc.reducer(degree, 1).filtered_dimension(degree),
        ))
    });
    let mut out = Vec::new();
    match dims {
        Ok((quantum, classical)) => out.push(
            CheckRecord::from_witness(
                id,
                anchor,
                witness(quantum == classical, || {
                    format!("quantum {quantum} vs classical {classical}")
                }),
            )
            .with_value("dimension", quantum),
        ),
        Err(e) => out.push(CheckRecord::fail(id, anchor, e.to_string())),
    }
    let mu: Vec<F> = (0..n).map(|i| F::from_i64(i as i64 + 2)).collect();
    out.push(CheckRecord::from_witness(
        format!("orbits/N={n}/genericity"),
        "sample eigenvalues satisfy mu_i != q^2 mu_j",
        witness(genericity(&mu, r.q()), || String::from("eigenvalues are not generic")),
    ));
    out
}

fn classical_derivative<F: Field>(d: Derivative, m: crate::u2h::Mono) -> Pbw<F> {
    use crate::u2h::Mono;
    let (e, lowered) = match d {
        Derivative::X if m.x > 0 => (m.x, Mono { x: m.x - 1, ..m }),
        Derivative::Y if m.y > 0 => (m.y, Mono { y: m.y - 1, ..m }),
        Derivative::Z if m.z > 0 => (m.z, Mono { z: m.z - 1, ..m }),
        Derivative::T if m.t > 0 => (m.t, Mono { t: m.t - 1, ..m }),
        _ => return Pbw::zero(),
    };
    Pbw::term(lowered, F::from_i64(e as i64))
}

/// The derivative calculus on `U(u(2)_h)`: commutativity to `degree`,
/// multiplicativity on generator pairs and on `pairs`, the bracket
/// representation, the radius identities.
pub fn u2h_checks<F: Field>(u: &U2h<F>, degree: u32, pairs: &[(Pbw<F>, Pbw<F>)]) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let gens = [Pbw::x(), Pbw::y(), Pbw::z(), Pbw::t()];

    let mut w: Result<Option<String>, Error> = Ok(None);
    'c: for m in U2h::<F>::monomials(degree) {
        let a = Pbw::mono(m);
        for d1 in Derivative::ALL {
            for d2 in Derivative::ALL {
                w = u.check_commuting(d1, d2, &a);
                if !matches!(w, Ok(None)) {
                    break 'c;
                }
            }
        }
    }
    out.push(CheckRecord::from_result(
        format!("u2h/degree={degree}/commuting"),
        "quantum derivatives commute",
        w,
    ));

    let mut w: Result<Option<String>, Error> = Ok(None);
    'g: for a in &gens {
        for b in &gens {
            w = u.check_homomorphism(a, b);
            if !matches!(w, Ok(None)) {
                break 'g;
            }
        }
    }
    out.push(CheckRecord::from_result(
        "u2h/multiplicative/generators",
        "derivative matrix is multiplicative",
        w,
    ));

    let mut w: Result<Option<String>, Error> = Ok(None);
    for (a, b) in pairs {
        w = u.check_homomorphism(a, b);
        if !matches!(w, Ok(None)) {
            break;
        }
    }
    out.push(
        CheckRecord::from_result("u2h/multiplicative/random", "derivative matrix is multiplicative", w)
            .with_value("pairs", pairs.len()),
    );

    let (x, y, z) = (Pbw::x(), Pbw::y(), Pbw::z());
    for (name, a, b, c) in [("xy", &x, &y, &z), ("yz", &y, &z, &x), ("zx", &z, &x, &y)] {
        out.push(CheckRecord::from_result(
            format!("u2h/bracket/{name}"),
            "derivative matrices represent the u(2)_h brackets",
            u.check_bracket(a, b, c),
        ));
    }
    out.push(CheckRecord::from_result(
        "u2h/radius/square",
        "quantum radius: D(r)^2 = D(r^2)",
        u.check_radius_square(),
    ));

    let rinv = Pbw::radius_power(-1);
    let half = u.h().div(&F::from_i64(2)).expect("2 is invertible");
    let radius = Pbw::radius_power(1);
    let mut w: Result<Option<String>, Error> = Ok(None);
    let t_ok = u
        .apply_classical_t(&radius)
        .map(|v| u.equal(&v, &rinv.scale(&half.neg())));
    if !matches!(t_ok, Ok(true)) {
        w = t_ok.map(|_| Some(String::from("d_t r")));
    }
    for (d, g) in [(Derivative::X, &x), (Derivative::Y, &y), (Derivative::Z, &z)] {
        if !matches!(w, Ok(None)) {
            break;
        }
        let ok = u.apply(d, &radius).map(|v| u.equal(&v, &u.mul(g, &rinv)));
        if !matches!(ok, Ok(true)) {
            w = ok.map(|_| Some(format!("{} r", d.name())));
        }
    }
    out.push(CheckRecord::from_result(
        "u2h/radius/actions",
        "derivatives of the quantum radius",
        w,
    ));
    out
}

/// At `h = 0` every derivative of a degree-`≤ degree` monomial is classical.
/// Uses the symbolic calculus over `Q(h)`.
pub fn u2h_classical_limit(degree: u32) -> CheckRecord {
    let id = format!("u2h/degree={degree}/classical-limit");
    let anchor = "classical limit h -> 0 gives ordinary derivatives";
    let u = match U2h::new(Scalar::h()) {
        Ok(u) => u,
        Err(e) => return CheckRecord::fail(id, anchor, e.to_string()),
    };
    let zero = crate::field::Rat::from_i64(0);
    for m in U2h::<Scalar>::monomials(degree) {
        let a = Pbw::mono(m);
        for d in Derivative::ALL {
            let v = match d {
                Derivative::T => u.apply_classical_t(&a),
                _ => u.apply(d, &a),
            };
            let at_zero = v.and_then(|v| v.try_map_coeffs(|c| c.evaluate(&zero)));
            match at_zero {
                Ok(p) if p == classical_derivative(d, m) => {}
                Ok(p) => return CheckRecord::fail(id, anchor, format!("{} on {a} -> {p}", d.name())),
                Err(e) => return CheckRecord::fail(id, anchor, e.to_string()),
            }
        }
    }
    CheckRecord::pass(id, anchor)
}
