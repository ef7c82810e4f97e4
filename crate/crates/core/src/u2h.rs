//! Quantum partial derivatives on `U(u(2)_h)` and its extension by the
//! quantum radius `r̂`.
//!
//! Elements are PBW combinations of `x^a y^b z^c t^d r̂^e` with the order
//! `x < y < z < t < r̂`. The brackets are `[x, y] = h z`, `[y, z] = h x`,
//! `[z, x] = h y`; `t` and `r̂` are central and `r̂^2 = x^2 + y^2 + z^2 - h^2/4`.
//! The imaginary unit never appears: only `ĥ^2 = -h^2/4` and `iĥ = h/2` enter.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::field::Field;

/// `x^x y^y z^z t^t r̂^r`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mono {
    pub x: u32,
    pub y: u32,
    pub z: u32,
    pub t: u32,
    pub r: i32,
}

impl Mono {
    pub const ONE: Mono = Mono {
        x: 0,
        y: 0,
        z: 0,
        t: 0,
        r: 0,
    };

    pub fn new(x: u32, y: u32, z: u32, t: u32, r: i32) -> Self {
        Mono { x, y, z, t, r }
    }

    pub fn degree(&self) -> u32 {
        self.x + self.y + self.z + self.t
    }

    fn lie_part(&self) -> Mono {
        Mono { t: 0, r: 0, ..*self }
    }
}

/// The noncommuting generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Lie {
    X,
    Y,
    Z,
}

impl Lie {
    fn mono(self) -> Mono {
        match self {
            Lie::X => Mono::new(1, 0, 0, 0, 0),
            Lie::Y => Mono::new(0, 1, 0, 0, 0),
            Lie::Z => Mono::new(0, 0, 1, 0, 0),
        }
    }
}

/// A PBW combination with coefficients in `F`.
#[derive(Clone, PartialEq, Eq)]
pub struct Pbw<F> {
    terms: BTreeMap<Mono, F>,
}

impl<F: Field> Pbw<F> {
    pub fn zero() -> Self {
        Pbw { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::mono(Mono::ONE)
    }

    pub fn constant(c: F) -> Self {
        Self::term(Mono::ONE, c)
    }

    pub fn mono(m: Mono) -> Self {
        Self::term(m, F::one())
    }

    pub fn term(m: Mono, c: F) -> Self {
        let mut p = Self::zero();
        p.add_term(m, &c);
        p
    }

    pub fn x() -> Self {
        Self::mono(Mono::new(1, 0, 0, 0, 0))
    }

    pub fn y() -> Self {
        Self::mono(Mono::new(0, 1, 0, 0, 0))
    }

    pub fn z() -> Self {
        Self::mono(Mono::new(0, 0, 1, 0, 0))
    }

    pub fn t() -> Self {
        Self::mono(Mono::new(0, 0, 0, 1, 0))
    }

    /// `r̂^e` (unreduced).
    pub fn radius_power(e: i32) -> Self {
        Self::mono(Mono::new(0, 0, 0, 0, e))
    }

    pub fn terms(&self) -> &BTreeMap<Mono, F> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Mono, c: &F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                v.add_assign(c);
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c);
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&F::one().neg()))
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Pbw {
            terms: self.terms.iter().map(|(m, v)| (*m, v.mul(c))).collect(),
        }
    }

    /// Smallest power of `r̂` present (0 if none is negative).
    pub fn min_radius_power(&self) -> i32 {
        self.terms.keys().map(|m| m.r).min().unwrap_or(0).min(0)
    }

    /// Largest total degree in `x, y, z, t`.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Mono::degree).max().unwrap_or(0)
    }

    /// Multiply by a central `t^d r̂^e`.
    fn shift_central(&self, dt: u32, dr: i32) -> Self {
        Pbw {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    (
                        Mono {
                            t: m.t + dt,
                            r: m.r + dr,
                            ..*m
                        },
                        c.clone(),
                    )
                })
                .collect(),
        }
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> Pbw<G> {
        let mut out = Pbw::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, &f(c));
        }
        out
    }

    pub fn try_map_coeffs<G: Field, E>(&self, f: impl Fn(&F) -> Result<G, E>) -> Result<Pbw<G>, E> {
        let mut out = Pbw::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, &f(c)?);
        }
        Ok(out)
    }
}

impl<F: Field> fmt::Display for Pbw<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})")?;
            for (name, e) in [
                ("x", m.x as i32),
                ("y", m.y as i32),
                ("z", m.z as i32),
                ("t", m.t as i32),
                ("r", m.r),
            ] {
                match e {
                    0 => {}
                    1 => write!(f, "*{name}")?,
                    _ => write!(f, "*{name}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Pbw<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The four derivatives; `T` is the shifted derivative `∂̂_t = ∂_t + 2/h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Derivative {
    T,
    X,
    Y,
    Z,
}

impl Derivative {
    pub const ALL: [Derivative; 4] = [Derivative::T, Derivative::X, Derivative::Y, Derivative::Z];

    pub fn name(self) -> &'static str {
        match self {
            Derivative::T => "dhat_t",
            Derivative::X => "d_x",
            Derivative::Y => "d_y",
            Derivative::Z => "d_z",
        }
    }
}

/// A generator a derivative can be pushed through.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    X,
    Y,
    Z,
    T,
}

/// `∂ g - g ∂ = s (h/2) ∂'`: the sign `s` and the derivative `∂'`.
pub fn permutation_table(d: Derivative, g: Letter) -> (i32, Derivative) {
    use Derivative as D;
    use Letter as L;
    match (d, g) {
        (D::T, L::T) => (1, D::T),
        (D::T, L::X) => (-1, D::X),
        (D::T, L::Y) => (-1, D::Y),
        (D::T, L::Z) => (-1, D::Z),
        (D::X, L::T) => (1, D::X),
        (D::X, L::X) => (1, D::T),
        (D::X, L::Y) => (1, D::Z),
        (D::X, L::Z) => (-1, D::Y),
        (D::Y, L::T) => (1, D::Y),
        (D::Y, L::X) => (-1, D::Z),
        (D::Y, L::Y) => (1, D::T),
        (D::Y, L::Z) => (1, D::X),
        (D::Z, L::T) => (1, D::Z),
        (D::Z, L::X) => (1, D::Y),
        (D::Z, L::Y) => (-1, D::X),
        (D::Z, L::Z) => (1, D::T),
    }
}

/// The sign pattern of the `∂̂` matrix: entry `(i, j)` is `s · ∂`.
pub const DHAT_PATTERN: [[(i32, Derivative); 4]; 4] = {
    use Derivative as D;
    [
        [(1, D::T), (1, D::X), (1, D::Y), (1, D::Z)],
        [(-1, D::X), (1, D::T), (-1, D::Z), (1, D::Y)],
        [(-1, D::Y), (1, D::Z), (1, D::T), (-1, D::X)],
        [(-1, D::Z), (-1, D::Y), (1, D::X), (1, D::T)],
    ]
};

/// The sign pattern of the matrix `M` in `∂̂(r̂)`, entries in `x, y, z`.
const RADIUS_PATTERN: [[(i32, Option<Lie>); 4]; 4] = [
    [(0, None), (1, Some(Lie::X)), (1, Some(Lie::Y)), (1, Some(Lie::Z))],
    [(-1, Some(Lie::X)), (0, None), (-1, Some(Lie::Z)), (1, Some(Lie::Y))],
    [(-1, Some(Lie::Y)), (1, Some(Lie::Z)), (0, None), (-1, Some(Lie::X))],
    [(-1, Some(Lie::Z)), (-1, Some(Lie::Y)), (1, Some(Lie::X)), (0, None)],
];

/// A 4×4 matrix over the extended algebra.
pub type Mat4<F> = [[Pbw<F>; 4]; 4];

/// The calculus at a fixed value of `h` (symbolic or sampled).
#[derive(Clone, Debug)]
pub struct U2h<F> {
    h: F,
    half_h: F,
}

impl<F: Field> U2h<F> {
    pub fn new(h: F) -> Result<Self, Error> {
        if h.is_zero() {
            return Err(Error::BadConfig(String::from("h must be nonzero")));
        }
        let half_h = h.div(&F::from_i64(2)).expect("2 is invertible");
        Ok(U2h { h, half_h })
    }

    pub fn h(&self) -> &F {
        &self.h
    }

    /// `ĥ^2 = -h^2/4`.
    pub fn hhat_squared(&self) -> F {
        self.half_h.mul(&self.half_h).neg()
    }

    /// `x^2 + y^2 + z^2`.
    pub fn casimir(&self) -> Pbw<F> {
        let mut p = Pbw::zero();
        for m in [
            Mono::new(2, 0, 0, 0, 0),
            Mono::new(0, 2, 0, 0, 0),
            Mono::new(0, 0, 2, 0, 0),
        ] {
            p.add_term(m, &F::one());
        }
        p
    }

    /// `[a, b]` for `a > b`, written as an element.
    fn bracket_desc(&self, a: Lie, b: Lie) -> Pbw<F> {
        let h = &self.h;
        match (a, b) {
            (Lie::Y, Lie::X) => Pbw::z().scale(&h.neg()),
            (Lie::Z, Lie::Y) => Pbw::x().scale(&h.neg()),
            (Lie::Z, Lie::X) => Pbw::y().scale(h),
            _ => unreachable!("brackets are only needed for descending pairs"),
        }
    }

    /// PBW product of a Lie monomial (no `t`, `r̂`) and a generator.
    fn lie_mul_gen(&self, m: Mono, g: Lie) -> Pbw<F> {
        let last = if m.z > 0 {
            Some(Lie::Z)
        } else if m.y > 0 {
            Some(Lie::Y)
        } else if m.x > 0 {
            Some(Lie::X)
        } else {
            None
        };
        match last {
            Some(l) if l > g => {
                let mut rest = m;
                match l {
                    Lie::X => rest.x -= 1,
                    Lie::Y => rest.y -= 1,
                    Lie::Z => rest.z -= 1,
                }
                // m g = (m' g) l + m' [l, g]
                let left = self.mul_lie_right(&self.lie_mul_gen(rest, g), l);
                let br = self.mul(&Pbw::mono(rest), &self.bracket_desc(l, g));
                left.add(&br)
            }
            _ => {
                let gm = g.mono();
                Pbw::mono(Mono::new(m.x + gm.x, m.y + gm.y, m.z + gm.z, 0, 0))
            }
        }
    }

    fn mul_lie_right(&self, p: &Pbw<F>, g: Lie) -> Pbw<F> {
        let mut out = Pbw::zero();
        for (m, c) in p.terms() {
            let prod = self.lie_mul_gen(m.lie_part(), g).shift_central(m.t, m.r).scale(c);
            out = out.add(&prod);
        }
        out
    }

    /// `r̂^e ↦ r̂^{e-2} (x^2 + y^2 + z^2 - h^2/4)` until every exponent is
    /// at most 1.
    pub fn reduce(&self, p: &Pbw<F>) -> Pbw<F> {
        let mut out = Pbw::zero();
        let mut pending: Vec<(Mono, F)> = p.terms().iter().map(|(m, c)| (*m, c.clone())).collect();
        let square = self.casimir().add(&Pbw::constant(self.hhat_squared()));
        while let Some((m, c)) = pending.pop() {
            if m.r < 2 {
                out.add_term(m, &c);
                continue;
            }
            let base = Mono { r: m.r - 2, ..m };
            let expanded = self.mul_raw(&Pbw::mono(base), &square);
            for (m2, c2) in expanded.terms() {
                pending.push((*m2, c2.mul(&c)));
            }
        }
        out
    }

    fn mul_raw(&self, a: &Pbw<F>, b: &Pbw<F>) -> Pbw<F> {
        let mut out = Pbw::zero();
        for (mb, cb) in b.terms() {
            // Multiply a by the Lie part of mb letter by letter, then the central part.
            let mut cur = a.clone();
            for (g, k) in [(Lie::X, mb.x), (Lie::Y, mb.y), (Lie::Z, mb.z)] {
                for _ in 0..k {
                    cur = self.mul_lie_right(&cur, g);
                }
            }
            out = out.add(&cur.shift_central(mb.t, mb.r).scale(cb));
        }
        out
    }

    /// Product in normal form.
    pub fn mul(&self, a: &Pbw<F>, b: &Pbw<F>) -> Pbw<F> {
        self.reduce(&self.mul_raw(a, b))
    }

    pub fn pow(&self, a: &Pbw<F>, k: u32) -> Pbw<F> {
        let mut acc = Pbw::one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Equality in the extended algebra: both sides are multiplied by a
    /// power `r̂^{2m}` clearing negative exponents, then reduced.
    pub fn equal(&self, a: &Pbw<F>, b: &Pbw<F>) -> bool {
        let d = a.sub(b);
        let low = d.min_radius_power();
        let shift = if low < 0 { ((-low + 1) / 2) * 2 } else { 0 };
        self.reduce(&d.shift_central(0, shift)).is_zero()
    }

    /// `ε(∂̂_t) = 2/h`, all others zero.
    pub fn counit(&self, d: Derivative) -> F {
        match d {
            Derivative::T => F::from_i64(2).div(&self.h).expect("h is nonzero"),
            _ => F::zero(),
        }
    }

    /// Action on a monomial without `r̂`, pushing `∂` through the letters
    /// from the left with the permutation table.
    fn act_poly_mono(&self, d: Derivative, m: Mono) -> Pbw<F> {
        let (g, rest) = if m.x > 0 {
            (Letter::X, Mono { x: m.x - 1, ..m })
        } else if m.y > 0 {
            (Letter::Y, Mono { y: m.y - 1, ..m })
        } else if m.z > 0 {
            (Letter::Z, Mono { z: m.z - 1, ..m })
        } else if m.t > 0 {
            (Letter::T, Mono { t: m.t - 1, ..m })
        } else {
            return Pbw::constant(self.counit(d));
        };
        let gp = match g {
            Letter::X => Pbw::x(),
            Letter::Y => Pbw::y(),
            Letter::Z => Pbw::z(),
            Letter::T => Pbw::t(),
        };
        let (s, d2) = permutation_table(d, g);
        let first = self.mul(&gp, &self.act_poly_mono(d, rest));
        let second = self
            .act_poly_mono(d2, rest)
            .scale(&self.half_h.mul(&F::from_i64(s as i64)));
        first.add(&second)
    }

    /// `∂ ▷ a`. Polynomial parts use the permutation table; a factor `r̂`
    /// is handled through `∂̂(p r̂) = ∂̂(p) ∂̂(r̂)`. Negative powers of `r̂`
    /// in the input are rejected.
    pub fn apply(&self, d: Derivative, a: &Pbw<F>) -> Result<Pbw<F>, Error> {
        let a = self.reduce(a);
        let mut out = Pbw::zero();
        let mut with_radius = Pbw::zero();
        for (m, c) in a.terms() {
            match m.r {
                0 => out = out.add(&self.act_poly_mono(d, *m).scale(c)),
                1 => with_radius.add_term(Mono { r: 0, ..*m }, c),
                _ => {
                    return Err(Error::UnsupportedElement(format!(
                        "derivatives of r̂^{} are outside the supported domain",
                        m.r
                    )))
                }
            }
        }
        if !with_radius.is_zero() {
            let prod = self.mat_mul(&self.dhat_matrix(&with_radius)?, &self.dhat_radius());
            // First row of ∂̂(a) is (h/2)(∂̂_t a, ∂_x a, ∂_y a, ∂_z a).
            let col = match d {
                Derivative::T => 0,
                Derivative::X => 1,
                Derivative::Y => 2,
                Derivative::Z => 3,
            };
            let inv = self.half_h.inv().expect("h is nonzero");
            out = out.add(&prod[0][col].scale(&inv));
        }
        Ok(out)
    }

    /// The classical `t`-derivative `∂_t = ∂̂_t - 2/h`.
    pub fn apply_classical_t(&self, a: &Pbw<F>) -> Result<Pbw<F>, Error> {
        Ok(self
            .apply(Derivative::T, a)?
            .sub(&self.reduce(a).scale(&self.counit(Derivative::T))))
    }

    /// `∂̂(a) = (h/2) · [pattern applied to a]`.
    pub fn dhat_matrix(&self, a: &Pbw<F>) -> Result<Mat4<F>, Error> {
        let mut values = BTreeMap::new();
        for d in Derivative::ALL {
            values.insert(d, self.apply(d, a)?);
        }
        Ok(core::array::from_fn(|i| {
            core::array::from_fn(|j| {
                let (s, d) = DHAT_PATTERN[i][j];
                values[&d].scale(&self.half_h.mul(&F::from_i64(s as i64)))
            })
        }))
    }

    /// `∂̂(r̂) = ((r̂^2 + ĥ^2)/r̂) I + (iĥ/r̂) M`.
    pub fn dhat_radius(&self) -> Mat4<F> {
        let diag = Pbw::radius_power(1).add(&Pbw::term(Mono::new(0, 0, 0, 0, -1), self.hhat_squared()));
        core::array::from_fn(|i| {
            core::array::from_fn(|j| {
                if i == j {
                    return diag.clone();
                }
                let (s, g) = RADIUS_PATTERN[i][j];
                let g = g.expect("off-diagonal entries carry a generator");
                let m = Mono { r: -1, ..g.mono() };
                Pbw::term(m, self.half_h.mul(&F::from_i64(s as i64)))
            })
        })
    }

    pub fn mat_mul(&self, a: &Mat4<F>, b: &Mat4<F>) -> Mat4<F> {
        core::array::from_fn(|i| {
            core::array::from_fn(|j| {
                let mut acc = Pbw::zero();
                for k in 0..4 {
                    acc = acc.add(&self.mul(&a[i][k], &b[k][j]));
                }
                acc
            })
        })
    }

    /// First entry where two matrices differ in the extended algebra.
    pub fn mat_difference(&self, a: &Mat4<F>, b: &Mat4<F>) -> Option<(usize, usize, Pbw<F>)> {
        for i in 0..4 {
            for j in 0..4 {
                if !self.equal(&a[i][j], &b[i][j]) {
                    return Some((i, j, a[i][j].sub(&b[i][j])));
                }
            }
        }
        None
    }

    /// `∂̂(ab) = ∂̂(a) ∂̂(b)`; the witness names the first differing entry.
    pub fn check_homomorphism(&self, a: &Pbw<F>, b: &Pbw<F>) -> Result<Option<String>, Error> {
        let lhs = self.dhat_matrix(&self.mul(a, b))?;
        let rhs = self.mat_mul(&self.dhat_matrix(a)?, &self.dhat_matrix(b)?);
        Ok(self
            .mat_difference(&lhs, &rhs)
            .map(|(i, j, d)| format!("entry ({i}, {j}) for {a} · {b} differs by {d}")))
    }

    /// `∂̂(u)∂̂(v) - ∂̂(v)∂̂(u) = h ∂̂(w)` for the bracket `[u, v] = h w`.
    pub fn check_bracket(&self, u: &Pbw<F>, v: &Pbw<F>, w: &Pbw<F>) -> Result<Option<String>, Error> {
        let du = self.dhat_matrix(u)?;
        let dv = self.dhat_matrix(v)?;
        let uv = self.mat_mul(&du, &dv);
        let vu = self.mat_mul(&dv, &du);
        let comm: Mat4<F> = core::array::from_fn(|i| core::array::from_fn(|j| uv[i][j].sub(&vu[i][j])));
        let dw = self.dhat_matrix(w)?;
        let rhs: Mat4<F> = core::array::from_fn(|i| core::array::from_fn(|j| dw[i][j].scale(&self.h)));
        Ok(self
            .mat_difference(&comm, &rhs)
            .map(|(i, j, d)| format!("entry ({i}, {j}) differs by {d}")))
    }

    /// `∂̂(r̂)^2 = ∂̂(r̂^2)`, with `∂̂(r̂^2)` computed from the polynomial
    /// `x^2 + y^2 + z^2 + ĥ^2`.
    pub fn check_radius_square(&self) -> Result<Option<String>, Error> {
        let dr = self.dhat_radius();
        let lhs = self.mat_mul(&dr, &dr);
        let square = self.casimir().add(&Pbw::constant(self.hhat_squared()));
        let rhs = self.dhat_matrix(&square)?;
        Ok(self
            .mat_difference(&lhs, &rhs)
            .map(|(i, j, d)| format!("entry ({i}, {j}) differs by {d}")))
    }

    /// `∂ ∂' a = ∂' ∂ a`.
    pub fn check_commuting(&self, d1: Derivative, d2: Derivative, a: &Pbw<F>) -> Result<Option<String>, Error> {
        let lhs = self.apply(d1, &self.apply(d2, a)?)?;
        let rhs = self.apply(d2, &self.apply(d1, a)?)?;
        Ok((!self.equal(&lhs, &rhs)).then(|| format!("{} and {} disagree on {a}", d1.name(), d2.name())))
    }

    /// PBW monomials `x^a y^b z^c t^d` of total degree at most `deg`.
    pub fn monomials(deg: u32) -> Vec<Mono> {
        let mut out = Vec::new();
        for a in 0..=deg {
            for b in 0..=deg - a {
                for c in 0..=deg - a - b {
                    for d in 0..=deg - a - b - c {
                        out.push(Mono::new(a, b, c, d, 0));
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn calc() -> U2h<Scalar> {
        U2h::new(Scalar::h()).unwrap()
    }

    #[test]
    fn brackets_in_normal_form() {
        let u = calc();
        let h = Scalar::h();
        assert_eq!(
            u.mul(&Pbw::y(), &Pbw::x()),
            Pbw::mono(Mono::new(1, 1, 0, 0, 0)).sub(&Pbw::z().scale(&h))
        );
        assert_eq!(u.mul(&Pbw::t(), &Pbw::x()), Pbw::mono(Mono::new(1, 0, 0, 1, 0)));
        let r2 = u.mul(&Pbw::radius_power(1), &Pbw::radius_power(1));
        assert_eq!(r2, u.casimir().add(&Pbw::constant(u.hhat_squared())));
    }

    #[test]
    fn first_derivatives() {
        let u = calc();
        assert_eq!(u.apply(Derivative::X, &Pbw::x()).unwrap(), Pbw::one());
        assert!(u.apply(Derivative::X, &Pbw::y()).unwrap().is_zero());
        assert_eq!(u.apply_classical_t(&Pbw::t()).unwrap(), Pbw::one());
        assert_eq!(u.dhat_matrix(&Pbw::one()).unwrap(), u.dhat_matrix(&Pbw::one()).unwrap());
    }

    #[test]
    fn zero_h_is_rejected() {
        assert!(U2h::new(Scalar::zero()).is_err());
    }
}
