//! Exact rational functions in one formal parameter.
//!
//! A nonzero [`Scalar`] is stored as `p^shift * num(p) / den(p)` where `p` is
//! the parameter, `num` and `den` are integer polynomials with nonzero
//! constant terms, `gcd(num, den) = 1`, the integer contents of `num` and
//! `den` are coprime and `den` has a positive leading coefficient. The
//! representation is therefore unique and `==` is equality of rational
//! functions. Pulling powers of the parameter into `shift` keeps Laurent
//! polynomials (by far the common case) on a gcd-free fast path.

use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::field::{Field, Rat};
use crate::int::Int;
use crate::poly::IntPoly;

/// The formal parameter a [`Scalar`] is a function of.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Param {
    /// The Hecke deformation parameter.
    Q,
    /// The shift parameter of the `u(2)_h` calculus.
    H,
}

impl Param {
    pub fn name(self) -> &'static str {
        match self {
            Param::Q => "q",
            Param::H => "h",
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Scalar {
    param: Option<Param>,
    shift: i32,
    num: IntPoly,
    den: IntPoly,
}

fn merge(a: Option<Param>, b: Option<Param>) -> Option<Param> {
    match (a, b) {
        (None, p) | (p, None) => p,
        (Some(x), Some(y)) => {
            assert!(
                x == y,
                "mixed-parameter arithmetic ({} with {}) is not supported",
                x.name(),
                y.name()
            );
            Some(x)
        }
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            param: None,
            shift: 0,
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        Scalar::from_i64(1)
    }

    pub fn from_i64(v: i64) -> Self {
        Scalar::from_int(Int::from(v))
    }

    pub fn from_int(v: Int) -> Self {
        Scalar::from_parts(None, 0, IntPoly::constant(v), IntPoly::one())
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Scalar::from_parts(
            None,
            0,
            IntPoly::constant(Int::from(n)),
            IntPoly::constant(Int::from(d)),
        )
    }

    pub fn from_rat(r: &Rat) -> Self {
        Scalar::from_parts(
            None,
            0,
            IntPoly::constant(Int::from_big(r.numer().clone())),
            IntPoly::constant(Int::from_big(r.denom().clone())),
        )
    }

    /// The parameter itself.
    pub fn param(p: Param) -> Self {
        Scalar::monomial(p, 1, 1)
    }

    /// Shorthand for `Scalar::param(Param::Q)`.
    pub fn q() -> Self {
        Scalar::param(Param::Q)
    }

    /// Shorthand for `Scalar::param(Param::H)`.
    pub fn h() -> Self {
        Scalar::param(Param::H)
    }

    /// `c * p^e`.
    pub fn monomial(p: Param, c: i64, e: i32) -> Self {
        Scalar::from_parts(Some(p), e, IntPoly::constant(Int::from(c)), IntPoly::one())
    }

    /// The Laurent polynomial `sum_k coeffs[k] * p^(low + k)`.
    pub fn laurent(p: Param, low: i32, coeffs: &[i64]) -> Self {
        Scalar::from_parts(Some(p), low, IntPoly::from_i64(coeffs), IntPoly::one())
    }

    /// Build and canonicalize `p^shift * num / den`.
    pub fn from_parts(param: Option<Param>, shift: i32, num: IntPoly, den: IntPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        Scalar::canonical(param, shift, num, den, false)
    }

    fn canonical(param: Option<Param>, mut shift: i32, mut num: IntPoly, mut den: IntPoly, coprime: bool) -> Self {
        if num.is_zero() {
            return Scalar::zero();
        }
        let v = num.valuation();
        if v > 0 {
            num = num.shift_down(v);
            shift += v as i32;
        }
        let v = den.valuation();
        if v > 0 {
            den = den.shift_down(v);
            shift -= v as i32;
        }
        if !coprime && !den.is_constant() && !num.is_constant() {
            let g = num.gcd(&den);
            if !g.is_one() {
                num = num.div_exact(&g).expect("gcd divides numerator");
                den = den.div_exact(&g).expect("gcd divides denominator");
            }
        }
        if !den.is_one() {
            let mut c = num.content().gcd(&den.content());
            if den.lc().is_negative() {
                c = c.neg();
            }
            if !c.is_one() {
                num = num.div_int(&c);
                den = den.div_int(&c);
            }
        }
        let param = if shift == 0 && num.is_constant() && den.is_constant() {
            None
        } else {
            param
        };
        Scalar { param, shift, num, den }
    }

    pub fn parameter(&self) -> Option<Param> {
        self.param
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the value does not depend on the parameter.
    pub fn is_constant(&self) -> bool {
        self.param.is_none()
    }

    /// True when the denominator is a monomial in the parameter.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// The constant value, if the scalar is parameter-free.
    pub fn as_rat(&self) -> Option<Rat> {
        if !self.is_constant() {
            return None;
        }
        if self.is_zero() {
            return Some(Rat::zero());
        }
        Some(Rat(BigRational::new(self.num.lc().to_big(), self.den.lc().to_big())))
    }

    /// Numerator and denominator as ordinary polynomials with the parameter
    /// power folded in.
    pub fn numer_denom(&self) -> (IntPoly, IntPoly) {
        if self.shift >= 0 {
            (self.num.shift_up(self.shift as usize), self.den.clone())
        } else {
            (self.num.clone(), self.den.shift_up((-self.shift) as usize))
        }
    }

    /// Coefficients of a Laurent polynomial as `(lowest exponent, coeffs)`.
    pub fn laurent_coeffs(&self) -> Option<(i32, alloc::vec::Vec<Int>)> {
        if !self.den.is_constant() {
            return None;
        }
        let c = self.den.lc();
        if !self.num.coeffs().iter().all(|a| a.is_divisible_by(&c)) {
            return None;
        }
        Some((self.shift, self.num.div_int(&c).coeffs().to_vec()))
    }

    /// Exact value at `p = value`.
    pub fn evaluate(&self, value: &Rat) -> Result<Rat, Error> {
        if self.is_zero() {
            return Ok(Rat::zero());
        }
        let x = &value.0;
        let d = self.den.eval(x);
        if d.is_zero() || (x.is_zero() && self.shift < 0) {
            return Err(Error::PoleAtPoint(value.clone()));
        }
        let n = self.num.eval(x);
        let mut r = n / d;
        if self.shift != 0 {
            let mut p = BigRational::one();
            for _ in 0..self.shift.unsigned_abs() {
                p *= x;
            }
            if self.shift > 0 {
                r *= p;
            } else {
                r /= p;
            }
        }
        Ok(Rat(r))
    }

    /// Substitute the parameter by another scalar (used for `q -> 1/q`
    /// and similar reparametrizations).
    pub fn substitute(&self, value: &Scalar) -> Option<Scalar> {
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        let ev = |p: &IntPoly| {
            let mut acc = Scalar::zero();
            for c in p.coeffs().iter().rev() {
                acc = acc.mul(value).add(&Scalar::from_int(c.clone()));
            }
            acc
        };
        let n = ev(&self.num);
        let d = ev(&self.den);
        let s = value.pow(self.shift)?;
        n.mul(&s).div(&d)
    }

    fn add_impl(&self, o: &Scalar, negate: bool) -> Scalar {
        if o.is_zero() {
            return self.clone();
        }
        let onum = if negate { o.num.neg() } else { o.num.clone() };
        if self.is_zero() {
            return Scalar { num: onum, ..o.clone() };
        }
        let param = merge(self.param, o.param);
        let s = self.shift.min(o.shift);
        let na = self.num.shift_up((self.shift - s) as usize);
        let nb = onum.shift_up((o.shift - s) as usize);
        if self.den == o.den {
            let num = na.add(&nb);
            let coprime = self.den.is_one();
            return Scalar::canonical(param, s, num, self.den.clone(), coprime);
        }
        let g = if self.den.is_constant() || o.den.is_constant() {
            IntPoly::one()
        } else {
            self.den.gcd(&o.den)
        };
        let da = self.den.div_exact(&g).expect("gcd divides");
        let db = o.den.div_exact(&g).expect("gcd divides");
        let num = na.mul(&db).add(&nb.mul(&da));
        let den = self.den.mul(&db);
        Scalar::canonical(param, s, num, den, false)
    }
}

impl Field for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn from_i64(v: i64) -> Self {
        Scalar::from_i64(v)
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.param.is_none() && self.num.is_one() && self.den.is_one()
    }

    fn add(&self, o: &Self) -> Self {
        self.add_impl(o, false)
    }

    fn sub(&self, o: &Self) -> Self {
        self.add_impl(o, true)
    }

    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        let param = merge(self.param, o.param);
        let shift = self.shift + o.shift;
        if self.den.is_one() && o.den.is_one() {
            let num = self.num.mul(&o.num);
            return Scalar::canonical(param, shift, num, IntPoly::one(), true);
        }
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let na = self.num.div_exact(&g1).expect("gcd divides");
        let db = o.den.div_exact(&g1).expect("gcd divides");
        let nb = o.num.div_exact(&g2).expect("gcd divides");
        let da = self.den.div_exact(&g2).expect("gcd divides");
        Scalar::canonical(param, shift, na.mul(&nb), da.mul(&db), true)
    }

    fn neg(&self) -> Self {
        Scalar {
            num: self.num.neg(),
            ..self.clone()
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let (num, den) = if self.num.lc().is_negative() {
            (self.den.neg(), self.num.neg())
        } else {
            (self.den.clone(), self.num.clone())
        };
        Some(Scalar {
            param: self.param,
            shift: -self.shift,
            num,
            den,
        })
    }
}

impl fmt::Display for Scalar {
    /// Canonical text form: a reduced fraction of expanded polynomials,
    /// e.g. `(q^2+1)/(q^5)`; parameter-free or polynomial values print
    /// without the fraction.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = self.param.map_or("q", Param::name);
        let (n, d) = self.numer_denom();
        if d.is_one() {
            return n.write_with(var, f);
        }
        f.write_str("(")?;
        n.write_with(var, f)?;
        f.write_str(")/(")?;
        d.write_with(var, f)?;
        f.write_str(")")
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The `q`-integer `(q^k - q^-k) / (q - q^-1)`.
pub fn qint(k: u32, p: Param) -> Scalar {
    if k == 0 {
        return Scalar::zero();
    }
    // q^(1-k) * (1 + q^2 + ... + q^(2k-2))
    let mut coeffs = alloc::vec![0i64; 2 * k as usize - 1];
    for i in 0..k as usize {
        coeffs[2 * i] = 1;
    }
    Scalar::laurent(p, 1 - k as i32, &coeffs)
}

/// The same `q`-integer evaluated in an arbitrary field at `q = value`.
pub fn qint_in<F: Field>(k: u32, q: &F) -> F {
    let mut acc = F::zero();
    let q2 = q.mul(q);
    let mut term = q.pow(1 - k as i32).expect("q is invertible");
    for _ in 0..k {
        acc = acc.add(&term);
        term = term.mul(&q2);
    }
    acc
}

/// True iff `value^(2k) = 1` for some `2 <= k <= bound`; such points make
/// `q`-integers vanish and are rejected as sample points.
pub fn is_root_of_unity_risk(value: &Rat, bound: u32) -> bool {
    let sq = value.mul(value);
    let mut p = sq.clone();
    for k in 1..=bound.max(2) {
        if k >= 2 && p.is_one() {
            return true;
        }
        p = p.mul(&sq);
    }
    false
}

/// Value of an integer as a big rational (helper for sample points).
pub fn rat_from_big(n: BigInt, d: BigInt) -> Rat {
    Rat(BigRational::new(n, d))
}
