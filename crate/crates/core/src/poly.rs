//! Dense univariate polynomials over `Int`.
//!
//! Coefficients are stored in ascending degree order with no trailing zeros,
//! so the zero polynomial is the empty vector.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::int::Int;

#[derive(Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<Int>,
}

impl IntPoly {
    fn trim(mut self) -> Self {
        while self.coeffs.last().is_some_and(Int::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(Int::one())
    }

    pub fn constant(c: Int) -> Self {
        IntPoly { coeffs: vec![c] }.trim()
    }

    pub fn monomial(c: Int, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Int::zero(); deg + 1];
        coeffs[deg] = c;
        IntPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<Int>) -> Self {
        IntPoly { coeffs }.trim()
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lc(&self) -> Int {
        self.coeffs.last().cloned().unwrap_or_else(Int::zero)
    }

    pub fn coeff(&self, i: usize) -> Int {
        self.coeffs.get(i).cloned().unwrap_or_else(Int::zero)
    }

    pub fn neg(&self) -> Self {
        IntPoly {
            coeffs: self.coeffs.iter().map(Int::neg).collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(match (self.coeffs.get(i), o.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        IntPoly { coeffs: out }.trim()
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(match (self.coeffs.get(i), o.coeffs.get(i)) {
                (Some(a), Some(b)) => a.sub(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.neg(),
                (None, None) => unreachable!(),
            });
        }
        IntPoly { coeffs: out }.trim()
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if o.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return o.clone();
        }
        let mut out = vec![Int::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        IntPoly { coeffs: out }.trim()
    }

    pub fn scale(&self, c: &Int) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Multiply by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![Int::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Number of vanishing low-order coefficients (the `x`-adic valuation).
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divide by `x^k`; the caller guarantees `k <= valuation()`.
    pub fn shift_down(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    pub fn content(&self) -> Int {
        let mut g = Int::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn div_int(&self, c: &Int) -> Self {
        if c.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a.div_exact(c)).collect(),
        }
    }

    /// Primitive part with a positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = c.neg();
        }
        self.div_int(&c)
    }

    /// Pseudo-remainder of `self` by `d` (nonzero).
    fn prem(&self, d: &Self) -> Self {
        let mut r = self.clone();
        let dd = d.degree();
        let lcd = d.lc();
        while !r.is_zero() && r.degree() >= dd {
            let shift = r.degree() - dd;
            let lcr = r.lc();
            // r <- lcd*r - lcr*x^shift*d
            let g = lcd.gcd(&lcr);
            let a = lcd.div_exact(&g);
            let b = lcr.div_exact(&g);
            r = r.scale(&a).sub(&d.scale(&b).shift_up(shift));
        }
        r
    }

    /// Exact quotient `self / d` when `d` divides `self` over `Z`; `None`
    /// otherwise.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "polynomial division by zero");
        if d.is_one() {
            return Some(self.clone());
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.is_constant() {
            let c = d.lc();
            if self.coeffs.iter().all(|a| a.is_divisible_by(&c)) {
                return Some(self.div_int(&c));
            }
            return None;
        }
        if self.degree() < d.degree() {
            return None;
        }
        let dd = d.degree();
        let lcd = d.lc();
        let mut r = self.coeffs.clone();
        let mut q = vec![Int::zero(); self.degree() - dd + 1];
        for k in (0..q.len()).rev() {
            let top = &r[k + dd];
            if top.is_zero() {
                continue;
            }
            if !top.is_divisible_by(&lcd) {
                return None;
            }
            let c = top.div_exact(&lcd);
            for (j, dj) in d.coeffs.iter().enumerate() {
                if !dj.is_zero() {
                    r[k + j] = r[k + j].sub(&c.mul(dj));
                }
            }
            q[k] = c;
        }
        if r.iter().all(Int::is_zero) {
            Some(IntPoly { coeffs: q }.trim())
        } else {
            None
        }
    }

    /// Primitive greatest common divisor with positive leading coefficient.
    /// `gcd(0, 0)` is zero.
    pub fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.primitive();
        }
        if o.is_zero() {
            return self.primitive();
        }
        if self.is_constant() || o.is_constant() {
            return Self::one();
        }
        let (mut a, mut b) = if self.degree() >= o.degree() {
            (self.primitive(), o.primitive())
        } else {
            (o.primitive(), self.primitive())
        };
        if a.div_exact(&b).is_some() {
            return b;
        }
        loop {
            let r = a.prem(&b);
            if r.is_zero() {
                return b;
            }
            if r.is_constant() {
                return Self::one();
            }
            a = b;
            b = r.primitive();
        }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.to_big());
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_big();
        }
        acc
    }

    /// Human-readable form in descending powers, e.g. `-2*q^3+q-1`.
    pub fn write_with(&self, var: &str, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if neg {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match k {
                0 => {}
                1 => f.write_str(var)?,
                _ => write!(f, "{var}^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with("x", f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn gcd_of_products() {
        // (x+1)(x-2) and (x+1)(3x+5)
        let a = p(&[1, 1]).mul(&p(&[-2, 1]));
        let b = p(&[1, 1]).mul(&p(&[5, 3]));
        assert_eq!(a.gcd(&b), p(&[1, 1]));
        assert_eq!(p(&[2, 4]).gcd(&p(&[6, 12])), p(&[1, 2]));
        assert_eq!(p(&[1, 0, 1]).gcd(&p(&[1, 1])), IntPoly::one());
    }

    #[test]
    fn exact_division() {
        let a = p(&[1, 1]).mul(&p(&[-2, 3])).mul(&p(&[0, 0, 5]));
        assert_eq!(a.div_exact(&p(&[-2, 3])), Some(p(&[1, 1]).mul(&p(&[0, 0, 5]))));
        assert_eq!(p(&[1, 0, 1]).div_exact(&p(&[1, 1])), None);
        assert_eq!(p(&[2, 4]).div_exact(&p(&[2])), Some(p(&[1, 2])));
    }
}
