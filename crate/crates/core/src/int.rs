//! Integers with an inline fast path.
//!
//! Almost every coefficient met while rewriting in these algebras fits in a
//! machine word; `Int` stays in an `i64` until an operation overflows and only
//! then promotes to a heap `BigInt`. The representation is canonical: a value
//! that fits in `i64` is always `Small`.

use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Clone)]
pub enum Int {
    Small(i64),
    Big(BigInt),
}

impl Int {
    #[inline]
    pub const fn zero() -> Self {
        Int::Small(0)
    }

    #[inline]
    pub const fn one() -> Self {
        Int::Small(1)
    }

    pub fn from_big(b: BigInt) -> Self {
        match b.to_i64() {
            Some(v) => Int::Small(v),
            None => Int::Big(b),
        }
    }

    pub fn to_big(&self) -> BigInt {
        match self {
            Int::Small(v) => BigInt::from(*v),
            Int::Big(b) => b.clone(),
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        matches!(self, Int::Small(0))
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        matches!(self, Int::Small(1))
    }

    pub fn signum(&self) -> i32 {
        match self {
            Int::Small(v) => v.signum() as i32,
            Int::Big(b) => {
                if b.is_negative() {
                    -1
                } else if b.is_zero() {
                    0
                } else {
                    1
                }
            }
        }
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Int {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn neg(&self) -> Int {
        match self {
            Int::Small(v) => match v.checked_neg() {
                Some(n) => Int::Small(n),
                None => Int::Big(-BigInt::from(*v)),
            },
            Int::Big(b) => Int::from_big(-b),
        }
    }

    pub fn add(&self, o: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, o) {
            if let Some(s) = a.checked_add(*b) {
                return Int::Small(s);
            }
        }
        Int::from_big(self.to_big() + o.to_big())
    }

    pub fn sub(&self, o: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, o) {
            if let Some(s) = a.checked_sub(*b) {
                return Int::Small(s);
            }
        }
        Int::from_big(self.to_big() - o.to_big())
    }

    pub fn mul(&self, o: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, o) {
            if let Some(s) = a.checked_mul(*b) {
                return Int::Small(s);
            }
        }
        Int::from_big(self.to_big() * o.to_big())
    }

    /// Truncating division; callers use it where the division is exact.
    pub fn div_exact(&self, o: &Int) -> Int {
        debug_assert!(!o.is_zero());
        if let (Int::Small(a), Int::Small(b)) = (self, o) {
            if let Some(s) = a.checked_div(*b) {
                return Int::Small(s);
            }
        }
        Int::from_big(self.to_big() / o.to_big())
    }

    pub fn is_divisible_by(&self, o: &Int) -> bool {
        if o.is_zero() {
            return self.is_zero();
        }
        match (self, o) {
            (Int::Small(a), Int::Small(b)) => match a.checked_rem(*b) {
                Some(r) => r == 0,
                None => true,
            },
            _ => (self.to_big() % o.to_big()).is_zero(),
        }
    }

    pub fn gcd(&self, o: &Int) -> Int {
        match (self, o) {
            (Int::Small(a), Int::Small(b)) => {
                let mut x = a.unsigned_abs();
                let mut y = b.unsigned_abs();
                while y != 0 {
                    let t = x % y;
                    x = y;
                    y = t;
                }
                match i64::try_from(x) {
                    Ok(v) => Int::Small(v),
                    Err(_) => Int::Big(BigInt::from(x)),
                }
            }
            _ => Int::from_big(self.to_big().gcd(&o.to_big())),
        }
    }

    pub fn pow(&self, e: u32) -> Int {
        let mut acc = Int::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl From<i64> for Int {
    fn from(v: i64) -> Self {
        Int::Small(v)
    }
}

impl From<BigInt> for Int {
    fn from(v: BigInt) -> Self {
        Int::from_big(v)
    }
}

impl PartialEq for Int {
    fn eq(&self, o: &Int) -> bool {
        match (self, o) {
            (Int::Small(a), Int::Small(b)) => a == b,
            (Int::Big(a), Int::Big(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Int {}

impl PartialOrd for Int {
    fn partial_cmp(&self, o: &Int) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Int {
    fn cmp(&self, o: &Int) -> Ordering {
        match (self, o) {
            (Int::Small(a), Int::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&o.to_big()),
        }
    }
}

impl fmt::Debug for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Int::Small(v) => write!(f, "{v}"),
            Int::Big(b) => write!(f, "{b}"),
        }
    }
}
