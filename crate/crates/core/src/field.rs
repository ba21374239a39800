//! The coefficient-field contract shared by every series and polynomial type.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rat = BigRational;

/// An exact commutative field of characteristic zero.
///
/// Equality must be decidable, which is why implementors keep a canonical
/// form. Ring operations come from the std operator traits; the fallible
/// inverse is separate because a zero divisor is an ordinary runtime input.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    fn try_inv(&self) -> Result<Self>;

    /// Image of a rational under the canonical embedding of Q.
    fn from_rat(r: &Rat) -> Self;

    fn try_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.clone() * rhs.try_inv()?)
    }

    fn from_int(n: i64) -> Self {
        Self::from_rat(&Rat::from_integer(BigInt::from(n)))
    }

    fn pow_u(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }

    fn pow_i(&self, e: i64) -> Result<Self> {
        let p = self.pow_u(e.unsigned_abs());
        if e < 0 {
            p.try_inv()
        } else {
            Ok(p)
        }
    }

    /// Rendering hint: true when the value is best printed as `- (-self)`.
    fn is_negative(&self) -> bool;

    /// Rendering hint: true when the value prints without surrounding
    /// parentheses inside a product.
    fn is_atomic(&self) -> bool;

    fn to_latex(&self) -> String;
}

impl Field for Rat {
    fn try_inv(&self) -> Result<Self> {
        if self.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }

    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn is_atomic(&self) -> bool {
        true
    }

    fn to_latex(&self) -> String {
        rat_latex(self)
    }
}

/// Canonical exact string: `p/q`, or `p` when the denominator is one.
pub fn rat_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_latex(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else if r.numer().is_negative() {
        format!("-\\frac{{{}}}{{{}}}", -r.numer(), r.denom())
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

/// Parses `p`, `-p`, `p/q`; the result is canonicalised.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Domain(format!("not a rational literal: `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rat::new(num, den))
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}
