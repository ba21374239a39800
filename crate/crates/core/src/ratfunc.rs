//! The rational-function field Q(L), used to carry the Frobenius parameter as
//! a formal indeterminate.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::{rat_string, Field, Rat};
use crate::poly::Poly;

/// `num / den` in lowest terms with a monic denominator. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: Poly<Rat>,
    den: Poly<Rat>,
}

impl RatFunc {
    /// The indeterminate `L`.
    pub fn lambda() -> Self {
        RatFunc {
            num: Poly::x(),
            den: Poly::one(),
        }
    }

    pub fn from_poly(num: Poly<Rat>) -> Self {
        RatFunc {
            num,
            den: Poly::one(),
        }
    }

    pub fn new(num: Poly<Rat>, den: Poly<Rat>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly<Rat>, den: Poly<Rat>) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = gcd(&num, &den);
        let (mut num, mut den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_rem(&g).unwrap().0, den.div_rem(&g).unwrap().0)
        };
        let lead = den.leading().expect("nonzero denominator").clone();
        if !lead.is_one() {
            let s = lead.recip();
            num = num.scale(&s);
            den = den.scale(&s);
        }
        RatFunc { num, den }
    }

    pub fn numer(&self) -> &Poly<Rat> {
        &self.num
    }

    pub fn denom(&self) -> &Poly<Rat> {
        &self.den
    }

    /// Specialises `L` to a rational value.
    pub fn eval(&self, at: &Rat) -> Result<Rat> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(Error::EvalPole { at: rat_string(at) });
        }
        Ok(self.num.eval(at) / d)
    }

    /// Nonzero constant, as a plain rational.
    fn scalar(&self) -> Option<Rat> {
        if self.den.is_one() && self.num.degree() == Some(0) {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    /// `Some(c)` when the function is the constant `c`.
    pub fn as_constant(&self) -> Option<Rat> {
        match (self.num.degree(), self.den.degree()) {
            (None, _) => Some(Rat::zero()),
            (Some(0), Some(0)) => Some(self.num.coeff(0)),
            _ => None,
        }
    }
}

/// The Mersenne prime 2^61 - 1; sums of two residues stay below 2^64.
const PRIME: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64) -> u64 {
    pow_mod(a, PRIME - 2)
}

fn int_mod(n: &BigInt) -> u64 {
    n.mod_floor(&BigInt::from(PRIME))
        .to_u64()
        .expect("reduced below the modulus")
}

/// Image in F_p[L], or `None` when a denominator or the leading coefficient
/// vanishes mod p (the image would not be faithful).
fn mod_image(p: &Poly<Rat>) -> Option<Vec<u64>> {
    let mut out = Vec::with_capacity(p.coeffs().len());
    for c in p.coeffs() {
        let d = int_mod(c.denom());
        if d == 0 {
            return None;
        }
        out.push(mul_mod(int_mod(c.numer()), inv_mod(d)));
    }
    if out.last() == Some(&0) {
        return None;
    }
    Some(out)
}

fn trim_mod(p: &mut Vec<u64>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

/// Degree of gcd(a, b) over F_p; both inputs nonzero.
fn gcd_degree_mod(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    trim_mod(&mut a);
    trim_mod(&mut b);
    while !b.is_empty() {
        let lead_inv = inv_mod(*b.last().unwrap());
        while a.len() >= b.len() {
            let c = mul_mod(*a.last().unwrap(), lead_inv);
            let off = a.len() - b.len();
            for (j, bj) in b.iter().enumerate() {
                a[off + j] = (a[off + j] + PRIME - mul_mod(c, *bj)) % PRIME;
            }
            trim_mod(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len() - 1
}

/// Monic gcd over Q. A faithful image mod p whose gcd is constant certifies
/// coprimality, since reduction can only raise the gcd degree; otherwise
/// fall back to exact Euclid.
fn gcd(a: &Poly<Rat>, b: &Poly<Rat>) -> Poly<Rat> {
    if a.degree() == Some(0) || b.degree() == Some(0) {
        return Poly::one();
    }
    if !a.is_zero() && !b.is_zero() {
        if let (Some(x), Some(y)) = (mod_image(a), mod_image(b)) {
            if gcd_degree_mod(x, y) == 0 {
                return Poly::one();
            }
        }
    }
    a.gcd(b)
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc {
            num: Poly::one(),
            den: Poly::one(),
        }
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc {
                num: &self.num + &rhs.num,
                den: self.den,
            };
        }
        if self.den.is_one() || rhs.den.is_one() {
            // p + a/b with gcd(a, b) = 1 is already reduced
            let (poly, frac) = if self.den.is_one() {
                (self, rhs)
            } else {
                (rhs, self)
            };
            let num = &(&poly.num * &frac.den) + &frac.num;
            return RatFunc { num, den: frac.den };
        }
        // a/b + c/d = (a d' + c b') / (b d') with g = gcd(b, d), b = g b', d = g d';
        // any common factor of the result lies in g
        let g = gcd(&self.den, &rhs.den);
        let b_co = self.den.div_rem(&g).unwrap().0;
        let d_co = rhs.den.div_rem(&g).unwrap().0;
        let num = &(&self.num * &d_co) + &(&rhs.num * &b_co);
        if num.is_zero() {
            return Self::zero();
        }
        let den = &self.den * &d_co;
        if g.degree() == Some(0) {
            return RatFunc { num, den };
        }
        let h = gcd(&num, &g);
        if h.degree() == Some(0) {
            return RatFunc { num, den };
        }
        RatFunc {
            num: num.div_rem(&h).unwrap().0,
            den: den.div_rem(&h).unwrap().0,
        }
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        self + (-rhs)
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if let Some(c) = self.scalar() {
            return RatFunc {
                num: rhs.num.scale(&c),
                den: rhs.den,
            };
        }
        if let Some(c) = rhs.scalar() {
            return RatFunc {
                num: self.num.scale(&c),
                den: self.den,
            };
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc {
                num: &self.num * &rhs.num,
                den: self.den,
            };
        }
        let cancel = |p: &Poly<Rat>, q: &Poly<Rat>| -> (Poly<Rat>, Poly<Rat>) {
            if p.degree() == Some(0) || q.degree() == Some(0) {
                return (p.clone(), q.clone());
            }
            let g = gcd(p, q);
            if g.degree() == Some(0) {
                (p.clone(), q.clone())
            } else {
                (p.div_rem(&g).unwrap().0, q.div_rem(&g).unwrap().0)
            }
        };
        let (a_num, b_den) = cancel(&self.num, &rhs.den);
        let (b_num, a_den) = cancel(&rhs.num, &self.den);
        RatFunc {
            num: &a_num * &b_num,
            den: &a_den * &b_den,
        }
    }
}

impl Field for RatFunc {
    fn try_inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    fn from_rat(r: &Rat) -> Self {
        Self::from_poly(Poly::constant(r.clone()))
    }

    fn is_negative(&self) -> bool {
        self.num.leading().is_some_and(|c| c < &Rat::zero())
    }

    fn is_atomic(&self) -> bool {
        !(self.den.is_one() && self.num.coeffs().iter().filter(|c| !c.is_zero()).count() > 1)
    }

    fn to_latex(&self) -> String {
        if self.den.is_one() {
            self.num.render_latex("\\lambda")
        } else {
            format!(
                "\\frac{{{}}}{{{}}}",
                self.num.render_latex("\\lambda"),
                self.den.render_latex("\\lambda")
            )
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            f.write_str(&self.num.render("L"))
        } else {
            let wrap = |p: &Poly<Rat>| {
                let s = p.render("L");
                if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                    format!("({s})")
                } else {
                    s
                }
            };
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, rint};

    fn l() -> RatFunc {
        RatFunc::lambda()
    }

    fn c(n: i64) -> RatFunc {
        RatFunc::from_int(n)
    }

    #[test]
    fn self_division_is_one() {
        let a = c(1) - l();
        assert_eq!(a.try_div(&a).unwrap(), RatFunc::one());
    }

    #[test]
    fn common_denominator_is_monic() {
        let one_minus = c(1) - l();
        let a = l().try_div(&one_minus).unwrap();
        let b = c(1).try_div(&one_minus).unwrap();
        let s = a + b;
        assert_eq!(s.denom(), &Poly::new(vec![rint(-1), rint(1)]));
        assert_eq!(s.numer(), &Poly::new(vec![rint(-1), rint(-1)]));
        assert_eq!(s.to_string(), "(-L - 1)/(L - 1)");
    }

    #[test]
    fn zero_absorbs() {
        let p = (l() + c(3)).try_div(&(l() - c(2))).unwrap();
        assert!((RatFunc::zero() * p).is_zero());
    }

    #[test]
    fn evaluation_and_poles() {
        let f = c(1).try_div(&(c(1) - l())).unwrap();
        assert_eq!(f.eval(&rint(2)).unwrap(), rint(-1));
        assert!(matches!(f.eval(&rint(1)), Err(Error::EvalPole { .. })));
        let g = (l() * l() - c(1)).try_div(&(l() - c(1))).unwrap();
        assert_eq!(g, l() + c(1));
        assert_eq!(g.eval(&rint(1)).unwrap(), rint(2));
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(l().try_div(&RatFunc::zero()), Err(Error::DivisionByZero));
        assert_eq!(
            RatFunc::new(Poly::one(), Poly::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn constants() {
        assert_eq!(RatFunc::from_rat(&rat(3, 4)).as_constant(), Some(rat(3, 4)));
        assert_eq!(l().as_constant(), None);
        assert_eq!(RatFunc::from_rat(&rat(-3, 4)).to_string(), "-3/4");
    }
}
