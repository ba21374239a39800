//! Truncated formal power series in `t`.
//!
//! Coefficients are stored as plain Taylor coefficients: index `k` holds the
//! coefficient of `t^k`, not `k!` times it. A series of truncation order `T`
//! represents its value modulo `t^T`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::combinat::factorial;
use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Fps<F> {
    coeffs: Vec<F>,
}

/// Named constructors for the elementary series everything else is built from.
#[derive(Clone, Debug, PartialEq)]
pub enum SeriesKind<F> {
    /// `e^{ct}`
    ExpCt(F),
    /// `log(1 + t)`
    Log1p,
    /// `t^k`
    Monomial(usize),
    /// `(1 + t)^c`
    OnePlusTPow(F),
}

impl<F: Field> Fps<F> {
    /// Builds a series of order `coeffs.len()`.
    ///
    /// # Panics
    /// If `coeffs` is empty; a series carries at least one coefficient.
    pub fn new(coeffs: Vec<F>) -> Self {
        assert!(!coeffs.is_empty(), "truncation order must be positive");
        Fps { coeffs }
    }

    /// Pads with zeros or truncates to exactly `order` coefficients.
    pub fn from_coeffs(mut coeffs: Vec<F>, order: usize) -> Self {
        coeffs.resize(order, F::zero());
        Self::new(coeffs)
    }

    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(F::one(), order)
    }

    pub fn constant(c: F, order: usize) -> Self {
        Self::from_coeffs(vec![c], order)
    }

    /// `c t^k`, which is zero when `k >= order`.
    pub fn monomial(c: F, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k < order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn make(kind: SeriesKind<F>, order: usize) -> Self {
        match kind {
            SeriesKind::ExpCt(c) => exp_ct(&c, order),
            SeriesKind::Log1p => log1p(order),
            SeriesKind::Monomial(k) => Self::monomial(F::one(), k, order),
            SeriesKind::OnePlusTPow(c) => one_plus_t_pow(&c, order),
        }
    }

    pub fn trunc_order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &F {
        &self.coeffs[k]
    }

    /// Coefficient of `t^k` multiplied by `k!`, i.e. the action on `x^k`.
    pub fn egf_coeff(&self, k: usize) -> F {
        self.coeffs[k].clone() * F::from_rat(&factorial(k))
    }

    /// Index of the first nonzero coefficient, or the truncation order when
    /// every stored coefficient vanishes.
    pub fn order(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.coeffs.len())
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..order.min(self.coeffs.len())].to_vec())
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// `t^k * self`, keeping the truncation order.
    pub fn shift_mul(&self, k: usize) -> Self {
        let n = self.coeffs.len();
        let mut out = vec![F::zero(); n];
        let k = k.min(n);
        out[k..].clone_from_slice(&self.coeffs[..n - k]);
        Self::new(out)
    }

    /// `t^{-k} * self`; the truncation order drops by `k`.
    pub fn shift_div(&self, k: usize) -> Result<Self> {
        let ord = self.order();
        if ord < k || k >= self.coeffs.len() {
            return Err(Error::OrderTooLow {
                order: ord,
                shift: k,
            });
        }
        Ok(Self::new(self.coeffs[k..].to_vec()))
    }

    /// Multiplicative inverse of a series with nonzero constant term.
    pub fn inv(&self) -> Result<Self> {
        let c0_inv = self.coeffs[0].try_inv().map_err(|_| Error::NotInvertible)?;
        let n = self.coeffs.len();
        let mut out: Vec<F> = Vec::with_capacity(n);
        out.push(c0_inv.clone());
        for k in 1..n {
            let mut acc = F::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc = acc + self.coeffs[j].clone() * out[k - j].clone();
                }
            }
            out.push(-(acc * c0_inv.clone()));
        }
        Ok(Self::new(out))
    }

    /// `self / rhs`, cancelling a common power of `t` first. The truncation
    /// order drops by `rhs.order()`.
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        let k = rhs.order();
        if k >= rhs.coeffs.len() {
            return Err(Error::NotInvertible);
        }
        if k == 0 {
            return Ok(self * &rhs.inv()?);
        }
        let num = self.shift_div(k).map_err(|_| Error::NotInvertible)?;
        Ok(&num * &rhs.shift_div(k)?.inv()?)
    }

    /// `outer(inner(t))`; `inner` must have no constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::CompositionOrder);
        }
        let n = self.coeffs.len().min(inner.coeffs.len());
        let inner = inner.truncate(n);
        let mut acc = Self::zero(n);
        for c in self.coeffs[..n].iter().rev() {
            acc = &acc * &inner;
            acc.coeffs[0] = acc.coeffs[0].clone() + c.clone();
        }
        Ok(acc)
    }

    /// Compositional inverse of a delta series, solved one degree at a time.
    ///
    /// With `g = revert(f)`, the coefficient of `t^n` in `f(g(t)) = t` reads
    /// `f_1 g_n + sum_{k>=2} f_k [t^n] g^k = 0`, and `[t^n] g^k` for `k >= 2`
    /// only involves `g_1 .. g_{n-1}`. The table `pow[k][m] = [t^m] g^k` is
    /// filled column by column as the coefficients become known.
    pub fn revert(&self) -> Result<Self> {
        let n = self.coeffs.len();
        if !self.coeffs[0].is_zero() || n < 2 || self.coeffs[1].is_zero() {
            return Err(Error::NotDelta);
        }
        let f1_inv = self.coeffs[1].try_inv()?;
        let mut g = vec![F::zero(); n];
        g[1] = f1_inv;
        // pow[k][m], k, m < n; g^k starts at t^k
        let mut pow = vec![vec![F::zero(); n]; n];
        pow[1][1] = g[1].clone();
        for m in 2..n {
            let mut acc = F::zero();
            for k in 2..=m {
                // [t^m] g^k = sum_j g_j [t^{m-j}] g^{k-1}, j from 1 to m-k+1
                let mut c = F::zero();
                for j in 1..=(m + 1 - k) {
                    if !g[j].is_zero() && !pow[k - 1][m - j].is_zero() {
                        c = c + g[j].clone() * pow[k - 1][m - j].clone();
                    }
                }
                if !self.coeffs[k].is_zero() {
                    acc = acc + self.coeffs[k].clone() * c.clone();
                }
                pow[k][m] = c;
            }
            g[m] = -(acc * g[1].clone());
            pow[1][m] = g[m].clone();
        }
        let g = Self::new(g);
        debug_assert_eq!(self.compose(&g)?, Self::monomial(F::one(), 1, n));
        Ok(g)
    }

    /// Integer power; negative exponents need an invertible series.
    pub fn pow_int(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut sq = base;
        let mut acc = Self::one(self.coeffs.len());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// `self^c` for a field exponent, defined as `exp(c log self)` on series
    /// with constant term 1.
    ///
    /// Uses `self * v' = c self' v`, which gives
    /// `n v_n = sum_{k=1}^{n} (c k - (n - k)) u_k v_{n-k}`.
    pub fn pow_field(&self, c: &F) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::UnitConstantRequired);
        }
        let n = self.coeffs.len();
        let mut v: Vec<F> = Vec::with_capacity(n);
        v.push(F::one());
        for m in 1..n {
            let mut acc = F::zero();
            for k in 1..=m {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                let w = c.clone() * F::from_int(k as i64) - F::from_int((m - k) as i64);
                acc = acc + w * self.coeffs[k].clone() * v[m - k].clone();
            }
            v.push(acc * F::from_int(m as i64).try_inv()?);
        }
        Ok(Self::new(v))
    }

    /// `exp(self)` for a series without constant term, via
    /// `n v_n = sum_{k=1}^{n} k s_k v_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::CompositionOrder);
        }
        let n = self.coeffs.len();
        let mut v: Vec<F> = Vec::with_capacity(n);
        v.push(F::one());
        for m in 1..n {
            let mut acc = F::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() {
                    acc = acc + F::from_int(k as i64) * self.coeffs[k].clone() * v[m - k].clone();
                }
            }
            v.push(acc * F::from_int(m as i64).try_inv()?);
        }
        Ok(Self::new(v))
    }

    /// `log(self)` for a series with constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::UnitConstantRequired);
        }
        let mut u = self.clone();
        u.coeffs[0] = F::zero();
        log1p(self.coeffs.len()).compose(&u)
    }

    /// Renders `c0 + c1*t + ... + O(t^T)`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = if c.is_negative() {
                (true, -c.clone())
            } else {
                (false, c.clone())
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coeff = if mag.is_atomic() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            match (k, mag.is_one()) {
                (0, _) => out.push_str(&coeff),
                (1, true) => out.push('t'),
                (1, false) => out.push_str(&format!("{coeff}*t")),
                (_, true) => out.push_str(&format!("t^{k}")),
                _ => out.push_str(&format!("{coeff}*t^{k}")),
            }
        }
        if !out.is_empty() {
            out.push_str(" + ");
        }
        out.push_str(&format!("O(t^{})", self.coeffs.len()));
        out
    }
}

impl<F: Field> fmt::Display for Fps<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// `e^{ct}` with coefficients `c^k / k!`.
pub fn exp_ct<F: Field>(c: &F, order: usize) -> Fps<F> {
    let mut out = Vec::with_capacity(order);
    let mut term = F::one();
    for k in 0..order {
        if k > 0 {
            term = term * c.clone() * F::from_int(k as i64).try_inv().expect("k > 0");
        }
        out.push(term.clone());
    }
    Fps::new(out)
}

/// `log(1+t)` with coefficients `(-1)^{k+1} / k`.
pub fn log1p<F: Field>(order: usize) -> Fps<F> {
    let coeffs = (0..order)
        .map(|k| match k {
            0 => F::zero(),
            _ => {
                let c = F::from_int(k as i64).try_inv().expect("k > 0");
                if k % 2 == 0 {
                    -c
                } else {
                    c
                }
            }
        })
        .collect();
    Fps::new(coeffs)
}

/// `(1+t)^c` with generalised binomial coefficients.
pub fn one_plus_t_pow<F: Field>(c: &F, order: usize) -> Fps<F> {
    let mut out = Vec::with_capacity(order);
    let mut term = F::one();
    for m in 0..order {
        if m > 0 {
            let f = c.clone() - F::from_int(m as i64 - 1);
            term = term * f * F::from_int(m as i64).try_inv().expect("m > 0");
        }
        out.push(term.clone());
    }
    Fps::new(out)
}

impl<F: Field> Add for &Fps<F> {
    type Output = Fps<F>;
    fn add(self, rhs: &Fps<F>) -> Fps<F> {
        Fps::new(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }
}

impl<F: Field> Sub for &Fps<F> {
    type Output = Fps<F>;
    fn sub(self, rhs: &Fps<F>) -> Fps<F> {
        Fps::new(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }
}

impl<F: Field> Mul for &Fps<F> {
    type Output = Fps<F>;
    fn mul(self, rhs: &Fps<F>) -> Fps<F> {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let mut out = vec![F::zero(); n];
        for (i, a) in self.coeffs[..n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        Fps::new(out)
    }
}

impl<F: Field> Neg for &Fps<F> {
    type Output = Fps<F>;
    fn neg(self) -> Fps<F> {
        Fps::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<F: Field> $tr for Fps<F> {
            type Output = Fps<F>;
            fn $m(self, rhs: Fps<F>) -> Fps<F> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<F: Field> Neg for Fps<F> {
    type Output = Fps<F>;
    fn neg(self) -> Fps<F> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, rint, Rat};
    use crate::ratfunc::RatFunc;

    fn s(cs: &[Rat]) -> Fps<Rat> {
        Fps::new(cs.to_vec())
    }

    fn ints(cs: &[i64]) -> Fps<Rat> {
        Fps::new(cs.iter().map(|&c| rint(c)).collect())
    }

    fn t(order: usize) -> Fps<Rat> {
        Fps::monomial(rint(1), 1, order)
    }

    fn em1(order: usize) -> Fps<Rat> {
        &exp_ct(&rint(1), order) - &Fps::one(order)
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&ints(&[1, 1, 0]) * &ints(&[1, -1, 0]), ints(&[1, 0, -1]));
    }

    #[test]
    fn exp_times_exp_neg_is_one() {
        let p = &exp_ct(&rint(1), 4) * &exp_ct(&rint(-1), 4);
        assert_eq!(p, Fps::one(4));
    }

    #[test]
    fn mixed_orders_truncate_to_min() {
        assert_eq!((&ints(&[1, 1, 1]) + &ints(&[1, 1])).trunc_order(), 2);
    }

    #[test]
    fn inverse() {
        assert_eq!(ints(&[1, -1, 0, 0]).inv().unwrap(), ints(&[1, 1, 1, 1]));
        let q = em1(4).shift_div(1).unwrap();
        assert_eq!(q.inv().unwrap(), s(&[rint(1), rat(-1, 2), rat(1, 12)]));
        assert_eq!(ints(&[0, 1, 1]).inv(), Err(Error::NotInvertible));
    }

    #[test]
    fn composition() {
        let f = ints(&[3, 1, 4, 1, 5]);
        assert_eq!(f.compose(&t(5)).unwrap(), f);
        assert_eq!(log1p::<Rat>(5).compose(&em1(5)).unwrap(), t(5));
        let geo = ints(&[1, 1, 1, 1, 1]);
        let t2 = Fps::monomial(rint(1), 2, 5);
        assert_eq!(geo.compose(&t2).unwrap(), ints(&[1, 0, 1, 0, 1]));
        assert_eq!(geo.compose(&geo), Err(Error::CompositionOrder));
    }

    #[test]
    fn reversion() {
        assert_eq!(t(6).revert().unwrap(), t(6));
        assert_eq!(
            em1(4).revert().unwrap(),
            s(&[rint(0), rint(1), rat(-1, 2), rat(1, 3)])
        );
        let f = ints(&[0, 1, 1, 1]);
        assert_eq!(f.revert().unwrap(), ints(&[0, 1, -1, 1]));
        assert_eq!(ints(&[0, 0, 1]).revert(), Err(Error::NotDelta));
        assert_eq!(ints(&[1, 1, 1]).revert(), Err(Error::NotDelta));
    }

    #[test]
    fn integer_powers() {
        assert_eq!(ints(&[1, 1, 0]).pow_int(2).unwrap(), ints(&[1, 2, 1]));
        let q = em1(5).shift_div(1).unwrap();
        assert_eq!(q.pow_int(-1).unwrap(), q.inv().unwrap());
        assert_eq!(q.pow_int(0).unwrap(), Fps::one(4));
        assert_eq!(t(3).pow_int(-1), Err(Error::NotInvertible));
    }

    #[test]
    fn shift_division() {
        assert_eq!(ints(&[0, 1, 1]).shift_div(1).unwrap(), ints(&[1, 1]));
        assert_eq!(
            em1(4).shift_div(1).unwrap(),
            s(&[rint(1), rat(1, 2), rat(1, 6)])
        );
        assert!(matches!(
            ints(&[1, 1]).shift_div(1),
            Err(Error::OrderTooLow { .. })
        ));
    }

    #[test]
    fn field_powers() {
        let u = ints(&[1, 1, 0]);
        let r = u.pow_field(&rat(1, 2)).unwrap();
        assert_eq!(r, s(&[rint(1), rat(1, 2), rat(-1, 8)]));
        assert_eq!(&r * &r, u);
        assert_eq!(u.pow_field(&rint(0)).unwrap(), Fps::one(3));
        let u4 = ints(&[1, 1, 0, 0]);
        assert_eq!(u4.pow_field(&rint(-1)).unwrap(), ints(&[1, -1, 1, -1]));
        assert_eq!(
            ints(&[2, 1]).pow_field(&rat(1, 2)),
            Err(Error::UnitConstantRequired)
        );
        assert_eq!(one_plus_t_pow(&rat(1, 2), 3), r);
    }

    #[test]
    fn named_series() {
        assert_eq!(
            Fps::make(SeriesKind::ExpCt(rint(1)), 4),
            s(&[rint(1), rint(1), rat(1, 2), rat(1, 6)])
        );
        assert_eq!(
            Fps::make(SeriesKind::Log1p, 4),
            s(&[rint(0), rint(1), rat(-1, 2), rat(1, 3)])
        );
        assert_eq!(Fps::make(SeriesKind::Monomial(2), 4), ints(&[0, 0, 1, 0]));
        let lm1 = RatFunc::lambda() - RatFunc::from_int(1);
        let e = exp_ct(&lm1, 3);
        assert_eq!(e.coeff(1), &lm1);
        assert_eq!(
            e.coeff(2),
            &(lm1.clone() * lm1 * RatFunc::from_rat(&rat(1, 2)))
        );
    }

    #[test]
    fn exp_and_log_are_inverse() {
        let x = ints(&[0, 2, -1, 3, 0, 1]);
        assert_eq!(x.exp().unwrap().log().unwrap(), x);
        assert_eq!(t(5).scale(&rint(3)).exp().unwrap(), exp_ct(&rint(3), 5));
    }

    #[test]
    fn division_cancels_powers_of_t() {
        let q = t(5).div(&em1(5)).unwrap();
        assert_eq!(q, s(&[rint(1), rat(-1, 2), rat(1, 12), rint(0)]));
        assert_eq!(ints(&[1, 0]).div(&t(2)), Err(Error::NotInvertible));
    }

    #[test]
    fn rendering() {
        let q = s(&[rint(1), rat(-1, 2), rat(1, 12), rint(0)]);
        assert_eq!(q.render(), "1 - 1/2*t + 1/12*t^2 + O(t^4)");
        assert_eq!(Fps::<Rat>::zero(2).render(), "O(t^2)");
        assert_eq!(ints(&[0, -1, 1]).render(), "-t + t^2 + O(t^3)");
    }
}
