//! Series acting on polynomials as linear functionals and as operators, and
//! Sheffer sequences built two independent ways.
//!
//! A linear functional is represented by its series: `<f(t) | x^n>` is `n!`
//! times the coefficient of `t^n` in `f`.

use crate::combinat::factorial;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Poly;
use crate::series::{exp_ct, Fps};

/// `(g, f)` with `g` invertible and `f` a delta series.
#[derive(Clone, Debug, PartialEq)]
pub struct ShefferPair<F> {
    g: Fps<F>,
    f: Fps<F>,
}

impl<F: Field> ShefferPair<F> {
    pub fn new(g: Fps<F>, f: Fps<F>) -> Result<Self> {
        if g.order() != 0 {
            return Err(Error::NotInvertible);
        }
        if f.order() != 1 {
            return Err(Error::NotDelta);
        }
        Ok(ShefferPair { g, f })
    }

    pub fn g(&self) -> &Fps<F> {
        &self.g
    }

    pub fn f(&self) -> &Fps<F> {
        &self.f
    }

    pub fn trunc_order(&self) -> usize {
        self.g.trunc_order().min(self.f.trunc_order())
    }
}

fn check_truncation<F: Field>(f: &Fps<F>, p: &Poly<F>) -> Result<()> {
    match p.degree() {
        Some(d) if d >= f.trunc_order() => Err(Error::TruncationTooShort {
            degree: d,
            order: f.trunc_order(),
        }),
        _ => Ok(()),
    }
}

/// `<f(t) | p(x)> = sum_n n! f_n p_n`.
pub fn functional_apply<F: Field>(f: &Fps<F>, p: &Poly<F>) -> Result<F> {
    check_truncation(f, p)?;
    Ok(p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(F::zero(), |acc, (n, c)| acc + f.egf_coeff(n) * c.clone()))
}

/// `f(t) p(x) = sum_k f_k p^{(k)}(x)`, with `t` acting as `d/dx`.
pub fn operator_apply<F: Field>(f: &Fps<F>, p: &Poly<F>) -> Result<Poly<F>> {
    check_truncation(f, p)?;
    let mut out = Poly::zero();
    let mut deriv = p.clone();
    for k in 0..f.trunc_order() {
        if deriv.is_zero() {
            break;
        }
        if !f.coeff(k).is_zero() {
            out = &out + &deriv.scale(f.coeff(k));
        }
        deriv = deriv.derivative();
    }
    Ok(out)
}

/// `S_0 .. S_{n_max}` read off the generating function
/// `e^{y fbar(t)} / g(fbar(t))`, where `fbar` is the compositional inverse
/// of `f`: the coefficient of `y^k` in `S_n` is
/// `(n!/k!) [t^n] fbar(t)^k / g(fbar(t))`.
pub fn sheffer_gf<F: Field>(pair: &ShefferPair<F>, n_max: usize) -> Result<Vec<Poly<F>>> {
    let order = pair.trunc_order();
    if order < n_max + 1 {
        return Err(Error::TruncationTooShort {
            degree: n_max,
            order,
        });
    }
    // Degree n_max only sees coefficients up to t^n_max.
    let order = n_max + 1;
    let fbar = pair.f.truncate(order).revert()?;
    let weight = pair.g.truncate(order).compose(&fbar)?.inv()?;
    let mut columns: Vec<Vec<F>> = vec![Vec::new(); n_max + 1];
    let mut power = weight;
    for k in 0..=n_max {
        let k_fact_inv = F::from_rat(&factorial(k).recip());
        for (n, column) in columns.iter_mut().enumerate() {
            let c = if n < k {
                F::zero()
            } else {
                power.coeff(n).clone() * F::from_rat(&factorial(n)) * k_fact_inv.clone()
            };
            column.push(c);
        }
        power = &power * &fbar;
    }
    Ok(columns.into_iter().map(Poly::new).collect())
}

/// The transfer formula `S_n(x) = g(t)^{-1} x (t/f(t))^n x^{n-1}`, evaluated
/// right to left. Only defined for `n >= 1`.
pub fn sheffer_transfer<F: Field>(pair: &ShefferPair<F>, n: usize) -> Result<Poly<F>> {
    if n == 0 {
        return Err(Error::Domain("transfer formula needs n >= 1".into()));
    }
    // operators acting on a degree-n polynomial only see t^0 .. t^n
    let t_over_f = pair.f.truncate(n + 1).shift_div(1)?.inv()?;
    let q = t_over_f.pow_int(n as i64)?;
    let inner = operator_apply(&q, &Poly::monomial(F::one(), n - 1))?;
    operator_apply(&pair.g.truncate(n + 1).inv()?, &inner.mul_by_x())
}

/// Result of [`orthogonality_check`]; `violation` holds the first failing
/// `(n, k)` in lexicographic order.
#[derive(Clone, Debug, PartialEq)]
pub struct Orthogonality<F> {
    pub violation: Option<(usize, usize, F)>,
}

impl<F> Orthogonality<F> {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks `<g f^k | S_n> = n! delta_{n,k}` for all `0 <= n, k <= n_max`.
pub fn orthogonality_check<F: Field>(
    pair: &ShefferPair<F>,
    polys: &[Poly<F>],
    n_max: usize,
) -> Result<Orthogonality<F>> {
    let keep = pair.trunc_order().min(n_max + 1);
    let f = pair.f.truncate(keep);
    let mut functional = pair.g.truncate(keep);
    let mut functionals = Vec::with_capacity(n_max + 1);
    for _ in 0..=n_max {
        functionals.push(functional.clone());
        functional = &functional * &f;
    }
    for (n, s) in polys.iter().enumerate().take(n_max + 1) {
        for (k, gk) in functionals.iter().enumerate() {
            let got = functional_apply(gk, s)?;
            let want = if n == k {
                F::from_rat(&factorial(n))
            } else {
                F::zero()
            };
            if got != want {
                return Ok(Orthogonality {
                    violation: Some((n, k, got)),
                });
            }
        }
    }
    Ok(Orthogonality { violation: None })
}

/// `<e^{yt} | p(x)>`, i.e. evaluation of `p` at `y`, through the functional.
pub fn evaluation_functional<F: Field>(y: &F, p: &Poly<F>) -> Result<F> {
    let order = p.degree().unwrap_or(0) + 1;
    functional_apply(&exp_ct(y, order), p)
}

/// Reconstructs `p` from its moments: `p(x) = sum_k <t^k | p> x^k / k!`.
pub fn expand_by_moments<F: Field>(p: &Poly<F>) -> Result<Poly<F>> {
    let order = p.degree().map_or(1, |d| d + 1);
    let coeffs = (0..order)
        .map(|k| {
            let tk = Fps::monomial(F::one(), k, order);
            Ok(functional_apply(&tk, p)? * F::from_rat(&factorial(k).recip()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(coeffs))
}

/// True when every `S_n` has degree exactly `n`.
pub fn degrees_are_exact<F: Field>(polys: &[Poly<F>]) -> bool {
    polys
        .iter()
        .enumerate()
        .all(|(n, p)| p.degree() == Some(n) && !p.coeff(n).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, rint, Rat};

    fn t(order: usize) -> Fps<Rat> {
        Fps::monomial(rint(1), 1, order)
    }

    fn bernoulli_pair(order: usize) -> ShefferPair<Rat> {
        let em1 = &exp_ct(&rint(1), order + 1) - &Fps::one(order + 1);
        ShefferPair::new(em1.shift_div(1).unwrap(), t(order)).unwrap()
    }

    fn p(cs: &[Rat]) -> Poly<Rat> {
        Poly::new(cs.to_vec())
    }

    #[test]
    fn kronecker_pairing() {
        let t2 = Fps::monomial(rint(1), 2, 4);
        assert_eq!(
            functional_apply(&t2, &Poly::monomial(rint(1), 2)).unwrap(),
            rint(2)
        );
        assert_eq!(
            functional_apply(&t2, &Poly::monomial(rint(1), 3)).unwrap(),
            rint(0)
        );
    }

    #[test]
    fn evaluation_by_exponential() {
        let q = p(&[rint(0), rint(-1), rint(1)]);
        assert_eq!(functional_apply(&exp_ct(&rint(3), 4), &q).unwrap(), rint(6));
        assert_eq!(evaluation_functional(&rat(1, 2), &q).unwrap(), rat(-1, 4));
    }

    #[test]
    fn constant_polynomial_reads_constant_term() {
        let f = Fps::new(vec![rint(7), rint(2)]);
        assert_eq!(functional_apply(&f, &Poly::one()).unwrap(), rint(7));
    }

    #[test]
    fn truncation_guard() {
        let f = Fps::one(2);
        assert!(matches!(
            functional_apply(&f, &Poly::monomial(rint(1), 2)),
            Err(Error::TruncationTooShort { .. })
        ));
    }

    #[test]
    fn operators() {
        let t2 = Fps::monomial(rint(1), 2, 5);
        assert_eq!(
            operator_apply(&t2, &Poly::monomial(rint(1), 3)).unwrap(),
            p(&[rint(0), rint(6)])
        );
        let shifted = operator_apply(&exp_ct(&rint(1), 5), &Poly::monomial(rint(1), 2)).unwrap();
        assert_eq!(shifted, p(&[rint(1), rint(2), rint(1)]));
        let q = p(&[rint(3), rint(1), rint(4)]);
        assert_eq!(operator_apply(&Fps::one(5), &q).unwrap(), q);
    }

    #[test]
    fn monomials_are_sheffer_for_identity_pair() {
        let pair = ShefferPair::new(Fps::one(6), t(6)).unwrap();
        let s = sheffer_gf(&pair, 3).unwrap();
        for (n, sn) in s.iter().enumerate() {
            assert_eq!(sn, &Poly::monomial(rint(1), n));
        }
        assert_eq!(
            sheffer_transfer(&pair, 5).unwrap(),
            Poly::monomial(rint(1), 5)
        );
        assert!(orthogonality_check(&pair, &s, 3).unwrap().holds());
    }

    #[test]
    fn bernoulli_by_both_routes() {
        let pair = bernoulli_pair(8);
        let s = sheffer_gf(&pair, 2).unwrap();
        assert_eq!(s[1], p(&[rat(-1, 2), rint(1)]));
        let b2 = p(&[rat(1, 6), rint(-1), rint(1)]);
        assert_eq!(s[2], b2);
        assert_eq!(sheffer_transfer(&pair, 2).unwrap(), b2);
    }

    #[test]
    fn euler_from_generating_function() {
        let order = 6;
        let g = (&exp_ct(&rint(1), order) + &Fps::one(order)).scale(&rat(1, 2));
        let pair = ShefferPair::new(g, t(order)).unwrap();
        let s = sheffer_gf(&pair, 2).unwrap();
        assert_eq!(s[2], p(&[rint(0), rint(-1), rint(1)]));
    }

    #[test]
    fn wrong_polynomials_break_orthogonality() {
        let pair = bernoulli_pair(10);
        let monos: Vec<_> = (0..=8).map(|n| Poly::monomial(rint(1), n)).collect();
        let res = orthogonality_check(&pair, &monos, 8).unwrap();
        assert_eq!(res.violation, Some((1, 0, rat(1, 2))));
        let good = sheffer_gf(&pair, 8).unwrap();
        assert!(orthogonality_check(&pair, &good, 8).unwrap().holds());
    }

    #[test]
    fn transfer_rejects_degree_zero() {
        let pair = bernoulli_pair(4);
        assert!(matches!(sheffer_transfer(&pair, 0), Err(Error::Domain(_))));
    }

    #[test]
    fn pair_validation() {
        assert_eq!(ShefferPair::new(t(3), t(3)), Err(Error::NotInvertible));
        assert_eq!(
            ShefferPair::new(Fps::<Rat>::one(3), Fps::one(3)),
            Err(Error::NotDelta)
        );
    }

    #[test]
    fn moment_expansion() {
        let q = p(&[rat(1, 3), rint(-2), rint(0), rat(5, 7)]);
        assert_eq!(expand_by_moments(&q).unwrap(), q);
    }
}
