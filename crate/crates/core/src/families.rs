//! Named polynomial families, each extracted from its generating function,
//! and the catalog of Sheffer pairs they belong to.

use crate::combinat::{binomial, factorial};
use crate::error::{Error, Result};
use crate::field::{Field, Rat};
use crate::poly::{falling_factorial, Poly};
use crate::series::{exp_ct, log1p, one_plus_t_pow, Fps};
use crate::umbral::{sheffer_gf, ShefferPair};

/// A family from the catalog together with its parameters. Orders are
/// integers of either sign; `b`, `c`, `lambda`, `a` live in the coefficient
/// field.
#[derive(Clone, Debug, PartialEq)]
pub enum FamilySpec<F> {
    Bernoulli {
        order: i64,
    },
    Euler {
        order: i64,
    },
    FrobeniusEuler {
        order: i64,
        lambda: F,
    },
    FrobeniusEulerian {
        order: i64,
        lambda: F,
    },
    Narumi {
        order: i64,
    },
    Daehee {
        lambda: F,
    },
    PoissonCharlier {
        a: F,
    },
    Bernoulli2nd,
    /// `(((e^t-L)/(1-L))^a, t^2/(e^{bt}-1))`
    Theorem2 {
        order: i64,
        lambda: F,
        b: F,
    },
    /// `(((e^t-1)/t)^a, t^2 e^{bt}/(e^{ct}-1))`
    Theorem3 {
        order: i64,
        b: F,
        c: F,
    },
    /// `(((e^t+1)/2)^a, t^2/log(1+t))`
    Theorem4 {
        order: i64,
    },
    /// `(((e^t-1)/t)^a, log(1+t))`
    LogDelta {
        order: i64,
    },
    /// `(((e^t-L)/(1-L))^a, log(1+t)/(1+t)^c)`
    Theorem6 {
        order: i64,
        lambda: F,
        c: F,
    },
    /// `(((e^{(L-1)t}-L)/(1-L))^a, t^2 (1+t)^c/log(1+t))`
    Proposition8 {
        order: i64,
        lambda: F,
        c: F,
    },
    /// `(((e^{(L-1)t}-L)/(1-L))^a, t/(e^{ct}(1+bt)^m))`
    Theorem10 {
        order: i64,
        lambda: F,
        b: F,
        c: F,
        m: u32,
    },
}

fn nonzero<F: Field>(v: &F, name: &str) -> Result<()> {
    if v.is_zero() {
        Err(Error::Domain(format!("parameter {name} must be nonzero")))
    } else {
        Ok(())
    }
}

/// `1 - L`, rejecting the excluded value `L = 1`.
fn one_minus_lambda<F: Field>(lambda: &F) -> Result<F> {
    let d = F::one() - lambda.clone();
    if d.is_zero() {
        Err(Error::EvalPole {
            at: lambda.to_string(),
        })
    } else {
        Ok(d)
    }
}

/// `(e^{ct} - 1) / t`, truncated to `order`.
pub fn exp_quotient<F: Field>(c: &F, order: usize) -> Fps<F> {
    let e = exp_ct(c, order + 1);
    Fps::new(e.coeffs()[1..].to_vec())
}

/// `log(1+t) / t`, truncated to `order`.
pub fn log_quotient<F: Field>(order: usize) -> Fps<F> {
    Fps::new(log1p::<F>(order + 1).coeffs()[1..].to_vec())
}

/// `(t / (e^t - 1))^a`
pub fn bernoulli_weight<F: Field>(order: i64, trunc: usize) -> Fps<F> {
    exp_quotient(&F::one(), trunc)
        .pow_int(-order)
        .expect("unit constant term")
}

/// `(2 / (e^t + 1))^a`
pub fn euler_weight<F: Field>(order: i64, trunc: usize) -> Fps<F> {
    let half = F::from_int(2).try_inv().expect("2 != 0");
    let u = (&exp_ct(&F::one(), trunc) + &Fps::one(trunc)).scale(&half);
    u.pow_int(-order).expect("unit constant term")
}

/// `(e^{rt} - L) / (1 - L)`
fn frobenius_base<F: Field>(rate: &F, lambda: &F, trunc: usize) -> Result<Fps<F>> {
    let d = one_minus_lambda(lambda)?;
    Ok((&exp_ct(rate, trunc) - &Fps::constant(lambda.clone(), trunc)).scale(&d.try_inv()?))
}

/// `((1 - L) / (e^t - L))^a`
pub fn frobenius_euler_weight<F: Field>(order: i64, lambda: &F, trunc: usize) -> Result<Fps<F>> {
    frobenius_base(&F::one(), lambda, trunc)?.pow_int(-order)
}

/// `((1 - L) / (e^{(L-1)t} - L))^a`
pub fn frobenius_eulerian_weight<F: Field>(order: i64, lambda: &F, trunc: usize) -> Result<Fps<F>> {
    frobenius_base(&(lambda.clone() - F::one()), lambda, trunc)?.pow_int(-order)
}

/// Appell polynomials `S_0 .. S_{n_max}` for the weight `w(t) = 1/g(t)`:
/// `S_n(x) = sum_k C(n,k) (n-k)! w_{n-k} x^k`.
pub fn appell_polys<F: Field>(weight: &Fps<F>, n_max: usize) -> Vec<Poly<F>> {
    assert!(weight.trunc_order() > n_max, "weight truncated below n_max");
    (0..=n_max)
        .map(|n| {
            Poly::new(
                (0..=n)
                    .map(|k| {
                        F::from_rat(&(binomial(n, k) * factorial(n - k)))
                            * weight.coeff(n - k).clone()
                    })
                    .collect(),
            )
        })
        .collect()
}

/// Bernoulli polynomials of order `a`: `(t/(e^t-1))^a e^{xt}`.
pub fn bernoulli_polys<F: Field>(order: i64, n_max: usize) -> Vec<Poly<F>> {
    appell_polys(&bernoulli_weight(order, n_max + 1), n_max)
}

pub fn bernoulli_poly<F: Field>(order: i64, n: usize) -> Poly<F> {
    bernoulli_polys(order, n).pop().expect("n + 1 entries")
}

/// Euler polynomials of order `a`: `(2/(e^t+1))^a e^{xt}`.
pub fn euler_polys<F: Field>(order: i64, n_max: usize) -> Vec<Poly<F>> {
    appell_polys(&euler_weight(order, n_max + 1), n_max)
}

pub fn euler_poly<F: Field>(order: i64, n: usize) -> Poly<F> {
    euler_polys(order, n).pop().expect("n + 1 entries")
}

/// Frobenius-Euler polynomials `H_n^{(a)}(x|L)`.
pub fn frobenius_euler_polys<F: Field>(
    order: i64,
    lambda: &F,
    n_max: usize,
) -> Result<Vec<Poly<F>>> {
    Ok(appell_polys(
        &frobenius_euler_weight(order, lambda, n_max + 1)?,
        n_max,
    ))
}

pub fn frobenius_euler_poly<F: Field>(order: i64, n: usize, lambda: &F) -> Result<Poly<F>> {
    Ok(frobenius_euler_polys(order, lambda, n)?
        .pop()
        .expect("n + 1 entries"))
}

/// Frobenius-type Eulerian polynomials `A_n^{(a)}(x|L)`, generated by
/// `((1-L)/(e^{t(L-1)}-L))^a e^{xt} = sum A_n t^n/n!`.
pub fn frobenius_eulerian_polys<F: Field>(
    order: i64,
    lambda: &F,
    n_max: usize,
) -> Result<Vec<Poly<F>>> {
    Ok(appell_polys(
        &frobenius_eulerian_weight(order, lambda, n_max + 1)?,
        n_max,
    ))
}

pub fn frobenius_eulerian_poly<F: Field>(order: i64, n: usize, lambda: &F) -> Result<Poly<F>> {
    Ok(frobenius_eulerian_polys(order, lambda, n)?
        .pop()
        .expect("n + 1 entries"))
}

/// `N_n^{(a)}(y) = n! [t^n] (log(1+t)/t)^a (1+t)^y`.
pub fn narumi_value<F: Field>(order: i64, n: usize, y: &F) -> F {
    let trunc = n + 1;
    let s = &log_quotient::<F>(trunc)
        .pow_int(order)
        .expect("unit constant term")
        * &one_plus_t_pow(y, trunc);
    s.egf_coeff(n)
}

/// Narumi polynomials `N_0^{(a)}(x) .. N_{n_max}^{(a)}(x)`; the coefficient of
/// `x^k` in `N_n` is `(n!/k!) [t^n] (log(1+t)/t)^a log(1+t)^k`.
pub fn narumi_polys<F: Field>(order: i64, n_max: usize) -> Vec<Poly<F>> {
    let trunc = n_max + 1;
    let weight = log_quotient::<F>(trunc)
        .pow_int(order)
        .expect("unit constant term");
    let l = log1p::<F>(trunc);
    let mut columns: Vec<Vec<F>> = vec![Vec::new(); n_max + 1];
    let mut power = weight;
    for k in 0..=n_max {
        for (n, col) in columns.iter_mut().enumerate().skip(k) {
            col.push(F::from_rat(&(factorial(n) / factorial(k))) * power.coeff(n).clone());
        }
        power = &power * &l;
    }
    columns.into_iter().map(Poly::new).collect()
}

pub fn narumi_poly<F: Field>(order: i64, n: usize) -> Poly<F> {
    narumi_polys(order, n).pop().expect("n + 1 entries")
}

/// Stirling numbers of the second kind from `(e^t-1)^k = k! sum S2(n,k) t^n/n!`.
pub fn stirling2(n: usize, k: usize) -> Rat {
    if k > n {
        return Rat::from_integer(0.into());
    }
    let em1 = &exp_ct(&Rat::from_integer(1.into()), n + 1) - &Fps::one(n + 1);
    let p = em1.pow_int(k as i64).expect("nonnegative power");
    p.coeff(n).clone() * factorial(n) / factorial(k)
}

/// Signed Stirling numbers of the first kind: the coefficient of `x^k` in `(x)_n`.
pub fn stirling1(n: usize, k: usize) -> Rat {
    falling_factorial::<Rat>(n).coeff(k)
}

/// Signed Stirling numbers of the first kind read from the series side,
/// `(log(1+t))^k = k! sum S1(n,k) t^n/n!`.
pub fn stirling1_from_log(n: usize, k: usize) -> Rat {
    let p = log1p::<Rat>(n + 1)
        .pow_int(k as i64)
        .expect("nonnegative power");
    p.coeff(n).clone() * factorial(n) / factorial(k)
}

/// Poisson-Charlier polynomial `C_n(x; a) = sum_k C(n,k) (-1)^{n-k} a^{-k} (x)_k`.
pub fn poisson_charlier<F: Field>(n: usize, a: &F) -> Result<Poly<F>> {
    let a_inv = a.try_inv()?;
    let mut acc = Poly::zero();
    for k in 0..=n {
        let mut c = F::from_rat(&binomial(n, k)) * a_inv.pow_u(k as u64);
        if (n - k) % 2 == 1 {
            c = -c;
        }
        acc = &acc + &falling_factorial::<F>(k).scale(&c);
    }
    Ok(acc)
}

/// Bernoulli polynomial of the second kind at `y`:
/// `b_n(y) = n! [t^n] t (1+t)^y / log(1+t)`.
pub fn bernoulli_2nd<F: Field>(n: usize, y: &F) -> F {
    let trunc = n + 1;
    let s =
        &log_quotient::<F>(trunc).inv().expect("unit constant term") * &one_plus_t_pow(y, trunc);
    s.egf_coeff(n)
}

/// The `(g, f)` pair for `spec`, truncated to `trunc` coefficients.
pub fn catalog_pair<F: Field>(spec: &FamilySpec<F>, trunc: usize) -> Result<ShefferPair<F>> {
    let one = F::one();
    let t = Fps::monomial(one.clone(), 1, trunc);
    let em1 = |c: &F| &exp_ct(c, trunc) - &Fps::one(trunc);
    let frob_g = |order: i64, lambda: &F| frobenius_euler_weight(-order, lambda, trunc);
    let eulerian_g = |order: i64, lambda: &F| frobenius_eulerian_weight(-order, lambda, trunc);
    // t^2 / h(t) for a delta series h given one coefficient longer than `trunc`
    let t2_over = |h: &Fps<F>| -> Result<Fps<F>> { Ok(h.shift_div(1)?.inv()?.shift_mul(1)) };
    let em1_long = |c: &F| &exp_ct(c, trunc + 1) - &Fps::one(trunc + 1);
    let (g, f) = match spec {
        FamilySpec::Bernoulli { order } => (bernoulli_weight(-order, trunc), t),
        FamilySpec::Euler { order } => (euler_weight(-order, trunc), t),
        FamilySpec::FrobeniusEuler { order, lambda } => (frob_g(*order, lambda)?, t),
        FamilySpec::FrobeniusEulerian { order, lambda } => (eulerian_g(*order, lambda)?, t),
        FamilySpec::Narumi { order } => (bernoulli_weight(-order, trunc), em1(&one)),
        FamilySpec::Bernoulli2nd => (bernoulli_weight(1, trunc), em1(&one)),
        FamilySpec::Daehee { lambda } => {
            let e = exp_ct(&one, trunc);
            let f = (&e - &Fps::one(trunc)).div(&(&e + &Fps::one(trunc)))?;
            (frobenius_euler_weight(1, lambda, trunc)?, f)
        }
        FamilySpec::PoissonCharlier { a } => {
            nonzero(a, "a")?;
            let f = em1(&one).scale(a);
            (f.exp()?, f)
        }
        FamilySpec::Theorem2 { order, lambda, b } => {
            nonzero(b, "b")?;
            (frob_g(*order, lambda)?, t2_over(&em1_long(b))?)
        }
        FamilySpec::Theorem3 { order, b, c } => {
            nonzero(c, "c")?;
            let f = &t2_over(&em1_long(c))? * &exp_ct(b, trunc);
            (bernoulli_weight(-order, trunc), f)
        }
        FamilySpec::Theorem4 { order } => {
            (euler_weight(-order, trunc), t2_over(&log1p(trunc + 1))?)
        }
        FamilySpec::LogDelta { order } => (bernoulli_weight(-order, trunc), log1p(trunc)),
        FamilySpec::Theorem6 { order, lambda, c } => {
            nonzero(c, "c")?;
            let f = &log1p(trunc) * &one_plus_t_pow(&-c.clone(), trunc);
            (frob_g(*order, lambda)?, f)
        }
        FamilySpec::Proposition8 { order, lambda, c } => {
            nonzero(c, "c")?;
            let f = &t2_over(&log1p(trunc + 1))? * &one_plus_t_pow(c, trunc);
            (eulerian_g(*order, lambda)?, f)
        }
        FamilySpec::Theorem10 {
            order,
            lambda,
            b,
            c,
            m,
        } => {
            nonzero(b, "b")?;
            nonzero(c, "c")?;
            let damp = exp_ct(&-c.clone(), trunc);
            let binom =
                Fps::from_coeffs(vec![one.clone(), b.clone()], trunc).pow_int(-(*m as i64))?;
            let f = &(&t * &damp) * &binom;
            (eulerian_g(*order, lambda)?, f)
        }
    };
    ShefferPair::new(g, f)
}

/// `S_0 .. S_{n_max}` for `spec`. Families with a closed generating function
/// are extracted directly; the bespoke pairs go through the Sheffer route.
pub fn family_polys<F: Field>(spec: &FamilySpec<F>, n_max: usize) -> Result<Vec<Poly<F>>> {
    match spec {
        FamilySpec::Bernoulli { order } => Ok(bernoulli_polys(*order, n_max)),
        FamilySpec::Euler { order } => Ok(euler_polys(*order, n_max)),
        FamilySpec::FrobeniusEuler { order, lambda } => {
            frobenius_euler_polys(*order, lambda, n_max)
        }
        FamilySpec::FrobeniusEulerian { order, lambda } => {
            frobenius_eulerian_polys(*order, lambda, n_max)
        }
        FamilySpec::Narumi { order } => Ok(narumi_polys(*order, n_max)),
        FamilySpec::Bernoulli2nd => Ok(narumi_polys(-1, n_max)),
        FamilySpec::PoissonCharlier { a } => (0..=n_max).map(|n| poisson_charlier(n, a)).collect(),
        _ => sheffer_gf(&catalog_pair(spec, n_max + 1)?, n_max),
    }
}
