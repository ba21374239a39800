//! Left- and right-hand sides for every registry entry.

use crate::combinat::{binomial, binomial_general, factorial, multinomial};
use crate::error::Result;
use crate::families::{
    bernoulli_2nd, bernoulli_poly, bernoulli_polys, bernoulli_weight, catalog_pair, euler_polys,
    frobenius_euler_polys, frobenius_eulerian_polys, log_quotient, narumi_value, poisson_charlier,
    stirling1, stirling2, FamilySpec,
};
use crate::field::{rint, Field, Rat};
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::series::{exp_ct, Fps};
use crate::umbral::sheffer_transfer;

use super::{
    require, require_lambda, require_nonzero, Collector, IdentityTag, LambdaParam, Outcome, Params,
    Status,
};

/// Uniform working truncation for outer degree `n_max`.
fn working_order(n_max: usize) -> usize {
    2 * n_max + 2
}

fn embed<F: Field>(r: &Rat) -> F {
    F::from_rat(r)
}

macro_rules! with_lambda {
    ($lambda:expr, $check:ident ( $($arg:expr),* )) => {
        match $lambda {
            LambdaParam::Symbolic => $check::<RatFunc>(RatFunc::lambda(), $($arg),*),
            LambdaParam::Value(r) => $check::<Rat>(r.clone(), $($arg),*),
        }
    };
}

pub(super) fn run(tag: IdentityTag, p: &Params, n_max: usize) -> Result<Outcome> {
    match tag {
        IdentityTag::T2 => {
            let (order, b) = (require(&p.order, "order")?, require_nonzero(&p.b, "b")?);
            with_lambda!(require_lambda(&p.lambda)?, theorem2(order, &b, n_max))
        }
        IdentityTag::T3 => {
            let order = require(&p.order, "order")?;
            theorem3(
                order,
                &require(&p.b, "b")?,
                &require_nonzero(&p.c, "c")?,
                n_max,
            )
        }
        IdentityTag::T4 => theorem4(require(&p.order, "order")?, n_max),
        IdentityTag::C5 => corollary5(n_max),
        IdentityTag::R27 => log_delta(require(&p.order, "order")?, n_max),
        IdentityTag::T6 => {
            let (order, c) = (require(&p.order, "order")?, require_nonzero(&p.c, "c")?);
            with_lambda!(require_lambda(&p.lambda)?, theorem6(order, &c, n_max))
        }
        IdentityTag::T7 => theorem7(&require_nonzero(&p.c, "c")?, n_max),
        IdentityTag::R35 => remark35(&require_nonzero(&p.c, "c")?, n_max),
        IdentityTag::P8 => {
            let (order, c) = (require(&p.order, "order")?, require_nonzero(&p.c, "c")?);
            with_lambda!(require_lambda(&p.lambda)?, proposition8(order, &c, n_max))
        }
        IdentityTag::T9 => theorem9(&require_nonzero(&p.c, "c")?, n_max),
        IdentityTag::R42 => remark42(n_max),
        IdentityTag::T10 => {
            let order = require(&p.order, "order")?;
            let (b, c) = (require_nonzero(&p.b, "b")?, require_nonzero(&p.c, "c")?);
            let m = require(&p.m, "m")?;
            with_lambda!(
                require_lambda(&p.lambda)?,
                theorem10(order, &b, &c, m, n_max)
            )
        }
        IdentityTag::DAE => with_lambda!(require_lambda(&p.lambda)?, daehee(n_max)),
        IdentityTag::E14 => charlier_values(&require_nonzero(&p.a, "a")?, n_max),
        IdentityTag::E25 => log_power_bernoulli(n_max),
    }
}

/// `S_n` for `n = 1..=n_max` from the transfer formula.
fn transfer_lhs<F: Field>(spec: &FamilySpec<F>, n_max: usize) -> Result<Vec<Poly<F>>> {
    let pair = catalog_pair(spec, working_order(n_max))?;
    (1..=n_max).map(|n| sheffer_transfer(&pair, n)).collect()
}

fn compare_polys<F: Field>(
    lhs: &[Poly<F>],
    rhs: impl Fn(usize) -> Result<Poly<F>>,
) -> Result<Outcome> {
    let mut col = Collector::default();
    for (i, l) in lhs.iter().enumerate() {
        let n = i + 1;
        col.poly(n, l, &rhs(n)?);
    }
    Ok(Outcome::from_collector(col))
}

fn theorem2<F: Field>(lambda: F, order: i64, b: &Rat, n_max: usize) -> Result<Outcome> {
    let spec = FamilySpec::Theorem2 {
        order,
        lambda: lambda.clone(),
        b: embed(b),
    };
    let lhs = transfer_lhs(&spec, n_max)?;
    let h = frobenius_euler_polys(order, &lambda, n_max)?;
    compare_polys(&lhs, |n| {
        let mut acc = Poly::zero();
        for k in 0..n {
            let w = binomial(n - 1, k) / binomial(k + n, n)
                * stirling2(k + n, n)
                * b.pow_u((k + n) as u64);
            acc = &acc + &h[n - k].scale(&embed(&w));
        }
        Ok(acc)
    })
}

fn theorem3(order: i64, b: &Rat, c: &Rat, n_max: usize) -> Result<Outcome> {
    let spec = FamilySpec::Theorem3 {
        order,
        b: b.clone(),
        c: c.clone(),
    };
    let lhs = transfer_lhs(&spec, n_max)?;
    let bern = bernoulli_polys::<Rat>(order, n_max);
    compare_polys(&lhs, |n| {
        let nb = -(rint(n as i64) * b);
        let mut acc = Poly::zero();
        for l in 0..n {
            let outer = binomial(n - 1, l) / binomial(l + n, l)
                * stirling2(l + n, n)
                * c.pow_u((n + l) as u64);
            for j in 0..n - l {
                let w = outer.clone() * binomial(n - 1 - l, j) * nb.pow_u(j as u64);
                acc = &acc + &bern[n - l - j].scale(&w);
            }
        }
        Ok(acc)
    })
}

fn theorem4(order: i64, n_max: usize) -> Result<Outcome> {
    let lhs = transfer_lhs(&FamilySpec::<Rat>::Theorem4 { order }, n_max)?;
    let euler = euler_polys::<Rat>(order, n_max);
    compare_polys(&lhs, |n| {
        let mut acc = Poly::zero();
        for l in 0..n {
            let w = binomial(n - 1, l) * narumi_value::<Rat>(n as i64, l, &rint(0));
            acc = &acc + &euler[n - l].scale(&w);
        }
        Ok(acc)
    })
}

/// `l! [t^l] (t/(e^t-1))^order`, the Bernoulli number of the given order.
fn bernoulli_number(order: i64, l: usize) -> Rat {
    bernoulli_weight::<Rat>(order, l + 1).egf_coeff(l)
}

fn corollary5(n_max: usize) -> Result<Outcome> {
    let mut col = Collector::default();
    for n in 1..=n_max {
        for l in 0..n {
            let lhs = narumi_value::<Rat>(n as i64, l, &rint(0)) / rint(n as i64);
            let rhs = bernoulli_number((n + l) as i64, l) / rint((n + l) as i64);
            col.scalar(vec![n, l], &lhs, &rhs);
        }
    }
    Ok(Outcome::from_collector(col))
}

fn log_delta(order: i64, n_max: usize) -> Result<Outcome> {
    let lhs = transfer_lhs(&FamilySpec::<Rat>::LogDelta { order }, n_max)?;
    let bern = bernoulli_polys::<Rat>(order, n_max);
    compare_polys(&lhs, |n| {
        let mut acc = Poly::zero();
        for l in 0..n {
            let w = binomial(n - 1, l) * narumi_value::<Rat>(-(n as i64), l, &rint(0));
            acc = &acc + &bern[n - l].scale(&w);
        }
        Ok(acc)
    })
}

/// `B_l^{(l-n+1)}(cn+1)`
fn shifted_bernoulli(n: usize, l: usize, c: &Rat) -> Rat {
    let order = l as i64 - n as i64 + 1;
    bernoulli_poly::<Rat>(order, l).eval(&(c * rint(n as i64) + rint(1)))
}

fn theorem6<F: Field>(lambda: F, order: i64, c: &Rat, n_max: usize) -> Result<Outcome> {
    let spec = FamilySpec::Theorem6 {
        order,
        lambda: lambda.clone(),
        c: embed(c),
    };
    let lhs = transfer_lhs(&spec, n_max)?;
    let h = frobenius_euler_polys(order, &lambda, n_max)?;
    compare_polys(&lhs, |n| {
        let mut acc = Poly::zero();
        for l in 0..n {
            let w = binomial(n - 1, l) * shifted_bernoulli(n, l, c);
            acc = &acc + &h[n - l].scale(&embed(&w));
        }
        Ok(acc)
    })
}

/// `sum_{l_1+..+l_n=l} C(l; l_1..l_n) prod b_{l_i}(c)`, computed as
/// `l! [t^l] B(t)^n` with `B(t) = sum_j b_j(c) t^j / j!`.
pub fn second_kind_convolution<F: Field>(c: &F, n: usize, l: usize) -> F {
    let coeffs = (0..=l)
        .map(|j| bernoulli_2nd(j, c) * F::from_rat(&factorial(j).recip()))
        .collect();
    let series = Fps::new(coeffs)
        .pow_int(n as i64)
        .expect("nonnegative power");
    series.egf_coeff(l)
}

/// The same convolution by enumerating every composition of `l` into `n`
/// nonnegative parts. Exponential in `n`; meant as an oracle for small cases.
pub fn multinomial_convolution_literal<F: Field>(values: &[F], n: usize, l: usize) -> F {
    fn walk<F: Field>(
        values: &[F],
        parts: &mut Vec<usize>,
        left: usize,
        slots: usize,
        acc: &mut F,
    ) {
        if slots == 0 {
            if left == 0 {
                let prod = parts.iter().fold(F::one(), |p, &k| p * values[k].clone());
                *acc = acc.clone() + F::from_rat(&multinomial(parts)) * prod;
            }
            return;
        }
        for k in 0..=left {
            parts.push(k);
            walk(values, parts, left - k, slots - 1, acc);
            parts.pop();
        }
    }
    let mut acc = F::zero();
    walk(values, &mut Vec::with_capacity(n), l, n, &mut acc);
    acc
}

fn theorem7(c: &Rat, n_max: usize) -> Result<Outcome> {
    let mut col = Collector::default();
    for n in 1..=n_max {
        for l in 0..n {
            col.scalar(
                vec![n, l],
                &second_kind_convolution(c, n, l),
                &shifted_bernoulli(n, l, c),
            );
        }
    }
    Ok(Outcome::from_collector(col))
}

fn remark35(c: &Rat, n_max: usize) -> Result<Outcome> {
    let mut col = Collector::default();
    for n in 1..=n_max {
        let shift = c * rint(n as i64);
        for l in 0..n {
            let lhs = narumi_value::<Rat>(-(n as i64), l, &shift);
            col.scalar(vec![n, l], &lhs, &second_kind_convolution(c, n, l));
        }
    }
    Ok(Outcome::from_collector(col))
}

fn proposition8<F: Field>(lambda: F, order: i64, c: &Rat, n_max: usize) -> Result<Outcome> {
    let spec = FamilySpec::Proposition8 {
        order,
        lambda: lambda.clone(),
        c: embed(c),
    };
    let lhs = transfer_lhs(&spec, n_max)?;
    let a = frobenius_eulerian_polys(order, &lambda, n_max)?;
    compare_polys(&lhs, |n| {
        let shift = -(c * rint(n as i64));
        let mut acc = Poly::zero();
        for l in 0..n {
            let w = binomial(n - 1, l) * narumi_value::<Rat>(n as i64, l, &shift);
            acc = &acc + &a[n - l].scale(&embed(&w));
        }
        Ok(acc)
    })
}

fn theorem9(c: &Rat, n_max: usize) -> Result<Outcome> {
    let mut col = Collector::default();
    for n in 1..=n_max {
        let neg_nc = -(c * rint(n as i64));
        for l in 0..n {
            let lhs = narumi_value::<Rat>(n as i64, l, &neg_nc);
            let mut sum = rint(0);
            for k in 0..=l {
                sum += factorial(n) / factorial(n + k)
                    * stirling1(k + n, n)
                    * binomial_general(&neg_nc, l - k);
            }
            col.scalar(vec![n, l], &lhs, &(factorial(l) * sum));
        }
    }
    Ok(Outcome::from_collector(col))
}

/// The closed form for Narumi numbers `N_l^{(n)}`, checked as printed with
/// `S2` and again with `S1`. Degrees run over `0 <= l <= n`: both sides are
/// coefficient formulas valid for every `l`, and the extra diagonal exposes
/// the sign error already at `n = 1`.
fn remark42(n_max: usize) -> Result<Outcome> {
    let mut printed = Collector::default();
    let mut corrected = Collector::default();
    for n in 1..=n_max {
        for l in 0..=n {
            let lhs = narumi_value::<Rat>(n as i64, l, &rint(0));
            let denom = binomial(l + n, n);
            printed.scalar(vec![n, l], &lhs, &(stirling2(l + n, n) / denom.clone()));
            corrected.scalar(vec![n, l], &lhs, &(stirling1(l + n, n) / denom));
        }
    }
    let index_note =
        "the log-power expansion is taken with S1(l+n,n) where the printed form reads S1(l+n,k)";
    if printed.is_clean() && corrected.is_clean() {
        return Ok(Outcome {
            status: Status::Pass,
            counterexamples: Vec::new(),
            note: index_note.into(),
        });
    }
    if corrected.is_clean() {
        let cex = printed.into_sorted();
        let first = &cex[0];
        let note = format!(
            "as-printed form N_l^(n) = S2(l+n,n)/C(l+n,n) fails ({} mismatches, first at (n,l) = ({},{}): {} vs {}); \
             corrected form N_l^(n) = S1(l+n,n)/C(l+n,n) holds for all 1 <= n <= {n_max}, 0 <= l <= n. \
             Oracle: direct expansion of (log(1+t)/t)^n against the Stirling-1 table read from the falling factorial (x)_(l+n). \
             Also: {index_note}.",
            cex.len(),
            first.indices[0],
            first.indices[1],
            first.lhs,
            first.rhs,
        );
        return Ok(Outcome {
            status: Status::PaperDiscrepancy,
            counterexamples: cex,
            note,
        });
    }
    let mut out = Outcome::from_collector(corrected);
    out.note = "corrected S1 form also fails".into();
    Ok(out)
}

fn theorem10<F: Field>(
    lambda: F,
    order: i64,
    b: &Rat,
    c: &Rat,
    m: u32,
    n_max: usize,
) -> Result<Outcome> {
    let spec = FamilySpec::Theorem10 {
        order,
        lambda: lambda.clone(),
        b: embed(b),
        c: embed(c),
        m,
    };
    let lhs = transfer_lhs(&spec, n_max)?;
    let a = frobenius_eulerian_polys(order, &lambda, n_max)?;
    compare_polys(&lhs, |n| {
        let nc = c * rint(n as i64);
        let mn = m as usize * n;
        let charlier = poisson_charlier(mn, &(-(nc.clone() / b)))?;
        let sign = if mn.is_multiple_of(2) {
            rint(1)
        } else {
            rint(-1)
        };
        let mut acc = Poly::zero();
        for l in 0..n {
            let w = sign.clone()
                * charlier.eval(&rint(l as i64))
                * nc.pow_u(l as u64)
                * binomial(n - 1, l);
            acc = &acc + &a[n - l].scale(&embed(&w));
        }
        Ok(acc)
    })
}

fn daehee<F: Field>(lambda: F, n_max: usize) -> Result<Outcome> {
    let lhs = transfer_lhs(
        &FamilySpec::Daehee {
            lambda: lambda.clone(),
        },
        n_max,
    )?;
    let scale = (F::one() - lambda.clone()).try_inv()?;
    let x = Poly::<F>::x();
    let x_plus_1 = Poly::new(vec![F::one(), F::one()]);
    compare_polys(&lhs, |n| {
        let bern = bernoulli_poly::<F>(n as i64, n - 1);
        let mut acc = Poly::zero();
        for l in 0..=n {
            let up = &x_plus_1 * &bern.shift(&F::from_int(l as i64 + 1));
            let here = (&x * &bern.shift(&F::from_int(l as i64))).scale(&lambda);
            acc = &acc + &(&up - &here).scale(&F::from_rat(&binomial(n, l)));
        }
        Ok(acc.scale(&scale))
    })
}

fn charlier_values(a: &Rat, n_max: usize) -> Result<Outcome> {
    let order = working_order(n_max);
    let mut col = Collector::default();
    let e = exp_ct(&rint(1), order);
    let base = Fps::new(vec![rint(-1), a.recip()]);
    let base = Fps::from_coeffs(base.coeffs().to_vec(), order);
    for n in 0..=n_max {
        let charlier = poisson_charlier(n, a)?;
        let rhs = &e * &base.pow_int(n as i64)?;
        for l in 0..order {
            let lhs = charlier.eval(&rint(l as i64)) / factorial(l);
            col.scalar(vec![n, l], &lhs, rhs.coeff(l));
        }
    }
    Ok(Outcome::from_collector(col))
}

fn log_power_bernoulli(n_max: usize) -> Result<Outcome> {
    let order = working_order(n_max);
    let mut col = Collector::default();
    for n in 1..=n_max {
        let lhs = log_quotient::<Rat>(order).pow_int(n as i64)?;
        for l in 0..order {
            let rhs = rint(n as i64) * bernoulli_number((n + l) as i64, l)
                / rint((n + l) as i64)
                / factorial(l);
            col.scalar(vec![n, l], lhs.coeff(l), &rhs);
        }
    }
    Ok(Outcome::from_collector(col))
}
