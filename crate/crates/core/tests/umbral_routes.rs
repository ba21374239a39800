use umbral_core::families::{catalog_pair, family_polys, FamilySpec};
use umbral_core::field::{rat, rint};
use umbral_core::series::{exp_ct, log1p};
use umbral_core::umbral::{
    evaluation_functional, expand_by_moments, functional_apply, operator_apply,
    orthogonality_check, sheffer_gf, sheffer_transfer,
};
use umbral_core::{Error, Field, Fps, Poly, QPoly, Rat, RatFunc, ShefferPair};

fn q(cs: &[(i64, i64)]) -> QPoly {
    Poly::new(cs.iter().map(|&(n, d)| rat(n, d)).collect())
}

fn both_routes<F: Field>(pair: &ShefferPair<F>, n_max: usize) {
    let gf = sheffer_gf(pair, n_max).unwrap();
    for (n, want) in gf.iter().enumerate().skip(1) {
        assert_eq!(sheffer_transfer(pair, n).unwrap(), *want, "degree {n}");
    }
}

#[test]
fn routes_agree_on_rational_catalog() {
    let specs: Vec<FamilySpec<Rat>> = vec![
        FamilySpec::Bernoulli { order: 2 },
        FamilySpec::Euler { order: 1 },
        FamilySpec::FrobeniusEuler {
            order: 2,
            lambda: rint(-1),
        },
        FamilySpec::FrobeniusEulerian {
            order: 1,
            lambda: rat(1, 2),
        },
        FamilySpec::Narumi { order: -1 },
        FamilySpec::PoissonCharlier { a: rint(2) },
        FamilySpec::Theorem3 {
            order: 1,
            b: rat(1, 2),
            c: rat(1, 3),
        },
        FamilySpec::Theorem4 { order: 2 },
        FamilySpec::Theorem10 {
            order: -1,
            lambda: rint(2),
            b: rint(2),
            c: rint(-1),
            m: 2,
        },
    ];
    for spec in &specs {
        both_routes(&catalog_pair(spec, 22).unwrap(), 10);
    }
}

#[test]
fn routes_agree_with_symbolic_lambda() {
    let l = RatFunc::lambda();
    for spec in [
        FamilySpec::Daehee { lambda: l.clone() },
        FamilySpec::Theorem6 {
            order: 1,
            lambda: l.clone(),
            c: RatFunc::from_int(1),
        },
    ] {
        both_routes(&catalog_pair(&spec, 14).unwrap(), 6);
    }
}

#[test]
fn generated_sequences_are_orthogonal() {
    let pair = catalog_pair(&FamilySpec::<Rat>::Narumi { order: 2 }, 22).unwrap();
    let polys = sheffer_gf(&pair, 10).unwrap();
    assert!(orthogonality_check(&pair, &polys, 10).unwrap().holds());
}

#[test]
fn monomials_are_not_bernoulli() {
    let pair = catalog_pair(&FamilySpec::<Rat>::Bernoulli { order: 1 }, 8).unwrap();
    let monomials: Vec<QPoly> = (0..=3).map(|k| Poly::monomial(rint(1), k)).collect();
    let check = orthogonality_check(&pair, &monomials, 3).unwrap();
    assert!(!check.holds());
    assert_eq!(check.violation, Some((1, 0, rat(1, 2))));
}

#[test]
fn transfer_needs_positive_degree() {
    let pair = catalog_pair(&FamilySpec::<Rat>::Euler { order: 1 }, 6).unwrap();
    assert!(matches!(sheffer_transfer(&pair, 0), Err(Error::Domain(_))));
}

#[test]
fn functional_is_multiplicative_on_binomial_products() {
    // <f g | x^n> = sum_k C(n,k) <f|x^k> <g|x^(n-k)>
    let f = exp_ct(&rat(1, 2), 8);
    let g = log1p::<Rat>(8);
    let fg = &f * &g;
    for n in 0..8usize {
        let lhs = functional_apply(&fg, &Poly::monomial(rint(1), n)).unwrap();
        let rhs = (0..=n).fold(rint(0), |acc, k| {
            let a = functional_apply(&f, &Poly::monomial(rint(1), k)).unwrap();
            let b = functional_apply(&g, &Poly::monomial(rint(1), n - k)).unwrap();
            acc + umbral_core::combinat::binomial(n, k) * a * b
        });
        assert_eq!(lhs, rhs, "n = {n}");
    }
}

#[test]
fn evaluation_functional_evaluates() {
    let p = q(&[(3, 1), (-1, 2), (0, 1), (2, 3)]);
    for y in [rint(0), rint(-2), rat(5, 7)] {
        assert_eq!(evaluation_functional(&y, &p).unwrap(), p.eval(&y));
    }
}

#[test]
fn moment_expansion_recovers_polynomial() {
    let p = q(&[(1, 3), (0, 1), (-4, 1), (7, 5), (1, 1)]);
    assert_eq!(expand_by_moments(&p).unwrap(), p);
}

#[test]
fn operator_t_differentiates() {
    let p = q(&[(1, 1), (2, 1), (3, 1)]);
    let t = Fps::monomial(rint(1), 1, 4);
    assert_eq!(operator_apply(&t, &p).unwrap(), p.derivative());
    let shift = exp_ct(&rint(1), 4);
    assert_eq!(operator_apply(&shift, &p).unwrap(), p.shift(&rint(1)));
}

#[test]
fn daehee_frozen_values() {
    let polys = family_polys(
        &FamilySpec::Daehee {
            lambda: RatFunc::lambda(),
        },
        3,
    )
    .unwrap();
    let l = RatFunc::lambda();
    let one = RatFunc::from_int(1);
    let inv = (l.clone() - one.clone()).try_inv().unwrap();
    let k = |n: i64| RatFunc::from_int(n);
    let expected = [
        vec![one.clone()],
        vec![k(-2) * inv.clone(), k(2)],
        vec![k(-4) * inv.clone(), k(-8) * inv.clone(), k(4)],
        vec![
            k(-12) * inv.clone(),
            k(4) * (l - k(7)) * inv.clone(),
            k(-24) * inv,
            k(8),
        ],
    ];
    for (n, cs) in expected.into_iter().enumerate() {
        assert_eq!(polys[n], Poly::new(cs), "n = {n}");
    }
}
