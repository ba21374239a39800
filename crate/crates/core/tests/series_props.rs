use proptest::prelude::*;
use umbral_core::field::{rat, rint};
use umbral_core::{Field, Fps, Poly, QPoly, QSeries, Rat, RatFunc};

const T: usize = 16;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_rat() -> impl Strategy<Value = Rat> {
    small_rat().prop_filter("nonzero", |r| *r != rint(0))
}

fn series(order: usize) -> impl Strategy<Value = QSeries> {
    prop::collection::vec(small_rat(), order).prop_map(Fps::new)
}

fn invertible(order: usize) -> impl Strategy<Value = QSeries> {
    (nonzero_rat(), prop::collection::vec(small_rat(), order - 1)).prop_map(|(c0, rest)| {
        let mut cs = vec![c0];
        cs.extend(rest);
        Fps::new(cs)
    })
}

fn unit(order: usize) -> impl Strategy<Value = QSeries> {
    prop::collection::vec(small_rat(), order - 1).prop_map(|rest| {
        let mut cs = vec![rint(1)];
        cs.extend(rest);
        Fps::new(cs)
    })
}

fn delta(order: usize) -> impl Strategy<Value = QSeries> {
    (nonzero_rat(), prop::collection::vec(small_rat(), order - 2)).prop_map(|(c1, rest)| {
        let mut cs = vec![rint(0), c1];
        cs.extend(rest);
        Fps::new(cs)
    })
}

fn no_constant(order: usize) -> impl Strategy<Value = QSeries> {
    prop::collection::vec(small_rat(), order - 1).prop_map(|rest| {
        let mut cs = vec![rint(0)];
        cs.extend(rest);
        Fps::new(cs)
    })
}

fn poly(max_len: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec(small_rat(), 0..=max_len).prop_map(Poly::new)
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (
        poly(3),
        poly(3).prop_filter("nonzero denominator", |p| !p.is_zero()),
    )
        .prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

fn t_series(order: usize) -> QSeries {
    Fps::monomial(rint(1), 1, order)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms_mod_t(a in series(T), b in series(T), c in series(T)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &Fps::zero(T), a.clone());
    }

    #[test]
    fn inverse_round_trip(a in invertible(T)) {
        prop_assert_eq!(&a * &a.inv().unwrap(), Fps::one(T));
    }

    #[test]
    fn reversion_round_trip(f in delta(T)) {
        let g = f.revert().unwrap();
        prop_assert_eq!(f.compose(&g).unwrap(), t_series(T));
        prop_assert_eq!(g.compose(&f).unwrap(), t_series(T));
    }

    #[test]
    fn composition_is_associative(a in series(T), b in no_constant(T), c in no_constant(T)) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn field_power_agrees_with_integer_power(u in unit(10), k in -4i64..=4) {
        prop_assert_eq!(u.pow_field(&rint(k)).unwrap(), u.pow_int(k).unwrap());
    }

    #[test]
    fn field_powers_multiply(u in unit(10), p in small_rat(), q in small_rat()) {
        let lhs = &u.pow_field(&p).unwrap() * &u.pow_field(&q).unwrap();
        prop_assert_eq!(lhs, u.pow_field(&(p + q)).unwrap());
    }

    #[test]
    fn product_rule(p in poly(8), q in poly(8)) {
        let lhs = (&p * &q.mul_by_x()).derivative();
        let rhs = &(&p.derivative() * &q.mul_by_x()) + &(&p * &(&q + &q.derivative().mul_by_x()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ratfunc_field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!(a.clone() - a.clone(), RatFunc::from_int(0));
        if a != RatFunc::from_int(0) {
            prop_assert_eq!(a.clone() * a.try_inv().unwrap(), RatFunc::from_int(1));
        }
    }

    #[test]
    fn ratfunc_canonical_form(a in ratfunc()) {
        prop_assert!(a.denom().leading().is_some_and(|c| *c == rint(1)));
        prop_assert_eq!(a.numer().gcd(a.denom()).degree(), Some(0));
        let again = RatFunc::new(a.numer().clone(), a.denom().clone()).unwrap();
        prop_assert_eq!(again, a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in ratfunc(), b in ratfunc(), at in small_rat()) {
        if let (Ok(x), Ok(y)) = (a.eval(&at), b.eval(&at)) {
            prop_assert_eq!((a.clone() + b.clone()).eval(&at).unwrap(), x.clone() + y.clone());
            prop_assert_eq!((a * b).eval(&at).unwrap(), x * y);
        }
    }

    #[test]
    fn rational_arithmetic_is_canonical(a in small_rat(), b in nonzero_rat()) {
        let q = a.try_div(&b).unwrap();
        prop_assert_eq!(q.clone() * b, a);
        prop_assert!(*q.denom() > 0.into());
    }
}
