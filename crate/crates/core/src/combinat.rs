//! Exact integer combinatorics returned as rationals.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::field::{Field, Rat};

pub fn factorial(n: usize) -> Rat {
    Rat::from_integer((1..=n as u64).fold(BigInt::one(), |acc, k| acc * k))
}

/// `C(n, k)` for natural `n`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    Rat::from_integer(acc)
}

/// Generalised binomial `c(c-1)...(c-m+1) / m!` for a field element `c`.
pub fn binomial_general<F: Field>(c: &F, m: usize) -> F {
    let mut acc = F::one();
    for j in 0..m {
        acc = acc * (c.clone() - F::from_int(j as i64));
    }
    acc * F::from_rat(&factorial(m).recip())
}

/// `n! / (k_1! ... k_r!)` where the `k_i` sum to `n`.
pub fn multinomial(parts: &[usize]) -> Rat {
    let n: usize = parts.iter().sum();
    parts
        .iter()
        .fold(factorial(n), |acc, &k| acc / factorial(k))
}
