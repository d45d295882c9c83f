//! Dense univariate helpers over `BigInt` used by the square-freeness test.
//!
//! Coefficient vectors are ascending and trimmed (no trailing zeros); the
//! empty vector is the zero polynomial.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

fn trim(mut a: Vec<BigInt>) -> Vec<BigInt> {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

fn derivative(a: &[BigInt]) -> Vec<BigInt> {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigInt::from(k))
            .collect(),
    )
}

fn primitive_part(a: Vec<BigInt>) -> Vec<BigInt> {
    let content = a.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if content.is_zero() {
        return a;
    }
    let sign = if a.last().is_some_and(Signed::is_negative) {
        -content
    } else {
        content
    };
    a.into_iter().map(|c| c / &sign).collect()
}

/// Fraction-free remainder: `lc(b)^k * a mod b` for the smallest `k` that
/// keeps everything integral.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let lb = b.last().expect("nonzero divisor");
    let mut r = a.to_vec();
    while r.len() >= b.len() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - b.len();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (i, c) in b.iter().enumerate() {
            r[i + shift] -= &lr * c;
        }
        r = trim(r);
    }
    r
}

/// Primitive gcd over the rationals, normalised to positive leading coefficient.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut a = primitive_part(trim(a.to_vec()));
    let mut b = primitive_part(trim(b.to_vec()));
    while !b.is_empty() {
        let r = primitive_part(pseudo_rem(&a, &b));
        a = b;
        b = r;
    }
    a
}

pub(crate) fn is_squarefree(a: &[BigInt]) -> bool {
    let g = gcd(a, &derivative(a));
    g.len() <= 1
}
