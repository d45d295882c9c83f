//! Exact `SL_2(Z)` matrices used as an independent check on the trace engine.
//!
//! Random matrices are products of integer shears, so the determinant is 1
//! by construction and no rational arithmetic is needed.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::polyring::Polynomial;
use crate::traceengine::{trace_of_word, AlgebraElement, Generator, Sign, Word};

/// Largest absolute shear entry.
pub const SHEAR_BOUND: i64 = 3;
/// Shear steps per sampled matrix.
pub const DEFAULT_STEPS: usize = 10;

/// A 2×2 integer matrix `[[a, b], [c, d]]` with `ad - bc = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl ExactMatrix {
    /// `None` unless the determinant is 1.
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Option<ExactMatrix> {
        (&a * &d - &b * &c)
            .is_one()
            .then_some(ExactMatrix { a, b, c, d })
    }

    pub fn identity() -> ExactMatrix {
        ExactMatrix {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    pub fn upper_shear(k: i64) -> ExactMatrix {
        ExactMatrix {
            b: k.into(),
            ..ExactMatrix::identity()
        }
    }

    pub fn lower_shear(k: i64) -> ExactMatrix {
        ExactMatrix {
            c: k.into(),
            ..ExactMatrix::identity()
        }
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn mul(&self, o: &ExactMatrix) -> ExactMatrix {
        ExactMatrix {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }

    pub fn inverse(&self) -> ExactMatrix {
        ExactMatrix {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        }
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// Product of `steps` random upper/lower shears with nonzero entries in
/// `[-SHEAR_BOUND, SHEAR_BOUND]`.
pub fn random_sl2<R: Rng + ?Sized>(rng: &mut R, steps: usize) -> ExactMatrix {
    (0..steps).fold(ExactMatrix::identity(), |m, _| {
        let mut k = rng.random_range(-SHEAR_BOUND..SHEAR_BOUND);
        if k >= 0 {
            k += 1;
        }
        let shear = if rng.random_bool(0.5) {
            ExactMatrix::upper_shear(k)
        } else {
            ExactMatrix::lower_shear(k)
        };
        m.mul(&shear)
    })
}

/// Deterministic random pair for sample `index` under `seed`; each sample
/// draws from its own ChaCha stream.
pub fn sample_pair(seed: u64, index: u64) -> (ExactMatrix, ExactMatrix) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let x = random_sl2(&mut rng, DEFAULT_STEPS);
    let xp = random_sl2(&mut rng, DEFAULT_STEPS);
    (x, xp)
}

pub fn eval_word_matrix(w: &Word, x: &ExactMatrix, xp: &ExactMatrix) -> ExactMatrix {
    let (x_inv, xp_inv) = (x.inverse(), xp.inverse());
    w.letters().iter().fold(ExactMatrix::identity(), |acc, l| {
        let m = match (l.generator, l.sign) {
            (Generator::First, Sign::Plus) => x,
            (Generator::First, Sign::Minus) => &x_inv,
            (Generator::Second, Sign::Plus) => xp,
            (Generator::Second, Sign::Minus) => &xp_inv,
        };
        acc.mul(m)
    })
}

/// `(tr X, tr X', tr XX')`, the point at which trace polynomials are evaluated.
pub fn trace_point(x: &ExactMatrix, xp: &ExactMatrix) -> [BigInt; 3] {
    [x.trace(), xp.trace(), x.mul(xp).trace()]
}

/// `(-tr X, -tr X', -tr XX')` for barred polynomials.
pub fn barred_point(x: &ExactMatrix, xp: &ExactMatrix) -> [BigInt; 3] {
    trace_point(x, xp).map(|t| -t)
}

/// Entries of `c_one I + c_x X + c_y X' + c_xy XX'` with the coefficients
/// evaluated at the traces of `x`, `xp`. The result need not have det 1.
pub fn realize(e: &AlgebraElement, x: &ExactMatrix, xp: &ExactMatrix) -> [BigInt; 4] {
    let pt = trace_point(x, xp);
    let xxp = x.mul(xp);
    let id = ExactMatrix::identity();
    let mut out: [BigInt; 4] = Default::default();
    for (coeff, m) in e.coeffs().iter().zip([&id, x, xp, &xxp]) {
        let c = coeff.evaluate(&pt);
        for (o, entry) in out.iter_mut().zip(m.entries()) {
            *o += &c * entry;
        }
    }
    out
}

/// Whether `trace_poly` (over the trace variables) agrees with the direct
/// matrix trace of `w` on `samples` random pairs.
pub fn verify_polynomial_against_word(
    trace_poly: &Polynomial,
    w: &Word,
    samples: u64,
    seed: u64,
) -> bool {
    (0..samples).all(|i| {
        let (x, xp) = sample_pair(seed, i);
        trace_poly.evaluate(&trace_point(&x, &xp)) == eval_word_matrix(w, &x, &xp).trace()
    })
}

pub fn verify_trace_polynomial(w: &Word, samples: u64, seed: u64) -> bool {
    verify_polynomial_against_word(&trace_of_word(w), w, samples, seed)
}
