//! Seeded generators for the randomized fixtures. Every randomized construction
//! in the crate goes through [`rng`], so equal seeds give equal outputs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{inverse, int, ExactMatrix, Rational};

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform integer in `[-bound, bound]`.
pub fn small_int(rng: &mut SeededRng, bound: i64) -> Rational {
    int(rng.gen_range(-bound..=bound))
}

/// Uniform nonzero integer in `[-bound, bound]`.
pub fn nonzero_int(rng: &mut SeededRng, bound: i64) -> Rational {
    loop {
        let v = rng.gen_range(-bound..=bound);
        if v != 0 {
            return int(v);
        }
    }
}

pub fn matrix(rng: &mut SeededRng, rows: usize, cols: usize, bound: i64) -> ExactMatrix<Rational> {
    ExactMatrix::from_fn(rows, cols, |_, _| small_int(rng, bound))
}

/// Random invertible integer matrix together with its inverse (rejection sampling).
pub fn invertible(rng: &mut SeededRng, n: usize, bound: i64) -> (ExactMatrix<Rational>, ExactMatrix<Rational>) {
    loop {
        let m = matrix(rng, n, n, bound);
        if let Some(inv) = inverse(&m) {
            return (m, inv);
        }
    }
}
