//! Deterministic random smooth (3,3)-curves.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tritrop_core::curve33::{build_curve, CoeffMatrix};
use tritrop_core::Rat;

/// Weight of the concave base term `−w·(i² + ij + j²)`.
pub const BASE_WEIGHT: i64 = 30;
/// Initial half-width of the integer noise range.
pub const NOISE: i64 = 50;
/// Attempts per noise range before widening it.
pub const ATTEMPTS: u32 = 1000;

/// Concave base height at `(i, j)`.
pub fn base_height(i: i64, j: i64) -> i64 {
    -BASE_WEIGHT * (i * i + i * j + j * j)
}

/// Coefficients of a smooth curve, sampled from `seed`.
///
/// Each attempt adds integer noise in `[−w, w]` to the base heights, with
/// `w = 50` at first and doubled after every thousand rejected attempts.
pub fn random_coefficients(seed: u64) -> CoeffMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut width = NOISE;
    loop {
        for _ in 0..ATTEMPTS {
            let a = CoeffMatrix::from_fn(|i, j| {
                Rat::from_int(base_height(i as i64, j as i64) + rng.random_range(-width..=width))
            });
            if build_curve(&a).is_ok() {
                return a;
            }
        }
        width *= 2;
    }
}
