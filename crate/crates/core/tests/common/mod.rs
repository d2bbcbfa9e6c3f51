#![allow(dead_code)]

use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use tritrop_core::curve33::{build_curve, CoeffMatrix, CurveGamma};
use tritrop_core::classcomplex::TritangentLocus;
use tritrop_core::Rat;

pub fn example() -> CoeffMatrix {
    CoeffMatrix::from_fn(|i, j| {
        let (i, j) = (i as i64, j as i64);
        Rat::from_int(-(2 * i * i + 2 * i * j + 3 * j * j))
    })
}

pub fn random_smooth(seed: u64) -> CoeffMatrix {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    loop {
        let a = CoeffMatrix::from_fn(|i, j| {
            let (i, j) = (i as i64, j as i64);
            Rat::from_int(-30 * (i * i + i * j + j * j) + rng.random_range(-50..=50))
        });
        if build_curve(&a).is_ok() {
            return a;
        }
    }
}

pub fn sample_curves() -> &'static [CurveGamma] {
    static CURVES: OnceLock<Vec<CurveGamma>> = OnceLock::new();
    CURVES.get_or_init(|| (0..8).map(|s| build_curve(&random_smooth(s)).unwrap()).collect())
}

pub fn matrix(h: &[i64; 16]) -> CoeffMatrix {
    CoeffMatrix::from_fn(|i, j| Rat::from_int(h[4 * i + j]))
}

pub fn sample_loci() -> &'static [(CurveGamma, TritangentLocus)] {
    static LOCI: OnceLock<Vec<(CurveGamma, TritangentLocus)>> = OnceLock::new();
    LOCI.get_or_init(|| {
        sample_curves()[..4]
            .iter()
            .map(|g| (g.clone(), TritangentLocus::build(g)))
            .collect()
    })
}
