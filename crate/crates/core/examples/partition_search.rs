//! Searches tent-mixture curves for lifting partitions.
//!
//! Usage: `partition_search START END [--crease]`. Each seed builds heights
//! `−q(i² + ij + j²) − Σ w·|2⟨n, (i, j)⟩ − c|` plus small noise, keeps the
//! first smooth draw and prints the partitions and dimension triples of its
//! classes. With `--crease` every curve also gets a crease along
//! `3i + j = 6`, which joins the lattice points (2,0) and (1,3).

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tritrop_core::curve33::{build_curve, CoeffMatrix, CurveGamma};
use tritrop_core::lifting::verify_report;
use tritrop_core::Rat;

const NORMALS: [[i64; 2]; 12] =
    [[1, 0], [0, 1], [1, 1], [1, -1], [1, 2], [2, 1], [1, -2], [2, -1], [1, 3], [3, 1], [1, -3], [3, -1]];

fn tent_curve(seed: u64, crease: bool) -> ([i64; 16], CurveGamma) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut tents: Vec<([i64; 2], i64, i64)> = (0..rng.random_range(1..=4))
            .map(|_| {
                let lo = if seed.is_multiple_of(2) { 0 } else { 8 };
                let n = NORMALS[rng.random_range(lo..12)];
                let r = 3 * (n[0].abs() + n[1].abs());
                (n, rng.random_range(-r..=r), rng.random_range(20..=120))
            })
            .collect();
        if crease {
            tents.push(([3, 1], 12, rng.random_range(40..=200)));
        }
        let q = rng.random_range(1..=6i64);
        let noise = rng.random_range(1..=4i64);
        let mut h = [0i64; 16];
        for (k, v) in h.iter_mut().enumerate() {
            let (i, j) = ((k / 4) as i64, (k % 4) as i64);
            *v = -q * (i * i + i * j + j * j) + rng.random_range(-noise..=noise);
            for (n, c, w) in &tents {
                *v -= w * (2 * (n[0] * i + n[1] * j) - c).abs();
            }
        }
        if let Ok(g) = build_curve(&CoeffMatrix::from_fn(|i, j| Rat::from_int(h[4 * i + j]))) {
            return (h, g);
        }
    }
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let start: u64 = args.first().and_then(|s| s.parse().ok()).unwrap_or(0);
    let end: u64 = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(start + 10);
    let crease = args.iter().any(|a| a == "--crease");
    for seed in start..end {
        let (h, g) = tent_curve(seed, crease);
        match verify_report(&g) {
            Ok(r) => {
                let sig = r.signature();
                let parts: BTreeSet<[u32; 4]> = sig.iter().map(|x| x.0).collect();
                let dims: BTreeSet<(i8, i8, i8)> = sig.iter().map(|x| x.1).collect();
                println!("seed {seed} pass={} partitions={parts:?} dims={dims:?} heights={h:?}", r.flags.all_pass());
            }
            Err(e) => println!("seed {seed} error {e} heights={h:?}"),
        }
    }
}
