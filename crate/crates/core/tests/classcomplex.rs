use rand::{Rng, SeedableRng};

use tritrop_core::classcomplex::{
    analyze_classes, is_special, removals, split_classes, TritangentLocus, ADMISSIBLE_DIMS, UNBOUNDED_MINUS_SIGN,
};
use tritrop_core::curve11::Curve11Param;
use tritrop_core::curve33::CurveGamma;
use tritrop_core::geometry::Vec3;
use tritrop_core::intersect::{is_tritangent_multiset, stable_intersection};
use tritrop_core::Rat;

mod common;
use common::sample_loci;

fn bbox(g: &CurveGamma) -> [i64; 4] {
    let f = |k: usize| g.vertices.iter().map(move |v| v.point[k].to_f64());
    let lo = |k| f(k).fold(f64::MAX, f64::min).floor() as i64 - 4;
    let hi = |k| f(k).fold(f64::MIN, f64::max).ceil() as i64 + 4;
    [lo(0), hi(0), lo(1), hi(1)]
}

fn random_point(rng: &mut impl Rng, g: &CurveGamma, den: i64) -> Vec3 {
    let [x0, x1, y0, y1] = bbox(g);
    let span = (x1 - x0).max(y1 - y0);
    let mut r = |lo: i64, hi: i64| Rat::new(rng.random_range(lo * den..=hi * den) as i128, den as i128);
    [r(x0, x1), r(y0, y1), r(-span, span)]
}

fn tritangent(g: &CurveGamma, x: &Vec3) -> bool {
    is_tritangent_multiset(&stable_intersection(&Curve11Param::from_point(x), g))
}

#[test]
fn fifteen_classes() {
    for (_, locus) in sample_loci() {
        let classes = split_classes(locus).unwrap();
        assert_eq!(classes.len(), 15);
        let mut all: Vec<usize> = classes.iter().flat_map(|c| c.cells.clone()).collect();
        all.sort_unstable();
        assert_eq!(all, (0..locus.cells.len()).collect::<Vec<_>>());
        assert_eq!(classes.iter().map(|c| c.id).collect::<Vec<_>>(), (1..=15).collect::<Vec<_>>());
    }
}

#[test]
fn classes_are_connected_and_admissible() {
    for (_, locus) in sample_loci() {
        for c in analyze_classes(locus).unwrap() {
            assert_eq!(locus.components_of(&c.cells).len(), 1);
            assert_eq!(locus.components_of(&c.nonspecial).len(), 1);
            assert!(ADMISSIBLE_DIMS.contains(&c.dims(locus)));
            assert!(c.nonspecial.iter().all(|i| c.bounded.contains(i)));
            assert!(c.bounded.iter().all(|i| c.cells.contains(i)));
            let (a, b, t) = c.dims(locus);
            assert!(a <= b && b <= t && a >= 0);
        }
    }
}

#[test]
fn locus_matches_pointwise_test() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    for (g, locus) in sample_loci() {
        let mut hits = 0;
        for k in 0..1500 {
            let x = if k % 2 == 0 {
                random_point(&mut rng, g, if k % 4 == 0 { 1 } else { 6 })
            } else {
                let c = &locus.cells[rng.random_range(0..locus.cells.len())];
                let mut x = c.rep.clone();
                for v in &mut x {
                    *v += &Rat::new(rng.random_range(-2..=2) as i128, 8);
                }
                x
            };
            let owners = locus.cells.iter().filter(|c| c.poly.contains(&x)).count();
            assert!(owners <= 1, "cells overlap at {x:?}");
            assert_eq!(owners == 1, tritangent(g, &x), "{x:?}");
            hits += owners;
        }
        assert!(hits > 100, "{hits}");
    }
}

#[test]
fn representatives_lie_in_their_cells() {
    for (g, locus) in sample_loci() {
        for cell in &locus.cells {
            assert!(cell.poly.contains(&cell.rep));
            assert!(tritangent(g, &cell.rep));
        }
    }
}

#[test]
fn face_relation_is_consistent() {
    for (_, locus) in sample_loci() {
        for &(i, j) in &locus.faces {
            let (a, b) = (&locus.cells[i], &locus.cells[j]);
            assert!(a.dim() < b.dim());
            assert!(b.poly.contains_closed(&a.rep));
        }
    }
}

fn sample_in(cell: &tritrop_core::classcomplex::Cell, rng: &mut impl Rng) -> Vec3 {
    let p = &cell.poly;
    let n = p.vertices.len();
    let w: Vec<i64> = (0..n).map(|_| rng.random_range(1..=5)).collect();
    let s: i64 = w.iter().sum();
    let mut x: Vec3 = [Rat::zero(), Rat::zero(), Rat::zero()];
    for (v, &wi) in p.vertices.iter().zip(&w) {
        for k in 0..3 {
            x[k] += &(&v[k] * &Rat::new(wi as i128, s as i128));
        }
    }
    for d in p.rays.iter().chain(&p.lines) {
        let t = Rat::new(rng.random_range(1..=9) as i128, 4);
        for k in 0..3 {
            x[k] += &(&Rat::from_int(d[k]) * &t);
        }
    }
    x
}

#[test]
fn cell_attributes_are_constant_on_cells() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(6);
    for (g, locus) in sample_loci() {
        for (i, cell) in locus.cells.iter().enumerate() {
            for _ in 0..4 {
                let x = sample_in(cell, &mut rng);
                if !cell.poly.contains(&x) {
                    continue;
                }
                let p = Curve11Param::from_point(&x);
                let comps = stable_intersection(&p, g);
                assert!(is_tritangent_multiset(&comps));
                assert_eq!(is_special(&p, &comps), locus.special[i], "cell {i} at {x:?}");
                assert_eq!(removals(g, &p), locus.removals[i], "cell {i} at {x:?}");
            }
        }
    }
}

#[test]
fn unbounded_minus_sign_is_negative() {
    assert_eq!(UNBOUNDED_MINUS_SIGN, -1);
}

#[test]
fn sequential_and_shared_builds_agree() {
    let (g, locus) = &sample_loci()[0];
    let again = TritangentLocus::build(g);
    assert_eq!(again.cells.len(), locus.cells.len());
    assert_eq!(again.faces, locus.faces);
    assert_eq!(again.special, locus.special);
}
