use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use std::sync::OnceLock;

use tritrop_core::curve33::{build_curve, d4_apply, CoeffMatrix, CurveError, CurveGamma, D4Element, Stratum};
use tritrop_core::Rat;

mod common;
use common::{example, random_smooth};

fn curves() -> &'static [(CoeffMatrix, CurveGamma)] {
    static CURVES: OnceLock<Vec<(CoeffMatrix, CurveGamma)>> = OnceLock::new();
    CURVES.get_or_init(|| {
        (0..30)
            .map(|s| {
                let a = random_smooth(s);
                let g = build_curve(&a).unwrap();
                (a, g)
            })
            .collect()
    })
}

fn big(r: &Rat) -> BigRational {
    r.to_big()
}

type Tri = ([[i64; 2]; 3], [BigRational; 2]);

/// Cells of the upper hull of the lifted lattice points that are triangles
/// with no other lifted point on their plane, with the dual vertex. The
/// vertex `x` and height `c` solve `A_m + m·x = c` on the triangle, and every
/// other monomial must be strictly smaller there.
fn upper_hull_triangles(a: &CoeffMatrix) -> Vec<Tri> {
    let pts: Vec<[i64; 2]> = (0..4).flat_map(|i| (0..4).map(move |j| [i, j])).collect();
    let h = |p: [i64; 2]| big(&a.a[p[0] as usize][p[1] as usize]);
    let mut out = Vec::new();
    for x in 0..16 {
        for y in x + 1..16 {
            for z in y + 1..16 {
                let (p, q, r) = (pts[x], pts[y], pts[z]);
                let det = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]);
                if det == 0 {
                    continue;
                }
                // A_q - A_p = -(q - p)·x, A_r - A_p = -(r - p)·x
                let d = BigRational::from_integer(BigInt::from(det));
                let u = -(h(q) - h(p));
                let w = -(h(r) - h(p));
                let bi = |n: i64| BigRational::from_integer(BigInt::from(n));
                let x0 = (&u * bi(r[1] - p[1]) - &w * bi(q[1] - p[1])) / &d;
                let x1 = (&w * bi(q[0] - p[0]) - &u * bi(r[0] - p[0])) / &d;
                let val = |m: [i64; 2]| h(m) + bi(m[0]) * &x0 + bi(m[1]) * &x1;
                let c = val(p);
                let ok = pts.iter().filter(|m| **m != p && **m != q && **m != r).all(|&m| val(m) < c);
                if ok {
                    let mut t = [p, q, r];
                    t.sort();
                    out.push((t, [x0, x1]));
                }
            }
        }
    }
    out.sort();
    out
}

#[test]
fn example_curve_counts() {
    let g = build_curve(&example()).unwrap();
    assert_eq!(g.subdivision.triangles.len(), 18);
    assert_eq!(g.vertices.len(), 18);
    assert_eq!(g.subdivision.edges.len(), 33);
    assert_eq!(g.edges.len(), 21);
    assert_eq!(g.legs.len(), 12);
}

#[test]
fn far_southwest_point_is_in_the_origin_chamber() {
    let g = build_curve(&example()).unwrap();
    assert_eq!(g.locate(&[Rat::from_int(-1000), Rat::from_int(-1000)]), Stratum::Chamber([0, 0]));
}

#[test]
fn constant_coefficients_are_not_smooth() {
    let a = CoeffMatrix::from_fn(|_, _| Rat::zero());
    let e = build_curve(&a).unwrap_err();
    assert!(matches!(e, CurveError::NotSmooth | CurveError::Degenerate));
    assert!(e.to_string().starts_with("not smooth"));
}

#[test]
fn triangles_and_vertices_match_upper_hull() {
    for seed in 0..20 {
        let a = random_smooth(seed);
        let g = build_curve(&a).unwrap();
        let oracle = upper_hull_triangles(&a);
        let mut got: Vec<Tri> = g
            .vertices
            .iter()
            .map(|v| {
                let mut t = v.triangle;
                t.sort();
                (t, [big(&v.point[0]), big(&v.point[1])])
            })
            .collect();
        got.sort();
        assert_eq!(got, oracle, "seed {seed}");
    }
}

#[test]
fn hundred_random_curves_are_unimodular() {
    for seed in 0..100 {
        let g = build_curve(&random_smooth(seed)).unwrap();
        assert_eq!(g.subdivision.triangles.len(), 18);
        for t in &g.subdivision.triangles {
            let det = (t[1][0] - t[0][0]) * (t[2][1] - t[0][1]) - (t[1][1] - t[0][1]) * (t[2][0] - t[0][0]);
            assert_eq!(det.abs(), 1);
        }
    }
}

#[test]
fn balancing_holds_at_every_vertex() {
    for seed in 0..20 {
        let g = build_curve(&random_smooth(seed)).unwrap();
        for (v, star) in g.star.iter().enumerate() {
            assert_eq!(star.len(), 3, "vertex {v}");
            let s = star.iter().fold([0, 0], |s, (_, d)| [s[0] + d[0], s[1] + d[1]]);
            assert_eq!(s, [0, 0]);
        }
    }
}

fn argmax_count(a: &CoeffMatrix, p: &[Rat; 2]) -> (usize, Vec<[i64; 2]>) {
    let mut best: Option<BigRational> = None;
    let mut arg = Vec::new();
    for i in 0..4i64 {
        for j in 0..4i64 {
            let v = big(&a.a[i as usize][j as usize])
                + BigRational::from_integer(BigInt::from(i)) * big(&p[0])
                + BigRational::from_integer(BigInt::from(j)) * big(&p[1]);
            match &best {
                Some(b) if &v < b => {}
                Some(b) if &v == b => arg.push([i, j]),
                _ => {
                    best = Some(v);
                    arg = vec![[i, j]];
                }
            }
        }
    }
    (arg.len(), arg)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]
    #[test]
    fn locate_agrees_with_monomial_maxima(seed in 0u64..30, x in -400i64..400, y in -400i64..400, den in 1i64..4) {
        let (a, g) = &curves()[seed as usize];
        let p = [Rat::new(x as i128, den as i128), Rat::new(y as i128, den as i128)];
        let (n, mut arg) = argmax_count(a, &p);
        let s = g.locate(&p);
        let mut dual = g.dual_cell(s);
        arg.sort();
        dual.sort();
        prop_assert_eq!(dual, arg);
        let expected = match s {
            Stratum::Chamber(_) => 1,
            Stratum::EdgeInterior(_) | Stratum::LegInterior(_) => 2,
            Stratum::Vertex(_) => 3,
        };
        prop_assert_eq!(n, expected);
    }

    #[test]
    fn symmetries_move_the_support(seed in 0u64..10, gi in 0usize..8, x in -400i64..400, y in -400i64..400) {
        let g = &curves()[seed as usize].1;
        let e = D4Element::all()[gi];
        let h = d4_apply(&e, g);
        let p = [Rat::from_int(x), Rat::from_int(y)];
        let on = |s: Stratum| !matches!(s, Stratum::Chamber(_));
        prop_assert_eq!(on(g.locate(&p)), on(h.locate(&e.apply_point(&p))));
        prop_assert_eq!(g.vertices.len(), h.vertices.len());
        for v in &g.vertices {
            prop_assert!(matches!(h.locate(&e.apply_point(&v.point)), Stratum::Vertex(_)));
        }
    }
}

#[test]
fn group_structure() {
    let all = D4Element::all();
    for a in &all {
        assert_eq!(a.compose(&a.inverse()), D4Element::IDENTITY);
        for b in &all {
            assert!(all.contains(&a.compose(b)));
        }
    }
}
