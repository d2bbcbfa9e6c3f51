use proptest::prelude::*;
use tritrop_core::geometry::{interior_point, make_polyhedron, v3, GeometryError, HalfSpace3};
use tritrop_core::Rat;

fn r(n: i64) -> Rat {
    Rat::from_int(n)
}

fn cube(lo: [i64; 3], hi: [i64; 3]) -> Vec<HalfSpace3> {
    let mut hs = Vec::new();
    for k in 0..3 {
        let mut e = [0; 3];
        e[k] = 1;
        hs.push(HalfSpace3::ge(e, r(lo[k])));
        hs.push(HalfSpace3::le(e, r(hi[k])));
    }
    hs
}

#[test]
fn unit_cube_has_eight_vertices() {
    let p = make_polyhedron(cube([0, 0, 0], [1, 1, 1]));
    assert!(!p.empty);
    assert_eq!(p.dim, 3);
    assert_eq!(p.vertices.len(), 8);
    assert!(p.is_bounded());
    let x = interior_point(&p).unwrap();
    assert!(p.contains(&x));
}

#[test]
fn contradictory_halfspaces_are_empty() {
    let p = make_polyhedron(vec![HalfSpace3::ge([1, 0, 0], r(1)), HalfSpace3::le([1, 0, 0], r(0))]);
    assert!(p.empty);
    assert_eq!(interior_point(&p), Err(GeometryError::EmptyCell));
    assert_eq!(GeometryError::EmptyCell.to_string(), "empty cell");
}

#[test]
fn strict_inequalities_on_a_plane_are_empty() {
    let mut hs = HalfSpace3::eq([0, 0, 1], r(0)).to_vec();
    hs.push(HalfSpace3::gt([0, 0, 1], r(0)));
    assert!(make_polyhedron(hs).empty);
}

#[test]
fn octant_is_a_cone_with_three_rays() {
    let p = make_polyhedron(vec![
        HalfSpace3::ge([1, 0, 0], r(0)),
        HalfSpace3::ge([0, 1, 0], r(0)),
        HalfSpace3::ge([0, 0, 1], r(0)),
    ]);
    assert_eq!(p.vertices, vec![v3(0, 0, 0)]);
    let mut rays = p.rays.clone();
    rays.sort();
    assert_eq!(rays, vec![[0, 0, 1], [0, 1, 0], [1, 0, 0]]);
}

#[test]
fn slab_has_a_lineality_space() {
    let p = make_polyhedron(vec![HalfSpace3::ge([1, 0, 0], r(0)), HalfSpace3::le([1, 0, 0], r(2))]);
    assert_eq!(p.lines.len(), 2);
    assert_eq!(p.dim, 3);
    assert!(!p.is_bounded());
}

fn brute_force_vertices(hs: &[HalfSpace3]) -> Vec<[Rat; 3]> {
    let mut out: Vec<[Rat; 3]> = Vec::new();
    let n = hs.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let m = [hs[a].normal, hs[b].normal, hs[c].normal];
                let rhs = [hs[a].offset.clone(), hs[b].offset.clone(), hs[c].offset.clone()];
                let det = |m: [[i64; 3]; 3]| -> i64 {
                    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
                };
                let d = det(m);
                if d == 0 {
                    continue;
                }
                let mut x: [Rat; 3] = Default::default();
                for k in 0..3 {
                    let mut s = Rat::zero();
                    for row in 0..3 {
                        let mut mm = m;
                        for (rr, mr) in mm.iter_mut().enumerate() {
                            mr[k] = if rr == row { 1 } else { 0 };
                        }
                        s += &(&rhs[row] * &Rat::from_int(det(mm)));
                    }
                    x[k] = &s / &Rat::from_int(d);
                }
                if hs.iter().all(|h| h.contains_closed(&x)) && !out.contains(&x) {
                    out.push(x);
                }
            }
        }
    }
    out.sort();
    out
}

fn halfspace() -> impl Strategy<Value = HalfSpace3> {
    ([-3i64..=3, -3i64..=3, -3i64..=3], -6i64..=6)
        .prop_filter("nonzero", |(n, _)| n.iter().any(|&x| x != 0))
        .prop_map(|(n, b)| HalfSpace3::ge(n, Rat::from_int(b)))
}

proptest! {
    #[test]
    fn vertices_match_brute_force(extra in prop::collection::vec(halfspace(), 0..5)) {
        let mut hs = cube([-5, -5, -5], [5, 5, 5]);
        hs.extend(extra);
        let p = make_polyhedron(hs.clone());
        let oracle = brute_force_vertices(&hs);
        prop_assert_eq!(p.empty, oracle.is_empty());
        if !p.empty {
            let mut got = p.vertices.clone();
            got.sort();
            prop_assert_eq!(got, oracle);
            let x = interior_point(&p).unwrap();
            prop_assert!(p.contains(&x));
        }
    }
}
