//! Planar line arrangements with their full face lattice.
//!
//! Faces are relatively open: vertices, open edges (segments or rays) and open
//! two-dimensional regions. Each face records a minimal description by
//! equalities and strict inequalities, the generators of its closure, and the
//! faces lying in its closure.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::plane::{along, idot2, intersect_lines, Line2, Vec2};
use crate::rat::Rat;

/// A linear condition `normal · p ⋈ offset` on a face.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Constraint2 {
    /// Primitive normal.
    pub normal: [i64; 2],
    /// Right-hand side.
    pub offset: Rat,
    /// `true` for an equality, `false` for the strict inequality `>`.
    pub equality: bool,
}

impl Constraint2 {
    /// Whether `p` satisfies the condition.
    pub fn holds(&self, p: &Vec2) -> bool {
        let s = (idot2(self.normal, p) - &self.offset).signum();
        if self.equality {
            s == 0
        } else {
            s > 0
        }
    }
}

/// A relatively open face of the arrangement.
#[derive(Clone, Debug)]
pub struct Face2 {
    /// Dimension 0, 1 or 2.
    pub dim: u8,
    /// Minimal description.
    pub constraints: Vec<Constraint2>,
    /// Vertices of the closure, as vertex-face ids.
    pub vertices: Vec<usize>,
    /// Extreme rays of the closure.
    pub rays: Vec<[i64; 2]>,
    /// Faces contained in the closure, including the face itself.
    pub subfaces: Vec<usize>,
    /// A point of the relative interior.
    pub interior: Vec2,
}

/// An arrangement of lines in `R^2`.
#[derive(Clone, Debug)]
pub struct Arrangement2 {
    /// The distinct lines.
    pub lines: Vec<Line2>,
    /// All faces; the first `n_vertices` are the vertices.
    pub faces: Vec<Face2>,
    /// Number of vertex faces.
    pub n_vertices: usize,
    /// Location of each vertex face.
    pub points: Vec<Vec2>,
}

fn line_dir(l: &Line2) -> [i64; 2] {
    [-l.normal[1], l.normal[0]]
}

fn centroid(points: &[&Vec2], rays: &[[i64; 2]]) -> Vec2 {
    let n = Rat::from_int(points.len() as i64);
    let mut x = Rat::zero();
    let mut y = Rat::zero();
    for p in points {
        x += &p[0];
        y += &p[1];
    }
    let mut out = [&x / &n, &y / &n];
    for r in rays {
        out = along(&out, *r, &Rat::one());
    }
    out
}

impl Arrangement2 {
    /// Builds the arrangement of the given lines (duplicates are removed).
    ///
    /// # Panics
    /// Panics if all lines are parallel.
    pub fn new(lines: Vec<Line2>) -> Arrangement2 {
        let mut lines = lines;
        lines.sort();
        lines.dedup();
        let n = lines.len();

        let mut point_id: BTreeMap<Vec2, usize> = BTreeMap::new();
        let mut points: Vec<Vec2> = Vec::new();
        let mut on_line: Vec<Vec<(Rat, usize)>> = vec![Vec::new(); n];
        let mut through: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let Some(p) = intersect_lines(&lines[i], &lines[j]) else { continue };
                let id = *point_id.entry(p.clone()).or_insert_with(|| {
                    points.push(p.clone());
                    through.push(Vec::new());
                    points.len() - 1
                });
                for k in [i, j] {
                    if !through[id].contains(&k) {
                        through[id].push(k);
                        let t = idot2(line_dir(&lines[k]), &p);
                        on_line[k].push((t, id));
                    }
                }
            }
        }
        assert!(!points.is_empty(), "arrangement of parallel lines");
        let nv = points.len();

        let mut faces: Vec<Face2> = Vec::with_capacity(nv * 4);
        for (id, p) in points.iter().enumerate() {
            let (a, b) = (through[id][0], through[id][1]);
            faces.push(Face2 {
                dim: 0,
                constraints: vec![
                    Constraint2 { normal: lines[a].normal, offset: lines[a].offset.clone(), equality: true },
                    Constraint2 { normal: lines[b].normal, offset: lines[b].offset.clone(), equality: true },
                ],
                vertices: vec![id],
                rays: Vec::new(),
                subfaces: vec![id],
                interior: p.clone(),
            });
        }

        // edges, with the sign vector of an interior point
        struct EdgeTmp {
            line: usize,
            face: usize,
        }
        let mut edges: Vec<EdgeTmp> = Vec::new();
        let mut signs_of_edge: Vec<Vec<i8>> = Vec::new();
        for k in 0..n {
            let list = &mut on_line[k];
            list.sort();
            list.dedup_by(|a, b| a.1 == b.1);
            let dir = line_dir(&lines[k]);
            assert!(!list.is_empty(), "line parallel to every other line");
            let mut pieces: Vec<(Option<usize>, Option<usize>)> = Vec::new();
            pieces.push((None, Some(list[0].1)));
            for w in list.windows(2) {
                pieces.push((Some(w[0].1), Some(w[1].1)));
            }
            pieces.push((Some(list[list.len() - 1].1), None));
            for (a, b) in pieces {
                let (interior, verts, rays) = match (a, b) {
                    (Some(a), Some(b)) => {
                        let pa = &points[a];
                        let pb = &points[b];
                        let m = [(&pa[0] + &pb[0]) / Rat::from_int(2), (&pa[1] + &pb[1]) / Rat::from_int(2)];
                        (m, vec![a, b], Vec::new())
                    }
                    (None, Some(b)) => {
                        let r = [-dir[0], -dir[1]];
                        (along(&points[b], r, &Rat::one()), vec![b], vec![r])
                    }
                    (Some(a), None) => (along(&points[a], dir, &Rat::one()), vec![a], vec![dir]),
                    (None, None) => unreachable!(),
                };
                let mut constraints =
                    vec![Constraint2 { normal: lines[k].normal, offset: lines[k].offset.clone(), equality: true }];
                for &v in &verts {
                    let j = *through[v].iter().find(|&&j| j != k).expect("vertex on two lines");
                    let s = lines[j].side(&interior);
                    let (nn, off) = if s > 0 {
                        (lines[j].normal, lines[j].offset.clone())
                    } else {
                        ([-lines[j].normal[0], -lines[j].normal[1]], -&lines[j].offset)
                    };
                    constraints.push(Constraint2 { normal: nn, offset: off, equality: false });
                }
                let face = faces.len();
                let mut subfaces = vec![face];
                subfaces.extend(verts.iter().copied());
                faces.push(Face2 { dim: 1, constraints, vertices: verts, rays, subfaces, interior });
                edges.push(EdgeTmp { line: k, face });
                signs_of_edge.push(Vec::new());
            }
        }
        for (ei, e) in edges.iter().enumerate() {
            let p = &faces[e.face].interior;
            signs_of_edge[ei] = lines.iter().map(|l| l.side(p) as i8).collect();
        }

        let mut region_id: BTreeMap<Vec<i8>, usize> = BTreeMap::new();
        let mut region_edges: Vec<Vec<usize>> = Vec::new();
        for (ei, e) in edges.iter().enumerate() {
            for s in [1i8, -1] {
                let mut key = signs_of_edge[ei].clone();
                key[e.line] = s;
                let r = *region_id.entry(key).or_insert_with(|| {
                    region_edges.push(Vec::new());
                    region_edges.len() - 1
                });
                region_edges[r].push(ei);
            }
        }
        let mut regions: Vec<(Vec<i8>, usize)> = region_id.into_iter().collect();
        regions.sort_by_key(|(_, r)| *r);
        for (key, r) in regions {
            let bedges = &region_edges[r];
            let mut verts: Vec<usize> = Vec::new();
            let mut rays: Vec<[i64; 2]> = Vec::new();
            let mut constraints: Vec<Constraint2> = Vec::new();
            let mut subfaces: Vec<usize> = Vec::new();
            for &ei in bedges {
                let f = &faces[edges[ei].face];
                subfaces.push(edges[ei].face);
                for &v in &f.vertices {
                    if !verts.contains(&v) {
                        verts.push(v);
                    }
                }
                for r in &f.rays {
                    if !rays.contains(r) {
                        rays.push(*r);
                    }
                }
                let k = edges[ei].line;
                let c = if key[k] > 0 {
                    Constraint2 { normal: lines[k].normal, offset: lines[k].offset.clone(), equality: false }
                } else {
                    Constraint2 {
                        normal: [-lines[k].normal[0], -lines[k].normal[1]],
                        offset: -&lines[k].offset,
                        equality: false,
                    }
                };
                if !constraints.contains(&c) {
                    constraints.push(c);
                }
            }
            verts.sort_unstable();
            subfaces.sort_unstable();
            subfaces.dedup();
            subfaces.extend(verts.iter().copied());
            let pts: Vec<&Vec2> = verts.iter().map(|&v| &points[v]).collect();
            let interior = centroid(&pts, &rays);
            let face = faces.len();
            subfaces.insert(0, face);
            faces.push(Face2 { dim: 2, constraints, vertices: verts, rays, subfaces, interior });
        }

        Arrangement2 { lines, faces, n_vertices: nv, points }
    }

    /// Whether `p` lies in the face `f`.
    pub fn face_contains(&self, f: usize, p: &Vec2) -> bool {
        self.faces[f].constraints.iter().all(|c| c.holds(p))
    }

    /// Closed range of `w · p` over the closure of face `f`; `None` stands for
    /// an infinite end.
    pub fn range(&self, f: usize, w: [i64; 2]) -> (Option<Rat>, Option<Rat>) {
        let face = &self.faces[f];
        let mut lo: Option<Rat> = None;
        let mut hi: Option<Rat> = None;
        for &v in &face.vertices {
            let x = idot2(w, &self.points[v]);
            if lo.as_ref().is_none_or(|l| &x < l) {
                lo = Some(x.clone());
            }
            if hi.as_ref().is_none_or(|h| &x > h) {
                hi = Some(x);
            }
        }
        let mut lo_inf = false;
        let mut hi_inf = false;
        for r in &face.rays {
            let s = w[0] * r[0] + w[1] * r[1];
            if s < 0 {
                lo_inf = true;
            }
            if s > 0 {
                hi_inf = true;
            }
        }
        (if lo_inf { None } else { lo }, if hi_inf { None } else { hi })
    }
}

/// Whether two closed ranges with infinite ends meet.
pub fn ranges_meet(a: &(Option<Rat>, Option<Rat>), b: &(Option<Rat>, Option<Rat>)) -> bool {
    let ok1 = match (&a.0, &b.1) {
        (Some(l), Some(h)) => l <= h,
        _ => true,
    };
    let ok2 = match (&b.0, &a.1) {
        (Some(l), Some(h)) => l <= h,
        _ => true,
    };
    ok1 && ok2
}
