//! Smooth tropical (3,3)-curves in `TP^1 x TP^1`.
//!
//! A curve is the corner locus of `max_{i,j} (A_ij + i·s + j·t)` over the
//! lattice points of the square `[0,3]^2`. Its dual subdivision is read off
//! the upper hull of the lifted points `(i, j, A_ij)`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::plane::{direction_between, icross2, idot2, HalfPlane, Vec2};
use crate::rat::Rat;

/// A lattice point of the Newton square.
pub type Lattice = [i64; 2];

/// Errors raised when building a curve.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CurveError {
    /// Some cell of the dual subdivision is not a unimodular triangle.
    #[error("not smooth")]
    NotSmooth,
    /// Some monomial never attains the maximum, so the curve is not smooth.
    #[error("not smooth: degenerate")]
    Degenerate,
}

/// Tropical coefficients `A[i][j]` of the monomials `i·s + j·t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoeffMatrix {
    /// Row index `i` is the exponent of `s`, column index `j` that of `t`.
    pub a: [[Rat; 4]; 4],
}

impl CoeffMatrix {
    /// Builds the matrix entrywise.
    pub fn from_fn(mut f: impl FnMut(usize, usize) -> Rat) -> CoeffMatrix {
        CoeffMatrix { a: core::array::from_fn(|i| core::array::from_fn(|j| f(i, j))) }
    }

    /// Coefficient of the lattice point `p`.
    pub fn at(&self, p: Lattice) -> &Rat {
        &self.a[p[0] as usize][p[1] as usize]
    }

    /// Value of the monomial `p` at `x`.
    pub fn monomial(&self, p: Lattice, x: &Vec2) -> Rat {
        self.at(p) + &idot2(p, x)
    }
}

/// Regular subdivision of the Newton square dual to the curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualSubdivision {
    /// Triangles, each with its vertices sorted.
    pub triangles: Vec<[Lattice; 3]>,
    /// Edges, each with its endpoints sorted.
    pub edges: Vec<[Lattice; 2]>,
    /// Lattice points used by the subdivision.
    pub vertices: Vec<Lattice>,
}

/// A vertex of the curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaVertex {
    /// Location in `R^2`.
    pub point: Vec2,
    /// Dual triangle.
    pub triangle: [Lattice; 3],
}

/// A bounded edge of the curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaEdge {
    /// Vertex ids of the two endpoints.
    pub endpoints: [usize; 2],
    /// Primitive direction from the first endpoint to the second.
    pub direction: [i64; 2],
    /// Dual interior edge of the subdivision.
    pub dual: [Lattice; 2],
}

/// An unbounded edge of the curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaLeg {
    /// Vertex id of the endpoint.
    pub endpoint: usize,
    /// Primitive direction, one of `±e1`, `±e2`.
    pub direction: [i64; 2],
    /// Dual boundary edge of the subdivision.
    pub dual: [Lattice; 2],
}

/// A connected component of the complement of the curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chamber {
    /// Dual lattice point.
    pub dual: Lattice,
    /// Strict inequalities describing the open chamber.
    pub halfplanes: Vec<HalfPlane>,
}

/// The stratum of the plane containing a point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Stratum {
    /// Open chamber dual to a lattice point.
    Chamber(Lattice),
    /// Relative interior of a bounded edge.
    EdgeInterior(usize),
    /// Relative interior of a leg.
    LegInterior(usize),
    /// A vertex.
    Vertex(usize),
}

/// A piece of the curve: a bounded edge or a leg.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Piece {
    /// Bounded edge id.
    Edge(usize),
    /// Leg id.
    Leg(usize),
}

/// A smooth tropical (3,3)-curve.
#[derive(Clone, Debug)]
pub struct CurveGamma {
    /// Defining coefficients.
    pub coeffs: CoeffMatrix,
    /// Dual unimodular triangulation.
    pub subdivision: DualSubdivision,
    /// Vertices, one per triangle.
    pub vertices: Vec<GammaVertex>,
    /// Bounded edges, one per interior edge of the triangulation.
    pub edges: Vec<GammaEdge>,
    /// Legs, one per boundary edge of the triangulation.
    pub legs: Vec<GammaLeg>,
    /// Chambers, one per lattice point.
    pub chambers: Vec<Chamber>,
    /// For each vertex, the pieces leaving it with their outgoing directions.
    pub star: Vec<Vec<(Piece, [i64; 2])>>,
}

fn lattice_points() -> Vec<Lattice> {
    let mut v = Vec::with_capacity(16);
    for i in 0..4 {
        for j in 0..4 {
            v.push([i, j]);
        }
    }
    v
}

fn on_boundary(e: &[Lattice; 2]) -> bool {
    (0..2).any(|c| (e[0][c] == 0 && e[1][c] == 0) || (e[0][c] == 3 && e[1][c] == 3))
}

/// Cells of the regular subdivision induced by the upper hull of the lift.
fn upper_hull_cells(a: &CoeffMatrix) -> (Vec<Vec<Lattice>>, Vec<Lattice>) {
    let pts = lattice_points();
    let mut cells: Vec<Vec<Lattice>> = Vec::new();
    let mut used = [false; 16];
    let n = pts.len();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let (p, q, r) = (pts[i], pts[j], pts[k]);
                let u = [q[0] - p[0], q[1] - p[1]];
                let w = [r[0] - p[0], r[1] - p[1]];
                let det = icross2(u, w);
                if det == 0 {
                    continue;
                }
                // the lifted plane is z = c + alpha·x; solve for alpha
                let du = a.at(q) - a.at(p);
                let dw = a.at(r) - a.at(p);
                let d = Rat::from_int(det);
                let ax = (&(&du * &Rat::from_int(w[1])) - &(&dw * &Rat::from_int(u[1]))) / &d;
                let ay = (&(&dw * &Rat::from_int(u[0])) - &(&du * &Rat::from_int(w[0]))) / &d;
                let height = |m: Lattice| -> Rat {
                    a.at(m) - a.at(p) - &(&ax * &Rat::from_int(m[0] - p[0])) - &(&ay * &Rat::from_int(m[1] - p[1]))
                };
                let mut on: Vec<Lattice> = Vec::new();
                let mut ok = true;
                for &m in &pts {
                    match height(m).signum() {
                        1 => {
                            ok = false;
                            break;
                        }
                        0 => on.push(m),
                        _ => {}
                    }
                }
                if ok && !cells.contains(&on) {
                    for m in &on {
                        used[(m[0] * 4 + m[1]) as usize] = true;
                    }
                    cells.push(on);
                }
            }
        }
    }
    let unused = pts.iter().copied().filter(|m| !used[(m[0] * 4 + m[1]) as usize]).collect();
    (cells, unused)
}

fn vertex_of(a: &CoeffMatrix, t: &[Lattice; 3]) -> Vec2 {
    let (p, q, r) = (t[0], t[1], t[2]);
    let u = [q[0] - p[0], q[1] - p[1]];
    let w = [r[0] - p[0], r[1] - p[1]];
    // (q - p)·x = A_p - A_q and (r - p)·x = A_p - A_r
    let bu = a.at(p) - a.at(q);
    let bw = a.at(p) - a.at(r);
    let d = Rat::from_int(icross2(u, w));
    let x = (&(&bu * &Rat::from_int(w[1])) - &(&bw * &Rat::from_int(u[1]))) / &d;
    let y = (&(&bw * &Rat::from_int(u[0])) - &(&bu * &Rat::from_int(w[0]))) / &d;
    [x, y]
}

/// Builds the curve of a coefficient matrix, checking smoothness.
pub fn build_curve(a: &CoeffMatrix) -> Result<CurveGamma, CurveError> {
    let (cells, unused) = upper_hull_cells(a);
    if !unused.is_empty() {
        return Err(CurveError::Degenerate);
    }
    let mut triangles: Vec<[Lattice; 3]> = Vec::new();
    for c in &cells {
        if c.len() != 3 {
            return Err(CurveError::NotSmooth);
        }
        let mut t = [c[0], c[1], c[2]];
        t.sort();
        let det = icross2([t[1][0] - t[0][0], t[1][1] - t[0][1]], [t[2][0] - t[0][0], t[2][1] - t[0][1]]);
        if det.abs() != 1 {
            return Err(CurveError::NotSmooth);
        }
        triangles.push(t);
    }
    if triangles.len() != 18 {
        return Err(CurveError::NotSmooth);
    }
    triangles.sort();

    let mut edge_tris: BTreeMap<[Lattice; 2], Vec<usize>> = BTreeMap::new();
    for (ti, t) in triangles.iter().enumerate() {
        for (x, y) in [(0, 1), (0, 2), (1, 2)] {
            edge_tris.entry([t[x], t[y]]).or_default().push(ti);
        }
    }
    let vertices: Vec<GammaVertex> = triangles
        .iter()
        .map(|t| GammaVertex { point: vertex_of(a, t), triangle: *t })
        .collect();

    let mut edges = Vec::new();
    let mut legs = Vec::new();
    for (e, ts) in &edge_tris {
        if on_boundary(e) {
            if ts.len() != 1 {
                return Err(CurveError::NotSmooth);
            }
            let direction = if e[0][0] == 0 && e[1][0] == 0 {
                [-1, 0]
            } else if e[0][0] == 3 && e[1][0] == 3 {
                [1, 0]
            } else if e[0][1] == 0 && e[1][1] == 0 {
                [0, -1]
            } else {
                [0, 1]
            };
            legs.push(GammaLeg { endpoint: ts[0], direction, dual: *e });
        } else {
            if ts.len() != 2 {
                return Err(CurveError::NotSmooth);
            }
            let (p, q) = (&vertices[ts[0]].point, &vertices[ts[1]].point);
            if p == q {
                return Err(CurveError::NotSmooth);
            }
            let direction = direction_between(p, q);
            edges.push(GammaEdge { endpoints: [ts[0], ts[1]], direction, dual: *e });
        }
    }

    let mut star: Vec<Vec<(Piece, [i64; 2])>> = vec![Vec::new(); vertices.len()];
    for (id, e) in edges.iter().enumerate() {
        star[e.endpoints[0]].push((Piece::Edge(id), e.direction));
        star[e.endpoints[1]].push((Piece::Edge(id), [-e.direction[0], -e.direction[1]]));
    }
    for (id, l) in legs.iter().enumerate() {
        star[l.endpoint].push((Piece::Leg(id), l.direction));
    }

    let mut neighbours: BTreeMap<Lattice, Vec<Lattice>> = BTreeMap::new();
    for e in edge_tris.keys() {
        neighbours.entry(e[0]).or_default().push(e[1]);
        neighbours.entry(e[1]).or_default().push(e[0]);
    }
    let chambers = lattice_points()
        .into_iter()
        .map(|m| {
            let halfplanes = neighbours[&m]
                .iter()
                .map(|k| HalfPlane {
                    normal: [m[0] - k[0], m[1] - k[1]],
                    offset: a.at(*k) - a.at(m),
                    strict: true,
                })
                .collect();
            Chamber { dual: m, halfplanes }
        })
        .collect();

    let subdivision = DualSubdivision {
        edges: edge_tris.keys().copied().collect(),
        triangles,
        vertices: lattice_points(),
    };
    Ok(CurveGamma { coeffs: a.clone(), subdivision, vertices, edges, legs, chambers, star })
}

impl CurveGamma {
    /// The stratum containing `p`.
    pub fn locate(&self, p: &Vec2) -> Stratum {
        let mut best: Option<Rat> = None;
        let mut arg: Vec<Lattice> = Vec::new();
        for m in lattice_points() {
            let v = self.coeffs.monomial(m, p);
            match &best {
                Some(b) if &v < b => {}
                Some(b) if &v == b => arg.push(m),
                _ => {
                    best = Some(v);
                    arg.clear();
                    arg.push(m);
                }
            }
        }
        match arg.len() {
            1 => Stratum::Chamber(arg[0]),
            2 => {
                let e = [arg[0], arg[1]];
                if let Some(id) = self.edges.iter().position(|x| x.dual == e) {
                    Stratum::EdgeInterior(id)
                } else {
                    Stratum::LegInterior(self.legs.iter().position(|x| x.dual == e).expect("dual edge"))
                }
            }
            3 => {
                let t = [arg[0], arg[1], arg[2]];
                Stratum::Vertex(self.vertices.iter().position(|x| x.triangle == t).expect("dual triangle"))
            }
            _ => unreachable!("smooth curve has no cell with four lattice points"),
        }
    }

    /// Lattice points of the dual cell of a stratum.
    pub fn dual_cell(&self, s: Stratum) -> Vec<Lattice> {
        match s {
            Stratum::Chamber(m) => vec![m],
            Stratum::EdgeInterior(i) => self.edges[i].dual.to_vec(),
            Stratum::LegInterior(i) => self.legs[i].dual.to_vec(),
            Stratum::Vertex(i) => self.vertices[i].triangle.to_vec(),
        }
    }

    /// Base point, direction and (for bounded edges) parameter length of a
    /// piece, parameterized as `base + t·direction`.
    pub fn piece_geometry(&self, p: Piece) -> (&Vec2, [i64; 2], Option<Rat>) {
        match p {
            Piece::Edge(i) => {
                let e = &self.edges[i];
                let a = &self.vertices[e.endpoints[0]].point;
                let b = &self.vertices[e.endpoints[1]].point;
                let c = if e.direction[0] != 0 { 0 } else { 1 };
                let t = (&b[c] - &a[c]) / Rat::from_int(e.direction[c]);
                (a, e.direction, Some(t))
            }
            Piece::Leg(i) => {
                let l = &self.legs[i];
                (&self.vertices[l.endpoint].point, l.direction, None)
            }
        }
    }

    /// All pieces of the curve.
    pub fn pieces(&self) -> impl Iterator<Item = Piece> + '_ {
        (0..self.edges.len()).map(Piece::Edge).chain((0..self.legs.len()).map(Piece::Leg))
    }

    /// Directions of all edges and legs.
    pub fn directions(&self) -> Vec<[i64; 2]> {
        let mut d: Vec<[i64; 2]> = self.edges.iter().map(|e| e.direction).collect();
        d.extend(self.legs.iter().map(|l| l.direction));
        d
    }

    /// Dual lattice points of a piece.
    pub fn piece_dual(&self, p: Piece) -> [Lattice; 2] {
        match p {
            Piece::Edge(i) => self.edges[i].dual,
            Piece::Leg(i) => self.legs[i].dual,
        }
    }
}

/// One of the eight symmetries of the Newton square.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct D4Element {
    /// Linear part, a signed permutation matrix.
    pub m: [[i64; 2]; 2],
}

impl D4Element {
    /// The identity.
    pub const IDENTITY: D4Element = D4Element { m: [[1, 0], [0, 1]] };

    /// All eight elements: four rotations followed by four reflections.
    pub fn all() -> [D4Element; 8] {
        [
            D4Element { m: [[1, 0], [0, 1]] },
            D4Element { m: [[0, -1], [1, 0]] },
            D4Element { m: [[-1, 0], [0, -1]] },
            D4Element { m: [[0, 1], [-1, 0]] },
            D4Element { m: [[0, 1], [1, 0]] },
            D4Element { m: [[-1, 0], [0, 1]] },
            D4Element { m: [[1, 0], [0, -1]] },
            D4Element { m: [[0, -1], [-1, 0]] },
        ]
    }

    /// Index in [`D4Element::all`].
    pub fn index(&self) -> usize {
        D4Element::all().iter().position(|g| g == self).expect("group element")
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &D4Element) -> D4Element {
        let a = &self.m;
        let b = &other.m;
        D4Element {
            m: [
                [a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
                [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]],
            ],
        }
    }

    /// Inverse element (the transpose).
    pub fn inverse(&self) -> D4Element {
        D4Element { m: [[self.m[0][0], self.m[1][0]], [self.m[0][1], self.m[1][1]]] }
    }

    /// Action on integer vectors.
    pub fn apply_dir(&self, v: [i64; 2]) -> [i64; 2] {
        [self.m[0][0] * v[0] + self.m[0][1] * v[1], self.m[1][0] * v[0] + self.m[1][1] * v[1]]
    }

    /// Action on the lattice points of the square.
    pub fn apply_lattice(&self, p: Lattice) -> Lattice {
        let q = self.apply_dir(p);
        let t = [3 * (1 - self.m[0][0] - self.m[0][1]) / 2, 3 * (1 - self.m[1][0] - self.m[1][1]) / 2];
        [q[0] + t[0], q[1] + t[1]]
    }

    /// Linear action on `R^2`.
    pub fn apply_point(&self, p: &Vec2) -> Vec2 {
        let row = |r: [i64; 2]| idot2(r, p);
        [row(self.m[0]), row(self.m[1])]
    }
}

/// Transforms coefficients by `A'_{g(m)} = A_m`.
pub fn d4_coeffs(g: &D4Element, a: &CoeffMatrix) -> CoeffMatrix {
    let inv = g.inverse();
    CoeffMatrix::from_fn(|i, j| a.at(inv.apply_lattice([i as i64, j as i64])).clone())
}

/// The curve of the transformed coefficient matrix; its support is the image
/// of the original support under the linear part of `g`.
pub fn d4_apply(g: &D4Element, c: &CurveGamma) -> CurveGamma {
    build_curve(&d4_coeffs(g, &c.coeffs)).expect("symmetries preserve smoothness")
}
