//! Exact polyhedra of dimension at most three.
//!
//! A [`Polyhedron3`] carries both an H-representation (a list of possibly
//! strict half-spaces) and the V-representation of its topological closure
//! (vertices, extreme rays and a lineality basis). Relatively open cells are
//! described by strict half-spaces; such a cell is flagged empty when its
//! closure is empty or when the closure's relative interior violates a strict
//! inequality.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::rat::Rat;

/// A point of `R^3` with exact coordinates.
pub type Vec3 = [Rat; 3];

/// Errors raised by polyhedral operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeometryError {
    /// The polyhedron has no points.
    #[error("empty cell")]
    EmptyCell,
    /// A half-space was given the zero normal.
    #[error("zero normal")]
    ZeroNormal,
}

/// Builds a point of `R^3` from integers.
pub fn v3(x: i64, y: i64, z: i64) -> Vec3 {
    [Rat::from_int(x), Rat::from_int(y), Rat::from_int(z)]
}

/// Integer dot product of an integer vector with a rational point.
pub fn idot3(a: &[i64; 3], x: &Vec3) -> Rat {
    let mut s = Rat::zero();
    for i in 0..3 {
        if a[i] != 0 {
            s += &(Rat::from_int(a[i]) * &x[i]);
        }
    }
    s
}

fn icross(a: &[i64; 3], b: &[i64; 3]) -> [i64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn idet3(a: &[i64; 3], b: &[i64; 3], c: &[i64; 3]) -> i64 {
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
}

fn igcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Divides an integer vector by the gcd of its entries.
pub fn primitive3(v: [i64; 3]) -> [i64; 3] {
    let g = igcd(igcd(v[0], v[1]), v[2]);
    if g <= 1 {
        return v;
    }
    [v[0] / g, v[1] / g, v[2] / g]
}

/// A closed or open half-space `normal · x >= offset` (`>` when strict).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HalfSpace3 {
    /// Primitive integer normal.
    pub normal: [i64; 3],
    /// Right-hand side.
    pub offset: Rat,
    /// Whether the inequality is strict.
    pub strict: bool,
}

impl fmt::Debug for HalfSpace3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?}·x {} {}",
            self.normal,
            if self.strict { ">" } else { ">=" },
            self.offset
        )
    }
}

impl HalfSpace3 {
    /// `normal · x >= offset` with the normal made primitive.
    pub fn new(normal: [i64; 3], offset: Rat, strict: bool) -> Result<HalfSpace3, GeometryError> {
        let g = igcd(igcd(normal[0], normal[1]), normal[2]);
        if g == 0 {
            return Err(GeometryError::ZeroNormal);
        }
        Ok(HalfSpace3 {
            normal: [normal[0] / g, normal[1] / g, normal[2] / g],
            offset: offset / Rat::from_int(g),
            strict,
        })
    }

    /// Closed half-space `normal · x >= offset`.
    pub fn ge(normal: [i64; 3], offset: Rat) -> HalfSpace3 {
        HalfSpace3::new(normal, offset, false).expect("nonzero normal")
    }

    /// Closed half-space `normal · x <= offset`.
    pub fn le(normal: [i64; 3], offset: Rat) -> HalfSpace3 {
        HalfSpace3::ge([-normal[0], -normal[1], -normal[2]], -offset)
    }

    /// Open half-space `normal · x > offset`.
    pub fn gt(normal: [i64; 3], offset: Rat) -> HalfSpace3 {
        HalfSpace3::new(normal, offset, true).expect("nonzero normal")
    }

    /// Open half-space `normal · x < offset`.
    pub fn lt(normal: [i64; 3], offset: Rat) -> HalfSpace3 {
        HalfSpace3::gt([-normal[0], -normal[1], -normal[2]], -offset)
    }

    /// The hyperplane `normal · x = offset` as two closed half-spaces.
    pub fn eq(normal: [i64; 3], offset: Rat) -> [HalfSpace3; 2] {
        [HalfSpace3::ge(normal, offset.clone()), HalfSpace3::le(normal, offset)]
    }

    /// `normal · x - offset`.
    pub fn slack(&self, x: &Vec3) -> Rat {
        idot3(&self.normal, x) - &self.offset
    }

    /// Membership, honouring strictness.
    pub fn contains(&self, x: &Vec3) -> bool {
        let s = self.slack(x).signum();
        if self.strict {
            s > 0
        } else {
            s >= 0
        }
    }

    /// Membership in the closure.
    pub fn contains_closed(&self, x: &Vec3) -> bool {
        self.slack(x).signum() >= 0
    }

    /// The same inequality without strictness.
    pub fn closed(&self) -> HalfSpace3 {
        HalfSpace3 { strict: false, ..self.clone() }
    }
}

/// A polyhedron in `R^3` with both representations.
#[derive(Clone, Debug)]
pub struct Polyhedron3 {
    /// Defining half-spaces.
    pub halfspaces: Vec<HalfSpace3>,
    /// Vertices of the closure (of its pointed part when lines are present).
    pub vertices: Vec<Vec3>,
    /// Extreme rays of the closure, primitive integer vectors.
    pub rays: Vec<[i64; 3]>,
    /// Basis of the lineality space, empty for pointed polyhedra.
    pub lines: Vec<[i64; 3]>,
    /// Affine dimension, `-1` when empty.
    pub dim: i8,
    /// Whether the described set is empty.
    pub empty: bool,
}

fn solve3(planes: [&([i64; 3], Rat); 3], det: i64) -> Vec3 {
    let a = [planes[0].0, planes[1].0, planes[2].0];
    let b = [&planes[0].1, &planes[1].1, &planes[2].1];
    let d = Rat::from_int(det);
    let mut out: Vec3 = [Rat::zero(), Rat::zero(), Rat::zero()];
    for k in 0..3 {
        let mut acc = Rat::zero();
        for r in 0..3 {
            let (i, j) = ((r + 1) % 3, (r + 2) % 3);
            let (c1, c2) = ((k + 1) % 3, (k + 2) % 3);
            let minor = a[i][c1] * a[j][c2] - a[i][c2] * a[j][c1];
            if minor != 0 && !b[r].is_zero() {
                acc += &(Rat::from_int(minor) * b[r]);
            }
        }
        out[k] = acc / &d;
    }
    out
}

fn rank_int(vs: &[[i64; 3]]) -> usize {
    let mut basis: Vec<[i64; 3]> = Vec::new();
    for v in vs {
        if *v == [0, 0, 0] {
            continue;
        }
        match basis.len() {
            0 => basis.push(*v),
            1 => {
                if icross(&basis[0], v) != [0, 0, 0] {
                    basis.push(*v);
                }
            }
            2 => {
                if idet3(&basis[0], &basis[1], v) != 0 {
                    return 3;
                }
            }
            _ => return 3,
        }
    }
    basis.len()
}

/// Rank of a family of rational vectors in `R^3`.
pub fn rank_rat(vs: &[Vec3]) -> usize {
    let mut rows: Vec<Vec3> = vs.iter().filter(|v| v.iter().any(|c| !c.is_zero())).cloned().collect();
    let mut rank = 0;
    for col in 0..3 {
        let piv = (rank..rows.len()).find(|&r| !rows[r][col].is_zero());
        let Some(p) = piv else { continue };
        rows.swap(rank, p);
        let pv = rows[rank][col].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = &rows[r][col] / &pv;
                for c in 0..3 {
                    let t = &f * &rows[rank][c];
                    rows[r][c] -= &t;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn lineality_basis(normals: &[[i64; 3]]) -> Vec<[i64; 3]> {
    let nz: Vec<[i64; 3]> = normals.iter().copied().filter(|n| *n != [0, 0, 0]).collect();
    match rank_int(&nz) {
        0 => vec![[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        1 => {
            let n = nz[0];
            let mut out: Vec<[i64; 3]> = Vec::new();
            for e in [[1, 0, 0], [0, 1, 0], [0, 0, 1]] {
                let c = primitive3(icross(&n, &e));
                if c == [0, 0, 0] {
                    continue;
                }
                if out.is_empty() || icross(&out[0], &c) != [0, 0, 0] {
                    out.push(c);
                }
                if out.len() == 2 {
                    break;
                }
            }
            out
        }
        2 => {
            let a = nz[0];
            let b = *nz.iter().find(|v| icross(&a, v) != [0, 0, 0]).expect("rank two");
            vec![primitive3(icross(&a, &b))]
        }
        _ => Vec::new(),
    }
}

fn normalize_ray(r: [i64; 3]) -> [i64; 3] {
    primitive3(r)
}

/// Computes the V-representation of the set cut out by `halfspaces`.
///
/// Vertices and rays describe the topological closure. The result is flagged
/// empty when the closure is empty or when no point satisfies the strict
/// inequalities.
pub fn make_polyhedron(halfspaces: Vec<HalfSpace3>) -> Polyhedron3 {
    let normals: Vec<[i64; 3]> = halfspaces.iter().map(|h| h.normal).collect();
    let lines = lineality_basis(&normals);
    let mut planes: Vec<([i64; 3], Rat)> = halfspaces.iter().map(|h| (h.normal, h.offset.clone())).collect();
    for l in &lines {
        planes.push((*l, Rat::zero()));
    }
    let n_hs = halfspaces.len();
    let feasible = |x: &Vec3| -> bool {
        halfspaces.iter().all(|h| h.contains_closed(x))
            && lines.iter().all(|l| idot3(l, x).is_zero())
    };

    let mut vertices: Vec<Vec3> = Vec::new();
    let m = planes.len();
    for i in 0..m {
        for j in (i + 1)..m {
            let cij = icross(&planes[i].0, &planes[j].0);
            if cij == [0, 0, 0] {
                continue;
            }
            for k in (j + 1)..m {
                let det = cij[0] * planes[k].0[0] + cij[1] * planes[k].0[1] + cij[2] * planes[k].0[2];
                if det == 0 {
                    continue;
                }
                let x = solve3([&planes[i], &planes[j], &planes[k]], det);
                if !vertices.contains(&x) && feasible(&x) {
                    vertices.push(x);
                }
            }
        }
    }
    if vertices.is_empty() {
        return Polyhedron3 { halfspaces, vertices, rays: Vec::new(), lines, dim: -1, empty: true };
    }

    let cone_ok = |r: &[i64; 3]| -> bool {
        halfspaces.iter().all(|h| {
            h.normal[0] * r[0] + h.normal[1] * r[1] + h.normal[2] * r[2] >= 0
        }) && lines.iter().all(|l| l[0] * r[0] + l[1] * r[1] + l[2] * r[2] == 0)
    };
    let mut rays: Vec<[i64; 3]> = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            let c = normalize_ray(icross(&planes[i].0, &planes[j].0));
            if c == [0, 0, 0] {
                continue;
            }
            for r in [c, [-c[0], -c[1], -c[2]]] {
                if !rays.contains(&r) && cone_ok(&r) {
                    rays.push(r);
                }
            }
        }
    }
    if rays.len() > 1 {
        // keep only extreme rays: a ray is extreme when the constraints tight on it have rank two
        let tight_rank = |r: &[i64; 3]| -> usize {
            let tight: Vec<[i64; 3]> = planes
                .iter()
                .filter(|(a, _)| a[0] * r[0] + a[1] * r[1] + a[2] * r[2] == 0)
                .map(|(a, _)| *a)
                .collect();
            rank_int(&tight)
        };
        rays.retain(|r| tight_rank(r) >= 2);
    }
    let _ = n_hs;

    let mut span: Vec<Vec3> = Vec::new();
    for v in vertices.iter().skip(1) {
        span.push([&v[0] - &vertices[0][0], &v[1] - &vertices[0][1], &v[2] - &vertices[0][2]]);
    }
    for r in rays.iter().chain(lines.iter()) {
        span.push([Rat::from_int(r[0]), Rat::from_int(r[1]), Rat::from_int(r[2])]);
    }
    let dim = rank_rat(&span) as i8;
    let mut p = Polyhedron3 { halfspaces, vertices, rays, lines, dim, empty: false };
    if p.halfspaces.iter().any(|h| h.strict) {
        let x = interior_point_unchecked(&p);
        if !p.halfspaces.iter().all(|h| h.contains(&x)) {
            p.empty = true;
            p.dim = -1;
        }
    }
    p
}

fn interior_point_unchecked(p: &Polyhedron3) -> Vec3 {
    let n = Rat::from_int(p.vertices.len() as i64);
    let mut out: Vec3 = [Rat::zero(), Rat::zero(), Rat::zero()];
    for v in &p.vertices {
        for c in 0..3 {
            out[c] += &v[c];
        }
    }
    for c in 0..3 {
        out[c] = &out[c] / &n;
    }
    for r in &p.rays {
        for c in 0..3 {
            if r[c] != 0 {
                out[c] += &Rat::from_int(r[c]);
            }
        }
    }
    out
}

/// Deterministic relative-interior point: vertex barycenter plus the sum of
/// the extreme rays.
pub fn interior_point(p: &Polyhedron3) -> Result<Vec3, GeometryError> {
    if p.empty {
        return Err(GeometryError::EmptyCell);
    }
    Ok(interior_point_unchecked(p))
}

impl Polyhedron3 {
    /// Membership of `x` in the described (possibly relatively open) set.
    pub fn contains(&self, x: &Vec3) -> bool {
        !self.empty && self.halfspaces.iter().all(|h| h.contains(x))
    }

    /// Membership of `x` in the closure.
    pub fn contains_closed(&self, x: &Vec3) -> bool {
        !self.empty && self.halfspaces.iter().all(|h| h.contains_closed(x))
    }

    /// Whether the polyhedron is bounded.
    pub fn is_bounded(&self) -> bool {
        self.rays.is_empty() && self.lines.is_empty()
    }

    /// Half-spaces of the closure.
    pub fn closed_halfspaces(&self) -> Vec<HalfSpace3> {
        self.halfspaces.iter().map(|h| h.closed()).collect()
    }

    /// Whether every generator of the closure satisfies `h` (closed sense).
    pub fn generators_satisfy(&self, h: &HalfSpace3) -> bool {
        self.vertices.iter().all(|v| h.contains_closed(v))
            && self
                .rays
                .iter()
                .all(|r| h.normal[0] * r[0] + h.normal[1] * r[1] + h.normal[2] * r[2] >= 0)
            && self
                .lines
                .iter()
                .all(|r| h.normal[0] * r[0] + h.normal[1] * r[1] + h.normal[2] * r[2] == 0)
    }
}

/// Whether the closures of two polyhedra meet.
pub fn closures_intersect(a: &Polyhedron3, b: &Polyhedron3) -> bool {
    if a.empty || b.empty {
        return false;
    }
    let mut hs = a.closed_halfspaces();
    hs.extend(b.closed_halfspaces());
    !make_polyhedron(hs).empty
}

/// A finite collection of cells together with a face-containment relation.
#[derive(Clone, Debug, Default)]
pub struct CellComplex3 {
    /// The cells.
    pub cells: Vec<Polyhedron3>,
    /// Pairs `(i, j)` meaning cell `i` lies in the closure of cell `j`.
    pub adjacency: Vec<(usize, usize)>,
    /// When set, closures of two cells meet only along a common cell listed in
    /// the complex, so `adjacency` alone determines connectivity.
    pub closed_under_faces: bool,
}

/// Union-find over `n` elements.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    /// `n` singleton sets.
    pub fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect() }
    }

    /// Representative of the set containing `x`.
    pub fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut c = x;
        while self.parent[c] != r {
            let n = self.parent[c];
            self.parent[c] = r;
            c = n;
        }
        r
    }

    /// Merges the sets of `a` and `b`.
    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    /// Groups of elements by set, each sorted, groups ordered by least member.
    pub fn groups(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut idx: Vec<Option<usize>> = vec![None; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            let r = self.find(x);
            match idx[r] {
                Some(g) => out[g].push(x),
                None => {
                    idx[r] = Some(out.len());
                    out.push(vec![x]);
                }
            }
        }
        out
    }
}

/// Splits a complex into the classes of the transitive closure of "closed
/// supports intersect". Components are ordered by their least cell index.
pub fn connected_components(k: &CellComplex3) -> Vec<CellComplex3> {
    let groups = component_groups(k);
    groups
        .into_iter()
        .map(|g| {
            let mut pos = vec![usize::MAX; k.cells.len()];
            for (new, &old) in g.iter().enumerate() {
                pos[old] = new;
            }
            CellComplex3 {
                cells: g.iter().map(|&i| k.cells[i].clone()).collect(),
                adjacency: k
                    .adjacency
                    .iter()
                    .filter(|(a, b)| pos[*a] != usize::MAX && pos[*b] != usize::MAX)
                    .map(|(a, b)| (pos[*a], pos[*b]))
                    .collect(),
                closed_under_faces: k.closed_under_faces,
            }
        })
        .collect()
}

/// Index groups of [`connected_components`].
pub fn component_groups(k: &CellComplex3) -> Vec<Vec<usize>> {
    let n = k.cells.len();
    let mut uf = UnionFind::new(n);
    for &(a, b) in &k.adjacency {
        uf.union(a, b);
    }
    if !k.closed_under_faces {
        for i in 0..n {
            for j in (i + 1)..n {
                if uf.find(i) != uf.find(j) && closures_intersect(&k.cells[i], &k.cells[j]) {
                    uf.union(i, j);
                }
            }
        }
    }
    uf.groups()
}
