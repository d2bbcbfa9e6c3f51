//! The tritangent locus in `(v0, ℓ)`-space and its decomposition into classes.
//!
//! The locus is assembled from cells of the arrangement in `R^3` cut out by
//! the conditions `a·v0 = c` and `a·v1 = c` for a fixed family of planar lines
//! `a·p = c` depending on the curve, and by `ℓ = 0`. On each side of `ℓ = 0`
//! the vertex `v1` is an affine function of `(v0, ℓ)`, so a cell is a pair of
//! planar faces `(F0, F1)` of the planar arrangement together with the sign of
//! `ℓ`: the set of `(v0, ℓ)` with `v0 ∈ F0` and `v1 ∈ F1`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::arrangement::{ranges_meet, Arrangement2, Constraint2};
use crate::curve11::Curve11Param;
use crate::curve33::{CurveGamma, Lattice, Stratum};
use crate::geometry::{interior_point, make_polyhedron, CellComplex3, HalfSpace3, Polyhedron3, UnionFind, Vec3};
use crate::intersect::{intersect_pieces, is_tritangent_multiset, stable_intersection, IntersectionComponent, LPiece};
use crate::plane::{idot2, Line2};
use crate::rat::Rat;

/// Errors raised while assembling classes and their subcomplexes.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassError {
    /// The locus did not split into fifteen classes.
    #[error("class count ≠ 15 (found {0})")]
    ClassCount(usize),
    /// The non-special bounded complex of a class is disconnected.
    #[error("disconnected Θᵇ_ns in class {0}")]
    DisconnectedNonSpecial(usize),
    /// The dimension triple of a class is not admissible.
    #[error("inadmissible dimension tuple {0:?} in class {1}")]
    InadmissibleDims((i8, i8, i8), usize),
}

/// Leg directions `-e1, -e2, e1, e2`, indexed 0..4.
pub const LEG_DIRS: [[i64; 2]; 4] = [[-1, 0], [0, -1], [1, 0], [0, 1]];

/// Identifies a cell: planar faces of `v0` and `v1` and the sign of `ℓ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellKey {
    /// Face of the planar arrangement containing `v0`.
    pub f0: usize,
    /// Face containing `v1`.
    pub f1: usize,
    /// Sign of `ℓ`.
    pub sign: i8,
}

/// The vector `d` with `v1 = v0 + ℓ·d` on the side `sign` of `ℓ = 0`.
pub fn v1_offset(sign: i8) -> [i64; 2] {
    if sign >= 0 {
        [1, 1]
    } else {
        [1, -1]
    }
}

/// The arrangement of the curve together with per-face leg data.
#[derive(Clone, Debug)]
pub struct Arrangement3 {
    /// Planar arrangement of the lines through the curve's vertices in the
    /// directions `x, y, x - y, x + y` and of the lines supporting its edges.
    pub plane: Arrangement2,
    /// For each planar face and leg direction: whether a leg from the face's
    /// points meets the curve away from its base point only in components of
    /// even multiplicity.
    pub leg_even: Vec<[bool; 4]>,
}

/// Lines of the planar arrangement of a curve.
pub fn arrangement_lines(gamma: &CurveGamma) -> Vec<Line2> {
    let mut lines = Vec::new();
    for v in &gamma.vertices {
        for n in [[1, 0], [0, 1], [1, -1], [1, 1]] {
            lines.push(Line2::new(n, idot2(n, &v.point)));
        }
    }
    for p in gamma.pieces() {
        let (base, dir, _) = gamma.piece_geometry(p);
        lines.push(Line2::through(base, dir));
    }
    lines
}

/// Hyperplanes of the arrangement in `R^3`.
pub fn arrangement_hyperplanes(gamma: &CurveGamma) -> Vec<HalfSpace3> {
    let mut out: Vec<HalfSpace3> = Vec::new();
    let mut push = |h: HalfSpace3| {
        if !out.contains(&h) {
            out.push(h);
        }
    };
    let mut lines = arrangement_lines(gamma);
    lines.sort();
    lines.dedup();
    for l in &lines {
        push(HalfSpace3::ge([l.normal[0], l.normal[1], 0], l.offset.clone()));
        for s in [1i8, -1] {
            let d = v1_offset(s);
            let nd = l.normal[0] * d[0] + l.normal[1] * d[1];
            push(HalfSpace3::ge([l.normal[0], l.normal[1], nd], l.offset.clone()));
        }
    }
    push(HalfSpace3::ge([0, 0, 1], Rat::zero()));
    out
}

impl Arrangement3 {
    /// Builds the arrangement of a curve.
    pub fn new(gamma: &CurveGamma) -> Arrangement3 {
        let plane = Arrangement2::new(arrangement_lines(gamma));
        let g = crate::intersect::perturbation_direction(gamma);
        let leg_even = plane.faces.iter().map(|f| leg_parity(gamma, &f.interior, g)).collect();
        Arrangement3 { plane, leg_even }
    }

    /// Whether a vertex with legs in the directions `dirs` may sit in face `f`.
    pub fn role_ok(&self, f: usize, dirs: &[usize]) -> bool {
        dirs.iter().all(|&d| self.leg_even[f][d])
    }
}

/// Leg parity data at a point: see [`Arrangement3::leg_even`].
pub fn leg_parity(gamma: &CurveGamma, v: &crate::plane::Vec2, g: [i64; 2]) -> [bool; 4] {
    core::array::from_fn(|k| {
        let piece = LPiece { id: crate::intersect::LambdaPieceId::Leg(k), base: v.clone(), dir: LEG_DIRS[k], len: None };
        intersect_pieces(&[piece], gamma, g)
            .iter()
            .all(|c| c.contains(v) || c.stable_mult % 2 == 0)
    })
}

/// Leg directions attached to `v0` and `v1` on each side of `ℓ = 0`.
pub fn role_dirs(sign: i8) -> (&'static [usize], &'static [usize]) {
    match sign {
        1 => (&[0, 1], &[2, 3]),
        -1 => (&[2, 1], &[0, 3]),
        _ => (&[0, 1, 2, 3], &[0, 1, 2, 3]),
    }
}

/// A cell of the tritangent locus.
#[derive(Clone, Debug)]
pub struct Cell {
    /// Combinatorial key.
    pub key: CellKey,
    /// The relatively open cell.
    pub poly: Polyhedron3,
    /// Deterministic relative-interior representative.
    pub rep: Vec3,
    /// Intersection components of the representative.
    pub comps: Vec<IntersectionComponent>,
}

impl Cell {
    /// Dimension of the cell.
    pub fn dim(&self) -> i8 {
        self.poly.dim
    }

    /// The representative as a (1,1)-curve.
    pub fn curve(&self) -> Curve11Param {
        Curve11Param::from_point(&self.rep)
    }
}

fn lift(c: &Constraint2, third: i64, out: &mut Vec<HalfSpace3>) {
    let n = [c.normal[0], c.normal[1], third];
    if c.equality {
        out.extend(HalfSpace3::eq(n, c.offset.clone()));
    } else {
        out.push(HalfSpace3::gt(n, c.offset.clone()));
    }
}

/// Half-spaces describing the cell `key`.
pub fn cell_halfspaces(arr: &Arrangement3, key: CellKey) -> Vec<HalfSpace3> {
    let mut hs = Vec::new();
    for c in &arr.plane.faces[key.f0].constraints {
        lift(c, 0, &mut hs);
    }
    match key.sign {
        0 => hs.extend(HalfSpace3::eq([0, 0, 1], Rat::zero())),
        s => {
            let d = v1_offset(s);
            for c in &arr.plane.faces[key.f1].constraints {
                lift(c, c.normal[0] * d[0] + c.normal[1] * d[1], &mut hs);
            }
            hs.push(HalfSpace3::gt([0, 0, s as i64], Rat::zero()));
        }
    }
    hs
}

/// Nonempty cells compatible with the leg parity filter, in a deterministic
/// order. Every cell of the tritangent locus is among them.
pub fn candidate_cells(arr: &Arrangement3) -> Vec<(CellKey, Polyhedron3)> {
    let faces = &arr.plane.faces;
    let mut out = Vec::new();
    for s in [1i8, -1] {
        let (r0, r1) = role_dirs(s);
        let d = v1_offset(s);
        let wt = [d[1], -d[0]];
        let wu = [s as i64 * d[0], s as i64 * d[1]];
        let f0s: Vec<usize> = (0..faces.len()).filter(|&f| arr.role_ok(f, r0)).collect();
        let f1s: Vec<usize> = (0..faces.len()).filter(|&f| arr.role_ok(f, r1)).collect();
        let t0: Vec<_> = f0s.iter().map(|&f| arr.plane.range(f, wt)).collect();
        let t1: Vec<_> = f1s.iter().map(|&f| arr.plane.range(f, wt)).collect();
        let u0: Vec<_> = f0s.iter().map(|&f| arr.plane.range(f, wu)).collect();
        let u1: Vec<_> = f1s.iter().map(|&f| arr.plane.range(f, wu)).collect();
        for (i, &f0) in f0s.iter().enumerate() {
            for (j, &f1) in f1s.iter().enumerate() {
                if !ranges_meet(&t0[i], &t1[j]) {
                    continue;
                }
                let ahead = match (&u1[j].1, &u0[i].0) {
                    (Some(h), Some(l)) => h >= l,
                    _ => true,
                };
                if !ahead {
                    continue;
                }
                let key = CellKey { f0, f1, sign: s };
                let poly = make_polyhedron(cell_halfspaces(arr, key));
                if !poly.empty {
                    out.push((key, poly));
                }
            }
        }
    }
    for f in 0..faces.len() {
        if arr.role_ok(f, role_dirs(0).0) {
            let key = CellKey { f0: f, f1: f, sign: 0 };
            let poly = make_polyhedron(cell_halfspaces(arr, key));
            if !poly.empty {
                out.push((key, poly));
            }
        }
    }
    out
}

/// Tests one candidate cell at its representative.
pub fn evaluate_candidate(gamma: &CurveGamma, key: CellKey, poly: Polyhedron3) -> Option<Cell> {
    let rep = interior_point(&poly).ok()?;
    let lam = Curve11Param::from_point(&rep);
    let comps = stable_intersection(&lam, gamma);
    is_tritangent_multiset(&comps).then_some(Cell { key, poly, rep, comps })
}

/// The tritangent locus as a complex of cells with face relations.
#[derive(Clone, Debug)]
pub struct TritangentLocus {
    /// The arrangement the cells come from.
    pub arrangement: Arrangement3,
    /// Cells, sorted by key.
    pub cells: Vec<Cell>,
    /// Pairs `(i, j)` with cell `i` in the closure of cell `j`, `i ≠ j`.
    pub faces: Vec<(usize, usize)>,
    /// Removal predicates satisfied by each cell's representative.
    pub removals: Vec<Vec<Removal>>,
    /// Whether each cell is special.
    pub special: Vec<bool>,
}

impl TritangentLocus {
    /// Assembles the locus from evaluated cells.
    pub fn assemble(gamma: &CurveGamma, arrangement: Arrangement3, mut cells: Vec<Cell>) -> TritangentLocus {
        cells.sort_by_key(|c| c.key);
        let index: BTreeMap<CellKey, usize> = cells.iter().enumerate().map(|(i, c)| (c.key, i)).collect();
        let mut faces = Vec::new();
        let pf = &arrangement.plane.faces;
        for (j, c) in cells.iter().enumerate() {
            let k = c.key;
            let mut seen: BTreeSet<usize> = BTreeSet::new();
            let mut add = |key: CellKey, faces: &mut Vec<(usize, usize)>| {
                if let Some(&i) = index.get(&key) {
                    if i != j && seen.insert(i) {
                        faces.push((i, j));
                    }
                }
            };
            if k.sign == 0 {
                for &g in &pf[k.f0].subfaces {
                    add(CellKey { f0: g, f1: g, sign: 0 }, &mut faces);
                }
            } else {
                for &g0 in &pf[k.f0].subfaces {
                    for &g1 in &pf[k.f1].subfaces {
                        add(CellKey { f0: g0, f1: g1, sign: k.sign }, &mut faces);
                        if g0 == g1 {
                            add(CellKey { f0: g0, f1: g0, sign: 0 }, &mut faces);
                        }
                    }
                }
            }
        }
        let removals = cells.iter().map(|c| removals(gamma, &c.curve())).collect();
        let special = cells.iter().map(|c| is_special(&c.curve(), &c.comps)).collect();
        TritangentLocus { arrangement, cells, faces, removals, special }
    }

    /// Runs the whole construction sequentially.
    pub fn build(gamma: &CurveGamma) -> TritangentLocus {
        let arrangement = Arrangement3::new(gamma);
        let cells = candidate_cells(&arrangement)
            .into_iter()
            .filter_map(|(k, p)| evaluate_candidate(gamma, k, p))
            .collect();
        TritangentLocus::assemble(gamma, arrangement, cells)
    }

    /// The locus as a cell complex.
    pub fn complex(&self) -> CellComplex3 {
        self.subcomplex(&(0..self.cells.len()).collect::<Vec<_>>())
    }

    /// The cells `ids` as a complex, with the face relations among them.
    pub fn subcomplex(&self, ids: &[usize]) -> CellComplex3 {
        let mut pos = vec![usize::MAX; self.cells.len()];
        for (n, &i) in ids.iter().enumerate() {
            pos[i] = n;
        }
        CellComplex3 {
            cells: ids.iter().map(|&i| self.cells[i].poly.clone()).collect(),
            adjacency: self
                .faces
                .iter()
                .filter(|(a, b)| pos[*a] != usize::MAX && pos[*b] != usize::MAX)
                .map(|(a, b)| (pos[*a], pos[*b]))
                .collect(),
            closed_under_faces: true,
        }
    }

    /// Connected components of the cells `ids` under the face relation.
    pub fn components_of(&self, ids: &[usize]) -> Vec<Vec<usize>> {
        let mut pos = vec![usize::MAX; self.cells.len()];
        for (n, &i) in ids.iter().enumerate() {
            pos[i] = n;
        }
        let mut uf = UnionFind::new(ids.len());
        for &(a, b) in &self.faces {
            if pos[a] != usize::MAX && pos[b] != usize::MAX {
                uf.union(pos[a], pos[b]);
            }
        }
        uf.groups().into_iter().map(|g| g.into_iter().map(|n| ids[n]).collect()).collect()
    }

    /// Faces of the cells `ids` (within the locus), together with `ids`.
    pub fn close_under_faces(&self, ids: &[usize]) -> Vec<usize> {
        let mut keep = vec![false; self.cells.len()];
        for &i in ids {
            keep[i] = true;
        }
        let mut extra = Vec::new();
        for &(a, b) in &self.faces {
            if keep[b] && !keep[a] {
                extra.push(a);
            }
        }
        for a in extra {
            keep[a] = true;
        }
        (0..self.cells.len()).filter(|&i| keep[i]).collect()
    }
}

/// A tritangent class with its bounded and non-special bounded subcomplexes,
/// given by cell indices into a [`TritangentLocus`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TritangentClass {
    /// 1-based id.
    pub id: usize,
    /// Cells of the class.
    pub cells: Vec<usize>,
    /// Cells of the bounded subcomplex.
    pub bounded: Vec<usize>,
    /// Cells of the non-special bounded subcomplex.
    pub nonspecial: Vec<usize>,
}

/// Splits the locus into its connected components, ordered by their
/// lexicographically smallest representative.
pub fn split_classes(locus: &TritangentLocus) -> Result<Vec<TritangentClass>, ClassError> {
    let all: Vec<usize> = (0..locus.cells.len()).collect();
    let mut groups = locus.components_of(&all);
    for g in &mut groups {
        g.sort_by(|&a, &b| locus.cells[a].rep.cmp(&locus.cells[b].rep));
    }
    groups.sort_by(|a, b| locus.cells[a[0]].rep.cmp(&locus.cells[b[0]].rep));
    if groups.len() != 15 {
        return Err(ClassError::ClassCount(groups.len()));
    }
    Ok(groups
        .into_iter()
        .enumerate()
        .map(|(i, mut cells)| {
            cells.sort_unstable();
            TritangentClass { id: i + 1, cells, bounded: Vec::new(), nonspecial: Vec::new() }
        })
        .collect())
}

/// The side of `ℓ = 0` and vertex a removal predicate refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Removal {
    /// `ℓ > 0` and `v0` in the chamber dual to `(0,0)`.
    U0Plus,
    /// `ℓ > 0` and `v1` in the chamber dual to `(3,3)`.
    U1Plus,
    /// `v0` in the chamber dual to `(3,0)`, with the sign of `ℓ` given by
    /// [`UNBOUNDED_MINUS_SIGN`].
    U0Minus,
    /// `v1` in the chamber dual to `(0,3)`, with the sign of `ℓ` given by
    /// [`UNBOUNDED_MINUS_SIGN`].
    U1Minus,
    /// `ℓ > 0`, `v0` on the slope one edge dual to `(1,0),(0,1)` or its
    /// lower endpoint.
    R0Plus,
    /// `ℓ < 0`, `v0` on the slope minus one edge dual to `(2,0),(3,1)`.
    R0Minus,
    /// `ℓ > 0`, `v1` on the slope one edge dual to `(2,3),(3,2)`.
    R1Plus,
    /// `ℓ < 0`, `v1` on the slope minus one edge dual to `(0,2),(1,3)`.
    R1Minus,
}

/// Sign of `ℓ` required by [`Removal::U0Minus`] and [`Removal::U1Minus`].
pub const UNBOUNDED_MINUS_SIGN: i32 = -1;

fn dual_has(dual: &[Lattice], need: &[Lattice], avoid: &[Lattice]) -> bool {
    need.iter().all(|m| dual.contains(m)) && avoid.iter().all(|m| !dual.contains(m))
}

/// The removal predicates satisfied by the member `p`.
pub fn removals(gamma: &CurveGamma, p: &Curve11Param) -> Vec<Removal> {
    let s = p.len.signum();
    let v0 = &p.v0;
    let v1 = p.v1();
    let mut out = Vec::new();
    if s > 0 && in_chamber(gamma, v0, [0, 0]) {
        out.push(Removal::U0Plus);
    }
    if s > 0 && in_chamber(gamma, &v1, [3, 3]) {
        out.push(Removal::U1Plus);
    }
    if s == UNBOUNDED_MINUS_SIGN && in_chamber(gamma, v0, [3, 0]) {
        out.push(Removal::U0Minus);
    }
    if s == UNBOUNDED_MINUS_SIGN && in_chamber(gamma, &v1, [0, 3]) {
        out.push(Removal::U1Minus);
    }
    let d0 = dual_at(gamma, v0);
    let d1 = dual_at(gamma, &v1);
    if s > 0 && dual_has(&d0, &[[1, 0], [0, 1]], &[[0, 2], [1, 1], [2, 0]]) {
        out.push(Removal::R0Plus);
    }
    if s < 0 && dual_has(&d0, &[[2, 0], [3, 1]], &[[1, 0], [2, 1], [3, 2]]) {
        out.push(Removal::R0Minus);
    }
    if s > 0 && dual_has(&d1, &[[2, 3], [3, 2]], &[[1, 3], [2, 2], [3, 1]]) {
        out.push(Removal::R1Plus);
    }
    if s < 0 && dual_has(&d1, &[[0, 2], [1, 3]], &[[0, 1], [1, 2], [2, 3]]) {
        out.push(Removal::R1Minus);
    }
    out
}

/// Cells of the bounded subcomplex of the class: cells whose representative
/// satisfies no removal predicate, together with their faces.
pub fn bounded_subcomplex(locus: &TritangentLocus, class: &[usize]) -> Vec<usize> {
    let kept: Vec<usize> = class
        .iter()
        .copied()
        .filter(|&i| locus.removals[i].is_empty())
        .collect();
    locus.close_under_faces(&kept)
}

/// Whether two tangencies lie in the relative interior of the same leg of
/// the (1,1)-curve.
pub fn is_special(p: &Curve11Param, comps: &[IntersectionComponent]) -> bool {
    let mut seen = [0u8; 4];
    for c in comps {
        for (k, hit) in component_legs(p, c).iter().enumerate() {
            seen[k] += *hit as u8;
        }
    }
    seen.iter().any(|&n| n >= 2)
}

/// The legs whose relative interior carries a limit point or an overlap of
/// the component.
pub fn component_legs(p: &Curve11Param, c: &IntersectionComponent) -> [bool; 4] {
    use crate::intersect::{lambda_locate, LambdaCarrier, LambdaPieceId};
    let mut out = [false; 4];
    for t in &c.points {
        if let LambdaCarrier::LegInterior(k) = t.lambda {
            out[k] = true;
        }
    }
    for a in c.atoms.iter().filter(|a| !a.is_point()) {
        if let LambdaPieceId::Leg(k) = a.lambda {
            out[k] = true;
        }
    }
    for a in c.atoms.iter().filter(|a| a.is_point()) {
        if let Some(LambdaCarrier::LegInterior(k)) = lambda_locate(p, &a.start()) {
            out[k] = true;
        }
    }
    out
}

/// Cells of the non-special bounded complex: the non-special cells of `bounded`.
pub fn nonspecial_subcomplex(locus: &TritangentLocus, bounded: &[usize]) -> Vec<usize> {
    bounded.iter().copied().filter(|&i| !locus.special[i]).collect()
}

/// The eleven admissible triples `(dim Θᵇ_ns, dim Θᵇ, dim Θ)`.
pub const ADMISSIBLE_DIMS: [(i8, i8, i8); 11] = [
    (0, 0, 0),
    (0, 0, 1),
    (0, 0, 2),
    (0, 1, 1),
    (1, 1, 1),
    (1, 1, 2),
    (1, 1, 3),
    (1, 2, 2),
    (2, 2, 2),
    (2, 2, 3),
    (3, 3, 3),
];

impl TritangentClass {
    /// `(dim Θᵇ_ns, dim Θᵇ, dim Θ)`, with `-1` for an empty complex.
    pub fn dims(&self, locus: &TritangentLocus) -> (i8, i8, i8) {
        let d = |ids: &[usize]| ids.iter().map(|&i| locus.cells[i].dim()).max().unwrap_or(-1);
        (d(&self.nonspecial), d(&self.bounded), d(&self.cells))
    }
}

/// Splits the locus into classes and fills in their subcomplexes, checking
/// connectivity and admissibility of the dimension triples.
pub fn analyze_classes(locus: &TritangentLocus) -> Result<Vec<TritangentClass>, ClassError> {
    let mut classes = split_classes(locus)?;
    for c in &mut classes {
        c.bounded = bounded_subcomplex(locus, &c.cells);
        c.nonspecial = nonspecial_subcomplex(locus, &c.bounded);
        if locus.components_of(&c.nonspecial).len() != 1 {
            return Err(ClassError::DisconnectedNonSpecial(c.id));
        }
        let d = c.dims(locus);
        if !ADMISSIBLE_DIMS.contains(&d) {
            return Err(ClassError::InadmissibleDims(d, c.id));
        }
    }
    Ok(classes)
}

/// Lattice points of the dual cell of the stratum containing `p`.
pub fn dual_at(gamma: &CurveGamma, p: &crate::plane::Vec2) -> Vec<Lattice> {
    gamma.dual_cell(gamma.locate(p))
}

/// Whether `p` lies in the open chamber dual to `m`.
pub fn in_chamber(gamma: &CurveGamma, p: &crate::plane::Vec2, m: Lattice) -> bool {
    gamma.locate(p) == Stratum::Chamber(m)
}
