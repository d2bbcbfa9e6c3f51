//! Stable intersection of a (1,1)-curve with a smooth (3,3)-curve.
//!
//! The (1,1)-curve is translated by `ε·g` for a positive infinitesimal `ε`
//! and a direction `g` parallel to no edge of either curve. The translated
//! curves meet transversally; each crossing contributes `|det(u, w)|` and its
//! limit as `ε → 0` is a point of the unperturbed intersection. The
//! unperturbed set-theoretic intersection is split into connected components,
//! and every limit point is charged to the component containing it.

use alloc::vec::Vec;

use crate::curve11::{Curve11Param, LambdaVertex};
use crate::curve33::{CurveGamma, Piece, Stratum};
use crate::eps::Eps;
use crate::geometry::UnionFind;
use crate::plane::{along, cross_ir, icross2, idot2, sub2, Vec2};
use crate::rat::Rat;

/// Identifies a piece of a (1,1)-curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LambdaPieceId {
    /// The bounded edge.
    Edge,
    /// A leg, indexed as in [`Curve11Param::legs`].
    Leg(usize),
}

/// A closed piece `base + t·dir` of a (1,1)-curve, with `t ∈ [0, len]` or
/// `t ≥ 0` when `len` is `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LPiece {
    /// Which piece.
    pub id: LambdaPieceId,
    /// Starting point.
    pub base: Vec2,
    /// Primitive direction.
    pub dir: [i64; 2],
    /// Parameter length of a bounded piece.
    pub len: Option<Rat>,
}

/// Where a point sits on a (1,1)-curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LambdaCarrier {
    /// At a vertex.
    Vertex(LambdaVertex),
    /// In the relative interior of the bounded edge.
    EdgeInterior,
    /// In the relative interior of a leg.
    LegInterior(usize),
}

/// A closed convex piece of the set-theoretic intersection: a point, a
/// segment or a ray, written `base + t·dir` for `t ∈ [lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Atom {
    /// Reference point on the supporting line.
    pub base: Vec2,
    /// Primitive direction of the supporting line.
    pub dir: [i64; 2],
    /// Lower parameter bound.
    pub lo: Rat,
    /// Upper parameter bound, `None` for a ray.
    pub hi: Option<Rat>,
    /// Piece of the (1,1)-curve containing the atom.
    pub lambda: LambdaPieceId,
    /// Piece of the (3,3)-curve containing the atom.
    pub gamma: Piece,
}

impl Atom {
    /// Whether the atom is a single point.
    pub fn is_point(&self) -> bool {
        self.hi.as_ref() == Some(&self.lo)
    }

    /// First endpoint.
    pub fn start(&self) -> Vec2 {
        along(&self.base, self.dir, &self.lo)
    }

    /// Second endpoint of a bounded atom.
    pub fn end(&self) -> Option<Vec2> {
        self.hi.as_ref().map(|h| along(&self.base, self.dir, h))
    }

    /// Parameter of `p` along the supporting line if `p` lies on it.
    fn param(&self, p: &Vec2) -> Option<Rat> {
        let d = sub2(p, &self.base);
        if !cross_ir(self.dir, &d).is_zero() {
            return None;
        }
        let c = if self.dir[0] != 0 { 0 } else { 1 };
        Some(&d[c] / &Rat::from_int(self.dir[c]))
    }

    /// Closed membership.
    pub fn contains(&self, p: &Vec2) -> bool {
        match self.param(p) {
            Some(t) => t >= self.lo && self.hi.as_ref().is_none_or(|h| &t <= h),
            None => false,
        }
    }

    /// Whether `p` lies in the atom but is not one of its endpoints.
    pub fn contains_in_interior(&self, p: &Vec2) -> bool {
        match self.param(p) {
            Some(t) => t > self.lo && self.hi.as_ref().is_none_or(|h| &t < h),
            None => false,
        }
    }

    /// Whether two atoms meet.
    pub fn meets(&self, other: &Atom) -> bool {
        if self.is_point() {
            return other.contains(&self.start());
        }
        if other.is_point() {
            return self.contains(&other.start());
        }
        if icross2(self.dir, other.dir) == 0 {
            let Some(t0) = self.param(&other.base) else { return false };
            // other.dir = s·self.dir with s = ±1
            let s = if self.dir == other.dir { 1 } else { -1 };
            let map = |t: &Rat| -> Rat {
                if s == 1 {
                    &t0 + t
                } else {
                    &t0 - t
                }
            };
            let a = map(&other.lo);
            let b = other.hi.as_ref().map(map);
            let (olo, ohi): (Option<Rat>, Option<Rat>) = match (s, b) {
                (1, b) => (Some(a), b),
                (_, Some(b)) => (Some(b), Some(a)),
                (_, None) => (None, Some(a)),
            };
            let lo_ok = match (&self.hi, &olo) {
                (Some(h), Some(l)) => l <= h,
                _ => true,
            };
            let hi_ok = match &ohi {
                Some(h) => h >= &self.lo,
                None => true,
            };
            return lo_ok && hi_ok;
        }
        let d = sub2(&other.base, &self.base);
        let den = Rat::from_int(icross2(self.dir, other.dir));
        let t = &cross_ir_rev(&d, other.dir) / &den;
        let p = along(&self.base, self.dir, &t);
        self.contains(&p) && other.contains(&p)
    }
}

fn cross_ir_rev(d: &Vec2, w: [i64; 2]) -> Rat {
    &(&d[0] * &Rat::from_int(w[1])) - &(&d[1] * &Rat::from_int(w[0]))
}

/// A point of the intersection carrying positive limit multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangencyPoint {
    /// Location.
    pub point: Vec2,
    /// Sum of the multiplicities of the perturbed crossings converging here.
    pub mult: u32,
    /// Position on the (1,1)-curve.
    pub lambda: LambdaCarrier,
    /// Position on the (3,3)-curve.
    pub gamma: Stratum,
}

/// A connected component of the set-theoretic intersection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionComponent {
    /// Convex pieces whose union is the component.
    pub atoms: Vec<Atom>,
    /// Total stable multiplicity.
    pub stable_mult: u32,
    /// Limit points with their multiplicities, sorted by location.
    pub points: Vec<TangencyPoint>,
}

impl IntersectionComponent {
    /// Whether the component is a single point.
    pub fn is_point(&self) -> bool {
        self.atoms.iter().all(|a| a.is_point())
    }

    /// Closed membership.
    pub fn contains(&self, p: &Vec2) -> bool {
        self.atoms.iter().any(|a| a.contains(p))
    }

    /// Representative location: the first atom's starting point.
    pub fn anchor(&self) -> Vec2 {
        self.atoms[0].start()
    }
}

/// The pieces of a (1,1)-curve.
pub fn lambda_pieces(p: &Curve11Param) -> Vec<LPiece> {
    let v1 = p.v1();
    let mut out = Vec::with_capacity(5);
    if !p.len.is_zero() {
        out.push(LPiece { id: LambdaPieceId::Edge, base: p.v0.clone(), dir: p.edge_direction(), len: Some(p.len.abs()) });
    }
    for (k, leg) in p.legs().into_iter().enumerate() {
        let base = match leg.vertex {
            LambdaVertex::V0 => p.v0.clone(),
            LambdaVertex::V1 => v1.clone(),
        };
        out.push(LPiece { id: LambdaPieceId::Leg(k), base, dir: leg.direction, len: None });
    }
    out
}

/// Where `q` sits on the (1,1)-curve, if it lies on it.
pub fn lambda_locate(p: &Curve11Param, q: &Vec2) -> Option<LambdaCarrier> {
    if q == &p.v0 {
        return Some(LambdaCarrier::Vertex(LambdaVertex::V0));
    }
    let v1 = p.v1();
    if q == &v1 {
        return Some(LambdaCarrier::Vertex(LambdaVertex::V1));
    }
    for piece in lambda_pieces(p) {
        let d = sub2(q, &piece.base);
        if !cross_ir(piece.dir, &d).is_zero() {
            continue;
        }
        let c = if piece.dir[0] != 0 { 0 } else { 1 };
        let t = &d[c] / &Rat::from_int(piece.dir[c]);
        if t.is_positive() && piece.len.as_ref().is_none_or(|l| &t < l) {
            return Some(match piece.id {
                LambdaPieceId::Edge => LambdaCarrier::EdgeInterior,
                LambdaPieceId::Leg(k) => LambdaCarrier::LegInterior(k),
            });
        }
    }
    None
}

/// Default perturbation direction for a curve: `(1, 13)`, with the second
/// entry increased until it is parallel to no edge of either curve.
pub fn perturbation_direction(gamma: &CurveGamma) -> [i64; 2] {
    let mut dirs = gamma.directions();
    dirs.extend([[1, 0], [0, 1], [1, 1], [-1, 1]]);
    let mut g = [1, 13];
    while dirs.iter().any(|d| icross2(*d, g) == 0) {
        g[1] += 1;
    }
    g
}

/// Whether `g` is parallel to no edge of either curve.
pub fn is_valid_perturbation(gamma: &CurveGamma, g: [i64; 2]) -> bool {
    g != [0, 0]
        && gamma
            .directions()
            .iter()
            .chain([[1, 0], [0, 1], [1, 1], [-1, 1]].iter())
            .all(|d| icross2(*d, g) != 0)
}

fn in_open_range(t: &Eps, len: &Option<Rat>) -> bool {
    if t.signum() <= 0 {
        return false;
    }
    match len {
        Some(l) => t < &Eps::real(l.clone()),
        None => true,
    }
}

/// Closed intersection of one (1,1)-piece with one (3,3)-piece.
fn closed_atom(lp: &LPiece, gp: Piece, c: &Vec2, w: [i64; 2], s_len: &Option<Rat>) -> Option<Atom> {
    let u = lp.dir;
    let d = sub2(c, &lp.base);
    let det = icross2(u, w);
    let mk = |lo: Rat, hi: Option<Rat>| Atom { base: lp.base.clone(), dir: u, lo, hi, lambda: lp.id, gamma: gp };
    if det != 0 {
        let den = Rat::from_int(det);
        let t = &cross_ir_rev(&d, w) / &den;
        let s = -(&cross_ir(u, &d) / &den);
        let t_ok = !t.is_negative() && lp.len.as_ref().is_none_or(|l| &t <= l);
        let s_ok = !s.is_negative() && s_len.as_ref().is_none_or(|l| &s <= l);
        return (t_ok && s_ok).then(|| mk(t.clone(), Some(t)));
    }
    if !cross_ir(u, &d).is_zero() {
        return None;
    }
    let cidx = if u[0] != 0 { 0 } else { 1 };
    let tau = &d[cidx] / &Rat::from_int(u[cidx]);
    let same = u == w;
    // the (3,3)-piece occupies [gl, gh] in the parameter of the (1,1)-piece
    let (gl, gh): (Option<Rat>, Option<Rat>) = match (same, s_len) {
        (true, Some(l)) => (Some(tau.clone()), Some(&tau + l)),
        (true, None) => (Some(tau.clone()), None),
        (false, Some(l)) => (Some(&tau - l), Some(tau.clone())),
        (false, None) => (None, Some(tau.clone())),
    };
    let lo = match gl {
        Some(g) if g.is_positive() => g,
        _ => Rat::zero(),
    };
    let hi = match (&lp.len, gh) {
        (Some(l), Some(g)) => Some(Rat::min(l, &g)),
        (Some(l), None) => Some(l.clone()),
        (None, g) => g,
    };
    if let Some(h) = &hi {
        if h < &lo {
            return None;
        }
    }
    Some(mk(lo, hi))
}

/// Stable intersection with the default perturbation direction.
pub fn stable_intersection(p: &Curve11Param, gamma: &CurveGamma) -> Vec<IntersectionComponent> {
    stable_intersection_with(p, gamma, perturbation_direction(gamma))
}

/// Stable intersection using the perturbation direction `g`.
pub fn stable_intersection_with(p: &Curve11Param, gamma: &CurveGamma, g: [i64; 2]) -> Vec<IntersectionComponent> {
    let pieces = lambda_pieces(p);
    let mut comps = intersect_pieces(&pieces, gamma, g);
    for c in &mut comps {
        for tp in &mut c.points {
            tp.lambda = lambda_locate(p, &tp.point).expect("limit point lies on the curve");
        }
    }
    comps
}

/// Components of the intersection of the given (1,1)-pieces with the curve.
///
/// The `lambda` carrier of the returned points is only meaningful when the
/// pieces form a whole (1,1)-curve; [`stable_intersection_with`] fills it in.
pub fn intersect_pieces(pieces: &[LPiece], gamma: &CurveGamma, g: [i64; 2]) -> Vec<IntersectionComponent> {
    let mut atoms: Vec<Atom> = Vec::new();
    let mut limits: Vec<(Vec2, u32)> = Vec::new();
    for lp in pieces {
        for gp in gamma.pieces() {
            let (c, w, s_len) = gamma.piece_geometry(gp);
            if let Some(a) = closed_atom(lp, gp, c, w, &s_len) {
                atoms.push(a);
            }
            let det = icross2(lp.dir, w);
            if det == 0 {
                continue;
            }
            let den = Rat::from_int(det);
            let d = sub2(c, &lp.base);
            let gw = icross2(g, w);
            let ug = icross2(lp.dir, g);
            let t = Eps::new(&cross_ir_rev(&d, w) / &den, Rat::from_int(-gw) / &den);
            let s = Eps::new(-(&cross_ir(lp.dir, &d) / &den), Rat::from_int(ug) / &den);
            if in_open_range(&t, &lp.len) && in_open_range(&s, &s_len) {
                limits.push((along(c, w, &s.a), det.unsigned_abs() as u32));
            }
        }
    }

    let n = atoms.len();
    let mut uf = UnionFind::new(n);
    for i in 0..n {
        for j in (i + 1)..n {
            if uf.find(i) != uf.find(j) && atoms[i].meets(&atoms[j]) {
                uf.union(i, j);
            }
        }
    }
    let groups = uf.groups();
    let mut comps: Vec<IntersectionComponent> = groups
        .iter()
        .map(|g| IntersectionComponent {
            atoms: g.iter().map(|&i| atoms[i].clone()).collect(),
            stable_mult: 0,
            points: Vec::new(),
        })
        .collect();
    for (q, m) in limits {
        let ci = comps
            .iter()
            .position(|c| c.contains(&q))
            .expect("limit point lies in the intersection");
        let comp = &mut comps[ci];
        comp.stable_mult += m;
        match comp.points.iter_mut().find(|tp| tp.point == q) {
            Some(tp) => tp.mult += m,
            None => {
                let gamma_stratum = gamma.locate(&q);
                comp.points.push(TangencyPoint {
                    point: q,
                    mult: m,
                    lambda: LambdaCarrier::EdgeInterior,
                    gamma: gamma_stratum,
                });
            }
        }
    }
    for c in &mut comps {
        c.points.sort_by(|a, b| a.point.cmp(&b.point));
    }
    comps
}

/// Whether the multiset of component multiplicities is `{2,2,2}`, `{2,4}`
/// or `{6}`.
pub fn is_tritangent_multiset(comps: &[IntersectionComponent]) -> bool {
    let mut m: Vec<u32> = comps.iter().map(|c| c.stable_mult).collect();
    m.sort_unstable();
    matches!(m.as_slice(), [2, 2, 2] | [2, 4] | [6])
}

/// Value of `w · p` for an integer weight.
pub fn weight(w: [i64; 2], p: &Vec2) -> Rat {
    idot2(w, p)
}
