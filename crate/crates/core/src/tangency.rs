//! Local tangency types of intersection components and the quantity `μ`.
//!
//! Each even component of the intersection of a (1,1)-curve with the
//! (3,3)-curve is summarized by an integer feature key. The key is looked up
//! in a catalog shipped as a data asset, which assigns a type label and a
//! flavor.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::curve11::{Curve11Param, LambdaVertex};
use crate::curve33::{CurveGamma, D4Element, Stratum};
use crate::intersect::{
    is_tritangent_multiset, stable_intersection, IntersectionComponent, LambdaCarrier, LambdaPieceId,
};
use crate::plane::{icross2, idot2, Vec2};
use crate::rat::Rat;

/// Errors raised by classification and by `μ`.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TangencyError {
    /// No catalog record matches the feature key.
    #[error("unclassifiable component with feature key {0:?}")]
    Unclassifiable(FeatureKey),
    /// `μ` was requested for a type it is not defined for.
    #[error("mu undefined for this type")]
    MuUndefined,
    /// The catalog asset failed to parse or its checksum did not match.
    #[error("corrupt catalog: {0}")]
    Catalog(String),
}

/// Orientation attached to a tangency type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    /// Along or near the horizontal direction.
    Horizontal,
    /// Along or near the vertical direction.
    Vertical,
    /// Along a slope `±1` direction.
    Diagonal,
    /// The type has no flavor.
    None,
}

impl Flavor {
    /// Short name used in reports.
    pub fn name(self) -> &'static str {
        match self {
            Flavor::Horizontal => "horizontal",
            Flavor::Vertical => "vertical",
            Flavor::Diagonal => "diagonal",
            Flavor::None => "n/a",
        }
    }
}

/// A classified tangency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangencyType {
    /// Catalog label such as `(3a)` or `(4a')`.
    pub label: &'static str,
    /// Flavor.
    pub flavor: Flavor,
    /// Symmetry taking the component to the catalog's reference position.
    pub d4_witness: D4Element,
    /// Feature key the label was looked up with.
    pub key: FeatureKey,
}

/// A tritangent (1,1)-curve with its classified components.
#[derive(Clone, Debug)]
pub struct TangencyTuple {
    /// The curve.
    pub lambda: Curve11Param,
    /// Components of the intersection, each with its type.
    pub components: Vec<(IntersectionComponent, TangencyType)>,
}

/// Integer-coded features `[valency, shape, c1, c2, c3, mult]`.
///
/// Shapes and their codes:
/// * `0` isolated point; `c1` is the carrier on the (1,1)-curve (0 leg
///   interior, 1 edge interior, 2 vertex), `c2` the carrier on the
///   (3,3)-curve (0 edge or leg interior, 1 vertex) and `c3` a relation code:
///   for an edge carrier 1 when its slope is `±1`, otherwise 0; for a vertex
///   carrier `aligned + 2·diagonal`, where `aligned` records an antiparallel
///   pair of directions and `diagonal` an incident edge of slope `±1`.
/// * `1` a single overlap along a leg; `c1 ≤ c2` are end codes. For an
///   overlap from a common vertex to infinity `c3` is `aligned + 2·diagonal`
///   at that vertex, as for an isolated point at a vertex.
/// * `2` a single overlap along the bounded edge; `c1 ≤ c2` are end codes.
/// * `3` all three directions shared at one vertex; `c1` is the end code of
///   the bounded edge's far end, `c2` the number of leg overlaps reaching
///   infinity and `c3` an axis code for the far vertex (0 none or not a
///   vertex of the (3,3)-curve, 1 antiparallel pair on the axis of an
///   infinite leg overlap, 2 otherwise).
/// * `4` all directions shared at both vertices.
/// * `5` overlaps at the vertex of a four-valent curve; `c1` is the carrier
///   of the vertex on the (3,3)-curve (0 edge or leg interior, 1 vertex),
///   `c2` the number of overlaps and `c3` the limit multiplicity at the
///   vertex.
/// * `6` an overlap on a leg of a four-valent curve away from its vertex;
///   `c1 ≤ c2` are end codes.
///
/// End codes: 0 a vertex of the (1,1)-curve inside an edge or leg of the
/// (3,3)-curve, 1 a vertex of both curves, 2 a vertex of the (3,3)-curve
/// inside a piece of the (1,1)-curve, 3 unbounded.
pub type FeatureKey = [u8; 6];

/// End code of an overlap: a vertex of the (1,1)-curve inside a piece of the
/// (3,3)-curve.
pub const END_A: u8 = 0;
/// End code of an overlap: a vertex of both curves.
pub const END_B: u8 = 1;
/// End code of an overlap: a vertex of the (3,3)-curve only.
pub const END_C: u8 = 2;
/// End code of an unbounded overlap.
pub const END_INF: u8 = 3;

/// One record of the catalog.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogRecord {
    /// Feature key, with `255` matching any value.
    pub key: FeatureKey,
    /// Type label.
    pub label: &'static str,
    /// Flavor rule: `hv` (from the geometry), `diagonal` or `n/a`.
    pub flavor: &'static str,
}

/// The parsed catalog.
#[derive(Clone, Debug)]
pub struct Catalog {
    /// Format version.
    pub version: u32,
    /// Records in file order.
    pub records: Vec<CatalogRecord>,
}

/// The catalog asset.
pub const CATALOG_SOURCE: &str = include_str!("../assets/catalog.txt");

/// 64-bit FNV-1a hash.
pub fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Checksum of the record lines of a catalog: FNV-1a over the records, each
/// followed by a newline.
pub fn catalog_checksum(src: &str) -> u64 {
    let mut buf = String::new();
    for line in src.lines() {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        buf.push_str(t);
        buf.push('\n');
    }
    fnv1a(buf.as_bytes())
}

impl Catalog {
    /// Parses and verifies a catalog.
    pub fn parse(src: &'static str) -> Result<Catalog, TangencyError> {
        let bad = |m: &str| TangencyError::Catalog(String::from(m));
        let mut version = None;
        let mut checksum = None;
        let mut records = Vec::new();
        for line in src.lines() {
            let t = line.trim();
            if let Some(rest) = t.strip_prefix("# version:") {
                version = rest.trim().parse::<u32>().ok();
                continue;
            }
            if let Some(rest) = t.strip_prefix("# checksum:") {
                checksum = u64::from_str_radix(rest.trim(), 16).ok();
                continue;
            }
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            let (lhs, rhs) = t.split_once("->").ok_or_else(|| bad("missing arrow"))?;
            let fields: Vec<&str> = lhs.split_whitespace().collect();
            if fields.len() != 6 {
                return Err(bad("key must have six fields"));
            }
            let mut key = [0u8; 6];
            for (k, f) in key.iter_mut().zip(fields) {
                *k = if f == "*" { 255 } else { f.parse().map_err(|_| bad("bad key field"))? };
            }
            let mut out = rhs.split_whitespace();
            let label = out.next().ok_or_else(|| bad("missing label"))?;
            let flavor = out.next().ok_or_else(|| bad("missing flavor"))?;
            records.push(CatalogRecord { key, label, flavor });
        }
        let version = version.ok_or_else(|| bad("missing version"))?;
        let want = checksum.ok_or_else(|| bad("missing checksum"))?;
        if want != catalog_checksum(src) {
            return Err(bad("checksum mismatch"));
        }
        Ok(Catalog { version, records })
    }

    /// The shipped catalog.
    pub fn builtin() -> Catalog {
        Catalog::parse(CATALOG_SOURCE).expect("shipped catalog is valid")
    }

    /// First record matching `key`.
    pub fn lookup(&self, key: &FeatureKey) -> Option<&CatalogRecord> {
        self.records
            .iter()
            .find(|r| r.key.iter().zip(key).all(|(a, b)| *a == 255 || a == b))
    }

    /// Distinct labels, in file order.
    pub fn labels(&self) -> Vec<&'static str> {
        let mut out: Vec<&'static str> = Vec::new();
        for r in &self.records {
            if !out.contains(&r.label) {
                out.push(r.label);
            }
        }
        out
    }
}

/// Lattice directions of the pieces of a (1,1)-curve leaving a vertex.
pub fn lambda_star(p: &Curve11Param, v: LambdaVertex) -> Vec<[i64; 2]> {
    let mut out: Vec<[i64; 2]> = p
        .legs()
        .into_iter()
        .filter(|l| l.vertex == v || p.len.is_zero())
        .map(|l| l.direction)
        .collect();
    if !p.len.is_zero() {
        let d = p.edge_direction();
        out.push(match v {
            LambdaVertex::V0 => d,
            LambdaVertex::V1 => [-d[0], -d[1]],
        });
    }
    out
}

fn gamma_star(gamma: &CurveGamma, vid: usize) -> Vec<[i64; 2]> {
    gamma.star[vid].iter().map(|(_, d)| *d).collect()
}

fn is_diag(d: [i64; 2]) -> bool {
    d[0] != 0 && (d[0] == d[1] || d[0] == -d[1])
}

fn gamma_stratum_vertex(s: Stratum) -> Option<usize> {
    match s {
        Stratum::Vertex(v) => Some(v),
        _ => None,
    }
}

fn piece_direction(gamma: &CurveGamma, s: Stratum) -> Option<[i64; 2]> {
    match s {
        Stratum::EdgeInterior(i) => Some(gamma.edges[i].direction),
        Stratum::LegInterior(i) => Some(gamma.legs[i].direction),
        _ => None,
    }
}

fn lambda_vertices(p: &Curve11Param) -> Vec<(LambdaVertex, Vec2)> {
    if p.len.is_zero() {
        vec![(LambdaVertex::V0, p.v0.clone())]
    } else {
        vec![(LambdaVertex::V0, p.v0.clone()), (LambdaVertex::V1, p.v1())]
    }
}

struct Overlap {
    lambda: LambdaPieceId,
    dir: [i64; 2],
    ends: [u8; 2],
    vertex: Option<LambdaVertex>,
}

fn end_code(gamma: &CurveGamma, p: &Curve11Param, q: &Vec2) -> (u8, Option<LambdaVertex>) {
    for (v, pt) in lambda_vertices(p) {
        if &pt == q {
            return match gamma.locate(q) {
                Stratum::Vertex(_) => (END_B, Some(v)),
                _ => (END_A, Some(v)),
            };
        }
    }
    (END_C, None)
}

fn overlaps(gamma: &CurveGamma, p: &Curve11Param, c: &IntersectionComponent) -> Vec<Overlap> {
    let mut out = Vec::new();
    for a in c.atoms.iter().filter(|a| !a.is_point()) {
        let (e0, v0) = end_code(gamma, p, &a.start());
        let (e1, v1) = match a.end() {
            Some(q) => end_code(gamma, p, &q),
            None => (END_INF, None),
        };
        let mut ends = [e0, e1];
        ends.sort_unstable();
        out.push(Overlap { lambda: a.lambda, dir: a.dir, ends, vertex: v0.or(v1) });
    }
    out
}

fn shares_all(gamma: &CurveGamma, p: &Curve11Param, v: LambdaVertex, at: &Vec2) -> bool {
    match gamma_stratum_vertex(gamma.locate(at)) {
        Some(vid) => {
            let g = gamma_star(gamma, vid);
            lambda_star(p, v).iter().all(|d| g.contains(d))
        }
        None => false,
    }
}

fn antiparallel_axis(gamma: &CurveGamma, p: &Curve11Param, v: LambdaVertex, at: &Vec2) -> Option<[i64; 2]> {
    let vid = gamma_stratum_vertex(gamma.locate(at))?;
    let g = gamma_star(gamma, vid);
    lambda_star(p, v).into_iter().find(|d| g.contains(&[-d[0], -d[1]]))
}

fn point_mult_at(c: &IntersectionComponent, q: &Vec2) -> u32 {
    c.points.iter().filter(|t| &t.point == q).map(|t| t.mult).sum()
}

/// Computes the feature key of a component.
pub fn feature_key(c: &IntersectionComponent, p: &Curve11Param, gamma: &CurveGamma) -> FeatureKey {
    let val: u8 = if p.len.is_zero() { 4 } else { 3 };
    let m = c.stable_mult.min(254) as u8;
    let ovs = overlaps(gamma, p, c);
    if ovs.is_empty() {
        let q = c.anchor();
        let lam = match crate::intersect::lambda_locate(p, &q) {
            Some(LambdaCarrier::LegInterior(_)) => 0,
            Some(LambdaCarrier::EdgeInterior) => 1,
            _ => 2,
        };
        let st = gamma.locate(&q);
        return match gamma_stratum_vertex(st) {
            None => {
                let d = piece_direction(gamma, st).unwrap_or([1, 0]);
                [val, 0, lam, 0, is_diag(d) as u8, m]
            }
            Some(vid) => {
                let g = gamma_star(gamma, vid);
                let diag = g.iter().any(|d| is_diag(*d)) as u8;
                let aligned = if lam == 2 {
                    let v = lambda_vertices(p).into_iter().find(|(_, pt)| pt == &q).map(|(v, _)| v).unwrap();
                    lambda_star(p, v).iter().any(|d| g.contains(&[-d[0], -d[1]])) as u8
                } else {
                    0
                };
                [val, 0, lam, 1, aligned + 2 * diag, m]
            }
        };
    }
    if val == 4 {
        let v = &p.v0;
        if c.contains(v) {
            let at_v = point_mult_at(c, v).min(254) as u8;
            let gv = gamma_stratum_vertex(gamma.locate(v)).is_some() as u8;
            return [4, 5, gv, ovs.len() as u8, at_v, m];
        }
        let o = &ovs[0];
        return [4, 6, o.ends[0], o.ends[1], 0, m];
    }
    let stars: Vec<(LambdaVertex, Vec2)> = lambda_vertices(p)
        .into_iter()
        .filter(|(v, pt)| c.contains(pt) && shares_all(gamma, p, *v, pt))
        .collect();
    match stars.len() {
        0 => {
            let o = &ovs[0];
            let shape = if matches!(o.lambda, LambdaPieceId::Edge) { 2 } else { 1 };
            let extra = if ovs.len() != 1 {
                9
            } else if shape == 1 && o.ends == [END_B, END_INF] {
                let v = o.vertex.unwrap_or(LambdaVertex::V0);
                let at = lambda_vertices(p).into_iter().find(|(w, _)| *w == v).map(|(_, q)| q).unwrap_or(p.v0.clone());
                let aligned = antiparallel_axis(gamma, p, v, &at).is_some() as u8;
                let diag = gamma_stratum_vertex(gamma.locate(&at))
                    .is_some_and(|vid| gamma_star(gamma, vid).into_iter().any(is_diag)) as u8;
                aligned + 2 * diag
            } else {
                0
            };
            [3, shape, o.ends[0], o.ends[1], extra, m]
        }
        1 => {
            let (sv, _) = stars[0].clone();
            let edge = ovs.iter().find(|o| matches!(o.lambda, LambdaPieceId::Edge));
            let far = match edge {
                Some(o) => {
                    if o.ends == [END_B, END_B] {
                        END_B
                    } else if o.ends[0] == END_B {
                        o.ends[1]
                    } else {
                        o.ends[0]
                    }
                }
                None => 9,
            };
            let inf_legs: Vec<[i64; 2]> = ovs
                .iter()
                .filter(|o| matches!(o.lambda, LambdaPieceId::Leg(_)) && o.ends[1] == END_INF && o.vertex == Some(sv))
                .map(|o| o.dir)
                .collect();
            let other = match sv {
                LambdaVertex::V0 => LambdaVertex::V1,
                LambdaVertex::V1 => LambdaVertex::V0,
            };
            let other_pt = match other {
                LambdaVertex::V0 => p.v0.clone(),
                LambdaVertex::V1 => p.v1(),
            };
            let axis = if far == END_B {
                match antiparallel_axis(gamma, p, other, &other_pt) {
                    Some(d) if inf_legs.iter().any(|l| icross2(*l, d) == 0) => 1,
                    Some(_) => 2,
                    None => 0,
                }
            } else {
                0
            };
            [3, 3, far, inf_legs.len() as u8, axis, m]
        }
        _ => [3, 4, 0, 0, 0, m],
    }
}

fn axis_flavor(d: [i64; 2]) -> Flavor {
    if is_diag(d) {
        Flavor::Diagonal
    } else if d[0].abs() > d[1].abs() {
        Flavor::Horizontal
    } else {
        Flavor::Vertical
    }
}

/// The direction that decides the flavor of a component and the reference
/// direction its D4 witness normalizes.
fn reference_direction(c: &IntersectionComponent, p: &Curve11Param, gamma: &CurveGamma) -> [i64; 2] {
    if let Some(a) = c.atoms.iter().find(|a| !a.is_point()) {
        return a.dir;
    }
    let q = c.anchor();
    let st = gamma.locate(&q);
    match st {
        Stratum::Vertex(vid) => gamma_star(gamma, vid)
            .into_iter()
            .find(|d| is_diag(*d))
            .unwrap_or_else(|| {
                let g = gamma_star(gamma, vid);
                lambda_vertices(p)
                    .into_iter()
                    .find(|(_, pt)| pt == &q)
                    .and_then(|(v, _)| lambda_star(p, v).into_iter().find(|d| g.contains(&[-d[0], -d[1]])))
                    .unwrap_or(p.edge_direction())
            }),
        _ => piece_direction(gamma, st).unwrap_or(p.edge_direction()),
    }
}

/// Symmetry taking `d` to a reference direction in the closed cone spanned
/// by `(-1, 0)` and `(-1, -1)`.
pub fn d4_witness(d: [i64; 2]) -> D4Element {
    D4Element::all()
        .into_iter()
        .find(|g| {
            let e = g.apply_dir(d);
            e[0] < 0 && e[1] <= 0 && -e[1] <= -e[0]
        })
        .unwrap_or(D4Element::IDENTITY)
}

/// Classifies an even component against a catalog.
pub fn classify_with(
    catalog: &Catalog,
    c: &IntersectionComponent,
    p: &Curve11Param,
    gamma: &CurveGamma,
) -> Result<TangencyType, TangencyError> {
    let key = feature_key(c, p, gamma);
    let rec = catalog.lookup(&key).ok_or(TangencyError::Unclassifiable(key))?;
    let dir = reference_direction(c, p, gamma);
    let flavor = match rec.flavor {
        "hv" => match axis_flavor(dir) {
            Flavor::Diagonal => Flavor::Diagonal,
            f => f,
        },
        "diagonal" => Flavor::Diagonal,
        _ => Flavor::None,
    };
    Ok(TangencyType { label: rec.label, flavor, d4_witness: d4_witness(dir), key })
}

/// Classifies an even component against the shipped catalog.
pub fn classify(c: &IntersectionComponent, p: &Curve11Param, gamma: &CurveGamma) -> Result<TangencyType, TangencyError> {
    classify_with(&Catalog::builtin(), c, p, gamma)
}

/// The tangency tuple of `p` if it is tritangent.
pub fn is_tritangent_with(
    catalog: &Catalog,
    p: &Curve11Param,
    gamma: &CurveGamma,
) -> Result<Option<TangencyTuple>, TangencyError> {
    let comps = stable_intersection(p, gamma);
    if !is_tritangent_multiset(&comps) {
        return Ok(None);
    }
    let mut out = Vec::with_capacity(comps.len());
    for c in comps {
        let t = classify_with(catalog, &c, p, gamma)?;
        out.push((c, t));
    }
    Ok(Some(TangencyTuple { lambda: p.clone(), components: out }))
}

/// The tangency tuple of `p` if it is tritangent, using the shipped catalog.
pub fn is_tritangent(p: &Curve11Param, gamma: &CurveGamma) -> Result<Option<TangencyTuple>, TangencyError> {
    is_tritangent_with(&Catalog::builtin(), p, gamma)
}

/// Whether `μ` is defined for a classified type.
pub fn mu_applies(t: &TangencyType) -> bool {
    matches!(
        (t.label, t.flavor),
        ("(4a)", Flavor::Diagonal) | ("(6a)", Flavor::Diagonal) | ("(4a')", _) | ("(6a')", _)
    )
}

/// Point of a component used as its tangency location: the vertex of the
/// (1,1)-curve for components at a vertex, otherwise the anchor.
fn tangency_location(c: &IntersectionComponent, p: &Curve11Param) -> Vec2 {
    for (_, pt) in lambda_vertices(p) {
        if c.contains(&pt) {
            return pt;
        }
    }
    c.anchor()
}

/// The slope `±1` direction of the (3,3)-curve at `q`, if any.
fn diagonal_at(gamma: &CurveGamma, q: &Vec2) -> Option<[i64; 2]> {
    match gamma.locate(q) {
        Stratum::Vertex(vid) => gamma_star(gamma, vid).into_iter().find(|d| is_diag(*d)),
        st => piece_direction(gamma, st).filter(|d| is_diag(*d)),
    }
}

/// `μ` for component `idx` of a tuple: the larger number of companion
/// tangencies in one of the two closed half-planes bounded by the slope `±1`
/// line through the tangency.
///
/// A companion component contributes half its multiplicity in tangencies.
/// It is placed on the side of its limit points; if they lie strictly on both
/// sides, their weighted barycenter decides.
pub fn compute_mu(t: &TangencyTuple, gamma: &CurveGamma, idx: usize) -> Result<u8, TangencyError> {
    let (c, ty) = &t.components[idx];
    if !mu_applies(ty) {
        return Err(TangencyError::MuUndefined);
    }
    let q = tangency_location(c, &t.lambda);
    let d = diagonal_at(gamma, &q).ok_or(TangencyError::MuUndefined)?;
    let n = [-d[1], d[0]];
    let base = idot2(n, &q);
    let side = |x: &Vec2| (idot2(n, x) - &base).signum();
    let mut plus = 0u32;
    let mut minus = 0u32;
    for (j, (o, _)) in t.components.iter().enumerate() {
        if j == idx {
            continue;
        }
        let k = o.stable_mult / 2;
        let signs: Vec<i32> = o.points.iter().map(|tp| side(&tp.point)).collect();
        let has_p = signs.iter().any(|&s| s > 0);
        let has_m = signs.iter().any(|&s| s < 0);
        let s = if has_p && has_m {
            let mut w = Rat::zero();
            let mut b = [Rat::zero(), Rat::zero()];
            for tp in &o.points {
                let m = Rat::from_int(tp.mult as i64);
                b[0] += &(&tp.point[0] * &m);
                b[1] += &(&tp.point[1] * &m);
                w += &m;
            }
            side(&[&b[0] / &w, &b[1] / &w])
        } else if has_p {
            1
        } else if has_m {
            -1
        } else {
            0
        };
        if s >= 0 {
            plus += k;
        }
        if s <= 0 {
            minus += k;
        }
    }
    Ok(plus.max(minus).clamp(1, 2) as u8)
}
