//! Tropical (1,1)-curves and the tropical Segre correspondence.
//!
//! A (1,1)-curve is recorded by its lowest vertex `v0` and the signed length
//! `ℓ` of its bounded edge: slope one when `ℓ > 0`, slope minus one when
//! `ℓ < 0`, and a single four-valent vertex when `ℓ = 0`.

use alloc::vec;
use alloc::vec::Vec;

use crate::geometry::Vec3;
use crate::plane::{along, Vec2};
use crate::rat::Rat;

/// A (1,1)-curve as a point `(v0, ℓ)` of `R^3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Curve11Param {
    /// Lowest vertex.
    pub v0: Vec2,
    /// Signed edge length.
    pub len: Rat,
}

/// Which vertex of a (1,1)-curve a leg or point is attached to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LambdaVertex {
    /// The lowest vertex.
    V0,
    /// The other vertex (coincides with `v0` when `ℓ = 0`).
    V1,
}

/// A leg of a (1,1)-curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Leg11 {
    /// Vertex the leg is attached to.
    pub vertex: LambdaVertex,
    /// Primitive direction.
    pub direction: [i64; 2],
}

/// Vertices, edge and legs of a (1,1)-curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curve11Geometry {
    /// 3 or 4.
    pub valency: u8,
    /// One vertex when four-valent, otherwise `[v0, v1]`.
    pub vertices: Vec<Vec2>,
    /// Bounded edge from `v0` to `v1` with its primitive direction.
    pub edge: Option<(Vec2, Vec2, [i64; 2])>,
    /// The four legs.
    pub legs: Vec<Leg11>,
}

impl Curve11Param {
    /// Builds `(v0, ℓ)`.
    pub fn new(v0: Vec2, len: Rat) -> Curve11Param {
        Curve11Param { v0, len }
    }

    /// From a point `(x, y, ℓ)` of `R^3`.
    pub fn from_point(p: &Vec3) -> Curve11Param {
        Curve11Param { v0: [p[0].clone(), p[1].clone()], len: p[2].clone() }
    }

    /// As a point `(x, y, ℓ)` of `R^3`.
    pub fn to_point(&self) -> Vec3 {
        [self.v0[0].clone(), self.v0[1].clone(), self.len.clone()]
    }

    /// Direction of the bounded edge for the sign of `ℓ`.
    pub fn edge_direction(&self) -> [i64; 2] {
        if self.len.is_negative() {
            [-1, 1]
        } else {
            [1, 1]
        }
    }

    /// The second vertex `v1 = v0 + |ℓ|·d`.
    pub fn v1(&self) -> Vec2 {
        along(&self.v0, self.edge_direction(), &self.len.abs())
    }

    /// Legs per combinatorial type.
    pub fn legs(&self) -> Vec<Leg11> {
        use LambdaVertex::*;
        let l = |vertex, direction| Leg11 { vertex, direction };
        match self.len.signum() {
            1 => vec![l(V0, [-1, 0]), l(V0, [0, -1]), l(V1, [1, 0]), l(V1, [0, 1])],
            -1 => vec![l(V0, [1, 0]), l(V0, [0, -1]), l(V1, [-1, 0]), l(V1, [0, 1])],
            _ => vec![l(V0, [-1, 0]), l(V0, [0, -1]), l(V0, [1, 0]), l(V0, [0, 1])],
        }
    }

    /// Vertices, edge and legs.
    pub fn geometry(&self) -> Curve11Geometry {
        let legs = self.legs();
        if self.len.is_zero() {
            return Curve11Geometry { valency: 4, vertices: vec![self.v0.clone()], edge: None, legs };
        }
        let v1 = self.v1();
        Curve11Geometry {
            valency: 3,
            vertices: vec![self.v0.clone(), v1.clone()],
            edge: Some((self.v0.clone(), v1, self.edge_direction())),
            legs,
        }
    }
}

/// The tropical Segre correspondence from plane vertices to `(v0, ℓ)`.
pub fn segre_psi(v: &Vec3) -> Curve11Param {
    let (x, y, z) = (&v[0], &v[1], &v[2]);
    let len = &(z - x) - y;
    if &(x + y) >= z {
        Curve11Param { v0: [x.clone(), z - x], len }
    } else {
        Curve11Param { v0: [x.clone(), y.clone()], len }
    }
}

/// Inverse of [`segre_psi`].
pub fn segre_psi_inverse(p: &Curve11Param) -> Vec3 {
    let (a, b) = (&p.v0[0], &p.v0[1]);
    if p.len.signum() >= 0 {
        [a.clone(), b.clone(), &(a + b) + &p.len]
    } else {
        [a.clone(), b - &p.len, a + b]
    }
}
