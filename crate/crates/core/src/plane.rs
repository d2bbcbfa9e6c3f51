//! Exact planar primitives: integer directions, lines and half-planes.

use crate::rat::Rat;

/// A point of `R^2` with exact coordinates.
pub type Vec2 = [Rat; 2];

/// Builds a point of `R^2` from integers.
pub fn v2(x: i64, y: i64) -> Vec2 {
    [Rat::from_int(x), Rat::from_int(y)]
}

/// Determinant of two integer vectors.
pub fn icross2(a: [i64; 2], b: [i64; 2]) -> i64 {
    a[0] * b[1] - a[1] * b[0]
}

/// Integer dot product of an integer vector with a rational point.
pub fn idot2(a: [i64; 2], p: &Vec2) -> Rat {
    let mut s = Rat::zero();
    if a[0] != 0 {
        s += &(Rat::from_int(a[0]) * &p[0]);
    }
    if a[1] != 0 {
        s += &(Rat::from_int(a[1]) * &p[1]);
    }
    s
}

/// Divides an integer vector by the gcd of its entries.
pub fn primitive2(v: [i64; 2]) -> [i64; 2] {
    let g = crate::rat::gcd(v[0], v[1]);
    if g <= 1 {
        v
    } else {
        [v[0] / g, v[1] / g]
    }
}

/// Primitive integer direction of `b - a`, assuming it is a rational
/// multiple of an integer vector with small entries.
pub fn direction_between(a: &Vec2, b: &Vec2) -> [i64; 2] {
    let dx = &b[0] - &a[0];
    let dy = &b[1] - &a[1];
    if dx.is_zero() {
        return [0, dy.signum() as i64];
    }
    if dy.is_zero() {
        return [dx.signum() as i64, 0];
    }
    let r = &dy / &dx;
    let n = r.numer();
    let d = r.denom();
    let n: i64 = i64::try_from(n).expect("small direction");
    let d: i64 = i64::try_from(d).expect("small direction");
    let s = dx.signum() as i64;
    [s * d, s * n]
}

/// `p + t·u`.
pub fn along(p: &Vec2, u: [i64; 2], t: &Rat) -> Vec2 {
    [&p[0] + &(Rat::from_int(u[0]) * t), &p[1] + &(Rat::from_int(u[1]) * t)]
}

/// `b - a`.
pub fn sub2(b: &Vec2, a: &Vec2) -> Vec2 {
    [&b[0] - &a[0], &b[1] - &a[1]]
}

/// Determinant of an integer direction with a rational vector.
pub fn cross_ir(u: [i64; 2], w: &Vec2) -> Rat {
    &(Rat::from_int(u[0]) * &w[1]) - &(Rat::from_int(u[1]) * &w[0])
}

/// A line `normal · p = offset` with a primitive normal whose first nonzero
/// entry is positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Line2 {
    /// Primitive normal.
    pub normal: [i64; 2],
    /// Right-hand side.
    pub offset: Rat,
}

impl Line2 {
    /// The line `normal · p = offset`, normalized.
    pub fn new(normal: [i64; 2], offset: Rat) -> Line2 {
        let g = crate::rat::gcd(normal[0], normal[1]);
        assert!(g != 0, "zero normal");
        let mut n = [normal[0] / g, normal[1] / g];
        let mut c = offset / Rat::from_int(g);
        if n[0] < 0 || (n[0] == 0 && n[1] < 0) {
            n = [-n[0], -n[1]];
            c = -c;
        }
        Line2 { normal: n, offset: c }
    }

    /// The line through `p` with direction `u`.
    pub fn through(p: &Vec2, u: [i64; 2]) -> Line2 {
        let n = [-u[1], u[0]];
        Line2::new(n, idot2(n, p))
    }

    /// Sign of `normal · p - offset`.
    pub fn side(&self, p: &Vec2) -> i32 {
        (idot2(self.normal, p) - &self.offset).signum()
    }

    /// Value of `normal · p - offset`.
    pub fn eval(&self, p: &Vec2) -> Rat {
        idot2(self.normal, p) - &self.offset
    }
}

/// A half-plane `normal · p >= offset` (`>` when strict).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfPlane {
    /// Integer normal.
    pub normal: [i64; 2],
    /// Right-hand side.
    pub offset: Rat,
    /// Whether the inequality is strict.
    pub strict: bool,
}

impl HalfPlane {
    /// Membership, honouring strictness.
    pub fn contains(&self, p: &Vec2) -> bool {
        let s = (idot2(self.normal, p) - &self.offset).signum();
        if self.strict {
            s > 0
        } else {
            s >= 0
        }
    }
}

/// Intersection point of two non-parallel lines.
pub fn intersect_lines(a: &Line2, b: &Line2) -> Option<Vec2> {
    let det = icross2(a.normal, b.normal);
    if det == 0 {
        return None;
    }
    let d = Rat::from_int(det);
    let x = (&(&a.offset * &Rat::from_int(b.normal[1])) - &(&b.offset * &Rat::from_int(a.normal[1]))) / &d;
    let y = (&(&b.offset * &Rat::from_int(a.normal[0])) - &(&a.offset * &Rat::from_int(b.normal[0]))) / &d;
    Some([x, y])
}
