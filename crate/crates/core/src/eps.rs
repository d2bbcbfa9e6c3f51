//! First-order infinitesimals.
//!
//! [`Eps`] is the value `a + b·ε` where `ε` is a positive infinitesimal.
//! Values are ordered lexicographically, which is the order of the reals for
//! all sufficiently small positive `ε`.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::rat::Rat;

/// The number `a + b·ε`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Eps {
    /// Standard part.
    pub a: Rat,
    /// Coefficient of the infinitesimal.
    pub b: Rat,
}

impl Eps {
    /// Builds `a + b·ε`.
    pub fn new(a: Rat, b: Rat) -> Eps {
        Eps { a, b }
    }

    /// A standard value.
    pub fn real(a: Rat) -> Eps {
        Eps { a, b: Rat::zero() }
    }

    /// Sign of the value for small positive `ε`.
    pub fn signum(&self) -> i32 {
        match self.a.signum() {
            0 => self.b.signum(),
            s => s,
        }
    }

    /// Multiplies by a standard scalar.
    pub fn scale(&self, k: &Rat) -> Eps {
        Eps { a: &self.a * k, b: &self.b * k }
    }

    /// Divides by a nonzero standard scalar.
    pub fn div_real(&self, k: &Rat) -> Eps {
        Eps { a: &self.a / k, b: &self.b / k }
    }
}

impl Ord for Eps {
    fn cmp(&self, other: &Eps) -> Ordering {
        self.a.cmp(&other.a).then_with(|| self.b.cmp(&other.b))
    }
}

impl PartialOrd for Eps {
    fn partial_cmp(&self, other: &Eps) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Eps {
    type Output = Eps;
    fn add(self, rhs: &Eps) -> Eps {
        Eps { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl Sub for &Eps {
    type Output = Eps;
    fn sub(self, rhs: &Eps) -> Eps {
        Eps { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl Neg for &Eps {
    type Output = Eps;
    fn neg(self) -> Eps {
        Eps { a: -&self.a, b: -&self.b }
    }
}

impl Mul<&Rat> for &Eps {
    type Output = Eps;
    fn mul(self, k: &Rat) -> Eps {
        self.scale(k)
    }
}

impl fmt::Debug for Eps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}ε", self.a, self.b)
    }
}
