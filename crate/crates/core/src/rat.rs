//! Exact rational numbers.
//!
//! [`Rat`] keeps a reduced fraction with a positive denominator. Values whose
//! numerator and denominator fit in `i128` are stored inline and every
//! operation on them is overflow-checked; anything larger transparently moves
//! to an arbitrary-precision [`BigRational`] and moves back once it fits again.
//! No operation ever rounds.

use alloc::string::String;
use alloc::string::ToString;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact rational number.
#[derive(Clone)]
pub struct Rat(Repr);

#[derive(Clone)]
enum Repr {
    Small(i128, i128),
    Big(BigRational),
}

/// Error returned when a string is not a rational literal.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal `{0}`")]
pub struct ParseRatError(pub String);

fn gcd_i128(a: i128, b: i128) -> i128 {
    let mut a = a.unsigned_abs();
    let mut b = b.unsigned_abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a as i128
}

impl Rat {
    /// Builds `n / d`, reducing the fraction.
    ///
    /// # Panics
    /// Panics if `d == 0`.
    pub fn new(n: i128, d: i128) -> Rat {
        assert!(d != 0, "zero denominator");
        Rat::small_or_big(n, d)
    }

    /// The integer `n`.
    pub fn from_int(n: i64) -> Rat {
        Rat(Repr::Small(n as i128, 1))
    }

    /// Zero.
    pub fn zero() -> Rat {
        Rat(Repr::Small(0, 1))
    }

    /// One.
    pub fn one() -> Rat {
        Rat(Repr::Small(1, 1))
    }

    fn small_or_big(n: i128, d: i128) -> Rat {
        if n == i128::MIN || d == i128::MIN {
            return Rat::from_big(BigRational::new(BigInt::from(n), BigInt::from(d)));
        }
        let (mut n, mut d) = if d < 0 { (-n, -d) } else { (n, d) };
        let g = gcd_i128(n, d);
        if g > 1 {
            n /= g;
            d /= g;
        }
        if n == 0 {
            d = 1;
        }
        Rat(Repr::Small(n, d))
    }

    fn from_big(b: BigRational) -> Rat {
        match (b.numer().to_i128(), b.denom().to_i128()) {
            (Some(n), Some(d)) if n != i128::MIN && d != i128::MIN => Rat(Repr::Small(n, d)),
            _ => Rat(Repr::Big(b)),
        }
    }

    /// The value as an arbitrary-precision rational.
    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => b.clone(),
        }
    }

    /// Numerator of the reduced fraction.
    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    /// Positive denominator of the reduced fraction.
    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    /// `true` when the value is zero.
    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    /// `true` when the denominator is one.
    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(b) => b.is_integer(),
        }
    }

    /// Sign as -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::Small(n, _) => n.signum() as i32,
            Repr::Big(b) => {
                if b.is_positive() {
                    1
                } else if b.is_negative() {
                    -1
                } else {
                    0
                }
            }
        }
    }

    /// `true` when strictly positive.
    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    /// `true` when strictly negative.
    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    /// Absolute value.
    pub fn abs(&self) -> Rat {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Multiplicative inverse.
    ///
    /// # Panics
    /// Panics on zero.
    pub fn recip(&self) -> Rat {
        match &self.0 {
            Repr::Small(n, d) => Rat::new(*d, *n),
            Repr::Big(b) => {
                assert!(!b.is_zero(), "division by zero");
                Rat::from_big(b.recip())
            }
        }
    }

    /// The value as an `i64` when it is an integer in range.
    pub fn to_i64(&self) -> Option<i64> {
        match &self.0 {
            Repr::Small(n, 1) => i64::try_from(*n).ok(),
            _ => None,
        }
    }

    /// Nearest `f64`, for display and rendering only.
    pub fn to_f64(&self) -> f64 {
        match &self.0 {
            Repr::Small(n, d) => *n as f64 / *d as f64,
            Repr::Big(b) => b.to_f64().unwrap_or(f64::NAN),
        }
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        self.to_big().floor().to_integer()
    }

    /// Smaller of two values.
    pub fn min(a: &Rat, b: &Rat) -> Rat {
        if a <= b {
            a.clone()
        } else {
            b.clone()
        }
    }

    /// Larger of two values.
    pub fn max(a: &Rat, b: &Rat) -> Rat {
        if a >= b {
            a.clone()
        } else {
            b.clone()
        }
    }

    /// Arbitrary-precision constructor.
    pub fn from_bigint_ratio(n: BigInt, d: BigInt) -> Rat {
        assert!(!d.is_zero(), "zero denominator");
        Rat::from_big(BigRational::new(n, d))
    }
}

fn add_small(a: (i128, i128), b: (i128, i128)) -> Option<Rat> {
    let (n1, d1) = a;
    let (n2, d2) = b;
    if d1 == 1 && d2 == 1 {
        return n1.checked_add(n2).map(|n| Rat(Repr::Small(n, 1)));
    }
    let g = gcd_i128(d1, d2);
    let d1g = d1 / g;
    let d2g = d2 / g;
    let n = n1.checked_mul(d2g)?.checked_add(n2.checked_mul(d1g)?)?;
    let d = d1g.checked_mul(d2)?;
    Some(Rat::small_or_big(n, d))
}

fn mul_small(a: (i128, i128), b: (i128, i128)) -> Option<Rat> {
    let (n1, d1) = a;
    let (n2, d2) = b;
    if n1 == 0 || n2 == 0 {
        return Some(Rat::zero());
    }
    let g1 = gcd_i128(n1, d2);
    let g2 = gcd_i128(n2, d1);
    let n = (n1 / g1).checked_mul(n2 / g2)?;
    let d = (d1 / g2).checked_mul(d2 / g1)?;
    Some(Rat::small_or_big(n, d))
}

impl<'a> Add<&'a Rat> for &'a Rat {
    type Output = Rat;
    fn add(self, rhs: &Rat) -> Rat {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &rhs.0) {
            if let Some(r) = add_small((*a, *b), (*c, *d)) {
                return r;
            }
        }
        Rat::from_big(self.to_big() + rhs.to_big())
    }
}

impl<'a> Sub<&'a Rat> for &'a Rat {
    type Output = Rat;
    fn sub(self, rhs: &Rat) -> Rat {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Rat> for &'a Rat {
    type Output = Rat;
    fn mul(self, rhs: &Rat) -> Rat {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &rhs.0) {
            if let Some(r) = mul_small((*a, *b), (*c, *d)) {
                return r;
            }
        }
        Rat::from_big(self.to_big() * rhs.to_big())
    }
}

impl<'a> Div<&'a Rat> for &'a Rat {
    type Output = Rat;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Rat) -> Rat {
        self * &rhs.recip()
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        match &self.0 {
            Repr::Small(n, d) => Rat(Repr::Small(-*n, *d)),
            Repr::Big(b) => Rat::from_big(-b.clone()),
        }
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Rat> for Rat {
            type Output = Rat;
            fn $m(self, rhs: Rat) -> Rat {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Rat> for Rat {
            type Output = Rat;
            fn $m(self, rhs: &Rat) -> Rat {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Rat> for &'a Rat {
            type Output = Rat;
            fn $m(self, rhs: Rat) -> Rat {
                self.$m(&rhs)
            }
        }
    };
}
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        *self = &*self + rhs;
    }
}
impl AddAssign<Rat> for Rat {
    fn add_assign(&mut self, rhs: Rat) {
        *self = &*self + &rhs;
    }
}
impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        *self = &*self - rhs;
    }
}
impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        *self = &*self * rhs;
    }
}

impl PartialEq for Rat {
    fn eq(&self, other: &Rat) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => a == c && b == d,
            (Repr::Big(a), Repr::Big(b)) => a == b,
            _ => false,
        }
    }
}
impl Eq for Rat {}

impl Ord for Rat {
    fn cmp(&self, other: &Rat) -> Ordering {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &other.0) {
            if b == d {
                return a.cmp(c);
            }
            if let (Some(l), Some(r)) = (a.checked_mul(*d), c.checked_mul(*b)) {
                return l.cmp(&r);
            }
        }
        self.to_big().cmp(&other.to_big())
    }
}
impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Rat) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Hash for Rat {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small(n, d) => {
                0u8.hash(state);
                n.hash(state);
                d.hash(state);
            }
            Repr::Big(b) => {
                1u8.hash(state);
                b.numer().to_str_radix(16).hash(state);
                b.denom().to_str_radix(16).hash(state);
            }
        }
    }
}

impl Default for Rat {
    fn default() -> Rat {
        Rat::zero()
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat::from_int(n)
    }
}

impl From<i32> for Rat {
    fn from(n: i32) -> Rat {
        Rat::from_int(n as i64)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{}", n),
            Repr::Small(n, d) => write!(f, "{}/{}", n, d),
            Repr::Big(b) if b.is_integer() => write!(f, "{}", b.numer()),
            Repr::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rat {
    type Err = ParseRatError;

    /// Accepts `p`, `p/q` and finite decimals such as `-1.25`.
    fn from_str(s: &str) -> Result<Rat, ParseRatError> {
        let t = s.trim();
        let err = || ParseRatError(s.to_string());
        if let Some((p, q)) = t.split_once('/') {
            let p = BigInt::from_str(p.trim()).map_err(|_| err())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| err())?;
            if q.is_zero() {
                return Err(err());
            }
            return Ok(Rat::from_bigint_ratio(p, q));
        }
        if let Some((ip, fp)) = t.split_once('.') {
            if fp.is_empty() || !fp.bytes().all(|c| c.is_ascii_digit()) {
                return Err(err());
            }
            let neg = ip.starts_with('-');
            let ip_digits = ip.trim_start_matches(['-', '+']);
            let ip_val = if ip_digits.is_empty() {
                BigInt::zero()
            } else {
                BigInt::from_str(ip_digits).map_err(|_| err())?
            };
            let scale = num_traits::pow(BigInt::from(10), fp.len());
            let frac = BigInt::from_str(fp).map_err(|_| err())?;
            let mut n = ip_val * &scale + frac;
            if neg {
                n = -n;
            }
            return Ok(Rat::from_bigint_ratio(n, scale));
        }
        let n = BigInt::from_str(t).map_err(|_| err())?;
        Ok(Rat::from_bigint_ratio(n, BigInt::one()))
    }
}

/// Greatest common divisor of two integers, always non-negative.
pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}
