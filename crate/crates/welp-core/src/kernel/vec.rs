//! Plane vectors: exact rational `Vec2` and integer `LatticeVec`.
//!
//! `LatticeVec` is the working type wherever everything stays on the integer
//! lattice (welp sums, lattice point classification); `Vec2` is the general
//! rational type the measures are defined on. A lattice vector embeds
//! losslessly into `Vec2`; the reverse direction is partial.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::rat::Rat;

/// Vector (or point) with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vec2 {
    pub x: Rat,
    pub y: Rat,
}

impl Vec2 {
    pub fn new(x: Rat, y: Rat) -> Vec2 {
        Vec2 { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Vec2 {
        Vec2 { x: Rat::int(x), y: Rat::int(y) }
    }

    pub fn zero() -> Vec2 {
        Vec2::from_ints(0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// Integer view, if both coordinates are integers that fit in `i64`.
    pub fn to_lattice(&self) -> Option<LatticeVec> {
        Some(LatticeVec::new(self.x.to_i64()?, self.y.to_i64()?))
    }
}

impl fmt::Debug for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Add for &Vec2 {
    type Output = Vec2;
    fn add(self, rhs: &Vec2) -> Vec2 {
        Vec2::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl Sub for &Vec2 {
    type Output = Vec2;
    fn sub(self, rhs: &Vec2) -> Vec2 {
        Vec2::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl Neg for &Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-&self.x, -&self.y)
    }
}

/// Vector (or point) on the integer lattice.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct LatticeVec {
    pub x: i64,
    pub y: i64,
}

impl LatticeVec {
    pub fn new(x: i64, y: i64) -> LatticeVec {
        LatticeVec { x, y }
    }

    pub fn to_vec2(self) -> Vec2 {
        Vec2::from_ints(self.x, self.y)
    }

    /// Chebyshev norm, the radius of the smallest centered box holding this
    /// point.
    pub fn max_norm(self) -> i64 {
        self.x.abs().max(self.y.abs())
    }
}

impl fmt::Debug for LatticeVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for LatticeVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Add for LatticeVec {
    type Output = LatticeVec;
    fn add(self, rhs: LatticeVec) -> LatticeVec {
        LatticeVec::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for LatticeVec {
    type Output = LatticeVec;
    fn sub(self, rhs: LatticeVec) -> LatticeVec {
        LatticeVec::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for LatticeVec {
    type Output = LatticeVec;
    fn neg(self) -> LatticeVec {
        LatticeVec::new(-self.x, -self.y)
    }
}

impl From<LatticeVec> for Vec2 {
    fn from(v: LatticeVec) -> Vec2 {
        v.to_vec2()
    }
}

impl From<(i64, i64)> for LatticeVec {
    fn from((x, y): (i64, i64)) -> LatticeVec {
        LatticeVec::new(x, y)
    }
}

/// Cross product `u.x * v.y - v.x * u.y`: twice the signed area of the
/// triangle (0, u, v), positive when `v` lies counterclockwise of `u`.
pub fn det2(u: &Vec2, v: &Vec2) -> Rat {
    &(&u.x * &v.y) - &(&v.x * &u.y)
}

/// Euclidean inner product `u.x * v.x + u.y * v.y`.
pub fn dot2(u: &Vec2, v: &Vec2) -> Rat {
    &(&u.x * &v.x) + &(&u.y * &v.y)
}

/// Integer cross product, exact in `i128`: products of two `i64` cannot
/// overflow it.
pub fn det2_lattice(u: LatticeVec, v: LatticeVec) -> i128 {
    u.x as i128 * v.y as i128 - v.x as i128 * u.y as i128
}

/// Integer inner product, exact in `i128`.
pub fn dot2_lattice(u: LatticeVec, v: LatticeVec) -> i128 {
    u.x as i128 * v.x as i128 + u.y as i128 * v.y as i128
}
