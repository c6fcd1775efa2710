//! Exact 3D vectors over Q(√5) and the predicates built on them.

mod predicates;

pub use predicates::{orient2d, orient3d, orient3d_det, triangle_interiors_intersect, Axis};

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use crate::golden_field::{GoldenRational, Rational};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ExactVec3 {
    pub x: GoldenRational,
    pub y: GoldenRational,
    pub z: GoldenRational,
}

impl ExactVec3 {
    pub fn new(x: GoldenRational, y: GoldenRational, z: GoldenRational) -> Self {
        Self { x, y, z }
    }

    pub fn from_integers(x: i64, y: i64, z: i64) -> Self {
        Self::new(x.into(), y.into(), z.into())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn components(&self) -> [&GoldenRational; 3] {
        [&self.x, &self.y, &self.z]
    }

    pub fn dot(&self, other: &Self) -> GoldenRational {
        &self.x * &other.x + &self.y * &other.y + &self.z * &other.z
    }

    pub fn cross(&self, other: &Self) -> Self {
        Self {
            x: &self.y * &other.z - &self.z * &other.y,
            y: &self.z * &other.x - &self.x * &other.z,
            z: &self.x * &other.y - &self.y * &other.x,
        }
    }

    pub fn sq_norm(&self) -> GoldenRational {
        self.dot(self)
    }

    pub fn sq_dist(&self, other: &Self) -> GoldenRational {
        let d = self - other;
        d.sq_norm()
    }

    pub fn midpoint(&self, other: &Self) -> Self {
        let half = Rational::new(1.into(), 2.into());
        (self + other).scale_rational(&half)
    }

    pub fn scale(&self, s: &GoldenRational) -> Self {
        Self { x: &self.x * s, y: &self.y * s, z: &self.z * s }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        Self { x: self.x.scale(r), y: self.y.scale(r), z: self.z.scale(r) }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn to_f64(&self) -> [f64; 3] {
        [self.x.to_f64(), self.y.to_f64(), self.z.to_f64()]
    }

    /// Ordering used for canonical vertex picks: component signs first,
    /// then exact component values.
    pub fn sign_lex_cmp(&self, other: &Self) -> Ordering {
        let signs = |v: &Self| [v.x.sign(), v.y.sign(), v.z.sign()];
        signs(self)
            .cmp(&signs(other))
            .then_with(|| self.x.cmp(&other.x))
            .then_with(|| self.y.cmp(&other.y))
            .then_with(|| self.z.cmp(&other.z))
    }
}

/// Exact inner product.
pub fn vec_dot(u: &ExactVec3, v: &ExactVec3) -> GoldenRational {
    u.dot(v)
}

/// Exact squared Euclidean distance.
pub fn vec_sq_dist(u: &ExactVec3, v: &ExactVec3) -> GoldenRational {
    u.sq_dist(v)
}

pub fn vec_midpoint(u: &ExactVec3, v: &ExactVec3) -> ExactVec3 {
    u.midpoint(v)
}

impl<'b> Add<&'b ExactVec3> for &ExactVec3 {
    type Output = ExactVec3;
    fn add(self, rhs: &'b ExactVec3) -> ExactVec3 {
        ExactVec3 { x: &self.x + &rhs.x, y: &self.y + &rhs.y, z: &self.z + &rhs.z }
    }
}

impl<'b> Sub<&'b ExactVec3> for &ExactVec3 {
    type Output = ExactVec3;
    fn sub(self, rhs: &'b ExactVec3) -> ExactVec3 {
        ExactVec3 { x: &self.x - &rhs.x, y: &self.y - &rhs.y, z: &self.z - &rhs.z }
    }
}

impl Add for ExactVec3 {
    type Output = ExactVec3;
    fn add(self, rhs: ExactVec3) -> ExactVec3 {
        &self + &rhs
    }
}

impl Sub for ExactVec3 {
    type Output = ExactVec3;
    fn sub(self, rhs: ExactVec3) -> ExactVec3 {
        &self - &rhs
    }
}

impl Neg for &ExactVec3 {
    type Output = ExactVec3;
    fn neg(self) -> ExactVec3 {
        ExactVec3 { x: -&self.x, y: -&self.y, z: -&self.z }
    }
}

impl Neg for ExactVec3 {
    type Output = ExactVec3;
    fn neg(self) -> ExactVec3 {
        -&self
    }
}

impl fmt::Display for ExactVec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phi() -> GoldenRational {
        GoldenRational::phi()
    }

    fn v(x: GoldenRational, y: GoldenRational, z: GoldenRational) -> ExactVec3 {
        ExactVec3::new(x, y, z)
    }

    fn int(n: i64) -> GoldenRational {
        GoldenRational::from_integer(n)
    }

    fn half(x: GoldenRational) -> GoldenRational {
        x.scale(&Rational::new(1.into(), 2.into()))
    }

    #[test]
    fn phase_offset_dot_product() {
        let a = v(int(0), int(1), phi());
        let m = vec_midpoint(&a, &v(int(1), phi(), int(0)));
        let m2 = vec_midpoint(&a, &v(int(-1), phi(), int(0)));
        let expected = half(int(1) + phi() + phi());
        assert_eq!(vec_dot(&m, &m2), expected);
        assert!(vec_dot(&m, &ExactVec3::zero()).is_zero());
    }

    #[test]
    fn edge_and_diagonal_distances() {
        let a = v(int(0), int(1), phi());
        let b = v(int(1), phi(), int(0));
        let s = v(int(0), int(-1), -phi());
        assert_eq!(vec_sq_dist(&a, &b), int(4));
        assert_eq!(vec_sq_dist(&s, &b), phi().scale(&Rational::from_integer(4.into())) + int(4));
        assert_eq!(vec_sq_dist(&s, &b), &(&phi() * &phi()) * &int(4));
        assert!(vec_sq_dist(&a, &a).is_zero());
    }

    #[test]
    fn midpoints() {
        let a = v(int(0), int(1), phi());
        let m = vec_midpoint(&a, &v(int(1), phi(), int(0)));
        assert_eq!(m, v(half(int(1)), half(int(1) + phi()), half(phi())));
        let m2 = vec_midpoint(&a, &v(int(-1), phi(), int(0)));
        assert_eq!(m2, v(half(int(-1)), half(int(1) + phi()), half(phi())));
        assert_eq!(vec_midpoint(&a, &a), a);
    }

    #[test]
    fn cross_is_orthogonal() {
        let a = v(int(0), int(1), phi());
        let b = v(int(1), phi(), int(0));
        let c = a.cross(&b);
        assert!(c.dot(&a).is_zero());
        assert!(c.dot(&b).is_zero());
    }
}
