//! Exact arithmetic in the quadratic field Q(√5).
//!
//! Every element is stored as `a + b·√5` with `a`, `b` reduced big rationals,
//! so two elements are equal exactly when their coefficients are equal.

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::{BigInt, Sign as BigSign};
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Unbounded rational number used for both coefficients.
pub type Rational = Ratio<BigInt>;

/// Sign of an exact quantity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    fn of_rational(r: &Rational) -> Sign {
        if r.is_zero() {
            Sign::Zero
        } else if r.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldError {
    DivisionByZero,
    /// Text did not match `p/q + r/s*sqrt5` (or a plain rational).
    Parse(String),
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::DivisionByZero => f.write_str("division by the zero element"),
            FieldError::Parse(s) => write!(f, "cannot parse golden rational from {s:?}"),
        }
    }
}

impl core::error::Error for FieldError {}

/// Element `a + b·√5` of Q(√5).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GoldenRational {
    a: Rational,
    b: Rational,
}

impl GoldenRational {
    pub fn new(a: Rational, b: Rational) -> Self {
        // Ratio arithmetic keeps values reduced; `new` reduces again for
        // hand-built inputs made with `Ratio::new_raw`.
        Self { a: reduce(a), b: reduce(b) }
    }

    pub fn from_rational(a: Rational) -> Self {
        Self::new(a, Rational::zero())
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// `num/den` as a field element. Panics if `den == 0`.
    pub fn from_fraction(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn zero() -> Self {
        Self { a: Rational::zero(), b: Rational::zero() }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn sqrt5() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    /// The golden ratio (1 + √5)/2.
    pub fn phi() -> Self {
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        Self::new(half.clone(), half)
    }

    /// Rational coefficient `a`.
    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    /// Coefficient `b` of √5.
    pub fn sqrt5_part(&self) -> &Rational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// True when the element lies in Q (no √5 component).
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate `a − b·√5`.
    pub fn conjugate(&self) -> Self {
        Self { a: self.a.clone(), b: -self.b.clone() }
    }

    /// Field norm `a² − 5b²`, the product with the conjugate.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - five() * &self.b * &self.b
    }

    /// Exact sign of the real number `a + b√5`.
    pub fn sign(&self) -> Sign {
        let sa = Sign::of_rational(&self.a);
        let sb = Sign::of_rational(&self.b);
        match (sa, sb) {
            (Sign::Zero, s) | (s, Sign::Zero) => s,
            (x, y) if x == y => x,
            // opposite signs: the larger of a² and 5b² wins
            _ => match (&self.a * &self.a).cmp(&(five() * &self.b * &self.b)) {
                Ordering::Greater => sa,
                Ordering::Less => sb,
                Ordering::Equal => unreachable!("sqrt(5) is irrational"),
            },
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Sign::Positive
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Sign::Negative
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn recip(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        // 1/x = conj(x)/norm(x); the norm is a nonzero rational for x != 0
        let n = self.norm();
        let c = self.conjugate();
        Ok(Self::new(c.a / &n, c.b / n))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, FieldError> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Multiply by a rational scalar.
    pub fn scale(&self, r: &Rational) -> Self {
        Self { a: &self.a * r, b: &self.b * r }
    }

    /// Non-negative square root, when it exists inside Q(√5).
    ///
    /// Only perfect squares of the field have a root here; anything else
    /// (including negatives) yields `None`.
    pub fn sqrt_exact(&self) -> Option<Self> {
        match self.sign() {
            Sign::Negative => return None,
            Sign::Zero => return Some(Self::zero()),
            Sign::Positive => {}
        }
        if self.b.is_zero() {
            if let Some(r) = rational_sqrt(&self.a) {
                return Some(Self::from_rational(r));
            }
            // a = 5r²  =>  sqrt(a) = r·√5
            let r = rational_sqrt(&(&self.a / five()))?;
            return Some(Self::new(Rational::zero(), r));
        }
        // (p + q√5)² = a + b√5  <=>  p² + 5q² = a, 2pq = b
        let s = rational_sqrt(&self.norm())?;
        let two = Rational::from_integer(BigInt::from(2));
        for p_sq in [(&self.a + &s) / &two, (&self.a - &s) / &two] {
            if !p_sq.is_positive() {
                continue;
            }
            if let Some(p) = rational_sqrt(&p_sq) {
                let q = &self.b / (&two * &p);
                let root = Self::new(p, q);
                let root = if root.is_negative() { -root } else { root };
                if &(&root * &root) == self {
                    return Some(root);
                }
            }
        }
        None
    }

    /// Nearest `f64` to `a + b√5`.
    ///
    /// Brackets the value between two scaled integers and refines until
    /// both brackets round to the same double, so the result is correctly
    /// rounded. Intended for report and export boundaries only.
    pub fn to_f64(&self) -> f64 {
        if self.b.is_zero() {
            return rational_to_f64(&self.a);
        }
        let (an, ad) = (self.a.numer(), self.a.denom());
        let (bn, bd) = (self.b.numer(), self.b.denom());
        let den: BigInt = ad * bd;
        let mut shift: u32 = 64;
        loop {
            let scale = BigInt::one() << shift;
            // value · 2^shift · den = an·bd·2^shift + sgn(bn)·sqrt(5·bn²·ad²·4^shift)
            let lin: BigInt = an * bd * &scale;
            let rad_sq: BigInt = BigInt::from(5) * bn * bn * ad * ad * &scale * &scale;
            let root_floor = rad_sq.sqrt();
            let (lo_num, hi_num) = if bn.sign() == BigSign::Minus {
                (&lin - &root_floor - 1, &lin - &root_floor)
            } else {
                (&lin + &root_floor, &lin + &root_floor + 1)
            };
            let lo = floor_div(&lo_num, &den);
            let hi = -floor_div(&-hi_num, &den);
            let lo_f = libm::ldexp(lo.to_f64().unwrap_or(f64::NAN), -(shift as i32));
            let hi_f = libm::ldexp(hi.to_f64().unwrap_or(f64::NAN), -(shift as i32));
            if lo_f == hi_f || shift > 4096 {
                return lo_f;
            }
            shift *= 2;
        }
    }
}

fn five() -> Rational {
    Rational::from_integer(BigInt::from(5))
}

fn reduce(r: Rational) -> Rational {
    Rational::new(r.numer().clone(), r.denom().clone())
}

fn floor_div(n: &BigInt, d: &BigInt) -> BigInt {
    num_integer::Integer::div_floor(n, d)
}

fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

impl Default for GoldenRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Rational> for GoldenRational {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl From<i64> for GoldenRational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl PartialOrd for GoldenRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GoldenRational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self - other).sign() {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }
}

macro_rules! forward_binop {
    ($Trait:ident, $method:ident) => {
        impl $Trait<GoldenRational> for GoldenRational {
            type Output = GoldenRational;
            fn $method(self, rhs: GoldenRational) -> GoldenRational {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $Trait<&'a GoldenRational> for GoldenRational {
            type Output = GoldenRational;
            fn $method(self, rhs: &'a GoldenRational) -> GoldenRational {
                (&self).$method(rhs)
            }
        }
        impl<'a> $Trait<GoldenRational> for &'a GoldenRational {
            type Output = GoldenRational;
            fn $method(self, rhs: GoldenRational) -> GoldenRational {
                self.$method(&rhs)
            }
        }
    };
}

impl<'b> Add<&'b GoldenRational> for &GoldenRational {
    type Output = GoldenRational;
    fn add(self, rhs: &'b GoldenRational) -> GoldenRational {
        GoldenRational { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl<'b> Sub<&'b GoldenRational> for &GoldenRational {
    type Output = GoldenRational;
    fn sub(self, rhs: &'b GoldenRational) -> GoldenRational {
        GoldenRational { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl<'b> Mul<&'b GoldenRational> for &GoldenRational {
    type Output = GoldenRational;
    fn mul(self, rhs: &'b GoldenRational) -> GoldenRational {
        // (a1 + b1√5)(a2 + b2√5) = (a1a2 + 5b1b2) + (a1b2 + a2b1)√5
        GoldenRational {
            a: &self.a * &rhs.a + five() * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &rhs.a * &self.b,
        }
    }
}

/// Panics on division by zero, like `Ratio`; use
/// [`GoldenRational::checked_div`] for a fallible version.
impl<'b> Div<&'b GoldenRational> for &GoldenRational {
    type Output = GoldenRational;
    fn div(self, rhs: &'b GoldenRational) -> GoldenRational {
        self.checked_div(rhs).expect("division by zero in Q(sqrt5)")
    }
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for GoldenRational {
    type Output = GoldenRational;
    fn neg(self) -> GoldenRational {
        GoldenRational { a: -self.a, b: -self.b }
    }
}

impl Neg for &GoldenRational {
    type Output = GoldenRational;
    fn neg(self) -> GoldenRational {
        GoldenRational { a: -self.a.clone(), b: -self.b.clone() }
    }
}

/// Canonical text form `p/q + r/s*sqrt5`: lowest terms, sign carried on the
/// numerator, denominators always written.
impl fmt::Display for GoldenRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}/{} + {}/{}*sqrt5",
            self.a.numer(),
            self.a.denom(),
            self.b.numer(),
            self.b.denom()
        )
    }
}

/// Accepts the canonical `p/q + r/s*sqrt5` form or a bare rational (`7/3`, `-2`).
impl FromStr for GoldenRational {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || FieldError::Parse(String::from(s));
        let parse_rat = |t: &str| -> Result<Rational, FieldError> {
            let r = Rational::from_str(t.trim()).map_err(|_| err())?;
            Ok(r)
        };
        let t = s.trim();
        match t.split_once(" + ") {
            Some((a, rest)) => {
                let b = rest.strip_suffix("*sqrt5").ok_or_else(err)?;
                Ok(Self::new(parse_rat(a)?, parse_rat(b)?))
            }
            None => Ok(Self::from_rational(parse_rat(t)?)),
        }
    }
}
