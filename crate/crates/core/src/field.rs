//! Exact coefficient fields: a prime field with runtime modulus for fast
//! searches and arbitrary-precision rationals for final confirmation.

use num::rational::BigRational;
use num::{BigInt, One, Signed, Zero};
use std::fmt;

/// Default search prime. Large enough that the graded bases in play (all
/// with unit leading coefficients) never divide by zero, small enough that
/// products fit comfortably in u64.
pub const DEFAULT_PRIME: u64 = 32003;

pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero(&self) -> Self;
    fn one(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Self;
    fn name(&self) -> String;
}

/// Element of GF(p) with the modulus carried alongside the value.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct Fp {
    v: u64,
    p: u64,
}

impl Fp {
    pub fn new(v: i64, p: u64) -> Self {
        let r = v.rem_euclid(p as i64) as u64;
        Fp { v: r, p }
    }

    pub fn value(&self) -> u64 {
        self.v
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Representative in the symmetric range (-p/2, p/2], used when lifting
    /// a GF(p) witness to the integers for rational confirmation.
    pub fn symmetric_lift(&self) -> i64 {
        if self.v > self.p / 2 {
            self.v as i64 - self.p as i64
        } else {
            self.v as i64
        }
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Field for Fp {
    fn zero(&self) -> Self {
        Fp { v: 0, p: self.p }
    }

    fn one(&self) -> Self {
        Fp { v: 1, p: self.p }
    }

    fn is_zero(&self) -> bool {
        self.v == 0
    }

    fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let mut s = self.v + other.v;
        if s >= self.p {
            s -= self.p;
        }
        Fp { v: s, p: self.p }
    }

    fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let s = if self.v >= other.v {
            self.v - other.v
        } else {
            self.v + self.p - other.v
        };
        Fp { v: s, p: self.p }
    }

    fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        Fp {
            v: (self.v as u128 * other.v as u128 % self.p as u128) as u64,
            p: self.p,
        }
    }

    fn neg(&self) -> Self {
        Fp {
            v: if self.v == 0 { 0 } else { self.p - self.v },
            p: self.p,
        }
    }

    fn inv(&self) -> Self {
        assert!(self.v != 0, "inverse of zero in GF({})", self.p);
        // extended Euclid
        let (mut a, mut b) = (self.v as i128, self.p as i128);
        let (mut x0, mut x1) = (1i128, 0i128);
        while b != 0 {
            let q = a / b;
            (a, b) = (b, a - q * b);
            (x0, x1) = (x1, x0 - q * x1);
        }
        debug_assert_eq!(a, 1);
        Fp::new(x0 as i64, self.p)
    }

    fn name(&self) -> String {
        format!("fp:{}", self.p)
    }
}

/// Arbitrary-precision rational coefficient.
#[derive(Clone, PartialEq, Eq)]
pub struct Rat(pub BigRational);

impl Rat {
    pub fn from_i64(v: i64) -> Self {
        Rat(BigRational::from(BigInt::from(v)))
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Field for Rat {
    fn zero(&self) -> Self {
        Rat(BigRational::zero())
    }

    fn one(&self) -> Self {
        Rat(BigRational::one())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn add(&self, other: &Self) -> Self {
        Rat(&self.0 + &other.0)
    }

    fn sub(&self, other: &Self) -> Self {
        Rat(&self.0 - &other.0)
    }

    fn mul(&self, other: &Self) -> Self {
        Rat(&self.0 * &other.0)
    }

    fn neg(&self) -> Self {
        Rat(-self.0.clone())
    }

    fn inv(&self) -> Self {
        assert!(!self.0.is_zero(), "inverse of zero rational");
        Rat(self.0.recip())
    }

    fn name(&self) -> String {
        "qq".to_string()
    }
}

/// A field tag usable where no element is at hand to call methods on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSpec {
    Fp(u64),
    Qq,
}

impl FieldSpec {
    pub fn parse(s: &str) -> Option<FieldSpec> {
        if s == "qq" {
            return Some(FieldSpec::Qq);
        }
        let p = s.strip_prefix("fp:")?.parse().ok()?;
        Some(FieldSpec::Fp(p))
    }

    pub fn name(&self) -> String {
        match self {
            FieldSpec::Fp(p) => format!("fp:{p}"),
            FieldSpec::Qq => "qq".to_string(),
        }
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::Fp(DEFAULT_PRIME)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_inverse() {
        for v in 1..200u64 {
            let x = Fp::new(v as i64, DEFAULT_PRIME);
            assert_eq!(x.mul(&x.inv()).value(), 1);
        }
    }

    #[test]
    fn fp_symmetric_lift_round_trip() {
        for v in [0i64, 1, -1, 16001, 16002, -16001, 31999] {
            let x = Fp::new(v, DEFAULT_PRIME);
            assert_eq!(Fp::new(x.symmetric_lift(), DEFAULT_PRIME), x);
        }
    }

    #[test]
    fn field_spec_parse() {
        assert_eq!(FieldSpec::parse("qq"), Some(FieldSpec::Qq));
        assert_eq!(FieldSpec::parse("fp:7"), Some(FieldSpec::Fp(7)));
        assert_eq!(FieldSpec::parse("gf:7"), None);
    }
}
