//! Coefficient rings: the integers, the rationals and prime fields.
//!
//! Rings are passed around as small context values (`Integers`, `Rationals`,
//! `PrimeField { p }`) and elements are plain data. Every algorithm in the
//! crate is generic over [`EuclideanRing`]; the runtime tag [`CoeffRing`]
//! selects the concrete ring at the API boundary through [`with_ring!`].

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use super::AlgebraError;

/// Runtime tag of a supported coefficient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoeffRing {
    Integers,
    Rationals,
    PrimeField(u64),
}

impl CoeffRing {
    /// Builds `Z_p`, rejecting composite or oversized moduli.
    pub fn prime_field(p: u64) -> Result<Self, AlgebraError> {
        PrimeField::new(p).map(|f| CoeffRing::PrimeField(f.modulus()))
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, CoeffRing::Integers)
    }

    /// Short form accepted by [`FromStr`]: `z`, `q`, `z2`, `zp:<p>`.
    pub fn short_name(&self) -> String {
        match self {
            CoeffRing::Integers => "z".into(),
            CoeffRing::Rationals => "q".into(),
            CoeffRing::PrimeField(2) => "z2".into(),
            CoeffRing::PrimeField(p) => format!("zp:{p}"),
        }
    }
}

impl fmt::Display for CoeffRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffRing::Integers => write!(f, "Z"),
            CoeffRing::Rationals => write!(f, "Q"),
            CoeffRing::PrimeField(p) => write!(f, "Z{p}"),
        }
    }
}

impl FromStr for CoeffRing {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_ascii_lowercase();
        match t.as_str() {
            "z" | "zz" | "int" | "integers" => Ok(CoeffRing::Integers),
            "q" | "qq" | "rationals" => Ok(CoeffRing::Rationals),
            _ => {
                let digits = t
                    .strip_prefix("zp:")
                    .or_else(|| t.strip_prefix("gf"))
                    .or_else(|| t.strip_prefix('z'))
                    .ok_or_else(|| AlgebraError::UnsupportedRing(s.to_string()))?;
                let p: u64 = digits.parse().map_err(|_| AlgebraError::UnsupportedRing(s.to_string()))?;
                CoeffRing::prime_field(p)
            }
        }
    }
}

impl Serialize for CoeffRing {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// A commutative Euclidean domain with exact arithmetic.
///
/// Fields are Euclidean domains where every nonzero element has size zero;
/// the Smith normal form code relies only on this interface.
pub trait EuclideanRing: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync;

    fn coeff_ring(&self) -> CoeffRing;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_field(&self) -> bool;
    /// Multiplicative inverse of a unit, `None` otherwise.
    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// `a = q*b + r` with `r == 0` or `r` strictly smaller than `b`. `b != 0`.
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem);
    /// Compares Euclidean sizes of two nonzero elements.
    fn size_cmp(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering;
    /// A unit `u` such that `u * a` is the preferred associate of `a`.
    fn normalizing_unit(&self, a: &Self::Elem) -> Self::Elem;
    fn format(&self, a: &Self::Elem) -> String;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn is_unit(&self, a: &Self::Elem) -> bool {
        self.inverse(a).is_some()
    }

    /// Whether `d` divides `a`.
    fn divides(&self, d: &Self::Elem, a: &Self::Elem) -> bool {
        if self.is_zero(d) {
            self.is_zero(a)
        } else {
            self.is_zero(&self.div_rem(a, d).1)
        }
    }

    /// Canonical representative of `a` modulo a normalized `d`.
    fn reduce_mod(&self, a: &Self::Elem, d: &Self::Elem) -> Self::Elem {
        self.div_rem(a, d).1
    }

    /// Adds `c * b` to `a` in place.
    fn add_mul_assign(&self, a: &mut Self::Elem, c: &Self::Elem, b: &Self::Elem) {
        *a = self.add(a, &self.mul(c, b));
    }
}

/// The integers with arbitrary precision.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl EuclideanRing for Integers {
    type Elem = BigInt;

    fn coeff_ring(&self) -> CoeffRing {
        CoeffRing::Integers
    }
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn from_i64(&self, v: i64) -> BigInt {
        BigInt::from(v)
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigInt) -> bool {
        a.is_one()
    }
    fn is_field(&self) -> bool {
        false
    }
    fn inverse(&self, a: &BigInt) -> Option<BigInt> {
        (a.abs().is_one()).then(|| a.clone())
    }
    fn div_rem(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        // Rounded division keeps |r| <= |b|/2, which tames coefficient growth.
        let (q, r) = a.div_mod_floor(b);
        let twice: BigInt = &r * 2;
        if twice.abs() > b.abs() {
            (q + 1, r - b)
        } else {
            (q, r)
        }
    }
    fn size_cmp(&self, a: &BigInt, b: &BigInt) -> Ordering {
        a.magnitude().cmp(b.magnitude())
    }
    fn normalizing_unit(&self, a: &BigInt) -> BigInt {
        if a.is_negative() {
            BigInt::from(-1)
        } else {
            BigInt::one()
        }
    }
    fn format(&self, a: &BigInt) -> String {
        a.to_string()
    }
    fn reduce_mod(&self, a: &BigInt, d: &BigInt) -> BigInt {
        a.mod_floor(&d.abs())
    }
    fn add_mul_assign(&self, a: &mut BigInt, c: &BigInt, b: &BigInt) {
        *a += c * b;
    }
}

/// The rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl EuclideanRing for Rationals {
    type Elem = BigRational;

    fn coeff_ring(&self) -> CoeffRing {
        CoeffRing::Rationals
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_field(&self) -> bool {
        true
    }
    fn inverse(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn div_rem(&self, a: &BigRational, b: &BigRational) -> (BigRational, BigRational) {
        (a / b, BigRational::zero())
    }
    fn size_cmp(&self, _a: &BigRational, _b: &BigRational) -> Ordering {
        Ordering::Equal
    }
    fn normalizing_unit(&self, a: &BigRational) -> BigRational {
        if a.is_zero() {
            BigRational::one()
        } else {
            a.recip()
        }
    }
    fn format(&self, a: &BigRational) -> String {
        a.to_string()
    }
}

/// `Z/pZ` for a prime `p < 2^32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, AlgebraError> {
        if p >= 1 << 32 || !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl EuclideanRing for PrimeField {
    type Elem = u64;

    fn coeff_ring(&self) -> CoeffRing {
        CoeffRing::PrimeField(self.p)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn is_field(&self) -> bool {
        true
    }
    fn inverse(&self, a: &u64) -> Option<u64> {
        (*a != 0).then(|| self.pow(*a, self.p - 2))
    }
    fn div_rem(&self, a: &u64, b: &u64) -> (u64, u64) {
        let inv = self.inverse(b).expect("division by zero in prime field");
        (a * inv % self.p, 0)
    }
    fn size_cmp(&self, _a: &u64, _b: &u64) -> Ordering {
        Ordering::Equal
    }
    fn normalizing_unit(&self, a: &u64) -> u64 {
        self.inverse(a).unwrap_or(1)
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
    fn add_mul_assign(&self, a: &mut u64, c: &u64, b: &u64) {
        *a = (*a + c * b) % self.p;
    }
}

/// Converts a small exact integer to `i64` when it fits.
pub fn bigint_to_i64(v: &BigInt) -> Option<i64> {
    v.to_i64()
}

/// Runs `$body` with `$r` bound to the concrete ring selected by a [`CoeffRing`].
#[macro_export]
macro_rules! with_ring {
    ($coeff:expr, |$r:ident| $body:expr) => {
        match $coeff {
            $crate::exactalg::CoeffRing::Integers => {
                let $r = $crate::exactalg::Integers;
                $body
            }
            $crate::exactalg::CoeffRing::Rationals => {
                let $r = $crate::exactalg::Rationals;
                $body
            }
            $crate::exactalg::CoeffRing::PrimeField(p) => {
                let $r = $crate::exactalg::PrimeField::from_validated(p);
                $body
            }
        }
    };
}

impl PrimeField {
    /// Skips the primality test; the modulus must come from a validated [`CoeffRing`].
    #[doc(hidden)]
    pub fn from_validated(p: u64) -> Self {
        debug_assert!(is_prime(p));
        PrimeField { p }
    }
}
