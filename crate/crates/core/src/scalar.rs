//! Exact coefficients over ℤ, ℚ and GF(2).
//!
//! Every [`Scalar`] carries its ring implicitly through its variant. Mixing
//! rings is a logic error: the `checked_*` methods report it as
//! [`Error::RingMismatch`], while the operator impls (used inside the engine,
//! where a whole algebra shares one ring) panic on it.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use alloc::string::String;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The coefficient ring shared by all elements of one algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    Integers,
    Rationals,
    GF2,
}

impl Ring {
    pub fn is_field(self) -> bool {
        !matches!(self, Ring::Integers)
    }

    /// Characteristic two: every Koszul sign collapses to `1`.
    pub fn is_char_two(self) -> bool {
        matches!(self, Ring::GF2)
    }

    pub fn short_name(self) -> &'static str {
        match self {
            Ring::Integers => "Z",
            Ring::Rationals => "Q",
            Ring::GF2 => "F2",
        }
    }

    pub fn from_short_name(name: &str) -> Option<Ring> {
        match name {
            "Z" => Some(Ring::Integers),
            "Q" => Some(Ring::Rationals),
            "F2" => Some(Ring::GF2),
            _ => None,
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

/// An exact ring element. Rationals are kept reduced with a positive
/// denominator (guaranteed by [`BigRational`]).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Int(BigInt),
    Rat(BigRational),
    F2(bool),
}

impl Scalar {
    pub fn zero(ring: Ring) -> Scalar {
        Scalar::from_i64(ring, 0)
    }

    pub fn one(ring: Ring) -> Scalar {
        Scalar::from_i64(ring, 1)
    }

    pub fn from_i64(ring: Ring, n: i64) -> Scalar {
        match ring {
            Ring::Integers => Scalar::Int(BigInt::from(n)),
            Ring::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            Ring::GF2 => Scalar::F2(n.rem_euclid(2) == 1),
        }
    }

    pub fn from_bigint(ring: Ring, n: BigInt) -> Scalar {
        match ring {
            Ring::Integers => Scalar::Int(n),
            Ring::Rationals => Scalar::Rat(BigRational::from_integer(n)),
            Ring::GF2 => Scalar::F2(n.is_odd()),
        }
    }

    /// `num/den` over ℚ; fails on a zero denominator.
    pub fn rational(num: BigInt, den: BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::NonInvertible);
        }
        Ok(Scalar::Rat(BigRational::new(num, den)))
    }

    /// `(-1)^odd` in `ring`.
    pub fn sign(ring: Ring, negative: bool) -> Scalar {
        Scalar::from_i64(ring, if negative { -1 } else { 1 })
    }

    pub fn ring(&self) -> Ring {
        match self {
            Scalar::Int(_) => Ring::Integers,
            Scalar::Rat(_) => Ring::Rationals,
            Scalar::F2(_) => Ring::GF2,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Int(n) => n.is_zero(),
            Scalar::Rat(q) => q.is_zero(),
            Scalar::F2(b) => !*b,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Int(n) => n.is_one(),
            Scalar::Rat(q) => q.is_one(),
            Scalar::F2(b) => *b,
        }
    }

    /// Strictly below zero (never true over GF(2)).
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Int(n) => n.is_negative(),
            Scalar::Rat(q) => q.is_negative(),
            Scalar::F2(_) => false,
        }
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Int(n) => Scalar::Int(n.abs()),
            Scalar::Rat(q) => Scalar::Rat(q.abs()),
            Scalar::F2(b) => Scalar::F2(*b),
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        Ok(match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a + b),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::F2(a), Scalar::F2(b)) => Scalar::F2(a ^ b),
            _ => return Err(self.mismatch(other)),
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        Ok(match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a * b),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::F2(a), Scalar::F2(b)) => Scalar::F2(a & b),
            _ => return Err(self.mismatch(other)),
        })
    }

    /// Multiplicative inverse; only units of the ring qualify (`±1` over ℤ).
    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Int(n) if n.abs().is_one() => Ok(Scalar::Int(n.clone())),
            Scalar::Int(_) => Err(Error::NonInvertible),
            Scalar::Rat(q) if q.is_zero() => Err(Error::NonInvertible),
            Scalar::Rat(q) => Ok(Scalar::Rat(q.recip())),
            Scalar::F2(true) => Ok(Scalar::F2(true)),
            Scalar::F2(false) => Err(Error::NonInvertible),
        }
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        let mut acc = Scalar::one(self.ring());
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Reduce an integer into `[0, modulus)`. Other rings are returned unchanged.
    pub fn reduce_mod(&self, modulus: &BigInt) -> Scalar {
        match self {
            Scalar::Int(n) => Scalar::Int(n.mod_floor(modulus)),
            other => other.clone(),
        }
    }

    /// Integer value, when the scalar is an integer (or an integral rational).
    pub fn to_bigint(&self) -> Option<BigInt> {
        match self {
            Scalar::Int(n) => Some(n.clone()),
            Scalar::Rat(q) if q.is_integer() => Some(q.to_integer()),
            Scalar::Rat(_) => None,
            Scalar::F2(b) => Some(BigInt::from(*b as u8)),
        }
    }

    /// Re-express in another ring: ℤ → ℚ is an inclusion, ℤ → GF(2) reduces.
    /// Non-integral rationals have no image in ℤ or GF(2).
    pub fn change_ring(&self, ring: Ring) -> Result<Scalar> {
        if self.ring() == ring {
            return Ok(self.clone());
        }
        match self.to_bigint() {
            Some(n) => Ok(Scalar::from_bigint(ring, n)),
            None => Err(Error::RingMismatch { left: self.ring(), right: ring }),
        }
    }

    /// Parse `"-3"`, `"5/6"` (ℚ only) or `"0"/"1"` according to `ring`.
    pub fn parse(ring: Ring, text: &str) -> Result<Scalar> {
        let bad = || Error::InvalidScalar(String::from(text));
        let text = text.trim();
        if let Some((num, den)) = text.split_once('/') {
            if ring != Ring::Rationals {
                return Err(bad());
            }
            let num: BigInt = num.trim().parse().map_err(|_| bad())?;
            let den: BigInt = den.trim().parse().map_err(|_| bad())?;
            return Scalar::rational(num, den).map_err(|_| bad());
        }
        let n: BigInt = text.parse().map_err(|_| bad())?;
        Ok(Scalar::from_bigint(ring, n))
    }

    fn mismatch(&self, other: &Scalar) -> Error {
        Error::RingMismatch { left: self.ring(), right: other.ring() }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Int(n) => write!(f, "{}", n),
            Scalar::Rat(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Rat(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::F2(b) => write!(f, "{}", *b as u8),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => a.partial_cmp(b),
            (Scalar::Rat(a), Scalar::Rat(b)) => a.partial_cmp(b),
            (Scalar::F2(a), Scalar::F2(b)) => a.partial_cmp(b),
            _ => None,
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        self.checked_add(rhs).expect("scalar ring mismatch")
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self.checked_sub(rhs).expect("scalar ring mismatch")
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        self.checked_mul(rhs).expect("scalar ring mismatch")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Int(n) => Scalar::Int(-n),
            Scalar::Rat(q) => Scalar::Rat(-q),
            Scalar::F2(b) => Scalar::F2(*b),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::rational(BigInt::from(n), BigInt::from(d)).unwrap()
    }

    #[test]
    fn rational_sum_is_reduced() {
        assert_eq!(q(1, 2).checked_add(&q(1, 3)).unwrap(), q(5, 6));
        assert_eq!(q(2, -4), q(-1, 2));
        assert_eq!(q(2, -4).to_string(), "-1/2");
    }

    #[test]
    fn characteristic_two() {
        let one = Scalar::one(Ring::GF2);
        assert!(one.checked_add(&one).unwrap().is_zero());
        assert!(one.checked_mul(&one).unwrap().is_one());
        assert_eq!(Scalar::from_i64(Ring::GF2, -3), one);
    }

    #[test]
    fn additive_identity() {
        let a = q(7, 3);
        assert_eq!(a.checked_add(&Scalar::zero(Ring::Rationals)).unwrap(), a);
    }

    #[test]
    fn products() {
        let m1 = Scalar::from_i64(Ring::Integers, -1);
        assert!(m1.checked_mul(&m1).unwrap().is_one());
        assert!(Scalar::from_i64(Ring::Rationals, 2).checked_mul(&q(1, 2)).unwrap().is_one());
    }

    #[test]
    fn inverses() {
        assert_eq!(q(1, 2).inv().unwrap(), Scalar::from_i64(Ring::Rationals, 2));
        assert!(Scalar::one(Ring::Integers).inv().unwrap().is_one());
        assert_eq!(Scalar::from_i64(Ring::Integers, 2).inv(), Err(Error::NonInvertible));
        assert_eq!(Scalar::zero(Ring::Rationals).inv(), Err(Error::NonInvertible));
        assert_eq!(Scalar::zero(Ring::GF2).inv(), Err(Error::NonInvertible));
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = Scalar::one(Ring::Integers);
        let b = Scalar::one(Ring::Rationals);
        assert!(matches!(a.checked_add(&b), Err(Error::RingMismatch { .. })));
        assert!(matches!(a.checked_mul(&b), Err(Error::RingMismatch { .. })));
    }

    #[test]
    fn reduce_mod_lands_in_range() {
        let m = BigInt::from(2);
        assert_eq!(Scalar::from_i64(Ring::Integers, 3).reduce_mod(&m), Scalar::from_i64(Ring::Integers, 1));
        assert_eq!(Scalar::from_i64(Ring::Integers, -1).reduce_mod(&m), Scalar::from_i64(Ring::Integers, 1));
        assert!(Scalar::from_i64(Ring::Integers, 2).reduce_mod(&m).is_zero());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(Scalar::parse(Ring::Rationals, "10/4").unwrap(), q(5, 2));
        assert_eq!(Scalar::parse(Ring::Integers, "-12").unwrap().to_string(), "-12");
        assert!(Scalar::parse(Ring::Integers, "1/2").is_err());
        assert!(Scalar::parse(Ring::Rationals, "1/0").is_err());
        assert_eq!(Scalar::parse(Ring::GF2, "3").unwrap(), Scalar::one(Ring::GF2));
    }

    #[test]
    fn no_overflow_at_large_powers() {
        let two = Scalar::from_i64(Ring::Integers, 2);
        let big = two.pow(200);
        assert_eq!(big.to_string().len(), 61);
    }

    fn any_scalar(ring: Ring) -> impl Strategy<Value = Scalar> {
        (-50i64..50, 1i64..12).prop_map(move |(n, d)| match ring {
            Ring::Rationals => q(n, d),
            _ => Scalar::from_i64(ring, n),
        })
    }

    fn ring_axioms(a: Scalar, b: Scalar, c: Scalar) -> core::result::Result<(), TestCaseError> {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        let same = a.clone();
        prop_assert!((&a - &same).is_zero());
        Ok(())
    }

    proptest! {
        #[test]
        fn integer_ring_axioms(a in any_scalar(Ring::Integers), b in any_scalar(Ring::Integers), c in any_scalar(Ring::Integers)) {
            ring_axioms(a, b, c)?;
        }

        #[test]
        fn rational_ring_axioms(a in any_scalar(Ring::Rationals), b in any_scalar(Ring::Rationals), c in any_scalar(Ring::Rationals)) {
            ring_axioms(a, b, c)?;
        }

        #[test]
        fn gf2_ring_axioms(a in any_scalar(Ring::GF2), b in any_scalar(Ring::GF2), c in any_scalar(Ring::GF2)) {
            ring_axioms(a, b, c)?;
        }
    }
}
