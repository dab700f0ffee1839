//! Exact coefficient fields: a prime field F_p and arbitrary-precision rationals.
//!
//! Fields are passed around as explicit objects so that the modulus of a prime
//! field stays attached to the values it governs. All arithmetic is exact;
//! nothing in this crate ever rounds.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default modulus for the prime-field backend.
pub const DEFAULT_PRIME: u64 = 32003;

/// Runtime selector for the coefficient field of a computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSpec {
    Fp(u64),
    Rational,
}

impl FieldSpec {
    /// Parses `"fp:32003"` or `"rational"`.
    pub fn parse(s: &str) -> Result<FieldSpec> {
        let s = s.trim();
        if s == "rational" {
            return Ok(FieldSpec::Rational);
        }
        if let Some(rest) = s.strip_prefix("fp:") {
            let p: u64 = rest
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad field spec `{s}`")))?;
            return Ok(FieldSpec::Fp(p));
        }
        Err(Error::InvalidInput(format!(
            "bad field spec `{s}` (expected `fp:<prime>` or `rational`)"
        )))
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::Fp(DEFAULT_PRIME)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Fp(p) => write!(f, "fp:{p}"),
            FieldSpec::Rational => write!(f, "rational"),
        }
    }
}

/// An exact field of scalars.
pub trait Field: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse. Panics on zero; callers guard.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    fn fmt_elem(&self, a: &Self::Elem) -> String;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }

    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem> {
        let d = self.from_bigint(den);
        if self.is_zero(&d) {
            return Err(Error::InvalidInput(
                "denominator is zero in the active field".into(),
            ));
        }
        Ok(self.div(&self.from_bigint(num), &d))
    }

    /// Exact small-integer value of `a`, when it has one. Used to read off
    /// lengths and Euler characteristics, which are always integers.
    fn to_i64(&self, a: &Self::Elem) -> Option<i64>;
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// The field F_p for a prime p < 2^31. Elements are canonical residues in `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
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

impl Field for PrimeField {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Fp(self.p)
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        self.pow(*a, self.p - 2)
    }

    fn from_i64(&self, n: i64) -> u64 {
        let p = self.p as i64;
        (n.rem_euclid(p)) as u64
    }

    fn from_bigint(&self, n: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        let r = ((n % &p) + &p) % &p;
        r.to_u64().expect("residue fits u64")
    }

    fn fmt_elem(&self, a: &u64) -> String {
        // symmetric lift: small negatives print with a sign
        if *a > self.p / 2 {
            format!("-{}", self.p - a)
        } else {
            format!("{a}")
        }
    }

    fn to_i64(&self, a: &u64) -> Option<i64> {
        // symmetric lift
        if *a > self.p / 2 {
            Some(*a as i64 - self.p as i64)
        } else {
            Some(*a as i64)
        }
    }
}

/// The rational numbers with arbitrary-precision arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rational
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }

    fn fmt_elem(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            format!("{}", a.numer())
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    fn to_i64(&self, a: &BigRational) -> Option<i64> {
        if a.denom().is_one() {
            a.numer().to_i64()
        } else {
            None
        }
    }
}

/// Checks that two field objects describe the same field.
pub fn ensure_same_field<K: Field>(a: &K, b: &K) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::BackendMismatch(format!(
            "{} vs {}",
            a.spec(),
            b.spec()
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_rejects_composites() {
        assert!(PrimeField::new(32003).is_ok());
        assert!(PrimeField::new(32001).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(0).is_err());
    }

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField::new(32003).unwrap();
        for a in [1u64, 2, 7, 31999] {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
    }

    #[test]
    fn signed_reduction() {
        let f = PrimeField::new(32003).unwrap();
        assert_eq!(f.from_i64(-1), 32002);
        assert_eq!(f.to_i64(&32002), Some(-1));
        assert_eq!(f.fmt_elem(&32002), "-1");
    }

    #[test]
    fn rational_roundtrip() {
        let q = Rationals;
        let x = q.from_ratio(&BigInt::from(3), &BigInt::from(2)).unwrap();
        assert_eq!(q.fmt_elem(&x), "3/2");
        assert_eq!(q.to_i64(&x), None);
        assert_eq!(q.to_i64(&q.from_i64(-5)), Some(-5));
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!(FieldSpec::parse("fp:32003").unwrap(), FieldSpec::Fp(32003));
        assert_eq!(FieldSpec::parse("rational").unwrap(), FieldSpec::Rational);
        assert!(FieldSpec::parse("float").is_err());
    }
}
