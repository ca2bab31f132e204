//! Exact coefficient fields: arbitrary-precision rationals and prime fields.
//!
//! A [`FieldSpec`] names the field a computation runs over; a [`Scalar`] is
//! one of its elements. Rationals are kept in lowest terms with a positive
//! denominator, prime-field elements as least non-negative residues, so that
//! structural equality is exact equality.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The coefficient field of a computation: the rationals, or Z/p for a prime p.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FieldSpec {
    repr: Repr,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Repr {
    Rationals,
    Prime(u64),
}

/// An element of a [`FieldSpec`].
///
/// All arithmetic goes through the owning `FieldSpec`; a `Scalar` on its own
/// does not know its modulus.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Rat(BigRational),
    Mod(u64),
}

impl FieldSpec {
    /// The field of rational numbers.
    pub fn rationals() -> Self {
        FieldSpec {
            repr: Repr::Rationals,
        }
    }

    /// The prime field Z/p. Rejects non-prime moduli.
    pub fn prime_field(p: u64) -> Result<Self> {
        if is_prime_u64(p) {
            Ok(FieldSpec {
                repr: Repr::Prime(p),
            })
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn is_rationals(&self) -> bool {
        matches!(self.repr, Repr::Rationals)
    }

    /// The modulus for a prime field, `None` for the rationals.
    pub fn modulus(&self) -> Option<u64> {
        match self.repr {
            Repr::Rationals => None,
            Repr::Prime(p) => Some(p),
        }
    }

    pub fn zero(&self) -> Scalar {
        match self.repr {
            Repr::Rationals => Scalar::Rat(BigRational::zero()),
            Repr::Prime(_) => Scalar::Mod(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self.repr {
            Repr::Rationals => Scalar::Rat(BigRational::one()),
            Repr::Prime(_) => Scalar::Mod(1),
        }
    }

    /// Embed a signed integer.
    pub fn integer(&self, k: i64) -> Scalar {
        match self.repr {
            Repr::Rationals => Scalar::Rat(BigRational::from(BigInt::from(k))),
            Repr::Prime(p) => Scalar::Mod((k as i128).rem_euclid(p as i128) as u64),
        }
    }

    /// Embed a ratio of signed integers. In a prime field the denominator is
    /// inverted mod p; a denominator divisible by p (or zero) is rejected.
    pub fn ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        let n = self.integer(num);
        let d = self.integer(den);
        self.div(&n, &d)
    }

    /// Parse `"a"` or `"a/b"` with optional leading sign.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let bad = |msg: &str| Error::InvalidScalar(format!("`{s}`: {msg}"));
        let (num_str, den_str) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let num = BigInt::from_str(num_str.trim()).map_err(|_| bad("not an integer"))?;
        let den = match den_str {
            Some(d) => BigInt::from_str(d.trim()).map_err(|_| bad("not an integer"))?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self.repr {
            Repr::Rationals => Ok(Scalar::Rat(BigRational::new(num, den))),
            Repr::Prime(p) => {
                let n = self.bigint_residue(&num, p);
                let d = self.bigint_residue(&den, p);
                self.div(&Scalar::Mod(n), &Scalar::Mod(d))
            }
        }
    }

    fn bigint_residue(&self, n: &BigInt, p: u64) -> u64 {
        let m = BigInt::from(p);
        let r = ((n % &m) + &m) % &m;
        let (_, digits) = r.to_u64_digits();
        digits.first().copied().unwrap_or(0)
    }

    /// Check that a scalar belongs to this field and is in canonical form.
    pub fn validate(&self, a: &Scalar) -> Result<()> {
        match (self.repr, a) {
            (Repr::Rationals, Scalar::Rat(_)) => Ok(()),
            (Repr::Prime(p), Scalar::Mod(r)) => {
                if *r < p {
                    Ok(())
                } else {
                    Err(Error::InvalidScalar(format!("residue {r} not below modulus {p}")))
                }
            }
            _ => Err(Error::InvalidScalar(
                "scalar kind does not match the field".into(),
            )),
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod(r) => *r == 0,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self.repr, a, b) {
            (Repr::Rationals, Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Repr::Prime(p), Scalar::Mod(a), Scalar::Mod(b)) => {
                Scalar::Mod(((*a as u128 + *b as u128) % p as u128) as u64)
            }
            _ => panic!("scalar kind does not match the field"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self.repr, a) {
            (Repr::Rationals, Scalar::Rat(a)) => Scalar::Rat(-a),
            (Repr::Prime(p), Scalar::Mod(a)) => Scalar::Mod(if *a == 0 { 0 } else { p - *a }),
            _ => panic!("scalar kind does not match the field"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self.repr, a, b) {
            (Repr::Rationals, Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Repr::Prime(p), Scalar::Mod(a), Scalar::Mod(b)) => {
                Scalar::Mod(((*a as u128 * *b as u128) % p as u128) as u64)
            }
            _ => panic!("scalar kind does not match the field"),
        }
    }

    /// Multiplicative inverse. Fails on zero.
    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        match (self.repr, a) {
            (Repr::Rationals, Scalar::Rat(a)) => Ok(Scalar::Rat(a.recip())),
            (Repr::Prime(p), Scalar::Mod(a)) => Ok(Scalar::Mod(mod_pow(*a, p - 2, p))),
            _ => panic!("scalar kind does not match the field"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Scalar, k: u32) -> Scalar {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            // BigRational prints `a` when the denominator is 1, else `a/b`.
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Mod(r) => write!(f, "{r}"),
        }
    }
}

impl Scalar {
    /// Sign test for display purposes; prime-field residues count as non-negative.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_negative(),
            Scalar::Mod(_) => false,
        }
    }

    /// Absolute value for display purposes.
    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(r.abs()),
            Scalar::Mod(r) => Scalar::Mod(*r),
        }
    }

    /// True for the canonical 1 of either field.
    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod(r) => *r == 1,
        }
    }
}

fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let m = modulus as u128;
    let mut acc: u128 = 1;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Deterministic Miller-Rabin for u64.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(FieldSpec::prime_field(2).is_ok());
        assert!(FieldSpec::prime_field(32003).is_ok());
        assert!(FieldSpec::prime_field(1).is_err());
        assert!(FieldSpec::prime_field(32001).is_err());
        assert_eq!(FieldSpec::prime_field(0), Err(Error::NotPrime(0)));
    }

    #[test]
    fn rational_canonical_form() {
        let q = FieldSpec::rationals();
        let a = q.ratio(2, -4).unwrap();
        assert_eq!(a, q.ratio(-1, 2).unwrap());
        assert_eq!(a.to_string(), "-1/2");
        assert_eq!(q.ratio(6, 3).unwrap().to_string(), "2");
    }

    #[test]
    fn prime_field_inverse() {
        let f = FieldSpec::prime_field(32003).unwrap();
        let a = f.integer(-5);
        assert_eq!(a, Scalar::Mod(31998));
        let inv = f.inv(&a).unwrap();
        assert!(f.mul(&a, &inv).is_one());
        assert_eq!(f.inv(&f.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn parse_scalar_forms() {
        let q = FieldSpec::rationals();
        assert_eq!(q.parse_scalar("3/2").unwrap().to_string(), "3/2");
        assert_eq!(q.parse_scalar("-7").unwrap().to_string(), "-7");
        assert_eq!(q.parse_scalar("1/0"), Err(Error::DivisionByZero));
        let f = FieldSpec::prime_field(7).unwrap();
        assert_eq!(f.parse_scalar("10").unwrap(), Scalar::Mod(3));
        assert_eq!(f.parse_scalar("1/2").unwrap(), Scalar::Mod(4));
    }

    #[test]
    fn field_axioms_spot_check() {
        for field in [FieldSpec::rationals(), FieldSpec::prime_field(13).unwrap()] {
            let xs: Vec<Scalar> = (-6..6).map(|k| field.integer(k)).collect();
            for a in &xs {
                for b in &xs {
                    assert_eq!(field.add(a, b), field.add(b, a));
                    assert_eq!(field.mul(a, b), field.mul(b, a));
                    for c in &xs {
                        assert_eq!(
                            field.mul(a, &field.add(b, c)),
                            field.add(&field.mul(a, b), &field.mul(a, c))
                        );
                        assert_eq!(
                            field.add(&field.add(a, b), c),
                            field.add(a, &field.add(b, c))
                        );
                    }
                    if !field.is_zero(b) {
                        let q = field.div(a, b).unwrap();
                        assert_eq!(field.mul(&q, b), *a);
                    }
                }
            }
        }
    }
}
