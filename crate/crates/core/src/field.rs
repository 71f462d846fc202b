//! Exact scalar arithmetic over the rationals and over prime fields.
//!
//! Every computation in this crate routes its arithmetic through a
//! [`FieldSpec`], so there is no floating point anywhere and results are
//! bit-for-bit reproducible. Rationals are arbitrary precision and kept
//! reduced with a positive denominator; `F_p` elements are kept in `[0, p)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::Error;

/// The ground field of a computation: `Q` or `F_p` with `p` prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

/// An element of the ambient field. `Fp` values are normalized to `[0, p)`;
/// the modulus lives in the `FieldSpec`, not in the element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Fp(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub fn rational() -> Self {
        FieldSpec::Rational
    }

    pub fn prime(p: u64) -> Result<Self, Error> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::Input(format!("{p} is not prime")))
        }
    }

    /// 0 for the rationals, `p` for `F_p`.
    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rat(BigRational::zero()),
            FieldSpec::Prime(_) => Scalar::Fp(0),
        }
    }

    pub fn one(self) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rat(BigRational::one()),
            FieldSpec::Prime(_) => Scalar::Fp(1),
        }
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime(p) => {
                let r = n.rem_euclid(p as i64) as u64;
                Scalar::Fp(r)
            }
        }
    }

    pub fn is_zero(self, a: &Scalar) -> bool {
        match a {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp(v) => *v == 0,
        }
    }

    pub fn is_one(self, a: &Scalar) -> bool {
        match a {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp(v) => *v == 1,
        }
    }

    pub fn add(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rational, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (FieldSpec::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + y) % p),
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    pub fn sub(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rational, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x - y),
            (FieldSpec::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + p - y) % p),
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    pub fn mul(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rational, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (FieldSpec::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp(((*x as u128 * *y as u128) % p as u128) as u64)
            }
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    pub fn neg(self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Rational, Scalar::Rat(x)) => Scalar::Rat(-x),
            (FieldSpec::Prime(p), Scalar::Fp(x)) => Scalar::Fp((p - x) % p),
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    /// Multiplicative inverse. Panics on zero; callers check first.
    pub fn inv(self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Rational, Scalar::Rat(x)) => {
                assert!(!x.is_zero(), "division by zero");
                Scalar::Rat(x.recip())
            }
            (FieldSpec::Prime(p), Scalar::Fp(x)) => {
                assert!(*x != 0, "division by zero");
                Scalar::Fp(mod_pow(*x, p - 2, p))
            }
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    pub fn div(self, a: &Scalar, b: &Scalar) -> Scalar {
        let ib = self.inv(b);
        self.mul(a, &ib)
    }

    /// Parse an exact coefficient string: an integer `"n"` or a fraction
    /// `"n/d"`, optionally signed. Over `F_p` the fraction is resolved by a
    /// modular inverse.
    pub fn parse(self, s: &str) -> Result<Scalar, Error> {
        let s = s.trim();
        let bad = || Error::Input(format!("malformed coefficient {s:?}"));
        let (num_str, den_str) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let num: BigInt = num_str.parse().map_err(|_| bad())?;
        let den: BigInt = match den_str {
            Some(d) => d.parse().map_err(|_| bad())?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(bad());
        }
        match self {
            FieldSpec::Rational => Ok(Scalar::Rat(BigRational::new(num, den))),
            FieldSpec::Prime(p) => {
                let pb = BigInt::from(p);
                let n = ((num % &pb) + &pb) % &pb;
                let d = ((den % &pb) + &pb) % &pb;
                let n: u64 = n.try_into().unwrap();
                let d: u64 = d.try_into().unwrap();
                if d == 0 {
                    return Err(Error::Input(format!(
                        "coefficient {s:?} has denominator divisible by {p}"
                    )));
                }
                let a = Scalar::Fp(n);
                let b = Scalar::Fp(d);
                Ok(self.div(&a, &b))
            }
        }
    }

    /// Canonical display form (what reports print): integers without
    /// denominator, otherwise `n/d` with positive `d`.
    pub fn format(self, a: &Scalar) -> String {
        match a {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else if r.denom().is_negative() {
                    // num-rational keeps denominators positive; guard anyway
                    format!("{}/{}", -r.numer(), -r.denom())
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp(v) => v.to_string(),
        }
    }
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u64 = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Fp(v) => write!(f, "{v}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_is_reduced() {
        let f = FieldSpec::Rational;
        let a = f.parse("2/4").unwrap();
        let b = f.parse("1/2").unwrap();
        assert_eq!(a, b);
        let c = f.add(&a, &b);
        assert_eq!(f.format(&c), "1");
    }

    #[test]
    fn parse_negative_fraction() {
        let f = FieldSpec::Rational;
        let a = f.parse("-3/6").unwrap();
        assert_eq!(f.format(&a), "-1/2");
        assert_eq!(f.format(&f.neg(&a)), "1/2");
    }

    #[test]
    fn prime_field_inverse() {
        let f = FieldSpec::prime(7).unwrap();
        for v in 1..7 {
            let a = Scalar::Fp(v);
            let inv = f.inv(&a);
            assert!(f.is_one(&f.mul(&a, &inv)));
        }
    }

    #[test]
    fn prime_field_parse_fraction() {
        let f = FieldSpec::prime(5).unwrap();
        // 1/2 = 3 mod 5
        assert_eq!(f.parse("1/2").unwrap(), Scalar::Fp(3));
        assert_eq!(f.parse("-1").unwrap(), Scalar::Fp(4));
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(FieldSpec::prime(6).is_err());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(2).is_ok());
    }
}
