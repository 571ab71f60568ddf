//! Coefficient fields for homology: the rationals and prime fields.
//!
//! Fields are passed around as structure objects (the modulus of `GF(p)` is
//! runtime data), with the element type an associated type. The rationals
//! use [`num_rational::BigRational`]; prime fields use reduced `u64`
//! residues.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::Rational;

/// Which coefficient field a homological computation runs over.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<FieldSpec> {
        if is_prime(p) {
            Ok(FieldSpec::PrimeField(p))
        } else {
            Err(Error::NotPrime { p })
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => p,
        }
    }

    /// Parse the CLI spelling: `q`, `f2`, or `fp:P`.
    pub fn parse(s: &str) -> Result<FieldSpec> {
        match s {
            "q" | "Q" => Ok(FieldSpec::Rationals),
            "f2" | "F2" => Ok(FieldSpec::PrimeField(2)),
            other => {
                if let Some(p) = other.strip_prefix("fp:") {
                    let p: u64 = p
                        .parse()
                        .map_err(|_| Error::InvalidSpec(format!("bad field: {other}")))?;
                    FieldSpec::prime(p)
                } else {
                    Err(Error::InvalidSpec(format!("bad field: {other}")))
                }
            }
        }
    }

    pub fn label(self) -> String {
        match self {
            FieldSpec::Rationals => "q".to_string(),
            FieldSpec::PrimeField(2) => "f2".to_string(),
            FieldSpec::PrimeField(p) => format!("fp:{p}"),
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// A field presented as a structure object over a concrete element type.
pub trait FieldOps {
    type Elem: Clone + PartialEq;

    fn from_i64(&self, x: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
}

/// The field of rational numbers.
#[derive(Clone, Copy, Debug, Default)]
pub struct Rationals;

impl FieldOps for Rationals {
    type Elem = Rational;

    fn from_i64(&self, x: i64) -> Rational {
        Rational::from_integer(x.into())
    }

    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }

    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }

    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }

    fn div(&self, a: &Rational, b: &Rational) -> Rational {
        a / b
    }
}

/// The prime field `GF(p)`, elements stored as reduced residues.
#[derive(Clone, Copy, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<PrimeField> {
        if !is_prime(p) {
            return Err(Error::NotPrime { p });
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn inv(&self, a: u64) -> u64 {
        // Fermat: a^(p-2) mod p.
        debug_assert!(a % self.p != 0);
        let mut base = a % self.p;
        let mut exp = self.p - 2;
        let mut acc: u64 = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mulmod(acc, base, self.p);
            }
            base = mulmod(base, base, self.p);
            exp >>= 1;
        }
        acc
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

impl FieldOps for PrimeField {
    type Elem = u64;

    fn from_i64(&self, x: i64) -> u64 {
        let p = self.p as i64;
        (((x % p) + p) % p) as u64
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mulmod(*a, *b, self.p)
    }

    fn div(&self, a: &u64, b: &u64) -> u64 {
        mulmod(*a, self.inv(*b), self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(101));
        assert!(!is_prime(0));
        assert!(!is_prime(1));
        assert!(!is_prime(91)); // 7 * 13
        assert_eq!(FieldSpec::prime(9), Err(Error::NotPrime { p: 9 }));
    }

    #[test]
    fn gf7_arithmetic() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.from_i64(-1), 6);
        assert_eq!(f.mul(&3, &5), 1);
        assert_eq!(f.div(&1, &3), 5);
        assert_eq!(f.sub(&2, &5), 4);
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!(FieldSpec::parse("q").unwrap(), FieldSpec::Rationals);
        assert_eq!(FieldSpec::parse("f2").unwrap(), FieldSpec::PrimeField(2));
        assert_eq!(FieldSpec::parse("fp:5").unwrap(), FieldSpec::PrimeField(5));
        assert!(FieldSpec::parse("fp:6").is_err());
        assert!(FieldSpec::parse("r64").is_err());
    }
}
