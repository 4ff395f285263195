//! Coefficient fields: the rationals, or a prime field `F_p`.
//!
//! Every scalar is a [`BigRational`]. Over `F_p` the value is kept as the
//! canonical integer representative in `0..p`, so equality of normalized
//! scalars is equality of field elements in both cases.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An exact field element.
pub type Scalar = BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// `0` selects the rationals; otherwise the argument must be prime.
    pub fn from_characteristic(c: u64) -> Result<Field> {
        match c {
            0 => Ok(Field::Rational),
            p if is_prime(p) => {
                if p >= 1 << 31 {
                    return Err(Error::InvalidField(format!(
                        "characteristic {p} too large (must be below 2^31)"
                    )));
                }
                Ok(Field::Prime(p))
            }
            other => Err(Error::InvalidField(format!(
                "characteristic {other} is neither 0 nor prime"
            ))),
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    /// Whether the characteristic divides `m`, i.e. whether `m = 0` in the field.
    pub fn divides(self, m: u64) -> bool {
        match self {
            Field::Rational => m == 0,
            Field::Prime(p) => m.is_multiple_of(p),
        }
    }

    pub fn zero(self) -> Scalar {
        Scalar::zero()
    }

    pub fn one(self) -> Scalar {
        Scalar::one()
    }

    pub fn from_int(self, n: i64) -> Scalar {
        self.normalize_int(BigInt::from(n))
    }

    fn normalize_int(self, n: BigInt) -> Scalar {
        match self {
            Field::Rational => Scalar::from_integer(n),
            Field::Prime(p) => Scalar::from_integer(n.mod_floor(&BigInt::from(p))),
        }
    }

    /// Maps an arbitrary rational into the field.
    ///
    /// Fails over `F_p` when `p` divides the denominator.
    pub fn element(self, x: &Scalar) -> Result<Scalar> {
        match self {
            Field::Rational => Ok(x.clone()),
            Field::Prime(p) => {
                let pb = BigInt::from(p);
                let den = x.denom().mod_floor(&pb);
                if den.is_zero() {
                    return Err(Error::InvalidField(format!(
                        "{x} has a denominator divisible by {p}"
                    )));
                }
                let den = den.to_u64().expect("residue below p");
                let inv = BigInt::from(inv_mod(den, p));
                Ok(Scalar::from_integer((x.numer() * inv).mod_floor(&pb)))
            }
        }
    }

    pub fn add(self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rational => a + b,
            Field::Prime(_) => self.normalize_int(a.numer() + b.numer()),
        }
    }

    pub fn sub(self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rational => a - b,
            Field::Prime(_) => self.normalize_int(a.numer() - b.numer()),
        }
    }

    pub fn mul(self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rational => a * b,
            Field::Prime(_) => self.normalize_int(a.numer() * b.numer()),
        }
    }

    pub fn neg(self, a: &Scalar) -> Scalar {
        match self {
            Field::Rational => -a,
            Field::Prime(_) => self.normalize_int(-a.numer()),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        match self {
            Field::Rational => Some(a.recip()),
            Field::Prime(p) => {
                let v = a.numer().to_u64().expect("normalized residue");
                Some(Scalar::from_integer(BigInt::from(inv_mod(v, p))))
            }
        }
    }

    pub fn pow(self, a: &Scalar, e: u32) -> Scalar {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Residue of a normalized element as `u64` (prime fields only).
    pub(crate) fn residue(a: &Scalar) -> u64 {
        debug_assert!(a.is_integer() && !a.is_negative());
        a.numer().to_u64().expect("normalized residue")
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    let (g, x, _) = extended_gcd(a as i128, p as i128);
    debug_assert_eq!(g, 1);
    x.rem_euclid(p as i128) as u64
}

/// Returns `(g, x, y)` with `a·x + b·y = g = gcd(a, b)`.
pub fn extended_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, x, y) = extended_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_reduces() {
        let f = Field::Prime(5);
        assert_eq!(f.from_int(-1), f.from_int(4));
        assert_eq!(f.mul(&f.from_int(3), &f.from_int(2)), f.one());
        let half = Scalar::new(1.into(), 2.into());
        assert_eq!(f.element(&half).unwrap(), f.from_int(3));
        assert!(Field::Prime(2).element(&half).is_err());
    }

    #[test]
    fn characteristic_validation() {
        assert_eq!(Field::from_characteristic(0).unwrap(), Field::Rational);
        assert_eq!(Field::from_characteristic(7).unwrap(), Field::Prime(7));
        assert!(Field::from_characteristic(4).is_err());
        assert!(Field::from_characteristic(1).is_err());
    }

    #[test]
    fn divisibility_indicator() {
        assert!(!Field::Rational.divides(2));
        assert!(Field::Rational.divides(0));
        assert!(Field::Prime(2).divides(4));
        assert!(!Field::Prime(3).divides(4));
    }

    #[test]
    fn extended_gcd_identity() {
        for (a, b) in [(2, 3), (3, 2), (12, 18), (7, 1), (0, 5)] {
            let (g, x, y) = extended_gcd(a, b);
            assert_eq!(a * x + b * y, g);
        }
    }
}
