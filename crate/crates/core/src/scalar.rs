//! Exact field scalars: arbitrary-precision rationals or prime-field residues.

use alloc::string::String;
use alloc::string::ToString;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact scalar in the configured base field.
///
/// Arithmetic between scalars of different fields is a programming error
/// and panics; the kernel constructs all scalars through one [`crate::ring::Field`]
/// per computation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Scalar {
    Rat(BigRational),
    /// Residue `value` in `Z/p`, with `0 <= value < p` and `p` prime.
    Fp { value: u64, p: u64 },
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => {
                assert!(!r.is_zero(), "inverse of zero");
                Scalar::Rat(r.recip())
            }
            Scalar::Fp { value, p } => {
                assert!(*value != 0, "inverse of zero");
                Scalar::Fp {
                    value: mod_inv(*value, *p),
                    p: *p,
                }
            }
        }
    }

    pub fn render(&self) -> String {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    r.to_string()
                }
            }
            Scalar::Fp { value, .. } => value.to_string(),
        }
    }

    /// True when the scalar is a rational with |numerator| and denominator 1,
    /// i.e. a unit usable for minimalization pivots. In a field every nonzero
    /// scalar is a unit; this is just a non-zero test.
    pub fn is_unit(&self) -> bool {
        !self.is_zero()
    }
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // extended Euclid on (a, p)
    let (mut r0, mut r1) = (a as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        let r = r0 - q * r1;
        r0 = r1;
        r1 = r;
        let s = s0 - q * s1;
        s0 = s1;
        s1 = s;
    }
    assert!(r0 == 1, "not invertible mod p");
    (s0.rem_euclid(p as i128)) as u64
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp { value: a, p }, Scalar::Fp { value: b, p: q }) => {
                assert_eq!(p, q, "field mismatch");
                Scalar::Fp {
                    value: ((a as u128 + b as u128) % p as u128) as u64,
                    p,
                }
            }
            _ => panic!("field mismatch"),
        }
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        self + (-rhs)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp { value, p } => Scalar::Fp {
                value: if value == 0 { 0 } else { p - value },
                p,
            },
        }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp { value: a, p }, Scalar::Fp { value: b, p: q }) => {
                assert_eq!(p, q, "field mismatch");
                Scalar::Fp {
                    value: ((a as u128 * b as u128) % p as u128) as u64,
                    p,
                }
            }
            _ => panic!("field mismatch"),
        }
    }
}

impl Scalar {
    pub fn from_int_in(n: i64, field: &crate::ring::Field) -> Scalar {
        match field {
            crate::ring::Field::Rationals => Scalar::Rat(BigRational::from(BigInt::from(n))),
            crate::ring::Field::Prime(p) => Scalar::Fp {
                value: (n as i128).rem_euclid(*p as i128) as u64,
                p: *p,
            },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}", r)
                }
            }
            Scalar::Fp { value, .. } => write!(f, "{}", value),
        }
    }
}

/// Signum rendering helper used by polynomial displays.
pub fn is_negative(s: &Scalar) -> bool {
    match s {
        Scalar::Rat(r) => r.is_negative(),
        Scalar::Fp { .. } => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Field;

    #[test]
    fn rational_arithmetic_is_exact() {
        let f = Field::Rationals;
        let a = Scalar::from_int_in(1, &f);
        let b = Scalar::from_int_in(3, &f);
        let third = a.clone() * b.clone().inv();
        let sum = third.clone() + third.clone() + third;
        assert!(sum.is_one());
    }

    #[test]
    fn prime_field_inverse() {
        let f = Field::Prime(32003);
        for n in [1i64, 2, 7, 32002, 12345] {
            let a = Scalar::from_int_in(n, &f);
            assert!((a.clone() * a.inv()).is_one());
        }
    }

    #[test]
    fn neg_and_sub() {
        let f = Field::Prime(5);
        let a = Scalar::from_int_in(3, &f);
        assert!((a.clone() - a).is_zero());
    }
}
