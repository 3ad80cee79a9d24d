//! Ground fields and exact scalars.
//!
//! Two kinds of field are supported: the prime fields GF(p) and the
//! rationals. Scalars carry enough information to tell which field they
//! belong to, so mixing them is detected at construction time instead of
//! producing silently wrong arithmetic.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A ground field: GF(p) for a prime p, or Q.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Prime(u32),
    Rationals,
}

/// An element of GF(p) or Q.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    /// A residue in `0..modulus`.
    Residue { value: u32, modulus: u32 },
    /// A rational number, always in lowest terms with positive denominator.
    Rational(BigRational),
}

fn is_prime(n: u64) -> bool {
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

impl Field {
    /// GF(p), checking that `p` is prime.
    pub fn prime(p: u64) -> Result<Self> {
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p as u32))
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match *self {
            Field::Prime(p) => Scalar::Residue {
                value: n.rem_euclid(p as i64) as u32,
                modulus: p,
            },
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match *self {
            Field::Prime(p) => {
                let r = ((n % BigInt::from(p)) + BigInt::from(p)) % BigInt::from(p);
                Scalar::Residue {
                    value: r.to_u32().expect("residue fits"),
                    modulus: p,
                }
            }
            Field::Rationals => Scalar::Rational(BigRational::from_integer(n.clone())),
        }
    }

    /// The fraction `num/den`. Over GF(p) only integers are accepted.
    pub fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match *self {
            Field::Prime(_) => {
                if den.is_one() {
                    Ok(self.from_bigint(num))
                } else {
                    Err(Error::FieldMismatch(format!(
                        "fraction {num}/{den} is not accepted over {self}; use an integer residue"
                    )))
                }
            }
            Field::Rationals => Ok(Scalar::Rational(BigRational::new(num.clone(), den.clone()))),
        }
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        match (*self, s) {
            (Field::Prime(p), Scalar::Residue { value, modulus }) => *modulus == p && *value < p,
            (Field::Rationals, Scalar::Rational(_)) => true,
            _ => false,
        }
    }

    /// Number of elements, `None` for Q.
    pub fn size(&self) -> Option<u64> {
        match *self {
            Field::Prime(p) => Some(p as u64),
            Field::Rationals => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Field::Prime(_))
    }

    pub fn characteristic(&self) -> u32 {
        match *self {
            Field::Prime(p) => p,
            Field::Rationals => 0,
        }
    }

    /// Parse an integer or, over Q only, a fraction `a/b`.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let bad = || Error::BadParameter(format!("`{text}` is not a number"));
        let int = |t: &str| -> Result<BigInt> {
            let t = t.trim();
            let digits = t.strip_prefix('-').or_else(|| t.strip_prefix('+')).unwrap_or(t);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse().map_err(|_| bad())
        };
        match text.split_once('/') {
            None => Ok(self.from_bigint(&int(text)?)),
            Some((num, den)) => self.from_fraction(&int(num)?, &int(den)?),
        }
    }

    /// All elements in the order `0, 1, ..., p-1`. Empty for Q.
    pub fn elements(&self) -> Vec<Scalar> {
        match *self {
            Field::Prime(p) => (0..p).map(|value| Scalar::Residue { value, modulus: p }).collect(),
            Field::Rationals => Vec::new(),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(p) => write!(f, "GF({p})"),
            Field::Rationals => write!(f, "Q"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Field::Rationals);
        }
        let inner = s
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::BadField(s.to_string()))?;
        let p: u64 = inner.parse().map_err(|_| Error::BadField(s.to_string()))?;
        Field::prime(p)
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("mixed-field arithmetic between {a:?} and {b:?}")
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Residue { value, .. } => *value == 0,
            Scalar::Rational(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Residue { value, .. } => *value == 1,
            Scalar::Rational(q) => q.is_one(),
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Residue { modulus, .. } => Field::Prime(*modulus),
            Scalar::Rational(_) => Field::Rationals,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Residue { value, modulus } => {
                // extended Euclid on (value, modulus)
                let (mut r0, mut r1) = (*modulus as i64, *value as i64);
                let (mut t0, mut t1) = (0i64, 1i64);
                while r1 != 0 {
                    let q = r0 / r1;
                    (r0, r1) = (r1, r0 - q * r1);
                    (t0, t1) = (t1, t0 - q * t1);
                }
                Scalar::Residue {
                    value: t0.rem_euclid(*modulus as i64) as u32,
                    modulus: *modulus,
                }
            }
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
        })
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// The value as a rational, if this is a rational scalar.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Residue { .. } => None,
        }
    }

    pub fn residue(&self) -> Option<u32> {
        match self {
            Scalar::Residue { value, .. } => Some(*value),
            Scalar::Rational(_) => None,
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) if p == q => {
                Scalar::Residue {
                    value: ((*a as u64 + *b as u64) % *p as u64) as u32,
                    modulus: *p,
                }
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) if p == q => {
                Scalar::Residue {
                    value: ((*a as u64 + *p as u64 - *b as u64) % *p as u64) as u32,
                    modulus: *p,
                }
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) if p == q => {
                Scalar::Residue {
                    value: ((*a as u64 * *b as u64) % *p as u64) as u32,
                    modulus: *p,
                }
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: (*modulus - *value) % *modulus,
                modulus: *modulus,
            },
            Scalar::Rational(q) => Scalar::Rational(-q),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) => (p, a).cmp(&(q, b)),
            (Scalar::Rational(a), Scalar::Rational(b)) => a.cmp(b),
            (Scalar::Residue { .. }, Scalar::Rational(_)) => Ordering::Less,
            (Scalar::Rational(_), Scalar::Residue { .. }) => Ordering::Greater,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Residue { value, .. } => write!(f, "{value}"),
            Scalar::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
        }
    }
}
