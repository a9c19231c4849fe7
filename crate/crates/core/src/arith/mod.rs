//! Exact coefficient fields: the rationals and prime fields GF(p).
//!
//! A [`FieldDescriptor`] names the field a computation runs over and owns
//! all arithmetic; a [`FieldElement`] is a value of either field.  Keeping
//! the field as runtime data (rather than a type parameter) lets callers
//! pick the field from configuration and lets heterogeneous objects such as
//! rings and matrices carry their field with them.
//!
//! Prime moduli are restricted to primes p with 3 < p < 2^31 so that
//! products fit comfortably in 64-bit intermediates and the characteristic
//! never collides with the small factorials that apolarity differentiation
//! produces in degree at most three.

pub mod matrix;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::{Error, Result};

/// Identifies the coefficient field of a computation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum FieldDescriptor {
    /// The field of rational numbers with arbitrary-precision arithmetic.
    Rationals,
    /// The prime field GF(p) for a prime 3 < p < 2^31.
    Prime(u64),
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "QQ"),
            FieldDescriptor::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// A value in one of the supported fields.
///
/// Prime-field values are stored reduced, in `0..p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldElement {
    Rational(BigRational),
    Prime(u64),
}

impl FieldElement {
    /// True when the element is the zero of its field.
    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_zero(),
            FieldElement::Prime(v) => *v == 0,
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            FieldElement::Prime(v) => write!(f, "{v}"),
        }
    }
}

/// Deterministic Miller-Rabin primality test, exact for all u64 inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Modular inverse by the extended Euclidean algorithm.
fn mod_inv(a: u64, p: u64) -> Result<u64> {
    if a == 0 {
        return Err(Error::DivisionByZero);
    }
    Ok(mod_inv_u64(a, p))
}

/// Infallible modular inverse for internal pivot use; `a` must be nonzero
/// modulo the prime `p`.
pub(crate) fn mod_inv_u64(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, (a % p) as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "modulus must be prime and a nonzero");
    t.rem_euclid(p as i64) as u64
}

impl FieldDescriptor {
    /// Builds a prime-field descriptor, validating the modulus.
    pub fn prime(p: u64) -> Result<FieldDescriptor> {
        if p <= 3 || p >= (1 << 31) || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(FieldDescriptor::Prime(p))
    }

    /// The characteristic: 0 for the rationals, p for GF(p).
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDescriptor::Rationals => 0,
            FieldDescriptor::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> FieldElement {
        match self {
            FieldDescriptor::Rationals => FieldElement::Rational(BigRational::zero()),
            FieldDescriptor::Prime(_) => FieldElement::Prime(0),
        }
    }

    pub fn one(&self) -> FieldElement {
        match self {
            FieldDescriptor::Rationals => FieldElement::Rational(BigRational::one()),
            FieldDescriptor::Prime(_) => FieldElement::Prime(1),
        }
    }

    /// Embeds a signed integer into the field.
    pub fn from_i64(&self, n: i64) -> FieldElement {
        match self {
            FieldDescriptor::Rationals => {
                FieldElement::Rational(BigRational::from_integer(BigInt::from(n)))
            }
            FieldDescriptor::Prime(p) => {
                FieldElement::Prime(n.rem_euclid(*p as i64) as u64)
            }
        }
    }

    /// Builds the fraction n/d in the field; `d` must be invertible.
    pub fn from_fraction(&self, n: i64, d: i64) -> Result<FieldElement> {
        if d == 0 {
            return Err(Error::DivisionByZero);
        }
        match self {
            FieldDescriptor::Rationals => Ok(FieldElement::Rational(BigRational::new(
                BigInt::from(n),
                BigInt::from(d),
            ))),
            FieldDescriptor::Prime(_) => {
                let dv = self.from_i64(d);
                self.div(&self.from_i64(n), &dv)
            }
        }
    }

    fn check(&self, x: &FieldElement) -> Result<()> {
        let ok = matches!(
            (self, x),
            (FieldDescriptor::Rationals, FieldElement::Rational(_))
                | (FieldDescriptor::Prime(_), FieldElement::Prime(_))
        );
        if ok {
            Ok(())
        } else {
            Err(Error::IncompatibleFields(
                self.to_string(),
                match x {
                    FieldElement::Rational(_) => "QQ".to_string(),
                    FieldElement::Prime(_) => "GF(?)".to_string(),
                },
            ))
        }
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        debug_assert!(self.check(a).is_ok() && self.check(b).is_ok());
        match (self, a, b) {
            (FieldDescriptor::Rationals, FieldElement::Rational(x), FieldElement::Rational(y)) => {
                FieldElement::Rational(x + y)
            }
            (FieldDescriptor::Prime(p), FieldElement::Prime(x), FieldElement::Prime(y)) => {
                let s = x + y;
                FieldElement::Prime(if s >= *p { s - p } else { s })
            }
            _ => panic!("mixed-field arithmetic"),
        }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        match (self, a) {
            (FieldDescriptor::Rationals, FieldElement::Rational(x)) => {
                FieldElement::Rational(-x)
            }
            (FieldDescriptor::Prime(p), FieldElement::Prime(x)) => {
                FieldElement::Prime(if *x == 0 { 0 } else { p - x })
            }
            _ => panic!("mixed-field arithmetic"),
        }
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        match (self, a, b) {
            (FieldDescriptor::Rationals, FieldElement::Rational(x), FieldElement::Rational(y)) => {
                FieldElement::Rational(x * y)
            }
            (FieldDescriptor::Prime(p), FieldElement::Prime(x), FieldElement::Prime(y)) => {
                FieldElement::Prime(mul_mod(*x, *y, *p))
            }
            _ => panic!("mixed-field arithmetic"),
        }
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        match (self, a) {
            (FieldDescriptor::Rationals, FieldElement::Rational(x)) => {
                if x.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(FieldElement::Rational(x.recip()))
                }
            }
            (FieldDescriptor::Prime(p), FieldElement::Prime(x)) => {
                Ok(FieldElement::Prime(mod_inv(*x, *p)?))
            }
            _ => panic!("mixed-field arithmetic"),
        }
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// A canonical text form (used by printers and serializers).
    pub fn format(&self, a: &FieldElement) -> String {
        a.to_string()
    }

    /// True when `a` equals the integer `n` embedded in this field.
    pub fn eq_i64(&self, a: &FieldElement, n: i64) -> bool {
        *a == self.from_i64(n)
    }

    /// Parses an element from `n` or `n/d` integer notation.
    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let n: i64 = num
            .parse()
            .map_err(|_| Error::Parse(format!("bad coefficient `{s}`")))?;
        match den {
            None => Ok(self.from_i64(n)),
            Some(d) => {
                let d: i64 = d
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad coefficient `{s}`")))?;
                self.from_fraction(n, d)
            }
        }
    }

    /// For rationals, the sign of the numerator; prime-field elements count
    /// as nonnegative.  Used by printers to decide between `+` and `-`.
    pub fn is_negative(&self, a: &FieldElement) -> bool {
        match a {
            FieldElement::Rational(r) => r.is_negative(),
            FieldElement::Prime(_) => false,
        }
    }

    /// Absolute value (identity on prime fields).
    pub fn abs(&self, a: &FieldElement) -> FieldElement {
        match a {
            FieldElement::Rational(r) => FieldElement::Rational(r.abs()),
            FieldElement::Prime(v) => FieldElement::Prime(*v),
        }
    }
}
