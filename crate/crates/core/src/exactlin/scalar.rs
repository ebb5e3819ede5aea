//! Exact scalars: arbitrary-precision rationals and prime-field residues.

// F_p operators reduce with `%`.
#![allow(clippy::suspicious_arithmetic_impl)]

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::Error;

/// Largest modulus accepted for prime fields. Residues stay below 2^31 so a
/// product of two of them always fits in a `u64`.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

/// The field every scalar of one algebra instance lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// Builds `F_p`, rejecting composite or out-of-range moduli.
    pub fn prime(p: u64) -> Result<Field, Error> {
        if !is_prime(p) {
            return Err(Error::Field(format!("{p} is not a prime")));
        }
        if p > MAX_PRIME {
            return Err(Error::Field(format!("prime {p} exceeds the supported bound {MAX_PRIME}")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::zero()),
            Field::Prime(p) => Scalar::Fp { value: 0, modulus: p },
        }
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    pub fn int(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Fp { value: n.rem_euclid(p as i64) as u64, modulus: p },
        }
    }

    /// Maps an exact rational into this field.
    pub fn from_rational(self, q: &BigRational) -> Result<Scalar, Error> {
        match self {
            Field::Rational => Ok(Scalar::Q(q.clone())),
            Field::Prime(p) => {
                let modulus = BigInt::from(p);
                let num = q.numer().mod_floor(&modulus).to_u64().unwrap_or(0);
                let den = q.denom().mod_floor(&modulus).to_u64().unwrap_or(0);
                if den == 0 {
                    return Err(Error::Field(format!("denominator of {q} vanishes modulo {p}")));
                }
                Ok(Scalar::Fp { value: num * mod_inverse(den, p) % p, modulus: p })
            }
        }
    }

    /// Parses `"num"` or `"num/den"`; the fraction must be in lowest terms.
    pub fn parse(self, text: &str) -> Result<Scalar, Error> {
        let q = parse_fraction(text)?;
        self.from_rational(&q)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "rational"),
            Field::Prime(p) => write!(f, "prime {p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `rational`, `Q`, `prime <p>` and `F<p>`.
    fn from_str(s: &str) -> Result<Field, Error> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("rational") || s == "Q" {
            return Ok(Field::Rational);
        }
        let digits = s
            .strip_prefix("prime")
            .or_else(|| s.strip_prefix("F"))
            .map(str::trim)
            .ok_or_else(|| Error::Field(format!("unknown field descriptor `{s}`")))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::Field(format!("bad prime in field descriptor `{s}`")))?;
        Field::prime(p)
    }
}

/// Parses an exact fraction `"num/den"` (or an integer). Zero denominators and
/// fractions not in lowest terms are rejected.
pub fn parse_fraction(text: &str) -> Result<BigRational, Error> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| Error::Field(format!("malformed fraction `{text}`")))?;
    let den: BigInt = den.parse().map_err(|_| Error::Field(format!("malformed fraction `{text}`")))?;
    if den.is_zero() {
        return Err(Error::Field(format!("zero denominator in `{text}`")));
    }
    if den.is_negative() {
        return Err(Error::Field(format!("negative denominator in `{text}`")));
    }
    if !num.gcd(&den).is_one() && !(num.is_zero() && den.is_one()) {
        return Err(Error::Field(format!("fraction `{text}` is not in lowest terms")));
    }
    Ok(BigRational::new_raw(num, den))
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

/// An exact field element. Both operands of any arithmetic operation must come
/// from the same [`Field`]; mixing fields is a programming error and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::Fp { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Q(q) => Scalar::Q(q.recip()),
            Scalar::Fp { value, modulus } => {
                Scalar::Fp { value: mod_inverse(*value, *modulus), modulus: *modulus }
            }
        })
    }

    /// Fused `self += a * b`.
    pub fn add_mul(&mut self, a: &Scalar, b: &Scalar) {
        match (self, a, b) {
            (Scalar::Q(acc), Scalar::Q(x), Scalar::Q(y)) => *acc += x * y,
            (Scalar::Fp { value, modulus }, Scalar::Fp { value: x, .. }, Scalar::Fp { value: y, .. }) => {
                *value = (*value + x * y % *modulus) % *modulus
            }
            _ => panic!("scalar field mismatch"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Q(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Fp { value, .. } => write!(f, "{value}"),
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $q:expr, $fp:expr) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q($q(a, b)),
                    (Scalar::Fp { value: a, modulus }, Scalar::Fp { value: b, modulus: m2 })
                        if modulus == m2 =>
                    {
                        Scalar::Fp { value: $fp(*a, *b, *modulus), modulus: *modulus }
                    }
                    _ => panic!("scalar field mismatch"),
                }
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, |a: &BigRational, b: &BigRational| a + b, |a: u64, b: u64, p: u64| (a + b) % p);
binop!(Sub, sub, |a: &BigRational, b: &BigRational| a - b, |a: u64, b: u64, p: u64| (a + p - b) % p);
binop!(Mul, mul, |a: &BigRational, b: &BigRational| a * b, |a: u64, b: u64, p: u64| a * b % p);
binop!(
    Div,
    div,
    |a: &BigRational, b: &BigRational| {
        assert!(!b.is_zero(), "division by zero");
        a / b
    },
    |a: u64, b: u64, p: u64| {
        assert!(b != 0, "division by zero");
        a * mod_inverse(b, p) % p
    }
);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(q) => Scalar::Q(-q),
            Scalar::Fp { value, modulus } => Scalar::Fp { value: (modulus - value) % modulus, modulus: *modulus },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_reduces() {
        let q = Field::Rational;
        let a = q.parse("1/6").unwrap();
        let b = q.parse("1/3").unwrap();
        assert_eq!((&a + &b).to_string(), "1/2");
        assert_eq!((&a * &b).to_string(), "1/18");
        assert_eq!((&b / &a).to_string(), "2");
    }

    #[test]
    fn prime_field_inverse() {
        let f = Field::prime(7).unwrap();
        let three = f.int(3);
        assert!((&three * &three.inv().unwrap()).is_one());
        assert_eq!(f.parse("1/2").unwrap(), f.int(4));
    }

    #[test]
    fn malformed_fractions_rejected() {
        assert!(matches!(parse_fraction("1/0"), Err(Error::Field(_))));
        assert!(matches!(parse_fraction("2/4"), Err(Error::Field(_))));
        assert!(matches!(parse_fraction("x"), Err(Error::Field(_))));
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(5).unwrap().parse("1/5").is_err());
    }

    #[test]
    fn field_descriptor_round_trip() {
        for f in [Field::Rational, Field::Prime(5)] {
            assert_eq!(f.to_string().parse::<Field>().unwrap(), f);
        }
        assert!("prime 4".parse::<Field>().is_err());
    }
}
