//! Gaussian rationals `a + b·i` with `a, b ∈ ℚ`.
//!
//! Text syntax: `a/b` for a rational, `c/d*i` for a pure imaginary and
//! `a/b+c/d*i` (or `a/b-c/d*i`) for the general case. Integers may omit the
//! denominator. Printing always produces the canonical form of this syntax.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use super::Field;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Scalar {
    pub re: BigRational,
    pub im: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed scalar literal {literal:?}: {reason}")]
pub struct ScalarParseError {
    pub literal: String,
    pub reason: &'static str,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Scalar { re, im: BigRational::zero() }
    }

    pub fn from_int(v: i64) -> Self {
        Scalar::real(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Scalar::real(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn i() -> Self {
        Scalar { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// The real part when the imaginary part vanishes.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_real().then_some(&self.re)
    }

    pub fn conj(&self) -> Self {
        Scalar { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `re² + im²`
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::real(r)
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::from_int(v)
    }
}

impl PartialEq<BigRational> for Scalar {
    fn eq(&self, other: &BigRational) -> bool {
        self.im.is_zero() && self.re == *other
    }
}

impl Field for Scalar {
    fn zero() -> Self {
        Scalar::default()
    }

    fn one() -> Self {
        Scalar::from_int(1)
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn from_rational(r: BigRational) -> Self {
        Scalar::real(r)
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.im.is_zero() {
            return Some(Scalar::real(self.re.recip()));
        }
        let n = self.norm_sqr();
        Some(Scalar { re: &self.re / &n, im: -(&self.im / &n) })
    }
}

impl<'a> AddAssign<&'a Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &'a Scalar) {
        self.re += &rhs.re;
        if !rhs.im.is_zero() {
            self.im += &rhs.im;
        }
    }
}

impl<'a> SubAssign<&'a Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &'a Scalar) {
        self.re -= &rhs.re;
        if !rhs.im.is_zero() {
            self.im -= &rhs.im;
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self.im.is_zero(), rhs.im.is_zero()) {
            (true, true) => Scalar::real(&self.re * &rhs.re),
            (true, false) => Scalar { re: &self.re * &rhs.re, im: &self.re * &rhs.im },
            (false, true) => Scalar { re: &self.re * &rhs.re, im: &self.im * &rhs.re },
            (false, false) => Scalar {
                re: &self.re * &rhs.re - &self.im * &rhs.im,
                im: &self.re * &rhs.im + &self.im * &rhs.re,
            },
        }
    }
}

impl<'a> Mul<&'a Scalar> for Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &'a Scalar) -> Scalar {
        &self * rhs
    }
}

impl<'a> MulAssign<&'a Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &'a Scalar) {
        *self = &*self * rhs;
    }
}

impl Mul for Scalar {
    type Output = Scalar;

    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Add for Scalar {
    type Output = Scalar;

    fn add(mut self, rhs: Scalar) -> Scalar {
        self += &rhs;
        self
    }
}

impl Sub for Scalar {
    type Output = Scalar;

    fn sub(mut self, rhs: Scalar) -> Scalar {
        self -= &rhs;
        self
    }
}

impl Div for Scalar {
    type Output = Scalar;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Scalar) -> Scalar {
        let inv = rhs.inv().expect("division by zero scalar");
        &self * &inv
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        Scalar { re: -self.re, im: -self.im }
    }
}

fn fmt_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return fmt_rational(&self.re, f);
        }
        if !self.re.is_zero() {
            fmt_rational(&self.re, f)?;
            if self.im.is_positive() {
                f.write_str("+")?;
            }
        }
        fmt_rational(&self.im, f)?;
        f.write_str("*i")
    }
}

fn parse_rational(src: &str, whole: &str) -> Result<BigRational, ScalarParseError> {
    let err = |reason| ScalarParseError { literal: whole.to_string(), reason };
    let (num, den) = match src.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (src, None),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    let unsigned = num.strip_prefix('-').unwrap_or(num);
    if !digits(unsigned) {
        return Err(err("expected an integer numerator"));
    }
    let numer: BigInt = num.parse().map_err(|_| err("expected an integer numerator"))?;
    let denom = match den {
        None => BigInt::from(1),
        Some(d) if digits(d) => d.parse().map_err(|_| err("expected a positive denominator"))?,
        Some(_) => return Err(err("expected a positive denominator")),
    };
    if num_traits::Zero::is_zero(&denom) {
        return Err(err("zero denominator"));
    }
    Ok(BigRational::new(numer, denom))
}

impl FromStr for Scalar {
    type Err = ScalarParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let whole = s;
        let s = s.trim();
        let err = |reason| ScalarParseError { literal: whole.to_string(), reason };
        if s.is_empty() {
            return Err(err("empty literal"));
        }
        let Some(body) = s.strip_suffix("*i") else {
            return Ok(Scalar::real(parse_rational(s, whole)?));
        };
        // split the real part off at the last sign that is not in leading position
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        match split {
            None => Ok(Scalar { re: BigRational::zero(), im: parse_rational(body, whole)? }),
            Some(idx) => {
                let re = parse_rational(&body[..idx], whole)?;
                let im_src = &body[idx..];
                let im = match im_src.strip_prefix('+') {
                    Some(rest) if !rest.starts_with('-') => parse_rational(rest, whole)?,
                    Some(_) => return Err(err("doubled sign")),
                    None => parse_rational(im_src, whole)?,
                };
                Ok(Scalar { re, im })
            }
        }
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Text(String),
            Int(i64),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Text(s) => s.parse().map_err(serde::de::Error::custom),
            Repr::Int(v) => Ok(Scalar::from_int(v)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(src: &str) -> Scalar {
        src.parse().unwrap()
    }

    #[test]
    fn parses_all_literal_forms() {
        assert_eq!(s("3"), Scalar::from_int(3));
        assert_eq!(s("3/1"), Scalar::from_int(3));
        assert_eq!(s("-2/4"), Scalar::ratio(-1, 2));
        assert_eq!(s("3/4*i"), Scalar::new(BigRational::zero(), Scalar::ratio(3, 4).re));
        assert_eq!(s("1/2+3/4*i").im, Scalar::ratio(3, 4).re);
        assert_eq!(s("1/2-3/4*i").im, Scalar::ratio(-3, 4).re);
        assert_eq!(s("-1/2-3/4*i").re, Scalar::ratio(-1, 2).re);
        assert_eq!(s("-5*i"), -Scalar::from_int(5) * Scalar::i());
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "1/0", "x", "1/-2", "1/2+", "*i", "1+-2*i", "1//2", "1.5", "+3"] {
            assert!(bad.parse::<Scalar>().is_err(), "{bad:?} should be rejected");
        }
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(s("6/4").to_string(), "3/2");
        assert_eq!(s("0/5+2/4*i").to_string(), "1/2*i");
        assert_eq!(s("1-1*i").to_string(), "1-1*i");
        assert_eq!(Scalar::zero().to_string(), "0");
        for lit in ["1/2+3/4*i", "-7", "-1/3*i", "2-5/3*i"] {
            assert_eq!(s(lit).to_string(), lit);
        }
    }

    #[test]
    fn real_scalar_equals_rational() {
        let r = BigRational::new(BigInt::from(5), BigInt::from(7));
        assert_eq!(Scalar::real(r.clone()), r);
        assert_ne!(Scalar::new(r.clone(), BigRational::one()), r);
    }

    #[test]
    fn gaussian_inverse() {
        let z = s("3+4*i");
        assert_eq!(z.clone() * z.inv().unwrap(), Scalar::one());
        assert_eq!(Scalar::i() * Scalar::i(), Scalar::from_int(-1));
        assert!(Scalar::zero().inv().is_none());
    }
}
