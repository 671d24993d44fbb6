use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use crate::linalg::{Field, Scalar};

/// Polynomial in the deformation parameter `t` with Gaussian-rational
/// coefficients. `coeffs[k]` is the coefficient of `t^k`; trailing zeros
/// are trimmed so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct TPoly {
    coeffs: Vec<Scalar>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly::default()
    }

    pub fn one() -> Self {
        TPoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        TPoly::from_coeffs(vec![c])
    }

    /// The monomial `c·t^k`.
    pub fn monomial(c: Scalar, k: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); k + 1];
        coeffs[k] = c;
        TPoly::from_coeffs(coeffs)
    }

    pub fn t() -> Self {
        TPoly::monomial(Scalar::one(), 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Field::is_zero) {
            coeffs.pop();
        }
        TPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeffs.first().cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn scale(&self, c: &Scalar) -> TPoly {
        TPoly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Exact Horner evaluation at `t = s`.
    pub fn eval(&self, s: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc *= s;
            acc += c;
        }
        acc
    }

    fn add_ref(&self, other: &TPoly) -> TPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Scalar::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        TPoly::from_coeffs(out)
    }

    fn mul_ref(&self, other: &TPoly) -> TPoly {
        if self.is_zero() || other.is_zero() {
            return TPoly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        TPoly::from_coeffs(out)
    }
}

/// Free-function form of [`TPoly::eval`].
pub fn tpoly_eval(p: &TPoly, s: &Scalar) -> Scalar {
    p.eval(s)
}

impl<'a> Add<&'a TPoly> for &'a TPoly {
    type Output = TPoly;
    fn add(self, rhs: &'a TPoly) -> TPoly {
        self.add_ref(rhs)
    }
}

impl Add for TPoly {
    type Output = TPoly;
    fn add(self, rhs: TPoly) -> TPoly {
        self.add_ref(&rhs)
    }
}

impl<'a> Sub<&'a TPoly> for &'a TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &'a TPoly) -> TPoly {
        self.add_ref(&-rhs.clone())
    }
}

impl Sub for TPoly {
    type Output = TPoly;
    fn sub(self, rhs: TPoly) -> TPoly {
        self.add_ref(&-rhs)
    }
}

impl<'a> Mul<&'a TPoly> for &'a TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &'a TPoly) -> TPoly {
        self.mul_ref(rhs)
    }
}

impl Mul for TPoly {
    type Output = TPoly;
    fn mul(self, rhs: TPoly) -> TPoly {
        self.mul_ref(&rhs)
    }
}

impl Neg for TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

/// Negative real scalars, used to print `a - b` instead of `a + -b`.
pub(crate) fn is_negative_real(c: &Scalar) -> bool {
    c.is_real() && c.re.is_negative()
}

/// Renders a scalar so that it re-parses as a single factor.
pub(crate) fn scalar_factor(c: &Scalar) -> String {
    if !c.is_real() && !num_traits::Zero::is_zero(&c.re) {
        format!("({c})")
    } else {
        c.to_string()
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = if is_negative_real(c) { (true, -c.clone()) } else { (false, c.clone()) };
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let tpart = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            if tpart.is_empty() {
                f.write_str(&scalar_factor(&mag))?;
            } else if mag.is_one() {
                f.write_str(&tpart)?;
            } else {
                write!(f, "{}*{}", scalar_factor(&mag), tpart)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_examples() {
        let t2 = TPoly::monomial(Scalar::one(), 2);
        assert_eq!(t2.eval(&Scalar::ratio(1, 2)), Scalar::ratio(1, 4));
        assert_eq!(TPoly::one().eval(&Scalar::ratio(-7, 3)), Scalar::one());
        let one_minus_t = TPoly::one() - TPoly::t();
        assert_eq!(one_minus_t.eval(&Scalar::one()), Scalar::zero());
    }

    #[test]
    fn trims_and_evaluates_constant_at_zero() {
        let p = TPoly::from_coeffs(vec![Scalar::from_int(3), Scalar::zero(), Scalar::zero()]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(p.eval(&Scalar::zero()), Scalar::from_int(3));
        assert!(TPoly::from_coeffs(vec![Scalar::zero()]).is_zero());
    }

    #[test]
    fn display() {
        let p = TPoly::from_coeffs(vec![Scalar::from_int(1), Scalar::from_int(-2), Scalar::ratio(1, 2)]);
        assert_eq!(p.to_string(), "1 - 2*t + 1/2*t^2");
        assert_eq!(TPoly::t().to_string(), "t");
        assert_eq!(TPoly::constant("1+1*i".parse().unwrap()).to_string(), "(1+1*i)");
    }
}
