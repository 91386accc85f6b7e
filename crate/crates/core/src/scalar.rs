//! Scalar backends: exact arbitrary-precision rationals and complex doubles
//! with an absolute comparison tolerance.
//!
//! All finite verification runs on the rational backend, where equality is
//! exact. The complex backend exists for root-based polynomial coverings;
//! there `a == b` means `|a - b| <= eps` with `eps` carried by the values.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::Error;

pub const DEFAULT_EPS: f64 = 1e-9;

#[derive(Debug, Clone)]
pub enum Scalar {
    Rational(BigRational),
    Complex { value: Complex64, eps: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Rational,
    Complex,
}

impl Scalar {
    pub fn from_int(v: i64) -> Self {
        Scalar::Rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn complex(re: f64, im: f64, eps: f64) -> Self {
        assert!(eps > 0.0, "tolerance must be positive");
        Scalar::Complex { value: Complex64::new(re, im), eps }
    }

    pub fn zero(backend: Backend, eps: f64) -> Self {
        match backend {
            Backend::Rational => Scalar::from_int(0),
            Backend::Complex => Scalar::complex(0.0, 0.0, eps),
        }
    }

    pub fn one(backend: Backend, eps: f64) -> Self {
        match backend {
            Backend::Rational => Scalar::from_int(1),
            Backend::Complex => Scalar::complex(1.0, 0.0, eps),
        }
    }

    pub fn int(backend: Backend, eps: f64, v: i64) -> Self {
        match backend {
            Backend::Rational => Scalar::from_int(v),
            Backend::Complex => Scalar::complex(v as f64, 0.0, eps),
        }
    }

    pub fn backend(&self) -> Backend {
        match self {
            Scalar::Rational(_) => Backend::Rational,
            Scalar::Complex { .. } => Backend::Complex,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Complex { value, eps } => value.norm() <= *eps,
        }
    }

    pub fn zero_like(&self) -> Self {
        match self {
            Scalar::Rational(_) => Scalar::from_int(0),
            Scalar::Complex { eps, .. } => Scalar::complex(0.0, 0.0, *eps),
        }
    }

    pub fn one_like(&self) -> Self {
        match self {
            Scalar::Rational(_) => Scalar::from_int(1),
            Scalar::Complex { eps, .. } => Scalar::complex(1.0, 0.0, *eps),
        }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        match self {
            Scalar::Rational(r) => Scalar::Rational(r * BigRational::from_integer(BigInt::from(k))),
            Scalar::Complex { value, eps } => Scalar::Complex { value: value * k as f64, eps: *eps },
        }
    }

    /// Exact division by a nonzero integer (both backends).
    pub fn div_int(&self, k: i64) -> Self {
        assert!(k != 0, "division by zero integer");
        match self {
            Scalar::Rational(r) => Scalar::Rational(r / BigRational::from_integer(BigInt::from(k))),
            Scalar::Complex { value, eps } => Scalar::Complex { value: value / k as f64, eps: *eps },
        }
    }

    pub fn inverse(&self) -> Result<Scalar, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Complex { value, eps } => Scalar::Complex { value: value.inv(), eps: *eps },
        })
    }

    pub fn as_complex(&self) -> Complex64 {
        match self {
            Scalar::Rational(r) => {
                let num = bigint_to_f64(r.numer());
                let den = bigint_to_f64(r.denom());
                Complex64::new(num / den, 0.0)
            }
            Scalar::Complex { value, .. } => *value,
        }
    }

    /// Nearest integer if within `tol` of one (rational backend: exact
    /// integrality, `tol` ignored).
    pub fn to_integer(&self, tol: f64) -> Option<BigInt> {
        match self {
            Scalar::Rational(r) => {
                if r.is_integer() {
                    Some(r.to_integer())
                } else {
                    None
                }
            }
            Scalar::Complex { value, .. } => {
                let rounded = value.re.round();
                let dist = Complex64::new(value.re - rounded, value.im).norm();
                if dist <= tol && rounded.abs() < 1e15 {
                    Some(BigInt::from(rounded as i64))
                } else {
                    None
                }
            }
        }
    }

    pub fn rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Complex { .. } => None,
        }
    }

    /// Parse "p/q", "p", or a JSON-style float string on the given backend.
    pub fn parse(text: &str, backend: Backend, eps: f64) -> Result<Scalar, Error> {
        let text = text.trim();
        match backend {
            Backend::Rational => {
                let (num, den) = match text.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (text, "1"),
                };
                let num: BigInt = num
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad rational `{text}`")))?;
                let den: BigInt = den
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad rational `{text}`")))?;
                if den.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in `{text}`")));
                }
                Ok(Scalar::Rational(BigRational::new(num, den)))
            }
            Backend::Complex => {
                if let Some((n, d)) = text.split_once('/') {
                    let n: f64 = n.trim().parse().map_err(|_| Error::Parse(format!("bad number `{text}`")))?;
                    let d: f64 = d.trim().parse().map_err(|_| Error::Parse(format!("bad number `{text}`")))?;
                    return Ok(Scalar::complex(n / d, 0.0, eps));
                }
                let v: f64 = text.parse().map_err(|_| Error::Parse(format!("bad number `{text}`")))?;
                Ok(Scalar::complex(v, 0.0, eps))
            }
        }
    }
}

fn bigint_to_f64(b: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    b.to_f64().unwrap_or(if b.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY })
}

fn eps_of(a: &Scalar, b: &Scalar) -> f64 {
    match (a, b) {
        (Scalar::Complex { eps: e1, .. }, Scalar::Complex { eps: e2, .. }) => e1.max(*e2),
        (Scalar::Complex { eps, .. }, _) | (_, Scalar::Complex { eps, .. }) => *eps,
        _ => DEFAULT_EPS,
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a == b,
            (Scalar::Complex { value: a, .. }, Scalar::Complex { value: b, .. }) => {
                (a - b).norm() <= eps_of(self, other)
            }
            _ => panic!("scalar backend mismatch"),
        }
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a $op b),
                    (Scalar::Complex { value: a, eps: e1 }, Scalar::Complex { value: b, eps: e2 }) => {
                        Scalar::Complex { value: a $op b, eps: e1.max(*e2) }
                    }
                    _ => panic!("scalar backend mismatch"),
                }
            }
        }
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

scalar_binop!(Add, add, +);
scalar_binop!(Sub, sub, -);
scalar_binop!(Mul, mul, *);

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        let inv = rhs.inverse().expect("division by zero scalar");
        self * &inv
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Complex { value, eps } => Scalar::Complex { value: -value, eps: *eps },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Complex { value, .. } => {
                if value.im == 0.0 {
                    write!(f, "{}", value.re)
                } else {
                    write!(f, "{}{:+}i", value.re, value.im)
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_is_exact() {
        let a = Scalar::ratio(1, 3);
        let b = Scalar::ratio(1, 6);
        assert_eq!(&a + &b, Scalar::ratio(1, 2));
        assert_eq!(&a - &a, Scalar::from_int(0));
        assert_eq!(&a * &Scalar::from_int(3), Scalar::from_int(1));
    }

    #[test]
    fn complex_equality_uses_tolerance() {
        let a = Scalar::complex(1.0, 0.0, 1e-9);
        let b = Scalar::complex(1.0 + 5e-10, 0.0, 1e-9);
        let c = Scalar::complex(1.0 + 1e-6, 0.0, 1e-9);
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn parse_rational_strings() {
        assert_eq!(Scalar::parse("3/4", Backend::Rational, 0.0).unwrap(), Scalar::ratio(3, 4));
        assert_eq!(Scalar::parse("-2", Backend::Rational, 0.0).unwrap(), Scalar::from_int(-2));
        assert!(Scalar::parse("1/0", Backend::Rational, 0.0).is_err());
    }

    #[test]
    fn integer_detection() {
        assert_eq!(Scalar::ratio(6, 3).to_integer(0.0), Some(BigInt::from(2)));
        assert_eq!(Scalar::ratio(1, 3).to_integer(0.0), None);
        assert_eq!(Scalar::complex(2.0 + 1e-12, 0.0, 1e-9).to_integer(1e-8), Some(BigInt::from(2)));
    }
}
