//! Exact scalar fields: the rationals and the Gaussian rationals `Q(i)`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored in lowest terms.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"a"` or `"a/b"`. A zero denominator is rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    if let Some((n, d)) = t.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| Error::BadRational(s.into()))?;
        let d = BigInt::from_str(d.trim()).map_err(|_| Error::BadRational(s.into()))?;
        if d.is_zero() {
            return Err(Error::BadRational(s.into()));
        }
        Ok(Rational::new(n, d))
    } else {
        BigInt::from_str(t)
            .map(Rational::from_integer)
            .map_err(|_| Error::BadRational(s.into()))
    }
}

pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn rational_to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        // fall back for huge numerators/denominators
        let n = q.numer().to_f64().unwrap_or(f64::NAN);
        let d = q.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

fn rational_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => n
            .as_i64()
            .map(int)
            .ok_or_else(|| Error::BadRational(n.to_string())),
        other => Err(Error::BadRational(other.to_string())),
    }
}

/// Element of `Q(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussRational { re, im: Rational::zero() }
    }

    pub fn i() -> Self {
        GaussRational { re: Rational::zero(), im: Rational::one() }
    }

    pub fn conj(&self) -> Self {
        GaussRational { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `|z|^2`, which is always rational.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", format_rational(&self.re))
        } else {
            write!(f, "{}{}{}i", format_rational(&self.re), if self.im.is_negative() { "" } else { "+" }, format_rational(&self.im))
        }
    }
}

impl Add for GaussRational {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        GaussRational { re: self.re + o.re, im: self.im + o.im }
    }
}

impl Sub for GaussRational {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        GaussRational { re: self.re - o.re, im: self.im - o.im }
    }
}

impl Mul for GaussRational {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let re = &self.re * &o.re - &self.im * &o.im;
        let im = &self.re * &o.im + &self.im * &o.re;
        GaussRational { re, im }
    }
}

impl Div for GaussRational {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        let n = o.norm_sqr();
        assert!(!n.is_zero(), "division by zero in Q(i)");
        let num = self * o.conj();
        GaussRational { re: num.re / &n, im: num.im / n }
    }
}

impl Neg for GaussRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussRational { re: -self.re, im: -self.im }
    }
}

impl Zero for GaussRational {
    fn zero() -> Self {
        GaussRational { re: Rational::zero(), im: Rational::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRational {
    fn one() -> Self {
        GaussRational { re: Rational::one(), im: Rational::zero() }
    }
}

impl From<Rational> for GaussRational {
    fn from(re: Rational) -> Self {
        GaussRational::real(re)
    }
}

/// An exact field usable as a polynomial coefficient or matrix entry.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Whether this kind can hold non-real values.
    const COMPLEX: bool;

    fn from_rational(q: Rational) -> Self;
    fn conj(&self) -> Self;
    fn to_complex(&self) -> Complex64;
    /// The rational value if the element is real.
    fn as_rational(&self) -> Option<Rational>;
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

impl Scalar for Rational {
    const COMPLEX: bool = false;

    fn from_rational(q: Rational) -> Self {
        q
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn to_complex(&self) -> Complex64 {
        Complex64::new(rational_to_f64(self), 0.0)
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn to_json(&self) -> Value {
        Value::String(format_rational(self))
    }
    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::Object(_) => {
                let g = GaussRational::from_json(v)?;
                if g.im.is_zero() {
                    Ok(g.re)
                } else {
                    Err(Error::Invalid(format!("expected a real scalar, got {v}")))
                }
            }
            _ => rational_from_json(v),
        }
    }
}

impl Scalar for GaussRational {
    const COMPLEX: bool = true;

    fn from_rational(q: Rational) -> Self {
        GaussRational::real(q)
    }
    fn conj(&self) -> Self {
        GaussRational::conj(self)
    }
    fn to_complex(&self) -> Complex64 {
        Complex64::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }
    fn as_rational(&self) -> Option<Rational> {
        self.im.is_zero().then(|| self.re.clone())
    }
    fn to_json(&self) -> Value {
        json!({"re": format_rational(&self.re), "im": format_rational(&self.im)})
    }
    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::Object(map) => {
                let re = map.get("re").map(rational_from_json).transpose()?.unwrap_or_else(Rational::zero);
                let im = map.get("im").map(rational_from_json).transpose()?.unwrap_or_else(Rational::zero);
                Ok(GaussRational { re, im })
            }
            _ => rational_from_json(v).map(GaussRational::real),
        }
    }
}

/// True when a JSON scalar is written in the `{"re":..,"im":..}` form.
pub fn json_is_complex(v: &Value) -> bool {
    v.is_object()
}
