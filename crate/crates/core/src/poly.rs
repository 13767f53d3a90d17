//! Sparse multivariate polynomials with exact coefficients, and dense
//! univariate polynomials over the rationals.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vectors in graded
//! lexicographic order, so iteration, serialization and first-difference
//! reports are deterministic.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::jumpsys::LatticePointSet;
use crate::scalar::{json_is_complex, GaussRational, Rational, Scalar};

/// Exponents of a monomial, one entry per variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExponentVector(pub Vec<u32>);

impl ExponentVector {
    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        ExponentVector(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Componentwise (product) order.
    pub fn le_product(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn add(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

/// Graded lexicographic: lower total degree first, then the exponent of
/// `x1` descending, then `x2`, and so on (`1 < x < y < x^2 < xy < y^2`).
impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Multivariate polynomial over an exact scalar field.
#[derive(Clone, PartialEq, Debug)]
pub struct Polynomial<C> {
    nvars: usize,
    terms: BTreeMap<ExponentVector, C>,
}

pub type RatPoly = Polynomial<Rational>;
pub type GaussPoly = Polynomial<GaussRational>;

impl<C: Scalar> Polynomial<C> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::monomial(ExponentVector::zeros(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    /// The variable `x_{i+1}` (0-based index `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(ExponentVector::unit(nvars, i), C::one())
    }

    pub fn monomial(exps: ExponentVector, c: C) -> Self {
        let nvars = exps.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Polynomial { nvars, terms }
    }

    /// Builds a polynomial from terms, merging repeated exponent vectors.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, C)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::LengthMismatch { expected: nvars, got: e.len() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: ExponentVector, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&e) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(e, s);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (graded lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &ExponentVector) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(ExponentVector::degree).max()
    }

    /// Common degree of every term, or the first two distinct degrees found.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>> {
        let mut degs = self.terms.keys().map(ExponentVector::degree);
        let Some(first) = degs.next() else { return Ok(None) };
        match degs.find(|&d| d != first) {
            Some(other) => Err(Error::NotHomogeneous(first, other)),
            None => Ok(Some(first)),
        }
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VarCountMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.clone() * s.clone())).collect(),
        }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut acc: HashMap<ExponentVector, C> = HashMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.add(eb);
                let prod = ca.clone() * cb.clone();
                match acc.get_mut(&e) {
                    Some(c) => *c = c.clone() + prod,
                    None => {
                        acc.insert(e, prod);
                    }
                }
            }
        }
        Ok(Polynomial {
            nvars: self.nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    /// `p^k` by repeated squaring; `p^0 = 1`.
    pub fn pow(&self, mut k: u32) -> Self {
        let mut result = Self::one(self.nvars);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = result.checked_mul(&base).expect("same arity");
            }
            k >>= 1;
            if k > 0 {
                base = base.checked_mul(&base).expect("same arity");
            }
        }
        result
    }

    /// Substitutes `images[i]` for the variable `x_{i+1}`.
    pub fn compose(&self, images: &[Polynomial<C>]) -> Result<Self> {
        if images.len() != self.nvars {
            return Err(Error::LengthMismatch { expected: self.nvars, got: images.len() });
        }
        let target = images.first().map_or(0, |p| p.nvars);
        if let Some(bad) = images.iter().find(|p| p.nvars != target) {
            return Err(Error::VarCountMismatch { left: target, right: bad.nvars });
        }
        let mut powers: Vec<Vec<Polynomial<C>>> = vec![vec![Polynomial::one(target)]; self.nvars];
        let mut out = Polynomial::zero(target);
        for (e, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, &k) in e.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap().checked_mul(&images[i])?;
                    powers[i].push(next);
                }
                term = term.checked_mul(&powers[i][k as usize])?;
            }
            out = out.checked_add(&term)?;
        }
        Ok(out)
    }

    /// `p(x + shift)`.
    pub fn shift(&self, shift: &[C]) -> Result<Self> {
        if shift.len() != self.nvars {
            return Err(Error::LengthMismatch { expected: self.nvars, got: shift.len() });
        }
        let images: Vec<_> = shift
            .iter()
            .enumerate()
            .map(|(i, s)| {
                Polynomial::var(self.nvars, i)
                    .checked_add(&Polynomial::constant(self.nvars, s.clone()))
                    .expect("same arity")
            })
            .collect();
        self.compose(&images)
    }

    pub fn eval(&self, point: &[C]) -> Result<C> {
        if point.len() != self.nvars {
            return Err(Error::LengthMismatch { expected: self.nvars, got: point.len() });
        }
        let mut powers: Vec<Vec<C>> = vec![vec![C::one()]; self.nvars];
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap().clone() * point[i].clone();
                    powers[i].push(next);
                }
                t = t * powers[i][k as usize].clone();
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Floating-point evaluation at a complex point.
    pub fn eval_complex(&self, point: &[Complex64]) -> Result<Complex64> {
        if point.len() != self.nvars {
            return Err(Error::LengthMismatch { expected: self.nvars, got: point.len() });
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let mut t = c.to_complex();
            for (x, &k) in point.iter().zip(&e.0) {
                if k > 0 {
                    t *= x.powu(k);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    pub fn support(&self) -> LatticePointSet {
        LatticePointSet::from_points(
            self.nvars,
            self.terms.keys().map(|e| e.0.iter().map(|&k| k as i64).collect()),
        )
        .expect("exponent vectors share the ambient length")
    }

    /// First monomial (in canonical order) where the two polynomials
    /// differ, with the coefficient from each side.
    pub fn first_difference(&self, other: &Self) -> Result<Option<(ExponentVector, C, C)>> {
        self.check_vars(other)?;
        let keys: std::collections::BTreeSet<&ExponentVector> =
            self.terms.keys().chain(other.terms.keys()).collect();
        for e in keys {
            let a = self.coeff(e);
            let b = other.coeff(e);
            if a != b {
                return Ok(Some((e.clone(), a, b)));
            }
        }
        Ok(None)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(e, c)| json!({"c": c.to_json(), "e": e.0}))
            .collect();
        json!({"vars": self.nvars, "terms": terms})
    }

    /// Parses the `{"vars": n, "terms": [{"c": .., "e": [..]}]}` form.
    /// Terms may come in any order; repeated exponent vectors are rejected.
    pub fn from_json(v: &Value) -> Result<Self> {
        let nvars = v
            .get("vars")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Invalid("polynomial needs an integer \"vars\" field".into()))?
            as usize;
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Invalid("polynomial needs a \"terms\" array".into()))?;
        let mut p = Self::zero(nvars);
        for t in terms {
            let c = C::from_json(t.get("c").ok_or_else(|| Error::Invalid("term without \"c\"".into()))?)?;
            let e: Vec<u32> = serde_json::from_value(
                t.get("e").cloned().ok_or_else(|| Error::Invalid("term without \"e\"".into()))?,
            )
            .map_err(|err| Error::Invalid(format!("bad exponent vector: {err}")))?;
            if e.len() != nvars {
                return Err(Error::LengthMismatch { expected: nvars, got: e.len() });
            }
            let e = ExponentVector(e);
            if p.terms.contains_key(&e) {
                return Err(Error::DuplicateExponent(e.0));
            }
            if !c.is_zero() {
                p.terms.insert(e, c);
            }
        }
        Ok(p)
    }
}

impl RatPoly {
    pub fn to_gauss(&self) -> GaussPoly {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), GaussRational::real(c.clone()))).collect(),
        }
    }

    /// Exact univariate restriction `t -> p(base + t * dir)`.
    ///
    /// Variables sharing the same `(base, dir)` pair are grouped, so a term
    /// only contributes through the exponent sums of each group. For the
    /// 0/1 directions used by rank functions this leaves two groups.
    pub fn restrict_univariate(&self, base: &[Rational], dir: &[Rational]) -> Result<UnivariatePoly> {
        for v in [base, dir] {
            if v.len() != self.nvars {
                return Err(Error::LengthMismatch { expected: self.nvars, got: v.len() });
            }
        }
        if base.iter().all(Zero::is_zero) {
            return Ok(self.restrict_through_origin(dir));
        }
        let mut groups: Vec<(Rational, Rational)> = Vec::new();
        let mut group_of = Vec::with_capacity(self.nvars);
        for (b, d) in base.iter().zip(dir) {
            let g = match groups.iter().position(|(gb, gd)| gb == b && gd == d) {
                Some(g) => g,
                None => {
                    groups.push((b.clone(), d.clone()));
                    groups.len() - 1
                }
            };
            group_of.push(g);
        }
        let mut collected: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut key = vec![0u32; groups.len()];
            for (i, &k) in e.0.iter().enumerate() {
                key[group_of[i]] += k;
            }
            let slot = collected.entry(key).or_insert_with(Rational::zero);
            *slot += c;
        }
        let linear: Vec<UnivariatePoly> = groups
            .iter()
            .map(|(b, d)| UnivariatePoly::new(vec![b.clone(), d.clone()]))
            .collect();
        let mut powers: Vec<Vec<UnivariatePoly>> = vec![vec![UnivariatePoly::one()]; groups.len()];
        let mut out = UnivariatePoly::zero();
        for (key, c) in collected {
            if c.is_zero() {
                continue;
            }
            let mut term = UnivariatePoly::constant(c);
            for (g, &k) in key.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[g].len() <= k as usize {
                    let next = powers[g].last().unwrap().mul(&linear[g]);
                    powers[g].push(next);
                }
                term = term.mul(&powers[g][k as usize]);
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// `p(t * dir)`: the coefficient of `t^k` is the degree-`k` part at `dir`.
    fn restrict_through_origin(&self, dir: &[Rational]) -> UnivariatePoly {
        let mut powers: Vec<Vec<Rational>> = dir.iter().map(|d| vec![Rational::one(), d.clone()]).collect();
        let mut coeffs = vec![Rational::zero(); self.total_degree().map_or(0, |d| d as usize + 1)];
        for (e, c) in &self.terms {
            let mut value = c.clone();
            for (i, &k) in e.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap() * &dir[i];
                    powers[i].push(next);
                }
                value *= &powers[i][k as usize];
            }
            coeffs[e.degree() as usize] += value;
        }
        UnivariatePoly::new(coeffs)
    }
}

impl GaussPoly {
    /// Narrows to rational coefficients, failing on the first non-real one.
    pub fn to_real(&self) -> Result<RatPoly> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            match c.as_rational() {
                Some(q) => {
                    terms.insert(e.clone(), q);
                }
                None => return Err(Error::NonRealCoefficient(e.0.clone())),
            }
        }
        Ok(Polynomial { nvars: self.nvars, terms })
    }
}

impl<C: Scalar> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (i, &k) in e.0.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    _ => write!(f, "*x{}^{}", i + 1, k)?,
                }
            }
        }
        Ok(())
    }
}

/// A polynomial read from JSON whose coefficient kind is decided by the
/// data: any `{"re","im"}` coefficient makes the whole polynomial Gaussian.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyPoly {
    Rational(RatPoly),
    Gauss(GaussPoly),
}

impl AnyPoly {
    pub fn from_json(v: &Value) -> Result<Self> {
        let complex = v
            .get("terms")
            .and_then(Value::as_array)
            .is_some_and(|ts| ts.iter().any(|t| t.get("c").is_some_and(json_is_complex)));
        if complex {
            let g = GaussPoly::from_json(v)?;
            // a Gaussian literal with all-zero imaginary parts is still real
            match g.to_real() {
                Ok(r) => Ok(AnyPoly::Rational(r)),
                Err(_) => Ok(AnyPoly::Gauss(g)),
            }
        } else {
            RatPoly::from_json(v).map(AnyPoly::Rational)
        }
    }

    pub fn to_gauss(&self) -> GaussPoly {
        match self {
            AnyPoly::Rational(p) => p.to_gauss(),
            AnyPoly::Gauss(p) => p.clone(),
        }
    }

    pub fn rational(self) -> Result<RatPoly> {
        match self {
            AnyPoly::Rational(p) => Ok(p),
            AnyPoly::Gauss(p) => p.to_real(),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            AnyPoly::Rational(p) => p.to_json(),
            AnyPoly::Gauss(p) => p.to_json(),
        }
    }
}

/// Dense univariate polynomial over the rationals, lowest degree first.
/// The zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UnivariatePoly {
    coeffs: Vec<Rational>,
}

impl UnivariatePoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UnivariatePoly { coeffs }
    }

    pub fn zero() -> Self {
        UnivariatePoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| crate::scalar::int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Rational::zero();
        Self::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        UnivariatePoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer((i as i64).into()))
                .collect(),
        )
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return (Self::zero(), self.clone());
        };
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        match a.leading().cloned() {
            Some(l) => a.scale(&(Rational::one() / l)),
            None => a,
        }
    }

    /// Divides by the positive rational content so that coefficients are
    /// coprime integers. The sign of the polynomial is preserved.
    pub fn primitive(&self) -> Self {
        use num_integer::Integer;
        if self.is_zero() {
            return Self::zero();
        }
        let mut lcm_den = num_bigint::BigInt::one();
        for c in &self.coeffs {
            lcm_den = lcm_den.lcm(c.denom());
        }
        let ints: Vec<num_bigint::BigInt> =
            self.coeffs.iter().map(|c| (c * Rational::from_integer(lcm_den.clone())).to_integer()).collect();
        let mut g = num_bigint::BigInt::zero();
        for v in &ints {
            g = g.gcd(v);
        }
        Self::new(ints.into_iter().map(|v| Rational::from_integer(v / &g)).collect())
    }
}

impl fmt::Display for UnivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("({c})"),
                1 => format!("({c})*t"),
                _ => format!("({c})*t^{i}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn p(nvars: usize, terms: &[(i64, &[u32])]) -> RatPoly {
        RatPoly::from_terms(nvars, terms.iter().map(|(c, e)| (ExponentVector(e.to_vec()), int(*c)))).unwrap()
    }

    #[test]
    fn add_examples() {
        let a = p(1, &[(1, &[0]), (1, &[1])]);
        let b = p(1, &[(1, &[1])]);
        assert_eq!(a.checked_add(&b).unwrap(), p(1, &[(1, &[0]), (2, &[1])]));
        assert_eq!(a.checked_add(&RatPoly::zero(1)).unwrap(), a);
        let xy = p(2, &[(1, &[1, 0]), (-1, &[0, 1])]);
        let yx = p(2, &[(1, &[0, 1]), (-1, &[1, 0])]);
        assert!(xy.checked_add(&yx).unwrap().is_zero());
        assert!(matches!(a.checked_add(&xy), Err(Error::VarCountMismatch { .. })));
    }

    #[test]
    fn mul_and_pow_examples() {
        let one_x = p(2, &[(1, &[0, 0]), (1, &[1, 0])]);
        let one_y = p(2, &[(1, &[0, 0]), (1, &[0, 1])]);
        let prod = one_x.checked_mul(&one_y).unwrap();
        assert_eq!(prod, p(2, &[(1, &[0, 0]), (1, &[1, 0]), (1, &[0, 1]), (1, &[1, 1])]));
        let u = p(1, &[(1, &[0]), (1, &[1])]);
        assert_eq!(u.pow(2), p(1, &[(1, &[0]), (2, &[1]), (1, &[2])]));
        assert_eq!(u.pow(3), p(1, &[(1, &[0]), (3, &[1]), (3, &[2]), (1, &[3])]));
        assert_eq!(u.pow(0), RatPoly::one(1));
    }

    #[test]
    fn compose_examples() {
        // x1 x2 with (1+t, 1) -> 1 + t
        let x1x2 = p(2, &[(1, &[1, 1])]);
        let one_t = p(1, &[(1, &[0]), (1, &[1])]);
        assert_eq!(x1x2.compose(&[one_t.clone(), RatPoly::one(1)]).unwrap(), one_t);
        // x1 -> x1 + 1
        let x1 = RatPoly::var(1, 0);
        assert_eq!(x1.shift(&[int(1)]).unwrap(), one_t);
        assert!(x1x2.compose(&[one_t]).is_err());
    }

    #[test]
    fn canonical_order_is_graded_lex() {
        let q = p(2, &[(1, &[0, 2]), (1, &[2, 0]), (1, &[1, 1]), (1, &[0, 1]), (1, &[1, 0]), (1, &[0, 0])]);
        let order: Vec<Vec<u32>> = q.terms().map(|(e, _)| e.0.clone()).collect();
        assert_eq!(order, vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![2, 0], vec![1, 1], vec![0, 2]]);
    }

    #[test]
    fn restriction_examples() {
        let x1x2 = p(2, &[(1, &[1, 1])]);
        let r = x1x2.restrict_univariate(&[int(1), int(1)], &[int(1), int(0)]).unwrap();
        assert_eq!(r, UnivariatePoly::from_ints(&[1, 1]));
        let r0 = x1x2.restrict_univariate(&[int(2), int(3)], &[int(0), int(0)]).unwrap();
        assert_eq!(r0, UnivariatePoly::from_ints(&[6]));
        assert!(x1x2.restrict_univariate(&[int(1)], &[int(0), int(0)]).is_err());
    }

    #[test]
    fn eval_examples() {
        let u = p(1, &[(1, &[0]), (1, &[1])]);
        assert_eq!(u.eval(&[int(1)]).unwrap(), int(2));
        let sq = p(1, &[(1, &[2])]).to_gauss();
        assert_eq!(sq.eval(&[GaussRational::i()]).unwrap(), -GaussRational::one());
        let c = sq.eval_complex(&[Complex64::new(0.0, 1.0)]).unwrap();
        assert!((c - Complex64::new(-1.0, 0.0)).norm() < 1e-15);
        assert!(u.eval(&[]).is_err());
    }

    #[test]
    fn json_round_trip_and_duplicates() {
        let q = RatPoly::from_terms(2, [(ExponentVector(vec![1, 0]), rat(1, 2)), (ExponentVector(vec![0, 0]), int(-3))]).unwrap();
        let v = q.to_json();
        assert_eq!(v["terms"][0]["e"], json!([0, 0]));
        assert_eq!(v["terms"][1]["c"], json!("1/2"));
        assert_eq!(RatPoly::from_json(&v).unwrap(), q);
        let dup = json!({"vars": 1, "terms": [{"c": "1", "e": [1]}, {"c": "2", "e": [1]}]});
        assert!(matches!(RatPoly::from_json(&dup), Err(Error::DuplicateExponent(_))));
        let gauss = json!({"vars": 1, "terms": [{"c": {"re": "0", "im": "-1"}, "e": [0]}, {"c": "1", "e": [1]}]});
        assert!(matches!(AnyPoly::from_json(&gauss).unwrap(), AnyPoly::Gauss(_)));
    }

    #[test]
    fn univariate_division_and_gcd() {
        // (t-1)^2 (t+2) = t^3 - 3t + 2
        let q = UnivariatePoly::from_ints(&[2, -3, 0, 1]);
        let g = q.gcd(&q.derivative());
        assert_eq!(g, UnivariatePoly::from_ints(&[-1, 1]));
        let (quot, rem) = q.div_rem(&g);
        assert!(rem.is_zero());
        assert_eq!(quot, UnivariatePoly::from_ints(&[-2, 1, 1]));
        let halves = UnivariatePoly::new(vec![rat(-1, 2), rat(3, 4)]);
        assert_eq!(halves.primitive(), UnivariatePoly::from_ints(&[-2, 3]));
        assert_eq!(UnivariatePoly::zero().degree(), None);
    }
}
