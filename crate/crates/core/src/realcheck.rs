//! Exact real-rootedness through Sturm chains, and the per-direction
//! real-zero and hyperbolicity checks built on it.

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{GaussPoly, RatPoly, UnivariatePoly};
use crate::scalar::{format_rational, rat, GaussRational, Rational};

/// `q, q', -rem(q, q'), ...` with each member scaled to a primitive integer
/// polynomial (positive content only, so signs are unchanged).
#[derive(Clone, Debug, PartialEq)]
pub struct SturmChain(pub Vec<UnivariatePoly>);

impl SturmChain {
    pub fn new(q: &UnivariatePoly) -> Self {
        let mut chain = Vec::new();
        if q.is_zero() {
            return SturmChain(chain);
        }
        chain.push(q.primitive());
        let d = q.derivative();
        if d.is_zero() {
            return SturmChain(chain);
        }
        chain.push(d.primitive());
        loop {
            let n = chain.len();
            let r = chain[n - 2].div_rem(&chain[n - 1]).1;
            if r.is_zero() {
                break;
            }
            chain.push(r.neg().primitive());
        }
        SturmChain(chain)
    }

    fn variations(signs: impl Iterator<Item = i8>) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    fn sign_at_infinity(p: &UnivariatePoly, positive: bool) -> i8 {
        let lead = p.leading().map_or(0, |c| if c.is_positive() { 1 } else { -1 });
        let odd = p.degree().unwrap_or(0) % 2 == 1;
        if positive || !odd {
            lead
        } else {
            -lead
        }
    }

    /// Number of distinct real roots.
    pub fn count_real_roots(&self) -> usize {
        let at_neg = Self::variations(self.0.iter().map(|p| Self::sign_at_infinity(p, false)));
        let at_pos = Self::variations(self.0.iter().map(|p| Self::sign_at_infinity(p, true)));
        at_neg - at_pos
    }
}

/// `q / gcd(q, q')`, primitive with positive leading coefficient.
pub fn squarefree_part(q: &UnivariatePoly) -> Result<UnivariatePoly> {
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = q.gcd(&q.derivative());
    let s = q.div_rem(&g).0.primitive();
    Ok(if s.leading().is_some_and(Signed::is_negative) { s.neg() } else { s })
}

/// True iff every complex root is real. Zero and constants qualify.
pub fn is_real_rooted(q: &UnivariatePoly) -> bool {
    let Ok(s) = squarefree_part(q) else { return true };
    let deg = s.degree().unwrap_or(0);
    deg == 0 || SturmChain::new(&s).count_real_roots() == deg
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DirectionVerdict {
    /// Direction (or sample point), as rational strings.
    pub direction: Vec<String>,
    /// Degree of the restriction; `None` when it is identically zero.
    pub degree: Option<usize>,
    pub real_rooted: bool,
}

fn verdict(direction: &[Rational], q: &UnivariatePoly) -> DirectionVerdict {
    DirectionVerdict {
        direction: direction.iter().map(format_rational).collect(),
        degree: q.degree(),
        real_rooted: is_real_rooted(q),
    }
}

/// For each direction `x`, whether `t -> p(t x)` has only real roots.
/// A verdict is exact but only covers the given directions.
pub fn rz_check(p: &RatPoly, directions: &[Vec<Rational>]) -> Result<Vec<DirectionVerdict>> {
    let origin = vec![Rational::zero(); p.nvars()];
    directions
        .par_iter()
        .map(|x| p.restrict_univariate(&origin, x).map(|q| verdict(x, &q)))
        .collect()
}

fn require_nonzero_at(h: &RatPoly, e: &[Rational]) -> Result<()> {
    if h.eval(e)?.is_zero() {
        return Err(Error::ZeroAtE);
    }
    Ok(())
}

/// For each `x`, whether `t -> h(x + t e)` has only real roots.
pub fn hyperbolicity_check(h: &RatPoly, e: &[Rational], points: &[Vec<Rational>]) -> Result<Vec<DirectionVerdict>> {
    h.homogeneous_degree()?;
    require_nonzero_at(h, e)?;
    points
        .par_iter()
        .map(|x| h.restrict_univariate(x, e).map(|q| verdict(x, &q)))
        .collect()
}

/// `deg_t h(e + t x)`.
pub fn hyperbolic_rank(h: &RatPoly, e: &[Rational], x: &[Rational]) -> Result<usize> {
    require_nonzero_at(h, e)?;
    Ok(h.restrict_univariate(e, x)?.degree().expect("h(e) != 0 keeps the restriction nonzero"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreePair {
    pub first: usize,
    pub second: usize,
}

impl DegreePair {
    pub fn agree(&self) -> bool {
        self.first == self.second
    }
}

/// Compares `deg h(e1 + t x)` with `deg h(e2 + t x)` for each `x`.
pub fn rank_e_independence(h: &RatPoly, e1: &[Rational], e2: &[Rational], xs: &[Vec<Rational>]) -> Result<Vec<DegreePair>> {
    require_nonzero_at(h, e1)?;
    require_nonzero_at(h, e2)?;
    xs.iter()
        .map(|x| Ok(DegreePair { first: hyperbolic_rank(h, e1, x)?, second: hyperbolic_rank(h, e2, x)? }))
        .collect()
}

/// Random rational directions: each component is `a / q` with
/// `a` in `{-3..3} \ {0}` and `q` in `1..=8`.
pub fn random_directions(n: usize, count: usize, seed: u64) -> Vec<Vec<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (0..n)
                .map(|_| {
                    let mut a = rng.random_range(-3i64..=2);
                    if a >= 0 {
                        a += 1;
                    }
                    rat(a, rng.random_range(1i64..=8))
                })
                .collect()
        })
        .collect()
}

/// Random points of the open positive orthant with components `a / q`,
/// `a` in `1..=5`, `q` in `1..=4`.
pub fn random_positive_points(n: usize, count: usize, rng: &mut impl Rng) -> Vec<Vec<Rational>> {
    (0..count)
        .map(|_| (0..n).map(|_| rat(rng.random_range(1i64..=5), rng.random_range(1i64..=4))).collect())
        .collect()
}

/// Denominator of the sampling grid for stability probes.
const GRID: i64 = 16;
const ZERO_THRESHOLD: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum StabilityOutcome {
    NoZeroFound { samples: usize, seed: u64, min_modulus: f64 },
    /// A grid point in the upper half-plane polydisc where `|p| < 1e-12`.
    /// `exact_zero` records the exact re-evaluation at that rational point.
    Counterexample { point: Vec<String>, modulus: f64, exact_zero: bool, seed: u64 },
}

impl StabilityOutcome {
    pub fn is_stable_so_far(&self) -> bool {
        matches!(self, StabilityOutcome::NoZeroFound { .. })
    }
}

/// Looks for zeros of `p` with every `Im x_j > 0`.
///
/// Points are drawn from the grid `(a + b i) / 16` with `Re` in `(-2, 2)`
/// and `Im` in `[1/8, 31/16]`, so every candidate is an exact Gaussian
/// rational that can be re-checked without rounding.
pub fn stability_sample(p: &GaussPoly, samples: usize, seed: u64) -> StabilityOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut min_modulus = f64::INFINITY;
    for _ in 0..samples {
        let grid: Vec<(i64, i64)> = (0..p.nvars())
            .map(|_| (rng.random_range(-2 * GRID + 1..2 * GRID), rng.random_range(2..2 * GRID)))
            .collect();
        let z: Vec<Complex64> = grid
            .iter()
            .map(|&(a, b)| Complex64::new(a as f64 / GRID as f64, b as f64 / GRID as f64))
            .collect();
        let modulus = p.eval_complex(&z).expect("arity matches").norm();
        min_modulus = min_modulus.min(modulus);
        if modulus < ZERO_THRESHOLD {
            let exact: Vec<GaussRational> =
                grid.iter().map(|&(a, b)| GaussRational::new(rat(a, GRID), rat(b, GRID))).collect();
            let exact_zero = p.eval(&exact).expect("arity matches").is_zero();
            return StabilityOutcome::Counterexample {
                point: exact.iter().map(ToString::to_string).collect(),
                modulus,
                exact_zero,
                seed,
            };
        }
    }
    StabilityOutcome::NoZeroFound { samples, seed, min_modulus }
}

/// Coefficients of `p` that are not nonnegative rationals.
pub fn negative_coefficients(p: &RatPoly) -> Vec<Vec<u32>> {
    p.terms().filter(|(_, c)| c.is_negative()).map(|(e, _)| e.0.clone()).collect()
}

/// Convenience for tests and the CLI: `1` repeated `n` times.
pub fn ones(n: usize) -> Vec<Rational> {
    vec![Rational::one(); n]
}
