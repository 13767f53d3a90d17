//! Finite subsets of `Z^n`, the jump-system axiom, and support properties
//! used for stable polynomials.
//!
//! Everything here is brute force over pairs of points and unit steps. The
//! sets that arise in practice (supports of bases polynomials on at most
//! eight elements) have well under two hundred points.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Point = Vec<i64>;

/// Finite set of integer vectors of a common length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PointSetJson", into = "PointSetJson")]
pub struct LatticePointSet {
    dim: usize,
    points: BTreeSet<Point>,
}

#[derive(Serialize, Deserialize)]
struct PointSetJson {
    dim: usize,
    points: Vec<Point>,
}

impl TryFrom<PointSetJson> for LatticePointSet {
    type Error = Error;
    fn try_from(j: PointSetJson) -> Result<Self> {
        LatticePointSet::from_points(j.dim, j.points)
    }
}

impl From<LatticePointSet> for PointSetJson {
    fn from(s: LatticePointSet) -> Self {
        PointSetJson { dim: s.dim, points: s.points.into_iter().collect() }
    }
}

impl LatticePointSet {
    pub fn empty(dim: usize) -> Self {
        LatticePointSet { dim, points: BTreeSet::new() }
    }

    pub fn from_points<I: IntoIterator<Item = Point>>(dim: usize, points: I) -> Result<Self> {
        let mut set = BTreeSet::new();
        for p in points {
            if p.len() != dim {
                return Err(Error::LengthMismatch { expected: dim, got: p.len() });
            }
            set.insert(p);
        }
        Ok(LatticePointSet { dim, points: set })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        self.points.contains(p)
    }

    /// Points in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = &Point> {
        self.points.iter()
    }
}

/// A unit vector `sign * delta_index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub index: usize,
    pub sign: i8,
}

impl Step {
    pub fn new(index: usize, positive: bool) -> Self {
        Step { index, sign: if positive { 1 } else { -1 } }
    }

    pub fn apply(&self, p: &[i64]) -> Point {
        let mut q = p.to_vec();
        q[self.index] += self.sign as i64;
        q
    }

    /// All `2n` steps: index ascending, positive before negative.
    pub fn all(dim: usize) -> impl Iterator<Item = Step> {
        (0..dim).flat_map(|i| [Step::new(i, true), Step::new(i, false)])
    }
}

fn l1(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum()
}

/// Whether `s` moves `from` strictly closer to `to` in the 1-norm.
pub fn is_step(s: Step, from: &[i64], to: &[i64]) -> Result<bool> {
    if from.len() != to.len() {
        return Err(Error::LengthMismatch { expected: from.len(), got: to.len() });
    }
    if s.index >= from.len() {
        return Err(Error::LengthMismatch { expected: from.len(), got: s.index + 1 });
    }
    Ok(l1(&s.apply(from), to) < l1(from, to))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomViolation {
    pub alpha: Point,
    pub beta: Point,
    pub step: Step,
}

/// Exhaustive check of the two-step axiom: whenever `alpha + s` leaves the
/// set for a step `s` towards `beta`, some step `t` from `alpha + s`
/// towards `beta` must land back in the set.
pub fn check_axiom_j(set: &LatticePointSet) -> Vec<AxiomViolation> {
    let mut out = Vec::new();
    for alpha in &set.points {
        for beta in &set.points {
            if alpha == beta {
                continue;
            }
            for s in Step::all(set.dim) {
                let mid = s.apply(alpha);
                if l1(&mid, beta) >= l1(alpha, beta) || set.contains(&mid) {
                    continue;
                }
                let repaired = Step::all(set.dim).any(|t| {
                    let next = t.apply(&mid);
                    l1(&next, beta) < l1(&mid, beta) && set.contains(&next)
                });
                if !repaired {
                    out.push(AxiomViolation { alpha: alpha.clone(), beta: beta.clone(), step: s });
                }
            }
        }
    }
    out
}

fn le_product(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Elements with no strictly larger element in the product order.
pub fn maximal_elements(set: &LatticePointSet) -> Vec<&Point> {
    set.points
        .iter()
        .filter(|a| !set.points.iter().any(|b| b != *a && le_product(a, b)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstantSum {
    /// Every maximal element has this coordinate sum.
    Constant(i64),
    /// Two maximal elements with different coordinate sums.
    Witness { first: Point, second: Point },
}

pub fn maximal_constant_sum_check(set: &LatticePointSet) -> Result<ConstantSum> {
    let maxima = maximal_elements(set);
    let first = *maxima.first().ok_or(Error::EmptyPointSet)?;
    let sum = |p: &Point| p.iter().sum::<i64>();
    match maxima.iter().find(|p| sum(p) != sum(first)) {
        Some(other) => Ok(ConstantSum::Witness { first: first.clone(), second: (*other).clone() }),
        None => Ok(ConstantSum::Constant(sum(first))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalViolation {
    pub alpha: Point,
    pub beta: Point,
    pub gamma: Point,
}

/// For every comparable pair `alpha <= beta` in the set, reports each
/// lattice point of the box `[alpha, beta]` that is missing.
pub fn interval_property_check(set: &LatticePointSet) -> Vec<IntervalViolation> {
    let mut out = Vec::new();
    for alpha in &set.points {
        for beta in &set.points {
            if alpha == beta || !le_product(alpha, beta) {
                continue;
            }
            let mut gamma = alpha.clone();
            'walk: loop {
                if !set.contains(&gamma) {
                    out.push(IntervalViolation { alpha: alpha.clone(), beta: beta.clone(), gamma: gamma.clone() });
                }
                // odometer over the box, last coordinate fastest
                let mut i = set.dim;
                loop {
                    if i == 0 {
                        break 'walk;
                    }
                    i -= 1;
                    if gamma[i] < beta[i] {
                        gamma[i] += 1;
                        break;
                    }
                    gamma[i] = alpha[i];
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(dim: usize, pts: &[&[i64]]) -> LatticePointSet {
        LatticePointSet::from_points(dim, pts.iter().map(|p| p.to_vec())).unwrap()
    }

    #[test]
    fn step_examples() {
        assert!(is_step(Step::new(0, true), &[0, 0], &[1, 1]).unwrap());
        assert!(!is_step(Step::new(0, false), &[0, 0], &[1, 1]).unwrap());
        assert!(is_step(Step::new(1, true), &[1, 0], &[2, 1]).unwrap());
        assert!(is_step(Step::new(0, true), &[0], &[1, 1]).is_err());
    }

    #[test]
    fn axiom_examples() {
        let bad = set(2, &[&[0, 0], &[2, 1]]);
        let v = check_axiom_j(&bad);
        assert_eq!(v[0], AxiomViolation { alpha: vec![0, 0], beta: vec![2, 1], step: Step::new(0, true) });
        let u23 = set(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert!(check_axiom_j(&u23).is_empty());
        assert!(check_axiom_j(&set(2, &[&[3, -1]])).is_empty());
    }

    #[test]
    fn constant_sum_examples() {
        let square = set(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(maximal_constant_sum_check(&square).unwrap(), ConstantSum::Constant(2));
        let skew = set(2, &[&[2, 0], &[0, 1]]);
        assert!(matches!(maximal_constant_sum_check(&skew).unwrap(), ConstantSum::Witness { .. }));
        assert!(!check_axiom_j(&skew).is_empty());
        assert_eq!(maximal_constant_sum_check(&LatticePointSet::empty(2)), Err(Error::EmptyPointSet));
    }

    #[test]
    fn interval_examples() {
        let diag = set(2, &[&[0, 0], &[1, 1]]);
        let v = interval_property_check(&diag);
        let gammas: Vec<_> = v.iter().map(|x| x.gamma.clone()).collect();
        assert_eq!(gammas, vec![vec![0, 1], vec![1, 0]]);
        let box2 = set(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert!(interval_property_check(&box2).is_empty());
        let line = set(1, &[&[0], &[3]]);
        let gammas: Vec<_> = interval_property_check(&line).into_iter().map(|x| x.gamma).collect();
        assert_eq!(gammas, vec![vec![1], vec![2]]);
    }

    #[test]
    fn json_shape() {
        let s = set(2, &[&[1, 0], &[0, 1]]);
        let v = serde_json::to_value(&s).unwrap();
        assert_eq!(v, serde_json::json!({"dim": 2, "points": [[0, 1], [1, 0]]}));
        let bad = serde_json::json!({"dim": 2, "points": [[0]]});
        assert!(serde_json::from_value::<LatticePointSet>(bad).is_err());
    }
}
