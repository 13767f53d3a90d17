//! Integer set functions on `2^E`: polymatroid axioms, Ingleton
//! inequalities, and rank functions coming from hyperbolic polynomials and
//! from lattice supports.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jumpsys::LatticePointSet;
use crate::matroid::{Matroid, SubsetMask, MAX_GROUND_SET};
use crate::poly::RatPoly;
use crate::scalar::Rational;
use num_traits::Zero;

/// Full scans above this ground-set size are refused unless the caller
/// raises the budget.
pub const FULL_SCAN_LIMIT: usize = 5;

/// Above this size the pairwise submodularity scan switches to the
/// equivalent local form `r(S+i) + r(S+j) >= r(S+i+j) + r(S)`.
const PAIRWISE_SUBMODULAR_LIMIT: usize = 10;

/// A function `2^[n] -> N`, indexed by subset mask.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RankTableJson")]
pub struct RankTable {
    n: usize,
    values: Vec<u32>,
}

#[derive(Deserialize)]
struct RankTableJson {
    n: usize,
    values: Vec<u32>,
}

impl TryFrom<RankTableJson> for RankTable {
    type Error = Error;
    fn try_from(j: RankTableJson) -> Result<Self> {
        RankTable::new(j.n, j.values)
    }
}

impl RankTable {
    pub fn new(n: usize, values: Vec<u32>) -> Result<Self> {
        if n > MAX_GROUND_SET {
            return Err(Error::GroundSetTooLarge(n));
        }
        if values.len() != 1 << n {
            return Err(Error::RankTableSize { n, expected: 1 << n, got: values.len() });
        }
        Ok(RankTable { n, values })
    }

    pub fn from_fn(n: usize, f: impl Fn(SubsetMask) -> u32) -> Result<Self> {
        if n > MAX_GROUND_SET {
            return Err(Error::GroundSetTooLarge(n));
        }
        Ok(RankTable { n, values: (0u32..1 << n).map(|m| f(SubsetMask(m))).collect() })
    }

    pub fn zero(n: usize) -> Self {
        RankTable { n, values: vec![0; 1 << n] }
    }

    pub fn of_matroid(m: &Matroid) -> Self {
        Self::from_fn(m.n(), |s| m.rank(s) as u32).expect("matroid ground sets are within budget")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn get(&self, s: SubsetMask) -> u32 {
        self.values[s.0 as usize]
    }

    /// Pointwise multiple `N * r`.
    pub fn scale(&self, factor: u32) -> Self {
        RankTable { n: self.n, values: self.values.iter().map(|v| v * factor).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum PolymatroidViolation {
    /// `r(∅) != 0`.
    Normalization { value: u32 },
    /// `subset ⊆ superset` but `r(subset) > r(superset)`.
    Monotonicity { subset: SubsetMask, superset: SubsetMask, lower: u32, upper: u32 },
    /// `r(S ∪ T) + r(S ∩ T) > r(S) + r(T)`.
    Submodularity { s: SubsetMask, t: SubsetMask, lhs: u32, rhs: u32 },
}

/// All violations of normalization, monotonicity and submodularity.
///
/// Monotonicity is checked on covering pairs `S ⊂ S + i`, which implies it
/// for every pair. Submodularity is checked on every unordered pair of
/// incomparable sets for `n <= 10` and in local form above that.
pub fn check_polymatroid(r: &RankTable) -> Vec<PolymatroidViolation> {
    let n = r.n;
    let mut out = Vec::new();
    if r.values[0] != 0 {
        out.push(PolymatroidViolation::Normalization { value: r.values[0] });
    }
    for s in 0u32..1 << n {
        for i in 0..n {
            let bit = 1 << i;
            if s & bit == 0 {
                let (lo, hi) = (r.values[s as usize], r.values[(s | bit) as usize]);
                if lo > hi {
                    out.push(PolymatroidViolation::Monotonicity {
                        subset: SubsetMask(s),
                        superset: SubsetMask(s | bit),
                        lower: lo,
                        upper: hi,
                    });
                }
            }
        }
    }
    let mut push_sub = |s: u32, t: u32| {
        let lhs = r.values[(s | t) as usize] + r.values[(s & t) as usize];
        let rhs = r.values[s as usize] + r.values[t as usize];
        if lhs > rhs {
            out.push(PolymatroidViolation::Submodularity { s: SubsetMask(s), t: SubsetMask(t), lhs, rhs });
        }
    };
    if n <= PAIRWISE_SUBMODULAR_LIMIT {
        for s in 0u32..1 << n {
            for t in (s + 1)..1 << n {
                if s & t != s && s & t != t {
                    push_sub(s, t);
                }
            }
        }
    } else {
        for base in 0u32..1 << n {
            for i in 0..n {
                for j in (i + 1)..n {
                    let (bi, bj) = (1 << i, 1 << j);
                    if base & (bi | bj) == 0 {
                        push_sub(base | bi, base | bj);
                    }
                }
            }
        }
    }
    out
}

/// Four subsets plugged into the Ingleton inequality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IngletonQuadruple(pub [SubsetMask; 4]);

impl IngletonQuadruple {
    /// `S1 = {5,6}, S2 = {7,8}, S3 = {1,4}, S4 = {2,3}` on the Vámos labels.
    pub fn vamos() -> Self {
        IngletonQuadruple([
            SubsetMask::from_elements(&[5, 6]),
            SubsetMask::from_elements(&[7, 8]),
            SubsetMask::from_elements(&[1, 4]),
            SubsetMask::from_elements(&[2, 3]),
        ])
    }

    /// Parses `"5,6;7,8;1,4;2,3"`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(';').collect();
        if parts.len() != 4 {
            return Err(Error::Invalid(format!("quadruple needs four ';'-separated sets, got {s:?}")));
        }
        let mut sets = [SubsetMask::EMPTY; 4];
        for (slot, p) in sets.iter_mut().zip(parts) {
            *slot = SubsetMask::parse(p)?;
        }
        Ok(IngletonQuadruple(sets))
    }

    /// Representative under the symmetries `S1 <-> S2` and `S3 <-> S4`.
    pub fn canonical(self) -> Self {
        let [a, b, c, d] = self.0;
        IngletonQuadruple([a.min(b), a.max(b), c.min(d), c.max(d)])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IngletonReport {
    pub quadruple: IngletonQuadruple,
    pub lhs: u32,
    pub rhs: u32,
    /// `lhs - rhs`; positive means the inequality fails.
    pub deficit: i64,
}

impl IngletonReport {
    pub fn to_json(&self) -> serde_json::Value {
        let sets: Vec<Vec<usize>> = self.quadruple.0.iter().map(|s| s.elements()).collect();
        serde_json::json!({"quadruple": sets, "lhs": self.lhs, "rhs": self.rhs, "deficit": self.deficit})
    }
}

/// Evaluates
/// `r(12) + r(134) + r(3) + r(4) + r(234) <= r(13) + r(14) + r(23) + r(24) + r(34)`
/// where `ij` stands for `Si ∪ Sj`.
pub fn ingleton_check(r: &RankTable, q: IngletonQuadruple) -> Result<IngletonReport> {
    for s in q.0 {
        s.check(r.n)?;
    }
    let [s1, s2, s3, s4] = q.0;
    let u = |sets: &[SubsetMask]| r.get(sets.iter().fold(SubsetMask::EMPTY, |acc, s| acc.union(*s)));
    let lhs = u(&[s1, s2]) + u(&[s1, s3, s4]) + u(&[s3]) + u(&[s4]) + u(&[s2, s3, s4]);
    let rhs = u(&[s1, s3]) + u(&[s1, s4]) + u(&[s2, s3]) + u(&[s2, s4]) + u(&[s3, s4]);
    Ok(IngletonReport { quadruple: q, lhs, rhs, deficit: lhs as i64 - rhs as i64 })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanMode {
    /// Only the Vámos quadruple.
    PaperQuadruple,
    /// Pairwise disjoint nonempty sets of size at most two.
    DisjointPairs,
    /// Every quadruple of subsets.
    Full,
}

/// All quadruples with positive deficit in the chosen search space.
///
/// Quadruples are taken up to the `S1 <-> S2`, `S3 <-> S4` symmetries
/// (`S1 <= S2` and `S3 <= S4` as masks). The output order is fixed by the
/// enumeration order, independent of the thread pool.
pub fn ingleton_scan(r: &RankTable, mode: ScanMode, full_limit: usize) -> Result<Vec<IngletonReport>> {
    let n = r.n;
    let candidates: Vec<SubsetMask> = match mode {
        ScanMode::PaperQuadruple => {
            let rep = ingleton_check(r, IngletonQuadruple::vamos())?;
            return Ok(if rep.deficit > 0 { vec![rep] } else { vec![] });
        }
        ScanMode::DisjointPairs => {
            let mut c: Vec<SubsetMask> =
                (1u32..1 << n).map(SubsetMask).filter(|s| s.len() <= 2).collect();
            c.sort_by_key(|s| (s.len(), s.0));
            c
        }
        ScanMode::Full => {
            if n > full_limit {
                return Err(Error::ScanBudgetExceeded { n, limit: full_limit });
            }
            (0u32..1 << n).map(SubsetMask).collect()
        }
    };
    let disjoint = mode == ScanMode::DisjointPairs;
    let k = candidates.len();
    let found: Vec<Vec<IngletonReport>> = (0..k)
        .into_par_iter()
        .map(|i1| {
            let mut local = Vec::new();
            let s1 = candidates[i1];
            for &s2 in &candidates[i1 + usize::from(disjoint)..] {
                if disjoint && !s1.intersection(s2).is_empty() {
                    continue;
                }
                for (i3, &s3) in candidates.iter().enumerate() {
                    if disjoint && !s3.intersection(s1.union(s2)).is_empty() {
                        continue;
                    }
                    for &s4 in &candidates[i3 + usize::from(disjoint)..] {
                        if disjoint && !s4.intersection(s1.union(s2).union(s3)).is_empty() {
                            continue;
                        }
                        let rep = ingleton_check(r, IngletonQuadruple([s1, s2, s3, s4]))
                            .expect("candidates lie in the ground set");
                        if rep.deficit > 0 {
                            local.push(rep);
                        }
                    }
                }
            }
            local
        })
        .collect();
    Ok(found.into_iter().flatten().collect())
}

/// `max { sum_{i in S} alpha_i : alpha in J }`.
pub fn support_rank(j: &LatticePointSet, s: SubsetMask) -> Result<i64> {
    s.check(j.dim())?;
    j.iter()
        .map(|a| a.iter().enumerate().filter(|(i, _)| s.contains(i + 1)).map(|(_, v)| v).sum::<i64>())
        .max()
        .ok_or(Error::EmptyPointSet)
}

/// Rank table of `S -> deg_t h(e + t * sum_{i in S} e_i)`.
pub fn hyperbolic_rank_table(h: &RatPoly, vectors: &[Vec<Rational>], e: &[Rational]) -> Result<RankTable> {
    let n = vectors.len();
    if n > MAX_GROUND_SET {
        return Err(Error::GroundSetTooLarge(n));
    }
    if e.len() != h.nvars() {
        return Err(Error::LengthMismatch { expected: h.nvars(), got: e.len() });
    }
    if let Some(v) = vectors.iter().find(|v| v.len() != h.nvars()) {
        return Err(Error::LengthMismatch { expected: h.nvars(), got: v.len() });
    }
    if h.eval(e)?.is_zero() {
        return Err(Error::ZeroAtE);
    }
    let values: Result<Vec<u32>> = (0u32..1 << n)
        .into_par_iter()
        .map(|m| {
            let mut dir = vec![Rational::zero(); h.nvars()];
            for (i, v) in vectors.iter().enumerate() {
                if m >> i & 1 == 1 {
                    for (d, x) in dir.iter_mut().zip(v) {
                        *d += x;
                    }
                }
            }
            let q = h.restrict_univariate(e, &dir)?;
            Ok(q.degree().expect("restriction at t = 0 is h(e) != 0") as u32)
        })
        .collect();
    RankTable::new(n, values?)
}

/// The standard basis `delta_1, .., delta_n` as rational vectors.
pub fn standard_basis(n: usize) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { crate::scalar::int(1) } else { Rational::zero() }).collect())
        .collect()
}
