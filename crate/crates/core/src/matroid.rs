//! Matroids given by their bases, with the Vámos cube as the main fixture.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{ExponentVector, RatPoly};
use crate::scalar::{int, Rational};
use num_traits::{One, Zero};

pub const MAX_GROUND_SET: usize = 16;

/// Subset of a ground set `{1, .., n}`; element `i` is bit `i - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SubsetMask(pub u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub fn full(n: usize) -> Self {
        SubsetMask(((1u64 << n) - 1) as u32)
    }

    /// From 1-indexed element labels.
    pub fn from_elements(elems: &[usize]) -> Self {
        SubsetMask(elems.iter().fold(0, |m, &e| m | (1 << (e - 1))))
    }

    /// 1-indexed element labels, ascending.
    pub fn elements(self) -> Vec<usize> {
        (0..32).filter(|i| self.0 >> i & 1 == 1).map(|i| i + 1).collect()
    }

    pub fn contains(self, element: usize) -> bool {
        element >= 1 && self.0 >> (element - 1) & 1 == 1
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, o: Self) -> Self {
        SubsetMask(self.0 | o.0)
    }

    pub fn intersection(self, o: Self) -> Self {
        SubsetMask(self.0 & o.0)
    }

    pub fn difference(self, o: Self) -> Self {
        SubsetMask(self.0 & !o.0)
    }

    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn check(self, n: usize) -> Result<Self> {
        if n < 32 && self.0 >> n != 0 {
            return Err(Error::MaskOutOfRange { mask: self.0, n });
        }
        Ok(self)
    }

    /// Parses `"1,4,5,6"`; an empty string is the empty set.
    pub fn parse(s: &str) -> Result<Self> {
        let mut elems = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let e: usize = part.parse().map_err(|_| Error::Invalid(format!("bad element {part:?}")))?;
            if e == 0 || e > MAX_GROUND_SET {
                return Err(Error::Invalid(format!("element {e} outside 1..=16")));
            }
            elems.push(e);
        }
        Ok(Self::from_elements(&elems))
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.elements())
    }
}

/// A matroid on `{1, .., n}` stored as its set of bases.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: Vec<SubsetMask>,
}

impl Matroid {
    /// Validates cardinalities and the basis-exchange axiom by brute force.
    pub fn from_bases<I: IntoIterator<Item = SubsetMask>>(n: usize, bases: I) -> Result<Self> {
        if n > MAX_GROUND_SET {
            return Err(Error::GroundSetTooLarge(n));
        }
        let set: BTreeSet<SubsetMask> = bases.into_iter().map(|b| b.check(n)).collect::<Result<_>>()?;
        let bases: Vec<SubsetMask> = set.into_iter().collect();
        let first = *bases.first().ok_or(Error::EmptyBases)?;
        if let Some(&other) = bases.iter().find(|b| b.len() != first.len()) {
            return Err(Error::UnequalCardinality(first.elements(), other.elements()));
        }
        let lookup: std::collections::HashSet<SubsetMask> = bases.iter().copied().collect();
        for &b1 in &bases {
            for &b2 in &bases {
                for e in b1.difference(b2).elements() {
                    let without = b1.difference(SubsetMask::from_elements(&[e]));
                    let ok = b2
                        .difference(b1)
                        .elements()
                        .into_iter()
                        .any(|f| lookup.contains(&without.union(SubsetMask::from_elements(&[f]))));
                    if !ok {
                        return Err(Error::ExchangeFailure { b1: b1.elements(), b2: b2.elements(), e });
                    }
                }
            }
        }
        Ok(Matroid { n, rank: first.len() as usize, bases })
    }

    /// Uniform matroid `U_{r,n}`: every `r`-subset is a basis.
    pub fn uniform(r: usize, n: usize) -> Result<Self> {
        if r == 0 || r > n || n > MAX_GROUND_SET {
            return Err(Error::UniformBounds { r, n });
        }
        let bases: Vec<SubsetMask> =
            (0u32..1 << n).filter(|m| m.count_ones() as usize == r).map(SubsetMask).collect();
        Ok(Matroid { n, rank: r, bases })
    }

    /// The Vámos cube `V8`: all 4-subsets of `{1..8}` except the five
    /// planes `{1,2,3,4}, {1,4,5,6}, {2,3,5,6}, {1,4,7,8}, {2,3,7,8}`.
    ///
    /// Labels are arranged so that the pairs `{1,4}, {2,3}, {5,6}, {7,8}`
    /// play the roles that make `({5,6}, {7,8}, {1,4}, {2,3})` break Ingleton.
    pub fn vamos() -> Self {
        let planes: Vec<SubsetMask> = VAMOS_PLANES.iter().map(|p| SubsetMask::from_elements(p)).collect();
        let bases = (0u32..1 << 8)
            .map(SubsetMask)
            .filter(|m| m.len() == 4 && !planes.contains(m));
        Matroid::from_bases(8, bases).expect("the Vámos cube satisfies basis exchange")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank_of_matroid(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> &[SubsetMask] {
        &self.bases
    }

    pub fn is_basis(&self, s: SubsetMask) -> bool {
        self.bases.binary_search(&s).is_ok()
    }

    /// `max |S ∩ B|` over all bases `B`.
    pub fn rank(&self, s: SubsetMask) -> usize {
        self.bases.iter().map(|b| b.intersection(s).len() as usize).max().unwrap_or(0)
    }

    /// Bases generating polynomial: one squarefree monomial per basis.
    pub fn bases_polynomial(&self) -> RatPoly {
        RatPoly::from_terms(
            self.n,
            self.bases.iter().map(|b| {
                let e = (1..=self.n).map(|i| u32::from(b.contains(i))).collect();
                (ExponentVector(e), Rational::one())
            }),
        )
        .expect("exponent vectors have length n")
    }

    /// Rank read off as the degree of `t -> h_M(1 + t * 1_S)`.
    pub fn rank_via_degree(&self, s: SubsetMask) -> usize {
        self.rank_via_degree_of(&self.bases_polynomial(), s)
    }

    /// Same as [`Matroid::rank_via_degree`] with a precomputed bases polynomial.
    pub fn rank_via_degree_of(&self, h: &RatPoly, s: SubsetMask) -> usize {
        let base = vec![int(1); self.n];
        let dir: Vec<Rational> =
            (1..=self.n).map(|i| if s.contains(i) { Rational::one() } else { Rational::zero() }).collect();
        h.restrict_univariate(&base, &dir)
            .expect("lengths match")
            .degree()
            .expect("h_M(1) counts the bases and is nonzero")
    }

    pub fn to_json(&self) -> MatroidJson {
        MatroidJson { n: self.n, bases: self.bases.iter().map(|b| b.elements()).collect() }
    }

    pub fn from_json(j: &MatroidJson) -> Result<Self> {
        let mut masks = Vec::with_capacity(j.bases.len());
        for b in &j.bases {
            if let Some(&bad) = b.iter().find(|&&e| e == 0 || e > j.n) {
                return Err(Error::Invalid(format!("element {bad} outside 1..={}", j.n)));
            }
            masks.push(SubsetMask::from_elements(b));
        }
        Matroid::from_bases(j.n, masks)
    }
}

pub const VAMOS_PLANES: [[usize; 4]; 5] = [[1, 2, 3, 4], [1, 4, 5, 6], [2, 3, 5, 6], [1, 4, 7, 8], [2, 3, 7, 8]];

/// Wire form: `{"n": 8, "bases": [[1,2,3,5], ...]}` with 1-indexed elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatroidJson {
    pub n: usize,
    pub bases: Vec<Vec<usize>>,
}
