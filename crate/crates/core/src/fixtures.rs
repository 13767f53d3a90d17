//! Seeded random instances: matroids, subspace arrangements, exact PSD
//! matrices and reducible float pencils. Everything takes an explicit RNG so
//! callers control reproducibility.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;

use crate::detrep::ExactMatrix;
use crate::matroid::{Matroid, SubsetMask};
use crate::reduce::{pad, CMatrix, FloatRepresentation};
use crate::scalar::{rat, GaussRational, Rational};

/// `a / q` with `|a| <= bound` and `q` in `1..=max_den`.
pub fn small_rational(rng: &mut impl Rng, bound: i64, max_den: i64) -> Rational {
    rat(rng.random_range(-bound..=bound), rng.random_range(1..=max_den))
}

pub fn random_rational_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> ExactMatrix {
    let entries = (0..rows * cols).map(|_| small_rational(rng, 3, 4)).collect();
    ExactMatrix::from_rationals(rows, cols, entries).expect("sizes match")
}

pub fn random_gauss_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> ExactMatrix {
    let entries = (0..rows * cols)
        .map(|_| GaussRational::new(small_rational(rng, 3, 4), small_rational(rng, 3, 4)))
        .collect();
    ExactMatrix::new(rows, cols, entries, false).expect("sizes match")
}

/// Column matroid of a random integer matrix with entries in `-1..=1`;
/// small entries make dependent subsets common.
pub fn random_representable_matroid(rng: &mut impl Rng, n: usize, r: usize) -> Matroid {
    loop {
        let entries: Vec<i64> = (0..r * n).map(|_| rng.random_range(-1..=1)).collect();
        let a = ExactMatrix::from_ints(r, n, &entries).expect("sizes match");
        let rank = a.rank();
        if rank == 0 {
            continue;
        }
        let bases = (0u32..1 << n).map(SubsetMask).filter(|s| {
            s.len() as usize == rank && a.select_columns(&s.elements().iter().map(|e| e - 1).collect::<Vec<_>>()).rank() == rank
        });
        return Matroid::from_bases(n, bases.collect::<Vec<_>>()).expect("column matroids satisfy exchange");
    }
}

/// Sparse paving matroid: all `r`-subsets except a random family of
/// circuit-hyperplanes, any two of which share at most `r - 2` elements.
pub fn random_sparse_paving(rng: &mut impl Rng, n: usize, r: usize) -> Matroid {
    let all: Vec<SubsetMask> = (0u32..1 << n).map(SubsetMask).filter(|s| s.len() as usize == r).collect();
    let mut removed: Vec<SubsetMask> = Vec::new();
    for _ in 0..rng.random_range(0..=all.len() / 4) {
        let cand = all[rng.random_range(0..all.len())];
        if removed.iter().all(|h| h.intersection(cand).len() + 2 <= r as u32) {
            removed.push(cand);
        }
    }
    let bases: Vec<SubsetMask> = all.into_iter().filter(|s| !removed.contains(s)).collect();
    Matroid::from_bases(n, bases).expect("sparse paving families are matroids")
}

/// `n` subspaces of `Q^m`, each spanned by 0 to 2 random vectors.
pub fn random_arrangement(rng: &mut impl Rng, m: usize, n: usize) -> Vec<ExactMatrix> {
    (0..n)
        .map(|_| {
            let k = rng.random_range(0..=2);
            random_rational_matrix(rng, m, k)
        })
        .collect()
}

/// `sum_j v_j v_j*` over `k` random Gaussian-rational vectors: an exact PSD
/// matrix of rank at most `k`.
pub fn random_rank_one_sum(rng: &mut impl Rng, m: usize, k: usize) -> ExactMatrix {
    let v = random_gauss_matrix(rng, m, k);
    (0..k).fold(ExactMatrix::zeros(m, m), |acc, j| acc.add(&ExactMatrix::outer(&v.column(j))).expect("same size"))
}

fn random_complex(rng: &mut impl Rng, rows: usize, cols: usize) -> CMatrix {
    DMatrix::from_fn(rows, cols, |_, _| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
}

/// Haar-ish unitary from the QR factorization of a random complex matrix.
pub fn random_unitary(rng: &mut impl Rng, n: usize) -> CMatrix {
    random_complex(rng, n, n).qr().q()
}

/// `n` random PSD `d x d` matrices summing to the identity.
pub fn random_monic_pencil(rng: &mut impl Rng, d: usize, n: usize) -> Vec<CMatrix> {
    let raw: Vec<CMatrix> = (0..n)
        .map(|_| {
            let w = random_complex(rng, d, d);
            &w * w.adjoint()
        })
        .collect();
    let g: CMatrix = raw.iter().fold(CMatrix::zeros(d, d), |acc, s| acc + s);
    let eig = g.symmetric_eigen();
    let inv_sqrt = CMatrix::from_diagonal(&eig.eigenvalues.map(|l| Complex64::new(1.0 / l.sqrt(), 0.0)));
    let h = &eig.eigenvectors * inv_sqrt * eig.eigenvectors.adjoint();
    raw.iter().map(|s| &h * s * &h).collect()
}

/// A monic `d x d` pencil `T` padded to size `big_n` as `U diag(T_i, 0) U*`
/// for a random unitary `U`. Both have determinant `det(I + sum x_i T_i)`.
pub struct PaddedFixture {
    pub small: FloatRepresentation,
    pub padded: FloatRepresentation,
    pub degree: usize,
}

pub fn padded_fixture(rng: &mut impl Rng, big_n: usize, d: usize, n: usize, rotate: bool) -> PaddedFixture {
    let t = random_monic_pencil(rng, d, n);
    let u = if rotate { random_unitary(rng, big_n) } else { CMatrix::identity(big_n, big_n) };
    let padded = t.iter().map(|ti| &u * pad(ti, big_n) * u.adjoint()).collect();
    PaddedFixture {
        small: FloatRepresentation::new(d, t).expect("square"),
        padded: FloatRepresentation::new(big_n, padded).expect("square"),
        degree: d,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..5 {
            let m = random_representable_matroid(&mut rng, 6, 3);
            assert!(m.rank_of_matroid() <= 3);
            let p = random_sparse_paving(&mut rng, 6, 3);
            assert_eq!(p.rank_of_matroid(), 3);
        }
        let s = random_rank_one_sum(&mut rng, 3, 2);
        assert!(s.is_hermitian() && s.rank() <= 2);
        let t = random_monic_pencil(&mut rng, 3, 3);
        let sum: CMatrix = t.iter().fold(CMatrix::zeros(3, 3), |a, b| a + b);
        assert!((sum - CMatrix::identity(3, 3)).iter().all(|z| z.norm() < 1e-12));
    }
}
