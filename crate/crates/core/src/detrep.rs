//! Exact determinantal representations `det(A0 + x1 A1 + .. + xn An)` over
//! the Gaussian rationals, the Cauchy-Binet expansion, and rank tables of
//! subspace arrangements.

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::matroid::SubsetMask;
use crate::poly::{ExponentVector, GaussPoly, Polynomial, RatPoly};
use crate::polymat::RankTable;
use crate::scalar::{GaussRational, Rational, Scalar};

/// Determinant expansion refuses matrices larger than this by default.
pub const DET_SIZE_LIMIT: usize = 12;
/// Arrangement rank tables are limited to this many subspaces.
pub const ARRANGEMENT_LIMIT: usize = 12;

/// Dense matrix over `Q(i)`, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<GaussRational>,
    hermitian: bool,
}

impl ExactMatrix {
    /// Builds a matrix; a `hermitian` flag is verified exactly.
    pub fn new(rows: usize, cols: usize, entries: Vec<GaussRational>, hermitian: bool) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension { rows, cols, context: format!("{} entries given", entries.len()) });
        }
        let m = ExactMatrix { rows, cols, entries, hermitian: false };
        if hermitian {
            m.into_hermitian()
        } else {
            Ok(m)
        }
    }

    /// Sets the hermitian flag after checking `A = A*`.
    pub fn into_hermitian(mut self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::Dimension { rows: self.rows, cols: self.cols, context: "hermitian matrices are square".into() });
        }
        for i in 0..self.rows {
            for j in i..self.cols {
                if self.get(i, j) != &self.get(j, i).conj() {
                    return Err(Error::NotHermitian(i, j));
                }
            }
        }
        self.hermitian = true;
        Ok(self)
    }

    pub fn from_rationals(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        Self::new(rows, cols, entries.into_iter().map(GaussRational::real).collect(), false)
    }

    pub fn from_ints(rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        Self::from_rationals(rows, cols, entries.iter().map(|&v| crate::scalar::int(v)).collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, entries: vec![GaussRational::zero(); rows * cols], hermitian: rows == cols }
    }

    pub fn identity(m: usize) -> Self {
        let mut a = Self::zeros(m, m);
        for i in 0..m {
            a.entries[i * m + i] = GaussRational::one();
        }
        a
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermitian
    }

    pub fn get(&self, i: usize, j: usize) -> &GaussRational {
        &self.entries[i * self.cols + j]
    }

    pub fn column(&self, j: usize) -> Vec<GaussRational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn adjoint(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).conj());
            }
        }
        ExactMatrix { rows: self.cols, cols: self.rows, entries, hermitian: self.hermitian }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension { rows: other.rows, cols: other.cols, context: format!("left factor has {} columns", self.cols) });
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = GaussRational::zero();
                for k in 0..self.cols {
                    acc = acc + self.get(i, k).clone() * other.get(k, j).clone();
                }
                entries.push(acc);
            }
        }
        Ok(ExactMatrix { rows: self.rows, cols: other.cols, entries, hermitian: false })
    }

    /// Sum of matrices; the hermitian flag survives when both summands carry it.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Dimension { rows: other.rows, cols: other.cols, context: format!("expected {}x{}", self.rows, self.cols) });
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.clone() + b.clone()).collect();
        Ok(ExactMatrix { rows: self.rows, cols: self.cols, entries, hermitian: self.hermitian && other.hermitian })
    }

    /// `v v*` for a column vector `v`.
    pub fn outer(v: &[GaussRational]) -> Self {
        let m = v.len();
        let mut entries = Vec::with_capacity(m * m);
        for a in v {
            for b in v {
                entries.push(a.clone() * b.conj());
            }
        }
        ExactMatrix { rows: m, cols: m, entries, hermitian: true }
    }

    /// Horizontal concatenation of matrices sharing a row count.
    pub fn hstack(rows: usize, blocks: &[&ExactMatrix]) -> Result<Self> {
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        if let Some(b) = blocks.iter().find(|b| b.rows != rows) {
            return Err(Error::Dimension { rows: b.rows, cols: b.cols, context: format!("expected {rows} rows") });
        }
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for b in blocks {
                entries.extend_from_slice(&b.entries[i * b.cols..(i + 1) * b.cols]);
            }
        }
        Ok(ExactMatrix { rows, cols, entries, hermitian: false })
    }

    /// Submatrix made of the given columns, in order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            for &j in cols {
                entries.push(self.get(i, j).clone());
            }
        }
        ExactMatrix { rows: self.rows, cols: cols.len(), entries, hermitian: false }
    }

    fn to_rows(&self) -> Vec<Vec<GaussRational>> {
        self.entries.chunks(self.cols.max(1)).take(self.rows).map(<[_]>::to_vec).collect()
    }

    /// Determinant by Gaussian elimination over `Q(i)`.
    pub fn det(&self) -> Result<GaussRational> {
        if self.rows != self.cols {
            return Err(Error::Dimension { rows: self.rows, cols: self.cols, context: "determinant of a non-square matrix".into() });
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut det = GaussRational::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(GaussRational::zero());
            };
            if p != k {
                a.swap(p, k);
                det = -det;
            }
            let pivot = a[k][k].clone();
            det = det * pivot.clone();
            for i in (k + 1)..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let f = a[i][k].clone() / pivot.clone();
                for j in k..n {
                    let t = f.clone() * a[k][j].clone();
                    a[i][j] = a[i][j].clone() - t;
                }
            }
        }
        Ok(det)
    }

    /// Rank by fraction-free (Bareiss) elimination with row pivoting.
    pub fn rank(&self) -> usize {
        let mut a = self.to_rows();
        let (rows, cols) = (self.rows, self.cols);
        let mut prev = GaussRational::one();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
            a.swap(p, r);
            let pivot = a[r][c].clone();
            for i in (r + 1)..rows {
                for j in (c + 1)..cols {
                    let num = a[i][j].clone() * pivot.clone() - a[i][c].clone() * a[r][j].clone();
                    a[i][j] = num / prev.clone();
                }
                a[i][c] = GaussRational::zero();
            }
            prev = pivot;
            r += 1;
        }
        r
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .to_rows()
            .iter()
            .map(|row| Value::Array(row.iter().map(entry_json).collect()))
            .collect();
        json!({"rows": self.rows, "cols": self.cols, "hermitian": self.hermitian, "entries": rows})
    }

    /// Parses `{"rows", "cols", "hermitian"?, "entries": [[..], ..]}`.
    pub fn from_json(v: &Value) -> Result<Self> {
        let rows = json_usize(v, "rows")?;
        let cols = json_usize(v, "cols")?;
        let hermitian = v.get("hermitian").and_then(Value::as_bool).unwrap_or(false);
        let data = v
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Invalid("matrix needs an \"entries\" array".into()))?;
        if data.len() != rows {
            return Err(Error::Dimension { rows, cols, context: format!("{} rows of entries", data.len()) });
        }
        let mut entries = Vec::with_capacity(rows * cols);
        for row in data {
            let row = row.as_array().ok_or_else(|| Error::Invalid("matrix rows must be arrays".into()))?;
            if row.len() != cols {
                return Err(Error::Dimension { rows, cols, context: format!("row of length {}", row.len()) });
            }
            for e in row {
                entries.push(GaussRational::from_json(e)?);
            }
        }
        Self::new(rows, cols, entries, hermitian)
    }
}

fn entry_json(z: &GaussRational) -> Value {
    if z.is_real() {
        Rational::to_json(&z.re)
    } else {
        z.to_json()
    }
}

pub(crate) fn json_usize(v: &Value, key: &str) -> Result<usize> {
    v.get(key)
        .and_then(Value::as_u64)
        .map(|x| x as usize)
        .ok_or_else(|| Error::Invalid(format!("missing integer field {key:?}")))
}

/// `A0 + x1 A1 + .. + xn An` with `A0 = I` unless given.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation {
    m: usize,
    a0: Option<ExactMatrix>,
    pencil: Vec<ExactMatrix>,
}

impl Representation {
    pub fn new(m: usize, a0: Option<ExactMatrix>, pencil: Vec<ExactMatrix>) -> Result<Self> {
        for a in a0.iter().chain(&pencil) {
            if a.rows != m || a.cols != m {
                return Err(Error::Dimension { rows: a.rows, cols: a.cols, context: format!("pencil size is {m}") });
            }
        }
        Ok(Representation { m, a0, pencil })
    }

    /// Monic pencil `I + sum x_i A_i`; an empty pencil needs `m` explicitly.
    pub fn monic(m: usize, pencil: Vec<ExactMatrix>) -> Result<Self> {
        Self::new(m, None, pencil)
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn nvars(&self) -> usize {
        self.pencil.len()
    }

    pub fn a0(&self) -> ExactMatrix {
        self.a0.clone().unwrap_or_else(|| ExactMatrix::identity(self.m))
    }

    pub fn pencil(&self) -> &[ExactMatrix] {
        &self.pencil
    }

    pub fn is_hermitian(&self) -> bool {
        self.a0.as_ref().is_none_or(ExactMatrix::is_hermitian) && self.pencil.iter().all(ExactMatrix::is_hermitian)
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({"size": self.m, "pencil": self.pencil.iter().map(ExactMatrix::to_json).collect::<Vec<_>>()});
        if let Some(a0) = &self.a0 {
            v["a0"] = a0.to_json();
        }
        v
    }

    /// Parses `{"a0"?: matrix, "pencil": [matrix, ..], "size"?: m}`.
    pub fn from_json(v: &Value) -> Result<Self> {
        let pencil = v
            .get("pencil")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Invalid("representation needs a \"pencil\" array".into()))?
            .iter()
            .map(ExactMatrix::from_json)
            .collect::<Result<Vec<_>>>()?;
        let a0 = v.get("a0").filter(|x| !x.is_null()).map(ExactMatrix::from_json).transpose()?;
        let m = match v.get("size").and_then(Value::as_u64) {
            Some(m) => m as usize,
            None => a0
                .as_ref()
                .or(pencil.first())
                .map(|a| a.rows)
                .ok_or_else(|| Error::Invalid("empty pencil without \"size\"".into()))?,
        };
        Self::new(m, a0, pencil)
    }
}

/// Determinant of a square matrix of polynomials by dynamic programming
/// over column subsets: `f[mask]` accumulates the signed partial products
/// of the first `|mask|` rows placed in the columns of `mask`.
fn det_subset_dp<C: Scalar>(entries: &[Vec<Polynomial<C>>], nvars: usize) -> Polynomial<C> {
    let m = entries.len();
    if m == 0 {
        return Polynomial::one(nvars);
    }
    let full = (1usize << m) - 1;
    let mut f: Vec<Option<Polynomial<C>>> = vec![None; 1 << m];
    f[0] = Some(Polynomial::one(nvars));
    for mask in 0..full {
        let Some(partial) = f[mask].take() else { continue };
        if partial.is_zero() {
            continue;
        }
        let row = mask.count_ones() as usize;
        for (j, entry) in entries[row].iter().enumerate() {
            if mask >> j & 1 == 1 || entry.is_zero() {
                continue;
            }
            let mut term = partial.checked_mul(entry).expect("shared arity");
            if (mask >> (j + 1)).count_ones() % 2 == 1 {
                term = term.neg();
            }
            let slot = &mut f[mask | 1 << j];
            *slot = Some(match slot.take() {
                Some(acc) => acc.checked_add(&term).expect("shared arity"),
                None => term,
            });
        }
    }
    f[full].take().unwrap_or_else(|| Polynomial::zero(nvars))
}

fn affine_entries(rep: &Representation) -> Vec<Vec<GaussPoly>> {
    let n = rep.nvars();
    let a0 = rep.a0();
    (0..rep.m)
        .map(|i| {
            (0..rep.m)
                .map(|j| {
                    let mut terms = vec![(ExponentVector::zeros(n), a0.get(i, j).clone())];
                    for (k, a) in rep.pencil.iter().enumerate() {
                        terms.push((ExponentVector::unit(n, k), a.get(i, j).clone()));
                    }
                    GaussPoly::from_terms(n, terms).expect("lengths match")
                })
                .collect()
        })
        .collect()
}

/// Exact `det(A0 + sum x_i A_i)` with Gaussian-rational coefficients.
pub fn expand_det_affine_complex(rep: &Representation, size_limit: usize) -> Result<GaussPoly> {
    if rep.m > size_limit {
        return Err(Error::SizeBudgetExceeded { size: rep.m, limit: size_limit });
    }
    Ok(det_subset_dp(&affine_entries(rep), rep.nvars()))
}

/// Exact `det(A0 + sum x_i A_i)` for a hermitian pencil. Imaginary parts
/// must cancel exactly; any survivor is reported as an error.
pub fn expand_det_affine(rep: &Representation, size_limit: usize) -> Result<RatPoly> {
    if !rep.is_hermitian() {
        return Err(Error::NonHermitianInput);
    }
    expand_det_affine_complex(rep, size_limit)?.to_real()
}

/// `det(B Z B*) = sum_S |B(S)|^2 prod_{j in S} z_j` over the `m`-subsets
/// `S` of columns, computed minor by minor.
pub fn cauchy_binet_expand(b: &ExactMatrix) -> Result<RatPoly> {
    let (m, big_m) = (b.rows, b.cols);
    if m > big_m {
        return Err(Error::TooManyRows { rows: m, cols: big_m });
    }
    if big_m > 24 {
        return Err(Error::SizeBudgetExceeded { size: big_m, limit: 24 });
    }
    let mut terms = Vec::new();
    for mask in 0u32..1 << big_m {
        if mask.count_ones() as usize != m {
            continue;
        }
        let cols: Vec<usize> = (0..big_m).filter(|j| mask >> j & 1 == 1).collect();
        let minor = b.select_columns(&cols).det()?;
        if minor.is_zero() {
            continue;
        }
        let e = (0..big_m).map(|j| (mask >> j & 1) as u32).collect();
        terms.push((ExponentVector(e), minor.norm_sqr()));
    }
    RatPoly::from_terms(big_m, terms)
}

/// The pencil `0 + sum_j z_j b_j b_j*` whose determinant is `det(B Z B*)`.
pub fn outer_product_pencil(b: &ExactMatrix) -> Representation {
    let pencil = (0..b.cols).map(|j| ExactMatrix::outer(&b.column(j))).collect();
    Representation::new(b.rows, Some(ExactMatrix::zeros(b.rows, b.rows)), pencil).expect("outer products are square")
}

/// `values[S] = rank [G_i : i in S]` for generator blocks sharing a row count.
pub fn arrangement_rank_table(gens: &[ExactMatrix]) -> Result<RankTable> {
    let n = gens.len();
    if n > ARRANGEMENT_LIMIT {
        return Err(Error::SizeBudgetExceeded { size: n, limit: ARRANGEMENT_LIMIT });
    }
    let rows = gens.first().map_or(0, |g| g.rows);
    if let Some(g) = gens.iter().find(|g| g.rows != rows) {
        return Err(Error::Dimension { rows: g.rows, cols: g.cols, context: format!("generators have {rows} rows") });
    }
    let mut values = Vec::with_capacity(1 << n);
    for mask in 0u32..1 << n {
        let blocks: Vec<&ExactMatrix> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| &gens[i]).collect();
        values.push(ExactMatrix::hstack(rows, &blocks)?.rank() as u32);
    }
    RankTable::new(n, values)
}

/// Exact PSD test by `LDL*` with diagonal pivoting: every pivot must be a
/// nonnegative real, and once the remaining diagonal is zero the remaining
/// block must vanish.
pub fn certify_psd(a: &ExactMatrix) -> std::result::Result<(), String> {
    if !a.hermitian {
        return Err("matrix is not flagged hermitian".into());
    }
    let n = a.rows;
    let mut w = a.to_rows();
    let mut remaining: Vec<usize> = (0..n).collect();
    while !remaining.is_empty() {
        for &i in &remaining {
            if w[i][i].re.is_negative() {
                return Err(format!("negative pivot {} at index {}", w[i][i], i + 1));
            }
        }
        let Some(pos) = remaining.iter().position(|&i| !w[i][i].is_zero()) else {
            for &i in &remaining {
                for &j in &remaining {
                    if !w[i][j].is_zero() {
                        return Err(format!("zero diagonal with nonzero entry ({}, {})", i + 1, j + 1));
                    }
                }
            }
            return Ok(());
        };
        let p = remaining.remove(pos);
        let d = w[p][p].clone();
        for &i in &remaining {
            for &j in &remaining {
                let t = w[i][p].clone() * w[p][j].clone() / d.clone();
                w[i][j] = w[i][j].clone() - t;
            }
        }
    }
    Ok(())
}

/// Both sides of `rank(sum_{i in S} A_i) = deg det(I + t sum_{i in S} A_i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct RankIdentity {
    pub elimination_rank: usize,
    pub degree_rank: usize,
}

impl RankIdentity {
    pub fn rank(&self) -> usize {
        self.elimination_rank
    }
}

pub fn psd_rank_degree_rank(psd: &[ExactMatrix], s: SubsetMask) -> Result<RankIdentity> {
    let m = psd.first().map_or(0, |a| a.rows);
    s.check(psd.len())?;
    for (i, a) in psd.iter().enumerate() {
        if a.rows != m || a.cols != m {
            return Err(Error::Dimension { rows: a.rows, cols: a.cols, context: format!("expected {m}x{m}") });
        }
        certify_psd(a).map_err(|reason| Error::PsdCertificate { index: i + 1, reason })?;
    }
    let mut sum = ExactMatrix::zeros(m, m);
    for (i, a) in psd.iter().enumerate() {
        if s.contains(i + 1) {
            sum = sum.add(a)?;
        }
    }
    let elimination_rank = sum.rank();
    let rep = Representation::monic(m, vec![sum])?;
    let det = expand_det_affine(&rep, DET_SIZE_LIMIT)?;
    let degree_rank = det.total_degree().expect("det(I + tA) has constant term 1") as usize;
    if elimination_rank != degree_rank {
        return Err(Error::RankDegreeMismatch { elimination: elimination_rank, degree: degree_rank });
    }
    Ok(RankIdentity { elimination_rank, degree_rank })
}

#[derive(Clone, Debug, PartialEq)]
pub enum RepComparison {
    Equal,
    /// First monomial in canonical order where the coefficients disagree.
    Differs { monomial: Vec<u32>, expected: GaussRational, actual: GaussRational },
}

impl RepComparison {
    pub fn to_json(&self) -> Value {
        match self {
            RepComparison::Equal => json!({"equal": true}),
            RepComparison::Differs { monomial, expected, actual } => json!({
                "equal": false,
                "monomial": monomial,
                "expected": entry_json(expected),
                "actual": entry_json(actual),
            }),
        }
    }
}

/// Compares `p` with the expanded determinant of `rep`, exactly.
pub fn verify_representation(p: &GaussPoly, rep: &Representation, size_limit: usize) -> Result<RepComparison> {
    if p.nvars() != rep.nvars() {
        return Err(Error::VarCountMismatch { left: p.nvars(), right: rep.nvars() });
    }
    let det = expand_det_affine_complex(rep, size_limit)?;
    Ok(match p.first_difference(&det)? {
        None => RepComparison::Equal,
        Some((e, expected, actual)) => RepComparison::Differs { monomial: e.0, expected, actual },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn sym(m: usize, vals: &[i64]) -> ExactMatrix {
        ExactMatrix::from_ints(m, m, vals).unwrap().into_hermitian().unwrap()
    }

    fn poly(nvars: usize, terms: &[(i64, &[u32])]) -> RatPoly {
        RatPoly::from_terms(nvars, terms.iter().map(|(c, e)| (ExponentVector(e.to_vec()), int(*c)))).unwrap()
    }

    #[test]
    fn expand_examples() {
        let rep = Representation::monic(2, vec![sym(2, &[1, 0, 0, 0]), sym(2, &[0, 0, 0, 1])]).unwrap();
        let p = expand_det_affine(&rep, DET_SIZE_LIMIT).unwrap();
        assert_eq!(p, poly(2, &[(1, &[0, 0]), (1, &[1, 0]), (1, &[0, 1]), (1, &[1, 1])]));
        let swap = Representation::monic(2, vec![sym(2, &[0, 1, 1, 0])]).unwrap();
        assert_eq!(expand_det_affine(&swap, DET_SIZE_LIMIT).unwrap(), poly(1, &[(1, &[0]), (-1, &[2])]));
        let empty = Representation::monic(3, vec![]).unwrap();
        assert_eq!(expand_det_affine(&empty, DET_SIZE_LIMIT).unwrap(), RatPoly::one(0));
        let big = Representation::monic(13, vec![]).unwrap();
        assert!(matches!(expand_det_affine(&big, DET_SIZE_LIMIT), Err(Error::SizeBudgetExceeded { .. })));
    }

    #[test]
    fn non_hermitian_pencil_is_refused_for_real_output() {
        let a = ExactMatrix::from_ints(2, 2, &[0, 1, 0, 0]).unwrap();
        let rep = Representation::monic(2, vec![a]).unwrap();
        assert_eq!(expand_det_affine(&rep, DET_SIZE_LIMIT), Err(Error::NonHermitianInput));
        assert_eq!(expand_det_affine_complex(&rep, DET_SIZE_LIMIT).unwrap(), GaussPoly::one(1));
    }

    #[test]
    fn complex_hermitian_pencil_is_real() {
        let i = GaussRational::i();
        let a = ExactMatrix::new(2, 2, vec![GaussRational::one(), i.clone(), -i, int(2).into()], true).unwrap();
        let rep = Representation::monic(2, vec![a]).unwrap();
        // det [[1+x, ix], [-ix, 1+2x]] = 1 + 3x + x^2
        assert_eq!(expand_det_affine(&rep, DET_SIZE_LIMIT).unwrap(), poly(1, &[(1, &[0]), (3, &[1]), (1, &[2])]));
    }

    #[test]
    fn hermitian_flag_is_checked() {
        assert_eq!(ExactMatrix::from_ints(2, 2, &[0, 1, 2, 0]).unwrap().into_hermitian(), Err(Error::NotHermitian(0, 1)));
        let i = GaussRational::i();
        assert!(ExactMatrix::new(1, 1, vec![i], true).is_err());
    }

    #[test]
    fn cauchy_binet_examples() {
        let id = ExactMatrix::identity(2);
        assert_eq!(cauchy_binet_expand(&id).unwrap(), poly(2, &[(1, &[1, 1])]));
        let row = ExactMatrix::from_ints(1, 2, &[1, 1]).unwrap();
        assert_eq!(cauchy_binet_expand(&row).unwrap(), poly(2, &[(1, &[1, 0]), (1, &[0, 1])]));
        let tall = ExactMatrix::from_ints(2, 1, &[1, 1]).unwrap();
        assert!(matches!(cauchy_binet_expand(&tall), Err(Error::TooManyRows { .. })));
    }

    #[test]
    fn determinant_and_rank() {
        let a = ExactMatrix::from_ints(3, 3, &[2, 0, 1, 1, 1, 0, 0, 3, 1]).unwrap();
        assert_eq!(a.det().unwrap(), GaussRational::real(int(5)));
        assert_eq!(a.rank(), 3);
        let b = ExactMatrix::from_ints(3, 4, &[1, 2, 3, 4, 2, 4, 6, 8, 0, 0, 1, 1]).unwrap();
        assert_eq!(b.rank(), 2);
        assert_eq!(ExactMatrix::zeros(3, 2).rank(), 0);
    }

    #[test]
    fn arrangement_examples() {
        let e1 = ExactMatrix::from_ints(2, 1, &[1, 0]).unwrap();
        let e2 = ExactMatrix::from_ints(2, 1, &[0, 1]).unwrap();
        let s = ExactMatrix::from_ints(2, 1, &[1, 1]).unwrap();
        let t = arrangement_rank_table(&[e1, e2, s]).unwrap();
        assert_eq!(t.get(SubsetMask::from_elements(&[1, 2, 3])), 2);
        assert_eq!(t.get(SubsetMask::from_elements(&[1, 3])), 2);
        assert_eq!(t.get(SubsetMask::from_elements(&[1])), 1);
        let z = ExactMatrix::zeros(3, 2);
        assert_eq!(arrangement_rank_table(&[z.clone(), z]).unwrap(), RankTable::zero(2));
        let bad = arrangement_rank_table(&[ExactMatrix::zeros(2, 1), ExactMatrix::zeros(3, 1)]);
        assert!(matches!(bad, Err(Error::Dimension { .. })));
    }

    #[test]
    fn psd_certificates() {
        assert!(certify_psd(&sym(2, &[1, 1, 1, 1])).is_ok());
        assert!(certify_psd(&sym(2, &[1, 2, 2, 1])).is_err());
        assert!(certify_psd(&sym(2, &[0, 1, 1, 0])).is_err());
        assert!(certify_psd(&sym(2, &[-1, 0, 0, 0])).is_err());
        assert!(certify_psd(&sym(3, &[0, 0, 0, 0, 2, 1, 0, 1, 1])).is_ok());
    }

    #[test]
    fn rank_identity_examples() {
        let p = sym(2, &[1, 0, 0, 0]);
        let r = psd_rank_degree_rank(&[p.clone(), p], SubsetMask::from_elements(&[1, 2])).unwrap();
        assert_eq!(r.rank(), 1);
        let r = psd_rank_degree_rank(&[ExactMatrix::identity(2)], SubsetMask::from_elements(&[1])).unwrap();
        assert_eq!((r.elimination_rank, r.degree_rank), (2, 2));
        let bad = psd_rank_degree_rank(&[sym(2, &[0, 1, 1, 0])], SubsetMask::from_elements(&[1]));
        assert!(matches!(bad, Err(Error::PsdCertificate { index: 1, .. })));
    }

    #[test]
    fn verify_examples() {
        let rep = Representation::monic(2, vec![sym(2, &[0, 1, 1, 0])]).unwrap();
        let good = poly(1, &[(1, &[0]), (-1, &[2])]).to_gauss();
        assert_eq!(verify_representation(&good, &rep, DET_SIZE_LIMIT).unwrap(), RepComparison::Equal);
        let bad = poly(1, &[(1, &[0]), (1, &[2])]).to_gauss();
        assert_eq!(
            verify_representation(&bad, &rep, DET_SIZE_LIMIT).unwrap(),
            RepComparison::Differs { monomial: vec![2], expected: int(1).into(), actual: int(-1).into() }
        );
        assert!(verify_representation(&GaussPoly::one(2), &rep, DET_SIZE_LIMIT).is_err());
    }

    #[test]
    fn json_round_trip() {
        let i = GaussRational::i();
        let a = ExactMatrix::new(2, 2, vec![rat(1, 2).into(), i.clone(), -i, int(0).into()], true).unwrap();
        let v = a.to_json();
        assert_eq!(v["entries"][0][0], json!("1/2"));
        assert_eq!(v["entries"][0][1], json!({"re": "0", "im": "1"}));
        assert_eq!(ExactMatrix::from_json(&v).unwrap(), a);
        let rep = Representation::monic(2, vec![a]).unwrap();
        assert_eq!(Representation::from_json(&rep.to_json()).unwrap(), rep);
    }
}
