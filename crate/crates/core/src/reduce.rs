//! Size reduction of a monic hermitian pencil.
//!
//! Given `p(x) = det(I + sum x_i A_i)` with `N x N` matrices and
//! `p(x) = h(x + 1)` for a degree-`d` form `h`, this builds `d x d` matrices
//! `B_i` with `p(x) = det(I + sum x_i B_i)`:
//!
//! 1. `A_i` and `C0 = I - sum A_i` must be PSD, and `C0` must have rank `N - d`.
//! 2. Each matrix is split into rank-one terms `v v*`.
//! 3. `U = span(u)` from `C0` and `V = span(v)` from the `A_i` must be transversal.
//! 4. In the basis `P = [basis U | basis V]` the column matrix is block
//!    diagonal; the `V` block yields `T_i = sum m m*`, and
//!    `h(x) = det(P P*) |det M1|^2 det(sum x_i T_i)`.
//! 5. `B_i = G^{-1/2} T_i G^{-1/2}` with `G = sum T_i`.
//!
//! Eigen- and singular-value decompositions make this a floating-point
//! procedure; every tolerance is explicit in [`Tolerances`].

use nalgebra::{DMatrix, DVector};
pub use num_complex::Complex64;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::detrep::{json_usize, Representation};
use crate::scalar::Scalar;

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

/// Numerical slack for each stage. The PSD and rank thresholds scale with
/// the spectral norm of the matrix under test.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Tolerances {
    /// `tau_psd = psd * (1 + ||M||)`.
    pub psd: f64,
    /// `tau_rank = rank * max(||M||, 1)`.
    pub rank: f64,
    /// Max-entry error allowed when rebuilding a matrix from its rank-one terms.
    pub reconstruction: f64,
    /// Allowed `|c det(G) - 1|`.
    pub monic: f64,
    /// Allowed max-entry deviation from conjugate symmetry and of `sum B_i` from `I`.
    pub symmetry: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { psd: 1e-9, rank: 1e-7, reconstruction: 1e-9, monic: 1e-6, symmetry: 1e-9 }
    }
}

/// Complex matrix with an optional hermitian flag.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatMatrix {
    pub matrix: CMatrix,
    pub hermitian: bool,
}

impl FloatMatrix {
    pub fn hermitian(matrix: CMatrix) -> Self {
        FloatMatrix { matrix, hermitian: true }
    }

    pub fn from_exact(a: &crate::detrep::ExactMatrix) -> Self {
        let m = CMatrix::from_fn(a.rows(), a.cols(), |i, j| a.get(i, j).to_complex());
        FloatMatrix { matrix: m, hermitian: a.is_hermitian() }
    }

    /// Accepts exact-style entries (rational strings, `{"re","im"}`) as well
    /// as plain JSON numbers.
    pub fn from_json(v: &Value) -> Result<Self, ReduceError> {
        let bad = |m: String| ReduceError::Input(m);
        let rows = json_usize(v, "rows").map_err(|e| bad(e.to_string()))?;
        let cols = json_usize(v, "cols").map_err(|e| bad(e.to_string()))?;
        let hermitian = v.get("hermitian").and_then(Value::as_bool).unwrap_or(false);
        let data = v.get("entries").and_then(Value::as_array).ok_or_else(|| bad("matrix needs \"entries\"".into()))?;
        if data.len() != rows || data.iter().any(|r| r.as_array().is_none_or(|r| r.len() != cols)) {
            return Err(bad(format!("entries do not form a {rows}x{cols} array")));
        }
        let mut m = CMatrix::zeros(rows, cols);
        for (i, row) in data.iter().enumerate() {
            for (j, e) in row.as_array().unwrap().iter().enumerate() {
                m[(i, j)] = float_entry(e)?;
            }
        }
        let out = FloatMatrix { matrix: m, hermitian };
        if hermitian {
            let dev = max_abs(&(&out.matrix - out.matrix.adjoint()));
            if rows != cols || dev > 1e-9 * (1.0 + max_abs(&out.matrix)) {
                return Err(bad(format!("matrix flagged hermitian deviates by {dev:e}")));
            }
        }
        Ok(out)
    }
}

fn float_scalar(v: &Value) -> Result<f64, ReduceError> {
    match v {
        Value::Number(n) => n.as_f64().ok_or_else(|| ReduceError::Input(format!("bad number {n}"))),
        Value::String(_) => crate::scalar::Rational::from_json(v)
            .map(|q| crate::scalar::rational_to_f64(&q))
            .map_err(|e| ReduceError::Input(e.to_string())),
        other => Err(ReduceError::Input(format!("bad scalar {other}"))),
    }
}

fn float_entry(v: &Value) -> Result<Complex64, ReduceError> {
    match v {
        Value::Object(map) => {
            let re = map.get("re").map(float_scalar).transpose()?.unwrap_or(0.0);
            let im = map.get("im").map(float_scalar).transpose()?.unwrap_or(0.0);
            Ok(Complex64::new(re, im))
        }
        _ => float_scalar(v).map(|re| Complex64::new(re, 0.0)),
    }
}

impl Serialize for FloatMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let entries: Vec<Vec<Value>> = (0..self.matrix.nrows())
            .map(|i| {
                (0..self.matrix.ncols())
                    .map(|j| {
                        let z = self.matrix[(i, j)];
                        if z.im == 0.0 {
                            serde_json::json!(z.re)
                        } else {
                            serde_json::json!({"re": z.re, "im": z.im})
                        }
                    })
                    .collect()
            })
            .collect();
        let mut st = s.serialize_struct("FloatMatrix", 4)?;
        st.serialize_field("rows", &self.matrix.nrows())?;
        st.serialize_field("cols", &self.matrix.ncols())?;
        st.serialize_field("hermitian", &self.hermitian)?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

/// Monic pencil `I + sum x_i A_i` over complex floats.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatRepresentation {
    size: usize,
    pencil: Vec<CMatrix>,
}

impl FloatRepresentation {
    pub fn new(size: usize, pencil: Vec<CMatrix>) -> Result<Self, ReduceError> {
        if let Some(a) = pencil.iter().find(|a| a.nrows() != size || a.ncols() != size) {
            return Err(ReduceError::Input(format!("pencil matrix is {}x{}, expected {size}x{size}", a.nrows(), a.ncols())));
        }
        Ok(FloatRepresentation { size, pencil })
    }

    pub fn from_exact(rep: &Representation) -> Result<Self, ReduceError> {
        if rep.a0() != crate::detrep::ExactMatrix::identity(rep.size()) {
            return Err(ReduceError::Input("size reduction needs a monic pencil (A0 = I)".into()));
        }
        Self::new(rep.size(), rep.pencil().iter().map(|a| FloatMatrix::from_exact(a).matrix).collect())
    }

    /// Same wire format as the exact representation; entries may be floats.
    pub fn from_json(v: &Value) -> Result<Self, ReduceError> {
        let pencil = v
            .get("pencil")
            .and_then(Value::as_array)
            .ok_or_else(|| ReduceError::Input("representation needs a \"pencil\" array".into()))?
            .iter()
            .map(|m| FloatMatrix::from_json(m).map(|f| f.matrix))
            .collect::<Result<Vec<_>, _>>()?;
        let size = match v.get("size").and_then(Value::as_u64) {
            Some(m) => m as usize,
            None => pencil.first().map(|a| a.nrows()).ok_or_else(|| ReduceError::Input("empty pencil without \"size\"".into()))?,
        };
        if let Some(a0) = v.get("a0").filter(|x| !x.is_null()) {
            let a0 = FloatMatrix::from_json(a0)?.matrix;
            if a0.nrows() != size || max_abs(&(a0 - CMatrix::identity(size, size))) > 0.0 {
                return Err(ReduceError::Input("size reduction needs a monic pencil (A0 = I)".into()));
            }
        }
        Self::new(size, pencil)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn pencil(&self) -> &[CMatrix] {
        &self.pencil
    }

    /// `det(I + sum x_i A_i)`.
    pub fn eval(&self, x: &[f64]) -> Complex64 {
        pencil_det(self.size, &self.pencil, x)
    }
}

pub fn pencil_det(size: usize, pencil: &[CMatrix], x: &[f64]) -> Complex64 {
    let mut m = CMatrix::identity(size, size);
    for (a, &xi) in pencil.iter().zip(x) {
        m += a * Complex64::new(xi, 0.0);
    }
    m.determinant()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PsdTarget {
    /// `A_j`, 1-based.
    Pencil(usize),
    /// `I - sum A_j`.
    Complement,
}

#[derive(Clone, Debug, PartialEq, Error, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReduceError {
    #[error("{target:?} is not PSD: min eigenvalue {min_eigenvalue:e}")]
    NotPsd { target: PsdTarget, min_eigenvalue: f64 },
    #[error("I - sum A_j has rank {observed}, expected N - d = {expected}")]
    WrongCorank { observed: usize, expected: usize },
    #[error("rank-one terms rebuild the matrix only to {residual:e}")]
    Reconstruction { residual: f64 },
    #[error("U and V are not transversal: rank U = {rank_u}, rank V = {rank_v}, rank [U|V] = {rank_union}, N = {ambient}")]
    Transversality { rank_u: usize, rank_v: usize, rank_union: usize, ambient: usize },
    #[error("sum T_i is not positive definite: min eigenvalue {min_eigenvalue:e}")]
    SingularGram { min_eigenvalue: f64 },
    #[error("c det(G) = {value}, expected 1")]
    MonicMismatch { value: f64 },
    #[error("sum B_i deviates from I by {residual:e}")]
    SumNotIdentity { residual: f64 },
    #[error("invalid input: {0}")]
    Input(String),
}

fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Eigenpairs of a hermitian matrix, eigenvalues descending.
fn hermitian_eigen(m: &CMatrix) -> (Vec<f64>, CMatrix) {
    let n = m.nrows();
    if n == 0 {
        return (vec![], CMatrix::zeros(0, 0));
    }
    let sym = (m + m.adjoint()) * Complex64::new(0.5, 0.0);
    let eig = sym.symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = CMatrix::from_fn(n, n, |r, c| eig.eigenvectors[(r, order[c])]);
    (values, vectors)
}

fn spectral_norm_hermitian(values: &[f64]) -> f64 {
    values.iter().map(|v| v.abs()).fold(0.0, f64::max)
}

/// Per-matrix spectral data gathered in the first stage.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PreconditionReport {
    pub pencil_min_eigenvalues: Vec<f64>,
    pub complement_min_eigenvalue: f64,
    pub complement_rank: usize,
}

/// `A_j` PSD, `C0 = I - sum A_j` PSD with exactly `N - d` eigenvalues above
/// the rank threshold.
pub fn check_preconditions(rep: &FloatRepresentation, d: usize, tol: &Tolerances) -> Result<PreconditionReport, ReduceError> {
    let n = rep.size;
    if d == 0 || d > n {
        return Err(ReduceError::Input(format!("degree {d} must lie in 1..={n}")));
    }
    let mut mins = Vec::with_capacity(rep.pencil.len());
    for (j, a) in rep.pencil.iter().enumerate() {
        let (vals, _) = hermitian_eigen(a);
        let min = vals.last().copied().unwrap_or(0.0);
        if min < -tol.psd * (1.0 + spectral_norm_hermitian(&vals)) {
            return Err(ReduceError::NotPsd { target: PsdTarget::Pencil(j + 1), min_eigenvalue: min });
        }
        mins.push(min);
    }
    let c0 = complement(rep);
    let (vals, _) = hermitian_eigen(&c0);
    let norm = spectral_norm_hermitian(&vals);
    let min = vals.last().copied().unwrap_or(0.0);
    if min < -tol.psd * (1.0 + norm) {
        return Err(ReduceError::NotPsd { target: PsdTarget::Complement, min_eigenvalue: min });
    }
    let rank = vals.iter().filter(|&&v| v > tol.rank * norm.max(1.0)).count();
    if rank != n - d {
        return Err(ReduceError::WrongCorank { observed: rank, expected: n - d });
    }
    Ok(PreconditionReport { pencil_min_eigenvalues: mins, complement_min_eigenvalue: min, complement_rank: rank })
}

fn complement(rep: &FloatRepresentation) -> CMatrix {
    let mut c0 = CMatrix::identity(rep.size, rep.size);
    for a in &rep.pencil {
        c0 -= a;
    }
    c0
}

/// Columns `v = sqrt(lambda) u` over eigenpairs with `lambda` above the rank
/// threshold, so that `sum v v* = M`. Each `u` is rotated to make its first
/// entry of modulus above `1e-12` real and positive.
pub fn rank_one_split(m: &CMatrix, tol: &Tolerances) -> Result<Vec<CVector>, ReduceError> {
    let (vals, vecs) = hermitian_eigen(m);
    let norm = spectral_norm_hermitian(&vals);
    if let Some(&min) = vals.last() {
        if min < -tol.psd * (1.0 + norm) {
            return Err(ReduceError::NotPsd { target: PsdTarget::Pencil(0), min_eigenvalue: min });
        }
    }
    let mut cols = Vec::new();
    for (k, &lambda) in vals.iter().enumerate() {
        if lambda <= tol.rank * norm.max(1.0) {
            continue;
        }
        let mut u = vecs.column(k).into_owned();
        if let Some(first) = u.iter().find(|z| z.norm() > 1e-12).copied() {
            u *= first.conj() / first.norm();
        }
        cols.push(u * Complex64::new(lambda.sqrt(), 0.0));
    }
    let mut rebuilt = CMatrix::zeros(m.nrows(), m.ncols());
    for v in &cols {
        rebuilt += v * v.adjoint();
    }
    let residual = max_abs(&(rebuilt - m));
    if residual > tol.reconstruction {
        return Err(ReduceError::Reconstruction { residual });
    }
    Ok(cols)
}

fn stack(n: usize, cols: &[CVector]) -> CMatrix {
    CMatrix::from_fn(n, cols.len(), |i, j| cols[j][i])
}

/// Orthonormal basis of the column span, with the numerical rank.
fn orthonormal_basis(n: usize, cols: &[CVector], tol: &Tolerances) -> CMatrix {
    if cols.is_empty() {
        return CMatrix::zeros(n, 0);
    }
    let svd = stack(n, cols).svd(true, false);
    let smax = svd.singular_values.iter().copied().fold(0.0, f64::max);
    let u = svd.u.expect("requested U");
    let keep: Vec<usize> = (0..svd.singular_values.len())
        .filter(|&k| svd.singular_values[k] > tol.rank * smax.max(1.0))
        .collect();
    CMatrix::from_fn(n, keep.len(), |i, j| u[(i, keep[j])])
}

fn smallest_singular_value(m: &CMatrix) -> f64 {
    if m.is_empty() {
        return 1.0;
    }
    m.singular_values().iter().copied().fold(f64::INFINITY, f64::min)
}

/// Checks `rank U + rank V = rank [U|V] = N` and returns the smallest
/// singular value of `[basis U | basis V]` as a conditioning diagnostic.
pub fn transversality_check(n: usize, u_cols: &[CVector], v_cols: &[CVector], tol: &Tolerances) -> Result<f64, ReduceError> {
    let qu = orthonormal_basis(n, u_cols, tol);
    let qv = orthonormal_basis(n, v_cols, tol);
    let all: Vec<CVector> = u_cols.iter().chain(v_cols).cloned().collect();
    let rank_union = orthonormal_basis(n, &all, tol).ncols();
    let (rank_u, rank_v) = (qu.ncols(), qv.ncols());
    if rank_u + rank_v != n || rank_union != n {
        return Err(ReduceError::Transversality { rank_u, rank_v, rank_union, ambient: n });
    }
    let mut p = CMatrix::zeros(n, n);
    p.columns_mut(0, rank_u).copy_from(&qu);
    p.columns_mut(rank_u, rank_v).copy_from(&qv);
    Ok(smallest_singular_value(&p))
}

/// Output of [`build_reduced`]: `h(x) = scale * det(sum x_i T_i)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Reduced {
    pub t: Vec<CMatrix>,
    pub scale: f64,
    pub factor_counts: Vec<usize>,
    pub complement_factor_count: usize,
    pub transversality_residual: f64,
    /// Largest entry of the off-diagonal blocks of `P^{-1} B`.
    pub block_residual: f64,
    pub gram_min_eigenvalue: f64,
}

pub fn build_reduced(rep: &FloatRepresentation, d: usize, tol: &Tolerances) -> Result<Reduced, ReduceError> {
    check_preconditions(rep, d, tol)?;
    reduce_after_preconditions(rep, d, tol)
}

fn relabel(err: ReduceError, target: PsdTarget) -> ReduceError {
    match err {
        ReduceError::NotPsd { min_eigenvalue, .. } => ReduceError::NotPsd { target, min_eigenvalue },
        other => other,
    }
}

fn reduce_after_preconditions(rep: &FloatRepresentation, d: usize, tol: &Tolerances) -> Result<Reduced, ReduceError> {
    let n = rep.size;
    let u_cols = rank_one_split(&complement(rep), tol).map_err(|e| relabel(e, PsdTarget::Complement))?;
    let mut v_cols = Vec::new();
    let mut origin = Vec::new();
    let mut factor_counts = Vec::with_capacity(rep.pencil.len());
    for (i, a) in rep.pencil.iter().enumerate() {
        let cols = rank_one_split(a, tol).map_err(|e| relabel(e, PsdTarget::Pencil(i + 1)))?;
        factor_counts.push(cols.len());
        origin.extend(std::iter::repeat_n(i, cols.len()));
        v_cols.extend(cols);
    }
    let transversality_residual = transversality_check(n, &u_cols, &v_cols, tol)?;

    let k = u_cols.len();
    let qu = orthonormal_basis(n, &u_cols, tol);
    let qv = orthonormal_basis(n, &v_cols, tol);
    let mut p = CMatrix::zeros(n, n);
    p.columns_mut(0, k).copy_from(&qu);
    p.columns_mut(k, n - k).copy_from(&qv);
    let all: Vec<CVector> = u_cols.iter().chain(&v_cols).cloned().collect();
    let b = stack(n, &all);
    let coords = p.clone().lu().solve(&b).ok_or(ReduceError::Transversality {
        rank_u: qu.ncols(),
        rank_v: qv.ncols(),
        rank_union: 0,
        ambient: n,
    })?;
    let m1 = coords.view((0, 0), (k, k)).into_owned();
    let m2 = coords.view((k, k), (n - k, v_cols.len())).into_owned();
    let off = coords.view((0, k), (k, v_cols.len())).iter().chain(coords.view((k, 0), (n - k, k)).iter()).map(|z| z.norm()).fold(0.0, f64::max);

    let mut t = vec![CMatrix::zeros(d, d); rep.pencil.len()];
    for (col, &i) in origin.iter().enumerate() {
        let m = m2.column(col);
        t[i] += m * m.adjoint();
    }
    let det_m1 = if k == 0 { Complex64::new(1.0, 0.0) } else { m1.determinant() };
    let scale = (&p * p.adjoint()).determinant().re * det_m1.norm_sqr();

    let gram: CMatrix = t.iter().fold(CMatrix::zeros(d, d), |acc, ti| acc + ti);
    let (gvals, _) = hermitian_eigen(&gram);
    let gmin = gvals.last().copied().unwrap_or(0.0);
    if gmin <= tol.rank * spectral_norm_hermitian(&gvals).max(1.0) {
        return Err(ReduceError::SingularGram { min_eigenvalue: gmin });
    }
    Ok(Reduced {
        t,
        scale,
        factor_counts,
        complement_factor_count: k,
        transversality_residual,
        block_residual: off,
        gram_min_eigenvalue: gmin,
    })
}

/// Output of [`monicize`]: the pencil `B_i` and its residual diagnostics.
#[derive(Clone, Debug, PartialEq)]
pub struct Monic {
    pub b: Vec<CMatrix>,
    /// `|c det(G) - 1|`.
    pub monic_residual: f64,
    /// Max-entry deviation of `sum B_i` from `I`.
    pub sum_residual: f64,
}

/// `B_i = G^{-1/2} T_i G^{-1/2}` with `G = sum T_i`.
pub fn monicize(t: &[CMatrix], scale: f64, tol: &Tolerances) -> Result<Monic, ReduceError> {
    let d = t.first().map_or(0, |m| m.nrows());
    let gram: CMatrix = t.iter().fold(CMatrix::zeros(d, d), |acc, ti| acc + ti);
    let (vals, vecs) = hermitian_eigen(&gram);
    let gmin = vals.last().copied().unwrap_or(0.0);
    if d == 0 || gmin <= tol.rank * spectral_norm_hermitian(&vals).max(1.0) {
        return Err(ReduceError::SingularGram { min_eigenvalue: gmin });
    }
    let det_g: f64 = vals.iter().product();
    let monic_residual = (scale * det_g - 1.0).abs();
    if monic_residual > tol.monic {
        return Err(ReduceError::MonicMismatch { value: scale * det_g });
    }
    let inv_sqrt = CMatrix::from_diagonal(&DVector::from_iterator(d, vals.iter().map(|v| Complex64::new(1.0 / v.sqrt(), 0.0))));
    let g_half_inv = &vecs * inv_sqrt * vecs.adjoint();
    let b: Vec<CMatrix> = t
        .iter()
        .map(|ti| {
            let bi = &g_half_inv * ti * &g_half_inv;
            (&bi + bi.adjoint()) * Complex64::new(0.5, 0.0)
        })
        .collect();
    let sum: CMatrix = b.iter().fold(CMatrix::zeros(d, d), |acc, bi| acc + bi);
    let sum_residual = max_abs(&(sum - CMatrix::identity(d, d)));
    if sum_residual > tol.symmetry {
        return Err(ReduceError::SumNotIdentity { residual: sum_residual });
    }
    Ok(Monic { b, monic_residual, sum_residual })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    Preconditions,
    BuildReduced,
    Monicize,
    Done,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StageFailure {
    pub stage: Stage,
    pub error: ReduceError,
    pub message: String,
}

/// Everything the pipeline learned, emitted whether or not it finished.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReductionReport {
    pub input_size: usize,
    pub degree: usize,
    pub nvars: usize,
    pub tolerances: Tolerances,
    pub stage_reached: Stage,
    pub failure: Option<StageFailure>,
    pub preconditions: Option<PreconditionReport>,
    pub factor_counts: Option<Vec<usize>>,
    pub complement_factor_count: Option<usize>,
    pub transversality_residual: Option<f64>,
    pub block_residual: Option<f64>,
    pub scale: Option<f64>,
    pub reduced: Option<Vec<FloatMatrix>>,
    pub monic: Option<Vec<FloatMatrix>>,
    pub monic_residual: Option<f64>,
    pub sum_identity_residual: Option<f64>,
}

impl ReductionReport {
    pub fn succeeded(&self) -> bool {
        self.failure.is_none()
    }

    /// The reduced monic pencil, when the run completed.
    pub fn monic_pencil(&self) -> Option<FloatRepresentation> {
        let b = self.monic.as_ref()?;
        Some(FloatRepresentation { size: self.degree, pencil: b.iter().map(|m| m.matrix.clone()).collect() })
    }
}

/// Runs every stage, stopping at the first failure.
pub fn reduce(rep: &FloatRepresentation, d: usize, tol: &Tolerances) -> ReductionReport {
    let mut report = ReductionReport {
        input_size: rep.size,
        degree: d,
        nvars: rep.pencil.len(),
        tolerances: *tol,
        stage_reached: Stage::Preconditions,
        failure: None,
        preconditions: None,
        factor_counts: None,
        complement_factor_count: None,
        transversality_residual: None,
        block_residual: None,
        scale: None,
        reduced: None,
        monic: None,
        monic_residual: None,
        sum_identity_residual: None,
    };
    let fail = |report: &mut ReductionReport, stage: Stage, error: ReduceError| {
        report.failure = Some(StageFailure { stage, message: error.to_string(), error });
    };
    match check_preconditions(rep, d, tol) {
        Ok(pre) => report.preconditions = Some(pre),
        Err(e) => {
            fail(&mut report, Stage::Preconditions, e);
            return report;
        }
    }
    report.stage_reached = Stage::BuildReduced;
    let reduced = match reduce_after_preconditions(rep, d, tol) {
        Ok(r) => r,
        Err(e) => {
            fail(&mut report, Stage::BuildReduced, e);
            return report;
        }
    };
    report.factor_counts = Some(reduced.factor_counts.clone());
    report.complement_factor_count = Some(reduced.complement_factor_count);
    report.transversality_residual = Some(reduced.transversality_residual);
    report.block_residual = Some(reduced.block_residual);
    report.scale = Some(reduced.scale);
    report.reduced = Some(reduced.t.iter().cloned().map(FloatMatrix::hermitian).collect());
    report.stage_reached = Stage::Monicize;
    match monicize(&reduced.t, reduced.scale, tol) {
        Ok(m) => {
            report.monic_residual = Some(m.monic_residual);
            report.sum_identity_residual = Some(m.sum_residual);
            report.monic = Some(m.b.into_iter().map(FloatMatrix::hermitian).collect());
            report.stage_reached = Stage::Done;
        }
        Err(e) => fail(&mut report, Stage::Monicize, e),
    }
    report
}

/// Row-major real matrix.
pub fn real_matrix(rows: usize, cols: usize, data: &[f64]) -> CMatrix {
    CMatrix::from_row_iterator(rows, cols, data.iter().map(|&x| Complex64::new(x, 0.0)))
}

/// Embeds `T` as the top-left block of an `n x n` zero matrix.
pub fn pad(t: &CMatrix, n: usize) -> CMatrix {
    let mut m = CMatrix::zeros(n, n);
    m.view_mut((0, 0), (t.nrows(), t.ncols())).copy_from(t);
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn not_psd_is_caught_first() {
        let rep = FloatRepresentation::new(1, vec![real_matrix(1, 1, &[-1.0])]).unwrap();
        let err = check_preconditions(&rep, 1, &tol()).unwrap_err();
        assert_eq!(err, ReduceError::NotPsd { target: PsdTarget::Pencil(1), min_eigenvalue: -1.0 });
        let r = reduce(&rep, 1, &tol());
        assert_eq!(r.failure.unwrap().stage, Stage::Preconditions);
    }

    #[test]
    fn square_case_has_zero_complement() {
        let rep = FloatRepresentation::new(2, vec![real_matrix(2, 2, &[0.5, 0.0, 0.0, 0.5]), real_matrix(2, 2, &[0.5, 0.0, 0.0, 0.5])]).unwrap();
        let pre = check_preconditions(&rep, 2, &tol()).unwrap();
        assert_eq!(pre.complement_rank, 0);
    }

    #[test]
    fn wrong_corank() {
        let rep = FloatRepresentation::new(2, vec![real_matrix(2, 2, &[1.0, 0.0, 0.0, 0.0])]).unwrap();
        assert_eq!(check_preconditions(&rep, 2, &tol()).unwrap_err(), ReduceError::WrongCorank { observed: 1, expected: 0 });
    }

    #[test]
    fn rank_one_split_examples() {
        let id = rank_one_split(&CMatrix::identity(2, 2), &tol()).unwrap();
        assert_eq!(id.len(), 2);
        for v in &id {
            assert!((v.norm() - 1.0).abs() < 1e-12);
        }
        let vvt = real_matrix(2, 2, &[9.0, 12.0, 12.0, 16.0]);
        let cols = rank_one_split(&vvt, &tol()).unwrap();
        assert_eq!(cols.len(), 1);
        assert!((cols[0][0] - Complex64::new(3.0, 0.0)).norm() < 1e-12);
        assert!((cols[0][1] - Complex64::new(4.0, 0.0)).norm() < 1e-12);
        assert!(rank_one_split(&CMatrix::zeros(3, 3), &tol()).unwrap().is_empty());
        assert!(matches!(rank_one_split(&real_matrix(1, 1, &[-2.0]), &tol()), Err(ReduceError::NotPsd { .. })));
    }

    #[test]
    fn transversality_examples() {
        let e1 = CVector::from_vec(vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)]);
        let e2 = CVector::from_vec(vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)]);
        let res = transversality_check(2, &[e1.clone()], &[e2], &tol()).unwrap();
        assert!((res - 1.0).abs() < 1e-12);
        let f = CVector::from_vec(vec![Complex64::new(1.0, 0.0)]);
        assert!(matches!(transversality_check(1, &[f.clone()], &[f], &tol()), Err(ReduceError::Transversality { .. })));
    }

    #[test]
    fn one_variable_hand_case() {
        // A1 = diag(1, 0), d = 1: h(x) = x, so c * t = 1
        let rep = FloatRepresentation::new(2, vec![real_matrix(2, 2, &[1.0, 0.0, 0.0, 0.0])]).unwrap();
        let r = build_reduced(&rep, 1, &tol()).unwrap();
        assert_eq!(r.t[0].shape(), (1, 1));
        assert!((r.scale * r.t[0][(0, 0)].re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn monicize_examples() {
        let m = monicize(&[real_matrix(1, 1, &[4.0])], 0.25, &tol()).unwrap();
        assert!((m.b[0][(0, 0)].re - 1.0).abs() < 1e-12);
        let t = vec![real_matrix(2, 2, &[0.25, 0.0, 0.0, 0.5]), real_matrix(2, 2, &[0.75, 0.0, 0.0, 0.5])];
        let m = monicize(&t, 1.0, &tol()).unwrap();
        for (b, ti) in m.b.iter().zip(&t) {
            assert!(max_abs(&(b - ti)) < 1e-12);
        }
        assert!(matches!(monicize(&[real_matrix(1, 1, &[0.0])], 1.0, &tol()), Err(ReduceError::SingularGram { .. })));
        assert!(matches!(monicize(&[real_matrix(1, 1, &[2.0])], 1.0, &tol()), Err(ReduceError::MonicMismatch { .. })));
    }

    #[test]
    fn json_accepts_floats_and_rationals() {
        let v = serde_json::json!({"pencil": [{"rows": 1, "cols": 1, "hermitian": true, "entries": [["1/2"]]},
                                              {"rows": 1, "cols": 1, "entries": [[0.5]]}]});
        let rep = FloatRepresentation::from_json(&v).unwrap();
        assert_eq!(rep.size(), 1);
        assert_eq!(rep.pencil()[0][(0, 0)].re, 0.5);
        let nonmonic = serde_json::json!({"a0": {"rows": 1, "cols": 1, "entries": [[2]]}, "pencil": []});
        assert!(FloatRepresentation::from_json(&nonmonic).is_err());
    }
}
