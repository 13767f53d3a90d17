//! Exact-arithmetic checks for determinantal representability: multivariate
//! polynomials, matroids and their bases polynomials, polymatroid and
//! Ingleton checks, jump systems, determinantal pencils, real-zero tests and
//! a floating-point size reduction for monic pencils.

pub mod detrep;
pub mod error;
pub mod fixtures;
pub mod jumpsys;
pub mod matroid;
pub mod pipeline;
pub mod poly;
pub mod polymat;
pub mod realcheck;
pub mod reduce;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{GaussRational, Rational, Scalar};
pub use poly::{AnyPoly, ExponentVector, GaussPoly, Polynomial, RatPoly, UnivariatePoly};
pub use matroid::{Matroid, SubsetMask};
pub use polymat::{IngletonQuadruple, IngletonReport, RankTable, ScanMode};
pub use jumpsys::LatticePointSet;
pub use detrep::{ExactMatrix, Representation};
