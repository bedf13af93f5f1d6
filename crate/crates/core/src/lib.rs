//! Exact max-plus (tropical) linear algebra over `ℚ ∪ {ε}`.
//!
//! Scalars are exact rationals; `⊕` is `max` and `⊗` is `+`. The crate covers
//! congruence of symmetric matrices by generalised permutations, pseudo-minor
//! tables, skew-symmetric canonical forms, one- and two-sided linear systems,
//! generalised eigenproblems and commuting symmetric matrices.

pub mod error;
pub mod io;
pub mod matrix;
pub mod perm;
pub mod scalar;
pub mod genperm;
pub mod regularity;
pub mod monoid;
pub mod minors;
pub mod congruence;
pub mod skewsym;
pub mod maxlinear;
pub mod applications;

pub use error::{Error, Result};
pub use genperm::GenPerm;
pub use matrix::Matrix;
pub use scalar::{Rational, Scalar};
