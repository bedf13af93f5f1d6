//! Generalised permutation matrices, the invertible elements of `M_n(𝕋)`.

use std::fmt;

use num_traits::Zero;

use crate::error::{precondition, Error, Result};
use crate::matrix::Matrix;
use crate::perm;
use crate::scalar::{format_rational, Rational, Scalar};

/// A permutation `σ` with finite weights; row `i` carries weight `w_i` in
/// column `σ(i)` and `ε` everywhere else.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GenPerm {
    sigma: Vec<usize>,
    weights: Vec<Rational>,
}

impl GenPerm {
    pub fn new(sigma: Vec<usize>, weights: Vec<Rational>) -> Result<Self> {
        if sigma.is_empty() {
            return Err(Error::Dimension("empty permutation".into()));
        }
        if !perm::is_permutation(&sigma) {
            return Err(precondition(format!("{sigma:?} is not a bijection")));
        }
        if weights.len() != sigma.len() {
            return Err(Error::Dimension(format!(
                "{} weights for a permutation of size {}",
                weights.len(),
                sigma.len()
            )));
        }
        Ok(GenPerm { sigma, weights })
    }

    pub fn identity(n: usize) -> Self {
        GenPerm::permutation(perm::identity(n))
    }

    /// Pure permutation matrix (all weights `0`). Panics if `sigma` is not a bijection.
    pub fn permutation(sigma: Vec<usize>) -> Self {
        let n = sigma.len();
        GenPerm::new(sigma, vec![Rational::zero(); n]).expect("valid permutation")
    }

    /// Diagonal matrix `diag(w_1, …, w_n)`.
    pub fn diagonal(weights: Vec<Rational>) -> Self {
        let n = weights.len();
        GenPerm::new(perm::identity(n), weights).expect("valid diagonal")
    }

    /// Recognises a dense matrix with exactly one finite entry per row and column.
    pub fn from_dense(m: &Matrix) -> Result<Self> {
        let n = m.require_square("generalised permutation matrix")?;
        let mut sigma = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        for i in 0..n {
            let finite: Vec<usize> = (0..n).filter(|&j| m.get(i, j).is_finite()).collect();
            if finite.len() != 1 {
                return Err(precondition(format!(
                    "row {} has {} finite entries; a generalised permutation needs exactly one",
                    i + 1,
                    finite.len()
                )));
            }
            sigma.push(finite[0]);
            weights.push(m.fin(i, finite[0]).unwrap().clone());
        }
        if !perm::is_permutation(&sigma) {
            return Err(precondition("two rows share the same finite column"));
        }
        Ok(GenPerm { sigma, weights })
    }

    pub fn n(&self) -> usize {
        self.sigma.len()
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn is_pure_permutation(&self) -> bool {
        self.weights.iter().all(Zero::is_zero)
    }

    pub fn dense(&self) -> Matrix {
        let n = self.n();
        Matrix::from_fn(n, n, |i, j| {
            if self.sigma[i] == j {
                Scalar::Fin(self.weights[i].clone())
            } else {
                Scalar::Eps
            }
        })
    }

    /// The product `self ⊗ other`.
    pub fn compose(&self, other: &GenPerm) -> Result<GenPerm> {
        if self.n() != other.n() {
            return Err(Error::Dimension(format!(
                "cannot compose sizes {} and {}",
                self.n(),
                other.n()
            )));
        }
        let sigma = perm::compose(&other.sigma, &self.sigma);
        let weights = (0..self.n())
            .map(|i| &self.weights[i] + &other.weights[self.sigma[i]])
            .collect();
        Ok(GenPerm { sigma, weights })
    }

    /// Tropical inverse: `P ⊗ P⁻¹ = I`.
    pub fn inverse(&self) -> GenPerm {
        let sigma = perm::inverse(&self.sigma);
        let weights = sigma.iter().map(|&i| -&self.weights[i]).collect();
        GenPerm { sigma, weights }
    }

    pub fn transpose(&self) -> GenPerm {
        let sigma = perm::inverse(&self.sigma);
        let weights = sigma.iter().map(|&i| self.weights[i].clone()).collect();
        GenPerm { sigma, weights }
    }

    /// Congruence `PᵗAP`, computed from `(PᵗAP)_{σ(i)σ(j)} = a_ij + w_i + w_j`.
    pub fn congruence(&self, a: &Matrix) -> Result<Matrix> {
        let n = self.n();
        if a.shape() != (n, n) {
            return Err(Error::Dimension(format!(
                "{n}x{n} generalised permutation cannot act on {}x{}",
                a.rows(),
                a.cols()
            )));
        }
        let inv = perm::inverse(&self.sigma);
        Ok(Matrix::from_fn(n, n, |r, c| {
            let (i, j) = (inv[r], inv[c]);
            a.get(i, j).shift(&(&self.weights[i] + &self.weights[j]))
        }))
    }

    /// `P ⊗ X ⊗ Q` for dense `X`, exploiting the sparse structure.
    pub fn sandwich(&self, x: &Matrix, right: &GenPerm) -> Result<Matrix> {
        let n = self.n();
        if x.shape() != (n, n) || right.n() != n {
            return Err(Error::Dimension("sandwich operands must share one size".into()));
        }
        let inv_right = perm::inverse(&right.sigma);
        Ok(Matrix::from_fn(n, n, |i, c| {
            let k = self.sigma[i];
            let l = inv_right[c];
            x.get(k, l).shift(&(&self.weights[i] + &right.weights[l]))
        }))
    }
}

impl fmt::Display for GenPerm {
    /// `σ = (1 3 4 2); weights = (1, 2, 3, 0)` with 1-based indices.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.weights.iter().map(format_rational).collect();
        write!(
            f,
            "sigma = {}; weights = ({})",
            perm::cycle_notation(&self.sigma),
            w.join(", ")
        )
    }
}

/// The permutation `T` on `n²` positions with `T ⊗ vec(Y) = vec(Yᵗ)` (column-major `vec`).
pub fn vec_transpose_perm(n: usize) -> GenPerm {
    let mut sigma = vec![0; n * n];
    for j in 0..n {
        for i in 0..n {
            sigma[j * n + i] = i * n + j;
        }
    }
    GenPerm::permutation(sigma)
}
