//! Dense max-plus matrices.

use std::fmt;

use crate::error::{precondition, Error, Result};
use crate::scalar::{Rational, Scalar};

/// A dense `rows × cols` matrix over the max-plus semiring, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Dimension(format!(
                "matrix dimensions must be positive, got {rows}x{cols}"
            )));
        }
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Builds a matrix from integer rows; `None` stands for `ε`.
    pub fn from_ints<R: AsRef<[Option<i64>]>>(rows: &[R]) -> Result<Self> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| {
                    r.as_ref()
                        .iter()
                        .map(|v| v.map_or(Scalar::Eps, Scalar::int))
                        .collect()
                })
                .collect(),
        )
    }

    /// Panics on zero dimensions; intended for internal construction.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn filled(rows: usize, cols: usize, value: Scalar) -> Self {
        Matrix::from_fn(rows, cols, |_, _| value.clone())
    }

    /// The all-`ε` matrix.
    pub fn eps(rows: usize, cols: usize) -> Self {
        Matrix::filled(rows, cols, Scalar::Eps)
    }

    /// Tropical identity: `0` on the diagonal, `ε` elsewhere.
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { Scalar::zero() } else { Scalar::Eps })
    }

    /// Diagonal matrix with `ε` off the diagonal.
    pub fn diag(entries: &[Scalar]) -> Self {
        let n = entries.len();
        Matrix::from_fn(n, n, |i, j| if i == j { entries[i].clone() } else { Scalar::Eps })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    /// Finite value at `(i, j)`, or `None` for `ε`.
    pub fn fin(&self, i: usize, j: usize) -> Option<&Rational> {
        self.get(i, j).finite()
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Copy with entry `(i, j)` replaced.
    pub fn with_entry(&self, i: usize, j: usize, value: Scalar) -> Matrix {
        let mut m = self.clone();
        m.data[i * self.cols + j] = value;
        m
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(Scalar::is_finite)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// `a_ij = ε` whenever `a_ji ≠ ε`. This forces an `ε` diagonal.
    pub fn is_skew_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| self.get(i, j).is_eps() || self.get(j, i).is_eps())
            })
    }

    pub fn is_all_eps(&self) -> bool {
        self.data.iter().all(Scalar::is_eps)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    fn check_product(&self, other: &Matrix) -> Result<()> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    /// Max-plus product `A ⊗ B`.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_product(other)?;
        Ok(Matrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols)
                .map(|k| self.get(i, k).otimes(other.get(k, j)))
                .max()
                .unwrap_or(Scalar::Eps)
        }))
    }

    /// Min-plus product `A ⊗' B`; `ε` summands are absorbing here too.
    pub fn mul_min(&self, other: &Matrix) -> Result<Matrix> {
        self.check_product(other)?;
        Ok(Matrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols)
                .map(|k| self.get(i, k).otimes(other.get(k, j)))
                .min()
                .unwrap_or(Scalar::Eps)
        }))
    }

    /// Entrywise `A ⊕ B`.
    pub fn oplus(&self, other: &Matrix) -> Result<Matrix> {
        if self.shape() != other.shape() {
            return Err(Error::Dimension(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j).oplus(other.get(i, j))
        }))
    }

    /// Scalar product `λ ⊗ A`.
    pub fn scale(&self, lambda: &Scalar) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| lambda.otimes(self.get(i, j)))
    }

    /// Matrix–vector product `A ⊗ x`.
    pub fn apply(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        if x.len() != self.cols {
            return Err(Error::Dimension(format!(
                "{}x{} matrix applied to vector of length {}",
                self.rows,
                self.cols,
                x.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .map(|(a, b)| a.otimes(b))
                    .max()
                    .unwrap_or(Scalar::Eps)
            })
            .collect())
    }

    /// Tropical power `A^k` for `k ≥ 1`.
    pub fn power(&self, k: usize) -> Result<Matrix> {
        if !self.is_square() {
            return Err(precondition("matrix power needs a square matrix"));
        }
        if k == 0 {
            return Ok(Matrix::identity(self.rows));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Kronecker product `A ⊠ B`: block `(i, j)` is `a_ij ⊗ B`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (rb, cb) = other.shape();
        Matrix::from_fn(self.rows * rb, self.cols * cb, |r, c| {
            self.get(r / rb, c / cb).otimes(other.get(r % rb, c % cb))
        })
    }

    /// Column-major vectorisation: `[[x1, x3], [x2, x4]] ↦ (x1, x2, x3, x4)`.
    pub fn vec(&self) -> Vec<Scalar> {
        (0..self.cols)
            .flat_map(|j| (0..self.rows).map(move |i| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect()
    }

    /// Inverse of [`Matrix::vec`].
    pub fn unvec(y: &[Scalar], rows: usize, cols: usize) -> Result<Matrix> {
        if rows == 0 || cols == 0 || y.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "vector of length {} cannot be reshaped to {rows}x{cols}",
                y.len()
            )));
        }
        Ok(Matrix::from_fn(rows, cols, |i, j| y[j * rows + i].clone()))
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub(crate) fn require_square(&self, what: &str) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(precondition(format!(
                "{what} must be square, got {}x{}",
                self.rows, self.cols
            )))
        }
    }

    pub(crate) fn require_finite_symmetric(&self, what: &str) -> Result<usize> {
        let n = self.require_square(what)?;
        if !self.is_finite() {
            return Err(precondition(format!("{what} must have only finite entries")));
        }
        if !self.is_symmetric() {
            return Err(precondition(format!("{what} must be symmetric")));
        }
        Ok(n)
    }
}

impl fmt::Display for Matrix {
    /// The matrix text format: a `rows cols` header, then one line per row.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
