//! The generalised eigenproblem `A ⊗ x = λ ⊗ B ⊗ x` with `x` not all `ε`.

use std::fmt;

use crate::congruence::{d_system_solve, pseudo_diagonal_entries, pseudo_diagonalize};
use crate::error::{precondition, Error, Result};
use crate::genperm::GenPerm;
use crate::matrix::Matrix;
use crate::maxlinear::{twosided_solve_with_supports, SupportedFamily};
use crate::regularity::is_nilpotent;
use crate::scalar::{Rational, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    SolvableWithWitness,
    UnsolvableCertified,
    NecessaryConditionViolated,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::SolvableWithWitness => "solvable-with-witness",
            Verdict::UnsolvableCertified => "unsolvable-certified",
            Verdict::NecessaryConditionViolated => "necessary-condition-violated",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenEigReport {
    pub verdict: Verdict,
    pub lambda: Option<Scalar>,
    pub x: Option<Vec<Scalar>>,
    /// When set, the witness solves the transposed pair `(Aᵗ, Bᵗ)` instead.
    pub transposed: bool,
}

impl GenEigReport {
    fn verdict(verdict: Verdict) -> Self {
        GenEigReport {
            verdict,
            lambda: None,
            x: None,
            transposed: false,
        }
    }
}

fn same_square(a: &Matrix, b: &Matrix) -> Result<usize> {
    let n = a.require_square("A")?;
    if b.shape() != (n, n) {
        return Err(Error::Dimension(format!(
            "A is {n}x{n} but B is {}x{}",
            b.rows(),
            b.cols()
        )));
    }
    Ok(n)
}

fn unit_vector(n: usize, j: usize) -> Vec<Scalar> {
    (0..n).map(|i| if i == j { Scalar::zero() } else { Scalar::Eps }).collect()
}

/// Structural certificates: finite `A` with nilpotent `B` is unsolvable; a
/// nilpotent `A` with an `ε` column `j` is solved by `λ = ε` and the unit
/// vector at `j`.
pub fn geneig_trivial_checks(a: &Matrix, b: &Matrix) -> Result<GenEigReport> {
    let n = same_square(a, b)?;
    if a.is_finite() && is_nilpotent(b)? {
        return Ok(GenEigReport::verdict(Verdict::UnsolvableCertified));
    }
    if is_nilpotent(a)? {
        let eps_col = (0..n).find(|&j| (0..n).all(|i| a.get(i, j).is_eps()));
        let eps_row = (0..n).find(|&i| (0..n).all(|j| a.get(i, j).is_eps()));
        let (j, transposed) = match (eps_col, eps_row) {
            (Some(j), _) => (j, false),
            (None, Some(i)) => (i, true),
            (None, None) => return Ok(GenEigReport::verdict(Verdict::Inconclusive)),
        };
        return Ok(GenEigReport {
            verdict: Verdict::SolvableWithWitness,
            lambda: Some(Scalar::Eps),
            x: Some(unit_vector(n, j)),
            transposed,
        });
    }
    Ok(GenEigReport::verdict(Verdict::Inconclusive))
}

/// The pseudo-diagonal reduction `D_A y = λ B̄ y` with `B̄ = PᵗBP`, `x = P ⊗ y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub d: Matrix,
    pub b_bar: Matrix,
    pub p: GenPerm,
}

impl Reduction {
    /// `x = P ⊗ y`.
    pub fn lift(&self, y: &[Scalar]) -> Result<Vec<Scalar>> {
        self.p.dense().apply(y)
    }

    /// `y = P⁻¹ ⊗ x`.
    pub fn lower(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        self.p.inverse().dense().apply(x)
    }
}

pub fn geneig_reduce(a: &Matrix, b: &Matrix, d: Option<&[Rational]>) -> Result<Reduction> {
    same_square(a, b)?;
    if !b.is_symmetric() {
        return Err(precondition("B must be symmetric"));
    }
    let d = match d {
        Some(d) => d.to_vec(),
        None => {
            d_system_solve(a)?
                .ok_or_else(|| precondition("A is not pseudo-diagonalisable"))?
                .particular
        }
    };
    let (p, dm) = pseudo_diagonalize(a, &d)?;
    let b_bar = p.congruence(b)?;
    Ok(Reduction { d: dm, b_bar, p })
}

/// Necessary condition for solvability of `(D, B)` with `D` pseudo-diagonal
/// and non-positive diagonal: no single row strictly dominates every column
/// of `B`. The condition is only asserted from order 3 on.
pub fn geneig_necessary(d: &Matrix, b: &Matrix) -> Result<bool> {
    let n = same_square(d, b)?;
    let diag = pseudo_diagonal_entries(d)
        .ok_or_else(|| precondition("D must be pseudo-diagonal (finite diagonal, zero elsewhere)"))?;
    if diag.iter().any(|v| *v > Rational::default()) {
        return Err(precondition("D must have a non-positive diagonal"));
    }
    if !b.is_symmetric() {
        return Err(precondition("B must be symmetric"));
    }
    if n < 3 {
        return Ok(true);
    }
    let dominant = (0..n).any(|r| (0..n).all(|j| (0..n).all(|i| i == r || b.get(r, j) > b.get(i, j))));
    Ok(!dominant)
}

/// Every non-trivial `x` with `A ⊗ x = λ ⊗ B ⊗ x`, grouped by support.
pub fn geneig_check_lambda(a: &Matrix, b: &Matrix, lambda: &Scalar) -> Result<Vec<SupportedFamily>> {
    same_square(a, b)?;
    twosided_solve_with_supports(a, &b.scale(lambda))
}

/// A concrete witness for `λ`: a sample of the first family, `ε` off its support.
pub fn geneig_witness(a: &Matrix, b: &Matrix, lambda: &Scalar) -> Result<Option<Vec<Scalar>>> {
    let n = same_square(a, b)?;
    Ok(geneig_check_lambda(a, b, lambda)?
        .first()
        .and_then(|f| Some(expand_support(n, f, f.family.sample_point()?))))
}

/// Places the values of a supported point into a full vector.
pub fn expand_support(n: usize, family: &SupportedFamily, values: Vec<Rational>) -> Vec<Scalar> {
    let mut x = vec![Scalar::Eps; n];
    for (&j, v) in family.support.iter().zip(values) {
        x[j] = Scalar::Fin(v);
    }
    x
}

/// Heuristic λ candidates `a_ij - b_ij` over positions where both are finite.
pub fn lambda_candidates(a: &Matrix, b: &Matrix) -> Result<Vec<Scalar>> {
    let n = same_square(a, b)?;
    let mut out: Vec<Scalar> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter_map(|(i, j)| Some(Scalar::Fin(a.fin(i, j)? - b.fin(i, j)?)))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}
