//! One-sided systems `A ⊗ x = b` with finite `b`.

use crate::error::{precondition, Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Rational, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneSided {
    /// The principal solution `x̄ = A♯ ⊗' b`, the greatest `x` with `A ⊗ x ≤ b`.
    pub x_bar: Vec<Rational>,
    /// `N_j`: the rows `i` with `x̄_j = b_i - a_ij`.
    pub n_sets: Vec<Vec<usize>>,
    /// Every row is covered by some `N_j`.
    pub solvable: bool,
}

impl OneSided {
    pub fn solution(&self) -> Option<&[Rational]> {
        self.solvable.then_some(self.x_bar.as_slice())
    }
}

pub fn onesided_solve(a: &Matrix, b: &[Scalar]) -> Result<OneSided> {
    if b.len() != a.rows() {
        return Err(Error::Dimension(format!(
            "b has {} entries for a matrix with {} rows",
            b.len(),
            a.rows()
        )));
    }
    let b: Vec<&Rational> = b
        .iter()
        .map(|v| v.finite().ok_or_else(|| precondition("b must have only finite entries")))
        .collect::<Result<_>>()?;
    let mut x_bar = Vec::with_capacity(a.cols());
    let mut n_sets: Vec<Vec<usize>> = Vec::with_capacity(a.cols());
    for j in 0..a.cols() {
        let candidates: Vec<(usize, Rational)> = (0..a.rows())
            .filter_map(|i| a.fin(i, j).map(|v| (i, b[i] - v)))
            .collect();
        let best = candidates
            .iter()
            .map(|(_, v)| v)
            .min()
            .ok_or_else(|| precondition(format!("column {} is entirely ε", j + 1)))?
            .clone();
        n_sets.push(candidates.iter().filter(|(_, v)| *v == best).map(|(i, _)| *i).collect());
        x_bar.push(best);
    }
    let mut covered = vec![false; a.rows()];
    for &i in n_sets.iter().flatten() {
        covered[i] = true;
    }
    Ok(OneSided {
        x_bar,
        n_sets,
        solvable: covered.iter().all(|&c| c),
    })
}
