//! All symmetric `X` with `A ⊗ X = X ⊗ A` for a pseudo-diagonalisable `A`.
//!
//! With `D = PᵗAP` pseudo-diagonal and `X = P Y P⁻¹`, the equation becomes
//! `D Y = Yᵗ D`, which in `y = vec(Y)` reads `(I ⊠ D) y = ((D ⊠ I) T) y`.
//! Each win sequence of that two-sided system yields a difference-bound set
//! in `y`; shifting back to `X` keeps it a difference-bound set. Symmetry
//! `X_ij = X_ji` is the equality `y_ij - y_ji = 2(p_j - p_i)`, imposed on the
//! starting set of the solver.

use std::collections::HashSet;

use rand::Rng;

use crate::congruence::{d_system_solve, pseudo_diagonalize};
use crate::error::{guard, precondition, Error, Result};
use crate::genperm::vec_transpose_perm;
use crate::matrix::Matrix;
use crate::maxlinear::{solve_by_sequence_within, Polytrope, WinSequence};
use crate::scalar::{Rational, Scalar};

pub const COMMUTE_LIMIT: usize = 4;

/// A family of symmetric commuting matrices. Variable `j * n + i` is the
/// entry `X_ij` (column-major `vec`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutingFamily {
    pub n: usize,
    pub constraints: Polytrope,
    /// The first win sequence producing this family.
    pub provenance: WinSequence,
}

impl CommutingFamily {
    pub fn instantiate(&self, values: &[Rational]) -> Result<Matrix> {
        if values.len() != self.n * self.n {
            return Err(Error::Dimension(format!("expected {} values", self.n * self.n)));
        }
        let y: Vec<Scalar> = values.iter().cloned().map(Scalar::Fin).collect();
        Matrix::unvec(&y, self.n, self.n)
    }

    pub fn sample(&self) -> Option<Matrix> {
        self.instantiate(&self.constraints.sample_point()?).ok()
    }

    pub fn random_sample<R: Rng + ?Sized>(&self, rng: &mut R, spread: i64) -> Option<Matrix> {
        self.instantiate(&self.constraints.random_point(rng, spread)?).ok()
    }

    pub fn contains(&self, x: &Matrix) -> bool {
        x.shape() == (self.n, self.n)
            && x.vec()
                .iter()
                .map(|v| v.finite().cloned())
                .collect::<Option<Vec<_>>>()
                .is_some_and(|v| self.constraints.contains(&v))
    }
}

/// The families of symmetric matrices commuting with `a`, sorted canonically.
/// `d` overrides the diagonal of the pseudo-diagonal form.
pub fn commute_symmetric(a: &Matrix, d: Option<&[Rational]>) -> Result<Vec<CommutingFamily>> {
    let n = a.require_finite_symmetric("A")?;
    guard("commutant order", n, COMMUTE_LIMIT)?;
    let d = match d {
        Some(d) => d.to_vec(),
        None => {
            d_system_solve(a)?
                .ok_or_else(|| precondition("A is not pseudo-diagonalisable"))?
                .particular
        }
    };
    let (p, dm) = pseudo_diagonalize(a, &d)?;
    let b = Matrix::identity(n).kron(&dm);
    let c = dm.kron(&Matrix::identity(n)).mul(&vec_transpose_perm(n).dense())?;
    let shift: Vec<Rational> = (0..n * n)
        .map(|v| {
            let (i, j) = (v % n, v / n);
            &p.weights()[i] - &p.weights()[j]
        })
        .collect();
    // X_ij = X_ji expressed in y, imposed before solving so that sets
    // violating symmetry are pruned early
    let mut symmetric = Polytrope::free(n * n);
    for i in 0..n {
        for j in i + 1..n {
            let (u, v) = (j * n + i, i * n + j);
            symmetric.add_equality(u, v, &shift[v] - &shift[u])?;
        }
    }
    let mut families: Vec<CommutingFamily> = Vec::new();
    let mut seen = HashSet::new();
    for (gamma, y_set) in solve_by_sequence_within(&b, &c, &symmetric)? {
        let mut constraints = Vec::new();
        for u in 0..n * n {
            for v in 0..n * n {
                if let Some(bound) = y_set.bound(u, v) {
                    constraints.push((u, v, bound + &shift[u] - &shift[v]));
                }
            }
        }
        let x_set = Polytrope::from_constraints(n * n, &constraints)?;
        if seen.insert(x_set.clone()) {
            families.push(CommutingFamily {
                n,
                constraints: x_set,
                provenance: gamma,
            });
        }
    }
    families.sort_by(|x, y| x.constraints.cmp(&y.constraints));
    Ok(families)
}

/// `A ⊗ X = X ⊗ A`, exactly.
pub fn verify_commute(a: &Matrix, x: &Matrix) -> Result<bool> {
    let n = a.require_square("A")?;
    if x.shape() != (n, n) {
        return Err(Error::Dimension(format!("X must be {n}x{n}")));
    }
    Ok(a.mul(x)? == x.mul(a)?)
}
