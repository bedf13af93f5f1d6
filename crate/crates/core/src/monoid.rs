//! The stabiliser monoid `Sol_A = {X : XᵗAX = A}`.
//!
//! Membership is decidable for any `A`; full enumeration is provided only for
//! finite diagonal `A`, whose solutions are exactly the generalised
//! permutations with weight `(a_σ(i) - a_i) / 2` in row `i`.

use std::fmt;

use crate::error::{guard, precondition, Error, Result};
use crate::genperm::GenPerm;
use crate::matrix::Matrix;
use crate::perm;
use crate::scalar::{half, Rational, Scalar};

pub const ENUMERATION_LIMIT: usize = 8;

/// `XᵗAX = A`, exactly.
pub fn sol_check(a: &Matrix, x: &Matrix) -> Result<bool> {
    let n = a.require_square("A")?;
    if x.shape() != (n, n) {
        return Err(Error::Dimension(format!(
            "X is {}x{} but A is {n}x{n}",
            x.rows(),
            x.cols()
        )));
    }
    Ok(x.transpose().mul(a)?.mul(x)? == *a)
}

fn finite_diagonal(a: &Matrix) -> Option<Vec<Rational>> {
    let n = a.rows();
    if !a.is_square() {
        return None;
    }
    let off_eps = (0..n).all(|i| (0..n).all(|j| i == j || a.get(i, j).is_eps()));
    if !off_eps {
        return None;
    }
    (0..n).map(|i| a.fin(i, i).cloned()).collect()
}

/// Every element of `Sol_A` for a finite diagonal `A`, in lexicographic order of `σ`.
pub fn sol_enumerate_diagonal(a: &Matrix) -> Result<Vec<GenPerm>> {
    let diag = finite_diagonal(a)
        .ok_or_else(|| precondition("A must be diagonal with finite diagonal and ε elsewhere"))?;
    let n = diag.len();
    guard("diagonal order", n, ENUMERATION_LIMIT)?;
    Ok(perm::all(n)
        .map(|sigma| {
            let weights = (0..n).map(|i| half(&(&diag[sigma[i]] - &diag[i]))).collect();
            GenPerm::new(sigma, weights).expect("enumerated permutation")
        })
        .collect())
}

/// The structured families of base matrices for which `Sol_A` has a closed description.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolFamily {
    /// `A = diag(a_1, …, a_n)` with finite `a_i` and `ε` elsewhere.
    DiagonalFinite,
    /// `A = I`; then `Sol_A` is the set of tropical orthogonal matrices.
    IdentityOrthogonal,
    /// A single finite `0` at position `(1, n)`, `ε` elsewhere.
    SingleCorner,
    /// Zeros on the superdiagonal, `ε` elsewhere.
    ShiftChain,
}

impl SolFamily {
    pub const ALL: [SolFamily; 4] = [
        SolFamily::DiagonalFinite,
        SolFamily::IdentityOrthogonal,
        SolFamily::SingleCorner,
        SolFamily::ShiftChain,
    ];

    /// Structural test on the base matrix.
    pub fn matches(self, a: &Matrix) -> bool {
        if !a.is_square() {
            return false;
        }
        let n = a.rows();
        let pattern = |finite_zero: &dyn Fn(usize, usize) -> bool| {
            (0..n).all(|i| {
                (0..n).all(|j| {
                    if finite_zero(i, j) {
                        *a.get(i, j) == Scalar::zero()
                    } else {
                        a.get(i, j).is_eps()
                    }
                })
            })
        };
        match self {
            SolFamily::DiagonalFinite => finite_diagonal(a).is_some(),
            SolFamily::IdentityOrthogonal => *a == Matrix::identity(n),
            SolFamily::SingleCorner => n >= 2 && pattern(&|i, j| i == 0 && j == n - 1),
            SolFamily::ShiftChain => n >= 2 && pattern(&|i, j| j == i + 1),
        }
    }

    /// First family whose pattern `a` matches.
    pub fn detect(a: &Matrix) -> Option<SolFamily> {
        SolFamily::ALL.into_iter().find(|k| k.matches(a))
    }
}

impl fmt::Display for SolFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SolFamily::DiagonalFinite => "diagonal-finite",
            SolFamily::IdentityOrthogonal => "identity-orthogonal",
            SolFamily::SingleCorner => "single-corner",
            SolFamily::ShiftChain => "shift-chain",
        })
    }
}

/// Membership of `X` in `Sol_A` via the closed description of `kind`.
pub fn sol_family_membership(a: &Matrix, x: &Matrix, kind: SolFamily) -> Result<bool> {
    if !kind.matches(a) {
        return Err(precondition(format!("A does not have the {kind} pattern")));
    }
    let n = a.rows();
    if x.shape() != (n, n) {
        return Err(Error::Dimension(format!("X must be {n}x{n}")));
    }
    Ok(match kind {
        SolFamily::DiagonalFinite => match GenPerm::from_dense(x) {
            Ok(p) => (0..n).all(|i| {
                let j = p.sigma()[i];
                p.weights()[i] == half(&(a.fin(j, j).unwrap() - a.fin(i, i).unwrap()))
            }),
            Err(_) => false,
        },
        SolFamily::IdentityOrthogonal => x.transpose().mul(x)? == Matrix::identity(n),
        SolFamily::SingleCorner => {
            let corner = match (x.fin(0, 0), x.fin(n - 1, n - 1)) {
                (Some(first), Some(last)) => first == &-last,
                _ => false,
            };
            corner
                && (1..n).all(|i| x.get(0, i).is_eps())
                && (0..n - 1).all(|i| x.get(n - 1, i).is_eps())
        }
        SolFamily::ShiftChain => {
            let diagonal = (0..n).all(|i| (0..n).all(|j| i == j || x.get(i, j).is_eps()));
            diagonal
                && (0..n - 1).all(|i| match (x.fin(i, i), x.fin(i + 1, i + 1)) {
                    (Some(u), Some(v)) => u == &-v,
                    _ => false,
                })
        }
    })
}

/// The bijection `Sol_A → Sol_B`, `X ↦ P X P⁻¹`, for `A = PᵗBP`.
#[derive(Clone, Debug)]
pub struct SolTransport {
    p: GenPerm,
    p_inv: GenPerm,
}

impl SolTransport {
    pub fn apply(&self, x: &Matrix) -> Result<Matrix> {
        self.p.sandwich(x, &self.p_inv)
    }

    /// The inverse direction `Sol_B → Sol_A`, `Y ↦ P⁻¹ Y P`.
    pub fn pull_back(&self, y: &Matrix) -> Result<Matrix> {
        self.p_inv.sandwich(y, &self.p)
    }
}

/// Builds the transport after verifying `PᵗBP = A`.
pub fn sol_transport(a: &Matrix, b: &Matrix, p: &GenPerm) -> Result<SolTransport> {
    if p.congruence(b)? != *a {
        return Err(precondition("PᵗBP must equal A"));
    }
    Ok(SolTransport {
        p: p.clone(),
        p_inv: p.inverse(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::mat;
    use crate::scalar::q;

    #[test]
    fn shift_chain_lemma_examples() {
        let a = mat("* 0 *; * * 0; * * *");
        assert!(sol_check(&a, &mat("2 * *; * -2 *; * * 2")).unwrap());
        assert!(!sol_check(&a, &mat("2 * *; * -2 *; * * 3")).unwrap());
        assert!(sol_check(&a, &Matrix::identity(3)).unwrap());
        assert_eq!(SolFamily::detect(&a), Some(SolFamily::ShiftChain));
    }

    #[test]
    fn two_by_two_diagonal_has_z2_stabiliser() {
        let a = mat("1 *; * 4");
        let sols = sol_enumerate_diagonal(&a).unwrap();
        assert_eq!(sols.len(), 2);
        assert_eq!(sols[0].dense(), Matrix::identity(2));
        assert_eq!(sols[1].dense(), mat("* 3/2; -3/2 *"));
        for s in &sols {
            assert!(sol_check(&a, &s.dense()).unwrap());
        }
    }

    #[test]
    fn constant_diagonal_gives_pure_permutations() {
        let a = Matrix::diag(&vec![Scalar::int(5); 3]);
        let sols = sol_enumerate_diagonal(&a).unwrap();
        assert_eq!(sols.len(), 6);
        assert!(sols.iter().all(GenPerm::is_pure_permutation));
    }

    #[test]
    fn enumeration_rejects_non_diagonal() {
        assert!(sol_enumerate_diagonal(&mat("1 0; * 2")).is_err());
        assert!(sol_enumerate_diagonal(&mat("1 *; * *")).is_err());
    }

    #[test]
    fn single_corner_membership() {
        let a = mat("* * 0; * * *; * * *");
        let x = mat("5 * *; 1 7 *; * * -5");
        assert!(sol_family_membership(&a, &x, SolFamily::SingleCorner).unwrap());
        assert!(sol_check(&a, &x).unwrap());
        let bad = mat("5 1 *; 1 7 *; * * -5");
        assert!(!sol_family_membership(&a, &bad, SolFamily::SingleCorner).unwrap());
        assert!(!sol_check(&a, &bad).unwrap());
    }

    #[test]
    fn identity_family() {
        let i = Matrix::identity(3);
        let p = GenPerm::permutation(vec![1, 2, 0]).dense();
        assert!(sol_family_membership(&i, &p, SolFamily::IdentityOrthogonal).unwrap());
        let w = GenPerm::new(vec![1, 2, 0], vec![q(0), q(1), q(0)]).unwrap().dense();
        assert!(!sol_family_membership(&i, &w, SolFamily::IdentityOrthogonal).unwrap());
    }

    #[test]
    fn membership_requires_matching_pattern() {
        let a = mat("1 2; 3 4");
        assert!(sol_family_membership(&a, &a, SolFamily::DiagonalFinite).is_err());
    }

    #[test]
    fn transport_identity() {
        let a = mat("1 *; * 2");
        let t = sol_transport(&a, &a, &GenPerm::identity(2)).unwrap();
        let x = mat("* 1/2; -1/2 *");
        assert_eq!(t.apply(&x).unwrap(), x);
        assert!(sol_transport(&a, &mat("2 *; * 1"), &GenPerm::identity(2)).is_err());
    }
}
