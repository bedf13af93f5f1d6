//! Pseudo-diagonalisation of finite symmetric matrices and the congruence
//! decision procedure.
//!
//! A finite symmetric `A` is pseudo-diagonalisable when some diagonal `P`
//! makes every off-diagonal entry of `PᵗAP` equal to `0`. The diagonal `d` of
//! the result solves `d_i + d_j = a_ii + a_jj - 2a_ij` for all `i < j`.

use crate::error::{guard, precondition, Error, Result};
use crate::genperm::GenPerm;
use crate::matrix::Matrix;
use crate::minors::cofactor;
use crate::scalar::{half, Rational, Scalar};

pub const CONGRUENCE_LIMIT: usize = 8;

/// Solution set of the d-system: `particular + t·direction`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalSolution {
    pub particular: Vec<Rational>,
    /// `1` for `n = 2`, `0` otherwise.
    pub free_dim: usize,
    /// `(+1, -1)` when `free_dim = 1`.
    pub direction: Option<Vec<Rational>>,
}

impl DiagonalSolution {
    /// Whether `d` lies in the solution set.
    pub fn contains(&self, d: &[Rational]) -> bool {
        if d.len() != self.particular.len() {
            return false;
        }
        match self.free_dim {
            0 => d == self.particular.as_slice(),
            _ => &d[0] + &d[1] == &self.particular[0] + &self.particular[1],
        }
    }
}

/// Right-hand side `e_ij = a_ii + a_jj - 2a_ij`.
fn rhs(a: &Matrix, i: usize, j: usize) -> Rational {
    let two = Rational::from_integer(2.into());
    a.fin(i, i).unwrap() + a.fin(j, j).unwrap() - two * a.fin(i, j).unwrap()
}

fn satisfies(a: &Matrix, d: &[Rational]) -> bool {
    let n = a.rows();
    d.len() == n && (0..n).all(|i| (i + 1..n).all(|j| &d[i] + &d[j] == rhs(a, i, j)))
}

/// Solves the d-system exactly; `None` means the system is inconsistent.
pub fn d_system_solve(a: &Matrix) -> Result<Option<DiagonalSolution>> {
    let n = a.require_finite_symmetric("d-system matrix")?;
    if n < 2 {
        return Err(precondition("the d-system needs n ≥ 2"));
    }
    if n == 2 {
        let each = half(&rhs(a, 0, 1));
        return Ok(Some(DiagonalSolution {
            particular: vec![each.clone(), each],
            free_dim: 1,
            direction: Some(vec![Rational::from_integer(1.into()), Rational::from_integer((-1).into())]),
        }));
    }
    let d1 = half(&(rhs(a, 0, 1) + rhs(a, 0, 2) - rhs(a, 1, 2)));
    let mut d = vec![d1.clone()];
    d.extend((1..n).map(|j| rhs(a, 0, j) - &d1));
    Ok(satisfies(a, &d).then_some(DiagonalSolution {
        particular: d,
        free_dim: 0,
        direction: None,
    }))
}

/// All cofactors over distinct quadruples vanish.
pub fn is_pseudo_diagonalizable(a: &Matrix) -> Result<bool> {
    let n = a.require_finite_symmetric("matrix")?;
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                for l in k + 1..n {
                    if [k, l].iter().any(|x| *x == i || *x == j) {
                        continue;
                    }
                    if cofactor(a, (i, j), (k, l))? != Rational::default() {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// `P = diag((d_i - a_ii) / 2)` and `D = PᵗAP`, which has diagonal `d` and
/// zero off-diagonal.
pub fn pseudo_diagonalize(a: &Matrix, d: &[Rational]) -> Result<(GenPerm, Matrix)> {
    let n = a.require_finite_symmetric("matrix")?;
    if d.len() != n {
        return Err(Error::Dimension(format!("{} diagonal values for n = {n}", d.len())));
    }
    if !satisfies(a, d) {
        return Err(precondition("d does not satisfy d_i + d_j = a_ii + a_jj - 2a_ij"));
    }
    let p = GenPerm::diagonal(
        (0..n).map(|i| half(&(&d[i] - a.fin(i, i).unwrap()))).collect(),
    );
    let dm = p.congruence(a)?;
    Ok((p, dm))
}

/// `M_A` together with the congruences linking it to `A` and to `D_A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MForm {
    /// Zero diagonal, `(2a_ij - a_ii - a_jj) / 2` off the diagonal.
    pub m: Matrix,
    /// `RᵗAR = M_A` with `R = diag(-a_ii / 2)`.
    pub from_a: GenPerm,
    /// The diagonal used for `D_A`.
    pub d: Vec<Rational>,
    /// `QᵗM_AQ = D_A` with `Q = diag(d_i / 2)`.
    pub to_d: GenPerm,
}

pub fn canonical_m_form(a: &Matrix) -> Result<MForm> {
    let n = a.require_finite_symmetric("matrix")?;
    let solution = d_system_solve(a)?
        .ok_or_else(|| precondition("matrix is not pseudo-diagonalisable"))?;
    let from_a = GenPerm::diagonal((0..n).map(|i| -half(a.fin(i, i).unwrap())).collect());
    let m = from_a.congruence(a)?;
    let to_d = GenPerm::diagonal(solution.particular.iter().map(half).collect());
    Ok(MForm {
        m,
        from_a,
        d: solution.particular,
        to_d,
    })
}

/// A generalised permutation `P` with `PᵗAP = B`, or `None`.
///
/// Permutations are tried in lexicographic order. Partial assignments are
/// pruned as soon as a cofactor of `A` on assigned indices differs from the
/// matching oriented cofactor of `B`. Candidates are always verified, so the
/// result is the lexicographically first genuine witness.
pub fn congruent(a: &Matrix, b: &Matrix) -> Result<Option<GenPerm>> {
    let n = a.require_finite_symmetric("A")?;
    let nb = b.require_finite_symmetric("B")?;
    if n != nb {
        return Err(Error::Dimension(format!("A is {n}x{n} but B is {nb}x{nb}")));
    }
    guard("congruence order", n, CONGRUENCE_LIMIT)?;

    struct Search<'a> {
        a: &'a Matrix,
        b: &'a Matrix,
        sigma: Vec<usize>,
        used: Vec<bool>,
    }

    impl Search<'_> {
        /// Cofactors touching the newest assigned index agree.
        fn consistent(&self) -> bool {
            let t = self.sigma.len() - 1;
            let s = &self.sigma;
            let m = self.sigma.len();
            for i in 0..m {
                for j in i + 1..m {
                    for k in 0..m {
                        for l in k + 1..m {
                            if ![i, j, k, l].contains(&t) {
                                continue;
                            }
                            let lhs = cofactor(self.a, (i, j), (k, l)).unwrap();
                            let rhs = cofactor(self.b, (s[i], s[j]), (s[k], s[l])).unwrap();
                            if lhs != rhs {
                                return false;
                            }
                        }
                    }
                }
            }
            true
        }

        fn run(&mut self) -> Option<GenPerm> {
            let n = self.a.rows();
            if self.sigma.len() == n {
                let weights = (0..n)
                    .map(|i| {
                        let target = self.sigma[i];
                        half(&(self.b.fin(target, target).unwrap() - self.a.fin(i, i).unwrap()))
                    })
                    .collect();
                let p = GenPerm::new(self.sigma.clone(), weights).expect("complete permutation");
                return (p.congruence(self.a).ok()? == *self.b).then_some(p);
            }
            for c in 0..n {
                if self.used[c] {
                    continue;
                }
                self.used[c] = true;
                self.sigma.push(c);
                if self.consistent() {
                    if let Some(p) = self.run() {
                        return Some(p);
                    }
                }
                self.sigma.pop();
                self.used[c] = false;
            }
            None
        }
    }

    Ok(Search {
        a,
        b,
        sigma: Vec::with_capacity(n),
        used: vec![false; n],
    }
    .run())
}

/// The finite diagonal entries of a pseudo-diagonal matrix, if `a` is one.
pub fn pseudo_diagonal_entries(a: &Matrix) -> Option<Vec<Rational>> {
    let n = a.rows();
    if !a.is_square() {
        return None;
    }
    let off_zero = (0..n).all(|i| (0..n).all(|j| i == j || *a.get(i, j) == Scalar::zero()));
    if !off_zero {
        return None;
    }
    (0..n).map(|i| a.fin(i, i).cloned()).collect()
}
