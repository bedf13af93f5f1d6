//! Splitting into symmetric and skew-symmetric parts, and canonical forms of
//! skew-symmetric generalised permutation matrices.
//!
//! Here a matrix is skew-symmetric when `a_ij = ε` whenever `a_ji ≠ ε`.

use crate::error::{precondition, Result};
use crate::genperm::GenPerm;
use crate::matrix::Matrix;
use crate::perm;
use crate::regularity::frobenius_normal_form;
use crate::scalar::{half, Rational, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPair {
    pub s: Matrix,
    pub u: Matrix,
    /// No other symmetric/skew pair sums to the same matrix; fails exactly
    /// when some finite off-diagonal pair is tied.
    pub unique: bool,
}

/// `A = S ⊕ U`: the larger of each off-diagonal pair goes to `U`, the smaller
/// to both positions of `S`; ties and the diagonal stay in `S`.
pub fn split(a: &Matrix) -> Result<SplitPair> {
    let n = a.require_square("matrix to split")?;
    let mut s = a.clone();
    let mut u = Matrix::eps(n, n);
    let mut unique = true;
    for i in 0..n {
        for j in i + 1..n {
            let (x, y) = (a.get(i, j), a.get(j, i));
            match x.cmp(y) {
                std::cmp::Ordering::Equal => unique &= x.is_eps(),
                std::cmp::Ordering::Greater => {
                    u = u.with_entry(i, j, x.clone());
                    s = s.with_entry(i, j, y.clone());
                }
                std::cmp::Ordering::Less => {
                    u = u.with_entry(j, i, y.clone());
                    s = s.with_entry(j, i, x.clone());
                }
            }
        }
    }
    Ok(SplitPair { s, u, unique })
}

/// A congruence `PᵗAP = C` onto the zero-weight permutation matrix of `tau`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewForm {
    pub p: GenPerm,
    /// Canonical representative of the cycle type.
    pub tau: Vec<usize>,
    pub c: Matrix,
}

/// Cycles sorted by decreasing length (ties by smallest element) and the
/// canonical permutation laying them out on consecutive integers.
fn canonical_layout(sigma: &[usize]) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut cycles = perm::cycles(sigma);
    cycles.sort_by(|x, y| y.len().cmp(&x.len()).then(x[0].cmp(&y[0])));
    let mut tau = vec![0; sigma.len()];
    let mut start = 0;
    for c in &cycles {
        let len = c.len();
        for t in 0..len {
            tau[start + t] = start + (t + 1) % len;
        }
        start += len;
    }
    (cycles, tau)
}

/// Solves `x_t + x_{t+1} = e_t` around a cycle of length `L`. Odd cycles have
/// a unique solution; even cycles are solvable only when the alternating sum
/// of `e` vanishes, and then `x_0 = 0` is chosen.
fn solve_cycle(e: &[Rational]) -> Option<Vec<Rational>> {
    let len = e.len();
    let alternating = e
        .iter()
        .enumerate()
        .fold(Rational::default(), |acc, (t, v)| if t % 2 == 0 { acc + v } else { acc - v });
    let x0 = if len % 2 == 1 {
        half(&alternating)
    } else if alternating == Rational::default() {
        Rational::default()
    } else {
        return None;
    };
    let mut x = vec![x0];
    for t in 0..len - 1 {
        let next = &e[t] - &x[t];
        x.push(next);
    }
    (&x[len - 1] + &x[0] == e[len - 1]).then_some(x)
}

/// Canonical form of an invertible skew-symmetric matrix of odd order.
/// Returns `None` when the weight system has no solution.
pub fn skew_canonicalize(a: &Matrix) -> Result<Option<SkewForm>> {
    let n = a.require_square("skew-symmetric matrix")?;
    let g = GenPerm::from_dense(a)?;
    if !a.is_skew_symmetric() {
        return Err(precondition("matrix is not skew-symmetric"));
    }
    if n % 2 == 0 {
        return Err(precondition(format!("order {n} is even")));
    }
    let sigma = g.sigma();
    if let Some(i) = (0..n).find(|&i| sigma[i] == i) {
        return Err(precondition(format!("σ fixes {}", i + 1)));
    }
    let (cycles, tau) = canonical_layout(sigma);
    let mut pi = vec![0; n];
    let mut weights = vec![Rational::default(); n];
    let mut start = 0;
    for c in &cycles {
        let e: Vec<Rational> = c.iter().map(|&i| -&g.weights()[i]).collect();
        let Some(x) = solve_cycle(&e) else {
            return Ok(None);
        };
        for (t, &i) in c.iter().enumerate() {
            pi[i] = start + t;
            weights[i] = x[t].clone();
        }
        start += c.len();
    }
    let p = GenPerm::new(pi, weights)?;
    let c = GenPerm::permutation(tau.clone()).dense();
    if p.congruence(a)? != c {
        return Ok(None);
    }
    Ok(Some(SkewForm { p, tau, c }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewBlockForm {
    pub p: GenPerm,
    /// Original indices of each irreducible block, in block order.
    pub blocks: Vec<Vec<usize>>,
    /// `PᵗAP`: cyclic blocks on the diagonal, `ε` below them.
    pub form: Matrix,
}

/// Block canonical form: each irreducible component is brought to its cyclic
/// form and the components are laid out in Frobenius order.
pub fn skew_block_form(a: &Matrix) -> Result<Option<SkewBlockForm>> {
    let n = a.require_square("skew-symmetric matrix")?;
    if !a.is_skew_symmetric() {
        return Err(precondition("matrix is not skew-symmetric"));
    }
    let blocks = frobenius_normal_form(a)?.blocks;
    let mut pi = vec![0; n];
    let mut weights = vec![Rational::default(); n];
    let mut offset = 0;
    for block in &blocks {
        let sub = a.submatrix(block, block);
        let Some(local) = skew_canonicalize(&sub).map_err(|e| {
            precondition(format!(
                "block {:?} is not an odd invertible skew-symmetric matrix: {e}",
                block.iter().map(|i| i + 1).collect::<Vec<_>>()
            ))
        })?
        else {
            return Ok(None);
        };
        for (r, &i) in block.iter().enumerate() {
            pi[i] = offset + local.p.sigma()[r];
            weights[i] = local.p.weights()[r].clone();
        }
        offset += block.len();
    }
    let p = GenPerm::new(pi, weights)?;
    let form = p.congruence(a)?;
    Ok(Some(SkewBlockForm { p, blocks, form }))
}

/// The cyclic shift `C_n` with `0` at `(i, i+1 mod n)`.
pub fn cyclic_shift(n: usize) -> Matrix {
    Matrix::from_fn(n, n, |i, j| {
        if j == (i + 1) % n {
            Scalar::zero()
        } else {
            Scalar::Eps
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::mat;
    use crate::scalar::q;

    #[test]
    fn split_worked_example() {
        let sp = split(&mat("4 6; 7 9")).unwrap();
        assert_eq!(sp.s, mat("4 6; 6 9"));
        assert_eq!(sp.u, mat("* *; 7 *"));
        assert!(sp.unique);
        assert!(!split(&mat("1 2; 2 1")).unwrap().unique);
        let sym = mat("1 2; 2 *");
        let sp = split(&sym).unwrap();
        assert_eq!(sp.s, sym);
        assert!(sp.u.is_all_eps());
    }

    #[test]
    fn split_with_eps_entries() {
        let sp = split(&mat("* 3; * *")).unwrap();
        assert_eq!(sp.u, mat("* 3; * *"));
        assert_eq!(sp.s, Matrix::eps(2, 2));
    }

    #[test]
    fn three_cycle_to_cyclic_shift() {
        let a = mat("* 1 *; * * 2; 4 * *");
        let f = skew_canonicalize(&a).unwrap().unwrap();
        assert_eq!(f.c, cyclic_shift(3));
        assert_eq!(f.p.congruence(&a).unwrap(), f.c);
        assert_eq!(f.p.weights(), &[qr_half(-3), qr_half(1), qr_half(-5)]);
    }

    fn qr_half(n: i64) -> Rational {
        crate::scalar::qr(n, 2)
    }

    #[test]
    fn cyclic_shift_is_fixed() {
        let f = skew_canonicalize(&cyclic_shift(3)).unwrap().unwrap();
        assert_eq!(f.p, GenPerm::identity(3));
    }

    #[test]
    fn preconditions() {
        assert!(skew_canonicalize(&mat("* 0; 0 *")).is_err());
        assert!(skew_canonicalize(&mat("0 * *; * * 0; * 0 *")).is_err());
        assert!(skew_canonicalize(&mat("* 0 0; * * 0; 0 * *")).is_err());
    }

    #[test]
    fn even_cycle_consistency() {
        // 4-cycle 1→2→3→4→1 and 3-cycle 5→6→7→5
        let build = |last: i64| {
            let mut m = Matrix::eps(7, 7);
            for (i, j, v) in [(0, 1, 1), (1, 2, 2), (2, 3, 3), (3, 0, last), (4, 5, 0), (5, 6, 0), (6, 4, 0)] {
                m = m.with_entry(i, j, Scalar::int(v));
            }
            m
        };
        let consistent = skew_canonicalize(&build(2)).unwrap().unwrap();
        assert_eq!(consistent.tau, vec![1, 2, 3, 0, 5, 6, 4]);
        assert_eq!(consistent.p.weights()[0], q(0));
        assert!(skew_canonicalize(&build(5)).unwrap().is_none());
    }

    #[test]
    fn two_disjoint_three_cycles() {
        let mut a = Matrix::eps(6, 6);
        for (i, j, v) in [(0, 2, 1), (2, 4, 1), (4, 0, 1), (1, 3, 2), (3, 5, 0), (5, 1, 7)] {
            a = a.with_entry(i, j, Scalar::int(v));
        }
        let f = skew_block_form(&a).unwrap().unwrap();
        assert_eq!(f.blocks.len(), 2);
        let c3 = cyclic_shift(3);
        let top: Vec<usize> = (0..3).collect();
        let bottom: Vec<usize> = (3..6).collect();
        assert_eq!(f.form.submatrix(&top, &top), c3);
        assert_eq!(f.form.submatrix(&bottom, &bottom), c3);
        assert!(f.form.submatrix(&bottom, &top).is_all_eps());
    }
}
