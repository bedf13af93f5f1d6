//! Permanents, signed tropical determinants, rank notions, nilpotency and the
//! Frobenius normal form.
//!
//! Ranks are computed by exhaustive enumeration of square submatrices and
//! permutations, behind hard size guards.

use itertools::Itertools;

use crate::error::{guard, Result};
use crate::genperm::GenPerm;
use crate::matrix::Matrix;
use crate::perm;
use crate::scalar::{Rational, Scalar};

pub const MAPER_LIMIT: usize = 10;
pub const RANK_LIMIT: usize = 7;

/// Calls `f(σ, Σ a_{iσ(i)})` for every permutation whose diagonal avoids `ε`.
fn for_each_finite_permutation(a: &Matrix, mut f: impl FnMut(&[usize], &Rational)) {
    fn go(
        a: &Matrix,
        row: usize,
        used: &mut [bool],
        current: &mut Vec<usize>,
        sum: Rational,
        f: &mut dyn FnMut(&[usize], &Rational),
    ) {
        let n = a.rows();
        if row == n {
            f(current, &sum);
            return;
        }
        for col in 0..n {
            if used[col] {
                continue;
            }
            if let Some(v) = a.fin(row, col) {
                used[col] = true;
                current.push(col);
                go(a, row + 1, used, current, &sum + v, f);
                current.pop();
                used[col] = false;
            }
        }
    }
    let n = a.rows();
    go(a, 0, &mut vec![false; n], &mut Vec::with_capacity(n), Rational::default(), &mut f);
}

/// Tropical permanent with all maximising permutations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permanent {
    pub value: Scalar,
    /// Maximising permutations in lexicographic order; empty when `value` is `ε`.
    pub witnesses: Vec<Vec<usize>>,
}

impl Permanent {
    /// Non-singular in the tropical sense: a unique maximising permutation.
    pub fn is_nonsingular(&self) -> bool {
        self.witnesses.len() == 1
    }
}

pub fn maper(a: &Matrix) -> Result<Permanent> {
    let n = a.require_square("permanent operand")?;
    guard("permanent order", n, MAPER_LIMIT)?;
    let mut best: Option<Rational> = None;
    let mut witnesses = Vec::new();
    for_each_finite_permutation(a, |sigma, value| match &best {
        Some(b) if value < b => {}
        Some(b) if value == b => witnesses.push(sigma.to_vec()),
        _ => {
            best = Some(value.clone());
            witnesses = vec![sigma.to_vec()];
        }
    });
    Ok(Permanent {
        value: best.map_or(Scalar::Eps, Scalar::Fin),
        witnesses,
    })
}

/// `(|A|⁺, |A|⁻)`: the best diagonal sums over even and odd permutations.
pub fn signed_dets(a: &Matrix) -> Result<(Scalar, Scalar)> {
    let n = a.require_square("determinant operand")?;
    guard("determinant order", n, MAPER_LIMIT)?;
    let mut plus = Scalar::Eps;
    let mut minus = Scalar::Eps;
    for_each_finite_permutation(a, |sigma, value| {
        let slot = if perm::is_even(sigma) { &mut plus } else { &mut minus };
        if *slot < Scalar::Fin(value.clone()) {
            *slot = Scalar::Fin(value.clone());
        }
    });
    Ok((plus, minus))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankReport {
    pub tropical_rank: usize,
    pub det_rank: usize,
    pub strongly_regular: bool,
    pub det_regular: bool,
}

pub fn ranks(a: &Matrix) -> Result<RankReport> {
    let full = a.rows().min(a.cols());
    guard("rank order", full, RANK_LIMIT)?;
    let largest = |accept: &dyn Fn(&Matrix) -> bool| -> usize {
        (1..=full)
            .rev()
            .find(|&r| {
                (0..a.rows()).combinations(r).any(|rows| {
                    (0..a.cols())
                        .combinations(r)
                        .any(|cols| accept(&a.submatrix(&rows, &cols)))
                })
            })
            .unwrap_or(0)
    };
    let tropical_rank = largest(&|s| maper(s).map(|p| p.is_nonsingular()).unwrap_or(false));
    let det_rank = largest(&|s| signed_dets(s).map(|(p, m)| p != m).unwrap_or(false));
    Ok(RankReport {
        tropical_rank,
        det_rank,
        strongly_regular: tropical_rank == full,
        det_regular: det_rank == full,
    })
}

/// Some tropical power is all-`ε`; decided by cycle detection on the
/// digraph with an edge `i → j` whenever `a_ij ≠ ε`.
pub fn is_nilpotent(a: &Matrix) -> Result<bool> {
    let n = a.require_square("nilpotency operand")?;
    let mut indegree = vec![0usize; n];
    for i in 0..n {
        for (j, deg) in indegree.iter_mut().enumerate() {
            if a.get(i, j).is_finite() {
                *deg += 1;
            }
        }
    }
    let mut ready: Vec<usize> = (0..n).filter(|&j| indegree[j] == 0).collect();
    let mut removed = 0;
    while let Some(i) = ready.pop() {
        removed += 1;
        for (j, deg) in indegree.iter_mut().enumerate() {
            if a.get(i, j).is_finite() {
                *deg -= 1;
                if *deg == 0 {
                    ready.push(j);
                }
            }
        }
    }
    Ok(removed == n)
}

/// Strongly connected components of the finite-entry digraph in topological
/// order (every edge between components goes from an earlier to a later one).
pub fn strongly_connected_components(a: &Matrix) -> Result<Vec<Vec<usize>>> {
    struct Tarjan<'a> {
        a: &'a Matrix,
        index: Vec<Option<usize>>,
        low: Vec<usize>,
        on_stack: Vec<bool>,
        stack: Vec<usize>,
        next: usize,
        out: Vec<Vec<usize>>,
    }

    impl Tarjan<'_> {
        fn visit(&mut self, v: usize) {
            self.index[v] = Some(self.next);
            self.low[v] = self.next;
            self.next += 1;
            self.stack.push(v);
            self.on_stack[v] = true;
            for w in 0..self.a.cols() {
                if self.a.get(v, w).is_eps() {
                    continue;
                }
                match self.index[w] {
                    None => {
                        self.visit(w);
                        self.low[v] = self.low[v].min(self.low[w]);
                    }
                    Some(iw) if self.on_stack[w] => self.low[v] = self.low[v].min(iw),
                    Some(_) => {}
                }
            }
            if Some(self.low[v]) == self.index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = self.stack.pop().unwrap();
                    self.on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                self.out.push(comp);
            }
        }
    }

    let n = a.require_square("digraph adjacency")?;
    let mut t = Tarjan {
        a,
        index: vec![None; n],
        low: vec![0; n],
        on_stack: vec![false; n],
        stack: Vec::new(),
        next: 0,
        out: Vec::new(),
    };
    for v in 0..n {
        if t.index[v].is_none() {
            t.visit(v);
        }
    }
    t.out.reverse();
    Ok(t.out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusForm {
    /// Pure permutation with `(Q A Qᵗ)_{ij} = a_{σ(i)σ(j)}`.
    pub q: GenPerm,
    /// Original indices of each diagonal block, in block order.
    pub blocks: Vec<Vec<usize>>,
}

impl FrobeniusForm {
    /// `Q A Qᵗ`, block upper-triangular with irreducible diagonal blocks.
    pub fn permuted(&self, a: &Matrix) -> Result<Matrix> {
        self.q.transpose().congruence(a)
    }
}

pub fn frobenius_normal_form(a: &Matrix) -> Result<FrobeniusForm> {
    let blocks = strongly_connected_components(a)?;
    let order: Vec<usize> = blocks.iter().flatten().copied().collect();
    Ok(FrobeniusForm {
        q: GenPerm::permutation(order),
        blocks,
    })
}
