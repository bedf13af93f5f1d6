//! Two-by-two pseudo-minors and the minor table `Ψ(A)`.
//!
//! The cofactor `(i,j | k,l) ▷ A = (a_ik + a_jl) - (a_il + a_jk)` is
//! orientation sensitive: swapping the two rows or the two columns negates it.
//! Tables always store increasing pairs; [`MinorTable::oriented`] restores
//! the sign for arbitrary orientations.

use std::fmt;

use crate::error::{precondition, Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{format_rational, Rational};

/// All pairs `(i, j)` with `i < j < n`, in lexicographic order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// Lexicographic ordinal of the increasing pair `(i, j)`.
pub fn pair_position(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

pub fn num_pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Normalises `(a, b)` to increasing order; the flag is `true` when swapped.
fn normalise((a, b): (usize, usize)) -> ((usize, usize), bool) {
    if a < b {
        ((a, b), false)
    } else {
        ((b, a), true)
    }
}

/// `(i,j | k,l) ▷ A` for rows `(i, j)` and columns `(k, l)` in the given orientation.
pub fn cofactor(a: &Matrix, rows: (usize, usize), cols: (usize, usize)) -> Result<Rational> {
    let (i, j) = rows;
    let (k, l) = cols;
    if i == j || k == l {
        return Err(precondition("cofactor needs two distinct rows and two distinct columns"));
    }
    if [i, j].iter().any(|&r| r >= a.rows()) || [k, l].iter().any(|&c| c >= a.cols()) {
        return Err(Error::Dimension("cofactor index out of range".into()));
    }
    let entry = |r, c| {
        a.fin(r, c)
            .ok_or_else(|| precondition(format!("cofactor uses ε entry ({}, {})", r + 1, c + 1)))
    };
    Ok((entry(i, k)? + entry(j, l)?) - (entry(i, l)? + entry(j, k)?))
}

/// The `C(n,2) × C(n,2)` table of pseudo-minors, indexed by increasing pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MinorTable {
    n: usize,
    data: Vec<Rational>,
}

impl MinorTable {
    /// Wraps an arbitrary `C(n,2) × C(n,2)` array.
    pub fn from_rows(n: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let m = num_pairs(n);
        if n < 2 || rows.len() != m || rows.iter().any(|r| r.len() != m) {
            return Err(Error::Dimension(format!(
                "a minor table for n = {n} must be {m}x{m}"
            )));
        }
        Ok(MinorTable {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    fn zeroed(n: usize) -> Self {
        let m = num_pairs(n);
        MinorTable {
            n,
            data: vec![Rational::default(); m * m],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Side length `C(n, 2)`.
    pub fn size(&self) -> usize {
        num_pairs(self.n)
    }

    /// Entry at ordinals `(r, c)`.
    pub fn at(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.size() + c]
    }

    fn at_mut(&mut self, r: usize, c: usize) -> &mut Rational {
        let m = self.size();
        &mut self.data[r * m + c]
    }

    /// Entry for increasing pairs `p`, `q`.
    pub fn get(&self, p: (usize, usize), q: (usize, usize)) -> &Rational {
        self.at(pair_position(self.n, p.0, p.1), pair_position(self.n, q.0, q.1))
    }

    /// Entry for pairs in any orientation, negated once per reversed pair.
    pub fn oriented(&self, p: (usize, usize), q: (usize, usize)) -> Rational {
        let (p, fp) = normalise(p);
        let (q, fq) = normalise(q);
        let v = self.get(p, q).clone();
        if fp != fq {
            -v
        } else {
            v
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        let m = self.size();
        (0..m).map(|r| self.data[r * m..(r + 1) * m].to_vec()).collect()
    }

    /// The top-left `(n-1) × (n-1)` block, rows and columns `(1,2) … (1,n)`.
    pub fn principal_block(&self) -> Vec<Vec<Rational>> {
        (0..self.n - 1)
            .map(|r| (0..self.n - 1).map(|c| self.at(r, c).clone()).collect())
            .collect()
    }
}

impl fmt::Display for MinorTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.size();
        writeln!(f, "{m} {m}")?;
        for row in self.to_rows() {
            let cells: Vec<String> = row.iter().map(format_rational).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// `Ψ(A)`: the table of all cofactors with increasing row and column pairs.
pub fn psi(a: &Matrix) -> Result<MinorTable> {
    let n = a.require_square("Ψ operand")?;
    if n < 2 {
        return Err(precondition("Ψ needs n ≥ 2"));
    }
    if !a.is_finite() {
        return Err(precondition("Ψ is defined only for finite matrices"));
    }
    let ps = pairs(n);
    let mut table = MinorTable::zeroed(n);
    for (r, &p) in ps.iter().enumerate() {
        for (c, &q) in ps.iter().enumerate() {
            *table.at_mut(r, c) = cofactor(a, p, q)?;
        }
    }
    Ok(table)
}

/// Both families of Plücker-like relations:
/// `(i1,i3|c) - (i1,i2|c) = (i2,i3|c)` on rows and the same on columns.
pub fn plucker_check(t: &MinorTable) -> bool {
    let n = t.n;
    let ps = pairs(n);
    let triples = || {
        (0..n).flat_map(move |a| {
            (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| (a, b, c)))
        })
    };
    let rows_ok = triples().all(|(i1, i2, i3)| {
        ps.iter()
            .all(|&q| t.get((i1, i3), q) - t.get((i1, i2), q) == *t.get((i2, i3), q))
    });
    let cols_ok = triples().all(|(i1, i2, i3)| {
        ps.iter()
            .all(|&p| t.get(p, (i1, i3)) - t.get(p, (i1, i2)) == *t.get(p, (i2, i3)))
    });
    rows_ok && cols_ok
}

/// Rebuilds the full table from its `(n-1) × (n-1)` principal block: first
/// the remaining columns of the top rows by column differences, then every
/// other row by row differences.
pub fn reconstruct_from_principal(block: &[Vec<Rational>], n: usize) -> Result<MinorTable> {
    if n < 2 || block.len() != n - 1 || block.iter().any(|r| r.len() != n - 1) {
        return Err(Error::Dimension(format!(
            "principal block for n = {n} must be {}x{}",
            n.saturating_sub(1),
            n.saturating_sub(1)
        )));
    }
    let ps = pairs(n);
    let mut t = MinorTable::zeroed(n);
    // rows (1, b): principal part copied, other columns (i2, i3) from column differences
    for (r, row) in block.iter().enumerate().take(n - 1) {
        for (c, &(i2, i3)) in ps.iter().enumerate() {
            *t.at_mut(r, c) = if i2 == 0 {
                row[i3 - 1].clone()
            } else {
                &row[i3 - 1] - &row[i2 - 1]
            };
        }
    }
    for (r, &(i2, i3)) in ps.iter().enumerate().skip(n - 1) {
        for c in 0..ps.len() {
            let v = t.at(i3 - 1, c) - t.at(i2 - 1, c);
            *t.at_mut(r, c) = v;
        }
    }
    Ok(t)
}

/// The `S_n` action: the entry at `((i,j),(l,k))` moves to `((σi,σj),(σl,σk))`,
/// with image pairs re-sorted and the sign fixed by orientation.
pub fn sn_act(t: &MinorTable, sigma: &[usize]) -> Result<MinorTable> {
    let n = t.n;
    if sigma.len() != n || !crate::perm::is_permutation(sigma) {
        return Err(precondition(format!("σ must be a permutation of {n} elements")));
    }
    let ps = pairs(n);
    let mut out = MinorTable::zeroed(n);
    for &(i, j) in &ps {
        for &(l, k) in &ps {
            let (p, fp) = normalise((sigma[i], sigma[j]));
            let (q, fq) = normalise((sigma[l], sigma[k]));
            let v = t.get((i, j), (l, k)).clone();
            *out.at_mut(pair_position(n, p.0, p.1), pair_position(n, q.0, q.1)) =
                if fp != fq { -v } else { v };
        }
    }
    Ok(out)
}
