//! Difference-bound sets `{x ∈ ℚ^m : x_j - x_k ≤ c_jk}`.
//!
//! Bounds are kept in shortest-path closed form after every update, so two
//! sets are equal exactly when their bound arrays are equal, and the derived
//! ordering is a canonical order on sets.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::scalar::{format_rational, q, Rational};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Polytrope {
    dim: usize,
    empty: bool,
    /// `bound[j * dim + k]` bounds `x_j - x_k`; `None` is `+∞`.
    bound: Vec<Option<Rational>>,
}

fn add(a: &Option<Rational>, b: &Option<Rational>) -> Option<Rational> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x + y),
        _ => None,
    }
}

/// `a < b` with `None` as `+∞`.
fn tighter(a: &Option<Rational>, b: &Option<Rational>) -> bool {
    match (a, b) {
        (Some(x), Some(y)) => x < y,
        (Some(_), None) => true,
        (None, _) => false,
    }
}

impl Polytrope {
    /// All of `ℚ^dim`.
    pub fn free(dim: usize) -> Self {
        let mut bound = vec![None; dim * dim];
        for j in 0..dim {
            bound[j * dim + j] = Some(Rational::default());
        }
        Polytrope {
            dim,
            empty: false,
            bound,
        }
    }

    pub fn empty(dim: usize) -> Self {
        Polytrope {
            dim,
            empty: true,
            bound: vec![None; dim * dim],
        }
    }

    /// Builds a set from raw bounds `(j, k, c)` meaning `x_j - x_k ≤ c`, then closes it.
    pub fn from_constraints(dim: usize, constraints: &[(usize, usize, Rational)]) -> Result<Self> {
        let mut p = Polytrope::free(dim);
        for (j, k, c) in constraints {
            p.check(*j)?;
            p.check(*k)?;
            let slot = &mut p.bound[j * dim + k];
            if tighter(&Some(c.clone()), slot) {
                *slot = Some(c.clone());
            }
        }
        p.close();
        Ok(p)
    }

    fn check(&self, j: usize) -> Result<()> {
        if j < self.dim {
            Ok(())
        } else {
            Err(Error::Dimension(format!("variable {} out of {}", j + 1, self.dim)))
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.empty
    }

    /// Closed upper bound on `x_j - x_k`, `None` for `+∞` (or for an empty set).
    pub fn bound(&self, j: usize, k: usize) -> Option<&Rational> {
        self.bound[j * self.dim + k].as_ref()
    }

    fn make_empty(&mut self) {
        self.empty = true;
        self.bound = vec![None; self.dim * self.dim];
    }

    /// Floyd–Warshall tightening. Idempotent.
    pub fn close(&mut self) {
        if self.empty {
            return;
        }
        let n = self.dim;
        for k in 0..n {
            for i in 0..n {
                if self.bound[i * n + k].is_none() {
                    continue;
                }
                for j in 0..n {
                    let via = add(&self.bound[i * n + k], &self.bound[k * n + j]);
                    if tighter(&via, &self.bound[i * n + j]) {
                        self.bound[i * n + j] = via;
                    }
                }
            }
        }
        if (0..n).any(|i| tighter(&self.bound[i * n + i], &Some(Rational::default()))) {
            self.make_empty();
        }
    }

    /// Adds `x_j - x_k ≤ c` and re-closes incrementally.
    pub fn add_constraint(&mut self, j: usize, k: usize, c: Rational) -> Result<()> {
        self.check(j)?;
        self.check(k)?;
        if self.empty {
            return Ok(());
        }
        let n = self.dim;
        let c = Some(c);
        if !tighter(&c, &self.bound[j * n + k]) {
            return Ok(());
        }
        if tighter(&add(&c, &self.bound[k * n + j]), &Some(Rational::default())) {
            self.make_empty();
            return Ok(());
        }
        let old = self.bound.clone();
        for a in 0..n {
            let to_j = &old[a * n + j];
            if to_j.is_none() {
                continue;
            }
            for b in 0..n {
                let via = add(&add(to_j, &c), &old[k * n + b]);
                if tighter(&via, &self.bound[a * n + b]) {
                    self.bound[a * n + b] = via;
                }
            }
        }
        Ok(())
    }

    /// Adds `x_j - x_k = c`.
    pub fn add_equality(&mut self, j: usize, k: usize, c: Rational) -> Result<()> {
        self.add_constraint(k, j, -&c)?;
        self.add_constraint(j, k, c)
    }

    pub fn intersect(&self, other: &Polytrope) -> Result<Polytrope> {
        if self.dim != other.dim {
            return Err(Error::Dimension(format!(
                "cannot intersect sets of dimension {} and {}",
                self.dim, other.dim
            )));
        }
        if self.empty || other.empty {
            return Ok(Polytrope::empty(self.dim));
        }
        let mut p = self.clone();
        for (slot, b) in p.bound.iter_mut().zip(&other.bound) {
            if tighter(b, slot) {
                *slot = b.clone();
            }
        }
        p.close();
        Ok(p)
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        if self.empty || x.len() != self.dim {
            return false;
        }
        let n = self.dim;
        (0..n).all(|j| {
            (0..n).all(|k| match &self.bound[j * n + k] {
                Some(c) => &x[j] - &x[k] <= *c,
                None => true,
            })
        })
    }

    /// Feasible interval for `x_j` given already fixed `x_0 … x_{j-1}`.
    fn interval(&self, x: &[Rational], j: usize) -> (Option<Rational>, Option<Rational>) {
        let n = self.dim;
        let mut lo: Option<Rational> = None;
        let mut hi: Option<Rational> = None;
        for (k, xk) in x.iter().enumerate() {
            if let Some(c) = &self.bound[k * n + j] {
                let v = xk - c;
                if lo.as_ref().is_none_or(|l| v > *l) {
                    lo = Some(v);
                }
            }
            if let Some(c) = &self.bound[j * n + k] {
                let v = xk + c;
                if hi.as_ref().is_none_or(|h| v < *h) {
                    hi = Some(v);
                }
            }
        }
        (lo, hi)
    }

    /// A deterministic point: variables are fixed in order, each at the lowest
    /// value allowed by those before it (or the highest if only bounded above,
    /// or `0` if unconstrained).
    pub fn sample_point(&self) -> Option<Vec<Rational>> {
        if self.empty {
            return None;
        }
        let mut x = Vec::with_capacity(self.dim);
        for j in 0..self.dim {
            let (lo, hi) = self.interval(&x, j);
            x.push(lo.or(hi).unwrap_or_default());
        }
        Some(x)
    }

    /// A random point; unbounded directions are explored up to `spread`.
    pub fn random_point<R: Rng + ?Sized>(&self, rng: &mut R, spread: i64) -> Option<Vec<Rational>> {
        if self.empty {
            return None;
        }
        let mut x = Vec::with_capacity(self.dim);
        for j in 0..self.dim {
            let v = match self.interval(&x, j) {
                (Some(lo), Some(hi)) => {
                    let t = Rational::new(rng.gen_range(0..=8).into(), 8.into());
                    &lo + (hi - &lo) * t
                }
                (Some(lo), None) => lo + q(rng.gen_range(0..=spread)),
                (None, Some(hi)) => hi - q(rng.gen_range(0..=spread)),
                (None, None) => q(rng.gen_range(-spread..=spread)),
            };
            x.push(v);
        }
        Some(x)
    }

    /// `(j, k, c)` with `j > k` and `x_j - x_k = c` forced.
    pub fn equalities(&self) -> Vec<(usize, usize, Rational)> {
        let n = self.dim;
        let mut out = Vec::new();
        if self.empty {
            return out;
        }
        for j in 0..n {
            for k in 0..j {
                if let (Some(up), Some(down)) = (&self.bound[j * n + k], &self.bound[k * n + j]) {
                    if *up == -down {
                        out.push((j, k, up.clone()));
                    }
                }
            }
        }
        out
    }

    /// Finite closed bounds `(j, k, c)`, `x_j - x_k ≤ c`, excluding the
    /// diagonal and the pairs reported by [`Polytrope::equalities`].
    pub fn upper_bounds(&self) -> Vec<(usize, usize, Rational)> {
        let n = self.dim;
        let mut out = Vec::new();
        if self.empty {
            return out;
        }
        for j in 0..n {
            for k in 0..n {
                if j == k {
                    continue;
                }
                if let Some(c) = &self.bound[j * n + k] {
                    let tight = self.bound[k * n + j].as_ref().is_some_and(|d| *c == -d);
                    if !tight {
                        out.push((j, k, c.clone()));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Polytrope {
    /// One constraint per line, variables numbered from 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.empty {
            return writeln!(f, "empty");
        }
        let eq = self.equalities();
        let ub = self.upper_bounds();
        if eq.is_empty() && ub.is_empty() {
            return writeln!(f, "free");
        }
        for (j, k, c) in eq {
            writeln!(f, "x{} - x{} = {}", j + 1, k + 1, format_rational(&c))?;
        }
        for (j, k, c) in ub {
            writeln!(f, "x{} - x{} <= {}", j + 1, k + 1, format_rational(&c))?;
        }
        Ok(())
    }
}
