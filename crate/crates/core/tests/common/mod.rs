#![allow(dead_code)]

use maxplus::perm;
use maxplus::scalar::{half, q};
use maxplus::{GenPerm, Matrix, Rational, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ints(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| Scalar::int(x)).collect()
}

pub fn rats(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| q(x)).collect()
}

/// Entries uniform in `lo..=hi`, `ε` with probability `eps`.
pub fn random_matrix(r: &mut impl Rng, rows: usize, cols: usize, lo: i64, hi: i64, eps: f64) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| {
        if r.gen_bool(eps) {
            Scalar::Eps
        } else {
            Scalar::int(r.gen_range(lo..=hi))
        }
    })
}

pub fn random_symmetric(r: &mut impl Rng, n: usize, lo: i64, hi: i64) -> Matrix {
    let m = random_matrix(r, n, n, lo, hi, 0.0);
    Matrix::from_fn(n, n, |i, j| m.get(i.min(j), i.max(j)).clone())
}

pub fn random_perm(r: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, r.gen_range(0..=i));
    }
    p
}

pub fn random_genperm(r: &mut impl Rng, n: usize, spread: i64) -> GenPerm {
    let w = (0..n).map(|_| q(r.gen_range(-spread..=spread))).collect();
    GenPerm::new(random_perm(r, n), w).unwrap()
}

/// Congruence by trying every σ with the weights forced by the diagonal.
pub fn brute_force_congruent(a: &Matrix, b: &Matrix) -> bool {
    let n = a.rows();
    perm::all(n).any(|sigma| {
        let w: Option<Vec<Rational>> = (0..n)
            .map(|i| Some(half(&(b.fin(sigma[i], sigma[i])? - a.fin(i, i)?))))
            .collect();
        w.and_then(|w| GenPerm::new(sigma, w).ok())
            .is_some_and(|p| p.congruence(a).unwrap() == *b)
    })
}

/// Every integer point of `[lo, hi]^n`.
pub fn lattice(n: usize, lo: i64, hi: i64) -> impl Iterator<Item = Vec<i64>> {
    let width = (hi - lo + 1) as usize;
    (0..width.pow(n as u32)).map(move |mut k| {
        (0..n)
            .map(|_| {
                let v = lo + (k % width) as i64;
                k /= width;
                v
            })
            .collect()
    })
}

/// Reflexive-transitive reachability over the finite-entry digraph.
pub fn reachability(a: &Matrix) -> Vec<Vec<bool>> {
    let n = a.rows();
    let mut r: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| i == j || a.get(i, j).is_finite()).collect()).collect();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if r[i][k] && r[k][j] {
                    r[i][j] = true;
                }
            }
        }
    }
    r
}

/// Largest permutation sum and how many permutations reach it.
pub fn brute_force_permanent(a: &Matrix) -> (Scalar, usize) {
    let n = a.rows();
    let values: Vec<Scalar> = perm::all(n)
        .map(|s| (0..n).fold(Scalar::zero(), |acc, i| acc.otimes(a.get(i, s[i]))))
        .collect();
    let best = values.iter().max().cloned().unwrap();
    let count = if best.is_eps() { 0 } else { values.iter().filter(|v| **v == best).count() };
    (best, count)
}
