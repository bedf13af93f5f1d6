//! Permutations of `{0, …, n-1}` stored as image vectors: `p[i]` is the image of `i`.

use itertools::Itertools;

pub fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&v| v < p.len() && !std::mem::replace(&mut seen[v], true))
}

pub fn identity(n: usize) -> Vec<usize> {
    (0..n).collect()
}

pub fn inverse(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &v) in p.iter().enumerate() {
        inv[v] = i;
    }
    inv
}

/// `outer ∘ inner`: `i ↦ outer[inner[i]]`.
pub fn compose(outer: &[usize], inner: &[usize]) -> Vec<usize> {
    inner.iter().map(|&i| outer[i]).collect()
}

/// `true` for even permutations.
pub fn is_even(p: &[usize]) -> bool {
    let transpositions: usize = cycles(p).iter().map(|c| c.len() - 1).sum();
    transpositions.is_multiple_of(2)
}

/// Disjoint cycles, each starting at its smallest element, ordered by that element.
/// Fixed points appear as 1-cycles.
pub fn cycles(p: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push(i);
            i = p[i];
        }
        out.push(cycle);
    }
    out
}

/// Cycle lengths sorted in decreasing order.
pub fn cycle_type(p: &[usize]) -> Vec<usize> {
    let mut t: Vec<usize> = cycles(p).iter().map(Vec::len).collect();
    t.sort_unstable_by(|a, b| b.cmp(a));
    t
}

/// All permutations of `{0, …, n-1}` in lexicographic order.
pub fn all(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).permutations(n)
}

/// 1-based cycle notation, e.g. `(1 3 4 2)`; the identity prints as `()`.
pub fn cycle_notation(p: &[usize]) -> String {
    let parts: Vec<String> = cycles(p)
        .into_iter()
        .filter(|c| c.len() > 1)
        .map(|c| format!("({})", c.iter().map(|i| (i + 1).to_string()).join(" ")))
        .collect();
    if parts.is_empty() {
        "()".into()
    } else {
        parts.concat()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_enumeration() {
        let perms: Vec<_> = all(3).collect();
        assert_eq!(perms.len(), 6);
        assert_eq!(perms[0], vec![0, 1, 2]);
        assert_eq!(perms[1], vec![0, 2, 1]);
        assert_eq!(perms[5], vec![2, 1, 0]);
    }

    #[test]
    fn parity_and_cycles() {
        assert!(is_even(&[0, 1, 2]));
        assert!(!is_even(&[1, 0, 2]));
        assert!(is_even(&[1, 2, 0]));
        assert_eq!(cycles(&[2, 0, 3, 1]), vec![vec![0, 2, 3, 1]]);
        assert_eq!(cycle_type(&[1, 0, 3, 4, 2]), vec![3, 2]);
        assert_eq!(cycle_notation(&[2, 0, 3, 1]), "(1 3 4 2)");
    }

    #[test]
    fn inverse_and_compose() {
        let p = vec![2, 0, 3, 1];
        assert_eq!(compose(&p, &inverse(&p)), identity(4));
        assert!(is_permutation(&p));
        assert!(!is_permutation(&[0, 0]));
    }
}
