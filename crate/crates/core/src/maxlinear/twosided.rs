//! Two-sided systems `B ⊗ x = C ⊗ x` solved by enumerating win sequences.
//!
//! With `M = B ⊕ C`, a finite solution `x` attains each row maximum of
//! `M ⊗ x` on the `B` side at some column `j` and on the `C` side at some
//! column `k`. The admissible `(j, k)` for row `i` form `win(i)`. Choosing one
//! pair per row and requiring every pair of choices to be compatible gives a
//! win sequence, and each win sequence describes a difference-bound set of
//! solutions. The union over all win sequences is the full finite solution set.

use std::collections::HashSet;

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{guard, Error, Result};
use crate::matrix::Matrix;
use crate::maxlinear::polytrope::Polytrope;
use crate::scalar::Scalar;

pub const SUPPORT_LIMIT: usize = 12;

/// Column classification of one row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WinSets {
    /// `b_ij > c_ij`.
    pub wb: Vec<usize>,
    /// `b_ij < c_ij`.
    pub wc: Vec<usize>,
    /// `b_ij = c_ij`, finite.
    pub e: Vec<usize>,
    /// `b_ij = c_ij = ε`.
    pub f: Vec<usize>,
    /// `(WB × WC) ∪ (E × E)` in lexicographic order.
    pub win: Vec<(usize, usize)>,
}

impl WinSets {
    /// Both sides of the row are entirely `ε`, so the row holds for every `x`.
    pub fn is_vacuous(&self) -> bool {
        self.wb.is_empty() && self.wc.is_empty() && self.e.is_empty()
    }
}

fn check_shapes(b: &Matrix, c: &Matrix) -> Result<()> {
    if b.shape() != c.shape() {
        return Err(Error::Dimension(format!(
            "B is {}x{} but C is {}x{}",
            b.rows(),
            b.cols(),
            c.rows(),
            c.cols()
        )));
    }
    Ok(())
}

pub fn win_sets(b: &Matrix, c: &Matrix, i: usize) -> Result<WinSets> {
    check_shapes(b, c)?;
    if i >= b.rows() {
        return Err(Error::Dimension(format!("row {} out of {}", i + 1, b.rows())));
    }
    let mut w = WinSets {
        wb: Vec::new(),
        wc: Vec::new(),
        e: Vec::new(),
        f: Vec::new(),
        win: Vec::new(),
    };
    for j in 0..b.cols() {
        let (x, y) = (b.get(i, j), c.get(i, j));
        match x.cmp(y) {
            std::cmp::Ordering::Greater => w.wb.push(j),
            std::cmp::Ordering::Less => w.wc.push(j),
            std::cmp::Ordering::Equal if x.is_eps() => w.f.push(j),
            std::cmp::Ordering::Equal => w.e.push(j),
        }
    }
    let mut win: Vec<(usize, usize)> = w
        .wb
        .iter()
        .cartesian_product(&w.wc)
        .chain(w.e.iter().cartesian_product(&w.e))
        .map(|(&j, &k)| (j, k))
        .collect();
    win.sort_unstable();
    w.win = win;
    Ok(w)
}

fn members(p: (usize, usize)) -> impl Iterator<Item = usize> {
    std::iter::once(p.0).chain((p.1 != p.0).then_some(p.1))
}

/// For all `ī ∈ |I|`, `k̄ ∈ |K|`: `m_iī + m_kk̄ ≥ m_ik̄ + m_kī`.
pub fn compatible(m: &Matrix, i: usize, k: usize, ip: (usize, usize), kp: (usize, usize)) -> bool {
    members(ip).all(|a| {
        members(kp).all(|b| m.get(i, a).otimes(m.get(k, b)) >= m.get(i, b).otimes(m.get(k, a)))
    })
}

/// One pair per row; `None` for vacuous rows.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WinSequence {
    pub pairs: Vec<Option<(usize, usize)>>,
}

type Prefix = Vec<Option<(usize, usize)>>;

struct System {
    m: Matrix,
    rows: Vec<WinSets>,
}

impl System {
    fn new(b: &Matrix, c: &Matrix) -> Result<Self> {
        check_shapes(b, c)?;
        Ok(System {
            m: b.oplus(c)?,
            rows: (0..b.rows()).map(|i| win_sets(b, c, i)).collect::<Result<_>>()?,
        })
    }

    fn options(&self, h: usize, chosen: &[Option<(usize, usize)>]) -> Vec<Option<(usize, usize)>> {
        if self.rows[h].is_vacuous() {
            return vec![None];
        }
        self.rows[h]
            .win
            .iter()
            .filter(|&&p| {
                chosen
                    .iter()
                    .enumerate()
                    .all(|(i, q)| q.is_none_or(|q| compatible(&self.m, i, h, q, p)))
            })
            .map(|&p| Some(p))
            .collect()
    }

    /// Row `h` attains its value at `x_j + m_hj = x_k + m_hk` and nowhere higher.
    fn constrain(&self, poly: &mut Polytrope, h: usize, (j, k): (usize, usize)) {
        let m = &self.m;
        let mj = m.fin(h, j).expect("winning column is finite");
        let mk = m.fin(h, k).expect("winning column is finite");
        poly.add_equality(j, k, mk - mj).expect("index in range");
        for l in 0..m.cols() {
            if let Some(ml) = m.fin(h, l) {
                poly.add_constraint(l, j, mj - ml).expect("index in range");
            }
        }
    }

    fn sequences(&self, chosen: &mut Vec<Option<(usize, usize)>>, out: &mut Vec<WinSequence>) {
        let h = chosen.len();
        if h == self.rows.len() {
            out.push(WinSequence {
                pairs: chosen.clone(),
            });
            return;
        }
        for p in self.options(h, chosen) {
            chosen.push(p);
            self.sequences(chosen, out);
            chosen.pop();
        }
    }

    /// Row by row, every reachable non-empty set together with the
    /// lexicographically first prefix reaching it. Prefixes reaching the same
    /// set have identical continuations, so only the first is kept. Each level
    /// is expanded in parallel and merged in order.
    fn solve_all(&self, start: Polytrope) -> Vec<(WinSequence, Polytrope)> {
        if start.is_empty() {
            return Vec::new();
        }
        let mut level = vec![(Vec::with_capacity(self.rows.len()), start)];
        for h in 0..self.rows.len() {
            let expanded: Vec<Vec<(Prefix, Polytrope)>> = level
                .par_iter()
                .map(|(chosen, poly)| {
                    self.options(h, chosen)
                        .into_iter()
                        .filter_map(|p| {
                            let mut next = poly.clone();
                            if let Some(pair) = p {
                                self.constrain(&mut next, h, pair);
                            }
                            if next.is_empty() {
                                return None;
                            }
                            let mut prefix = chosen.clone();
                            prefix.push(p);
                            Some((prefix, next))
                        })
                        .collect()
                })
                .collect();
            let mut seen = HashSet::new();
            level = expanded
                .into_iter()
                .flatten()
                .filter(|(_, poly)| seen.insert(poly.clone()))
                .collect();
        }
        level
            .into_iter()
            .map(|(pairs, poly)| (WinSequence { pairs }, poly))
            .collect()
    }
}

/// Each distinct non-empty solution set with the first win sequence (in
/// enumeration order) producing it, ordered by that sequence.
pub fn solve_by_sequence(b: &Matrix, c: &Matrix) -> Result<Vec<(WinSequence, Polytrope)>> {
    Ok(System::new(b, c)?.solve_all(Polytrope::free(b.cols())))
}

/// [`solve_by_sequence`] restricted to `within`: every set is intersected
/// with it, and sets that become empty are dropped.
pub fn solve_by_sequence_within(
    b: &Matrix,
    c: &Matrix,
    within: &Polytrope,
) -> Result<Vec<(WinSequence, Polytrope)>> {
    if within.dim() != b.cols() {
        return Err(Error::Dimension(format!(
            "restriction has {} variables for {} columns",
            within.dim(),
            b.cols()
        )));
    }
    Ok(System::new(b, c)?.solve_all(within.clone()))
}

/// Depth-first enumeration of all win sequences, rows in order and pairs in
/// lexicographic order within each row.
pub fn enumerate_win_sequences(b: &Matrix, c: &Matrix) -> Result<Vec<WinSequence>> {
    let sys = System::new(b, c)?;
    let mut out = Vec::new();
    sys.sequences(&mut Vec::with_capacity(b.rows()), &mut out);
    Ok(out)
}

/// The closed set of finite `x` whose row maxima are attained as `γ` prescribes.
pub fn sequence_to_polytrope(b: &Matrix, c: &Matrix, gamma: &WinSequence) -> Result<Polytrope> {
    let sys = System::new(b, c)?;
    if gamma.pairs.len() != b.rows() {
        return Err(Error::Dimension(format!(
            "sequence has {} entries for {} rows",
            gamma.pairs.len(),
            b.rows()
        )));
    }
    let mut poly = Polytrope::free(b.cols());
    for (h, p) in gamma.pairs.iter().enumerate() {
        match p {
            Some(pair) if sys.rows[h].win.contains(pair) => sys.constrain(&mut poly, h, *pair),
            None if sys.rows[h].is_vacuous() => {}
            _ => {
                return Err(crate::error::precondition(format!(
                    "entry {} of the sequence is not a winning pair of its row",
                    h + 1
                )))
            }
        }
    }
    Ok(poly)
}

/// All finite solutions of `B ⊗ x = C ⊗ x` as a sorted list of distinct
/// non-empty closed sets. When `B = C` the answer is the single free set.
pub fn twosided_solve(b: &Matrix, c: &Matrix) -> Result<Vec<Polytrope>> {
    check_shapes(b, c)?;
    if b == c {
        return Ok(vec![Polytrope::free(b.cols())]);
    }
    let mut found: Vec<Polytrope> = System::new(b, c)?
        .solve_all(Polytrope::free(b.cols()))
        .into_iter()
        .map(|(_, p)| p)
        .collect();
    found.sort_unstable();
    found.dedup();
    Ok(found)
}

/// Solutions whose finite entries are exactly the columns in `support`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SupportedFamily {
    pub support: Vec<usize>,
    /// Over the variables of `support`, in order.
    pub family: Polytrope,
}

/// Solutions with `ε` entries allowed: for each non-empty support `S`, the
/// variables outside `S` are `ε` and the system restricted to `S` is solved
/// for finite values.
pub fn twosided_solve_with_supports(b: &Matrix, c: &Matrix) -> Result<Vec<SupportedFamily>> {
    check_shapes(b, c)?;
    guard("column count for support enumeration", b.cols(), SUPPORT_LIMIT)?;
    let all_rows: Vec<usize> = (0..b.rows()).collect();
    let mut out = Vec::new();
    for size in 1..=b.cols() {
        for support in (0..b.cols()).combinations(size) {
            let bs = b.submatrix(&all_rows, &support);
            let cs = c.submatrix(&all_rows, &support);
            for family in twosided_solve(&bs, &cs)? {
                out.push(SupportedFamily {
                    support: support.clone(),
                    family,
                });
            }
        }
    }
    Ok(out)
}

/// Evaluates both sides at `x` (finite entries, `ε` allowed).
pub fn satisfies(b: &Matrix, c: &Matrix, x: &[Scalar]) -> Result<bool> {
    Ok(b.apply(x)? == c.apply(x)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::mat;
    use crate::scalar::q;

    fn worked_b() -> Matrix {
        mat("4 0 * *; 0 6 * *; * * 4 0; * * 0 6")
    }

    fn worked_c() -> Matrix {
        mat("4 0 * *; * * 4 0; 0 6 * *; * * 0 6")
    }

    #[test]
    fn worked_win_sets() {
        let w1 = win_sets(&worked_b(), &worked_c(), 0).unwrap();
        assert_eq!(w1.e, vec![0, 1]);
        assert_eq!(w1.win, vec![(0, 0), (0, 1), (1, 0), (1, 1)]);
        let w2 = win_sets(&worked_b(), &worked_c(), 1).unwrap();
        assert_eq!((w2.wb.clone(), w2.wc.clone()), (vec![0, 1], vec![2, 3]));
        assert_eq!(w2.win.len(), 4);
    }

    #[test]
    fn all_eps_rows_are_vacuous() {
        let w = win_sets(&mat("* *"), &mat("* *"), 0).unwrap();
        assert!(w.is_vacuous());
        assert!(w.win.is_empty());
        assert_eq!(w.f, vec![0, 1]);
    }

    #[test]
    fn tie_on_all_entries_is_compatible() {
        let m = Matrix::filled(2, 2, Scalar::int(3));
        assert!(compatible(&m, 0, 1, (0, 1), (1, 0)));
    }

    #[test]
    fn worked_sequence_is_enumerated_and_solved() {
        let gamma = WinSequence {
            pairs: vec![Some((0, 1)), Some((1, 2)), Some((2, 1)), Some((3, 3))],
        };
        let seqs = enumerate_win_sequences(&worked_b(), &worked_c()).unwrap();
        assert!(seqs.contains(&gamma));
        let p = sequence_to_polytrope(&worked_b(), &worked_c(), &gamma).unwrap();
        assert_eq!(p.equalities(), vec![(1, 0, q(4)), (2, 0, q(6)), (2, 1, q(2))]);
        assert_eq!(p.bound(3, 0), Some(&q(10)));
        assert_eq!(p.bound(0, 3), Some(&q(0)));
        let sols = twosided_solve(&worked_b(), &worked_c()).unwrap();
        assert!(sols.contains(&p));
    }

    #[test]
    fn one_by_one_identical_system() {
        let b = mat("3");
        assert_eq!(enumerate_win_sequences(&b, &b).unwrap().len(), 1);
        assert_eq!(twosided_solve(&b, &b).unwrap(), vec![Polytrope::free(1)]);
    }

    #[test]
    fn empty_win_set_kills_everything() {
        let b = mat("0 *; 1 2");
        let c = mat("* *; 2 1");
        assert!(enumerate_win_sequences(&b, &c).unwrap().is_empty());
        assert!(twosided_solve(&b, &c).unwrap().is_empty());
    }

    #[test]
    fn supports_include_eps_solutions() {
        // x1 ⊕ x2 = x1 has the solution (0, ε) among others
        let b = mat("0 0");
        let c = mat("0 *");
        let fams = twosided_solve_with_supports(&b, &c).unwrap();
        assert!(fams.iter().any(|f| f.support == vec![0]));
        assert!(fams.iter().all(|f| f.support != vec![1]));
    }
}
