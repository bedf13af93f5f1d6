mod common;

use common::*;
use maxplus::genperm::vec_transpose_perm;
use maxplus::io::{mat, parse_inline, parse_matrix};
use maxplus::scalar::qr;
use maxplus::{GenPerm, Matrix, Scalar};
use proptest::prelude::*;
use rand::Rng;

fn scalar() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        1 => Just(Scalar::Eps),
        6 => (-50i64..50, 1i64..8).prop_map(|(n, d)| Scalar::ratio(n, d)),
    ]
}

proptest! {
    #[test]
    fn semiring_laws(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.oplus(&b).oplus(&c), a.oplus(&b.oplus(&c)));
        prop_assert_eq!(a.oplus(&b), b.oplus(&a));
        prop_assert_eq!(a.oplus(&a), a.clone());
        prop_assert_eq!(a.otimes(&b).otimes(&c), a.otimes(&b.otimes(&c)));
        prop_assert_eq!(a.otimes(&b), b.otimes(&a));
        prop_assert_eq!(a.otimes(&b.oplus(&c)), a.otimes(&b).oplus(&a.otimes(&c)));
        prop_assert_eq!(a.otimes(&Scalar::Eps), Scalar::Eps);
        prop_assert_eq!(a.oplus(&Scalar::Eps), a.clone());
        prop_assert_eq!(a.otimes(&Scalar::zero()), a.clone());
    }

    #[test]
    fn scalars_round_trip_through_text(a in scalar()) {
        prop_assert_eq!(a.to_string().parse::<Scalar>().unwrap(), a);
    }
}

#[test]
fn product_is_associative() {
    let mut r = rng(51);
    for _ in 0..100 {
        let (m, n, k, l) = (r.gen_range(1..=4), r.gen_range(1..=4), r.gen_range(1..=4), r.gen_range(1..=4));
        let a = random_matrix(&mut r, m, n, -5, 5, 0.3);
        let b = random_matrix(&mut r, n, k, -5, 5, 0.3);
        let c = random_matrix(&mut r, k, l, -5, 5, 0.3);
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        assert_eq!(left, a.mul(&b.mul(&c).unwrap()).unwrap());
        assert_eq!(a.mul(&Matrix::identity(n)).unwrap(), a);
    }
}

#[test]
fn kronecker_blocks_of_the_commutant_system() {
    let d = mat("4 0; 0 6");
    let b = Matrix::identity(2).kron(&d);
    let c = d.kron(&Matrix::identity(2)).mul(&vec_transpose_perm(2).dense()).unwrap();
    assert_eq!(b, mat("4 0 * *; 0 6 * *; * * 4 0; * * 0 6"));
    assert_eq!(c, mat("4 0 * *; * * 4 0; 0 6 * *; * * 0 6"));
    let mut r = rng(52);
    for _ in 0..20 {
        let (p, q, s, t) = (r.gen_range(1..=3), r.gen_range(1..=3), r.gen_range(1..=3), r.gen_range(1..=3));
        let x = random_matrix(&mut r, p, q, -3, 3, 0.2);
        let y = random_matrix(&mut r, s, t, -3, 3, 0.2);
        assert_eq!(x.kron(&y).shape(), (x.rows() * y.rows(), x.cols() * y.cols()));
    }
}

#[test]
fn transpose_permutation_acts_on_vec() {
    let mut r = rng(53);
    for _ in 0..20 {
        let n = r.gen_range(1..=5);
        let y = random_matrix(&mut r, n, n, -9, 9, 0.2);
        let t = vec_transpose_perm(n).dense();
        assert_eq!(t.apply(&y.vec()).unwrap(), y.transpose().vec());
        assert_eq!(Matrix::unvec(&y.vec(), n, n).unwrap(), y);
    }
    assert_eq!(mat("1 3; 2 4").vec(), ints(&[1, 2, 3, 4]));
}

#[test]
fn congruence_entry_formula_and_inverse() {
    let mut r = rng(54);
    for _ in 0..100 {
        let n = r.gen_range(1..=5);
        let a = random_matrix(&mut r, n, n, -6, 6, 0.3);
        let p = random_genperm(&mut r, n, 5);
        let b = p.congruence(&a).unwrap();
        assert_eq!(b, p.dense().transpose().mul(&a).unwrap().mul(&p.dense()).unwrap());
        let s = p.sigma();
        for i in 0..n {
            for j in 0..n {
                let w = &p.weights()[i] + &p.weights()[j];
                assert_eq!(*b.get(s[i], s[j]), a.get(i, j).shift(&w));
            }
        }
        assert_eq!(p.dense().mul(&p.inverse().dense()).unwrap(), Matrix::identity(n));
        assert_eq!(GenPerm::from_dense(&p.dense()).unwrap(), p);
    }
}

#[test]
fn congruence_preserves_symmetry_and_skewness() {
    let mut r = rng(55);
    for _ in 0..100 {
        let n = r.gen_range(1..=5);
        let p = random_genperm(&mut r, n, 5);
        let s = random_symmetric(&mut r, n, -5, 5);
        assert!(p.congruence(&s).unwrap().is_symmetric());
        let m = random_matrix(&mut r, n, n, -5, 5, 0.5);
        // keep a_ij only where i < j, orientation flipped by a coin
        let flip: Vec<bool> = (0..n * n).map(|_| r.gen_bool(0.5)).collect();
        let skew = Matrix::from_fn(n, n, |i, j| {
            let (lo, hi) = (i.min(j), i.max(j));
            if i != j && flip[lo * n + hi] == (i < j) {
                m.get(lo, hi).clone()
            } else {
                Scalar::Eps
            }
        });
        assert!(skew.is_skew_symmetric());
        assert!(p.congruence(&skew).unwrap().is_skew_symmetric());
    }
}

#[test]
fn printed_matrices_reparse() {
    let mut r = rng(56);
    for _ in 0..50 {
        let (m, n, d) = (r.gen_range(1..=4), r.gen_range(1..=4), r.gen_range(1..=4));
        let a = random_matrix(&mut r, m, n, -9, 9, 0.3).scale(&Scalar::Fin(qr(1, d)));
        assert_eq!(parse_matrix(&a.to_string()).unwrap(), a);
    }
    let bad = parse_matrix("2 2\n1 2\n3 x\n").unwrap_err().to_string();
    assert!(bad.contains("line 3"), "{bad}");
    assert!(parse_inline("1 2; 3").is_err());
}
