mod common;

use common::*;
use maxplus::applications::{
    commute_symmetric, expand_support, geneig_check_lambda, geneig_necessary, geneig_reduce, geneig_trivial_checks,
    geneig_witness, lambda_candidates, verify_commute, Verdict,
};
use maxplus::io::mat;
use maxplus::maxlinear::Polytrope;
use maxplus::scalar::q;
use maxplus::{Matrix, Rational, Scalar};
use rand::Rng;

fn worked_family() -> Polytrope {
    let cs = [(1, 0, 5), (0, 1, -5), (2, 0, 5), (0, 2, -5), (3, 0, 10), (0, 3, 0)];
    let cs: Vec<_> = cs.iter().map(|&(j, k, c)| (j, k, q(c))).collect();
    Polytrope::from_constraints(4, &cs).unwrap()
}

fn solves(a: &Matrix, b: &Matrix, lambda: &Scalar, x: &[Scalar]) -> bool {
    !x.iter().all(Scalar::is_eps) && a.apply(x).unwrap() == b.scale(lambda).apply(x).unwrap()
}

/// `D` pseudo-diagonal with the given diagonal.
fn pseudo_diagonal(d: &[i64]) -> Matrix {
    let n = d.len();
    Matrix::from_fn(n, n, |i, j| if i == j { Scalar::int(d[i]) } else { Scalar::zero() })
}

fn random_symmetric_with_eps(r: &mut impl Rng, n: usize) -> Matrix {
    let m = random_matrix(r, n, n, -4, 4, 0.2);
    Matrix::from_fn(n, n, |i, j| m.get(i.min(j), i.max(j)).clone())
}

#[test]
fn commuting_families_of_the_worked_matrix() {
    let a = mat("8 3; 3 8");
    let fams = commute_symmetric(&a, Some(&rats(&[4, 6]))).unwrap();
    let fam = fams.iter().find(|f| f.constraints == worked_family()).expect("worked family present");
    let x = fam.instantiate(&rats(&[0, 5, 5, 0])).unwrap();
    assert_eq!(a.mul(&x).unwrap(), mat("8 13; 13 8"));
    assert_eq!(x.mul(&a).unwrap(), mat("8 13; 13 8"));
    let mut r = rng(81);
    for f in &fams {
        for _ in 0..100 {
            let x = f.random_sample(&mut r, 8).unwrap();
            assert!(f.contains(&x));
            assert!(x.is_symmetric());
            assert!(verify_commute(&a, &x).unwrap(), "{x}");
        }
    }
}

#[test]
fn commuting_families_do_not_depend_on_d() {
    let a = mat("8 3; 3 8");
    let run = |d: &[i64]| {
        let mut v: Vec<Polytrope> =
            commute_symmetric(&a, Some(&rats(d))).unwrap().into_iter().map(|f| f.constraints).collect();
        v.sort();
        v
    };
    let balanced = run(&[5, 5]);
    assert_eq!(run(&[4, 6]), balanced);
    assert_eq!(run(&[0, 10]), balanced);
    let default: Vec<Polytrope> = commute_symmetric(&a, None).unwrap().into_iter().map(|f| f.constraints).collect();
    assert_eq!(default, balanced);
}

#[test]
fn commuting_lattice_scan_of_the_worked_matrix() {
    let a = mat("8 3; 3 8");
    let fams = commute_symmetric(&a, None).unwrap();
    for p in lattice(3, -10, 15) {
        let x = Matrix::from_fn(2, 2, |i, j| Scalar::int(p[i + j]));
        let inside = fams.iter().any(|f| f.contains(&x));
        assert_eq!(inside, verify_commute(&a, &x).unwrap(), "{x}");
    }
}

#[test]
fn commuting_families_of_a_three_by_three() {
    let mut r = rng(82);
    let a = mat("8 3 1; 3 8 2; 1 2 5");
    let fams = commute_symmetric(&a, None).unwrap();
    assert!(fams.iter().any(|f| f.contains(&a)));
    for f in &fams {
        for _ in 0..5 {
            let x = f.random_sample(&mut r, 6).unwrap();
            assert!(x.is_symmetric() && verify_commute(&a, &x).unwrap());
        }
    }
}

#[test]
fn eigen_families_match_lattice_scan() {
    let d = mat("4 0; 0 6");
    let id = Matrix::identity(2);
    let fams = geneig_check_lambda(&d, &id, &Scalar::int(6)).unwrap();
    let expected = Polytrope::from_constraints(2, &[(1, 0, q(6)), (0, 1, q(-6))]).unwrap();
    assert_eq!(fams.len(), 1);
    assert_eq!((fams[0].support.clone(), fams[0].family.clone()), (vec![0, 1], expected));
    assert!(geneig_check_lambda(&d, &id, &Scalar::int(4)).unwrap().is_empty());
    let values: Vec<Scalar> = std::iter::once(Scalar::Eps).chain((-5..=5).map(Scalar::int)).collect();
    for lambda in [-1, 0, 4, 5, 6, 7] {
        let lambda = Scalar::int(lambda);
        let fams = geneig_check_lambda(&d, &id, &lambda).unwrap();
        for code in lattice(2, 0, values.len() as i64 - 1) {
            let x: Vec<Scalar> = code.iter().map(|&k| values[k as usize].clone()).collect();
            if x.iter().all(Scalar::is_eps) {
                continue;
            }
            let support: Vec<usize> = (0..2).filter(|&j| x[j].is_finite()).collect();
            let vals: Vec<Rational> = support.iter().map(|&j| x[j].finite().unwrap().clone()).collect();
            let inside = fams.iter().any(|f| f.support == support && f.family.contains(&vals));
            assert_eq!(inside, solves(&d, &id, &lambda, &x));
        }
    }
}

#[test]
fn reduction_preserves_solutions_both_ways() {
    let mut r = rng(83);
    for _ in 0..40 {
        let n = r.gen_range(2..=3);
        let a = random_symmetric(&mut r, n, -4, 4);
        let b = random_symmetric_with_eps(&mut r, n);
        let red = geneig_reduce(&a, &b, None).unwrap();
        assert!(red.b_bar.is_symmetric());
        assert_eq!(red.p.congruence(&a).unwrap(), red.d);
        let lambda = Scalar::int(r.gen_range(-4..=4));
        for _ in 0..10 {
            let x = random_matrix(&mut r, 1, n, -4, 4, 0.3).row(0).to_vec();
            let y = red.lower(&x).unwrap();
            assert_eq!(red.lift(&y).unwrap(), x);
            assert_eq!(solves(&a, &b, &lambda, &x), solves(&red.d, &red.b_bar, &lambda, &y));
        }
        for f in geneig_check_lambda(&red.d, &red.b_bar, &lambda).unwrap() {
            let y = expand_support(n, &f, f.family.sample_point().unwrap());
            assert!(solves(&a, &b, &lambda, &red.lift(&y).unwrap()));
        }
        for f in geneig_check_lambda(&a, &b, &lambda).unwrap() {
            let x = expand_support(n, &f, f.family.sample_point().unwrap());
            assert!(solves(&red.d, &red.b_bar, &lambda, &red.lower(&x).unwrap()));
        }
    }
}

#[test]
fn reduction_of_the_worked_pair() {
    let red = geneig_reduce(&mat("8 3; 3 8"), &Matrix::identity(2), Some(&rats(&[4, 6]))).unwrap();
    assert_eq!(red.d, mat("4 0; 0 6"));
    assert_eq!(red.b_bar, mat("-4 *; * -2"));
}

#[test]
fn witnesses_never_contradict_the_necessary_condition() {
    let mut r = rng(84);
    let mut witnessed = 0;
    for k in 0..100 {
        let n = if k % 4 == 0 { 2 } else { 3 };
        let diag: Vec<i64> = (0..n).map(|_| r.gen_range(-4..=0)).collect();
        let d = pseudo_diagonal(&diag);
        let b = random_symmetric_with_eps(&mut r, n);
        let necessary = geneig_necessary(&d, &b).unwrap();
        let mut lambdas = lambda_candidates(&d, &b).unwrap();
        lambdas.extend([-2, 0, 2].map(Scalar::int));
        for lambda in &lambdas {
            if let Some(x) = geneig_witness(&d, &b, lambda).unwrap() {
                assert!(solves(&d, &b, lambda, &x));
                assert!(necessary, "{d}{b}");
                witnessed += 1;
            }
        }
    }
    assert!(witnessed > 0);
}

#[test]
fn nilpotent_certificates_hold_up() {
    let mut r = rng(85);
    for _ in 0..10 {
        let n = r.gen_range(2..=4);
        let a = random_matrix(&mut r, n, n, -4, 4, 0.0);
        let upper = random_matrix(&mut r, n, n, -4, 4, 0.3);
        let b = Matrix::from_fn(n, n, |i, j| if i < j { upper.get(i, j).clone() } else { Scalar::Eps });
        let report = geneig_trivial_checks(&a, &b).unwrap();
        assert_eq!(report.verdict, Verdict::UnsolvableCertified);
        for _ in 0..20 {
            let lambda = Scalar::ratio(r.gen_range(-40..=40), r.gen_range(1..=4));
            assert!(geneig_check_lambda(&a, &b, &lambda).unwrap().is_empty());
        }
    }
    let a = mat("* 0; * *");
    let b = mat("1 2; 3 4");
    let report = geneig_trivial_checks(&a, &b).unwrap();
    assert_eq!(report.verdict, Verdict::SolvableWithWitness);
    assert!(solves(&a, &b, report.lambda.as_ref().unwrap(), report.x.as_ref().unwrap()));
}
