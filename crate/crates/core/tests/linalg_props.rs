mod common;

use common::{endo, in_span, naive_mul, oracle_inverse, oracle_rank, raw, rng};
use ncr_core::linalg::{
    anticommutator, im_ker, is_normal, is_normal_quadratic, is_splitting, is_symmetry_perturbation,
    is_tangent, is_tangent_quadratic, pi_normal, pi_tangent, pol, projector, projector_of, splitting_projector,
    symmetry_of, symmetry_of_splitting, ComplexFloat,
};
use ncr_core::sampling::{random_endo, random_matrix, random_splitting, random_subspace, random_symmetry};
use ncr_core::{EndoMap, Matrix, Rational, Splitting, Subspace};
use proptest::prelude::*;
use rand::Rng;

type Q = Rational;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config(200))]

    #[test]
    fn projector_properties(seed: u64, n in 1usize..=8, k_frac in 0.0f64..=1.0) {
        let mut r = rng(seed);
        let k = (k_frac * n as f64).round() as usize;
        let sp = random_splitting::<Q, _>(&mut r, n, k);
        let p = projector(sp.v(), sp.w()).unwrap();
        prop_assert!(p.is_projector());
        prop_assert_eq!(&p.image(), sp.v());
        prop_assert_eq!(&p.kernel(), sp.w());
    }

    #[test]
    fn splitting_round_trips(seed: u64, n in 1usize..=7) {
        let mut r = rng(seed);
        let k = r.random_range(0..=n);
        let sp = random_splitting::<Q, _>(&mut r, n, k);
        let p = splitting_projector(&sp);
        let s = symmetry_of(&p).unwrap();
        prop_assert_eq!(pol(&s).unwrap(), sp.clone());
        prop_assert_eq!(im_ker(&p).unwrap(), sp.clone());
        prop_assert_eq!(projector_of(&s).unwrap(), p.clone());
        prop_assert_eq!(symmetry_of_splitting(&sp), s);
        // Starting from the projector side.
        let p2 = splitting_projector(&im_ker(&p).unwrap());
        prop_assert_eq!(p2, p);
    }

    #[test]
    fn grading_identities(seed: u64, n in 2usize..=6) {
        let mut r = rng(seed);
        let plus = r.random_range(0..=n);
        let s = random_symmetry::<Q, _>(&mut r, n, plus);
        let a = random_endo::<Q, _>(&mut r, n);
        let b = random_endo::<Q, _>(&mut r, n);
        let t = |x: &EndoMap<Q>| pi_tangent(&s, x).unwrap();
        let nn = |x: &EndoMap<Q>| pi_normal(&s, x).unwrap();
        let ab = &a * &b;
        prop_assert_eq!(t(&ab), &(&t(&a) * &nn(&b)) + &(&nn(&a) * &t(&b)));
        prop_assert_eq!(nn(&ab), &(&t(&a) * &t(&b)) + &(&nn(&a) * &nn(&b)));
    }

    #[test]
    fn tangent_normal_split(seed: u64, n in 2usize..=6) {
        let mut r = rng(seed);
        let plus = r.random_range(0..=n);
        let s = random_symmetry::<Q, _>(&mut r, n, plus);
        let a = random_endo::<Q, _>(&mut r, n);
        let (at, an) = (pi_tangent(&s, &a).unwrap(), pi_normal(&s, &a).unwrap());
        prop_assert_eq!(&at + &an, a.clone());
        prop_assert_eq!(pi_tangent(&s, &at).unwrap(), at.clone());
        prop_assert_eq!(pi_normal(&s, &an).unwrap(), an.clone());
        prop_assert!(pi_normal(&s, &at).unwrap().is_zero());
        prop_assert!(pi_tangent(&s, &an).unwrap().is_zero());
        prop_assert!(is_tangent(&s, &at).unwrap());
        prop_assert!(is_normal(&s, &an).unwrap());
    }

    #[test]
    fn anticommutator_matches_naive_product(seed: u64, n in 1usize..=6) {
        let mut r = rng(seed);
        let s = random_endo::<Q, _>(&mut r, n);
        let u = random_endo::<Q, _>(&mut r, n);
        let (rs, ru) = (raw(s.matrix()), raw(u.matrix()));
        let us = naive_mul(&ru, &rs);
        let su = naive_mul(&rs, &ru);
        let sum: Vec<Vec<_>> = us.iter().zip(&su)
            .map(|(x, y)| x.iter().zip(y).map(|(a, b)| a + b).collect())
            .collect();
        prop_assert_eq!(anticommutator(&s, &u).unwrap(), endo(sum));
    }

    #[test]
    fn perturbation_test_matches_square(seed: u64, n in 1usize..=6, hit: bool) {
        let mut r = rng(seed);
        let plus = r.random_range(0..=n);
        let s = random_symmetry::<Q, _>(&mut r, n, plus);
        let u = if hit {
            let other_plus = r.random_range(0..=n);
            let other = random_symmetry::<Q, _>(&mut r, n, other_plus);
            &other - &s
        } else {
            random_endo(&mut r, n)
        };
        let sum = &s + &u;
        let direct = (&sum * &sum).is_identity();
        prop_assert_eq!(is_symmetry_perturbation(&s, &u).unwrap(), direct);
        if hit {
            prop_assert!(direct);
        }
    }

    #[test]
    fn inverse_matches_adjugate(seed: u64, n in 1usize..=5) {
        let mut r = rng(seed);
        let m = random_matrix::<Q, _>(&mut r, n, n);
        let oracle = oracle_inverse(&raw(&m));
        match m.inverse() {
            Ok(inv) => prop_assert_eq!(raw(&inv), oracle.unwrap()),
            Err(_) => prop_assert!(oracle.is_none()),
        }
    }

    #[test]
    fn rank_matches_oracle(seed: u64) {
        let m = random_matrix::<Q, _>(&mut rng(seed), 5, 3);
        let expected = oracle_rank(&raw(&m));
        prop_assert_eq!(m.rank(), expected);
        prop_assert_eq!(Subspace::column_space(&m).dim(), expected);
    }

    #[test]
    fn low_rank_products(seed: u64, k in 0usize..=3) {
        let mut r = rng(seed);
        let m = &random_matrix::<Q, _>(&mut r, 5, k) * &random_matrix::<Q, _>(&mut r, k, 4);
        let expected = oracle_rank(&raw(&m));
        prop_assert!(expected <= k);
        prop_assert_eq!(m.rank(), expected);
        prop_assert_eq!(Subspace::kernel(&m).dim(), 4 - expected);
    }

    #[test]
    fn four_dim_subspaces_of_six_meet(seed: u64) {
        let mut r = rng(seed);
        let a = random_subspace::<Q, _>(&mut r, 6, 4);
        let b = random_subspace::<Q, _>(&mut r, 6, 4);
        let c = a.intersect(&b).unwrap();
        prop_assert!(c.dim() >= 2);
        for v in c.basis_vectors() {
            prop_assert!(in_span(a.basis(), &v));
            prop_assert!(in_span(b.basis(), &v));
        }
        let total = a.sum(&b).unwrap();
        prop_assert_eq!(total.dim() + c.dim(), 8);
    }

    #[test]
    fn conjugated_symmetry_eigenspaces(seed: u64, n in 2usize..=6) {
        let mut r = rng(seed);
        let plus = r.random_range(0..=n);
        let s = random_symmetry::<Q, _>(&mut r, n, plus);
        let sp = pol(&s).unwrap();
        let id = Matrix::<Q>::identity(n);
        prop_assert_eq!(sp.v().dim(), n - oracle_rank(&raw(&(s.matrix() - &id))));
        prop_assert_eq!(sp.v().dim(), plus);
        prop_assert_eq!(sp.w().dim(), n - plus);
    }
}

proptest! {
    #![proptest_config(config(500))]

    #[test]
    fn membership_criteria_agree(seed: u64, n in 2usize..=8, kind in 0u8..3) {
        let mut r = rng(seed);
        let plus = r.random_range(0..=n);
        let s = random_symmetry::<Q, _>(&mut r, n, plus);
        let a = random_endo::<Q, _>(&mut r, n);
        let a = match kind {
            0 => pi_tangent(&s, &a).unwrap(),
            1 => pi_normal(&s, &a).unwrap(),
            _ => a,
        };
        prop_assert_eq!(is_tangent(&s, &a).unwrap(), is_tangent_quadratic(&s, &a).unwrap());
        prop_assert_eq!(is_normal(&s, &a).unwrap(), is_normal_quadratic(&s, &a).unwrap());
    }
}

#[test]
fn splitting_checks_reject_overlaps() {
    let mut r = rng(5);
    for n in 2..=6 {
        let v = random_subspace::<Q, _>(&mut r, n, n / 2);
        assert!(!is_splitting(&v, &v).unwrap());
        assert!(Splitting::new(v.clone(), v).is_err());
    }
}

#[test]
fn float_projector_is_idempotent_within_tolerance() {
    let mut r = rng(9);
    let tol = ncr_core::linalg::float_tolerance();
    for n in 2..=8 {
        let k = r.random_range(1..n);
        let sp = random_splitting::<ComplexFloat, _>(&mut r, n, k);
        let p = projector(sp.v(), sp.w()).unwrap();
        let pp = &p * &p;
        assert!(pp.matrix().max_abs_diff(p.matrix()).unwrap() <= tol);
        assert_eq!(p.image().dim(), k);
        let kernel_check = p.matrix() * sp.w().basis();
        assert!(kernel_check.max_abs() <= tol);
    }
}
