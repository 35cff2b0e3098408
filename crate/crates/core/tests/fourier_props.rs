mod common;

use common::rng;
use ncr_core::crossratio::{is_admissible, tilde_dv};
use ncr_core::fourier::{
    admissible_with_polarization, dv_h1_h2, g_transport_residual, hs_norm, offdiag_blocks_injective,
    tilde_dv_h1_h2, transport_map, FourierModel,
};
use ncr_core::linalg::{pi_normal, pi_tangent, pol, symmetry_of_splitting};
use ncr_core::sampling::{random_splitting, random_symmetry};
use ncr_core::{EndoMap, GaussianRational, Matrix, Rational, Scalar, SplittingPair, Subspace};
use rand::Rng;

type G = GaussianRational;

fn g(re: i64, im: i64) -> G {
    G::new(Rational::from(re), Rational::from(im))
}

fn random_complex_endo<R: Rng>(r: &mut R, n: usize) -> EndoMap<G> {
    EndoMap::new(Matrix::from_fn(n, n, |_, _| g(r.random_range(-4..=4), r.random_range(-4..=4)))).unwrap()
}

#[test]
fn constant_pair_for_tested_orders() {
    for n in [1, 2, 4, 8] {
        let m = FourierModel::new(n).unwrap();
        let pair = m.constant_pair::<G>();
        assert!(is_admissible(&pair));
        assert!(tilde_dv_h1_h2::<G>(&m).unwrap().is_identity(), "N = {n}");
        assert!(dv_h1_h2::<G>(&m).unwrap().is_identity());
    }
}

#[test]
fn epsilon_block_proposition() {
    let mut r = rng(21);
    for n in [2, 4, 8] {
        let m = FourierModel::new(n).unwrap();
        let e = m.epsilon::<G>();
        for _ in 0..100 {
            let a = random_complex_endo(&mut r, m.dim());
            let (t, nn) = (pi_tangent(&e, &a).unwrap(), pi_normal(&e, &a).unwrap());
            let (ab, tb, nb) = (m.blocks(&a).unwrap(), m.blocks(&t).unwrap(), m.blocks(&nn).unwrap());
            assert!(tb.pp().is_zero() && tb.mm().is_zero());
            assert_eq!(tb.pm(), ab.pm());
            assert_eq!(tb.mp(), ab.mp());
            assert!(nb.pm().is_zero() && nb.mp().is_zero());
            assert_eq!(nb.pp(), ab.pp());
            assert_eq!(nb.mm(), ab.mm());
            assert_eq!(&t + &nn, a);
            assert!(hs_norm(&t) <= hs_norm(&a));
        }
    }
}

#[test]
fn hs_norm_matches_entrywise_sum() {
    let mut r = rng(22);
    for n in 1..=7 {
        let a = random_complex_endo(&mut r, n);
        let mut acc = 0.0;
        for i in 0..n {
            for j in 0..n {
                let z = a.matrix()[(i, j)].clone();
                let (x, y) = (z.re().to_f64(), z.im().to_f64());
                acc += x * x + y * y;
            }
        }
        assert!((hs_norm(&a) - acc.sqrt()).abs() <= 1e-12 * acc.sqrt().max(1.0));
    }
}

fn polarization_pair(m: &FourierModel, s: &EndoMap<Rational>) -> SplittingPair<Rational> {
    SplittingPair::new(m.polarization(), pol(s).unwrap()).unwrap()
}

#[test]
fn polarization_criterion_agrees_with_definition() {
    let mut r = rng(23);
    let mut verdicts = [0usize; 2];
    for trial in 0..300 {
        let m = FourierModel::new(1 + trial % 4).unwrap();
        let n = m.dim();
        // Half the trials use the matching eigenvalue count, where admissibility is possible.
        let plus = if trial % 2 == 0 { m.order() + 1 } else { r.random_range(0..=n) };
        let s = random_symmetry::<Rational, _>(&mut r, n, plus);
        let block = admissible_with_polarization(&s, &m).unwrap();
        assert_eq!(block, is_admissible(&polarization_pair(&m, &s)), "trial {trial}");
        verdicts[block as usize] += 1;
    }
    assert!(verdicts[0] > 0 && verdicts[1] > 0, "{verdicts:?}");
}

#[test]
fn rotated_splitting_is_admissible() {
    let m = FourierModel::new(2).unwrap();
    // Every H₊ mode picks up a component along every H₋ mode.
    let mut tilt = Matrix::<Rational>::identity(m.dim());
    for p in m.plus_indices() {
        for q in m.minus_indices() {
            tilt[(q, p)] = Rational::from((p + 2 * q + 1) as i64);
        }
    }
    let v = m.h_plus::<Rational>().image_under(&tilt).unwrap();
    let sp = ncr_core::Splitting::new(v, m.h_minus()).unwrap();
    let s = symmetry_of_splitting(&sp);
    assert!(admissible_with_polarization(&s, &m).unwrap());
    assert!(is_admissible(&polarization_pair(&m, &s)));
    // The literal injectivity test cannot hold at truncation: s₋₊ maps a
    // 3-dimensional space into a 2-dimensional one.
    assert!(!offdiag_blocks_injective(&s, &m).unwrap());
}

#[test]
fn epsilon_discrepancy_case() {
    let m = FourierModel::new(3).unwrap();
    let e = m.epsilon::<Rational>();
    assert!(is_admissible(&polarization_pair(&m, &e)));
    assert!(admissible_with_polarization(&e, &m).unwrap());
    assert!(!offdiag_blocks_injective(&e, &m).unwrap());
}

#[test]
fn transport_residual_vanishes_exactly_on_transports() {
    let mut r = rng(24);
    for n in 1..=4 {
        let m = FourierModel::new(n).unwrap();
        for _ in 0..20 {
            let sp = random_splitting::<Rational, _>(&mut r, m.dim(), n + 1);
            let s = symmetry_of_splitting(&sp);
            let gm = transport_map(&sp, &m).unwrap();
            assert!(gm.is_invertible());
            assert_eq!(g_transport_residual(&gm, &s, &m).unwrap(), 0.0);
            // Any other symmetry with a different polarization leaves a residual.
            let other = random_splitting::<Rational, _>(&mut r, m.dim(), n + 1);
            if other != sp {
                let so = symmetry_of_splitting(&other);
                assert!(g_transport_residual(&gm, &so, &m).unwrap() > 0.0);
            }
        }
    }
}

#[test]
fn dv_h1_h2_independent_of_spanning_order() {
    let m = FourierModel::new(3).unwrap();
    let n = m.dim();
    let zero = m.position(0);
    let unit = |i: usize, sign: i64| -> Vec<G> {
        (0..n)
            .map(|j| {
                if j == i {
                    G::one()
                } else if j == zero {
                    G::from_i64(sign)
                } else {
                    G::zero()
                }
            })
            .collect()
    };
    let forward: Vec<Vec<G>> = (0..n).filter(|&i| i != zero).map(|i| unit(i, -1)).collect();
    let mut reversed = forward.clone();
    reversed.reverse();
    let mixed: Vec<Vec<G>> = forward
        .windows(2)
        .map(|w| w[0].iter().zip(&w[1]).map(|(a, b)| a.clone() + b.clone()).collect())
        .chain(std::iter::once(forward[0].clone()))
        .collect();
    let expected = m.h1::<G>();
    for spanning in [forward, reversed, mixed] {
        let h1 = Subspace::span(n, &spanning).unwrap();
        assert_eq!(h1, expected);
        let pair = SplittingPair::from_subspaces(m.e_zero(), h1, m.e_zero(), m.h2()).unwrap();
        assert!(tilde_dv(&pair).unwrap().is_identity());
    }
}
