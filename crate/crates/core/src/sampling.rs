//! Reproducible random instances over small integers.
//!
//! Splittings are generated by pushing the coordinate splitting
//! `(span{e₁..e_k}, span{e_{k+1}..e_n})` forward by a random invertible
//! matrix; admissible couples are obtained by rejection.

use rand::Rng;

use crate::crossratio::{is_admissible, SplittingPair};
use crate::linalg::{EndoMap, Matrix, Scalar, Splitting, Subspace};

/// Entries are drawn uniformly from `-ENTRY_BOUND..=ENTRY_BOUND`.
pub const ENTRY_BOUND: i64 = 3;

pub fn random_matrix<S: Scalar, R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> Matrix<S> {
    Matrix::from_fn(rows, cols, |_, _| {
        S::from_i64(rng.random_range(-ENTRY_BOUND..=ENTRY_BOUND))
    })
}

pub fn random_endo<S: Scalar, R: Rng + ?Sized>(rng: &mut R, n: usize) -> EndoMap<S> {
    EndoMap::new(random_matrix(rng, n, n)).expect("square")
}

pub fn random_invertible<S: Scalar, R: Rng + ?Sized>(rng: &mut R, n: usize) -> Matrix<S> {
    loop {
        let m = random_matrix(rng, n, n);
        if m.is_invertible() {
            return m;
        }
    }
}

/// A random subspace of dimension exactly `k`.
pub fn random_subspace<S: Scalar, R: Rng + ?Sized>(rng: &mut R, n: usize, k: usize) -> Subspace<S> {
    assert!(k <= n, "subspace dimension exceeds ambient dimension");
    loop {
        let s = Subspace::column_space(&random_matrix(rng, n, k));
        if s.dim() == k {
            return s;
        }
    }
}

/// A random splitting `(V, W)` with `dim V = k`.
pub fn random_splitting<S: Scalar, R: Rng + ?Sized>(rng: &mut R, n: usize, k: usize) -> Splitting<S> {
    assert!(k <= n, "subspace dimension exceeds ambient dimension");
    let g = random_invertible::<S, _>(rng, n);
    let first: Vec<usize> = (0..k).collect();
    let rest: Vec<usize> = (k..n).collect();
    let v = Subspace::column_space(&g.select_cols(&first));
    let w = Subspace::column_space(&g.select_cols(&rest));
    Splitting::new(v, w).expect("image of a splitting under an invertible map")
}

/// A random complement of `v`.
pub fn random_complement<S: Scalar, R: Rng + ?Sized>(rng: &mut R, v: &Subspace<S>) -> Subspace<S> {
    let n = v.ambient_dim();
    loop {
        let w = random_subspace(rng, n, n - v.dim());
        if crate::linalg::is_splitting(v, &w).expect("same ambient") {
            return w;
        }
    }
}

/// A random symmetry `g · diag(±1) · g⁻¹` with `plus` eigenvalues `+1`.
pub fn random_symmetry<S: Scalar, R: Rng + ?Sized>(rng: &mut R, n: usize, plus: usize) -> EndoMap<S> {
    let g = random_invertible::<S, _>(rng, n);
    let diag: Vec<S> = (0..n)
        .map(|i| if i < plus { S::one() } else { -S::one() })
        .collect();
    let m = &(&g * &Matrix::diagonal(&diag)) * &g.inverse().expect("invertible");
    EndoMap::new(m).expect("square")
}

/// A random admissible couple with `dim V₁ = dim V₂ = k`.
pub fn random_admissible_pair_with_dim<S: Scalar, R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    k: usize,
) -> SplittingPair<S> {
    loop {
        let first = random_splitting(rng, n, k);
        let second = random_splitting(rng, n, k);
        let pair = SplittingPair::new(first, second).expect("same ambient");
        if is_admissible(&pair) {
            return pair;
        }
    }
}

/// A random admissible couple; `dim V₁` is uniform in `0..=n`.
pub fn random_admissible_pair<S: Scalar, R: Rng + ?Sized>(rng: &mut R, n: usize) -> SplittingPair<S> {
    let k = rng.random_range(0..=n);
    random_admissible_pair_with_dim(rng, n, k)
}

/// A random admissible couple with `V₂ = V₁`.
pub fn random_pair_equal_v<S: Scalar, R: Rng + ?Sized>(rng: &mut R, n: usize) -> SplittingPair<S> {
    let k = rng.random_range(0..=n);
    let first = random_splitting::<S, _>(rng, n, k);
    let w2 = random_complement(rng, first.v());
    let second = Splitting::new(first.v().clone(), w2).expect("complement");
    SplittingPair::new(first, second).expect("same ambient")
}

/// A random admissible couple with `W₂ = W₁`.
pub fn random_pair_equal_w<S: Scalar, R: Rng + ?Sized>(rng: &mut R, n: usize) -> SplittingPair<S> {
    let k = rng.random_range(0..=n);
    let first = random_splitting::<S, _>(rng, n, k);
    let v2 = random_complement(rng, first.w());
    let second = Splitting::new(v2, first.w().clone()).expect("complement");
    SplittingPair::new(first, second).expect("same ambient")
}
