//! Truncated formal classical symbols on `S¹` (scalar case).
//!
//! A homogeneous symbol of degree `k` is recorded by its values at `ξ = +1`
//! and `ξ = −1`, each a function on the circle truncated to Fourier modes
//! `−M..=M`. So a symbol is, per degree, a pair `(u_k, v_k)` of coefficient
//! vectors. `(d/dx)ᵏ` has symbol `(iξ)ᵏ`, i.e. the pair `(iᵏ, (−i)ᵏ)`.
//!
//! Flattened coordinates: `((k − d_min)·2 + slot)·(2M+1) + (j + M)` with
//! `slot = 0` for `u` and `1` for `v`.

use crate::crossratio::{is_admissible, tilde_dv, SplittingPair};
use crate::error::{Error, Result};
use crate::linalg::{is_splitting, powi, ComplexScalar, EndoMap, Matrix, Scalar, Subspace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SymbolSpace {
    d_min: i64,
    d_max: i64,
    m: usize,
}

impl SymbolSpace {
    pub fn new(d_min: i64, d_max: i64, m: usize) -> Result<Self> {
        if d_min > d_max {
            return Err(Error::InvalidTruncation(format!(
                "empty degree range {d_min}..={d_max}"
            )));
        }
        Ok(SymbolSpace { d_min, d_max, m })
    }

    pub fn d_min(&self) -> i64 {
        self.d_min
    }

    pub fn d_max(&self) -> i64 {
        self.d_max
    }

    /// Fourier truncation `M` of each coefficient function.
    pub fn modes(&self) -> usize {
        self.m
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> {
        self.d_min..=self.d_max
    }

    pub fn degree_count(&self) -> usize {
        (self.d_max - self.d_min + 1) as usize
    }

    /// `2M + 1`.
    pub fn block_len(&self) -> usize {
        2 * self.m + 1
    }

    /// Dimension of the flattened symbol space.
    pub fn dim(&self) -> usize {
        self.degree_count() * 2 * self.block_len()
    }

    /// Dimension of the matching truncated operator space.
    pub fn psido_dim(&self) -> usize {
        self.degree_count() * self.block_len()
    }

    fn degree_offset(&self, k: i64) -> usize {
        assert!(
            (self.d_min..=self.d_max).contains(&k),
            "degree {k} outside {}..={}",
            self.d_min,
            self.d_max
        );
        (k - self.d_min) as usize
    }

    /// Start of the `u_k` (slot 0) or `v_k` (slot 1) block.
    pub fn slot_start(&self, k: i64, slot: usize) -> usize {
        (self.degree_offset(k) * 2 + slot) * self.block_len()
    }

    /// Flattened position of Fourier mode `j` of `u_k` or `v_k`.
    pub fn index(&self, k: i64, slot: usize, j: i64) -> usize {
        assert!(j.unsigned_abs() as usize <= self.m, "mode outside truncation");
        self.slot_start(k, slot) + (j + self.m as i64) as usize
    }

    /// Endomorphism acting on each degree's `(u, v)` pair by the 2×2 matrix
    /// `block(k)` tensored with the identity on Fourier modes.
    fn degreewise<S: Scalar>(&self, block: impl Fn(i64) -> [[S; 2]; 2]) -> EndoMap<S> {
        let mut m = Matrix::zeros(self.dim(), self.dim());
        for k in self.degrees() {
            let b = block(k);
            for (r, row) in b.iter().enumerate() {
                for (c, entry) in row.iter().enumerate() {
                    if entry.is_zero() {
                        continue;
                    }
                    for j in 0..self.block_len() {
                        m[(self.slot_start(k, r) + j, self.slot_start(k, c) + j)] = entry.clone();
                    }
                }
            }
        }
        EndoMap::new(m).expect("square")
    }
}

fn sign<S: Scalar>(k: i64) -> S {
    if k.rem_euclid(2) == 0 {
        S::one()
    } else {
        -S::one()
    }
}

#[derive(Clone, PartialEq)]
pub struct FormalSymbol<S> {
    space: SymbolSpace,
    coeffs: Vec<S>,
}

impl<S: Scalar> FormalSymbol<S> {
    pub fn new(space: SymbolSpace, coeffs: Vec<S>) -> Result<Self> {
        if coeffs.len() != space.dim() {
            return Err(Error::ShapeMismatch {
                expected_rows: space.dim(),
                expected_cols: 1,
                found_rows: coeffs.len(),
                found_cols: 1,
            });
        }
        Ok(FormalSymbol { space, coeffs })
    }

    pub fn zero(space: SymbolSpace) -> Self {
        FormalSymbol { space, coeffs: vec![S::zero(); space.dim()] }
    }

    /// Builds a symbol from its `(u_k, v_k)` pairs, lowest degree first.
    pub fn from_pairs(space: SymbolSpace, pairs: &[(Vec<S>, Vec<S>)]) -> Result<Self> {
        if pairs.len() != space.degree_count()
            || pairs
                .iter()
                .any(|(u, v)| u.len() != space.block_len() || v.len() != space.block_len())
        {
            return Err(Error::InvalidTruncation(
                "symbol components do not match the truncation".into(),
            ));
        }
        let coeffs = pairs
            .iter()
            .flat_map(|(u, v)| u.iter().chain(v).cloned())
            .collect();
        Ok(FormalSymbol { space, coeffs })
    }

    pub fn space(&self) -> SymbolSpace {
        self.space
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Value at `ξ = +1` of the degree-`k` part.
    pub fn u(&self, k: i64) -> &[S] {
        let start = self.space.slot_start(k, 0);
        &self.coeffs[start..start + self.space.block_len()]
    }

    /// Value at `ξ = −1` of the degree-`k` part.
    pub fn v(&self, k: i64) -> &[S] {
        let start = self.space.slot_start(k, 1);
        &self.coeffs[start..start + self.space.block_len()]
    }

    fn map_pairs(&self, f: impl Fn(i64, &[S], &[S]) -> (Vec<S>, Vec<S>)) -> Self {
        let pairs: Vec<_> = self
            .space
            .degrees()
            .map(|k| f(k, self.u(k), self.v(k)))
            .collect();
        Self::from_pairs(self.space, &pairs).expect("same truncation")
    }
}

impl<S: Scalar> std::fmt::Debug for FormalSymbol<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut list = f.debug_map();
        for k in self.space.degrees() {
            list.entry(&k, &(self.u(k), self.v(k)));
        }
        list.finish()
    }
}

/// A truncated operator `Σ a_k (d/dx)ᵏ` over the same degree range.
#[derive(Clone, PartialEq)]
pub struct PsiDOElement<S> {
    space: SymbolSpace,
    coeffs: Vec<S>,
}

impl<S: Scalar> PsiDOElement<S> {
    /// `coeffs` holds `a_k` for each degree, lowest first, each of length `2M+1`.
    pub fn new(space: SymbolSpace, coeffs: Vec<S>) -> Result<Self> {
        if coeffs.len() != space.psido_dim() {
            return Err(Error::ShapeMismatch {
                expected_rows: space.psido_dim(),
                expected_cols: 1,
                found_rows: coeffs.len(),
                found_cols: 1,
            });
        }
        Ok(PsiDOElement { space, coeffs })
    }

    pub fn zero(space: SymbolSpace) -> Self {
        PsiDOElement { space, coeffs: vec![S::zero(); space.psido_dim()] }
    }

    pub fn space(&self) -> SymbolSpace {
        self.space
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn a(&self, k: i64) -> &[S] {
        let start = self.space.degree_offset(k) * self.space.block_len();
        &self.coeffs[start..start + self.space.block_len()]
    }
}

impl<S: Scalar> std::fmt::Debug for PsiDOElement<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut list = f.debug_map();
        for k in self.space.degrees() {
            list.entry(&k, &self.a(k));
        }
        list.finish()
    }
}

fn scaled<S: Scalar>(c: &S, xs: &[S]) -> Vec<S> {
    xs.iter().map(|x| c.clone() * x.clone()).collect()
}

/// `(u, v) ↦ ((−1)ᵏ v, (−1)ᵏ u)` at each degree `k`.
pub fn s_kv<S: Scalar>(a: &FormalSymbol<S>) -> FormalSymbol<S> {
    a.map_pairs(|k, u, v| {
        let e = sign::<S>(k);
        (scaled(&e, v), scaled(&e, u))
    })
}

/// Multiplication by `ξ/|ξ|`: `(u, v) ↦ (u, −v)`.
pub fn s_d<S: Scalar>(a: &FormalSymbol<S>) -> FormalSymbol<S> {
    a.map_pairs(|_, u, v| (u.to_vec(), scaled(&-S::one(), v)))
}

pub fn s_kv_matrix<S: Scalar>(space: &SymbolSpace) -> EndoMap<S> {
    space.degreewise(|k| {
        let e = sign::<S>(k);
        [[S::zero(), e.clone()], [e, S::zero()]]
    })
}

pub fn s_d_matrix<S: Scalar>(space: &SymbolSpace) -> EndoMap<S> {
    space.degreewise(|_| [[S::one(), S::zero()], [S::zero(), -S::one()]])
}

fn eigenspace<S: Scalar>(s: &EndoMap<S>, eigenvalue: S) -> Subspace<S> {
    let shifted = s.matrix() - &Matrix::identity(s.dim()).scale(&eigenvalue);
    Subspace::kernel(&shifted)
}

/// `v_k = (−1)ᵏ u_k` at every degree.
pub fn subspace_odd<S: Scalar>(space: &SymbolSpace) -> Subspace<S> {
    eigenspace(&s_kv_matrix(space), S::one())
}

/// `v_k = −(−1)ᵏ u_k` at every degree.
pub fn subspace_even<S: Scalar>(space: &SymbolSpace) -> Subspace<S> {
    eigenspace(&s_kv_matrix(space), -S::one())
}

/// Symbols supported on `ξ > 0`.
pub fn subspace_plus<S: Scalar>(space: &SymbolSpace) -> Subspace<S> {
    eigenspace(&s_d_matrix(space), S::one())
}

/// Symbols supported on `ξ < 0`.
pub fn subspace_minus<S: Scalar>(space: &SymbolSpace) -> Subspace<S> {
    eigenspace(&s_d_matrix(space), -S::one())
}

/// `xᵏ` with the convention `0ᵏ = 0` for every `k`, including `k ≤ 0`.
fn pow_zero_convention<S: Scalar>(x: &S, k: i64) -> S {
    if x.is_zero() {
        S::zero()
    } else {
        powi(x, k).expect("nonzero base")
    }
}

/// Per degree, the factors `(c₊, c₋)` with `u_k = c₊ a_k`, `v_k = c₋ a_k`.
fn phi_factors<S: ComplexScalar>(k: i64, lambda: &S, mu: &S, epsilon: bool) -> (S, S) {
    let plus = pow_zero_convention(lambda, k) * S::i_pow(k);
    let minus = pow_zero_convention(mu, k) * S::i_pow(-k);
    (plus, if epsilon { -minus } else { minus })
}

fn phi_apply<S: ComplexScalar>(p: &PsiDOElement<S>, lambda: &S, mu: &S, epsilon: bool) -> FormalSymbol<S> {
    let space = p.space;
    let pairs: Vec<_> = space
        .degrees()
        .map(|k| {
            let (cp, cm) = phi_factors(k, lambda, mu, epsilon);
            (scaled(&cp, p.a(k)), scaled(&cm, p.a(k)))
        })
        .collect();
    FormalSymbol::from_pairs(space, &pairs).expect("same truncation")
}

fn phi_matrix<S: ComplexScalar>(space: &SymbolSpace, lambda: &S, mu: &S, epsilon: bool) -> Matrix<S> {
    let mut m = Matrix::zeros(space.dim(), space.psido_dim());
    for k in space.degrees() {
        let (cp, cm) = phi_factors(k, lambda, mu, epsilon);
        let col0 = space.degree_offset(k) * space.block_len();
        for j in 0..space.block_len() {
            m[(space.slot_start(k, 0) + j, col0 + j)] = cp.clone();
            m[(space.slot_start(k, 1) + j, col0 + j)] = cm.clone();
        }
    }
    m
}

fn require_not_both_zero<S: Scalar>(lambda: &S, mu: &S) -> Result<()> {
    if lambda.is_zero() && mu.is_zero() {
        Err(Error::BothParametersZero)
    } else {
        Ok(())
    }
}

fn require_nonzero<S: Scalar>(lambda: &S) -> Result<()> {
    if lambda.is_zero() {
        Err(Error::ZeroParameter)
    } else {
        Ok(())
    }
}

/// `Σ a_k (d/dx)ᵏ ↦ Σ a_k (λᵏ (d/dx)₊ᵏ + μᵏ (d/dx)₋ᵏ)`.
pub fn phi_lambda_mu<S: ComplexScalar>(p: &PsiDOElement<S>, lambda: &S, mu: &S) -> Result<FormalSymbol<S>> {
    require_not_both_zero(lambda, mu)?;
    Ok(phi_apply(p, lambda, mu, false))
}

/// `Σ a_k (d/dx)ᵏ ↦ Σ a_k ε(D) (λ d/dx)ᵏ`.
pub fn phi_epsilon_lambda<S: ComplexScalar>(p: &PsiDOElement<S>, lambda: &S) -> Result<FormalSymbol<S>> {
    require_nonzero(lambda)?;
    Ok(phi_apply(p, lambda, lambda, true))
}

/// Matrix of `Φ_{λ,μ}` from operator coordinates to symbol coordinates.
pub fn phi_lambda_mu_matrix<S: ComplexScalar>(space: &SymbolSpace, lambda: &S, mu: &S) -> Result<Matrix<S>> {
    require_not_both_zero(lambda, mu)?;
    Ok(phi_matrix(space, lambda, mu, false))
}

pub fn phi_epsilon_lambda_matrix<S: ComplexScalar>(space: &SymbolSpace, lambda: &S) -> Result<Matrix<S>> {
    require_nonzero(lambda)?;
    Ok(phi_matrix(space, lambda, lambda, true))
}

pub fn image_phi_lambda_mu<S: ComplexScalar>(space: &SymbolSpace, lambda: &S, mu: &S) -> Result<Subspace<S>> {
    Ok(Subspace::column_space(&phi_lambda_mu_matrix(space, lambda, mu)?))
}

pub fn image_phi_epsilon_lambda<S: ComplexScalar>(space: &SymbolSpace, lambda: &S) -> Result<Subspace<S>> {
    Ok(Subspace::column_space(&phi_epsilon_lambda_matrix(space, lambda)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Plus,
    Minus,
}

/// Whether `(FCl₊, Im Φ_{λ,μ})` (or `FCl₋`) is a splitting, computed directly.
pub fn splitting_region_check<S: ComplexScalar>(
    space: &SymbolSpace,
    lambda: &S,
    mu: &S,
    side: Side,
) -> Result<bool> {
    let image = image_phi_lambda_mu(space, lambda, mu)?;
    let fixed = match side {
        Side::Plus => subspace_plus(space),
        Side::Minus => subspace_minus(space),
    };
    is_splitting(&fixed, &image)
}

/// `((FCl₊, FCl₋), (FCl_odd, FCl_even))`.
pub fn theorem_pair<S: Scalar>(space: &SymbolSpace) -> SplittingPair<S> {
    SplittingPair::from_subspaces(
        subspace_plus(space),
        subspace_minus(space),
        subspace_odd(space),
        subspace_even(space),
    )
    .expect("eigenspace splittings of involutions")
}

/// `D̃V` of [`theorem_pair`]; equals `2·Id`.
pub fn cross_ratio_theorem_check<S: Scalar>(space: &SymbolSpace) -> Result<EndoMap<S>> {
    let pair = theorem_pair(space);
    if !is_admissible(&pair) {
        return Err(Error::NotAdmissible {
            failed: crate::crossratio::admissibility_failures(pair.v1(), pair.w1(), pair.v2(), pair.w2())?,
        });
    }
    tilde_dv(&pair)
}
