//! Truncated Fourier model of `L²(S¹, ℂ)`.
//!
//! Coordinates are the coefficients `cₙ` of `zⁿ` for `n ∈ [−N, N]`, stored at
//! position `n + N`. The Dirac polarization splits the modes into
//! `E₊ (n > 0)`, `E₀ (n = 0)` and `E₋ (n < 0)`; the restricted-Grassmannian
//! blocks use `H₊ = E₊ ⊕ E₀` and `H₋ = E₋`.

use num::complex::Complex64;

use crate::crossratio::{dv, j_minus_pair, tilde_dv, SplittingPair};
use crate::error::{Error, Result};
use crate::linalg::{commutator, pol, EndoMap, Matrix, RestrictedMap, Scalar, Splitting, Subspace};

/// Stopping tolerance of the power iteration in [`operator_norm`].
pub const OPERATOR_NORM_TOLERANCE: f64 = 1e-8;
const OPERATOR_NORM_MAX_ITERS: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FourierModel {
    order: usize,
}

impl FourierModel {
    pub fn new(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidTruncation("Fourier order must be at least 1".into()));
        }
        Ok(FourierModel { order })
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// `2N + 1`.
    pub fn dim(&self) -> usize {
        2 * self.order + 1
    }

    pub fn modes(&self) -> impl Iterator<Item = i64> {
        let n = self.order as i64;
        -n..=n
    }

    /// Coordinate position of the mode `zⁿ`.
    pub fn position(&self, n: i64) -> usize {
        assert!(n.unsigned_abs() as usize <= self.order, "mode outside truncation");
        (n + self.order as i64) as usize
    }

    fn positions(&self, keep: impl Fn(i64) -> bool) -> Vec<usize> {
        self.modes().filter(|&n| keep(n)).map(|n| self.position(n)).collect()
    }

    /// Positions spanning `H₊` (`n ≥ 0`).
    pub fn plus_indices(&self) -> Vec<usize> {
        self.positions(|n| n >= 0)
    }

    /// Positions spanning `H₋` (`n < 0`).
    pub fn minus_indices(&self) -> Vec<usize> {
        self.positions(|n| n < 0)
    }

    pub fn e_plus<S: Scalar>(&self) -> Subspace<S> {
        Subspace::coordinate(self.dim(), &self.positions(|n| n > 0))
    }

    pub fn e_minus<S: Scalar>(&self) -> Subspace<S> {
        Subspace::coordinate(self.dim(), &self.positions(|n| n < 0))
    }

    pub fn e_zero<S: Scalar>(&self) -> Subspace<S> {
        Subspace::coordinate(self.dim(), &[self.position(0)])
    }

    pub fn h_plus<S: Scalar>(&self) -> Subspace<S> {
        Subspace::coordinate(self.dim(), &self.plus_indices())
    }

    pub fn h_minus<S: Scalar>(&self) -> Subspace<S> {
        Subspace::coordinate(self.dim(), &self.minus_indices())
    }

    /// Functions vanishing at `x = 0`: `Σₙ cₙ = 0`.
    pub fn h1<S: Scalar>(&self) -> Subspace<S> {
        Subspace::kernel(&Matrix::from_fn(1, self.dim(), |_, _| S::one()))
    }

    /// Functions with zero mean: `c₀ = 0`.
    pub fn h2<S: Scalar>(&self) -> Subspace<S> {
        Subspace::coordinate(self.dim(), &self.positions(|n| n != 0))
    }

    /// `((E₀, H₁), (E₀, H₂))`.
    pub fn constant_pair<S: Scalar>(&self) -> SplittingPair<S> {
        SplittingPair::from_subspaces(self.e_zero(), self.h1(), self.e_zero(), self.h2())
            .expect("E₀ complements both H₁ and H₂")
    }

    /// The polarization `(H₊, H₋)`.
    pub fn polarization<S: Scalar>(&self) -> Splitting<S> {
        Splitting::new(self.h_plus(), self.h_minus()).expect("coordinate splitting")
    }

    /// `ε`: `+1` on modes `n ≥ 0`, `−1` on `n < 0`.
    pub fn epsilon<S: Scalar>(&self) -> EndoMap<S> {
        let diag: Vec<S> = self
            .modes()
            .map(|n| if n >= 0 { S::one() } else { -S::one() })
            .collect();
        EndoMap::diagonal(&diag)
    }

    pub fn blocks<S: Scalar>(&self, a: &EndoMap<S>) -> Result<BlockOperator<S>> {
        BlockOperator::new(a.clone(), self.plus_indices(), self.minus_indices())
    }
}

/// An endomorphism together with the `(+, −)` index split used to read its
/// blocks `a₊₊, a₊₋, a₋₊, a₋₋`.
#[derive(Clone)]
pub struct BlockOperator<S> {
    map: EndoMap<S>,
    plus: Vec<usize>,
    minus: Vec<usize>,
}

impl<S: Scalar> std::fmt::Debug for BlockOperator<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BlockOperator")
            .field("map", &self.map)
            .field("plus", &self.plus)
            .field("minus", &self.minus)
            .finish()
    }
}

impl<S: Scalar> BlockOperator<S> {
    pub fn new(map: EndoMap<S>, plus: Vec<usize>, minus: Vec<usize>) -> Result<Self> {
        let mut all: Vec<usize> = plus.iter().chain(&minus).copied().collect();
        all.sort_unstable();
        if all != (0..map.dim()).collect::<Vec<_>>() {
            return Err(Error::InvalidTruncation(
                "block index sets must partition the coordinates".into(),
            ));
        }
        Ok(BlockOperator { map, plus, minus })
    }

    pub fn map(&self) -> &EndoMap<S> {
        &self.map
    }

    /// `a₊₊`: rows and columns in `H₊`.
    pub fn pp(&self) -> Matrix<S> {
        self.map.matrix().select(&self.plus, &self.plus)
    }

    /// `a₊₋`: maps `H₋` into `H₊`.
    pub fn pm(&self) -> Matrix<S> {
        self.map.matrix().select(&self.plus, &self.minus)
    }

    /// `a₋₊`: maps `H₊` into `H₋`.
    pub fn mp(&self) -> Matrix<S> {
        self.map.matrix().select(&self.minus, &self.plus)
    }

    pub fn mm(&self) -> Matrix<S> {
        self.map.matrix().select(&self.minus, &self.minus)
    }

    pub fn is_block_diagonal(&self) -> bool {
        self.pm().is_zero() && self.mp().is_zero()
    }

    pub fn is_block_off_diagonal(&self) -> bool {
        self.pp().is_zero() && self.mm().is_zero()
    }
}

/// Hilbert–Schmidt norm `(Σ |aᵢⱼ|²)^{1/2}`.
pub fn hs_norm<S: Scalar>(a: &EndoMap<S>) -> f64 {
    a.matrix()
        .entries()
        .iter()
        .map(Scalar::abs_sq)
        .sum::<f64>()
        .sqrt()
}

/// Largest singular value. Exact for diagonal maps; otherwise power iteration
/// on `a*a` until the relative change drops below
/// [`OPERATOR_NORM_TOLERANCE`].
pub fn operator_norm<S: Scalar>(a: &EndoMap<S>) -> f64 {
    let n = a.dim();
    let m = a.matrix();
    let diagonal = (0..n).all(|i| (0..n).all(|j| i == j || m[(i, j)].is_zero()));
    if diagonal {
        return (0..n).map(|i| m[(i, i)].magnitude()).fold(0.0, f64::max);
    }
    let c: Vec<Complex64> = m.entries().iter().map(Scalar::to_c64).collect();
    let apply = |v: &[Complex64]| -> Vec<Complex64> {
        (0..n)
            .map(|i| (0..n).map(|j| c[i * n + j] * v[j]).sum())
            .collect()
    };
    let apply_adj = |v: &[Complex64]| -> Vec<Complex64> {
        (0..n)
            .map(|j| (0..n).map(|i| c[i * n + j].conj() * v[i]).sum())
            .collect()
    };
    let norm = |v: &[Complex64]| v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    // Irrational offsets keep the start vector off any invariant coordinate subspace.
    let mut v: Vec<Complex64> = (0..n)
        .map(|i| Complex64::new(1.0 + (i as f64 * 0.618_033_988_75).fract(), 0.0))
        .collect();
    let v_norm = norm(&v);
    v.iter_mut().for_each(|z| *z /= v_norm);
    let mut estimate = 0.0;
    for _ in 0..OPERATOR_NORM_MAX_ITERS {
        let w = apply_adj(&apply(&v));
        let lambda = norm(&w);
        if lambda == 0.0 {
            return 0.0;
        }
        v = w.into_iter().map(|z| z / lambda).collect();
        let converged = (lambda - estimate).abs() <= OPERATOR_NORM_TOLERANCE * lambda;
        estimate = lambda;
        if converged {
            break;
        }
    }
    estimate.sqrt()
}

/// `‖a‖_op + ‖[ε, a]‖₂`.
pub fn l_res_seminorm<S: Scalar>(a: &EndoMap<S>, model: &FourierModel) -> Result<f64> {
    let comm = commutator(&model.epsilon(), a)?;
    Ok(operator_norm(a) + hs_norm(&comm))
}

fn require_symmetry<S: Scalar>(s: &EndoMap<S>) -> Result<()> {
    if s.is_symmetry() {
        Ok(())
    } else {
        Err(Error::NotASymmetry)
    }
}

fn full_column_rank<S: Scalar>(m: &Matrix<S>) -> bool {
    m.rank() == m.cols()
}

/// Whether `((H₊, H₋), Pol(s))` is admissible, decided from the blocks of `s`.
///
/// With `Pol(s) = (V, W)`: `W ∩ H₊ = {0}` iff `[s₋₊; s₊₊ + Id]` is injective,
/// and `V ∩ H₋ = {0}` iff `[s₊₋; s₋₋ − Id]` is injective. The dimension
/// conditions follow from these two.
pub fn admissible_with_polarization<S: Scalar>(s: &EndoMap<S>, model: &FourierModel) -> Result<bool> {
    require_symmetry(s)?;
    let b = model.blocks(s)?;
    let id_p = Matrix::identity(b.plus.len());
    let id_m = Matrix::identity(b.minus.len());
    let on_plus = stack(&b.mp(), &(&b.pp() + &id_p));
    let on_minus = stack(&b.pm(), &(&b.mm() - &id_m));
    Ok(full_column_rank(&on_plus) && full_column_rank(&on_minus))
}

/// Both off-diagonal blocks `s₋₊` and `s₊₋` are injective.
///
/// Sufficient for [`admissible_with_polarization`] but not necessary: `ε`
/// itself has zero off-diagonal blocks, and at truncation `s₋₊` maps an
/// `(N+1)`-dimensional space into an `N`-dimensional one.
pub fn offdiag_blocks_injective<S: Scalar>(s: &EndoMap<S>, model: &FourierModel) -> Result<bool> {
    require_symmetry(s)?;
    let b = model.blocks(s)?;
    Ok(full_column_rank(&b.mp()) && full_column_rank(&b.pm()))
}

fn stack<S: Scalar>(top: &Matrix<S>, bottom: &Matrix<S>) -> Matrix<S> {
    Matrix::hstack(&[&top.transpose(), &bottom.transpose()])
        .expect("blocks share the column count")
        .transpose()
}

/// Largest residual entry of the block system expressing
/// `(g(H₊), g(H₋)) = Pol(s)`:
///
/// ```text
/// g₊₊ = s₊₊g₊₊ + s₊₋g₋₊      g₊₋ = −s₊₊g₊₋ − s₊₋g₋₋
/// g₋₊ = s₋₊g₊₊ + s₋₋g₋₊      g₋₋ = −s₋₊g₊₋ − s₋₋g₋₋
/// ```
pub fn g_transport_residual<S: Scalar>(
    g: &EndoMap<S>,
    s: &EndoMap<S>,
    model: &FourierModel,
) -> Result<f64> {
    require_symmetry(s)?;
    let gb = model.blocks(g)?;
    let sb = model.blocks(s)?;
    let (gpp, gpm, gmp, gmm) = (gb.pp(), gb.pm(), gb.mp(), gb.mm());
    let (spp, spm, smp, smm) = (sb.pp(), sb.pm(), sb.mp(), sb.mm());
    let residuals = [
        &gpp - &(&(&spp * &gpp) + &(&spm * &gmp)),
        &gpm + &(&(&spp * &gpm) + &(&spm * &gmm)),
        &gmp - &(&(&smp * &gpp) + &(&smm * &gmp)),
        &gmm + &(&(&smp * &gpm) + &(&smm * &gmm)),
    ];
    Ok(residuals.iter().map(Matrix::max_abs).fold(0.0, f64::max))
}

/// An invertible `g` with `(g(H₊), g(H₋)) = (V, W)`, sending the coordinate
/// basis of `H₊` to the canonical basis of `V` and that of `H₋` to the
/// canonical basis of `W`.
pub fn transport_map<S: Scalar>(sp: &Splitting<S>, model: &FourierModel) -> Result<EndoMap<S>> {
    let plus = model.plus_indices();
    let minus = model.minus_indices();
    if sp.ambient_dim() != model.dim() {
        return Err(Error::AmbientMismatch {
            left: model.dim(),
            right: sp.ambient_dim(),
        });
    }
    if sp.v().dim() != plus.len() {
        return Err(Error::ShapeMismatch {
            expected_rows: model.dim(),
            expected_cols: plus.len(),
            found_rows: model.dim(),
            found_cols: sp.v().dim(),
        });
    }
    let mut g = Matrix::zeros(model.dim(), model.dim());
    for (target, basis) in [(&plus, sp.v().basis()), (&minus, sp.w().basis())] {
        for (k, &col) in target.iter().enumerate() {
            for i in 0..model.dim() {
                g[(i, col)] = basis[(i, k)].clone();
            }
        }
    }
    EndoMap::new(g)
}

/// `p₁ ∘ p₂|_{H₁}`, where `pᵢ` projects onto `Hᵢ` along `E₀`.
pub fn dv_h1_h2<S: Scalar>(model: &FourierModel) -> Result<RestrictedMap<S>> {
    dv(&j_minus_pair(&model.constant_pair()))
}

/// `D̃V((E₀, H₁), (E₀, H₂))`.
pub fn tilde_dv_h1_h2<S: Scalar>(model: &FourierModel) -> Result<EndoMap<S>> {
    tilde_dv(&model.constant_pair())
}

/// `Pol(ε) = (H₊, H₋)`, exposed for round-trip checks.
pub fn pol_epsilon<S: Scalar>(model: &FourierModel) -> Result<Splitting<S>> {
    pol(&model.epsilon())
}
