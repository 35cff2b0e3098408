//! Admissible couples of splittings and the non-commutative cross-ratio.
//!
//! For a couple `((V₁,W₁),(V₂,W₂))` whose cross pairs `(V₁,W₂)` and `(V₂,W₁)`
//! are also splittings:
//!
//! - `DV` is `p_(V₁,W₂) ∘ p_(V₂,W₁)` restricted to `V₁`, an automorphism of `V₁`;
//! - `Φ` extends it to the ambient space by precomposing with `p_(V₁,W₁)`;
//! - `D̃V = Φ(pair) + Φ(J₋ pair)` is block diagonal in `V₁ ⊕ W₁`;
//! - `Ξ = D̃V(pair) ∘ D̃V(J̃ pair)` fixes `V₁` pointwise and acts on the
//!   complements of `V₁`.
//!
//! `D̃V(J̃ pair)` is the inverse of `D̃V(pair)`, so `Ξ` evaluates to the
//! identity on every admissible couple. It is still computed as the
//! composite of the two maps.

use crate::error::{Condition, Error, Result};
use crate::linalg::{
    is_splitting, projector, splitting_projector, EndoMap, Matrix, RestrictedMap, Scalar,
    Splitting, Subspace,
};

/// Two splittings of the same ambient space.
#[derive(Clone, PartialEq)]
pub struct SplittingPair<S> {
    first: Splitting<S>,
    second: Splitting<S>,
}

impl<S: Scalar> SplittingPair<S> {
    pub fn new(first: Splitting<S>, second: Splitting<S>) -> Result<Self> {
        if first.ambient_dim() != second.ambient_dim() {
            return Err(Error::AmbientMismatch {
                left: first.ambient_dim(),
                right: second.ambient_dim(),
            });
        }
        Ok(SplittingPair { first, second })
    }

    /// Builds `((v1,w1),(v2,w2))`, failing with `NotASplitting` if either
    /// component is not a splitting.
    pub fn from_subspaces(
        v1: Subspace<S>,
        w1: Subspace<S>,
        v2: Subspace<S>,
        w2: Subspace<S>,
    ) -> Result<Self> {
        Self::new(Splitting::new(v1, w1)?, Splitting::new(v2, w2)?)
    }

    pub fn first(&self) -> &Splitting<S> {
        &self.first
    }

    pub fn second(&self) -> &Splitting<S> {
        &self.second
    }

    pub fn v1(&self) -> &Subspace<S> {
        self.first.v()
    }

    pub fn w1(&self) -> &Subspace<S> {
        self.first.w()
    }

    pub fn v2(&self) -> &Subspace<S> {
        self.second.v()
    }

    pub fn w2(&self) -> &Subspace<S> {
        self.second.w()
    }

    pub fn ambient_dim(&self) -> usize {
        self.first.ambient_dim()
    }
}

impl<S: Scalar> std::fmt::Debug for SplittingPair<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({:?}, {:?})", self.first, self.second)
    }
}

/// Conditions among `V₁⊕W₁, V₂⊕W₂, V₁⊕W₂, V₂⊕W₁` that fail, in that order.
pub fn admissibility_failures<S: Scalar>(
    v1: &Subspace<S>,
    w1: &Subspace<S>,
    v2: &Subspace<S>,
    w2: &Subspace<S>,
) -> Result<Vec<Condition>> {
    let mut failed = Vec::new();
    for cond in Condition::ALL {
        let (a, b) = match cond {
            Condition::V1W1 => (v1, w1),
            Condition::V2W2 => (v2, w2),
            Condition::V1W2 => (v1, w2),
            Condition::V2W1 => (v2, w1),
        };
        if !is_splitting(a, b)? {
            failed.push(cond);
        }
    }
    Ok(failed)
}

fn failures<S: Scalar>(pair: &SplittingPair<S>) -> Vec<Condition> {
    admissibility_failures(pair.v1(), pair.w1(), pair.v2(), pair.w2())
        .expect("pair components share the ambient dimension")
}

/// Both cross pairs `(V₁,W₂)` and `(V₂,W₁)` are splittings.
pub fn is_admissible<S: Scalar>(pair: &SplittingPair<S>) -> bool {
    failures(pair).is_empty()
}

fn require_admissible<S: Scalar>(pair: &SplittingPair<S>) -> Result<()> {
    let failed = failures(pair);
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Error::NotAdmissible { failed })
    }
}

// ---------------------------------------------------------------------------
// Involutions

/// `(V, W) ↦ (W, V)`.
pub fn j_minus<S: Scalar>(sp: &Splitting<S>) -> Splitting<S> {
    sp.swapped()
}

/// `J₋` applied to both components.
pub fn j_minus_pair<S: Scalar>(pair: &SplittingPair<S>) -> SplittingPair<S> {
    SplittingPair {
        first: pair.first.swapped(),
        second: pair.second.swapped(),
    }
}

/// `((V₁,W₁),(V₂,W₂)) ↦ ((V₁,W₂),(V₂,W₁))`.
pub fn tilde_j<S: Scalar>(pair: &SplittingPair<S>) -> Result<SplittingPair<S>> {
    require_admissible(pair)?;
    SplittingPair::from_subspaces(
        pair.v1().clone(),
        pair.w2().clone(),
        pair.v2().clone(),
        pair.w1().clone(),
    )
}

/// `((V₁,W₁),(V₂,W₂)) ↦ ((V₂,W₂),(V₁,W₁))`.
pub fn j_sw<S: Scalar>(pair: &SplittingPair<S>) -> SplittingPair<S> {
    SplittingPair {
        first: pair.second.clone(),
        second: pair.first.clone(),
    }
}

// ---------------------------------------------------------------------------
// Cross-ratio maps

/// `p_(V₁,W₂) ∘ p_(V₂,W₁)` restricted to `V₁`, in the canonical basis of `V₁`.
pub fn dv<S: Scalar>(pair: &SplittingPair<S>) -> Result<RestrictedMap<S>> {
    require_admissible(pair)?;
    let composite = &projector(pair.v1(), pair.w2())? * &projector(pair.v2(), pair.w1())?;
    composite.restrict(pair.v1(), pair.v1())
}

/// The four projectors of an admissible couple. Projectors of swapped
/// splittings are `Id − p`.
struct Projectors<S> {
    p11: EndoMap<S>,
    p22: EndoMap<S>,
    p12: EndoMap<S>,
    p21: EndoMap<S>,
}

impl<S: Scalar> Projectors<S> {
    fn of(pair: &SplittingPair<S>) -> Result<Self> {
        require_admissible(pair)?;
        Ok(Projectors {
            p11: splitting_projector(&pair.first),
            p22: splitting_projector(&pair.second),
            p12: projector(pair.v1(), pair.w2())?,
            p21: projector(pair.v2(), pair.w1())?,
        })
    }

    fn complement(p: &EndoMap<S>) -> EndoMap<S> {
        &EndoMap::identity(p.dim()) - p
    }

    /// `a∘b∘c + (Id−b)∘(Id−a)∘(Id−c)`, which is `Φ(q) + Φ(J₋ q)` for a couple
    /// `q` with `a = p_(V₁,W₂)`, `b = p_(V₂,W₁)`, `c = p_(V₁,W₁)`.
    fn tilde(a: &EndoMap<S>, b: &EndoMap<S>, c: &EndoMap<S>) -> EndoMap<S> {
        let direct = &(a * b) * c;
        let swapped =
            &(&Self::complement(b) * &Self::complement(a)) * &Self::complement(c);
        &direct + &swapped
    }

    fn phi(&self) -> EndoMap<S> {
        &(&self.p12 * &self.p21) * &self.p11
    }

    fn tilde_dv(&self) -> EndoMap<S> {
        Self::tilde(&self.p12, &self.p21, &self.p11)
    }

    /// `D̃V(J̃ pair)`: `J̃` sends `p11, p22, p12, p21` to `p12, p21, p11, p22`.
    fn tilde_dv_crossed(&self) -> EndoMap<S> {
        Self::tilde(&self.p11, &self.p22, &self.p12)
    }

    fn xi(&self) -> EndoMap<S> {
        &self.tilde_dv() * &self.tilde_dv_crossed()
    }
}

/// `DV(pair) ∘ p_(V₁,W₁)` as an endomorphism of the ambient space.
pub fn phi<S: Scalar>(pair: &SplittingPair<S>) -> Result<EndoMap<S>> {
    Ok(Projectors::of(pair)?.phi())
}

/// `Φ(pair) + Φ(J₋ pair)`.
pub fn tilde_dv<S: Scalar>(pair: &SplittingPair<S>) -> Result<EndoMap<S>> {
    Ok(Projectors::of(pair)?.tilde_dv())
}

/// Extends an automorphism of `sp.v()` by zero on `sp.w()`.
fn extend_along<S: Scalar>(map: &RestrictedMap<S>, sp: &Splitting<S>) -> EndoMap<S> {
    let p = splitting_projector(sp);
    let coords = sp.v().coordinates_unchecked(p.matrix());
    EndoMap::new(&map.ambient_images() * &coords).expect("square by construction")
}

/// `D̃V(pair)` assembled from its two diagonal blocks in `V₁ ⊕ W₁`.
pub fn tilde_dv_blocks<S: Scalar>(pair: &SplittingPair<S>) -> Result<EndoMap<S>> {
    let on_v1 = dv(pair)?;
    let on_w1 = dv(&j_minus_pair(pair))?;
    let upper = extend_along(&on_v1, &pair.first);
    let lower = extend_along(&on_w1, &pair.first.swapped());
    Ok(&upper + &lower)
}

/// Inverse of [`tilde_dv`], as `Φ(J̃ pair) + Φ(J₋(J̃ pair))`.
///
/// `J̃` is applied before `J₋`; in the other order the two `Φ` terms are
/// extended along the wrong complements and the sum is not an inverse.
pub fn tilde_dv_inverse<S: Scalar>(pair: &SplittingPair<S>) -> Result<EndoMap<S>> {
    Ok(Projectors::of(pair)?.tilde_dv_crossed())
}

/// `D̃V(pair) ∘ D̃V(J̃ pair)`.
pub fn xi<S: Scalar>(pair: &SplittingPair<S>) -> Result<EndoMap<S>> {
    Ok(Projectors::of(pair)?.xi())
}

/// Image of a complement `w` of `v1` under `Ξ(pair)`, where `v1` is the first
/// subspace of the pair. The result is again a complement of `v1`.
pub fn xi_move<S: Scalar>(
    v1: &Subspace<S>,
    pair: &SplittingPair<S>,
    w: &Subspace<S>,
) -> Result<Subspace<S>> {
    if pair.v1() != v1 {
        return Err(Error::BaseMismatch);
    }
    let projectors = Projectors::of(pair)?;
    if !is_splitting(v1, w)? {
        return Err(Error::NotInRelativeGrassmannian);
    }
    w.image_under(projectors.xi().matrix())
}

/// Blocks `(VV, VW, WV, WW)` of an endomorphism written in a basis adapted to
/// `V ⊕ W`. `VW` is the `V`-row, `W`-column block.
pub fn adapted_blocks<S: Scalar>(
    map: &EndoMap<S>,
    sp: &Splitting<S>,
) -> Result<[Matrix<S>; 4]> {
    let frame = Matrix::hstack(&[sp.v().basis(), sp.w().basis()])?;
    let local = &(&frame.inverse()? * map.matrix()) * &frame;
    let k = sp.v().dim();
    let n = sp.ambient_dim();
    let vr: Vec<usize> = (0..k).collect();
    let wr: Vec<usize> = (k..n).collect();
    Ok([
        local.select(&vr, &vr),
        local.select(&vr, &wr),
        local.select(&wr, &vr),
        local.select(&wr, &wr),
    ])
}

/// Whether the `V₁`-row, `W₁`-column block of `Ξ(pair)` in `V₁ ⊕ W₁` is zero.
pub fn block_offdiag_vanishes<S: Scalar>(pair: &SplittingPair<S>) -> Result<bool> {
    let xi = xi(pair)?;
    let [_, upper_right, _, _] = adapted_blocks(&xi, &pair.first)?;
    Ok(upper_right.is_zero())
}

/// `(p_(V₂,W₁)|_{V₁}, p_(V₁,W₁)|_{V₂})`, two mutually inverse isomorphisms
/// `V₁ → V₂` and `V₂ → V₁`.
pub fn transport_maps<S: Scalar>(
    pair: &SplittingPair<S>,
) -> Result<(RestrictedMap<S>, RestrictedMap<S>)> {
    require_admissible(pair)?;
    let forward = projector(pair.v2(), pair.w1())?.restrict(pair.v1(), pair.v2())?;
    let back = splitting_projector(&pair.first).restrict(pair.v2(), pair.v1())?;
    Ok((forward, back))
}

/// The plane example: `V₁ = {y = 0}`, `W₁ = {x = 0}`, `V₂ = {y = t x}`,
/// `W₂ = {x + t y = 0}`, with `t = tan θ`.
pub fn plane_example<S: Scalar>(t: S) -> SplittingPair<S> {
    let v = |x: S, y: S| Subspace::span(2, &[vec![x, y]]).expect("plane vector");
    SplittingPair::from_subspaces(
        v(S::one(), S::zero()),
        v(S::zero(), S::one()),
        v(S::one(), t.clone()),
        v(-t, S::one()),
    )
    .expect("plane example is a pair of splittings")
}

/// [`plane_example`] parametrized by the angle, with unit direction vectors.
pub fn plane_example_angle(theta: f64) -> SplittingPair<crate::linalg::ComplexFloat> {
    use crate::linalg::ComplexFloat as C;
    let (s, c) = theta.sin_cos();
    let v = |x: f64, y: f64| Subspace::span(2, &[vec![C::new(x, 0.0), C::new(y, 0.0)]]).expect("plane vector");
    SplittingPair::from_subspaces(v(1.0, 0.0), v(0.0, 1.0), v(c, s), v(-s, c))
        .expect("plane example is a pair of splittings")
}
