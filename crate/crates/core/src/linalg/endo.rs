//! Endomorphisms of the ambient space: projectors, symmetries, and the
//! tangent/normal decomposition induced by a symmetry.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::matrix::Matrix;
use super::scalar::Scalar;
use super::subspace::{is_splitting, Splitting, Subspace};
use crate::error::{Error, Result};

/// A linear map of `Sⁿ` to itself.
#[derive(Clone, PartialEq)]
pub struct EndoMap<S> {
    mat: Matrix<S>,
}

impl<S: Scalar> EndoMap<S> {
    pub fn new(mat: Matrix<S>) -> Result<Self> {
        if !mat.is_square() {
            return Err(Error::ShapeMismatch {
                expected_rows: mat.rows(),
                expected_cols: mat.rows(),
                found_rows: mat.rows(),
                found_cols: mat.cols(),
            });
        }
        Ok(EndoMap { mat })
    }

    pub fn identity(dim: usize) -> Self {
        EndoMap {
            mat: Matrix::identity(dim),
        }
    }

    pub fn zero(dim: usize) -> Self {
        EndoMap {
            mat: Matrix::zeros(dim, dim),
        }
    }

    pub fn diagonal(diag: &[S]) -> Self {
        EndoMap {
            mat: Matrix::diagonal(diag),
        }
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.mat
    }

    pub fn into_matrix(self) -> Matrix<S> {
        self.mat
    }

    pub fn apply(&self, v: &[S]) -> Vec<S> {
        self.mat.mul_vec(v)
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::ShapeMismatch {
                expected_rows: self.dim(),
                expected_cols: self.dim(),
                found_rows: other.dim(),
                found_cols: other.dim(),
            });
        }
        Ok(())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(EndoMap {
            mat: &self.mat * &other.mat,
        })
    }

    pub fn scale(&self, k: &S) -> Self {
        EndoMap {
            mat: self.mat.scale(k),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.mat.is_identity()
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    /// Equal to `k · Id`.
    pub fn is_scalar(&self, k: &S) -> bool {
        self.mat.approx_eq(&Matrix::identity(self.dim()).scale(k))
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.mat.approx_eq(&other.mat)
    }

    pub fn kernel(&self) -> Subspace<S> {
        Subspace::kernel(&self.mat)
    }

    pub fn image(&self) -> Subspace<S> {
        Subspace::column_space(&self.mat)
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(EndoMap {
            mat: self.mat.inverse()?,
        })
    }

    pub fn is_invertible(&self) -> bool {
        self.mat.is_invertible()
    }

    pub fn is_projector(&self) -> bool {
        (&self.mat * &self.mat).approx_eq(&self.mat)
    }

    pub fn is_symmetry(&self) -> bool {
        (&self.mat * &self.mat).is_identity()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        EndoMap {
            mat: self.mat.adjoint(),
        }
    }

    /// Maps `v` into itself.
    pub fn preserves(&self, v: &Subspace<S>) -> bool {
        v.ambient_dim() == self.dim()
            && v
                .image_under(&self.mat)
                .map(|img| v.contains_subspace(&img))
                .unwrap_or(false)
    }

    /// Restriction to `domain`, read in the canonical bases of `domain` and
    /// `codomain`. Fails if the image of `domain` leaves `codomain`.
    pub fn restrict(&self, domain: &Subspace<S>, codomain: &Subspace<S>) -> Result<RestrictedMap<S>> {
        let images = self.mat.checked_mul(domain.basis())?;
        let mat = codomain.coordinates(&images)?;
        Ok(RestrictedMap {
            domain: domain.clone(),
            codomain: codomain.clone(),
            mat,
        })
    }
}

impl<S: Scalar> Mul for &EndoMap<S> {
    type Output = EndoMap<S>;
    fn mul(self, rhs: &EndoMap<S>) -> EndoMap<S> {
        EndoMap {
            mat: &self.mat * &rhs.mat,
        }
    }
}

impl<S: Scalar> Add for &EndoMap<S> {
    type Output = EndoMap<S>;
    fn add(self, rhs: &EndoMap<S>) -> EndoMap<S> {
        EndoMap {
            mat: &self.mat + &rhs.mat,
        }
    }
}

impl<S: Scalar> Sub for &EndoMap<S> {
    type Output = EndoMap<S>;
    fn sub(self, rhs: &EndoMap<S>) -> EndoMap<S> {
        EndoMap {
            mat: &self.mat - &rhs.mat,
        }
    }
}

impl<S: Scalar> Neg for &EndoMap<S> {
    type Output = EndoMap<S>;
    fn neg(self) -> EndoMap<S> {
        EndoMap { mat: -&self.mat }
    }
}

impl<S: Scalar> fmt::Debug for EndoMap<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.mat, f)
    }
}

/// A linear map between two subspaces, in their canonical bases.
#[derive(Clone, PartialEq)]
pub struct RestrictedMap<S> {
    domain: Subspace<S>,
    codomain: Subspace<S>,
    mat: Matrix<S>,
}

impl<S: Scalar> RestrictedMap<S> {
    pub fn new(domain: Subspace<S>, codomain: Subspace<S>, mat: Matrix<S>) -> Result<Self> {
        if mat.rows() != codomain.dim() || mat.cols() != domain.dim() {
            return Err(Error::ShapeMismatch {
                expected_rows: codomain.dim(),
                expected_cols: domain.dim(),
                found_rows: mat.rows(),
                found_cols: mat.cols(),
            });
        }
        Ok(RestrictedMap {
            domain,
            codomain,
            mat,
        })
    }

    pub fn identity(space: &Subspace<S>) -> Self {
        RestrictedMap {
            domain: space.clone(),
            codomain: space.clone(),
            mat: Matrix::identity(space.dim()),
        }
    }

    pub fn domain(&self) -> &Subspace<S> {
        &self.domain
    }

    pub fn codomain(&self) -> &Subspace<S> {
        &self.codomain
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.mat
    }

    /// `self ∘ first`; the codomain of `first` must be the domain of `self`.
    pub fn after(&self, first: &Self) -> Result<Self> {
        if first.codomain != self.domain {
            return Err(Error::NotInCodomain);
        }
        Ok(RestrictedMap {
            domain: first.domain.clone(),
            codomain: self.codomain.clone(),
            mat: self.mat.checked_mul(&first.mat)?,
        })
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(RestrictedMap {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            mat: self.mat.inverse()?,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.domain == self.codomain && self.mat.is_identity()
    }

    /// The map as an ambient-space matrix on the domain basis: columns are the
    /// images of the domain's canonical basis vectors.
    pub fn ambient_images(&self) -> Matrix<S> {
        self.codomain.basis() * &self.mat
    }
}

impl<S: Scalar> fmt::Debug for RestrictedMap<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} -> {:?}: {:?}", self.domain, self.codomain, self.mat)
    }
}

// ---------------------------------------------------------------------------
// Projectors and symmetries

/// The projector onto `v` along `w`, solving `p · [B_v | B_w] = [B_v | 0]`.
pub fn projector<S: Scalar>(v: &Subspace<S>, w: &Subspace<S>) -> Result<EndoMap<S>> {
    if !is_splitting(v, w)? {
        return Err(Error::NotASplitting);
    }
    let n = v.ambient_dim();
    let frame = Matrix::hstack(&[v.basis(), w.basis()])?;
    let target = Matrix::hstack(&[v.basis(), &Matrix::zeros(n, w.dim())])?;
    Ok(EndoMap {
        mat: &target * &frame.inverse()?,
    })
}

/// Projector associated with a splitting.
pub fn splitting_projector<S: Scalar>(sp: &Splitting<S>) -> EndoMap<S> {
    projector(sp.v(), sp.w()).expect("splitting invariant guarantees complementarity")
}

/// `(Im p, Ker p)`.
pub fn im_ker<S: Scalar>(p: &EndoMap<S>) -> Result<Splitting<S>> {
    if !p.is_projector() {
        return Err(Error::NotAProjector);
    }
    Splitting::new(p.image(), p.kernel())
}

/// `s = 2p − Id`.
pub fn symmetry_of<S: Scalar>(p: &EndoMap<S>) -> Result<EndoMap<S>> {
    if !p.is_projector() {
        return Err(Error::NotAProjector);
    }
    Ok(&p.scale(&S::from_i64(2)) - &EndoMap::identity(p.dim()))
}

/// `p = (s + Id) / 2`.
pub fn projector_of<S: Scalar>(s: &EndoMap<S>) -> Result<EndoMap<S>> {
    require_symmetry(s)?;
    Ok((s + &EndoMap::identity(s.dim())).scale(&S::from_ratio(1, 2)))
}

/// The symmetry whose ±1 eigenspaces are the given splitting.
pub fn symmetry_of_splitting<S: Scalar>(sp: &Splitting<S>) -> EndoMap<S> {
    symmetry_of(&splitting_projector(sp)).expect("projector from a splitting is idempotent")
}

/// `(Ker(s − Id), Ker(s + Id))`.
pub fn pol<S: Scalar>(s: &EndoMap<S>) -> Result<Splitting<S>> {
    require_symmetry(s)?;
    let id = EndoMap::identity(s.dim());
    let plus = (s - &id).kernel();
    let minus = (s + &id).kernel();
    Splitting::new(plus, minus)
}

fn require_symmetry<S: Scalar>(s: &EndoMap<S>) -> Result<()> {
    if s.is_symmetry() {
        Ok(())
    } else {
        Err(Error::NotASymmetry)
    }
}

fn require_same_dim<S: Scalar>(a: &EndoMap<S>, b: &EndoMap<S>) -> Result<()> {
    a.check_dim(b)
}

/// `u ↦ us + su`.
pub fn anticommutator<S: Scalar>(s: &EndoMap<S>, u: &EndoMap<S>) -> Result<EndoMap<S>> {
    require_same_dim(s, u)?;
    Ok(&(u * s) + &(s * u))
}

/// `[a, b] = ab − ba`.
pub fn commutator<S: Scalar>(a: &EndoMap<S>, b: &EndoMap<S>) -> Result<EndoMap<S>> {
    require_same_dim(a, b)?;
    Ok(&(a * b) - &(b * a))
}

/// Whether `s + u` is again a symmetry, tested as `su + us + u² = 0`.
pub fn is_symmetry_perturbation<S: Scalar>(s: &EndoMap<S>, u: &EndoMap<S>) -> Result<bool> {
    require_symmetry(s)?;
    let sum = &anticommutator(s, u)? + &(u * u);
    Ok(sum.is_zero())
}

/// `a_s^T = (a − sas) / 2`.
pub fn pi_tangent<S: Scalar>(s: &EndoMap<S>, a: &EndoMap<S>) -> Result<EndoMap<S>> {
    require_symmetry(s)?;
    require_same_dim(s, a)?;
    let sas = &(s * a) * s;
    Ok((a - &sas).scale(&S::from_ratio(1, 2)))
}

/// `a_s^N = (a + sas) / 2`.
pub fn pi_normal<S: Scalar>(s: &EndoMap<S>, a: &EndoMap<S>) -> Result<EndoMap<S>> {
    require_symmetry(s)?;
    require_same_dim(s, a)?;
    let sas = &(s * a) * s;
    Ok((a + &sas).scale(&S::from_ratio(1, 2)))
}

/// `a` anticommutes with `s`.
pub fn is_tangent<S: Scalar>(s: &EndoMap<S>, a: &EndoMap<S>) -> Result<bool> {
    require_symmetry(s)?;
    Ok(anticommutator(s, a)?.is_zero())
}

/// `a` commutes with `s`.
pub fn is_normal<S: Scalar>(s: &EndoMap<S>, a: &EndoMap<S>) -> Result<bool> {
    require_symmetry(s)?;
    Ok(commutator(a, s)?.is_zero())
}

/// Tangency tested through `(a + s)² = a² + Id`.
pub fn is_tangent_quadratic<S: Scalar>(s: &EndoMap<S>, a: &EndoMap<S>) -> Result<bool> {
    require_symmetry(s)?;
    require_same_dim(s, a)?;
    let apl = a + s;
    let lhs = &apl * &apl;
    let rhs = &(a * a) + &EndoMap::identity(a.dim());
    Ok(lhs.approx_eq(&rhs))
}

/// Normality tested through `(a + s)(a − s) = a² − Id`.
pub fn is_normal_quadratic<S: Scalar>(s: &EndoMap<S>, a: &EndoMap<S>) -> Result<bool> {
    require_symmetry(s)?;
    require_same_dim(s, a)?;
    let lhs = &(a + s) * &(a - s);
    let rhs = &(a * a) - &EndoMap::identity(a.dim());
    Ok(lhs.approx_eq(&rhs))
}
