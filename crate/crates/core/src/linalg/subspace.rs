use std::fmt;

use super::matrix::Matrix;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// A linear subspace of `Sⁿ` in canonical form.
///
/// The basis is the transpose of the reduced row echelon form of any spanning
/// set, so two values compare equal exactly when they span the same subspace.
/// Restricted to its pivot rows the basis is the identity, which makes
/// coordinates a row selection.
#[derive(Clone, PartialEq)]
pub struct Subspace<S> {
    ambient_dim: usize,
    basis: Matrix<S>,
    pivots: Vec<usize>,
}

impl<S: Scalar> Subspace<S> {
    /// The subspace spanned by the columns of `m`.
    pub fn column_space(m: &Matrix<S>) -> Self {
        let ambient_dim = m.rows();
        let echelon = m.transpose().rref();
        let rank = echelon.rank();
        let rows: Vec<usize> = (0..rank).collect();
        let basis = echelon.reduced.select_rows(&rows).transpose();
        Subspace {
            ambient_dim,
            basis,
            pivots: echelon.pivots,
        }
    }

    /// The subspace spanned by the given vectors.
    pub fn span(ambient_dim: usize, vectors: &[Vec<S>]) -> Result<Self> {
        Ok(Self::column_space(&Matrix::from_columns(ambient_dim, vectors)?))
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(ambient_dim, 0),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient_dim: usize, indices: &[usize]) -> Self {
        let vectors: Vec<Vec<S>> = indices
            .iter()
            .map(|&i| {
                let mut v = vec![S::zero(); ambient_dim];
                v[i] = S::one();
                v
            })
            .collect();
        Self::column_space(&Matrix::from_fn(ambient_dim, vectors.len(), |i, j| {
            vectors[j][i].clone()
        }))
    }

    /// Kernel of `m` as a subspace of its domain.
    pub fn kernel(m: &Matrix<S>) -> Self {
        Self::column_space(&m.nullspace())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Canonical basis as the columns of an `ambient_dim × dim` matrix.
    pub fn basis(&self) -> &Matrix<S> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<S>> {
        self.basis.columns()
    }

    /// Rows on which the canonical basis restricts to the identity.
    pub fn pivot_rows(&self) -> &[usize] {
        &self.pivots
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::AmbientMismatch {
                left: self.ambient_dim,
                right: other.ambient_dim,
            });
        }
        Ok(())
    }

    /// Coordinates of the columns of `m` in the canonical basis, assuming each
    /// column lies in the subspace.
    pub fn coordinates_unchecked(&self, m: &Matrix<S>) -> Matrix<S> {
        m.select_rows(&self.pivots)
    }

    /// Coordinates of the columns of `m`, or `NotInCodomain` if some column is
    /// outside the subspace.
    pub fn coordinates(&self, m: &Matrix<S>) -> Result<Matrix<S>> {
        if m.rows() != self.ambient_dim {
            return Err(Error::AmbientMismatch {
                left: self.ambient_dim,
                right: m.rows(),
            });
        }
        let coords = self.coordinates_unchecked(m);
        if !(&self.basis * &coords).approx_eq(m) {
            return Err(Error::NotInCodomain);
        }
        Ok(coords)
    }

    pub fn contains(&self, v: &[S]) -> bool {
        v.len() == self.ambient_dim
            && self
                .coordinates(&Matrix::from_fn(v.len(), 1, |i, _| v[i].clone()))
                .is_ok()
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        other.ambient_dim == self.ambient_dim && self.coordinates(&other.basis).is_ok()
    }

    /// `self ∩ other`, from the kernel of `[B_self | −B_other]`.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let stacked = Matrix::hstack(&[&self.basis, &(-&other.basis)])?;
        let kernel = stacked.nullspace();
        let own: Vec<usize> = (0..self.dim()).collect();
        let coords = kernel.select_rows(&own);
        Ok(Self::column_space(&(&self.basis * &coords)))
    }

    /// `self + other`.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(Self::column_space(&Matrix::hstack(&[&self.basis, &other.basis])?))
    }

    /// Image of the subspace under `m`.
    pub fn image_under(&self, m: &Matrix<S>) -> Result<Self> {
        if m.cols() != self.ambient_dim {
            return Err(Error::AmbientMismatch {
                left: self.ambient_dim,
                right: m.cols(),
            });
        }
        Ok(Self::column_space(&m.checked_mul(&self.basis)?))
    }
}

impl<S: Scalar> fmt::Debug for Subspace<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vecs: Vec<String> = self
            .basis_vectors()
            .iter()
            .map(|v| {
                let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
                format!("({})", parts.join(", "))
            })
            .collect();
        write!(f, "span[{}]{{{}}}", self.ambient_dim, vecs.join(", "))
    }
}

/// `true` iff `v ⊕ w` is the whole ambient space.
pub fn is_splitting<S: Scalar>(v: &Subspace<S>, w: &Subspace<S>) -> Result<bool> {
    v.check_ambient(w)?;
    if v.dim() + w.dim() != v.ambient_dim() {
        return Ok(false);
    }
    // With complementary dimensions, V ∩ W = 0 iff the joint basis has full rank.
    Ok(Matrix::hstack(&[&v.basis, &w.basis])?.rank() == v.ambient_dim())
}

/// An ordered pair of complementary subspaces.
#[derive(Clone, PartialEq)]
pub struct Splitting<S> {
    v: Subspace<S>,
    w: Subspace<S>,
}

impl<S: Scalar> Splitting<S> {
    pub fn new(v: Subspace<S>, w: Subspace<S>) -> Result<Self> {
        if !is_splitting(&v, &w)? {
            return Err(Error::NotASplitting);
        }
        Ok(Splitting { v, w })
    }

    /// The trivial splitting `(Sⁿ, {0})`.
    pub fn trivial(ambient_dim: usize) -> Self {
        Splitting {
            v: Subspace::full(ambient_dim),
            w: Subspace::zero(ambient_dim),
        }
    }

    pub fn v(&self) -> &Subspace<S> {
        &self.v
    }

    pub fn w(&self) -> &Subspace<S> {
        &self.w
    }

    pub fn ambient_dim(&self) -> usize {
        self.v.ambient_dim()
    }

    /// `(V, W) ↦ (W, V)`.
    pub fn swapped(&self) -> Self {
        Splitting {
            v: self.w.clone(),
            w: self.v.clone(),
        }
    }

    pub fn into_parts(self) -> (Subspace<S>, Subspace<S>) {
        (self.v, self.w)
    }
}

impl<S: Scalar> fmt::Debug for Splitting<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.v, self.w)
    }
}
