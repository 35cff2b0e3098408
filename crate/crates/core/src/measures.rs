//! Signed measures on a finite ground set and the splittings of `V^X` they
//! induce.
//!
//! Functions `X → V` with `dim V = m` are flattened point-major: the value
//! at point `i` occupies coordinates `i·m .. (i+1)·m`.

use std::collections::HashSet;
use std::fmt;

use crate::crossratio::{is_admissible, SplittingPair};
use crate::error::{Error, Result};
use crate::linalg::{symmetry_of, EndoMap, Rational, Scalar, Splitting, Subspace};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGround {
    points: Vec<String>,
}

impl FiniteGround {
    pub fn new(points: Vec<String>) -> Result<Self> {
        let mut seen = HashSet::new();
        if let Some(dup) = points.iter().find(|p| !seen.insert(p.as_str())) {
            return Err(Error::InvalidNumber(format!("duplicate point label {dup:?}")));
        }
        Ok(FiniteGround { points })
    }

    /// Points labelled `x1, …, xn`.
    pub fn numbered(n: usize) -> Self {
        FiniteGround {
            points: (1..=n).map(|i| format!("x{i}")).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedMeasure {
    weights: Vec<Rational>,
}

impl SignedMeasure {
    pub fn new(weights: Vec<Rational>) -> Self {
        SignedMeasure { weights }
    }

    pub fn from_ints(weights: &[i64]) -> Self {
        SignedMeasure::new(weights.iter().map(|&w| Rational::from(w)).collect())
    }

    pub fn zero(n: usize) -> Self {
        SignedMeasure::new(vec![Rational::zero(); n])
    }

    pub fn ground_size(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn is_nonnegative(&self) -> bool {
        self.weights.iter().all(|w| !w.is_negative())
    }

    /// Points of nonzero weight.
    pub fn support(&self) -> Vec<usize> {
        (0..self.weights.len())
            .filter(|&i| !self.weights[i].is_zero())
            .collect()
    }

    /// `μ(f) = Σ μᵢ fᵢ`.
    pub fn integrate(&self, f: &[Rational]) -> Rational {
        self.weights
            .iter()
            .zip(f)
            .fold(Rational::zero(), |acc, (w, x)| acc + w.clone() * x.clone())
    }

    /// The total variation `|μ| = μ⁺ + μ⁻`.
    pub fn total_variation(&self) -> SignedMeasure {
        SignedMeasure::new(self.weights.iter().map(Rational::abs).collect())
    }
}

impl std::ops::Sub for &SignedMeasure {
    type Output = SignedMeasure;

    fn sub(self, rhs: &SignedMeasure) -> SignedMeasure {
        assert_eq!(self.ground_size(), rhs.ground_size(), "ground size mismatch");
        SignedMeasure::new(
            self.weights
                .iter()
                .zip(&rhs.weights)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }
}

/// A two-block partition `X = X⁺ ⊔ X⁻`, stored as membership in `X⁺`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MuPartition {
    plus: Vec<bool>,
}

impl MuPartition {
    pub fn new(plus: Vec<bool>) -> Self {
        MuPartition { plus }
    }

    pub fn from_plus_points(n: usize, x_plus: &[usize]) -> Self {
        let mut plus = vec![false; n];
        for &i in x_plus {
            plus[i] = true;
        }
        MuPartition { plus }
    }

    pub fn ground_size(&self) -> usize {
        self.plus.len()
    }

    pub fn in_plus(&self, i: usize) -> bool {
        self.plus[i]
    }

    pub fn x_plus(&self) -> Vec<usize> {
        (0..self.plus.len()).filter(|&i| self.plus[i]).collect()
    }

    pub fn x_minus(&self) -> Vec<usize> {
        (0..self.plus.len()).filter(|&i| !self.plus[i]).collect()
    }

    /// `supp μ⁺ ⊆ X⁺` and `supp μ⁻ ⊆ X⁻`.
    pub fn is_mu_partition(&self, mu: &SignedMeasure) -> bool {
        mu.ground_size() == self.ground_size()
            && mu.weights.iter().zip(&self.plus).all(|(w, &p)| {
                if p {
                    !w.is_negative()
                } else {
                    !w.is_positive()
                }
            })
    }
}

impl fmt::Display for MuPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.plus
            .iter()
            .try_for_each(|&p| f.write_str(if p { "+" } else { "-" }))
    }
}

/// `(μ⁺, μ⁻)` with `μ⁺ = max(μ, 0)` and `μ⁻ = max(−μ, 0)` pointwise.
pub fn jordan(mu: &SignedMeasure) -> (SignedMeasure, SignedMeasure) {
    let split = |keep_positive: bool| {
        SignedMeasure::new(
            mu.weights
                .iter()
                .map(|w| match (keep_positive, w.is_positive(), w.is_negative()) {
                    (true, true, _) => w.clone(),
                    (false, _, true) => -w.clone(),
                    _ => Rational::zero(),
                })
                .collect(),
        )
    };
    (split(true), split(false))
}

/// Every partition of `n` points, in binary order of `X⁺`-membership
/// (the first point is the most significant).
pub fn all_partitions(n: usize) -> Vec<MuPartition> {
    assert!(n < usize::BITS as usize, "ground set too large to enumerate");
    (0..1usize << n)
        .map(|mask| MuPartition::new((0..n).map(|i| mask >> (n - 1 - i) & 1 == 1).collect()))
        .collect()
}

/// All `2ᶻ` μ-partitions, `z` being the number of zero-weight points.
/// Zero-weight points are assigned in binary order, `X⁻` first.
pub fn valid_partitions(mu: &SignedMeasure) -> Vec<MuPartition> {
    let zeros: Vec<usize> = (0..mu.ground_size())
        .filter(|&i| mu.weights[i].is_zero())
        .collect();
    let base: Vec<bool> = mu.weights.iter().map(Rational::is_positive).collect();
    all_partitions(zeros.len())
        .into_iter()
        .map(|choice| {
            let mut plus = base.clone();
            for (slot, &i) in zeros.iter().enumerate() {
                plus[i] = choice.in_plus(slot);
            }
            MuPartition::new(plus)
        })
        .collect()
}

/// `p_{X⁺}: f ↦ 1_{X⁺} f` on `V^X`, `dim V = m`.
pub fn indicator_projector<S: Scalar>(part: &MuPartition, m: usize) -> EndoMap<S> {
    let diag: Vec<S> = part
        .plus
        .iter()
        .flat_map(|&p| std::iter::repeat_n(if p { S::one() } else { S::zero() }, m))
        .collect();
    EndoMap::diagonal(&diag)
}

/// `s_{(X⁺,X⁻)} = 2 p_{X⁺} − Id`.
pub fn partition_symmetry<S: Scalar>(part: &MuPartition, m: usize) -> EndoMap<S> {
    symmetry_of(&indicator_projector(part, m)).expect("indicator maps are projectors")
}

/// `(V^{X⁺}, V^{X⁻})`: functions supported on `X⁺`, resp. `X⁻`.
pub fn partition_splitting<S: Scalar>(part: &MuPartition, m: usize) -> Splitting<S> {
    let coords = |pts: Vec<usize>| -> Vec<usize> {
        pts.into_iter().flat_map(|i| i * m..(i + 1) * m).collect()
    };
    let n = part.ground_size() * m;
    Splitting::new(
        Subspace::coordinate(n, &coords(part.x_plus())),
        Subspace::coordinate(n, &coords(part.x_minus())),
    )
    .expect("complementary coordinate subspaces")
}

/// `μ(f) = |μ|(s_{(X⁺,X⁻)} f)` for scalar-valued `f`.
pub fn pairing_identity_check(mu: &SignedMeasure, part: &MuPartition, f: &[Rational]) -> Result<bool> {
    if !part.is_mu_partition(mu) {
        return Err(Error::NotAMuPartition);
    }
    if f.len() != mu.ground_size() {
        return Err(Error::GroundMismatch {
            left: mu.ground_size(),
            right: f.len(),
        });
    }
    let sf = partition_symmetry::<Rational>(part, 1).apply(f);
    Ok(mu.integrate(f) == mu.total_variation().integrate(&sf))
}

/// Whether the splittings of `V^X` induced by two partitions form an
/// admissible couple.
pub fn no_go_check(part1: &MuPartition, part2: &MuPartition, m: usize) -> Result<bool> {
    if part1.ground_size() != part2.ground_size() {
        return Err(Error::GroundMismatch {
            left: part1.ground_size(),
            right: part2.ground_size(),
        });
    }
    let pair = SplittingPair::new(
        partition_splitting::<Rational>(part1, m),
        partition_splitting(part2, m),
    )?;
    Ok(is_admissible(&pair))
}
