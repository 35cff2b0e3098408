//! Independent oracles for the integration tests. These work on plain
//! `Vec<Vec<BigRational>>` and share no code with the library's elimination.
#![allow(dead_code)]

use ncr_core::{EndoMap, Matrix, Rational};
use num::{BigRational, One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Raw = Vec<Vec<BigRational>>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn raw(m: &Matrix<Rational>) -> Raw {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m[(i, j)].0.clone()).collect())
        .collect()
}

pub fn from_raw(rows: &Raw) -> Matrix<Rational> {
    let vecs: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| r.iter().cloned().map(Rational).collect())
        .collect();
    Matrix::from_rows(&vecs).unwrap()
}

/// Rank by column-by-column elimination, pivoting on the last nonzero row.
pub fn oracle_rank(rows: &Raw) -> usize {
    let mut a = rows.clone();
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..n {
        let Some(p) = (rank..m).rev().find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..m {
            if !a[r][c].is_zero() {
                let f = &a[r][c] / &a[rank][c];
                for k in c..n {
                    let sub = &f * &a[rank][k];
                    a[r][k] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Inverse through the adjugate: `A⁻¹ = adj(A) / det(A)`, cofactors by
/// Laplace expansion. Only for small matrices.
pub fn oracle_inverse(a: &Raw) -> Option<Raw> {
    let n = a.len();
    let d = det(a);
    if d.is_zero() {
        return None;
    }
    Some(
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let sign = if (i + j) % 2 == 0 { BigRational::one() } else { -BigRational::one() };
                        sign * det(&minor(a, j, i)) / &d
                    })
                    .collect()
            })
            .collect(),
    )
}

fn minor(a: &Raw, row: usize, col: usize) -> Raw {
    a.iter()
        .enumerate()
        .filter(|&(i, _)| i != row)
        .map(|(_, r)| {
            r.iter()
                .enumerate()
                .filter(|&(j, _)| j != col)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect()
}

pub fn det(a: &Raw) -> BigRational {
    match a.len() {
        0 => BigRational::one(),
        1 => a[0][0].clone(),
        n => (0..n)
            .filter(|&j| !a[0][j].is_zero())
            .map(|j| {
                let term = &a[0][j] * det(&minor(a, 0, j));
                if j % 2 == 0 { term } else { -term }
            })
            .fold(BigRational::zero(), |acc, t| acc + t),
    }
}

/// Product with the summation loop outermost.
pub fn naive_mul(a: &Raw, b: &Raw) -> Raw {
    let (m, k, n) = (a.len(), b.len(), b.first().map_or(0, Vec::len));
    let mut out = vec![vec![BigRational::zero(); n]; m];
    for l in 0..k {
        for i in 0..m {
            for j in 0..n {
                out[i][j] += &a[i][l] * &b[l][j];
            }
        }
    }
    out
}

/// Whether `v` lies in the column span of `basis`.
pub fn in_span(basis: &Matrix<Rational>, v: &[Rational]) -> bool {
    let mut aug = raw(basis);
    for (row, x) in aug.iter_mut().zip(v) {
        row.push(x.0.clone());
    }
    oracle_rank(&aug) == oracle_rank(&raw(basis))
}

pub fn endo(m: Raw) -> EndoMap<Rational> {
    EndoMap::new(from_raw(&m)).unwrap()
}
