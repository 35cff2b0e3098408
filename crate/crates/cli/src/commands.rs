use ncr_core::crossratio::{
    admissibility_failures, dv, tilde_dv, tilde_dv_inverse, tilde_j, xi, xi_move, SplittingPair,
};
use ncr_core::sampling::random_complement;
use ncr_core::{Condition, Matrix, Splitting};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use toml::Value;

use crate::encode::{encode_matrix, encode_vectors, Entry};
use crate::error::{CliError, Result};
use crate::problem::{PairSpec, Problem};
use crate::report::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum MapKind {
    Dv,
    Tilde,
    Xi,
}

impl MapKind {
    pub fn name(self) -> &'static str {
        match self {
            MapKind::Dv => "dv",
            MapKind::Tilde => "tilde",
            MapKind::Xi => "xi",
        }
    }
}

fn labels(conditions: &[Condition]) -> Value {
    Value::Array(conditions.iter().map(|c| Value::String(c.label().into())).collect())
}

pub fn admissible<S: Entry>(problem: &Problem<S>, pair: Option<&str>) -> Result<Report> {
    let (name, spec) = problem.pair(pair)?;
    let failed = admissibility_failures(&spec.v1, &spec.w1, &spec.v2, &spec.w2)?;
    let mut report = Report::new("admissible");
    report.set("field", S::FIELD);
    report.set("pair", name);
    report.set("ambient_dim", problem.ambient_dim as i64);
    report.set("admissible", failed.is_empty());
    report.set("failed_conditions", labels(&failed));
    for c in Condition::ALL {
        report.check(format!("{} is a splitting", c.label()), !failed.contains(&c));
    }
    Ok(report)
}

fn splitting_pair<S: Entry>(name: &str, spec: &PairSpec<S>) -> Result<SplittingPair<S>> {
    let failed = admissibility_failures(&spec.v1, &spec.w1, &spec.v2, &spec.w2)?;
    if !failed.is_empty() {
        return Err(CliError::NotAdmissible { pair: name.to_owned(), failed });
    }
    Ok(SplittingPair::new(
        Splitting::new(spec.v1.clone(), spec.w1.clone())?,
        Splitting::new(spec.v2.clone(), spec.w2.clone())?,
    )?)
}

/// `Some(λ)` when `m = λ·Id`.
fn scalar_multiple<S: Entry>(m: &Matrix<S>) -> Option<S> {
    if m.rows() == 0 {
        return None;
    }
    let lambda = m[(0, 0)].clone();
    (m == &Matrix::identity(m.rows()).scale(&lambda)).then_some(lambda)
}

pub fn crossratio<S: Entry>(problem: &Problem<S>, pair: Option<&str>, map: MapKind, seed: u64) -> Result<Report> {
    let (name, spec) = problem.pair(pair)?;
    let sp = splitting_pair(&name, spec)?;
    let mut report = Report::new("crossratio");
    report.set("field", S::FIELD);
    report.set("pair", name);
    report.set("map", map.name());
    report.set("ambient_dim", problem.ambient_dim as i64);
    let matrix = match map {
        MapKind::Dv => {
            let d = dv(&sp)?;
            report.set("v1_basis", encode_vectors(&sp.v1().basis_vectors()));
            d.matrix().clone()
        }
        MapKind::Tilde => tilde_dv(&sp)?.into_matrix(),
        MapKind::Xi => xi(&sp)?.into_matrix(),
    };
    report.set("dim", matrix.rows() as i64);
    if let Some(lambda) = scalar_multiple(&matrix) {
        report.set("scalar", lambda.encode());
    }
    report.set("matrix", encode_matrix(&matrix));

    let forward = dv(&sp)?;
    let back = dv(&tilde_j(&sp)?)?;
    report.check("dv(pair)·dv(J̃ pair) = Id(V₁)", forward.after(&back)?.is_identity());
    let t = tilde_dv(&sp)?;
    report.check("tilde_dv·tilde_dv_inverse = Id", (&t * &tilde_dv_inverse(&sp)?).is_identity());
    if sp.v1() == sp.v2() || sp.w1() == sp.w2() {
        report.check("tilde_dv = Id when V₁ = V₂ or W₁ = W₂", t.is_identity());
    }
    let x = xi(&sp)?;
    report.check("xi fixes V₁ pointwise", &(x.matrix() * sp.v1().basis()) == sp.v1().basis());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let w = random_complement(&mut rng, sp.v1());
    let moved = xi_move(sp.v1(), &sp, &w)?;
    report.check(
        format!("xi_move keeps a random complement of V₁ complementary (seed {seed})"),
        ncr_core::linalg::is_splitting(sp.v1(), &moved)?,
    );
    Ok(report)
}
