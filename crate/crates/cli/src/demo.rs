//! The three worked-example suites.

use ncr_core::crossratio::is_admissible;
use ncr_core::fourier::{dv_h1_h2, pol_epsilon, tilde_dv_h1_h2, FourierModel};
use ncr_core::linalg::{pi_normal, pi_tangent};
use ncr_core::measures::{all_partitions, jordan, no_go_check, pairing_identity_check, valid_partitions, SignedMeasure};
use ncr_core::symbols::{
    cross_ratio_theorem_check, image_phi_epsilon_lambda, image_phi_lambda_mu, phi_lambda_mu, s_d_matrix,
    s_kv_matrix, splitting_region_check, subspace_even, subspace_odd, theorem_pair, PsiDOElement, Side,
    SymbolSpace,
};
use ncr_core::{EndoMap, GaussianRational, Matrix, Rational, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toml::{Table, Value};

use crate::encode::{encode_matrix, Entry};
use crate::error::{CliError, Result};
use crate::report::Report;

pub const MAX_FOURIER_ORDER: usize = 32;
pub const MAX_DEGREE_SPAN: i64 = 8;
pub const MAX_SYMBOL_MODES: usize = 8;
pub const MAX_POINTS: usize = 6;
pub const MAX_VALUE_DIM: usize = 3;

/// Random operators, measures or operator coefficients drawn per demo.
const RANDOM_SAMPLES: usize = 20;

type G = GaussianRational;

fn cap(parameter: &'static str, value: i64, limit: i64) -> Result<()> {
    if value > limit {
        return Err(CliError::SizeLimitExceeded { parameter, value, limit });
    }
    Ok(())
}

fn random_g<R: Rng>(rng: &mut R) -> G {
    G::new(Rational::from(rng.random_range(-5..=5)), Rational::from(rng.random_range(-5..=5)))
}

pub fn fourier(order: usize, seed: u64) -> Result<Report> {
    cap("order", order as i64, MAX_FOURIER_ORDER as i64)?;
    let model = FourierModel::new(order)?;
    let n = model.dim();
    let mut report = Report::new("demo fourier");
    report.set("order", order as i64);
    report.set("dim", n as i64);
    report.set("seed", seed as i64);

    let pair = model.constant_pair::<G>();
    report.check("((E₀,H₁),(E₀,H₂)) admissible", is_admissible(&pair));
    let t = tilde_dv_h1_h2::<G>(&model)?;
    report.check(format!("tilde_dv = Id({n})"), t.is_identity());
    report.check("dv on H₁ = Id", dv_h1_h2::<G>(&model)?.is_identity());
    report.check("Pol(ε) = (H₊,H₋)", pol_epsilon::<G>(&model)? == model.polarization());

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let e = model.epsilon::<G>();
    let mut blocks_ok = true;
    for _ in 0..RANDOM_SAMPLES {
        let a = EndoMap::new(Matrix::from_fn(n, n, |_, _| random_g(&mut rng)))?;
        let (tb, nb, ab) = (
            model.blocks(&pi_tangent(&e, &a)?)?,
            model.blocks(&pi_normal(&e, &a)?)?,
            model.blocks(&a)?,
        );
        blocks_ok &= tb.is_block_off_diagonal()
            && nb.is_block_diagonal()
            && tb.pm() == ab.pm()
            && tb.mp() == ab.mp()
            && nb.pp() == ab.pp()
            && nb.mm() == ab.mm();
    }
    report.check(format!("ε-block forms of π_T, π_N on {RANDOM_SAMPLES} random operators"), blocks_ok);

    let mut objects = Table::new();
    for (name, dim) in [
        ("e_plus", model.e_plus::<G>().dim()),
        ("e_zero", model.e_zero::<G>().dim()),
        ("e_minus", model.e_minus::<G>().dim()),
        ("h1", model.h1::<G>().dim()),
        ("h2", model.h2::<G>().dim()),
    ] {
        objects.insert(format!("{name}_dim"), Value::Integer(dim as i64));
    }
    objects.insert("tilde_dv".into(), encode_matrix(t.matrix()));
    report.set("objects", objects);
    Ok(report)
}

pub fn symbols(d_min: i64, d_max: i64, modes: usize, seed: u64) -> Result<Report> {
    if d_min > d_max {
        return Err(CliError::Usage(format!("empty degree range {d_min}..={d_max}")));
    }
    cap("degree span", d_max - d_min, MAX_DEGREE_SPAN)?;
    cap("modes", modes as i64, MAX_SYMBOL_MODES as i64)?;
    let space = SymbolSpace::new(d_min, d_max, modes)?;
    let n = space.dim();
    let mut report = Report::new("demo symbols");
    report.set("d_min", d_min);
    report.set("d_max", d_max);
    report.set("modes", modes as i64);
    report.set("dim", n as i64);
    report.set("seed", seed as i64);

    report.check("s_kv² = Id and s_d² = Id", s_kv_matrix::<G>(&space).is_symmetry() && s_d_matrix::<G>(&space).is_symmetry());
    report.check("((FCl₊,FCl₋),(FCl_odd,FCl_even)) admissible", is_admissible(&theorem_pair::<G>(&space)));
    let t = cross_ratio_theorem_check::<G>(&space)?;
    report.check(format!("tilde_dv = 2·Id({n})"), t.is_scalar(&G::from_i64(2)));
    let odd = subspace_odd::<G>(&space);
    report.check("Im Φ_{1,1} = FCl_odd", image_phi_lambda_mu(&space, &G::one(), &G::one())? == odd);
    report.check("Im Φ_{ε,1} = FCl_even", image_phi_epsilon_lambda(&space, &G::one())? == subspace_even(&space));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut in_odd = true;
    for _ in 0..RANDOM_SAMPLES {
        let p = PsiDOElement::new(space, (0..space.psido_dim()).map(|_| random_g(&mut rng)).collect())?;
        in_odd &= odd.contains(phi_lambda_mu(&p, &G::one(), &G::one())?.coeffs());
    }
    report.check(format!("Φ_{{1,1}}(a) ∈ FCl_odd for {RANDOM_SAMPLES} random a"), in_odd);

    let mut region = Vec::new();
    let i = G::new(Rational::zero(), Rational::one());
    for (label, lambda, mu) in [
        ("(1,1)", G::one(), G::one()),
        ("(1,0)", G::one(), G::zero()),
        ("(0,1)", G::zero(), G::one()),
        ("(2,i)", G::from_i64(2), i),
    ] {
        let mut row = Table::new();
        row.insert("lambda_mu".into(), Value::String(label.into()));
        row.insert("plus_splits".into(), Value::Boolean(splitting_region_check(&space, &lambda, &mu, Side::Plus)?));
        row.insert("minus_splits".into(), Value::Boolean(splitting_region_check(&space, &lambda, &mu, Side::Minus)?));
        region.push(Value::Table(row));
    }
    let mut objects = Table::new();
    objects.insert("class_dim".into(), Value::Integer(odd.dim() as i64));
    objects.insert("tilde_dv_scalar".into(), t.matrix()[(0, 0)].encode());
    objects.insert("splitting_region".into(), Value::Array(region));
    report.set("objects", objects);
    Ok(report)
}

pub fn measures(points: usize, value_dim: usize, seed: u64) -> Result<Report> {
    cap("points", points as i64, MAX_POINTS as i64)?;
    cap("value-dim", value_dim as i64, MAX_VALUE_DIM as i64)?;
    if points == 0 || value_dim == 0 {
        return Err(CliError::Usage("points and value-dim must be at least 1".into()));
    }
    let mut report = Report::new("demo measures");
    report.set("points", points as i64);
    report.set("value_dim", value_dim as i64);
    report.set("seed", seed as i64);

    let parts = all_partitions(points);
    let (mut pairs, mut admissible, mut agree) = (0i64, 0i64, true);
    for a in &parts {
        for b in &parts {
            let verdict = no_go_check(a, b, value_dim)?;
            pairs += 1;
            admissible += verdict as i64;
            agree &= verdict == (a == b);
        }
    }
    report.check("admissible ⇔ equal partitions over all pairs", agree);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rational = |rng: &mut ChaCha8Rng| {
        Rational::new(rng.random_range(-9..=9), rng.random_range(1..=4)).expect("nonzero denominator")
    };
    let (mut jordan_ok, mut pairing_ok, mut count_ok) = (true, true, true);
    for _ in 0..RANDOM_SAMPLES {
        // Roughly a third of the weights are zero so that several partitions exist.
        let mu = SignedMeasure::new(
            (0..points)
                .map(|_| if rng.random_range(0..3) == 0 { Rational::zero() } else { rational(&mut rng) })
                .collect(),
        );
        let (plus, minus) = jordan(&mu);
        jordan_ok &= &plus - &minus == mu && plus.is_nonnegative() && minus.is_nonnegative();
        let valid = valid_partitions(&mu);
        let zeros = mu.weights().iter().filter(|w| w.is_zero()).count();
        count_ok &= valid.len() == 1 << zeros;
        for part in &valid {
            let f: Vec<Rational> = (0..points).map(|_| rational(&mut rng)).collect();
            pairing_ok &= pairing_identity_check(&mu, part, &f)?;
        }
    }
    report.check(format!("Jordan reconstruction on {RANDOM_SAMPLES} random measures"), jordan_ok);
    report.check("μ-partition count = 2^(zero weights)", count_ok);
    report.check("μ(f) = |μ|(s f) on every μ-partition", pairing_ok);

    let mut objects = Table::new();
    objects.insert("partitions".into(), Value::Integer(parts.len() as i64));
    objects.insert("pairs_checked".into(), Value::Integer(pairs));
    objects.insert("admissible_pairs".into(), Value::Integer(admissible));
    report.set("objects", objects);
    Ok(report)
}
