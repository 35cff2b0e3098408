//! Problem files: named subspaces and named pairs over one field.
//!
//! ```toml
//! field = "rational"          # or "complex-float"
//! ambient_dim = 2
//!
//! [subspaces]
//! V1 = [["1", "0"]]           # list of spanning vectors
//! W1 = [["0", "1"]]
//!
//! [pairs.example]
//! v1 = "V1"
//! w1 = "W1"
//! v2 = "V1"
//! w2 = "W1"
//! ```

use std::collections::BTreeMap;

use ncr_core::{ComplexFloat, Rational, Subspace};
use serde::Deserialize;
use toml::{Spanned, Value};

use crate::encode::Entry;
use crate::error::{CliError, Location, Result};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    field: Spanned<String>,
    ambient_dim: Spanned<i64>,
    #[serde(default)]
    subspaces: BTreeMap<String, Spanned<Vec<Spanned<Vec<Spanned<Value>>>>>>,
    #[serde(default)]
    pairs: BTreeMap<String, Spanned<RawPair>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPair {
    v1: Spanned<String>,
    w1: Spanned<String>,
    v2: Spanned<String>,
    w2: Spanned<String>,
}

/// The four subspaces of a named pair.
#[derive(Clone)]
pub struct PairSpec<S> {
    pub v1: Subspace<S>,
    pub w1: Subspace<S>,
    pub v2: Subspace<S>,
    pub w2: Subspace<S>,
}

#[derive(Clone)]
pub struct Problem<S> {
    pub ambient_dim: usize,
    pub subspaces: BTreeMap<String, Subspace<S>>,
    pub pairs: BTreeMap<String, PairSpec<S>>,
}

impl<S: Entry> std::fmt::Debug for Problem<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Problem")
            .field("field", &S::FIELD)
            .field("ambient_dim", &self.ambient_dim)
            .field("subspaces", &self.subspaces)
            .field("pairs", &self.pairs.keys().collect::<Vec<_>>())
            .finish()
    }
}

impl<S: Entry> Problem<S> {
    /// The pair called `name`; with no name, the file's only pair.
    pub fn pair(&self, name: Option<&str>) -> Result<(String, &PairSpec<S>)> {
        match name {
            Some(n) => self
                .pairs
                .get(n)
                .map(|p| (n.to_owned(), p))
                .ok_or_else(|| CliError::Usage(format!("no pair named `{n}` in the problem file"))),
            None if self.pairs.len() == 1 => {
                let (n, p) = self.pairs.iter().next().expect("one pair");
                Ok((n.clone(), p))
            }
            None => Err(CliError::Usage(format!(
                "the problem file defines {} pairs; choose one with --pair",
                self.pairs.len()
            ))),
        }
    }
}

#[derive(Debug, Clone)]
pub enum AnyProblem {
    Rational(Problem<Rational>),
    ComplexFloat(Problem<ComplexFloat>),
}

struct Ctx<'a> {
    source: &'a str,
    src: &'a str,
}

impl Ctx<'_> {
    fn at(&self, span: std::ops::Range<usize>) -> Location {
        Location::new(self.source, self.src, span)
    }

    fn parse_error(&self, span: std::ops::Range<usize>, message: impl Into<String>) -> CliError {
        CliError::Parse { at: self.at(span), message: message.into() }
    }
}

/// Parses a problem file. `source` names the input in error messages.
pub fn parse_problem(src: &str, source: &str) -> Result<AnyProblem> {
    let ctx = Ctx { source, src };
    let raw: RawProblem = toml::from_str(src).map_err(|e| {
        let span = e.span().unwrap_or(0..0);
        ctx.parse_error(span, e.message().trim_end())
    })?;
    if *raw.ambient_dim.get_ref() < 0 {
        return Err(ctx.parse_error(raw.ambient_dim.span(), "ambient_dim must be nonnegative"));
    }
    match raw.field.get_ref().as_str() {
        "rational" => Ok(AnyProblem::Rational(build(&ctx, &raw)?)),
        "complex-float" => Ok(AnyProblem::ComplexFloat(build(&ctx, &raw)?)),
        other => Err(ctx.parse_error(
            raw.field.span(),
            format!("unknown field `{other}`; expected \"rational\" or \"complex-float\""),
        )),
    }
}

fn build<S: Entry>(ctx: &Ctx<'_>, raw: &RawProblem) -> Result<Problem<S>> {
    let n = *raw.ambient_dim.get_ref() as usize;
    let mut subspaces = BTreeMap::new();
    for (name, vectors) in &raw.subspaces {
        let mut decoded = Vec::with_capacity(vectors.get_ref().len());
        for vector in vectors.get_ref() {
            if vector.get_ref().len() != n {
                return Err(CliError::DimensionMismatch {
                    at: ctx.at(vector.span()),
                    expected: n,
                    found: vector.get_ref().len(),
                });
            }
            let entries = vector
                .get_ref()
                .iter()
                .map(|e| S::decode(e.get_ref()).map_err(|msg| ctx.parse_error(e.span(), msg)))
                .collect::<Result<Vec<S>>>()?;
            decoded.push(entries);
        }
        subspaces.insert(name.clone(), Subspace::span(n, &decoded)?);
    }
    let lookup = |r: &Spanned<String>| -> Result<Subspace<S>> {
        subspaces.get(r.get_ref()).cloned().ok_or_else(|| CliError::UnknownName {
            at: ctx.at(r.span()),
            name: r.get_ref().clone(),
        })
    };
    let mut pairs = BTreeMap::new();
    for (name, pair) in &raw.pairs {
        let p = pair.get_ref();
        let spec = PairSpec { v1: lookup(&p.v1)?, w1: lookup(&p.w1)?, v2: lookup(&p.v2)?, w2: lookup(&p.w2)? };
        pairs.insert(name.clone(), spec);
    }
    Ok(Problem { ambient_dim: n, subspaces, pairs })
}
