//! Example catalogs: parsing, evaluation and expectation checks.
//!
//! A catalog is a TOML document holding an array of `[[entry]]` tables; see
//! `catalog/default.toml` for the key reference.

use std::path::Path;

use rayon::prelude::*;
use serde::Deserialize;

use crate::invariants::{report, InvariantReport};
use crate::math::parse_rational;
use crate::{
    Classification, Construction, Error, HorizontalDivisor, Rational, RationalConstruction, Result,
};

/// Shipped catalog, also available on disk at `crates/core/catalog/default.toml`.
pub const DEFAULT_CATALOG: &str = include_str!("../catalog/default.toml");

#[derive(Clone, Debug, PartialEq)]
pub enum Expectation {
    PairCoefficient(Rational),
    /// `None` accepts either horizontal divisor.
    Unstable(Option<HorizontalDivisor>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct CatalogEntry {
    pub name: String,
    pub construction: RationalConstruction,
    pub expected: Option<Expectation>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawRational {
    Int(i64),
    Text(String),
}

impl RawRational {
    fn value(&self) -> Result<Rational> {
        match self {
            RawRational::Int(v) => Ok(Rational::from_integer((*v).into())),
            RawRational::Text(s) => parse_rational(s),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    name: String,
    n: u32,
    r: RawRational,
    l: RawRational,
    vol_v: Option<RawRational>,
    expect_a: Option<RawRational>,
    expect_destabilizer: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCatalog {
    #[serde(default)]
    entry: Vec<RawEntry>,
}

impl RawEntry {
    fn resolve(self) -> Result<CatalogEntry> {
        let vol_v = match &self.vol_v {
            Some(v) => v.value()?,
            None => Rational::from_integer(1.into()),
        };
        let construction = Construction::new(self.n, self.r.value()?, self.l.value()?, vol_v)?;
        let expected = match (self.expect_a, self.expect_destabilizer) {
            (Some(_), Some(_)) => {
                return Err(Error::Catalog(
                    "expect_a and expect_destabilizer are mutually exclusive".into(),
                ))
            }
            (Some(a), None) => Some(Expectation::PairCoefficient(a.value()?)),
            (None, Some(d)) if d == "any" => Some(Expectation::Unstable(None)),
            (None, Some(d)) => Some(Expectation::Unstable(Some(d.parse()?))),
            (None, None) => None,
        };
        Ok(CatalogEntry {
            name: self.name,
            construction,
            expected,
        })
    }
}

pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>> {
    let raw: RawCatalog =
        toml::from_str(text).map_err(|e| Error::Catalog(e.to_string().trim_end().to_string()))?;
    raw.entry
        .into_iter()
        .enumerate()
        .map(|(i, e)| {
            let name = e.name.clone();
            e.resolve()
                .map_err(|err| Error::Catalog(format!("entry {} ({name:?}): {err}", i + 1)))
        })
        .collect()
}

pub fn load_catalog(path: &Path) -> Result<Vec<CatalogEntry>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Catalog(format!("cannot read {}: {e}", path.display())))?;
    parse_catalog(&text)
}

pub fn default_catalog() -> Vec<CatalogEntry> {
    parse_catalog(DEFAULT_CATALOG).expect("shipped catalog parses")
}

#[derive(Clone, Debug, PartialEq)]
pub struct EntryOutcome {
    pub entry: CatalogEntry,
    pub report: InvariantReport<Rational>,
    /// `None` when the expectation (if any) holds.
    pub mismatch: Option<String>,
}

impl EntryOutcome {
    pub fn pass(&self) -> bool {
        self.mismatch.is_none()
    }
}

fn check(expected: &Expectation, got: &Classification<Rational>) -> Option<String> {
    match (expected, got) {
        (Expectation::PairCoefficient(want), Classification::ReducesToPair { a }) => {
            (a != want).then(|| format!("{a} ≠ {want}"))
        }
        (Expectation::PairCoefficient(want), other) => {
            Some(format!("{other} ≠ reduces-to-pair a={want}"))
        }
        (Expectation::Unstable(want), Classification::KUnstable { destabilizer, .. }) => match want
        {
            Some(d) if d != destabilizer => Some(format!("{destabilizer} ≠ {d}")),
            _ => None,
        },
        (Expectation::Unstable(want), other) => Some(format!(
            "{other} ≠ k-unstable destabilizer={}",
            want.map_or("any", HorizontalDivisor::name)
        )),
    }
}

pub fn evaluate(entry: &CatalogEntry) -> Result<EntryOutcome> {
    let report = report(&entry.construction)?;
    let mismatch = entry
        .expected
        .as_ref()
        .and_then(|e| check(e, &report.classification));
    Ok(EntryOutcome {
        entry: entry.clone(),
        report,
        mismatch,
    })
}

/// Evaluates entries concurrently; results keep catalog order.
pub fn run_catalog(entries: &[CatalogEntry]) -> Result<Vec<EntryOutcome>> {
    entries.par_iter().map(evaluate).collect()
}
