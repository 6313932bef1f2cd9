//! Structured (JSON) and text renderings of invariant reports.
//!
//! Every rational is written losslessly as `"p/q"` (integers as `"p"`).

use serde::{Deserialize, Serialize};

use crate::catalog::EntryOutcome;
use crate::math::{parse_rational, to_decimal};
use crate::{Classification, HorizontalDivisor, InvariantReport, Rational, RationalConstruction};

pub mod rational_text {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::math::{format_rational, parse_rational};
    use crate::Rational;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

mod opt_rational_text {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::math::{format_rational, parse_rational};
    use crate::Rational;

    pub fn serialize<S: Serializer>(q: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match q {
            Some(q) => s.serialize_str(&format_rational(q)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|t| parse_rational(&t).map_err(serde::de::Error::custom))
            .transpose()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassificationDoc {
    pub kind: String,
    #[serde(
        default,
        skip_serializing_if = "Option::is_none",
        with = "opt_rational_text"
    )]
    pub a: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub destabilizer: Option<HorizontalDivisor>,
    #[serde(
        default,
        skip_serializing_if = "Option::is_none",
        with = "opt_rational_text"
    )]
    pub beta: Option<Rational>,
}

impl From<&Classification<Rational>> for ClassificationDoc {
    fn from(c: &Classification<Rational>) -> Self {
        match c {
            Classification::ReducesToPair { a } => Self {
                kind: c.kind().into(),
                a: Some(a.clone()),
                destabilizer: None,
                beta: None,
            },
            Classification::KUnstable { destabilizer, beta } => Self {
                kind: c.kind().into(),
                a: None,
                destabilizer: Some(*destabilizer),
                beta: Some(beta.clone()),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntryDoc {
    pub name: String,
    pub n: u32,
    #[serde(with = "rational_text")]
    pub r: Rational,
    #[serde(with = "rational_text")]
    pub l: Rational,
    #[serde(with = "rational_text")]
    pub vol_v: Rational,
    #[serde(with = "rational_text")]
    pub vol_y: Rational,
    #[serde(with = "rational_text")]
    pub s_v0: Rational,
    #[serde(with = "rational_text")]
    pub s_vinf: Rational,
    #[serde(with = "rational_text")]
    pub beta_v0: Rational,
    #[serde(with = "rational_text")]
    pub beta_vinf: Rational,
    pub classification: ClassificationDoc,
    pub pass: bool,
}

impl EntryDoc {
    pub fn new(
        name: &str,
        c: &RationalConstruction,
        rep: &InvariantReport<Rational>,
        pass: bool,
    ) -> Self {
        Self {
            name: name.to_string(),
            n: c.n(),
            r: c.r().clone(),
            l: c.l().clone(),
            vol_v: c.vol_v().clone(),
            vol_y: rep.vol_y.clone(),
            s_v0: rep.s_v0.clone(),
            s_vinf: rep.s_vinf.clone(),
            beta_v0: rep.beta_v0.clone(),
            beta_vinf: rep.beta_vinf.clone(),
            classification: (&rep.classification).into(),
            pass,
        }
    }
}

impl From<&EntryOutcome> for EntryDoc {
    fn from(o: &EntryOutcome) -> Self {
        Self::new(&o.entry.name, &o.entry.construction, &o.report, o.pass())
    }
}

/// One document per run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub entries: Vec<EntryDoc>,
}

impl ReportDoc {
    pub fn from_outcomes(outcomes: &[EntryOutcome]) -> Self {
        Self {
            entries: outcomes.iter().map(EntryDoc::from).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoefficientDoc {
    pub n: u32,
    #[serde(with = "rational_text")]
    pub r: Rational,
    #[serde(with = "rational_text")]
    pub a: Rational,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceRowDoc {
    pub m: u64,
    #[serde(with = "rational_text")]
    pub a_m: Rational,
    #[serde(with = "rational_text")]
    pub error: Rational,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceDoc {
    pub n: u32,
    #[serde(with = "rational_text")]
    pub r: Rational,
    pub base: String,
    #[serde(with = "rational_text")]
    pub target: Rational,
    pub rows: Vec<ConvergenceRowDoc>,
}

/// Aligned `key  value` lines for a single report.
pub fn render_report_text(rep: &InvariantReport<Rational>) -> String {
    let rows = [
        ("vol_y", rep.vol_y.to_string()),
        ("s_v0", rep.s_v0.to_string()),
        ("s_vinf", rep.s_vinf.to_string()),
        ("beta_v0", rep.beta_v0.to_string()),
        ("beta_vinf", rep.beta_vinf.to_string()),
        ("classification", rep.classification.to_string()),
    ];
    let mut out = String::new();
    for (k, v) in rows {
        out.push_str(&format!("{k:<16}{v}\n"));
    }
    out
}

pub fn render_outcome_line(o: &EntryOutcome) -> String {
    match &o.mismatch {
        None => format!("PASS  {}: {}", o.entry.name, o.report.classification),
        Some(m) => format!("FAIL  {}: {}", o.entry.name, m),
    }
}

/// `"p/q (decimal)"`.
pub fn exact_with_decimal(q: &Rational, digits: usize) -> String {
    format!("{q} ({})", to_decimal(q, digits))
}

/// Parses a rational field back from a structured document.
pub fn reparse(text: &str) -> Option<Rational> {
    parse_rational(text).ok()
}
