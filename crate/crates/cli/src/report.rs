//! The report object and its JSON, CSV and text renderings.

use std::fmt::Write as _;

use gradedtor_core::{ClaimResult, DegreeReport};
use num_bigint::BigInt;
use serde::{Serialize, Serializer};

fn bigs<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    let nums = v
        .iter()
        .map(|x| x.to_string().parse::<serde_json::Number>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(serde::ser::Error::custom)?;
    nums.serialize(s)
}

fn opt_bigs<S: Serializer>(v: &Option<Vec<BigInt>>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => bigs(v, s),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeRow {
    pub degree: u32,
    pub ambient_rank: usize,
    pub ideal_rank: usize,
    pub quotient_rank: usize,
    #[serde(serialize_with = "bigs")]
    pub torsion: Vec<BigInt>,
}

impl From<&DegreeReport> for DegreeRow {
    fn from(r: &DegreeReport) -> Self {
        DegreeRow {
            degree: r.degree,
            ambient_rank: r.ambient_rank,
            ideal_rank: r.ideal_rank,
            quotient_rank: r.quotient_rank,
            torsion: r.torsion_invariants.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimRow {
    pub id: String,
    pub status: String,
    pub witness: Option<String>,
    /// Text rendering only.
    #[serde(skip)]
    pub details: Vec<String>,
}

impl From<&ClaimResult> for ClaimRow {
    fn from(c: &ClaimResult) -> Self {
        ClaimRow {
            id: c.claim_id.clone(),
            status: c.status.as_str().to_string(),
            witness: c.witness.clone(),
            details: c.details.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Meta {
    pub runtime_ms: u64,
    pub version: String,
}

/// Field order is the serialized key order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub entry: String,
    pub max_degree: u32,
    pub closure: bool,
    pub degrees: Vec<DegreeRow>,
    #[serde(serialize_with = "opt_bigs")]
    pub expected_series: Option<Vec<BigInt>>,
    pub series_match: Option<bool>,
    pub claims: Vec<ClaimRow>,
    pub meta: Meta,
}

impl Report {
    pub fn new(entry: impl Into<String>, max_degree: u32, closure: bool) -> Self {
        Report {
            entry: entry.into(),
            max_degree,
            closure,
            degrees: Vec::new(),
            expected_series: None,
            series_match: None,
            claims: Vec::new(),
            meta: Meta {
                runtime_ms: 0,
                version: env!("CARGO_PKG_VERSION").to_string(),
            },
        }
    }

    /// Fills `degrees` and, when a series is given, the comparison fields.
    pub fn with_degrees(mut self, reports: &[DegreeReport], expected: Option<Vec<BigInt>>) -> Self {
        self.degrees = reports.iter().map(DegreeRow::from).collect();
        self.series_match = expected.as_ref().map(|e| {
            e.len() == self.degrees.len()
                && self
                    .degrees
                    .iter()
                    .zip(e)
                    .all(|(r, x)| BigInt::from(r.quotient_rank) == *x)
        });
        self.expected_series = expected;
        self
    }

    pub fn with_claims(mut self, claims: &[ClaimResult]) -> Self {
        self.claims = claims.iter().map(ClaimRow::from).collect();
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Text => render_text(report),
        Format::Json => render_json(report),
        Format::Csv => render_csv(report),
    }
}

pub fn render_json(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

fn join_torsion(t: &[BigInt]) -> String {
    t.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(";")
}

/// Degree table when present, otherwise the claim table.
pub fn render_csv(report: &Report) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    if report.degrees.is_empty() && !report.claims.is_empty() {
        w.write_record(["id", "status", "witness"])
            .expect("in-memory write");
        for c in &report.claims {
            w.write_record([
                c.id.as_str(),
                c.status.as_str(),
                c.witness.as_deref().unwrap_or(""),
            ])
            .expect("in-memory write");
        }
    } else {
        w.write_record([
            "degree",
            "ambient_rank",
            "ideal_rank",
            "quotient_rank",
            "torsion",
        ])
        .expect("in-memory write");
        for r in &report.degrees {
            w.write_record([
                r.degree.to_string(),
                r.ambient_rank.to_string(),
                r.ideal_rank.to_string(),
                r.quotient_rank.to_string(),
                join_torsion(&r.torsion),
            ])
            .expect("in-memory write");
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let closure = if report.closure { "on" } else { "off" };
    writeln!(
        out,
        "entry {}  max degree {}  closure {closure}",
        report.entry, report.max_degree
    )
    .unwrap();
    if !report.degrees.is_empty() {
        writeln!(
            out,
            "{:>6}  {:>7}  {:>5}  {:>8}  torsion",
            "degree", "ambient", "ideal", "quotient"
        )
        .unwrap();
        for r in &report.degrees {
            let line = format!(
                "{:>6}  {:>7}  {:>5}  {:>8}  {}",
                r.degree,
                r.ambient_rank,
                r.ideal_rank,
                r.quotient_rank,
                join_torsion(&r.torsion)
            );
            writeln!(out, "{}", line.trim_end()).unwrap();
        }
    }
    if let Some(e) = &report.expected_series {
        let e: Vec<String> = e.iter().map(|x| x.to_string()).collect();
        writeln!(out, "expected ranks {}", e.join(",")).unwrap();
    }
    if let Some(m) = report.series_match {
        writeln!(out, "series match {}", if m { "yes" } else { "no" }).unwrap();
    }
    for c in &report.claims {
        match &c.witness {
            Some(w) => writeln!(out, "{:<14} {}  ({w})", c.status, c.id).unwrap(),
            None => writeln!(out, "{:<14} {}", c.status, c.id).unwrap(),
        }
        for d in &c.details {
            writeln!(out, "    {d}").unwrap();
        }
    }
    out
}
