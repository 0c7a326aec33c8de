//! Catalog of known weighted flag families and their Calabi–Yau sections,
//! with field-by-field regression checks against the engine.
//!
//! The bundled catalog is a versioned JSON document (see
//! `data/known_families.json`). Invariants that need orbifold Riemann–Roch
//! or equations of the section (`D³`, `D·c₂`, curve data, point types) are
//! stored for display only and always verify as `NOT_RECOMPUTABLE`.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hilbert::{hilbert, HilbertReport};
use crate::model::{embedding_weights, WeightedFlagInput};
use crate::search::sections_from_report;

pub const CATALOG_VERSION: u32 = 1;

const BUNDLED: &str = include_str!("../data/known_families.json");

/// Exact rational written as `"p/q"` or `"p"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rational(pub Ratio<i64>);

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self.0.denom() == 1 {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let bad = || format!("malformed rational {s:?}");
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s.trim(), "1"),
        };
        let p: i64 = p.parse().map_err(|_| bad())?;
        let q: i64 = q.parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(bad());
        }
        Ok(Rational(Ratio::new(p, q)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Weight list in exponent notation: `[[1,1],[2,4]]` is `1, 2^4`.
pub type WeightPowers = Vec<(i64, usize)>;

pub fn expand_powers(p: &[(i64, usize)]) -> Vec<i64> {
    let mut v: Vec<i64> = p
        .iter()
        .flat_map(|&(w, k)| std::iter::repeat_n(w, k))
        .collect();
    v.sort_unstable();
    v
}

pub fn to_powers(weights: &[i64]) -> WeightPowers {
    let mut out: WeightPowers = Vec::new();
    for &w in weights {
        match out.last_mut() {
            Some((x, k)) if *x == w => *k += 1,
            _ => out.push((w, 1)),
        }
    }
    out
}

fn fmt_powers(p: &[(i64, usize)]) -> String {
    let parts: Vec<String> = p
        .iter()
        .map(|&(w, k)| {
            if k == 1 {
                w.to_string()
            } else {
                format!("{w}^{k}")
            }
        })
        .collect();
    format!("[{}]", parts.join(","))
}

/// Printed terms of a numerator. With `ellipsis` set, only the listed
/// coefficients are claimed; otherwise every other coefficient is zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PrintedNumerator {
    pub terms: Vec<(usize, i64)>,
    pub ellipsis: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PrintedPair<T> {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<T>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coned: Option<T>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveRecord {
    pub name: String,
    /// Transverse singularity type, e.g. `1/2(1,1)`.
    pub kind: String,
    pub deg_d: Rational,
    pub gamma: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointRecord {
    pub kind: String,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Invariants {
    pub d3: Rational,
    pub dc2: Rational,
    #[serde(default)]
    pub curves: Vec<CurveRecord>,
    #[serde(default)]
    pub points: Vec<PointRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TranscribedEquations {
    /// Variables of the ambient stratum the equations live in.
    pub variables: Vec<String>,
    pub lines: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KnownFamilyRecord {
    pub id: String,
    pub title: String,
    /// Input without cone variables.
    pub input: WeightedFlagInput,
    #[serde(default)]
    pub cones: Vec<i64>,
    pub printed_weights: PrintedPair<WeightPowers>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub printed_numerator: Option<PrintedNumerator>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub printed_q: Option<i64>,
    pub printed_k: PrintedPair<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub printed_well_formed: Option<PrintedPair<bool>>,
    pub degrees: Vec<i64>,
    pub section_weights: WeightPowers,
    /// Dimension `N` of the printed ambient `P^N` of the section.
    pub section_ambient_dim: usize,
    pub invariants: Invariants,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub transcribed_equations: Option<TranscribedEquations>,
}

/// A printed statement the engine disagrees with, kept for the record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NoteRecord {
    pub id: String,
    pub title: String,
    pub input: WeightedFlagInput,
    pub printed_numerator: PrintedNumerator,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CatalogEntry {
    Family(KnownFamilyRecord),
    Note(NoteRecord),
}

impl CatalogEntry {
    pub fn id(&self) -> &str {
        match self {
            CatalogEntry::Family(r) => &r.id,
            CatalogEntry::Note(n) => &n.id,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Catalog {
    pub version: u32,
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn families(&self) -> impl Iterator<Item = &KnownFamilyRecord> {
        self.entries.iter().filter_map(|e| match e {
            CatalogEntry::Family(r) => Some(r),
            CatalogEntry::Note(_) => None,
        })
    }

    pub fn notes(&self) -> impl Iterator<Item = &NoteRecord> {
        self.entries.iter().filter_map(|e| match e {
            CatalogEntry::Note(n) => Some(n),
            CatalogEntry::Family(_) => None,
        })
    }

    pub fn get(&self, id: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.id() == id)
    }
}

/// Parses a catalog document, naming the offending field on failure.
pub fn parse_catalog(text: &str) -> Result<Catalog> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let catalog: Catalog = serde_path_to_error::deserialize(de)
        .map_err(|e| Error::Catalog(format!("field `{}`: {}", e.path(), e.inner())))?;
    if catalog.version != CATALOG_VERSION {
        return Err(Error::Catalog(format!(
            "unsupported catalog version {} (expected {CATALOG_VERSION})",
            catalog.version
        )));
    }
    for entry in &catalog.entries {
        let input = match entry {
            CatalogEntry::Family(r) => &r.input,
            CatalogEntry::Note(n) => &n.input,
        };
        input
            .validate()
            .map_err(|e| Error::Catalog(format!("record `{}`: {e}", entry.id())))?;
    }
    Ok(catalog)
}

pub fn load_catalog(path: &Path) -> Result<Catalog> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Catalog(format!("{}: {e}", path.display())))?;
    parse_catalog(&text).map_err(|e| match e {
        Error::Catalog(m) => Error::Catalog(format!("{}: {m}", path.display())),
        other => other,
    })
}

pub fn catalog_to_string(catalog: &Catalog) -> String {
    let mut s = serde_json::to_string_pretty(catalog).expect("catalog serializes");
    s.push('\n');
    s
}

pub fn save_catalog(catalog: &Catalog, path: &Path) -> Result<()> {
    std::fs::write(path, catalog_to_string(catalog))
        .map_err(|e| Error::Catalog(format!("{}: {e}", path.display())))
}

/// The six built-in families and the accompanying note.
pub fn bundled_catalog() -> Catalog {
    parse_catalog(BUNDLED).expect("bundled catalog is valid")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Match,
    Mismatch,
    NotRecomputable,
    Note,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Match => "MATCH",
            Status::Mismatch => "MISMATCH",
            Status::NotRecomputable => "NOT_RECOMPUTABLE",
            Status::Note => "NOTE",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldCheck {
    pub field: String,
    pub status: Status,
    pub printed: String,
    pub computed: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordReport {
    pub id: String,
    pub fields: Vec<FieldCheck>,
}

impl RecordReport {
    pub fn count(&self, status: Status) -> usize {
        self.fields.iter().filter(|f| f.status == status).count()
    }
}

fn check(field: &str, printed: String, computed: String, ok: bool) -> FieldCheck {
    FieldCheck {
        field: field.to_string(),
        status: if ok { Status::Match } else { Status::Mismatch },
        printed,
        computed,
    }
}

fn display_only(field: &str, printed: String) -> FieldCheck {
    FieldCheck {
        field: field.to_string(),
        status: Status::NotRecomputable,
        printed,
        computed: String::new(),
    }
}

fn failed(field: &str, printed: String, e: &Error) -> FieldCheck {
    FieldCheck {
        field: field.to_string(),
        status: Status::Mismatch,
        printed,
        computed: format!("error: {e}"),
    }
}

fn fmt_terms(terms: &[(usize, i64)], ellipsis: bool) -> String {
    let mut s: Vec<String> = terms.iter().map(|(e, c)| format!("{c:+}t^{e}")).collect();
    if ellipsis {
        s.push("...".into());
    }
    s.join(" ")
}

/// Coefficients of `report` at the printed exponents, plus agreement.
fn compare_numerator(p: &PrintedNumerator, report: &HilbertReport) -> (String, bool) {
    let mut ok = true;
    let mut computed = Vec::new();
    for &(e, c) in &p.terms {
        let got = report.numerator.coeff(e);
        ok &= got == num_bigint::BigInt::from(c);
        computed.push(format!("{got:+}t^{e}"));
    }
    if !p.ellipsis {
        let printed: std::collections::BTreeSet<usize> = p.terms.iter().map(|t| t.0).collect();
        for (e, c) in report.numerator.terms() {
            if !printed.contains(&e) {
                ok = false;
                computed.push(format!("{c:+}t^{e}"));
            }
        }
    }
    (computed.join(" "), ok)
}

/// Recomputes every reproducible field of a catalog entry.
pub fn verify_entry(entry: &CatalogEntry) -> RecordReport {
    match entry {
        CatalogEntry::Family(r) => verify_record(r),
        CatalogEntry::Note(n) => verify_note(n),
    }
}

pub fn verify_note(note: &NoteRecord) -> RecordReport {
    let printed = fmt_terms(
        &note.printed_numerator.terms,
        note.printed_numerator.ellipsis,
    );
    let field = match hilbert(&note.input) {
        Ok(report) => {
            let (computed, _) = compare_numerator(&note.printed_numerator, &report);
            FieldCheck {
                field: "numerator".into(),
                status: Status::Note,
                printed,
                computed,
            }
        }
        Err(e) => failed("numerator", printed, &e),
    };
    RecordReport {
        id: note.id.clone(),
        fields: vec![field],
    }
}

pub fn verify_record(rec: &KnownFamilyRecord) -> RecordReport {
    let mut fields = Vec::new();
    let base = rec.input.base();
    let coned = match base.clone().with_cones(&rec.cones) {
        Ok(c) => c,
        Err(e) => {
            fields.push(failed("cones", format!("{:?}", rec.cones), &e));
            return RecordReport {
                id: rec.id.clone(),
                fields,
            };
        }
    };

    for (label, printed, input) in [
        ("weights", &rec.printed_weights.base, &base),
        ("weights_coned", &rec.printed_weights.coned, &coned),
    ] {
        if let Some(p) = printed {
            fields.push(match embedding_weights(input) {
                Ok(ew) => {
                    let ok = ew.weights == expand_powers(p);
                    check(
                        label,
                        fmt_powers(p),
                        fmt_powers(&to_powers(&ew.weights)),
                        ok,
                    )
                }
                Err(e) => failed(label, fmt_powers(p), &e),
            });
        }
    }

    let reports = hilbert(&base).and_then(|b| Ok((b.with_cones(&coned)?, b)));
    let (coned_report, base_report) = match reports {
        Ok(pair) => pair,
        Err(e) => {
            fields.push(failed("hilbert", String::new(), &e));
            return RecordReport {
                id: rec.id.clone(),
                fields,
            };
        }
    };

    if let Some(p) = &rec.printed_numerator {
        let (computed, ok) = compare_numerator(p, &base_report);
        fields.push(check(
            "numerator",
            fmt_terms(&p.terms, p.ellipsis),
            computed,
            ok,
        ));
    }
    if let Some(q) = rec.printed_q {
        fields.push(check(
            "q",
            q.to_string(),
            base_report.q.to_string(),
            q == base_report.q,
        ));
    }
    for (label, printed, report) in [
        ("k", rec.printed_k.base, &base_report),
        ("k_coned", rec.printed_k.coned, &coned_report),
    ] {
        if let Some(k) = printed {
            fields.push(check(
                label,
                k.to_string(),
                report.k.to_string(),
                k == report.k,
            ));
        }
    }
    if let Some(wf) = &rec.printed_well_formed {
        for (label, printed, report) in [
            ("well_formed", wf.base, &base_report),
            ("well_formed_coned", wf.coned, &coned_report),
        ] {
            if let Some(b) = printed {
                let got = report.well_formed.gcd_ok;
                fields.push(check(label, b.to_string(), got.to_string(), b == got));
            }
        }
    }

    let degrees_label = format!("{:?}", rec.degrees);
    match sections_from_report(&coned, &coned_report) {
        Ok(cands) => {
            let hit = cands.iter().find(|c| c.degrees == rec.degrees);
            fields.push(check(
                "degrees",
                degrees_label,
                format!(
                    "{} candidates{}",
                    cands.len(),
                    if hit.is_some() {
                        ", listed one present"
                    } else {
                        ""
                    }
                ),
                hit.is_some(),
            ));
            let printed = expand_powers(&rec.section_weights);
            let got = hit.map(|c| c.ambient_weights.clone()).unwrap_or_default();
            fields.push(check(
                "section_weights",
                fmt_powers(&rec.section_weights),
                fmt_powers(&to_powers(&got)),
                got == printed,
            ));
            let dim = hit.map(|c| c.ambient_weights.len().saturating_sub(1));
            fields.push(check(
                "section_ambient_dim",
                rec.section_ambient_dim.to_string(),
                dim.map(|d| d.to_string()).unwrap_or_default(),
                dim == Some(rec.section_ambient_dim),
            ));
        }
        Err(e) => fields.push(failed("degrees", degrees_label, &e)),
    }

    let inv = &rec.invariants;
    fields.push(display_only("D3", inv.d3.to_string()));
    fields.push(display_only("Dc2", inv.dc2.to_string()));
    for c in &inv.curves {
        fields.push(display_only(
            &format!("curve {}", c.name),
            format!("{} degD={} gamma={}", c.kind, c.deg_d, c.gamma),
        ));
    }
    for p in &inv.points {
        fields.push(display_only("points", format!("{} x{}", p.kind, p.count)));
    }
    if let Some(t) = &rec.transcribed_equations {
        fields.push(display_only(
            "transcribed_equations",
            format!("{} equations in {}", t.lines.len(), t.variables.join(",")),
        ));
    }
    RecordReport {
        id: rec.id.clone(),
        fields,
    }
}

/// Verifies all entries, in catalog order.
pub fn verify_catalog(catalog: &Catalog) -> Vec<RecordReport> {
    catalog.entries.par_iter().map(verify_entry).collect()
}
