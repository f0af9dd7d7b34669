//! Check reports: entries, summary counts, JSON/Markdown emission and an
//! in-tree structural validator for the JSON form.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::linalg::{Field, Mat};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub map: Option<String>,
    pub at: Vec<String>,
    pub pass: bool,
    /// `[source dim, target dim]` of the map or diagram leg.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub dims: Option<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub is_iso: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub factors: Vec<String>,
    #[serde(skip_serializing_if = "String::is_empty", default)]
    pub details: String,
}

impl CheckEntry {
    pub fn new(name: impl Into<String>, at: Vec<String>, pass: bool) -> Self {
        CheckEntry {
            name: name.into(),
            map: None,
            at,
            pass,
            dims: None,
            rank: None,
            is_iso: None,
            factors: Vec::new(),
            details: String::new(),
        }
    }

    /// Entry for an equality check `lhs == rhs`; on failure the details name
    /// the first differing entry.
    pub fn equality<F: Field>(name: impl Into<String>, at: Vec<String>, lhs: &Mat<F>, rhs: &Mat<F>) -> Self {
        let mut e = CheckEntry::new(name, at, false);
        e.dims = Some([lhs.cols(), lhs.rows()]);
        if lhs.dims() != rhs.dims() {
            e.details = format!("shapes differ: {:?} vs {:?}", lhs.dims(), rhs.dims());
        } else if let Some((i, j)) = lhs.first_difference(rhs) {
            let f = lhs.field();
            e.details = format!("entry ({i},{j}): {} vs {}", f.format(lhs.get(i, j)), f.format(rhs.get(i, j)));
        } else {
            e.pass = true;
        }
        e
    }

    /// Entry recording rank data for a map; `pass` is whether the map is an
    /// isomorphism unless `expect_iso` says otherwise.
    pub fn rank_of<F: Field>(
        name: impl Into<String>,
        map: &str,
        at: Vec<String>,
        mat: &Mat<F>,
        expect_iso: bool,
    ) -> Self {
        let rank = mat.rank();
        let iso = mat.is_square() && rank == mat.rows();
        let mut e = CheckEntry::new(name, at, iso == expect_iso);
        e.map = Some(map.to_string());
        e.dims = Some([mat.cols(), mat.rows()]);
        e.rank = Some(rank);
        e.is_iso = Some(iso);
        e
    }

    pub fn with_details(mut self, details: impl Into<String>) -> Self {
        self.details = details.into();
        self
    }

    pub fn with_factors(mut self, factors: &[&str]) -> Self {
        self.factors = factors.iter().map(|s| s.to_string()).collect();
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub context: String,
    pub battery: String,
    pub entries: Vec<CheckEntry>,
    pub summary: Summary,
    /// Measured run time. Left out of the serialized forms so that reports
    /// stay byte-identical across runs.
    #[serde(skip)]
    pub wall_time_ms: Option<f64>,
}

impl CheckReport {
    pub fn new(context: impl Into<String>, battery: impl Into<String>) -> Self {
        CheckReport { context: context.into(), battery: battery.into(), ..Default::default() }
    }

    pub fn push(&mut self, entry: CheckEntry) {
        self.entries.push(entry);
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.entries.extend(other.entries);
    }

    /// Sorts entries by name then object tuple and recomputes the summary.
    pub fn finalize(&mut self) {
        self.entries.sort_by(|a, b| (&a.name, &a.at, &a.map).cmp(&(&b.name, &b.at, &b.map)));
        self.recount();
    }

    pub fn recount(&mut self) {
        let passed = self.entries.iter().filter(|e| e.pass).count();
        self.summary = Summary { total: self.entries.len(), passed, failed: self.entries.len() - passed };
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }

    pub fn named<'a>(&'a self, name: &'a str) -> impl Iterator<Item = &'a CheckEntry> + 'a {
        self.entries.iter().filter(move |e| e.name == name)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# {} on {}\n", self.battery, self.context);
        let _ = writeln!(
            out,
            "{} checks, {} passed, {} failed\n",
            self.summary.total, self.summary.passed, self.summary.failed
        );
        let mut groups: BTreeMap<&str, Vec<&CheckEntry>> = BTreeMap::new();
        for e in &self.entries {
            groups.entry(&e.name).or_default().push(e);
        }
        for (name, entries) in groups {
            let _ = writeln!(out, "## {name}\n");
            let _ = writeln!(out, "| at | pass | map | dims | rank | iso | details |");
            let _ = writeln!(out, "|---|---|---|---|---|---|---|");
            for e in entries {
                let dims = e.dims.map(|[s, t]| format!("{s}→{t}")).unwrap_or_default();
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {} | {} | {} | {} |",
                    e.at.join(", "),
                    if e.pass { "yes" } else { "NO" },
                    e.map.as_deref().unwrap_or(""),
                    dims,
                    e.rank.map(|r| r.to_string()).unwrap_or_default(),
                    e.is_iso.map(|b| b.to_string()).unwrap_or_default(),
                    e.details.replace('|', "\\|"),
                );
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Markdown,
}

impl Format {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "md" | "markdown" => Ok(Format::Markdown),
            _ => Err(Error::Config(format!("unknown format '{s}'"))),
        }
    }
}

/// Writes the report to `path`, or to stdout when `path` is `None`.
pub fn emit_report(report: &CheckReport, format: Format, path: Option<&Path>) -> Result<()> {
    let text = match format {
        Format::Json => report.to_json(),
        Format::Markdown => report.to_markdown(),
    };
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

/// JSON Schema for serialized reports, shipped for external consumers;
/// [`validate_report_json`] enforces the same structure.
pub const REPORT_SCHEMA: &str = r#"{
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "type": "object",
  "required": ["context", "battery", "entries", "summary"],
  "additionalProperties": false,
  "properties": {
    "context": {"type": "string"},
    "battery": {"type": "string"},
    "summary": {
      "type": "object",
      "required": ["total", "passed", "failed"],
      "additionalProperties": false,
      "properties": {
        "total": {"type": "integer", "minimum": 0},
        "passed": {"type": "integer", "minimum": 0},
        "failed": {"type": "integer", "minimum": 0}
      }
    },
    "entries": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["name", "at", "pass"],
        "additionalProperties": false,
        "properties": {
          "name": {"type": "string"},
          "map": {"type": "string"},
          "at": {"type": "array", "items": {"type": "string"}},
          "pass": {"type": "boolean"},
          "dims": {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 2, "maxItems": 2},
          "rank": {"type": "integer", "minimum": 0},
          "is_iso": {"type": "boolean"},
          "factors": {"type": "array", "items": {"type": "string"}},
          "details": {"type": "string"}
        }
      }
    }
  }
}"#;

/// Checks a parsed report document against [`REPORT_SCHEMA`], including the
/// cross-field rule that the summary tallies the entries.
pub fn validate_report_json(doc: &Value) -> std::result::Result<(), Vec<String>> {
    let mut errs = Vec::new();
    let Some(obj) = doc.as_object() else {
        return Err(vec!["document is not an object".into()]);
    };
    check_keys(
        obj,
        &["context", "battery", "entries", "summary"],
        &["context", "battery", "entries", "summary"],
        "$",
        &mut errs,
    );
    for key in ["context", "battery"] {
        if obj.get(key).is_some_and(|v| !v.is_string()) {
            errs.push(format!("$.{key} is not a string"));
        }
    }
    let mut tally = (0u64, 0u64);
    match obj.get("entries").map(|v| v.as_array()) {
        Some(Some(entries)) => {
            for (i, e) in entries.iter().enumerate() {
                let path = format!("$.entries[{i}]");
                let Some(eo) = e.as_object() else {
                    errs.push(format!("{path} is not an object"));
                    continue;
                };
                check_keys(
                    eo,
                    &["name", "at", "pass"],
                    &["name", "map", "at", "pass", "dims", "rank", "is_iso", "factors", "details"],
                    &path,
                    &mut errs,
                );
                for key in ["name", "map", "details"] {
                    if eo.get(key).is_some_and(|v| !v.is_string()) {
                        errs.push(format!("{path}.{key} is not a string"));
                    }
                }
                for key in ["at", "factors"] {
                    if let Some(v) = eo.get(key) {
                        if !v.as_array().is_some_and(|a| a.iter().all(Value::is_string)) {
                            errs.push(format!("{path}.{key} is not an array of strings"));
                        }
                    }
                }
                for key in ["pass", "is_iso"] {
                    if eo.get(key).is_some_and(|v| !v.is_boolean()) {
                        errs.push(format!("{path}.{key} is not a boolean"));
                    }
                }
                if eo.get("rank").is_some_and(|v| !v.is_u64()) {
                    errs.push(format!("{path}.rank is not a non-negative integer"));
                }
                if let Some(d) = eo.get("dims") {
                    if !d.as_array().is_some_and(|a| a.len() == 2 && a.iter().all(Value::is_u64)) {
                        errs.push(format!("{path}.dims is not a pair of non-negative integers"));
                    }
                }
                tally.0 += 1;
                if eo.get("pass").and_then(Value::as_bool) == Some(true) {
                    tally.1 += 1;
                }
            }
        }
        Some(None) => errs.push("$.entries is not an array".into()),
        None => {}
    }
    if let Some(s) = obj.get("summary") {
        match s.as_object() {
            Some(so) => {
                check_keys(so, &["total", "passed", "failed"], &["total", "passed", "failed"], "$.summary", &mut errs);
                let get = |k: &str| so.get(k).and_then(Value::as_u64);
                match (get("total"), get("passed"), get("failed")) {
                    (Some(t), Some(p), Some(f)) => {
                        if t != tally.0 || p != tally.1 || f != tally.0 - tally.1 {
                            errs.push(format!(
                                "summary ({t}, {p}, {f}) does not tally entries ({}, {}, {})",
                                tally.0,
                                tally.1,
                                tally.0 - tally.1
                            ));
                        }
                    }
                    _ => errs.push("$.summary counts are not non-negative integers".into()),
                }
            }
            None => errs.push("$.summary is not an object".into()),
        }
    }
    if errs.is_empty() {
        Ok(())
    } else {
        Err(errs)
    }
}

fn check_keys(
    obj: &serde_json::Map<String, Value>,
    required: &[&str],
    allowed: &[&str],
    path: &str,
    errs: &mut Vec<String>,
) {
    for k in required {
        if !obj.contains_key(*k) {
            errs.push(format!("{path} is missing '{k}'"));
        }
    }
    for k in obj.keys() {
        if !allowed.contains(&k.as_str()) {
            errs.push(format!("{path} has unexpected key '{k}'"));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Rationals;

    fn sample() -> CheckReport {
        let f = Rationals;
        let mut r = CheckReport::new("ctx", "demo");
        r.push(CheckEntry::rank_of("omega-iso", "omega", vec!["trivial".into()], &Mat::identity(&f, 2), true));
        let a = Mat::identity(&f, 2);
        let b = Mat::zeros(&f, 2, 2);
        r.push(CheckEntry::equality("alpha-eq", vec!["x".into(), "y".into()], &a, &b));
        r.finalize();
        r
    }

    #[test]
    fn summary_and_order() {
        let r = sample();
        assert_eq!(r.summary, Summary { total: 2, passed: 1, failed: 1 });
        assert_eq!(r.entries[0].name, "alpha-eq");
        assert!(r.entries[0].details.contains("entry (0,0)"));
    }

    #[test]
    fn json_validates_and_round_trips() {
        let r = sample();
        let text = r.to_json();
        let v: Value = serde_json::from_str(&text).unwrap();
        validate_report_json(&v).unwrap();
        let back: CheckReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back.entries, r.entries);
        let empty = {
            let mut e = CheckReport::new("none", "empty");
            e.finalize();
            e
        };
        validate_report_json(&serde_json::from_str(&empty.to_json()).unwrap()).unwrap();
        let _: Value = serde_json::from_str(REPORT_SCHEMA).unwrap();
    }

    #[test]
    fn validator_rejects_bad_tallies() {
        let mut v: Value = serde_json::from_str(&sample().to_json()).unwrap();
        v["summary"]["passed"] = Value::from(2);
        assert!(validate_report_json(&v).is_err());
        v["summary"]["passed"] = Value::from(1);
        v["entries"][0]["pass"] = Value::from("yes");
        assert!(validate_report_json(&v).is_err());
    }

    #[test]
    fn markdown_has_one_table_per_name() {
        let md = sample().to_markdown();
        assert_eq!(md.matches("\n## ").count(), 2);
        assert_eq!(md.matches("| at |").count(), 2);
    }
}
