//! The curated fixtures and their pinned reports.

use serde::Serialize;
use serde_json::Value;

use super::analyze::{analyze, AnalysisReport, AnalyzeError, AnalyzeOptions};
use super::format::{parse_space, SpaceDescription};

pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub expected: &'static str,
}

macro_rules! fixture {
    ($name:literal) => {
        Fixture {
            name: $name,
            description: include_str!(concat!("../../catalog/", $name, ".json")),
            expected: include_str!(concat!("../../catalog/", $name, ".expected.json")),
        }
    };
}

pub const FIXTURES: [Fixture; 5] = [
    fixture!("sl2_so11"),
    fixture!("sl2_so2"),
    fixture!("sl2_n"),
    fixture!("sl2xsl2_diag"),
    fixture!("sl3_so21"),
];

pub fn list() -> Vec<&'static str> {
    FIXTURES.iter().map(|f| f.name).collect()
}

pub fn fixture(name: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.name == name)
}

impl Fixture {
    pub fn parse(&self) -> SpaceDescription {
        parse_space(self.description).expect("shipped fixtures parse")
    }

    pub fn expected_report(&self) -> AnalysisReport {
        serde_json::from_str(self.expected).expect("shipped expectations parse")
    }
}

/// Run-dependent numeric fields; verdicts and `passed` are still compared.
const UNPINNED: [&str; 3] = [
    "/timing_ms",
    "/grasslimit/interior_max_late_distance",
    "/grasslimit/exterior_min_distance",
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FieldDiff {
    /// JSON pointer into the report.
    pub path: String,
    pub expected: Value,
    pub actual: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogResult {
    pub name: String,
    pub diffs: Vec<FieldDiff>,
    pub report: AnalysisReport,
}

impl CatalogResult {
    pub fn passed(&self) -> bool {
        self.diffs.is_empty()
    }
}

fn diff_values(path: &str, expected: &Value, actual: &Value, out: &mut Vec<FieldDiff>) {
    if UNPINNED.contains(&path) {
        return;
    }
    match (expected, actual) {
        (Value::Object(e), Value::Object(a)) => {
            let mut keys: Vec<&String> = e.keys().chain(a.keys()).collect();
            keys.sort();
            keys.dedup();
            for k in keys {
                let p = format!("{path}/{k}");
                diff_values(
                    &p,
                    e.get(k).unwrap_or(&Value::Null),
                    a.get(k).unwrap_or(&Value::Null),
                    out,
                );
            }
        }
        (Value::Array(e), Value::Array(a)) if e.len() == a.len() => {
            for (i, (x, y)) in e.iter().zip(a).enumerate() {
                diff_values(&format!("{path}/{i}"), x, y, out);
            }
        }
        _ if expected != actual => out.push(FieldDiff {
            path: path.to_string(),
            expected: expected.clone(),
            actual: actual.clone(),
        }),
        _ => {}
    }
}

/// Field-by-field differences between two reports, ignoring unpinned fields.
pub fn compare(expected: &AnalysisReport, actual: &AnalysisReport) -> Vec<FieldDiff> {
    let e = serde_json::to_value(expected).expect("reports serialize");
    let a = serde_json::to_value(actual).expect("reports serialize");
    let mut out = Vec::new();
    diff_values("", &e, &a, &mut out);
    out
}

pub fn run_fixture(f: &Fixture) -> Result<CatalogResult, AnalyzeError> {
    let desc = f.parse();
    let report = analyze(&desc, &AnalyzeOptions::from_description(&desc))?.report;
    Ok(CatalogResult {
        name: f.name.to_string(),
        diffs: compare(&f.expected_report(), &report),
        report,
    })
}

/// Runs the named fixtures concurrently, in the given order.
pub fn run(names: &[&str]) -> Vec<Result<CatalogResult, AnalyzeError>> {
    let fixtures: Vec<&Fixture> = names.iter().filter_map(|n| fixture(n)).collect();
    std::thread::scope(|s| {
        let handles: Vec<_> = fixtures
            .iter()
            .map(|f| s.spawn(move || run_fixture(f)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("analysis thread panicked"))
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists_five() {
        assert_eq!(
            list(),
            ["sl2_so11", "sl2_so2", "sl2_n", "sl2xsl2_diag", "sl3_so21"]
        );
        assert!(fixture("sl4").is_none());
    }

    #[test]
    fn diff_reports_paths() {
        let f = fixture("sl2_so11").unwrap();
        let e = f.expected_report();
        let mut a = e.clone();
        a.wavefront = !a.wavefront;
        a.timing_ms += 7;
        let d = compare(&e, &a);
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].path, "/wavefront");
    }
}
