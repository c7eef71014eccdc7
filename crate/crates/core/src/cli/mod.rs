//! Named verification suites and their reports.

mod suites;

use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;
use thiserror::Error;

use crate::exact;
use crate::perm::Catalog;

/// Suite names accepted by [`run_suite`]; `all` runs every other suite.
pub const SUITES: [&str; 12] = [
    "classify",
    "characters",
    "lefschetz",
    "lattices",
    "gonality",
    "appendix-a",
    "s5-config",
    "hesse-config",
    "steiner",
    "exact-surfaces",
    "char-p",
    "all",
];

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("unknown suite `{0}`; expected one of: {}", SUITES.join(", "))]
    UnknownSuite(String),
    #[error("fixtures: {0}")]
    Fixture(String),
}

/// Fixture data used by the suites.
#[derive(Debug, Clone)]
pub struct Context {
    pub catalog: Catalog,
    pub surfaces: exact::Fixtures,
}

impl Context {
    pub fn bundled() -> Self {
        Context { catalog: Catalog::bundled(), surfaces: exact::Fixtures::bundled() }
    }

    /// Reads `groups.txt` and `surfaces.txt` from `dir`.
    pub fn from_dir(dir: &Path) -> Result<Self, CliError> {
        let catalog = Catalog::from_file(&dir.join("groups.txt")).map_err(|e| CliError::Fixture(e.to_string()))?;
        let surfaces = exact::Fixtures::from_dir(dir).map_err(|e| CliError::Fixture(e.to_string()))?;
        Ok(Context { catalog, surfaces })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn of(passed: bool) -> Self {
        if passed {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Verdict::Pass
    }
}

/// One verified statement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    /// The mathematical statement being checked.
    pub reference: String,
    pub verdict: Verdict,
    pub details: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub suite: String,
    pub filter: Option<String>,
    pub verdict: Verdict,
    pub passed: usize,
    pub failed: usize,
    /// Sorted by id.
    pub checks: Vec<Check>,
}

impl SuiteReport {
    fn new(suite: &str, filter: Option<&str>, mut checks: Vec<Check>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let passed = checks.iter().filter(|c| c.verdict.passed()).count();
        let failed = checks.len() - passed;
        SuiteReport {
            schema_version: SCHEMA_VERSION,
            suite: suite.to_string(),
            filter: filter.map(str::to_string),
            verdict: Verdict::of(failed == 0),
            passed,
            failed,
            checks,
        }
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }
}

/// Whether a suite can contain ids starting with `filter`.
fn may_match(suite: &str, filter: Option<&str>) -> bool {
    let prefix = format!("{suite}.");
    filter.is_none_or(|f| prefix.starts_with(f) || f.starts_with(&prefix))
}

/// Runs a suite, keeping the checks whose id starts with `filter`.
///
/// Progress messages go to `progress`, never into the report.
pub fn run_suite(
    name: &str,
    filter: Option<&str>,
    ctx: &Context,
    progress: &mut dyn FnMut(&str),
) -> Result<SuiteReport, CliError> {
    let names: Vec<&str> = match name {
        "all" => SUITES[..SUITES.len() - 1].to_vec(),
        n if SUITES.contains(&n) => vec![n],
        n => return Err(CliError::UnknownSuite(n.to_string())),
    };
    let mut checks = Vec::new();
    for suite in names {
        if may_match(suite, filter) {
            progress(&format!("running {suite}"));
            checks.extend(suites::run(suite, ctx, progress));
        }
    }
    checks.retain(|c| filter.is_none_or(|f| c.id.starts_with(f)));
    Ok(SuiteReport::new(name, filter, checks))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// Serialized report; identical inputs give identical bytes.
pub fn emit_report(report: &SuiteReport, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("report serializes") + "\n",
        Format::Text => {
            let mut out = String::new();
            for c in &report.checks {
                let v = if c.verdict.passed() { "PASS" } else { "FAIL" };
                let _ = writeln!(out, "{}  {v}  {}  [{}]", c.id, c.reference, c.details);
            }
            let v = if report.verdict.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(
                out,
                "suite {}: {} passed, {} failed, verdict {v}",
                report.suite, report.passed, report.failed
            );
            out
        }
    }
}
