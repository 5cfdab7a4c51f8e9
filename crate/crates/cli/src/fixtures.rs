//! The fixture corpus: job files with their expected report fields, embedded
//! at build time so that `--fixture NAME` works from any directory.

use serde_json::Value;

use crate::error::CliError;
use crate::job::{JobFile, JobSpec, Overrides};
use crate::report::Report;
use crate::run::run;

macro_rules! fixtures {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../fixtures/", $name, ".job")))),*]
    };
}

/// `(name, job file text)` for every fixture, sorted by name.
pub const FIXTURES: &[(&str, &str)] = fixtures![
    "decomposition-line",
    "decomposition-plane",
    "derivations-dual-numbers",
    "error-infinite-dimensional",
    "error-irrational-points",
    "error-not-isolated",
    "error-parse",
    "extremal-plane",
    "extremal-space",
    "groebner-unipotent",
    "moduli-e8",
    "moduli-shifted-square",
    "moduli-x4-y4",
    "split-shifted-square",
    "squares-3",
    "tensor-extremal-order-2",
    "unipotent-deglex",
];

pub fn fixture(name: &str) -> Result<&'static str, CliError> {
    FIXTURES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| *text)
        .ok_or_else(|| CliError::UnknownFixture(name.to_string()))
}

/// Follows a dotted path such as `components.0.der.dim` into a JSON tree.
pub fn lookup<'a>(value: &'a Value, path: &str) -> Option<&'a Value> {
    path.split('.').try_fold(value, |v, key| match v {
        Value::Object(map) => map.get(key),
        Value::Array(items) => key.parse::<usize>().ok().and_then(|i| items.get(i)),
        _ => None,
    })
}

/// Expected text is read as JSON when it parses, otherwise as a bare string.
fn expected_value(text: &str) -> Value {
    serde_json::from_str(text).unwrap_or_else(|_| Value::String(text.to_string()))
}

/// Result of replaying one fixture.
#[derive(Debug)]
pub struct Replay {
    pub name: String,
    pub checked: usize,
    pub mismatches: Vec<String>,
}

impl Replay {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.checked > 0
    }
}

/// Compares a report (or the error category) against `expect.*` lines. The
/// special path `error` names the expected exit category.
pub fn check(outcome: &Result<Report, CliError>, expectations: &[(String, String)]) -> (usize, Vec<String>) {
    let mut mismatches = Vec::new();
    let value = outcome
        .as_ref()
        .ok()
        .map(|r| serde_json::to_value(r).expect("report is plain data"));
    for (path, expected) in expectations {
        let found = match (path.as_str(), outcome, &value) {
            ("error", Err(e), _) => Value::String(e.category_name().to_string()),
            ("error", Ok(_), _) => Value::String("none".to_string()),
            (_, Err(e), _) => {
                mismatches.push(format!("{path}: run failed: {e}"));
                continue;
            }
            (_, Ok(_), Some(v)) => match lookup(v, path) {
                Some(x) => x.clone(),
                None => {
                    mismatches.push(format!("{path}: missing from report"));
                    continue;
                }
            },
            (_, Ok(_), None) => unreachable!("value exists for successful runs"),
        };
        let want = expected_value(expected);
        if found != want {
            mismatches.push(format!("{path}: expected {want}, found {found}"));
        }
    }
    (expectations.len(), mismatches)
}

/// Parses, runs and checks one fixture.
pub fn replay(name: &str) -> Result<Replay, CliError> {
    let file = JobFile::parse(fixture(name)?)?;
    let outcome = JobSpec::resolve(&file, &Overrides::default()).and_then(|job| run(&job));
    let (checked, mismatches) = check(&outcome, &file.expectations);
    Ok(Replay {
        name: name.to_string(),
        checked,
        mismatches,
    })
}
