//! Job descriptions: the input file format and the fully resolved [`JobSpec`].
//!
//! A job file is a declaration block followed by a polynomial list:
//!
//! ```text
//! # the unipotent example
//! vars: x, y
//! order: deglex:y,x
//! mode: analyze
//! expect.algebra.dim: 19
//! ---
//! y^5, (x+y)^6,
//! x^5 - x^3*y^3, x^4*y
//! ```
//!
//! Lines starting with `#` are comments. A file without a `---` line is a bare
//! polynomial list. Newlines inside the list are whitespace. `expect.*` keys
//! are ignored by a run and used by the fixture harness.

use std::fmt;
use std::str::FromStr;

use artinlab::groebner::DEFAULT_TRUNCATION_CAP;
use artinlab::poly::{parse_polynomial_list, MonomialOrder, Polynomial, VarSet};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Analyze,
    Moduli,
    Groebner,
    Derivations,
    Split,
}

impl Mode {
    pub const ALL: [Mode; 5] = [
        Mode::Analyze,
        Mode::Moduli,
        Mode::Groebner,
        Mode::Derivations,
        Mode::Split,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Analyze => "analyze",
            Mode::Moduli => "moduli",
            Mode::Groebner => "groebner",
            Mode::Derivations => "derivations",
            Mode::Split => "split",
        }
    }

    /// Modes that take a single germ instead of an ideal.
    pub fn takes_germ(self) -> bool {
        matches!(self, Mode::Moduli | Mode::Split)
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Mode::ALL
            .into_iter()
            .find(|m| m.as_str() == s.trim())
            .ok_or_else(|| CliError::Job(format!("unknown mode `{}`", s.trim())))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Structured,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s.trim() {
            "text" => Ok(Format::Text),
            "structured" => Ok(Format::Structured),
            other => Err(CliError::Job(format!("unknown format `{other}`"))),
        }
    }
}

/// Raw contents of a job file before variables are resolved.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct JobFile {
    pub vars: Option<String>,
    pub order: Option<String>,
    pub mode: Option<String>,
    pub format: Option<String>,
    pub truncation_cap: Option<String>,
    pub body: String,
    /// `(path, expected value)` pairs from `expect.<path>: <value>` lines.
    pub expectations: Vec<(String, String)>,
}

impl JobFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let lines: Vec<&str> = text.lines().collect();
        let Some(sep) = lines.iter().position(|l| l.trim() == "---") else {
            return Ok(JobFile {
                body: strip_comments(&lines),
                ..JobFile::default()
            });
        };
        let mut job = JobFile {
            body: strip_comments(&lines[sep + 1..]),
            ..JobFile::default()
        };
        for (no, line) in lines[..sep].iter().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| CliError::Job(format!("line {}: expected `key: value`", no + 1)))?;
            let (key, value) = (key.trim(), value.trim().to_string());
            let slot = match key {
                "vars" => &mut job.vars,
                "order" => &mut job.order,
                "mode" => &mut job.mode,
                "format" => &mut job.format,
                "truncation-cap" => &mut job.truncation_cap,
                _ => match key.strip_prefix("expect.") {
                    Some(path) if !path.is_empty() => {
                        job.expectations.push((path.to_string(), value));
                        continue;
                    }
                    _ => return Err(CliError::Job(format!("line {}: unknown key `{key}`", no + 1))),
                },
            };
            if slot.replace(value).is_some() {
                return Err(CliError::Job(format!("line {}: duplicate key `{key}`", no + 1)));
            }
        }
        Ok(job)
    }
}

fn strip_comments(lines: &[&str]) -> String {
    lines
        .iter()
        .filter(|l| !l.trim_start().starts_with('#'))
        .copied()
        .collect::<Vec<_>>()
        .join("\n")
}

/// Command-line values that take precedence over the job file.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub vars: Option<String>,
    pub order: Option<String>,
    pub mode: Option<Mode>,
    pub format: Option<Format>,
    pub truncation_cap: Option<u32>,
}

/// A fully resolved job.
#[derive(Clone, Debug)]
pub struct JobSpec {
    pub variables: VarSet,
    pub mode: Mode,
    pub order: MonomialOrder,
    pub generators: Vec<Polynomial>,
    pub truncation_cap: u32,
    pub format: Format,
}

impl JobSpec {
    pub fn resolve(file: &JobFile, overrides: &Overrides) -> Result<Self, CliError> {
        let vars_text = overrides
            .vars
            .as_deref()
            .or(file.vars.as_deref())
            .ok_or_else(|| CliError::Job("no variables declared; use `vars:` or --vars".into()))?;
        let variables = VarSet::new(vars_text.split(',').map(str::trim).filter(|s| !s.is_empty()))?;
        if variables.is_empty() {
            return Err(CliError::Job("the variable list is empty".into()));
        }
        let mode = match overrides.mode {
            Some(m) => m,
            None => file
                .mode
                .as_deref()
                .map(str::parse)
                .transpose()?
                .unwrap_or(Mode::Analyze),
        };
        let format = match overrides.format {
            Some(f) => f,
            None => file.format.as_deref().map(str::parse).transpose()?.unwrap_or_default(),
        };
        let order = match overrides.order.as_deref().or(file.order.as_deref()) {
            Some(text) => MonomialOrder::parse(text, &variables)?,
            None => MonomialOrder::degrevlex(variables.len()),
        };
        let truncation_cap = match overrides.truncation_cap {
            Some(n) => n,
            None => match file.truncation_cap.as_deref() {
                Some(t) => t
                    .parse()
                    .map_err(|_| CliError::Job(format!("truncation cap `{t}` is not a nonnegative integer")))?,
                None => DEFAULT_TRUNCATION_CAP,
            },
        };
        let generators = parse_polynomial_list(&file.body, &variables)?;
        if generators.is_empty() {
            return Err(CliError::Job("no polynomials given".into()));
        }
        if mode.takes_germ() && generators.len() != 1 {
            return Err(CliError::Job(format!(
                "mode `{mode}` takes exactly one polynomial, got {}",
                generators.len()
            )));
        }
        Ok(JobSpec {
            variables,
            mode,
            order,
            generators,
            truncation_cap,
            format,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_declarations_and_body() {
        let f = JobFile::parse("# c\nvars: x, y\norder: deglex:y,x\nexpect.algebra.dim: 19\n---\nx^2,\n# skip\ny^3\n")
            .unwrap();
        assert_eq!(f.vars.as_deref(), Some("x, y"));
        assert_eq!(f.order.as_deref(), Some("deglex:y,x"));
        assert_eq!(f.expectations, vec![("algebra.dim".to_string(), "19".to_string())]);
        let job = JobSpec::resolve(&f, &Overrides::default()).unwrap();
        assert_eq!(job.generators.len(), 2);
        assert_eq!(job.mode, Mode::Analyze);
        assert_eq!(job.order.describe(&job.variables), "deglex:y,x");
    }

    #[test]
    fn bare_list_needs_variables_from_flags() {
        let f = JobFile::parse("x^2, y^2").unwrap();
        assert!(JobSpec::resolve(&f, &Overrides::default()).is_err());
        let o = Overrides {
            vars: Some("x,y".into()),
            mode: Some(Mode::Groebner),
            ..Overrides::default()
        };
        let job = JobSpec::resolve(&f, &o).unwrap();
        assert_eq!(job.mode, Mode::Groebner);
        assert_eq!(job.truncation_cap, DEFAULT_TRUNCATION_CAP);
    }

    #[test]
    fn rejects_malformed_jobs() {
        assert!(JobFile::parse("vars x\n---\nx").is_err());
        assert!(JobFile::parse("colour: red\n---\nx").is_err());
        assert!(JobFile::parse("vars: x\nvars: y\n---\nx").is_err());
        let f = JobFile::parse("vars: x, y\nmode: moduli\n---\nx^3, y^2").unwrap();
        assert!(JobSpec::resolve(&f, &Overrides::default()).is_err());
        let f = JobFile::parse("vars: x\nmode: nonsense\n---\nx").unwrap();
        assert!(JobSpec::resolve(&f, &Overrides::default()).is_err());
    }
}
