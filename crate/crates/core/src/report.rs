//! Claim reports: one verification record per line.

use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Refuted,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Verified => "verified",
            Status::Refuted => "refuted",
            Status::Error => "error",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClaimReport {
    pub claim: String,
    pub status: Status,
    pub expected: Option<String>,
    pub actual: Option<String>,
    pub ms: u64,
    pub witness: Option<String>,
}

impl ClaimReport {
    /// Verified iff `expected == actual`.
    pub fn compare(
        claim: impl Into<String>,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
        witness: Option<String>,
    ) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let status = if expected == actual {
            Status::Verified
        } else {
            Status::Refuted
        };
        Self {
            claim: claim.into(),
            status,
            expected: Some(expected),
            actual: Some(actual),
            ms: 0,
            witness,
        }
    }

    pub fn error(claim: impl Into<String>, err: &Error) -> Self {
        Self {
            claim: claim.into(),
            status: Status::Error,
            expected: None,
            actual: None,
            ms: 0,
            witness: Some(err.to_string()),
        }
    }

    pub fn with_ms(mut self, ms: u64) -> Self {
        self.ms = ms;
        self
    }

    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    /// Parses one line, rejecting records that claim verification while
    /// their expected and actual values differ.
    pub fn parse_line(line: &str) -> Result<Self> {
        let r: ClaimReport = serde_json::from_str(line).map_err(|e| Error::Format {
            line: 1,
            message: e.to_string(),
        })?;
        if r.status == Status::Verified {
            if let (Some(e), Some(a)) = (&r.expected, &r.actual) {
                if e != a {
                    return Err(Error::Format {
                        line: 1,
                        message: "verified record with differing expected and actual".into(),
                    });
                }
            }
        }
        Ok(r)
    }
}

/// Parses a whole report, one record per non-empty line.
pub fn parse_report(text: &str) -> Result<Vec<ClaimReport>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            ClaimReport::parse_line(l).map_err(|e| match e {
                Error::Format { message, .. } => Error::Format {
                    line: i + 1,
                    message,
                },
                other => other,
            })
        })
        .collect()
}

/// Runs `f`, recording wall time in the report only when `timings` is set so
/// that default output is reproducible.
pub fn timed(timings: bool, f: impl FnOnce() -> ClaimReport) -> ClaimReport {
    let start = Instant::now();
    let r = f();
    if timings {
        r.with_ms(start.elapsed().as_millis() as u64)
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_format() {
        let r = ClaimReport::compare("padding.K4", "s=5", "s=5", None);
        assert_eq!(
            r.to_line(),
            r#"{"claim":"padding.K4","status":"verified","expected":"s=5","actual":"s=5","ms":0,"witness":null}"#
        );
        assert_eq!(ClaimReport::parse_line(&r.to_line()).unwrap(), r);
        let bad = ClaimReport::compare("x", 1, 2, Some("w".into()));
        assert_eq!(bad.status, Status::Refuted);
    }

    #[test]
    fn rejects_inconsistent_lines() {
        let line = r#"{"claim":"c","status":"verified","expected":"1","actual":"2","ms":0,"witness":null}"#;
        assert!(ClaimReport::parse_line(line).is_err());
        assert!(ClaimReport::parse_line(r#"{"claim":"c"}"#).is_err());
        assert!(ClaimReport::parse_line("not json").is_err());
        let text = format!(
            "{}\n\nnope\n",
            ClaimReport::compare("a", 1, 1, None).to_line()
        );
        assert!(matches!(
            parse_report(&text),
            Err(Error::Format { line: 3, .. })
        ));
    }
}
