//! Verification reports: named checks with a status, their origin, and the
//! statement they test.

use std::fmt::{self, Display, Write as _};

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    PaperMismatch,
}

impl Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::PaperMismatch => "paper_mismatch",
        })
    }
}

/// Where an expected value comes from: a printed statement, a definition, or
/// an independent computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Provenance {
    Paper,
    Trivial,
    Derived,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    pub provenance: Provenance,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub paper_ref: Option<String>,
}

impl Check {
    /// `Pass` when `ok`, otherwise `Fail`.
    pub fn new(name: &str, ok: bool, expected: impl Display, actual: impl Display, provenance: Provenance) -> Self {
        Check {
            name: name.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            expected: expected.to_string(),
            actual: actual.to_string(),
            provenance,
            paper_ref: None,
        }
    }

    /// `Pass` when `ok`, otherwise `PaperMismatch`: the computed value is
    /// authoritative and disagrees with a printed claim.
    pub fn claim(name: &str, ok: bool, expected: impl Display, actual: impl Display, reference: &str) -> Self {
        Check {
            status: if ok { Status::Pass } else { Status::PaperMismatch },
            paper_ref: Some(reference.to_string()),
            ..Check::new(name, ok, expected, actual, Provenance::Paper)
        }
    }

    pub fn equal<T: PartialEq + Display>(name: &str, expected: T, actual: T, provenance: Provenance) -> Self {
        let ok = expected == actual;
        Check::new(name, ok, expected, actual, provenance)
    }

    pub fn with_ref(mut self, reference: &str) -> Self {
        self.paper_ref = Some(reference.to_string());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub version: String,
    pub seed: u64,
    pub samples: usize,
    pub suites: Vec<SuiteReport>,
}

impl Report {
    pub fn checks(&self) -> impl Iterator<Item = &Check> {
        self.suites.iter().flat_map(|s| s.checks.iter())
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks().filter(|c| c.status == status).count()
    }

    /// 1 if anything failed, else 2 if a printed claim disagrees, else 0.
    pub fn exit_code(&self) -> i32 {
        if self.count(Status::Fail) > 0 {
            1
        } else if self.count(Status::PaperMismatch) > 0 {
            2
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# Verification report\n");
        let _ = writeln!(out, "version {}, seed {}, samples {}\n", self.version, self.seed, self.samples);
        for s in &self.suites {
            let _ = writeln!(out, "## {}\n", s.name);
            let _ = writeln!(out, "| check | status | expected | actual | provenance | reference |");
            let _ = writeln!(out, "|---|---|---|---|---|---|");
            for c in &s.checks {
                let prov = serde_json::to_value(c.provenance).expect("enum serializes");
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {} | {} | {} |",
                    c.name,
                    c.status,
                    c.expected.replace('|', "\\|"),
                    c.actual.replace('|', "\\|"),
                    prov.as_str().unwrap_or_default(),
                    c.paper_ref.as_deref().unwrap_or("").replace('|', "\\|")
                );
            }
            let _ = writeln!(out);
        }
        let _ = writeln!(
            out,
            "**{} pass, {} fail, {} paper_mismatch**",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::PaperMismatch)
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(statuses: &[Status]) -> Report {
        let checks = statuses
            .iter()
            .map(|s| Check { status: *s, ..Check::new("c", true, 1, 1, Provenance::Trivial) })
            .collect();
        Report { version: "0".into(), seed: 1, samples: 1, suites: vec![SuiteReport { name: "s".into(), checks }] }
    }

    #[test]
    fn exit_codes() {
        assert_eq!(report(&[Status::Pass]).exit_code(), 0);
        assert_eq!(report(&[Status::Pass, Status::PaperMismatch]).exit_code(), 2);
        assert_eq!(report(&[Status::Fail, Status::PaperMismatch]).exit_code(), 1);
    }

    #[test]
    fn serialized_names() {
        let r = report(&[Status::PaperMismatch]);
        let j = r.to_json();
        assert!(j.contains("\"paper_mismatch\""));
        assert!(j.contains("\"TRIVIAL\""));
        assert!(!j.contains("paper_ref"));
        assert!(r.to_markdown().contains("| c | paper_mismatch |"));
        let c = Check::claim("x", false, 8, 6, "quoted");
        assert_eq!(c.status, Status::PaperMismatch);
        assert_eq!(c.provenance, Provenance::Paper);
    }
}
