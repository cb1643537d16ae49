//! Check rows and suite reports.

use std::fmt::Display;

use ratlin::{Rational, Zero};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

/// Where an expected value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// A value stated in the literature for this model or identity.
    Published,
    /// A value obtained by an independent computation.
    Computed,
    /// Holds by definition or construction.
    Definition,
}

impl Display for Basis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Basis::Published => "published",
            Basis::Computed => "computed",
            Basis::Definition => "definition",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    /// Stable name of the statement being checked.
    pub anchor: String,
    pub status: Status,
    /// Residual or computed value; exact, rationals as `p/q`.
    pub value: String,
    pub expected: String,
    pub basis: Basis,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report { suite: suite.into(), checks: Vec::new() }
    }

    pub fn count(&self, s: Status) -> usize {
        self.checks.iter().filter(|c| c.status == s).count()
    }

    pub fn passed(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn find(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{:<4} {}  [{}]  value: {}  expected: {} ({})\n",
                c.status, c.id, c.anchor, c.value, c.expected, c.basis
            ));
        }
        out.push_str(&format!(
            "suite {}: {} passed, {} failed, {} skipped\n",
            self.suite,
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skip)
        ));
        out
    }

    fn push(&mut self, id: String, anchor: &str, status: Status, value: String, expected: String, basis: Basis) {
        self.checks.push(Check { id, anchor: anchor.into(), status, value, expected, basis });
    }

    /// PASS iff the residual is zero.
    pub fn zero(&mut self, id: impl Into<String>, anchor: &str, basis: Basis, residual: &Rational) {
        let status = if residual.is_zero() { Status::Pass } else { Status::Fail };
        self.push(id.into(), anchor, status, residual.to_string(), "0".into(), basis);
    }

    /// PASS iff `got == want`; both are reported by their `Display`.
    pub fn equal<T: PartialEq + Display>(
        &mut self,
        id: impl Into<String>,
        anchor: &str,
        basis: Basis,
        got: &T,
        want: &T,
    ) {
        let status = if got == want { Status::Pass } else { Status::Fail };
        self.push(id.into(), anchor, status, got.to_string(), want.to_string(), basis);
    }

    /// PASS iff `got == want`, with the values already rendered.
    pub fn same(&mut self, id: impl Into<String>, anchor: &str, basis: Basis, got: String, want: String) {
        let status = if got == want { Status::Pass } else { Status::Fail };
        self.push(id.into(), anchor, status, got, want, basis);
    }

    pub fn truth(&mut self, id: impl Into<String>, anchor: &str, basis: Basis, holds: bool, statement: &str) {
        let status = if holds { Status::Pass } else { Status::Fail };
        let value = if holds { "holds" } else { "does not hold" };
        self.push(id.into(), anchor, status, value.into(), statement.into(), basis);
    }

    /// A check that could not be evaluated.
    pub fn error(&mut self, id: impl Into<String>, anchor: &str, basis: Basis, message: String, expected: &str) {
        self.push(id.into(), anchor, Status::Fail, format!("error: {message}"), expected.into(), basis);
    }

    /// A statement outside the scope of exact finite-dimensional checks.
    pub fn skip(&mut self, id: impl Into<String>, anchor: &str, reason: &str) {
        self.push(id.into(), anchor, Status::Skip, "not evaluated".into(), reason.into(), Basis::Definition);
    }

    pub fn extend(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.id = format!("{prefix}/{}", c.id);
            self.checks.push(c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ratlin::q;

    #[test]
    fn json_round_trip_and_exit_codes() {
        let mut r = Report::new("demo");
        r.zero("a", "anchor-a", Basis::Computed, &q(0, 1));
        r.zero("b", "anchor-b", Basis::Published, &q(-3, 7));
        r.skip("c", "anchor-c", "global statement");
        let back = Report::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert_eq!(r.exit_code(), 1);
        assert_eq!(r.find("b").unwrap().value, "-3/7");
        assert!(r.to_json().contains("\"SKIP\""));
        let mut ok = Report::new("ok");
        ok.equal("x", "anchor-x", Basis::Definition, &q(2, 3), &q(4, 6));
        assert_eq!(ok.exit_code(), 0);
    }
}
