//! Pinned sign and normalization conventions, each tied to a check that
//! fails if the convention changes.

use crate::report::{Report, Status};
use crate::suites;
use crate::CliError;

pub struct Convention {
    pub topic: &'static str,
    pub statement: &'static str,
    /// `suite/check-id` of the pinning identity.
    pub pinned_by: &'static str,
}

pub const CONVENTIONS: &[Convention] = &[
    Convention {
        topic: "frames",
        statement: "orthonormal coframe e1..en, metric g = Σ e_i², forms written e_{i1..ip} with i1 < .. < ip",
        pinned_by: "exterior/hodge-involution.dim7",
    },
    Convention {
        topic: "structure equations",
        statement: "de_k(e_i, e_j) = -g([e_i, e_j], e_k); d is extended as a graded derivation",
        pinned_by: "examples/heis7.d-omega",
    },
    Convention {
        topic: "hodge star",
        statement: "a ∧ *b = g(a, b) vol with vol = e1..n; ** = (-1)^{p(n-p)}",
        pinned_by: "exterior/g2-form.wedge-star",
    },
    Convention {
        topic: "connection",
        statement: "∇_X Y = ∇^g_X Y + ½ T(X, Y, -); T is the torsion 3-form",
        pinned_by: "examples/heis7.torsion",
    },
    Convention {
        topic: "curvature",
        statement: "R(X, Y) = [∇_X, ∇_Y] - ∇_[X,Y], Ric(X, Y) = Σ R(e_i, X, Y, e_i), positive on round spheres",
        pinned_by: "examples/heis7.ric-nabla",
    },
    Convention {
        topic: "torsion 4-form",
        statement: "σ^T = ½ Σ (e_i ⌟ T) ∧ (e_i ⌟ T)",
        pinned_by: "examples/heis5.two-sigma",
    },
    Convention {
        topic: "clifford algebra",
        statement: "X·X = -|X|², forms act by e_{i1..ip} ↦ Γ_{i1}..Γ_{ip}",
        pinned_by: "clifford/clifford-relations.dim7",
    },
    Convention {
        topic: "g2 form",
        statement: "ω³ = e127 + e135 - e146 - e236 - e245 + e347 + e567",
        pinned_by: "clifford/g2-form.spectrum",
    },
    Convention {
        topic: "almost contact",
        statement: "F(X, Y) = g(X, φY); Sasakian means N = 0 and dη = 2F",
        pinned_by: "examples/heis5.torsion",
    },
    Convention { topic: "almost hermitian", statement: "Ω(X, Y) = g(X, JY)", pinned_by: "hermitian/kt.torsion" },
];

/// The conventions with the live status of each pinning identity.
pub fn ledger() -> Result<String, CliError> {
    let mut reports: Vec<Report> = Vec::new();
    let mut out = String::from("pinned conventions\n");
    for c in CONVENTIONS {
        let (suite, id) = c.pinned_by.split_once('/').expect("suite/id");
        if !reports.iter().any(|r| r.suite == suite) {
            reports.push(suites::run(suite)?);
        }
        let report = reports.iter().find(|r| r.suite == suite).expect("just run");
        let status = report.find(id).map(|k| k.status);
        let shown = match status {
            Some(Status::Pass) => "PASS",
            Some(Status::Fail) => "FAIL",
            Some(Status::Skip) => "SKIP",
            None => "MISSING",
        };
        out.push_str(&format!("{:<20} {}\n{:<20} pinned by {} [{}]\n", c.topic, c.statement, "", c.pinned_by, shown));
    }
    Ok(out)
}
