//! Machine-readable verification reports.

use std::time::Duration;

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1.0.0";

/// JSON Schema for [`VerificationReport`], committed alongside the crate.
pub const SCHEMA: &str = include_str!("../schema/verification-report.schema.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Inconclusive,
    Fail,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Inconclusive => 2,
            Verdict::Fail => 1,
        }
    }

    /// `Fail` dominates `Inconclusive`, which dominates `Pass`.
    pub fn combine(self, other: Verdict) -> Verdict {
        use Verdict::*;
        match (self, other) {
            (Fail, _) | (_, Fail) => Fail,
            (Inconclusive, _) | (_, Inconclusive) => Inconclusive,
            _ => Pass,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Inconclusive => "inconclusive",
            Verdict::Fail => "fail",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    Path {
        vertices: Vec<usize>,
        types: Vec<String>,
    },
    Coloring {
        colors: Vec<u8>,
    },
    Assignment {
        values: Vec<bool>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub target: String,
    pub expected: String,
    pub decision: String,
    pub status: Verdict,
    /// False when any solver call behind this record hit its budget.
    pub exhaustive: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub nodes: u64,
    pub wall_seconds: f64,
}

impl CheckRecord {
    pub fn new(
        name: impl Into<String>,
        target: impl Into<String>,
        expected: impl Into<String>,
    ) -> Self {
        CheckRecord {
            name: name.into(),
            target: target.into(),
            expected: expected.into(),
            decision: String::new(),
            status: Verdict::Inconclusive,
            exhaustive: false,
            witness: None,
            nodes: 0,
            wall_seconds: 0.0,
        }
    }

    /// `holds` is `None` when the decision could not be reached.
    pub fn decided(
        mut self,
        decision: impl Into<String>,
        holds: Option<bool>,
        exhaustive: bool,
    ) -> Self {
        self.decision = decision.into();
        self.exhaustive = exhaustive;
        self.status = match holds {
            Some(false) => Verdict::Fail,
            Some(true) if exhaustive => Verdict::Pass,
            _ => Verdict::Inconclusive,
        };
        self
    }

    pub fn with_witness(mut self, witness: Option<Witness>) -> Self {
        self.witness = witness;
        self
    }

    pub fn with_cost(mut self, nodes: u64, elapsed: Duration) -> Self {
        self.nodes = nodes;
        self.wall_seconds = elapsed.as_secs_f64();
        self
    }
}

/// A measured fact that is reported but does not enter the verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Observation {
    pub name: String,
    pub target: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tool {
    pub name: String,
    pub version: String,
}

impl Default for Tool {
    fn default() -> Self {
        Tool {
            name: "p19free".to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BudgetSettings {
    pub max_nodes: Option<u64>,
    pub max_seconds: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: String,
    pub tool: Tool,
    pub seed: u64,
    pub budget: BudgetSettings,
    pub checks: Vec<CheckRecord>,
    pub observations: Vec<Observation>,
    pub verdict: Verdict,
    pub total_nodes: u64,
    pub wall_seconds: f64,
}

impl VerificationReport {
    pub fn new(
        seed: u64,
        budget: BudgetSettings,
        checks: Vec<CheckRecord>,
        observations: Vec<Observation>,
        elapsed: Duration,
    ) -> Self {
        let verdict = checks
            .iter()
            .fold(Verdict::Pass, |v, c| v.combine(c.status));
        VerificationReport {
            schema_version: SCHEMA_VERSION.to_string(),
            tool: Tool::default(),
            seed,
            budget,
            total_nodes: checks.iter().map(|c| c.nodes).sum(),
            checks,
            observations,
            verdict,
            wall_seconds: elapsed.as_secs_f64(),
        }
    }

    /// The report with node counts and timings zeroed, for comparing runs.
    pub fn without_costs(&self) -> VerificationReport {
        let mut r = self.clone();
        r.total_nodes = 0;
        r.wall_seconds = 0.0;
        for c in &mut r.checks {
            c.nodes = 0;
            c.wall_seconds = 0.0;
        }
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.status != Verdict::Pass)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_combination() {
        use Verdict::*;
        assert_eq!(Pass.combine(Inconclusive), Inconclusive);
        assert_eq!(Inconclusive.combine(Fail), Fail);
        assert_eq!(Pass.combine(Pass), Pass);
        assert_eq!(
            [Pass, Inconclusive, Fail].map(Verdict::exit_code),
            [0, 2, 1]
        );
    }

    #[test]
    fn status_requires_exhaustive_decision() {
        let r = CheckRecord::new("x", "g", "yes");
        assert_eq!(
            r.clone().decided("yes", Some(true), true).status,
            Verdict::Pass
        );
        assert_eq!(
            r.clone().decided("yes", Some(true), false).status,
            Verdict::Inconclusive
        );
        assert_eq!(
            r.clone().decided("?", None, false).status,
            Verdict::Inconclusive
        );
        assert_eq!(r.decided("no", Some(false), true).status, Verdict::Fail);
    }

    #[test]
    fn empty_report_passes() {
        let budget = BudgetSettings {
            max_nodes: None,
            max_seconds: None,
        };
        let r = VerificationReport::new(0, budget, vec![], vec![], Duration::ZERO);
        assert_eq!(r.verdict, Verdict::Pass);
        let back: VerificationReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }
}
