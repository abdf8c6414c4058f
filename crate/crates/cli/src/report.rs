use std::fmt;

use cgybe::check::{Mode, Outcome, Witness};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// A named sub-result shown under the main verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Detail {
    pub name: String,
    pub holds: bool,
}

/// Result of one `verify` run.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub check: String,
    pub target: String,
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<Detail>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

pub fn mode_label(mode: Mode) -> (String, Option<u64>) {
    match mode {
        Mode::Exact => ("exact".into(), None),
        Mode::Random { seed } => ("randomized".into(), Some(seed)),
    }
}

impl VerifyReport {
    pub fn new(check: &str, target: String, mode: Mode, outcome: Outcome) -> Self {
        let (mode, seed) = mode_label(mode);
        VerifyReport {
            check: check.into(),
            target,
            mode,
            seed,
            verdict: if outcome.holds { Verdict::Pass } else { Verdict::Fail },
            witness: outcome.witness,
            details: Vec::new(),
            wall_time_ms: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "check: {}", self.check)?;
        writeln!(f, "target: {}", self.target)?;
        match self.seed {
            Some(s) => writeln!(f, "mode: {} (seed {s}; a pass holds with high probability)", self.mode)?,
            None => writeln!(f, "mode: {}", self.mode)?,
        }
        for d in &self.details {
            writeln!(f, "  {}: {}", d.name, if d.holds { "holds" } else { "fails" })?;
        }
        writeln!(f, "verdict: {}", if self.passed() { "pass" } else { "fail" })?;
        if let Some(w) = &self.witness {
            writeln!(f, "witness: {w}")?;
        }
        if let Some(t) = self.wall_time_ms {
            writeln!(f, "time: {t:.3} ms")?;
        }
        Ok(())
    }
}
