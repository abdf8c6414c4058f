use std::fmt;

use serde::Serialize;

/// The first failing entry of an identity check: where it fails and the two
/// sides, printed in the coefficient grammar.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub location: String,
    pub lhs: String,
    pub rhs: String,
}

impl Witness {
    pub fn new(location: impl Into<String>, lhs: impl fmt::Display, rhs: impl fmt::Display) -> Self {
        Witness { location: location.into(), lhs: lhs.to_string(), rhs: rhs.to_string() }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at {}: lhs = {}, rhs = {}", self.location, self.lhs, self.rhs)
    }
}

/// Verdict of an identity check; a failing outcome always carries a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Outcome {
    pub fn pass() -> Self {
        Outcome { holds: true, witness: None }
    }

    pub fn fail(w: Witness) -> Self {
        Outcome { holds: false, witness: Some(w) }
    }

    pub fn from_witness(w: Option<Witness>) -> Self {
        match w {
            Some(w) => Outcome::fail(w),
            None => Outcome::pass(),
        }
    }
}

/// How an identity is decided.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Symbolic equality in the rational-function field.
    #[default]
    Exact,
    /// Equality of values at a seeded random rational point.
    Random { seed: u64 },
}
