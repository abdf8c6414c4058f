//! JSON exchange format for operators.
//!
//! ```json
//! {"kind": "homogeneous", "n": 2, "generators": ["q"],
//!  "entries": [{"i": 1, "j": 2, "k": 2, "coeff": "q"}]}
//! {"kind": "dynamical", "s_generator": "s", "torus_rank": 2, "n": 2,
//!  "degree": 2, "generators": ["s", "K1", "K2"],
//!  "entries": [{"in": [1, 2], "out": [2, 1], "coeff": "s"}]}
//! ```
//!
//! Coefficients use the expression grammar of [`crate::arith::parse_coeff`].

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::arith::{parse_coeff, RingCtx};
use crate::dybe::{torus_ctx, DynOp, S};
use crate::error::{Error, Result};
use crate::tensor::{in_range, HomOp};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub coeff: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DynEntry {
    #[serde(rename = "in")]
    pub input: Vec<usize>,
    #[serde(rename = "out")]
    pub output: Vec<usize>,
    pub coeff: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum OperatorFile {
    Homogeneous {
        n: usize,
        generators: Vec<String>,
        entries: Vec<HomEntry>,
    },
    Dynamical {
        s_generator: String,
        torus_rank: usize,
        n: usize,
        degree: usize,
        generators: Vec<String>,
        entries: Vec<DynEntry>,
    },
}

/// A decoded operator.
#[derive(Clone, Debug)]
pub enum Operator {
    Homogeneous(HomOp),
    Dynamical(DynOp),
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidOperator(msg.into())
}

pub fn homop_to_file(g: &HomOp) -> OperatorFile {
    OperatorFile::Homogeneous {
        n: g.n(),
        generators: g.ctx().names().to_vec(),
        entries: g
            .entries()
            .map(|(&(i, j, k), c)| HomEntry { i, j, k, coeff: c.to_string() })
            .collect(),
    }
}

pub fn dynop_to_file(r: &DynOp) -> OperatorFile {
    OperatorFile::Dynamical {
        s_generator: S.into(),
        torus_rank: r.n(),
        n: r.n(),
        degree: r.degree(),
        generators: r.ctx().names().to_vec(),
        entries: r
            .entries()
            .map(|(i, o, c)| DynEntry { input: i.clone(), output: o.clone(), coeff: c.to_string() })
            .collect(),
    }
}

impl Operator {
    pub fn to_file(&self) -> OperatorFile {
        match self {
            Operator::Homogeneous(g) => homop_to_file(g),
            Operator::Dynamical(r) => dynop_to_file(r),
        }
    }

    pub fn to_json(&self) -> String {
        self.to_file().to_json()
    }
}

impl OperatorFile {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("operator files serialize") + "\n"
    }

    pub fn from_json(src: &str) -> Result<OperatorFile> {
        serde_json::from_str(src).map_err(|e| invalid(e.to_string()))
    }

    /// Validates keys and parses every coefficient.
    pub fn decode(&self) -> Result<Operator> {
        match self {
            OperatorFile::Homogeneous { n, generators, entries } => {
                let ctx = RingCtx::new(generators.iter().map(String::as_str))?;
                let mut op = HomOp::zero(*n, &ctx)?;
                let mut seen = BTreeSet::new();
                for e in entries {
                    if !in_range(*n, e.i, e.j, e.k) {
                        return Err(Error::IndexOutOfRange(format!(
                            "entry ({}, {}, {}) with n = {n}",
                            e.i, e.j, e.k
                        )));
                    }
                    if !seen.insert((e.i, e.j, e.k)) {
                        return Err(invalid(format!("duplicate entry ({}, {}, {})", e.i, e.j, e.k)));
                    }
                    op.set(e.i, e.j, e.k, parse_coeff(&e.coeff, &ctx)?)?;
                }
                Ok(Operator::Homogeneous(op))
            }
            OperatorFile::Dynamical { s_generator, torus_rank, n, degree, generators, entries } => {
                if s_generator != S {
                    return Err(invalid(format!("s_generator must be `{S}`")));
                }
                if torus_rank != n {
                    return Err(invalid("torus_rank must equal n"));
                }
                let ctx = torus_ctx(*n)?;
                if ctx.names() != generators.as_slice() {
                    return Err(invalid(format!("generators must be {:?}", ctx.names())));
                }
                let mut op = DynOp::zero(*degree, &ctx)?;
                let mut seen = BTreeSet::new();
                for e in entries {
                    if !seen.insert((e.input.clone(), e.output.clone())) {
                        return Err(invalid(format!("duplicate entry {:?} -> {:?}", e.input, e.output)));
                    }
                    op.set(e.input.clone(), e.output.clone(), parse_coeff(&e.coeff, &ctx)?)?;
                }
                Ok(Operator::Dynamical(op))
            }
        }
    }
}

pub fn read_operator(src: &str) -> Result<Operator> {
    OperatorFile::from_json(src)?.decode()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dybe::{standard_solution, BetaArgument};
    use crate::families::{cremmer_gervais, Parameterization};

    #[test]
    fn homogeneous_round_trip() {
        let rho = cremmer_gervais(3, Parameterization::FormalP).unwrap();
        let json = Operator::Homogeneous(rho.clone()).to_json();
        let Operator::Homogeneous(back) = read_operator(&json).unwrap() else { panic!() };
        assert!(back.op_eq(&rho).unwrap());
        assert_eq!(Operator::Homogeneous(back).to_json(), json);
    }

    #[test]
    fn dynamical_round_trip() {
        let r = standard_solution(2, BetaArgument::Transposed).unwrap();
        let json = Operator::Dynamical(r.clone()).to_json();
        assert!(json.contains(r#""kind": "dynamical""#));
        let Operator::Dynamical(back) = read_operator(&json).unwrap() else { panic!() };
        assert!(back.dyn_eq(&r).unwrap());
    }

    #[test]
    fn rejects_bad_keys() {
        let dup = r#"{"kind":"homogeneous","n":2,"generators":[],"entries":[
            {"i":1,"j":2,"k":1,"coeff":"1"},{"i":1,"j":2,"k":1,"coeff":"2"}]}"#;
        assert!(matches!(read_operator(dup), Err(Error::InvalidOperator(_))));
        let out = r#"{"kind":"homogeneous","n":2,"generators":[],"entries":[
            {"i":1,"j":1,"k":2,"coeff":"1"}]}"#;
        assert!(matches!(read_operator(out), Err(Error::IndexOutOfRange(_))));
        let gen = r#"{"kind":"homogeneous","n":2,"generators":["q"],"entries":[
            {"i":1,"j":1,"k":1,"coeff":"p"}]}"#;
        assert_eq!(read_operator(gen).unwrap_err(), Error::UnknownGenerator("p".into()));
        assert!(matches!(read_operator(r#"{"kind":"other"}"#), Err(Error::InvalidOperator(_))));
    }
}
