use std::fmt;
use std::path::PathBuf;

use cgybe::arith::{parse_coeff, Ctx, RatFn, RingCtx};
use cgybe::dybe::{standard_solution, BetaArgument};
use cgybe::families::{
    cremmer_gervais, eta_op, family1, family2, flip_op, id_op, rho1, Parameterization,
};
use cgybe::genfun::{abc_pair, GenFnPair};
use cgybe::io::{read_operator, Operator};
use cgybe::tensor::HomOp;
use clap::{Args, ValueEnum};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Eta,
    Flip,
    Id,
    Cg,
    Rho1,
    Family1,
    Family2,
    DybeStandard,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Params {
    #[default]
    Formal,
    Standard,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum BetaArg {
    #[default]
    Transposed,
    Untransposed,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.to_possible_value().expect("no skipped variants").get_name())
    }
}

/// A named operator: family, size and parameters.
#[derive(Args, Clone, Debug, Default)]
pub struct FamilySpec {
    /// Named operator family.
    #[arg(long, value_enum)]
    pub family: Option<Family>,
    /// Dimension of V.
    #[arg(long)]
    pub n: Option<usize>,
    /// Cremmer-Gervais parameters: independent q, p or p = q^(2/n).
    #[arg(long, value_enum, default_value_t)]
    pub params: Params,
    /// Coefficient a of family1/family2, in the generators a, b.
    #[arg(long)]
    pub a: Option<String>,
    /// Coefficient b of family1/family2, in the generators a, b.
    #[arg(long)]
    pub b: Option<String>,
    /// Torus monomial fed to beta in the dynamical standard solution.
    #[arg(long, value_enum, default_value_t)]
    pub beta_arg: BetaArg,
}

/// An operator together with a description for reports.
pub struct Resolved {
    pub op: Operator,
    pub label: String,
    pub hecke: Option<(RatFn, RatFn)>,
}

fn ab_ctx() -> Ctx {
    RingCtx::new(["a", "b"]).expect("distinct names")
}

impl FamilySpec {
    pub fn require_n(&self) -> Result<usize, CliError> {
        self.n.ok_or_else(|| CliError::Usage("--n is required".into()))
    }

    fn ab(&self) -> Result<(RatFn, RatFn), CliError> {
        let c = ab_ctx();
        let a = parse_coeff(self.a.as_deref().unwrap_or("a"), &c)?;
        let b = parse_coeff(self.b.as_deref().unwrap_or("b"), &c)?;
        Ok((a, b))
    }

    pub fn label(&self, family: Family, n: usize) -> String {
        let mut s = format!("family {family}, n = {n}");
        match family {
            Family::Cg => s += &format!(", params {}", if self.params == Params::Formal { "formal" } else { "standard" }),
            Family::Family1 | Family::Family2 => {
                s += &format!(
                    ", a = {}, b = {}",
                    self.a.as_deref().unwrap_or("a"),
                    self.b.as_deref().unwrap_or("b")
                )
            }
            Family::DybeStandard if self.beta_arg == BetaArg::Untransposed => s += ", beta argument untransposed",
            _ => {}
        }
        s
    }

    pub fn resolve(&self) -> Result<Resolved, CliError> {
        let family = self
            .family
            .ok_or_else(|| CliError::Usage("a target file or --family is required".into()))?;
        let n = self.require_n()?;
        let empty = RingCtx::empty();
        let int = |v: i64| RatFn::integer(&empty, v);
        let qhat = |q: &RatFn| -> Result<RatFn, CliError> { Ok(q.try_sub(&q.inv()?)?) };
        let (op, hecke) = match family {
            Family::Eta => (eta_op(n, &empty)?, Some((int(0), int(1)))),
            Family::Flip => (flip_op(n, &empty)?, Some((int(1), int(0)))),
            Family::Id => (id_op(n, &empty)?, Some((int(1), int(1)))),
            Family::Cg => {
                let param = match self.params {
                    Params::Formal => Parameterization::FormalP,
                    Params::Standard => Parameterization::Standard,
                };
                let op = cremmer_gervais(n, param)?;
                let q = match self.params {
                    Params::Formal => RatFn::var(op.ctx(), "q")?,
                    Params::Standard => RatFn::monomial(op.ctx(), 1, &[("s", n as i32)])?,
                };
                let h = qhat(&q)?;
                (op, Some((q, h)))
            }
            Family::Rho1 => {
                let op = rho1(n)?;
                let q = RatFn::var(op.ctx(), "q")?;
                let h = qhat(&q)?;
                (op, Some((q, h)))
            }
            Family::Family1 => {
                let (a, b) = self.ab()?;
                (family1(n, &a, &b)?, Some((a, b)))
            }
            Family::Family2 => {
                // P(aP + bη)P = (a - b)P + b(I - η), so aP + b(I - η) obeys
                // the quadratic relation of (a + b)P + bη.
                let (a, b) = self.ab()?;
                (family2(n, &a, &b)?, Some((a.try_add(&b)?, b)))
            }
            Family::DybeStandard => {
                let arg = match self.beta_arg {
                    BetaArg::Transposed => BetaArgument::Transposed,
                    BetaArg::Untransposed => BetaArgument::Untransposed,
                };
                let r = standard_solution(n, arg)?;
                return Ok(Resolved { op: Operator::Dynamical(r), label: self.label(family, n), hecke: None });
            }
        };
        Ok(Resolved { op: Operator::Homogeneous(op), label: self.label(family, n), hecke })
    }

    /// The generating-function pair of a named family.
    pub fn pair(&self) -> Result<(GenFnPair, String), CliError> {
        let family = self
            .family
            .ok_or_else(|| CliError::Usage("--family or --alpha/--beta is required".into()))?;
        let label = match self.n {
            Some(n) => self.label(family, n),
            None => format!("family {family}"),
        };
        let empty = RingCtx::empty();
        let int = |v: i64| RatFn::integer(&empty, v);
        let pair = match family {
            Family::Eta => abc_pair(&int(0), &int(0), &int(1))?,
            Family::Flip => abc_pair(&int(0), &int(1), &int(0))?,
            Family::Id => abc_pair(&int(1), &int(0), &int(0))?,
            Family::Rho1 => {
                let c = RingCtx::new(["q"])?;
                let q = RatFn::var(&c, "q")?;
                abc_pair(&RatFn::zero(&c), &q, &q.try_sub(&q.inv()?)?)?
            }
            Family::Family1 => {
                let (a, b) = self.ab()?;
                abc_pair(&RatFn::zero(a.ctx()), &a, &b)?
            }
            Family::Family2 => {
                let (a, b) = self.ab()?;
                abc_pair(&b, &a, &-&b)?
            }
            Family::Cg | Family::DybeStandard => {
                return Err(CliError::Usage(format!(
                    "family {family} has no generating-function pair; use rho1 or --alpha/--beta"
                )))
            }
        };
        Ok((pair, label))
    }
}

/// The generators available to `--alpha`, `--beta` and `classify`.
pub fn pair_ctx() -> Ctx {
    RingCtx::new(["q", "p", "a", "b", "c", "x", "y"]).expect("distinct names")
}

pub fn parse_pair(alpha: &str, beta: &str) -> Result<GenFnPair, CliError> {
    let c = pair_ctx();
    Ok(GenFnPair::new(parse_coeff(alpha, &c)?, parse_coeff(beta, &c)?)?)
}

pub fn load_file(path: &PathBuf) -> Result<Operator, CliError> {
    let src = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    Ok(read_operator(&src)?)
}

pub fn homogeneous(op: Operator, check: &str) -> Result<HomOp, CliError> {
    match op {
        Operator::Homogeneous(g) => Ok(g),
        Operator::Dynamical(_) => Err(CliError::Usage(format!(
            "check `{check}` needs a homogeneous operator"
        ))),
    }
}
