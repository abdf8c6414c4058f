//! Exact arithmetic: Laurent polynomials and rational functions over the
//! rationals, monomial substitution, and the coefficient expression grammar.

pub mod eval;
pub mod parse;
pub mod poly;
pub mod ratfn;
pub mod ring;
pub mod subst;

pub use eval::PointSampler;
pub use num_rational::BigRational;
pub use parse::parse_coeff;
pub use poly::{LaurentPoly, Monomial};
pub use ratfn::RatFn;
pub use ring::{Ctx, RingCtx};
pub use subst::{mono_subst, Substitution};
