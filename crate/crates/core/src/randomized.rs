//! Probabilistic variants of the identity checks: every generator is set to
//! a seeded random rational with numerator and denominator in
//! `1..=SAMPLE_BOUND`, then the identity is checked exactly over the
//! rationals. A passing verdict is correct with high probability; a failing
//! verdict is always a genuine counterexample.

use num_rational::BigRational;

use crate::arith::{Ctx, PointSampler, RatFn};
use crate::check::{Outcome, Witness};
use crate::dybe::{cob_lift1, cob_lift2, cob_matrix, from_homop, lift12_dyn, lift23_dyn, DynOp};
use crate::error::{Error, Result};
use crate::tensor::{hecke_outcome, ybe_outcome, HomOp};

/// Number of points tried before giving up on avoiding poles.
pub const MAX_ATTEMPTS: usize = 64;

/// Runs `f` at seeded random points of `ctx`, resampling while it reports
/// `DivisionByZero`.
pub fn at_random_point<T>(
    ctx: &Ctx,
    seed: u64,
    f: impl Fn(&[BigRational]) -> Result<T>,
) -> Result<T> {
    let mut sampler = PointSampler::new(seed);
    for _ in 0..MAX_ATTEMPTS {
        let p = sampler.point(ctx);
        match f(&p) {
            Err(Error::DivisionByZero) => continue,
            other => return other,
        }
    }
    Err(Error::DivisionByZero)
}

pub fn ybe_outcome_random(g: &HomOp, seed: u64) -> Result<Outcome> {
    at_random_point(g.ctx(), seed, |p| ybe_outcome(&g.specialize(p)?))
}

pub fn hecke_outcome_random(g: &HomOp, a: &RatFn, b: &RatFn, seed: u64) -> Result<Outcome> {
    at_random_point(g.ctx(), seed, |p| {
        let empty = crate::arith::RingCtx::empty();
        let a = RatFn::constant(&empty, a.eval(p)?);
        let b = RatFn::constant(&empty, b.eval(p)?);
        hecke_outcome(&g.specialize(p)?, &a, &b)
    })
}

pub fn hecke_check_random(g: &HomOp, a: &RatFn, b: &RatFn, seed: u64) -> Result<bool> {
    Ok(hecke_outcome_random(g, a, b, seed)?.holds)
}

fn witness_of(l: &DynOp, r: &DynOp) -> Result<Outcome> {
    Ok(Outcome::from_witness(l.first_difference(r)?.map(|((i, o), a, b)| {
        Witness::new(format!("input {i:?} -> output {o:?}"), a.reduced(), b.reduced())
    })))
}

/// The shifted lifts are built symbolically and specialized before the
/// products are formed.
pub fn dybe_outcome_random(r: &DynOp, seed: u64) -> Result<Outcome> {
    let a = lift12_dyn(r)?;
    let b = lift23_dyn(r)?;
    at_random_point(r.ctx(), seed, |p| {
        let (a, b) = (a.specialize(p)?, b.specialize(p)?);
        witness_of(&a.compose(&b.compose(&a)?)?, &b.compose(&a.compose(&b)?)?)
    })
}

pub fn intertwine_random(r: &DynOp, rho: &HomOp, seed: u64) -> Result<Outcome> {
    let a = cob_matrix(r.n())?;
    let (a1, a2) = (cob_lift1(&a)?, cob_lift2(&a)?);
    let rho = from_homop(rho)?;
    at_random_point(r.ctx(), seed, |p| {
        let (r, a1, a2, rho) = (r.specialize(p)?, a1.specialize(p)?, a2.specialize(p)?, rho.specialize(p)?);
        let a12 = a1.compose(&a2)?;
        witness_of(&r.compose(&a12)?, &a12.compose(&rho)?)
    })
}

/// Compares two rational functions by value at a seeded random point.
pub fn identity_random(name: &str, lhs: &RatFn, rhs: &RatFn, seed: u64) -> Result<Outcome> {
    at_random_point(lhs.ctx(), seed, |p| {
        let (a, b) = (lhs.eval(p)?, rhs.eval(p)?);
        Ok(if a == b {
            Outcome::pass()
        } else {
            Outcome::fail(Witness::new(name, a, b))
        })
    })
}
