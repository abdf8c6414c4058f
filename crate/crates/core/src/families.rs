//! Named homogeneous operators: η, the flip, the identity, the
//! Cremmer-Gervais family and the two braid-solving families `aP + bη` and
//! `aP + b(I - η)`.

use num_rational::BigRational;

use crate::arith::{Ctx, RatFn, RingCtx};
use crate::error::{Error, Result};
use crate::tensor::HomOp;

/// `η(i, j, k)`: `1` if `i ≤ k < j`, `-1` if `j ≤ k < i`, else `0`.
pub fn eta_value(i: usize, j: usize, k: usize) -> i64 {
    if i <= k && k < j {
        1
    } else if j <= k && k < i {
        -1
    } else {
        0
    }
}

pub fn eta_op(n: usize, ctx: &Ctx) -> Result<HomOp> {
    let mut op = HomOp::zero(n, ctx)?;
    for i in 1..=n {
        for j in 1..=n {
            for k in i.min(j)..i.max(j) {
                op.set(i, j, k, RatFn::integer(ctx, eta_value(i, j, k)))?;
            }
        }
    }
    Ok(op)
}

/// `P(e_i ⊗ e_j) = e_j ⊗ e_i`.
pub fn flip_op(n: usize, ctx: &Ctx) -> Result<HomOp> {
    let mut op = HomOp::zero(n, ctx)?;
    for i in 1..=n {
        for j in 1..=n {
            op.set(i, j, j, RatFn::one(ctx))?;
        }
    }
    Ok(op)
}

pub fn id_op(n: usize, ctx: &Ctx) -> Result<HomOp> {
    let mut op = HomOp::zero(n, ctx)?;
    for i in 1..=n {
        for j in 1..=n {
            op.set(i, j, i, RatFn::one(ctx))?;
        }
    }
    Ok(op)
}

/// How the Cremmer-Gervais parameters are represented.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parameterization {
    /// Independent formal `q` and `p`, context `[q, p]`.
    FormalP,
    /// `p = q^{2/n}`, rebased on `s = q^{1/n}`: context `[s]`, `q = s^n`,
    /// `p = s^2`.
    Standard,
}

/// `ρ_p(e_i ⊗ e_j) = q p^{i-j} e_j ⊗ e_i + Σ_k q̂ p^{i-k} η(i,j,k) e_k ⊗ e_{i+j-k}`
/// with `q̂ = q - q⁻¹`, for arbitrary `q` and `p` in a common context.
pub fn cremmer_gervais_with(n: usize, q: &RatFn, p: &RatFn) -> Result<HomOp> {
    let ctx = q.ctx().clone();
    crate::arith::ring::check_ctx(&ctx, p.ctx())?;
    let qhat = q.try_sub(&q.inv()?)?;
    let mut op = HomOp::zero(n, &ctx)?;
    for i in 1..=n {
        for j in 1..=n {
            let d = i as i32 - j as i32;
            op.accumulate(i, j, j, &q.try_mul(&p.pow(d)?)?)?;
            for k in i.min(j)..i.max(j) {
                let c = qhat.try_mul(&p.pow(i as i32 - k as i32)?)?;
                op.accumulate(i, j, k, &c.scale(&BigRational::from_integer(eta_value(i, j, k).into())))?;
            }
        }
    }
    Ok(op)
}

pub fn cremmer_gervais(n: usize, param: Parameterization) -> Result<HomOp> {
    if n == 0 {
        return Err(Error::InvalidDimension(0));
    }
    match param {
        Parameterization::FormalP => {
            let ctx = RingCtx::new(["q", "p"])?;
            cremmer_gervais_with(n, &RatFn::var(&ctx, "q")?, &RatFn::var(&ctx, "p")?)
        }
        Parameterization::Standard => {
            let ctx = RingCtx::new(["s"])?;
            let q = RatFn::monomial(&ctx, 1, &[("s", n as i32)])?;
            let p = RatFn::monomial(&ctx, 1, &[("s", 2)])?;
            cremmer_gervais_with(n, &q, &p)
        }
    }
}

/// `ρ₁ = qP + q̂η` over the context `[q]`.
pub fn rho1(n: usize) -> Result<HomOp> {
    let ctx = RingCtx::new(["q"])?;
    let q = RatFn::var(&ctx, "q")?;
    let qhat = q.try_sub(&q.inv()?)?;
    family1(n, &q, &qhat)
}

/// `aP + bη`.
pub fn family1(n: usize, a: &RatFn, b: &RatFn) -> Result<HomOp> {
    crate::arith::ring::check_ctx(a.ctx(), b.ctx())?;
    let ctx = a.ctx();
    HomOp::lincomb(&[(a.clone(), &flip_op(n, ctx)?), (b.clone(), &eta_op(n, ctx)?)])
}

/// `aP + b(I - η)`.
pub fn family2(n: usize, a: &RatFn, b: &RatFn) -> Result<HomOp> {
    crate::arith::ring::check_ctx(a.ctx(), b.ctx())?;
    let ctx = a.ctx();
    HomOp::lincomb(&[
        (a.clone(), &flip_op(n, ctx)?),
        (b.clone(), &id_op(n, ctx)?),
        (-b, &eta_op(n, ctx)?),
    ])
}

/// `aI + bP + cη`.
pub fn abc_op(n: usize, a: &RatFn, b: &RatFn, c: &RatFn) -> Result<HomOp> {
    let ctx = a.ctx();
    HomOp::lincomb(&[
        (a.clone(), &id_op(n, ctx)?),
        (b.clone(), &flip_op(n, ctx)?),
        (c.clone(), &eta_op(n, ctx)?),
    ])
}
