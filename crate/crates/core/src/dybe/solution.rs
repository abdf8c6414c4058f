use crate::arith::{mono_subst, RatFn, RingCtx, Substitution};
use crate::check::{Outcome, Witness};
use crate::error::{Error, Result};
use crate::tensor::HomOp;

use super::dynop::DynOp;
use super::weight::{k_name, torus_ctx, S};

/// Which torus monomial feeds `β` in the standard solution.
///
/// Writing `X_{ji} = (K_{α_{ji}} q^{-δ_ij})² = K_j² K_i⁻² q^{-2δ_ij}`, the
/// coefficient of `e_i ⊗ e_j` in `R(e_i ⊗ e_j)` is `α(X_{ji})` in both
/// variants, while the coefficient of `e_j ⊗ e_i` is `β(X_{ij})` for
/// [`BetaArgument::Transposed`] and `β(X_{ji})` for
/// [`BetaArgument::Untransposed`]. Both satisfy the dynamical braid relation;
/// only the transposed form is carried to the Cremmer-Gervais matrix by the
/// change of basis.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum BetaArgument {
    #[default]
    Transposed,
    Untransposed,
}

/// `α(x) = (q - q⁻¹)/(1 - x)` and `β(x) = (q⁻¹ - qx)/(1 - x)` over
/// `[s, K1, …, Kn, x]` with `q = s^n`.
fn alpha_beta(n: usize) -> Result<(RatFn, RatFn)> {
    let torus = torus_ctx(n)?;
    let ctx = torus.extended(&["x"]);
    let q = RatFn::monomial(&ctx, 1, &[(S, n as i32)])?;
    let qi = q.inv()?;
    let x = RatFn::var(&ctx, "x")?;
    let one = RatFn::one(&ctx);
    let den = one.try_sub(&x)?;
    let alpha = q.try_sub(&qi)?.try_div(&den)?;
    let beta = qi.try_sub(&q.try_mul(&x)?)?.try_div(&den)?;
    Ok((alpha, beta))
}

/// `X_{ab} = K_a² K_b⁻² s^{-2n δ_ab}` in the torus context.
fn x_arg(n: usize, ctx: &crate::arith::Ctx, a: usize, b: usize) -> Result<RatFn> {
    if a == b {
        RatFn::monomial(ctx, 1, &[(S, -2 * n as i32)])
    } else {
        RatFn::monomial(ctx, 1, &[(&k_name(a), 2), (&k_name(b), -2)])
    }
}

/// The standard solution of the dynamical braid relation on `V ⊗ V`.
pub fn standard_solution(n: usize, arg: BetaArgument) -> Result<DynOp> {
    let ctx = torus_ctx(n)?;
    let (alpha, beta) = alpha_beta(n)?;
    let mut r = DynOp::zero(2, &ctx)?;
    for i in 1..=n {
        for j in 1..=n {
            let xji = x_arg(n, &ctx, j, i)?;
            let a = mono_subst(&alpha, &ctx, &[("x", &xji)])?;
            let bx = match arg {
                BetaArgument::Transposed => x_arg(n, &ctx, i, j)?,
                BetaArgument::Untransposed => xji,
            };
            let b = mono_subst(&beta, &ctx, &[("x", &bx)])?;
            if i == j {
                r.set(vec![i, i], vec![i, i], a.try_add(&b)?)?;
            } else {
                r.set(vec![i, j], vec![i, j], a)?;
                r.set(vec![i, j], vec![j, i], b)?;
            }
        }
    }
    Ok(r)
}

/// A constant homogeneous operator over `[s]` (or the empty context) as a
/// degree-two map with torus-free entries.
pub fn from_homop(g: &HomOp) -> Result<DynOp> {
    let n = g.n();
    let ctx = torus_ctx(n)?;
    for name in g.ctx().names() {
        if name != S {
            return Err(Error::UnknownGenerator(name.clone()));
        }
    }
    let emb = Substitution::embedding(g.ctx(), &ctx)?;
    let mut r = DynOp::zero(2, &ctx)?;
    for (&(i, j, k), c) in g.entries() {
        r.set(vec![i, j], vec![k, i + j - k], emb.apply(c)?)?;
    }
    Ok(r)
}

fn require_degree(r: &DynOp, d: usize) -> Result<()> {
    if r.degree() != d {
        return Err(Error::DegreeMismatch { expected: d, got: r.degree() });
    }
    Ok(())
}

/// `R₁₂ = R ⊗̃ 1`: coefficients shifted by the weight of the third slot.
pub fn lift12_dyn(r: &DynOp) -> Result<DynOp> {
    require_degree(r, 2)?;
    DynOp::tilde(r, &DynOp::identity(1, r.ctx())?)
}

/// `R₂₃ = 1 ⊗̃ R`: coefficients unchanged.
pub fn lift23_dyn(r: &DynOp) -> Result<DynOp> {
    require_degree(r, 2)?;
    DynOp::tilde(&DynOp::identity(1, r.ctx())?, r)
}

/// `R₁₂R₂₃R₁₂` and `R₂₃R₁₂R₂₃`.
pub fn dyn_braid_sides(r: &DynOp) -> Result<(DynOp, DynOp)> {
    let a = lift12_dyn(r)?;
    let b = lift23_dyn(r)?;
    Ok((a.compose(&b.compose(&a)?)?, b.compose(&a.compose(&b)?)?))
}

pub fn dybe_outcome(r: &DynOp) -> Result<Outcome> {
    let (l, rr) = dyn_braid_sides(r)?;
    Ok(Outcome::from_witness(l.first_difference(&rr)?.map(|((i, o), a, b)| {
        Witness::new(format!("input {i:?} -> output {o:?}"), a.reduced(), b.reduced())
    })))
}

pub fn dybe_check(r: &DynOp) -> Result<bool> {
    Ok(dybe_outcome(r)?.holds)
}

/// The scalar context `[s]` used for torus-free operators.
pub fn s_ctx() -> crate::arith::Ctx {
    RingCtx::new([S]).expect("single generator")
}
