use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::{LaurentPoly, RatFn};
use crate::check::{Outcome, Witness};
use crate::error::{Error, Result};
use crate::families::{cremmer_gervais, cremmer_gervais_with, Parameterization};
use crate::linalg::det_bareiss;
use crate::tensor::HomOp;

use super::dynop::{DynOp, Multi};
use super::solution::{from_homop, lift23_dyn, s_ctx, standard_solution, BetaArgument};
use super::weight::{k_name, torus_ctx, S};

/// The change of basis `A(e_i) = Σ_a e_a ⊗ K_a^{-2i}`.
pub fn cob_matrix(n: usize) -> Result<DynOp> {
    let ctx = torus_ctx(n)?;
    let mut a = DynOp::zero(1, &ctx)?;
    for i in 1..=n {
        for m in 1..=n {
            a.set(vec![i], vec![m], RatFn::monomial(&ctx, 1, &[(&k_name(m), -2 * i as i32)])?)?;
        }
    }
    Ok(a)
}

fn require_degree(a: &DynOp, d: usize) -> Result<()> {
    if a.degree() != d {
        return Err(Error::DegreeMismatch { expected: d, got: a.degree() });
    }
    Ok(())
}

/// `A₁ = A ⊗̃ 1`.
pub fn cob_lift1(a: &DynOp) -> Result<DynOp> {
    require_degree(a, 1)?;
    DynOp::tilde(a, &DynOp::identity(1, a.ctx())?)
}

/// `A₂ = 1 ⊗̃ A`.
pub fn cob_lift2(a: &DynOp) -> Result<DynOp> {
    require_degree(a, 1)?;
    DynOp::tilde(&DynOp::identity(1, a.ctx())?, a)
}

/// Determinant of a degree-one map whose entries are Laurent polynomials,
/// by fraction-free elimination. Row index is the output, column the input.
pub fn det(a: &DynOp) -> Result<LaurentPoly> {
    require_degree(a, 1)?;
    let n = a.n();
    let mut m = Vec::with_capacity(n);
    for o in 1..=n {
        let mut row = Vec::with_capacity(n);
        for i in 1..=n {
            let c = a.coeff(&[o], &[i]);
            row.push(c.as_poly().ok_or_else(|| {
                Error::InvalidOperator("determinant needs polynomial entries".into())
            })?);
        }
        m.push(row);
    }
    det_bareiss(m)
}

/// The Cremmer-Gervais operator with `q = s^n`, `p = s²`.
pub fn standard_rho(n: usize) -> Result<HomOp> {
    cremmer_gervais(n, Parameterization::Standard)
}

/// The negative control: `q ↦ q⁻¹` with `p = s²` unchanged.
pub fn perturbed_rho(n: usize) -> Result<HomOp> {
    let c = s_ctx();
    let q = RatFn::monomial(&c, 1, &[(S, -(n as i32))])?;
    let p = RatFn::monomial(&c, 1, &[(S, 2)])?;
    cremmer_gervais_with(n, &q, &p)
}

/// `R A₁ A₂ = A₁ A₂ ρ` entrywise, with `R` the standard dynamical solution
/// and `ρ` a constant operator over `[s]`.
pub fn cob_intertwine_outcome_with(n: usize, rho: &HomOp) -> Result<Outcome> {
    let r = standard_solution(n, BetaArgument::Transposed)?;
    intertwine(&r, rho)
}

/// Intertwining check for an arbitrary degree-two map `r`.
pub fn intertwine(r: &DynOp, rho: &HomOp) -> Result<Outcome> {
    let n = r.n();
    let a = cob_matrix(n)?;
    let a12 = cob_lift1(&a)?.compose(&cob_lift2(&a)?)?;
    let lhs = r.compose(&a12)?;
    let rhs = a12.compose(&from_homop(rho)?)?;
    Ok(Outcome::from_witness(lhs.first_difference(&rhs)?.map(|((i, o), l, r)| {
        Witness::new(format!("(m,s) = {o:?}, (i,j) = {i:?}"), l.reduced(), r.reduced())
    })))
}

pub fn cob_intertwine_outcome(n: usize) -> Result<Outcome> {
    cob_intertwine_outcome_with(n, &standard_rho(n)?)
}

pub fn cob_intertwine_check(n: usize) -> Result<bool> {
    Ok(cob_intertwine_outcome(n)?.holds)
}

/// A seeded random degree-one map with sparse monomial entries
/// `c s^e K_a^{m}`.
pub fn random_map(n: usize, seed: u64) -> Result<DynOp> {
    let ctx = torus_ctx(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut f = DynOp::zero(1, &ctx)?;
    for i in 1..=n {
        for o in 1..=n {
            if rng.gen_bool(0.3) {
                continue;
            }
            let c = rng.gen_range(-3i64..=3);
            let e = rng.gen_range(-2i32..=2);
            let a = rng.gen_range(1..=n);
            let m = rng.gen_range(-3i32..=3);
            let v = RatFn::monomial(&ctx, c, &[(S, e), (&k_name(a), m)])?
                .try_add(&RatFn::integer(&ctx, rng.gen_range(0..=2)))?;
            f.set(vec![i], vec![o], v)?;
        }
    }
    Ok(f)
}

/// Verdicts of the composition rules for `⊗̃`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CategoryReport {
    /// `(f ⊗̃ 1)(f' ⊗̃ 1) = ff' ⊗̃ 1`.
    pub left_functorial: bool,
    /// `(1 ⊗̃ g)(1 ⊗̃ g') = 1 ⊗̃ gg'`.
    pub right_functorial: bool,
    /// `(f ⊗̃ 1)(1 ⊗̃ g) = f ⊗̃ g`.
    pub interchange: bool,
    /// `(1 ⊗̃ g)(f ⊗̃ 1) = f ⊗̃ g`, which fails in general.
    pub reversed_interchange: bool,
}

pub fn category_identity_checks(f: &DynOp, f2: &DynOp, g: &DynOp, g2: &DynOp) -> Result<CategoryReport> {
    let one = DynOp::identity(1, f.ctx())?;
    let t = DynOp::tilde;
    let left = t(f, &one)?.compose(&t(f2, &one)?)?;
    let right = t(&one, g)?.compose(&t(&one, g2)?)?;
    let fg = t(f, g)?;
    Ok(CategoryReport {
        left_functorial: left.dyn_eq(&t(&f.compose(f2)?, &one)?)?,
        right_functorial: right.dyn_eq(&t(&one, &g.compose(g2)?)?)?,
        interchange: t(f, &one)?.compose(&t(&one, g)?)?.dyn_eq(&fg)?,
        reversed_interchange: t(&one, g)?.compose(&t(f, &one)?)?.dyn_eq(&fg)?,
    })
}

/// Whether `A₁ = A ⊗̃ 1 ⊗̃ 1` commutes with `R₂₃` on `V^{⊗3}`. This holds
/// when every nonzero entry of `R` preserves the total weight of its slots.
pub fn a1_commutes_with_r23(a: &DynOp, r: &DynOp) -> Result<bool> {
    require_degree(a, 1)?;
    let a1 = DynOp::tilde(a, &DynOp::identity(2, a.ctx())?)?;
    let r23 = lift23_dyn(r)?;
    a1.compose(&r23)?.dyn_eq(&r23.compose(&a1)?)
}

/// A torus-free map of flip-plus-diagonal shape: `s` times the flip off the
/// diagonal and `s^i` on `e_i ⊗ e_i`.
pub fn flip_diagonal(n: usize) -> Result<DynOp> {
    let ctx = torus_ctx(n)?;
    let mut r = DynOp::zero(2, &ctx)?;
    for i in 1..=n {
        for j in 1..=n {
            let c = if i == j {
                RatFn::monomial(&ctx, 1, &[(S, i as i32)])?
            } else {
                RatFn::monomial(&ctx, 1, &[(S, 1)])?
            };
            let out: Multi = vec![j, i];
            r.set(vec![i, j], out, c)?;
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_coeff;

    #[test]
    fn cob_matrix_at_two() {
        let a = cob_matrix(2).unwrap();
        let c = a.ctx().clone();
        let f = |s: &str| crate::dybe::canonicalize(&parse_coeff(s, &c).unwrap()).unwrap();
        assert_eq!(a.coeff(&[1], &[1]), f("K1^-2"));
        assert_eq!(a.coeff(&[1], &[2]), f("K1^-4"));
        assert_eq!(a.coeff(&[2], &[1]), f("K2^-2"));
        assert_eq!(a.coeff(&[2], &[2]), f("K2^-4"));
        let d = RatFn::from_poly(det(&a).unwrap());
        assert_eq!(d, f("K1^-2*K2^-4 - K1^-4*K2^-2"));
        assert!(!d.is_zero());
    }

    #[test]
    fn lift2_is_block_diagonal() {
        let a = cob_matrix(2).unwrap();
        let l = cob_lift2(&a).unwrap();
        for (i, o, c) in l.entries() {
            assert_eq!(i[0], o[0]);
            assert_eq!(*c, a.coeff(&o[1..], &i[1..]));
        }
    }

    #[test]
    fn intertwining_small() {
        assert!(cob_intertwine_check(2).unwrap());
        let bad = cob_intertwine_outcome_with(2, &perturbed_rho(2).unwrap()).unwrap();
        assert!(!bad.holds);
        assert!(bad.witness.is_some());
        let untransposed = standard_solution(2, BetaArgument::Untransposed).unwrap();
        assert!(!intertwine(&untransposed, &standard_rho(2).unwrap()).unwrap().holds);
    }

    #[test]
    fn composition_rules() {
        let a = cob_matrix(2).unwrap();
        let r = category_identity_checks(&a, &a, &a, &a).unwrap();
        assert!(r.left_functorial && r.right_functorial && r.interchange);
        assert!(!r.reversed_interchange);
        let id = DynOp::identity(1, a.ctx()).unwrap();
        let r = category_identity_checks(&id, &id, &id, &id).unwrap();
        assert!(r.left_functorial && r.right_functorial && r.interchange && r.reversed_interchange);
        let (f, f2, g, g2) = (random_map(3, 1).unwrap(), random_map(3, 2).unwrap(), random_map(3, 3).unwrap(), random_map(3, 4).unwrap());
        let r = category_identity_checks(&f, &f2, &g, &g2).unwrap();
        assert!(r.left_functorial && r.right_functorial && r.interchange);
    }

    #[test]
    fn a1_and_r23() {
        for n in 2..=3 {
            let a = cob_matrix(n).unwrap();
            assert!(a1_commutes_with_r23(&a, &flip_diagonal(n).unwrap()).unwrap());
            assert!(a1_commutes_with_r23(&a, &standard_solution(n, BetaArgument::Transposed).unwrap()).unwrap());
        }
        let rho2 = from_homop(&standard_rho(2).unwrap()).unwrap();
        assert!(a1_commutes_with_r23(&cob_matrix(2).unwrap(), &rho2).unwrap());
        // At n = 3, ρ sends e1⊗e3 to e2⊗e2, which changes the torus weight.
        let rho3 = from_homop(&standard_rho(3).unwrap()).unwrap();
        assert!(!a1_commutes_with_r23(&cob_matrix(3).unwrap(), &rho3).unwrap());
    }
}
