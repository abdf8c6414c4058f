use crate::arith::RatFn;
use crate::check::{Outcome, Witness};
use crate::error::Result;
use crate::par;

use super::homop::HomOp;
use super::triop::TriOp;

/// `γ₁₂γ₂₃γ₁₂` and `γ₂₃γ₁₂γ₂₃`.
pub fn braid_sides(g: &HomOp) -> Result<(TriOp, TriOp)> {
    let a = TriOp::lift12(g);
    let b = TriOp::lift23(g);
    let left = a.compose(&b.compose(&a)?)?;
    let right = b.compose(&a.compose(&b)?)?;
    Ok((left, right))
}

/// `γ₁₂γ₂₃γ₁₂ - γ₂₃γ₁₂γ₂₃`; zero exactly when the braid relation holds.
pub fn ybe_residual(g: &HomOp) -> Result<TriOp> {
    let (l, r) = braid_sides(g)?;
    l.try_sub(&r)
}

/// Braid relation by composing the lifted operators.
pub fn ybe_outcome(g: &HomOp) -> Result<Outcome> {
    let (l, r) = braid_sides(g)?;
    let w = l.first_difference(&r)?.map(|((input, output), a, b)| {
        Witness::new(format!("input {input:?} -> output {output:?}"), a.reduced(), b.reduced())
    });
    Ok(Outcome::from_witness(w))
}

pub fn ybe_check(g: &HomOp) -> Result<bool> {
    Ok(ybe_outcome(g)?.holds)
}

fn sum(g: &HomOp, terms: impl Iterator<Item = [(i64, i64, i64); 3]>) -> RatFn {
    let mut acc = RatFn::zero(g.ctx());
    for [p, q, r] in terms {
        let (Some(a), Some(b), Some(c)) = (g.get(p.0, p.1, p.2), g.get(q.0, q.1, q.2), g.get(r.0, r.1, r.2))
        else {
            continue;
        };
        acc = &acc + &(&(a * b) * c);
    }
    acc
}

/// Braid relation through the coefficient identity
///
/// ```text
/// Σ_a γ(j,k,a) γ(i,a,c) γ(i+a-c, j+k-a, h)
///   = Σ_s γ(i,j,s) γ(i+j-s, k, h+c-s) γ(s, h+c-s, c)
/// ```
///
/// for all `i, j, k, h, c`. The left side is the `e_c ⊗ e_h` coefficient of
/// `γ₂₃γ₁₂γ₂₃(e_i ⊗ e_j ⊗ e_k)` and the right side that of `γ₁₂γ₂₃γ₁₂`.
pub fn ybe_coefficient_outcome(g: &HomOp) -> Result<Outcome> {
    let n = g.n() as i64;
    let mut cases = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                cases.push((i, j, k));
            }
        }
    }
    let w = par::find_first(&cases, |&(i, j, k)| {
        for c in 1..=n {
            for h in 1..=n {
                let lhs = sum(
                    g,
                    (1..=n).map(|a| [(j, k, a), (i, a, c), (i + a - c, j + k - a, h)]),
                );
                let rhs = sum(
                    g,
                    (1..=n).map(|s| [(i, j, s), (i + j - s, k, h + c - s), (s, h + c - s, c)]),
                );
                if !lhs.ring_eq(&rhs).expect("same context") {
                    return Some(Witness::new(
                        format!("(i,j,k,h,c) = ({i},{j},{k},{h},{c})"),
                        lhs.reduced(),
                        rhs.reduced(),
                    ));
                }
            }
        }
        None
    });
    Ok(Outcome::from_witness(w))
}

pub fn ybe_check_coefficients(g: &HomOp) -> Result<bool> {
    Ok(ybe_coefficient_outcome(g)?.holds)
}
