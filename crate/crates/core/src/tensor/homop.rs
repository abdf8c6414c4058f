use std::collections::BTreeMap;

use num_rational::BigRational;

use crate::arith::{Ctx, RatFn, RingCtx, Substitution};
use crate::arith::ring::check_ctx;
use crate::check::{Outcome, Witness};
use crate::error::{Error, Result};

/// `(i, j, k)`: the coefficient of `e_k ⊗ e_{i+j-k}` in `γ(e_i ⊗ e_j)`.
pub type Key = (usize, usize, usize);

/// A homogeneous operator on `V ⊗ V` with `dim V = n`.
///
/// Only the coefficients `γ(i, j, k)` are stored; the second output index is
/// always `i + j - k`, so homogeneity holds by construction. Absent keys are
/// zero and every stored key satisfies `1 <= i, j, k, i+j-k <= n`.
#[derive(Clone, Debug)]
pub struct HomOp {
    n: usize,
    ctx: Ctx,
    table: BTreeMap<Key, RatFn>,
}

pub fn in_range(n: usize, i: usize, j: usize, k: usize) -> bool {
    let inside = |v: usize| (1..=n).contains(&v);
    inside(i) && inside(j) && inside(k) && i + j > k && inside(i + j - k)
}

impl HomOp {
    pub fn zero(n: usize, ctx: &Ctx) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDimension(n));
        }
        Ok(HomOp { n, ctx: ctx.clone(), table: BTreeMap::new() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Key, &RatFn)> {
        self.table.iter()
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    fn check_key(&self, i: usize, j: usize, k: usize) -> Result<()> {
        if in_range(self.n, i, j, k) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange(format!("({i}, {j}, {k}) with n = {}", self.n)))
        }
    }

    /// Sets `γ(i, j, k)`; a zero coefficient removes the entry.
    pub fn set(&mut self, i: usize, j: usize, k: usize, c: RatFn) -> Result<()> {
        self.check_key(i, j, k)?;
        check_ctx(&self.ctx, c.ctx())?;
        if c.is_zero() {
            self.table.remove(&(i, j, k));
        } else {
            self.table.insert((i, j, k), c);
        }
        Ok(())
    }

    /// Adds `c` to `γ(i, j, k)`.
    pub fn accumulate(&mut self, i: usize, j: usize, k: usize, c: &RatFn) -> Result<()> {
        self.check_key(i, j, k)?;
        let sum = match self.table.get(&(i, j, k)) {
            Some(old) => old.try_add(c)?,
            None => {
                check_ctx(&self.ctx, c.ctx())?;
                c.clone()
            }
        };
        self.set(i, j, k, sum)
    }

    /// `γ(i, j, k)`, or `None` when zero or out of range. Signed indices let
    /// callers pass shifted sums without pre-checking.
    pub fn get(&self, i: i64, j: i64, k: i64) -> Option<&RatFn> {
        if i < 1 || j < 1 || k < 1 {
            return None;
        }
        self.table.get(&(i as usize, j as usize, k as usize))
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> RatFn {
        self.table
            .get(&(i, j, k))
            .cloned()
            .unwrap_or_else(|| RatFn::zero(&self.ctx))
    }

    /// Nonzero coefficients of `γ(e_i ⊗ e_j) = Σ_k γ(i,j,k) e_k ⊗ e_{i+j-k}`,
    /// ascending in `k`.
    pub fn apply(&self, i: usize, j: usize) -> Result<Vec<(usize, RatFn)>> {
        if !(1..=self.n).contains(&i) || !(1..=self.n).contains(&j) {
            return Err(Error::IndexOutOfRange(format!("({i}, {j}) with n = {}", self.n)));
        }
        Ok(self
            .table
            .range((i, j, 0)..=(i, j, usize::MAX))
            .map(|(&(_, _, k), c)| (k, c.clone()))
            .collect())
    }

    fn check_compatible(&self, other: &HomOp) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        check_ctx(&self.ctx, &other.ctx)
    }

    /// `Σ c_t · γ_t` over a non-empty list sharing `n` and context.
    pub fn lincomb(terms: &[(RatFn, &HomOp)]) -> Result<HomOp> {
        let (_, first) = terms
            .first()
            .ok_or_else(|| Error::InvalidOperator("empty linear combination".into()))?;
        let mut out = HomOp::zero(first.n, &first.ctx)?;
        for (c, op) in terms {
            out.check_compatible(op)?;
            check_ctx(&out.ctx, c.ctx())?;
            if c.is_zero() {
                continue;
            }
            for (&(i, j, k), v) in &op.table {
                out.accumulate(i, j, k, &c.try_mul(v)?)?;
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &HomOp) -> Result<HomOp> {
        let one = RatFn::one(&self.ctx);
        HomOp::lincomb(&[(one.clone(), self), (one, other)])
    }

    pub fn try_sub(&self, other: &HomOp) -> Result<HomOp> {
        let one = RatFn::one(&self.ctx);
        HomOp::lincomb(&[(one.clone(), self), (-one, other)])
    }

    pub fn scale(&self, c: &RatFn) -> Result<HomOp> {
        HomOp::lincomb(&[(c.clone(), self)])
    }

    /// `self ∘ other`: apply `other` first.
    ///
    /// `(γδ)(i, j, k) = Σ_s γ(s, i+j-s, k) δ(i, j, s)`.
    pub fn compose(&self, other: &HomOp) -> Result<HomOp> {
        self.check_compatible(other)?;
        let mut out = HomOp::zero(self.n, &self.ctx)?;
        for (&(i, j, s), d) in &other.table {
            let t = i + j - s;
            for (&(_, _, k), g) in self.table.range((s, t, 0)..=(s, t, usize::MAX)) {
                out.accumulate(i, j, k, &g.try_mul(d)?)?;
            }
        }
        Ok(out)
    }

    /// The conjugate `P γ P` by the flip.
    pub fn transpose(&self) -> HomOp {
        let table = self
            .table
            .iter()
            .map(|(&(i, j, k), c)| ((j, i, i + j - k), c.clone()))
            .collect();
        HomOp { n: self.n, ctx: self.ctx.clone(), table }
    }

    pub fn is_zero(&self) -> bool {
        self.table.values().all(RatFn::is_zero)
    }

    /// First key (in lexicographic order) where the two operators differ,
    /// with both values.
    pub fn first_difference(&self, other: &HomOp) -> Result<Option<(Key, RatFn, RatFn)>> {
        self.check_compatible(other)?;
        let mut keys: Vec<&Key> = self.table.keys().chain(other.table.keys()).collect();
        keys.sort();
        keys.dedup();
        for &(i, j, k) in keys {
            let a = self.coeff(i, j, k);
            let b = other.coeff(i, j, k);
            if !a.ring_eq(&b)? {
                return Ok(Some(((i, j, k), a, b)));
            }
        }
        Ok(None)
    }

    /// Entrywise equality over the union of keys.
    pub fn op_eq(&self, other: &HomOp) -> Result<bool> {
        Ok(self.first_difference(other)?.is_none())
    }

    pub fn map_coeffs<F>(&self, ctx: &Ctx, f: F) -> Result<HomOp>
    where
        F: Fn(&RatFn) -> Result<RatFn>,
    {
        let mut out = HomOp::zero(self.n, ctx)?;
        for (&(i, j, k), c) in &self.table {
            out.set(i, j, k, f(c)?)?;
        }
        Ok(out)
    }

    /// Re-expresses the coefficients in a context containing this one's
    /// generators.
    pub fn embed(&self, ctx: &Ctx) -> Result<HomOp> {
        let s = Substitution::embedding(&self.ctx, ctx)?;
        self.map_coeffs(ctx, |c| s.apply(c))
    }

    /// Evaluates every coefficient at `point`, yielding an operator over the
    /// plain rationals.
    pub fn specialize(&self, point: &[BigRational]) -> Result<HomOp> {
        let empty = RingCtx::empty();
        self.map_coeffs(&empty, |c| Ok(RatFn::constant(&empty, c.eval(point)?)))
    }

    /// Dense `n² × n²` matrix; row `(k-1)n + (l-1)` is output `e_k ⊗ e_l`,
    /// column `(i-1)n + (j-1)` is input `e_i ⊗ e_j`.
    pub fn to_dense(&self) -> Vec<Vec<RatFn>> {
        let n = self.n;
        let mut m = vec![vec![RatFn::zero(&self.ctx); n * n]; n * n];
        for (&(i, j, k), c) in &self.table {
            let l = i + j - k;
            m[(k - 1) * n + (l - 1)][(i - 1) * n + (j - 1)] = c.clone();
        }
        m
    }
}

/// `(γ - a)(γ + (a - b)) = 0`, with the first nonzero entry of the product
/// as witness.
pub fn hecke_outcome(gamma: &HomOp, a: &RatFn, b: &RatFn) -> Result<Outcome> {
    let id = crate::families::id_op(gamma.n(), gamma.ctx())?;
    let one = RatFn::one(gamma.ctx());
    let left = HomOp::lincomb(&[(one.clone(), gamma), (-a, &id)])?;
    let right = HomOp::lincomb(&[(one, gamma), (a.try_sub(b)?, &id)])?;
    let product = left.compose(&right)?;
    let zero = HomOp::zero(gamma.n(), gamma.ctx())?;
    Ok(Outcome::from_witness(product.first_difference(&zero)?.map(|((i, j, k), v, z)| {
        Witness::new(format!("(i,j,k) = ({i},{j},{k})"), v.reduced(), z)
    })))
}

pub fn hecke_check(gamma: &HomOp, a: &RatFn, b: &RatFn) -> Result<bool> {
    Ok(hecke_outcome(gamma, a, b)?.holds)
}

/// Inverse of an operator satisfying `(γ - a)(γ + (a - b)) = 0`, namely
/// `(γ - b) / (a(a - b))`. Fails with `DivisionByZero` when `a(a - b) = 0`.
pub fn quadratic_inverse(gamma: &HomOp, a: &RatFn, b: &RatFn) -> Result<HomOp> {
    let id = crate::families::id_op(gamma.n(), gamma.ctx())?;
    let scale = a.try_mul(&a.try_sub(b)?)?.inv()?;
    let one = RatFn::one(gamma.ctx());
    HomOp::lincomb(&[(one, gamma), (-b, &id)])?.scale(&scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_coeff;
    use crate::families::{cremmer_gervais, eta_op, flip_op, id_op, Parameterization};

    fn int_ctx() -> Ctx {
        RingCtx::empty()
    }

    fn coeffs(v: Vec<(usize, RatFn)>) -> Vec<(usize, String)> {
        v.into_iter().map(|(k, c)| (k, c.to_string())).collect()
    }

    #[test]
    fn apply_eta() {
        let eta = eta_op(4, &int_ctx()).unwrap();
        assert_eq!(coeffs(eta.apply(2, 4).unwrap()), vec![(2, "1".into()), (3, "1".into())]);
        assert!(eta.apply(3, 3).unwrap().is_empty());
        assert!(matches!(eta.apply(0, 1), Err(Error::IndexOutOfRange(_))));
        assert!(matches!(eta.apply(5, 1), Err(Error::IndexOutOfRange(_))));
    }

    #[test]
    fn apply_rho_p() {
        let rho = cremmer_gervais(2, Parameterization::FormalP).unwrap();
        let c = rho.ctx().clone();
        let got = rho.apply(1, 2).unwrap();
        assert_eq!(got.len(), 2);
        assert_eq!(got[0], (1, parse_coeff("q - q^-1", &c).unwrap()));
        assert_eq!(got[1], (2, parse_coeff("q*p^-1", &c).unwrap()));
    }

    #[test]
    fn set_rejects_out_of_range() {
        let mut op = HomOp::zero(3, &int_ctx()).unwrap();
        let one = RatFn::one(&int_ctx());
        assert!(op.set(1, 1, 3, one.clone()).is_err());
        assert!(op.set(3, 3, 2, one.clone()).is_err());
        assert!(op.set(2, 3, 2, one.clone()).is_ok());
        assert!(op.set(0, 1, 1, one).is_err());
        assert_eq!(HomOp::zero(0, &int_ctx()).unwrap_err(), Error::InvalidDimension(0));
    }

    #[test]
    fn eta_composition_identities() {
        let c = int_ctx();
        for n in 2..=4 {
            let eta = eta_op(n, &c).unwrap();
            let p = flip_op(n, &c).unwrap();
            let id = id_op(n, &c).unwrap();
            assert!(eta.compose(&eta).unwrap().op_eq(&eta).unwrap());
            let neg_eta = eta.scale(&RatFn::integer(&c, -1)).unwrap();
            assert!(eta.compose(&p).unwrap().op_eq(&neg_eta).unwrap());
            let p_eta = p.compose(&eta).unwrap();
            let minus = eta.try_add(&p).unwrap().try_sub(&id).unwrap();
            let plus = eta.try_add(&p).unwrap().try_add(&id).unwrap();
            assert!(p_eta.op_eq(&minus).unwrap());
            assert!(!p_eta.op_eq(&plus).unwrap());
        }
    }

    #[test]
    fn p_eta_against_dense_product_at_two() {
        // Brute-force 4×4 product: rows/columns ordered e1e1, e1e2, e2e1, e2e2.
        let c = int_ctx();
        let dense = |op: &HomOp| -> Vec<Vec<i64>> {
            op.to_dense()
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|v| v.as_constant().unwrap().to_integer().try_into().unwrap())
                        .collect()
                })
                .collect()
        };
        let p = dense(&flip_op(2, &c).unwrap());
        let e = dense(&eta_op(2, &c).unwrap());
        let mut prod = vec![vec![0i64; 4]; 4];
        for r in 0..4 {
            for col in 0..4 {
                prod[r][col] = (0..4).map(|t| p[r][t] * e[t][col]).sum();
            }
        }
        // η e1e2 = e1e2, η e2e1 = -e1e2; P swaps the middle rows.
        let expect = vec![
            vec![0, 0, 0, 0],
            vec![0, 0, 0, 0],
            vec![0, 1, -1, 0],
            vec![0, 0, 0, 0],
        ];
        assert_eq!(prod, expect);
        let id = dense(&id_op(2, &c).unwrap());
        let mut minus = vec![vec![0i64; 4]; 4];
        for r in 0..4 {
            for col in 0..4 {
                minus[r][col] = e[r][col] + p[r][col] - id[r][col];
            }
        }
        assert_eq!(prod, minus);
    }

    #[test]
    fn transpose_matches_conjugation() {
        let c = int_ctx();
        for n in 2..=4 {
            let eta = eta_op(n, &c).unwrap();
            let p = flip_op(n, &c).unwrap();
            let conj = p.compose(&eta.compose(&p).unwrap()).unwrap();
            assert!(eta.transpose().op_eq(&conj).unwrap());
            assert!(eta.transpose().transpose().op_eq(&eta).unwrap());
            assert!(p.transpose().op_eq(&p).unwrap());
        }
    }

    #[test]
    fn transpose_of_eta_is_identity_minus_eta_minus_flip() {
        // PηP = (η + P - I)P = -η + I - P.
        let c = int_ctx();
        let eta = eta_op(2, &c).unwrap();
        let p = flip_op(2, &c).unwrap();
        let id = id_op(2, &c).unwrap();
        let expect = id.try_sub(&eta).unwrap().try_sub(&p).unwrap();
        assert!(eta.transpose().op_eq(&expect).unwrap());
    }

    #[test]
    fn hecke_examples() {
        let c = RingCtx::new(["q"]).unwrap();
        let q = parse_coeff("q", &c).unwrap();
        let qhat = parse_coeff("q - q^-1", &c).unwrap();
        let p = flip_op(3, &c).unwrap();
        let eta = eta_op(3, &c).unwrap();
        let rho1 = HomOp::lincomb(&[(q.clone(), &p), (qhat.clone(), &eta)]).unwrap();
        assert!(hecke_check(&rho1, &q, &qhat).unwrap());
        assert!(!hecke_check(&rho1, &q, &q).unwrap());
        let one = RatFn::one(&c);
        assert!(hecke_check(&p, &one, &RatFn::zero(&c)).unwrap());
        assert!(hecke_check(&id_op(3, &c).unwrap(), &one, &one).unwrap());
    }

    #[test]
    fn lincomb_requires_matching_shape() {
        let c = int_ctx();
        let a = eta_op(2, &c).unwrap();
        let b = eta_op(3, &c).unwrap();
        let one = RatFn::one(&c);
        assert_eq!(
            HomOp::lincomb(&[(one.clone(), &a), (one.clone(), &b)]).unwrap_err(),
            Error::DimensionMismatch(2, 3)
        );
        let d = eta_op(2, &RingCtx::new(["q"]).unwrap()).unwrap();
        assert_eq!(a.compose(&d).unwrap_err(), Error::ContextMismatch);
    }

    #[test]
    fn invertibility_of_family1() {
        use crate::families::family1;
        use crate::linalg::rank;
        let c = int_ctx();
        for n in 2..=4 {
            for (a, b, invertible) in [(0, 1, false), (1, 1, false), (2, 1, true), (3, -2, true)] {
                let (ra, rb) = (RatFn::integer(&c, a), RatFn::integer(&c, b));
                let g = family1(n, &ra, &rb).unwrap();
                assert!(hecke_check(&g, &ra, &rb).unwrap());
                assert_eq!(rank(g.to_dense()).unwrap() == n * n, invertible, "({a},{b}) n={n}");
                match quadratic_inverse(&g, &ra, &rb) {
                    Ok(inv) => {
                        assert!(invertible);
                        assert!(g.compose(&inv).unwrap().op_eq(&id_op(n, &c).unwrap()).unwrap());
                    }
                    Err(e) => {
                        assert!(!invertible);
                        assert_eq!(e, Error::DivisionByZero);
                    }
                }
            }
        }
    }
}
