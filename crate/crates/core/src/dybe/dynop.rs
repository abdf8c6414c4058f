use std::collections::BTreeMap;

use crate::arith::ring::check_ctx;
use crate::arith::{Ctx, RatFn};
use crate::error::{Error, Result};
use crate::par;

use super::weight::{canonicalize, sigma_shift, torus_rank, WeightVec};

/// A basis multi-index `(i_1, …, i_d)`, one-based.
pub type Multi = Vec<usize>;

/// `((input, output), self value, other value)` of a differing entry.
pub type DynMismatch = ((Multi, Multi), RatFn, RatFn);

/// A linear map `V^{⊗d} → V^{⊗d} ⊗ B` over the torus coefficient field,
/// stored column-wise (input multi-index to nonzero outputs). Entries are
/// kept in canonical torus form.
#[derive(Clone, Debug)]
pub struct DynOp {
    degree: usize,
    n: usize,
    ctx: Ctx,
    cols: BTreeMap<Multi, BTreeMap<Multi, RatFn>>,
}

/// All multi-indices of length `d` over `1..=n`, lexicographic.
pub fn basis(n: usize, d: usize) -> Vec<Multi> {
    let mut out: Vec<Multi> = vec![vec![]];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|m| {
                (1..=n).map(move |a| {
                    let mut v = m.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    out
}

fn add_into(col: &mut BTreeMap<Multi, RatFn>, key: Multi, c: RatFn) {
    if let Some(old) = col.get_mut(&key) {
        *old = &*old + &c;
        if old.is_zero() {
            col.remove(&key);
        }
    } else if !c.is_zero() {
        col.insert(key, c);
    }
}

impl DynOp {
    pub fn zero(degree: usize, ctx: &Ctx) -> Result<Self> {
        let n = torus_rank(ctx)?;
        Ok(DynOp { degree, n, ctx: ctx.clone(), cols: BTreeMap::new() })
    }

    pub fn identity(degree: usize, ctx: &Ctx) -> Result<Self> {
        let mut op = DynOp::zero(degree, ctx)?;
        for b in basis(op.n, degree) {
            op.set(b.clone(), b, RatFn::one(ctx))?;
        }
        Ok(op)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    fn check_index(&self, m: &[usize]) -> Result<()> {
        if m.len() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, got: m.len() });
        }
        if m.iter().any(|a| !(1..=self.n).contains(a)) {
            return Err(Error::IndexOutOfRange(format!("{m:?} with n = {}", self.n)));
        }
        Ok(())
    }

    /// Sets the coefficient of `output` in the image of `input`.
    pub fn set(&mut self, input: Multi, output: Multi, c: RatFn) -> Result<()> {
        self.check_index(&input)?;
        self.check_index(&output)?;
        check_ctx(&self.ctx, c.ctx())?;
        let c = canonicalize(&c)?;
        let col = self.cols.entry(input.clone()).or_default();
        if c.is_zero() {
            col.remove(&output);
            if col.is_empty() {
                self.cols.remove(&input);
            }
        } else {
            col.insert(output, c);
        }
        Ok(())
    }

    pub fn coeff(&self, output: &[usize], input: &[usize]) -> RatFn {
        self.cols
            .get(input)
            .and_then(|c| c.get(output))
            .cloned()
            .unwrap_or_else(|| RatFn::zero(&self.ctx))
    }

    /// `(input, output, coefficient)` triples, ordered by input then output.
    pub fn entries(&self) -> impl Iterator<Item = (&Multi, &Multi, &RatFn)> {
        self.cols.iter().flat_map(|(i, col)| col.iter().map(move |(o, c)| (i, o, c)))
    }

    pub fn len(&self) -> usize {
        self.cols.values().map(BTreeMap::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.cols.is_empty()
    }

    fn check_compatible(&self, other: &DynOp) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, got: other.degree });
        }
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        check_ctx(&self.ctx, &other.ctx)
    }

    /// `self ∘ other` as a matrix product over the commutative coefficient
    /// field. Columns are computed independently.
    pub fn compose(&self, other: &DynOp) -> Result<DynOp> {
        self.check_compatible(other)?;
        let inputs: Vec<(&Multi, &BTreeMap<Multi, RatFn>)> = other.cols.iter().collect();
        let cols = par::map(&inputs, |(input, mid)| {
            let mut out = BTreeMap::new();
            for (m, c1) in mid.iter() {
                if let Some(col) = self.cols.get(m) {
                    for (o, c2) in col {
                        add_into(&mut out, o.clone(), c2 * c1);
                    }
                }
            }
            ((*input).clone(), out)
        });
        Ok(DynOp {
            degree: self.degree,
            n: self.n,
            ctx: self.ctx.clone(),
            cols: cols.into_iter().filter(|(_, c)| !c.is_empty()).collect(),
        })
    }

    /// `f ⊗̃ g`: the entry at `(K ∪ L, I ∪ J)` is `(f^K_I)^{wt(L)} g^L_J`, the
    /// first factor shifted by the weight of the second factor's output.
    pub fn tilde(f: &DynOp, g: &DynOp) -> Result<DynOp> {
        if f.n != g.n {
            return Err(Error::DimensionMismatch(f.n, g.n));
        }
        check_ctx(&f.ctx, &g.ctx)?;
        let mut out = DynOp::zero(f.degree + g.degree, &f.ctx)?;
        for (i, k, fc) in f.entries() {
            let mut shifted: BTreeMap<WeightVec, RatFn> = BTreeMap::new();
            for (j, l, gc) in g.entries() {
                let w = WeightVec::sum_of(f.n, l);
                let fs = match shifted.get(&w) {
                    Some(v) => v.clone(),
                    None => {
                        let v = sigma_shift(fc, &w)?;
                        shifted.insert(w, v.clone());
                        v
                    }
                };
                let input: Multi = i.iter().chain(j).copied().collect();
                let output: Multi = k.iter().chain(l).copied().collect();
                out.set(input, output, fs.try_mul(gc)?)?;
            }
        }
        Ok(out)
    }

    /// First `(input, output)` pair in lexicographic order where the two
    /// maps differ, with both values.
    pub fn first_difference(&self, other: &DynOp) -> Result<Option<DynMismatch>> {
        self.check_compatible(other)?;
        let inputs = basis(self.n, self.degree);
        Ok(par::find_first(&inputs, |input| {
            let empty = BTreeMap::new();
            let a = self.cols.get(input).unwrap_or(&empty);
            let b = other.cols.get(input).unwrap_or(&empty);
            let mut outs: Vec<&Multi> = a.keys().chain(b.keys()).collect();
            outs.sort();
            outs.dedup();
            outs.into_iter().find_map(|o| {
                let va = self.coeff(o, input);
                let vb = other.coeff(o, input);
                (!va.ring_eq(&vb).expect("same context")).then(|| ((input.clone(), o.clone()), va, vb))
            })
        }))
    }

    pub fn dyn_eq(&self, other: &DynOp) -> Result<bool> {
        Ok(self.first_difference(other)?.is_none())
    }
}

impl DynOp {
    /// Evaluates every coefficient at `point` (one value per torus
    /// generator), keeping the torus context with constant entries.
    pub fn specialize(&self, point: &[num_rational::BigRational]) -> Result<DynOp> {
        let mut out = DynOp::zero(self.degree, &self.ctx)?;
        for (i, o, c) in self.entries() {
            out.set(i.clone(), o.clone(), RatFn::constant(&self.ctx, c.eval(point)?))?;
        }
        Ok(out)
    }
}
