use std::collections::BTreeMap;

use crate::arith::ring::check_ctx;
use crate::arith::{Ctx, RatFn};
use crate::error::{Error, Result};
use crate::par;

use super::homop::HomOp;

pub type Idx3 = [usize; 3];

/// `((input, output), self value, other value)` of a differing entry.
pub type TriMismatch = ((Idx3, Idx3), RatFn, RatFn);

/// A homogeneous operator on `V ⊗ V ⊗ V`, stored column-wise: each input
/// basis triple maps to its nonzero output coefficients. Every key conserves
/// the level sum `a + b + c = i + j + k`.
#[derive(Clone, Debug)]
pub struct TriOp {
    n: usize,
    ctx: Ctx,
    cols: BTreeMap<Idx3, BTreeMap<Idx3, RatFn>>,
}

fn basis(n: usize) -> Vec<Idx3> {
    let mut v = Vec::with_capacity(n * n * n);
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                v.push([i, j, k]);
            }
        }
    }
    v
}

fn add_into(col: &mut BTreeMap<Idx3, RatFn>, key: Idx3, c: RatFn) {
    match col.get_mut(&key) {
        Some(old) => {
            *old = &*old + &c;
            if old.is_zero() {
                col.remove(&key);
            }
        }
        None => {
            if !c.is_zero() {
                col.insert(key, c);
            }
        }
    }
}

impl TriOp {
    pub fn identity(n: usize, ctx: &Ctx) -> Self {
        let one = RatFn::one(ctx);
        let cols = basis(n)
            .into_iter()
            .map(|b| (b, BTreeMap::from([(b, one.clone())])))
            .collect();
        TriOp { n, ctx: ctx.clone(), cols }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    /// Nonzero outputs of the input basis vector `e_i ⊗ e_j ⊗ e_k`.
    pub fn column(&self, input: Idx3) -> Option<&BTreeMap<Idx3, RatFn>> {
        self.cols.get(&input)
    }

    pub fn coeff(&self, output: Idx3, input: Idx3) -> RatFn {
        self.cols
            .get(&input)
            .and_then(|c| c.get(&output))
            .cloned()
            .unwrap_or_else(|| RatFn::zero(&self.ctx))
    }

    /// `γ ⊗ 1`: acts on slots one and two.
    pub fn lift12(g: &HomOp) -> Self {
        let n = g.n();
        let mut cols = BTreeMap::new();
        for [i, j, k] in basis(n) {
            let col: BTreeMap<Idx3, RatFn> = g
                .apply(i, j)
                .expect("basis index in range")
                .into_iter()
                .map(|(a, c)| ([a, i + j - a, k], c))
                .collect();
            if !col.is_empty() {
                cols.insert([i, j, k], col);
            }
        }
        TriOp { n, ctx: g.ctx().clone(), cols }
    }

    /// `1 ⊗ γ`: acts on slots two and three.
    pub fn lift23(g: &HomOp) -> Self {
        let n = g.n();
        let mut cols = BTreeMap::new();
        for [i, j, k] in basis(n) {
            let col: BTreeMap<Idx3, RatFn> = g
                .apply(j, k)
                .expect("basis index in range")
                .into_iter()
                .map(|(a, c)| ([i, a, j + k - a], c))
                .collect();
            if !col.is_empty() {
                cols.insert([i, j, k], col);
            }
        }
        TriOp { n, ctx: g.ctx().clone(), cols }
    }

    fn check_compatible(&self, other: &TriOp) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        check_ctx(&self.ctx, &other.ctx)
    }

    /// `self ∘ other`. Columns are computed independently.
    pub fn compose(&self, other: &TriOp) -> Result<TriOp> {
        self.check_compatible(other)?;
        let inputs: Vec<(&Idx3, &BTreeMap<Idx3, RatFn>)> = other.cols.iter().collect();
        let cols = par::map(&inputs, |(input, mid)| {
            let mut out = BTreeMap::new();
            for (m, c1) in mid.iter() {
                if let Some(col) = self.cols.get(m) {
                    for (o, c2) in col {
                        add_into(&mut out, *o, c2 * c1);
                    }
                }
            }
            (**input, out)
        });
        Ok(TriOp {
            n: self.n,
            ctx: self.ctx.clone(),
            cols: cols.into_iter().filter(|(_, c)| !c.is_empty()).collect(),
        })
    }

    pub fn try_sub(&self, other: &TriOp) -> Result<TriOp> {
        self.check_compatible(other)?;
        let mut cols = self.cols.clone();
        for (input, col) in &other.cols {
            let dst = cols.entry(*input).or_default();
            for (o, c) in col {
                add_into(dst, *o, -c);
            }
        }
        cols.retain(|_, c| !c.is_empty());
        Ok(TriOp { n: self.n, ctx: self.ctx.clone(), cols })
    }

    /// First `(input, output)` pair, in lexicographic order, where the two
    /// operators differ, with both values.
    pub fn first_difference(&self, other: &TriOp) -> Result<Option<TriMismatch>> {
        self.check_compatible(other)?;
        let inputs = basis(self.n);
        let hit = par::find_first(&inputs, |input| {
            let empty = BTreeMap::new();
            let a = self.cols.get(input).unwrap_or(&empty);
            let b = other.cols.get(input).unwrap_or(&empty);
            let mut outs: Vec<&Idx3> = a.keys().chain(b.keys()).collect();
            outs.sort();
            outs.dedup();
            outs.into_iter().find_map(|o| {
                let va = self.coeff(*o, *input);
                let vb = other.coeff(*o, *input);
                (!va.ring_eq(&vb).expect("same context")).then_some(((*input, *o), va, vb))
            })
        });
        Ok(hit)
    }

    /// Entrywise equality.
    pub fn tri_eq(&self, other: &TriOp) -> Result<bool> {
        Ok(self.first_difference(other)?.is_none())
    }

    pub fn is_zero(&self) -> bool {
        self.cols.values().all(|c| c.values().all(RatFn::is_zero))
    }
}
