use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use super::ring::{check_ctx, same_ctx, Ctx};
use crate::error::{Error, Result};

/// Exponent vector of a Laurent monomial, one signed entry per generator.
///
/// The derived ordering is lexicographic on the exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(SmallVec<[i32; 8]>);

impl Monomial {
    pub fn one(len: usize) -> Self {
        Monomial(SmallVec::from_elem(0, len))
    }

    pub fn var(len: usize, idx: usize) -> Self {
        let mut m = Self::one(len);
        m.0[idx] = 1;
        m
    }

    pub fn from_exps(exps: &[i32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn exps(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a - b).collect())
    }

    pub fn pow(&self, k: i32) -> Monomial {
        Monomial(self.0.iter().map(|e| e * k).collect())
    }

    pub fn inv(&self) -> Monomial {
        self.pow(-1)
    }

    /// Entrywise minimum.
    pub fn meet(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.min(b)).collect())
    }

    /// Entrywise `self >= other`.
    pub fn dominates(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a >= b)
    }

    pub(crate) fn set(&mut self, idx: usize, e: i32) {
        self.0[idx] = e;
    }
}

/// Sparse Laurent polynomial over the rationals.
///
/// No stored coefficient is zero, so two polynomials in the same context are
/// equal exactly when their term maps are identical.
#[derive(Clone, Debug)]
pub struct LaurentPoly {
    ctx: Ctx,
    terms: BTreeMap<Monomial, BigRational>,
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        same_ctx(&self.ctx, &other.ctx) && self.terms == other.terms
    }
}

impl Eq for LaurentPoly {}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.terms
            .cmp(&other.terms)
            .then_with(|| self.ctx.names().cmp(other.ctx.names()))
    }
}

impl LaurentPoly {
    pub fn zero(ctx: &Ctx) -> Self {
        LaurentPoly { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ctx: &Ctx) -> Self {
        Self::constant(ctx, BigRational::one())
    }

    pub fn constant(ctx: &Ctx, c: BigRational) -> Self {
        Self::monomial(ctx, Monomial::one(ctx.len()), c)
    }

    pub fn integer(ctx: &Ctx, c: i64) -> Self {
        Self::constant(ctx, BigRational::from_integer(BigInt::from(c)))
    }

    pub fn monomial(ctx: &Ctx, m: Monomial, c: BigRational) -> Self {
        debug_assert_eq!(m.len(), ctx.len());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { ctx: ctx.clone(), terms }
    }

    pub fn var(ctx: &Ctx, name: &str) -> Result<Self> {
        let idx = ctx.require(name)?;
        Ok(Self::monomial(ctx, Monomial::var(ctx.len(), idx), BigRational::one()))
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(ctx: &Ctx, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut p = Self::zero(ctx);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigRational> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, BigRational> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    /// The value if this is a constant (including zero).
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn as_monomial(&self) -> Option<(&Monomial, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Greatest term in lexicographic order.
    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        check_ctx(&self.ctx, &other.ctx)?;
        let (mut big, small) = if self.len() >= other.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (m, c) in &small.terms {
            big.add_term(m.clone(), c.clone());
        }
        Ok(big)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        check_ctx(&self.ctx, &other.ctx)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        check_ctx(&self.ctx, &other.ctx)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ctx));
        }
        let mut out = Self::zero(&self.ctx);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        LaurentPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        LaurentPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.ctx);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Entrywise minimum exponent over all terms; `None` for zero.
    pub fn min_exponents(&self) -> Option<Monomial> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, m| acc.meet(m)))
    }

    /// Highest exponent of generator `idx` appearing in any term.
    pub fn max_degree_in(&self, idx: usize) -> Option<i32> {
        self.terms.keys().map(|m| m.exps()[idx]).max()
    }

    pub fn uses_generator(&self, idx: usize) -> bool {
        self.terms.keys().any(|m| m.exps()[idx] != 0)
    }

    /// Splits `self = scalar * x^shift * prim` where `prim` has coprime integer
    /// coefficients, no monomial factor, and a positive coefficient on its
    /// lexicographically least monomial. Zero maps to `None`.
    pub fn primitive_parts(&self) -> Option<(BigRational, Monomial, LaurentPoly)> {
        let shift = self.min_exponents()?;
        let mut den_lcm = BigInt::one();
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
            num_gcd = num_gcd.gcd(c.numer());
        }
        let (least, _) = self.terms.iter().next()?;
        let least_positive = self.terms[least].is_positive();
        let mut scalar = BigRational::new(num_gcd, den_lcm);
        if !least_positive {
            scalar = -scalar;
        }
        let inv = scalar.recip();
        let neg_shift = shift.inv();
        let prim = LaurentPoly {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(&neg_shift), c * &inv))
                .collect(),
        };
        Some((scalar, shift, prim))
    }

    /// Exact quotient `self / d` in the Laurent polynomial ring, or `None` if
    /// `d` does not divide `self` (or `d` is zero).
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() || !same_ctx(&self.ctx, &d.ctx) {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(&self.ctx));
        }
        if let Some((m, c)) = d.as_monomial() {
            let inv = c.recip();
            let mi = m.inv();
            return Some(LaurentPoly {
                ctx: self.ctx.clone(),
                terms: self.terms.iter().map(|(k, v)| (k.mul(&mi), v * &inv)).collect(),
            });
        }
        // Shift both into the polynomial ring; a Laurent quotient of two
        // polynomials without monomial factors is again such a polynomial.
        let sa = self.min_exponents()?;
        let sd = d.min_exponents()?;
        let mut rem = self.mul_monomial(&sa.inv());
        let div = d.mul_monomial(&sd.inv());
        let (lm, lc) = div.leading()?;
        let (lm, lc_inv) = (lm.clone(), lc.recip());
        let mut quot = Self::zero(&self.ctx);
        while let Some((m, c)) = rem.leading() {
            if !m.dominates(&lm) {
                return None;
            }
            let tm = m.div(&lm);
            let tc = c * &lc_inv;
            for (dm, dc) in &div.terms {
                rem.add_term(dm.mul(&tm), -(dc * &tc));
            }
            quot.add_term(tm, tc);
        }
        Some(quot.mul_monomial(&sa.div(&sd)))
    }

    /// Evaluates at a point given as one value per generator.
    pub fn eval(&self, point: &[BigRational]) -> Result<BigRational> {
        debug_assert_eq!(point.len(), self.ctx.len());
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in point.iter().zip(m.exps()) {
                if e == 0 {
                    continue;
                }
                if v.is_zero() && e < 0 {
                    return Err(Error::DivisionByZero);
                }
                t *= num_traits::pow::Pow::pow(v, e);
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Rewrites each exponent vector through `f`, summing colliding terms.
    pub(crate) fn map_monomials<F>(&self, target: &Ctx, f: F) -> Self
    where
        F: Fn(&Monomial) -> Monomial,
    {
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            out.add_term(f(m), c.clone());
        }
        out
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs).expect("ring context mismatch")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_sub(rhs).expect("ring context mismatch")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul(rhs).expect("ring context mismatch")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}
