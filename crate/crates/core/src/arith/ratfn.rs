use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{LaurentPoly, Monomial};
use super::ring::{check_ctx, same_ctx, Ctx};
use crate::error::{Error, Result};

/// A rational function `num / den` over the rationals.
///
/// The denominator is kept as a sorted product of primitive factors (integer
/// coprime coefficients, no monomial factor, positive coefficient on the
/// lexicographically least monomial). Scalars and monomials are always
/// absorbed into the numerator, so the expanded denominator has unit content
/// and a positive least coefficient.
///
/// Storage is not GCD-reduced: equality is decided by cross-multiplication
/// over the least common multiple of the two factor lists.
#[derive(Clone, Debug)]
pub struct RatFn {
    num: LaurentPoly,
    den: Vec<(LaurentPoly, u32)>,
}

fn merge_factors(a: &[(LaurentPoly, u32)], b: &[(LaurentPoly, u32)]) -> Vec<(LaurentPoly, u32)> {
    let mut out: Vec<(LaurentPoly, u32)> = a.to_vec();
    for (f, e) in b {
        match out.binary_search_by(|(g, _)| g.cmp(f)) {
            Ok(pos) => out[pos].1 += e,
            Err(pos) => out.insert(pos, (f.clone(), *e)),
        }
    }
    out
}

fn expand(ctx: &Ctx, factors: &[(LaurentPoly, u32)]) -> LaurentPoly {
    factors
        .iter()
        .fold(LaurentPoly::one(ctx), |acc, (f, e)| &acc * &f.pow(*e))
}

/// Least common multiple of two factor lists, with the cofactors that lift
/// each side to it.
fn lcm_cofactors(
    ctx: &Ctx,
    a: &[(LaurentPoly, u32)],
    b: &[(LaurentPoly, u32)],
) -> (Vec<(LaurentPoly, u32)>, LaurentPoly, LaurentPoly) {
    let mut lcm = a.to_vec();
    let mut cof_a = LaurentPoly::one(ctx);
    let mut cof_b = LaurentPoly::one(ctx);
    for (f, e) in b {
        match lcm.binary_search_by(|(g, _)| g.cmp(f)) {
            Ok(pos) => {
                let ea = lcm[pos].1;
                if *e > ea {
                    cof_a = &cof_a * &f.pow(e - ea);
                    lcm[pos].1 = *e;
                } else if ea > *e {
                    cof_b = &cof_b * &f.pow(ea - e);
                }
            }
            Err(pos) => {
                cof_a = &cof_a * &f.pow(*e);
                lcm.insert(pos, (f.clone(), *e));
            }
        }
    }
    for (f, e) in a {
        if b.binary_search_by(|(g, _)| g.cmp(f)).is_err() {
            cof_b = &cof_b * &f.pow(*e);
        }
    }
    (lcm, cof_a, cof_b)
}

impl RatFn {
    pub fn zero(ctx: &Ctx) -> Self {
        Self::from_poly(LaurentPoly::zero(ctx))
    }

    pub fn one(ctx: &Ctx) -> Self {
        Self::from_poly(LaurentPoly::one(ctx))
    }

    pub fn integer(ctx: &Ctx, c: i64) -> Self {
        Self::from_poly(LaurentPoly::integer(ctx, c))
    }

    pub fn constant(ctx: &Ctx, c: BigRational) -> Self {
        Self::from_poly(LaurentPoly::constant(ctx, c))
    }

    pub fn var(ctx: &Ctx, name: &str) -> Result<Self> {
        Ok(Self::from_poly(LaurentPoly::var(ctx, name)?))
    }

    /// `coeff * prod(gen^exp)` for the listed generators.
    pub fn monomial(ctx: &Ctx, coeff: i64, powers: &[(&str, i32)]) -> Result<Self> {
        let mut m = Monomial::one(ctx.len());
        for (name, e) in powers {
            let idx = ctx.require(name)?;
            m.set(idx, m.exps()[idx] + e);
        }
        Ok(Self::from_poly(LaurentPoly::monomial(
            ctx,
            m,
            BigRational::from_integer(BigInt::from(coeff)),
        )))
    }

    pub fn from_poly(num: LaurentPoly) -> Self {
        RatFn { num, den: Vec::new() }
    }

    pub fn from_fraction(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        check_ctx(num.ctx(), den.ctx())?;
        let (scalar, shift, prim) = den.primitive_parts().ok_or(Error::DivisionByZero)?;
        let num = num.mul_monomial(&shift.inv()).scale(&scalar.recip());
        let den = if prim.is_one() { Vec::new() } else { vec![(prim, 1)] };
        Ok(RatFn { num, den })
    }

    pub fn ctx(&self) -> &Ctx {
        self.num.ctx()
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    /// The denominator as an expanded polynomial.
    pub fn denom(&self) -> LaurentPoly {
        expand(self.ctx(), &self.den)
    }

    pub fn den_factors(&self) -> &[(LaurentPoly, u32)] {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The underlying Laurent polynomial, if the denominator is trivial after
    /// cancelling any factor that divides the numerator.
    pub fn as_poly(&self) -> Option<LaurentPoly> {
        if self.den.is_empty() {
            return Some(self.num.clone());
        }
        let r = self.reduced();
        r.den.is_empty().then_some(r.num)
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        self.as_poly()?.as_constant()
    }

    /// Cancels denominator factors that divide the numerator exactly.
    pub fn reduced(&self) -> Self {
        let mut num = self.num.clone();
        let mut den = Vec::with_capacity(self.den.len());
        for (f, e) in &self.den {
            let mut left = *e;
            while left > 0 {
                match num.div_exact(f) {
                    Some(q) => {
                        num = q;
                        left -= 1;
                    }
                    None => break,
                }
            }
            if left > 0 {
                den.push((f.clone(), left));
            }
        }
        if num.is_zero() {
            den.clear();
        }
        RatFn { num, den }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        check_ctx(self.ctx(), other.ctx())?;
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if self.den == other.den {
            return Ok(Self::normalized(self.num.try_add(&other.num)?, self.den.clone()));
        }
        let (lcm, ca, cb) = lcm_cofactors(self.ctx(), &self.den, &other.den);
        let num = &(&self.num * &ca) + &(&other.num * &cb);
        Ok(Self::normalized(num, lcm))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        check_ctx(self.ctx(), other.ctx())?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ctx()));
        }
        let num = self.num.try_mul(&other.num)?;
        if other.den.is_empty() {
            return Ok(RatFn { num, den: self.den.clone() });
        }
        if self.den.is_empty() {
            return Ok(RatFn { num, den: other.den.clone() });
        }
        Ok(RatFn { num, den: merge_factors(&self.den, &other.den) })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.try_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<Self> {
        let (scalar, shift, prim) = self.num.primitive_parts().ok_or(Error::DivisionByZero)?;
        let num = expand(self.ctx(), &self.den)
            .mul_monomial(&shift.inv())
            .scale(&scalar.recip());
        let den = if prim.is_one() { Vec::new() } else { vec![(prim, 1)] };
        Ok(RatFn { num, den })
    }

    pub fn pow(&self, k: i32) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let e = k.unsigned_abs();
        if e == 0 {
            return Ok(Self::one(self.ctx()));
        }
        Ok(RatFn {
            num: base.num.pow(e),
            den: base.den.iter().map(|(f, m)| (f.clone(), m * e)).collect(),
        })
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::normalized(self.num.scale(c), self.den.clone())
    }

    /// Equality in the fraction field: `a/b == c/d` iff `a*d == c*b`.
    pub fn ring_eq(&self, other: &Self) -> Result<bool> {
        check_ctx(self.ctx(), other.ctx())?;
        if self.den == other.den {
            return Ok(self.num == other.num);
        }
        let (_, ca, cb) = lcm_cofactors(self.ctx(), &self.den, &other.den);
        Ok(&self.num * &ca == &other.num * &cb)
    }

    pub fn eval(&self, point: &[BigRational]) -> Result<BigRational> {
        let mut d = BigRational::one();
        for (f, e) in &self.den {
            let v = f.eval(point)?;
            if v.is_zero() {
                return Err(Error::DivisionByZero);
            }
            d *= num_traits::pow::Pow::pow(&v, *e);
        }
        Ok(self.num.eval(point)? / d)
    }

    fn normalized(num: LaurentPoly, den: Vec<(LaurentPoly, u32)>) -> Self {
        if num.is_zero() {
            return RatFn { num, den: Vec::new() };
        }
        RatFn { num, den }
    }

    /// Applies an exponent-remapping to numerator and every denominator
    /// factor, renormalizing factors into `target`.
    pub(crate) fn map_monomials<F>(&self, target: &Ctx, f: F) -> Result<Self>
    where
        F: Fn(&Monomial) -> Monomial,
    {
        let mut num = self.num.map_monomials(target, &f);
        let mut den: Vec<(LaurentPoly, u32)> = Vec::new();
        for (fac, e) in &self.den {
            let image = fac.map_monomials(target, &f);
            let (scalar, shift, prim) = image.primitive_parts().ok_or(Error::DivisionByZero)?;
            let scalar_e = num_traits::pow::Pow::pow(&scalar, *e);
            num = num
                .mul_monomial(&shift.pow(-(*e as i32)))
                .scale(&scalar_e.recip());
            if !prim.is_one() {
                den = merge_factors(&den, &[(prim, *e)]);
            }
        }
        Ok(Self::normalized(num, den))
    }
}

impl PartialEq for RatFn {
    fn eq(&self, other: &Self) -> bool {
        same_ctx(self.ctx(), other.ctx()) && self.ring_eq(other).unwrap_or(false)
    }
}

impl Eq for RatFn {}

impl From<LaurentPoly> for RatFn {
    fn from(p: LaurentPoly) -> Self {
        RatFn::from_poly(p)
    }
}

impl Add for &RatFn {
    type Output = RatFn;
    fn add(self, rhs: &RatFn) -> RatFn {
        self.try_add(rhs).expect("ring context mismatch")
    }
}

impl Sub for &RatFn {
    type Output = RatFn;
    fn sub(self, rhs: &RatFn) -> RatFn {
        self.try_sub(rhs).expect("ring context mismatch")
    }
}

impl Mul for &RatFn {
    type Output = RatFn;
    fn mul(self, rhs: &RatFn) -> RatFn {
        self.try_mul(rhs).expect("ring context mismatch")
    }
}

impl Div for &RatFn {
    type Output = RatFn;
    /// Panics on a zero divisor; use [`RatFn::try_div`] to handle it.
    fn div(self, rhs: &RatFn) -> RatFn {
        self.try_div(rhs).expect("division by zero or context mismatch")
    }
}

impl Neg for &RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ring::RingCtx;

    fn ctx() -> Ctx {
        RingCtx::new(["q", "x"]).unwrap()
    }

    #[test]
    fn additive_inverse() {
        let c = ctx();
        let q = RatFn::var(&c, "q").unwrap();
        let x = RatFn::var(&c, "x").unwrap();
        let one = RatFn::one(&c);
        let f = &q / &(&one - &x);
        assert!((&f + &(-&f)).is_zero());
    }

    #[test]
    fn qhat_times_q_plus_inverse() {
        let c = ctx();
        let q = RatFn::var(&c, "q").unwrap();
        let qi = q.inv().unwrap();
        let qhat = &q - &qi;
        let lhs = &qhat * &(&q + &qi);
        let rhs = &q.pow(2).unwrap() - &q.pow(-2).unwrap();
        assert!(lhs.ring_eq(&rhs).unwrap());
    }

    #[test]
    fn geometric_factor_cancels() {
        // (1/(1-x)) * (1-x^2) = 1 + x, checked by hand expansion:
        // (1-x^2) = (1-x)(1+x).
        let c = ctx();
        let x = RatFn::var(&c, "x").unwrap();
        let one = RatFn::one(&c);
        let lhs = &(&one / &(&one - &x)) * &(&one - &x.pow(2).unwrap());
        assert!(lhs.ring_eq(&(&one + &x)).unwrap());
        assert_eq!(lhs.as_poly().unwrap(), (&one + &x).as_poly().unwrap());
    }

    #[test]
    fn equal_under_common_factor() {
        let c = ctx();
        let x = RatFn::var(&c, "x").unwrap();
        let one = RatFn::one(&c);
        let a = &x / &(&one - &x);
        let b = &(&x * &(&one + &x)) / &(&one - &x.pow(2).unwrap());
        assert!(a.ring_eq(&b).unwrap());
        let q = RatFn::var(&c, "q").unwrap();
        let qhat = &q - &q.inv().unwrap();
        let u = &qhat / &(&one - &x);
        let v = &qhat / &(&one - &x.pow(2).unwrap());
        assert!(!u.ring_eq(&v).unwrap());
    }

    #[test]
    fn division_by_zero_is_reported() {
        let c = ctx();
        let zero = RatFn::zero(&c);
        assert_eq!(RatFn::one(&c).try_div(&zero).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn context_mismatch_is_reported() {
        let a = RatFn::one(&ctx());
        let b = RatFn::one(&RingCtx::new(["p"]).unwrap());
        assert_eq!(a.try_add(&b).unwrap_err(), Error::ContextMismatch);
        assert_eq!(a.ring_eq(&b).unwrap_err(), Error::ContextMismatch);
    }

    #[test]
    fn denominator_display_normalization() {
        // 1/(2x - 2): the denominator is stored as (1 - x) with the scalar
        // and sign moved to the numerator.
        let c = ctx();
        let x = LaurentPoly::var(&c, "x").unwrap();
        let two = LaurentPoly::integer(&c, 2);
        let f = RatFn::from_fraction(LaurentPoly::one(&c), &(&two * &x) - &two).unwrap();
        let d = f.denom();
        let (least, coeff) = d.terms().iter().next().unwrap();
        assert!(least.is_one());
        assert!(coeff.is_one());
        assert_eq!(f.numer().as_constant().unwrap(), BigRational::new((-1).into(), 2.into()));
    }
}
