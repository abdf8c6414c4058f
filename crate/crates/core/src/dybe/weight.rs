use crate::arith::{Ctx, Monomial, RatFn, RingCtx};
use crate::error::{Error, Result};

/// Name of the generator `s = q^{1/n}`.
pub const S: &str = "s";

/// Name of the torus generator `K_{ν_a}`.
pub fn k_name(a: usize) -> String {
    format!("K{a}")
}

/// The torus context `[s, K1, …, Kn]`.
pub fn torus_ctx(n: usize) -> Result<Ctx> {
    if n < 2 {
        return Err(Error::InvalidDimension(n));
    }
    let mut names = vec![S.to_string()];
    names.extend((1..=n).map(k_name));
    RingCtx::new(names)
}

/// Rank of a torus context, checking its shape.
pub fn torus_rank(ctx: &Ctx) -> Result<usize> {
    let n = ctx.len().saturating_sub(1);
    if n < 2 || ctx.names()[0] != S || (1..=n).any(|a| ctx.names()[a] != k_name(a)) {
        return Err(Error::InvalidOperator(format!("not a torus context: {:?}", ctx.names())));
    }
    Ok(n)
}

/// `Σ m_a ν_a` in the weight lattice, modulo `ν_1 + … + ν_n = 0`, stored with
/// last coordinate zero.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVec(Vec<i64>);

impl WeightVec {
    pub fn new(coords: &[i64]) -> Self {
        let last = coords.last().copied().unwrap_or(0);
        WeightVec(coords.iter().map(|c| c - last).collect())
    }

    pub fn zero(n: usize) -> Self {
        WeightVec(vec![0; n])
    }

    /// `ν_a`, one-based.
    pub fn nu(n: usize, a: usize) -> Self {
        let mut v = vec![0; n];
        v[a - 1] = 1;
        WeightVec::new(&v)
    }

    /// `ν_{a_1} + … + ν_{a_r}`.
    pub fn sum_of(n: usize, idx: &[usize]) -> Self {
        let mut v = vec![0; n];
        for &a in idx {
            v[a - 1] += 1;
        }
        WeightVec::new(&v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn add(&self, other: &WeightVec) -> WeightVec {
        WeightVec::new(&self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect::<Vec<_>>())
    }

    /// `n (λ, μ)` for the pairing `(ν_i, ν_j) = δ_ij - 1/n`; always an integer
    /// and independent of representatives.
    pub fn pairing_n(&self, mu: &[i64]) -> i64 {
        let n = self.0.len() as i64;
        let dot: i64 = self.0.iter().zip(mu).map(|(l, m)| l * m).sum();
        let sl: i64 = self.0.iter().sum();
        let sm: i64 = mu.iter().sum();
        n * dot - sl * sm
    }

    /// Whether this weight lies in the root lattice.
    pub fn in_root_lattice(&self) -> bool {
        self.0.iter().sum::<i64>().rem_euclid(self.0.len() as i64) == 0
    }
}

fn k_exps(m: &Monomial, n: usize) -> Vec<i64> {
    m.exps()[1..=n].iter().map(|&e| e as i64).collect()
}

fn canonical_monomial(m: &Monomial, n: usize) -> Monomial {
    let last = m.exps()[n];
    if last == 0 {
        return m.clone();
    }
    let mut out = m.clone();
    for a in 1..=n {
        out.set(a, m.exps()[a] - last);
    }
    out
}

/// Rewrites every monomial so its `K_n` exponent is zero, using
/// `K_1 ⋯ K_n = 1`.
pub fn canonicalize(f: &RatFn) -> Result<RatFn> {
    let n = torus_rank(f.ctx())?;
    f.map_monomials(f.ctx(), |m| canonical_monomial(m, n))
}

/// `b^λ`: multiplies each torus monomial `K_μ` by `q^{(λ, μ)} = s^{n(λ, μ)}`.
pub fn sigma_shift(b: &RatFn, lambda: &WeightVec) -> Result<RatFn> {
    let n = torus_rank(b.ctx())?;
    if lambda.n() != n {
        return Err(Error::DimensionMismatch(lambda.n(), n));
    }
    b.map_monomials(b.ctx(), |m| {
        let mut out = canonical_monomial(m, n);
        let e = lambda.pairing_n(&k_exps(m, n));
        out.set(0, m.exps()[0] + e as i32);
        out
    })
}

/// Class of a torus monomial in the weight lattice modulo the root lattice.
fn weight_class(m: &Monomial, n: usize) -> i64 {
    k_exps(m, n).iter().sum::<i64>().rem_euclid(n as i64)
}

fn homogeneous_class(p: &crate::arith::LaurentPoly, n: usize) -> Option<i64> {
    let mut it = p.terms().keys().map(|m| weight_class(m, n));
    let first = it.next()?;
    it.all(|c| c == first).then_some(first)
}

/// Whether `f` lies in the subfield generated by root-lattice torus
/// monomials: numerator and denominator factors must each be homogeneous
/// for the weight class modulo the root lattice, with net class zero.
pub fn in_root_subfield(f: &RatFn) -> Result<bool> {
    let n = torus_rank(f.ctx())?;
    if f.is_zero() {
        return Ok(true);
    }
    let Some(mut total) = homogeneous_class(f.numer(), n) else {
        return Ok(false);
    };
    for (d, e) in f.den_factors() {
        let Some(c) = homogeneous_class(d, n) else {
            return Ok(false);
        };
        total -= c * *e as i64;
    }
    Ok(total.rem_euclid(n as i64) == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_coeff;

    #[test]
    fn canonical_form() {
        assert_eq!(WeightVec::new(&[3, 1, 2]).coords(), &[1, -1, 0]);
        assert_eq!(WeightVec::new(&[1, 1, 1]), WeightVec::zero(3));
        let c = torus_ctx(3).unwrap();
        let f = parse_coeff("K1*K2*K3 + s*K3^2", &c).unwrap();
        assert_eq!(canonicalize(&f).unwrap(), parse_coeff("1 + s*K1^-2*K2^-2", &c).unwrap());
    }

    #[test]
    fn shift_of_cob_entry() {
        // (K_m^{-2a})^{ν_s} = s^{-2an δ_ms + 2a} K_m^{-2a}.
        let n = 3;
        let c = torus_ctx(n).unwrap();
        for m in 1..=n {
            for a in 1..=n as i64 {
                for s in 1..=n {
                    let e = RatFn::monomial(&c, 1, &[(&k_name(m), -2 * a as i32)]).unwrap();
                    let d = if m == s { 1 } else { 0 };
                    let pw = -2 * a * n as i64 * d + 2 * a;
                    let want = canonicalize(&e.try_mul(&RatFn::monomial(&c, 1, &[(S, pw as i32)]).unwrap()).unwrap()).unwrap();
                    assert_eq!(sigma_shift(&e, &WeightVec::nu(n, s)).unwrap(), want);
                }
            }
        }
    }

    #[test]
    fn shift_fixes_scalars_and_relation() {
        let c = torus_ctx(3).unwrap();
        let lam = WeightVec::new(&[2, -1, 5]);
        let s = parse_coeff("s^4 - 2/(1 - s)", &c).unwrap();
        assert_eq!(sigma_shift(&s, &lam).unwrap(), s);
        let rel = parse_coeff("K1*K2*K3", &c).unwrap();
        assert_eq!(sigma_shift(&rel, &lam).unwrap(), RatFn::one(&c));
    }

    #[test]
    fn root_lattice_membership() {
        let c = torus_ctx(2).unwrap();
        assert!(in_root_subfield(&parse_coeff("1/(1 - K1^2*K2^-2)", &c).unwrap()).unwrap());
        // -2ν₁ = -(ν₁ - ν₂) when n = 2, but ν₁ itself is not a root.
        assert!(in_root_subfield(&parse_coeff("K1^-2", &c).unwrap()).unwrap());
        assert!(!in_root_subfield(&parse_coeff("K1^-1", &c).unwrap()).unwrap());
        let c3 = torus_ctx(3).unwrap();
        assert!(!in_root_subfield(&parse_coeff("1/(1 - K1)", &c3).unwrap()).unwrap());
        assert!(!in_root_subfield(&parse_coeff("K1^-2", &c3).unwrap()).unwrap());
        assert!(in_root_subfield(&parse_coeff("K1/(K2 - K1^2*K3^-1)", &c3).unwrap()).unwrap());
    }
}
