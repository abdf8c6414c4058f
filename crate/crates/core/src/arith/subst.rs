use super::poly::{LaurentPoly, Monomial};
use super::ratfn::RatFn;
use super::ring::{check_ctx, Ctx};
use crate::error::{Error, Result};

/// A monomial substitution from one ring context into another.
///
/// Each source generator maps to a single Laurent monomial (coefficient 1) in
/// the target, so exponent vectors are remapped linearly and the map is a ring
/// homomorphism. Generators left unset default to the same-named target
/// generator, when there is one.
#[derive(Clone, Debug)]
pub struct Substitution {
    source: Ctx,
    target: Ctx,
    images: Vec<Option<Monomial>>,
}

impl Substitution {
    pub fn new(source: &Ctx, target: &Ctx) -> Self {
        let images = source
            .names()
            .iter()
            .map(|n| target.index_of(n).map(|i| Monomial::var(target.len(), i)))
            .collect();
        Substitution { source: source.clone(), target: target.clone(), images }
    }

    /// Embedding by name; every source generator must exist in the target.
    pub fn embedding(source: &Ctx, target: &Ctx) -> Result<Self> {
        for n in source.names() {
            target.require(n)?;
        }
        Ok(Self::new(source, target))
    }

    /// Sets the image of `name`; the image must be a monomial with
    /// coefficient 1.
    pub fn set(mut self, name: &str, image: &LaurentPoly) -> Result<Self> {
        check_ctx(image.ctx(), &self.target)?;
        let idx = self.source.require(name)?;
        let (m, c) = image.as_monomial().ok_or_else(|| {
            Error::UnsupportedSubstitution(format!("image of `{name}` is not a monomial"))
        })?;
        if !num_traits::One::is_one(c) {
            return Err(Error::UnsupportedSubstitution(format!(
                "image of `{name}` has a coefficient other than 1"
            )));
        }
        self.images[idx] = Some(m.clone());
        Ok(self)
    }

    /// Like [`Substitution::set`], accepting a rational function that must
    /// reduce to a monomial.
    pub fn set_ratfn(self, name: &str, image: &RatFn) -> Result<Self> {
        let p = image.as_poly().ok_or_else(|| {
            Error::UnsupportedSubstitution(format!("image of `{name}` is not a monomial"))
        })?;
        self.set(name, &p)
    }

    pub fn set_monomial(mut self, name: &str, image: Monomial) -> Result<Self> {
        let idx = self.source.require(name)?;
        if image.len() != self.target.len() {
            return Err(Error::DimensionMismatch(image.len(), self.target.len()));
        }
        self.images[idx] = Some(image);
        Ok(self)
    }

    pub fn target(&self) -> &Ctx {
        &self.target
    }

    fn check_used(&self, used: impl Fn(usize) -> bool) -> Result<()> {
        for (i, img) in self.images.iter().enumerate() {
            if img.is_none() && used(i) {
                return Err(Error::UnsupportedSubstitution(format!(
                    "no image for generator `{}`",
                    self.source.names()[i]
                )));
            }
        }
        Ok(())
    }

    fn remap(&self, m: &Monomial) -> Monomial {
        let mut out = Monomial::one(self.target.len());
        for (&e, img) in m.exps().iter().zip(&self.images) {
            if e != 0 {
                if let Some(img) = img {
                    out = out.mul(&img.pow(e));
                }
            }
        }
        out
    }

    pub fn apply_poly(&self, p: &LaurentPoly) -> Result<LaurentPoly> {
        check_ctx(p.ctx(), &self.source)?;
        self.check_used(|i| p.uses_generator(i))?;
        Ok(p.map_monomials(&self.target, |m| self.remap(m)))
    }

    /// Applies the substitution. Fails with `DivisionByZero` when a
    /// denominator factor maps to zero.
    pub fn apply(&self, f: &RatFn) -> Result<RatFn> {
        check_ctx(f.ctx(), &self.source)?;
        self.check_used(|i| {
            f.numer().uses_generator(i) || f.den_factors().iter().any(|(d, _)| d.uses_generator(i))
        })?;
        f.map_monomials(&self.target, |m| self.remap(m))
    }
}

/// One-shot monomial substitution: `images` lists `(generator, monomial)`
/// pairs; unlisted generators keep their same-named target generator.
pub fn mono_subst(f: &RatFn, target: &Ctx, images: &[(&str, &RatFn)]) -> Result<RatFn> {
    let mut s = Substitution::new(f.ctx(), target);
    for (name, img) in images {
        s = s.set_ratfn(name, img)?;
    }
    s.apply(f)
}

impl RatFn {
    /// Re-expresses this value in a larger (or reordered) context.
    pub fn embed(&self, target: &Ctx) -> Result<RatFn> {
        Substitution::embedding(self.ctx(), target)?.apply(self)
    }
}
