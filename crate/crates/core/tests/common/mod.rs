//! Strategies and property bodies shared by the property tests and the
//! acceptance runner.

#![allow(dead_code)]

use cgybe::arith::{parse_coeff, BigRational, Ctx, LaurentPoly, Monomial, RatFn, RingCtx, Substitution};
use cgybe::Error;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

pub const SEED: [u8; 32] = *b"cgybe kernel soundness seed 0001";

pub fn ctx() -> Ctx {
    RingCtx::new(["x", "y", "z"]).unwrap()
}

pub fn runner(cases: u32) -> TestRunner {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &SEED))
}

pub fn config(cases: u32) -> Config {
    Config { cases, failure_persistence: None, rng_algorithm: RngAlgorithm::ChaCha, ..Config::default() }
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn monomial() -> impl Strategy<Value = Monomial> {
    prop::array::uniform3(-2i32..=3).prop_map(|e| Monomial::from_exps(&e))
}

pub fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((monomial(), -4i64..=4, 1i64..=3), 0..5)
        .prop_map(|ts| LaurentPoly::from_terms(&ctx(), ts.into_iter().map(|(m, n, d)| (m, rat(n, d)))))
}

pub fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

pub fn ratfn() -> impl Strategy<Value = RatFn> {
    (poly(), nonzero_poly()).prop_map(|(n, d)| RatFn::from_fraction(n, d).unwrap())
}

pub fn point() -> impl Strategy<Value = Vec<BigRational>> {
    prop::collection::vec((-9i64..=9, 1i64..=7).prop_map(|(n, d)| rat(n, d)), 3)
}

fn eq(a: &RatFn, b: &RatFn) -> bool {
    a.ring_eq(b).unwrap()
}

pub fn ring_axioms((a, b, c): (RatFn, RatFn, RatFn)) -> Result<(), TestCaseError> {
    let k = ctx();
    let (zero, one) = (RatFn::zero(&k), RatFn::one(&k));
    prop_assert!(eq(&(&(&a + &b) + &c), &(&a + &(&b + &c))));
    prop_assert!(eq(&(&(&a * &b) * &c), &(&a * &(&b * &c))));
    prop_assert!(eq(&(&a + &b), &(&b + &a)));
    prop_assert!(eq(&(&a * &b), &(&b * &a)));
    prop_assert!(eq(&(&a * &(&b + &c)), &(&(&a * &b) + &(&a * &c))));
    prop_assert!(eq(&(&a + &zero), &a));
    prop_assert!(eq(&(&a * &one), &a));
    let a_copy = a.clone();
    prop_assert!((&a - &a_copy).is_zero());
    prop_assert!((&a * &zero).is_zero());
    if !a.is_zero() {
        prop_assert!(eq(&(&a * &a.inv().unwrap()), &one));
        prop_assert!(eq(&(&(&b / &a) * &a), &b));
    } else {
        prop_assert_eq!(a.inv().unwrap_err(), Error::DivisionByZero);
    }
    Ok(())
}

/// Equality is a congruence: rewriting a value as an equal but differently
/// stored fraction changes nothing downstream, and agrees with evaluation.
pub fn congruence((a, b, u, p): (RatFn, RatFn, LaurentPoly, Vec<BigRational>)) -> Result<(), TestCaseError> {
    let a2 = RatFn::from_fraction(a.numer() * &u, &a.denom() * &u).unwrap();
    prop_assert!(eq(&a, &a2));
    prop_assert!(eq(&a2, &a));
    prop_assert!(eq(&(&a + &b), &(&a2 + &b)));
    prop_assert!(eq(&(&a * &b), &(&b * &a2)));
    prop_assert!(eq(&(&a - &b), &(&a2 - &b)));
    prop_assert_eq!(eq(&a, &b), (&a - &b).is_zero());
    if let (Ok(x), Ok(y)) = (a.eval(&p), b.eval(&p)) {
        if eq(&a, &b) {
            prop_assert_eq!(x, y);
        }
    }
    if let (Ok(x), Ok(y)) = (a.eval(&p), a2.eval(&p)) {
        prop_assert_eq!(x, y);
    }
    Ok(())
}

/// Monomial substitutions are ring homomorphisms and commute with evaluation.
pub fn substitution_homomorphism(
    (a, b, images, p): (RatFn, RatFn, [Monomial; 3], Vec<BigRational>),
) -> Result<(), TestCaseError> {
    let k = ctx();
    let mut phi = Substitution::new(&k, &k);
    for (name, m) in ["x", "y", "z"].iter().zip(&images) {
        phi = phi.set(name, &LaurentPoly::monomial(&k, m.clone(), rat(1, 1))).unwrap();
    }
    let (fa, fb) = match (phi.apply(&a), phi.apply(&b)) {
        (Ok(fa), Ok(fb)) => (fa, fb),
        (Err(Error::DivisionByZero), _) | (_, Err(Error::DivisionByZero)) => return Ok(()),
        (Err(e), _) | (_, Err(e)) => return Err(TestCaseError::fail(e.to_string())),
    };
    prop_assert!(eq(&phi.apply(&(&a + &b)).unwrap(), &(&fa + &fb)));
    prop_assert!(eq(&phi.apply(&(&a * &b)).unwrap(), &(&fa * &fb)));
    prop_assert!(eq(&phi.apply(&(&a - &b)).unwrap(), &(&fa - &fb)));
    prop_assert!(eq(&phi.apply(&RatFn::one(&k)).unwrap(), &RatFn::one(&k)));
    // phi(f)(p) = f(phi(p)), where phi(p) evaluates each image at p.
    let image_point: Option<Vec<BigRational>> = images
        .iter()
        .map(|m| LaurentPoly::monomial(&k, m.clone(), rat(1, 1)).eval(&p).ok())
        .collect();
    if let Some(q) = image_point {
        if let (Ok(x), Ok(y)) = (fa.eval(&p), a.eval(&q)) {
            prop_assert_eq!(x, y);
        }
    }
    Ok(())
}

pub fn parser_round_trip(a: RatFn) -> Result<(), TestCaseError> {
    let k = ctx();
    let printed = a.to_string();
    let back = parse_coeff(&printed, &k).map_err(|e| TestCaseError::fail(format!("{printed}: {e}")))?;
    prop_assert!(eq(&back, &a), "{} reparsed as {}", printed, back);
    let again = parse_coeff(&back.to_string(), &k).unwrap();
    prop_assert!(eq(&again, &a));
    Ok(())
}

pub fn ring_triple() -> impl Strategy<Value = (RatFn, RatFn, RatFn)> {
    (ratfn(), ratfn(), ratfn())
}

pub fn congruence_input() -> impl Strategy<Value = (RatFn, RatFn, LaurentPoly, Vec<BigRational>)> {
    (ratfn(), ratfn(), nonzero_poly(), point())
}

pub fn substitution_input() -> impl Strategy<Value = (RatFn, RatFn, [Monomial; 3], Vec<BigRational>)> {
    (ratfn(), ratfn(), prop::array::uniform3(prop::array::uniform3(-2i32..=2).prop_map(|e| Monomial::from_exps(&e))), point())
}
