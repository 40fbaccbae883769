#![allow(dead_code)]

use d21::scalar::{rat, AlphaPoly, RatFunc};
use d21::symalg::{Monomial, Parity};
use d21::{Scalar, Symbol};
use proptest::prelude::*;

pub fn scalar() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, -3i64..=3, 1i64..=3, 0usize..4, any::<bool>()).prop_map(|(a, b, d, shape, with_s)| {
        let p = AlphaPoly::from_coeffs(vec![rat(a, d), rat(b, 1)]);
        let r = match shape {
            0 => RatFunc::from_poly(AlphaPoly::constant(rat(a, d))),
            1 => RatFunc::from_poly(p),
            2 => RatFunc::new(p, AlphaPoly::from_coeffs(vec![rat(1, 1), rat(1, 1)])).unwrap(),
            _ => RatFunc::from_poly(AlphaPoly::from_coeffs(vec![rat(0, 1), rat(a, d), rat(b, 1)])),
        };
        let s = if with_s { RatFunc::from_poly(AlphaPoly::constant(rat(b, d))) } else { RatFunc::zero() };
        Scalar::from_parts(r, s)
    })
}

pub fn small_scalar() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, -2i64..=2).prop_filter("nonzero", |(a, b)| *a != 0 || *b != 0).prop_map(|(a, b)| {
        Scalar::from_poly(AlphaPoly::from_coeffs(vec![rat(a, 1), rat(b, 1)]))
    })
}

pub fn monomial(range: i32) -> impl Strategy<Value = Monomial> {
    (-range..=range, -range..=range, 0u8..16).prop_map(|(t, tau, mask)| Monomial::new(t, tau, mask))
}

pub fn monomial_of_parity(range: i32, p: Parity) -> impl Strategy<Value = Monomial> {
    monomial(range).prop_map(move |m| {
        if m.parity() == p {
            m
        } else {
            Monomial::new(m.t, m.tau, m.mask ^ 1)
        }
    })
}

pub fn symbol(range: i32) -> impl Strategy<Value = Symbol> {
    prop::collection::vec((monomial(range), scalar()), 0..5).prop_map(Symbol::from_terms)
}

pub fn homogeneous(range: i32) -> impl Strategy<Value = (Symbol, Parity)> {
    prop_oneof![Just(Parity::Even), Just(Parity::Odd)].prop_flat_map(move |p| {
        prop::collection::vec((monomial_of_parity(range, p), small_scalar()), 1..4)
            .prop_map(move |ts| (Symbol::from_terms(ts), p))
    })
}

pub fn sign(a: Parity, b: Parity) -> Scalar {
    Scalar::from_int(a.koszul(b))
}

pub type Homog = (Symbol, Parity);

pub fn check_antisymmetry((a, pa): Homog, (b, pb): Homog) -> Result<(), TestCaseError> {
    let lhs = a.poisson(&b);
    let rhs = -&b.poisson(&a).scale(&sign(pa, pb));
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

pub fn check_jacobi((a, pa): Homog, (b, pb): Homog, (c, _): Homog) -> Result<(), TestCaseError> {
    let lhs = a.poisson(&b.poisson(&c));
    let rhs = &a.poisson(&b).poisson(&c) + &b.poisson(&a.poisson(&c)).scale(&sign(pa, pb));
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

pub fn check_leibniz((a, pa): Homog, (b, pb): Homog, (c, _): Homog) -> Result<(), TestCaseError> {
    let lhs = a.poisson(&b.mul(&c));
    let rhs = &a.poisson(&b).mul(&c) + &b.mul(&a.poisson(&c)).scale(&sign(pa, pb));
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

pub fn check_round_trip(s: Symbol) -> Result<(), TestCaseError> {
    let text = s.to_string();
    let back: Symbol = text.parse().map_err(|e| TestCaseError::fail(format!("{text}: {e}")))?;
    prop_assert_eq!(back, s);
    Ok(())
}

/// A weight-zero even 0-cochain of block `(k, 0, P)` with random coefficients.
pub fn zero_cochain() -> impl Strategy<Value = (i32, Vec<i64>)> {
    (-2i32..=2).prop_flat_map(|k2| (Just(2 * k2), prop::collection::vec(-3i64..=3, 4)))
}

pub fn check_dd((k, coefs): (i32, Vec<i64>)) -> Result<(), TestCaseError> {
    use d21::cohomology::{d0, d1, enumerate_c0, BlockSpec, Complex};
    use d21::Target;
    let block = BlockSpec::new(k, 0, Target::P);
    let mut m = Symbol::zero();
    for (b, c) in enumerate_c0(&block).iter().zip(&coefs) {
        m = &m + &b.scale(&Scalar::from_int(*c));
    }
    let cx = Complex::classical();
    let c = d0(cx, &m, &block).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert!(d1(cx, &c).map_err(|e| TestCaseError::fail(e.to_string()))?.is_zero());
    Ok(())
}

/// Differential-operator symbols: no negative tau powers, small h powers.
pub fn plus_symbol() -> impl Strategy<Value = Symbol> {
    prop::collection::vec(((-2i32..=2, 0i32..=2, 0u8..16, 0u32..2), small_scalar()), 1..3).prop_map(|ts| {
        Symbol::from_terms(ts.into_iter().map(|((t, tau, mask, h), c)| (Monomial::new(t, tau, mask).with_h(h), c)))
    })
}

pub fn check_moyal_assoc(a: Symbol, b: Symbol, c: Symbol) -> Result<(), TestCaseError> {
    use d21::quantize::moyal_mul;
    let f = |e: d21::Error| TestCaseError::fail(e.to_string());
    let lhs = moyal_mul(&moyal_mul(&a, &b).map_err(f)?, &c).map_err(f)?;
    let rhs = moyal_mul(&a, &moyal_mul(&b, &c).map_err(f)?).map_err(f)?;
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

pub fn plus_homogeneous() -> impl Strategy<Value = Symbol> {
    prop_oneof![Just(Parity::Even), Just(Parity::Odd)].prop_flat_map(|p| {
        (-2i32..=2, 0i32..=2, 0u8..16, small_scalar()).prop_map(move |(t, tau, mask, c)| {
            let m = Monomial::new(t, tau, mask);
            let m = if m.parity() == p { m } else { Monomial::new(t, tau, mask ^ 1) };
            Symbol::term(c, m)
        })
    })
}

pub fn check_contraction(a: Symbol, b: Symbol) -> Result<(), TestCaseError> {
    let ok = d21::quantize::check_contraction(&a, &b).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert!(ok, "contraction fails for {} and {}", a, b);
    Ok(())
}
