//! The Poisson superalgebra `P(4)` of pseudodifferential symbols on `S^{1|2}`,
//! extended by the inert even exponents `beta` and `h`.
//!
//! Grassmann generators are ordered `xi1 < xi2 < eta1 < eta2`; a stored mask
//! stands for the product of its generators in that order. Derivatives with
//! respect to Grassmann generators are left derivatives.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{rat, Rat, Scalar};

pub const XI1: u8 = 1;
pub const XI2: u8 = 2;
pub const ETA1: u8 = 4;
pub const ETA2: u8 = 8;
pub const TOP_MASK: u8 = 15;

/// Generator names, in canonical order.
pub const GRASSMANN_NAMES: [&str; 4] = ["xi1", "xi2", "eta1", "eta2"];

/// A monomial `t^t * tau^tau * (grassmann word) * beta^beta * h^h`.
///
/// Field order fixes the canonical term order used for printing.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial {
    pub beta: u32,
    pub h: u32,
    pub t: i32,
    pub tau: i32,
    pub mask: u8,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { beta: 0, h: 0, t: 0, tau: 0, mask: 0 };

    pub fn new(t: i32, tau: i32, mask: u8) -> Self {
        Monomial { t, tau, mask, ..Self::ONE }
    }

    pub fn with_h(self, h: u32) -> Self {
        Monomial { h, ..self }
    }

    pub fn with_beta(self, beta: u32) -> Self {
        Monomial { beta, ..self }
    }

    pub fn grassmann_degree(&self) -> i32 {
        self.mask.count_ones() as i32
    }

    pub fn parity(&self) -> Parity {
        if self.mask.count_ones().is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// `deg t = deg tau = deg xi_i = deg eta_i = 1`.
    pub fn k_degree(&self) -> i32 {
        self.t + self.tau + self.grassmann_degree()
    }

    /// `deg t = 1`, `deg tau = -1`, Grassmann generators 0.
    pub fn n_degree(&self) -> i32 {
        self.t - self.tau
    }

    /// `xi_i` has weight `e_i`, `eta_i` has weight `-e_i`.
    pub fn weight(&self) -> (i32, i32) {
        let bit = |b: u8| (self.mask & b != 0) as i32;
        (bit(XI1) - bit(ETA1), bit(XI2) - bit(ETA2))
    }

    fn is_unit(&self) -> bool {
        *self == Self::ONE
    }
}

/// Sign and mask of the product of two ordered Grassmann words, or `None`
/// when a generator repeats.
pub fn grassmann_mul(m1: u8, m2: u8) -> Option<(i32, u8)> {
    if m1 & m2 != 0 {
        return None;
    }
    let mut swaps = 0;
    for i in 0..4 {
        if m1 & (1 << i) != 0 {
            swaps += (m2 & ((1u8 << i) - 1)).count_ones();
        }
    }
    Some((if swaps % 2 == 0 { 1 } else { -1 }, m1 | m2))
}

/// Left derivative of an ordered Grassmann word by the generator with bit `bit`.
pub fn grassmann_derive(mask: u8, bit: u8) -> Option<(i32, u8)> {
    if mask & bit == 0 {
        return None;
    }
    let before = (mask & (bit - 1)).count_ones();
    Some((if before.is_multiple_of(2) { 1 } else { -1 }, mask & !bit))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn bit(self) -> u32 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    /// `(-1)^(p q)`.
    pub fn koszul(self, other: Parity) -> i64 {
        if self == Parity::Odd && other == Parity::Odd {
            -1
        } else {
            1
        }
    }
}

/// Parity of a symbol: definite, or mixed when both parts are present.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SymbolParity {
    Even,
    Odd,
    Mixed,
}

impl SymbolParity {
    pub fn definite(self) -> Result<Parity> {
        match self {
            SymbolParity::Even => Ok(Parity::Even),
            SymbolParity::Odd => Ok(Parity::Odd),
            SymbolParity::Mixed => Err(Error::MixedParity),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Var {
    T,
    Tau,
    Xi1,
    Xi2,
    Eta1,
    Eta2,
}

impl Var {
    pub const ALL: [Var; 6] = [Var::T, Var::Tau, Var::Xi1, Var::Xi2, Var::Eta1, Var::Eta2];

    pub fn grassmann_bit(self) -> Option<u8> {
        match self {
            Var::T | Var::Tau => None,
            Var::Xi1 => Some(XI1),
            Var::Xi2 => Some(XI2),
            Var::Eta1 => Some(ETA1),
            Var::Eta2 => Some(ETA2),
        }
    }

    pub fn parity(self) -> Parity {
        if self.grassmann_bit().is_some() {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

/// Subalgebras of `P(4)` that serve as coefficient modules.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Target {
    #[serde(rename = "P")]
    P,
    #[serde(rename = "P+")]
    Pplus,
    #[serde(rename = "K4")]
    K4,
    #[serde(rename = "K4'")]
    K4prime,
}

impl Target {
    pub fn name(self) -> &'static str {
        match self {
            Target::P => "P",
            Target::Pplus => "P+",
            Target::K4 => "K4",
            Target::K4prime => "K4'",
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Target {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "P" => Ok(Target::P),
            "P+" | "Pplus" => Ok(Target::Pplus),
            "K4" | "K" => Ok(Target::K4),
            "K4'" | "K4prime" | "K'" => Ok(Target::K4prime),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

/// The monomial `t^-1 tau^-1 xi1 xi2 eta1 eta2` spanning `K(4)/K'(4)`.
pub fn k4_quotient_monomial() -> Monomial {
    Monomial::new(-1, -1, TOP_MASK)
}

/// Common value of a per-monomial grading, `None` when it is not homogeneous.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Gradings {
    pub k: Option<i32>,
    pub n: Option<i32>,
    pub weight: Option<(i32, i32)>,
}

/// A finite sum of monomials with scalar coefficients; no zero coefficient
/// is ever stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Symbol {
    terms: BTreeMap<Monomial, Scalar>,
}

impl Symbol {
    pub fn zero() -> Self {
        Symbol { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn term(c: Scalar, m: Monomial) -> Self {
        let mut s = Self::zero();
        s.add_term(m, c);
        s
    }

    /// `c * t^t * tau^tau * word`, `word` given as a mask in canonical order.
    pub fn mono(c: impl Into<Scalar>, t: i32, tau: i32, mask: u8) -> Self {
        Self::term(c.into(), Monomial::new(t, tau, mask))
    }

    pub fn generator(v: Var) -> Self {
        match v {
            Var::T => Self::mono(1, 1, 0, 0),
            Var::Tau => Self::mono(1, 0, 1, 0),
            _ => Self::mono(1, 0, 0, v.grassmann_bit().unwrap()),
        }
    }

    pub fn beta() -> Self {
        Self::term(Scalar::one(), Monomial::ONE.with_beta(1))
    }

    pub fn hbar() -> Self {
        Self::term(Scalar::one(), Monomial::ONE.with_h(1))
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(iter: I) -> Self {
        let mut s = Self::zero();
        for (m, c) in iter {
            s.add_term(m, c);
        }
        s
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get() + &c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
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

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// The scalar value of a symbol with only a constant term.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Scalar) -> Symbol {
        if c.is_zero() {
            return Symbol::zero();
        }
        Symbol { terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect() }
    }

    pub fn map_monomials(&self, f: impl Fn(&Monomial) -> Option<Monomial>) -> Symbol {
        Symbol::from_terms(self.terms.iter().filter_map(|(m, c)| f(m).map(|m2| (m2, c.clone()))))
    }

    pub fn filter(&self, f: impl Fn(&Monomial) -> bool) -> Symbol {
        Symbol { terms: self.terms.iter().filter(|(m, _)| f(m)).map(|(m, c)| (*m, c.clone())).collect() }
    }

    /// Multiply by `beta^k`.
    pub fn times_beta(&self, k: u32) -> Symbol {
        self.map_monomials(|m| Some(m.with_beta(m.beta + k)))
    }

    /// The coefficient of `beta^k`, as a symbol free of `beta`.
    pub fn beta_part(&self, k: u32) -> Symbol {
        self.map_monomials(|m| (m.beta == k).then_some(m.with_beta(0)))
    }

    pub fn max_beta(&self) -> u32 {
        self.terms.keys().map(|m| m.beta).max().unwrap_or(0)
    }

    pub fn specialize(&self, alpha: &Rat) -> Result<Symbol> {
        let mut out = Symbol::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, c.specialize(alpha)?);
        }
        Ok(out)
    }

    pub fn even_part(&self) -> Symbol {
        self.filter(|m| m.parity() == Parity::Even)
    }

    pub fn odd_part(&self) -> Symbol {
        self.filter(|m| m.parity() == Parity::Odd)
    }

    pub fn parity(&self) -> SymbolParity {
        let mut even = false;
        let mut odd = false;
        for m in self.terms.keys() {
            match m.parity() {
                Parity::Even => even = true,
                Parity::Odd => odd = true,
            }
        }
        match (even, odd) {
            (true, true) => SymbolParity::Mixed,
            (false, true) => SymbolParity::Odd,
            _ => SymbolParity::Even,
        }
    }

    pub fn gradings(&self) -> Gradings {
        fn common<T: PartialEq + Copy>(mut it: impl Iterator<Item = T>) -> Option<T> {
            let first = it.next()?;
            it.all(|x| x == first).then_some(first)
        }
        Gradings {
            k: common(self.terms.keys().map(Monomial::k_degree)),
            n: common(self.terms.keys().map(Monomial::n_degree)),
            weight: common(self.terms.keys().map(Monomial::weight)),
        }
    }

    pub fn is_member(&self, target: Target) -> bool {
        let q = k4_quotient_monomial();
        self.terms.keys().all(|m| match target {
            Target::P => true,
            Target::Pplus => m.tau >= 0,
            Target::K4 => m.k_degree() == 2,
            Target::K4prime => m.k_degree() == 2 && Monomial { beta: 0, h: 0, ..*m } != q,
        })
    }

    /// Supercommutative product.
    pub fn mul(&self, other: &Symbol) -> Symbol {
        let mut out = Symbol::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some((sign, mask)) = grassmann_mul(m1.mask, m2.mask) {
                    let m = Monomial {
                        beta: m1.beta + m2.beta,
                        h: m1.h + m2.h,
                        t: m1.t + m2.t,
                        tau: m1.tau + m2.tau,
                        mask,
                    };
                    let c = c1 * c2;
                    out.add_term(m, if sign < 0 { -c } else { c });
                }
            }
        }
        out
    }

    pub fn derive(&self, v: Var) -> Symbol {
        let mut out = Symbol::zero();
        for (m, c) in &self.terms {
            match v {
                Var::T => {
                    if m.t != 0 {
                        out.add_term(Monomial { t: m.t - 1, ..*m }, c * &Scalar::from_int(m.t as i64));
                    }
                }
                Var::Tau => {
                    if m.tau != 0 {
                        out.add_term(Monomial { tau: m.tau - 1, ..*m }, c * &Scalar::from_int(m.tau as i64));
                    }
                }
                _ => {
                    if let Some((sign, mask)) = grassmann_derive(m.mask, v.grassmann_bit().unwrap()) {
                        out.add_term(Monomial { mask, ..*m }, if sign < 0 { -c } else { c.clone() });
                    }
                }
            }
        }
        out
    }

    /// The Poisson superbracket; inhomogeneous arguments are split by parity.
    pub fn poisson(&self, other: &Symbol) -> Symbol {
        let mut out = Symbol::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                poisson_monomials(m1, m2, &(c1 * c2), &mut out);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Symbol {
        let mut acc = Symbol::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }
}

fn poisson_monomials(m1: &Monomial, m2: &Monomial, c: &Scalar, out: &mut Symbol) {
    let beta = m1.beta + m2.beta;
    let h = m1.h + m2.h;
    // even part: d_tau A d_t B - d_t A d_tau B
    let w = (m1.tau as i64) * (m2.t as i64) - (m1.t as i64) * (m2.tau as i64);
    if w != 0 {
        if let Some((sign, mask)) = grassmann_mul(m1.mask, m2.mask) {
            let m = Monomial { beta, h, t: m1.t + m2.t - 1, tau: m1.tau + m2.tau - 1, mask };
            out.add_term(m, c * &Scalar::from_int(w * sign as i64));
        }
    }
    // odd part: (-1)^(p(A)+1) sum_i (d_xi A d_eta B + d_eta A d_xi B)
    let outer = if m1.parity() == Parity::Odd { 1 } else { -1 };
    for (x, e) in [(XI1, ETA1), (XI2, ETA2)] {
        for (da, db) in [(x, e), (e, x)] {
            let (Some((s1, a)), Some((s2, b))) = (grassmann_derive(m1.mask, da), grassmann_derive(m2.mask, db)) else {
                continue;
            };
            if let Some((s3, mask)) = grassmann_mul(a, b) {
                let m = Monomial { beta, h, t: m1.t + m2.t, tau: m1.tau + m2.tau, mask };
                out.add_term(m, c * &Scalar::from_int((outer * s1 * s2 * s3) as i64));
            }
        }
    }
}

impl<'a> Add<&'a Symbol> for &'a Symbol {
    type Output = Symbol;
    fn add(self, rhs: &Symbol) -> Symbol {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Symbol> for &'a Symbol {
    type Output = Symbol;
    fn sub(self, rhs: &Symbol) -> Symbol {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Neg for &Symbol {
    type Output = Symbol;
    fn neg(self) -> Symbol {
        Symbol { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Add for Symbol {
    type Output = Symbol;
    fn add(self, rhs: Symbol) -> Symbol {
        &self + &rhs
    }
}

impl Sub for Symbol {
    type Output = Symbol;
    fn sub(self, rhs: Symbol) -> Symbol {
        &self - &rhs
    }
}

impl Neg for Symbol {
    type Output = Symbol;
    fn neg(self) -> Symbol {
        -&self
    }
}

impl<'a> Mul<&'a Symbol> for &'a Symbol {
    type Output = Symbol;
    fn mul(self, rhs: &Symbol) -> Symbol {
        Symbol::mul(self, rhs)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        let pw = |name: &str, e: i64| match e {
            0 => None,
            1 => Some(name.to_string()),
            _ => Some(format!("{name}^{e}")),
        };
        parts.extend(pw("t", self.t as i64));
        parts.extend(pw("tau", self.tau as i64));
        for (i, name) in GRASSMANN_NAMES.iter().enumerate() {
            if self.mask & (1 << i) != 0 {
                parts.push(name.to_string());
            }
        }
        parts.extend(pw("beta", self.beta as i64));
        parts.extend(pw("h", self.h as i64));
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

pub(crate) fn render_term(m: &Monomial, c: &Scalar) -> String {
    if m.is_unit() {
        return c.to_string();
    }
    if c.is_one() {
        return m.to_string();
    }
    if (-c).is_one() {
        return format!("-{m}");
    }
    if c.needs_parens() {
        format!("({c})*{m}")
    } else {
        format!("{c}*{m}")
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let t = render_term(m, c);
            if i == 0 {
                f.write_str(&t)?;
            } else if let Some(rest) = t.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {t}")?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for Symbol {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        crate::parse::parse_symbol(s)
    }
}

/// `L_n = 1/2 t^(n+1) tau^(1-n)`, spanning a centerless Virasoro algebra.
pub fn virasoro(n: i32) -> Symbol {
    Symbol::mono(Scalar::from_rat(rat(1, 2)), n + 1, 1 - n, 0)
}

/// A super vector field `sum_v X^v d_v`, components indexed by [`Var`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuperVectorField {
    parity: Parity,
    components: [Symbol; 6],
}

impl SuperVectorField {
    /// Build a field from its components, inferring its overall parity.
    pub fn new(components: [Symbol; 6]) -> Result<Self> {
        let mut parity: Option<Parity> = None;
        for v in Var::ALL {
            let comp = &components[v.index()];
            if comp.is_zero() {
                continue;
            }
            let cp = comp.parity().definite()?;
            let fp = if v.parity() == Parity::Odd { cp.flip() } else { cp };
            match parity {
                None => parity = Some(fp),
                Some(p) if p != fp => return Err(Error::MixedParity),
                _ => {}
            }
        }
        Ok(SuperVectorField { parity: parity.unwrap_or(Parity::Even), components })
    }

    pub fn zero() -> Self {
        SuperVectorField { parity: Parity::Even, components: Default::default() }
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn component(&self, v: Var) -> &Symbol {
        &self.components[v.index()]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Symbol::is_zero)
    }

    pub fn apply(&self, f: &Symbol) -> Symbol {
        let mut out = Symbol::zero();
        for v in Var::ALL {
            let c = &self.components[v.index()];
            if !c.is_zero() {
                out = &out + &c.mul(&f.derive(v));
            }
        }
        out
    }
}

/// `t d_t + tau d_tau + sum xi_i d_xi_i + eta_i d_eta_i`.
pub fn euler_field() -> SuperVectorField {
    SuperVectorField::new(Var::ALL.map(Symbol::generator)).expect("euler field is even")
}

/// `H_A = d_tau A d_t - d_t A d_tau - (-1)^p(A) sum (d_xi_i A d_eta_i + d_eta_i A d_xi_i)`.
pub fn hamiltonian_field(a: &Symbol) -> Result<SuperVectorField> {
    let p = a.parity().definite()?;
    let sign = Scalar::from_int(if p == Parity::Odd { 1 } else { -1 });
    let comps = [
        a.derive(Var::Tau),
        -a.derive(Var::T),
        a.derive(Var::Eta1).scale(&sign),
        a.derive(Var::Eta2).scale(&sign),
        a.derive(Var::Xi1).scale(&sign),
        a.derive(Var::Xi2).scale(&sign),
    ];
    SuperVectorField::new(comps)
}

/// Supercommutator `[X, Y] = X Y - (-1)^(p(X) p(Y)) Y X`.
pub fn vf_commutator(x: &SuperVectorField, y: &SuperVectorField) -> Result<SuperVectorField> {
    let sign = Scalar::from_int(x.parity.koszul(y.parity));
    let comps = Var::ALL.map(|v| {
        let a = x.apply(y.component(v));
        let b = y.apply(x.component(v)).scale(&sign);
        &a - &b
    });
    SuperVectorField::new(comps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn al() -> Scalar {
        Scalar::alpha()
    }

    fn f1() -> Symbol {
        &Symbol::mono(1, 0, 2, 0) + &Symbol::mono(Scalar::from_int(-2) * al(), -2, 0, TOP_MASK)
    }

    #[test]
    fn product_signs() {
        let x1 = Symbol::generator(Var::Xi1);
        let x2 = Symbol::generator(Var::Xi2);
        assert_eq!(x2.mul(&x1), Symbol::mono(-1, 0, 0, XI1 | XI2));
        assert!(x1.mul(&x1).is_zero());
        let a = Symbol::mono(1, 1, 0, ETA1);
        let b = Symbol::mono(1, 1, 0, ETA2);
        assert_eq!(a.mul(&b), Symbol::mono(1, 2, 0, ETA1 | ETA2));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(Symbol::mono(1, -1, 0, 0).derive(Var::T), Symbol::mono(-1, -2, 0, 0));
        assert_eq!(Symbol::mono(1, 0, 0, XI1 | XI2).derive(Var::Xi2), Symbol::mono(-1, 0, 0, XI1));
        assert_eq!(Symbol::mono(1, 0, 0, ETA1 | ETA2).derive(Var::Eta1), Symbol::mono(1, 0, 0, ETA2));
    }

    #[test]
    fn poisson_examples() {
        let t2 = Symbol::mono(1, 2, 0, 0);
        assert_eq!(t2.poisson(&f1()), Symbol::mono(-4, 1, 1, 0));
        let e = Symbol::mono(1, 0, 0, ETA1 | ETA2);
        let x = Symbol::mono(1, 0, 0, XI1 | XI2);
        let h2 = &Symbol::mono(1, 0, 0, XI1 | ETA1) + &Symbol::mono(1, 0, 0, XI2 | ETA2);
        assert_eq!(e.poisson(&x), h2);
        assert!(f1().poisson(&Symbol::one()).is_zero());
        for n in -3..=3 {
            for m in -3..=3 {
                let lhs = virasoro(n).poisson(&virasoro(m));
                assert_eq!(lhs, virasoro(n + m).scale(&Scalar::from_int((m - n) as i64)));
            }
        }
    }

    #[test]
    fn parity_examples() {
        assert_eq!(Symbol::mono(1, 1, 1, 0).parity(), SymbolParity::Even);
        let d1 = &Symbol::mono(1, 0, 1, XI1) + &Symbol::mono(al(), -1, 0, XI1 | XI2 | ETA2);
        assert_eq!(d1.parity(), SymbolParity::Odd);
        let mixed = &Symbol::mono(1, 1, 0, 0) + &Symbol::mono(1, 0, 0, XI1);
        assert_eq!(mixed.parity(), SymbolParity::Mixed);
    }

    #[test]
    fn grading_examples() {
        let q = Symbol::term(Scalar::one(), k4_quotient_monomial());
        assert_eq!(q.gradings(), Gradings { k: Some(2), n: Some(0), weight: Some((0, 0)) });
        assert_eq!(Symbol::mono(1, 2, 0, 0).gradings(), Gradings { k: Some(2), n: Some(2), weight: Some((0, 0)) });
        let s = &Symbol::mono(1, 1, 0, 0) + &Symbol::mono(1, 2, 0, 0);
        assert_eq!(s.gradings(), Gradings { k: None, n: None, weight: Some((0, 0)) });
        // beta and h are inert for all gradings
        let bh = Symbol::term(Scalar::one(), Monomial::new(1, 1, 0).with_beta(2).with_h(1));
        assert_eq!(bh.gradings().k, Some(2));
    }

    #[test]
    fn membership_examples() {
        let f = f1();
        assert!(f.is_member(Target::Pplus) && f.is_member(Target::K4) && f.is_member(Target::K4prime));
        let q = Symbol::term(Scalar::one(), k4_quotient_monomial());
        assert!(q.is_member(Target::K4));
        assert!(!q.is_member(Target::K4prime));
        assert!(!Symbol::mono(1, 1, -1, 0).is_member(Target::Pplus));
        assert!(Symbol::mono(1, 1, -1, 0).is_member(Target::P));
    }

    #[test]
    fn hamiltonian_examples() {
        let h = hamiltonian_field(&Symbol::mono(1, 1, 1, 0)).unwrap();
        assert_eq!(h.component(Var::T), &Symbol::mono(1, 1, 0, 0));
        assert_eq!(h.component(Var::Tau), &Symbol::mono(-1, 0, 1, 0));
        assert!(hamiltonian_field(&Symbol::one()).unwrap().is_zero());
        let hx = hamiltonian_field(&Symbol::generator(Var::Xi1)).unwrap();
        assert_eq!(hx.component(Var::Eta1), &Symbol::one());
        for v in [Var::T, Var::Tau, Var::Xi1, Var::Xi2, Var::Eta2] {
            assert!(hx.component(v).is_zero());
        }
        assert_eq!(hx.parity(), Parity::Odd);
        let mixed = &Symbol::mono(1, 1, 0, 0) + &Symbol::mono(1, 0, 0, XI1);
        assert_eq!(hamiltonian_field(&mixed), Err(Error::MixedParity));
    }

    #[test]
    fn euler_commutator_examples() {
        let e = euler_field();
        assert!(vf_commutator(&e, &e).unwrap().is_zero());
        let h2 = hamiltonian_field(&Symbol::mono(1, 2, 0, 0)).unwrap();
        assert!(vf_commutator(&h2, &e).unwrap().is_zero());
        let h3 = hamiltonian_field(&Symbol::mono(1, 3, 0, 0)).unwrap();
        let c = vf_commutator(&h3, &e).unwrap();
        // H_{t^3} = -3t^2 d_tau has degree 1 under the Euler field
        assert_eq!(c.component(Var::Tau), &Symbol::mono(3, 2, 0, 0));
    }

    #[test]
    fn rendering() {
        assert_eq!(f1().to_string(), "-2*alpha*t^-2*xi1*xi2*eta1*eta2 + tau^2");
        let h = &Symbol::mono(1, 1, 1, 0) + &Symbol::term((al() + Scalar::one()) / Scalar::from_int(2), Monomial::ONE.with_h(1));
        assert_eq!(h.to_string(), "t*tau + (alpha + 1)/2*h");
        let n = &Symbol::mono(-1, 0, 0, XI1 | ETA1) + &Symbol::hbar();
        assert_eq!(n.to_string(), "-xi1*eta1 + h");
        let p = Symbol::mono(al() * al() - Scalar::one(), 1, 0, 0);
        assert_eq!(p.to_string(), "(alpha^2 - 1)*t");
    }
}
