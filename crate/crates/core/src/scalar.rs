//! Exact coefficients: rationals, polynomials and rational functions in the
//! formal parameter `alpha`, and the quadratic extension by `s` with `s^2 = -2`.
//!
//! Every value is kept in a canonical form (reduced fractions, monic
//! denominators), so two scalars are equal exactly when their representations
//! are identical.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Polynomial in `alpha` with rational coefficients, dense and trimmed:
/// `coeffs[i]` multiplies `alpha^i` and the last entry is never zero.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct AlphaPoly {
    coeffs: Vec<Rat>,
}

impl AlphaPoly {
    pub fn zero() -> Self {
        AlphaPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate `alpha`.
    pub fn alpha() -> Self {
        Self::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    pub fn monomial(c: Rat, degree: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        AlphaPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        AlphaPoly { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lc = self.leading();
        if lc.is_one() {
            return self.clone();
        }
        self.scale(&lc.recip())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &AlphaPoly) -> (AlphaPoly, AlphaPoly) {
        let dd = d.degree().expect("polynomial division by zero");
        let Some(nd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if nd < dd {
            return (Self::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); nd - dd + 1];
        let lc_inv = d.leading().recip();
        for i in (0..=nd - dd).rev() {
            let c = &rem[i + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Division known to be exact.
    pub fn exact_div(&self, d: &AlphaPoly) -> AlphaPoly {
        if d.is_constant() {
            return self.scale(&d.leading().recip());
        }
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &AlphaPoly) -> AlphaPoly {
        if self.is_constant() && !self.is_zero() || other.is_constant() && !other.is_zero() {
            return Self::one();
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    fn integer_terms(coeffs: &[BigInt]) -> Vec<String> {
        let mut out = Vec::new();
        for (k, c) in coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let var = match k {
                0 => String::new(),
                1 => "alpha".to_string(),
                _ => format!("alpha^{k}"),
            };
            let text = if var.is_empty() {
                c.to_string()
            } else if c.is_one() {
                var
            } else if *c == -BigInt::one() {
                format!("-{var}")
            } else {
                format!("{c}*{var}")
            };
            out.push(text);
        }
        out
    }
}

fn join_terms(terms: &[String]) -> String {
    let mut s = String::new();
    for (i, t) in terms.iter().enumerate() {
        if i == 0 {
            s.push_str(t);
        } else if let Some(rest) = t.strip_prefix('-') {
            s.push_str(" - ");
            s.push_str(rest);
        } else {
            s.push_str(" + ");
            s.push_str(t);
        }
    }
    s
}

impl fmt::Display for AlphaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let l = Rat::from_integer(self.denominator_lcm());
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * &l).to_integer()).collect();
        let body = join_terms(&Self::integer_terms(&ints));
        if l.is_one() {
            write!(f, "{body}")
        } else if ints.iter().filter(|c| !c.is_zero()).count() > 1 {
            write!(f, "({body})/{}", l.to_integer())
        } else {
            write!(f, "{body}/{}", l.to_integer())
        }
    }
}

impl<'a> Add<&'a AlphaPoly> for &'a AlphaPoly {
    type Output = AlphaPoly;
    fn add(self, rhs: &AlphaPoly) -> AlphaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        AlphaPoly::from_coeffs(coeffs)
    }
}

impl<'a> Sub<&'a AlphaPoly> for &'a AlphaPoly {
    type Output = AlphaPoly;
    fn sub(self, rhs: &AlphaPoly) -> AlphaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        AlphaPoly::from_coeffs(coeffs)
    }
}

impl<'a> Mul<&'a AlphaPoly> for &'a AlphaPoly {
    type Output = AlphaPoly;
    fn mul(self, rhs: &AlphaPoly) -> AlphaPoly {
        if self.is_zero() || rhs.is_zero() {
            return AlphaPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        AlphaPoly::from_coeffs(coeffs)
    }
}

impl Neg for &AlphaPoly {
    type Output = AlphaPoly;
    fn neg(self) -> AlphaPoly {
        AlphaPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

/// Reduced fraction of polynomials with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: AlphaPoly,
    den: AlphaPoly,
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: AlphaPoly::zero(), den: AlphaPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(AlphaPoly::one())
    }

    pub fn from_poly(num: AlphaPoly) -> Self {
        RatFunc { num, den: AlphaPoly::one() }
    }

    pub fn new(num: AlphaPoly, den: AlphaPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: AlphaPoly, den: AlphaPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_constant() {
            let c = den.leading().recip();
            return RatFunc { num: num.scale(&c), den: AlphaPoly::one() };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() { (num, den) } else { (num.exact_div(&g), den.exact_div(&g)) };
        let lc = den.leading().recip();
        RatFunc { num: num.scale(&lc), den: den.scale(&lc) }
    }

    pub fn numer(&self) -> &AlphaPoly {
        &self.num
    }

    pub fn denom(&self) -> &AlphaPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn eval(&self, x: &Rat) -> Result<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Pole { alpha: x.to_string(), denominator: self.den.to_string() });
        }
        Ok(self.num.eval(x) / d)
    }

    fn add_impl(&self, rhs: &RatFunc, negate: bool) -> RatFunc {
        let rnum = if negate { -&rhs.num } else { rhs.num.clone() };
        if self.is_zero() {
            return RatFunc { num: rnum, den: rhs.den.clone() };
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rnum;
            if self.den.is_one() {
                return RatFunc::from_poly(num);
            }
            return Self::reduce(num, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        let d1 = self.den.exact_div(&g);
        let d2 = rhs.den.exact_div(&g);
        let num = &(&self.num * &d2) + &(&rnum * &d1);
        Self::reduce(num, &d1 * &rhs.den)
    }

    fn mul_impl(&self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n = &self.num.exact_div(&g1) * &rhs.num.exact_div(&g2);
        let d = &self.den.exact_div(&g2) * &rhs.den.exact_div(&g1);
        Self::reduce(n, d)
    }
}

/// An element `a + b*s` of `Q(alpha)[s]/(s^2 + 2)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Scalar {
    a: RatFunc,
    b: RatFunc,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { a: RatFunc::zero(), b: RatFunc::zero() }
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(rat_int(n))
    }

    pub fn from_rat(r: Rat) -> Self {
        Self::from_poly(AlphaPoly::constant(r))
    }

    pub fn from_poly(p: AlphaPoly) -> Self {
        Scalar { a: RatFunc::from_poly(p), b: RatFunc::zero() }
    }

    pub fn from_ratfunc(a: RatFunc) -> Self {
        Scalar { a, b: RatFunc::zero() }
    }

    pub fn from_parts(a: RatFunc, b: RatFunc) -> Self {
        Scalar { a, b }
    }

    pub fn alpha() -> Self {
        Self::from_poly(AlphaPoly::alpha())
    }

    /// The formal square root of `-2`.
    pub fn s() -> Self {
        Scalar { a: RatFunc::zero(), b: RatFunc::one() }
    }

    pub fn rational_part(&self) -> &RatFunc {
        &self.a
    }

    pub fn s_part(&self) -> &RatFunc {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.b.is_zero() && self.a.den.is_one() && self.a.num.is_one()
    }

    pub fn has_s(&self) -> bool {
        !self.b.is_zero()
    }

    /// Rational constant, if the value does not depend on `alpha` or `s`.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.has_s() || !self.a.is_polynomial() || !self.a.num.is_constant() {
            return None;
        }
        Some(self.a.num.coeff(0))
    }

    /// Polynomial in `alpha`, if the value has no `s` part and no denominator.
    pub fn as_poly(&self) -> Option<&AlphaPoly> {
        (!self.has_s() && self.a.is_polynomial()).then_some(&self.a.num)
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if !self.has_s() {
            return Ok(Scalar::from_ratfunc(self.a.inv()?));
        }
        // (a + bs)^-1 = (a - bs) / (a^2 + 2 b^2)
        let two = RatFunc::from_poly(AlphaPoly::constant(rat_int(2)));
        let norm = self.a.mul_impl(&self.a).add_impl(&two.mul_impl(&self.b.mul_impl(&self.b)), false);
        let inv = norm.inv()?;
        Ok(Scalar { a: self.a.mul_impl(&inv), b: self.b.mul_impl(&inv).neg_rf() })
    }

    /// Substitute a rational value for `alpha`.
    pub fn specialize(&self, alpha: &Rat) -> Result<Scalar> {
        let a = self.a.eval(alpha)?;
        let b = self.b.eval(alpha)?;
        Ok(Scalar {
            a: RatFunc::from_poly(AlphaPoly::constant(a)),
            b: RatFunc::from_poly(AlphaPoly::constant(b)),
        })
    }

    /// Numerators `p`, `q` and denominator `r` with integer coefficients such
    /// that the value is `(p + q*s)/r`, `r` having a positive leading coefficient.
    pub fn integer_form(&self) -> (Vec<BigInt>, Vec<BigInt>, Vec<BigInt>) {
        let g = self.a.den.gcd(&self.b.den);
        let common = &self.a.den.exact_div(&g) * &self.b.den;
        let p = &self.a.num * &common.exact_div(&self.a.den);
        let q = &self.b.num * &common.exact_div(&self.b.den);
        let l = p.denominator_lcm().lcm(&q.denominator_lcm()).lcm(&common.denominator_lcm());
        let lr = Rat::from_integer(l);
        let to_int = |poly: &AlphaPoly| -> Vec<BigInt> { poly.coeffs.iter().map(|c| (c * &lr).to_integer()).collect() };
        let (mut pi, mut qi, mut ri) = (to_int(&p), to_int(&q), to_int(&common));
        let g = pi.iter().chain(qi.iter()).chain(ri.iter()).fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if !g.is_zero() && !g.is_one() {
            for v in pi.iter_mut().chain(qi.iter_mut()).chain(ri.iter_mut()) {
                *v /= &g;
            }
        }
        if ri.last().is_some_and(|c| c.is_negative()) {
            for v in pi.iter_mut().chain(qi.iter_mut()).chain(ri.iter_mut()) {
                *v = -v.clone();
            }
        }
        (pi, qi, ri)
    }

    /// True if the rendered form needs parentheses when used as a factor.
    pub(crate) fn needs_parens(&self) -> bool {
        let text = self.to_string();
        let mut depth = 0i32;
        let bytes = text.as_bytes();
        for (i, &c) in bytes.iter().enumerate() {
            match c {
                b'(' => depth += 1,
                b')' => depth -= 1,
                b' ' if depth == 0 && i + 1 < bytes.len() && (bytes[i + 1] == b'+' || bytes[i + 1] == b'-') => {
                    return true
                }
                _ => {}
            }
        }
        false
    }
}

impl RatFunc {
    fn neg_rf(&self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let (p, q, r) = self.integer_form();
        let mut terms = AlphaPoly::integer_terms(&p);
        for t in AlphaPoly::integer_terms(&q) {
            let st = match t.as_str() {
                "1" => "s".to_string(),
                "-1" => "-s".to_string(),
                _ => format!("{t}*s"),
            };
            terms.push(st);
        }
        let num = join_terms(&terms);
        let rterms = AlphaPoly::integer_terms(&r);
        if rterms.len() == 1 && rterms[0] == "1" {
            return write!(f, "{num}");
        }
        let num = if terms.len() > 1 { format!("({num})") } else { num };
        let den = join_terms(&rterms);
        if rterms.len() > 1 || den.contains('*') || den.contains('^') {
            write!(f, "{num}/({den})")
        } else {
            write!(f, "{num}/{den}")
        }
    }
}

impl std::str::FromStr for Scalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        crate::parse::parse_scalar(s)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar { a: self.a.add_impl(&rhs.a, false), b: self.b.add_impl(&rhs.b, false) }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar { a: self.a.add_impl(&rhs.a, true), b: self.b.add_impl(&rhs.b, true) }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if !self.has_s() && !rhs.has_s() {
            return Scalar::from_ratfunc(self.a.mul_impl(&rhs.a));
        }
        // (a1 + b1 s)(a2 + b2 s) = a1 a2 - 2 b1 b2 + (a1 b2 + b1 a2) s
        let two = RatFunc::from_poly(AlphaPoly::constant(rat_int(2)));
        let bb = two.mul_impl(&self.b.mul_impl(&rhs.b));
        let a = self.a.mul_impl(&rhs.a).add_impl(&bb, true);
        let b = self.a.mul_impl(&rhs.b).add_impl(&self.b.mul_impl(&rhs.a), false);
        Scalar { a, b }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { a: self.a.neg_rf(), b: self.b.neg_rf() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Panics on division by zero; use [`Scalar::inv`] for the checked form.
impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv().expect("scalar division by zero")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Rat> for Scalar {
    fn from(r: Rat) -> Self {
        Scalar::from_rat(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> Scalar {
        Scalar::alpha()
    }

    #[test]
    fn addition_examples() {
        assert_eq!(Scalar::from_rat(rat(1, 2)) + Scalar::from_rat(rat(1, 3)), Scalar::from_rat(rat(5, 6)));
        assert_eq!(a() + (Scalar::one() - a()), Scalar::one());
        assert_eq!(Scalar::s() + Scalar::s(), Scalar::from_int(2) * Scalar::s());
        assert_eq!((Scalar::s() + Scalar::s()).to_string(), "2*s");
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(Scalar::s() * Scalar::s(), Scalar::from_int(-2));
        let one_plus = Scalar::one() + a();
        assert_eq!(&one_plus * &one_plus.inv().unwrap(), Scalar::one());
        let prod = (a() - Scalar::one()) * (a() + Scalar::one());
        assert_eq!(prod, a() * a() - Scalar::one());
        assert_eq!(prod.to_string(), "alpha^2 - 1");
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Scalar::from_int(2).inv().unwrap(), Scalar::from_rat(rat(1, 2)));
        assert_eq!(a().inv().unwrap().to_string(), "1/alpha");
        let sinv = Scalar::s().inv().unwrap();
        assert_eq!(sinv, -(Scalar::s() * Scalar::from_rat(rat(1, 2))));
        assert_eq!(sinv.to_string(), "-s/2");
        assert_eq!(Scalar::zero().inv(), Err(Error::DivisionByZero));
        let x = a() + Scalar::from_int(3) * Scalar::s();
        assert_eq!(&x * &x.inv().unwrap(), Scalar::one());
    }

    #[test]
    fn specialize_examples() {
        let x = Scalar::one() + a();
        assert!(x.specialize(&rat_int(-1)).unwrap().is_zero());
        let y = x.inv().unwrap();
        assert!(matches!(y.specialize(&rat_int(-1)), Err(Error::Pole { .. })));
        // (alpha^2 - 1)/(alpha - 1) is stored reduced as alpha + 1
        let z = (a() * a() - Scalar::one()) / (a() - Scalar::one());
        assert_eq!(z, a() + Scalar::one());
        assert_eq!(z.specialize(&rat_int(1)).unwrap(), Scalar::from_int(2));
    }

    #[test]
    fn canonical_text() {
        assert_eq!(Scalar::from_rat(rat(-1, 2)).to_string(), "-1/2");
        assert_eq!(((a() + Scalar::one()) / Scalar::from_int(2)).to_string(), "(alpha + 1)/2");
        let x = (a() + Scalar::s()) / (a() - Scalar::one());
        assert_eq!(x.to_string(), "(alpha + s)/(alpha - 1)");
        let y = Scalar::from_rat(rat(1, 3)) * a() * Scalar::s() + Scalar::from_rat(rat(1, 2));
        assert_eq!(y.to_string(), "(3 + 2*alpha*s)/6");
    }

    #[test]
    fn canonical_denominators_are_monic() {
        let x = Scalar::one() / (Scalar::from_int(2) * a() + Scalar::from_int(4));
        assert!(x.rational_part().denom().leading().is_one());
        assert_eq!(x.to_string(), "1/(2*alpha + 4)");
    }
}
