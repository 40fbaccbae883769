//! Text syntax for scalars and symbols.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := '-' factor | atom ('^' ['+'|'-'] int)?
//! atom   := generator | int | '(' expr ')'
//! ```
//!
//! Generators are `t tau xi1 xi2 eta1 eta2 alpha beta h s`. A handful of
//! Unicode spellings (`τ`, `ξ₁`, `α`, `ħ`, `−`, ...) are accepted as input.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::scalar::{Rat, Scalar};
use crate::symalg::{Monomial, Symbol, Var};

/// Parse tree of an expression; positions are character offsets into the
/// normalized source.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Generator { name: String, pos: usize },
    Integer(BigInt),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, usize),
    Pow(Box<Expr>, i64, usize),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Op(char),
}

fn normalize(src: &str) -> String {
    const SUPERSCRIPTS: &str = "⁰¹²³⁴⁵⁶⁷⁸⁹";
    let mut out = String::with_capacity(src.len());
    let mut in_superscript = false;
    for c in src.chars() {
        let sup = if c == '⁻' { Some('-') } else { SUPERSCRIPTS.chars().position(|d| d == c).map(|d| (b'0' + d as u8) as char) };
        if let Some(d) = sup {
            if !in_superscript {
                out.push('^');
            }
            out.push(d);
            in_superscript = true;
            continue;
        }
        in_superscript = false;
        match c {
            'τ' => out.push_str("tau"),
            'ξ' => out.push_str("xi"),
            'η' => out.push_str("eta"),
            'α' => out.push_str("alpha"),
            'β' => out.push_str("beta"),
            'ħ' => out.push('h'),
            '₁' => out.push('1'),
            '₂' => out.push('2'),
            '−' | '–' => out.push('-'),
            '·' | '×' => out.push('*'),
            _ => out.push(c),
        }
    }
    out
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            toks.push((Tok::Int(text.parse().unwrap()), start));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            toks.push((Tok::Ident(chars[start..i].iter().collect()), start));
        } else if "+-*/^()".contains(c) {
            toks.push((Tok::Op(c), i));
            i += 1;
        } else {
            return Err(Error::Syntax { pos: i, msg: format!("unexpected character '{c}'") });
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    i: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = if self.eat('-') {
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else if self.peek() == Some(&Tok::Op('/')) {
                let pos = self.pos();
                self.i += 1;
                lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?), pos);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Op('^')) {
            let pos = self.pos();
            self.i += 1;
            let negative = if self.eat('-') {
                true
            } else {
                self.eat('+');
                false
            };
            let Some(Tok::Int(n)) = self.peek().cloned() else {
                return self.err("expected integer exponent");
            };
            self.i += 1;
            let n: i64 = i64::try_from(&n).or_else(|_| self.err("exponent too large"))?;
            return Ok(Expr::Pow(Box::new(base), if negative { -n } else { n }, pos));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.i += 1;
                Ok(Expr::Integer(n))
            }
            Some(Tok::Ident(name)) => {
                self.i += 1;
                if generator(&name).is_none() {
                    return Err(Error::Syntax { pos, msg: format!("unknown identifier '{name}'") });
                }
                Ok(Expr::Generator { name, pos })
            }
            Some(Tok::Op('(')) => {
                self.i += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(Tok::Op(c)) => self.err(format!("unexpected '{c}'")),
            None => self.err("unexpected end of input"),
        }
    }
}

fn generator(name: &str) -> Option<Symbol> {
    Some(match name {
        "t" => Symbol::generator(Var::T),
        "tau" => Symbol::generator(Var::Tau),
        "xi1" => Symbol::generator(Var::Xi1),
        "xi2" => Symbol::generator(Var::Xi2),
        "eta1" => Symbol::generator(Var::Eta1),
        "eta2" => Symbol::generator(Var::Eta2),
        "alpha" => Symbol::constant(Scalar::alpha()),
        "s" => Symbol::constant(Scalar::s()),
        "beta" => Symbol::beta(),
        "h" => Symbol::hbar(),
        _ => return None,
    })
}

/// Parse source text into an [`Expr`].
pub fn parse_expr(src: &str) -> Result<Expr> {
    let src = normalize(src);
    let toks = tokenize(&src)?;
    let mut p = Parser { toks, i: 0, end: src.chars().count() };
    let e = p.expr()?;
    if p.i != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

fn pure_coefficient(s: &Symbol) -> Option<Scalar> {
    s.as_constant()
}

impl Expr {
    pub fn eval(&self) -> Result<Symbol> {
        match self {
            Expr::Generator { name, .. } => Ok(generator(name).expect("validated during parsing")),
            Expr::Integer(n) => Ok(Symbol::constant(Scalar::from_rat(Rat::from_integer(n.clone())))),
            Expr::Neg(e) => Ok(-e.eval()?),
            Expr::Add(a, b) => Ok(a.eval()? + b.eval()?),
            Expr::Sub(a, b) => Ok(a.eval()? - b.eval()?),
            Expr::Mul(a, b) => Ok(a.eval()?.mul(&b.eval()?)),
            Expr::Div(a, b, pos) => {
                let num = a.eval()?;
                let den = b.eval()?;
                let Some(c) = pure_coefficient(&den) else {
                    return Err(Error::Semantic(format!("divisor at position {pos} is not a pure coefficient")));
                };
                let inv = c.inv().map_err(|_| Error::Semantic(format!("division by zero at position {pos}")))?;
                Ok(num.scale(&inv))
            }
            Expr::Pow(base, n, pos) => eval_pow(base, *n, *pos),
        }
    }
}

fn eval_pow(base: &Expr, n: i64, pos: usize) -> Result<Symbol> {
    let b = base.eval()?;
    if let Expr::Generator { name, .. } = base {
        match name.as_str() {
            "xi1" | "xi2" | "eta1" | "eta2" if !(0..=1).contains(&n) => {
                return Err(Error::Semantic(format!("{name}^{n}: Grassmann generators take exponent 0 or 1")));
            }
            "t" | "tau" => {
                let e = i32::try_from(n).map_err(|_| Error::Semantic(format!("exponent {n} out of range")))?;
                let m = if name == "t" { Monomial::new(e, 0, 0) } else { Monomial::new(0, e, 0) };
                return Ok(Symbol::term(Scalar::one(), m));
            }
            _ => {}
        }
    }
    let exp = u32::try_from(n.unsigned_abs()).map_err(|_| Error::Semantic(format!("exponent {n} out of range")))?;
    if n >= 0 {
        if let Some(c) = pure_coefficient(&b) {
            return Ok(Symbol::constant(scalar_pow(&c, exp)));
        }
        let p = b.pow(exp);
        if p.is_zero() && !b.is_zero() {
            return Err(Error::Semantic(format!("power at position {pos} vanishes identically (nilpotent base)")));
        }
        return Ok(p);
    }
    match pure_coefficient(&b) {
        Some(c) => {
            let inv = c.inv().map_err(|_| Error::Semantic(format!("zero raised to negative power at position {pos}")))?;
            Ok(Symbol::constant(scalar_pow(&inv, exp)))
        }
        None => Err(Error::Semantic(format!(
            "negative exponent at position {pos}: only t, tau and coefficients may be inverted"
        ))),
    }
}

fn scalar_pow(c: &Scalar, n: u32) -> Scalar {
    let mut acc = Scalar::one();
    for _ in 0..n {
        acc = &acc * c;
    }
    acc
}

pub fn parse_symbol(src: &str) -> Result<Symbol> {
    parse_expr(src)?.eval()
}

/// Parse a pure coefficient (no `t`, `tau`, Grassmann, `beta` or `h`).
pub fn parse_scalar(src: &str) -> Result<Scalar> {
    let s = parse_symbol(src)?;
    pure_coefficient(&s).ok_or_else(|| Error::Semantic(format!("'{src}' is not a pure coefficient")))
}

/// Parse a rational number such as `-3/2`.
pub fn parse_rat(src: &str) -> Result<Rat> {
    parse_scalar(src)?.as_rat().ok_or_else(|| Error::Semantic(format!("'{src}' is not a rational number")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::symalg::{ETA1, ETA2, TOP_MASK, XI1, XI2};

    #[test]
    fn parses_embedding_element() {
        let f = parse_symbol("tau^2 - 2*alpha*t^-2*xi1*xi2*eta1*eta2").unwrap();
        let expect = &Symbol::mono(1, 0, 2, 0) + &Symbol::mono(Scalar::from_int(-2) * Scalar::alpha(), -2, 0, TOP_MASK);
        assert_eq!(f, expect);
    }

    #[test]
    fn parses_h_element() {
        let h = parse_symbol("t*tau + (alpha+1)/2*h").unwrap();
        let c = (Scalar::alpha() + Scalar::one()) / Scalar::from_int(2);
        let expect = &Symbol::mono(1, 1, 1, 0) + &Symbol::term(c, Monomial::ONE.with_h(1));
        assert_eq!(h, expect);
    }

    #[test]
    fn grassmann_order_signs() {
        assert_eq!(parse_symbol("eta1*xi1").unwrap(), Symbol::mono(-1, 0, 0, XI1 | ETA1));
        assert_eq!(parse_symbol("eta2*eta1*xi2").unwrap(), Symbol::mono(-1, 0, 0, XI2 | ETA1 | ETA2));
    }

    #[test]
    fn semantic_errors() {
        assert!(matches!(parse_symbol("xi1^2"), Err(Error::Semantic(_))));
        assert!(matches!(parse_symbol("t/xi1"), Err(Error::Semantic(_))));
        assert!(matches!(parse_symbol("h^-1"), Err(Error::Semantic(_))));
        assert!(matches!(parse_symbol("beta^-2"), Err(Error::Semantic(_))));
        assert!(matches!(parse_symbol("1/0"), Err(Error::Semantic(_))));
        assert!(matches!(parse_symbol("(t+tau)^-1"), Err(Error::Semantic(_))));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert_eq!(parse_symbol("t +* tau"), Err(Error::Syntax { pos: 3, msg: "unexpected '*'".into() }));
        assert!(matches!(parse_symbol("t^"), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_symbol("foo"), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(parse_symbol("(t"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_symbol("t $"), Err(Error::Syntax { pos: 2, .. })));
    }

    #[test]
    fn unicode_aliases() {
        assert_eq!(parse_symbol("τ²").unwrap(), parse_symbol("tau^2").unwrap());
        assert_eq!(parse_symbol("2*α*t⁻²*η₂").unwrap(), Symbol::mono(Scalar::from_int(2) * Scalar::alpha(), -2, 0, ETA2));
        assert_eq!(parse_symbol("τ*ξ₁ − α").unwrap(), parse_symbol("tau*xi1 - alpha").unwrap());
        assert_eq!(parse_symbol("ħ·η₂").unwrap(), parse_symbol("h*eta2").unwrap());
    }

    #[test]
    fn scalars() {
        assert_eq!(parse_scalar("1/2 + 1/3").unwrap(), Scalar::from_rat(rat(5, 6)));
        assert_eq!(parse_scalar("s*s").unwrap(), Scalar::from_int(-2));
        assert_eq!(parse_scalar("(alpha^2-1)/(alpha-1)").unwrap(), Scalar::alpha() + Scalar::one());
        assert_eq!(parse_rat("-3/2").unwrap(), rat(-3, 2));
        assert!(parse_scalar("t").is_err());
        assert!(parse_rat("alpha").is_err());
    }

    #[test]
    fn round_trip_examples() {
        for src in [
            "tau^2 - 2*alpha*t^-2*xi1*xi2*eta1*eta2",
            "t*tau + (alpha+1)/2*h",
            "(1 + 2*s)/(alpha^2 + 1)*t^-3*xi1*eta2*beta^2",
            "-s/2*eta1 + 3/7*alpha*xi2",
            "0",
        ] {
            let s = parse_symbol(src).unwrap();
            assert_eq!(parse_symbol(&s.to_string()).unwrap(), s, "{src} -> {s}");
        }
    }
}
