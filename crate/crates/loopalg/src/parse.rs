//! Expressions over a model's generators.
//!
//! ```text
//! loop   := item (('+'|'-') item)*
//! item   := term ['(x)' term]
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := scalar | gen ['^' ['-'] uint] | '(' expr ')'
//! scalar := uint ['/' uint]
//! ```
//!
//! `(x)` written without spaces is always the tensor separator. A negative
//! power `g^-k` is accepted when `g` has an inverse generator `h` (a rule
//! `g*h -> 1`) and means `h^k`.

use std::fmt;

use loopalg_core::{Element, LoopElement, LoopModel, PresentedAlgebra, Scalar, Tensor};
use thiserror::Error;

use crate::error::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub struct ParseError {
    pub span: Span,
    pub message: String,
    pub expected: Vec<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}..{}", self.message, self.span.start, self.span.end)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

fn error(span: Span, message: impl Into<String>, expected: &[&str]) -> ParseError {
    ParseError { span, message: message.into(), expected: expected.iter().map(|s| s.to_string()).collect() }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Tensor,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(n) => format!("number `{}`", n),
            Tok::Ident(s) => format!("identifier `{}`", s),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Tensor => "`(x)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(input: &str) -> Result<Vec<(Tok, Span)>, ParseError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let single = |t: Tok| (t, Span { start, end: start + 1 });
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => out.push(single(Tok::Plus)),
            b'-' => out.push(single(Tok::Minus)),
            b'*' => out.push(single(Tok::Star)),
            b'/' => out.push(single(Tok::Slash)),
            b'^' => out.push(single(Tok::Caret)),
            b')' => out.push(single(Tok::RParen)),
            b'(' if input[i..].starts_with("(x)") => {
                out.push((Tok::Tensor, Span { start, end: start + 3 }));
                i += 3;
                continue;
            }
            b'(' => out.push(single(Tok::LParen)),
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Num(input[start..i].to_string()), Span { start, end: i }));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(input[start..i].to_string()), Span { start, end: i }));
                continue;
            }
            _ => {
                let ch = input[i..].chars().next().unwrap_or('?');
                return Err(error(Span { start, end: start + ch.len_utf8() }, format!("unexpected character `{}`", ch), &[]));
            }
        }
        i += 1;
    }
    out.push((Tok::End, Span { start: input.len(), end: input.len() }));
    Ok(out)
}

/// Parsed expression tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Scalar { text: String, span: Span },
    Gen { name: String, power: i64, span: Span },
    Product(Vec<Expr>),
    /// Terms with a flag marking subtraction.
    Sum(Vec<(bool, Expr)>),
    Tensor(Box<Expr>, Box<Expr>),
}

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn span(&self) -> Span {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, Span) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, expected: &[&str]) -> ParseError {
        error(self.span(), format!("unexpected {}", self.peek().describe()), expected)
    }

    fn parse_loop(&mut self) -> Result<Expr, ParseError> {
        let mut items = Vec::new();
        let mut negative = self.leading_sign();
        loop {
            let left = self.parse_term()?;
            let item = if *self.peek() == Tok::Tensor {
                self.bump();
                let right = self.parse_term()?;
                Expr::Tensor(Box::new(left), Box::new(right))
            } else {
                left
            };
            items.push((negative, item));
            match self.peek() {
                Tok::Plus => negative = false,
                Tok::Minus => negative = true,
                Tok::End => break,
                _ => return Err(self.unexpected(&["`+`", "`-`", "`*`", "`(x)`", "end of input"])),
            }
            self.bump();
        }
        Ok(Expr::Sum(items))
    }

    fn leading_sign(&mut self) -> bool {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        }
    }

    fn parse_expr(&mut self) -> Result<Expr, ParseError> {
        let mut items = Vec::new();
        let mut negative = self.leading_sign();
        loop {
            items.push((negative, self.parse_term()?));
            match self.peek() {
                Tok::Plus => negative = false,
                Tok::Minus => negative = true,
                _ => break,
            }
            self.bump();
        }
        Ok(Expr::Sum(items))
    }

    fn parse_term(&mut self) -> Result<Expr, ParseError> {
        let mut factors = vec![self.parse_factor()?];
        while *self.peek() == Tok::Star {
            self.bump();
            factors.push(self.parse_factor()?);
        }
        Ok(if factors.len() == 1 { factors.pop().expect("one factor") } else { Expr::Product(factors) })
    }

    fn parse_factor(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Num(n) => {
                let (_, span) = self.bump();
                if *self.peek() == Tok::Slash {
                    self.bump();
                    match self.bump() {
                        (Tok::Num(d), end) => {
                            return Ok(Expr::Scalar { text: format!("{}/{}", n, d), span: Span { start: span.start, end: end.end } })
                        }
                        (t, s) => return Err(error(s, format!("unexpected {}", t.describe()), &["denominator"])),
                    }
                }
                Ok(Expr::Scalar { text: n, span })
            }
            Tok::Ident(name) => {
                let (_, span) = self.bump();
                if *self.peek() != Tok::Caret {
                    return Ok(Expr::Gen { name, power: 1, span });
                }
                self.bump();
                let negative = if *self.peek() == Tok::Minus {
                    self.bump();
                    true
                } else {
                    false
                };
                match self.bump() {
                    (Tok::Num(e), end) => {
                        let e: i64 = e.parse().map_err(|_| error(end, "exponent too large", &[]))?;
                        Ok(Expr::Gen { name, power: if negative { -e } else { e }, span: Span { start: span.start, end: end.end } })
                    }
                    (t, s) => Err(error(s, format!("unexpected {}", t.describe()), &["exponent"])),
                }
            }
            Tok::LParen => {
                self.bump();
                let inner = self.parse_expr()?;
                match self.peek() {
                    Tok::RParen => {
                        self.bump();
                        Ok(inner)
                    }
                    Tok::Tensor => Err(error(self.span(), "tensor separator inside parentheses", &["`)`"])),
                    _ => Err(self.unexpected(&["`)`", "`+`", "`-`", "`*`"])),
                }
            }
            _ => Err(self.unexpected(&["number", "generator", "`(`"])),
        }
    }
}

pub fn parse_expr(input: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(input)?, pos: 0 };
    let e = p.parse_loop()?;
    Ok(e)
}

fn eval_in(alg: &PresentedAlgebra, e: &Expr) -> CliResult<Element> {
    let ring = alg.ring();
    match e {
        Expr::Scalar { text, span } => {
            let s = Scalar::parse(ring, text)
                .map_err(|_| error(*span, format!("`{}` is not a scalar over {}", text, ring), &[]))?;
            Ok(alg.one().scale(&s))
        }
        Expr::Gen { name, power, span } => {
            let i = alg
                .generator_index(name)
                .ok_or_else(|| error(*span, format!("unknown generator `{}`", name), &[]))?;
            let (i, k) = if *power >= 0 {
                (i, *power)
            } else {
                let inv = alg
                    .laurent_partner(i)
                    .ok_or_else(|| error(*span, format!("`{}` has no inverse generator", name), &[]))?;
                (inv, -*power)
            };
            let k = u32::try_from(k).map_err(|_| error(*span, "exponent too large", &[]))?;
            Ok(alg.pow(&alg.gen(i), k)?)
        }
        Expr::Product(fs) => {
            let mut acc = alg.one();
            for f in fs {
                acc = alg.mul(&acc, &eval_in(alg, f)?)?;
            }
            Ok(acc)
        }
        Expr::Sum(items) => {
            let mut acc = Element::zero();
            for (neg, item) in items {
                let v = eval_in(alg, item)?;
                acc.add_assign(&if *neg { v.neg() } else { v });
            }
            Ok(alg.normal_form(&acc)?)
        }
        Expr::Tensor(_, _) => unreachable!("tensors only occur at the top level"),
    }
}

fn first_span(e: &Expr) -> Span {
    match e {
        Expr::Scalar { span, .. } | Expr::Gen { span, .. } => *span,
        Expr::Product(fs) => first_span(&fs[0]),
        Expr::Sum(items) => first_span(&items[0].1),
        Expr::Tensor(l, _) => first_span(l),
    }
}

/// A parsed value: a loop element, or an element of one factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parsed {
    Loop(LoopElement),
    Omega(Element),
    Base(Element),
}

pub fn parse(input: &str, model: &LoopModel) -> CliResult<Parsed> {
    let Expr::Sum(items) = parse_expr(input)? else { unreachable!("top level is a sum") };
    let tensors = items.iter().filter(|(_, e)| matches!(e, Expr::Tensor(..))).count();
    if tensors == 0 {
        let whole = Expr::Sum(items);
        return match eval_in(model.omega(), &whole) {
            Ok(a) => Ok(Parsed::Omega(a)),
            Err(omega_err) => match eval_in(model.base(), &whole) {
                Ok(x) => Ok(Parsed::Base(x)),
                Err(_) => Err(omega_err),
            },
        };
    }
    if tensors != items.len() {
        let (_, plain) = items.iter().find(|(_, e)| !matches!(e, Expr::Tensor(..))).expect("a plain item");
        return Err(error(first_span(plain), "every summand needs a `(x)` when any summand has one", &["`(x)`"]).into());
    }
    let mut out = Tensor::zero();
    for (neg, item) in &items {
        let Expr::Tensor(l, r) = item else { unreachable!() };
        let t = model.tensor(&eval_in(model.omega(), l)?, &eval_in(model.base(), r)?)?;
        out.add_assign(&if *neg { t.neg() } else { t });
    }
    Ok(Parsed::Loop(model.normalize(&out)?))
}

/// Parses an expression as a loop element, reading `a` as `a (x) 1` and a
/// base element `x` as `1 (x) x`.
pub fn parse_loop(input: &str, model: &LoopModel) -> CliResult<LoopElement> {
    Ok(match parse(input, model)? {
        Parsed::Loop(t) => t,
        Parsed::Omega(a) => model.tensor(&a, &model.base().one())?,
        Parsed::Base(x) => model.tensor(&model.omega().one(), &x)?,
    })
}

pub fn parse_element(input: &str, alg: &PresentedAlgebra) -> CliResult<Element> {
    let Expr::Sum(items) = parse_expr(input)? else { unreachable!("top level is a sum") };
    if let Some((_, t)) = items.iter().find(|(_, e)| matches!(e, Expr::Tensor(..))) {
        return Err(CliError::Parse(error(first_span(t), "tensor separator in a single-factor expression", &[])));
    }
    eval_in(alg, &Expr::Sum(items))
}

#[cfg(test)]
mod tests {
    use super::*;
    use loopalg_core::catalog::{build, ModelId};
    use loopalg_core::{Monomial, Ring};

    #[test]
    fn circle_power() {
        let m = build(ModelId::CircleZ).unwrap();
        let e = parse_loop("x^2 (x) a", &m).unwrap();
        let expect = m.basis_element(&Monomial::from_exponents(vec![2, 0]), &Monomial::from_exponents(vec![1]));
        assert_eq!(e, expect);
        let inv = parse_loop("x^-3 (x) 1", &m).unwrap();
        assert_eq!(inv, m.basis_element(&Monomial::from_exponents(vec![0, 3]), &Monomial::from_exponents(vec![0])));
        assert_eq!(parse_loop("x*x^-1 (x) 1", &m).unwrap(), m.one());
    }

    #[test]
    fn rp3_two_terms() {
        let m = build(ModelId::Rp3Z).unwrap();
        assert_eq!(parse_loop("u*v (x) a + u (x) b", &m).unwrap().len(), 2);
        assert!(parse_loop("u (x) 2*b", &m).unwrap().is_zero());
    }

    #[test]
    fn so5_relation() {
        let m = build(ModelId::SoOddQ(2)).unwrap();
        let e = parse_loop("alpha1^2 (x) 1", &m).unwrap();
        assert_eq!(m.format(&e), "2*alpha0*alpha2 (x) 1");
        assert_eq!(parse_loop("1/2*alpha1^2", &m).unwrap(), parse_loop("alpha0*alpha2 (x) 1", &m).unwrap());
        assert!(matches!(parse("beta3*beta7", &m).unwrap(), Parsed::Base(_)));
    }

    #[test]
    fn error_positions() {
        let m = build(ModelId::S3Z).unwrap();
        let CliError::Parse(e) = parse_loop("u (x) z", &m).unwrap_err() else { panic!() };
        assert_eq!(e.span, Span { start: 6, end: 7 });
        let CliError::Parse(e) = parse_loop("u + * a", &m).unwrap_err() else { panic!() };
        assert_eq!(e.span.start, 4);
        assert!(!e.expected.is_empty());
        let CliError::Parse(e) = parse_loop("u^-1 (x) a", &m).unwrap_err() else { panic!() };
        assert_eq!(e.span.start, 0);
        assert!(parse_loop("(u (x) a)", &m).is_err());
        assert!(parse_loop("u (x) a + u", &m).is_err());
        assert!(parse_loop("u $", &m).is_err());
        assert!(parse_loop("1/2*u (x) a", &m).is_err());
    }

    #[test]
    fn scalars_follow_the_ring() {
        let m = build(ModelId::SoOddF2(2)).unwrap();
        assert!(parse_loop("3*a1 (x) c1", &m).unwrap() == parse_loop("a1 (x) c1", &m).unwrap());
        assert_eq!(m.ring(), Ring::GF2);
    }
}
