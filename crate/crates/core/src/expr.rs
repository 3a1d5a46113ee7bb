//! A small infix language for scalars and univariate polynomials.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := ('+' | '-') unary | power
//! power := atom ('^' integer)?
//! atom  := integer | 'x' | 't'integer | 'pi' | 'π' | 'sqrt(' integer ')'
//!        | '√' integer | '(' expr ')'
//! ```
//!
//! Multiplication is always explicit: `3x` is rejected rather than guessed.
//! `pi` denotes a transcendental and is modeled as a fresh indeterminate.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{FieldDescriptor, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Int(BigInt),
    X,
    /// 1-based indeterminate index.
    T(usize),
    Pi,
    Sqrt(i64),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

/// What a parsed expression needs from the field it is evaluated in.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Requirements {
    /// Square-free radicands (after pulling out square factors).
    pub sqrt: BTreeSet<i64>,
    pub max_t: usize,
    pub uses_pi: bool,
    pub uses_x: bool,
}

impl Requirements {
    pub fn merge(&mut self, other: &Requirements) {
        self.sqrt.extend(other.sqrt.iter().copied());
        self.max_t = self.max_t.max(other.max_t);
        self.uses_pi |= other.uses_pi;
        self.uses_x |= other.uses_x;
    }

    /// Index assigned to `pi`: one past the largest explicit indeterminate.
    pub fn pi_index(&self) -> Option<usize> {
        self.uses_pi.then_some(self.max_t + 1)
    }

    /// The smallest field containing every literal.
    pub fn field(&self) -> Result<FieldDescriptor> {
        let generic = self.max_t.max(self.pi_index().unwrap_or(0));
        let radicands: Vec<i64> = self.sqrt.iter().copied().filter(|&d| d != 1).collect();
        match (radicands.as_slice(), generic) {
            ([], 0) => Ok(FieldDescriptor::Rational),
            ([], k) => FieldDescriptor::generic(k),
            ([d], 0) => FieldDescriptor::quadratic(*d),
            ([_], _) => Err(Error::Domain("cannot mix square roots with generic entries".into())),
            (ds, _) => Err(Error::Domain(format!(
                "only one quadratic extension is supported, got radicands {ds:?}"
            ))),
        }
    }
}

pub fn parse(input: &str) -> Result<Expr> {
    let tokens = tokenize(input)?;
    let mut p = Parser { tokens, pos: 0, input };
    let e = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Root,
}

fn tokenize(input: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push(Tok::Int(s.parse().unwrap()));
                if i < chars.len() && (chars[i].is_alphabetic() || chars[i] == '(' || chars[i] == '√') {
                    return Err(Error::Parse(format!(
                        "{input:?}: implicit multiplication after {s:?}; write an explicit '*'"
                    )));
                }
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                out.push(Tok::Ident(chars[start..i].iter().collect()));
            }
            'π' => {
                out.push(Tok::Ident("pi".into()));
                i += 1;
            }
            '√' => {
                out.push(Tok::Root);
                i += 1;
            }
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' | '−' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '*' | '·' => {
                out.push(Tok::Star);
                i += 1;
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1;
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1;
            }
            other => return Err(Error::Parse(format!("{input:?}: unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Tok>,
    pos: usize,
    input: &'a str,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!("{:?}: {msg} at token {}", self.input, self.pos))
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(&Tok::Minus) {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat(&Tok::Star) {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat(&Tok::Slash) {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat(&Tok::Minus) {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat(&Tok::Plus) {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat(&Tok::Caret) {
            match self.tokens.get(self.pos).cloned() {
                Some(Tok::Int(k)) => {
                    self.pos += 1;
                    let k: u32 = k.try_into().map_err(|_| self.error("exponent too large"))?;
                    if self.peek() == Some(&Tok::Caret) {
                        return Err(self.error("chained exponents are ambiguous; use parentheses"));
                    }
                    return Ok(Expr::Pow(Box::new(base), k));
                }
                _ => return Err(self.error("expected a non-negative integer exponent")),
            }
        }
        Ok(base)
    }

    fn radicand(&mut self) -> Result<i64> {
        let neg = self.eat(&Tok::Minus);
        match self.tokens.get(self.pos).cloned() {
            Some(Tok::Int(k)) => {
                self.pos += 1;
                let k: i64 = k.try_into().map_err(|_| self.error("radicand too large"))?;
                Ok(if neg { -k } else { k })
            }
            _ => Err(self.error("expected an integer radicand")),
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let tok = self.tokens.get(self.pos).cloned().ok_or_else(|| self.error("unexpected end of input"))?;
        self.pos += 1;
        match tok {
            Tok::Int(n) => Ok(Expr::Int(n)),
            Tok::LParen => {
                let e = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return Err(self.error("expected ')'"));
                }
                Ok(e)
            }
            Tok::Root => Ok(Expr::Sqrt(self.radicand()?)),
            Tok::Ident(name) => match name.as_str() {
                "x" => Ok(Expr::X),
                "pi" => Ok(Expr::Pi),
                "sqrt" => {
                    if !self.eat(&Tok::LParen) {
                        return Err(self.error("expected '(' after sqrt"));
                    }
                    let d = self.radicand()?;
                    if !self.eat(&Tok::RParen) {
                        return Err(self.error("expected ')'"));
                    }
                    Ok(Expr::Sqrt(d))
                }
                s if s.starts_with('t') && s.len() > 1 && s[1..].chars().all(|c| c.is_ascii_digit()) => {
                    let k: usize = s[1..].parse().map_err(|_| self.error("bad indeterminate"))?;
                    if k == 0 {
                        return Err(self.error("indeterminates are numbered from t1"));
                    }
                    Ok(Expr::T(k))
                }
                other => Err(self.error(&format!("unknown identifier {other:?}"))),
            },
            _ => Err(self.error("unexpected token")),
        }
    }
}

/// Splits `d` as `s^2 * r` with `r` square-free.
pub(crate) fn split_square(d: i64) -> (u64, i64) {
    let mut r = d.unsigned_abs();
    let mut s = 1u64;
    let mut p = 2u64;
    while p * p <= r {
        while r % (p * p) == 0 {
            r /= p * p;
            s *= p;
        }
        p += 1;
    }
    let r = r as i64;
    (s, if d < 0 { -r } else { r })
}

impl Expr {
    pub fn requirements(&self) -> Requirements {
        let mut req = Requirements::default();
        self.collect(&mut req);
        req
    }

    fn collect(&self, req: &mut Requirements) {
        match self {
            Expr::Int(_) => {}
            Expr::X => req.uses_x = true,
            Expr::T(k) => req.max_t = req.max_t.max(*k),
            Expr::Pi => req.uses_pi = true,
            Expr::Sqrt(d) => {
                let (_, r) = split_square(*d);
                if r != 1 && *d != 0 {
                    req.sqrt.insert(r);
                }
            }
            Expr::Neg(a) | Expr::Pow(a, _) => a.collect(req),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.collect(req);
                b.collect(req);
            }
        }
    }

    /// Evaluates to a polynomial in `x` with coefficients in `field`.
    /// `pi_index` is the indeterminate standing for `pi`.
    pub fn eval_poly(&self, field: FieldDescriptor, pi_index: Option<usize>) -> Result<Poly> {
        Ok(match self {
            Expr::Int(n) => Poly::constant(field.from_int(n.clone())),
            Expr::X => Poly::x(field),
            Expr::T(k) => Poly::constant(
                field
                    .indeterminate(*k)
                    .ok_or_else(|| Error::Domain(format!("t{k} is not available over {field}")))?,
            ),
            Expr::Pi => {
                let k = pi_index.ok_or_else(|| Error::Domain("no indeterminate assigned to pi".into()))?;
                Poly::constant(
                    field
                        .indeterminate(k)
                        .ok_or_else(|| Error::Domain(format!("pi needs t{k}, not available over {field}")))?,
                )
            }
            Expr::Sqrt(d) => {
                let (s, r) = split_square(*d);
                let root = if *d == 0 {
                    field.zero()
                } else if r == 1 {
                    field.from_int(s)
                } else {
                    match field {
                        FieldDescriptor::Quadratic(fd) if fd == r => &field.from_int(s) * &field.sqrt().unwrap(),
                        _ => return Err(Error::Domain(format!("sqrt({d}) is not in {field}"))),
                    }
                };
                Poly::constant(root)
            }
            Expr::Neg(a) => a.eval_poly(field, pi_index)?.neg(),
            Expr::Add(a, b) => a.eval_poly(field, pi_index)?.add(&b.eval_poly(field, pi_index)?),
            Expr::Sub(a, b) => a.eval_poly(field, pi_index)?.sub(&b.eval_poly(field, pi_index)?),
            Expr::Mul(a, b) => a.eval_poly(field, pi_index)?.mul(&b.eval_poly(field, pi_index)?),
            Expr::Div(a, b) => {
                let den = b.eval_poly(field, pi_index)?;
                match den.degree() {
                    None => return Err(Error::DivisionByZero),
                    Some(0) => {
                        let inv = den.coeff(0).inv()?;
                        a.eval_poly(field, pi_index)?.scale(&inv)
                    }
                    Some(_) => return Err(Error::Parse("division by a non-constant polynomial".into())),
                }
            }
            Expr::Pow(a, k) => a.eval_poly(field, pi_index)?.pow(*k),
        })
    }

    pub fn eval_scalar(&self, field: FieldDescriptor, pi_index: Option<usize>) -> Result<Scalar> {
        if self.requirements().uses_x {
            return Err(Error::Parse("expected a constant, found the variable x".into()));
        }
        let p = self.eval_poly(field, pi_index)?;
        Ok(p.coeff(0))
    }
}

/// Parses a list of constant expressions into scalars of one common field.
pub fn parse_scalars(items: &[&str]) -> Result<(FieldDescriptor, Vec<Scalar>)> {
    let exprs: Vec<Expr> = items.iter().map(|s| parse(s)).collect::<Result<_>>()?;
    let mut req = Requirements::default();
    for e in &exprs {
        req.merge(&e.requirements());
    }
    if req.uses_x {
        return Err(Error::Parse("node entries must be constants".into()));
    }
    let field = req.field()?;
    let scalars = exprs
        .iter()
        .map(|e| e.eval_scalar(field, req.pi_index()))
        .collect::<Result<_>>()?;
    Ok((field, scalars))
}
