//! Surface syntax for phase-space expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' INT)?
//! atom   := INT | 'i' | 'hbar' | 'q' | 'p' | BLADE | '(' expr ')'
//! BLADE  := ('e' INT)+          e.g. e1, e2, e1e2
//! ```
//!
//! Division is only by a nonzero single term `c * hbar^k`, which keeps every
//! value polynomial in `q` and `p`. Products of generator symbols are wedge
//! products and may not repeat a generator; Clifford products belong to the
//! `star` command.

use std::fmt;

use moyal_clifford::{HbarScalar, Multivector, Mv, Poly, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Int(n) => write!(f, "number `{n}`"),
            Token::Ident(s) => write!(f, "identifier `{s}`"),
            Token::Plus => f.write_str("`+`"),
            Token::Minus => f.write_str("`-`"),
            Token::Star => f.write_str("`*`"),
            Token::Slash => f.write_str("`/`"),
            Token::Caret => f.write_str("`^`"),
            Token::LParen => f.write_str("`(`"),
            Token::RParen => f.write_str("`)`"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ErrorKind {
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("expected {}, found {found}", expected.join(" or "))]
    Unexpected { found: String, expected: Vec<&'static str> },
    #[error("negative exponent")]
    NegativeExponent,
    #[error("exponent must be a nonnegative integer")]
    NonIntegerExponent,
    #[error("exponent {0} is too large")]
    ExponentTooLarge(BigInt),
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),
    #[error("generator symbols are not allowed here")]
    GeneratorNotAllowed,
    #[error("generator e{index} out of range for {dim} generators")]
    GeneratorOutOfRange { index: usize, dim: usize },
    #[error("generator e{0} repeated in a product; use the star command for Clifford products")]
    RepeatedGenerator(usize),
    #[error("division by zero")]
    DivisionByZero,
    #[error("can only divide by a single term c*hbar^k")]
    InvalidDivisor,
}

/// Error with the byte offset into the source it refers to.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{kind} at byte {offset}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ErrorKind,
}

impl ParseError {
    fn new(offset: usize, kind: ErrorKind) -> Self {
        Self { offset, kind }
    }

    /// The message followed by the source line and a caret under the offset.
    pub fn annotate(&self, src: &str) -> String {
        let col = src[..self.offset.min(src.len())].chars().count();
        format!("{self}\n  {src}\n  {}^", " ".repeat(col))
    }
}

pub fn tokenize(src: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b'*' => Token::Star,
            b'/' => Token::Slash,
            b'^' => Token::Caret,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Token::Int(src[start..i].parse().expect("digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Token::Ident(src[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = src[start..].chars().next().expect("in bounds");
                return Err(ParseError::new(start, ErrorKind::UnexpectedChar(ch)));
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Int(BigInt),
    Imag,
    Hbar,
    Q,
    P,
    /// 1-based generator indices as written, with the identifier offset.
    Blade(Vec<usize>, usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    /// Product, with the offset of the `*`.
    Mul(Box<Expr>, Box<Expr>, usize),
    /// Division, with the offset of the `/`.
    Div(Box<Expr>, Box<Expr>, usize),
    /// Power, with the offset of the `^`.
    Pow(Box<Expr>, u32, usize),
}

fn blade_indices(name: &str) -> Option<Vec<usize>> {
    let mut out = Vec::new();
    let mut rest = name;
    while let Some(r) = rest.strip_prefix('e') {
        let digits = r.bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 || r.starts_with('0') {
            return None;
        }
        out.push(r[..digits].parse().ok()?);
        rest = &r[digits..];
    }
    (rest.is_empty() && !out.is_empty()).then_some(out)
}

const ATOM_START: &[&str] = &["number", "identifier", "`(`", "`-`"];

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn bump(&mut self) -> Option<(usize, Token)> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn unexpected(&self, expected: &[&'static str]) -> ParseError {
        let found = self.peek().map_or("end of input".to_string(), Token::to_string);
        ParseError::new(
            self.offset(),
            ErrorKind::Unexpected {
                found,
                expected: expected.to_vec(),
            },
        )
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Token::Minus) => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    let at = self.offset();
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?), at);
                }
                Some(Token::Slash) => {
                    let at = self.offset();
                    self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?), at);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some(Token::Minus) => {
                self.bump();
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Some(Token::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        let caret = self.offset();
        self.bump();
        let at = self.offset();
        match self.bump() {
            Some((_, Token::Int(n))) => match n.to_u32() {
                Some(e) => Ok(Expr::Pow(Box::new(base), e, caret)),
                None => Err(ParseError::new(at, ErrorKind::ExponentTooLarge(n))),
            },
            Some((_, Token::Minus)) => Err(ParseError::new(at, ErrorKind::NegativeExponent)),
            Some(_) => Err(ParseError::new(at, ErrorKind::NonIntegerExponent)),
            None => {
                self.pos -= 1;
                Err(self.unexpected(&["number"]))
            }
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let at = self.offset();
        match self.peek().cloned() {
            Some(Token::Int(n)) => {
                self.bump();
                Ok(Expr::Int(n))
            }
            Some(Token::Ident(name)) => {
                self.bump();
                match name.as_str() {
                    "i" => Ok(Expr::Imag),
                    "hbar" => Ok(Expr::Hbar),
                    "q" => Ok(Expr::Q),
                    "p" => Ok(Expr::P),
                    _ => match blade_indices(&name) {
                        Some(idx) => Ok(Expr::Blade(idx, at)),
                        None => Err(ParseError::new(at, ErrorKind::UnknownIdentifier(name))),
                    },
                }
            }
            Some(Token::LParen) => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(&Token::RParen) {
                    return Err(self.unexpected(&["`)`", "operator"]));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected(ATOM_START)),
        }
    }
}

/// Parses `src` into an expression tree.
pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let mut parser = Parser {
        tokens: tokenize(src)?,
        pos: 0,
        end: src.len(),
    };
    let e = parser.expr()?;
    if parser.peek().is_some() {
        return Err(parser.unexpected(&["operator", "end of input"]));
    }
    Ok(e)
}

/// Product that wedges blades and rejects shared generators.
fn checked_product(a: &Mv, b: &Mv, at: usize) -> Result<Mv, ParseError> {
    for (x, _) in a.terms() {
        for (y, _) in b.terms() {
            let shared = x.bits() & y.bits();
            if shared != 0 {
                let index = shared.trailing_zeros() as usize + 1;
                return Err(ParseError::new(at, ErrorKind::RepeatedGenerator(index)));
            }
        }
    }
    Ok(a.wedge(b).expect("operands share a dimension"))
}

/// Lowers an expression to a multivector with `dim` generators.
pub fn lower(e: &Expr, dim: usize) -> Result<Mv, ParseError> {
    let scalar = |c: HbarScalar| Multivector::scalar(dim, Poly::constant(c));
    Ok(match e {
        Expr::Int(n) => scalar(HbarScalar::rational(BigRational::from_integer(n.clone()))),
        Expr::Imag => scalar(HbarScalar::imag()),
        Expr::Hbar => scalar(HbarScalar::hbar()),
        Expr::Q => Multivector::scalar(dim, Poly::q()),
        Expr::P => Multivector::scalar(dim, Poly::p()),
        Expr::Blade(indices, off) => {
            if dim == 0 {
                return Err(ParseError::new(*off, ErrorKind::GeneratorNotAllowed));
            }
            let mut zero_based = Vec::with_capacity(indices.len());
            for &k in indices {
                if k > dim {
                    return Err(ParseError::new(*off, ErrorKind::GeneratorOutOfRange { index: k, dim }));
                }
                if zero_based.contains(&(k - 1)) {
                    return Err(ParseError::new(*off, ErrorKind::RepeatedGenerator(k)));
                }
                zero_based.push(k - 1);
            }
            // generators written in any order: wedge them one by one
            let mut out = Multivector::one(dim);
            for k in zero_based {
                out = out.wedge(&Multivector::generator(dim, k).expect("index checked")).expect("same dim");
            }
            out
        }
        Expr::Neg(a) => -lower(a, dim)?,
        Expr::Add(a, b) => lower(a, dim)? + lower(b, dim)?,
        Expr::Sub(a, b) => lower(a, dim)? - lower(b, dim)?,
        Expr::Mul(a, b, at) => checked_product(&lower(a, dim)?, &lower(b, dim)?, *at)?,
        Expr::Div(a, b, off) => {
            let num = lower(a, dim)?;
            let den = lower(b, dim)?;
            if den.is_zero() {
                return Err(ParseError::new(*off, ErrorKind::DivisionByZero));
            }
            let inverse = den
                .scalar_part()
                .as_constant()
                .filter(|_| den.terms().count() == 1)
                .and_then(|c| c.inverse_monomial())
                .ok_or(ParseError::new(*off, ErrorKind::InvalidDivisor))?;
            num.scale(&inverse)
        }
        Expr::Pow(a, k, at) => {
            let base = lower(a, dim)?;
            let mut out = Multivector::one(dim);
            for _ in 0..*k {
                out = checked_product(&out, &base, *at)?;
            }
            out
        }
    })
}

/// Lowers an expression that must not contain generator symbols.
pub fn lower_poly(e: &Expr) -> Result<Poly, ParseError> {
    Ok(lower(e, 0)?.scalar_part())
}

pub fn parse_mv(src: &str, dim: usize) -> Result<Mv, ParseError> {
    lower(&parse(src)?, dim)
}

pub fn parse_poly(src: &str) -> Result<Poly, ParseError> {
    lower_poly(&parse(src)?)
}
