//! Text grammar for polynomials over ℚ(i) in the variable `z`.
//!
//! ```text
//! expr    := ['+' | '-'] term (('+' | '-') term)*
//! term    := factor (('*' | '/') factor | factor)*     juxtaposition multiplies
//! factor  := primary ['^' integer]
//! primary := integer | 'i' | 'z' | '(' expr ')'
//! ```
//!
//! Division is only allowed by nonzero constants, so `1/2`, `(1/3)i` and
//! `1/2 + (1/3)i*z^2` all parse. Whitespace is ignored.

use std::str::FromStr;

use super::gauss_poly::GaussPoly;
use super::rational::GaussRational;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;

const MAX_EXPONENT: u32 = 4096;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    I,
    Z,
    End,
}

fn err(column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        column,
        message: message.into(),
    }
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let col = k + 1;
        let tok = match c {
            c if c.is_whitespace() => {
                k += 1;
                continue;
            }
            '0'..='9' => {
                let start = k;
                while k < chars.len() && chars[k].is_ascii_digit() {
                    k += 1;
                }
                let digits: String = chars[start..k].iter().collect();
                out.push((Tok::Int(digits.parse().expect("ascii digits")), col));
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            'i' | 'I' => Tok::I,
            'z' | 'Z' => Tok::Z,
            other => return Err(err(col, format!("unexpected character '{other}'"))),
        };
        out.push((tok, col));
        k += 1;
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn column(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<GaussPoly> {
        let mut acc = match self.peek() {
            Tok::Minus => {
                self.bump();
                -self.term()?
            }
            Tok::Plus => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<GaussPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.factor()?;
                }
                Tok::Slash => {
                    self.bump();
                    let col = self.column();
                    let d = self.factor()?;
                    if d.degree() != Some(0) {
                        return Err(err(col, "division is only allowed by a nonzero constant"));
                    }
                    let inv = d.coeff(0).inv().expect("nonzero constant");
                    acc = acc.scale(&inv);
                }
                Tok::I | Tok::Z | Tok::LParen => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<GaussPoly> {
        let base = self.primary()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let col = self.column();
        match self.bump() {
            Tok::Int(e) => {
                let e: u32 = e
                    .try_into()
                    .ok()
                    .filter(|&e| e <= MAX_EXPONENT)
                    .ok_or_else(|| err(col, "exponent too large"))?;
                Ok(base.pow(e))
            }
            _ => Err(err(col, "expected a nonnegative integer exponent")),
        }
    }

    fn primary(&mut self) -> Result<GaussPoly> {
        let col = self.column();
        match self.bump() {
            Tok::Int(n) => Ok(GaussPoly::constant(GaussRational::from(BigRational::from_integer(n)))),
            Tok::I => Ok(GaussPoly::constant(GaussRational::i())),
            Tok::Z => Ok(GaussPoly::z()),
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.column();
                match self.bump() {
                    Tok::RParen => Ok(inner),
                    _ => Err(err(close, "expected ')'")),
                }
            }
            Tok::End => Err(err(col, "unexpected end of input")),
            other => Err(err(col, format!("unexpected token {other:?}"))),
        }
    }
}

pub fn parse_poly(src: &str) -> Result<GaussPoly> {
    let toks = tokenize(src)?;
    let mut parser = Parser { toks, pos: 0 };
    let p = parser.expr()?;
    match parser.peek() {
        Tok::End => Ok(p),
        _ => Err(err(parser.column(), "unexpected trailing input")),
    }
}

/// Parses a constant (no `z`) in the same grammar.
pub fn parse_scalar(src: &str) -> Result<GaussRational> {
    let p = parse_poly(src)?;
    match p.degree() {
        None => Ok(GaussRational::zero()),
        Some(0) => Ok(p.coeff(0)),
        Some(_) => Err(err(1, "expected a constant, found a polynomial in z")),
    }
}

impl FromStr for GaussPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)
    }
}

impl FromStr for GaussRational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_scalar(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_cases() {
        let p = parse_poly("1/2 + (1/3)i*z^2").unwrap();
        assert_eq!(p.coeff(0), GaussRational::from_ratio(1, 2));
        assert!(p.coeff(1).is_zero());
        assert_eq!(p.coeff(2), GaussRational::from_parts(0, 1, 1, 3));
        assert_eq!(parse_poly(" 3 * z ").unwrap(), GaussPoly::from_integers(&[0, 3]));
        assert_eq!(parse_poly("-z^0").unwrap(), GaussPoly::from_integers(&[-1]));
        assert_eq!(
            parse_scalar("1/2 + (1/3)i").unwrap(),
            GaussRational::from_parts(1, 2, 1, 3)
        );
        assert!(parse_poly("0").unwrap().is_zero());
    }

    #[test]
    fn reports_columns() {
        match parse_poly("z + 2 $") {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 7),
            other => panic!("{other:?}"),
        }
        match parse_poly("1/z") {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 3),
            other => panic!("{other:?}"),
        }
        assert!(parse_poly("(z+1").is_err());
        assert!(parse_poly("z^").is_err());
        assert!(parse_poly("").is_err());
        assert!(parse_scalar("z").is_err());
    }
}
