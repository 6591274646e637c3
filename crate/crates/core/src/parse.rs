//! Text parsers for polynomials, κ-rational coefficients and quantum numbers.
//!
//! The expression grammar is small:
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := ('+' | '-') unary | power
//! power := atom ('^' integer)?
//! atom  := integer | 'k' | 'κ' | 'z1' | 'z2' | 'z3' | 'z4' | '(' expr ')'
//! ```
//!
//! Division is only allowed by z-free, nonzero subexpressions, so every
//! accepted expression denotes a `ZPolynomial` over `KappaRational`.

use std::fmt;

use num_bigint::BigInt;

use crate::algebra::{KPoly, KappaRational, Var, ZPolynomial};
use crate::rootsystem::WeightVector;

const MAX_DEPTH: usize = 64;
const MAX_EXPONENT: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Kappa,
    Z(Var),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = input.char_indices().peekable();
    while let Some(&(pos, ch)) = chars.peek() {
        let tok = match ch {
            c if c.is_whitespace() => {
                chars.next();
                continue;
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&(_, d)) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push((pos, Token::Int(digits.parse().expect("ascii digits"))));
                continue;
            }
            'k' | 'κ' => Token::Kappa,
            'z' => {
                chars.next();
                let var = match chars.peek().map(|&(_, c)| c) {
                    Some('1') => Var::Z1,
                    Some('2') => Var::Z2,
                    Some('3') => Var::Z3,
                    Some('4') => Var::Z4,
                    _ => return Err(err(pos, "expected z1, z2, z3 or z4")),
                };
                chars.next();
                out.push((pos, Token::Z(var)));
                continue;
            }
            '+' => Token::Plus,
            '-' | '−' => Token::Minus,
            '*' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            other => return Err(err(pos, &format!("unexpected character {other:?}"))),
        };
        chars.next();
        out.push((pos, tok));
    }
    Ok(out)
}

fn err(position: usize, message: &str) -> ParseError {
    ParseError { position, message: message.to_string() }
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<ZPolynomial, ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(err(self.here(), "expression nested too deeply"));
        }
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Token::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn term(&mut self) -> Result<ZPolynomial, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Some(Token::Slash) => {
                    let at = self.here();
                    self.bump();
                    let d = self.unary()?;
                    let scalar = z_free(&d).ok_or_else(|| err(at, "divisor depends on z"))?;
                    let inv = KappaRational::one().checked_div(&scalar).map_err(|_| err(at, "division by zero"))?;
                    acc = acc.scale(&inv);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<ZPolynomial, ParseError> {
        match self.peek() {
            Some(Token::Minus) => {
                self.bump();
                self.enter()?;
                let v = -&self.unary()?;
                self.depth -= 1;
                Ok(v)
            }
            Some(Token::Plus) => {
                self.bump();
                self.enter()?;
                let v = self.unary()?;
                self.depth -= 1;
                Ok(v)
            }
            _ => self.power(),
        }
    }

    fn enter(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(err(self.here(), "expression nested too deeply"));
        }
        Ok(())
    }

    fn power(&mut self) -> Result<ZPolynomial, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.bump();
            let at = self.here();
            let n = match self.bump() {
                Some(Token::Int(n)) => u32::try_from(n)
                    .ok()
                    .filter(|&n| n <= MAX_EXPONENT)
                    .ok_or_else(|| err(at, "exponent out of range"))?,
                _ => return Err(err(at, "expected a nonnegative integer exponent")),
            };
            let mut acc = ZPolynomial::one();
            for _ in 0..n {
                acc = &acc * &base;
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<ZPolynomial, ParseError> {
        let at = self.here();
        match self.bump() {
            Some(Token::Int(n)) => Ok(ZPolynomial::constant(KappaRational::from_poly(KPoly::constant(n)))),
            Some(Token::Kappa) => Ok(ZPolynomial::constant(KappaRational::kappa())),
            Some(Token::Z(v)) => Ok(ZPolynomial::var(v)),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(err(self.here(), "expected ')'")),
                }
            }
            Some(_) => Err(err(at, "unexpected token")),
            None => Err(err(at, "unexpected end of input")),
        }
    }
}

fn z_free(p: &ZPolynomial) -> Option<KappaRational> {
    match p.len() {
        0 => Some(KappaRational::zero()),
        1 => p.coeff_ref(&[0; 4]).cloned(),
        _ => None,
    }
}

/// Parses a polynomial in z1..z4 whose coefficients are rational functions of κ.
pub fn parse_zpolynomial(input: &str) -> Result<ZPolynomial, ParseError> {
    let tokens = tokenize(input)?;
    let mut p = Parser { tokens, pos: 0, end: input.len(), depth: 0 };
    let v = p.expr()?;
    if p.pos < p.tokens.len() {
        return Err(err(p.here(), "trailing input"));
    }
    Ok(v)
}

/// Parses a z-free expression as a rational function of κ.
pub fn parse_kappa_rational(input: &str) -> Result<KappaRational, ParseError> {
    let p = parse_zpolynomial(input)?;
    z_free(&p).ok_or_else(|| err(0, "expression depends on z"))
}

/// Parses an integer-coefficient polynomial in κ, such as `3*k^2 - 4*k + 1`.
pub fn parse_kpoly(input: &str) -> Result<KPoly, ParseError> {
    let r = parse_kappa_rational(input)?;
    if !r.den().is_one() {
        return Err(err(0, "not an integer-coefficient polynomial in k"));
    }
    Ok(r.num().clone())
}

/// Parses four comma-separated integers, e.g. `1,0,2,0`.
pub fn parse_weight(input: &str) -> Result<WeightVector, ParseError> {
    let parts: Vec<&str> = input.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(err(0, "expected four comma-separated integers"));
    }
    let mut out = [0i64; 4];
    let mut offset = 0;
    for (o, part) in out.iter_mut().zip(&parts) {
        *o = part.parse().map_err(|_| err(offset, &format!("invalid integer {part:?}")))?;
        offset += part.len() + 1;
    }
    Ok(WeightVector(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_nested_rational_expression() {
        let p = parse_zpolynomial("z1^2-2/(1+k)*z2-8*k/((1+k)*(1+3*k))").unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.coeff(&[2, 0, 0, 0]), KappaRational::one());
        assert_eq!(p.coeff(&[0, 1, 0, 0]), parse_kappa_rational("-2/(k+1)").unwrap());
        let c = p.coeff(&[0; 4]);
        assert_eq!(c.num(), &KPoly::from_i64s(&[0, -8]));
        assert_eq!(c.den(), &KPoly::from_i64s(&[1, 4, 3]));
    }

    #[test]
    fn kpoly_round_trip() {
        let p = KPoly::from_i64s(&[-30, 103, 440, 0, -98, 1]);
        assert_eq!(parse_kpoly(&p.to_string()).unwrap(), p);
        assert_eq!(parse_kpoly("0").unwrap(), KPoly::zero());
        assert_eq!(parse_kpoly("-k").unwrap(), KPoly::from_i64s(&[0, -1]));
        assert!(parse_kpoly("1/k").is_err());
        assert!(parse_kpoly("z1").is_err());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_zpolynomial("").is_err());
        assert!(parse_zpolynomial("z5").is_err());
        assert!(parse_zpolynomial("1/z1").is_err());
        assert!(parse_zpolynomial("1/(k-k)").is_err());
        assert!(parse_zpolynomial("(z1").is_err());
        assert!(parse_zpolynomial("z1 z2").is_err());
        assert!(parse_zpolynomial("k^100").is_err());
        assert!(parse_zpolynomial(&"(".repeat(500)).is_err());
        assert!(parse_zpolynomial(&"-".repeat(500)).is_err());
    }

    #[test]
    fn weights() {
        assert_eq!(parse_weight("1,0, 2,0").unwrap(), WeightVector::new(1, 0, 2, 0));
        assert_eq!(parse_weight("-1,0,0,0").unwrap(), WeightVector::new(-1, 0, 0, 0));
        assert!(parse_weight("1,0,0").is_err());
        assert!(parse_weight("a,0,0,0").is_err());
    }
}
