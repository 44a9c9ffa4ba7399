//! Polynomial expressions in one variable `x`.
//!
//! ```text
//! sum    := term (('+' | '-') term)*
//! term   := unary ('*' unary | unary)*        implicit product before 'x' or '('
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' INT)?                   '^' does not chain
//! atom   := INT | 'x' | '(' sum ')'
//! ```
//!
//! The list form `coeffs:c0,c1,...,ck` (ascending) is accepted as well.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Limits, Result};
use crate::poly::IntPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyExpr {
    Int(BigInt),
    Var,
    Neg(Box<PolyExpr>),
    Add(Box<PolyExpr>, Box<PolyExpr>),
    Sub(Box<PolyExpr>, Box<PolyExpr>),
    Mul(Box<PolyExpr>, Box<PolyExpr>),
    Pow(Box<PolyExpr>, u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Var,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(v) => format!("integer {v}"),
        Tok::Var => "'x'".into(),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Caret => "'^'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::End => "end of input".into(),
    }
}

fn err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let mut toks = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        let tok = match c {
            c if c.is_whitespace() => {
                chars.next();
                continue;
            }
            '0'..='9' => {
                let mut end = pos;
                while let Some(&(i, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = i + 1;
                    chars.next();
                }
                toks.push((Tok::Int(text[pos..end].parse().unwrap()), pos));
                continue;
            }
            'x' | 'X' => Tok::Var,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => return Err(err(pos, format!("unexpected character '{other}'"))),
        };
        chars.next();
        toks.push((tok, pos));
    }
    toks.push((Tok::End, text.len()));
    Ok(toks)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, expected: &str) -> Error {
        err(
            self.pos(),
            format!("expected {expected}, found {}", describe(self.peek())),
        )
    }

    fn sum(&mut self) -> Result<PolyExpr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = PolyExpr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = PolyExpr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<PolyExpr> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                }
                Tok::Var | Tok::LParen => {}
                _ => return Ok(lhs),
            }
            lhs = PolyExpr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
    }

    fn unary(&mut self) -> Result<PolyExpr> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(PolyExpr::Neg(Box::new(self.unary()?)))
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<PolyExpr> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        let Tok::Int(e) = self.peek().clone() else {
            return Err(self.unexpected("a nonnegative integer exponent"));
        };
        self.bump();
        let e = e
            .to_u32()
            .ok_or_else(|| err(pos, format!("exponent {e} is too large")))?;
        if *self.peek() == Tok::Caret {
            return Err(err(
                self.pos(),
                "'^' does not chain; add parentheses",
            ));
        }
        Ok(PolyExpr::Pow(Box::new(base), e))
    }

    fn atom(&mut self) -> Result<PolyExpr> {
        match self.peek().clone() {
            Tok::Int(v) => {
                self.bump();
                Ok(PolyExpr::Int(v))
            }
            Tok::Var => {
                self.bump();
                Ok(PolyExpr::Var)
            }
            Tok::LParen => {
                self.bump();
                let inner = self.sum()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected("')'"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected("an integer, 'x' or '('")),
        }
    }
}

pub fn parse_expr(text: &str) -> Result<PolyExpr> {
    let mut p = Parser {
        toks: tokenize(text)?,
        at: 0,
    };
    let expr = p.sum()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(expr)
}

/// Largest exponent accepted on a constant base of absolute value above 1.
const CONSTANT_EXPONENT_CAP: u32 = 100_000;

impl PolyExpr {
    pub fn evaluate(&self, budget: usize) -> Result<IntPoly> {
        let check = |degree: usize| {
            if degree > budget {
                Err(Error::DegreeLimit { degree, budget })
            } else {
                Ok(())
            }
        };
        Ok(match self {
            PolyExpr::Int(v) => IntPoly::constant(v.clone()),
            PolyExpr::Var => IntPoly::x(),
            PolyExpr::Neg(e) => -e.evaluate(budget)?,
            PolyExpr::Add(l, r) => l.evaluate(budget)? + r.evaluate(budget)?,
            PolyExpr::Sub(l, r) => l.evaluate(budget)? - r.evaluate(budget)?,
            PolyExpr::Mul(l, r) => {
                let (l, r) = (l.evaluate(budget)?, r.evaluate(budget)?);
                if let (Some(dl), Some(dr)) = (l.degree(), r.degree()) {
                    check(dl + dr)?;
                }
                l * r
            }
            PolyExpr::Pow(b, e) => {
                let b = b.evaluate(budget)?;
                match b.degree() {
                    Some(0) if b.coeffs()[0].abs() > BigInt::from(1) && *e > CONSTANT_EXPONENT_CAP => {
                        return Err(Error::size(format!(
                            "constant power with exponent {e} is too large"
                        )));
                    }
                    Some(d) if d > 0 => {
                        check(d.saturating_mul(*e as usize))?;
                    }
                    _ => {}
                }
                b.pow(*e)
            }
        })
    }
}

pub fn parse_poly(text: &str) -> Result<IntPoly> {
    parse_poly_with(text, Limits::default().degree_budget)
}

pub fn parse_poly_with(text: &str, budget: usize) -> Result<IntPoly> {
    let trimmed = text.trim_start();
    let lead = text.len() - trimmed.len();
    if trimmed.len() >= 7 && trimmed[..7].eq_ignore_ascii_case("coeffs:") {
        return parse_coeff_list(&trimmed[7..], lead + 7, budget);
    }
    parse_expr(text)?.evaluate(budget)
}

fn parse_coeff_list(body: &str, offset: usize, budget: usize) -> Result<IntPoly> {
    if body.trim().is_empty() {
        return Ok(IntPoly::zero());
    }
    let mut coeffs = Vec::new();
    let mut start = 0;
    for piece in body.split(',') {
        let pos = offset + start + (piece.len() - piece.trim_start().len());
        let item = piece.trim();
        let digits = item.strip_prefix(['+', '-']).unwrap_or(item);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err(pos, format!("expected an integer coefficient, found '{item}'")));
        }
        coeffs.push(item.parse::<BigInt>().unwrap());
        start += piece.len() + 1;
    }
    let f = IntPoly::new(coeffs);
    if let Some(d) = f.degree() {
        if d > budget {
            return Err(Error::DegreeLimit { degree: d, budget });
        }
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn documented_examples() {
        assert_eq!(parse_poly("x^2 - x + 1").unwrap(), p(&[1, -1, 1]));
        assert_eq!(parse_poly("(x+1)*(x-1)").unwrap(), p(&[-1, 0, 1]));
        assert_eq!(parse_poly("coeffs:-1,0,1").unwrap(), p(&[-1, 0, 1]));
        assert!(matches!(parse_poly("x^-1"), Err(Error::Parse { position: 2, .. })));
    }

    #[test]
    fn precedence_and_implicit_products() {
        assert_eq!(parse_poly("-x^2").unwrap(), p(&[0, 0, -1]));
        assert_eq!(parse_poly("2x^3").unwrap(), p(&[0, 0, 0, 2]));
        assert_eq!(parse_poly("2(x+1)").unwrap(), p(&[2, 2]));
        assert_eq!(parse_poly("(x+1)(x-1)").unwrap(), p(&[-1, 0, 1]));
        assert_eq!(parse_poly("X(X+1)").unwrap(), p(&[0, 1, 1]));
        assert_eq!(parse_poly("2*-x").unwrap(), p(&[0, -2]));
        assert_eq!(parse_poly("1 - x - x^2").unwrap(), p(&[1, -1, -1]));
        assert_eq!(parse_poly("(x^2)^3").unwrap(), p(&[0, 0, 0, 0, 0, 0, 1]));
        assert_eq!(parse_poly("2^3 x").unwrap(), p(&[0, 8]));
        assert_eq!(parse_poly("0").unwrap(), IntPoly::zero());
    }

    #[test]
    fn syntax_errors() {
        for bad in ["x^2^3", "", "x+", "(x+1", "x)", "2 3", "x^y", "3 % x", "x ^ (2)"] {
            assert!(matches!(parse_poly(bad), Err(Error::Parse { .. })), "{bad:?}");
        }
        match parse_poly("x^2^3") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn coefficient_list_errors() {
        assert_eq!(parse_poly("  COEFFS: 3 , -4,0 ").unwrap(), p(&[3, -4]));
        assert_eq!(parse_poly("coeffs:").unwrap(), IntPoly::zero());
        match parse_poly("coeffs:1,,2") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 9),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_poly("coeffs:1,x"), Err(Error::Parse { .. })));
    }

    #[test]
    fn degree_budget() {
        assert!(matches!(
            parse_poly_with("x^11", 10),
            Err(Error::DegreeLimit { degree: 11, budget: 10 })
        ));
        assert!(matches!(
            parse_poly_with("x^6 * x^5", 10),
            Err(Error::DegreeLimit { .. })
        ));
        assert!(matches!(
            parse_poly_with("coeffs:0,0,0,1", 2),
            Err(Error::DegreeLimit { .. })
        ));
        assert!(parse_poly_with("x^10", 10).is_ok());
        assert!(parse_poly_with("1^4000000000", 10).is_ok());
    }
}
