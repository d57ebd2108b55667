//! Recursive-descent parser for polynomial expressions in x, y, z.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (['*'] power)*           -- juxtaposition multiplies
//! unary   := ('+' | '-') unary | power
//! power   := atom ['^' integer]
//! atom    := number | 'x' | 'y' | 'z' | '(' expr ')'
//! number  := digits ['/' digits]
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::mpoly::{MPoly, Var};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigRational),
    Var(Var),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(n) => format!("number {n}"),
            Tok::Var(v) => format!("variable {}", v.name()),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn err<T>(offset: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        offset,
        message: message.into(),
    })
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
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
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'x' => Tok::Var(Var::X),
            b'y' => Tok::Var(Var::Y),
            b'z' => Tok::Var(Var::Z),
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let num: BigInt = src[start..i].parse().expect("digits");
                let mut den = BigInt::from(1);
                if i + 1 < bytes.len() && bytes[i] == b'/' && bytes[i + 1].is_ascii_digit() {
                    let ds = i + 1;
                    i += 1;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    den = src[ds..i].parse().expect("digits");
                    if den.is_zero() {
                        return err(ds, "zero denominator");
                    }
                }
                out.push((start, Tok::Num(BigRational::new(num, den))));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                return err(
                    start,
                    format!("unknown variable '{}' (expected x, y or z)", c as char),
                );
            }
            _ => {
                let ch = src[start..].chars().next().unwrap();
                return err(start, format!("unexpected character '{ch}'"));
            }
        };
        i += 1;
        out.push((start, tok));
    }
    out.push((src.len(), Tok::Eof));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if t != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<MPoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc + self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Num(_) | Tok::Var(_) | Tok::LParen => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<MPoly> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(-self.unary()?)
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MPoly> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        match self.bump() {
            Tok::Num(n) => {
                if !n.is_integer() {
                    return err(at, "exponent must be a nonnegative integer");
                }
                match n.to_integer().to_u32() {
                    Some(e) if e <= 10_000 => Ok(base.pow(e)),
                    _ => err(at, "exponent too large"),
                }
            }
            Tok::Minus => err(at, "negative exponents are not allowed"),
            t => err(at, format!("expected exponent, found {}", t.describe())),
        }
    }

    fn atom(&mut self) -> Result<MPoly> {
        let at = self.offset();
        match self.bump() {
            Tok::Num(n) => Ok(MPoly::constant(n)),
            Tok::Var(v) => Ok(MPoly::var(v)),
            Tok::LParen => {
                let e = self.expr()?;
                let at = self.offset();
                match self.bump() {
                    Tok::RParen => Ok(e),
                    t => err(at, format!("expected ')', found {}", t.describe())),
                }
            }
            t => err(
                at,
                format!("expected number, variable or '(', found {}", t.describe()),
            ),
        }
    }
}

/// Parse a polynomial expression. Error offsets are byte offsets into `src`.
pub fn parse_poly(src: &str) -> Result<MPoly> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
    };
    let e = p.expr()?;
    let at = p.offset();
    match p.peek() {
        Tok::Eof => Ok(e),
        t => err(at, format!("unexpected {}", t.describe())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::Monomial;
    use crate::scalar::rat;

    fn offset_of(s: &str) -> usize {
        match parse_poly(s) {
            Err(Error::Parse { offset, .. }) => offset,
            other => panic!("expected parse error for {s:?}, got {other:?}"),
        }
    }

    #[test]
    fn example_one_curve() {
        let p = parse_poly("y^2*z - x^3").unwrap();
        assert_eq!(p.to_string(), "-x^3+y^2*z");
    }

    #[test]
    fn juxtaposition() {
        let p = parse_poly("2x^2y").unwrap();
        assert_eq!(p, MPoly::term(rat(2), Monomial::new(2, 1, 0)));
        assert_eq!(
            parse_poly("(x+1)(x-1)").unwrap(),
            parse_poly("x^2-1").unwrap()
        );
        assert_eq!(parse_poly("-x^2").unwrap(), -parse_poly("x^2").unwrap());
        assert_eq!(parse_poly("3/4 x").unwrap().to_string(), "3/4*x");
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(offset_of("x +"), 3);
        assert_eq!(offset_of("x + w"), 4);
        assert_eq!(offset_of("x^-1"), 2);
        assert_eq!(offset_of("x^1/2"), 2);
        assert_eq!(offset_of("(x+y"), 4);
        assert_eq!(offset_of("x)"), 1);
        assert_eq!(offset_of("x^y"), 2);
    }
}
