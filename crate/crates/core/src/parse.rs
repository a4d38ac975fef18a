//! Text grammar for polynomials in `x`, `y`.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary ('*' unary)*
//! unary   := ('-' | '+') unary | power
//! power   := primary ('^' integer)?
//! primary := integer ('/' integer)? | 'x' | 'y' | '(' expr ')'
//! ```
//!
//! Variables are case-insensitive. `/` is only legal inside a rational
//! literal, and juxtaposition (`2x`) is rejected.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::heights::AlgebraicNumber;
use crate::rational::{parse_rat, BigRat};
use crate::upoly::IntPoly;

const MAX_EXPONENT: u32 = 4096;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    X,
    Y,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        pos,
        msg: msg.into(),
    })
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let tok = match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Num(s[start..i].parse().unwrap())));
                continue;
            }
            'x' | 'X' => Tok::X,
            'y' | 'Y' => Tok::Y,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => {
                let ch = s[i..].chars().next().unwrap();
                return err(i, format!("unexpected character '{ch}'"));
            }
        };
        out.push((i, tok));
        i += 1;
    }
    out.push((s.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<BiPoly> {
        let mut acc = self.term()?;
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

    fn term(&mut self) -> Result<BiPoly> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<BiPoly> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(-&self.unary()?)
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<BiPoly> {
        let base = self.primary()?;
        let out = if *self.peek() == Tok::Caret {
            self.bump();
            let pos = self.pos();
            match self.bump() {
                Tok::Num(n) => {
                    let e: u32 = match u32::try_from(&n) {
                        Ok(e) if e <= MAX_EXPONENT => e,
                        _ => return err(pos, format!("exponent larger than {MAX_EXPONENT}")),
                    };
                    base.pow(e)
                }
                _ => return err(pos, "expected a nonnegative integer exponent"),
            }
        } else {
            base
        };
        match self.peek() {
            Tok::Num(_) | Tok::X | Tok::Y | Tok::LParen => {
                err(self.pos(), "implicit multiplication is not allowed; use '*'")
            }
            Tok::Caret => err(self.pos(), "chained exponent; use parentheses"),
            Tok::Slash => err(self.pos(), "'/' is only allowed inside a rational literal"),
            _ => Ok(out),
        }
    }

    fn primary(&mut self) -> Result<BiPoly> {
        let pos = self.pos();
        match self.bump() {
            Tok::Num(n) => {
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let dpos = self.pos();
                    match self.bump() {
                        Tok::Num(d) if d.is_zero() => err(dpos, "zero denominator"),
                        Tok::Num(d) => Ok(BiPoly::constant(BigRat::new(n, d))),
                        _ => err(dpos, "expected an integer denominator"),
                    }
                } else {
                    Ok(BiPoly::constant(BigRat::from_integer(n)))
                }
            }
            Tok::X => Ok(BiPoly::x()),
            Tok::Y => Ok(BiPoly::y()),
            Tok::LParen => {
                let inner = self.expr()?;
                let rpos = self.pos();
                match self.bump() {
                    Tok::RParen => Ok(inner),
                    _ => err(rpos, "expected ')'"),
                }
            }
            Tok::End => err(pos, "unexpected end of input"),
            t => err(pos, format!("unexpected token {}", describe(&t))),
        }
    }
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::Num(_) => "number",
        Tok::X | Tok::Y => "variable",
        Tok::Plus => "'+'",
        Tok::Minus => "'-'",
        Tok::Star => "'*'",
        Tok::Caret => "'^'",
        Tok::Slash => "'/'",
        Tok::LParen => "'('",
        Tok::RParen => "')'",
        Tok::End => "end of input",
    }
}

/// Parses a polynomial in `x`, `y`. Errors carry the byte offset.
pub fn parse_bipoly(s: &str) -> Result<BiPoly> {
    let mut p = Parser {
        toks: lex(s)?,
        at: 0,
    };
    let out = p.expr()?;
    if *p.peek() != Tok::End {
        return err(p.pos(), format!("unexpected {}", describe(p.peek())));
    }
    Ok(out)
}

/// Parses a univariate polynomial in a single variable (either `x` or `y`)
/// and returns its primitive integer form.
pub fn parse_univariate(s: &str) -> Result<IntPoly> {
    let p = parse_bipoly(s)?;
    let f = if p.deg_y() == 0 {
        p.eval_partial_y(&BigRat::zero())
    } else if p.deg_x() == 0 {
        p.eval_partial_x(&BigRat::zero())
    } else {
        return err(0, "expected a polynomial in one variable");
    };
    Ok(f.to_int_primitive().1)
}

/// Parses a rational literal `p/q` or `root(<poly>, <index>)`. The
/// polynomial must be irreducible unless `assume_irreducible` is set.
pub fn parse_algebraic(s: &str, assume_irreducible: bool) -> Result<AlgebraicNumber> {
    let lead = s.len() - s.trim_start().len();
    let t = s.trim();
    if let Some(inner) = t.strip_prefix("root(") {
        let Some(inner) = inner.strip_suffix(')') else {
            return err(lead + t.len(), "expected ')'");
        };
        let Some((poly, idx)) = inner.rsplit_once(',') else {
            return err(lead + 5 + inner.len(), "expected ', <index>'");
        };
        let base = lead + 5;
        let f = parse_univariate(poly).map_err(|e| match e {
            Error::Parse { pos, msg } => Error::Parse { pos: pos + base, msg },
            e => e,
        })?;
        let Ok(i) = idx.trim().parse::<usize>() else {
            return err(base + poly.len() + 1, "expected a root index");
        };
        if assume_irreducible {
            if f.degree() == 0 || i >= f.degree() {
                return Err(Error::Invalid(format!("root index {i} out of range")));
            }
            return Ok(AlgebraicNumber::from_irreducible(f, i));
        }
        return AlgebraicNumber::from_root(&f, i);
    }
    match parse_rat(t) {
        Some(r) => Ok(AlgebraicNumber::rational(&r)),
        None => err(lead, "expected a rational p/q or root(<poly>, <index>)"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn parses_basic_forms() {
        let p = parse_bipoly("X^2 - y^2 - 1").unwrap();
        assert_eq!(p, BiPoly::from_i64(&[(2, 0, 1), (0, 2, -1), (0, 0, -1)]));
        let q = parse_bipoly("(x - y)*(x + y)").unwrap();
        assert_eq!(q, BiPoly::from_i64(&[(2, 0, 1), (0, 2, -1)]));
        let r = parse_bipoly("1/3*x + 2").unwrap();
        assert_eq!(r, BiPoly::from_terms([((1, 0), rat(1, 3)), ((0, 0), int(2))]));
        assert_eq!(parse_bipoly("-x^2").unwrap(), BiPoly::from_i64(&[(2, 0, -1)]));
        assert_eq!(parse_bipoly("2 * (x)^3").unwrap(), BiPoly::from_i64(&[(3, 0, 2)]));
    }

    #[test]
    fn rejects_implicit_multiplication() {
        match parse_bipoly("2x") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 1),
            other => panic!("{other:?}"),
        }
        assert!(parse_bipoly("x y").is_err());
        assert!(parse_bipoly("(x)(y)").is_err());
    }

    #[test]
    fn reports_positions() {
        match parse_bipoly("x + * y") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        match parse_bipoly("x + (y") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("{other:?}"),
        }
        match parse_bipoly("x / 2") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("{other:?}"),
        }
        assert!(parse_bipoly("1/0").is_err());
        assert!(parse_bipoly("z").is_err());
        assert!(parse_bipoly("").is_err());
    }

    #[test]
    fn univariate() {
        assert_eq!(parse_univariate("x^2 - 6").unwrap(), IntPoly::from_i64(&[-6, 0, 1]));
        assert_eq!(parse_univariate("2*y - 1").unwrap(), IntPoly::from_i64(&[-1, 2]));
        assert!(parse_univariate("x*y").is_err());
    }

    #[test]
    fn algebraic_literals() {
        let a = parse_algebraic("root(x^2 - 6, 1)", false).unwrap();
        assert_eq!(a.to_text(), "root(x^2 - 6, 1)");
        assert_eq!(parse_algebraic(" -3/6 ", false).unwrap().to_text(), "-1/2");
        assert!(matches!(parse_algebraic("root(x^2 - 1, 0)", false), Err(Error::Hypothesis(_))));
        match parse_algebraic("root(x^2 - , 0)", false) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 11),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_algebraic("abc", false), Err(Error::Parse { pos: 0, .. })));
    }
}
