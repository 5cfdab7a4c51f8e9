//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary ('*' unary)*
//! unary := ('-' | '+') unary | power
//! power := atom ('^' uint)?
//! atom  := number ('/' number)? | ident | '(' expr ')'
//! ```
//!
//! Multiplication is always explicit: `2x` is a syntax error.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Rational;

use super::{Polynomial, VarSet};

const MAX_EXPONENT: u32 = 10_000;

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    vars: &'a VarSet,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, vars: &'a VarSet) -> Self {
        Parser {
            src,
            bytes: src.as_bytes(),
            pos: 0,
            vars,
        }
    }

    fn error<T>(&self, position: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            position,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn describe_here(&mut self) -> String {
        match self.peek() {
            None => "unexpected end of input".to_string(),
            Some(_) => {
                let ch = self.src[self.pos..].chars().next().unwrap_or('?');
                format!("unexpected `{ch}`")
            }
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while self.eat(b'*') {
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        if self.eat(b'-') {
            Ok(-&self.unary()?)
        } else if self.eat(b'+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return self.error(start, "expected a nonnegative integer exponent");
            }
            let e: u32 = match digits.parse() {
                Ok(e) if e <= MAX_EXPONENT => e,
                _ => return self.error(start, format!("exponent exceeds {MAX_EXPONENT}")),
            };
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn number(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        let d = self.digits();
        if d.is_empty() {
            return self.error(start, "expected a number");
        }
        Ok(d.parse().expect("ascii digits"))
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let start = match self.peek() {
            Some(_) => self.pos,
            None => return self.error(self.pos, "unexpected end of input"),
        };
        let c = self.bytes[start];
        if c.is_ascii_digit() {
            let num = self.number()?;
            let value = if self.eat(b'/') {
                let den_pos = {
                    self.skip_ws();
                    self.pos
                };
                let den = self.number()?;
                if den.is_zero() {
                    return self.error(den_pos, "division by zero");
                }
                Rational::new(num, den)
            } else {
                Rational::from_integer(num)
            };
            self.reject_juxtaposition()?;
            return Ok(Polynomial::constant(self.vars, value));
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            while self.pos < self.bytes.len()
                && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
            {
                self.pos += 1;
            }
            let name = &self.src[start..self.pos];
            let idx = self.vars.require(name)?;
            return Ok(Polynomial::var(self.vars, idx));
        }
        if c == b'(' {
            self.pos += 1;
            let inner = self.expr()?;
            if !self.eat(b')') {
                let msg = self.describe_here();
                return self.error(self.pos, format!("{msg}, expected `)`"));
            }
            return Ok(inner);
        }
        let msg = self.describe_here();
        self.error(start, msg)
    }

    /// `2x` and `2(x)` are rejected with a pointed message.
    fn reject_juxtaposition(&mut self) -> Result<()> {
        if let Some(&c) = self.bytes.get(self.pos) {
            if c.is_ascii_alphabetic() || c == b'_' || c == b'(' {
                return self.error(self.pos, "implicit multiplication is not supported, use `*`");
            }
        }
        Ok(())
    }

    fn finish(&mut self) -> Result<()> {
        if self.peek().is_some() {
            let msg = self.describe_here();
            return self.error(self.pos, msg);
        }
        Ok(())
    }
}

pub(crate) fn parse_polynomial(text: &str, vars: &VarSet) -> Result<Polynomial> {
    let mut p = Parser::new(text, vars);
    let out = p.expr()?;
    p.finish()?;
    Ok(out)
}

/// Parses a comma-separated list of polynomials. Positions in errors are
/// offsets into the whole input.
pub fn parse_polynomial_list(text: &str, vars: &VarSet) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        if piece.trim().is_empty() {
            if text.trim().is_empty() {
                break;
            }
            return Err(Error::Syntax {
                position: offset,
                message: "empty polynomial in list".into(),
            });
        }
        let p = parse_polynomial(piece, vars).map_err(|e| match e {
            Error::Syntax { position, message } => Error::Syntax {
                position: position + offset,
                message,
            },
            other => other,
        })?;
        out.push(p);
        offset += piece.len() + 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ratio;
    use crate::poly::Monomial;

    fn xy() -> VarSet {
        VarSet::new(["x", "y"]).unwrap()
    }

    #[test]
    fn parses_rational_coefficients() {
        let p = Polynomial::parse("3/4*x^2*y^4 - x^3", &xy()).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.coeff(&Monomial::new(vec![2, 4])), ratio(3, 4));
        assert_eq!(p.coeff(&Monomial::new(vec![3, 0])), ratio(-1, 1));
    }

    #[test]
    fn parentheses_and_unary() {
        let a = Polynomial::parse("-(x+y)^2", &xy()).unwrap();
        let b = Polynomial::parse("-x^2 - 2*x*y - y^2", &xy()).unwrap();
        assert_eq!(a, b);
        assert_eq!(
            Polynomial::parse("--x", &xy()).unwrap(),
            Polynomial::parse("x", &xy()).unwrap()
        );
    }

    #[test]
    fn syntax_errors_carry_position() {
        match Polynomial::parse("x + * y", &xy()) {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 4),
            other => panic!("{other:?}"),
        }
        match Polynomial::parse("2x", &xy()) {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 1),
            other => panic!("{other:?}"),
        }
        assert!(matches!(Polynomial::parse("(x", &xy()), Err(Error::Syntax { .. })));
        assert!(matches!(Polynomial::parse("x^", &xy()), Err(Error::Syntax { .. })));
        assert!(matches!(Polynomial::parse("1/0", &xy()), Err(Error::Syntax { .. })));
        assert!(matches!(Polynomial::parse("", &xy()), Err(Error::Syntax { .. })));
        assert!(matches!(Polynomial::parse("x y", &xy()), Err(Error::Syntax { .. })));
    }

    #[test]
    fn unknown_variable() {
        assert_eq!(
            Polynomial::parse("x + z", &xy()),
            Err(Error::UnknownVariable("z".into()))
        );
    }

    #[test]
    fn list_parsing() {
        let l = parse_polynomial_list("x^2, y^3, x*y^2", &xy()).unwrap();
        assert_eq!(l.len(), 3);
        match parse_polynomial_list("x, y + ", &xy()) {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 7),
            other => panic!("{other:?}"),
        }
        assert!(parse_polynomial_list("x,,y", &xy()).is_err());
        assert!(parse_polynomial_list("  ", &xy()).unwrap().is_empty());
    }
}
