//! Text form of polynomials: `+ - * / ^ ( )`, rational and decimal literals,
//! identifiers, and implicit multiplication (`2x`, `(1+s)(1-2t)`, `x^2 y`).
//! Division is allowed only by constants.

use std::collections::BTreeMap;

use super::multi::MultiPoly;
use crate::error::{Error, Result};
use crate::exact::{parse_rational, Rational};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(Rational),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Token::Num(parse_rational(&s)?));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else {
            return Err(Error::Format(format!("unexpected character {c:?} in {text:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    env: &'a BTreeMap<String, MultiPoly>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat('/') {
                let d = self.unary()?;
                let k = d
                    .as_constant()
                    .ok_or_else(|| Error::Format("division by a non-constant polynomial".into()))?;
                if num_traits::Zero::is_zero(&k) {
                    return Err(Error::Format("division by zero".into()));
                }
                acc = acc.scale(&(Rational::from_integer(1.into()) / k));
            } else if matches!(self.peek(), Some(Token::Num(_) | Token::Ident(_) | Token::Op('('))) {
                acc = acc.mul(&self.power()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<MultiPoly> {
        if self.eat('-') {
            Ok(self.unary()?.neg())
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.tokens.get(self.pos).cloned() {
                Some(Token::Num(k)) if k.is_integer() && k >= Rational::from_integer(0.into()) => {
                    self.pos += 1;
                    let k: u32 = k
                        .to_integer()
                        .try_into()
                        .map_err(|_| Error::Format("exponent too large".into()))?;
                    Ok(base.pow(k))
                }
                _ => Err(Error::Format("exponent must be a nonnegative integer literal".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.tokens.get(self.pos).cloned() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                Ok(MultiPoly::constant(n))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                Ok(self.env.get(&name).cloned().unwrap_or_else(|| MultiPoly::var(&name)))
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Format("missing closing parenthesis".into()));
                }
                Ok(inner)
            }
            other => Err(Error::Format(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parses a polynomial expression; every identifier is a variable.
pub fn parse_poly(text: &str) -> Result<MultiPoly> {
    parse_poly_with(text, &BTreeMap::new())
}

/// Parses with named sub-expressions: identifiers found in `env` expand to their value.
pub fn parse_poly_with(text: &str, env: &BTreeMap<String, MultiPoly>) -> Result<MultiPoly> {
    let tokens = tokenize(text)?;
    let mut parser = Parser { tokens, pos: 0, env };
    let p = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Format(format!(
            "trailing input after position {} in {text:?}",
            parser.pos
        )));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn precedence_and_implicit_products() {
        let a = parse_poly("-x^2").unwrap();
        let b = parse_poly("0 - x*x").unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_poly("2(x+1)").unwrap(), parse_poly("2x + 2").unwrap());
        assert_eq!(parse_poly("(1+s)(1-s)").unwrap(), parse_poly("1 - s^2").unwrap());
        assert_eq!(parse_poly("x/4 + 0.5").unwrap(), parse_poly("1/4 x + 1/2").unwrap());
        assert_eq!(parse_poly("3/4").unwrap().as_constant(), Some(rat(3, 4)));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_poly("x / y").is_err());
        assert!(parse_poly("x^y").is_err());
        assert!(parse_poly("(x + 1").is_err());
        assert!(parse_poly("x $ 1").is_err());
        assert!(parse_poly("x / 0").is_err());
    }

    #[test]
    fn environment_expansion() {
        let mut env = BTreeMap::new();
        env.insert("S".to_string(), parse_poly("1 - s").unwrap());
        assert_eq!(parse_poly_with("2 S", &env).unwrap(), parse_poly("2 - 2 s").unwrap());
    }
}
