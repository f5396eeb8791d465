//! Polynomial literals: integers, `c<i>`/`x<i>`/`t<i>` with optional `L.`/`R.`
//! prefixes, `+ - * ^` and parentheses. No implicit multiplication.

use gradedtor_core::polyring::Family;
use gradedtor_core::{GradedVariable, Polynomial, Side};
use num_bigint::BigInt;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{message} at position {position}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub message: String,
}

pub fn parse_poly(text: &str) -> Result<Polynomial, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(format!("unexpected `{}`", p.src[p.pos] as char)));
    }
    Ok(poly)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.unary()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.unary()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        if self.eat(b'-') {
            Ok(-&self.unary()?)
        } else {
            self.product()
        }
    }

    fn product(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.power()?;
        while self.eat(b'*') {
            acc = &acc * &self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        self.skip_ws();
        let at = self.pos;
        let e = self
            .digits()
            .ok_or_else(|| self.error("expected exponent"))?;
        let e: u32 = e.parse().map_err(|_| ParseError {
            position: at,
            message: "exponent too large".into(),
        })?;
        Ok(base.pow(e))
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            None => Err(self.error("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n: BigInt = self
                    .digits()
                    .expect("at a digit")
                    .parse()
                    .expect("decimal digits");
                Ok(Polynomial::constant(n))
            }
            Some(c) if c.is_ascii_alphabetic() => self.variable().map(Polynomial::var),
            Some(c) => Err(self.error(format!("unexpected `{}`", c as char))),
        }
    }

    fn variable(&mut self) -> Result<GradedVariable, ParseError> {
        let start = self.pos;
        let side = match (self.src.get(self.pos), self.src.get(self.pos + 1)) {
            (Some(b'L'), Some(b'.')) => Side::Left,
            (Some(b'R'), Some(b'.')) => Side::Right,
            _ => Side::None,
        };
        if side != Side::None {
            self.pos += 2;
        }
        let family = match self.src.get(self.pos) {
            Some(b'c') => Family::C,
            Some(b'x') => Family::X,
            Some(b't') => Family::T,
            _ => {
                let end = self.src[self.pos..]
                    .iter()
                    .position(|c| !c.is_ascii_alphanumeric())
                    .map_or(self.src.len(), |n| self.pos + n);
                let word = String::from_utf8_lossy(&self.src[start..end]).into_owned();
                return Err(ParseError {
                    position: start,
                    message: format!("unknown variable `{word}`"),
                });
            }
        };
        self.pos += 1;
        let index = self
            .digits()
            .ok_or_else(|| self.error("expected variable index"))?;
        let index: u32 = match index.parse() {
            Ok(i) if i > 0 => i,
            _ => {
                return Err(ParseError {
                    position: start,
                    message: format!("bad variable index `{index}`"),
                })
            }
        };
        if self.src.get(self.pos).is_some_and(u8::is_ascii_alphabetic) {
            return Err(self.error("expected an operator"));
        }
        Ok(GradedVariable {
            side,
            family,
            index,
        })
    }
}
