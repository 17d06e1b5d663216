use std::sync::Arc;

use num_traits::Zero;

use crate::error::AlgebraError;
use crate::poly::Poly;
use crate::ring::Ring;
use crate::Q;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Sym(char),
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, AlgebraError> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            out.push((st, Tok::Num(s[st..i].to_string())));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let st = i;
            while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
                i += 1;
            }
            out.push((st, Tok::Ident(s[st..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(AlgebraError::Parse { pos: i, msg: format!("unexpected `{c}`") });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    ring: &'a Arc<Ring>,
    len: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn at(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.len)
    }

    fn err<T>(&self, msg: &str) -> Result<T, AlgebraError> {
        Err(AlgebraError::Parse { pos: self.at(), msg: msg.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly, AlgebraError> {
        let mut acc = if self.eat('-') { -self.term()? } else { self.term()? };
        loop {
            if self.eat('+') {
                acc += &self.term()?;
            } else if self.eat('-') {
                acc -= &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, AlgebraError> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.power()?;
            } else if self.eat('/') {
                let d = self.power()?;
                match d.constant_value() {
                    Some(c) if !c.is_zero() => acc = acc.scale(&c.recip()),
                    Some(_) => return self.err("division by zero"),
                    None => return self.err("division by a non-constant"),
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<Poly, AlgebraError> {
        let base = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            let e = match self.peek() {
                Some(Tok::Num(s)) => s.parse::<i32>().map_err(|_| AlgebraError::Parse { pos: self.at(), msg: "exponent".into() })?,
                _ => return self.err("expected exponent"),
            };
            self.pos += 1;
            let e = if neg { -e } else { e };
            if e < 0 {
                if let Some(c) = base.constant_value() {
                    if c.is_zero() {
                        return self.err("zero to a negative power");
                    }
                    return Ok(Poly::constant(self.ring, c.recip()).pow((-e) as u32));
                }
            }
            return base.powi(e);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly, AlgebraError> {
        match self.peek().cloned() {
            Some(Tok::Num(s)) => {
                self.pos += 1;
                let n: num_bigint::BigInt = s.parse().unwrap();
                Ok(Poly::constant(self.ring, Q::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Poly::var(self.ring, &name)
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            Some(Tok::Sym('-')) => {
                self.pos += 1;
                Ok(-self.power()?)
            }
            _ => self.err("expected a number, variable or `(`"),
        }
    }
}

pub(crate) fn parse(ring: &Arc<Ring>, s: &str) -> Result<Poly, AlgebraError> {
    let mut p = Parser { toks: lex(s)?, pos: 0, ring, len: s.len() };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_examples() {
        let r = Ring::new(&[("x", false), ("p1", true), ("p2", true)]);
        for s in ["x^2 - x + 1", "0", "p1^-1*p2", "-3/2*x^3*p1 + 7", "x - 1/3"] {
            assert_eq!(Poly::parse(&r, s).unwrap().to_string(), s);
        }
        assert_eq!(Poly::parse(&r, "(x+1)^2").unwrap().to_string(), "x^2 + 2*x + 1");
        assert!(Poly::parse(&r, "x^-1").is_err());
        assert!(Poly::parse(&r, "y").is_err());
    }
}
