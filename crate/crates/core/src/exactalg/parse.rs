//! A small polynomial-expression reader: `x^2 - 3*x*y + (y + z)^2`.

use num_bigint::BigInt;

use super::field::Field;
use super::poly::{PolyRing, Polynomial};
use crate::error::{AlgebraError, Result};

impl<F: Field> PolyRing<F> {
    /// Parses integers, variables, `+ - * ^` and parentheses.
    pub fn parse(&self, src: &str) -> Result<Polynomial<F>> {
        let mut p = Reader {
            ring: self,
            s: src.as_bytes(),
            pos: 0,
        };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != p.s.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(e)
    }

    pub fn parse_all(&self, srcs: &[&str]) -> Result<Vec<Polynomial<F>>> {
        srcs.iter().map(|s| self.parse(s)).collect()
    }
}

struct Reader<'a, F: Field> {
    ring: &'a PolyRing<F>,
    s: &'a [u8],
    pos: usize,
}

impl<F: Field> Reader<'_, F> {
    fn err(&self, msg: &str) -> AlgebraError {
        AlgebraError::Malformed(format!("{msg} at offset {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial<F>> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                let t = self.term()?;
                self.ring.neg(&t)
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.ring.add(&acc, &t);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.ring.sub(&acc, &t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.power()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.power()?;
            acc = self.ring.mul(&acc, &f);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Polynomial<F>> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let e: u32 = std::str::from_utf8(&self.s[start..self.pos])
                .unwrap()
                .parse()
                .map_err(|_| self.err("expected an exponent"))?;
            if e > 1000 {
                return Err(self.err("exponent too large"));
            }
            return Ok(self.ring.pow(&base, e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial<F>> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: BigInt = std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().unwrap();
                let c = self.ring.field().from_ratio(&n, &BigInt::from(1))?;
                Ok(self.ring.constant(c))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                let i = self
                    .ring
                    .var_index(name)
                    .ok_or_else(|| AlgebraError::Malformed(format!("unknown variable `{name}`")))?;
                Ok(self.ring.var(i))
            }
            _ => Err(self.err("expected a number, variable or `(`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::exactalg::{MonomialOrder, PolyRing, PrimeField};

    #[test]
    fn reads_expressions() {
        let r = PolyRing::new(PrimeField::default(), vec!["x".into(), "y".into()], MonomialOrder::default()).unwrap();
        let f = r.parse("(x + y)^2 - 2*x*y").unwrap();
        assert_eq!(r.format(&f), "x^2 + y^2");
        assert_eq!(r.format(&r.parse("-x + 3").unwrap()), "-x + 3");
        assert!(r.parse("x + z").is_err());
        assert!(r.parse("x +").is_err());
        assert!(r.parse("(x").is_err());
    }
}
