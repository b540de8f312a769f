//! Recursive-descent reader for scalar text such as `(q^2 - t)/(1 - q*t)`.

use num_bigint::BigInt;

use super::{IntPoly2, QtScalar, ScalarError};

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

pub fn parse_scalar(text: &str) -> Result<QtScalar, ScalarError> {
    let mut p = Parser { s: text.as_bytes(), pos: 0 };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(v)
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> ScalarError {
        ScalarError::Parse(format!("{msg} at offset {}", self.pos))
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<QtScalar, ScalarError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<QtScalar, ScalarError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat(b'/') {
                let d = self.unary()?;
                acc = acc.div(&d)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<QtScalar, ScalarError> {
        if self.eat(b'-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<QtScalar, ScalarError> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let e = if self.eat(b'(') {
            let e = self.signed_int()?;
            if !self.eat(b')') {
                return Err(self.err("expected ')' after exponent"));
            }
            e
        } else {
            self.signed_int()?
        };
        let e: i32 = e.try_into().map_err(|_| self.err("exponent out of range"))?;
        base.pow(e)
    }

    fn signed_int(&mut self) -> Result<i64, ScalarError> {
        let neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let digits = self.digits().ok_or_else(|| self.err("expected integer exponent"))?;
        let v: i64 = digits.parse().map_err(|_| self.err("exponent out of range"))?;
        Ok(if neg { -v } else { v })
    }

    fn digits(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    fn atom(&mut self) -> Result<QtScalar, ScalarError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(v)
            }
            Some(b'q') => {
                self.pos += 1;
                Ok(QtScalar::q())
            }
            Some(b't') => {
                self.pos += 1;
                Ok(QtScalar::t())
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits().expect("digit present");
                let v: BigInt = d.parse().map_err(|_| self.err("bad integer"))?;
                Ok(QtScalar::from_poly(IntPoly2::constant(v)))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}
