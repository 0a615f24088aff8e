//! Text syntax for scalars: integers, `q`, `^`, `+ - * /` and parentheses.
//!
//! ```text
//! sum     := product (('+' | '-') product)*
//! product := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' '-'? integer)?
//! atom    := integer | 'q' | '(' sum ')'
//! ```

use num_bigint::BigInt;

use super::field::GenericScalar;
use super::laurent::LaurentPoly;
use super::ratfunc::RatFunc;
use super::ring::Integers;
use super::ScalarError;

/// Parses a whole string as a generic scalar in `Q(q)`.
pub fn parse_scalar(text: &str) -> Result<GenericScalar, ScalarError> {
    let mut p = ScalarParser { src: text.as_bytes(), pos: 0, offset: 0 };
    let v = p.sum()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(v)
}

/// Recursive-descent parser over a byte slice. Also used by the tangle
/// parser for bracketed scalar literals, hence the public position.
pub(crate) struct ScalarParser<'a> {
    pub(crate) src: &'a [u8],
    pub(crate) pos: usize,
    /// Added to positions in diagnostics.
    pub(crate) offset: usize,
}

impl<'a> ScalarParser<'a> {
    pub(crate) fn new(src: &'a [u8], offset: usize) -> Self {
        Self { src, pos: 0, offset }
    }

    fn error(&self, msg: &'static str) -> ScalarError {
        ScalarError::Syntax { pos: self.pos + self.offset, msg }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    pub(crate) fn sum(&mut self) -> Result<GenericScalar, ScalarError> {
        let mut acc = self.product()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&Integers, &self.product()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&Integers, &self.product()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<GenericScalar, ScalarError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&Integers, &self.unary()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.unary()?;
                    acc = acc.div(&Integers, &d).ok_or(ScalarError::Syntax {
                        pos: at + self.offset,
                        msg: "division by zero",
                    })?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<GenericScalar, ScalarError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(self.unary()?.neg(&Integers));
        }
        self.power()
    }

    fn power(&mut self) -> Result<GenericScalar, ScalarError> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        self.skip_ws();
        let k = self.integer()?;
        let k: u32 = u32::try_from(&k).map_err(|_| self.error("exponent too large"))?;
        let mut acc = RatFunc::one(&Integers);
        for _ in 0..k {
            acc = acc.mul(&Integers, &base);
        }
        if neg {
            acc = acc.inv(&Integers).ok_or(self.error("zero to a negative power"))?;
        }
        Ok(acc)
    }

    fn integer(&mut self) -> Result<BigInt, ScalarError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let s = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn atom(&mut self) -> Result<GenericScalar, ScalarError> {
        match self.peek() {
            Some(b'q') => {
                self.pos += 1;
                Ok(RatFunc::q_pow(&Integers, 1))
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.sum()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(RatFunc::from_poly(&Integers, LaurentPoly::constant(&Integers, n)))
            }
            Some(_) => Err(self.error("expected an integer, 'q' or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}
