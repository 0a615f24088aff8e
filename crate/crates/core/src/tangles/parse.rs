//! ```text
//! expr   := seq (('+' | '-') seq)*
//! seq    := term (';' term)*
//! term   := factor ('*' factor)*
//! factor := 'I' | 'X' | 'Xi' | 'A' | 'U' | gen '^' int
//!         | scalar '.' factor | '(' expr ')'
//! scalar := int | '[' scalar-expression ']'
//! ```
//!
//! `;` composes with the left operand on top, `*` is the tensor product and
//! `gen^k` the `k`-fold tensor power (`I^0` is the empty diagram).

use super::expr::{Gen, TangleExpr};
use super::TangleError;
use crate::scalars::{Field, GenericField, GenericScalar, ScalarError, ScalarParser};

/// Parses and arity-checks a tangle expression.
pub fn parse(text: &str) -> Result<TangleExpr, TangleError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &'static str) -> TangleError {
        TangleError::Syntax { pos: self.pos, msg }
    }

    fn peek(&mut self) -> Option<u8> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8, msg: &'static str) -> Result<(), TangleError> {
        if self.peek() != Some(c) {
            return Err(self.error(msg));
        }
        self.pos += 1;
        Ok(())
    }

    fn expr(&mut self) -> Result<TangleExpr, TangleError> {
        let first = self.seq()?;
        let (src, dst) = (first.src(), first.dst());
        let mut terms = alloc::vec![first];
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            let at = self.pos;
            self.pos += 1;
            let t = self.seq()?;
            if (t.src(), t.dst()) != (src, dst) {
                return Err(TangleError::SumArity { pos: Some(at), first: (src, dst), other: (t.src(), t.dst()) });
            }
            terms.push(if c == b'-' { TangleExpr::scale(GenericField::new().from_i64(-1), t) } else { t });
        }
        TangleExpr::sum(terms)
    }

    fn seq(&mut self) -> Result<TangleExpr, TangleError> {
        let mut acc = self.term()?;
        while self.peek() == Some(b';') {
            let at = self.pos;
            self.pos += 1;
            let next = self.term()?;
            acc = acc.compose(next).map_err(|e| e.at(at))?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<TangleExpr, TangleError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.tensor(self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<TangleExpr, TangleError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')', "expected ')'")?;
                Ok(e)
            }
            Some(b'[') | Some(b'0'..=b'9') => {
                let c = self.scalar()?;
                self.expect(b'.', "expected '.' after a scalar")?;
                Ok(TangleExpr::scale(c, self.factor()?))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                let g = Gen::from_symbol(name)
                    .ok_or(TangleError::Syntax { pos: start, msg: "unknown generator (expected I, X, Xi, A or U)" })?;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    self.peek();
                    let k = self.integer()?;
                    return Ok(TangleExpr::power(g, k));
                }
                Ok(TangleExpr::gen(g))
            }
            Some(_) => Err(self.error("expected a generator, scalar or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<usize, TangleError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        core::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii")
            .parse()
            .map_err(|_| TangleError::Syntax { pos: start, msg: "integer too large" })
    }

    fn scalar(&mut self) -> Result<GenericScalar, TangleError> {
        if self.peek() == Some(b'[') {
            self.pos += 1;
            let mut sp = ScalarParser::new(self.src, 0);
            sp.pos = self.pos;
            let c = sp.sum().map_err(|e| match e {
                ScalarError::Syntax { pos, msg } => TangleError::Syntax { pos, msg },
                other => TangleError::Scalar(other),
            })?;
            self.pos = sp.pos;
            self.expect(b']', "expected ']'")?;
            return Ok(c);
        }
        let start = self.pos;
        let k = self.integer()?;
        let k = i64::try_from(k).map_err(|_| TangleError::Syntax { pos: start, msg: "integer too large" })?;
        Ok(GenericField::new().from_i64(k))
    }
}
