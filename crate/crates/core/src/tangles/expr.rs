use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::TangleError;
use crate::scalars::{Field, GenericField, GenericScalar};

/// The elementary tangles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    /// A vertical strand, 1 → 1.
    Id,
    /// The positive crossing, 2 → 2.
    Cross,
    /// The opposite crossing, 2 → 2.
    CrossInv,
    /// Creates a pair of strands, 0 → 2.
    Cup,
    /// Closes a pair of strands, 2 → 0.
    Cap,
}

impl Gen {
    pub fn arity(self) -> (usize, usize) {
        match self {
            Gen::Id => (1, 1),
            Gen::Cross | Gen::CrossInv => (2, 2),
            Gen::Cup => (0, 2),
            Gen::Cap => (2, 0),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Gen::Id => "I",
            Gen::Cross => "X",
            Gen::CrossInv => "Xi",
            Gen::Cup => "A",
            Gen::Cap => "U",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Self> {
        Some(match s {
            "I" => Gen::Id,
            "X" => Gen::Cross,
            "Xi" => Gen::CrossInv,
            "A" => Gen::Cup,
            "U" => Gen::Cap,
            _ => return None,
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Node {
    Gen(Gen),
    /// The empty diagram, 0 → 0.
    Empty,
    /// `left` on top, then `right`.
    Compose(Box<TangleExpr>, Box<TangleExpr>),
    /// Side by side, `left` first.
    Tensor(Box<TangleExpr>, Box<TangleExpr>),
    Scale(GenericScalar, Box<TangleExpr>),
    /// At least two summands of equal arity.
    Sum(Vec<TangleExpr>),
}

/// A linear combination of framed tangles from `src` points on top to
/// `dst` points at the bottom.
///
/// Arities are checked by the constructors, so every value is well typed.
#[derive(Clone, Debug, PartialEq)]
pub struct TangleExpr {
    node: Node,
    src: usize,
    dst: usize,
}

impl TangleExpr {
    pub fn gen(g: Gen) -> Self {
        let (src, dst) = g.arity();
        Self { node: Node::Gen(g), src, dst }
    }

    pub fn empty() -> Self {
        Self { node: Node::Empty, src: 0, dst: 0 }
    }

    pub fn id() -> Self {
        Self::gen(Gen::Id)
    }

    pub fn cross() -> Self {
        Self::gen(Gen::Cross)
    }

    pub fn cross_inv() -> Self {
        Self::gen(Gen::CrossInv)
    }

    pub fn cup() -> Self {
        Self::gen(Gen::Cup)
    }

    pub fn cap() -> Self {
        Self::gen(Gen::Cap)
    }

    /// `g ⊗ g ⊗ … ⊗ g` (`k` copies, left nested); the empty diagram for `k = 0`.
    pub fn power(g: Gen, k: usize) -> Self {
        let mut it = (0..k).map(|_| Self::gen(g));
        match it.next() {
            None => Self::empty(),
            Some(first) => it.fold(first, Self::tensor),
        }
    }

    /// `I^{⊗n}`.
    pub fn identity(n: usize) -> Self {
        Self::power(Gen::Id, n)
    }

    pub fn compose(self, next: Self) -> Result<Self, TangleError> {
        if self.dst != next.src {
            return Err(TangleError::Arity { pos: None, op: ";", left: self.dst, right: next.src });
        }
        let (src, dst) = (self.src, next.dst);
        Ok(Self { node: Node::Compose(Box::new(self), Box::new(next)), src, dst })
    }

    pub fn tensor(self, other: Self) -> Self {
        let (src, dst) = (self.src + other.src, self.dst + other.dst);
        Self { node: Node::Tensor(Box::new(self), Box::new(other)), src, dst }
    }

    /// Tensor product of all parts, leaving out empty diagrams.
    pub fn tensor_all(parts: impl IntoIterator<Item = Self>) -> Self {
        parts
            .into_iter()
            .filter(|p| p.node != Node::Empty)
            .reduce(Self::tensor)
            .unwrap_or_else(Self::empty)
    }

    /// Composition of all parts in order.
    pub fn compose_all(parts: impl IntoIterator<Item = Self>) -> Result<Self, TangleError> {
        let mut it = parts.into_iter();
        let first = it.next().ok_or(TangleError::EmptySum)?;
        it.try_fold(first, Self::compose)
    }

    pub fn scale(c: GenericScalar, e: Self) -> Self {
        let (src, dst) = (e.src, e.dst);
        Self { node: Node::Scale(c, Box::new(e)), src, dst }
    }

    /// A sum of one term is that term.
    pub fn sum(terms: Vec<Self>) -> Result<Self, TangleError> {
        let first = terms.first().ok_or(TangleError::EmptySum)?;
        let (src, dst) = (first.src, first.dst);
        if let Some(bad) = terms.iter().find(|t| (t.src, t.dst) != (src, dst)) {
            return Err(TangleError::SumArity { pos: None, first: (src, dst), other: (bad.src, bad.dst) });
        }
        if terms.len() == 1 {
            return Ok(terms.into_iter().next().expect("one term"));
        }
        Ok(Self { node: Node::Sum(terms), src, dst })
    }

    /// `a - b`, as `a + (-1).b`.
    pub fn difference(a: Self, b: Self) -> Result<Self, TangleError> {
        let minus = GenericField::new().from_i64(-1);
        Self::sum(alloc::vec![a, Self::scale(minus, b)])
    }

    pub fn node(&self) -> &Node {
        &self.node
    }

    pub fn src(&self) -> usize {
        self.src
    }

    pub fn dst(&self) -> usize {
        self.dst
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match &self.node {
            Node::Gen(_) | Node::Empty => 1,
            Node::Compose(a, b) | Node::Tensor(a, b) => 1 + a.size() + b.size(),
            Node::Scale(_, a) => 1 + a.size(),
            Node::Sum(ts) => 1 + ts.iter().map(Self::size).sum::<usize>(),
        }
    }

    /// Largest number of boundary points of any subexpression, which
    /// bounds the size of every intermediate matrix in an evaluation.
    pub fn width(&self) -> usize {
        let inner = match &self.node {
            Node::Gen(_) | Node::Empty => 0,
            Node::Compose(a, b) | Node::Tensor(a, b) => a.width().max(b.width()),
            Node::Scale(_, a) => a.width(),
            Node::Sum(ts) => ts.iter().map(Self::width).max().unwrap_or(0),
        };
        self.src.max(self.dst).max(inner)
    }

    fn precedence(&self) -> u8 {
        match self.node {
            Node::Sum(_) => 0,
            Node::Compose(..) => 1,
            Node::Tensor(..) => 2,
            Node::Gen(_) | Node::Empty | Node::Scale(..) => 3,
        }
    }

    fn write_child(&self, f: &mut fmt::Formatter<'_>, parens: bool) -> fmt::Result {
        if parens {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

/// Prints in the syntax accepted by [`super::parse`], with only the
/// parentheses needed to reproduce the same tree.
impl fmt::Display for TangleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.node {
            Node::Gen(g) => f.write_str(g.symbol()),
            Node::Empty => f.write_str("I^0"),
            Node::Compose(a, b) => {
                a.write_child(f, a.precedence() < 1)?;
                f.write_str(" ; ")?;
                b.write_child(f, b.precedence() <= 1)
            }
            Node::Tensor(a, b) => {
                a.write_child(f, a.precedence() < 2)?;
                f.write_str(" * ")?;
                b.write_child(f, b.precedence() <= 2)
            }
            Node::Scale(c, a) => {
                let text: String = GenericField::new().to_text(c);
                write!(f, "[{text}].")?;
                a.write_child(f, a.precedence() < 3)
            }
            Node::Sum(ts) => {
                for (k, t) in ts.iter().enumerate() {
                    if k > 0 {
                        f.write_str(" + ")?;
                    }
                    t.write_child(f, t.precedence() == 0)?;
                }
                Ok(())
            }
        }
    }
}
