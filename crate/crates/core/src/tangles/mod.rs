//! Framed tangles as arity-checked expression trees, their text syntax and
//! the standard constructions. Evaluation lives in [`crate::rep`].

mod build;
mod expr;
mod parse;

pub use build::{bmw_word, cap_cup_chain, closed_loop, dual, kinks, ChainKind, Letter};
pub use expr::{Gen, Node, TangleExpr};
pub use parse::parse;

use crate::scalars::ScalarError;

fn at(pos: &Option<usize>) -> alloc::string::String {
    match pos {
        Some(p) => alloc::format!(" at {p}"),
        None => alloc::string::String::new(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TangleError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: &'static str },
    #[error("arity mismatch{}: {left} strands meet {right} at '{op}'", at(.pos))]
    Arity { pos: Option<usize>, op: &'static str, left: usize, right: usize },
    #[error("arity mismatch{}: summands {}→{} and {}→{}", at(.pos), .first.0, .first.1, .other.0, .other.1)]
    SumArity { pos: Option<usize>, first: (usize, usize), other: (usize, usize) },
    #[error("a sum needs at least one term")]
    EmptySum,
    #[error("letter {letter} has index {index}, outside 1..{n}")]
    LetterOutOfRange { letter: usize, index: usize, n: usize },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

impl TangleError {
    /// Attaches a source position to an arity error that has none.
    pub(crate) fn at(self, p: usize) -> Self {
        match self {
            TangleError::Arity { pos: None, op, left, right } => TangleError::Arity { pos: Some(p), op, left, right },
            TangleError::SumArity { pos: None, first, other } => TangleError::SumArity { pos: Some(p), first, other },
            e => e,
        }
    }

    pub fn position(&self) -> Option<usize> {
        match self {
            TangleError::Syntax { pos, .. } => Some(*pos),
            TangleError::Arity { pos, .. } | TangleError::SumArity { pos, .. } => *pos,
            _ => None,
        }
    }
}
