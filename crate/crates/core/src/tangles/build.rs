//! Standard tangles built from the elementary ones.

use alloc::vec::Vec;
use core::fmt;

use super::expr::{Gen, TangleExpr};
use super::TangleError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainKind {
    /// `U_n : 2n → 0`, closing `n` nested pairs.
    Caps,
    /// `A_n : 0 → 2n`, opening `n` nested pairs.
    Cups,
}

/// `U_n = (I^{n-1} ⊗ U ⊗ I^{n-1}) ; … ; (I ⊗ U ⊗ I) ; U` and
/// `A_n = A ; (I ⊗ A ⊗ I) ; … ; (I^{n-1} ⊗ A ⊗ I^{n-1})`.
///
/// For `n = 0` both are the empty diagram.
pub fn cap_cup_chain(n: usize, kind: ChainKind) -> TangleExpr {
    let (g, levels): (Gen, Vec<usize>) = match kind {
        ChainKind::Caps => (Gen::Cap, (0..n).rev().collect()),
        ChainKind::Cups => (Gen::Cup, (0..n).collect()),
    };
    let layers = levels.into_iter().map(|k| {
        TangleExpr::tensor_all([TangleExpr::identity(k), TangleExpr::gen(g), TangleExpr::identity(k)])
    });
    TangleExpr::compose_all(layers).unwrap_or_else(|_| TangleExpr::empty())
}

/// `D* = (I_t ⊗ A_s) ; (I_t ⊗ D ⊗ I_s) ; (U_t ⊗ I_s)` for `D : s → t`.
pub fn dual(d: &TangleExpr) -> TangleExpr {
    let (s, t) = (d.src(), d.dst());
    let open = TangleExpr::tensor_all([TangleExpr::identity(t), cap_cup_chain(s, ChainKind::Cups)]);
    let middle = TangleExpr::tensor_all([TangleExpr::identity(t), d.clone(), TangleExpr::identity(s)]);
    let close = TangleExpr::tensor_all([cap_cup_chain(t, ChainKind::Caps), TangleExpr::identity(s)]);
    TangleExpr::compose_all([open, middle, close]).expect("arities match by construction")
}

/// A letter of a word in the BMW generators, indexed from 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    T(usize),
    TInv(usize),
    E(usize),
}

impl Letter {
    pub fn index(self) -> usize {
        match self {
            Letter::T(i) | Letter::TInv(i) | Letter::E(i) => i,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::T(i) => write!(f, "T{i}"),
            Letter::TInv(i) => write!(f, "T{i}^-1"),
            Letter::E(i) => write!(f, "E{i}"),
        }
    }
}

/// `T_i ↦ I_{i-1} ⊗ X ⊗ I_{n-1-i}`, `T_i^{-1}` likewise with the opposite
/// crossing, `E_i ↦ I_{i-1} ⊗ (U ; A) ⊗ I_{n-1-i}`; letters are composed
/// left to right. The empty word is `I^n`.
pub fn bmw_word(n: usize, word: &[Letter]) -> Result<TangleExpr, TangleError> {
    let mut acc = TangleExpr::identity(n);
    for (k, &letter) in word.iter().enumerate() {
        let i = letter.index();
        if i == 0 || i + 1 > n {
            return Err(TangleError::LetterOutOfRange { letter: k, index: i, n });
        }
        let core = match letter {
            Letter::T(_) => TangleExpr::cross(),
            Letter::TInv(_) => TangleExpr::cross_inv(),
            Letter::E(_) => TangleExpr::cap().compose(TangleExpr::cup()).expect("0 = 0"),
        };
        let layer = TangleExpr::tensor_all([TangleExpr::identity(i - 1), core, TangleExpr::identity(n - 1 - i)]);
        acc = if k == 0 { layer } else { acc.compose(layer).expect("n → n") };
    }
    Ok(acc)
}

/// The two single kinks on one strand: a loop closed through a positive
/// crossing and through a negative one.
pub fn kinks() -> [TangleExpr; 2] {
    [Gen::Cross, Gen::CrossInv].map(|g| {
        TangleExpr::compose_all([
            TangleExpr::cup().tensor(TangleExpr::id()),
            TangleExpr::id().tensor(TangleExpr::gen(g)),
            TangleExpr::cap().tensor(TangleExpr::id()),
        ])
        .expect("1 → 3 → 3 → 1")
    })
}

/// The closed loop `A ; U`.
pub fn closed_loop() -> TangleExpr {
    TangleExpr::cup().compose(TangleExpr::cap()).expect("2 = 2")
}
