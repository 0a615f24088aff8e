use super::{RepContext, RepError};
use crate::linalg::Mat;
use crate::scalars::Field;
use crate::tangles::{cap_cup_chain, ChainKind, Gen, Node, TangleExpr};

/// Which way [`RepContext::hom_shift`] moves strands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shift {
    /// `Hom(V^{⊗n}, V^{⊗(s+t)}) → Hom(V^{⊗(n+t)}, V^{⊗s})`: bend the last
    /// `t` outputs up with caps.
    Up,
    /// `Hom(V^{⊗(n+t)}, V^{⊗s}) → Hom(V^{⊗n}, V^{⊗(s+t)})`: bend the last
    /// `t` inputs down with cups.
    Down,
}

impl<F: Field> RepContext<F> {
    /// The functor on tangles: a `D : s → t` becomes a `(2m)^s × (2m)^t`
    /// matrix acting on row vectors.
    pub fn eval(&self, expr: &TangleExpr) -> Result<Mat<F::Elem>, RepError> {
        let f = self.field();
        Ok(match expr.node() {
            Node::Gen(g) => match g {
                Gen::Id => Mat::identity(f, self.d()),
                Gen::Cross => self.beta().clone(),
                Gen::CrossInv => self.beta_inv().clone(),
                Gen::Cup => self.cup().clone(),
                Gen::Cap => self.cap().clone(),
            },
            Node::Empty => Mat::identity(f, 1),
            Node::Compose(a, b) => self.eval(a)?.mul(f, &self.eval(b)?),
            Node::Tensor(a, b) => self.eval(a)?.kron(f, &self.eval(b)?),
            Node::Scale(c, a) => self.eval(a)?.scale(f, &f.specialize(c)?),
            Node::Sum(terms) => {
                let mut it = terms.iter();
                let first = self.eval(it.next().expect("sums are nonempty"))?;
                it.try_fold(first, |acc, t| Ok::<_, RepError>(acc.add(f, &self.eval(t)?)))?
            }
        })
    }

    /// Evaluates an `n → n` tangle as an operator on `V^{⊗n}`.
    pub fn eval_endo(&self, expr: &TangleExpr) -> Result<Mat<F::Elem>, RepError> {
        if (expr.src(), expr.dst()) != (self.n(), self.n()) {
            return Err(RepError::Arity { expected: (self.n(), self.n()), found: (expr.src(), expr.dst()) });
        }
        self.eval(expr)
    }

    fn identity_power(&self, k: usize) -> Mat<F::Elem> {
        Mat::identity(self.field(), self.d().pow(k as u32))
    }

    /// The bending maps between hom spaces:
    /// `Up: M ↦ (M ⊗ id_t) ; (id_s ⊗ F(U_t))` and
    /// `Down: M ↦ (id_n ⊗ F(A_t)) ; (M ⊗ id_t)`.
    ///
    /// `n` is the number of inputs of the result for `Down` and of `m` for `Up`.
    pub fn hom_shift(&self, m: &Mat<F::Elem>, direction: Shift, n: usize, s: usize, t: usize) -> Result<Mat<F::Elem>, RepError> {
        let f = self.field();
        let pow = |k: usize| self.d().pow(k as u32);
        match direction {
            Shift::Up => {
                if (m.rows(), m.cols()) != (pow(n), pow(s + t)) {
                    return Err(RepError::MatrixShape { expected: (pow(n), pow(s + t)), found: (m.rows(), m.cols()) });
                }
                let caps = self.eval(&cap_cup_chain(t, ChainKind::Caps))?;
                let bend = self.identity_power(s).kron(f, &caps);
                Ok(m.kron(f, &self.identity_power(t)).mul(f, &bend))
            }
            Shift::Down => {
                if (m.rows(), m.cols()) != (pow(n + t), pow(s)) {
                    return Err(RepError::MatrixShape { expected: (pow(n + t), pow(s)), found: (m.rows(), m.cols()) });
                }
                let cups = self.eval(&cap_cup_chain(t, ChainKind::Cups))?;
                let bend = self.identity_power(n).kron(f, &cups);
                Ok(bend.mul(f, &m.kron(f, &self.identity_power(t))))
            }
        }
    }
}
