//! Fractions of Laurent polynomials kept in lowest terms.

use alloc::string::String;
use core::fmt::Write;

use super::laurent::LaurentPoly;
use super::ring::BaseRing;

/// `num / den` in `Frac(R[q, q^-1])`.
///
/// Canonical form: `den` has lowest exponent 0 and a normalized leading
/// coefficient, and `num`, `den` share no non-unit factor. The zero
/// function is `0 / 1`. Equal values therefore have identical fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc<E> {
    num: LaurentPoly<E>,
    den: LaurentPoly<E>,
}

impl<E: Clone + PartialEq> RatFunc<E> {
    pub fn zero<R: BaseRing<Elem = E>>(ring: &R) -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one(ring) }
    }

    pub fn one<R: BaseRing<Elem = E>>(ring: &R) -> Self {
        Self::from_poly(ring, LaurentPoly::one(ring))
    }

    pub fn from_poly<R: BaseRing<Elem = E>>(ring: &R, num: LaurentPoly<E>) -> Self {
        Self { num, den: LaurentPoly::one(ring) }
    }

    pub fn q_pow<R: BaseRing<Elem = E>>(ring: &R, k: i64) -> Self {
        Self::from_poly(ring, LaurentPoly::q_pow(ring, k))
    }

    pub fn from_int<R: BaseRing<Elem = E>>(ring: &R, n: i64) -> Self {
        Self::from_poly(ring, LaurentPoly::constant(ring, ring.from_i64(n)))
    }

    /// Reduces `num / den` to canonical form; `None` when `den` is zero.
    pub fn new<R: BaseRing<Elem = E>>(ring: &R, num: LaurentPoly<E>, den: LaurentPoly<E>) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::zero(ring));
        }
        let s = den.min_exp().unwrap_or(0);
        let (num, den) = (num.shift(-s), den.shift(-s));
        let (num, den) = if den.is_monomial() {
            (num, den)
        } else {
            let g = LaurentPoly::gcd(ring, &num, &den);
            if g.is_one(ring) {
                (num, den)
            } else {
                (
                    num.div_exact(ring, &g).expect("gcd divides numerator"),
                    den.div_exact(ring, &g).expect("gcd divides denominator"),
                )
            }
        };
        // a monomial denominator c*q^0 may still share content with num
        let (num, den) = if den.is_monomial() {
            let c = den.leading().unwrap().clone();
            let g = ring.gcd(&num.content(ring), &c);
            if ring.is_one(&g) {
                (num, den)
            } else {
                let divide = |p: &LaurentPoly<E>| {
                    LaurentPoly::from_terms(
                        ring,
                        p.terms()
                            .iter()
                            .map(|(e, x)| (*e, ring.div_exact(x, &g).expect("content divides")))
                            .collect(),
                    )
                };
                (divide(&num), divide(&den))
            }
        } else {
            (num, den)
        };
        let u = ring.normalizing_unit(den.leading().unwrap());
        if ring.is_one(&u) {
            Some(Self { num, den })
        } else {
            Some(Self { num: num.scale(ring, &u), den: den.scale(ring, &u) })
        }
    }

    pub fn num(&self) -> &LaurentPoly<E> {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly<E> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one<R: BaseRing<Elem = E>>(&self, ring: &R) -> bool {
        self.num.is_one(ring) && self.den.is_one(ring)
    }

    /// True when the value is a Laurent polynomial.
    pub fn is_poly<R: BaseRing<Elem = E>>(&self, ring: &R) -> bool {
        self.den.is_one(ring)
    }

    pub fn neg<R: BaseRing<Elem = E>>(&self, ring: &R) -> Self {
        Self { num: self.num.neg(ring), den: self.den.clone() }
    }

    pub fn add<R: BaseRing<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let num = self.num.add(ring, &other.num);
            if self.den.is_one(ring) {
                return Self { num, den: self.den.clone() };
            }
            return Self::new(ring, num, self.den.clone()).unwrap();
        }
        let num = self.num.mul(ring, &other.den).add(ring, &other.num.mul(ring, &self.den));
        Self::new(ring, num, self.den.mul(ring, &other.den)).unwrap()
    }

    pub fn sub<R: BaseRing<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        self.add(ring, &other.neg(ring))
    }

    pub fn mul<R: BaseRing<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(ring);
        }
        let (a1, b1) = (self.den.is_one(ring), other.den.is_one(ring));
        if a1 && b1 {
            return Self { num: self.num.mul(ring, &other.num), den: self.den.clone() };
        }
        if self.num.is_monomial() && a1 && ring.is_one(self.num.leading().unwrap()) {
            let e = self.num.min_exp().unwrap();
            return Self { num: other.num.shift(e), den: other.den.clone() };
        }
        if other.num.is_monomial() && b1 && ring.is_one(other.num.leading().unwrap()) {
            let e = other.num.min_exp().unwrap();
            return Self { num: self.num.shift(e), den: self.den.clone() };
        }
        Self::new(ring, self.num.mul(ring, &other.num), self.den.mul(ring, &other.den)).unwrap()
    }

    pub fn inv<R: BaseRing<Elem = E>>(&self, ring: &R) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Self::new(ring, self.den.clone(), self.num.clone())
    }

    pub fn div<R: BaseRing<Elem = E>>(&self, ring: &R, other: &Self) -> Option<Self> {
        other.inv(ring).map(|i| self.mul(ring, &i))
    }

    /// Degree-and-size measure used to prefer simple pivots.
    pub fn cost<R: BaseRing<Elem = E>>(&self, ring: &R) -> usize {
        let size = |p: &LaurentPoly<E>| -> usize {
            p.terms().iter().map(|(_, c)| 1 + ring.size_hint(c)).sum::<usize>() + p.span() as usize
        };
        size(&self.num) + if self.den.is_one(ring) { 0 } else { size(&self.den) }
    }

    /// Text in the scalar syntax, e.g. `q^2 - q^-2` or `(q^2 + 1)/(2*q + 3)`.
    pub fn to_text<R: BaseRing<Elem = E>>(&self, ring: &R) -> String {
        if self.den.is_one(ring) {
            return poly_text(ring, &self.num);
        }
        let mut out = String::new();
        let n = poly_text(ring, &self.num);
        if self.num.terms().len() > 1 {
            let _ = write!(out, "({n})");
        } else {
            out.push_str(&n);
        }
        let d = poly_text(ring, &self.den);
        if self.den.terms().len() > 1 {
            let _ = write!(out, "/({d})");
        } else {
            let _ = write!(out, "/{d}");
        }
        out
    }
}

pub(crate) fn poly_text<R: BaseRing>(ring: &R, p: &LaurentPoly<R::Elem>) -> String {
    use num_traits::{One, Signed, Zero};
    if p.is_zero() {
        return String::from("0");
    }
    let mut out = String::new();
    for (k, (e, c)) in p.terms().iter().rev().enumerate() {
        let c = ring.to_bigint(c);
        let neg = c.is_negative();
        let mag = c.abs();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let q = match *e {
            0 => String::new(),
            1 => String::from("q"),
            e => alloc::format!("q^{e}"),
        };
        if q.is_empty() {
            let _ = write!(out, "{mag}");
        } else if mag.is_one() {
            out.push_str(&q);
        } else {
            debug_assert!(!mag.is_zero());
            let _ = write!(out, "{mag}*{q}");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::ring::{Integers, PrimeField};
    use num_bigint::BigInt;

    fn zp(c: &[(i64, i64)]) -> LaurentPoly<BigInt> {
        LaurentPoly::from_terms(&Integers, c.iter().map(|&(e, k)| (e, BigInt::from(k))).collect())
    }

    #[test]
    fn lowest_terms() {
        // (q^2 - 1) / (q - 1) = q + 1
        let r = RatFunc::new(&Integers, zp(&[(2, 1), (0, -1)]), zp(&[(1, 1), (0, -1)])).unwrap();
        assert_eq!(r, RatFunc::from_poly(&Integers, zp(&[(1, 1), (0, 1)])));
        // 2q / (-4q^3) = -1/(2 q^2) = -q^-2 / 2
        let r = RatFunc::new(&Integers, zp(&[(1, 2)]), zp(&[(3, -4)])).unwrap();
        assert_eq!(r.num(), &zp(&[(-2, -1)]));
        assert_eq!(r.den(), &zp(&[(0, 2)]));
    }

    #[test]
    fn inverse_of_q() {
        let q = RatFunc::q_pow(&Integers, 1);
        assert_eq!(q.inv(&Integers).unwrap(), RatFunc::q_pow(&Integers, -1));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(RatFunc::new(&Integers, zp(&[(0, 1)]), LaurentPoly::zero()).is_none());
        assert!(RatFunc::q_pow(&Integers, 0).sub(&Integers, &RatFunc::one(&Integers)).inv(&Integers).is_none());
    }

    #[test]
    fn modular_fraction_is_monic() {
        let f = PrimeField::new(7).unwrap();
        let num = LaurentPoly::from_terms(&f, alloc::vec![(0, 3)]);
        let den = LaurentPoly::from_terms(&f, alloc::vec![(1, 2), (0, 4)]);
        let r = RatFunc::new(&f, num, den).unwrap();
        assert_eq!(r.den().leading(), Some(&1));
    }

    #[test]
    fn text_form() {
        let r = RatFunc::from_poly(&Integers, zp(&[(2, 1), (-2, -1)]));
        assert_eq!(r.to_text(&Integers), "q^2 - q^-2");
        let r = RatFunc::new(&Integers, zp(&[(0, -17)]), zp(&[(0, 4)])).unwrap();
        assert_eq!(r.to_text(&Integers), "-17/4");
    }
}
