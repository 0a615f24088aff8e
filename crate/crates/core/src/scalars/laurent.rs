//! Laurent polynomials in `q` over a [`BaseRing`].

use alloc::vec::Vec;
use core::cmp::Ordering;

use super::ring::BaseRing;

/// A Laurent polynomial stored as a sorted list of `(exponent, coefficient)`
/// pairs.
///
/// Invariant: exponents strictly increase and no coefficient is zero, so the
/// zero polynomial is the empty list and equal values compare equal
/// structurally.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly<E> {
    terms: Vec<(i64, E)>,
}

impl<E: Clone + PartialEq> LaurentPoly<E> {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(i64, E)] {
        &self.terms
    }

    pub fn monomial<R: BaseRing<Elem = E>>(ring: &R, coeff: E, exp: i64) -> Self {
        if ring.is_zero(&coeff) {
            Self::zero()
        } else {
            Self { terms: alloc::vec![(exp, coeff)] }
        }
    }

    pub fn constant<R: BaseRing<Elem = E>>(ring: &R, coeff: E) -> Self {
        Self::monomial(ring, coeff, 0)
    }

    pub fn one<R: BaseRing<Elem = E>>(ring: &R) -> Self {
        Self::monomial(ring, ring.one(), 0)
    }

    /// `q^k`
    pub fn q_pow<R: BaseRing<Elem = E>>(ring: &R, k: i64) -> Self {
        Self::monomial(ring, ring.one(), k)
    }

    /// Builds the canonical form from arbitrary terms: sorts, merges equal
    /// exponents and drops zeros.
    pub fn from_terms<R: BaseRing<Elem = E>>(ring: &R, mut raw: Vec<(i64, E)>) -> Self {
        raw.sort_by_key(|t| t.0);
        let mut terms: Vec<(i64, E)> = Vec::with_capacity(raw.len());
        for (e, c) in raw {
            match terms.last_mut() {
                Some(last) if last.0 == e => last.1 = ring.add(&last.1, &c),
                _ => terms.push((e, c)),
            }
        }
        terms.retain(|t| !ring.is_zero(&t.1));
        Self { terms }
    }

    pub fn is_one<R: BaseRing<Elem = E>>(&self, ring: &R) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && ring.is_one(&self.terms[0].1)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|t| t.0)
    }

    /// Coefficient of the highest power of `q`.
    pub fn leading(&self) -> Option<&E> {
        self.terms.last().map(|t| &t.1)
    }

    /// Width of the exponent range; zero for monomials and the zero polynomial.
    pub fn span(&self) -> i64 {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    pub fn coeff(&self, exp: i64) -> Option<&E> {
        self.terms
            .binary_search_by_key(&exp, |t| t.0)
            .ok()
            .map(|i| &self.terms[i].1)
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn neg<R: BaseRing<Elem = E>>(&self, ring: &R) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, ring.neg(c))).collect(),
        }
    }

    pub fn scale<R: BaseRing<Elem = E>>(&self, ring: &R, c: &E) -> Self {
        if ring.is_zero(c) {
            return Self::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, a)| (*e, ring.mul(a, c)))
            .filter(|t| !ring.is_zero(&t.1))
            .collect();
        Self { terms }
    }

    pub fn add<R: BaseRing<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        self.merge(ring, other, false)
    }

    pub fn sub<R: BaseRing<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        self.merge(ring, other, true)
    }

    fn merge<R: BaseRing<Elem = E>>(&self, ring: &R, other: &Self, negate: bool) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    terms.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { ring.neg(&b[j].1) } else { b[j].1.clone() };
                    terms.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        ring.sub(&a[i].1, &b[j].1)
                    } else {
                        ring.add(&a[i].1, &b[j].1)
                    };
                    if !ring.is_zero(&c) {
                        terms.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Self { terms }
    }

    pub fn mul<R: BaseRing<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if other.terms.len() == 1 {
            let (e, c) = &other.terms[0];
            return self.scale(ring, c).shift(*e);
        }
        if self.terms.len() == 1 {
            let (e, c) = &self.terms[0];
            return other.scale(ring, c).shift(*e);
        }
        let lo = self.terms[0].0 + other.terms[0].0;
        let hi = self.max_exp().unwrap() + other.max_exp().unwrap();
        let mut dense: Vec<E> = alloc::vec![ring.zero(); (hi - lo + 1) as usize];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let slot = &mut dense[(ea + eb - lo) as usize];
                *slot = ring.add(slot, &ring.mul(ca, cb));
            }
        }
        Self::from_dense(ring, lo, dense)
    }

    /// Dense coefficient vector after dividing by `q^min_exp`, lowest power first.
    pub fn to_dense<R: BaseRing<Elem = E>>(&self, ring: &R) -> (i64, Vec<E>) {
        let Some(lo) = self.min_exp() else {
            return (0, Vec::new());
        };
        let mut dense = alloc::vec![ring.zero(); (self.span() + 1) as usize];
        for (e, c) in &self.terms {
            dense[(e - lo) as usize] = c.clone();
        }
        (lo, dense)
    }

    pub fn from_dense<R: BaseRing<Elem = E>>(ring: &R, shift: i64, dense: Vec<E>) -> Self {
        let terms = dense
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !ring.is_zero(c))
            .map(|(i, c)| (shift + i as i64, c))
            .collect();
        Self { terms }
    }

    /// gcd of all coefficients.
    pub fn content<R: BaseRing<Elem = E>>(&self, ring: &R) -> E {
        self.terms
            .iter()
            .fold(ring.zero(), |g, (_, c)| ring.gcd(&g, c))
    }

    /// Canonical gcd in `R[q, q^-1]`: lowest exponent 0 and a normalized
    /// leading coefficient. Both inputs zero gives zero.
    pub fn gcd<R: BaseRing<Elem = E>>(ring: &R, a: &Self, b: &Self) -> Self {
        let (_, da) = a.to_dense(ring);
        let (_, db) = b.to_dense(ring);
        Self::from_dense(ring, 0, dense::gcd(ring, da, db))
    }

    /// Exact quotient `self / divisor` in `R[q, q^-1]`, or `None` when the
    /// division leaves a remainder.
    pub fn div_exact<R: BaseRing<Elem = E>>(&self, ring: &R, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (sa, da) = self.to_dense(ring);
        let (sb, db) = divisor.to_dense(ring);
        let quot = dense::div_exact(ring, &da, &db)?;
        Some(Self::from_dense(ring, sa - sb, quot))
    }

    /// Maps coefficients into another ring, dropping those that vanish.
    pub fn map_coeffs<S: BaseRing>(&self, target: &S, f: impl Fn(&E) -> S::Elem) -> LaurentPoly<S::Elem> {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, f(c)))
                .filter(|t| !target.is_zero(&t.1))
                .collect(),
        }
    }
}

/// Dense polynomial helpers; coefficient vectors list the constant term first.
pub(crate) mod dense {
    use alloc::vec::Vec;

    use super::BaseRing;

    fn trim<R: BaseRing>(ring: &R, a: &mut Vec<R::Elem>) {
        while a.last().is_some_and(|c| ring.is_zero(c)) {
            a.pop();
        }
    }

    fn content<R: BaseRing>(ring: &R, a: &[R::Elem]) -> R::Elem {
        a.iter().fold(ring.zero(), |g, c| ring.gcd(&g, c))
    }

    fn primitive<R: BaseRing>(ring: &R, a: Vec<R::Elem>) -> Vec<R::Elem> {
        let c = content(ring, &a);
        if ring.is_one(&c) || ring.is_zero(&c) {
            return a;
        }
        a.iter()
            .map(|x| ring.div_exact(x, &c).expect("content divides"))
            .collect()
    }

    fn normalize<R: BaseRing>(ring: &R, a: Vec<R::Elem>) -> Vec<R::Elem> {
        match a.last() {
            None => a,
            Some(lead) => {
                let u = ring.normalizing_unit(lead);
                if ring.is_one(&u) {
                    a
                } else {
                    a.iter().map(|x| ring.mul(x, &u)).collect()
                }
            }
        }
    }

    /// `lc(b)^(deg a - deg b + 1) * a mod b`
    fn pseudo_rem<R: BaseRing>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
        let mut r: Vec<R::Elem> = a.to_vec();
        let db = b.len() - 1;
        let lb = &b[db];
        while r.len() > db && !r.is_empty() {
            let dr = r.len() - 1;
            let lr = r[dr].clone();
            for x in r.iter_mut() {
                *x = ring.mul(x, lb);
            }
            let off = dr - db;
            for (i, bc) in b.iter().enumerate() {
                let t = ring.mul(&lr, bc);
                r[off + i] = ring.sub(&r[off + i], &t);
            }
            trim(ring, &mut r);
        }
        r
    }

    pub(crate) fn gcd<R: BaseRing>(ring: &R, mut a: Vec<R::Elem>, mut b: Vec<R::Elem>) -> Vec<R::Elem> {
        trim(ring, &mut a);
        trim(ring, &mut b);
        if a.is_empty() {
            return normalize(ring, b);
        }
        if b.is_empty() {
            return normalize(ring, a);
        }
        let c = ring.gcd(&content(ring, &a), &content(ring, &b));
        let mut a = primitive(ring, a);
        let mut b = primitive(ring, b);
        if a.len() < b.len() {
            core::mem::swap(&mut a, &mut b);
        }
        while b.len() > 1 {
            let r = pseudo_rem(ring, &a, &b);
            a = b;
            b = primitive(ring, r);
            if b.is_empty() {
                break;
            }
        }
        let g = if b.is_empty() { a } else { alloc::vec![ring.one()] };
        let g = normalize(ring, g);
        g.iter().map(|x| ring.mul(x, &c)).collect()
    }

    pub(crate) fn div_exact<R: BaseRing>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Option<Vec<R::Elem>> {
        let mut r: Vec<R::Elem> = a.to_vec();
        trim(ring, &mut r);
        let mut b = b.to_vec();
        trim(ring, &mut b);
        if b.is_empty() {
            return None;
        }
        if r.len() < b.len() {
            return r.is_empty().then(Vec::new);
        }
        let db = b.len() - 1;
        let mut quot = alloc::vec![ring.zero(); r.len() - db];
        while r.len() > db {
            let dr = r.len() - 1;
            let qc = ring.div_exact(&r[dr], &b[db])?;
            let off = dr - db;
            for (i, bc) in b.iter().enumerate() {
                let t = ring.mul(&qc, bc);
                r[off + i] = ring.sub(&r[off + i], &t);
            }
            quot[off] = qc;
            trim(ring, &mut r);
            if r.is_empty() {
                break;
            }
        }
        if !r.is_empty() {
            return None;
        }
        trim(ring, &mut quot);
        Some(quot)
    }
}
