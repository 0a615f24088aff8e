//! Coefficient fields and their runtime descriptors.

use alloc::string::String;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentPoly;
use super::ratfunc::RatFunc;
use super::ring::{BaseRing, Integers, PrimeField};
use super::syntax;
use super::ScalarError;

/// An element of the generic field `Q(q)`. This is the form in which
/// scalars are written in text and stored in tangle expressions.
pub type GenericScalar = RatFunc<BigInt>;

/// Which coefficient field a computation runs over.
///
/// Only fields in which `q` is not a root of unity can be described, so the
/// hypothesis is checked once, here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    /// `Q(q)` with `q` transcendental.
    GenericQ0,
    /// `F_p(q)` with `q` transcendental.
    GenericModP(u64),
    /// `Q` with `q` specialized to `num/den` in lowest terms.
    SpecializedRational { num: i64, den: i64 },
}

impl FieldSpec {
    pub fn generic_mod_p(p: u64) -> Result<Self, ScalarError> {
        PrimeField::new(p).ok_or(ScalarError::NotPrime(p))?;
        Ok(Self::GenericModP(p))
    }

    /// `q = num/den`, rejecting 0, +-1 and every other root of unity
    /// (a rational root of unity has `|num| = |den|`).
    pub fn specialized(num: i64, den: i64) -> Result<Self, ScalarError> {
        if den == 0 {
            return Err(ScalarError::DivisionByZero);
        }
        let g = num.gcd(&den);
        let (mut a, mut b) = (num / g.max(1), den / g.max(1));
        if b < 0 {
            a = -a;
            b = -b;
        }
        if a == 0 || a.abs() == b {
            return Err(ScalarError::RootOfUnity { num: a, den: b });
        }
        Ok(Self::SpecializedRational { num: a, den: b })
    }

    pub fn is_generic_rational(&self) -> bool {
        matches!(self, Self::GenericQ0)
    }
}

/// Work generic over the field type, run for a field chosen at runtime
/// through [`FieldSpec::dispatch`].
pub trait FieldTask {
    type Output;
    fn run<F: Field>(self, field: &F) -> Self::Output;
}

impl FieldSpec {
    /// Builds the field this descriptor names and runs `task` over it.
    pub fn dispatch<T: FieldTask>(&self, task: T) -> Result<T::Output, ScalarError> {
        Ok(match *self {
            Self::GenericQ0 => task.run(&GenericField::new()),
            Self::GenericModP(p) => task.run(&ModPField::new(p)?),
            Self::SpecializedRational { num, den } => task.run(&RationalField::new(num, den)?),
        })
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::GenericQ0 => f.write_str("generic"),
            Self::GenericModP(p) => write!(f, "modp:{p}"),
            Self::SpecializedRational { num, den } if *den == 1 => write!(f, "zeta:{num}"),
            Self::SpecializedRational { num, den } => write!(f, "zeta:{num}/{den}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = ScalarError;

    /// Accepts `generic`, `modp:P` and `zeta:A` or `zeta:A/B`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || ScalarError::BadFieldSpec(String::from(s));
        if s == "generic" {
            return Ok(Self::GenericQ0);
        }
        if let Some(p) = s.strip_prefix("modp:") {
            return Self::generic_mod_p(p.trim().parse().map_err(|_| bad())?);
        }
        if let Some(z) = s.strip_prefix("zeta:") {
            let (a, b) = match z.split_once('/') {
                Some((a, b)) => (a.trim(), b.trim()),
                None => (z.trim(), "1"),
            };
            return Self::specialized(a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?);
        }
        Err(bad())
    }
}

/// Arithmetic in a coefficient field containing an image of `q`.
///
/// Elements are plain values; the field object carries parameters such as
/// the characteristic. Everything in [`crate::linalg`] is generic over this.
pub trait Field: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + fmt::Debug + PartialEq + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// The image of `q^k`.
    fn q_pow(&self, k: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Image of a generic scalar under `q -> q` (or `q -> zeta`).
    fn specialize(&self, a: &GenericScalar) -> Result<Self::Elem, ScalarError>;

    /// Canonical text in the scalar syntax; [`Field::parse`] inverts it.
    fn to_text(&self, a: &Self::Elem) -> String;

    /// Pivot-selection weight: smaller means cheaper to eliminate with.
    fn cost(&self, a: &Self::Elem) -> usize;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn q(&self) -> Self::Elem {
        self.q_pow(1)
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }

    fn parse(&self, text: &str) -> Result<Self::Elem, ScalarError> {
        self.specialize(&syntax::parse_scalar(text)?)
    }
}

/// Rational functions `Frac(R[q, q^-1])`: `Q(q)` for `R = Z`, `F_p(q)` for a
/// prime field.
#[derive(Clone, Debug, PartialEq)]
pub struct RatFuncField<R> {
    ring: R,
}

pub type GenericField = RatFuncField<Integers>;
pub type ModPField = RatFuncField<PrimeField>;

impl GenericField {
    pub fn new() -> Self {
        Self { ring: Integers }
    }
}

impl Default for GenericField {
    fn default() -> Self {
        Self::new()
    }
}

impl ModPField {
    pub fn new(p: u64) -> Result<Self, ScalarError> {
        Ok(Self { ring: PrimeField::new(p).ok_or(ScalarError::NotPrime(p))? })
    }
}

impl<R: BaseRing> RatFuncField<R> {
    pub fn ring(&self) -> &R {
        &self.ring
    }
}

impl<R> Field for RatFuncField<R>
where
    R: BaseRing + Send + Sync,
    R::Elem: Send + Sync,
{
    type Elem = RatFunc<R::Elem>;

    fn spec(&self) -> FieldSpec {
        match self.ring.characteristic() {
            0 => FieldSpec::GenericQ0,
            p => FieldSpec::GenericModP(p),
        }
    }
    fn zero(&self) -> Self::Elem {
        RatFunc::zero(&self.ring)
    }
    fn one(&self) -> Self::Elem {
        RatFunc::one(&self.ring)
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        RatFunc::from_int(&self.ring, n)
    }
    fn q_pow(&self, k: i64) -> Self::Elem {
        RatFunc::q_pow(&self.ring, k)
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &Self::Elem) -> bool {
        a.is_one(&self.ring)
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.add(&self.ring, b)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.sub(&self.ring, b)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.mul(&self.ring, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.neg(&self.ring)
    }
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        a.inv(&self.ring)
    }
    fn specialize(&self, a: &GenericScalar) -> Result<Self::Elem, ScalarError> {
        let r = &self.ring;
        let num = a.num().map_coeffs(r, |c| r.from_bigint(c));
        let den = a.den().map_coeffs(r, |c| r.from_bigint(c));
        RatFunc::new(r, num, den).ok_or(ScalarError::Specialization)
    }
    fn to_text(&self, a: &Self::Elem) -> String {
        a.to_text(&self.ring)
    }
    fn cost(&self, a: &Self::Elem) -> usize {
        a.cost(&self.ring)
    }
}

/// `Q` with `q` specialized to a rational `zeta` that is not a root of unity.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalField {
    zeta: BigRational,
    spec: FieldSpec,
}

impl RationalField {
    pub fn new(num: i64, den: i64) -> Result<Self, ScalarError> {
        let spec = FieldSpec::specialized(num, den)?;
        let FieldSpec::SpecializedRational { num, den } = spec else { unreachable!() };
        Ok(Self { zeta: BigRational::new(num.into(), den.into()), spec })
    }

    pub fn zeta(&self) -> &BigRational {
        &self.zeta
    }

    fn eval(&self, p: &LaurentPoly<BigInt>) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in p.terms() {
            acc += BigRational::from_integer(c.clone()) * self.q_pow(*e);
        }
        acc
    }
}

impl Field for RationalField {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        self.spec
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }
    fn q_pow(&self, k: i64) -> BigRational {
        let base = if k < 0 { self.zeta.recip() } else { self.zeta.clone() };
        num_traits::pow(base, k.unsigned_abs() as usize)
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn specialize(&self, a: &GenericScalar) -> Result<BigRational, ScalarError> {
        let den = self.eval(a.den());
        if den.is_zero() {
            return Err(ScalarError::Specialization);
        }
        Ok(self.eval(a.num()) / den)
    }
    fn to_text(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            alloc::format!("{}", a.numer())
        } else {
            alloc::format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn cost(&self, a: &BigRational) -> usize {
        (a.numer().abs().bits() + a.denom().bits()) as usize
    }
}
