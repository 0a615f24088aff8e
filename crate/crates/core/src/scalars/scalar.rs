//! Runtime-tagged scalars for text interfaces, where the field is only
//! known from a [`FieldSpec`].

use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::field::{Field, FieldSpec, GenericField, GenericScalar, ModPField, RationalField};
use super::ratfunc::RatFunc;
use super::ScalarError;

#[derive(Clone, Debug, PartialEq)]
enum Value {
    Generic(RatFunc<BigInt>),
    ModP(RatFunc<u64>),
    Rational(BigRational),
}

/// A field element together with the field it lives in.
#[derive(Clone, Debug, PartialEq)]
pub struct Scalar {
    spec: FieldSpec,
    value: Value,
}

macro_rules! lift {
    ($spec:expr, |$f:ident| $body:expr) => {
        match $spec {
            FieldSpec::GenericQ0 => {
                let $f = GenericField::new();
                Value::Generic($body)
            }
            FieldSpec::GenericModP(p) => {
                let $f = ModPField::new(p)?;
                Value::ModP($body)
            }
            FieldSpec::SpecializedRational { num, den } => {
                let $f = RationalField::new(num, den)?;
                Value::Rational($body)
            }
        }
    };
}

impl Scalar {
    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn parse(spec: FieldSpec, text: &str) -> Result<Self, ScalarError> {
        Ok(Self { spec, value: lift!(spec, |f| f.parse(text)?) })
    }

    /// Image of a generic scalar in `target`.
    pub fn specialize(a: &GenericScalar, target: FieldSpec) -> Result<Self, ScalarError> {
        Ok(Self { spec: target, value: lift!(target, |f| f.specialize(a)?) })
    }

    pub fn from_i64(spec: FieldSpec, n: i64) -> Result<Self, ScalarError> {
        Ok(Self { spec, value: lift!(spec, |f| f.from_i64(n)) })
    }

    pub fn q_pow(spec: FieldSpec, k: i64) -> Result<Self, ScalarError> {
        Ok(Self { spec, value: lift!(spec, |f| f.q_pow(k)) })
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Generic(a) => a.is_zero(),
            Value::ModP(a) => a.is_zero(),
            Value::Rational(a) => num_traits::Zero::is_zero(a),
        }
    }

    fn binary(
        &self,
        other: &Self,
        op: BinOp,
    ) -> Result<Self, ScalarError> {
        if self.spec != other.spec {
            return Err(ScalarError::MixedFields(self.spec, other.spec));
        }
        fn apply<F: Field>(f: &F, a: &F::Elem, b: &F::Elem, op: BinOp) -> Result<F::Elem, ScalarError> {
            Ok(match op {
                BinOp::Add => f.add(a, b),
                BinOp::Sub => f.sub(a, b),
                BinOp::Mul => f.mul(a, b),
                BinOp::Div => f.div(a, b).ok_or(ScalarError::DivisionByZero)?,
            })
        }
        let value = match (&self.value, &other.value) {
            (Value::Generic(a), Value::Generic(b)) => Value::Generic(apply(&GenericField::new(), a, b, op)?),
            (Value::ModP(a), Value::ModP(b)) => {
                let FieldSpec::GenericModP(p) = self.spec else { unreachable!() };
                Value::ModP(apply(&ModPField::new(p)?, a, b, op)?)
            }
            (Value::Rational(a), Value::Rational(b)) => {
                let FieldSpec::SpecializedRational { num, den } = self.spec else { unreachable!() };
                Value::Rational(apply(&RationalField::new(num, den)?, a, b, op)?)
            }
            _ => unreachable!("value variant follows spec"),
        };
        Ok(Self { spec: self.spec, value })
    }

    pub fn add(&self, other: &Self) -> Result<Self, ScalarError> {
        self.binary(other, BinOp::Add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ScalarError> {
        self.binary(other, BinOp::Sub)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ScalarError> {
        self.binary(other, BinOp::Mul)
    }

    pub fn div(&self, other: &Self) -> Result<Self, ScalarError> {
        self.binary(other, BinOp::Div)
    }

    pub fn neg(&self) -> Self {
        Self::from_i64(self.spec, 0).and_then(|z| z.sub(self)).expect("same field")
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        Self::from_i64(self.spec, 1)?.div(self)
    }
}

#[derive(Clone, Copy)]
enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match (&self.value, self.spec) {
            (Value::Generic(a), _) => GenericField::new().to_text(a),
            (Value::ModP(a), FieldSpec::GenericModP(p)) => ModPField::new(p).map_err(|_| fmt::Error)?.to_text(a),
            (Value::Rational(a), FieldSpec::SpecializedRational { num, den }) => {
                RationalField::new(num, den).map_err(|_| fmt::Error)?.to_text(a)
            }
            _ => return Err(fmt::Error),
        };
        f.write_str(&text)
    }
}
