use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Field, FieldError, FieldSpec, Scalar};

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// The field of rational numbers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct RationalField;

/// Build `numerator / denominator` in canonical form.
pub fn make_rational(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Result<Rational, FieldError> {
    let den = denominator.into();
    if den.is_zero() {
        return Err(FieldError::DivisionByZero);
    }
    Ok(BigRational::new(numerator.into(), den))
}

impl Scalar for Rational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn one_like(&self) -> Self {
        Rational::one()
    }

    fn inv(&self) -> Result<Self, FieldError> {
        if Zero::is_zero(self) {
            return Err(FieldError::InverseOfZero);
        }
        Ok(self.recip())
    }
}

impl Field for RationalField {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }

    fn one(&self) -> Rational {
        Rational::one()
    }

    fn from_int(&self, n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn contains(&self, _x: &Rational) -> bool {
        true
    }

    fn parse_element(&self, literal: &str) -> Result<Rational, FieldError> {
        let parse_err = || FieldError::Parse {
            literal: literal.to_string(),
            field: self.to_string(),
        };
        let (num, den) = match literal.split_once('/') {
            Some((n, d)) => (n, d),
            None => (literal, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| parse_err())?;
        let den: BigInt = den.parse().map_err(|_| parse_err())?;
        make_rational(num, den)
    }

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rational
    }
}

impl fmt::Display for RationalField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("rational")
    }
}
