//! Exact scalar fields.
//!
//! Two backends are provided: unbounded rationals ([`RationalField`]) and
//! prime fields with a runtime modulus ([`PrimeField`]). Elements are kept in
//! canonical form (reduced fraction with positive denominator, or a residue in
//! `[0, p)`), so equality is structural and there is no tolerance anywhere.
//!
//! Constants such as zero and one come from a [`Field`] value rather than from
//! the element type, because a prime-field element cannot be conjured without
//! knowing its modulus.

mod prime;
mod rational;

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

pub use prime::{make_prime_element, Fp, PrimeField};
pub use rational::{make_rational, Rational, RationalField};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("inverse of zero")]
    InverseOfZero,
    #[error("modulus {0} is not an odd prime")]
    NotPrime(u64),
    #[error("field {0} is not a prime field")]
    NotPrimeKind(String),
    #[error("cannot parse {literal:?} as an element of {field}")]
    Parse { literal: String, field: String },
    #[error("unknown field {0:?}: expected \"rational\" or \"fp:<p>\"")]
    BadSpec(String),
}

/// An element of an exact field.
///
/// Arithmetic between elements of different prime fields is a programming
/// error and panics; code that combines matrices checks field identity first.
pub trait Scalar:
    Clone
    + Eq
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn is_zero(&self) -> bool;

    /// The multiplicative identity of the field `self` belongs to.
    fn one_like(&self) -> Self;

    fn inv(&self) -> Result<Self, FieldError>;

    fn try_div(&self, rhs: &Self) -> Result<Self, FieldError> {
        if rhs.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(self.clone() * &rhs.inv()?)
    }

    /// `self^n` for any integer `n`; negative exponents go through the inverse.
    fn pow(&self, n: i64) -> Result<Self, FieldError> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut exp = n.unsigned_abs();
        let mut acc = self.one_like();
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * &sq;
            }
            exp >>= 1;
            if exp > 0 {
                sq = sq.clone() * &sq;
            }
        }
        Ok(acc)
    }

    fn square(&self) -> Self {
        self.clone() * self
    }
}

/// A concrete field instance: the factory for its elements.
pub trait Field: Clone + PartialEq + Eq + Debug + Display + Send + Sync + 'static {
    type Elem: Scalar;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_int(&self, n: i64) -> Self::Elem;

    /// Whether `x` belongs to this field instance.
    fn contains(&self, x: &Self::Elem) -> bool;

    /// Parse a command-line literal: `p/q` or an integer for rationals, a
    /// decimal residue for prime fields.
    fn parse_element(&self, literal: &str) -> Result<Self::Elem, FieldError>;

    fn spec(&self) -> FieldSpec;
}

/// Runtime field selection, parsed from `"rational"` or `"fp:<p>"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl FromStr for FieldSpec {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "rational" {
            return Ok(FieldSpec::Rational);
        }
        let digits = s
            .strip_prefix("fp:")
            .ok_or_else(|| FieldError::BadSpec(s.to_string()))?;
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(FieldError::BadSpec(s.to_string()));
        }
        let p: u64 = digits.parse().map_err(|_| FieldError::BadSpec(s.to_string()))?;
        PrimeField::new(p)?;
        Ok(FieldSpec::Prime(p))
    }
}

impl Display for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldSpec::Rational => f.write_str("rational"),
            FieldSpec::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

/// Shorthand for `field_pow` on a value already known to be nonzero.
pub(crate) fn pow_nonzero<S: Scalar>(x: &S, n: i64) -> S {
    x.pow(n).expect("exponentiation of a nonzero element")
}

/// Shorthand for the inverse of a value already known to be nonzero.
pub(crate) fn inv_nonzero<S: Scalar>(x: &S) -> S {
    x.inv().expect("inverse of a nonzero element")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_spec_grammar() {
        assert_eq!("rational".parse::<FieldSpec>(), Ok(FieldSpec::Rational));
        assert_eq!("fp:7".parse::<FieldSpec>(), Ok(FieldSpec::Prime(7)));
        assert_eq!("fp:1000003".parse::<FieldSpec>(), Ok(FieldSpec::Prime(1_000_003)));
        assert_eq!("fp:9".parse::<FieldSpec>(), Err(FieldError::NotPrime(9)));
        assert!(matches!("fp:".parse::<FieldSpec>(), Err(FieldError::BadSpec(_))));
        assert!(matches!("fp:+7".parse::<FieldSpec>(), Err(FieldError::BadSpec(_))));
        assert!(matches!("real".parse::<FieldSpec>(), Err(FieldError::BadSpec(_))));
        assert_eq!(FieldSpec::Prime(11).to_string(), "fp:11");
    }
}
