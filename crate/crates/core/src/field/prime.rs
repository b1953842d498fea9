use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;

use super::{Field, FieldError, FieldSpec, Scalar};

/// The prime field `Z/pZ` for an odd prime `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Deterministic Miller-Rabin rejects composite or even moduli.
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p < 3 || p.is_multiple_of(2) || !primal_check::miller_rabin(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn element(&self, residue: i64) -> Fp {
        self.from_int(residue)
    }

    /// An element from a residue already in `[0, p)`.
    pub(crate) fn canonical_element(&self, value: u64) -> Fp {
        debug_assert!(value < self.p);
        Fp { value, modulus: self.p }
    }
}

/// Reduce `residue` into a prime field chosen at runtime.
pub fn make_prime_element(spec: FieldSpec, residue: i64) -> Result<Fp, FieldError> {
    match spec {
        FieldSpec::Prime(p) => Ok(PrimeField::new(p)?.element(residue)),
        FieldSpec::Rational => Err(FieldError::NotPrimeKind(spec.to_string())),
    }
}

/// A residue modulo `p`, stored in `[0, p)` together with its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    #[inline]
    fn check(&self, rhs: &Fp) {
        assert_eq!(
            self.modulus, rhs.modulus,
            "combining elements of different prime fields"
        );
    }
}

impl Add<&Fp> for Fp {
    type Output = Fp;
    #[inline]
    fn add(self, rhs: &Fp) -> Fp {
        self.check(rhs);
        let s = (self.value as u128 + rhs.value as u128) % self.modulus as u128;
        Fp {
            value: s as u64,
            modulus: self.modulus,
        }
    }
}

impl Sub<&Fp> for Fp {
    type Output = Fp;
    #[inline]
    fn sub(self, rhs: &Fp) -> Fp {
        self.check(rhs);
        let value = if self.value >= rhs.value {
            self.value - rhs.value
        } else {
            self.modulus - (rhs.value - self.value)
        };
        Fp {
            value,
            modulus: self.modulus,
        }
    }
}

impl Mul<&Fp> for Fp {
    type Output = Fp;
    #[inline]
    fn mul(self, rhs: &Fp) -> Fp {
        self.check(rhs);
        let m = (self.value as u128 * rhs.value as u128) % self.modulus as u128;
        Fp {
            value: m as u64,
            modulus: self.modulus,
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $method:ident),*) => {$(
        impl $tr<Fp> for Fp {
            type Output = Fp;
            #[inline]
            fn $method(self, rhs: Fp) -> Fp {
                $tr::$method(self, &rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        let value = if self.value == 0 { 0 } else { self.modulus - self.value };
        Fp {
            value,
            modulus: self.modulus,
        }
    }
}

impl Scalar for Fp {
    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn one_like(&self) -> Self {
        Fp {
            value: 1,
            modulus: self.modulus,
        }
    }

    fn inv(&self) -> Result<Self, FieldError> {
        if self.value == 0 {
            return Err(FieldError::InverseOfZero);
        }
        let egcd = (self.value as i128).extended_gcd(&(self.modulus as i128));
        debug_assert_eq!(egcd.gcd, 1);
        Ok(Fp {
            value: egcd.x.rem_euclid(self.modulus as i128) as u64,
            modulus: self.modulus,
        })
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Field for PrimeField {
    type Elem = Fp;

    fn zero(&self) -> Fp {
        self.canonical_element(0)
    }

    fn one(&self) -> Fp {
        self.canonical_element(1)
    }

    fn from_int(&self, n: i64) -> Fp {
        self.canonical_element((n as i128).rem_euclid(self.p as i128) as u64)
    }

    fn contains(&self, x: &Fp) -> bool {
        x.modulus == self.p
    }

    fn parse_element(&self, literal: &str) -> Result<Fp, FieldError> {
        let parse_err = || FieldError::Parse {
            literal: literal.to_string(),
            field: self.to_string(),
        };
        let n: i128 = literal.parse().map_err(|_| parse_err())?;
        Ok(self.canonical_element(n.rem_euclid(self.p as i128) as u64))
    }

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p)
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "fp:{}", self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residues_are_canonical() {
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(f7.element(10).value(), 3);
        assert_eq!(f7.element(-1).value(), 6);
        assert_eq!(f7.element(7).value(), 0);
        assert_eq!(f7.element(i64::MIN).value(), (i64::MIN as i128).rem_euclid(7) as u64);
    }

    #[test]
    fn inverse_and_pow() {
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(f7.element(3).inv().unwrap(), f7.element(5));
        assert_eq!(f7.element(1).inv().unwrap(), f7.element(1));
        assert_eq!(f7.element(0).inv(), Err(FieldError::InverseOfZero));
        assert_eq!(f7.element(3).pow(4).unwrap(), f7.element(4));
        assert_eq!(f7.element(3).pow(-1).unwrap(), f7.element(5));
        assert_eq!(f7.element(6).pow(0).unwrap(), f7.one());
    }

    #[test]
    fn modulus_must_be_odd_prime() {
        assert_eq!(PrimeField::new(2), Err(FieldError::NotPrime(2)));
        assert_eq!(PrimeField::new(1), Err(FieldError::NotPrime(1)));
        assert_eq!(PrimeField::new(561), Err(FieldError::NotPrime(561)));
        assert!(PrimeField::new(1_000_003).is_ok());
        assert!(PrimeField::new(18_446_744_073_709_551_557).is_ok());
    }

    #[test]
    fn runtime_selected_prime_elements() {
        assert_eq!(make_prime_element(FieldSpec::Prime(7), 10).unwrap().value(), 3);
        assert!(matches!(
            make_prime_element(FieldSpec::Rational, 1),
            Err(FieldError::NotPrimeKind(_))
        ));
    }

    #[test]
    fn large_modulus_arithmetic_does_not_overflow() {
        let f = PrimeField::new(18_446_744_073_709_551_557).unwrap();
        let x = f.element(-2);
        let y = x * x;
        assert_eq!(y, f.element(4));
        assert_eq!(x + x, f.element(-4));
        assert_eq!(x.inv().unwrap() * x, f.one());
    }

    #[test]
    #[should_panic(expected = "different prime fields")]
    fn mixing_fields_panics() {
        let a = PrimeField::new(7).unwrap().element(1);
        let b = PrimeField::new(11).unwrap().element(1);
        let _ = a + b;
    }

    #[test]
    fn literals() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.parse_element("10").unwrap().value(), 3);
        assert_eq!(f.parse_element("-1").unwrap().value(), 6);
        assert!(f.parse_element("1/2").is_err());
    }
}
