//! Exact verification of Leonard triples of q-Racah type.

pub mod field;
pub mod matrix;
pub mod params;
pub mod triple;
pub mod verify;

pub use field::{Field, FieldError, FieldSpec, Fp, PrimeField, Rational, RationalField, Scalar};
pub use matrix::{Matrix, MatrixError};
pub use params::{validate_params, Member, ParamError, QRacahParams};
pub use triple::{build_triple, BasisChoice, TripleError, TripleRealization, WPower};
pub use verify::{list_checks, run_all, run_check, CheckStatus, VerificationReport};

pub type RationalTriple = TripleRealization<RationalField>;
pub type PrimeTriple = TripleRealization<PrimeField>;
pub type RationalParams = QRacahParams<RationalField>;
pub type PrimeParams = QRacahParams<PrimeField>;
pub type RationalMatrix = Matrix<RationalField>;
pub type PrimeMatrix = Matrix<PrimeField>;
