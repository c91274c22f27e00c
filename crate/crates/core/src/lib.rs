//! Exact Toeplitz–Hessenberg determinants whose entries come from tribonacci
//! and related sequences, together with a registry of closed-form identities
//! for those determinants and the machinery to verify them.
//!
//! The numeric kernels are generic over [`Scalar`]; the aliases below fix the
//! scalar to arbitrary-precision integers, which is what every identity check
//! uses.

pub mod combinatorics;
pub mod determinant;
pub mod error;
pub mod identities;
pub mod scalar;
pub mod sequences;
pub mod series;
pub mod tilings;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Arbitrary-precision signed integer used for every exact result.
pub type ExactInt = num_bigint::BigInt;
/// Exact rational, for evaluators run over a field.
pub type ExactRational = num_rational::BigRational;

pub type ExactSpec = determinant::HessenbergSpec<ExactInt>;
pub type RationalSpec = determinant::HessenbergSpec<ExactRational>;
pub type ExactPolynomial = series::IntPolynomial<ExactInt>;
pub type ExactGf = series::RationalGF<ExactInt>;
