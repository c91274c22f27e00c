//! The numeric bound shared by every evaluator in the crate.
//!
//! Everything that only adds, multiplies and (exactly) divides is written
//! against [`Scalar`], so the same code runs over machine integers, big
//! integers and exact rationals. Floating point types also satisfy the bound,
//! but the fraction-free elimination in [`crate::determinant::det_dense`] is
//! only exact over an integral domain or a field with exact division.

use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Num, Signed};

/// Ring element usable by the sequence, determinant and series kernels.
pub trait Scalar: Num + Signed + FromPrimitive + Clone + Debug + Display + Send + Sync {}

impl<T> Scalar for T where T: Num + Signed + FromPrimitive + Clone + Debug + Display + Send + Sync {}

/// Converts a small machine integer into `T`.
///
/// Panics only when `T` cannot represent `v`, which does not happen for any
/// type implementing [`Scalar`] in practice (all of them cover `i64`).
pub fn from_i64<T: Scalar>(v: i64) -> T {
    T::from_i64(v).expect("scalar type cannot represent an i64 value")
}

/// `(-1)^e` as a scalar.
pub fn sign_pow<T: Scalar>(e: u64) -> T {
    if e.is_multiple_of(2) {
        T::one()
    } else {
        -T::one()
    }
}

/// `base^e` by repeated squaring.
pub fn pow<T: Scalar>(base: &T, mut e: u64) -> T {
    let mut acc = T::one();
    let mut b = base.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b.clone();
        }
        e >>= 1;
        if e > 0 {
            b = b.clone() * b;
        }
    }
    acc
}
