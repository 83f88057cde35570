use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Coefficient and entry type for polynomials and matrices.
///
/// The by-reference operations default to cloning; exact types override them to
/// avoid copying large coefficients.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    fn from_i64(n: i64) -> Self;

    fn add_ref(&self, rhs: &Self) -> Self {
        self.clone() + rhs.clone()
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.clone() - rhs.clone()
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.clone() * rhs.clone()
    }

    fn div_ref(&self, rhs: &Self) -> Self {
        self.clone() / rhs.clone()
    }

    /// Rough storage cost, used to pick cheap pivots during elimination.
    fn weight(&self) -> usize {
        1
    }
}

impl Field for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn div_ref(&self, rhs: &Self) -> Self {
        self / rhs
    }

    fn weight(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
}

impl Field for f64 {
    fn from_i64(n: i64) -> Self {
        n as f64
    }
}

impl Field for f32 {
    fn from_i64(n: i64) -> Self {
        n as f32
    }
}
