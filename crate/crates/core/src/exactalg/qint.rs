//! Quantum integers in the two conventions in use.
//!
//! Balanced: `[n] = (q^n - q^-n) / (q - q^-1) = q^(1-n) + q^(3-n) + ... + q^(n-1)`.
//! Standard: `[n] = (1 - q^n) / (1 - q) = 1 + q + ... + q^(n-1)`.
//! Every caller names its convention; there is no default.

use serde::{Deserialize, Serialize};

use super::field::Field;
use super::laurent::Laurent;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Convention {
    Balanced,
    Standard,
}

pub fn quantum_int_laurent<F: Field>(n: i64, convention: Convention) -> Result<Laurent<F>> {
    if n < 0 {
        return Err(Error::NegativeQuantumInteger(n));
    }
    Ok(match convention {
        Convention::Balanced => Laurent::from_terms((0..n).map(|k| (n - 1 - 2 * k, F::one()))),
        Convention::Standard => Laurent::from_terms((0..n).map(|k| (k, F::one()))),
    })
}

pub fn quantum_int<F: Field>(n: i64, convention: Convention) -> Result<RatFunc<F>> {
    Ok(RatFunc::from_laurent(&quantum_int_laurent(n, convention)?))
}

/// Balanced `[n]` extended to all integers by `[-n] = -[n]`.
pub fn balanced_signed<F: Field>(n: i64) -> RatFunc<F> {
    let v = quantum_int(n.abs(), Convention::Balanced).expect("nonnegative");
    if n < 0 {
        -v
    } else {
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Rational, RationalFunction};
    use num_traits::Zero;

    fn b(n: i64) -> RationalFunction {
        quantum_int(n, Convention::Balanced).unwrap()
    }

    #[test]
    fn expansions() {
        assert_eq!(b(2).to_string(), "(1*q^-1+1*q^1)/(1*q^0)");
        assert_eq!(b(3).to_string(), "(1*q^-2+1*q^0+1*q^2)/(1*q^0)");
        let s4: RationalFunction = quantum_int(4, Convention::Standard).unwrap();
        assert_eq!(s4.to_string(), "(1*q^0+1*q^1+1*q^2+1*q^3)/(1*q^0)");
        assert!(b(0).is_zero());
        assert_eq!(
            quantum_int::<Rational>(-1, Convention::Standard),
            Err(Error::NegativeQuantumInteger(-1))
        );
    }

    #[test]
    fn three_times_two_minus_four() {
        assert_eq!(&(&b(3) * &b(2)) - &b(4), b(2));
    }

    #[test]
    fn quantum_pythagoras() {
        for a in 2..=12 {
            let lhs = &(&b(a) * &b(a)) - &(&b(a + 1) * &b(a - 1));
            assert_eq!(lhs, RationalFunction::from_i64(1), "a = {a}");
        }
    }

    #[test]
    fn balanced_at_one_is_n() {
        for n in 1..=6 {
            assert_eq!(
                b(n).eval(&Rational::from_i64(1)).unwrap(),
                Rational::from_i64(n)
            );
        }
    }

    #[test]
    fn signed_extension() {
        assert_eq!(balanced_signed::<Rational>(-3), -b(3));
    }
}
