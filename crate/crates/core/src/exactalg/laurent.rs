//! Laurent polynomials in `q` stored as sparse exponent maps.
//!
//! Canonical text form: `c*q^e` terms joined by `+`, exponents ascending,
//! coefficients printed by the coefficient type (`p/q` for rationals). The
//! zero polynomial prints as `0`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::field::Field;
use super::poly::Poly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Laurent<F> {
    terms: BTreeMap<i64, F>,
}

impl<F: Field> Laurent<F> {
    pub fn zero() -> Self {
        Laurent {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(F::one(), 0)
    }

    pub fn monomial(c: F, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Laurent { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, F)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in iter {
            out.add_term(e, c);
        }
        out
    }

    /// `q^shift * poly`
    pub fn from_poly(poly: &Poly<F>, shift: i64) -> Self {
        Self::from_terms(
            poly.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| (k as i64 + shift, c.clone())),
        )
    }

    /// Splits into `(shift, poly)` with `self = q^shift * poly` and `poly(0) != 0`.
    pub fn to_shifted_poly(&self) -> (i64, Poly<F>) {
        let Some(low) = self.valuation() else {
            return (0, Poly::zero());
        };
        let high = self.max_exponent().unwrap_or(low);
        let mut coeffs = vec![F::zero(); (high - low + 1) as usize];
        for (e, c) in &self.terms {
            coeffs[(e - low) as usize] = c.clone();
        }
        (low, Poly::from_coeffs(coeffs))
    }

    fn add_term(&mut self, exp: i64, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&exp) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(exp, s);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &F)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> F {
        self.terms.get(&exp).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lowest exponent, `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn neg(&self) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea + eb, ca.mul_ref(cb));
            }
        }
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, a)| (*e, a.mul_ref(c))))
    }

    /// Evaluates at a point; `q = 0` is only defined without negative powers.
    pub fn eval(&self, x: &F) -> Result<F> {
        if x.is_zero() {
            return match self.valuation() {
                Some(v) if v < 0 => Err(Error::Pole { order: -v }),
                _ => Ok(self.coeff(0)),
            };
        }
        let (shift, poly) = self.to_shifted_poly();
        Ok(poly.eval(x).mul_ref(&pow_signed(x, shift)))
    }
}

/// `x^e` for a nonzero `x` and any integer `e`.
pub(crate) fn pow_signed<F: Field>(x: &F, e: i64) -> F {
    let mut base = if e < 0 {
        F::one() / x.clone()
    } else {
        x.clone()
    };
    let mut n = e.unsigned_abs();
    let mut acc = F::one();
    while n > 0 {
        if n & 1 == 1 {
            acc = acc.mul_ref(&base);
        }
        base = base.mul_ref(&base);
        n >>= 1;
    }
    acc
}

impl<F: Field + fmt::Display> fmt::Display for Laurent<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, "+")?;
            }
            write!(f, "{c}*q^{e}")?;
        }
        Ok(())
    }
}

impl<F: Field + FromStr> FromStr for Laurent<F> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty Laurent polynomial".into()));
        }
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut out = Self::zero();
        for term in s.split('+') {
            let term = term.trim();
            let (coeff, exp) = match term.split_once('*') {
                Some((c, rest)) => {
                    let e = rest
                        .trim()
                        .strip_prefix("q^")
                        .ok_or_else(|| Error::Parse(format!("bad term `{term}`")))?;
                    (c.trim(), e.trim())
                }
                None => (term, "0"),
            };
            let c: F = coeff
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient `{coeff}`")))?;
            let e: i64 = exp
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent `{exp}`")))?;
            out.add_term(e, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type L = Laurent<BigRational>;

    fn r(n: i64) -> BigRational {
        BigRational::from_i64(n)
    }

    #[test]
    fn product_of_balanced_pair() {
        // (q + q^-1)(q - q^-1) = q^2 - q^-2
        let a = L::from_terms([(1, r(1)), (-1, r(1))]);
        let b = L::from_terms([(1, r(1)), (-1, r(-1))]);
        assert_eq!(a.mul(&b), L::from_terms([(2, r(1)), (-2, r(-1))]));
    }

    #[test]
    fn text_form() {
        let a = L::from_terms([(2, r(3)), (-1, BigRational::new(1.into(), 2.into()))]);
        assert_eq!(a.to_string(), "1/2*q^-1+3*q^2");
        assert_eq!("1/2*q^-1+3*q^2".parse::<L>().unwrap(), a);
        assert_eq!("-2*q^-3".parse::<L>().unwrap().to_string(), "-2*q^-3");
        assert_eq!(L::zero().to_string(), "0");
        assert!("q^2".parse::<L>().is_err());
    }

    #[test]
    fn eval_at_zero_requires_no_negative_powers() {
        let a = L::from_terms([(-1, r(1)), (0, r(2))]);
        assert_eq!(a.eval(&r(0)), Err(Error::Pole { order: 1 }));
        assert_eq!(a.eval(&r(2)).unwrap(), BigRational::new(5.into(), 2.into()));
    }
}
