//! Rational functions in `q` kept in a unique canonical form.
//!
//! A nonzero value is stored as `q^shift * num / den` where `num` and `den` are
//! ordinary polynomials with nonzero constant terms, `gcd(num, den) = 1` and
//! `den` is monic. Zero is `shift = 0, num = 0, den = 1`. Since the form is
//! unique, derived equality is mathematical equality.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use super::field::Field;
use super::laurent::{pow_signed, Laurent};
use super::poly::Poly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct RatFunc<F> {
    shift: i64,
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RatFunc<F> {
    pub fn constant(c: F) -> Self {
        if c.is_zero() {
            return Self::zero_value();
        }
        RatFunc {
            shift: 0,
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    fn zero_value() -> Self {
        RatFunc {
            shift: 0,
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::q_power(1)
    }

    pub fn q_power(k: i64) -> Self {
        RatFunc {
            shift: k,
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn from_laurent(l: &Laurent<F>) -> Self {
        let (shift, num) = l.to_shifted_poly();
        if num.is_zero() {
            return Self::zero_value();
        }
        RatFunc {
            shift,
            num,
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: &Poly<F>) -> Self {
        Self::from_laurent(&Laurent::from_poly(p, 0))
    }

    /// Canonicalizes `num / den`.
    pub fn from_parts(num: &Laurent<F>, den: &Laurent<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (sn, n) = num.to_shifted_poly();
        let (sd, d) = den.to_shifted_poly();
        Ok(Self::normalize(sn - sd, n, d))
    }

    /// `q^shift * num / den`, where `den(0) != 0`.
    fn normalize(mut shift: i64, num: Poly<F>, den: Poly<F>) -> Self {
        if num.is_zero() {
            return Self::zero_value();
        }
        let k = num.low_order();
        let mut num = num.shift_down(k);
        shift += k as i64;
        let mut den = den;
        let g = num.gcd(&den);
        if !g.is_constant() {
            num = num.exact_div(&g).expect("gcd divides numerator");
            den = den.exact_div(&g).expect("gcd divides denominator");
        }
        let lead = den.lead().expect("nonzero denominator").clone();
        if !lead.is_one() {
            let inv = F::one() / lead;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunc { shift, num, den }
    }

    /// Numerator as a Laurent polynomial (powers of `q` live here).
    pub fn numerator(&self) -> Laurent<F> {
        Laurent::from_poly(&self.num, self.shift)
    }

    /// Monic denominator with nonzero constant term.
    pub fn denominator(&self) -> Laurent<F> {
        Laurent::from_poly(&self.den, 0)
    }

    pub fn numerator_poly(&self) -> &Poly<F> {
        &self.num
    }

    pub fn denominator_poly(&self) -> &Poly<F> {
        &self.den
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn is_constant(&self) -> bool {
        self.shift == 0 && self.num.is_constant() && self.den.is_constant()
    }

    pub fn constant_value(&self) -> Option<F> {
        self.is_constant().then(|| self.num.coeff(0))
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_constant()
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        if self.num.is_zero() {
            return other.clone();
        }
        if other.num.is_zero() {
            return self.clone();
        }
        let m = self.shift.min(other.shift);
        let a = self.num.shift_up((self.shift - m) as usize);
        let b = other.num.shift_up((other.shift - m) as usize);
        if self.den == other.den {
            return Self::normalize(m, a.add(&b), self.den.clone());
        }
        let g = self.den.gcd(&other.den);
        let (ad, bd) = if g.is_constant() {
            (self.den.clone(), other.den.clone())
        } else {
            (
                self.den.exact_div(&g).expect("gcd"),
                other.den.exact_div(&g).expect("gcd"),
            )
        };
        let num = a.mul(&bd).add(&b.mul(&ad));
        Self::normalize(m, num, self.den.mul(&bd))
    }

    pub fn neg_ref(&self) -> Self {
        RatFunc {
            shift: self.shift,
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if self.num.is_zero() || other.num.is_zero() {
            return Self::zero_value();
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let cut = |p: &Poly<F>, g: &Poly<F>| {
            if g.is_constant() {
                p.clone()
            } else {
                p.exact_div(g).expect("gcd")
            }
        };
        let num = cut(&self.num, &g1).mul(&cut(&other.num, &g2));
        let den = cut(&self.den, &g2).mul(&cut(&other.den, &g1));
        // both denominators were monic and coprime to the opposite numerators
        let lead = den.lead().expect("nonzero").clone();
        let (num, den) = if lead.is_one() {
            (num, den)
        } else {
            let inv = F::one() / lead;
            (num.scale(&inv), den.scale(&inv))
        };
        RatFunc {
            shift: self.shift + other.shift,
            num,
            den,
        }
    }

    pub fn inv(&self) -> Result<Self> {
        let lead = self.num.lead().ok_or(Error::DivisionByZero)?.clone();
        let s = F::one() / lead;
        Ok(RatFunc {
            shift: -self.shift,
            num: self.den.scale(&s),
            den: self.num.scale(&s),
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul_ref(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = Self::one();
        let mut b = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul_ref(&b);
            }
            b = b.mul_ref(&b);
            n >>= 1;
        }
        Ok(acc)
    }

    /// Valuation at `q = 0`; negative values are poles.
    pub fn order_at_zero(&self) -> Result<i64> {
        if self.num.is_zero() {
            Err(Error::ZeroValuation)
        } else {
            Ok(self.shift)
        }
    }

    /// Exact value at a point where the function is regular.
    pub fn eval(&self, x: &F) -> Result<F> {
        if x.is_zero() {
            return match self.shift {
                s if s < 0 && !self.num.is_zero() => Err(Error::Pole { order: -s }),
                s if s > 0 || self.num.is_zero() => Ok(F::zero()),
                _ => Ok(self.num.coeff(0).div_ref(&self.den.coeff(0))),
            };
        }
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Pole {
                order: self.root_multiplicity(x),
            });
        }
        Ok(self
            .num
            .eval(x)
            .div_ref(&d)
            .mul_ref(&pow_signed(x, self.shift)))
    }

    fn root_multiplicity(&self, x: &F) -> i64 {
        let linear = Poly::from_coeffs(vec![-x.clone(), F::one()]);
        let mut d = self.den.clone();
        let mut m = 0;
        while let Some(q) = d.exact_div(&linear) {
            d = q;
            m += 1;
        }
        m
    }
}

impl<F: Field> Zero for RatFunc<F> {
    fn zero() -> Self {
        Self::zero_value()
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<F: Field> One for RatFunc<F> {
    fn one() -> Self {
        Self::constant(F::one())
    }
}

impl<F: Field> Add for RatFunc<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.add_ref(&rhs)
    }
}

impl<F: Field> Sub for RatFunc<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.sub_ref(&rhs)
    }
}

impl<F: Field> Mul for RatFunc<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

/// Panics on division by zero, like the primitive numeric types; use
/// [`RatFunc::checked_div`] for a `Result`.
impl<F: Field> Div for RatFunc<F> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self.checked_div(&rhs)
            .expect("division by zero rational function")
    }
}

impl<F: Field> Neg for RatFunc<F> {
    type Output = Self;
    fn neg(self) -> Self {
        self.neg_ref()
    }
}

impl<'a, F: Field> Add<&'a RatFunc<F>> for &'a RatFunc<F> {
    type Output = RatFunc<F>;
    fn add(self, rhs: Self) -> RatFunc<F> {
        self.add_ref(rhs)
    }
}

impl<'a, F: Field> Sub<&'a RatFunc<F>> for &'a RatFunc<F> {
    type Output = RatFunc<F>;
    fn sub(self, rhs: Self) -> RatFunc<F> {
        self.sub_ref(rhs)
    }
}

impl<'a, F: Field> Mul<&'a RatFunc<F>> for &'a RatFunc<F> {
    type Output = RatFunc<F>;
    fn mul(self, rhs: Self) -> RatFunc<F> {
        self.mul_ref(rhs)
    }
}

impl<F: Field> Field for RatFunc<F> {
    fn from_i64(n: i64) -> Self {
        Self::constant(F::from_i64(n))
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        RatFunc::add_ref(self, rhs)
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        RatFunc::sub_ref(self, rhs)
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        RatFunc::mul_ref(self, rhs)
    }

    fn div_ref(&self, rhs: &Self) -> Self {
        self.checked_div(rhs)
            .expect("division by zero rational function")
    }

    fn weight(&self) -> usize {
        self.num.coeffs().len() + self.den.coeffs().len()
    }
}

impl<F: Field + fmt::Display> fmt::Display for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.numerator(), self.denominator())
    }
}

impl<F: Field + FromStr> FromStr for RatFunc<F> {
    type Err = Error;

    /// Accepts `(num)/(den)` or a bare Laurent polynomial; the result is
    /// canonicalized whatever form the input was in.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('(') {
            let (num, tail) = rest
                .split_once(")/(")
                .ok_or_else(|| Error::Parse(format!("expected `(num)/(den)`, got `{s}`")))?;
            let den = tail
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse(format!("unterminated denominator in `{s}`")))?;
            let num: Laurent<F> = num.parse()?;
            let den: Laurent<F> = den.parse()?;
            Self::from_parts(&num, &den)
        } else {
            Ok(Self::from_laurent(&s.parse()?))
        }
    }
}
