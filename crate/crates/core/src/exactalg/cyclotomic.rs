//! Cyclotomic polynomials and exact arithmetic at roots of unity.
//!
//! A primitive `r`-th root of unity is modelled as the class of `q` in
//! `Z[q] / Phi_r(q)`. Two integer polynomials agree at `omega^k` iff their
//! residues after substituting `q -> q^k` coincide.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use super::intpoly::IntPoly;

fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// `Phi_r(q)`, obtained by dividing `q^r - 1` by `Phi_d` for the proper
/// divisors `d` of `r`.
pub fn cyclotomic(r: usize) -> IntPoly {
    assert!(r >= 1, "cyclotomic polynomial of order 0");
    let divs = divisors(r);
    let mut table: Vec<(usize, IntPoly)> = Vec::with_capacity(divs.len());
    for &d in &divs {
        let mut phi = IntPoly::monomial(BigInt::from(1), d).sub(&IntPoly::one());
        for (e, phi_e) in &table {
            if d % e == 0 {
                phi = phi
                    .exact_div(phi_e)
                    .expect("cyclotomic factors divide q^d - 1");
            }
        }
        table.push((d, phi));
    }
    table.pop().expect("r is its own divisor").1
}

/// An element of `Z[q] / Phi_r(q)` in reduced form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CyclotomicElement {
    modulus_order: usize,
    residue: IntPoly,
}

impl CyclotomicElement {
    pub fn new(modulus_order: usize, p: &IntPoly) -> Self {
        let residue = p
            .rem(&cyclotomic(modulus_order))
            .expect("cyclotomic polynomials are monic");
        CyclotomicElement {
            modulus_order,
            residue,
        }
    }

    pub fn from_integer(modulus_order: usize, c: i64) -> Self {
        Self::new(modulus_order, &IntPoly::from_i64(&[c]))
    }

    pub fn modulus_order(&self) -> usize {
        self.modulus_order
    }

    pub fn residue(&self) -> &IntPoly {
        &self.residue
    }

    /// The integer this element equals, if it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.residue.as_constant()
    }
}

impl fmt::Display for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod Phi_{}", self.residue, self.modulus_order)
    }
}

/// `P(omega^k)` for a primitive `r`-th root of unity `omega`.
pub fn eval_at_root(p: &IntPoly, r: usize, k: i64) -> CyclotomicElement {
    let k = k.rem_euclid(r as i64) as usize;
    // q^r = 1 in the quotient, so fold exponents mod r before reducing
    let mut folded = vec![BigInt::from(0); r];
    for (i, c) in p.coeffs().iter().enumerate() {
        folded[(i * k) % r] += c;
    }
    CyclotomicElement::new(r, &IntPoly::from_coeffs(folded))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic(4), IntPoly::from_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), IntPoly::from_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), IntPoly::from_i64(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn roots_of_unity_for_one_plus_q_squared() {
        let p = IntPoly::from_i64(&[1, 0, 1]);
        assert_eq!(eval_at_root(&p, 4, 1).as_integer(), Some(0.into()));
        assert_eq!(eval_at_root(&p, 4, 2).as_integer(), Some(2.into()));
        assert_eq!(eval_at_root(&p, 4, 0).as_integer(), Some(2.into()));
        assert_eq!(eval_at_root(&p, 4, 3).as_integer(), Some(0.into()));
    }

    #[test]
    fn non_integer_value_is_detected() {
        // 1 + q at a primitive cube root of unity is -q^2, not an integer
        let e = eval_at_root(&IntPoly::from_i64(&[1, 1]), 3, 1);
        assert_eq!(e.as_integer(), None);
    }
}
