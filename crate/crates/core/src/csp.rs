//! Cyclic sieving for promotion on standard tableaux.
//!
//! A polynomial `P` sieves promotion on `SYT(shape)` when `P(omega^k)` is the
//! number of tableaux fixed by `p^k` for every `k`, with `omega` a primitive
//! `r`-th root of unity. Root-of-unity values are compared exactly in
//! `Z[q] / Phi_r`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{eval_at_root, CyclotomicElement, IntPoly};
use crate::tableau::{enumerate_syt, Basis, Shape};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PolynomialKind {
    QHook,
    Maj,
}

impl fmt::Display for PolynomialKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PolynomialKind::QHook => "q_hook",
            PolynomialKind::Maj => "maj",
        })
    }
}

impl FromStr for PolynomialKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "q_hook" | "q-hook" => Ok(PolynomialKind::QHook),
            "maj" => Ok(PolynomialKind::Maj),
            _ => Err(Error::Parse(format!("unknown polynomial `{s}`"))),
        }
    }
}

/// `1 + q + ... + q^(n-1)`.
fn standard_qint(n: usize) -> IntPoly {
    IntPoly::from_coeffs(vec![BigInt::from(1); n])
}

/// `[r]! / prod_cells [h(cell)]` with standard quantum integers.
pub fn q_hook_polynomial(shape: &Shape) -> Result<IntPoly> {
    let num = (1..=shape.size()).fold(IntPoly::one(), |acc, k| acc.mul(&standard_qint(k)));
    let den = shape
        .hook_lengths()
        .into_iter()
        .fold(IntPoly::one(), |acc, h| acc.mul(&standard_qint(h)));
    num.exact_div(&den)
}

/// `sum_T q^maj(T)`.
pub fn maj_generating_function(shape: &Shape) -> IntPoly {
    let mut coeffs: Vec<BigInt> = Vec::new();
    for t in enumerate_syt(shape) {
        let m = t.maj();
        if coeffs.len() <= m {
            coeffs.resize(m + 1, BigInt::from(0));
        }
        coeffs[m] += 1;
    }
    IntPoly::from_coeffs(coeffs)
}

pub fn polynomial(shape: &Shape, kind: PolynomialKind) -> Result<IntPoly> {
    match kind {
        PolynomialKind::QHook => q_hook_polynomial(shape),
        PolynomialKind::Maj => Ok(maj_generating_function(shape)),
    }
}

/// Number of tableaux fixed by `p^k` for `k = 0..r`.
pub fn fixed_point_counts(shape: &Shape) -> Vec<usize> {
    let basis = Basis::new(shape);
    let p = basis.permutation_of(|t| t.jdt_promotion());
    let mut power: Vec<usize> = (0..basis.len()).collect();
    let mut counts = Vec::with_capacity(shape.size());
    for _ in 0..shape.size() {
        counts.push(power.iter().enumerate().filter(|&(x, &y)| x == y).count());
        power = power.iter().map(|&y| p[y]).collect();
    }
    counts
}

/// Promotion orbits, each listed from its smallest basis index.
pub fn promotion_orbits(shape: &Shape) -> Vec<Vec<usize>> {
    let basis = Basis::new(shape);
    let p = basis.permutation_of(|t| t.jdt_promotion());
    let mut seen = vec![false; p.len()];
    let mut orbits = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            orbit.push(x);
            x = p[x];
        }
        orbits.push(orbit);
    }
    orbits
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootCheck {
    pub k: usize,
    pub lhs: CyclotomicElement,
    pub rhs: usize,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CspVerdict {
    pub shape: Shape,
    pub kind: PolynomialKind,
    pub polynomial: IntPoly,
    pub fix_counts: Vec<usize>,
    pub holds: bool,
    pub per_k: Vec<RootCheck>,
}

pub fn csp_check(shape: &Shape, kind: PolynomialKind) -> Result<CspVerdict> {
    let r = shape.size();
    let poly = polynomial(shape, kind)?;
    let fix_counts = fixed_point_counts(shape);
    let per_k: Vec<RootCheck> = fix_counts
        .iter()
        .enumerate()
        .map(|(k, &rhs)| {
            let lhs = eval_at_root(&poly, r, k as i64);
            let equal = lhs == CyclotomicElement::from_integer(r, rhs as i64);
            RootCheck { k, lhs, rhs, equal }
        })
        .collect();
    Ok(CspVerdict {
        shape: shape.clone(),
        kind,
        holds: per_k.iter().all(|c| c.equal),
        polynomial: poly,
        fix_counts,
        per_k,
    })
}

/// How the major-index generating function relates to the q-hook polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MajHookComparison {
    pub shape: Shape,
    pub q_hook: IntPoly,
    pub maj: IntPoly,
    pub equal: bool,
    /// `s` with `maj = q^s * q_hook`, when such `s` exists.
    pub shift: Option<usize>,
    /// `sum_i (i - 1) * shape_i`.
    pub expected_shift: usize,
    /// Agreement at every `r`-th root of unity.
    pub agree_at_roots: bool,
}

pub fn compare_maj_hook(shape: &Shape) -> Result<MajHookComparison> {
    let r = shape.size();
    let q_hook = q_hook_polynomial(shape)?;
    let maj = maj_generating_function(shape);
    let (s, stripped) = maj.strip_q_power();
    let shift = (stripped == q_hook).then_some(s);
    let agree_at_roots =
        (0..r as i64).all(|k| eval_at_root(&q_hook, r, k) == eval_at_root(&maj, r, k));
    Ok(MajHookComparison {
        shape: shape.clone(),
        equal: q_hook == maj,
        shift,
        expected_shift: shape.parts().iter().enumerate().map(|(i, l)| i * l).sum(),
        agree_at_roots,
        q_hook,
        maj,
    })
}
