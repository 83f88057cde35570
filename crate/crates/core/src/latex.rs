//! LaTeX output in terms of balanced quantum integers.
//!
//! A rational function is written as `c q^k prod [n]^e_n` whenever it has
//! that form, which covers every entry of the seminormal matrices and their
//! products seen at desk scale. [`parse_entry`] reads the same notation back
//! so emitted arrays can be compared with hand-written ones up to factor
//! order and brace style.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{balanced_signed, cyclotomic, Poly};
use crate::{MatrixQq, Rational, RationalFunction};

/// `coefficient * q^q_power * prod [n]^factors[n]`, nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMonomial {
    pub coefficient: Rational,
    pub q_power: i64,
    pub factors: BTreeMap<u64, i64>,
}

impl QMonomial {
    pub fn to_ratfunc(&self) -> RationalFunction {
        let mut v = RationalFunction::constant(self.coefficient.clone())
            * RationalFunction::q_power(self.q_power);
        for (&n, &e) in &self.factors {
            let b = balanced_signed::<Rational>(n as i64);
            v = v * b.pow(e).expect("[n] is nonzero for n >= 1");
        }
        v
    }

    /// Writes `x` as a monomial in quantum integers, if it is one.
    pub fn from_ratfunc(x: &RationalFunction) -> Option<Self> {
        if x.is_zero() {
            return None;
        }
        let (cn, shift_n, mn) = cyclotomic_factors(x.numerator_poly())?;
        let (cd, shift_d, md) = cyclotomic_factors(x.denominator_poly())?;
        debug_assert_eq!(shift_d, 0);
        let mut mult: BTreeMap<u64, i64> = mn;
        for (m, k) in md {
            *mult.entry(m).or_insert(0) -= k;
        }
        // [n] = q^(1-n) prod_{m | n, m > 1} Phi_m(q^2): peel from the top
        let mut factors = BTreeMap::new();
        while let Some((&m, &k)) = mult.iter().rev().find(|(_, &k)| k != 0) {
            factors.insert(m, k);
            for d in 2..=m {
                if m % d == 0 {
                    *mult.entry(d).or_insert(0) -= k;
                }
            }
        }
        let q_power = x.shift()
            + shift_n
            + factors
                .iter()
                .map(|(&n, &e)| e * (n as i64 - 1))
                .sum::<i64>();
        Some(QMonomial {
            coefficient: cn / cd,
            q_power,
            factors,
        })
    }

    pub fn to_latex(&self) -> String {
        let sign = if self.coefficient.is_negative() {
            "-"
        } else {
            ""
        };
        let c = self.coefficient.abs();
        let mut num = String::new();
        let mut den = String::new();
        if !c.numer().is_one() {
            num.push_str(&c.numer().to_string());
        }
        if !c.denom().is_one() {
            den.push_str(&c.denom().to_string());
        }
        match self.q_power {
            0 => {}
            1 => num.push('q'),
            -1 => den.push('q'),
            k if k > 0 => num.push_str(&format!("q^{{{k}}}")),
            k => den.push_str(&format!("q^{{{}}}", -k)),
        }
        for (&n, &e) in &self.factors {
            let target = if e > 0 { &mut num } else { &mut den };
            target.push_str(&format!("[{n}]"));
            if e.abs() > 1 {
                target.push_str(&format!("^{}", e.abs()));
            }
        }
        if num.is_empty() {
            num.push('1');
        }
        if den.is_empty() {
            format!("{sign}{num}")
        } else {
            format!("{sign}\\frac{{{num}}}{{{den}}}")
        }
    }
}

/// `(constant, q-shift, multiplicities of Phi_m(q^2))` for a polynomial that
/// is a constant times `q^shift` times such cyclotomic factors.
fn cyclotomic_factors(p: &Poly<Rational>) -> Option<(Rational, i64, BTreeMap<u64, i64>)> {
    let low = p.low_order();
    let p = p.shift_down(low);
    let coeffs = p.coeffs();
    if coeffs.iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
        return None;
    }
    let mut rest = Poly::from_coeffs(coeffs.iter().step_by(2).cloned().collect());
    let deg = rest.degree().unwrap_or(0);
    let mut mult = BTreeMap::new();
    // phi(m) >= sqrt(m / 2), so no factor of degree <= deg has m > 2 deg^2
    for m in 2..=(2 * deg * deg + 2) as u64 {
        if rest.is_constant() {
            break;
        }
        if totient(m) > rest.degree().unwrap_or(0) as u64 {
            continue;
        }
        let phi: Poly<Rational> = Poly::from_coeffs(
            cyclotomic(m as usize)
                .coeffs()
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        );
        while let Some(quot) = rest.exact_div(&phi) {
            rest = quot;
            *mult.entry(m).or_insert(0) += 1;
        }
    }
    if !rest.is_constant() {
        return None;
    }
    Some((rest.coeff(0), low as i64, mult))
}

fn totient(mut n: u64) -> u64 {
    let mut out = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

/// A single matrix entry in LaTeX; `0` for zero.
pub fn entry_latex(x: &RationalFunction) -> String {
    if x.is_zero() {
        return "0".into();
    }
    match QMonomial::from_ratfunc(x) {
        Some(m) => m.to_latex(),
        None => format!(
            "\\frac{{{}}}{{{}}}",
            laurent_latex(&x.numerator()),
            laurent_latex(&x.denominator())
        ),
    }
}

fn laurent_latex(l: &crate::LaurentPoly) -> String {
    let mut out = String::new();
    for (e, c) in l.terms() {
        let neg = c.is_negative();
        let a = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let show_coeff = !a.is_one() || e == 0;
        if show_coeff {
            out.push_str(&a.to_string());
        }
        match e {
            0 => {}
            1 => out.push('q'),
            _ => out.push_str(&format!("q^{{{e}}}")),
        }
    }
    out
}

/// `\left(\begin{array}{r...r} ... \end{array}\right)`.
pub fn matrix_latex(m: &MatrixQq) -> String {
    let mut out = format!("\\left(\\begin{{array}}{{{}}}\n", "r".repeat(m.cols()));
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(entry_latex).collect();
        out.push_str(&row.join(" & "));
        if i + 1 < m.rows() {
            out.push_str(" \\\\");
        }
        out.push('\n');
    }
    out.push_str("\\end{array}\\right)\n");
    out
}

/// Ascending polynomial with integer coefficients, e.g. `1 + q^{2}`.
pub fn polynomial_latex(coeffs: &[BigInt]) -> String {
    let l = crate::LaurentPoly::from_terms(
        coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e as i64, Rational::from_integer(c.clone()))),
    );
    if l.is_zero() {
        "0".into()
    } else {
        laurent_latex(&l)
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_str(&mut self, t: &str) -> bool {
        self.skip_ws();
        if self.s[self.pos..].starts_with(t.as_bytes()) {
            self.pos += t.len();
            true
        } else {
            false
        }
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!(
            "{what} at offset {} in `{}`",
            self.pos,
            String::from_utf8_lossy(self.s)
        ))
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let neg = self.eat(b'-');
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let v: i64 = std::str::from_utf8(&self.s[start..self.pos])
            .expect("ascii")
            .parse()
            .map_err(|_| self.err("integer overflow"))?;
        Ok(if neg { -v } else { v })
    }

    /// `^k` or `^{k}`; 1 when absent.
    fn exponent(&mut self) -> Result<i64> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        if self.eat(b'{') {
            let v = self.integer()?;
            if !self.eat(b'}') {
                return Err(self.err("expected `}`"));
            }
            Ok(v)
        } else {
            // a bare exponent is a single digit
            self.skip_ws();
            match self.s.get(self.pos) {
                Some(d) if d.is_ascii_digit() => {
                    self.pos += 1;
                    Ok(i64::from(d - b'0'))
                }
                _ => Err(self.err("expected exponent")),
            }
        }
    }

    /// `[-] [integer] (q^k | [n]^e)*` up to `stop`.
    fn product(&mut self, stop: Option<u8>) -> Result<Option<QMonomial>> {
        let mut m = QMonomial {
            coefficient: Rational::one(),
            q_power: 0,
            factors: BTreeMap::new(),
        };
        if self.eat(b'-') {
            m.coefficient = -m.coefficient;
        }
        let mut any = false;
        if matches!(self.peek(), Some(d) if d.is_ascii_digit()) {
            m.coefficient *= Rational::from_integer(self.integer()?.into());
            any = true;
        }
        loop {
            match self.peek() {
                Some(b'[') => {
                    self.pos += 1;
                    let n = self.integer()?;
                    if n < 1 || !self.eat(b']') {
                        return Err(self.err("bad quantum integer"));
                    }
                    let e = self.exponent()?;
                    *m.factors.entry(n as u64).or_insert(0) += e;
                }
                Some(b'q') => {
                    self.pos += 1;
                    m.q_power += self.exponent()?;
                }
                c if c == stop => break,
                None => break,
                _ => return Err(self.err("unexpected character")),
            }
            any = true;
        }
        if !any {
            return Err(self.err("empty product"));
        }
        if m.coefficient.is_zero() {
            return Ok(None);
        }
        // [1] = 1 carries no information
        m.factors.retain(|&n, e| n != 1 && *e != 0);
        Ok(Some(m))
    }

    /// `{product}` or a single digit.
    fn argument(&mut self) -> Result<Option<QMonomial>> {
        if self.eat(b'{') {
            let v = self.product(Some(b'}'))?;
            if !self.eat(b'}') {
                return Err(self.err("expected `}`"));
            }
            Ok(v)
        } else {
            self.skip_ws();
            match self.s.get(self.pos) {
                Some(d) if d.is_ascii_digit() => {
                    self.pos += 1;
                    let v = i64::from(d - b'0');
                    Ok((v != 0).then(|| QMonomial {
                        coefficient: Rational::from_integer(v.into()),
                        q_power: 0,
                        factors: BTreeMap::new(),
                    }))
                }
                _ => Err(self.err("expected argument")),
            }
        }
    }
}

fn divide(a: QMonomial, b: QMonomial) -> QMonomial {
    let mut factors = a.factors;
    for (n, e) in b.factors {
        *factors.entry(n).or_insert(0) -= e;
    }
    factors.retain(|_, e| *e != 0);
    QMonomial {
        coefficient: a.coefficient / b.coefficient,
        q_power: a.q_power - b.q_power,
        factors,
    }
}

/// Parses one entry; `None` is zero.
pub fn parse_entry(s: &str) -> Result<Option<QMonomial>> {
    let mut c = Cursor {
        s: s.as_bytes(),
        pos: 0,
    };
    let neg = c.eat(b'-');
    let value = if c.eat_str("\\frac") {
        let num = c.argument()?;
        let den = c.argument()?.ok_or(Error::DivisionByZero)?;
        num.map(|n| divide(n, den))
    } else {
        c.product(None)?
    };
    if c.peek().is_some() {
        return Err(c.err("trailing input"));
    }
    Ok(value.map(|mut v| {
        if neg {
            v.coefficient = -v.coefficient;
        }
        v
    }))
}

/// Parses an `array` body into normalized entries, row by row.
pub fn parse_array(s: &str) -> Result<Vec<Vec<Option<QMonomial>>>> {
    let start = s
        .find("\\begin{array}")
        .ok_or_else(|| Error::Parse("no array".into()))?;
    let body = &s[start + "\\begin{array}".len()..];
    let body = body
        .trim_start()
        .strip_prefix('{')
        .and_then(|b| b.find('}').map(|k| &b[k + 1..]))
        .ok_or_else(|| Error::Parse("missing column spec".into()))?;
    let end = body
        .find("\\end{array}")
        .ok_or_else(|| Error::Parse("unterminated array".into()))?;
    body[..end]
        .split("\\\\")
        .map(str::trim)
        .filter(|row| !row.is_empty())
        .map(|row| row.split('&').map(|e| parse_entry(e.trim())).collect())
        .collect()
}
