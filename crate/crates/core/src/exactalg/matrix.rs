//! Dense matrices over a [`Field`].
//!
//! Matrices act on column vectors: column `j` holds the image of basis vector
//! `j`, and a product `A * B` applies `B` first.
//!
//! Text form: one row per line, entries separated by whitespace, lines starting
//! with `#` ignored.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::field::Field;
use super::poly::Poly;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Field> Matrix<T> {
    /// Builds from row-major entries.
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::new(n, m, rows.into_iter().flatten().collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn diagonal(d: &[T]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.data
            .iter()
            .enumerate()
            .map(move |(k, v)| (k / self.cols, k % self.cols, v))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<U: Field, E>(
        &self,
        f: impl Fn(usize, usize, &T) -> std::result::Result<U, E>,
    ) -> std::result::Result<Matrix<U>, E> {
        let data = self
            .entries()
            .map(|(i, j, v)| f(i, j, v))
            .collect::<std::result::Result<Vec<_>, E>>()?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.sub_ref(b))
                .collect(),
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|a| a.mul_ref(c))
    }

    pub fn neg(&self) -> Self {
        self.map(|a| -a.clone())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = out.data[idx].add_ref(&a.mul_ref(b));
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut e: u32) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(
                "power of a non-square matrix".into(),
            ));
        }
        let mut acc = Self::identity(self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self
                .entries()
                .all(|(i, j, v)| if i == j { v.is_one() } else { v.is_zero() })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    /// Positions of nonzero entries, row-major.
    pub fn support(&self) -> Vec<(usize, usize)> {
        self.entries()
            .filter(|(_, _, v)| !v.is_zero())
            .map(|(i, j, _)| (i, j))
            .collect()
    }

    /// `D A D^{-1}` for `D = diag(d)`: entry `(i, j)` becomes `d_i a_ij / d_j`.
    pub fn conjugate_by_diagonal(&self, d: &[T]) -> Result<Self> {
        if !self.is_square() || d.len() != self.rows {
            return Err(Error::DimensionMismatch("diagonal size".into()));
        }
        if d.iter().any(T::is_zero) {
            return Err(Error::Singular);
        }
        Ok(Self::from_fn(self.rows, self.cols, |i, j| {
            let v = self.get(i, j);
            if v.is_zero() || i == j {
                v.clone()
            } else {
                d[i].mul_ref(v).div_ref(&d[j])
            }
        }))
    }

    /// `B[x][y] = A[perm[x]][perm[y]]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if !self.is_square() || perm.len() != self.rows {
            return Err(Error::DimensionMismatch("permutation size".into()));
        }
        Ok(Self::from_fn(self.rows, self.cols, |x, y| {
            self.get(perm[x], perm[y]).clone()
        }))
    }

    /// Gauss-Jordan inverse, choosing the lightest available pivot.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(
                "inverse of a non-square matrix".into(),
            ));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .filter(|&r| !a.get(r, col).is_zero())
                .min_by_key(|&r| a.get(r, col).weight())
                .ok_or(Error::Singular)?;
            a.swap_rows(pivot, col);
            inv.swap_rows(pivot, col);
            let p = a.get(col, col).clone();
            if !p.is_one() {
                for j in 0..n {
                    let idx = col * n + j;
                    a.data[idx] = a.data[idx].div_ref(&p);
                    inv.data[idx] = inv.data[idx].div_ref(&p);
                }
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let pa = a.get(col, j).clone();
                    if !pa.is_zero() {
                        let idx = r * n + j;
                        a.data[idx] = a.data[idx].sub_ref(&f.mul_ref(&pa));
                    }
                    let pi = inv.get(col, j).clone();
                    if !pi.is_zero() {
                        let idx = r * n + j;
                        inv.data[idx] = inv.data[idx].sub_ref(&f.mul_ref(&pi));
                    }
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn det(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(
                "determinant of a non-square matrix".into(),
            ));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = T::one();
        for col in 0..n {
            let Some(pivot) = (col..n)
                .filter(|&r| !a.get(r, col).is_zero())
                .min_by_key(|&r| a.get(r, col).weight())
            else {
                return Ok(T::zero());
            };
            if pivot != col {
                a.swap_rows(pivot, col);
                det = -det;
            }
            let p = a.get(col, col).clone();
            det = det.mul_ref(&p);
            for r in col + 1..n {
                let f = a.get(r, col).div_ref(&p);
                if f.is_zero() {
                    continue;
                }
                for j in col..n {
                    let idx = r * n + j;
                    a.data[idx] = a.data[idx].sub_ref(&f.mul_ref(a.get(col, j)));
                }
            }
        }
        Ok(det)
    }

    /// `det(x I - A)` by the Faddeev-LeVerrier recursion.
    pub fn charpoly(&self) -> Result<Poly<T>> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(
                "charpoly of a non-square matrix".into(),
            ));
        }
        let n = self.rows;
        let mut coeffs = vec![T::zero(); n + 1];
        coeffs[n] = T::one();
        let mut m = Self::identity(n);
        for k in 1..=n {
            let am = self.mul(&m)?;
            let trace = (0..n).fold(T::zero(), |acc, i| acc.add_ref(am.get(i, i)));
            let c = -trace.div_ref(&T::from_i64(k as i64));
            coeffs[n - k] = c.clone();
            m = am;
            for i in 0..n {
                let idx = i * n + i;
                m.data[idx] = m.data[idx].add_ref(&c);
            }
        }
        Ok(Poly::from_coeffs(coeffs))
    }

    /// Finds an invertible diagonal `D` with `D A_k D^{-1} = B_k` for every `k`.
    pub fn diagonal_similarity(a: &[Self], b: &[Self]) -> Option<Vec<T>> {
        let n = a.first()?.rows;
        if a.len() != b.len() || a.iter().chain(b).any(|m| m.rows != n || m.cols != n) {
            return None;
        }
        for (x, y) in a.iter().zip(b) {
            for i in 0..n {
                if x.get(i, i) != y.get(i, i) {
                    return None;
                }
                for j in 0..n {
                    if x.get(i, j).is_zero() != y.get(i, j).is_zero() {
                        return None;
                    }
                }
            }
        }
        // d_i / d_j = b_ij / a_ij along every nonzero off-diagonal entry
        let mut d: Vec<Option<T>> = vec![None; n];
        for start in 0..n {
            if d[start].is_some() {
                continue;
            }
            d[start] = Some(T::one());
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let dv = d[v].clone().expect("visited");
                for (x, y) in a.iter().zip(b) {
                    for w in 0..n {
                        if w == v {
                            continue;
                        }
                        // entry (v, w): d_v / d_w = y_vw / x_vw
                        if !x.get(v, w).is_zero() {
                            let dw = dv.mul_ref(x.get(v, w)).div_ref(y.get(v, w));
                            if !Self::assign(&mut d, w, dw, &mut queue) {
                                return None;
                            }
                        }
                        // entry (w, v): d_w / d_v = y_wv / x_wv
                        if !x.get(w, v).is_zero() {
                            let dw = dv.mul_ref(y.get(w, v)).div_ref(x.get(w, v));
                            if !Self::assign(&mut d, w, dw, &mut queue) {
                                return None;
                            }
                        }
                    }
                }
            }
        }
        Some(d.into_iter().map(|x| x.expect("all visited")).collect())
    }

    fn assign(d: &mut [Option<T>], w: usize, value: T, queue: &mut VecDeque<usize>) -> bool {
        match &d[w] {
            Some(existing) => *existing == value,
            None => {
                d[w] = Some(value);
                queue.push_back(w);
                true
            }
        }
    }
}

impl<F: Field> Matrix<RatFunc<F>> {
    /// Entrywise evaluation; a pole reports its position.
    pub fn eval_at(&self, x: &F) -> Result<Matrix<F>> {
        self.try_map(|row, col, v| {
            v.eval(x).map_err(|e| match e {
                Error::Pole { order } => Error::PoleAt { row, col, order },
                other => other,
            })
        })
    }

    /// Smallest order of vanishing at `q = 0` over the nonzero entries.
    pub fn min_order_at_zero(&self) -> Option<i64> {
        self.data
            .iter()
            .filter_map(|v| v.order_at_zero().ok())
            .min()
    }

    /// Entries with a pole at `q = 0`, as `(row, col, pole order)`.
    pub fn poles_at_zero(&self) -> Vec<(usize, usize, i64)> {
        self.entries()
            .filter_map(|(i, j, v)| match v.order_at_zero() {
                Ok(o) if o < 0 => Some((i, j, -o)),
                _ => None,
            })
            .collect()
    }
}

impl<T: Field + fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl<T: Field + FromStr> FromStr for Matrix<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for line in s.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<T>()
                        .map_err(|_| Error::Parse(format!("bad matrix entry `{tok}`")))
                })
                .collect::<Result<Vec<T>>>()?;
            rows.push(row);
        }
        Self::from_rows(rows)
    }
}

/// JSON form `{"rows": r, "cols": c, "entries": [[..], ..]}` with entries in
/// their text form.
impl<T: Field + fmt::Display> Serialize for Matrix<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(ToString::to_string).collect())
            .collect();
        let mut st = s.serialize_struct("Matrix", 3)?;
        st.serialize_field("rows", &self.rows)?;
        st.serialize_field("cols", &self.cols)?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}
