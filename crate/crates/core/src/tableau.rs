//! Partitions and standard Young tableaux.
//!
//! English orientation with 1-based rows and columns; the content of the cell
//! in row `i`, column `j` is `j - i`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition, as weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Shape {
    parts: Vec<usize>,
}

impl Shape {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidShape("empty partition".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidShape(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Shape { parts })
    }

    /// `a` rows of length `b`.
    pub fn rectangle(a: usize, b: usize) -> Result<Self> {
        Self::new(vec![b; a])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_rectangular(&self) -> bool {
        self.parts.iter().all(|&p| p == self.parts[0])
    }

    pub fn conjugate(&self) -> Shape {
        let parts = (0..self.parts[0])
            .map(|j| self.parts.iter().filter(|&&p| p > j).count())
            .collect();
        Shape { parts }
    }

    /// Hook lengths in row-major cell order.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size());
        for (i, &len) in self.parts.iter().enumerate() {
            for j in 0..len {
                let arm = len - j - 1;
                let leg = conj.parts[j] - i - 1;
                out.push(arm + leg + 1);
            }
        }
        out
    }

    /// Number of standard tableaux by the hook-length formula.
    pub fn hook_count(&self) -> u128 {
        let n = self.size() as u128;
        let mut num: u128 = (1..=n).product();
        for h in self.hook_lengths() {
            num /= h as u128;
        }
        num
    }
}

impl TryFrom<Vec<usize>> for Shape {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Shape::new(parts)
    }
}

impl From<Shape> for Vec<usize> {
    fn from(s: Shape) -> Self {
        s.parts
    }
}

impl FromStr for Shape {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidShape(format!("bad part `{p}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Shape::new(parts)
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Shape> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Shape>) {
        if rest == 0 {
            out.push(Shape { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// All partitions of size `1..=max`, grouped by size.
pub fn partitions_up_to(max: usize) -> Vec<Shape> {
    (1..=max).flat_map(partitions).collect()
}

#[derive(Serialize, Deserialize)]
struct RawTableau {
    shape: Vec<usize>,
    rows: Vec<Vec<usize>>,
}

/// A standard filling of a shape with `1..=r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTableau", into = "RawTableau")]
pub struct StandardTableau {
    shape: Shape,
    rows: Vec<Vec<usize>>,
    /// 0-based (row, column) of entry `k + 1`.
    cells: Vec<(usize, usize)>,
}

impl TryFrom<RawTableau> for StandardTableau {
    type Error = Error;
    fn try_from(raw: RawTableau) -> Result<Self> {
        let t = StandardTableau::from_rows(raw.rows)?;
        if t.shape.parts != raw.shape {
            return Err(Error::InvalidTableau(format!(
                "declared shape {:?} but rows have shape {}",
                raw.shape, t.shape
            )));
        }
        Ok(t)
    }
}

impl From<StandardTableau> for RawTableau {
    fn from(t: StandardTableau) -> Self {
        RawTableau {
            shape: t.shape.parts,
            rows: t.rows,
        }
    }
}

/// Statistics of a standard tableau.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Statistics {
    pub inv: usize,
    pub maj: usize,
    pub descents: Vec<usize>,
}

impl StandardTableau {
    /// Validates rows as a standard tableau.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Shape::new(rows.iter().map(Vec::len).collect())?;
        let r = shape.size();
        let mut cells = vec![None; r];
        for (i, row) in rows.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                if e == 0 || e > r {
                    return Err(Error::InvalidTableau(format!("entry {e} outside 1..={r}")));
                }
                if cells[e - 1].replace((i, j)).is_some() {
                    return Err(Error::InvalidTableau(format!("entry {e} repeated")));
                }
            }
        }
        let cells: Vec<(usize, usize)> = cells.into_iter().map(|c| c.expect("bijective")).collect();
        let t = StandardTableau { shape, rows, cells };
        if !t.is_standard() {
            return Err(Error::InvalidTableau(format!(
                "{:?} is not standard",
                t.rows
            )));
        }
        Ok(t)
    }

    fn is_standard(&self) -> bool {
        let rows_ok = self
            .rows
            .iter()
            .all(|row| row.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self.rows.windows(2).all(|pair| {
            pair[1]
                .iter()
                .enumerate()
                .all(|(j, &below)| pair[0][j] < below)
        });
        rows_ok && cols_ok
    }

    fn from_rows_unchecked(shape: Shape, rows: Vec<Vec<usize>>) -> Self {
        let mut cells = vec![(0, 0); shape.size()];
        for (i, row) in rows.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                cells[e - 1] = (i, j);
            }
        }
        StandardTableau { shape, rows, cells }
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    /// 0-based `(row, column)` of entry `k`.
    pub fn position(&self, k: usize) -> (usize, usize) {
        self.cells[k - 1]
    }

    pub fn content(&self, k: usize) -> i64 {
        let (i, j) = self.cells[k - 1];
        j as i64 - i as i64
    }

    pub fn content_vector(&self) -> Vec<i64> {
        (1..=self.size()).map(|k| self.content(k)).collect()
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.size() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.size().saturating_sub(1),
            });
        }
        Ok(())
    }

    /// `ct(i + 1) - ct(i)`.
    pub fn axial_distance(&self, i: usize) -> Result<i64> {
        self.check_index(i)?;
        Ok(self.content(i + 1) - self.content(i))
    }

    /// `s_i T` when it is standard.
    pub fn swapped(&self, i: usize) -> Result<Option<Self>> {
        self.check_index(i)?;
        let rows: Vec<Vec<usize>> = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&e| match e {
                        e if e == i => i + 1,
                        e if e == i + 1 => i,
                        e => e,
                    })
                    .collect()
            })
            .collect();
        let t = Self::from_rows_unchecked(self.shape.clone(), rows);
        Ok(t.is_standard().then_some(t))
    }

    /// The involution `t_i`: swap `i` and `i + 1` when the result is standard.
    pub fn bender_knuth(&self, i: usize) -> Result<Self> {
        Ok(self.swapped(i)?.unwrap_or_else(|| self.clone()))
    }

    /// Jeu-de-taquin promotion: remove 1, slide the hole to an outer corner,
    /// decrement, and place `r` in the vacated cell.
    pub fn jdt_promotion(&self) -> Self {
        let r = self.size();
        let mut rows = self.rows.clone();
        let (mut i, mut j) = (0usize, 0usize);
        loop {
            let right = rows[i].get(j + 1).copied();
            let below = rows.get(i + 1).and_then(|row| row.get(j)).copied();
            let next = match (right, below) {
                (Some(a), Some(b)) if b < a => (i + 1, j),
                (Some(_), _) => (i, j + 1),
                (None, Some(_)) => (i + 1, j),
                (None, None) => break,
            };
            rows[i][j] = rows[next.0][next.1];
            (i, j) = next;
        }
        rows[i][j] = r + 1;
        for row in &mut rows {
            for e in row.iter_mut() {
                *e -= 1;
            }
        }
        Self::from_rows_unchecked(self.shape.clone(), rows)
    }

    /// Half-turn rotation with entries `e -> r + 1 - e`; rectangles only.
    pub fn reverse_complement(&self) -> Result<Self> {
        if !self.shape.is_rectangular() {
            return Err(Error::NotRectangular(self.shape.to_string()));
        }
        let r = self.size();
        let rows = self
            .rows
            .iter()
            .rev()
            .map(|row| row.iter().rev().map(|&e| r + 1 - e).collect())
            .collect();
        Ok(Self::from_rows_unchecked(self.shape.clone(), rows))
    }

    /// Pairs `k < l` with `ct(l) < ct(k)`.
    pub fn inv(&self) -> usize {
        let ct = self.content_vector();
        let mut n = 0;
        for k in 0..ct.len() {
            for l in k + 1..ct.len() {
                if ct[l] < ct[k] {
                    n += 1;
                }
            }
        }
        n
    }

    /// Entries `i` with `i + 1` in a strictly lower row.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.size())
            .filter(|&i| self.cells[i].0 > self.cells[i - 1].0)
            .collect()
    }

    pub fn maj(&self) -> usize {
        self.descents().iter().sum()
    }

    pub fn statistics(&self) -> Statistics {
        let descents = self.descents();
        Statistics {
            inv: self.inv(),
            maj: descents.iter().sum(),
            descents,
        }
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|row| {
                let s: Vec<String> = row.iter().map(ToString::to_string).collect();
                format!("[{}]", s.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// All standard tableaux of `shape`, in decreasing lexicographic order of
/// content vectors. This order indexes every basis in the crate.
pub fn enumerate_syt(shape: &Shape) -> Vec<StandardTableau> {
    let r = shape.size();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.num_rows()];
    fn rec(
        k: usize,
        r: usize,
        shape: &Shape,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<StandardTableau>,
    ) {
        if k > r {
            out.push(StandardTableau::from_rows_unchecked(
                shape.clone(),
                rows.clone(),
            ));
            return;
        }
        for i in 0..rows.len() {
            let len = rows[i].len();
            if len < shape.parts()[i] && (i == 0 || rows[i - 1].len() > len) {
                rows[i].push(k);
                rec(k + 1, r, shape, rows, out);
                rows[i].pop();
            }
        }
    }
    rec(1, r, shape, &mut rows, &mut out);
    out.sort_by_cached_key(|t| std::cmp::Reverse(t.content_vector()));
    out
}

/// A basis of standard tableaux with a reverse index.
#[derive(Clone, Debug)]
pub struct Basis {
    shape: Shape,
    tableaux: Vec<StandardTableau>,
    index: HashMap<Vec<Vec<usize>>, usize>,
}

impl Basis {
    pub fn new(shape: &Shape) -> Self {
        let tableaux = enumerate_syt(shape);
        let index = tableaux
            .iter()
            .enumerate()
            .map(|(k, t)| (t.rows.clone(), k))
            .collect();
        Basis {
            shape: shape.clone(),
            tableaux,
            index,
        }
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.tableaux.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tableaux.is_empty()
    }

    pub fn tableaux(&self) -> &[StandardTableau] {
        &self.tableaux
    }

    pub fn get(&self, k: usize) -> &StandardTableau {
        &self.tableaux[k]
    }

    pub fn index_of(&self, t: &StandardTableau) -> Option<usize> {
        self.index.get(&t.rows).copied()
    }

    /// Images of a map on tableaux, as basis indices.
    pub fn permutation_of(&self, f: impl Fn(&StandardTableau) -> StandardTableau) -> Vec<usize> {
        self.tableaux
            .iter()
            .map(|t| self.index_of(&f(t)).expect("map preserves the shape"))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(rows: &[&[usize]]) -> StandardTableau {
        StandardTableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn shape(s: &str) -> Shape {
        s.parse().unwrap()
    }

    #[test]
    fn enumeration_order_and_counts() {
        let b = enumerate_syt(&shape("2,2"));
        assert_eq!(b, vec![t(&[&[1, 2], &[3, 4]]), t(&[&[1, 3], &[2, 4]])]);
        assert_eq!(enumerate_syt(&shape("3,3")).len(), 5);
        assert_eq!(enumerate_syt(&shape("5")).len(), 1);
    }

    #[test]
    fn content_and_axial_distance() {
        let a = t(&[&[1, 2], &[3, 4]]);
        assert_eq!(a.content_vector(), vec![0, 1, -1, 0]);
        assert_eq!(a.axial_distance(2).unwrap(), -2);
        assert_eq!(a.axial_distance(1).unwrap(), 1);
        assert_eq!(
            a.axial_distance(4),
            Err(Error::IndexOutOfRange { index: 4, max: 3 })
        );
    }

    #[test]
    fn bender_knuth_examples() {
        let a = t(&[&[1, 2], &[3, 4]]);
        let b = t(&[&[1, 3], &[2, 4]]);
        assert_eq!(a.bender_knuth(2).unwrap(), b);
        assert_eq!(a.bender_knuth(1).unwrap(), a);
        assert_eq!(b.bender_knuth(3).unwrap(), b);
    }

    #[test]
    fn promotion_examples() {
        let a = t(&[&[1, 2], &[3, 4]]);
        let b = t(&[&[1, 3], &[2, 4]]);
        assert_eq!(a.jdt_promotion(), b);
        assert_eq!(b.jdt_promotion(), a);
        let row = t(&[&[1, 2, 3]]);
        assert_eq!(row.jdt_promotion(), row);
    }

    #[test]
    fn reverse_complement_examples() {
        let a = t(&[&[1, 2], &[3, 4]]);
        let b = t(&[&[1, 3], &[2, 4]]);
        assert_eq!(a.reverse_complement().unwrap(), a);
        assert_eq!(b.reverse_complement().unwrap(), b);
        for x in enumerate_syt(&shape("3,3")) {
            assert_eq!(
                x.reverse_complement()
                    .unwrap()
                    .reverse_complement()
                    .unwrap(),
                x
            );
        }
        assert!(matches!(
            t(&[&[1, 2], &[3]]).reverse_complement(),
            Err(Error::NotRectangular(_))
        ));
    }

    #[test]
    fn statistics_examples() {
        let a = t(&[&[1, 2], &[3, 4]]);
        let b = t(&[&[1, 3], &[2, 4]]);
        assert_eq!(a.inv(), 3);
        assert_eq!(b.inv(), 2);
        assert_eq!(a.descents(), vec![2]);
        assert_eq!(a.maj(), 2);
        assert_eq!(b.descents(), vec![1, 3]);
        assert_eq!(b.maj(), 4);
    }

    #[test]
    fn hook_lengths_examples() {
        assert_eq!(shape("2,2").hook_lengths(), vec![3, 2, 2, 1]);
        assert_eq!(shape("3,3").hook_lengths(), vec![4, 3, 2, 3, 2, 1]);
        assert_eq!(shape("1").hook_lengths(), vec![1]);
    }

    #[test]
    fn shape_parsing_and_json() {
        assert_eq!(shape("3,3").to_string(), "3,3");
        assert!("2,3".parse::<Shape>().is_err());
        assert!("2,x".parse::<Shape>().is_err());
        let a = t(&[&[1, 2, 3], &[4, 5, 6]]);
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"{"shape":[3,3],"rows":[[1,2,3],[4,5,6]]}"#);
        assert_eq!(serde_json::from_str::<StandardTableau>(&json).unwrap(), a);
        assert!(
            serde_json::from_str::<StandardTableau>(r#"{"shape":[2,2],"rows":[[1,3],[4,2]]}"#)
                .is_err()
        );
        assert!(
            serde_json::from_str::<StandardTableau>(r#"{"shape":[3,1],"rows":[[1,2],[3,4]]}"#)
                .is_err()
        );
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(
            partitions(3),
            vec![shape("3"), shape("2,1"), shape("1,1,1")]
        );
    }
}
