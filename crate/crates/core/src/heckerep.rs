//! Seminormal matrices of the Hecke algebra generators `u_i`, the braid
//! generators `sigma_i = q + u_i`, and the cactus generators `t_i(q)`.
//!
//! Matrices use column convention over the basis from
//! [`enumerate_syt`](crate::tableau::enumerate_syt). For a basis tableau `T`
//! and generator `i`, `b` is the signed axial distance `ct(i+1) - ct(i)` and
//! `[n]` the balanced quantum integer with `[-n] = -[n]`.
//!
//! `u_i T = -[b-1]/[b] T + [b+1]/[b] s_i T`, the second term dropped when
//! `s_i T` is not standard.
//!
//! The cactus generators come in three normalizations, all involutive and all
//! satisfying the cactus relations:
//!
//! | normalization | diagonal | coefficient of `s_i T` | fixed `T` |
//! |---|---|---|---|
//! | `Example` | `-1/[b]` | `-q [b-1][b+1]/[b]^2` if `b > 0`, `-1/q` if `b < 0` | `-b` |
//! | `Prose` | `-1/[b]` | `[b-1]/[b]` | `-b` |
//! | `Displayed` | `1/[b]` | `[b+1]/[b]` | `b` |
//!
//! `Example` and `Prose` are diagonally similar; `Displayed` is diagonally
//! similar to `-Prose` and specializes at `q = 1` to Young's seminormal form.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cactus::{check_presentation, CactusAction, RelationCheck, Status};
use crate::error::{Error, Result};
use crate::exactalg::{balanced_signed, Field, Matrix};
use crate::tableau::{Basis, Shape};
use crate::{MatrixQ, MatrixQq, Rational, RationalFunction};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Normalization {
    #[default]
    Example,
    Prose,
    Displayed,
}

impl Normalization {
    pub const ALL: [Normalization; 3] = [
        Normalization::Example,
        Normalization::Prose,
        Normalization::Displayed,
    ];

    /// Diagonal entry on a basis vector fixed by `t_i` (`b = +1` same row,
    /// `b = -1` same column).
    pub fn fixed_sign(self, b: i64) -> i64 {
        match self {
            Normalization::Example | Normalization::Prose => -b,
            Normalization::Displayed => b,
        }
    }
}

impl fmt::Display for Normalization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Normalization::Example => "example",
            Normalization::Prose => "prose",
            Normalization::Displayed => "displayed",
        })
    }
}

impl FromStr for Normalization {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "example" => Ok(Normalization::Example),
            "prose" => Ok(Normalization::Prose),
            "displayed" => Ok(Normalization::Displayed),
            _ => Err(Error::Parse(format!("unknown normalization `{s}`"))),
        }
    }
}

fn qi(n: i64) -> RationalFunction {
    balanced_signed(n)
}

fn int(n: i64) -> RationalFunction {
    RationalFunction::from_i64(n)
}

/// Builds one generator matrix column by column: `diag(b)` on the diagonal and
/// `off(b)` at row `s_i T`.
fn build_generator(
    basis: &Basis,
    i: usize,
    fixed: impl Fn(i64) -> RationalFunction,
    diag: impl Fn(i64) -> RationalFunction,
    off: impl Fn(i64) -> RationalFunction,
) -> MatrixQq {
    let n = basis.len();
    let mut m = Matrix::zeros(n, n);
    for (x, t) in basis.tableaux().iter().enumerate() {
        let b = t.axial_distance(i).expect("generator index in range");
        match t.swapped(i).expect("generator index in range") {
            Some(s) => {
                let y = basis.index_of(&s).expect("same shape");
                m.set(x, x, diag(b));
                m.set(y, x, off(b));
            }
            None => m.set(x, x, fixed(b)),
        }
    }
    m
}

fn u_matrix(basis: &Basis, i: usize) -> MatrixQq {
    let u_diag = |b: i64| -(qi(b - 1) / qi(b));
    build_generator(basis, i, u_diag, u_diag, |b| qi(b + 1) / qi(b))
}

fn t_matrix(basis: &Basis, i: usize, norm: Normalization) -> MatrixQq {
    let fixed = |b: i64| int(norm.fixed_sign(b));
    match norm {
        Normalization::Example => build_generator(
            basis,
            i,
            fixed,
            |b| -(int(1) / qi(b)),
            |b| {
                if b > 0 {
                    -(RationalFunction::q() * qi(b - 1) * qi(b + 1) / (qi(b) * qi(b)))
                } else {
                    -RationalFunction::q_power(-1)
                }
            },
        ),
        Normalization::Prose => build_generator(
            basis,
            i,
            fixed,
            |b| -(int(1) / qi(b)),
            |b| qi(b - 1) / qi(b),
        ),
        Normalization::Displayed => {
            build_generator(basis, i, fixed, |b| int(1) / qi(b), |b| qi(b + 1) / qi(b))
        }
    }
}

pub fn build_u(shape: &Shape) -> Vec<MatrixQq> {
    let basis = Basis::new(shape);
    (1..shape.size()).map(|i| u_matrix(&basis, i)).collect()
}

pub fn build_sigma(shape: &Shape) -> Vec<MatrixQq> {
    let n = Basis::new(shape).len();
    let qid = MatrixQq::identity(n).scale(&RationalFunction::q());
    build_u(shape)
        .iter()
        .map(|u| u.add(&qid).expect("same size"))
        .collect()
}

pub fn build_t_q(shape: &Shape, norm: Normalization) -> Vec<MatrixQq> {
    let basis = Basis::new(shape);
    (1..shape.size())
        .map(|i| t_matrix(&basis, i, norm))
        .collect()
}

/// The seminormal representation of one shape.
#[derive(Clone, Debug)]
pub struct SeminormalRep {
    basis: Basis,
    normalization: Normalization,
    u: Vec<MatrixQq>,
    sigma: Vec<MatrixQq>,
    t_q: Vec<MatrixQq>,
}

impl SeminormalRep {
    pub fn new(shape: &Shape, normalization: Normalization) -> Self {
        let basis = Basis::new(shape);
        let r = shape.size();
        let u: Vec<MatrixQq> = (1..r).map(|i| u_matrix(&basis, i)).collect();
        let qid = MatrixQq::identity(basis.len()).scale(&RationalFunction::q());
        let sigma = u.iter().map(|m| m.add(&qid).expect("same size")).collect();
        let t_q = (1..r).map(|i| t_matrix(&basis, i, normalization)).collect();
        SeminormalRep {
            basis,
            normalization,
            u,
            sigma,
            t_q,
        }
    }

    pub fn shape(&self) -> &Shape {
        self.basis.shape()
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn rank(&self) -> usize {
        self.shape().size()
    }

    pub fn normalization(&self) -> Normalization {
        self.normalization
    }

    /// `u_i`, `1 <= i < r`.
    pub fn u(&self, i: usize) -> &MatrixQq {
        &self.u[i - 1]
    }

    pub fn sigma(&self, i: usize) -> &MatrixQq {
        &self.sigma[i - 1]
    }

    pub fn t_q(&self, i: usize) -> &MatrixQq {
        &self.t_q[i - 1]
    }

    pub fn t_all(&self) -> &[MatrixQq] {
        &self.t_q
    }

    /// `sigma_i^{-1} = q^{-1} + u_i`.
    pub fn sigma_inverse(&self, i: usize) -> MatrixQq {
        let qinv = MatrixQq::identity(self.dim()).scale(&RationalFunction::q_power(-1));
        self.u(i).add(&qinv).expect("same size")
    }

    /// Matrix of `p_{r-1} = t_{r-1} ... t_1`.
    pub fn p_matrix(&self) -> MatrixQq {
        product(&self.t_q, self.rank(), self.dim())
    }
}

/// `m_{r-1} ... m_1` from matrices indexed `1..r`.
pub(crate) fn product<T: Field>(gens: &[Matrix<T>], r: usize, n: usize) -> Matrix<T> {
    (1..r).rev().fold(Matrix::identity(n), |acc, i| {
        acc.mul(&gens[i - 1]).expect("same size")
    })
}

/// Cactus action by a list of generator matrices `t_1, ..., t_{r-1}`.
#[derive(Clone, Debug)]
pub struct MatrixAction<T> {
    rank: usize,
    dim: usize,
    gens: Vec<Matrix<T>>,
}

impl<T: Field> MatrixAction<T> {
    pub fn new(rank: usize, gens: Vec<Matrix<T>>) -> Result<Self> {
        if gens.len() + 1 != rank.max(1) {
            return Err(Error::DimensionMismatch(format!(
                "{} generators for rank {rank}",
                gens.len()
            )));
        }
        let dim = gens.first().map_or(1, Matrix::rows);
        if gens.iter().any(|g| g.rows() != dim || g.cols() != dim) {
            return Err(Error::DimensionMismatch("generator sizes differ".into()));
        }
        Ok(MatrixAction { rank, dim, gens })
    }
}

impl<T: Field> CactusAction for MatrixAction<T> {
    type Element = Matrix<T>;

    fn rank(&self) -> usize {
        self.rank
    }

    fn identity(&self) -> Matrix<T> {
        Matrix::identity(self.dim)
    }

    fn t(&self, i: usize) -> Matrix<T> {
        self.gens[i - 1].clone()
    }

    fn compose(&self, a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
        a.mul(b).expect("same size")
    }
}

/// The q = 1 value of the matrix of `p_{r-1}`.
pub fn long_cycle_matrix(shape: &Shape, norm: Normalization) -> Result<MatrixQ> {
    SeminormalRep::new(shape, norm)
        .p_matrix()
        .eval_at(&Rational::one())
}

/// Which groups of checks to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    pub hecke: bool,
    pub cactus_generators: bool,
    pub cactus_presentation: bool,
}

impl SuiteOptions {
    pub const ALL: SuiteOptions = SuiteOptions {
        hecke: true,
        cactus_generators: true,
        cactus_presentation: true,
    };
}

/// How the `q = 1` values of the `t_i` relate to Young's matrices `sigma_i(1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QOneAnchor {
    /// `s` with `t_i(1) = D (s * sigma_i(1)) D^{-1}` for all `i`, if any.
    pub sign: Option<i64>,
    /// Whether `D` can be taken to be the identity.
    pub exact: bool,
    /// The conjugating diagonal, when one exists.
    pub diagonal: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HeckeReport {
    pub shape: Shape,
    pub normalization: Normalization,
    pub checks: Vec<RelationCheck>,
    /// Diagonal entries of `t_i` on fixed vectors: `[same row, same column]`.
    pub fixed_vector_signs: [i64; 2],
    pub q1_anchor: Option<QOneAnchor>,
}

impl HeckeReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    fn push(&mut self, relation: &str, instance: String, ok: bool) {
        self.checks.push(RelationCheck {
            relation: relation.into(),
            instance,
            status: Status::from_bool(ok),
        });
    }
}

fn supported_on_orbits(rep: &SeminormalRep, m: &MatrixQq, i: usize) -> bool {
    rep.basis.tableaux().iter().enumerate().all(|(x, t)| {
        let partner = t
            .swapped(i)
            .expect("index in range")
            .and_then(|s| rep.basis.index_of(&s));
        (0..rep.dim()).all(|y| y == x || Some(y) == partner || m.get(y, x).is_zero())
    })
}

/// Runs the selected relation checks as exact identities over `Q(q)`.
pub fn relation_suite(rep: &SeminormalRep, opts: SuiteOptions) -> HeckeReport {
    let r = rep.rank();
    let n = rep.dim();
    let id = MatrixQq::identity(n);
    let norm = rep.normalization();
    let mut report = HeckeReport {
        shape: rep.shape().clone(),
        normalization: norm,
        checks: Vec::new(),
        fixed_vector_signs: [norm.fixed_sign(1), norm.fixed_sign(-1)],
        q1_anchor: None,
    };
    let mul = |a: &MatrixQq, b: &MatrixQq| a.mul(b).expect("same size");

    if opts.hecke {
        let two = qi(2);
        for i in 1..r {
            let u = rep.u(i);
            report.push(
                "seminormal support",
                format!("u{i}"),
                supported_on_orbits(rep, u, i),
            );
            let lhs = mul(u, u).add(&u.scale(&two)).expect("same size");
            report.push("quadratic", format!("u{i}^2 = -[2] u{i}"), lhs.is_zero());
            let sinv = rep.sigma_inverse(i);
            report.push(
                "sigma inverse",
                format!("sigma{i} (1/q + u{i}) = 1"),
                mul(rep.sigma(i), &sinv).is_identity(),
            );
            let diff = rep.sigma(i).sub(&sinv).expect("same size");
            let expect = id.scale(&(RationalFunction::q() - RationalFunction::q_power(-1)));
            report.push(
                "sigma difference",
                format!("sigma{i} - sigma{i}^-1 = (q - 1/q) I"),
                diff == expect,
            );
        }
        for i in 1..r.saturating_sub(1) {
            let (a, b) = (rep.u(i), rep.u(i + 1));
            let lhs = mul(&mul(a, b), a).sub(a).expect("same size");
            let rhs = mul(&mul(b, a), b).sub(b).expect("same size");
            report.push(
                "cubic",
                format!("u{i} u{j} u{i} - u{i} = u{j} u{i} u{j} - u{j}", j = i + 1),
                lhs == rhs,
            );
            let (sa, sb) = (rep.sigma(i), rep.sigma(i + 1));
            report.push(
                "braid",
                format!(
                    "sigma{i} sigma{j} sigma{i} = sigma{j} sigma{i} sigma{j}",
                    j = i + 1
                ),
                mul(&mul(sa, sb), sa) == mul(&mul(sb, sa), sb),
            );
        }
        for i in 1..r {
            for j in i + 2..r {
                let (a, b) = (rep.u(i), rep.u(j));
                report.push(
                    "commutation",
                    format!("u{i} u{j} = u{j} u{i}"),
                    mul(a, b) == mul(b, a),
                );
            }
        }
    }

    if opts.cactus_generators {
        for i in 1..r {
            let t = rep.t_q(i);
            report.push(
                "seminormal support",
                format!("t{i}"),
                supported_on_orbits(rep, t, i),
            );
            report.push("involution", format!("t{i}^2 = 1"), mul(t, t).is_identity());
        }
        match q_one_checks(rep) {
            Ok((checks, anchor)) => {
                for (relation, instance, ok) in checks {
                    report.push(relation, instance, ok);
                }
                report.q1_anchor = Some(anchor);
            }
            Err(e) => report.push("q=1 evaluation", e.to_string(), false),
        }
    }

    if opts.cactus_presentation && r >= 2 {
        let action = MatrixAction::new(r, rep.t_all().to_vec()).expect("consistent sizes");
        for c in check_presentation(&action).checks {
            report.checks.push(RelationCheck {
                relation: format!("cactus {}", c.relation),
                ..c
            });
        }
    }
    report
}

type Check = (&'static str, String, bool);

fn q_one_checks(rep: &SeminormalRep) -> Result<(Vec<Check>, QOneAnchor)> {
    let r = rep.rank();
    let one = Rational::one();
    let t1: Vec<MatrixQ> = rep
        .t_all()
        .iter()
        .map(|m| m.eval_at(&one))
        .collect::<Result<_>>()?;
    let s1: Vec<MatrixQ> = (1..r)
        .map(|i| rep.sigma(i).eval_at(&one))
        .collect::<Result<_>>()?;
    let mul = |a: &MatrixQ, b: &MatrixQ| a.mul(b).expect("same size");
    let mut checks = Vec::new();
    for i in 1..r.saturating_sub(1) {
        let st = mul(&t1[i - 1], &t1[i]);
        checks.push((
            "q=1 symmetric group",
            format!("(t{i} t{j})^3 = 1 at q=1", j = i + 1),
            st.pow(3).expect("square").is_identity(),
        ));
    }
    for i in 1..r {
        for j in i + 2..r {
            checks.push((
                "q=1 symmetric group",
                format!("t{i} t{j} = t{j} t{i} at q=1"),
                mul(&t1[i - 1], &t1[j - 1]) == mul(&t1[j - 1], &t1[i - 1]),
            ));
        }
    }
    let mut anchor = QOneAnchor {
        sign: None,
        exact: false,
        diagonal: None,
    };
    for sign in [1i64, -1] {
        let target: Vec<MatrixQ> = s1
            .iter()
            .map(|m| m.scale(&Rational::from_i64(sign)))
            .collect();
        if let Some(d) = MatrixQ::diagonal_similarity(&target, &t1) {
            anchor = QOneAnchor {
                sign: Some(sign),
                exact: target == t1,
                diagonal: Some(d.iter().map(ToString::to_string).collect()),
            };
            break;
        }
    }
    if let (Some(sign), Some(t)) = (anchor.sign, t1.first()) {
        // chi((1 2)) = dim * 2 * (sum of contents) / (r (r - 1))
        let contents: i64 = rep
            .shape()
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (0..len).map(move |j| j as i64 - i as i64))
            .sum();
        let expected = Rational::new(
            (sign * rep.dim() as i64 * 2 * contents).into(),
            ((r * (r - 1)) as i64).into(),
        );
        let trace = (0..rep.dim()).fold(Rational::zero(), |acc, k| acc + t.get(k, k).clone());
        checks.push((
            "q=1 symmetric group",
            "trace of t1 at q=1 is the signed transposition character".into(),
            trace == expected,
        ));
    }
    checks.push((
        "q=1 anchor",
        match anchor.sign {
            Some(1) => "t_i(1) diagonally similar to sigma_i(1)".to_string(),
            Some(_) => "t_i(1) diagonally similar to -sigma_i(1)".to_string(),
            None => "t_i(1) related to sigma_i(1) by a diagonal similarity".to_string(),
        },
        anchor.sign.is_some(),
    ));
    Ok((checks, anchor))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::RatFunc;

    fn shape(s: &str) -> Shape {
        s.parse().unwrap()
    }

    fn block(m: &MatrixQq, x: usize, y: usize) -> [[RationalFunction; 2]; 2] {
        [
            [m.get(x, x).clone(), m.get(x, y).clone()],
            [m.get(y, x).clone(), m.get(y, y).clone()],
        ]
    }

    /// On (2,2) with `i = 2`, basis vector 0 has `b = -2` and vector 1 has
    /// `b = 2`, so the ordered pair with positive axial distance first is (1, 0).
    #[test]
    fn two_by_two_blocks_for_axial_distance_two() {
        let rep = SeminormalRep::new(&shape("2,2"), Normalization::Displayed);
        assert_eq!(rep.basis().get(1).axial_distance(2).unwrap(), 2);
        let u = block(rep.u(2), 1, 0);
        assert_eq!(u[0][0], -(qi(1) / qi(2)));
        assert_eq!(u[0][1], qi(1) / qi(2));
        assert_eq!(u[1][0], qi(3) / qi(2));
        assert_eq!(u[1][1], -(qi(3) / qi(2)));
        let s = block(rep.sigma(2), 1, 0);
        assert_eq!(s[0][0], RatFunc::q_power(2) / qi(2));
        assert_eq!(s[0][1], qi(1) / qi(2));
        assert_eq!(s[1][0], qi(3) / qi(2));
        assert_eq!(s[1][1], -(RatFunc::q_power(-2) / qi(2)));
        let t = block(rep.t_q(2), 1, 0);
        assert_eq!(t[0][0], int(1) / qi(2));
        assert_eq!(t[0][1], qi(1) / qi(2));
        assert_eq!(t[1][0], qi(3) / qi(2));
        assert_eq!(t[1][1], -(int(1) / qi(2)));
    }

    #[test]
    fn single_row_and_column() {
        for u in build_u(&shape("4")) {
            assert!(u.is_zero());
        }
        for u in build_u(&shape("1,1,1")) {
            assert_eq!(u, MatrixQq::identity(1).scale(&-qi(2)));
        }
    }

    #[test]
    fn suites_pass_for_small_shapes() {
        for norm in Normalization::ALL {
            for s in ["2,2", "3,2", "2,1,1"] {
                let rep = SeminormalRep::new(&shape(s), norm);
                let report = relation_suite(&rep, SuiteOptions::ALL);
                let bad: Vec<_> = report
                    .checks
                    .iter()
                    .filter(|c| c.status == Status::Fail)
                    .collect();
                assert!(bad.is_empty(), "{norm} {s}: {bad:?}");
            }
        }
    }

    #[test]
    fn q_one_anchor_signs() {
        let s = shape("3,2");
        let d = relation_suite(
            &SeminormalRep::new(&s, Normalization::Displayed),
            SuiteOptions::ALL,
        );
        let anchor = d.q1_anchor.unwrap();
        assert_eq!(anchor.sign, Some(1));
        assert!(anchor.exact);
        let e = relation_suite(
            &SeminormalRep::new(&s, Normalization::Example),
            SuiteOptions::ALL,
        );
        let anchor = e.q1_anchor.unwrap();
        assert_eq!(anchor.sign, Some(-1));
        assert!(!anchor.exact);
    }

    #[test]
    fn corrupted_block_breaks_nesting() {
        let rep = SeminormalRep::new(&shape("3,2"), Normalization::Example);
        let mut gens = rep.t_all().to_vec();
        // swap the diagonal signs of one 2x2 block of t_2; it stays an involution
        let x = (0..rep.dim())
            .find(|&x| rep.basis().get(x).swapped(2).unwrap().is_some())
            .unwrap();
        let y = rep
            .basis()
            .index_of(&rep.basis().get(x).swapped(2).unwrap().unwrap())
            .unwrap();
        for k in [x, y] {
            let v = gens[1].get(k, k).clone();
            gens[1].set(k, k, -v);
        }
        assert!(gens[1].mul(&gens[1]).unwrap().is_identity());
        let action = MatrixAction::new(5, gens).unwrap();
        let report = check_presentation(&action);
        let failed: Vec<_> = report.failures().collect();
        assert!(failed.iter().any(|c| c.relation == "nested"), "{failed:?}");
    }

    #[test]
    fn long_cycle_power() {
        let m = long_cycle_matrix(&shape("2,2"), Normalization::Example).unwrap();
        assert!(m.pow(4).unwrap().is_identity());
    }
}
