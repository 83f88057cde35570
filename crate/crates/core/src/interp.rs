//! The interpolating matrix `p_hat = t_hat_{r-1} ... t_hat_1`, where each
//! `t_hat_i` is a cactus generator conjugated by `D = diag(q^inv(T))`.
//!
//! For rectangular shapes `p_hat` specializes to the promotion permutation
//! at `q = 0` and to the long cycle at `q = 1`, and `p_hat^r = I`.
//! [`interpolating_matrix`] checks all of this exactly and records the outcome
//! in an [`InterpolationCertificate`]; nothing is asserted silently.
//!
//! Which side of `t` carries `D` depends on the normalization of `t`, so the
//! orientation is pinned per normalization and then verified by regularity.

use std::path::Path;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::cactus::Permutation;
use crate::error::{Error, Result};
use crate::exactalg::Matrix;
use crate::heckerep::{long_cycle_matrix, product, Normalization, SeminormalRep};
use crate::tableau::{Basis, Shape};
use crate::{MatrixQ, MatrixQq, Rational, RationalFunction};

/// Side on which `D` multiplies `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    /// `D t D^{-1}`
    Direct,
    /// `D^{-1} t D`
    Inverse,
}

impl Orientation {
    /// The orientation that cancels the poles at `q = 0` for `norm`.
    ///
    /// `Example` and `Prose` put the `1/q` on the `s_i T` coefficient when
    /// `b < 0`, `Displayed` when `b > 0`; the two cases need opposite sides.
    pub fn regular_for(norm: Normalization) -> Self {
        match norm {
            Normalization::Example | Normalization::Prose => Orientation::Inverse,
            Normalization::Displayed => Orientation::Direct,
        }
    }
}

/// `diag(q^inv(T))` over the basis of `shape`.
pub fn d_matrix(shape: &Shape) -> MatrixQq {
    MatrixQq::diagonal(&d_diagonal(&Basis::new(shape), Orientation::Direct))
}

fn d_diagonal(basis: &Basis, orientation: Orientation) -> Vec<RationalFunction> {
    let sign = match orientation {
        Orientation::Direct => 1,
        Orientation::Inverse => -1,
    };
    basis
        .tableaux()
        .iter()
        .map(|t| RationalFunction::q_power(sign * t.inv() as i64))
        .collect()
}

fn conjugate_all(gens: &[MatrixQq], basis: &Basis, orientation: Orientation) -> Vec<MatrixQq> {
    let d = d_diagonal(basis, orientation);
    gens.iter()
        .map(|g| g.conjugate_by_diagonal(&d).expect("diagonal matches basis"))
        .collect()
}

/// Conjugated generators without any regularity check.
pub fn hatted_generators_with(
    shape: &Shape,
    norm: Normalization,
    orientation: Orientation,
) -> Vec<MatrixQq> {
    let rep = SeminormalRep::new(shape, norm);
    conjugate_all(rep.t_all(), rep.basis(), orientation)
}

/// `t_hat_1, ..., t_hat_{r-1}` in the pinned orientation; any surviving pole
/// at `q = 0` is an error.
pub fn hatted_generators(shape: &Shape, norm: Normalization) -> Result<Vec<MatrixQq>> {
    let gens = hatted_generators_with(shape, norm, Orientation::regular_for(norm));
    for g in &gens {
        if let Some(&(row, col, order)) = g.poles_at_zero().first() {
            return Err(Error::IrregularConjugation { row, col, order });
        }
    }
    Ok(gens)
}

/// Which orientations make every `t_hat_i` regular at `q = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OrientationScan {
    pub direct_regular: bool,
    pub inverse_regular: bool,
    /// Whether some unconjugated `t_i` has a pole at `q = 0`.
    pub unhatted_has_pole: bool,
    /// Smallest valuation at `q = 0` over all unconjugated `t_i`.
    pub unhatted_min_order: Option<i64>,
}

pub fn scan_orientations(shape: &Shape, norm: Normalization) -> OrientationScan {
    let rep = SeminormalRep::new(shape, norm);
    let regular = |o| {
        conjugate_all(rep.t_all(), rep.basis(), o)
            .iter()
            .all(|g| g.poles_at_zero().is_empty())
    };
    OrientationScan {
        direct_regular: regular(Orientation::Direct),
        inverse_regular: regular(Orientation::Inverse),
        unhatted_has_pole: rep.t_all().iter().any(|g| !g.poles_at_zero().is_empty()),
        unhatted_min_order: rep
            .t_all()
            .iter()
            .filter_map(MatrixQq::min_order_at_zero)
            .min(),
    }
}

/// 0/1 matrix of a basis map in column convention: column `x` has its 1 in
/// row `f(x)`.
fn basis_map_matrix(images: &[usize]) -> MatrixQ {
    let n = images.len();
    Matrix::from_fn(n, n, |i, j| {
        if images[j] == i {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// Permutation matrix of jeu-de-taquin promotion on the basis of `shape`.
pub fn promotion_matrix(shape: &Shape) -> MatrixQ {
    let basis = Basis::new(shape);
    basis_map_matrix(&basis.permutation_of(|t| t.jdt_promotion()))
}

/// `t_hat_i(0)` against the 0/1 matrix of the involution `t_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorAtZero {
    pub index: usize,
    pub regular: bool,
    /// Same nonzero pattern as the involution.
    pub support_matches: bool,
    /// Entrywise equal to the involution.
    pub literal_matches: bool,
}

/// Everything established about `p_hat` for one shape.
#[derive(Clone, Debug, Serialize)]
pub struct InterpolationCertificate {
    pub shape: Shape,
    pub normalization: Normalization,
    pub orientation: Orientation,
    pub p_hat: MatrixQq,
    pub regular_at_zero: bool,
    pub eval0: Option<MatrixQ>,
    pub eval1: Option<MatrixQ>,
    pub power_is_identity: bool,
    /// Smallest `k <= 2r` with `p_hat^k = I`, if any.
    pub order: Option<usize>,
    /// `Some(s)` when `eval0 = s * promotion_matrix` with `s = +1` or `-1`.
    pub promotion_sign: Option<i64>,
    pub eval0_is_promotion: bool,
    pub eval1_is_long_cycle: bool,
    pub charpolys_agree: Option<bool>,
    pub generators: Vec<GeneratorAtZero>,
    pub matched_basis_permutation: Option<Permutation>,
}

impl InterpolationCertificate {
    /// The three endpoint properties plus the conjugacy corollary.
    pub fn certifies_interpolation(&self) -> bool {
        self.regular_at_zero
            && self.eval0_is_promotion
            && self.eval1_is_long_cycle
            && self.power_is_identity
            && self.charpolys_agree == Some(true)
    }
}

/// Builds `p_hat` under the default normalization and certifies it.
pub fn interpolating_matrix(shape: &Shape) -> Result<InterpolationCertificate> {
    interpolating_matrix_with(shape, Normalization::default())
}

pub fn interpolating_matrix_with(
    shape: &Shape,
    norm: Normalization,
) -> Result<InterpolationCertificate> {
    let orientation = Orientation::regular_for(norm);
    let rep = SeminormalRep::new(shape, norm);
    let basis = rep.basis();
    let (r, n) = (rep.rank(), rep.dim());
    let hats = conjugate_all(rep.t_all(), basis, orientation);
    let p_hat = product(&hats, r, n);

    let eval0 = p_hat.eval_at(&Rational::zero()).ok();
    let eval1 = p_hat.eval_at(&Rational::one()).ok();
    let (power_is_identity, order) = power_and_order(&p_hat, r)?;

    let promotion = promotion_matrix(shape);
    let promotion_sign = eval0.as_ref().and_then(|e| {
        if *e == promotion {
            Some(1)
        } else if *e == promotion.neg() {
            Some(-1)
        } else {
            None
        }
    });
    let eval1_is_long_cycle = match &eval1 {
        Some(e) => *e == long_cycle_matrix(shape, norm)?,
        None => false,
    };
    let charpolys_agree = match (&eval0, &eval1) {
        (Some(a), Some(b)) => Some(a.charpoly()? == b.charpoly()?),
        _ => None,
    };

    let generators = hats
        .iter()
        .enumerate()
        .map(|(k, h)| {
            let i = k + 1;
            let involution = basis_map_matrix(
                &basis.permutation_of(|t| t.bender_knuth(i).expect("index in range")),
            );
            match h.eval_at(&Rational::zero()) {
                Ok(at0) => GeneratorAtZero {
                    index: i,
                    regular: true,
                    support_matches: at0.support() == involution.support(),
                    literal_matches: at0 == involution,
                },
                Err(_) => GeneratorAtZero {
                    index: i,
                    regular: false,
                    support_matches: false,
                    literal_matches: false,
                },
            }
        })
        .collect();

    Ok(InterpolationCertificate {
        shape: shape.clone(),
        normalization: norm,
        orientation,
        regular_at_zero: eval0.is_some(),
        eval0,
        eval1,
        power_is_identity,
        order,
        promotion_sign,
        eval0_is_promotion: promotion_sign == Some(1),
        eval1_is_long_cycle,
        charpolys_agree,
        generators,
        matched_basis_permutation: None,
        p_hat,
    })
}

/// Whether `p^r = I`, and the order of `p` up to `2r`.
///
/// Specializing at `q = 2` (where no quantum integer vanishes) refutes
/// `p^k = I` cheaply; an exact power is computed only when the specialization
/// is the identity.
fn power_and_order(p: &MatrixQq, r: usize) -> Result<(bool, Option<usize>)> {
    let at2 = p.eval_at(&Rational::from_integer(2.into()))?;
    let mut exact = std::collections::HashMap::new();
    let mut is_identity = |k: usize, special: bool| -> Result<bool> {
        if !special {
            return Ok(false);
        }
        if let Some(&v) = exact.get(&k) {
            return Ok(v);
        }
        let v = p.pow(k as u32)?.is_identity();
        exact.insert(k, v);
        Ok(v)
    };
    let mut acc = at2.clone();
    let mut order = None;
    let mut at_r = false;
    for k in 1..=2 * r {
        let special = acc.is_identity();
        if k == r {
            at_r = is_identity(k, special)?;
        }
        if order.is_none() && is_identity(k, special)? {
            order = Some(k);
        }
        acc = acc.mul(&at2)?;
    }
    Ok((at_r, order))
}

fn lift(m: &MatrixQ) -> MatrixQq {
    m.map(|x| RationalFunction::constant(x.clone()))
}

/// The eight reference matrices of the `(3,3)` worked example, in the order
/// rotation, promotion, interpolating and intertwiner, each followed by its
/// stated inverse.
#[derive(Clone, Debug)]
pub struct WorkedExample {
    pub rotation: MatrixQq,
    pub rotation_inverse: MatrixQq,
    pub promotion: MatrixQq,
    pub promotion_inverse: MatrixQq,
    pub interpolating: MatrixQq,
    pub interpolating_inverse: MatrixQq,
    pub intertwiner: MatrixQq,
    pub intertwiner_inverse: MatrixQq,
}

pub const FIXTURE_NAMES: [&str; 8] = [
    "rotation",
    "rotation_inverse",
    "promotion",
    "promotion_inverse",
    "interpolating",
    "interpolating_inverse",
    "intertwiner",
    "intertwiner_inverse",
];

const EMBEDDED: [&str; 8] = [
    include_str!("../fixtures/rotation.txt"),
    include_str!("../fixtures/rotation_inverse.txt"),
    include_str!("../fixtures/promotion.txt"),
    include_str!("../fixtures/promotion_inverse.txt"),
    include_str!("../fixtures/interpolating.txt"),
    include_str!("../fixtures/interpolating_inverse.txt"),
    include_str!("../fixtures/intertwiner.txt"),
    include_str!("../fixtures/intertwiner_inverse.txt"),
];

impl WorkedExample {
    pub fn shape() -> Shape {
        Shape::rectangle(2, 3).expect("valid")
    }

    pub fn embedded() -> Result<Self> {
        Self::from_texts(EMBEDDED.iter().map(|s| s.to_string()).collect())
    }

    /// Reads `<name>.txt` for each name in [`FIXTURE_NAMES`].
    pub fn from_dir(dir: &Path) -> Result<Self> {
        let texts = FIXTURE_NAMES
            .iter()
            .map(|name| {
                let path = dir.join(format!("{name}.txt"));
                std::fs::read_to_string(&path)
                    .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_texts(texts)
    }

    fn from_texts(texts: Vec<String>) -> Result<Self> {
        let mut m = texts
            .iter()
            .zip(FIXTURE_NAMES)
            .map(|(t, name)| {
                let mat: MatrixQq = t
                    .parse()
                    .map_err(|e| Error::Parse(format!("fixture {name}: {e}")))?;
                if mat.rows() != 5 || mat.cols() != 5 {
                    return Err(Error::DimensionMismatch(format!(
                        "fixture {name} is not 5x5"
                    )));
                }
                Ok(mat)
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter();
        let mut next = || m.next().expect("eight fixtures");
        Ok(WorkedExample {
            rotation: next(),
            rotation_inverse: next(),
            promotion: next(),
            promotion_inverse: next(),
            interpolating: next(),
            interpolating_inverse: next(),
            intertwiner: next(),
            intertwiner_inverse: next(),
        })
    }

    /// The six matrices compared against computation.
    pub fn compared(&self) -> [(&'static str, &MatrixQq); 6] {
        [
            ("rotation", &self.rotation),
            ("rotation_inverse", &self.rotation_inverse),
            ("promotion", &self.promotion),
            ("promotion_inverse", &self.promotion_inverse),
            ("interpolating", &self.interpolating),
            ("interpolating_inverse", &self.interpolating_inverse),
        ]
    }

    fn pairs(&self) -> [(&'static str, &MatrixQq, &MatrixQq); 4] {
        [
            ("rotation", &self.rotation, &self.rotation_inverse),
            ("promotion", &self.promotion, &self.promotion_inverse),
            (
                "interpolating",
                &self.interpolating,
                &self.interpolating_inverse,
            ),
            ("intertwiner", &self.intertwiner, &self.intertwiner_inverse),
        ]
    }
}

/// One differing entry, 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryDiff {
    pub row: usize,
    pub col: usize,
    pub expected: String,
    pub computed: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct MatrixComparison {
    pub name: String,
    pub matches: bool,
    pub mismatches: Vec<EntryDiff>,
    /// The computed matrix in the reference basis order.
    pub computed: MatrixQq,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedCheck {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct WorkedExampleReport {
    pub shape: Shape,
    pub normalization: Normalization,
    /// Best permutation found: computed basis vector `pi(x)` sits at
    /// reference position `x`.
    pub permutation: Permutation,
    pub all_match: bool,
    pub comparisons: Vec<MatrixComparison>,
    /// Reference matrices checked against each other.
    pub reference_checks: Vec<NamedCheck>,
    pub intertwiner: IntertwinerReport,
}

impl WorkedExampleReport {
    pub fn mismatch_count(&self) -> usize {
        self.comparisons.iter().map(|c| c.mismatches.len()).sum()
    }

    /// Human-readable diff of every mismatching entry.
    pub fn diff(&self) -> String {
        let mut out = format!("basis permutation {}\n", self.permutation);
        for c in self.comparisons.iter().filter(|c| !c.matches) {
            for d in &c.mismatches {
                out.push_str(&format!(
                    "{} ({}, {}): expected {} computed {}\n",
                    c.name, d.row, d.col, d.expected, d.computed
                ));
            }
        }
        out
    }

    /// `Err(NoMatchingPermutation)` with the closest diff unless every
    /// matrix matched.
    pub fn into_result(self) -> Result<Self> {
        if self.all_match {
            Ok(self)
        } else {
            Err(Error::NoMatchingPermutation(self.diff()))
        }
    }
}

/// The six computed counterparts of [`WorkedExample::compared`].
pub fn computed_example_matrices(norm: Normalization) -> Result<[MatrixQq; 6]> {
    let cert = interpolating_matrix_with(&WorkedExample::shape(), norm)?;
    let c1 = cert.eval1.ok_or(Error::Pole { order: 0 })?;
    let c0 = cert.eval0.ok_or_else(|| poles_error(&cert.p_hat))?;
    Ok([
        lift(&c1),
        lift(&c1.inverse()?),
        lift(&c0),
        lift(&c0.inverse()?),
        cert.p_hat.clone(),
        cert.p_hat.inverse()?,
    ])
}

fn poles_error(m: &MatrixQq) -> Error {
    match m.poles_at_zero().first() {
        Some(&(row, col, order)) => Error::PoleAt { row, col, order },
        None => Error::Pole { order: 0 },
    }
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Compares the embedded reference matrices with computation.
pub fn match_worked_example() -> Result<WorkedExampleReport> {
    match_worked_example_against(&WorkedExample::embedded()?)
}

/// Searches all basis permutations for one under which the six computed
/// matrices equal the references; reports the closest one otherwise.
pub fn match_worked_example_against(reference: &WorkedExample) -> Result<WorkedExampleReport> {
    let norm = Normalization::default();
    let computed = computed_example_matrices(norm)?;
    let targets = reference.compared();

    let score = |perm: &[usize]| -> usize {
        targets
            .iter()
            .zip(&computed)
            .map(|((_, t), c)| {
                t.entries()
                    .filter(|&(x, y, v)| c.get(perm[x], perm[y]) == v)
                    .count()
            })
            .sum()
    };
    // max_by_key keeps the last maximum; reverse so ties go to the
    // lexicographically first permutation
    let best = all_permutations(5)
        .into_iter()
        .rev()
        .max_by_key(|p| score(p))
        .expect("nonempty");

    let comparisons: Vec<MatrixComparison> = targets
        .iter()
        .zip(&computed)
        .map(|((name, t), c)| {
            let moved = c.permuted(&best).expect("5x5");
            let mismatches: Vec<EntryDiff> = t
                .entries()
                .filter(|&(x, y, v)| moved.get(x, y) != v)
                .map(|(x, y, v)| EntryDiff {
                    row: x + 1,
                    col: y + 1,
                    expected: v.to_string(),
                    computed: moved.get(x, y).to_string(),
                })
                .collect();
            MatrixComparison {
                name: name.to_string(),
                matches: mismatches.is_empty(),
                mismatches,
                computed: moved,
            }
        })
        .collect();

    let mut reference_checks: Vec<NamedCheck> = reference
        .pairs()
        .iter()
        .map(|(name, a, b)| NamedCheck {
            name: format!("{name} pair multiplies to the identity"),
            holds: a.mul(b).map(|m| m.is_identity()).unwrap_or(false),
        })
        .collect();
    reference_checks.push(NamedCheck {
        name: "interpolating at q = 0 equals promotion".into(),
        holds: reference
            .interpolating
            .eval_at(&Rational::zero())
            .ok()
            .map(|m| lift(&m))
            == Some(reference.promotion.clone()),
    });
    reference_checks.push(NamedCheck {
        name: "interpolating at q = 1 equals rotation".into(),
        holds: reference
            .interpolating
            .eval_at(&Rational::one())
            .ok()
            .map(|m| lift(&m))
            == Some(reference.rotation.clone()),
    });

    let permutation =
        Permutation::new(best.iter().map(|&k| k + 1).collect()).expect("valid permutation");
    // bring the reference intertwiner into the computed basis
    let back: Vec<usize> = permutation
        .inverse()
        .images()
        .iter()
        .map(|&k| k - 1)
        .collect();
    let intertwiner = verify_intertwiner_pair(
        &reference.intertwiner.permuted(&back)?,
        Some(&reference.intertwiner_inverse.permuted(&back)?),
        &WorkedExample::shape(),
    )?;

    Ok(WorkedExampleReport {
        shape: WorkedExample::shape(),
        normalization: norm,
        all_match: comparisons.iter().all(|c| c.matches),
        permutation,
        comparisons,
        reference_checks,
        intertwiner,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct IntertwinerReport {
    pub shape: Shape,
    /// `M * M_inv = I` when a stated inverse was supplied.
    pub inverse_consistent: Option<bool>,
    pub identities: Vec<NamedCheck>,
}

impl IntertwinerReport {
    pub fn holding(&self) -> impl Iterator<Item = &str> {
        self.identities
            .iter()
            .filter(|c| c.holds)
            .map(|c| c.name.as_str())
    }
}

pub fn verify_intertwiner(m: &MatrixQq, shape: &Shape) -> Result<IntertwinerReport> {
    verify_intertwiner_pair(m, None, shape)
}

/// Tests which candidate intertwining identities `m` satisfies, with
/// `c0 = p_hat(0)`, `c1 = p_hat(1)` and `m(1)` the `q = 1` value of `m`.
pub fn verify_intertwiner_pair(
    m: &MatrixQq,
    m_inv: Option<&MatrixQq>,
    shape: &Shape,
) -> Result<IntertwinerReport> {
    let cert = interpolating_matrix(shape)?;
    let n = cert.p_hat.rows();
    if !m.is_square() || m.rows() != n {
        return Err(Error::DimensionMismatch(format!(
            "intertwiner is {}x{}, representation has dimension {n}",
            m.rows(),
            m.cols()
        )));
    }
    m.inverse()?;
    let p = &cert.p_hat;
    let c0 = lift(cert.eval0.as_ref().ok_or_else(|| poles_error(p))?);
    let c1 = lift(cert.eval1.as_ref().ok_or(Error::Pole { order: 0 })?);
    let same = |a: &MatrixQq, x: &MatrixQq, y: &MatrixQq, b: &MatrixQq| -> Result<bool> {
        Ok(a.mul(x)? == y.mul(b)?)
    };
    let mut identities = vec![
        NamedCheck {
            name: "M c0 = p_hat M".into(),
            holds: same(m, &c0, p, m)?,
        },
        NamedCheck {
            name: "M p_hat = c0 M".into(),
            holds: same(m, p, &c0, m)?,
        },
        NamedCheck {
            name: "M c0 = c1 M".into(),
            holds: same(m, &c0, &c1, m)?,
        },
        NamedCheck {
            name: "M c1 = c0 M".into(),
            holds: same(m, &c1, &c0, m)?,
        },
    ];
    if let Ok(m1) = m.eval_at(&Rational::one()) {
        let m1 = lift(&m1);
        identities.push(NamedCheck {
            name: "M(1) c0 = c1 M(1)".into(),
            holds: same(&m1, &c0, &c1, &m1)?,
        });
        identities.push(NamedCheck {
            name: "M(1) c1 = c0 M(1)".into(),
            holds: same(&m1, &c1, &c0, &m1)?,
        });
    }
    let inverse_consistent = match m_inv {
        Some(inv) => Some(m.mul(inv)?.is_identity()),
        None => None,
    };
    Ok(IntertwinerReport {
        shape: shape.clone(),
        inverse_consistent,
        identities,
    })
}
