//! Cactus group words, their images in the symmetric group, and the action on
//! standard tableaux.
//!
//! Words act right to left: in `t3.t2.t1` the letter `t1` acts first.
//!
//! Index conventions: `t_i` maps to the transposition `(i, i+1)`; `q_i`
//! reverses the interval `[1, i+1]`, so `q_{r-1}` is the longest element; `p_i`
//! and `q_i` are indexed by `1 <= i <= r - 1`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tableau::{Basis, Shape, StandardTableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    /// `s_{p,q}`, reversal of the interval `[p, q]`.
    S(usize, usize),
    T(usize),
    P(usize),
    Q(usize),
    V(usize),
    W(usize),
}

impl Generator {
    fn check(&self, rank: usize) -> Result<()> {
        let ok = match *self {
            Generator::S(p, q) => 1 <= p && p < q && q <= rank,
            Generator::T(i)
            | Generator::P(i)
            | Generator::Q(i)
            | Generator::V(i)
            | Generator::W(i) => 1 <= i && i < rank,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidWord(format!(
                "{self} out of range for rank {rank}"
            )))
        }
    }

    /// Expansion into `t` indices, leftmost letter acting last.
    fn t_letters(&self, rank: usize, out: &mut Vec<usize>) {
        match *self {
            Generator::T(i) => out.push(i),
            Generator::P(i) => out.extend((1..=i).rev()),
            Generator::Q(i) => {
                for j in 1..=i {
                    Generator::P(j).t_letters(rank, out);
                }
            }
            Generator::V(i) => out.extend(i..rank),
            Generator::W(i) => {
                for j in (rank - i..rank).rev() {
                    Generator::V(j).t_letters(rank, out);
                }
            }
            Generator::S(1, q) => Generator::Q(q - 1).t_letters(rank, out),
            Generator::S(p, q) => {
                // conjugate the reversal of [1, q-p+1] by the reversal of [1, q]
                Generator::Q(q - 1).t_letters(rank, out);
                Generator::Q(q - p).t_letters(rank, out);
                Generator::Q(q - 1).t_letters(rank, out);
            }
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::S(p, q) => write!(f, "s[{p},{q}]"),
            Generator::T(i) => write!(f, "t{i}"),
            Generator::P(i) => write!(f, "p{i}"),
            Generator::Q(i) => write!(f, "q{i}"),
            Generator::V(i) => write!(f, "v{i}"),
            Generator::W(i) => write!(f, "w{i}"),
        }
    }
}

/// A word in cactus generators of a fixed rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CactusWord {
    rank: usize,
    letters: Vec<Generator>,
}

impl CactusWord {
    pub fn new(rank: usize, letters: Vec<Generator>) -> Result<Self> {
        for g in &letters {
            g.check(rank)?;
        }
        Ok(CactusWord { rank, letters })
    }

    pub fn identity(rank: usize) -> Self {
        CactusWord {
            rank,
            letters: Vec::new(),
        }
    }

    pub fn single(rank: usize, g: Generator) -> Result<Self> {
        Self::new(rank, vec![g])
    }

    /// Parses letters such as `t3`, `s[2,4]`, `p5` separated by `.`; the empty
    /// string and `e` denote the identity.
    pub fn parse(s: &str, rank: usize) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "e" {
            return Ok(Self::identity(rank));
        }
        let letters = s
            .split('.')
            .map(|tok| parse_letter(tok.trim()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(rank, letters)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    /// Concatenation `self * other` (`other` acts first).
    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.rank != other.rank {
            return Err(Error::InvalidWord(format!(
                "ranks {} and {} differ",
                self.rank, other.rank
            )));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(CactusWord {
            rank: self.rank,
            letters,
        })
    }

    pub fn pow(&self, n: usize) -> Self {
        CactusWord {
            rank: self.rank,
            letters: self.letters.repeat(n),
        }
    }

    /// Indices of the equivalent `t`-word, by syntactic expansion.
    pub fn t_indices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for g in &self.letters {
            g.t_letters(self.rank, &mut out);
        }
        out
    }

    pub fn to_t_word(&self) -> Self {
        CactusWord {
            rank: self.rank,
            letters: self.t_indices().into_iter().map(Generator::T).collect(),
        }
    }

    /// Image under the homomorphism to the symmetric group.
    pub fn image_in_symmetric(&self) -> Permutation {
        let mut acc = Permutation::identity(self.rank);
        for g in &self.letters {
            let img = match *g {
                Generator::S(p, q) => Permutation::interval_reversal(self.rank, p, q),
                Generator::T(i) => Permutation::transposition(self.rank, i),
                other => {
                    let mut letters = Vec::new();
                    other.t_letters(self.rank, &mut letters);
                    letters
                        .iter()
                        .fold(Permutation::identity(self.rank), |a, &i| {
                            a.compose(&Permutation::transposition(self.rank, i))
                        })
                }
            };
            acc = acc.compose(&img);
        }
        acc
    }
}

fn parse_letter(tok: &str) -> Result<Generator> {
    let bad = || Error::InvalidWord(format!("cannot parse letter `{tok}`"));
    if let Some(rest) = tok.strip_prefix("s[") {
        let inner = rest.strip_suffix(']').ok_or_else(bad)?;
        let (p, q) = inner.split_once(',').ok_or_else(bad)?;
        let p = p.trim().parse().map_err(|_| bad())?;
        let q = q.trim().parse().map_err(|_| bad())?;
        return Ok(Generator::S(p, q));
    }
    let mut chars = tok.chars();
    let head = chars.next().ok_or_else(bad)?;
    let i: usize = chars.as_str().parse().map_err(|_| bad())?;
    Ok(match head {
        't' => Generator::T(i),
        'p' => Generator::P(i),
        'q' => Generator::Q(i),
        'v' => Generator::V(i),
        'w' => Generator::W(i),
        _ => return Err(bad()),
    })
}

impl fmt::Display for CactusWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        let s: Vec<String> = self.letters.iter().map(ToString::to_string).collect();
        write!(f, "{}", s.join("."))
    }
}

/// A permutation of `1..=n`, stored as its image sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || std::mem::replace(&mut seen[x - 1], true) {
                return Err(Error::InvalidWord(format!(
                    "{images:?} is not a permutation"
                )));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// `(i, i+1)`.
    pub fn transposition(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        p
    }

    /// `k -> p + q - k` on `[p, q]`, fixed elsewhere.
    pub fn interval_reversal(n: usize, p: usize, q: usize) -> Self {
        Permutation {
            images: (1..=n)
                .map(|k| if (p..=q).contains(&k) { p + q - k } else { k })
                .collect(),
        }
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1]
    }

    /// `self ∘ other` (`other` first).
    pub fn compose(&self, other: &Self) -> Self {
        Permutation {
            images: other.images.iter().map(|&k| self.images[k - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (k, &x) in self.images.iter().enumerate() {
            images[x - 1] = k + 1;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &x)| x == k + 1)
    }

    /// Cycle lengths in decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut k = s;
            while !seen[k] {
                seen[k] = true;
                k = self.images[k] - 1;
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    /// Multiplicative order.
    pub fn order(&self) -> usize {
        self.cycle_type().into_iter().fold(1, lcm)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.images.iter().map(ToString::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// An action of the cactus group given by the images of the `t_i`.
pub trait CactusAction {
    type Element: Clone + PartialEq;

    fn rank(&self) -> usize;
    fn identity(&self) -> Self::Element;
    /// The image of `t_i`, `1 <= i < rank`.
    fn t(&self, i: usize) -> Self::Element;
    /// `a` after `b`.
    fn compose(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;

    fn eval_t_word(&self, indices: &[usize]) -> Self::Element {
        indices
            .iter()
            .fold(self.identity(), |acc, &i| self.compose(&acc, &self.t(i)))
    }

    fn eval_word(&self, w: &CactusWord) -> Result<Self::Element> {
        if w.rank() != self.rank() {
            return Err(Error::RankMismatch {
                word: w.rank(),
                tableau: self.rank(),
            });
        }
        Ok(self.eval_t_word(&w.t_indices()))
    }
}

/// The action on a basis of standard tableaux; elements are index maps.
#[derive(Clone, Debug)]
pub struct TableauAction {
    basis: Basis,
    gens: Vec<Vec<usize>>,
}

impl TableauAction {
    pub fn new(shape: &Shape) -> Self {
        let basis = Basis::new(shape);
        let gens = (1..shape.size())
            .map(|i| basis.permutation_of(|t| t.bender_knuth(i).expect("index in range")))
            .collect();
        TableauAction { basis, gens }
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    /// Index map of an arbitrary tableau operator.
    pub fn map_of(&self, f: impl Fn(&StandardTableau) -> StandardTableau) -> Vec<usize> {
        self.basis.permutation_of(f)
    }
}

impl CactusAction for TableauAction {
    type Element = Vec<usize>;

    fn rank(&self) -> usize {
        self.basis.shape().size()
    }

    fn identity(&self) -> Vec<usize> {
        (0..self.basis.len()).collect()
    }

    fn t(&self, i: usize) -> Vec<usize> {
        self.gens[i - 1].clone()
    }

    fn compose(&self, a: &Vec<usize>, b: &Vec<usize>) -> Vec<usize> {
        b.iter().map(|&x| a[x]).collect()
    }
}

/// Applies `w` to `t`, rightmost letter first.
pub fn act_on_tableau(w: &CactusWord, t: &StandardTableau) -> Result<StandardTableau> {
    if w.rank() != t.size() {
        return Err(Error::RankMismatch {
            word: w.rank(),
            tableau: t.size(),
        });
    }
    let mut cur = t.clone();
    for i in w.t_indices().into_iter().rev() {
        cur = cur.bender_knuth(i)?;
    }
    Ok(cur)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub instance: String,
    pub status: Status,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct PresentationReport {
    pub checks: Vec<RelationCheck>,
}

impl PresentationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

/// Images of `s_{p,q}` for all intervals, built from cached `p_i` and `q_i`.
pub fn interval_elements<A: CactusAction>(
    action: &A,
) -> std::collections::HashMap<(usize, usize), A::Element> {
    let r = action.rank();
    let mut p = Vec::with_capacity(r);
    let mut q: Vec<A::Element> = Vec::with_capacity(r);
    for i in 1..r {
        let pi = match p.last() {
            None => action.t(1),
            Some(prev) => action.compose(&action.t(i), prev),
        };
        let qi = match q.last() {
            None => pi.clone(),
            Some(prev) => action.compose(prev, &pi),
        };
        p.push(pi);
        q.push(qi);
    }
    let mut out = std::collections::HashMap::new();
    for a in 1..=r {
        for b in a + 1..=r {
            let outer = &q[b - 2];
            let elem = if a == 1 {
                outer.clone()
            } else {
                action.compose(outer, &action.compose(&q[b - a - 1], outer))
            };
            out.insert((a, b), elem);
        }
    }
    out
}

/// Checks every instance of the three defining relation families.
pub fn check_presentation<A: CactusAction>(action: &A) -> PresentationReport {
    let r = action.rank();
    let pairs: Vec<(usize, usize)> = (1..=r)
        .flat_map(|p| (p + 1..=r).map(move |q| (p, q)))
        .collect();
    let s = interval_elements(action);
    let id = action.identity();
    let mut report = PresentationReport::default();
    for &(p, q) in &pairs {
        let sq = action.compose(&s[&(p, q)], &s[&(p, q)]);
        report.checks.push(RelationCheck {
            relation: "involution".into(),
            instance: format!("s[{p},{q}]^2 = 1"),
            status: Status::from_bool(sq == id),
        });
    }
    for &(p, q) in &pairs {
        for &(k, l) in &pairs {
            if q < k {
                let lhs = action.compose(&s[&(p, q)], &s[&(k, l)]);
                let rhs = action.compose(&s[&(k, l)], &s[&(p, q)]);
                report.checks.push(RelationCheck {
                    relation: "disjoint".into(),
                    instance: format!("s[{p},{q}] s[{k},{l}] = s[{k},{l}] s[{p},{q}]"),
                    status: Status::from_bool(lhs == rhs),
                });
            } else if p <= k && l <= q && (k, l) != (p, q) {
                let (k2, l2) = (p + q - l, p + q - k);
                let lhs = action.compose(&s[&(p, q)], &s[&(k, l)]);
                let rhs = action.compose(&s[&(k2, l2)], &s[&(p, q)]);
                report.checks.push(RelationCheck {
                    relation: "nested".into(),
                    instance: format!("s[{p},{q}] s[{k},{l}] = s[{k2},{l2}] s[{p},{q}]"),
                    status: Status::from_bool(lhs == rhs),
                });
            }
        }
    }
    report
}

fn rank_at_least_two(shape: &Shape) -> Result<usize> {
    let r = shape.size();
    if r < 2 {
        return Err(Error::InvalidShape(format!("{shape} has size {r} < 2")));
    }
    Ok(r)
}

fn word(r: usize, g: Generator) -> CactusWord {
    CactusWord::single(r, g).expect("generator in range")
}

#[derive(Clone, Debug, Serialize)]
pub struct CyclicLemmaReport {
    pub shape: Shape,
    pub tableaux: usize,
    /// Order of promotion on this shape.
    pub promotion_order: usize,
    /// `p_{r-1}^r` and `w_{r-1} q_{r-1}` agree on every tableau.
    pub holds: bool,
    /// `p_{r-1}^r` is the identity.
    pub power_is_identity: bool,
}

/// Compares `p_{r-1}^r` with `w_{r-1} q_{r-1}` on every tableau of `shape`.
pub fn verify_lemma_cyclic(shape: &Shape) -> Result<CyclicLemmaReport> {
    let r = rank_at_least_two(shape)?;
    let action = TableauAction::new(shape);
    let p = action.eval_word(&word(r, Generator::P(r - 1)))?;
    let pr = (0..r).fold(action.identity(), |acc, _| action.compose(&acc, &p));
    let wq =
        action.eval_word(&word(r, Generator::W(r - 1)).concat(&word(r, Generator::Q(r - 1)))?)?;
    Ok(CyclicLemmaReport {
        shape: shape.clone(),
        tableaux: action.basis().len(),
        promotion_order: index_map_order(&p),
        holds: pr == wq,
        power_is_identity: pr == action.identity(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct PromotionWordReport {
    pub shape: Shape,
    pub tableaux: usize,
    /// Tableaux on which `t_{r-1} ... t_1` and jeu-de-taquin promotion differ.
    pub mismatches: usize,
}

impl PromotionWordReport {
    pub fn holds(&self) -> bool {
        self.mismatches == 0
    }
}

/// Compares jeu-de-taquin promotion with the word `p_{r-1}` tableau by tableau.
pub fn verify_promotion_word(shape: &Shape) -> Result<PromotionWordReport> {
    let r = rank_at_least_two(shape)?;
    let p = word(r, Generator::P(r - 1));
    let basis = Basis::new(shape);
    let mut mismatches = 0;
    for t in basis.tableaux() {
        if act_on_tableau(&p, t)? != t.jdt_promotion() {
            mismatches += 1;
        }
    }
    Ok(PromotionWordReport {
        shape: shape.clone(),
        tableaux: basis.len(),
        mismatches,
    })
}

fn index_map_order(m: &[usize]) -> usize {
    let images: Vec<usize> = m.iter().map(|&x| x + 1).collect();
    Permutation { images }.order()
}

#[derive(Clone, Debug, Serialize)]
pub struct RectOrderReport {
    pub shape: Shape,
    pub promotion_order: usize,
    pub power_is_identity: bool,
    /// Reverse-complement conjugates `q_{r-1}` to `w_{r-1}`.
    pub rc_conjugates_q_to_w: bool,
    /// Reverse-complement commutes with `q_{r-1}`.
    pub rc_commutes_with_q: bool,
}

impl RectOrderReport {
    pub fn holds(&self) -> bool {
        self.power_is_identity && self.rc_conjugates_q_to_w && self.rc_commutes_with_q
    }
}

/// Order of promotion and the reverse-complement facts on a rectangle.
pub fn verify_rect_order(shape: &Shape) -> Result<RectOrderReport> {
    if !shape.is_rectangular() {
        return Err(Error::NotRectangular(shape.to_string()));
    }
    let r = rank_at_least_two(shape)?;
    let action = TableauAction::new(shape);
    let p = action.eval_word(&word(r, Generator::P(r - 1)))?;
    let pr = (0..r).fold(action.identity(), |acc, _| action.compose(&acc, &p));
    let q = action.eval_word(&word(r, Generator::Q(r - 1)))?;
    let w = action.eval_word(&word(r, Generator::W(r - 1)))?;
    let rc = action.map_of(|t| t.reverse_complement().expect("rectangular"));
    let rc_q_rc = action.compose(&rc, &action.compose(&q, &rc));
    Ok(RectOrderReport {
        shape: shape.clone(),
        promotion_order: index_map_order(&p),
        power_is_identity: pr == action.identity(),
        rc_conjugates_q_to_w: rc_q_rc == w,
        rc_commutes_with_q: action.compose(&rc, &q) == action.compose(&q, &rc),
    })
}
