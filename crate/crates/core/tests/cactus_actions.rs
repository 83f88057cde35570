use cactus_sieve::cactus::{
    act_on_tableau, check_presentation, CactusAction, CactusWord, Generator, Permutation,
    TableauAction,
};
use cactus_sieve::heckerep::{long_cycle_matrix, MatrixAction, Normalization, SeminormalRep};
use cactus_sieve::interp::promotion_matrix;
use cactus_sieve::tableau::{partitions_up_to, Shape};
use cactus_sieve::{MatrixQ, Rational};
use num_traits::One;

fn shapes(lo: usize, hi: usize) -> Vec<Shape> {
    partitions_up_to(hi)
        .into_iter()
        .filter(|s| s.size() >= lo)
        .collect()
}

/// The symmetric group as a cactus action through `s_{p,q} -> interval reversal`.
struct SymmetricAction(usize);

impl CactusAction for SymmetricAction {
    type Element = Permutation;

    fn rank(&self) -> usize {
        self.0
    }

    fn identity(&self) -> Permutation {
        Permutation::identity(self.0)
    }

    fn t(&self, i: usize) -> Permutation {
        Permutation::transposition(self.0, i)
    }

    fn compose(&self, a: &Permutation, b: &Permutation) -> Permutation {
        a.compose(b)
    }
}

#[test]
fn tableau_action_satisfies_presentation() {
    for s in shapes(2, 7) {
        let report = check_presentation(&TableauAction::new(&s));
        assert!(
            report.all_pass(),
            "{s}: {:?}",
            report.failures().collect::<Vec<_>>()
        );
    }
}

#[test]
fn symmetric_group_satisfies_presentation() {
    for r in 2..=8 {
        let report = check_presentation(&SymmetricAction(r));
        assert!(report.all_pass(), "rank {r}");
    }
}

#[test]
fn interval_generators_map_to_reversals() {
    for r in 2..=7 {
        for p in 1..r {
            for q in p + 1..=r {
                let w = CactusWord::single(r, Generator::S(p, q)).unwrap();
                assert_eq!(
                    w.image_in_symmetric(),
                    Permutation::interval_reversal(r, p, q)
                );
            }
        }
    }
}

#[test]
fn words_act_like_their_t_expansions() {
    let s: Shape = "3,2,1".parse().unwrap();
    let action = TableauAction::new(&s);
    for text in ["p5", "q4", "v2", "w3", "s[2,5]", "t3.p4.q2"] {
        let w = CactusWord::parse(text, 6).unwrap();
        let img = action.eval_word(&w).unwrap();
        for (x, t) in action.basis().tableaux().iter().enumerate() {
            let moved = act_on_tableau(&w, t).unwrap();
            assert_eq!(action.basis().index_of(&moved), Some(img[x]), "{text}");
        }
        assert_eq!(action.eval_word(&w.to_t_word()).unwrap(), img);
    }
}

#[test]
fn rank_mismatch_is_an_error() {
    let t = cactus_sieve::tableau::StandardTableau::from_rows(vec![vec![1, 2], vec![3]]).unwrap();
    let w = CactusWord::parse("t1", 4).unwrap();
    assert!(act_on_tableau(&w, &t).is_err());
    assert!(CactusWord::parse("t4", 4).is_err());
    assert!(CactusWord::parse("s[3,2]", 4).is_err());
}

#[test]
fn seminormal_matrices_at_one_satisfy_presentation() {
    for s in shapes(2, 5) {
        let rep = SeminormalRep::new(&s, Normalization::Displayed);
        let gens: Vec<MatrixQ> = rep
            .t_all()
            .iter()
            .map(|m| m.eval_at(&Rational::one()).unwrap())
            .collect();
        let action = MatrixAction::new(s.size(), gens).unwrap();
        assert!(check_presentation(&action).all_pass(), "{s}");
    }
}

#[test]
fn long_cycle_matrix_is_periodic_and_promotion_differs() {
    for s in ["2,2", "3,2", "2,2,1", "3,3"] {
        let s: Shape = s.parse().unwrap();
        let c1 = long_cycle_matrix(&s, Normalization::Example).unwrap();
        assert!(c1.pow(s.size() as u32).unwrap().is_identity(), "{s}");
        assert!(promotion_matrix(&s).is_square());
    }
}
