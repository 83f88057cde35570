use cactus_sieve::cactus::Status;
use cactus_sieve::heckerep::{relation_suite, Normalization, SeminormalRep, SuiteOptions};
use cactus_sieve::tableau::{partitions, partitions_up_to, Shape};
use cactus_sieve::{MatrixQq, RationalFunction};

fn failures(rep: &SeminormalRep, opts: SuiteOptions) -> Vec<String> {
    relation_suite(rep, opts)
        .checks
        .into_iter()
        .filter(|c| c.status == Status::Fail)
        .map(|c| format!("{} [{}]", c.relation, c.instance))
        .collect()
}

#[test]
fn every_normalization_passes_up_to_five() {
    for norm in Normalization::ALL {
        for s in partitions_up_to(5).into_iter().filter(|s| s.size() >= 2) {
            let bad = failures(&SeminormalRep::new(&s, norm), SuiteOptions::ALL);
            assert!(bad.is_empty(), "{norm} {s}: {bad:?}");
        }
    }
}

#[test]
fn generators_at_size_six() {
    let opts = SuiteOptions {
        hecke: true,
        cactus_generators: true,
        cactus_presentation: false,
    };
    for norm in Normalization::ALL {
        for s in partitions(6) {
            let bad = failures(&SeminormalRep::new(&s, norm), opts);
            assert!(bad.is_empty(), "{norm} {s}: {bad:?}");
        }
    }
}

#[test]
fn fixed_vector_signs() {
    assert_eq!(Normalization::Example.fixed_sign(1), -1);
    assert_eq!(Normalization::Example.fixed_sign(-1), 1);
    assert_eq!(Normalization::Prose.fixed_sign(1), -1);
    assert_eq!(Normalization::Displayed.fixed_sign(1), 1);
    assert_eq!(Normalization::Displayed.fixed_sign(-1), -1);
}

#[test]
fn only_displayed_specializes_to_young_matrices_exactly() {
    for s in ["2,1", "3,2", "2,2,1", "3,1,1"] {
        let s: Shape = s.parse().unwrap();
        let anchors: Vec<_> = Normalization::ALL
            .iter()
            .map(|&n| {
                relation_suite(&SeminormalRep::new(&s, n), SuiteOptions::ALL)
                    .q1_anchor
                    .unwrap()
            })
            .collect();
        assert_eq!(
            (anchors[0].sign, anchors[0].exact),
            (Some(-1), false),
            "{s}"
        );
        assert_eq!(
            (anchors[1].sign, anchors[1].exact),
            (Some(-1), false),
            "{s}"
        );
        assert_eq!((anchors[2].sign, anchors[2].exact), (Some(1), true), "{s}");
    }
}

#[test]
fn sigma_is_u_plus_q() {
    let s: Shape = "3,2".parse().unwrap();
    let rep = SeminormalRep::new(&s, Normalization::Example);
    let qid = MatrixQq::identity(rep.dim()).scale(&RationalFunction::q());
    for i in 1..s.size() {
        assert_eq!(rep.sigma(i), &rep.u(i).add(&qid).unwrap());
        assert!(rep.t_q(i).mul(rep.t_q(i)).unwrap().is_identity());
    }
}

#[test]
fn dimensions_follow_hook_formula() {
    for s in partitions_up_to(7) {
        let rep = SeminormalRep::new(&s, Normalization::Example);
        assert_eq!(rep.dim() as u128, s.hook_count());
        assert_eq!(rep.t_all().len(), s.size() - 1);
    }
}
