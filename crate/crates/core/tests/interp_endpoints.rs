//! Endpoint behaviour of the conjugated promotion matrix.
//!
//! The sign tables below record what each normalization actually produces at
//! `q = 0`; the acceptance suite holds the stricter requirement.

use cactus_sieve::heckerep::{long_cycle_matrix, Normalization};
use cactus_sieve::interp::{
    hatted_generators_with, interpolating_matrix, interpolating_matrix_with, match_worked_example,
    promotion_matrix, scan_orientations, verify_intertwiner, verify_intertwiner_pair, Orientation,
    WorkedExample,
};
use cactus_sieve::tableau::{partitions_up_to, Shape};
use cactus_sieve::MatrixQq;

const RECTANGLES: [&str; 5] = ["2,2", "2,2,2", "3,3", "2,2,2,2", "4,4"];

fn shape(s: &str) -> Shape {
    s.parse().unwrap()
}

#[test]
fn exactly_one_orientation_is_regular() {
    for norm in Normalization::ALL {
        for s in partitions_up_to(6).into_iter().filter(|s| s.size() >= 3) {
            let scan = scan_orientations(&s, norm);
            let single = s.num_rows() == 1 || s.parts()[0] == 1;
            if single {
                assert!(scan.direct_regular && scan.inverse_regular, "{norm} {s}");
                assert!(!scan.unhatted_has_pole, "{norm} {s}");
                continue;
            }
            assert!(scan.unhatted_has_pole, "{norm} {s}");
            assert_eq!(scan.unhatted_min_order, Some(-1), "{norm} {s}");
            let regular = Orientation::regular_for(norm);
            assert_eq!(
                scan.direct_regular,
                regular == Orientation::Direct,
                "{norm} {s}"
            );
            assert_eq!(
                scan.inverse_regular,
                regular == Orientation::Inverse,
                "{norm} {s}"
            );
        }
    }
}

#[test]
fn hatted_generators_at_zero_have_involution_support() {
    for s in ["3,2", "2,2,1", "3,3", "3,2,1"] {
        let cert = interpolating_matrix(&shape(s)).unwrap();
        assert!(cert.regular_at_zero);
        assert!(
            cert.generators
                .iter()
                .all(|g| g.regular && g.support_matches),
            "{s}"
        );
    }
}

#[test]
fn long_cycle_and_periodicity_on_rectangles() {
    for norm in Normalization::ALL {
        for s in RECTANGLES {
            let c = interpolating_matrix_with(&shape(s), norm).unwrap();
            assert!(c.eval1_is_long_cycle, "{norm} {s}");
            assert!(c.power_is_identity, "{norm} {s}");
            assert_eq!(c.charpolys_agree, Some(true), "{norm} {s}");
        }
    }
}

#[test]
fn promotion_sign_tables() {
    let expected = [
        (Normalization::Example, [1, -1, 1, 1, 1]),
        (Normalization::Prose, [-1, -1, 1, -1, -1]),
        (Normalization::Displayed, [-1, 1, -1, -1, -1]),
    ];
    for (norm, signs) in expected {
        for (s, sign) in RECTANGLES.iter().zip(signs) {
            let c = interpolating_matrix_with(&shape(s), norm).unwrap();
            assert_eq!(c.promotion_sign, Some(sign), "{norm} {s}");
        }
    }
}

#[test]
fn orders_on_rectangles() {
    let orders: Vec<Option<usize>> = RECTANGLES
        .iter()
        .map(|s| interpolating_matrix(&shape(s)).unwrap().order)
        .collect();
    assert_eq!(orders, [Some(2), Some(6), Some(6), Some(8), Some(8)]);
}

#[test]
fn non_rectangles_are_not_periodic() {
    for s in ["3,2", "2,1,1"] {
        let c = interpolating_matrix(&shape(s)).unwrap();
        assert!(!c.power_is_identity, "{s}");
        assert_eq!(c.order, None, "{s}");
        assert_eq!(c.charpolys_agree, Some(false), "{s}");
        assert!(c.eval1_is_long_cycle, "{s}");
    }
}

#[test]
fn single_rows_pick_up_the_fixed_sign() {
    for (r, sign) in [(2, -1), (3, 1), (4, -1)] {
        let c = interpolating_matrix(&Shape::new(vec![r]).unwrap()).unwrap();
        assert_eq!(c.promotion_sign, Some(sign), "row of {r}");
    }
}

#[test]
fn eval_points_agree_with_direct_constructions() {
    let s = shape("3,3");
    let c = interpolating_matrix(&s).unwrap();
    assert_eq!(
        c.eval1.as_ref().unwrap(),
        &long_cycle_matrix(&s, Normalization::Example).unwrap()
    );
    assert_eq!(c.eval0.as_ref().unwrap(), &promotion_matrix(&s));
    let hats = hatted_generators_with(&s, Normalization::Example, Orientation::Inverse);
    let product = hats
        .iter()
        .fold(MatrixQq::identity(5), |acc, h| h.mul(&acc).unwrap());
    assert_eq!(product, c.p_hat);
}

#[test]
fn worked_example_differs_in_one_printed_entry() {
    let report = match_worked_example().unwrap();
    assert_eq!(report.mismatch_count(), 1);
    assert!(report.permutation.is_identity());
    let bad: Vec<_> = report.comparisons.iter().filter(|c| !c.matches).collect();
    assert_eq!(bad.len(), 1);
    assert_eq!(bad[0].name, "interpolating_inverse");
    let d = &bad[0].mismatches[0];
    assert_eq!((d.row, d.col), (1, 3));
    assert_eq!(d.expected, "(1*q^1+1*q^3)/(1*q^0+1*q^2+1*q^4)");
    assert_eq!(d.computed, "(1*q^0+1*q^4)/(1*q^0+1*q^2+1*q^4)");
}

#[test]
fn reference_pairs_and_endpoints() {
    let report = match_worked_example().unwrap();
    let checks: Vec<(&str, bool)> = report
        .reference_checks
        .iter()
        .map(|c| (c.name.as_str(), c.holds))
        .collect();
    assert_eq!(
        checks,
        [
            ("rotation pair multiplies to the identity", true),
            ("promotion pair multiplies to the identity", true),
            ("interpolating pair multiplies to the identity", false),
            ("intertwiner pair multiplies to the identity", true),
            ("interpolating at q = 0 equals promotion", true),
            ("interpolating at q = 1 equals rotation", true),
        ]
    );
}

#[test]
fn intertwiner_identities() {
    let example = WorkedExample::embedded().unwrap();
    let report = verify_intertwiner_pair(
        &example.intertwiner,
        Some(&example.intertwiner_inverse),
        &WorkedExample::shape(),
    )
    .unwrap();
    assert_eq!(report.inverse_consistent, Some(true));
    let holding: Vec<&str> = report.holding().collect();
    assert_eq!(holding, ["M p_hat = c0 M", "M(1) c1 = c0 M(1)"]);
}

#[test]
fn intertwiner_rejects_bad_input() {
    let s = shape("3,3");
    assert!(verify_intertwiner(&MatrixQq::identity(4), &s).is_err());
    assert!(verify_intertwiner(&MatrixQq::zeros(5, 5), &s).is_err());
    let id = verify_intertwiner(&MatrixQq::identity(5), &s).unwrap();
    assert_eq!(id.inverse_consistent, None);
}
