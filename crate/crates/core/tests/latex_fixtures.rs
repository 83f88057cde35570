use std::fs;
use std::path::PathBuf;

use cactus_sieve::exactalg::{balanced_signed, Field, Matrix};
use cactus_sieve::interp::{WorkedExample, FIXTURE_NAMES};
use cactus_sieve::latex::{entry_latex, matrix_latex, parse_array, parse_entry, QMonomial};
use cactus_sieve::{MatrixQq, RationalFunction};
use num_traits::Zero;

fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn latex_matrix(src: &str) -> MatrixQq {
    let rows: Vec<Vec<RationalFunction>> = parse_array(src)
        .unwrap()
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|e| e.map_or_else(RationalFunction::zero, |m| m.to_ratfunc()))
                .collect()
        })
        .collect();
    Matrix::from_rows(rows).unwrap()
}

#[test]
fn text_fixtures_agree_with_latex_sources() {
    let dir = fixture_dir();
    for name in FIXTURE_NAMES {
        let tex = fs::read_to_string(dir.join("latex").join(format!("{name}.tex"))).unwrap();
        let txt: MatrixQq = fs::read_to_string(dir.join(format!("{name}.txt")))
            .unwrap()
            .parse()
            .unwrap();
        assert_eq!(latex_matrix(&tex), txt, "{name}");
    }
}

#[test]
fn emitted_latex_parses_back() {
    let example = WorkedExample::from_dir(&fixture_dir()).unwrap();
    let all = [
        &example.rotation,
        &example.rotation_inverse,
        &example.promotion,
        &example.promotion_inverse,
        &example.interpolating,
        &example.interpolating_inverse,
        &example.intertwiner,
        &example.intertwiner_inverse,
    ];
    for (name, m) in FIXTURE_NAMES.iter().zip(all) {
        assert_eq!(&latex_matrix(&matrix_latex(m)), m, "{name}");
    }
}

#[test]
fn embedded_fixtures_match_files() {
    let embedded = WorkedExample::embedded().unwrap();
    let from_dir = WorkedExample::from_dir(&fixture_dir()).unwrap();
    assert_eq!(
        embedded.interpolating_inverse,
        from_dir.interpolating_inverse
    );
    assert_eq!(embedded.intertwiner, from_dir.intertwiner);
}

#[test]
fn quantum_monomials_round_trip() {
    let qi = balanced_signed::<cactus_sieve::Rational>;
    let samples = [
        qi(4) / (qi(3) * qi(3)),
        -(qi(3) * qi(3)) / (qi(2) * qi(2) * qi(2) * qi(2)),
        RationalFunction::q_power(-2) * qi(5) / qi(2),
        qi(6) / qi(3),
        RationalFunction::from_i64(-7) / qi(12),
    ];
    for x in samples {
        let m = QMonomial::from_ratfunc(&x).expect("monomial in quantum integers");
        assert_eq!(m.to_ratfunc(), x);
        let parsed = parse_entry(&m.to_latex()).unwrap().unwrap();
        assert_eq!(parsed.to_ratfunc(), x, "{}", m.to_latex());
        assert_eq!(
            parse_entry(&entry_latex(&x)).unwrap().unwrap().to_ratfunc(),
            x
        );
    }
}

#[test]
fn parser_handles_bare_arguments_and_zero() {
    let x = parse_entry("\\frac1{[2]}").unwrap().unwrap().to_ratfunc();
    assert_eq!(x, RationalFunction::from_i64(1) / balanced_signed(2));
    assert!(parse_entry("0").unwrap().is_none());
    assert!(parse_entry("\\frac{1}{0}").is_err());
    assert!(parse_entry("[2] junk").is_err());
}
