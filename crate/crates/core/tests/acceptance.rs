use std::io::Write;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use cactus_sieve::cactus::{verify_lemma_cyclic, verify_promotion_word, verify_rect_order, Status};
use cactus_sieve::csp::{csp_check, PolynomialKind};
use cactus_sieve::exactalg::{balanced_signed, cyclotomic, IntPoly, Laurent, RatFunc};
use cactus_sieve::heckerep::{relation_suite, Normalization, SeminormalRep, SuiteOptions};
use cactus_sieve::interp::{
    hatted_generators, interpolating_matrix, match_worked_example, InterpolationCertificate,
};
use cactus_sieve::tableau::{partitions_up_to, Shape};
use cactus_sieve::{LaurentPoly, Rational, RationalFunction};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const RECTANGLES: [&str; 5] = ["2,2", "2,2,2", "3,3", "2,2,2,2", "4,4"];
const SEED: u64 = 0x5eed_cac7;
const SAMPLES: usize = 1000;

/// Writes past libtest's output capture so the verdict shows in plain `cargo test`.
fn verdict(n: u32, pass: bool, detail: &str) {
    let status = if pass { "PASS" } else { "FAIL" };
    let mut out = std::io::stdout().lock();
    writeln!(out, "acceptance criterion {n}: {status} ({detail})").unwrap();
}

fn shape(s: &str) -> Shape {
    s.parse().unwrap()
}

fn sizes(lo: usize, hi: usize) -> Vec<Shape> {
    partitions_up_to(hi)
        .into_iter()
        .filter(|s| s.size() >= lo)
        .collect()
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

struct RectangleRun {
    certs: Vec<InterpolationCertificate>,
    elapsed: Duration,
}

fn rectangle_certificates() -> &'static RectangleRun {
    static RUN: OnceLock<RectangleRun> = OnceLock::new();
    RUN.get_or_init(|| {
        let start = Instant::now();
        let certs = RECTANGLES
            .iter()
            .map(|s| interpolating_matrix(&shape(s)).unwrap())
            .collect();
        RectangleRun {
            certs,
            elapsed: start.elapsed(),
        }
    })
}

#[test]
fn criterion_1_worked_example() {
    let start = Instant::now();
    let report = match_worked_example().unwrap();
    let elapsed = start.elapsed();
    let pass = report.all_match && elapsed < Duration::from_secs(1);
    let detail = if report.all_match {
        format!(
            "six matrices reproduced under {} in {}",
            report.permutation,
            secs(elapsed)
        )
    } else {
        let diff = report.diff().replace('\n', "; ");
        let n = report.mismatch_count();
        let noun = if n == 1 {
            "entry differs"
        } else {
            "entries differ"
        };
        format!(
            "{n} {noun} in {}: {}",
            secs(elapsed),
            diff.trim_end_matches("; ")
        )
    };
    verdict(1, pass, &detail);
    assert!(pass, "{detail}");
}

#[test]
fn criterion_2_interpolation_endpoints() {
    let run = rectangle_certificates();
    let mut bad = Vec::new();
    for c in &run.certs {
        if !(c.eval0_is_promotion && c.eval1_is_long_cycle && c.power_is_identity) {
            bad.push(format!(
                "{}: eval0 sign {:?}, eval1 long cycle {}, p_hat^r = I {}",
                c.shape, c.promotion_sign, c.eval1_is_long_cycle, c.power_is_identity
            ));
        }
    }
    let pass = bad.is_empty() && run.elapsed < Duration::from_secs(120);
    let detail = if bad.is_empty() {
        format!("five rectangles in {}", secs(run.elapsed))
    } else {
        format!("{} in {}", bad.join("; "), secs(run.elapsed))
    };
    verdict(2, pass, &detail);
    assert!(pass, "{detail}");
}

#[test]
fn criterion_3_regularity() {
    let mut bad = Vec::new();
    let mut with_pair = 0;
    for s in sizes(2, 6) {
        if let Err(e) = hatted_generators(&s, Normalization::Example) {
            bad.push(format!("{s}: {e}"));
        }
        let rep = SeminormalRep::new(&s, Normalization::Example);
        let has_pair = rep
            .basis()
            .tableaux()
            .iter()
            .any(|t| (1..s.size()).any(|i| t.swapped(i).unwrap().is_some()));
        if has_pair {
            with_pair += 1;
            let simple_pole = rep
                .t_all()
                .iter()
                .any(|t| t.min_order_at_zero() == Some(-1));
            if !simple_pole {
                bad.push(format!("{s}: no unhatted t_i has a simple pole"));
            }
        }
    }
    let pass = bad.is_empty();
    let detail = if pass {
        format!("all shapes of size 2..6 regular; simple pole found on {with_pair} shapes with a 2-element orbit")
    } else {
        bad.join("; ")
    };
    verdict(3, pass, &detail);
    assert!(pass, "{detail}");
}

#[test]
fn criterion_4_relation_suites() {
    let start = Instant::now();
    let mut checks = 0;
    let mut bad = Vec::new();
    let hecke_only = SuiteOptions {
        hecke: true,
        cactus_generators: false,
        cactus_presentation: false,
    };
    for s in sizes(2, 6) {
        let opts = if s.size() <= 5 {
            SuiteOptions::ALL
        } else {
            hecke_only
        };
        let report = relation_suite(&SeminormalRep::new(&s, Normalization::Example), opts);
        checks += report.checks.len();
        bad.extend(
            report
                .checks
                .iter()
                .filter(|c| c.status == Status::Fail)
                .map(|c| format!("{s}: {} [{}]", c.relation, c.instance)),
        );
    }
    let elapsed = start.elapsed();
    let pass = bad.is_empty() && elapsed < Duration::from_secs(300);
    let detail = if bad.is_empty() {
        format!("{checks} exact checks in {}", secs(elapsed))
    } else {
        format!("{} of {checks} checks fail: {}", bad.len(), bad.join("; "))
    };
    verdict(4, pass, &detail);
    assert!(pass, "{detail}");
}

#[test]
fn criterion_5_cactus_combinatorics() {
    let mut bad = Vec::new();
    let mut counts = [0usize; 3];
    for s in sizes(2, 7) {
        let r = verify_promotion_word(&s).unwrap();
        counts[0] += r.tableaux;
        if !r.holds() {
            bad.push(format!(
                "{s}: promotion word differs on {} tableaux",
                r.mismatches
            ));
        }
    }
    for s in sizes(2, 6) {
        let r = verify_lemma_cyclic(&s).unwrap();
        counts[1] += 1;
        if !r.holds {
            bad.push(format!("{s}: p^r differs from w q"));
        }
    }
    for s in sizes(2, 8).into_iter().filter(Shape::is_rectangular) {
        let r = verify_rect_order(&s).unwrap();
        counts[2] += 1;
        if !r.holds() {
            bad.push(format!("{s}: {r:?}"));
        }
    }
    let pass = bad.is_empty();
    let detail = if pass {
        format!(
            "promotion word on {} tableaux, cyclic lemma on {} shapes, {} rectangles",
            counts[0], counts[1], counts[2]
        )
    } else {
        bad.join("; ")
    };
    verdict(5, pass, &detail);
    assert!(pass, "{detail}");
}

#[test]
fn criterion_6_csp_verdicts() {
    let start = Instant::now();
    let mut bad = Vec::new();
    let trace = csp_check(&shape("2,2"), PolynomialKind::QHook).unwrap();
    if trace.polynomial != IntPoly::from_i64(&[1, 0, 1]) || trace.fix_counts != [2, 0, 2, 0] {
        bad.push(format!(
            "(2,2) trace: P = {}, fix {:?}",
            trace.polynomial, trace.fix_counts
        ));
    }
    for s in RECTANGLES {
        let v = csp_check(&shape(s), PolynomialKind::QHook).unwrap();
        if !v.holds {
            bad.push(format!("{s}: fix {:?}", v.fix_counts));
        }
    }
    let elapsed = start.elapsed();
    let pass = bad.is_empty() && elapsed < Duration::from_secs(30);
    let detail = if bad.is_empty() {
        format!(
            "q-hook sieves promotion on five rectangles in {}",
            secs(elapsed)
        )
    } else {
        bad.join("; ")
    };
    verdict(6, pass, &detail);
    assert!(pass, "{detail}");
}

#[test]
fn criterion_7_conjugacy_corollary() {
    let run = rectangle_certificates();
    let bad: Vec<String> = run
        .certs
        .iter()
        .filter(|c| c.charpolys_agree != Some(true))
        .map(|c| format!("{}: {:?}", c.shape, c.charpolys_agree))
        .collect();
    let pass = bad.is_empty();
    let detail = if pass {
        "charpoly(eval0) = charpoly(eval1) on five rectangles".to_string()
    } else {
        bad.join("; ")
    };
    verdict(7, pass, &detail);
    assert!(pass, "{detail}");
}

fn random_laurent(rng: &mut ChaCha8Rng, max_terms: usize) -> LaurentPoly {
    let terms = rng.gen_range(1..=max_terms);
    Laurent::from_terms((0..terms).map(|_| {
        let c = Rational::new(
            BigInt::from(rng.gen_range(-9i64..=9)),
            BigInt::from(rng.gen_range(1i64..=4)),
        );
        (rng.gen_range(-4i64..=4), c)
    }))
}

fn random_nonzero_laurent(rng: &mut ChaCha8Rng, max_terms: usize) -> LaurentPoly {
    loop {
        let l = random_laurent(rng, max_terms);
        if !l.is_zero() {
            return l;
        }
    }
}

fn random_nonzero(rng: &mut ChaCha8Rng) -> RationalFunction {
    let num = random_nonzero_laurent(rng, 3);
    let den = random_nonzero_laurent(rng, 3);
    RatFunc::from_parts(&num, &den).unwrap()
}

fn canonical_form_failures(rng: &mut ChaCha8Rng) -> usize {
    let mut failures = 0;
    for _ in 0..SAMPLES {
        let num = random_laurent(rng, 4);
        let den = random_nonzero_laurent(rng, 4);
        let h = random_nonzero_laurent(rng, 3);
        let a = RatFunc::from_parts(&num, &den).unwrap();
        let b = RatFunc::from_parts(&num.mul(&h), &den.mul(&h)).unwrap();
        let c = RatFunc::from_parts(&num.neg(), &den.neg()).unwrap();
        let round = a.clone() * RatFunc::from_laurent(&h) / RatFunc::from_laurent(&h);
        if a != b || a != c || a != round {
            failures += 1;
        }
    }
    failures
}

fn quantum_identity_failures(rng: &mut ChaCha8Rng) -> usize {
    let qi = |n: i64| balanced_signed::<Rational>(n);
    let mut failures = (0..=12)
        .filter(|&a| qi(a) * qi(a) - qi(a + 1) * qi(a - 1) != RationalFunction::one())
        .count();
    for _ in 0..SAMPLES {
        let a = rng.gen_range(0i64..=12);
        let x = Rational::new(
            BigInt::from(rng.gen_range(1i64..=20)),
            BigInt::from(rng.gen_range(1i64..=20)),
        );
        let at = |n: i64| qi(n).eval(&x).unwrap();
        if at(a) * at(a) - at(a + 1) * at(a - 1) != Rational::one() {
            failures += 1;
        }
    }
    failures
}

fn cyclotomic_failures(rng: &mut ChaCha8Rng) -> usize {
    let product = |r: usize| {
        (1..=r)
            .filter(|d| r.is_multiple_of(*d))
            .fold(IntPoly::one(), |acc, d| acc.mul(&cyclotomic(d)))
    };
    let target = |r: usize| IntPoly::monomial(BigInt::one(), r).sub(&IntPoly::one());
    let mut failures = (1..=24).filter(|&r| product(r) != target(r)).count();
    let products: Vec<IntPoly> = (0..=24)
        .map(|r| if r == 0 { IntPoly::zero() } else { product(r) })
        .collect();
    for _ in 0..SAMPLES {
        let r = rng.gen_range(1..=24usize);
        let x = BigInt::from(rng.gen_range(-50i64..=50));
        if products[r].eval(&x) != target(r).eval(&x) {
            failures += 1;
        }
    }
    failures
}

fn valuation_failures(rng: &mut ChaCha8Rng) -> usize {
    let mut failures = 0;
    for _ in 0..SAMPLES {
        let f = random_nonzero(rng);
        let g = random_nonzero(rng);
        let (vf, vg) = (f.order_at_zero().unwrap(), g.order_at_zero().unwrap());
        let product_ok = (f.clone() * g.clone()).order_at_zero().unwrap() == vf + vg;
        let quotient_ok = (f.clone() / g.clone()).order_at_zero().unwrap() == vf - vg;
        let sum = f.clone() + g.clone();
        let sum_ok = sum.is_zero()
            || match sum.order_at_zero().unwrap() {
                v if vf != vg => v == vf.min(vg),
                v => v >= vf,
            };
        let shift_ok = (f.clone() * RatFunc::q_power(3)).order_at_zero().unwrap() == vf + 3;
        if !(product_ok && quotient_ok && sum_ok && shift_ok) {
            failures += 1;
        }
    }
    failures
}

#[test]
fn criterion_8_kernel_properties() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let results = [
        ("canonical form", canonical_form_failures(&mut rng)),
        ("quantum identity", quantum_identity_failures(&mut rng)),
        ("cyclotomic product", cyclotomic_failures(&mut rng)),
        ("valuation laws", valuation_failures(&mut rng)),
    ];
    let pass = results.iter().all(|&(_, f)| f == 0);
    let detail = results
        .iter()
        .map(|(name, f)| format!("{name}: {f} failures"))
        .collect::<Vec<_>>()
        .join(", ");
    let detail = format!("{SAMPLES} random samples per suite, seed {SEED:#x}; {detail}");
    verdict(8, pass, &detail);
    assert!(pass, "{detail}");
}
