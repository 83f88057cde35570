//! Sweeps of the relation, certificate and sieving suites.

use cactus_sieve::cactus::{
    check_presentation, verify_lemma_cyclic, verify_promotion_word, verify_rect_order,
    CyclicLemmaReport, PromotionWordReport, RectOrderReport, RelationCheck, Status, TableauAction,
};
use cactus_sieve::csp::{
    compare_maj_hook, csp_check, CspVerdict, MajHookComparison, PolynomialKind,
};
use cactus_sieve::heckerep::{
    relation_suite, Normalization, QOneAnchor, SeminormalRep, SuiteOptions,
};
use cactus_sieve::interp::{
    hatted_generators, interpolating_matrix_with, scan_orientations, Orientation, OrientationScan,
};
use cactus_sieve::tableau::{partitions_up_to, Basis, Shape};
use rayon::prelude::*;
use serde::Serialize;

use crate::{Failure, Format, Outcome, VerifyKind, SCHEMA_VERSION};

/// Shapes of size `2..=max`, smaller sizes first.
pub fn sweep_shapes(max: usize) -> Vec<Shape> {
    partitions_up_to(max)
        .into_iter()
        .filter(|s| s.size() >= 2)
        .collect()
}

#[derive(Serialize)]
struct HeckeSummary {
    normalization: Normalization,
    presentation_checked: bool,
    checks: usize,
    failures: Vec<RelationCheck>,
    fixed_vector_signs: [i64; 2],
    q1_anchor: Option<QOneAnchor>,
}

#[derive(Serialize)]
struct CactusSummary {
    promotion_word: PromotionWordReport,
    cyclic_lemma: CyclicLemmaReport,
    rectangle: Option<RectOrderReport>,
    presentation_checks: usize,
    presentation_failures: Vec<RelationCheck>,
}

#[derive(Serialize)]
struct InterpSummary {
    orientation: Orientation,
    orientations: OrientationScan,
    hatted_regular: bool,
    regular_at_zero: bool,
    eval0_is_promotion: bool,
    promotion_sign: Option<i64>,
    eval1_is_long_cycle: bool,
    power_is_identity: bool,
    order: Option<usize>,
    charpolys_agree: Option<bool>,
    generator_support_matches: bool,
    generator_literal_matches: Vec<bool>,
}

#[derive(Serialize)]
struct CspSummary {
    q_hook: CspVerdict,
    maj: MajHookComparison,
}

#[derive(Serialize)]
struct ShapeReport {
    shape: Shape,
    rectangular: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    hecke: Option<HeckeSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cactus: Option<CactusSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    interp: Option<InterpSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    csp: Option<CspSummary>,
    /// Asserted claims that failed.
    failures: Vec<String>,
    /// Outcomes outside the asserted claims, such as non-rectangular periods.
    informational: Vec<String>,
}

#[derive(Serialize)]
struct VerifyReport {
    schema_version: u32,
    command: &'static str,
    kind: String,
    normalization: Normalization,
    ok: bool,
    failure_count: usize,
    shapes: Vec<ShapeReport>,
}

fn wants(kind: VerifyKind, part: VerifyKind) -> bool {
    kind == VerifyKind::All || kind == part
}

fn has_two_element_orbit(shape: &Shape) -> bool {
    let basis = Basis::new(shape);
    basis
        .tableaux()
        .iter()
        .any(|t| (1..shape.size()).any(|i| t.swapped(i).map(|s| s.is_some()).unwrap_or(false)))
}

#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub normalization: Normalization,
    pub presentation_max_size: usize,
}

fn hecke_part(shape: &Shape, settings: Settings, rep: &mut ShapeReport) {
    let norm = settings.normalization;
    let presentation = shape.size() <= settings.presentation_max_size;
    if !presentation {
        rep.informational.push(format!(
            "hecke: cactus presentation on matrices skipped above size {}",
            settings.presentation_max_size
        ));
    }
    let opts = SuiteOptions {
        cactus_presentation: presentation,
        ..SuiteOptions::ALL
    };
    let report = relation_suite(&SeminormalRep::new(shape, norm), opts);
    let failures: Vec<RelationCheck> = report
        .checks
        .iter()
        .filter(|c| c.status == Status::Fail)
        .cloned()
        .collect();
    for f in &failures {
        rep.failures
            .push(format!("hecke: {} fails at {}", f.relation, f.instance));
    }
    rep.hecke = Some(HeckeSummary {
        normalization: norm,
        presentation_checked: presentation,
        checks: report.checks.len(),
        failures,
        fixed_vector_signs: report.fixed_vector_signs,
        q1_anchor: report.q1_anchor,
    });
}

fn cactus_part(shape: &Shape, rep: &mut ShapeReport) -> Result<(), Failure> {
    let promotion_word = verify_promotion_word(shape)?;
    if !promotion_word.holds() {
        rep.failures.push(format!(
            "cactus: promotion differs from t_(r-1)...t_1 on {} tableaux",
            promotion_word.mismatches
        ));
    }
    let cyclic_lemma = verify_lemma_cyclic(shape)?;
    if !cyclic_lemma.holds {
        rep.failures
            .push("cactus: p^r differs from w_(r-1) q_(r-1)".into());
    }
    let rectangle = if shape.is_rectangular() {
        let r = verify_rect_order(shape)?;
        if !r.holds() {
            rep.failures
                .push("cactus: rectangle order or reverse-complement facts fail".into());
        }
        Some(r)
    } else {
        if !cyclic_lemma.power_is_identity {
            rep.informational.push(format!(
                "cactus: promotion has order {}, not dividing {}",
                cyclic_lemma.promotion_order,
                shape.size()
            ));
        }
        None
    };
    let presentation = check_presentation(&TableauAction::new(shape));
    let presentation_failures: Vec<RelationCheck> = presentation.failures().cloned().collect();
    for f in &presentation_failures {
        rep.failures
            .push(format!("cactus: {} fails at {}", f.relation, f.instance));
    }
    rep.cactus = Some(CactusSummary {
        promotion_word,
        cyclic_lemma,
        rectangle,
        presentation_checks: presentation.checks.len(),
        presentation_failures,
    });
    Ok(())
}

fn interp_part(shape: &Shape, norm: Normalization, rep: &mut ShapeReport) -> Result<(), Failure> {
    let orientations = scan_orientations(shape, norm);
    let hatted_regular = hatted_generators(shape, norm).is_ok();
    if !hatted_regular {
        rep.failures
            .push("interp: some t_hat_i has a pole at q = 0".into());
    }
    if has_two_element_orbit(shape) && orientations.unhatted_min_order != Some(-1) {
        rep.failures.push(format!(
            "interp: expected a simple pole in some unhatted t_i, minimum valuation is {:?}",
            orientations.unhatted_min_order
        ));
    }
    let cert = interpolating_matrix_with(shape, norm)?;
    let support = cert.generators.iter().all(|g| g.support_matches);
    if !support {
        rep.failures
            .push("interp: some t_hat_i(0) is not supported on the involution".into());
    }
    if !cert.eval1_is_long_cycle {
        rep.failures
            .push("interp: p_hat(1) differs from the long cycle matrix".into());
    }
    if !cert.generators.iter().all(|g| g.literal_matches) {
        rep.informational
            .push("interp: t_hat_i(0) equals the involution only up to signs".into());
    }
    if shape.is_rectangular() {
        if !cert.eval0_is_promotion {
            rep.failures.push(match cert.promotion_sign {
                Some(-1) => "interp: p_hat(0) is minus the promotion matrix".into(),
                _ => "interp: p_hat(0) is not the promotion matrix".into(),
            });
        }
        if !cert.power_is_identity {
            rep.failures.push(format!(
                "interp: p_hat^{} is not the identity",
                shape.size()
            ));
        }
        if cert.charpolys_agree != Some(true) {
            rep.failures.push(
                "interp: p_hat(0) and p_hat(1) have different characteristic polynomials".into(),
            );
        }
    } else if !cert.power_is_identity {
        rep.informational.push(match cert.order {
            Some(k) => format!("interp: p_hat has order {k}"),
            None => format!("interp: p_hat has no order up to {}", 2 * shape.size()),
        });
    }
    rep.interp = Some(InterpSummary {
        orientation: cert.orientation,
        orientations,
        hatted_regular,
        regular_at_zero: cert.regular_at_zero,
        eval0_is_promotion: cert.eval0_is_promotion,
        promotion_sign: cert.promotion_sign,
        eval1_is_long_cycle: cert.eval1_is_long_cycle,
        power_is_identity: cert.power_is_identity,
        order: cert.order,
        charpolys_agree: cert.charpolys_agree,
        generator_support_matches: support,
        generator_literal_matches: cert.generators.iter().map(|g| g.literal_matches).collect(),
    });
    Ok(())
}

fn csp_part(shape: &Shape, rep: &mut ShapeReport) -> Result<(), Failure> {
    let q_hook = csp_check(shape, PolynomialKind::QHook)?;
    if !q_hook.holds {
        let msg = "csp: q-hook polynomial does not sieve promotion".to_string();
        if shape.is_rectangular() {
            rep.failures.push(msg);
        } else {
            rep.informational.push(msg);
        }
    }
    let maj = compare_maj_hook(shape)?;
    if !maj.agree_at_roots {
        rep.informational.push(format!(
            "csp: maj = q^{} * q_hook differs from q_hook at some root of unity",
            maj.shift.map_or_else(|| "?".into(), |s| s.to_string())
        ));
    }
    rep.csp = Some(CspSummary { q_hook, maj });
    Ok(())
}

fn check_shape(
    kind: VerifyKind,
    shape: &Shape,
    settings: Settings,
) -> Result<ShapeReport, Failure> {
    let norm = settings.normalization;
    let mut rep = ShapeReport {
        shape: shape.clone(),
        rectangular: shape.is_rectangular(),
        hecke: None,
        cactus: None,
        interp: None,
        csp: None,
        failures: Vec::new(),
        informational: Vec::new(),
    };
    if shape.size() < 2 {
        return Err(Failure::Usage(format!(
            "shape {shape} has fewer than two cells"
        )));
    }
    if wants(kind, VerifyKind::Hecke) {
        hecke_part(shape, settings, &mut rep);
    }
    if wants(kind, VerifyKind::Cactus) {
        cactus_part(shape, &mut rep)?;
    }
    if wants(kind, VerifyKind::Interp) {
        interp_part(shape, norm, &mut rep)?;
    }
    if wants(kind, VerifyKind::Csp) {
        csp_part(shape, &mut rep)?;
    }
    Ok(rep)
}

fn kind_name(kind: VerifyKind) -> &'static str {
    match kind {
        VerifyKind::Hecke => "hecke",
        VerifyKind::Cactus => "cactus",
        VerifyKind::Interp => "interp",
        VerifyKind::Csp => "csp",
        VerifyKind::All => "all",
    }
}

fn text(report: &VerifyReport) -> String {
    let mut out = String::new();
    for s in &report.shapes {
        let status = if s.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        out.push_str(&format!("{:<12} {status}\n", s.shape.to_string()));
        for f in &s.failures {
            out.push_str(&format!("    failure: {f}\n"));
        }
        for i in &s.informational {
            out.push_str(&format!("    note: {i}\n"));
        }
    }
    out.push_str(&format!(
        "{}, {} ({} normalization)\n",
        crate::count(report.shapes.len(), "shape", "shapes"),
        crate::count(report.failure_count, "failure", "failures"),
        report.normalization
    ));
    out
}

pub fn run(
    kind: VerifyKind,
    shapes: &[Shape],
    settings: Settings,
    parallel: bool,
    format: Format,
) -> Result<Outcome, Failure> {
    let reports: Vec<ShapeReport> = if parallel {
        shapes
            .par_iter()
            .map(|s| check_shape(kind, s, settings))
            .collect::<Result<_, _>>()?
    } else {
        shapes
            .iter()
            .map(|s| check_shape(kind, s, settings))
            .collect::<Result<_, _>>()?
    };
    let failure_count = reports.iter().map(|r| r.failures.len()).sum();
    let report = VerifyReport {
        schema_version: SCHEMA_VERSION,
        command: "verify",
        kind: kind_name(kind).into(),
        normalization: settings.normalization,
        ok: failure_count == 0,
        failure_count,
        shapes: reports,
    };
    let body = match format {
        Format::Json => serde_json::to_string_pretty(&report)? + "\n",
        _ => text(&report),
    };
    Ok(Outcome {
        body,
        diagnostics: None,
        ok: report.ok,
    })
}
