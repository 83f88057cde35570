//! Artifact emission and the worked example.

use std::path::Path;

use cactus_sieve::csp::{polynomial, promotion_orbits, PolynomialKind};
use cactus_sieve::heckerep::{Normalization, SeminormalRep};
use cactus_sieve::interp::{
    d_matrix, hatted_generators, interpolating_matrix_with, match_worked_example_against,
    WorkedExample, WorkedExampleReport,
};
use cactus_sieve::latex::{matrix_latex, polynomial_latex};
use cactus_sieve::tableau::{Basis, Shape, StandardTableau};
use cactus_sieve::MatrixQq;
use serde::Serialize;

use crate::{EmitObject, Failure, Format, Outcome, SCHEMA_VERSION};

#[derive(Serialize)]
struct MatrixList<'a> {
    schema_version: u32,
    object: &'a str,
    shape: &'a Shape,
    normalization: Normalization,
    basis: &'a [StandardTableau],
    matrices: &'a [MatrixQq],
}

#[derive(Serialize)]
struct PolynomialOut<'a> {
    schema_version: u32,
    object: &'a str,
    kind: PolynomialKind,
    shape: &'a Shape,
    coefficients: &'a cactus_sieve::exactalg::IntPoly,
}

#[derive(Serialize)]
struct OrbitsOut<'a> {
    schema_version: u32,
    object: &'a str,
    shape: &'a Shape,
    sizes: Vec<usize>,
    orbits: Vec<Vec<&'a StandardTableau>>,
}

fn object_name(o: EmitObject) -> &'static str {
    match o {
        EmitObject::U => "u",
        EmitObject::Sigma => "sigma",
        EmitObject::T => "t",
        EmitObject::That => "that",
        EmitObject::Phat => "phat",
        EmitObject::D => "d",
        EmitObject::Polynomial => "polynomial",
        EmitObject::Orbits => "orbits",
    }
}

fn ok(body: String) -> Result<Outcome, Failure> {
    Ok(Outcome {
        body,
        diagnostics: None,
        ok: true,
    })
}

fn matrices(
    object: EmitObject,
    shape: &Shape,
    norm: Normalization,
) -> Result<Vec<MatrixQq>, Failure> {
    let rep = SeminormalRep::new(shape, norm);
    let range = 1..shape.size();
    Ok(match object {
        EmitObject::U => range.map(|i| rep.u(i).clone()).collect(),
        EmitObject::Sigma => range.map(|i| rep.sigma(i).clone()).collect(),
        EmitObject::T => rep.t_all().to_vec(),
        EmitObject::That => hatted_generators(shape, norm)?,
        EmitObject::Phat => vec![interpolating_matrix_with(shape, norm)?.p_hat],
        EmitObject::D => vec![d_matrix(shape)],
        EmitObject::Polynomial | EmitObject::Orbits => unreachable!("not a matrix object"),
    })
}

fn matrix_text(ms: &[MatrixQq], latex: bool) -> String {
    let single = ms.len() == 1;
    let mut out = String::new();
    for (k, m) in ms.iter().enumerate() {
        if !single {
            out.push_str(&format!(
                "{} i = {}\n",
                if latex { "%" } else { "#" },
                k + 1
            ));
        }
        if latex {
            out.push_str(&matrix_latex(m));
        } else {
            out.push_str(&m.to_string());
        }
    }
    out
}

pub fn emit(
    object: EmitObject,
    kind: Option<&str>,
    shape: &Shape,
    norm: Normalization,
    format: Format,
) -> Result<Outcome, Failure> {
    if shape.size() < 2
        && !matches!(
            object,
            EmitObject::Polynomial | EmitObject::Orbits | EmitObject::D
        )
    {
        return Err(Failure::Usage(format!("shape {shape} has no generators")));
    }
    let name = object_name(object);
    match object {
        EmitObject::Polynomial => {
            let kind: PolynomialKind = kind
                .ok_or_else(|| Failure::Usage("polynomial needs a kind: q_hook or maj".into()))?
                .parse()?;
            let p = polynomial(shape, kind)?;
            ok(match format {
                Format::Json => {
                    serde_json::to_string_pretty(&PolynomialOut {
                        schema_version: SCHEMA_VERSION,
                        object: name,
                        kind,
                        shape,
                        coefficients: &p,
                    })? + "\n"
                }
                Format::Latex => polynomial_latex(p.coeffs()) + "\n",
                Format::Text => format!("{p}\n"),
            })
        }
        EmitObject::Orbits => {
            if kind.is_some() {
                return Err(Failure::Usage("orbits takes no kind".into()));
            }
            let basis = Basis::new(shape);
            let orbits: Vec<Vec<&StandardTableau>> = promotion_orbits(shape)
                .into_iter()
                .map(|o| o.into_iter().map(|k| basis.get(k)).collect())
                .collect();
            let sizes: Vec<usize> = orbits.iter().map(Vec::len).collect();
            ok(match format {
                Format::Json => {
                    serde_json::to_string_pretty(&OrbitsOut {
                        schema_version: SCHEMA_VERSION,
                        object: name,
                        shape,
                        sizes,
                        orbits,
                    })? + "\n"
                }
                _ => {
                    let mut out = String::new();
                    for (k, o) in orbits.iter().enumerate() {
                        out.push_str(&format!("orbit {} (size {})\n", k + 1, o.len()));
                        for t in o {
                            out.push_str(&format!("{t}\n"));
                        }
                    }
                    out
                }
            })
        }
        _ => {
            if kind.is_some() {
                return Err(Failure::Usage(format!("{name} takes no kind")));
            }
            let ms = matrices(object, shape, norm)?;
            let basis = Basis::new(shape);
            ok(match format {
                Format::Json => {
                    serde_json::to_string_pretty(&MatrixList {
                        schema_version: SCHEMA_VERSION,
                        object: name,
                        shape,
                        normalization: norm,
                        basis: basis.tableaux(),
                        matrices: &ms,
                    })? + "\n"
                }
                Format::Latex => matrix_text(&ms, true),
                Format::Text => matrix_text(&ms, false),
            })
        }
    }
}

#[derive(Serialize)]
struct ExampleOut<'a> {
    schema_version: u32,
    command: &'static str,
    #[serde(flatten)]
    report: &'a WorkedExampleReport,
}

fn example_text(r: &WorkedExampleReport, latex: bool) -> String {
    let c = if latex { "%" } else { "#" };
    let mut out = format!(
        "{c} shape {} basis permutation {}\n",
        r.shape, r.permutation
    );
    for m in &r.comparisons {
        let status = if m.matches { "match" } else { "MISMATCH" };
        out.push_str(&format!("{c} {}: {status}\n", m.name));
        if latex {
            out.push_str(&matrix_latex(&m.computed));
        } else {
            out.push_str(&m.computed.to_string());
        }
    }
    for check in &r.reference_checks {
        out.push_str(&format!(
            "{c} reference: {} {}\n",
            check.name,
            if check.holds { "holds" } else { "FAILS" }
        ));
    }
    for check in &r.intertwiner.identities {
        out.push_str(&format!(
            "{c} intertwiner: {} {}\n",
            check.name,
            if check.holds { "holds" } else { "fails" }
        ));
    }
    out.push_str(&format!(
        "{c} {}\n",
        if r.all_match {
            "all six matrices reproduced".to_string()
        } else {
            format!(
                "{} differ",
                crate::count(r.mismatch_count(), "entry", "entries")
            )
        }
    ));
    out
}

pub fn worked_example(fixtures: Option<&Path>, format: Format) -> Result<Outcome, Failure> {
    let reference = match fixtures {
        Some(dir) => WorkedExample::from_dir(dir)?,
        None => WorkedExample::embedded()?,
    };
    let report = match_worked_example_against(&reference)?;
    let body = match format {
        Format::Json => {
            serde_json::to_string_pretty(&ExampleOut {
                schema_version: SCHEMA_VERSION,
                command: "paper-example",
                report: &report,
            })? + "\n"
        }
        Format::Latex => example_text(&report, true),
        Format::Text => example_text(&report, false),
    };
    Ok(Outcome {
        body,
        diagnostics: (!report.all_match).then(|| report.diff()),
        ok: report.all_match,
    })
}
