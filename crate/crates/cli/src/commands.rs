use std::fmt::Write as _;
use std::io::Write as _;

use sparseres::audit::structural_audit;
use sparseres::matrix::export_matrix;
use sparseres::model::type_vector_of;
use sparseres::multihomo::monotone_typefns;
use sparseres::oracles::quotient::{verify_quotient, QuotientOptions};
use sparseres::{build_matrix, greedy_closure, principal_submatrix, ExportFormat, System, TypeFunction};

use crate::spec::Spec;
use crate::CliError;

pub fn emit(bytes: &[u8]) -> Result<(), CliError> {
    let mut stdout = std::io::stdout().lock();
    stdout.write_all(bytes).and_then(|_| stdout.flush()).map_err(|e| CliError::Io(e.to_string()))
}

fn kind(system: &System) -> &'static str {
    match system {
        System::Zonotope(_) => "zonotope",
        System::MultiHomogeneous(_) => "multihomogeneous",
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub fn sizes(spec: &Spec) -> Result<String, CliError> {
    let system = &spec.system;
    let sub = system.subdivision()?;
    let closure = greedy_closure(&sub);
    let predicted = system.predicted_size();
    if predicted != closure.len() as u128 {
        return Err(CliError::Verification(format!(
            "predicted size {predicted} differs from closure size {}",
            closure.len()
        )));
    }
    let n = system.n();
    let mut mixed = vec![0usize; n + 1];
    for p in closure.points.iter().filter(|p| p.mixed) {
        mixed[p.row_content.poly] += 1;
    }
    let points = sub.num_points();
    let mut out = String::new();
    writeln!(out, "kind: {}", kind(system)).unwrap();
    writeln!(out, "n: {n}").unwrap();
    writeln!(out, "|B|={points} |G|={}", closure.len()).unwrap();
    writeln!(out, "predicted |G|: {predicted}").unwrap();
    writeln!(out, "mixed rows per polynomial: {}", join(&mixed)).unwrap();
    writeln!(out, "mixed volumes: {}", join(&system.mixed_volumes()?)).unwrap();
    writeln!(out, "ratio |G|/|B|: {:.4}", closure.len() as f64 / points as f64).unwrap();
    if let Some(index) = spec.lattice_index {
        writeln!(out, "lattice index |det V|: {index} (resultant = box resultant ^ {index})").unwrap();
    }
    Ok(out)
}

/// Type functions to list: all of them for boxes, the group-monotone ones otherwise.
fn listed_typefns(system: &System) -> Vec<TypeFunction> {
    match system {
        System::MultiHomogeneous(s) => monotone_typefns(s),
        System::Zonotope(s) => {
            let n = s.n();
            (0..(n + 1).pow(n as u32))
                .map(|mut code| {
                    let mut v = vec![0; n];
                    for slot in v.iter_mut().rev() {
                        *slot = code % (n + 1);
                        code /= n + 1;
                    }
                    TypeFunction(v)
                })
                .collect()
        }
    }
}

pub fn subdivision(spec: &Spec) -> Result<String, CliError> {
    let sub = spec.system.subdivision()?;
    let n = sub.n();
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let (mut cells, mut occupied, mut mixed, mut greedy) = (0, 0, 0, 0);
    let mut out = String::new();
    for phi in listed_typefns(&spec.system) {
        let t = type_vector_of(&phi, n);
        let count = sub.cell_points(&phi).len();
        let row = t.last_zero().expect("n + 1 slots hold n coordinates");
        cells += 1;
        occupied += usize::from(count > 0);
        mixed += usize::from(t.is_mixed());
        greedy += usize::from(t.is_greedy());
        writeln!(
            out,
            "phi={phi} t={t} points={count} mixed={} greedy={} row=F{row}",
            yes_no(t.is_mixed()),
            yes_no(t.is_greedy())
        )
        .unwrap();
    }
    writeln!(out, "cells={cells} occupied={occupied} mixed={mixed} greedy={greedy}").unwrap();
    Ok(out)
}

pub fn matrix(spec: &Spec, full: bool, principal: bool, format: ExportFormat) -> Result<Vec<u8>, CliError> {
    let sub = spec.system.subdivision()?;
    let points = if full { sub.points() } else { greedy_closure(&sub).point_set() };
    let mut m = build_matrix(&points, &sub)?;
    if principal {
        m = principal_submatrix(&m);
    }
    Ok(export_matrix(&m, format))
}

pub struct VerifyOptions {
    pub prime: u64,
    pub trials: usize,
    pub seed: u64,
    pub full_limit: usize,
    pub json: bool,
}

/// Returns the report text and whether every check passed.
pub fn verify(spec: &Spec, opts: &VerifyOptions) -> Result<(String, bool), CliError> {
    let structural = structural_audit(&spec.system, opts.full_limit)?;
    let quotient = verify_quotient(
        &spec.system,
        &QuotientOptions {
            prime: opts.prime,
            trials: opts.trials,
            seed: opts.seed,
            full_matrix_limit: opts.full_limit,
        },
    )?;
    let ok = structural.passed() && quotient.passed();

    if opts.json {
        let report = serde_json::json!({
            "passed": ok,
            "structural": structural,
            "quotient": quotient,
        });
        let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
        text.push('\n');
        return Ok((text, ok));
    }

    let mut out = String::new();
    writeln!(out, "kind: {}", kind(&spec.system)).unwrap();
    writeln!(out, "|B|={} closure size {}", structural.points, structural.greedy_rows).unwrap();
    writeln!(out, "mixed volumes: {}", join(&structural.mixed_volumes)).unwrap();
    for item in &structural.items {
        let status = if item.ok { "ok  " } else { "FAIL" };
        writeln!(out, "{}", format!("{status} {} {}", item.name, item.detail).trim_end()).unwrap();
    }
    writeln!(
        out,
        "quotient checks over Z/{}: {} trials, seed {}",
        quotient.prime, quotient.trials, quotient.seed
    )
    .unwrap();
    for c in &quotient.checks {
        if !c.applicable {
            writeln!(out, "n/a  {}", c.name).unwrap();
        } else if c.ok() {
            writeln!(out, "ok   {} {}/{}", c.name, c.passed, c.passed + c.failed).unwrap();
        } else {
            writeln!(out, "FAIL {} {}/{} seeds={}", c.name, c.passed, c.passed + c.failed, join(&c.failing_seeds))
                .unwrap();
        }
    }
    if !quotient.singular_e_seeds.is_empty() {
        writeln!(out, "FAIL singular principal submatrix seeds={}", join(&quotient.singular_e_seeds)).unwrap();
    }
    for note in &structural.notes {
        writeln!(out, "note: {note}").unwrap();
    }
    writeln!(out, "{}", if ok { "all checks passed" } else { "some checks FAILED" }).unwrap();
    Ok((out, ok))
}
