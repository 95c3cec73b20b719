//! Exhaustive structural checks on a system's subdivision and greedy matrix.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::Result;
use crate::greedy::{check_no_escape, greedy_closure, greedy_predicate_set};
use crate::matrix::build_matrix;
use crate::model::TypeFunction;
use crate::multihomo::{cell_count_multihomo, monotone_typefns};
use crate::oracles::mixed_volume::{degree_audit, DegreeAudit};
use crate::system::System;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditItem {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralReport {
    pub points: u128,
    pub greedy_rows: usize,
    pub mixed_volumes: Vec<u128>,
    pub items: Vec<AuditItem>,
    /// Only for unit boxes listed in the reference size table.
    pub degree: Option<DegreeAudit>,
    pub notes: Vec<String>,
}

impl StructuralReport {
    /// Degree notes are informational and do not count.
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.ok)
    }
}

fn item(name: &str, ok: bool, detail: String) -> AuditItem {
    AuditItem { name: name.to_string(), ok, detail }
}

/// All `(n + 1)^n` maps `{1..n} -> {0..n}`.
fn all_typefns(n: usize) -> Vec<TypeFunction> {
    let total = (n + 1).pow(n as u32);
    (0..total)
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

/// Runs every structural check. The full matrix is only built up to `full_matrix_limit` points.
pub fn structural_audit(system: &System, full_matrix_limit: usize) -> Result<StructuralReport> {
    let sub = system.subdivision()?;
    let n = sub.n();
    let points = sub.points();
    let closure = greedy_closure(&sub);
    let closure_set = closure.point_set();
    let predicate = greedy_predicate_set(&sub);
    let mut items = Vec::new();

    items.push(item(
        "closure-equals-predicate",
        closure_set == predicate,
        format!("closure {} points, predicate {} points", closure_set.len(), predicate.len()),
    ));
    items.push(item(
        "closure-inside-window",
        closure.escaped.is_empty(),
        format!("{} escaped columns", closure.escaped.len()),
    ));
    items.push(item("no-escape", check_no_escape(&sub), String::new()));
    let predicted = system.predicted_size();
    items.push(item(
        "predicted-size",
        predicted == closure.len() as u128,
        format!("predicted {predicted}, closure {}", closure.len()),
    ));

    let enumerated: usize = all_typefns(n).iter().map(|phi| sub.cell_points(phi).len()).sum();
    let formula: u128 = match system {
        System::Zonotope(s) => all_typefns(n)
            .iter()
            .map(|phi| {
                phi.values().iter().enumerate().map(|(j, &k)| s.bound(k, j) as u128).product::<u128>()
            })
            .sum(),
        System::MultiHomogeneous(s) => {
            monotone_typefns(s).iter().map(|phi| cell_count_multihomo(phi, s)).sum()
        }
    };
    items.push(item(
        "cell-partition",
        enumerated == points.len() && formula == points.len() as u128,
        format!("cells enumerate {enumerated}, formula {formula}, |B| = {}", points.len()),
    ));
    let distinct: HashSet<_> = all_typefns(n).iter().flat_map(|phi| sub.cell_points(phi)).collect();
    items.push(item(
        "cells-disjoint",
        distinct.len() == enumerated,
        format!("{} distinct of {enumerated}", distinct.len()),
    ));

    let mixed_volumes = system.mixed_volumes()?;
    let mut mixed_counts = vec![0u128; n + 1];
    for b in &points {
        if sub.type_vector(b)?.is_mixed() {
            mixed_counts[sub.row_content(b)?.poly] += 1;
        }
    }
    items.push(item(
        "mixed-rows-per-polynomial",
        mixed_counts == mixed_volumes,
        format!("mixed rows {mixed_counts:?}, mixed volumes {mixed_volumes:?}"),
    ));

    let mut notes = Vec::new();
    if points.len() <= full_matrix_limit {
        let full = build_matrix(&points, &sub)?;
        items.push(item(
            "block-triangular",
            full.is_block_triangular() && full.greedy_count() == closure.len(),
            format!("{} greedy rows lead {} total", full.greedy_count(), full.len()),
        ));
    } else {
        notes.push(format!("full matrix skipped: {} points exceed {full_matrix_limit}", points.len()));
    }

    let degree = match system {
        System::Zonotope(s) => degree_audit(s.bounds()),
        System::MultiHomogeneous(_) => None,
    };
    if let Some(d) = &degree {
        if !d.agrees() {
            notes.push(format!(
                "total degree {} for n = {} differs from the reference table value {}",
                d.computed, d.n, d.reference
            ));
        }
    }

    Ok(StructuralReport {
        points: sub.num_points(),
        greedy_rows: closure.len(),
        mixed_volumes,
        items,
        degree,
        notes,
    })
}
