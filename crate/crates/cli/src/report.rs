//! Rendering for command output: plain text and `"schema": 1` JSON.
//!
//! Everything here is a pure function of its inputs, so a command invoked
//! twice with the same arguments and seed produces byte-identical output.
//! JSON objects serialize with sorted keys (the `serde_json` default map);
//! floats print in shortest round-trip form.

use serde_json::{json, Value};

use tangle_core::evaluator::LinkInvariantReport;
use tangle_core::kz::{BraidRelationReport, Transport};
use tangle_core::ring::RingMatrix;

/// The matrix in the ring's textual form: a lone scalar prints bare, anything
/// larger prints one bracketed row per line.
pub fn matrix_text(m: &RingMatrix) -> String {
    if let Some(p) = m.as_scalar() {
        return p.to_string();
    }
    let mut out = String::new();
    for i in 0..m.rows() {
        if i > 0 {
            out.push('\n');
        }
        out.push('[');
        for j in 0..m.cols() {
            if j > 0 {
                out.push_str(", ");
            }
            out.push_str(&m.entry(i, j).to_string());
        }
        out.push(']');
    }
    out
}

pub fn matrix_json(m: &RingMatrix) -> Value {
    let entries: Vec<Vec<String>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.entry(i, j).to_string()).collect())
        .collect();
    json!({
        "schema": 1,
        "variable": m.var().to_string(),
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": entries,
    })
}

/// Picks the reported variable: the `q`-form when the rewrite exists and was
/// asked for, otherwise the bracket variable `A`.
fn reported(r: &LinkInvariantReport, want_q: bool) -> (String, String, bool) {
    match (&r.jones, want_q) {
        (Some(q), true) => (q.to_string(), "q".to_string(), true),
        _ => (r.normalized.to_string(), "A".to_string(), false),
    }
}

pub fn invariant_text(r: &LinkInvariantReport, want_q: bool) -> String {
    let (normalized, variable, _) = reported(r, want_q);
    format!(
        "bracket    = {}\nwrithe     = {}\nnormalized = {}\nvariable   = {}",
        r.bracket, r.writhe, normalized, variable
    )
}

pub fn invariant_json(r: &LinkInvariantReport, want_q: bool) -> Value {
    let (normalized, variable, substituted) = reported(r, want_q);
    json!({
        "schema": 1,
        "bracket": r.bracket.to_string(),
        "writhe": r.writhe,
        "normalized": normalized,
        "variable": variable,
        "substituted": substituted,
    })
}

pub fn transport_text(t: &Transport) -> String {
    let n = t.matrix.n();
    let mut out = String::new();
    for i in 0..n {
        for j in 0..n {
            if j > 0 {
                out.push_str("  ");
            }
            let z = t.matrix.entry(i, j);
            out.push_str(&format!("({}, {})", z.re, z.im));
        }
        out.push('\n');
    }
    out.push_str(&format!(
        "error estimate = {}\nsteps/segment  = {}\nmin separation = {}",
        t.error_estimate, t.steps_per_segment, t.min_separation
    ));
    out
}

pub fn transport_json(t: &Transport) -> Value {
    let n = t.matrix.n();
    let mut flat: Vec<[f64; 2]> = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let z = t.matrix.entry(i, j);
            flat.push([z.re, z.im]);
        }
    }
    json!({
        "schema": 1,
        "transport": flat,
        "error_estimate": t.error_estimate,
        "steps": t.steps_per_segment,
        "min_separation": t.min_separation,
    })
}

pub fn relation_text(r: &BraidRelationReport) -> String {
    format!(
        "braid relation: distance {} (tolerance {}): {}",
        r.distance,
        r.tolerance,
        if r.pass { "pass" } else { "FAIL" }
    )
}

pub fn relation_json(r: &BraidRelationReport) -> Value {
    json!({
        "schema": 1,
        "distance": r.distance,
        "tolerance": r.tolerance,
        "pass": r.pass,
        "error_estimates": r.error_estimates,
    })
}
