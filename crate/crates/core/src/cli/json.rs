//! JSON encodings of the command-line record types.

use serde_json::{json, Map, Value};

use super::CliError;
use crate::gf::{FieldSpec, FqElement, PolyFq};
use crate::hecke_index::{MonomialMatrix, PolyMatrix};
use crate::rsk::{DegreeMatrix, PhiTableauFamily};
use crate::shapes::{Composition, Tableau};

fn schema(msg: impl Into<String>) -> CliError {
    CliError::parse(msg)
}

/// Prime-field elements as integers, extension-field elements as coordinate
/// arrays `[c0, c1, ...]` (constant coordinate first).
pub fn element_to_json(field: &FieldSpec, x: FqElement) -> Value {
    if field.is_prime_field() {
        json!(x.index())
    } else {
        json!(field.coords(x))
    }
}

pub fn element_from_json(field: &FieldSpec, v: &Value) -> Result<FqElement, CliError> {
    match v {
        Value::Number(n) if field.is_prime_field() => {
            let idx = n
                .as_u64()
                .filter(|&i| i < field.q() as u64)
                .ok_or_else(|| schema(format!("element {n} out of range")))?;
            field.element(idx as u32).map_err(|e| schema(e.to_string()))
        }
        Value::Array(items) if !field.is_prime_field() => {
            let coords = items
                .iter()
                .map(|c| c.as_u64().map(|c| c as u32).ok_or_else(|| schema("coordinates must be integers")))
                .collect::<Result<Vec<u32>, _>>()?;
            field.from_coords(&coords).map_err(|e| schema(e.to_string()))
        }
        other => Err(schema(format!("invalid field element {other}"))),
    }
}

/// `{perm: [1-based rows], entries: [...]}`.
pub fn monomial_to_json(field: &FieldSpec, v: &MonomialMatrix) -> Value {
    let perm: Vec<usize> = v.perm().iter().map(|r| r + 1).collect();
    let entries: Vec<Value> = v.entries().iter().map(|&x| element_to_json(field, x)).collect();
    json!({ "perm": perm, "entries": entries })
}

pub fn monomial_from_json(field: &FieldSpec, v: &Value) -> Result<MonomialMatrix, CliError> {
    let perm = v
        .get("perm")
        .and_then(Value::as_array)
        .ok_or_else(|| schema("monomial matrix needs a perm array"))?
        .iter()
        .map(|r| {
            r.as_u64()
                .filter(|&r| r >= 1)
                .map(|r| r as usize - 1)
                .ok_or_else(|| schema("perm entries must be positive integers"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let entries = v
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| schema("monomial matrix needs an entries array"))?
        .iter()
        .map(|x| element_from_json(field, x))
        .collect::<Result<Vec<_>, _>>()?;
    MonomialMatrix::new(perm, entries).map_err(|e| schema(e.to_string()))
}

/// `{mu: [...], entries: [[polynomial strings]]}`.
pub fn poly_matrix_to_json(field: &FieldSpec, a: &PolyMatrix) -> Value {
    let entries: Vec<Vec<String>> = a.entries().iter().map(|r| r.iter().map(|f| f.to_text(field)).collect()).collect();
    json!({ "mu": a.mu().parts(), "entries": entries })
}

pub fn poly_matrix_from_json(field: &FieldSpec, v: &Value) -> Result<PolyMatrix, CliError> {
    let mu: Composition =
        serde_json::from_value(v.get("mu").cloned().ok_or_else(|| schema("polynomial matrix needs mu"))?)
            .map_err(|e| schema(format!("mu: {e}")))?;
    let rows =
        v.get("entries").and_then(Value::as_array).ok_or_else(|| schema("polynomial matrix needs an entries array"))?;
    let entries = rows
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| schema("entries must be an array of rows"))?
                .iter()
                .map(|f| {
                    let text = f.as_str().ok_or_else(|| schema("polynomial entries must be strings"))?;
                    PolyFq::parse(text, field).map_err(|e| schema(e.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    PolyMatrix::new(entries, mu).map_err(CliError::from)
}

/// A bare array of rows, or `{b: rows}`.
pub fn degree_matrix_from_json(v: &Value) -> Result<DegreeMatrix, CliError> {
    let rows = v.get("b").unwrap_or(v);
    let rows: Vec<Vec<u32>> = serde_json::from_value(rows.clone())
        .map_err(|e| schema(format!("expected a matrix of nonnegative integers: {e}")))?;
    DegreeMatrix::new(rows).map_err(|e| schema(e.to_string()))
}

pub fn tableau_to_json(t: &Tableau) -> Value {
    json!(t.rows())
}

/// `{label: rows}` with labels as polynomial strings.
pub fn family_to_json(field: &FieldSpec, family: &PhiTableauFamily) -> Value {
    let map: Map<String, Value> = family.iter().map(|(f, t)| (f.to_text(field), tableau_to_json(t))).collect();
    Value::Object(map)
}

pub fn pair_to_json(field: &FieldSpec, p: &PhiTableauFamily, q: &PhiTableauFamily) -> Value {
    json!({ "P": family_to_json(field, p), "Q": family_to_json(field, q) })
}

/// Record fields flattened for TSV output, in a fixed column order.
pub fn tsv_cells(record: &Value, columns: &[&str]) -> String {
    columns
        .iter()
        .map(|c| match record.get(c) {
            Some(Value::String(s)) => s.clone(),
            Some(v) => v.to_string(),
            None => String::new(),
        })
        .collect::<Vec<_>>()
        .join("\t")
}
