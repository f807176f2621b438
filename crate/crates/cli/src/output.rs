use jc_forge_core::{Mat, Partition};
use serde_json::{json, Value};

pub fn partition(p: &Partition) -> Value {
    json!(p.parts())
}

pub fn types(types: &[(Partition, usize)]) -> Value {
    types
        .iter()
        .map(|(phi, dim)| json!({ "type": partition(phi), "dim": dim }))
        .collect()
}

/// Rows of entries in the element text grammar.
pub fn matrix(m: &Mat) -> Value {
    m.to_rows()
        .iter()
        .map(|row| row.iter().map(ToString::to_string).collect::<Vec<_>>())
        .collect()
}
