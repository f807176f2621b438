use jc_forge_core::text::matrix_from_strings;
use jc_forge_core::{parse_field, parse_matrix, parse_poly, Budget, Error, FieldSpec, Mat, Poly};
use serde_json::Value;

pub struct Inputs {
    pub field: FieldSpec,
    pub f: Poly,
    pub x: Mat,
}

impl Inputs {
    pub fn parse(field: &str, f: &str, matrix: &str) -> Result<Self, Error> {
        let field = parse_field(field)?;
        Ok(Inputs {
            f: parse_poly(f, field)?,
            x: load_matrix(matrix, field)?,
            field,
        })
    }
}

/// Inline text, or the contents of a file for `@path`.
fn resolve(arg: &str) -> Result<String, Error> {
    match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {path}: {e}"))),
        None => Ok(arg.to_string()),
    }
}

/// Accepts the bracket grammar, or JSON whose entries are numbers or
/// strings in the element grammar.
pub fn load_matrix(arg: &str, field: FieldSpec) -> Result<Mat, Error> {
    let src = resolve(arg)?;
    if let Ok(Value::Array(rows)) = serde_json::from_str::<Value>(&src) {
        let mut out = Vec::with_capacity(rows.len());
        for row in rows {
            let Value::Array(entries) = row else {
                return Err(Error::Parse("JSON matrix rows must be arrays".into()));
            };
            let row = entries
                .into_iter()
                .map(|e| match e {
                    Value::String(s) => Ok(s),
                    Value::Number(n) => Ok(n.to_string()),
                    other => Err(Error::Parse(format!(
                        "unsupported JSON matrix entry {other}"
                    ))),
                })
                .collect::<Result<Vec<_>, Error>>()?;
            out.push(row);
        }
        return matrix_from_strings(&out, field);
    }
    parse_matrix(&src, field)
}

/// `JC_FORGE_BUDGET`: `max_m` or `max_m,max_candidates`.
pub fn parse_budget(var: Option<&str>) -> Result<Budget, Error> {
    let mut budget = Budget::default();
    let Some(var) = var.map(str::trim).filter(|v| !v.is_empty()) else {
        return Ok(budget);
    };
    let bad = || {
        Error::Parse(format!(
            "JC_FORGE_BUDGET must be `max_m` or `max_m,max_candidates`, got {var:?}"
        ))
    };
    let mut parts = var.split(',').map(str::trim);
    budget.max_partition_sum = parts.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
    if let Some(c) = parts.next() {
        budget.irreducibility_candidates = c.parse().map_err(|_| bad())?;
    }
    if parts.next().is_some() {
        return Err(bad());
    }
    Ok(budget)
}
