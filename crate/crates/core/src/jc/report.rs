use std::fmt;

use super::{inv_of, Budget, PrimaryEndo};
use crate::error::{Error, Result};
use crate::partitions::{
    enumerate_preimages_with_budget, jc_dimension, partitions_of_bounded, Partition,
};

/// `inv x` together with every admissible type and the dimension of its
/// variety of decompositions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub inv: Partition,
    pub exists: bool,
    pub types: Vec<(Partition, usize)>,
}

fn fiber_with_dims(
    inv: &Partition,
    q: usize,
    degf: usize,
    budget: &Budget,
) -> Result<Vec<(Partition, usize)>> {
    enumerate_preimages_with_budget(inv, q, budget.max_partition_sum)?
        .into_iter()
        .map(|phi| {
            let dim = jc_dimension(inv, &phi, degf)?;
            Ok((phi, dim))
        })
        .collect()
}

pub fn admissible_types(e: &PrimaryEndo) -> Result<ClassificationReport> {
    admissible_types_with(e, &Budget::default())
}

pub fn admissible_types_with(e: &PrimaryEndo, budget: &Budget) -> Result<ClassificationReport> {
    let inv = inv_of(e)?;
    let types = fiber_with_dims(&inv, e.q(), e.degf(), budget)?;
    Ok(ClassificationReport {
        exists: !types.is_empty(),
        inv,
        types,
    })
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "inv     {}", self.inv)?;
        writeln!(f, "exists  {}", if self.exists { "yes" } else { "no" })?;
        if self.types.is_empty() {
            return Ok(());
        }
        let width = self
            .types
            .iter()
            .map(|(p, _)| p.to_string().len())
            .max()
            .unwrap_or(0);
        writeln!(f, "types")?;
        for (phi, dim) in &self.types {
            writeln!(f, "  {:<width$}  dim {dim}", phi.to_string())?;
        }
        Ok(())
    }
}

/// One row of the classification table: `psi` and its fiber under `zeta_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub psi: Partition,
    pub types: Vec<(Partition, usize)>,
}

pub fn classification_table(q: usize, degf: usize, m: usize) -> Result<Vec<TableRow>> {
    classification_table_with(q, degf, m, &Budget::default())
}

/// Every `psi` in `Part_m`, in ascending lexicographic order, with its
/// admissible types and their dimensions. Purely combinatorial.
pub fn classification_table_with(
    q: usize,
    degf: usize,
    m: usize,
    budget: &Budget,
) -> Result<Vec<TableRow>> {
    if q == 0 || degf == 0 {
        return Err(Error::TypeMismatch("q and deg f must be positive".into()));
    }
    partitions_of_bounded(m, budget.max_partition_sum)?
        .into_iter()
        .map(|psi| {
            let types = fiber_with_dims(&psi, q, degf, budget)?;
            Ok(TableRow { psi, types })
        })
        .collect()
}

/// Aligned two-column text rendering, one row per `psi`, with each type
/// printed as `phi: dim`.
pub fn render_table(rows: &[TableRow]) -> String {
    let cells: Vec<(String, String)> = rows
        .iter()
        .map(|row| {
            let types = row
                .types
                .iter()
                .map(|(phi, dim)| format!("{phi}: {dim}"))
                .collect::<Vec<_>>()
                .join("   ");
            (row.psi.to_string(), types)
        })
        .collect();
    let width = cells
        .iter()
        .map(|(p, _)| p.len())
        .max()
        .unwrap_or(0)
        .max("psi".len());
    let mut out = format!("{:<width$} | types\n", "psi");
    out.push_str(&format!("{}-+-{}\n", "-".repeat(width), "-".repeat(5)));
    for (psi, types) in cells {
        out.push_str(format!("{psi:<width$} | {types}").trim_end());
        out.push('\n');
    }
    out
}
