//! `jc-forge`: existence, types, construction and verification of
//! Jordan-Chevalley decompositions from the command line.
//!
//! Exit codes: 0 success, 1 no decomposition exists or verification failed,
//! 2 parse error, 3 validation error, 4 budget exceeded, 5 internal error.

mod input;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use jc_forge_core::jc::{
    admissible_types_with, classification_table_with, render_table, validate_primary_with,
};
use jc_forge_core::linalg::frobenius_normal_form;
use jc_forge_core::partitions::{enumerate_preimages_with_budget, jc_dimension, zeta_apply};
use jc_forge_core::{
    decompose, inv_of_checked, random_decomposition, typ_of, verify_decomp, Budget,
    ClassificationReport, Error, Partition, PrimaryEndo, VerifyOutcome,
};
use serde_json::json;

use input::{load_matrix, parse_budget, Inputs};

#[derive(Parser, Debug)]
#[command(
    name = "jc-forge",
    version,
    about = "Jordan-Chevalley decompositions over Q, GF(p) and GF(p)(t)"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Cross-check inv x against the Smith normal form.
    #[arg(long, global = true)]
    paranoid: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(clap::Args, Debug)]
struct MatrixArgs {
    /// `Q`, `GF(p)` or `GF(p)(t)`.
    #[arg(long)]
    field: String,
    /// Monic irreducible polynomial in `T`, e.g. `T^2 - t`.
    #[arg(long)]
    f: String,
    /// `[[a,b],[c,d]]`, a JSON array of arrays, or `@path` to read either from a file.
    #[arg(long)]
    matrix: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report inv x, whether a decomposition exists, and every admissible type.
    Analyze {
        #[command(flatten)]
        m: MatrixArgs,
    },
    /// Construct a decomposition of the given type.
    Decompose {
        #[command(flatten)]
        m: MatrixArgs,
        #[arg(long = "type")]
        ty: String,
        /// Conjugate by a random commutant element drawn from this seed.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Check a candidate pair (s, n) and report its type.
    Verify {
        #[command(flatten)]
        m: MatrixArgs,
        #[arg(long)]
        s: String,
        #[arg(long)]
        n: String,
    },
    /// Admissible types for a given inv partition, without a matrix.
    Types {
        #[arg(long)]
        inv: String,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        degf: usize,
    },
    /// Apply zeta_q to a partition.
    Zeta {
        #[arg(long)]
        q: usize,
        #[arg(long)]
        partition: String,
    },
    /// Every psi in Part_m with its admissible types and dimensions.
    Table {
        #[arg(long)]
        q: usize,
        #[arg(long)]
        degf: usize,
        #[arg(long)]
        m: usize,
    },
    /// Frobenius normal form with its transformation matrix.
    Fnf {
        #[arg(long)]
        field: String,
        #[arg(long)]
        matrix: String,
    },
}

/// What a successful run prints, and whether it counts as a negative answer.
struct Rendered {
    text: String,
    json: serde_json::Value,
    negative: bool,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_)
        | Error::RaggedRows { .. }
        | Error::NotPrime(_)
        | Error::UnsupportedPrime(_) => 2,
        Error::NoSuchType(_) => 1,
        Error::BudgetExceeded(_) | Error::DegreeTooLarge { .. } => 4,
        Error::InternalInconsistency(_) | Error::RetriesExhausted(_) => 5,
        _ => 3,
    }
}

fn endo(m: &MatrixArgs, budget: &Budget) -> Result<(Inputs, PrimaryEndo), Error> {
    let inputs = Inputs::parse(&m.field, &m.f, &m.matrix)?;
    let e = validate_primary_with(&inputs.f, &inputs.x, budget)?;
    Ok((inputs, e))
}

fn check_inv(e: &PrimaryEndo, paranoid: bool) -> Result<(), Error> {
    if paranoid {
        inv_of_checked(e, true)?;
    }
    Ok(())
}

fn report_output(e: &PrimaryEndo, report: &ClassificationReport) -> Rendered {
    let header = format!(
        "field   {}\nf       {}\nq       {}\nm       {}\n",
        e.field(),
        e.f(),
        e.q(),
        e.m()
    );
    Rendered {
        text: format!("{header}{report}"),
        json: json!({
            "field": e.field().to_string(),
            "f": e.f().to_string(),
            "q": e.q(),
            "m": e.m(),
            "inv": output::partition(&report.inv),
            "exists": report.exists,
            "types": output::types(&report.types),
        }),
        negative: !report.exists,
    }
}

fn run(cli: &Cli, budget: &Budget) -> Result<Rendered, Error> {
    match &cli.command {
        Command::Analyze { m } => {
            let (_, e) = endo(m, budget)?;
            check_inv(&e, cli.paranoid)?;
            let report = admissible_types_with(&e, budget)?;
            Ok(report_output(&e, &report))
        }
        Command::Decompose { m, ty, seed } => {
            let (_, e) = endo(m, budget)?;
            check_inv(&e, cli.paranoid)?;
            let phi: Partition = ty.parse()?;
            let d = match seed {
                Some(seed) => random_decomposition(&e, &phi, *seed)?,
                None => decompose(&e, &phi)?,
            };
            Ok(Rendered {
                text: format!("type {}\ns = {}\nn = {}\n", d.ty, d.s, d.n),
                json: json!({
                    "field": e.field().to_string(),
                    "f": e.f().to_string(),
                    "type": output::partition(&d.ty),
                    "s": output::matrix(&d.s),
                    "n": output::matrix(&d.n),
                }),
                negative: false,
            })
        }
        Command::Verify { m, s, n } => {
            let (inputs, e) = endo(m, budget)?;
            let s = load_matrix(s, inputs.field)?;
            let n = load_matrix(n, inputs.field)?;
            match verify_decomp(&e, &s, &n) {
                VerifyOutcome::Valid => {
                    let ty = typ_of(&e, &s, &n)?;
                    Ok(Rendered {
                        text: format!("valid\ntype {ty}\n"),
                        json: json!({ "valid": true, "type": output::partition(&ty) }),
                        negative: false,
                    })
                }
                VerifyOutcome::Invalid(check) => Ok(Rendered {
                    text: format!("invalid: {check}\n"),
                    json: json!({ "valid": false, "failed": check.to_string() }),
                    negative: true,
                }),
            }
        }
        Command::Types { inv, q, degf } => {
            let psi: Partition = inv.parse()?;
            if *q == 0 || *degf == 0 {
                return Err(Error::TypeMismatch("q and deg f must be positive".into()));
            }
            let types = enumerate_preimages_with_budget(&psi, *q, budget.max_partition_sum)?
                .into_iter()
                .map(|phi| {
                    let dim = jc_dimension(&psi, &phi, *degf)?;
                    Ok((phi, dim))
                })
                .collect::<Result<Vec<_>, Error>>()?;
            let report = ClassificationReport {
                inv: psi,
                exists: !types.is_empty(),
                types,
            };
            Ok(Rendered {
                text: report.to_string(),
                json: json!({
                    "inv": output::partition(&report.inv),
                    "q": q,
                    "degf": degf,
                    "exists": report.exists,
                    "types": output::types(&report.types),
                }),
                negative: !report.exists,
            })
        }
        Command::Zeta { q, partition } => {
            let phi: Partition = partition.parse()?;
            if *q == 0 {
                return Err(Error::TypeMismatch("q must be positive".into()));
            }
            let image = zeta_apply(&phi, *q);
            Ok(Rendered {
                text: format!("{image}\n"),
                json: json!({
                    "q": q,
                    "partition": output::partition(&phi),
                    "image": output::partition(&image),
                }),
                negative: false,
            })
        }
        Command::Table { q, degf, m } => {
            let rows = classification_table_with(*q, *degf, *m, budget)?;
            Ok(Rendered {
                text: render_table(&rows),
                json: json!({
                    "q": q,
                    "degf": degf,
                    "m": m,
                    "rows": rows
                        .iter()
                        .map(|r| json!({ "psi": output::partition(&r.psi), "types": output::types(&r.types) }))
                        .collect::<Vec<_>>(),
                }),
                negative: false,
            })
        }
        Command::Fnf { field, matrix } => {
            let field = jc_forge_core::parse_field(field)?;
            let x = load_matrix(matrix, field)?;
            let fnf = frobenius_normal_form(&x)?;
            let factors: Vec<String> = fnf
                .invariant_factors
                .iter()
                .map(ToString::to_string)
                .collect();
            Ok(Rendered {
                text: format!(
                    "invariant factors  {}\nform       {}\ntransform  {}\n",
                    factors.join(", "),
                    fnf.form,
                    fnf.transform
                ),
                json: json!({
                    "field": field.to_string(),
                    "invariant_factors": factors,
                    "form": output::matrix(&fnf.form),
                    "transform": output::matrix(&fnf.transform),
                }),
                negative: false,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = match parse_budget(std::env::var("JC_FORGE_BUDGET").ok().as_deref()) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("jc-forge: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    match run(&cli, &budget) {
        Ok(out) => {
            match cli.format {
                Format::Text => print!("{}", out.text),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&out.json).expect("serializable")
                ),
            }
            ExitCode::from(if out.negative { 1 } else { 0 })
        }
        Err(e) => {
            eprintln!("jc-forge: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
