//! Exact Jordan-Chevalley decompositions of f-primary matrices over the
//! rationals, GF(p) and GF(p)(t).
//!
//! Over an imperfect field such as GF(p)(t) a matrix may have no
//! decomposition `x = s + n` into commuting semisimple and nilpotent parts,
//! or infinitely many. This crate decides which, enumerates the possible
//! types of `n`, builds explicit witnesses, and verifies candidate pairs.
//!
//! ```
//! use jc_forge_core::{admissible_types, build_c, parse_field, parse_poly, validate_primary, Partition};
//!
//! let k = parse_field("GF(2)(t)").unwrap();
//! let f = parse_poly("T^2 - t", k).unwrap();
//! let x = build_c(&f, &"[1,1]".parse().unwrap()).unwrap();
//! let report = admissible_types(&validate_primary(&f, &x).unwrap()).unwrap();
//! assert_eq!(report.inv, "[1,1]".parse::<Partition>().unwrap());
//! assert_eq!(report.types.len(), 2);
//! ```

pub mod error;
pub mod fields;
pub mod jc;
pub mod linalg;
pub mod partitions;
pub mod poly;
pub mod text;

pub use error::{Error, Result};
pub use fields::{FieldElem, FieldSpec};
pub use jc::{
    admissible_types, build_c, build_j, classification_table, decompose, inv_of, inv_of_checked,
    random_decomposition, typ_of, validate_primary, verify_decomp, Budget, ClassificationReport,
    FailedCheck, JCDecomp, PrimaryEndo, TableRow, VerifyOutcome,
};
pub use linalg::{FrobeniusForm, Mat};
pub use partitions::Partition;
pub use poly::Poly;
pub use text::{parse_elem, parse_field, parse_matrix, parse_poly};
