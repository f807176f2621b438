//! Exact dense linear algebra and the two canonical-form engines: Frobenius
//! normal form with a transformation matrix, and Smith normal form over
//! `K[T]`.

mod commutant;
mod echelon;
mod frobenius;
mod mat;
mod smith;

pub use commutant::{commutant_dim, solve_conjugation_space};
pub use echelon::{inverse, kernel_dim, nullspace, rank, solve};
pub use frobenius::{
    companion_blocks, frobenius_normal_form, krylov_min_poly, minimal_polynomial, FrobeniusForm,
};
pub use mat::Mat;
pub use smith::{smith_invariant_factors, PolyMat};
