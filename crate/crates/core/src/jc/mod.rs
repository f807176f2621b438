//! Jordan-Chevalley decompositions of f-primary matrices.
//!
//! An f-primary `x` (minimal polynomial a power of the irreducible `f`) is
//! summarized by `inv x`, the multiplicities of `f` in its invariant
//! factors. A decomposition `x = s + n` has a type `phi`, the Jordan type of
//! `n` over the field `L = K[S]/f(S)` acting through `s`, and `phi` is
//! admissible exactly when `zeta_q(phi) = inv x`.

mod construct;
mod report;

pub use construct::{build_c, build_j, decompose, random_decomposition, MAX_RANDOM_RETRIES};
pub use report::{
    admissible_types, admissible_types_with, classification_table, classification_table_with,
    render_table, ClassificationReport, TableRow,
};

use std::fmt;

use crate::error::{Error, Result};
use crate::fields::FieldSpec;
use crate::linalg::{kernel_dim, minimal_polynomial, rank, smith_invariant_factors, Mat, PolyMat};
use crate::partitions::{Partition, DEFAULT_MAX_PARTITION_SUM};
use crate::poly::{insep_degree, is_irreducible_with_budget, Poly, DEFAULT_IRREDUCIBILITY_BUDGET};

/// Limits on the exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Largest `m` for which `Part_m` is enumerated.
    pub max_partition_sum: usize,
    /// Candidate divisors tried by the irreducibility test.
    pub irreducibility_candidates: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_partition_sum: DEFAULT_MAX_PARTITION_SUM,
            irreducibility_candidates: DEFAULT_IRREDUCIBILITY_BUDGET,
        }
    }
}

/// A validated f-primary matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimaryEndo {
    f: Poly,
    q: usize,
    x: Mat,
    m: usize,
    exponent: usize,
}

impl PrimaryEndo {
    pub fn field(&self) -> FieldSpec {
        self.x.field()
    }

    /// The monic irreducible `f`.
    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn degf(&self) -> usize {
        self.f.degree().expect("f has positive degree")
    }

    /// Inseparability degree of `f`.
    pub fn q(&self) -> usize {
        self.q
    }

    pub fn x(&self) -> &Mat {
        &self.x
    }

    /// `dim V / deg f`.
    pub fn m(&self) -> usize {
        self.m
    }

    /// The `k` with minimal polynomial `f^k`.
    pub fn exponent(&self) -> usize {
        self.exponent
    }
}

/// A decomposition `x = s + n` of type `ty`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JCDecomp {
    pub s: Mat,
    pub n: Mat,
    pub ty: Partition,
}

pub fn validate_primary(f: &Poly, x: &Mat) -> Result<PrimaryEndo> {
    validate_primary_with(f, x, &Budget::default())
}

/// Checks that `f` is irreducible, `deg f` divides the size of `x`, and the
/// minimal polynomial of `x` is a power of `f`. A non-monic `f` is replaced
/// by its monic associate.
pub fn validate_primary_with(f: &Poly, x: &Mat, budget: &Budget) -> Result<PrimaryEndo> {
    let n = x.require_square()?;
    if f.field() != x.field() {
        return Err(Error::FieldMismatch(
            f.field().to_string(),
            x.field().to_string(),
        ));
    }
    let f = f.monic();
    if !is_irreducible_with_budget(&f, budget.irreducibility_candidates)? {
        return Err(Error::NotIrreducible(f.to_string()));
    }
    let degf = f
        .degree()
        .expect("irreducible polynomials have positive degree");
    if n == 0 || n % degf != 0 {
        return Err(Error::DimensionMismatch { degf, dim: n });
    }

    let mu = minimal_polynomial(x)?;
    let mut rest = mu.clone();
    let mut exponent = 0;
    while rest.degree().unwrap_or(0) > 0 {
        let (quot, rem) = rest.div_rem(&f)?;
        if !rem.is_zero() {
            return Err(Error::NotPrimary {
                f: f.to_string(),
                reason: format!("minimal polynomial {mu} is not a power of f"),
            });
        }
        rest = quot;
        exponent += 1;
    }
    Ok(PrimaryEndo {
        q: insep_degree(&f, false)?,
        m: n / degf,
        x: x.clone(),
        f,
        exponent,
    })
}

/// `inv x`, cross-checked against the Smith normal form in debug builds.
pub fn inv_of(e: &PrimaryEndo) -> Result<Partition> {
    inv_of_checked(e, cfg!(debug_assertions))
}

/// `inv x` from kernel dimensions: with `k_i = dim ker f(x)^i / deg f`,
/// the multiplicity of `b` is `(k_b - k_{b-1}) - (k_{b+1} - k_b)`.
/// With `paranoid`, the invariant factors of `T I - x` are computed as well
/// and any disagreement is reported.
pub fn inv_of_checked(e: &PrimaryEndo, paranoid: bool) -> Result<Partition> {
    let degf = e.degf();
    let fx = e.f.eval_at_matrix(&e.x)?;
    let mut k = vec![0usize];
    let mut power = Mat::identity(e.field(), e.x.rows());
    while *k.last().unwrap() < e.m {
        if k.len() > e.m + 1 {
            return Err(Error::InternalInconsistency(
                "kernels of f(x)^i did not exhaust the space".into(),
            ));
        }
        power = &power * &fx;
        let dim = kernel_dim(&power)?;
        if dim % degf != 0 {
            return Err(Error::InternalInconsistency(format!(
                "dim ker f(x)^{} = {dim} is not divisible by deg f = {degf}",
                k.len()
            )));
        }
        k.push(dim / degf);
    }
    let top = k.len() - 1;
    let at = |i: usize| k[i.min(top)];
    let mut parts = Vec::new();
    for b in (1..=top).rev() {
        let mult = (at(b) - at(b - 1)) - (at(b + 1) - at(b));
        parts.extend(std::iter::repeat_n(b, mult));
    }
    let inv = Partition::new(parts)?;

    if paranoid {
        let other = inv_by_smith(e)?;
        if other != inv {
            return Err(Error::InternalInconsistency(format!(
                "inv from kernel dimensions is {inv}, from the Smith form {other}"
            )));
        }
    }
    Ok(inv)
}

/// `inv x` read off the invariant factors of `T I - x`.
fn inv_by_smith(e: &PrimaryEndo) -> Result<Partition> {
    let factors = smith_invariant_factors(&PolyMat::characteristic(&e.x)?)?;
    let mut parts = Vec::with_capacity(factors.len());
    for d in factors {
        let mut rest = d.clone();
        let mut mult = 0;
        while rest.degree().unwrap_or(0) > 0 {
            let (quot, rem) = rest.div_rem(&e.f)?;
            if !rem.is_zero() {
                return Err(Error::InternalInconsistency(format!(
                    "invariant factor {d} is not a power of {}",
                    e.f
                )));
            }
            rest = quot;
            mult += 1;
        }
        parts.push(mult);
    }
    Partition::new(parts)
}

/// The type of a decomposition: with `r_j = rank(n^j) / deg f` and
/// `r_0 = m`, part `b` occurs `r_{b-1} - 2 r_b + r_{b+1}` times.
pub fn typ_of(e: &PrimaryEndo, _s: &Mat, n: &Mat) -> Result<Partition> {
    let degf = e.degf();
    let mut r = vec![e.m as i64];
    let mut power = n.clone();
    while *r.last().unwrap() > 0 {
        let j = r.len();
        if j > e.m + 1 {
            return Err(Error::TypeMismatch("n is not nilpotent".into()));
        }
        let rk = rank(&power);
        if !rk.is_multiple_of(degf) {
            return Err(Error::NotDivisible {
                rank: rk,
                power: j,
                degf,
            });
        }
        r.push((rk / degf) as i64);
        power = &power * n;
    }
    let top = r.len() - 1;
    let at = |i: usize| r.get(i).copied().unwrap_or(0);
    let mut parts = Vec::new();
    for b in (1..=top).rev() {
        let mult = at(b - 1) - 2 * at(b) + at(b + 1);
        if mult < 0 {
            return Err(Error::TypeMismatch(format!(
                "ranks of powers of n are not those of a nilpotent over L (b = {b})"
            )));
        }
        parts.extend(std::iter::repeat_n(b, mult as usize));
    }
    Partition::new(parts)
}

/// The first defining property a candidate pair violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FailedCheck {
    Shape,
    Sum,
    Commute,
    Nilpotent,
    Semisimple,
}

impl fmt::Display for FailedCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FailedCheck::Shape => "shape of s or n differs from x",
            FailedCheck::Sum => "s + n ≠ x",
            FailedCheck::Commute => "s·n ≠ n·s",
            FailedCheck::Nilpotent => "n^(m+1) ≠ 0",
            FailedCheck::Semisimple => "f(s) ≠ 0",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyOutcome {
    Valid,
    Invalid(FailedCheck),
}

impl VerifyOutcome {
    pub fn is_valid(&self) -> bool {
        matches!(self, VerifyOutcome::Valid)
    }
}

impl fmt::Display for VerifyOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyOutcome::Valid => f.write_str("valid"),
            VerifyOutcome::Invalid(check) => write!(f, "invalid: {check}"),
        }
    }
}

/// Checks `s + n = x`, `s n = n s`, `n^(m+1) = 0` and `f(s) = 0`, in that
/// order. Since `f` is irreducible the last one makes `f` the minimal
/// polynomial of `s`.
pub fn verify_decomp(e: &PrimaryEndo, s: &Mat, n: &Mat) -> VerifyOutcome {
    use FailedCheck::*;
    let x = &e.x;
    let same_shape =
        |a: &Mat| a.field() == x.field() && a.rows() == x.rows() && a.cols() == x.cols();
    if !same_shape(s) || !same_shape(n) {
        return VerifyOutcome::Invalid(Shape);
    }
    if &(s + n) != x {
        return VerifyOutcome::Invalid(Sum);
    }
    if !s.commutes_with(n) {
        return VerifyOutcome::Invalid(Commute);
    }
    if !n.pow(e.m as u32 + 1).expect("square").is_zero() {
        return VerifyOutcome::Invalid(Nilpotent);
    }
    if !e.f.eval_at_matrix(s).expect("square").is_zero() {
        return VerifyOutcome::Invalid(Semisimple);
    }
    VerifyOutcome::Valid
}
