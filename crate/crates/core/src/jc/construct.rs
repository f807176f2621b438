use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{inv_of_checked, JCDecomp, PrimaryEndo};
use crate::error::{Error, Result};
use crate::fields::{FieldElem, FieldSpec, FpPoly, RatFunc};
use crate::linalg::{frobenius_normal_form, solve_conjugation_space, Mat};
use crate::partitions::{zeta_apply, Partition};
use crate::poly::Poly;

/// Attempts at drawing an invertible commutant element.
pub const MAX_RANDOM_RETRIES: usize = 64;

/// `diag(C_{f^psi_1}, C_{f^psi_2}, ...)`, the Frobenius normal form with
/// `inv = psi`.
pub fn build_c(f: &Poly, psi: &Partition) -> Result<Mat> {
    let blocks = psi
        .parts()
        .iter()
        .map(|&a| f.pow(a as u32).companion())
        .collect::<Result<Vec<_>>>()?;
    Mat::block_diag(&blocks)
}

/// `(J, s0, n0)` for the type `phi`: one superblock per part `a`, with `a`
/// copies of `C_f` on the block diagonal and identity blocks directly above
/// them. `s0` keeps only the `C_f` blocks and `n0 = J - s0`.
pub fn build_j(f: &Poly, phi: &Partition) -> Result<(Mat, Mat, Mat)> {
    let c = f.companion()?;
    let d = c.rows();
    let field = f.field();
    let size = d * phi.sum();
    let eye = Mat::identity(field, d);
    let mut s0 = Mat::zeros(field, size, size);
    let mut n0 = Mat::zeros(field, size, size);
    let mut offset = 0;
    for &a in phi.parts() {
        for i in 0..a {
            s0.set_block(offset + i * d, offset + i * d, &c);
            if i + 1 < a {
                n0.set_block(offset + i * d, offset + (i + 1) * d, &eye);
            }
        }
        offset += a * d;
    }
    let j = &s0 + &n0;
    Ok((j, s0, n0))
}

/// A decomposition of type `phi`, obtained by conjugating the model pair of
/// `J_{f,phi}` through the Frobenius normal forms of `x` and `J`. The
/// result is one witness of the type, not a canonical representative.
pub fn decompose(e: &PrimaryEndo, phi: &Partition) -> Result<JCDecomp> {
    // The Frobenius forms are compared below, which already guards inv.
    let inv = inv_of_checked(e, false)?;
    if phi.sum() != e.m() || zeta_apply(phi, e.q()) != inv {
        return Err(Error::NoSuchType(format!(
            "{phi} (inv x = {inv}, q = {})",
            e.q()
        )));
    }
    let (j, s0, n0) = build_j(e.f(), phi)?;
    let fx = frobenius_normal_form(e.x())?;
    let fj = frobenius_normal_form(&j)?;
    if fx.form != fj.form {
        return Err(Error::InternalInconsistency(format!(
            "Frobenius forms of x and J_(f,{phi}) differ"
        )));
    }
    let q = &fx.transform * &fj.transform.inverse()?;
    let q_inv = q.inverse()?;
    Ok(JCDecomp {
        s: &(&q * &s0) * &q_inv,
        n: &(&q * &n0) * &q_inv,
        ty: phi.clone(),
    })
}

fn random_elem(field: FieldSpec, rng: &mut ChaCha8Rng) -> FieldElem {
    match field {
        FieldSpec::Rationals => field.from_i64(rng.gen_range(-3..=3)),
        FieldSpec::PrimeField(p) => field.from_i64(rng.gen_range(0..p as i64)),
        FieldSpec::RationalFunctions(p) => {
            let coeffs: Vec<u32> = (0..2).map(|_| rng.gen_range(0..p)).collect();
            FieldElem::Function(RatFunc::from_poly(FpPoly::new(p, coeffs)))
        }
    }
}

/// [`decompose`] followed by conjugation with a random invertible element
/// of the commutant of `x`, drawn deterministically from `seed`.
pub fn random_decomposition(e: &PrimaryEndo, phi: &Partition, seed: u64) -> Result<JCDecomp> {
    let base = decompose(e, phi)?;
    let basis = solve_conjugation_space(std::slice::from_ref(e.x()))?;
    let field = e.field();
    let n = e.x().rows();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_RANDOM_RETRIES {
        let mut r = Mat::zeros(field, n, n);
        for b in &basis {
            let c = random_elem(field, &mut rng);
            if !c.is_zero() {
                r = &r + &b.scale(&c);
            }
        }
        let Ok(r_inv) = r.inverse() else {
            continue;
        };
        return Ok(JCDecomp {
            s: &(&r * &base.s) * &r_inv,
            n: &(&r * &base.n) * &r_inv,
            ty: base.ty,
        });
    }
    Err(Error::RetriesExhausted(MAX_RANDOM_RETRIES))
}
