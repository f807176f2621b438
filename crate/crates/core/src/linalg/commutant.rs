use super::echelon::{nullspace_from, row_reduce};
use super::{frobenius_normal_form, Mat};
use crate::error::{Error, Result};
use crate::fields::{FieldElem, FieldSpec};

fn check_generators(gens: &[Mat]) -> Result<(usize, FieldSpec)> {
    let first = gens
        .first()
        .ok_or_else(|| Error::ShapeMismatch("commutant of an empty generator list".into()))?;
    let n = first.require_square()?;
    let field = first.field();
    for g in gens {
        g.require_square()?;
        if g.field() != field {
            return Err(Error::FieldMismatch(
                field.to_string(),
                g.field().to_string(),
            ));
        }
        if g.rows() != n {
            return Err(Error::ShapeMismatch(format!(
                "generators of sizes {n} and {}",
                g.rows()
            )));
        }
    }
    Ok((n, field))
}

/// Rewrites the generators in the Frobenius basis of their sum: returns
/// `P`, `P^{-1}` and the conjugates `P^{-1} g P`. Conjugation is a linear
/// bijection between the two commutants, and in this basis the equations
/// are sparse with small entries, which keeps elimination over GF(p)(t)
/// from blowing up.
fn frobenius_basis(gens: &[Mat]) -> Result<(Mat, Mat, Vec<Mat>)> {
    let mut sum = gens[0].clone();
    for g in &gens[1..] {
        sum = &sum + g;
    }
    let fnf = frobenius_normal_form(&sum)?;
    let p_inv = fnf.transform.inverse()?;
    let conj = if gens.len() == 1 {
        vec![fnf.form]
    } else {
        gens.iter()
            .map(|g| &(&p_inv * g) * &fnf.transform)
            .collect()
    };
    Ok((fnf.transform, p_inv, conj))
}

/// Solutions of `X g = g X` for all `g`, as vectors of the `n^2` entries
/// of `X` in row-major order.
fn commutation_nullspace(gens: &[Mat], n: usize, field: FieldSpec) -> Vec<Vec<FieldElem>> {
    let unknowns = n * n;
    let mut rows = Vec::new();
    for g in gens {
        for i in 0..n {
            for j in 0..n {
                let mut eq = vec![field.zero(); unknowns];
                for k in 0..n {
                    let right = &g[(k, j)];
                    if !right.is_zero() {
                        eq[i * n + k] = &eq[i * n + k] + right;
                    }
                    let left = &g[(i, k)];
                    if !left.is_zero() {
                        eq[k * n + j] = &eq[k * n + j] - left;
                    }
                }
                if eq.iter().any(|e| !e.is_zero()) {
                    rows.push(eq);
                }
            }
        }
    }
    let ech = row_reduce(rows, unknowns);
    nullspace_from(&ech, unknowns, field)
}

/// A basis of `{ X : X g = g X for every g in gens }`.
///
/// The `n^2` entries of `X` are the unknowns; each generator contributes
/// the `n^2` equations `(X g - g X)_{ij} = 0`. The system is solved in the
/// Frobenius basis of the sum of the generators and mapped back.
pub fn solve_conjugation_space(gens: &[Mat]) -> Result<Vec<Mat>> {
    let (n, field) = check_generators(gens)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let (p, p_inv, conj) = frobenius_basis(gens)?;
    Ok(commutation_nullspace(&conj, n, field)
        .into_iter()
        .map(|v| {
            let rows = v.chunks(n).map(<[_]>::to_vec).collect();
            let y = Mat::from_rows(field, rows).expect("square by construction");
            &(&p * &y) * &p_inv
        })
        .collect())
}

/// Dimension of the common commutant of `gens`.
pub fn commutant_dim(gens: &[Mat]) -> Result<usize> {
    let (n, field) = check_generators(gens)?;
    if n == 0 {
        return Ok(0);
    }
    let (_, _, conj) = frobenius_basis(gens)?;
    Ok(commutation_nullspace(&conj, n, field).len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_poly;

    fn gf2t() -> FieldSpec {
        FieldSpec::rational_functions(2).unwrap()
    }

    #[test]
    fn everything_commutes_with_zero() {
        let q = FieldSpec::Rationals;
        let basis = solve_conjugation_space(&[Mat::zeros(q, 3, 3)]).unwrap();
        assert_eq!(basis.len(), 9);
        assert_eq!(commutant_dim(&[Mat::identity(q, 4)]).unwrap(), 16);
    }

    #[test]
    fn companion_commutant_is_its_polynomial_algebra() {
        let k = gf2t();
        let c = parse_poly("T^2-t", k).unwrap().companion().unwrap();
        let basis = solve_conjugation_space(std::slice::from_ref(&c)).unwrap();
        assert_eq!(basis.len(), 2);
        for b in &basis {
            assert!(b.commutes_with(&c));
        }
        let a = Mat::block_diag(&[c.clone(), c]).unwrap();
        assert_eq!(commutant_dim(&[a]).unwrap(), 8);
    }

    #[test]
    fn rejects_bad_generators() {
        let q = FieldSpec::Rationals;
        assert!(matches!(
            commutant_dim(&[Mat::zeros(q, 2, 3)]),
            Err(Error::NotSquare { .. })
        ));
        assert!(matches!(
            commutant_dim(&[Mat::zeros(q, 2, 2), Mat::zeros(gf2t(), 2, 2)]),
            Err(Error::FieldMismatch(..))
        ));
        assert!(commutant_dim(&[]).is_err());
    }
}
