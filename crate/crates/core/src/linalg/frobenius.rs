//! Frobenius (rational canonical) normal form with a transformation matrix.
//!
//! The construction peels off one cyclic subspace at a time. A vector whose
//! local minimal polynomial equals the minimal polynomial of the operator
//! spans a cyclic subspace `W` with Krylov basis `v, xv, ..., x^{d-1}v`. A
//! functional `l` with `l(x^i v) = 0` for `i < d - 1` and `l(x^{d-1} v) = 1`
//! then cuts out the invariant complement `{u : l(x^j u) = 0, j < d}`, and
//! the procedure recurses on the complement. The polynomials come out as a
//! descending divisor chain, the minimal polynomial first.

use super::echelon::{free_columns, nullspace_from, row_reduce, solve};
use super::Mat;
use crate::error::Result;
use crate::fields::{FieldElem, FieldSpec};
use crate::poly::Poly;

/// `P^{-1} x P = form`, with `form` block-diagonal in the companion matrices
/// of `invariant_factors`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusForm {
    pub form: Mat,
    pub transform: Mat,
    pub invariant_factors: Vec<Poly>,
}

fn unit_vector(field: FieldSpec, n: usize, i: usize) -> Vec<FieldElem> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

fn add_vec(a: &[FieldElem], b: &[FieldElem]) -> Vec<FieldElem> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `g(a) v` by Horner's rule, without forming `g(a)`.
pub(crate) fn apply_poly(g: &Poly, a: &Mat, v: &[FieldElem]) -> Vec<FieldElem> {
    let field = a.field();
    let mut acc = vec![field.zero(); v.len()];
    for c in g.coeffs().iter().rev() {
        acc = a.mul_vec(&acc);
        if !c.is_zero() {
            for (x, y) in acc.iter_mut().zip(v) {
                *x = &*x + &(c * y);
            }
        }
    }
    acc
}

/// The monic polynomial of least degree annihilating `v` under `a`.
pub fn krylov_min_poly(a: &Mat, v: &[FieldElem]) -> Poly {
    let field = a.field();
    // Each entry: reduced vector, its pivot, and its expression in terms of
    // the Krylov vectors w_0, w_1, ...
    let mut basis: Vec<(Vec<FieldElem>, usize, Vec<FieldElem>)> = Vec::new();
    let mut w = v.to_vec();
    for j in 0..=v.len() {
        let mut r = w.clone();
        let mut comb = vec![field.zero(); j + 1];
        comb[j] = field.one();
        for (b, pivot, bc) in &basis {
            if r[*pivot].is_zero() {
                continue;
            }
            let factor = r[*pivot].clone();
            for (x, y) in r.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x = &*x - &(&factor * y);
                }
            }
            for (x, y) in comb.iter_mut().zip(bc) {
                if !y.is_zero() {
                    *x = &*x - &(&factor * y);
                }
            }
        }
        match r
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .min_by_key(|(_, e)| e.cost())
        {
            None => return Poly::from_coeffs(field, comb),
            Some((pivot, e)) => {
                let inv = e.inv().expect("nonzero");
                let r = r.iter().map(|x| x * &inv).collect();
                let comb = comb.iter().map(|x| x * &inv).collect();
                basis.push((r, pivot, comb));
            }
        }
        w = a.mul_vec(&w);
    }
    unreachable!("Krylov sequence longer than the dimension")
}

/// Coprime `(a1, b1)` with `a1 | a`, `b1 | b` and `a1 * b1 = lcm(a, b)`.
fn coprime_split(a: &Poly, b: &Poly) -> Result<(Poly, Poly)> {
    let g = a.gcd(b)?;
    let mut a1 = a.clone();
    let mut b1 = b.div_rem(&g)?.0;
    loop {
        let h = a1.gcd(&b1)?;
        if h.is_one() {
            return Ok((a1, b1));
        }
        a1 = a1.div_rem(&h)?.0;
        b1 = &b1 * &h;
    }
}

/// A vector whose local minimal polynomial is the minimal polynomial of `a`,
/// together with that polynomial.
pub(crate) fn max_order_vector(a: &Mat) -> Result<(Vec<FieldElem>, Poly)> {
    let n = a.rows();
    let field = a.field();
    let mut v = unit_vector(field, n, 0);
    let mut mu = krylov_min_poly(a, &v);
    for i in 1..n {
        if mu.degree() == Some(n) {
            break;
        }
        let e = unit_vector(field, n, i);
        if apply_poly(&mu, a, &e).iter().all(FieldElem::is_zero) {
            continue;
        }
        let nu = krylov_min_poly(a, &e);
        let (a1, b1) = coprime_split(&mu, &nu)?;
        let w = apply_poly(&mu.div_rem(&a1)?.0, a, &v);
        let z = apply_poly(&nu.div_rem(&b1)?.0, a, &e);
        v = add_vec(&w, &z);
        mu = &a1 * &b1;
    }
    Ok((v, mu))
}

/// Minimal polynomial of a square matrix (its first invariant factor).
pub fn minimal_polynomial(x: &Mat) -> Result<Poly> {
    let n = x.require_square()?;
    if n == 0 {
        return Ok(Poly::one(x.field()));
    }
    Ok(max_order_vector(x)?.1)
}

/// Block-diagonal matrix of companion matrices, in order.
pub fn companion_blocks(polys: &[Poly]) -> Result<Mat> {
    let blocks = polys
        .iter()
        .map(Poly::companion)
        .collect::<Result<Vec<_>>>()?;
    Mat::block_diag(&blocks)
}

pub fn frobenius_normal_form(x: &Mat) -> Result<FrobeniusForm> {
    let n = x.require_square()?;
    let field = x.field();
    let mut current = x.clone();
    let mut embed = Mat::identity(field, n);
    let mut columns: Vec<Vec<FieldElem>> = Vec::with_capacity(n);
    let mut factors = Vec::new();

    while current.rows() > 0 {
        let k = current.rows();
        let (v, mu) = max_order_vector(&current)?;
        let d = mu.degree().expect("minimal polynomial is nonzero");
        let mut krylov = Vec::with_capacity(d);
        let mut w = v;
        for _ in 0..d {
            let next = current.mul_vec(&w);
            krylov.push(w);
            w = next;
        }
        columns.extend(krylov.iter().map(|kv| embed.mul_vec(kv)));
        factors.push(mu);
        if d == k {
            break;
        }

        let basis = Mat::from_columns(field, k, &krylov);
        let target = Mat::column(field, unit_vector(field, d, d - 1));
        let functional = solve(&basis.transpose(), &target)?.col(0);

        // Rows l, l x, ..., l x^{d-1}; row vector times matrix via transpose.
        let current_t = current.transpose();
        let mut rows = Vec::with_capacity(d);
        let mut r = functional;
        for _ in 0..d {
            let next = current_t.mul_vec(&r);
            rows.push(r);
            r = next;
        }
        let ech = row_reduce(rows, k);
        let complement = Mat::from_columns(field, k, &nullspace_from(&ech, k, field));
        let free = free_columns(&ech, k);
        // The complement basis is the identity on the free rows, so the
        // restricted operator is read off those rows of current * U.
        let image = &current * &complement;
        let mut restricted = Mat::zeros(field, free.len(), free.len());
        for (i, &row) in free.iter().enumerate() {
            for j in 0..free.len() {
                restricted[(i, j)] = image[(row, j)].clone();
            }
        }
        embed = &embed * &complement;
        current = restricted;
    }

    let transform = Mat::from_columns(field, n, &columns);
    let form = if factors.is_empty() {
        Mat::zeros(field, 0, 0)
    } else {
        companion_blocks(&factors)?
    };
    Ok(FrobeniusForm {
        form,
        transform,
        invariant_factors: factors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_matrix, parse_poly};

    fn check(x: &Mat) -> FrobeniusForm {
        let fnf = frobenius_normal_form(x).unwrap();
        let p_inv = fnf.transform.inverse().unwrap();
        assert_eq!(&(&p_inv * x) * &fnf.transform, fnf.form);
        for pair in fnf.invariant_factors.windows(2) {
            assert!(pair[1].divides(&pair[0]).unwrap());
        }
        fnf
    }

    #[test]
    fn rotation_over_q() {
        let q = FieldSpec::Rationals;
        let x = Mat::from_i64(q, &[&[0, -1], &[1, 0]]);
        let fnf = check(&x);
        assert_eq!(fnf.invariant_factors, vec![parse_poly("T^2+1", q).unwrap()]);
        assert_eq!(
            fnf.form,
            parse_poly("T^2+1", q).unwrap().companion().unwrap()
        );
    }

    #[test]
    fn already_in_normal_form() {
        let k = FieldSpec::rational_functions(2).unwrap();
        let f = parse_poly("T^2-t", k).unwrap();
        let x = companion_blocks(&[f.pow(2), f.clone()]).unwrap();
        let fnf = check(&x);
        assert_eq!(fnf.form, x);
        assert_eq!(fnf.invariant_factors, vec![f.pow(2), f]);
    }

    #[test]
    fn scalar_and_mixed_matrices() {
        let q = FieldSpec::Rationals;
        let fnf = check(&Mat::identity(q, 3));
        assert_eq!(fnf.invariant_factors.len(), 3);
        let x = Mat::from_i64(
            q,
            &[&[2, 1, 0, 0], &[0, 2, 0, 0], &[0, 0, 2, 0], &[0, 0, 0, 3]],
        );
        let fnf = check(&x);
        let expected = vec![
            parse_poly("(T-2)^2*(T-3)", q).unwrap(),
            parse_poly("T-2", q).unwrap(),
        ];
        assert_eq!(fnf.invariant_factors, expected);
    }

    #[test]
    fn minimal_polynomial_of_block_matrix() {
        let k = FieldSpec::prime_field(3).unwrap();
        let x = parse_matrix("[[1,1,0],[0,1,0],[0,0,2]]", k).unwrap();
        assert_eq!(
            minimal_polynomial(&x).unwrap(),
            parse_poly("(T-1)^2*(T-2)", k).unwrap()
        );
        check(&x);
    }
}
