//! Internal dense-matrix helpers: fraction-free determinants over the
//! integers and over the Laurent ring, and exact symmetric signature.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// Determinant of an integer matrix by fraction-free (Bareiss) elimination.
pub fn det_int(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Determinant over the Laurent ring by the same fraction-free scheme; every
/// interior division is exact by construction.
pub fn det_laurent(rows: &[Vec<LaurentPoly>]) -> Result<LaurentPoly> {
    let n = rows.len();
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let mut a: Vec<Vec<LaurentPoly>> = rows.to_vec();
    let mut negate = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(LaurentPoly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_div(&prev)?;
            }
            a[i][k] = LaurentPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Signature of a symmetric integer matrix via congruent diagonalization over
/// the rationals. Errors if the matrix is singular.
pub fn symmetric_signature(rows: &[Vec<BigInt>]) -> Result<i64> {
    let n = rows.len();
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from(x.clone())).collect())
        .collect();
    let mut signature = 0i64;
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                swap_sym(&mut a, k, j);
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // Zero diagonal block: fold row/column j into k, giving
                // a[k][k] = 2*a[k][j] != 0.
                for i in 0..n {
                    let v = a[j][i].clone();
                    a[k][i] += v;
                }
                for i in 0..n {
                    let v = a[i][j].clone();
                    a[i][k] += v;
                }
            } else {
                return Err(Error::NotUnimodularPairing(
                    "singular symmetric form".into(),
                ));
            }
        }
        let pivot = a[k][k].clone();
        signature += if pivot.is_positive() { 1 } else { -1 };
        for i in k + 1..n {
            let f = &a[i][k] / &pivot;
            if f.is_zero() {
                continue;
            }
            for j in 0..n {
                let v = &a[k][j] * &f;
                a[i][j] -= v;
            }
            for j in 0..n {
                let v = &a[j][k] * &f;
                a[j][i] -= v;
            }
        }
    }
    Ok(signature)
}

fn swap_sym(a: &mut [Vec<BigRational>], i: usize, j: usize) {
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

/// P * V * P^T for square integer matrices of equal size.
pub fn congruence(p: &[Vec<BigInt>], v: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = v.len();
    let mut pv = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = BigInt::zero();
            for (k, pk) in p[i].iter().enumerate() {
                acc += pk * &v[k][j];
            }
            pv[i][j] = acc;
        }
    }
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = BigInt::zero();
            for (k, pk) in p[j].iter().enumerate() {
                acc += &pv[i][k] * pk;
            }
            out[i][j] = acc;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    /// Cofactor-expansion determinant, the independent oracle for Bareiss.
    fn det_cofactor(rows: &[Vec<BigInt>]) -> BigInt {
        let n = rows.len();
        if n == 0 {
            return BigInt::one();
        }
        if n == 1 {
            return rows[0][0].clone();
        }
        let mut acc = BigInt::zero();
        for j in 0..n {
            if rows[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<BigInt>> = rows[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != j)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let term = &rows[0][j] * det_cofactor(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn bareiss_matches_cofactor_oracle() {
        let cases = [
            m(&[&[2]]),
            m(&[&[0, 1], &[-1, 0]]),
            m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]),
            m(&[&[0, 0, 1], &[0, 2, 0], &[3, 0, 0]]),
            m(&[&[2, -1, 0, 3], &[1, 1, 1, 1], &[0, 5, -2, 2], &[7, 0, 0, 1]]),
        ];
        for c in cases {
            assert_eq!(det_int(&c), det_cofactor(&c));
        }
    }

    #[test]
    fn laurent_det_two_by_two() {
        let t = LaurentPoly::t();
        let one = LaurentPoly::one();
        // det [[t, 1], [1, 1]] = t - 1
        let rows = vec![vec![t.clone(), one.clone()], vec![one.clone(), one.clone()]];
        assert_eq!(det_laurent(&rows).unwrap(), &t - &one);
    }

    #[test]
    fn signature_definite_and_indefinite() {
        assert_eq!(symmetric_signature(&m(&[&[-2, 1], &[1, -2]])).unwrap(), -2);
        assert_eq!(symmetric_signature(&m(&[&[2, 1], &[1, -2]])).unwrap(), 0);
        assert_eq!(symmetric_signature(&m(&[&[0, 1], &[1, 0]])).unwrap(), 0);
        assert_eq!(symmetric_signature(&m(&[&[0, 1], &[1, 2]])).unwrap(), 0);
    }
}
