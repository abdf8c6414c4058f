//! Dense linear algebra for invertibility certificates: rank over rational
//! functions and fraction-free (Bareiss) determinants over Laurent
//! polynomials.

use crate::arith::{LaurentPoly, RatFn};
use crate::error::{Error, Result};

/// Rank by Gaussian elimination over the rational-function field.
pub fn rank(mut m: Vec<Vec<RatFn>>) -> Result<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let piv = m[r][c].inv()?;
        let pivot_row = m[r].clone();
        for row in m[r + 1..].iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].try_mul(&piv)?;
            for (x, y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                *x = x.try_sub(&f.try_mul(y)?)?.reduced();
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    Ok(r)
}

/// Determinant of a square matrix by Bareiss elimination with row swaps.
/// Every intermediate division is exact.
pub fn det_bareiss(mut m: Vec<Vec<LaurentPoly>>) -> Result<LaurentPoly> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidOperator("determinant of a non-square matrix".into()));
    }
    let Some(ctx) = m.first().map(|r| r[0].ctx().clone()) else {
        return Err(Error::InvalidDimension(0));
    };
    let mut sign = false;
    let mut prev = LaurentPoly::one(&ctx);
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return Ok(LaurentPoly::zero(&ctx));
        };
        if p != k {
            m.swap(p, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[i][j].try_mul(&m[k][k])?.try_sub(&m[i][k].try_mul(&m[k][j])?)?;
                m[i][j] = t
                    .div_exact(&prev)
                    .ok_or_else(|| Error::InvalidOperator("inexact Bareiss step".into()))?;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if sign { -&d } else { d })
}
