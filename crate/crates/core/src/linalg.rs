//! Exact dense linear algebra over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Solves `A x = b` for an `r × c` system with `r ≥ c`, requiring a unique
/// solution. Elimination is fraction-free (Bareiss) on the integer matrix
/// obtained by clearing denominators row by row.
pub fn solve_unique(a: &[Vec<Rational>], b: &[Rational]) -> Result<Vec<Rational>> {
    let rows = a.len();
    if rows != b.len() {
        return Err(Error::validation(format!(
            "{rows} equations but {} right-hand sides",
            b.len()
        )));
    }
    let cols = a.first().map_or(0, |r| r.len());
    if a.iter().any(|r| r.len() != cols) {
        return Err(Error::validation("ragged matrix"));
    }
    let mut m: Vec<Vec<BigInt>> = a.iter().zip(b).map(|(row, rhs)| integer_row(row, rhs)).collect();

    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            return Err(Error::Singular(format!(
                "column {col} has no pivot ({rows}x{cols} system)"
            )));
        };
        m.swap(rank, pivot);
        for r in rank + 1..rows {
            for c in col + 1..=cols {
                let v = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                m[r][c] = v / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    if let Some(r) = (rank..rows).find(|&r| !m[r][cols].is_zero()) {
        return Err(Error::Singular(format!("equation {r} is inconsistent with the others")));
    }
    let mut x = vec![Rational::zero(); cols];
    for i in (0..cols).rev() {
        let mut acc = Rational::from_integer(m[i][cols].clone());
        for j in i + 1..cols {
            acc -= Rational::from_integer(m[i][j].clone()) * &x[j];
        }
        x[i] = acc / Rational::from_integer(m[i][i].clone());
    }
    for (row, rhs) in a.iter().zip(b) {
        let lhs: Rational = row.iter().zip(&x).map(|(u, v)| u * v).sum();
        if &lhs != rhs {
            return Err(Error::Invariant("nonzero residual after exact solve".into()));
        }
    }
    Ok(x)
}

fn integer_row(row: &[Rational], rhs: &Rational) -> Vec<BigInt> {
    let l = row
        .iter()
        .chain(std::iter::once(rhs))
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    row.iter()
        .chain(std::iter::once(rhs))
        .map(|v| v.numer() * (&l / v.denom()))
        .collect()
}

/// Inverse of a square matrix by Gauss–Jordan elimination.
pub fn inverse(a: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return Err(Error::validation("matrix is not square"));
    }
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .ok_or_else(|| Error::Singular("singular matrix".into()))?;
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for v in m[col].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                *v -= &f * p;
            }
        }
    }
    Ok(m.into_iter().map(|r| r[n..].to_vec()).collect())
}
