//! Dense exact linear algebra over the rationals.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Rational;

pub type RatMatrix = Vec<Vec<Rational>>;

pub fn identity(n: usize) -> RatMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect()
}

pub fn is_square(m: &RatMatrix) -> bool {
    m.iter().all(|row| row.len() == m.len())
}

pub fn is_symmetric(m: &RatMatrix) -> bool {
    is_square(m) && (0..m.len()).all(|i| (0..i).all(|j| m[i][j] == m[j][i]))
}

pub fn transpose(m: &RatMatrix) -> RatMatrix {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect()
}

pub fn mat_mul(a: &RatMatrix, b: &RatMatrix) -> Result<RatMatrix> {
    let inner = a.first().map_or(0, Vec::len);
    if inner != b.len() {
        return Err(Error::invalid("inner dimensions differ"));
    }
    let cols = b.first().map_or(0, Vec::len);
    Ok(a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| row.iter().zip(b).fold(Rational::zero(), |acc, (x, brow)| acc + x * &brow[j]))
                .collect()
        })
        .collect())
}

pub fn mat_vec(a: &RatMatrix, v: &[Rational]) -> Vec<Rational> {
    a.iter()
        .map(|row| row.iter().zip(v).fold(Rational::zero(), |acc, (x, y)| acc + x * y))
        .collect()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Row echelon form by Gaussian elimination; returns the determinant sign
/// and pivot product alongside the rank.
fn eliminate(mut m: RatMatrix) -> (RatMatrix, usize, Rational) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut det = Rational::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            det = Rational::zero();
            continue;
        };
        if p != r {
            m.swap(p, r);
            det = -det;
        }
        let pivot = m[r][c].clone();
        det *= &pivot;
        for i in r + 1..rows {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &pivot;
            let (above, below) = m.split_at_mut(i);
            let (pivot_row, row) = (&above[r], &mut below[0]);
            for (x, p) in row[c..cols].iter_mut().zip(&pivot_row[c..cols]) {
                *x -= &f * p;
            }
        }
        r += 1;
    }
    (m, r, det)
}

pub fn rank(m: &RatMatrix) -> usize {
    eliminate(m.clone()).1
}

pub fn det(m: &RatMatrix) -> Result<Rational> {
    if !is_square(m) {
        return Err(Error::NotSquare { rows: m.len(), cols: m.first().map_or(0, Vec::len) });
    }
    let n = m.len();
    let (_, r, d) = eliminate(m.clone());
    Ok(if r < n { Rational::zero() } else { d })
}

/// Solves `a x = b` for square invertible `a`.
pub fn solve(a: &RatMatrix, b: &[Rational]) -> Result<Vec<Rational>> {
    let n = a.len();
    if !is_square(a) || b.len() != n {
        return Err(Error::invalid("solve needs a square system"));
    }
    let aug: RatMatrix = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (m, r, _) = eliminate(aug);
    if r < n || (0..n).any(|i| m[i][i].is_zero()) {
        return Err(Error::Degenerate("singular linear system".into()));
    }
    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = m[i][n].clone();
        for j in i + 1..n {
            acc -= &m[i][j] * &x[j];
        }
        x[i] = acc / &m[i][i];
    }
    Ok(x)
}

pub fn inverse(a: &RatMatrix) -> Result<RatMatrix> {
    let n = a.len();
    let cols: Vec<Vec<Rational>> = (0..n)
        .map(|j| {
            let e: Vec<Rational> = (0..n).map(|i| if i == j { Rational::one() } else { Rational::zero() }).collect();
            solve(a, &e)
        })
        .collect::<Result<_>>()?;
    Ok(transpose(&cols))
}
