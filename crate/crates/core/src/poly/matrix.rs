use std::fmt;

use super::multipoly::MultiPoly;
use super::ring::{same_ring, Ring};
use crate::error::{Error, Result};

/// Dense matrix of polynomials over one ring, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn new(ring: &Ring, rows: usize, cols: usize, entries: Vec<MultiPoly>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::invalid("matrix dimensions must be positive"));
        }
        if entries.len() != rows * cols {
            return Err(Error::invalid(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if entries.iter().any(|e| !same_ring(e.ring(), ring)) {
            return Err(Error::RingMismatch("matrix entry over a different ring".into()));
        }
        Ok(PolyMatrix { ring: ring.clone(), rows, cols, entries })
    }

    pub fn from_rows(ring: &Ring, rows: Vec<Vec<MultiPoly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::invalid("ragged rows"));
        }
        Self::new(ring, r, c, rows.into_iter().flatten().collect())
    }

    pub fn identity(ring: &Ring, n: usize) -> Self {
        let entries = (0..n * n)
            .map(|k| if k / n == k % n { MultiPoly::one(ring) } else { MultiPoly::zero(ring) })
            .collect();
        PolyMatrix { ring: ring.clone(), rows: n, cols: n, entries }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[MultiPoly] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[MultiPoly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> PolyMatrix {
        let entries = (0..self.rows * self.cols)
            .map(|k| self.get(k % self.rows, k / self.rows).clone())
            .collect();
        PolyMatrix { ring: self.ring.clone(), rows: self.cols, cols: self.rows, entries }
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::invalid("inner dimensions differ"));
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = MultiPoly::zero(&self.ring);
                for k in 0..self.cols {
                    acc = &acc + &(self.get(i, k) * other.get(k, j));
                }
                entries.push(acc);
            }
        }
        PolyMatrix::new(&self.ring, self.rows, other.cols, entries)
    }

    /// Stacks `top` above `self`.
    pub fn with_row_on_top(&self, top: Vec<MultiPoly>) -> Result<PolyMatrix> {
        if top.len() != self.cols {
            return Err(Error::invalid("row length differs from column count"));
        }
        let mut entries = top;
        entries.extend(self.entries.iter().cloned());
        PolyMatrix::new(&self.ring, self.rows + 1, self.cols, entries)
    }

    fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let entries = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        PolyMatrix { ring: self.ring.clone(), rows: rows.len(), cols: cols.len(), entries }
    }

    /// Exact determinant: cofactor expansion up to 4x4, fraction-free
    /// Bareiss elimination beyond.
    pub fn det(&self) -> Result<MultiPoly> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        if self.rows <= 4 {
            Ok(self.det_cofactor())
        } else {
            self.det_bareiss()
        }
    }

    fn det_cofactor(&self) -> MultiPoly {
        let n = self.rows;
        match n {
            1 => self.entries[0].clone(),
            2 => &(self.get(0, 0) * self.get(1, 1)) - &(self.get(0, 1) * self.get(1, 0)),
            _ => {
                let mut acc = MultiPoly::zero(&self.ring);
                let rest: Vec<usize> = (1..n).collect();
                for j in 0..n {
                    let a = self.get(0, j);
                    if a.is_zero() {
                        continue;
                    }
                    let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
                    let term = a * &self.submatrix(&rest, &cols).det_cofactor();
                    acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
                }
                acc
            }
        }
    }

    /// Bareiss: `m[i][j] <- (m[k][k] m[i][j] - m[i][k] m[k][j]) / prev_pivot`,
    /// every division exact.
    pub(crate) fn det_bareiss(&self) -> Result<MultiPoly> {
        let n = self.rows;
        let mut m: Vec<Vec<MultiPoly>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut sign_flip = false;
        let mut prev = MultiPoly::one(&self.ring);
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                // choose the sparsest nonzero pivot below
                let swap = (k + 1..n)
                    .filter(|&i| !m[i][k].is_zero())
                    .min_by_key(|&i| m[i][k].len());
                match swap {
                    Some(i) => {
                        m.swap(i, k);
                        sign_flip = !sign_flip;
                    }
                    None => return Ok(MultiPoly::zero(&self.ring)),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num.div_exact(&prev)?;
                }
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        Ok(if sign_flip { -d } else { d })
    }

    /// All `k x k` minors, ordered by (row set, column set) lexicographically.
    pub fn minors(&self, k: usize) -> Result<Vec<MultiPoly>> {
        if k == 0 || k > self.rows.min(self.cols) {
            return Err(Error::MinorOutOfRange { k, rows: self.rows, cols: self.cols });
        }
        let row_sets = combinations(self.rows, k);
        let col_sets = combinations(self.cols, k);
        let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
        for rs in &row_sets {
            for cs in &col_sets {
                out.push(self.submatrix(rs, cs).det()?);
            }
        }
        Ok(out)
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
