use std::fmt;

use crate::error::{Error, Result};

use super::bound::{self, check_i};

/// Dense row-major matrix of exact integers within the magnitude bound.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i128>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<i128>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::LengthMismatch { expected: rows * cols, got: data.len() });
        }
        for &v in &data {
            check_i(v)?;
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn diagonal(diag: &[i128]) -> Result<Self> {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = check_i(d)?;
        }
        Ok(m)
    }

    /// Builds a matrix from row vectors; all rows must share one length.
    pub fn from_rows<R: AsRef<[i128]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::LengthMismatch { expected: cols, got: r.len() });
            }
            data.extend_from_slice(r);
        }
        Self::new(rows.len(), cols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[i128] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<i128>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)] == 0))
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|i| (0..i.min(self.cols)).all(|j| self[(i, j)] == 0))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::LengthMismatch { expected: self.cols, got: rhs.rows });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = 0i128;
                for k in 0..self.cols {
                    acc = bound::add(acc, bound::mul(self[(i, k)], rhs[(k, j)])?)?;
                }
                out[(i, j)] = acc;
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn left_mul_vec(&self, v: &[i128]) -> Result<Vec<i128>> {
        if v.len() != self.rows {
            return Err(Error::LengthMismatch { expected: self.rows, got: v.len() });
        }
        let mut out = vec![0i128; self.cols];
        for (i, &vi) in v.iter().enumerate() {
            if vi == 0 {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = bound::add(*o, bound::mul(vi, self[(i, j)])?)?;
            }
        }
        Ok(out)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += factor * row[src]`
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, factor: i128) -> Result<()> {
        if factor == 0 {
            return Ok(());
        }
        for j in 0..self.cols {
            let v = bound::add(self[(dst, j)], bound::mul(factor, self[(src, j)])?)?;
            self[(dst, j)] = v;
        }
        Ok(())
    }

    /// `col[dst] += factor * col[src]`
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, factor: i128) -> Result<()> {
        if factor == 0 {
            return Ok(());
        }
        for i in 0..self.rows {
            let v = bound::add(self[(i, dst)], bound::mul(factor, self[(i, src)])?)?;
            self[(i, dst)] = v;
        }
        Ok(())
    }

    pub fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            self[(i, j)] = -self[(i, j)];
        }
    }

    pub fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            self[(i, j)] = -self[(i, j)];
        }
    }

    /// Exact `|det|` by fraction-free (Bareiss) elimination.
    pub fn abs_det(&self) -> Result<u128> {
        if !self.is_square() {
            return Err(Error::InvalidParams(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(1);
        }
        let mut m = self.clone();
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if m[(k, k)] == 0 {
                match (k + 1..n).find(|&i| m[(i, k)] != 0) {
                    Some(i) => m.swap_rows(i, k),
                    None => return Ok(0),
                }
            }
            let pivot = m[(k, k)];
            for i in k + 1..n {
                for j in k + 1..n {
                    let a = bound::mul(m[(i, j)], pivot)?;
                    let b = bound::mul(m[(i, k)], m[(k, j)])?;
                    // Sylvester's identity makes this division exact.
                    m[(i, j)] = bound::sub(a, b)? / prev;
                }
                m[(i, k)] = 0;
            }
            prev = pivot;
        }
        Ok(m[(n - 1, n - 1)].unsigned_abs())
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i128;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &i128 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i128 {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
