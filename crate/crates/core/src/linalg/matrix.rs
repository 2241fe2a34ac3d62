use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::semiring::Semiring;

// Below this many multiply-adds a product runs on the calling thread.
const PARALLEL_WORK: usize = 1 << 15;

// Clone and PartialEq are written by hand: derive would bound the marker type.
/// Dense row-major matrix over a semiring.
pub struct Matrix<S: Semiring> {
    rows: usize,
    cols: usize,
    data: Vec<S::Elem>,
}

impl<S: Semiring> Matrix<S> {
    /// Builds a matrix from row-major entries, checking shape and carrier.
    pub fn new(rows: usize, cols: usize, data: Vec<S::Elem>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Domain("matrix dimensions must be positive".into()));
        }
        if data.len() != rows * cols {
            return Err(Error::Domain(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|e| !S::contains(e)) {
            return Err(Error::NotInCarrier {
                semiring: S::id().to_string(),
                value: format!("{bad:?}"),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<S::Elem>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::Domain("ragged rows".into()));
        }
        Self::new(n, m, rows.into_iter().flatten().collect())
    }

    /// Every entry equal to the semiring zero.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::filled(rows, cols, S::zero())
    }

    pub fn filled(rows: usize, cols: usize, value: S::Elem) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Self {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    /// Unit on the diagonal, zero elsewhere.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = S::one();
        }
        m
    }

    /// Column vector with the unit at `index` and zero elsewhere.
    pub fn unit_column(n: usize, index: usize) -> Self {
        let mut m = Self::zeros(n, 1);
        m.data[index] = S::one();
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> S::Elem {
        self.data[i * self.cols + j]
    }

    /// Sets one entry. Panics if `value` is outside the carrier.
    pub fn set(&mut self, i: usize, j: usize, value: S::Elem) {
        assert!(S::contains(&value), "{value:?} is outside the carrier");
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[S::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<S::Elem> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn as_slice(&self) -> &[S::Elem] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<S::Elem> {
        self.data
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j));
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Applies `f` to every entry, producing a matrix over another semiring.
    pub fn map<T: Semiring>(&self, mut f: impl FnMut(S::Elem) -> T::Elem) -> Result<Matrix<T>> {
        Matrix::new(self.rows, self.cols, self.data.iter().map(|&e| f(e)).collect())
    }

    /// Entrywise `⊕`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch {
                op: "add",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| S::add(a, b))
            .collect();
        Ok(Self { data, ..*self })
    }

    /// `(A ⊙ B)_ik = ⊕_j A_ij ⊙ B_jk`.
    ///
    /// Output rows are independent and are computed in parallel for large
    /// products; each entry is always folded left to right, so the result
    /// does not depend on the thread count.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch {
                op: "mul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let (n, m) = (self.rows, other.cols);
        let mut data = vec![S::zero(); n * m];
        let fill_row = |(i, out): (usize, &mut [S::Elem])| {
            let a = self.row(i);
            for (k, slot) in out.iter_mut().enumerate() {
                *slot = a
                    .iter()
                    .enumerate()
                    .fold(S::zero(), |acc, (j, &aij)| S::add(acc, S::mul(aij, other.get(j, k))));
            }
        };
        if n * m * self.cols >= PARALLEL_WORK {
            data.par_chunks_mut(m).enumerate().for_each(fill_row);
        } else {
            data.chunks_mut(m).enumerate().for_each(fill_row);
        }
        Ok(Self {
            rows: n,
            cols: m,
            data,
        })
    }

    /// `λ ⊙ A`, entrywise.
    pub fn scale(&self, lambda: S::Elem) -> Self {
        Self {
            data: self.data.iter().map(|&a| S::mul(lambda, a)).collect(),
            ..*self
        }
    }

    /// Entrywise equality up to [`Semiring::approx_eq`].
    pub fn approx_eq(&self, other: &Self, rel_tol: f64) -> bool {
        self.shape() == other.shape()
            && self
                .data
                .iter()
                .zip(&other.data)
                .all(|(&a, &b)| S::approx_eq(a, b, rel_tol))
    }
}

impl<S: Semiring> Clone for Matrix<S> {
    fn clone(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.clone(),
        }
    }
}

impl<S: Semiring> PartialEq for Matrix<S> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl<S: Semiring> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix<{}> {}x{} [", S::id(), self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(S::format_elem).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
