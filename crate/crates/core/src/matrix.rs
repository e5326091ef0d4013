//! Dense matrices over [`Rational`] with exact inversion.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use crate::algebra::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl SmallMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
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

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (i..self.cols).all(|j| self[(i, j)] == -&self[(j, i)]))
    }

    /// Exact inverse by Gauss–Jordan elimination with full pivoting.
    /// `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        // col_of[k]: which original column the k-th pivot ended up eliminating
        let mut col_perm: Vec<usize> = (0..n).collect();
        for k in 0..n {
            let (pr, pc) = (k..n)
                .flat_map(|r| (k..n).map(move |c| (r, c)))
                .find(|&(r, c)| !a[(r, c)].is_zero())?;
            a.swap_rows(k, pr);
            inv.swap_rows(k, pr);
            if pc != k {
                a.swap_cols(k, pc);
                col_perm.swap(k, pc);
            }
            let p = a[(k, k)].recip().expect("pivot is nonzero");
            a.scale_row(k, &p);
            inv.scale_row(k, &p);
            for r in 0..n {
                if r == k || a[(r, k)].is_zero() {
                    continue;
                }
                let f = a[(r, k)].clone();
                a.sub_row_multiple(r, k, &f);
                inv.sub_row_multiple(r, k, &f);
            }
        }
        // Column swaps of A permute the rows of A^{-1}.
        let mut out = Self::zeros(n, n);
        for (k, &orig) in col_perm.iter().enumerate() {
            for c in 0..n {
                out[(orig, c)] = inv[(k, c)].clone();
            }
        }
        Some(out)
    }

    pub fn determinant(&self) -> Rational {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Rational::one();
        for k in 0..n {
            let Some(pr) = (k..n).find(|&r| !a[(r, k)].is_zero()) else {
                return Rational::zero();
            };
            if pr != k {
                a.swap_rows(k, pr);
                det = -det;
            }
            let p = a[(k, k)].clone();
            det *= &p;
            let p_inv = p.recip().expect("pivot is nonzero");
            for r in (k + 1)..n {
                if a[(r, k)].is_zero() {
                    continue;
                }
                let f = &a[(r, k)] * &p_inv;
                a.sub_row_multiple(r, k, &f);
            }
        }
        det
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    fn scale_row(&mut self, r: usize, f: &Rational) {
        for c in 0..self.cols {
            self[(r, c)] *= f;
        }
    }

    /// `row[target] -= f * row[source]`
    fn sub_row_multiple(&mut self, target: usize, source: usize, f: &Rational) {
        for c in 0..self.cols {
            let d = &self[(source, c)] * f;
            self[(target, c)] -= &d;
        }
    }

    /// Entries as exact strings, row by row.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self[(r, c)].to_string()).collect())
            .collect()
    }
}

impl Index<(usize, usize)> for SmallMatrix {
    type Output = Rational;

    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for SmallMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl Mul for &SmallMatrix {
    type Output = SmallMatrix;

    fn mul(self, rhs: &SmallMatrix) -> SmallMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        SmallMatrix::from_fn(self.rows, rhs.cols, |r, c| {
            (0..self.cols)
                .filter(|&k| !self[(r, k)].is_zero() && !rhs[(k, c)].is_zero())
                .map(|k| &self[(r, k)] * &rhs[(k, c)])
                .sum()
        })
    }
}

impl fmt::Display for SmallMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_strings() {
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

pub(crate) fn shape_error(what: &str, expected: (usize, usize), got: (usize, usize)) -> Error {
    Error::Input(format!(
        "{what}: expected {}x{} matrix, got {}x{}",
        expected.0, expected.1, got.0, got.1
    ))
}

pub(crate) fn ensure_shape(what: &str, m: &SmallMatrix, rows: usize, cols: usize) -> Result<()> {
    if m.rows != rows || m.cols != cols {
        return Err(shape_error(what, (rows, cols), (m.rows, m.cols)));
    }
    Ok(())
}
