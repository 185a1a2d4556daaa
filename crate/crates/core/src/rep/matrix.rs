use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalars::{BigRational, Poly, RationalFunction};

/// Dense row-major matrix over ℚ(q). Zero-sized shapes are allowed and
/// stand for maps to or from the zero space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<RationalFunction>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![RationalFunction::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, RationalFunction::one());
        }
        m
    }

    /// Builds a matrix from rows; `cols` fixes the width when there are no
    /// rows.
    pub fn from_rows(rows: Vec<Vec<RationalFunction>>, cols: usize) -> Result<Matrix> {
        let r = rows.len();
        if rows.iter().any(|row| row.len() != cols) {
            return Err(Error::InvalidRepresentation(format!(
                "ragged matrix: expected {cols} entries per row"
            )));
        }
        Ok(Matrix {
            rows: r,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| RationalFunction::from_int(x)).collect())
                .collect(),
            cols,
        )
        .expect("rectangular")
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

    pub fn get(&self, r: usize, c: usize) -> &RationalFunction {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: RationalFunction) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_at(&mut self, r: usize, c: usize, v: &RationalFunction) {
        self.data[r * self.cols + c] += v;
    }

    pub fn row(&self, r: usize) -> &[RationalFunction] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<RationalFunction> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<RationalFunction>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn map(&self, f: impl Fn(&RationalFunction) -> RationalFunction) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map(
        &self,
        f: impl Fn(&RationalFunction) -> Result<RationalFunction>,
    ) -> Result<Matrix> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn checked_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::InvalidRepresentation(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.add_at(i, j, &(a * b));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Columns side by side; both operands need the same row count.
    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows, "hstack needs equal row counts");
        let mut out = Matrix::zeros(self.rows, self.cols + rhs.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..rhs.cols {
                out.set(r, self.cols + c, rhs.get(r, c).clone());
            }
        }
        out
    }

    /// Block-diagonal sum.
    pub fn block_diag(&self, rhs: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows + rhs.rows, self.cols + rhs.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
        }
        for r in 0..rhs.rows {
            for c in 0..rhs.cols {
                out.set(self.rows + r, self.cols + c, rhs.get(r, c).clone());
            }
        }
        out
    }

    /// Rank over ℚ(q) by fraction-free (Bareiss) elimination over ℚ[q]
    /// after clearing the denominators of each row.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<Poly>> = (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let den = row.iter().fold(Poly::one(), |acc, x| acc.lcm(x.denom()));
                row.iter()
                    .map(|x| (x.numer() * &den).div_exact(x.denom()))
                    .collect()
            })
            .collect();
        bareiss_rank(&mut m, self.cols)
    }

    /// Basis of the column space, as the pivot columns of `self`.
    pub fn column_basis(&self) -> Matrix {
        let pivots = pivot_columns(self);
        let mut out = Matrix::zeros(self.rows, pivots.len());
        for (k, &c) in pivots.iter().enumerate() {
            for r in 0..self.rows {
                out.set(r, k, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn specialize(&self, q0: &BigRational) -> Result<Matrix> {
        self.try_map(|x| x.specialize_const(q0))
    }
}

fn bareiss_rank(m: &mut [Vec<Poly>], cols: usize) -> usize {
    let rows = m.len();
    let mut prev = Poly::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let v = &(&m[rank][c] * &m[r][k]) - &(&m[r][c] * &m[rank][k]);
                m[r][k] = v.div_exact(&prev);
            }
            m[r][c] = Poly::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    rank
}

/// Pivot columns of the row echelon form, by Gaussian elimination over the
/// field ℚ(q).
fn pivot_columns(a: &Matrix) -> Vec<usize> {
    let mut m = a.to_rows();
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(p) = (row..a.rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][c].inv().expect("nonzero pivot");
        for r in row + 1..a.rows {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] * &inv;
            for k in c..a.cols {
                let v = &m[r][k] - &(&f * &m[row][k]);
                m[r][k] = v;
            }
        }
        pivots.push(c);
        row += 1;
    }
    pivots
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).expect("matrix shapes agree")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|r| self.row(r).iter().map(ToString::to_string).collect())
            .collect();
        let width = cells
            .iter()
            .flatten()
            .map(|s| s.chars().count())
            .max()
            .unwrap_or(0);
        if self.rows == 0 {
            return write!(f, "[0x{}]", self.cols);
        }
        for (i, row) in cells.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let padded: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            write!(f, "[{}]", padded.join(" "))?;
        }
        Ok(())
    }
}
