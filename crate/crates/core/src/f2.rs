//! Dense linear algebra over F₂ on bit-packed rows.

use std::fmt;

use crate::bits::{BitVec, MAX_BITS};
use crate::error::{Error, Result};

/// A dense matrix over F₂, one [`BitVec`] per row.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    n_cols: usize,
    rows: Vec<BitVec>,
}

impl F2Matrix {
    pub fn zeros(n_rows: usize, n_cols: usize) -> Result<Self> {
        check_cols(n_cols)?;
        Ok(Self {
            n_cols,
            rows: vec![BitVec::zeros(n_cols); n_rows],
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::zeros(n, n)?;
        for i in 0..n {
            m.rows[i].set(i);
        }
        Ok(m)
    }

    /// Block-diagonal sum of `k` copies of the 2×2 swap matrix `[[0,1],[1,0]]`.
    pub fn swap_blocks(k: usize) -> Result<Self> {
        let mut m = Self::zeros(2 * k, 2 * k)?;
        for i in 0..k {
            m.rows[2 * i].set(2 * i + 1);
            m.rows[2 * i + 1].set(2 * i);
        }
        Ok(m)
    }

    /// Builds a matrix from rows that must all have length `n_cols`.
    pub fn from_rows(n_cols: usize, rows: Vec<BitVec>) -> Result<Self> {
        check_cols(n_cols)?;
        if let Some(bad) = rows.iter().find(|r| r.len() != n_cols) {
            return Err(Error::SizeMismatch {
                expected: n_cols,
                actual: bad.len(),
            });
        }
        Ok(Self { n_cols, rows })
    }

    /// Builds a matrix from 0/1 rows given as nested slices.
    pub fn from_bits(n_cols: usize, bits: &[Vec<u8>]) -> Result<Self> {
        let rows = bits
            .iter()
            .map(|r| {
                if r.len() != n_cols {
                    return Err(Error::SizeMismatch {
                        expected: n_cols,
                        actual: r.len(),
                    });
                }
                Ok(BitVec::from_indices(
                    n_cols,
                    r.iter()
                        .enumerate()
                        .filter(|(_, b)| **b != 0)
                        .map(|(i, _)| i),
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(n_cols, rows)
    }

    #[inline]
    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.rows[r].assign(c, value)
    }

    pub fn row(&self, r: usize) -> &BitVec {
        &self.rows[r]
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut rows = vec![BitVec::zeros(self.n_rows()); self.n_cols];
        for (r, row) in self.rows.iter().enumerate() {
            for c in row.ones_iter() {
                rows[c].set(r);
            }
        }
        F2Matrix {
            n_cols: self.n_rows(),
            rows,
        }
    }

    /// Matrix product over F₂.
    pub fn mul(&self, other: &F2Matrix) -> Result<F2Matrix> {
        if self.n_cols != other.n_rows() {
            return Err(Error::SizeMismatch {
                expected: self.n_cols,
                actual: other.n_rows(),
            });
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc = BitVec::zeros(other.n_cols);
                for k in row.ones_iter() {
                    acc.xor_assign(&other.rows[k]);
                }
                acc
            })
            .collect();
        Ok(F2Matrix {
            n_cols: other.n_cols,
            rows,
        })
    }

    /// Submatrix formed by the listed rows, in the given order.
    pub fn select_rows(&self, indices: &[usize]) -> Result<F2Matrix> {
        let rows = indices
            .iter()
            .map(|&i| {
                self.rows.get(i).cloned().ok_or(Error::IndexOutOfRange {
                    index: i,
                    size: self.n_rows(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(F2Matrix {
            n_cols: self.n_cols,
            rows,
        })
    }

    /// Dimension of the row space.
    pub fn rank(&self) -> usize {
        rank_of_rows(self.rows.clone())
    }

    /// Basis of the left null space `{x : xᵀ·M = 0}`, in reduced echelon form.
    ///
    /// Vectors have length `n_rows`; the basis is sorted by pivot (lowest set
    /// bit) and every pivot column is zero in all other basis vectors, so the
    /// output depends only on the null space itself.
    pub fn kernel_basis(&self) -> Vec<BitVec> {
        let n = self.n_rows();
        // Each working row carries its combination of original rows.
        let mut work: Vec<(BitVec, BitVec)> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), BitVec::from_indices(n, [i])))
            .collect();
        let mut rank = 0;
        for col in 0..self.n_cols {
            let Some(p) = (rank..n).find(|&i| work[i].0.get(col)) else {
                continue;
            };
            work.swap(rank, p);
            let (pivot_row, pivot_combo) = work[rank].clone();
            for (i, (row, combo)) in work.iter_mut().enumerate() {
                if i != rank && row.get(col) {
                    row.xor_assign(&pivot_row);
                    combo.xor_assign(&pivot_combo);
                }
            }
            rank += 1;
        }
        let kernel: Vec<BitVec> = work
            .into_iter()
            .skip(rank)
            .map(|(_, combo)| combo)
            .collect();
        reduced_echelon(kernel)
    }

    /// Whether the rows indexed by `subset` are linearly independent.
    pub fn rows_independent(&self, subset: &[usize]) -> Result<bool> {
        let sub = self.select_rows(subset)?;
        Ok(sub.rank() == subset.len())
    }

    /// Indices of a basis of the row space: the first row (in index order)
    /// that is independent of all earlier chosen rows.
    pub fn row_basis(&self) -> Vec<usize> {
        let mut basis = Vec::new();
        // Reduced rows keyed by pivot column.
        let mut pivots: Vec<(usize, BitVec)> = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            let mut r = row.clone();
            for (col, p) in &pivots {
                if r.get(*col) {
                    r.xor_assign(p);
                }
            }
            if let Some(col) = r.first_one() {
                pivots.push((col, r));
                basis.push(i);
            }
        }
        basis
    }
}

fn check_cols(n_cols: usize) -> Result<()> {
    if n_cols > MAX_BITS {
        Err(Error::TooLarge(n_cols))
    } else {
        Ok(())
    }
}

pub(crate) fn rank_of_rows(mut rows: Vec<BitVec>) -> usize {
    let mut rank = 0;
    let n = rows.len();
    let n_cols = rows.first().map_or(0, BitVec::len);
    for col in 0..n_cols {
        if rank == n {
            break;
        }
        let Some(p) = (rank..n).find(|&i| rows[i].get(col)) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for row in rows[rank + 1..].iter_mut() {
            if row.get(col) {
                row.xor_assign(&pivot);
            }
        }
        rank += 1;
    }
    rank
}

/// Reduced row echelon form of a set of vectors, zero rows dropped.
pub(crate) fn reduced_echelon(mut rows: Vec<BitVec>) -> Vec<BitVec> {
    let n_cols = rows.first().map_or(0, BitVec::len);
    let mut rank = 0;
    for col in 0..n_cols {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i].get(col)) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row.get(col) {
                row.xor_assign(&pivot);
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rows
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix {}x{}", self.n_rows(), self.n_cols)?;
        for row in &self.rows {
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}
