use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{LinError, SparseRow};

/// Integer matrix stored as sparse rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    cols: usize,
    rows: Vec<SparseRow>,
}

impl IntMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        IntMatrix {
            cols: ncols,
            rows: vec![SparseRow::new(); nrows],
        }
    }

    pub fn identity(n: usize) -> Self {
        IntMatrix {
            cols: n,
            rows: (0..n).map(SparseRow::unit).collect(),
        }
    }

    /// Panics if a row has an entry at or beyond `ncols`.
    pub fn from_rows(ncols: usize, rows: Vec<SparseRow>) -> Self {
        for r in &rows {
            if let Some(c) = r.max_col() {
                assert!(
                    c < ncols,
                    "entry in column {c} outside a {ncols}-column matrix"
                );
            }
        }
        IntMatrix { cols: ncols, rows }
    }

    pub fn from_dense(ncols: usize, rows: &[Vec<i64>]) -> Result<Self, LinError> {
        let mut out = Vec::with_capacity(rows.len());
        for r in rows {
            if r.len() != ncols {
                return Err(LinError::DimensionMismatch {
                    expected: ncols,
                    found: r.len(),
                });
            }
            out.push(SparseRow::from(r.clone()));
        }
        Ok(IntMatrix {
            cols: ncols,
            rows: out,
        })
    }

    pub fn from_bigint_rows(ncols: usize, rows: &[Vec<BigInt>]) -> Result<Self, LinError> {
        let mut out = Vec::with_capacity(rows.len());
        for r in rows {
            if r.len() != ncols {
                return Err(LinError::DimensionMismatch {
                    expected: ncols,
                    found: r.len(),
                });
            }
            out.push(SparseRow::from_dense(r));
        }
        Ok(IntMatrix {
            cols: ncols,
            rows: out,
        })
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &SparseRow {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<SparseRow> {
        self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> BigInt {
        assert!(j < self.cols);
        self.rows[i].get(j).cloned().unwrap_or_default()
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        self.rows.iter().map(|r| r.to_dense(self.cols)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(SparseRow::is_zero)
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut cols: Vec<Vec<(usize, BigInt)>> = vec![Vec::new(); self.cols];
        for (i, r) in self.rows.iter().enumerate() {
            for (j, v) in r.iter() {
                cols[j].push((i, v.clone()));
            }
        }
        IntMatrix {
            cols: self.rows.len(),
            rows: cols.into_iter().map(SparseRow::from_entries).collect(),
        }
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix, LinError> {
        if self.cols != rhs.nrows() {
            return Err(LinError::DimensionMismatch {
                expected: self.cols,
                found: rhs.nrows(),
            });
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut acc = SparseRow::new();
                for (k, v) in r.iter() {
                    acc.add_scaled(v, &rhs.rows[k]);
                }
                acc
            })
            .collect();
        Ok(IntMatrix {
            cols: rhs.cols,
            rows,
        })
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, v: &SparseRow) -> SparseRow {
        let mut acc = SparseRow::new();
        for (k, x) in v.iter() {
            acc.add_scaled(x, &self.rows[k]);
        }
        acc
    }

    /// Determinant by fraction-free (Bareiss) elimination. Square matrices only.
    pub fn determinant(&self) -> Result<BigInt, LinError> {
        if self.cols != self.rows.len() {
            return Err(LinError::NotSquare {
                rows: self.rows.len(),
                cols: self.cols,
            });
        }
        let n = self.cols;
        if n == 0 {
            return Ok(BigInt::from(1));
        }
        let mut a = self.to_dense();
        let mut sign = 1;
        let mut prev = BigInt::from(1);
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(&a[n - 1][n - 1] * sign)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in self.to_dense() {
            let cells: Vec<String> = r.iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bareiss_determinant() {
        let m = IntMatrix::from_dense(3, &[vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 1]]).unwrap();
        // 2(3-2) - 0 + 1(1-3) = 0
        assert_eq!(m.determinant().unwrap(), BigInt::from(0));
        let m = IntMatrix::from_dense(2, &[vec![0, 2], vec![3, 1]]).unwrap();
        assert_eq!(m.determinant().unwrap(), BigInt::from(-6));
    }

    #[test]
    fn transpose_and_multiply() {
        let m = IntMatrix::from_dense(3, &[vec![1, 2, 0], vec![0, -1, 4]]).unwrap();
        let mt = m.transpose();
        assert_eq!(mt.nrows(), 3);
        let g = m.mul(&mt).unwrap();
        assert_eq!(
            g.to_dense(),
            vec![
                vec![BigInt::from(5), BigInt::from(-2)],
                vec![BigInt::from(-2), BigInt::from(17)],
            ]
        );
    }

    #[test]
    fn dense_row_length_checked() {
        assert!(IntMatrix::from_dense(2, &[vec![1, 2, 3]]).is_err());
    }
}
