//! Small dense matrices over a field context, with the exact linear algebra
//! needed here: products, determinants, inverses and null-space bases.

use std::fmt;

use super::{FieldContext, FieldValue};
use crate::error::Error;
use crate::Result;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    ctx: FieldContext,
    rows: usize,
    cols: usize,
    entries: Vec<FieldValue>,
}

impl Matrix {
    pub fn new(
        ctx: FieldContext,
        rows: usize,
        cols: usize,
        entries: Vec<FieldValue>,
    ) -> Result<Matrix> {
        if entries.len() != rows * cols {
            return Err(Error::DegreeMismatch {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        if entries.iter().any(|e| e.context() != &ctx) {
            return Err(Error::ContextMismatch);
        }
        Ok(Matrix {
            ctx,
            rows,
            cols,
            entries,
        })
    }

    pub fn from_fn(
        ctx: &FieldContext,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> FieldValue,
    ) -> Matrix {
        let entries = (0..rows)
            .flat_map(|r| (0..cols).map(move |c| (r, c)))
            .map(|(r, c)| f(r, c))
            .collect();
        Matrix::new(ctx.clone(), rows, cols, entries).expect("sized by construction")
    }

    /// 2x2 matrix from integer entries, row major.
    pub fn from_ints2(ctx: &FieldContext, e: [i64; 4]) -> Matrix {
        Matrix::from_fn(ctx, 2, 2, |r, c| ctx.from_int(e[2 * r + c]))
    }

    pub fn identity(ctx: &FieldContext, n: usize) -> Matrix {
        Matrix::from_fn(ctx, n, n, |r, c| {
            if r == c {
                ctx.one()
            } else {
                ctx.zero()
            }
        })
    }

    pub fn context(&self) -> &FieldContext {
        &self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &FieldValue {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldValue) {
        assert!(v.context() == &self.ctx, "entry context mismatch");
        self.entries[r * self.cols + c] = v;
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.ctx, self.cols, self.rows, |r, c| {
            self.get(c, r).clone()
        })
    }

    /// Entrywise Frobenius (the `p`-th power map).
    pub fn frobenius(&self) -> Matrix {
        Matrix::from_fn(&self.ctx, self.rows, self.cols, |r, c| {
            self.get(r, c).frobenius()
        })
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.ctx != rhs.ctx {
            return Err(Error::ContextMismatch);
        }
        if self.cols != rhs.rows {
            return Err(Error::DegreeMismatch {
                expected: self.cols,
                got: rhs.rows,
            });
        }
        Ok(Matrix::from_fn(&self.ctx, self.rows, rhs.cols, |r, c| {
            let mut acc = self.ctx.zero();
            for k in 0..self.cols {
                acc = &acc + &(self.get(r, k) * rhs.get(k, c));
            }
            acc
        }))
    }

    pub fn lift_to(&self, target: &FieldContext) -> Result<Matrix> {
        let entries = self
            .entries
            .iter()
            .map(|e| target.lift(e))
            .collect::<Result<Vec<_>>>()?;
        Matrix::new(target.clone(), self.rows, self.cols, entries)
    }

    /// Reduced row echelon form together with the pivot column list.
    fn rref(&self) -> (Vec<Vec<FieldValue>>, Vec<usize>) {
        let mut m: Vec<Vec<FieldValue>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c).clone()).collect())
            .collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            let Some(pr) = (row..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(row, pr);
            let inv = m[row][col].inv().expect("pivot nonzero");
            for c in col..self.cols {
                m[row][c] = &m[row][c] * &inv;
            }
            for r in 0..self.rows {
                if r != row && !m[r][col].is_zero() {
                    let factor = m[r][col].clone();
                    for c in col..self.cols {
                        m[r][c] = &m[r][c] - &(&factor * &m[row][c]);
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == self.rows {
                break;
            }
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Echelonized basis of the right null space `{v : M v = 0}`.
    /// Rank plus the number of basis vectors equals the column count.
    pub fn kernel(&self) -> Vec<Vec<FieldValue>> {
        let (m, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![self.ctx.zero(); self.cols];
            v[free] = self.ctx.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -&m[r][free];
            }
            basis.push(v);
        }
        basis
    }

    pub fn det(&self) -> Result<FieldValue> {
        if self.rows != self.cols {
            return Err(Error::DegreeMismatch {
                expected: self.rows,
                got: self.cols,
            });
        }
        let n = self.rows;
        let mut m: Vec<Vec<FieldValue>> = (0..n)
            .map(|r| (0..n).map(|c| self.get(r, c).clone()).collect())
            .collect();
        let mut det = self.ctx.one();
        for col in 0..n {
            let Some(pr) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                return Ok(self.ctx.zero());
            };
            if pr != col {
                m.swap(col, pr);
                det = -&det;
            }
            det = &det * &m[col][col];
            let inv = m[col][col].inv().expect("pivot nonzero");
            for r in col + 1..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = &m[r][col] * &inv;
                for c in col..n {
                    m[r][c] = &m[r][c] - &(&factor * &m[col][c]);
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::DegreeMismatch {
                expected: self.rows,
                got: self.cols,
            });
        }
        let n = self.rows;
        // Augment with the identity and row-reduce.
        let aug = Matrix::from_fn(&self.ctx, n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else if c - n == r {
                self.ctx.one()
            } else {
                self.ctx.zero()
            }
        });
        let (m, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::SingularMatrix);
        }
        Ok(Matrix::from_fn(&self.ctx, n, n, |r, c| m[r][n + c].clone()))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for r in 0..self.rows {
            write!(f, "  [")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f11() -> FieldContext {
        FieldContext::prime(11).unwrap()
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        let k = f11();
        assert!(Matrix::identity(&k, 3).kernel().is_empty());
    }

    #[test]
    fn kernel_of_zero_matrix_is_full() {
        let k = f11();
        let z = Matrix::from_fn(&k, 2, 3, |_, _| k.zero());
        let basis = z.kernel();
        assert_eq!(basis.len(), 3);
        assert_eq!(z.rank(), 0);
    }

    #[test]
    fn kernel_vectors_annihilate_and_rank_nullity_holds() {
        let k = f11();
        // rank-2 matrix with a 1-dimensional kernel
        let m = Matrix::from_fn(&k, 3, 3, |r, c| k.from_int((r * 3 + c) as i64));
        let basis = m.kernel();
        assert_eq!(m.rank() + basis.len(), 3);
        for v in &basis {
            for r in 0..3 {
                let mut acc = k.zero();
                for c in 0..3 {
                    acc = &acc + &(m.get(r, c) * &v[c]);
                }
                assert!(acc.is_zero());
            }
        }
    }

    #[test]
    fn determinant_and_inverse() {
        let k = f11();
        let m = Matrix::from_ints2(&k, [1, 2, 3, 4]);
        // det = 1*4 - 2*3 = -2 = 9 mod 11
        assert_eq!(m.det().unwrap(), k.from_int(9));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(&k, 2));
        let singular = Matrix::from_ints2(&k, [1, 2, 2, 4]);
        assert!(singular.det().unwrap().is_zero());
        assert!(matches!(singular.inverse(), Err(Error::SingularMatrix)));
    }
}
