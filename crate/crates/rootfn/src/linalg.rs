//! Dense exact linear algebra over a coefficient field.
//!
//! Plain Gauss-Jordan elimination; coefficient growth over the rationals is
//! accepted at the sizes this crate targets. The reduced row echelon form is
//! canonical, which downstream code relies on for determinism.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

/// A rectangular matrix of field elements, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    entries: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn zero(field: &FieldSpec, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            field: *field,
            entries: vec![field.zero(); rows * cols],
        }
    }

    /// Build from rows; all rows must have equal length.
    pub fn from_rows(field: &FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols = rows.first().map(Vec::len).unwrap_or(0);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(Error::BadMatrixShape("ragged rows".into()));
            }
            for e in &row {
                field.validate(e)?;
            }
            entries.extend(row);
        }
        Ok(ExactMatrix {
            rows: nrows,
            cols,
            field: *field,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// Reduced row echelon form and its pivot columns (strictly increasing).
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead_row = 0usize;
        for col in 0..m.cols {
            if lead_row >= m.rows {
                break;
            }
            let Some(pivot_row) =
                (lead_row..m.rows).find(|&r| !f.is_zero(m.get(r, col)))
            else {
                continue;
            };
            m.swap_rows(lead_row, pivot_row);
            let inv = f.inv(m.get(lead_row, col)).expect("nonzero pivot");
            m.scale_row(lead_row, &inv);
            for r in 0..m.rows {
                if r != lead_row && !f.is_zero(m.get(r, col)) {
                    let factor = m.get(r, col).clone();
                    m.sub_scaled_row(r, lead_row, &factor);
                }
            }
            pivots.push(col);
            lead_row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of the right nullspace, one vector per free column of the
    /// reduced form, in ascending free-column order.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let f = self.field;
        let (r, pivots) = self.rref();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut vec = vec![f.zero(); self.cols];
            vec[free] = f.one();
            for (row, &col) in pivots.iter().enumerate() {
                vec[col] = f.neg(r.get(row, free));
            }
            basis.push(vec);
        }
        basis
    }

    /// Solve `self * x = rhs`. Returns the particular solution with all free
    /// variables set to zero, or `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(rhs.len(), self.rows, "rhs length");
        let f = self.field;
        let mut aug = ExactMatrix::zero(&f, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, rhs[r].clone());
        }
        let (red, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![f.zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = red.get(row, self.cols).clone();
        }
        Some(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, by: &Scalar) {
        for c in 0..self.cols {
            let v = self.field.mul(self.get(r, c), by);
            self.set(r, c, v);
        }
    }

    /// row_r -= factor * row_src
    fn sub_scaled_row(&mut self, r: usize, src: usize, factor: &Scalar) {
        for c in 0..self.cols {
            let v = self
                .field
                .sub(self.get(r, c), &self.field.mul(self.get(src, c), factor));
            self.set(r, c, v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn mat(rows: Vec<Vec<i64>>) -> ExactMatrix {
        let f = q();
        ExactMatrix::from_rows(
            &f,
            rows.into_iter()
                .map(|r| r.into_iter().map(|k| f.integer(k)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn rref_examples() {
        // zero matrix: unchanged, no pivots
        let z = ExactMatrix::zero(&q(), 2, 3);
        let (r, p) = z.rref();
        assert_eq!(r, z);
        assert!(p.is_empty());
        // identity: unchanged, all pivots
        let id = mat(vec![vec![1, 0], vec![0, 1]]);
        let (r, p) = id.rref();
        assert_eq!(r, id);
        assert_eq!(p, vec![0, 1]);
        // rank-1 example by hand
        let m = mat(vec![vec![2, 4], vec![1, 2]]);
        let (r, p) = m.rref();
        assert_eq!(r, mat(vec![vec![1, 2], vec![0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rref_is_idempotent() {
        let m = mat(vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]);
        let (r1, p1) = m.rref();
        let (r2, p2) = r1.rref();
        assert_eq!(r1, r2);
        assert_eq!(p1, p2);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn nullspace_and_solve() {
        let m = mat(vec![vec![1, 2, 3], vec![4, 5, 6]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        let f = q();
        for v in &ns {
            for r in 0..m.rows() {
                let mut acc = f.zero();
                for c in 0..m.cols() {
                    acc = f.add(&acc, &f.mul(m.get(r, c), &v[c]));
                }
                assert!(f.is_zero(&acc));
            }
        }
        // consistent solve reproduces the rhs
        let rhs = vec![f.integer(6), f.integer(15)];
        let x = m.solve(&rhs).unwrap();
        for r in 0..m.rows() {
            let mut acc = f.zero();
            for c in 0..m.cols() {
                acc = f.add(&acc, &f.mul(m.get(r, c), &x[c]));
            }
            assert_eq!(acc, rhs[r]);
        }
        // inconsistent solve reports absence
        let m2 = mat(vec![vec![1, 1], vec![1, 1]]);
        assert!(m2.solve(&[f.integer(0), f.integer(1)]).is_none());
    }

    #[test]
    fn prime_field_rref() {
        let f = FieldSpec::prime_field(7).unwrap();
        let m = ExactMatrix::from_rows(
            &f,
            vec![
                vec![f.integer(2), f.integer(4)],
                vec![f.integer(1), f.integer(2)],
            ],
        )
        .unwrap();
        let (r, p) = m.rref();
        assert_eq!(p, vec![0]);
        assert_eq!(r.get(0, 1), &f.integer(2));
    }
}
