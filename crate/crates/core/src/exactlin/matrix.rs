//! Dense matrices over an exact [`Field`].
//!
//! A matrix is a linear map: column `j` holds the image of the `j`-th basis
//! vector of the source space. Tensor products of spaces use the row-major
//! pairing `(i, j) -> i * dim_right + j`.

use std::fmt;

use super::scalar::{Field, Scalar};
use super::subspace::Subspace;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Result of row reduction: the reduced matrix and its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

/// Solution set of `A x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolutionSet {
    Empty,
    Unique(Vec<Scalar>),
    /// Particular solution (zero on free coordinates) plus a kernel basis.
    Affine { particular: Vec<Scalar>, kernel: Vec<Vec<Scalar>> },
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field, rows, cols, data }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Matrix {
        Matrix::from_fn(field, rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn from_rows(field: Field, cols: usize, rows: &[Vec<Scalar>]) -> Matrix {
        Matrix::from_fn(field, rows.len(), cols, |i, j| rows[i][j].clone())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.data[i * self.cols + j] = value;
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Composition `self ∘ rhs`.
    ///
    /// # Panics
    /// If the inner dimensions disagree.
    pub fn compose(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions disagree in composition");
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j].add_mul(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "vector length does not match matrix");
        let mut out = vec![self.field.zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, acc) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    acc.add_mul(a, x);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * c).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    /// Kronecker product; realizes `A ⊗ B` on tensor factors so that
    /// `(A ⊗ B)(u ⊗ v) = Au ⊗ Bv` under the row-major pairing.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let (r, c) = (self.rows * rhs.rows, self.cols * rhs.cols);
        let mut out = Matrix::zeros(self.field, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = rhs.get(k, l);
                        if !b.is_zero() {
                            out.set(i * rhs.rows + k, j * rhs.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Reduced row-echelon form with leftmost pivoting and unit pivots.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).inv().expect("nonzero pivot");
            for j in col..m.cols {
                let v = m.get(row, j) * &inv;
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for j in col..m.cols {
                    let delta = &factor * m.get(row, j);
                    if !delta.is_zero() {
                        *m.entry_mut(r, j) -= &delta;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref { reduced: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Column space.
    pub fn image(&self) -> Subspace {
        let columns: Vec<Vec<Scalar>> = (0..self.cols).map(|j| self.column(j)).collect();
        Subspace::span(self.field, self.rows, &columns)
    }

    /// Null space `{x : A x = 0}`.
    pub fn kernel(&self) -> Subspace {
        let Rref { reduced, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let vectors: Vec<Vec<Scalar>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -reduced.get(r, f);
                }
                v
            })
            .collect();
        Subspace::span(self.field, self.cols, &vectors)
    }

    /// Both the column space and the kernel; `rank + dim ker = cols`.
    pub fn rref_and_kernel(&self) -> (Subspace, Subspace) {
        (self.image(), self.kernel())
    }

    pub fn solve(&self, b: &[Scalar]) -> SolutionSet {
        assert_eq!(self.rows, b.len(), "right-hand side length does not match row count");
        let augmented = Matrix::from_fn(self.field, self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let Rref { reduced, pivots } = augmented.rref();
        if pivots.last() == Some(&self.cols) {
            return SolutionSet::Empty;
        }
        let mut particular = vec![self.field.zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            particular[p] = reduced.get(r, self.cols).clone();
        }
        if pivots.len() == self.cols {
            return SolutionSet::Unique(particular);
        }
        SolutionSet::Affine { particular, kernel: self.kernel().basis().to_vec() }
    }

    /// Two-sided inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let augmented = Matrix::from_fn(self.field, n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                self.field.one()
            } else {
                self.field.zero()
            }
        });
        let Rref { reduced, pivots } = augmented.rref();
        if n > 0 && (pivots.len() < n || pivots[n - 1] >= n) {
            return None;
        }
        Some(Matrix::from_fn(self.field, n, n, |i, j| reduced.get(i, n + j).clone()))
    }

    /// First column where `self` and `other` differ.
    pub fn first_difference(&self, other: &Matrix) -> Option<usize> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        (0..self.cols).find(|&j| (0..self.rows).any(|i| self.get(i, j) != other.get(i, j)))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Matrix {
        let f = Field::Rational;
        Matrix::from_fn(f, rows.len(), rows[0].len(), |i, j| f.int(rows[i][j]))
    }

    #[test]
    fn identity_and_zero_kernels() {
        let f = Field::Rational;
        let (im, ker) = Matrix::identity(f, 2).rref_and_kernel();
        assert_eq!((im.dim(), ker.dim()), (2, 0));
        let (im, ker) = Matrix::zeros(f, 2, 2).rref_and_kernel();
        assert_eq!((im.dim(), ker.dim()), (0, 2));
    }

    #[test]
    fn rank_one_kernel_uses_pivot_normalization() {
        // x + 2y = 0: hand reduction gives kernel (-2, 1), normalized to (1, -1/2)
        let (im, ker) = q(&[&[1, 2], &[2, 4]]).rref_and_kernel();
        assert_eq!(im.dim(), 1);
        assert_eq!(ker.dim(), 1);
        let f = Field::Rational;
        assert_eq!(ker.basis()[0], vec![f.one(), f.parse("-1/2").unwrap()]);
    }

    #[test]
    fn solve_cases() {
        let f = Field::Rational;
        let b = vec![f.int(5), f.int(-3)];
        assert_eq!(Matrix::identity(f, 2).solve(&b), SolutionSet::Unique(b.clone()));
        match Matrix::zeros(f, 2, 2).solve(&[f.zero(), f.zero()]) {
            SolutionSet::Affine { particular, kernel } => {
                assert!(particular.iter().all(Scalar::is_zero));
                assert_eq!(kernel.len(), 2);
            }
            other => panic!("expected whole space, got {other:?}"),
        }
        // x + y = 3 by elimination: particular (3, 0), kernel (1, -1)
        match q(&[&[1, 1]]).solve(&[f.int(3)]) {
            SolutionSet::Affine { particular, kernel } => {
                assert_eq!(particular, vec![f.int(3), f.zero()]);
                assert_eq!(kernel, vec![vec![f.one(), f.int(-1)]]);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(Matrix::zeros(f, 1, 1).solve(&[f.one()]), SolutionSet::Empty);
    }

    #[test]
    fn kron_basics() {
        let f = Field::Rational;
        assert_eq!(Matrix::identity(f, 2).kron(&Matrix::identity(f, 3)), Matrix::identity(f, 6));
        let a = q(&[&[1, 2], &[3, 4]]);
        assert!(a.kron(&Matrix::zeros(f, 2, 2)).is_zero());
    }

    #[test]
    fn inverse_round_trip() {
        let a = q(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.compose(&inv), Matrix::identity(Field::Rational, 2));
        assert!(q(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
