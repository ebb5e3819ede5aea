//! Subspaces of `F^n` kept in reduced row-echelon form.
//!
//! Because the echelon basis of a subspace is unique, structural equality of
//! two `Subspace` values is equality of the underlying spaces.

use super::matrix::Matrix;
use super::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(field: Field, ambient: usize, vectors: &[Vec<Scalar>]) -> Subspace {
        if vectors.is_empty() {
            return Subspace::zero(field, ambient);
        }
        let m = Matrix::from_rows(field, ambient, vectors);
        let rref = m.rref();
        let basis = (0..rref.pivots.len()).map(|r| rref.reduced.row(r).to_vec()).collect();
        Subspace { field, ambient, basis, pivots: rref.pivots }
    }

    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace { field, ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        let id = Matrix::identity(field, ambient);
        Subspace {
            field,
            ambient,
            basis: (0..ambient).map(|i| id.row(i).to_vec()).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its echelon-basis component; zero iff `v` lies in the span.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient, "vector length does not match ambient dimension");
        let mut out = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = out[p].clone();
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                if !x.is_zero() {
                    *o -= &(&c * x);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vectors = self.basis.clone();
        vectors.extend(other.basis.iter().cloned());
        Subspace::span(self.field, self.ambient, &vectors)
    }

    /// Coordinates of a member vector in the echelon basis: its pivot entries.
    pub fn coordinates(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    /// `ambient × dim` matrix whose columns are the echelon basis.
    pub fn inclusion(&self) -> Matrix {
        Matrix::from_columns(self.field, self.ambient, &self.basis)
    }

    /// `dim × ambient` matrix reading pivot coordinates; a left inverse of
    /// [`Subspace::inclusion`].
    pub fn chart(&self) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.dim(), self.ambient);
        for (r, &p) in self.pivots.iter().enumerate() {
            m.set(r, p, self.field.one());
        }
        m
    }

    fn free_columns(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Quotient map `F^n -> F^n / self`, reading the non-pivot coordinates of
    /// the reduced vector.
    pub fn quotient_chart(&self) -> Matrix {
        let free = self.free_columns();
        let mut m = Matrix::zeros(self.field, free.len(), self.ambient);
        for j in 0..self.ambient {
            let mut e = vec![self.field.zero(); self.ambient];
            e[j] = self.field.one();
            let r = self.reduce(&e);
            for (row, &f) in free.iter().enumerate() {
                m.set(row, j, r[f].clone());
            }
        }
        m
    }

    /// Section of [`Subspace::quotient_chart`]: unit vectors on non-pivot coordinates.
    pub fn quotient_section(&self) -> Matrix {
        let free = self.free_columns();
        let mut m = Matrix::zeros(self.field, self.ambient, free.len());
        for (c, &f) in free.iter().enumerate() {
            m.set(f, c, self.field.one());
        }
        m
    }

    /// Image of this subspace under a linear map.
    pub fn map(&self, m: &Matrix) -> Subspace {
        let images: Vec<Vec<Scalar>> = self.basis.iter().map(|b| m.apply(b)).collect();
        Subspace::span(self.field, m.rows(), &images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charts_invert_inclusion() {
        let f = Field::Rational;
        let v = vec![vec![f.int(1), f.int(2), f.int(3)], vec![f.int(0), f.int(1), f.int(1)]];
        let s = Subspace::span(f, 3, &v);
        assert_eq!(s.chart().compose(&s.inclusion()), Matrix::identity(f, 2));
        let q = s.quotient_chart();
        assert_eq!(q.rows(), 1);
        assert!(q.compose(&s.inclusion()).is_zero());
        assert_eq!(q.compose(&s.quotient_section()), Matrix::identity(f, 1));
    }

    #[test]
    fn membership_and_sum() {
        let f = Field::Rational;
        let s = Subspace::span(f, 3, &[vec![f.int(1), f.int(1), f.int(0)]]);
        assert!(s.contains(&[f.int(2), f.int(2), f.int(0)]));
        assert!(!s.contains(&[f.int(1), f.int(0), f.int(0)]));
        let t = Subspace::span(f, 3, &[vec![f.int(0), f.int(0), f.int(5)]]);
        assert_eq!(s.sum(&t).dim(), 2);
        assert!(s.sum(&t).contains_subspace(&s));
    }
}
