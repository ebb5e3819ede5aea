//! Sparse elements of tensor products and multilinear maps acting on chosen legs.
//!
//! Sweedler-style computations are written as pipelines: start from a basis
//! tensor, apply `Δ` to one leg, multiply two legs, pair a leg with a
//! functional, and so on. Each step is an [`Op`] applied to a list of legs of
//! an [`Elem`]; the outputs replace the consumed legs at the position of the
//! first consumed leg.

use std::collections::BTreeMap;

use super::matrix::Matrix;
use super::scalar::{Field, Scalar};

/// Row-major flattening of a multi-index.
pub fn flatten(dims: &[usize], idx: &[usize]) -> usize {
    debug_assert_eq!(dims.len(), idx.len());
    idx.iter().zip(dims).fold(0, |acc, (&i, &d)| {
        debug_assert!(i < d);
        acc * d + i
    })
}

pub fn unflatten(dims: &[usize], mut flat: usize) -> Vec<usize> {
    let mut idx = vec![0; dims.len()];
    for (slot, &d) in idx.iter_mut().zip(dims).rev() {
        *slot = flat % d;
        flat /= d;
    }
    idx
}

/// All multi-indices of the given shape in lexicographic order.
pub fn multi_indices(dims: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let total: usize = dims.iter().product();
    (0..total).map(move |f| unflatten(dims, f))
}

/// An element of `V_1 ⊗ ... ⊗ V_k` stored as sparse coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Elem {
    field: Field,
    dims: Vec<usize>,
    terms: BTreeMap<Vec<usize>, Scalar>,
}

impl Elem {
    pub fn zero(field: Field, dims: &[usize]) -> Elem {
        Elem { field, dims: dims.to_vec(), terms: BTreeMap::new() }
    }

    pub fn basis(field: Field, dims: &[usize], idx: &[usize]) -> Elem {
        let mut e = Elem::zero(field, dims);
        e.add_term(idx.to_vec(), &field.one());
        e
    }

    /// The scalar `c` as an element of the empty tensor product.
    pub fn scalar(c: Scalar) -> Elem {
        let mut e = Elem::zero(c.field(), &[]);
        e.add_term(Vec::new(), &c);
        e
    }

    pub fn from_flat(field: Field, dims: &[usize], coords: &[Scalar]) -> Elem {
        assert_eq!(coords.len(), dims.iter().product::<usize>(), "coordinate count does not match shape");
        let mut e = Elem::zero(field, dims);
        for (f, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                e.terms.insert(unflatten(dims, f), c.clone());
            }
        }
        e
    }

    pub fn vector(field: Field, coords: &[Scalar]) -> Elem {
        Elem::from_flat(field, &[coords.len()], coords)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, idx: &[usize]) -> Scalar {
        self.terms.get(idx).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value of an element with no legs.
    pub fn as_scalar(&self) -> Scalar {
        assert!(self.dims.is_empty(), "element still has {} legs", self.dims.len());
        self.coeff(&[])
    }

    pub fn flat(&self) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dims.iter().product()];
        for (idx, c) in &self.terms {
            out[flatten(&self.dims, idx)] = c.clone();
        }
        out
    }

    pub fn add_term(&mut self, idx: Vec<usize>, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(idx) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Elem) -> Elem {
        assert_eq!(self.dims, other.dims, "adding elements of different shapes");
        let mut out = self.clone();
        for (idx, c) in &other.terms {
            out.add_term(idx.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Elem) -> Elem {
        self.add(&other.scale(&-self.field.one()))
    }

    pub fn scale(&self, c: &Scalar) -> Elem {
        let mut out = Elem::zero(self.field, &self.dims);
        if c.is_zero() {
            return out;
        }
        for (idx, x) in &self.terms {
            out.terms.insert(idx.clone(), x * c);
        }
        out
    }

    /// `self ⊗ other`, legs concatenated.
    pub fn tensor(&self, other: &Elem) -> Elem {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        let mut out = Elem::zero(self.field, &dims);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut idx = a.clone();
                idx.extend_from_slice(b);
                out.add_term(idx, &(x * y));
            }
        }
        out
    }

    /// Inserts `other`'s legs so that they start at position `pos`.
    pub fn insert(&self, pos: usize, other: &Elem) -> Elem {
        let k = self.dims.len();
        let joined = self.tensor(other);
        let mut order: Vec<usize> = (0..pos).collect();
        order.extend(k..k + other.dims.len());
        order.extend(pos..k);
        joined.permute(&order)
    }

    /// Reorders legs: leg `i` of the result is leg `order[i]` of `self`.
    pub fn permute(&self, order: &[usize]) -> Elem {
        assert_eq!(order.len(), self.dims.len(), "permutation length does not match leg count");
        let dims: Vec<usize> = order.iter().map(|&o| self.dims[o]).collect();
        let mut out = Elem::zero(self.field, &dims);
        for (idx, c) in &self.terms {
            out.terms.insert(order.iter().map(|&o| idx[o]).collect(), c.clone());
        }
        out
    }

    /// Exchanges two legs.
    pub fn swap(&self, a: usize, b: usize) -> Elem {
        let mut order: Vec<usize> = (0..self.dims.len()).collect();
        order.swap(a, b);
        self.permute(&order)
    }

    /// Reinterprets the coordinates under a new shape with the same total size.
    pub fn reshape(&self, dims: &[usize]) -> Elem {
        assert_eq!(
            dims.iter().product::<usize>(),
            self.dims.iter().product::<usize>(),
            "reshape changes total size"
        );
        let mut out = Elem::zero(self.field, dims);
        for (idx, c) in &self.terms {
            out.terms.insert(unflatten(dims, flatten(&self.dims, idx)), c.clone());
        }
        out
    }

    /// Applies `op` to the listed legs (in that order). The output legs of `op`
    /// are placed where the first listed leg was.
    pub fn apply(&self, legs: &[usize], op: &Op) -> Elem {
        assert!(!legs.is_empty(), "apply needs at least one leg");
        assert_eq!(legs.len(), op.in_dims.len(), "leg count does not match operator arity");
        for (&l, &d) in legs.iter().zip(&op.in_dims) {
            assert_eq!(self.dims[l], d, "leg {l} has dimension {} but operator expects {d}", self.dims[l]);
        }
        let rest: Vec<usize> = (0..self.dims.len()).filter(|l| !legs.contains(l)).collect();
        let pos = rest.iter().filter(|&&l| l < legs[0]).count();
        let mut dims: Vec<usize> = rest.iter().map(|&l| self.dims[l]).collect();
        dims.splice(pos..pos, op.out_dims.iter().copied());
        let mut out = Elem::zero(self.field, &dims);
        let mut sub = Vec::with_capacity(legs.len());
        for (idx, c) in &self.terms {
            sub.clear();
            sub.extend(legs.iter().map(|&l| idx[l]));
            let col = &op.cols[flatten(&op.in_dims, &sub)];
            if col.is_empty() {
                continue;
            }
            let kept: Vec<usize> = rest.iter().map(|&l| idx[l]).collect();
            for (f, d) in col {
                let mut key = Vec::with_capacity(dims.len());
                key.extend_from_slice(&kept[..pos]);
                key.extend(unflatten(&op.out_dims, *f));
                key.extend_from_slice(&kept[pos..]);
                out.add_term(key, &(c * d));
            }
        }
        out
    }

    /// Renders the nonzero terms for reports.
    pub fn describe(&self) -> Vec<(Vec<usize>, String)> {
        self.terms.iter().map(|(i, c)| (i.clone(), c.to_string())).collect()
    }
}

/// A multilinear map `V_1 ⊗ ... ⊗ V_k -> W_1 ⊗ ... ⊗ W_l`, stored as one sparse
/// column per flattened input basis index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Op {
    field: Field,
    in_dims: Vec<usize>,
    out_dims: Vec<usize>,
    cols: Vec<Vec<(usize, Scalar)>>,
}

impl Op {
    /// Builds the operator from its values on basis tensors.
    pub fn from_fn(field: Field, in_dims: &[usize], out_dims: &[usize], mut f: impl FnMut(&[usize]) -> Elem) -> Op {
        let cols = multi_indices(in_dims)
            .map(|idx| {
                let image = f(&idx);
                assert_eq!(image.dims, out_dims, "operator image has the wrong shape");
                image.terms.iter().map(|(o, c)| (flatten(out_dims, o), c.clone())).collect()
            })
            .collect();
        Op { field, in_dims: in_dims.to_vec(), out_dims: out_dims.to_vec(), cols }
    }

    pub fn from_matrix(m: &Matrix, in_dims: &[usize], out_dims: &[usize]) -> Op {
        assert_eq!(m.cols(), in_dims.iter().product::<usize>(), "matrix columns do not match input shape");
        assert_eq!(m.rows(), out_dims.iter().product::<usize>(), "matrix rows do not match output shape");
        let cols = (0..m.cols())
            .map(|j| {
                (0..m.rows())
                    .filter(|&i| !m.get(i, j).is_zero())
                    .map(|i| (i, m.get(i, j).clone()))
                    .collect()
            })
            .collect();
        Op { field: m.field(), in_dims: in_dims.to_vec(), out_dims: out_dims.to_vec(), cols }
    }

    /// Single-leg map from a matrix.
    pub fn linear(m: &Matrix) -> Op {
        Op::from_matrix(m, &[m.cols()], &[m.rows()])
    }

    pub fn identity(field: Field, dims: &[usize]) -> Op {
        Op::from_fn(field, dims, dims, |idx| Elem::basis(field, dims, idx))
    }

    /// Linear functional given by its values on the basis.
    pub fn covector(field: Field, values: &[Scalar]) -> Op {
        Op::from_fn(field, &[values.len()], &[], |idx| Elem::scalar(values[idx[0]].clone()))
    }

    /// A map out of the ground field picking out one element.
    pub fn constant(e: &Elem) -> Op {
        let e = e.clone();
        Op::from_fn(e.field, &[1], &e.dims.clone(), |_| e.clone())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn in_dims(&self) -> &[usize] {
        &self.in_dims
    }

    pub fn out_dims(&self) -> &[usize] {
        &self.out_dims
    }

    pub fn eval(&self, x: &Elem) -> Elem {
        let legs: Vec<usize> = (0..self.in_dims.len()).collect();
        if legs.is_empty() {
            panic!("eval on an operator without inputs");
        }
        x.apply(&legs, self)
    }

    pub fn column(&self, idx: &[usize]) -> Elem {
        let mut e = Elem::zero(self.field, &self.out_dims);
        for (f, c) in &self.cols[flatten(&self.in_dims, idx)] {
            e.terms.insert(unflatten(&self.out_dims, *f), c.clone());
        }
        e
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &Op) -> Op {
        assert_eq!(self.out_dims, next.in_dims, "composition shapes disagree");
        Op::from_fn(self.field, &self.in_dims, &next.out_dims, |idx| next.eval(&self.column(idx)))
    }

    /// `self ⊗ other` acting on concatenated legs.
    pub fn kron(&self, other: &Op) -> Op {
        let mut in_dims = self.in_dims.clone();
        in_dims.extend_from_slice(&other.in_dims);
        let mut out_dims = self.out_dims.clone();
        out_dims.extend_from_slice(&other.out_dims);
        let k = self.in_dims.len();
        Op::from_fn(self.field, &in_dims, &out_dims, |idx| self.column(&idx[..k]).tensor(&other.column(&idx[k..])))
    }

    /// Same coordinates, new leg shapes.
    pub fn reshape(&self, in_dims: &[usize], out_dims: &[usize]) -> Op {
        assert_eq!(in_dims.iter().product::<usize>(), self.in_dims.iter().product::<usize>());
        assert_eq!(out_dims.iter().product::<usize>(), self.out_dims.iter().product::<usize>());
        Op { field: self.field, in_dims: in_dims.to_vec(), out_dims: out_dims.to_vec(), cols: self.cols.clone() }
    }

    pub fn to_matrix(&self) -> Matrix {
        let rows: usize = self.out_dims.iter().product();
        let mut m = Matrix::zeros(self.field, rows, self.cols.len());
        for (j, col) in self.cols.iter().enumerate() {
            for (i, c) in col {
                m.set(*i, j, c.clone());
            }
        }
        m
    }

    pub fn add(&self, other: &Op) -> Op {
        assert_eq!((&self.in_dims, &self.out_dims), (&other.in_dims, &other.out_dims));
        Op::from_fn(self.field, &self.in_dims, &self.out_dims, |idx| self.column(idx).add(&other.column(idx)))
    }

    pub fn sub(&self, other: &Op) -> Op {
        assert_eq!((&self.in_dims, &self.out_dims), (&other.in_dims, &other.out_dims));
        Op::from_fn(self.field, &self.in_dims, &self.out_dims, |idx| self.column(idx).sub(&other.column(idx)))
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    /// The transposed map between the dual spaces, in dual bases.
    pub fn transpose(&self) -> Op {
        let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.out_dims.iter().product()];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, c) in col {
                cols[*i].push((j, c.clone()));
            }
        }
        Op { field: self.field, in_dims: self.out_dims.clone(), out_dims: self.in_dims.clone(), cols }
    }

    /// Sparse `(input, output, coefficient)` triples with flattened indices.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.cols.iter().enumerate().flat_map(|(j, col)| col.iter().map(move |(i, c)| (j, *i, c)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn swap_op(f: Field, n: usize) -> Op {
        Op::from_fn(f, &[n, n], &[n, n], |idx| Elem::basis(f, &[n, n], &[idx[1], idx[0]]))
    }

    #[test]
    fn apply_places_output_at_first_leg() {
        let f = Field::Rational;
        let x = Elem::basis(f, &[2, 3, 4], &[1, 2, 3]);
        // functional on leg 1 picking coordinate 2
        let pick = Op::covector(f, &[f.zero(), f.zero(), f.int(5)]);
        let y = x.apply(&[1], &pick);
        assert_eq!(y.dims(), &[2, 4]);
        assert_eq!(y.coeff(&[1, 3]), f.int(5));
        // merge legs 2 and 0 into a single leg of size 8 placed at leg 2's slot
        let merge = Op::from_fn(f, &[4, 2], &[8], |i| Elem::basis(f, &[8], &[i[0] * 2 + i[1]]));
        let z = x.apply(&[2, 0], &merge);
        assert_eq!(z.dims(), &[3, 8]);
        assert_eq!(z.coeff(&[2, 7]), f.one());
    }

    #[test]
    fn kron_matches_matrix_kron() {
        let f = Field::Rational;
        let a = Matrix::from_fn(f, 2, 2, |i, j| f.int((i * 2 + j) as i64 + 1));
        let b = Matrix::from_fn(f, 3, 2, |i, j| f.int(i as i64 - j as i64));
        let op = Op::linear(&a).kron(&Op::linear(&b));
        assert_eq!(op.reshape(&[4], &[6]).to_matrix(), a.kron(&b));
    }

    #[test]
    fn permutation_and_swap_agree() {
        let f = Field::Rational;
        let x = Elem::basis(f, &[2, 2], &[0, 1]).add(&Elem::basis(f, &[2, 2], &[1, 1]));
        assert_eq!(x.swap(0, 1), swap_op(f, 2).eval(&x));
        assert_eq!(x.insert(1, &Elem::basis(f, &[3], &[2])).coeff(&[0, 2, 1]), f.one());
    }
}
