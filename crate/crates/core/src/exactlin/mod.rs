//! Exact scalar fields and the linear algebra every other module is built on.

mod matrix;
mod scalar;
mod subspace;
mod tensor;

pub use matrix::{Matrix, Rref, SolutionSet};
pub use scalar::{parse_fraction, Field, Scalar, MAX_PRIME};
pub use subspace::Subspace;
pub use tensor::{flatten, multi_indices, unflatten, Elem, Op};

/// Column space and null space of `m`.
pub fn rref_and_kernel(m: &Matrix) -> (Subspace, Subspace) {
    m.rref_and_kernel()
}

pub fn solve_linear(a: &Matrix, b: &[Scalar]) -> SolutionSet {
    a.solve(b)
}

pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    a.kron(b)
}

/// Builds an operator from its action on basis tensors.
pub fn lift(f: Field, ins: &[usize], outs: &[usize], g: impl Fn(&Elem) -> Elem) -> Op {
    Op::from_fn(f, ins, outs, |idx| g(&Elem::basis(f, ins, idx)))
}

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(-3i64..=3, rows * cols).prop_map(move |v| {
            let f = Field::Rational;
            Matrix::from_fn(f, rows, cols, |i, j| f.int(v[i * cols + j]))
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in (1usize..=4).prop_flat_map(|n| matrix(n, n))) {
            let (im, ker) = rref_and_kernel(&m);
            prop_assert_eq!(im.dim() + ker.dim(), m.cols());
            for v in ker.basis() {
                prop_assert!(m.apply(v).iter().all(Scalar::is_zero));
            }
        }

        #[test]
        fn kron_associative(a in matrix(2, 2), b in matrix(2, 3), c in matrix(3, 2)) {
            prop_assert_eq!(kron(&kron(&a, &b), &c), kron(&a, &kron(&b, &c)));
        }

        #[test]
        fn kron_bilinear(a in matrix(2, 2), a2 in matrix(2, 2), b in matrix(3, 3)) {
            prop_assert_eq!(kron(&a.add(&a2), &b), kron(&a, &b).add(&kron(&a2, &b)));
            let two = Field::Rational.int(2);
            prop_assert_eq!(kron(&a.scale(&two), &b), kron(&a, &b.scale(&two)));
        }

        #[test]
        fn kron_acts_factorwise(a in matrix(2, 2), b in matrix(3, 3), u in proptest::collection::vec(-2i64..=2, 2), v in proptest::collection::vec(-2i64..=2, 3)) {
            let f = Field::Rational;
            let u: Vec<Scalar> = u.into_iter().map(|x| f.int(x)).collect();
            let v: Vec<Scalar> = v.into_iter().map(|x| f.int(x)).collect();
            let uv: Vec<Scalar> = u.iter().flat_map(|x| v.iter().map(move |y| x * y)).collect();
            let au = a.apply(&u);
            let bv = b.apply(&v);
            let expected: Vec<Scalar> = au.iter().flat_map(|x| bv.iter().map(move |y| x * y)).collect();
            prop_assert_eq!(kron(&a, &b).apply(&uv), expected);
        }

        #[test]
        fn subspace_equality_is_basis_independent(m in matrix(3, 4), mix in matrix(3, 3)) {
            let f = Field::Rational;
            let rows: Vec<Vec<Scalar>> = (0..3).map(|i| m.row(i).to_vec()).collect();
            let s = Subspace::span(f, 4, &rows);
            // rows of mix·m span a subspace of s; equal when mix is invertible
            let mixed = mix.compose(&m);
            let mixed_rows: Vec<Vec<Scalar>> = (0..3).map(|i| mixed.row(i).to_vec()).collect();
            let t = Subspace::span(f, 4, &mixed_rows);
            prop_assert!(s.contains_subspace(&t));
            if mix.inverse().is_some() {
                prop_assert_eq!(s, t);
            }
        }

        #[test]
        fn solutions_satisfy_system(a in matrix(2, 3), b in proptest::collection::vec(-3i64..=3, 2)) {
            let f = Field::Rational;
            let b: Vec<Scalar> = b.into_iter().map(|x| f.int(x)).collect();
            match solve_linear(&a, &b) {
                SolutionSet::Empty => prop_assert!(a.rank() < 2),
                SolutionSet::Unique(x) => prop_assert_eq!(a.apply(&x), b),
                SolutionSet::Affine { particular, kernel } => {
                    prop_assert_eq!(a.apply(&particular), b);
                    for k in kernel {
                        prop_assert!(a.apply(&k).iter().all(Scalar::is_zero));
                    }
                }
            }
        }
    }
}
