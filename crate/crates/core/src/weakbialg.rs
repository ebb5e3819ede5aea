//! Weak bialgebras given by structure constants, their counital maps and the
//! monoidal category of left modules with the truncated tensor product `⊗_t`.

use crate::exactlin::{Elem, Field, Matrix, Op, Scalar, Subspace};
use crate::report::{basis_inputs, product_inputs, subspace_inputs, subspace_inputs_shaped, Input, Report};
use crate::Error;

/// An associative unital algebra: `mult` maps `[n, n] -> [n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraData {
    pub mult: Op,
    pub unit: Elem,
}

/// A coassociative counital coalgebra: `comult` maps `[n] -> [n, n]`, `counit` maps `[n] -> []`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraData {
    pub comult: Op,
    pub counit: Op,
}

impl AlgebraData {
    /// `entries` are `(i, j, k, c)`: `e_i·e_j` has coefficient `c` on `e_k`.
    pub fn from_table(field: Field, dim: usize, entries: &[(usize, usize, usize, Scalar)], unit: &[Scalar]) -> Result<AlgebraData, Error> {
        if unit.len() != dim {
            return Err(Error::DimMismatch(format!("unit has {} coordinates, algebra dimension is {dim}", unit.len())));
        }
        let mut table = vec![Elem::zero(field, &[dim]); dim * dim];
        for (i, j, k, c) in entries {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::DimMismatch(format!("product entry ({i}, {j}, {k}) out of range for dimension {dim}")));
            }
            table[i * dim + j].add_term(vec![*k], c);
        }
        let mult = Op::from_fn(field, &[dim, dim], &[dim], |idx| table[idx[0] * dim + idx[1]].clone());
        Ok(AlgebraData { mult, unit: Elem::vector(field, unit) })
    }

    pub fn dim(&self) -> usize {
        self.unit.dims()[0]
    }

    pub fn field(&self) -> Field {
        self.unit.field()
    }

    /// The opposite algebra.
    pub fn opposite(&self) -> AlgebraData {
        let n = self.dim();
        let mult = Op::from_fn(self.field(), &[n, n], &[n], |idx| self.mult.column(&[idx[1], idx[0]]));
        AlgebraData { mult, unit: self.unit.clone() }
    }

    /// `A ⊗ B` on a single flattened leg, `(a⊗b)(c⊗d) = ac⊗bd`.
    pub fn tensor(&self, other: &AlgebraData) -> AlgebraData {
        let (n, m) = (self.dim(), other.dim());
        let f = self.field();
        let mult = Op::from_fn(f, &[n * m, n * m], &[n * m], |idx| {
            let (a, b) = (idx[0] / m, idx[0] % m);
            let (c, d) = (idx[1] / m, idx[1] % m);
            self.mult.column(&[a, c]).tensor(&other.mult.column(&[b, d])).reshape(&[n * m])
        });
        AlgebraData { mult, unit: self.unit.tensor(&other.unit).reshape(&[n * m]) }
    }

    pub fn verify(&self) -> Report {
        let mut r = Report::new("algebra");
        algebra_checks(&mut r, self);
        r
    }
}

impl CoalgebraData {
    /// `entries` are `(i, j, k, c)`: `Δ(e_i)` has coefficient `c` on `e_j⊗e_k`.
    pub fn from_table(field: Field, dim: usize, entries: &[(usize, usize, usize, Scalar)], counit: &[Scalar]) -> Result<CoalgebraData, Error> {
        if counit.len() != dim {
            return Err(Error::DimMismatch(format!("counit has {} coordinates, coalgebra dimension is {dim}", counit.len())));
        }
        let mut table = vec![Elem::zero(field, &[dim, dim]); dim];
        for (i, j, k, c) in entries {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::DimMismatch(format!("coproduct entry ({i}, {j}, {k}) out of range for dimension {dim}")));
            }
            table[*i].add_term(vec![*j, *k], c);
        }
        let comult = Op::from_fn(field, &[dim], &[dim, dim], |idx| table[idx[0]].clone());
        Ok(CoalgebraData { comult, counit: Op::covector(field, counit) })
    }

    pub fn dim(&self) -> usize {
        self.comult.in_dims()[0]
    }

    pub fn field(&self) -> Field {
        self.comult.field()
    }

    /// `C ⊗ D` on a single flattened leg.
    pub fn tensor(&self, other: &CoalgebraData) -> CoalgebraData {
        let (n, m) = (self.dim(), other.dim());
        let f = self.field();
        let nm = n * m;
        let comult = Op::from_fn(f, &[nm], &[nm, nm], |idx| {
            let x = self.comult.column(&[idx[0] / m]).tensor(&other.comult.column(&[idx[0] % m]));
            // [c1, c2, d1, d2] -> [c1, d1, c2, d2] -> [(c1 d1), (c2 d2)]
            x.permute(&[0, 2, 1, 3]).reshape(&[nm, nm])
        });
        let counit = Op::from_fn(f, &[nm], &[], |idx| {
            self.counit.column(&[idx[0] / m]).tensor(&other.counit.column(&[idx[0] % m]))
        });
        CoalgebraData { comult, counit }
    }
}

fn algebra_checks(r: &mut Report, a: &AlgebraData) {
    let f = a.field();
    let n = a.dim();
    let mul = |x: &Elem, i: usize, j: usize| x.apply(&[i, j], &a.mult);
    r.identity("associativity", &basis_inputs(f, &[n, n, n]), |x| mul(&mul(x, 0, 1), 0, 1), |x| mul(&mul(x, 1, 2), 0, 1));
    let b1 = basis_inputs(f, &[n]);
    r.identity("left_unit", &b1, |x| mul(&x.insert(0, &a.unit), 0, 1), Elem::clone);
    r.identity("right_unit", &b1, |x| mul(&x.insert(1, &a.unit), 0, 1), Elem::clone);
}

fn coalgebra_checks(r: &mut Report, c: &CoalgebraData) {
    let f = c.field();
    let n = c.dim();
    let b1 = basis_inputs(f, &[n]);
    let d = |x: &Elem, l: usize| x.apply(&[l], &c.comult);
    r.identity("coassociativity", &b1, |x| d(&d(x, 0), 0), |x| d(&d(x, 0), 1));
    r.identity("left_counit", &b1, |x| d(x, 0).apply(&[0], &c.counit), Elem::clone);
    r.identity("right_counit", &b1, |x| d(x, 0).apply(&[1], &c.counit), Elem::clone);
}

/// A weak bialgebra with its derived structure computed from the raw data.
///
/// Construction does not verify the axioms; use [`verify_weak_bialgebra`] or
/// [`WeakBialgebra::report`].
#[derive(Clone, Debug)]
pub struct WeakBialgebra {
    alg: AlgebraData,
    coalg: CoalgebraData,
    delta_one: Elem,
    eps_t: Op,
    eps_s: Op,
    eps_t_bar: Op,
    eps_s_bar: Op,
    target: Subspace,
    source: Subspace,
}

impl WeakBialgebra {
    pub fn new(alg: AlgebraData, coalg: CoalgebraData) -> Result<WeakBialgebra, Error> {
        if alg.dim() != coalg.dim() {
            return Err(Error::DimMismatch(format!("algebra has dimension {}, coalgebra {}", alg.dim(), coalg.dim())));
        }
        if alg.field() != coalg.field() {
            return Err(Error::Field(format!("algebra over {}, coalgebra over {}", alg.field(), coalg.field())));
        }
        let f = alg.field();
        let n = alg.dim();
        let delta_one = coalg.comult.eval(&alg.unit);
        let eps = &coalg.counit;
        let mult = &alg.mult;
        // ε_t(h) = ε(1₁h)1₂
        let eps_t = Op::from_fn(f, &[n], &[n], |h| {
            let x = delta_one.insert(1, &Elem::basis(f, &[n], h));
            x.apply(&[0, 1], mult).apply(&[0], eps)
        });
        // ε_s(h) = 1₁ε(h1₂)
        let eps_s = Op::from_fn(f, &[n], &[n], |h| {
            let x = delta_one.insert(1, &Elem::basis(f, &[n], h));
            x.apply(&[1, 2], mult).apply(&[1], eps)
        });
        // ε̄_t(h) = ε(h1₁)1₂
        let eps_t_bar = Op::from_fn(f, &[n], &[n], |h| {
            let x = delta_one.insert(0, &Elem::basis(f, &[n], h));
            x.apply(&[0, 1], mult).apply(&[0], eps)
        });
        // ε̄_s(h) = ε(1₂h)1₁
        let eps_s_bar = Op::from_fn(f, &[n], &[n], |h| {
            let x = delta_one.insert(2, &Elem::basis(f, &[n], h));
            x.apply(&[1, 2], mult).apply(&[1], eps)
        });
        let target = eps_t.to_matrix().image();
        let source = eps_s.to_matrix().image();
        Ok(WeakBialgebra { alg, coalg, delta_one, eps_t, eps_s, eps_t_bar, eps_s_bar, target, source })
    }

    pub fn field(&self) -> Field {
        self.alg.field()
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn algebra(&self) -> &AlgebraData {
        &self.alg
    }

    pub fn coalgebra(&self) -> &CoalgebraData {
        &self.coalg
    }

    pub fn mult(&self) -> &Op {
        &self.alg.mult
    }

    pub fn comult(&self) -> &Op {
        &self.coalg.comult
    }

    pub fn counit(&self) -> &Op {
        &self.coalg.counit
    }

    pub fn one(&self) -> &Elem {
        &self.alg.unit
    }

    pub fn basis(&self, i: usize) -> Elem {
        Elem::basis(self.field(), &[self.dim()], &[i])
    }

    /// `Δ(1)` as an element of `H⊗H`.
    pub fn delta_one(&self) -> &Elem {
        &self.delta_one
    }

    pub fn eps_t(&self) -> &Op {
        &self.eps_t
    }

    pub fn eps_s(&self) -> &Op {
        &self.eps_s
    }

    pub fn eps_t_bar(&self) -> &Op {
        &self.eps_t_bar
    }

    pub fn eps_s_bar(&self) -> &Op {
        &self.eps_s_bar
    }

    /// `H_t`, the image of `ε_t`.
    pub fn target_space(&self) -> &Subspace {
        &self.target
    }

    /// `H_s`, the image of `ε_s`.
    pub fn source_space(&self) -> &Subspace {
        &self.source
    }

    /// `e_t = ε_t(1₁)⊗1₂`.
    pub fn e_t(&self) -> Elem {
        self.delta_one.apply(&[0], &self.eps_t)
    }

    /// `e_s = 1₁⊗ε_s(1₂)`.
    pub fn e_s(&self) -> Elem {
        self.delta_one.apply(&[1], &self.eps_s)
    }

    /// Multiplies legs `a` and `b`, result at leg `a`'s slot.
    pub fn mul(&self, x: &Elem, a: usize, b: usize) -> Elem {
        x.apply(&[a, b], &self.alg.mult)
    }

    pub fn delta(&self, x: &Elem, leg: usize) -> Elem {
        x.apply(&[leg], &self.coalg.comult)
    }

    /// `Δ²` on one leg.
    pub fn delta2(&self, x: &Elem, leg: usize) -> Elem {
        self.delta(&self.delta(x, leg), leg)
    }

    pub fn eps(&self, x: &Elem, leg: usize) -> Elem {
        x.apply(&[leg], &self.coalg.counit)
    }

    /// Product of two single-leg elements.
    pub fn product(&self, a: &Elem, b: &Elem) -> Elem {
        self.mul(&a.tensor(b), 0, 1)
    }

    /// Coordinates of the unit object `H_t` ↪ `H`.
    pub fn target_inclusion(&self) -> Op {
        Op::linear(&self.target.inclusion())
    }

    /// Chart of `H_t` reading pivot coordinates; only meaningful on `H_t`.
    pub fn target_chart(&self) -> Op {
        Op::linear(&self.target.chart())
    }

    /// The full identity suite, starting with the defining axioms.
    pub fn report(&self) -> Report {
        let mut r = Report::new("weak bialgebra");
        algebra_checks(&mut r, &self.alg);
        coalgebra_checks(&mut r, &self.coalg);
        self.axiom_checks(&mut r);
        self.derived_checks(&mut r);
        self.counital_checks(&mut r);
        r
    }

    fn axiom_checks(&self, r: &mut Report) {
        let f = self.field();
        let n = self.dim();
        let trivial: Vec<Input> = vec![(Vec::new(), Elem::scalar(f.one()))];
        r.identity(
            "comultiplicativity",
            &basis_inputs(f, &[n, n]),
            |x| self.delta(&self.mul(x, 0, 1), 0),
            |x| {
                let y = self.delta(&self.delta(x, 0), 2);
                self.mul(&self.mul(&y, 0, 2), 1, 2)
            },
        );
        let d2 = self.delta2(self.one(), 0);
        let dd = self.delta_one.tensor(&self.delta_one);
        r.identity("weak_comultiplicativity_of_unit_left", &trivial, |_| d2.clone(), |_| self.mul(&dd, 1, 2));
        r.identity("weak_comultiplicativity_of_unit_right", &trivial, |_| d2.clone(), |_| self.mul(&dd, 2, 1));
        let b3 = basis_inputs(f, &[n, n, n]);
        let hkl = |x: &Elem| self.eps(&self.mul(&self.mul(x, 0, 1), 0, 1), 0);
        r.identity("weak_multiplicativity_of_counit_left", &b3, hkl, |x| {
            let y = self.delta(x, 1);
            let y = self.mul(&self.mul(&y, 0, 1), 1, 2);
            self.eps(&self.eps(&y, 0), 0)
        });
        r.identity("weak_multiplicativity_of_counit_right", &b3, hkl, |x| {
            let y = self.delta(x, 1);
            let y = self.mul(&self.mul(&y, 0, 2), 1, 2);
            self.eps(&self.eps(&y, 0), 0)
        });
    }

    fn derived_checks(&self, r: &mut Report) {
        let f = self.field();
        let n = self.dim();
        let b1 = basis_inputs(f, &[n]);
        let b2 = basis_inputs(f, &[n, n]);
        for (name, op) in [
            ("target_map_idempotent", &self.eps_t),
            ("source_map_idempotent", &self.eps_s),
            ("bar_target_map_idempotent", &self.eps_t_bar),
            ("bar_source_map_idempotent", &self.eps_s_bar),
        ] {
            r.identity(name, &b1, |x| x.apply(&[0], op).apply(&[0], op), |x| x.apply(&[0], op));
        }
        r.identity(
            "coproduct_against_target_map",
            &b1,
            |x| self.delta(x, 0).apply(&[1], &self.eps_t),
            |x| self.mul(&self.delta_one.insert(1, x), 0, 1),
        );
        r.identity(
            "coproduct_against_source_map",
            &b1,
            |x| self.delta(x, 0).apply(&[0], &self.eps_s),
            |x| self.mul(&self.delta_one.insert(1, x), 1, 2),
        );
        r.identity(
            "target_map_absorbed_on_left",
            &b2,
            |x| self.mul(&x.apply(&[1], &self.eps_t), 0, 1),
            |x| self.eps(&self.mul(&self.delta(x, 0), 0, 2), 0),
        );
        r.identity(
            "source_map_absorbed_on_right",
            &b2,
            |x| self.mul(&x.apply(&[0], &self.eps_s), 0, 1),
            |x| self.eps(&self.mul(&self.delta(x, 1), 0, 2), 0),
        );
        r.identity(
            "counit_ignores_target_map",
            &b2,
            |x| self.eps(&self.mul(&x.apply(&[1], &self.eps_t), 0, 1), 0),
            |x| self.eps(&self.mul(x, 0, 1), 0),
        );
        r.identity(
            "counit_ignores_source_map",
            &b2,
            |x| self.eps(&self.mul(&x.apply(&[0], &self.eps_s), 0, 1), 0),
            |x| self.eps(&self.mul(x, 0, 1), 0),
        );

        // the two alternative descriptions of H_t and H_s
        let d1 = &self.delta_one;
        let fixed_t = Op::from_fn(f, &[n], &[n, n], |h| {
            let e = Elem::basis(f, &[n], h);
            self.delta(&e, 0).sub(&self.mul(&d1.insert(1, &e), 0, 1))
        });
        let fixed_s = Op::from_fn(f, &[n], &[n, n], |h| {
            let e = Elem::basis(f, &[n], h);
            self.delta(&e, 0).sub(&self.mul(&d1.insert(1, &e), 1, 2))
        });
        let d1m = d1.flat();
        let left_slices: Vec<Vec<Scalar>> = (0..n).map(|i| (0..n).map(|j| d1m[i * n + j].clone()).collect()).collect();
        let right_slices: Vec<Vec<Scalar>> = (0..n).map(|j| (0..n).map(|i| d1m[i * n + j].clone()).collect()).collect();
        let t_kernel = fixed_t.to_matrix().kernel();
        let t_span = Subspace::span(f, n, &left_slices);
        let s_kernel = fixed_s.to_matrix().kernel();
        let s_span = Subspace::span(f, n, &right_slices);
        let t_ok = t_kernel == self.target && t_span == self.target;
        r.predicate(
            "target_space_characterizations_agree",
            t_ok,
            format!("dims {} / {} / {}", self.target.dim(), t_kernel.dim(), t_span.dim()),
        );
        let s_ok = s_kernel == self.source && s_span == self.source;
        r.predicate(
            "source_space_characterizations_agree",
            s_ok,
            format!("dims {} / {} / {}", self.source.dim(), s_kernel.dim(), s_span.dim()),
        );

        r.identity(
            "target_and_source_images_commute",
            &b2,
            |x| self.mul(&x.apply(&[0], &self.eps_t).apply(&[1], &self.eps_s), 0, 1),
            |x| self.mul(&x.apply(&[0], &self.eps_t).apply(&[1], &self.eps_s), 1, 0),
        );
        r.identity(
            "counital_maps_on_coproduct",
            &b1,
            |x| self.delta(x, 0).apply(&[0], &self.eps_s).apply(&[1], &self.eps_t),
            |x| self.delta(x, 0).swap(0, 1).apply(&[0], &self.eps_s).apply(&[1], &self.eps_t),
        );
        let trivial: Vec<Input> = vec![(Vec::new(), Elem::scalar(f.one()))];
        r.identity("target_map_fixes_unit", &trivial, |_| self.eps_t.eval(self.one()), |_| self.one().clone());
        r.identity("source_map_fixes_unit", &trivial, |_| self.eps_s.eval(self.one()), |_| self.one().clone());
        r.identity(
            "target_map_product_rule",
            &b2,
            |x| self.mul(&x.apply(&[0], &self.eps_t).apply(&[1], &self.eps_t), 0, 1),
            |x| self.mul(&x.apply(&[0], &self.eps_t), 0, 1).apply(&[0], &self.eps_t),
        );
        r.identity(
            "source_map_product_rule",
            &b2,
            |x| self.mul(&x.apply(&[0], &self.eps_s).apply(&[1], &self.eps_s), 0, 1),
            |x| self.mul(&x.apply(&[1], &self.eps_s), 0, 1).apply(&[0], &self.eps_s),
        );
        r.predicate("target_space_is_subalgebra", is_subalgebra(self, &self.target), format!("dimension {}", self.target.dim()));
        r.predicate("source_space_is_subalgebra", is_subalgebra(self, &self.source), format!("dimension {}", self.source.dim()));
        let st = tensor_subspace(&self.source, &self.target);
        r.predicate("unit_coproduct_in_source_tensor_target", st.contains(&d1m), "");
    }

    fn counital_checks(&self, r: &mut Report) {
        let f = self.field();
        let ht = subspace_inputs(&self.target);
        let hs = subspace_inputs(&self.source);
        let (t, s) = (&self.target, &self.source);
        r.predicate(
            "bar_source_maps_target_into_source",
            ht.iter().all(|(_, z)| s.contains(&self.eps_s_bar.eval(z).flat())),
            "",
        );
        r.identity("target_map_inverts_bar_source_on_target", &ht, |z| self.eps_t.eval(&self.eps_s_bar.eval(z)), Elem::clone);
        r.identity("bar_source_inverts_target_map_on_source", &hs, |y| self.eps_s_bar.eval(&self.eps_t.eval(y)), Elem::clone);
        let htt = product_inputs(&[ht.clone(), ht.clone()]);
        r.identity(
            "bar_source_anti_multiplicative_on_target",
            &htt,
            |x| self.mul(x, 0, 1).apply(&[0], &self.eps_s_bar),
            |x| self.mul(&x.apply(&[0], &self.eps_s_bar).apply(&[1], &self.eps_s_bar), 1, 0),
        );
        r.predicate(
            "bar_target_maps_source_into_target",
            hs.iter().all(|(_, y)| t.contains(&self.eps_t_bar.eval(y).flat())),
            "",
        );
        r.identity("source_map_inverts_bar_target_on_source", &hs, |y| self.eps_s.eval(&self.eps_t_bar.eval(y)), Elem::clone);
        r.identity("bar_target_inverts_source_map_on_target", &ht, |z| self.eps_t_bar.eval(&self.eps_s.eval(z)), Elem::clone);
        let hss = product_inputs(&[hs.clone(), hs.clone()]);
        r.identity(
            "bar_target_anti_multiplicative_on_source",
            &hss,
            |x| self.mul(x, 0, 1).apply(&[0], &self.eps_t_bar),
            |x| self.mul(&x.apply(&[0], &self.eps_t_bar).apply(&[1], &self.eps_t_bar), 1, 0),
        );

        let trivial: Vec<Input> = vec![(Vec::new(), Elem::scalar(f.one()))];
        let e_t = self.e_t();
        let e_s = self.e_s();
        r.identity("target_idempotent_two_forms", &trivial, |_| e_t.clone(), |_| {
            self.delta_one.apply(&[0], &self.eps_t_bar).swap(0, 1)
        });
        r.identity("source_idempotent_two_forms", &trivial, |_| e_s.clone(), |_| {
            self.delta_one.apply(&[1], &self.eps_s_bar).swap(0, 1)
        });
        r.predicate("target_idempotent_in_target_square", tensor_subspace(t, t).contains(&e_t.flat()), "");
        r.predicate("source_idempotent_in_source_square", tensor_subspace(s, s).contains(&e_s.flat()), "");
        r.identity("target_idempotent_separable", &trivial, |_| self.mul(&e_t, 0, 1), |_| self.one().clone());
        r.identity("source_idempotent_separable", &trivial, |_| self.mul(&e_s, 0, 1), |_| self.one().clone());
        r.identity(
            "target_idempotent_balanced",
            &ht,
            |z| self.mul(&e_t.insert(0, z), 0, 1),
            |z| self.mul(&e_t.insert(2, z), 1, 2),
        );
        r.identity(
            "source_idempotent_balanced",
            &hs,
            |y| self.mul(&e_s.insert(0, y), 0, 1),
            |y| self.mul(&e_s.insert(2, y), 1, 2),
        );
        for (label, e, space) in [("target", &e_t, &ht), ("source", &e_s, &hs)] {
            // Σ ε(z x_i) y_i = z = Σ x_i ε(y_i z)
            r.identity(
                format!("{label}_frobenius_system_left"),
                space,
                |z| self.eps(&self.mul(&e.insert(0, z), 0, 1), 0),
                Elem::clone,
            );
            r.identity(
                format!("{label}_frobenius_system_right"),
                space,
                |z| self.eps(&self.mul(&e.insert(2, z), 1, 2), 1),
                Elem::clone,
            );
        }
    }
}

fn is_subalgebra(h: &WeakBialgebra, space: &Subspace) -> bool {
    if !space.contains(&h.one().flat()) {
        return false;
    }
    let f = h.field();
    let basis: Vec<Elem> = space.basis().iter().map(|b| Elem::vector(f, b)).collect();
    basis.iter().all(|a| basis.iter().all(|b| space.contains(&h.product(a, b).flat())))
}

/// `U ⊗ V` as a subspace of the flattened tensor product.
pub fn tensor_subspace(u: &Subspace, v: &Subspace) -> Subspace {
    let f = u.field();
    let vectors: Vec<Vec<Scalar>> = u
        .basis()
        .iter()
        .flat_map(|a| v.basis().iter().map(move |b| Elem::vector(f, a).tensor(&Elem::vector(f, b)).flat()))
        .collect();
    Subspace::span(f, u.ambient_dim() * v.ambient_dim(), &vectors)
}

/// Verifies the weak bialgebra axioms and the derived identities.
pub fn verify_weak_bialgebra(alg: AlgebraData, coalg: CoalgebraData) -> Result<(Report, Option<WeakBialgebra>), Error> {
    let h = WeakBialgebra::new(alg, coalg)?;
    let report = h.report();
    let ok = report.passed();
    Ok((report, ok.then_some(h)))
}

/// A left `H`-module: `action` maps `[dim H, dim M] -> [dim M]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HModule {
    pub action: Op,
}

impl HModule {
    pub fn new(action: Op) -> Result<HModule, Error> {
        let ins = action.in_dims();
        if ins.len() != 2 || action.out_dims() != [ins[1]] {
            return Err(Error::DimMismatch(format!(
                "module action must map [h, m] -> [m], got {:?} -> {:?}",
                ins,
                action.out_dims()
            )));
        }
        Ok(HModule { action })
    }

    /// `H` acting on itself by left multiplication.
    pub fn regular(h: &WeakBialgebra) -> HModule {
        HModule { action: h.mult().clone() }
    }

    /// The unit object `H_t` in pivot coordinates with `h ⇀ z = ε_t(hz)`.
    pub fn unit_object(h: &WeakBialgebra) -> HModule {
        let f = h.field();
        let n = h.dim();
        let k = h.target_space().dim();
        let incl = h.target_inclusion();
        let chart = h.target_chart();
        let action = Op::from_fn(f, &[n, k], &[k], |idx| {
            let z = incl.eval(&Elem::basis(f, &[k], &[idx[1]]));
            let hz = h.product(&h.basis(idx[0]), &z);
            chart.eval(&h.eps_t().eval(&hz))
        });
        HModule { action }
    }

    pub fn dim(&self) -> usize {
        self.action.out_dims()[0]
    }

    pub fn hdim(&self) -> usize {
        self.action.in_dims()[0]
    }

    /// Acts with leg `h` on leg `m`; the result replaces leg `h`.
    pub fn act(&self, x: &Elem, h: usize, m: usize) -> Elem {
        x.apply(&[h, m], &self.action)
    }

    pub fn verify(&self, h: &WeakBialgebra) -> Report {
        let mut r = Report::new("module");
        let f = h.field();
        let (n, m) = (h.dim(), self.dim());
        r.identity(
            "module_associativity",
            &basis_inputs(f, &[n, n, m]),
            |x| self.act(&h.mul(x, 0, 1), 0, 1),
            |x| self.act(&self.act(x, 1, 2), 0, 1),
        );
        r.identity("module_unit", &basis_inputs(f, &[m]), |x| self.act(&x.insert(0, h.one()), 0, 1), Elem::clone);
        r
    }

    /// Verifies the module axioms, rejecting the module if any fails.
    pub fn checked(h: &WeakBialgebra, action: Op) -> Result<HModule, Error> {
        let m = HModule::new(action)?;
        if m.hdim() != h.dim() {
            return Err(Error::DimMismatch(format!("module over dimension {}, algebra has {}", m.hdim(), h.dim())));
        }
        let r = m.verify(h);
        let failed = r.failures().next().map(|c| c.name.clone());
        match failed {
            Some(name) => Err(Error::Invalid(format!("module axiom {name} fails"))),
            None => Ok(m),
        }
    }
}

/// Lets the legs of `hs` (one copy of `H` per factor) act factorwise on `v`.
pub fn act_factorwise(hs: &Elem, actions: &[&Op], v: &Elem) -> Elem {
    let k = actions.len();
    let mut x = hs.tensor(v);
    // interleave to [h0, v0, h1, v1, ...]
    let order: Vec<usize> = (0..k).flat_map(|i| [i, k + i]).collect();
    x = x.permute(&order);
    for (i, a) in actions.iter().enumerate() {
        x = x.apply(&[i, i + 1], a);
    }
    x
}

/// `Δ^{k-1}(h)` for an element of one leg.
pub fn iterated_coproduct(h: &WeakBialgebra, x: &Elem, factors: usize) -> Elem {
    let mut y = x.clone();
    for i in 1..factors {
        y = h.delta(&y, i - 1);
    }
    y
}

/// The diagonal action `[H, M_1, ..., M_k] -> [M_1, ..., M_k]`.
pub fn diagonal_action(h: &WeakBialgebra, actions: &[&Op]) -> Op {
    let f = h.field();
    let n = h.dim();
    let dims: Vec<usize> = actions.iter().map(|a| a.out_dims()[0]).collect();
    let mut in_dims = vec![n];
    in_dims.extend_from_slice(&dims);
    Op::from_fn(f, &in_dims, &dims, |idx| {
        let hk = iterated_coproduct(h, &h.basis(idx[0]), actions.len());
        act_factorwise(&hk, actions, &Elem::basis(f, &dims, &idx[1..]))
    })
}

/// `Δ^{k-1}(1)(M_1 ⊗ ... ⊗ M_k)` inside the full tensor product, with a chart
/// turning it into an ordinary module.
#[derive(Clone, Debug)]
pub struct TruncatedTensor {
    pub factor_dims: Vec<usize>,
    pub projector: Op,
    pub image: Subspace,
    include: Op,
    chart: Op,
}

impl TruncatedTensor {
    /// Image of an idempotent acting on `factor_dims`.
    pub fn from_projector(projector: Op) -> TruncatedTensor {
        let factor_dims = projector.in_dims().to_vec();
        let image = projector.to_matrix().image();
        let k = image.dim();
        let include = Op::from_matrix(&image.inclusion(), &[k], &factor_dims);
        let chart = Op::from_matrix(&image.chart(), &factor_dims, &[k]);
        TruncatedTensor { factor_dims, projector, image, include, chart }
    }

    pub fn dim(&self) -> usize {
        self.image.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.factor_dims.iter().product()
    }

    /// `[k] -> factor_dims`.
    pub fn include(&self) -> &Op {
        &self.include
    }

    /// `factor_dims -> [k]`; a left inverse of [`TruncatedTensor::include`].
    pub fn chart(&self) -> &Op {
        &self.chart
    }

    pub fn contains(&self, x: &Elem) -> bool {
        self.image.contains(&x.flat())
    }

    /// Basis of the image as ambient elements.
    pub fn inputs(&self) -> Vec<Input> {
        subspace_inputs_shaped(&self.image, &self.factor_dims)
    }

    /// Transports an operator acting on the ambient space (with extra leading
    /// legs `extra`) to chart coordinates.
    pub fn restrict_action(&self, extra: &[usize], action: &Op) -> Op {
        let f = action.field();
        let k = self.dim();
        let mut in_dims = extra.to_vec();
        in_dims.push(k);
        let e = extra.len();
        Op::from_fn(f, &in_dims, &[k], |idx| {
            let x = Elem::basis(f, &in_dims, idx);
            let x = x.apply(&[e], &self.include);
            let legs: Vec<usize> = (0..e + self.factor_dims.len()).collect();
            let y = x.apply(&legs, action);
            self.chart.eval(&y)
        })
    }
}

/// The projector `x ↦ Δ^{k-1}(1)·x` on `M_1 ⊗ ... ⊗ M_k`.
pub fn unit_projector(h: &WeakBialgebra, actions: &[&Op]) -> Op {
    let f = h.field();
    let dims: Vec<usize> = actions.iter().map(|a| a.out_dims()[0]).collect();
    let ones = iterated_coproduct(h, h.one(), actions.len());
    Op::from_fn(f, &dims, &dims, |idx| act_factorwise(&ones, actions, &Elem::basis(f, &dims, idx)))
}

/// `M ⊗_t N` and the diagonal module structure on it.
pub fn truncated_tensor(h: &WeakBialgebra, m: &HModule, n: &HModule) -> (TruncatedTensor, HModule) {
    let acts = [&m.action, &n.action];
    let t = TruncatedTensor::from_projector(unit_projector(h, &acts));
    let diag = diagonal_action(h, &acts);
    let module = HModule { action: t.restrict_action(&[h.dim()], &diag) };
    (t, module)
}

/// The unit constraints of one module, each as an operator between the
/// ambient spaces; truncated spaces use pivot coordinates for `H_t`.
#[derive(Clone, Debug)]
pub struct UnitConstraints {
    /// `H_t ⊗ M -> M`, `z⊗m ↦ zm`.
    pub left: Op,
    /// `M -> H_t ⊗ M`, `m ↦ ε_t(1₁)⊗1₂m`.
    pub left_inv: Op,
    /// `M ⊗ H_t -> M`, `m⊗z ↦ ε̄_s(z)m`.
    pub right: Op,
    /// `M -> M ⊗ H_t`, `m ↦ 1₁m⊗1₂`.
    pub right_inv: Op,
}

pub fn unit_constraints(h: &WeakBialgebra, m: &HModule) -> UnitConstraints {
    let f = h.field();
    let k = h.target_space().dim();
    let md = m.dim();
    let incl = h.target_inclusion();
    let chart = h.target_chart();
    let left = Op::from_fn(f, &[k, md], &[md], |idx| {
        let x = Elem::basis(f, &[k, md], idx).apply(&[0], &incl);
        m.act(&x, 0, 1)
    });
    let left_inv = Op::from_fn(f, &[md], &[k, md], |idx| {
        let x = h.delta_one().insert(2, &Elem::basis(f, &[md], idx));
        m.act(&x, 1, 2).apply(&[0], h.eps_t()).apply(&[0], &chart)
    });
    let right = Op::from_fn(f, &[md, k], &[md], |idx| {
        let x = Elem::basis(f, &[md, k], idx).apply(&[1], &incl).apply(&[1], h.eps_s_bar());
        m.act(&x, 1, 0)
    });
    let right_inv = Op::from_fn(f, &[md], &[md, k], |idx| {
        let x = h.delta_one().insert(2, &Elem::basis(f, &[md], idx));
        m.act(&x, 0, 2).apply(&[1], &chart)
    });
    UnitConstraints { left, left_inv, right, right_inv }
}

/// `M ⊗_{H_t} N` as a quotient of `M ⊗ N`, with the comparison map to `M ⊗_t N`.
#[derive(Clone, Debug)]
pub struct BalancedTensor {
    pub relations: Subspace,
    /// Quotient chart `M⊗N -> M⊗_{H_t}N`.
    pub quotient: Matrix,
    /// `π̄ : M⊗_{H_t}N -> M⊗_t N` in chart coordinates.
    pub pi_bar: Matrix,
    /// Inverse of `π̄` as stated: the class of an element of `M⊗_t N`.
    pub pi_bar_inv: Matrix,
}

pub fn tensor_over_target(h: &WeakBialgebra, m: &HModule, n: &HModule, truncated: &TruncatedTensor) -> BalancedTensor {
    let f = h.field();
    let (md, nd) = (m.dim(), n.dim());
    let mut rel = Vec::new();
    for z in h.target_space().basis() {
        let z = Elem::vector(f, z);
        let zbar = h.eps_s_bar().eval(&z);
        for a in 0..md {
            for b in 0..nd {
                let mn = Elem::basis(f, &[md, nd], &[a, b]);
                let left = m.act(&mn.insert(0, &zbar), 0, 1);
                let right = n.act(&mn.insert(1, &z), 1, 2);
                rel.push(left.sub(&right).flat());
            }
        }
    }
    let relations = Subspace::span(f, md * nd, &rel);
    let quotient = relations.quotient_chart();
    let section = relations.quotient_section();
    let p = truncated.projector.to_matrix();
    let pi_bar = truncated.image.chart().compose(&p).compose(&section);
    let pi_bar_inv = quotient.compose(&truncated.image.inclusion());
    BalancedTensor { relations, quotient, pi_bar, pi_bar_inv }
}

/// Checks of the monoidal structure on a list of named modules.
pub fn module_category_report(h: &WeakBialgebra, modules: &[(String, HModule)]) -> Report {
    let mut r = Report::new("module category");
    let f = h.field();
    let n = h.dim();
    let unit = HModule::unit_object(h);
    r.absorb("unit_object.", unit.verify(h));
    for (name, m) in modules {
        r.absorb(&format!("{name}."), m.verify(h));
        let md = m.dim();
        let uc = unit_constraints(h, m);
        let (lt, _) = truncated_tensor(h, &unit, m);
        let (rt, _) = truncated_tensor(h, m, &unit);
        let mb = basis_inputs(f, &[md]);
        r.identity(format!("{name}.left_unit_then_inverse"), &mb, |x| uc.left.eval(&uc.left_inv.eval(x)), Elem::clone);
        r.identity(format!("{name}.left_unit_inverse_then_unit"), &lt.inputs(), |x| uc.left_inv.eval(&uc.left.eval(x)), Elem::clone);
        r.identity(format!("{name}.right_unit_then_inverse"), &mb, |x| uc.right.eval(&uc.right_inv.eval(x)), Elem::clone);
        r.identity(format!("{name}.right_unit_inverse_then_unit"), &rt.inputs(), |x| uc.right_inv.eval(&uc.right.eval(x)), Elem::clone);
        r.predicate(
            format!("{name}.unit_constraint_dimensions"),
            lt.dim() == md && rt.dim() == md,
            format!("H_t⊗_t M has dimension {} of {}, M⊗_t H_t {} of {}", lt.dim(), lt.ambient_dim(), rt.dim(), rt.ambient_dim()),
        );
        let hn = basis_inputs(f, &[n]);
        let lin_left = product_inputs(&[hn.clone(), lt.inputs()]);
        let diag_l = diagonal_action(h, &[&unit.action, &m.action]);
        r.identity(
            format!("{name}.left_unit_linear"),
            &lin_left,
            |x| uc.left.eval(&x.apply(&[0, 1, 2], &diag_l)),
            |x| m.act(&x.apply(&[1, 2], &uc.left), 0, 1),
        );
        let lin_right = product_inputs(&[hn.clone(), rt.inputs()]);
        let diag_r = diagonal_action(h, &[&m.action, &unit.action]);
        r.identity(
            format!("{name}.right_unit_linear"),
            &lin_right,
            |x| uc.right.eval(&x.apply(&[0, 1, 2], &diag_r)),
            |x| m.act(&x.apply(&[1, 2], &uc.right), 0, 1),
        );
    }
    for (a, ma) in modules {
        for (b, mb) in modules {
            pair_checks(&mut r, h, &unit, (a, ma), (b, mb));
        }
    }
    if let Some((a, ma)) = modules.first() {
        let (b, mb) = modules.last().unwrap_or(&modules[0]);
        triple_checks(&mut r, h, (a, ma), (b, mb), (a, ma));
    }
    r
}

fn pair_checks(r: &mut Report, h: &WeakBialgebra, unit: &HModule, (a, ma): (&String, &HModule), (b, mb): (&String, &HModule)) {
    let f = h.field();
    let n = h.dim();
    let tag = format!("{a}⊗{b}");
    let acts = [&ma.action, &mb.action];
    let (t, _) = truncated_tensor(h, ma, mb);
    let p = &t.projector;
    let amb = basis_inputs(f, &t.factor_dims);
    r.identity(format!("{tag}.truncation_projector_idempotent"), &amb, |x| p.eval(&p.eval(x)), |x| p.eval(x));
    let diag = diagonal_action(h, &acts);
    let hx = product_inputs(&[basis_inputs(f, &[n]), amb.clone()]);
    r.identity(
        format!("{tag}.diagonal_action_preserves_truncation"),
        &hx,
        |x| p.eval(&x.apply(&[0, 1, 2], &diag)),
        |x| x.apply(&[0, 1, 2], &diag),
    );
    r.predicate(format!("{tag}.truncated_dimension"), true, format!("{} of {}", t.dim(), t.ambient_dim()));

    // (r_M ⊗ N) and (M ⊗ l_N) agree on M ⊗_t H_t ⊗_t N
    let ucm = unit_constraints(h, ma);
    let ucn = unit_constraints(h, mb);
    let triple = TruncatedTensor::from_projector(unit_projector(h, &[&ma.action, &unit.action, &mb.action]));
    r.identity(
        format!("{tag}.triangle_identity"),
        &triple.inputs(),
        |x| x.apply(&[0, 1], &ucm.right),
        |x| x.apply(&[1, 2], &ucn.left),
    );

    let bal = tensor_over_target(h, ma, mb, &t);
    let q = Op::linear(&bal.quotient);
    let relations = subspace_inputs_shaped(&bal.relations, &t.factor_dims);
    r.vanishes(format!("{tag}.bar_comparison_well_defined"), &relations, |x| p.eval(x));
    let k = t.dim();
    let qd = bal.quotient.rows();
    let id_k = Matrix::identity(f, k);
    let id_q = Matrix::identity(f, qd);
    r.predicate(
        format!("{tag}.bar_comparison_bijective"),
        bal.pi_bar.compose(&bal.pi_bar_inv) == id_k && bal.pi_bar_inv.compose(&bal.pi_bar) == id_q,
        format!("quotient dimension {qd}, truncated dimension {k}"),
    );
    // left H_t-linearity: π̄[zm⊗n] = z·π̄[m⊗n]
    let ht = subspace_inputs(h.target_space());
    let pi = Op::linear(&bal.pi_bar);
    let section = Op::linear(&bal.relations.quotient_section());
    let ins = product_inputs(&[ht, basis_inputs(f, &[qd])]);
    r.identity(
        format!("{tag}.bar_comparison_target_linear"),
        &ins,
        |x| {
            let y = x.apply(&[1], &section).reshape(&[n, ma.dim(), mb.dim()]);
            let y = ma.act(&y, 0, 1).reshape(&[ma.dim() * mb.dim()]);
            pi.eval(&q.eval(&y))
        },
        |x| {
            let y = x.apply(&[1], &pi).apply(&[1], t.include());
            t.chart().eval(&y.apply(&[0, 1, 2], &diag))
        },
    );
}

fn triple_checks(r: &mut Report, h: &WeakBialgebra, (a, ma): (&String, &HModule), (b, mb): (&String, &HModule), (c, mc): (&String, &HModule)) {
    let f = h.field();
    let tag = format!("{a}⊗{b}⊗{c}");
    let full = unit_projector(h, &[&ma.action, &mb.action, &mc.action]);
    let pab = unit_projector(h, &[&ma.action, &mb.action]);
    let pbc = unit_projector(h, &[&mb.action, &mc.action]);
    // P_{(MN),P} acts with (Δ⊗id)Δ(1), P_{M,(NP)} with (id⊗Δ)Δ(1)
    let d1 = h.delta_one();
    let left_ones = h.delta(d1, 0);
    let right_ones = h.delta(d1, 1);
    let dims = [ma.dim(), mb.dim(), mc.dim()];
    let acts = [&ma.action, &mb.action, &mc.action];
    let left = Op::from_fn(f, &dims, &dims, |idx| {
        let x = act_factorwise(&left_ones, &acts, &Elem::basis(f, &dims, idx));
        x.apply(&[0, 1], &pab)
    });
    let right = Op::from_fn(f, &dims, &dims, |idx| {
        let x = act_factorwise(&right_ones, &acts, &Elem::basis(f, &dims, idx));
        x.apply(&[1, 2], &pbc)
    });
    let amb = basis_inputs(f, &dims);
    r.identity(format!("{tag}.left_bracketing_projector"), &amb, |x| left.eval(x), |x| full.eval(x));
    r.identity(format!("{tag}.right_bracketing_projector"), &amb, |x| right.eval(x), |x| full.eval(x));
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `k{x, y}` with orthogonal idempotents and grouplike basis.
    fn discrete(f: Field) -> WeakBialgebra {
        let one = f.one();
        let alg = AlgebraData::from_table(f, 2, &[(0, 0, 0, one.clone()), (1, 1, 1, one.clone())], &[one.clone(), one.clone()]).unwrap();
        let co = CoalgebraData::from_table(f, 2, &[(0, 0, 0, one.clone()), (1, 1, 1, one.clone())], &[one.clone(), one]).unwrap();
        WeakBialgebra::new(alg, co).unwrap()
    }

    #[test]
    fn discrete_groupoid_is_weak_bialgebra() {
        let f = Field::Rational;
        let h = discrete(f);
        let r = h.report();
        assert!(r.passed(), "{r}");
        assert_eq!(h.target_space().dim(), 2);
        assert_eq!(h.delta_one().flat(), vec![f.one(), f.zero(), f.zero(), f.one()]);
        assert_eq!(h.e_t(), h.delta_one().clone());
    }

    #[test]
    fn discrete_groupoid_regular_tensor_has_dimension_two() {
        let h = discrete(Field::Rational);
        let reg = HModule::regular(&h);
        let (t, module) = truncated_tensor(&h, &reg, &reg);
        assert_eq!((t.dim(), t.ambient_dim()), (2, 4));
        assert!(module.verify(&h).passed());
        let bal = tensor_over_target(&h, &reg, &reg, &t);
        assert_eq!(bal.quotient.rows(), 2);
        let r = module_category_report(&h, &[("regular".into(), reg)]);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let f = Field::Rational;
        let alg = AlgebraData::from_table(f, 1, &[(0, 0, 0, f.one())], &[f.one()]).unwrap();
        let co = CoalgebraData::from_table(f, 2, &[], &[f.one(), f.one()]).unwrap();
        assert!(matches!(verify_weak_bialgebra(alg, co), Err(Error::DimMismatch(_))));
    }

    #[test]
    fn broken_unit_coproduct_is_localized() {
        let f = Field::Rational;
        let one = f.one();
        // Δ(x) = x⊗x + x⊗y breaks weak comultiplicativity of the unit
        let alg = AlgebraData::from_table(f, 2, &[(0, 0, 0, one.clone()), (1, 1, 1, one.clone())], &[one.clone(), one.clone()]).unwrap();
        let co = CoalgebraData::from_table(
            f,
            2,
            &[(0, 0, 0, one.clone()), (0, 0, 1, one.clone()), (1, 1, 1, one.clone())],
            &[one.clone(), one],
        )
        .unwrap();
        let (r, h) = verify_weak_bialgebra(alg, co).unwrap();
        assert!(h.is_none());
        assert!(!r.passed());
    }
}
