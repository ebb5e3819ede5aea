//! Antipodes: solving for them, verifying them and the identities they imply,
//! plus dual weak Hopf algebras and groupoid algebras.

mod groupoid;

use std::ops::Deref;

use crate::exactlin::{Elem, Field, Matrix, Op, Scalar, SolutionSet};
use crate::report::{basis_inputs, subspace_inputs, Input, Report};
use crate::weakbialg::{AlgebraData, CoalgebraData, WeakBialgebra};
use crate::Error;

pub use groupoid::{Groupoid, Morphism};

/// A weak bialgebra together with a bijective antipode.
#[derive(Clone, Debug)]
pub struct WeakHopf {
    base: WeakBialgebra,
    s: Op,
    s_inv: Op,
}

impl Deref for WeakHopf {
    type Target = WeakBialgebra;

    fn deref(&self) -> &WeakBialgebra {
        &self.base
    }
}

impl WeakHopf {
    /// Attaches an antipode; the axioms are not checked here.
    pub fn new(base: WeakBialgebra, s: Op) -> Result<WeakHopf, Error> {
        let n = base.dim();
        if s.in_dims() != [n] || s.out_dims() != [n] {
            return Err(Error::DimMismatch(format!("antipode must be an endomorphism of a {n}-dimensional space")));
        }
        let inv = s.to_matrix().inverse().ok_or(Error::NotBijective)?;
        Ok(WeakHopf { base, s, s_inv: Op::linear(&inv) })
    }

    pub fn from_parts(alg: AlgebraData, coalg: CoalgebraData, s: Op) -> Result<WeakHopf, Error> {
        WeakHopf::new(WeakBialgebra::new(alg, coalg)?, s)
    }

    pub fn base(&self) -> &WeakBialgebra {
        &self.base
    }

    pub fn antipode(&self) -> &Op {
        &self.s
    }

    pub fn antipode_inv(&self) -> &Op {
        &self.s_inv
    }

    pub fn s(&self, x: &Elem, leg: usize) -> Elem {
        x.apply(&[leg], &self.s)
    }

    pub fn s_inv(&self, x: &Elem, leg: usize) -> Elem {
        x.apply(&[leg], &self.s_inv)
    }

    /// Bialgebra suite followed by the antipode identities.
    pub fn report(&self) -> Report {
        let mut r = self.base.report();
        r.suite = "weak Hopf algebra".into();
        self.antipode_checks(&mut r);
        r
    }

    fn antipode_checks(&self, r: &mut Report) {
        let f = self.field();
        let n = self.dim();
        let b1 = basis_inputs(f, &[n]);
        let b2 = basis_inputs(f, &[n, n]);
        let (et, es, etb, esb) = (self.eps_t(), self.eps_s(), self.eps_t_bar(), self.eps_s_bar());
        let s = &self.s;
        let id = Op::identity(f, &[n]);
        let conv = |a: &Op, b: &Op| convolution(&self.base, a, b);

        r.equal_ops("antipode_left_convolution", &conv(s, &id), es);
        r.equal_ops("antipode_right_convolution", &conv(&id, s), et);
        r.equal_ops("antipode_middle_convolution", &conv(&conv(s, &id), s), s);
        r.identity("antipode_inverse_right", &b1, |x| self.s(&self.s_inv(x, 0), 0), Elem::clone);
        r.identity("antipode_inverse_left", &b1, |x| self.s_inv(&self.s(x, 0), 0), Elem::clone);
        r.equal_ops("source_map_convolved_with_antipode", &conv(es, s), s);
        r.equal_ops("antipode_convolved_with_target_map", &conv(s, et), s);

        r.identity(
            "antipode_anti_multiplicative",
            &b2,
            |x| self.s(&self.mul(x, 0, 1), 0),
            |x| self.mul(&self.s(&self.s(x, 0), 1), 1, 0),
        );
        let trivial: Vec<Input> = vec![(Vec::new(), Elem::scalar(f.one()))];
        r.identity("antipode_fixes_unit", &trivial, |_| s.eval(self.one()), |_| self.one().clone());
        r.identity(
            "antipode_anti_comultiplicative",
            &b1,
            |x| self.delta(&self.s(x, 0), 0),
            |x| {
                let y = self.delta(x, 0);
                self.s(&self.s(&y, 0), 1).swap(0, 1)
            },
        );
        r.identity("counit_invariant_under_antipode", &b1, |x| self.eps(&self.s(x, 0), 0), |x| self.eps(x, 0));

        r.identity(
            "target_map_of_product_absorbs",
            &b2,
            |x| et.eval(&self.mul(x, 0, 1)),
            |x| et.eval(&self.mul(&x.apply(&[1], et), 0, 1)),
        );
        r.identity(
            "target_map_of_product_adjoint",
            &b2,
            |x| et.eval(&self.mul(x, 0, 1)),
            |x| {
                // h₁ ε_t(g) S(h₂)
                let y = self.delta(&x.apply(&[1], et), 0);
                let y = self.s(&y, 1);
                self.mul(&self.mul(&y, 0, 2), 0, 1)
            },
        );
        r.identity(
            "source_map_of_product_absorbs",
            &b2,
            |x| es.eval(&self.mul(x, 0, 1)),
            |x| es.eval(&self.mul(&x.apply(&[0], es), 0, 1)),
        );
        r.identity(
            "source_map_of_product_adjoint",
            &b2,
            |x| es.eval(&self.mul(x, 0, 1)),
            |x| {
                // S(g₁) ε_s(h) g₂
                let y = self.delta(&x.apply(&[0], es), 1);
                let y = self.s(&y, 1);
                self.mul(&self.mul(&y, 1, 0), 0, 1)
            },
        );
        r.identity(
            "coproduct_of_target_map",
            &b1,
            |x| self.delta(&et.eval(x), 0),
            |x| {
                let y = self.s(&self.delta2(x, 0), 2);
                self.mul(&y, 0, 2).apply(&[1], et)
            },
        );
        r.identity(
            "coproduct_of_source_map",
            &b1,
            |x| self.delta(&es.eval(x), 0),
            |x| {
                let y = self.s(&self.delta2(x, 0), 0);
                self.mul(&y, 0, 2).apply(&[1], es).swap(0, 1)
            },
        );

        let d1 = self.delta_one();
        r.identity(
            "target_map_via_antipode_and_counit",
            &b1,
            |x| et.eval(x),
            |x| {
                // ε(S(h)1₁)1₂
                let y = d1.insert(0, &self.s(x, 0));
                self.eps(&self.mul(&y, 0, 1), 0)
            },
        );
        r.identity(
            "target_map_via_unit_coproduct",
            &b1,
            |x| et.eval(x),
            |x| {
                // ε(1₂h)S(1₁)
                let y = d1.insert(2, x);
                self.s(&self.eps(&self.mul(&y, 1, 2), 1), 0)
            },
        );
        r.identity("target_map_is_antipode_of_bar_source", &b1, |x| et.eval(x), |x| s.eval(&esb.eval(x)));
        r.identity(
            "source_map_via_antipode_and_counit",
            &b1,
            |x| es.eval(x),
            |x| {
                // 1₁ε(1₂S(h))
                let y = d1.insert(2, &self.s(x, 0));
                self.eps(&self.mul(&y, 1, 2), 1)
            },
        );
        r.identity(
            "source_map_via_unit_coproduct",
            &b1,
            |x| es.eval(x),
            |x| {
                // ε(h1₁)S(1₂)
                let y = d1.insert(0, x);
                self.s(&self.eps(&self.mul(&y, 0, 1), 0), 0)
            },
        );
        r.identity("source_map_is_antipode_of_bar_target", &b1, |x| es.eval(x), |x| s.eval(&etb.eval(x)));
        r.identity(
            "target_map_on_first_coproduct_leg",
            &b1,
            |x| self.delta(x, 0).apply(&[0], et),
            |x| self.mul(&self.s(d1, 0).insert(2, x), 1, 2),
        );
        r.identity(
            "source_map_on_second_coproduct_leg",
            &b1,
            |x| self.delta(x, 0).apply(&[1], es),
            |x| self.mul(&self.s(d1, 1).insert(0, x), 0, 1),
        );

        r.identity("target_map_after_antipode_equals_composite", &b1, |x| et.eval(&s.eval(x)), |x| et.eval(&es.eval(x)));
        r.identity("target_map_after_antipode_equals_antipode_after_source_map", &b1, |x| et.eval(&s.eval(x)), |x| {
            s.eval(&es.eval(x))
        });
        r.identity("source_map_after_antipode_equals_composite", &b1, |x| es.eval(&s.eval(x)), |x| es.eval(&et.eval(x)));
        r.identity("source_map_after_antipode_equals_antipode_after_target_map", &b1, |x| es.eval(&s.eval(x)), |x| {
            s.eval(&et.eval(x))
        });

        let ht = subspace_inputs(self.target_space());
        let hs = subspace_inputs(self.source_space());
        r.identity("antipode_on_target_is_source_map", &ht, |z| s.eval(z), |z| es.eval(z));
        r.identity("inverse_antipode_on_source_is_bar_target", &hs, |y| self.s_inv.eval(y), |y| etb.eval(y));
        let image = self.target_space().map(&s.to_matrix());
        r.equal_subspaces("antipode_maps_target_onto_source", &image, self.source_space());

        r.identity("target_idempotent_via_antipode", &trivial, |_| self.e_t(), |_| self.s(d1, 0));
        r.identity("source_idempotent_via_antipode", &trivial, |_| self.e_s(), |_| self.s(d1, 1));
        let s1 = self.s(d1, 0);
        r.identity(
            "target_element_balanced_across_antipode_idempotent",
            &ht,
            |z| self.mul(&s1.insert(0, z), 0, 1),
            |z| self.mul(&s1.insert(2, z), 1, 2),
        );
        r.identity(
            "source_element_moves_across_unit_coproduct",
            &hs,
            |y| self.mul(&d1.insert(0, y), 0, 1),
            |y| self.mul(&d1.insert(1, &self.s_inv(y, 0)), 1, 2),
        );
        r.identity(
            "target_element_moves_across_unit_coproduct",
            &ht,
            |z| self.mul(&d1.insert(1, &self.s_inv(z, 0)), 0, 1),
            |z| self.mul(&d1.insert(2, z), 1, 2),
        );
    }
}

/// `f * g = μ∘(f⊗g)∘Δ`.
pub fn convolution(h: &WeakBialgebra, a: &Op, b: &Op) -> Op {
    let f = h.field();
    let n = h.dim();
    Op::from_fn(f, &[n], &[n], |idx| {
        let y = h.delta(&h.basis(idx[0]), 0).apply(&[0], a).apply(&[1], b);
        h.mul(&y, 0, 1)
    })
}

pub fn verify_weak_hopf(h: &WeakHopf) -> Report {
    h.report()
}

/// Outcome of solving the linear antipode conditions.
#[derive(Clone, Debug)]
pub enum AntipodeSolution {
    Found(Op),
    NotFound { reason: String },
    /// The linear conditions do not determine `S`; `kernel` spans the
    /// directions of freedom around `particular`.
    Ambiguous { particular: Op, kernel: Vec<Op> },
}

fn unknown_op(field: Field, n: usize, x: &[Scalar]) -> Op {
    let m = Matrix::from_fn(field, n, n, |a, j| x[a * n + j].clone());
    Op::linear(&m)
}

/// Solves for the antipode.
///
/// Given `S*id = ε_s`, convolution associativity turns `S*id*S = S` into the
/// linear condition `ε_s*S = S`, so the three stacked linear systems
/// `S*id = ε_s`, `id*S = ε_t`, `ε_s*S = S` are equivalent to the antipode
/// axioms. The first two alone can be underdetermined (the discrete groupoid
/// algebra already shows this).
pub fn solve_antipode(h: &WeakBialgebra) -> Result<AntipodeSolution, Error> {
    let f = h.field();
    let n = h.dim();
    let id = Op::identity(f, &[n]);
    let unknowns = n * n;
    let blocks = 3;
    let mut system = Matrix::zeros(f, blocks * unknowns, unknowns);
    for a in 0..n {
        for j in 0..n {
            let u = a * n + j;
            let unit = Op::from_fn(f, &[n], &[n], |idx| {
                if idx[0] == j {
                    Elem::basis(f, &[n], &[a])
                } else {
                    Elem::zero(f, &[n])
                }
            });
            let left = convolution(h, &unit, &id).to_matrix();
            let right = convolution(h, &id, &unit).to_matrix();
            // ε_s*S - S
            let middle = convolution(h, h.eps_s(), &unit).sub(&unit).to_matrix();
            for i in 0..n {
                for b in 0..n {
                    system.set(i * n + b, u, left.get(b, i).clone());
                    system.set(unknowns + i * n + b, u, right.get(b, i).clone());
                    system.set(2 * unknowns + i * n + b, u, middle.get(b, i).clone());
                }
            }
        }
    }
    let es = h.eps_s().to_matrix();
    let et = h.eps_t().to_matrix();
    let mut rhs = vec![f.zero(); blocks * unknowns];
    for i in 0..n {
        for b in 0..n {
            rhs[i * n + b] = es.get(b, i).clone();
            rhs[unknowns + i * n + b] = et.get(b, i).clone();
        }
    }
    match system.solve(&rhs) {
        SolutionSet::Empty => Ok(AntipodeSolution::NotFound {
            reason: "S*id = ε_s, id*S = ε_t and ε_s*S = S have no common solution".into(),
        }),
        SolutionSet::Affine { particular, kernel } => Ok(AntipodeSolution::Ambiguous {
            particular: unknown_op(f, n, &particular),
            kernel: kernel.iter().map(|k| unknown_op(f, n, k)).collect(),
        }),
        SolutionSet::Unique(x) => {
            let s = unknown_op(f, n, &x);
            if convolution(h, &convolution(h, &s, &id), &s) != s {
                return Ok(AntipodeSolution::NotFound {
                    reason: "the solution of the linear conditions violates S*id*S = S".into(),
                });
            }
            if s.to_matrix().inverse().is_none() {
                return Err(Error::NotBijective);
            }
            Ok(AntipodeSolution::Found(s))
        }
    }
}

/// Dimension of the solution space of the two convolution conditions
/// `S*id = ε_s`, `id*S = ε_t` alone, or `None` if they are inconsistent.
pub fn convolution_conditions_freedom(h: &WeakBialgebra) -> Option<usize> {
    let f = h.field();
    let n = h.dim();
    let id = Op::identity(f, &[n]);
    let unknowns = n * n;
    let mut system = Matrix::zeros(f, 2 * unknowns, unknowns);
    let mut rhs = vec![f.zero(); 2 * unknowns];
    for a in 0..n {
        for j in 0..n {
            let unit = Op::from_fn(f, &[n], &[n], |idx| if idx[0] == j { Elem::basis(f, &[n], &[a]) } else { Elem::zero(f, &[n]) });
            let left = convolution(h, &unit, &id).to_matrix();
            let right = convolution(h, &id, &unit).to_matrix();
            for i in 0..n {
                for b in 0..n {
                    system.set(i * n + b, a * n + j, left.get(b, i).clone());
                    system.set(unknowns + i * n + b, a * n + j, right.get(b, i).clone());
                }
            }
        }
    }
    let (es, et) = (h.eps_s().to_matrix(), h.eps_t().to_matrix());
    for i in 0..n {
        for b in 0..n {
            rhs[i * n + b] = es.get(b, i).clone();
            rhs[unknowns + i * n + b] = et.get(b, i).clone();
        }
    }
    match system.solve(&rhs) {
        SolutionSet::Empty => None,
        SolutionSet::Unique(_) => Some(0),
        SolutionSet::Affine { kernel, .. } => Some(kernel.len()),
    }
}

/// The groupoid algebra `kG` with `Δ(g) = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn groupoid_algebra(g: &Groupoid, field: Field) -> WeakHopf {
    let n = g.len();
    let one = field.one();
    let mult: Vec<(usize, usize, usize, Scalar)> = g.table().into_iter().map(|(a, b, c)| (a, b, c, one.clone())).collect();
    let mut unit = vec![field.zero(); n];
    for x in 0..g.objects().len() {
        unit[g.identity(x)] = one.clone();
    }
    let alg = AlgebraData::from_table(field, n, &mult, &unit).expect("groupoid table is in range");
    let comult: Vec<(usize, usize, usize, Scalar)> = (0..n).map(|a| (a, a, a, one.clone())).collect();
    let coalg = CoalgebraData::from_table(field, n, &comult, &vec![one.clone(); n]).expect("coproduct table is in range");
    let s = Op::from_fn(field, &[n], &[n], |idx| Elem::basis(field, &[n], &[g.inverse(idx[0])]));
    WeakHopf::from_parts(alg, coalg, s).expect("groupoid inverse is a permutation")
}

/// `H*` with convolution product, unit `ε`, coproduct dual to `μ`, counit
/// evaluation at `1` and antipode `Sᵀ`, all in the dual basis.
pub fn dual_weak_hopf(h: &WeakHopf) -> WeakHopf {
    let f = h.field();
    let mult = h.comult().transpose();
    let unit = Elem::vector(f, &h.counit().transpose().column(&[]).flat());
    let comult = h.mult().transpose();
    let counit = Op::covector(f, &h.one().flat());
    let alg = AlgebraData { mult, unit };
    let coalg = CoalgebraData { comult, counit };
    WeakHopf::from_parts(alg, coalg, h.antipode().transpose()).expect("transpose of a bijection is a bijection")
}

/// `[h, h*, k] -> [h*]`, `h ⇀ h* ↼ k` with `⟨h⇀h*↼k, l⟩ = ⟨h*, klh⟩`.
pub fn hit_actions(h: &WeakHopf) -> Op {
    let f = h.field();
    let n = h.dim();
    Op::from_fn(f, &[n, n, n], &[n], |idx| {
        let (a, star, k) = (idx[0], idx[1], idx[2]);
        let mut out = Elem::zero(f, &[n]);
        for l in 0..n {
            let klh = h.product(&h.product(&h.basis(k), &h.basis(l)), &h.basis(a));
            out.add_term(vec![l], &klh.coeff(&[star]));
        }
        out
    })
}

/// Checks the hit actions against the Sweedler form and the bimodule law.
pub fn hit_action_report(h: &WeakHopf, dual: &WeakHopf) -> Report {
    let mut r = Report::new("hit actions");
    let f = h.field();
    let n = h.dim();
    let hit = hit_actions(h);
    let inputs = basis_inputs(f, &[n, n, n]);
    r.identity(
        "hit_actions_match_sweedler_form",
        &inputs,
        |x| x.apply(&[0, 1, 2], &hit),
        |x| {
            // ⟨h*₁, k⟩⟨h*₃, h⟩ h*₂ on [h, h*, k]
            let y = dual.delta2(x, 1);
            let pair = pairing(f, n);
            let y = y.apply(&[1, 4], &pair);
            y.apply(&[0, 2], &pair)
        },
    );
    let b5 = basis_inputs(f, &[n, n, n, n, n]);
    r.identity(
        "hit_actions_bimodule_law",
        &b5,
        |x| {
            // g ⇀ (h ⇀ h* ↼ k) ↼ l on [g, h, h*, k, l]
            let y = x.apply(&[1, 2, 3], &hit);
            y.apply(&[0, 1, 2], &hit)
        },
        |x| {
            let y = h.mul(x, 0, 1);
            let y = h.mul(&y, 2, 3);
            y.apply(&[0, 1, 2], &hit)
        },
    );
    r
}

/// The evaluation pairing `[h*, h] -> []` in dual bases.
pub fn pairing(field: Field, n: usize) -> Op {
    Op::from_fn(field, &[n, n], &[], |idx| Elem::scalar(if idx[0] == idx[1] { field.one() } else { field.zero() }))
}

/// Searches basis permutations `π` with `e_i ↦ e_{π(i)}` carrying every
/// structure map of `a` onto `b`. Only sensible for small dimensions.
pub fn permutation_isomorphism(a: &WeakHopf, b: &WeakHopf) -> Option<Vec<usize>> {
    let n = a.dim();
    if b.dim() != n || n > 8 {
        return None;
    }
    let f = a.field();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let p = Op::from_fn(f, &[n], &[n], |idx| Elem::basis(f, &[n], &[perm[idx[0]]]));
        let pp = p.kron(&p);
        let ok = a.mult().then(&p) == pp.then(b.mult())
            && p.eval(a.one()) == *b.one()
            && a.comult().then(&pp) == p.then(b.comult())
            && *a.counit() == p.then(b.counit())
            && a.antipode().then(&p) == p.then(b.antipode());
        if ok {
            return Some(perm);
        }
        if !next_permutation(&mut perm) {
            return None;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn algebras() -> Vec<(&'static str, WeakHopf)> {
        let f = Field::Rational;
        vec![
            ("cyclic2", groupoid_algebra(&Groupoid::cyclic(2).unwrap(), f)),
            ("discrete2", groupoid_algebra(&Groupoid::discrete(2).unwrap(), f)),
            ("pair2", groupoid_algebra(&Groupoid::pair(2).unwrap(), f)),
        ]
    }

    #[test]
    fn groupoid_algebras_pass_full_suite() {
        for (name, h) in algebras() {
            let r = h.report();
            assert!(r.passed(), "{name}: {r}");
            assert!(r.checks.len() >= 25);
        }
    }

    #[test]
    fn solver_recovers_groupoid_inverse() {
        for (name, h) in algebras() {
            match solve_antipode(h.base()).unwrap() {
                AntipodeSolution::Found(s) => assert_eq!(&s, h.antipode(), "{name}"),
                other => panic!("{name}: {other:?}"),
            }
        }
    }

    #[test]
    fn convolution_conditions_alone_leave_freedom_for_discrete_groupoid() {
        let h = groupoid_algebra(&Groupoid::discrete(2).unwrap(), Field::Rational);
        assert_eq!(convolution_conditions_freedom(h.base()), Some(2));
        let z2 = groupoid_algebra(&Groupoid::cyclic(2).unwrap(), Field::Rational);
        assert_eq!(convolution_conditions_freedom(z2.base()), Some(0));
    }

    #[test]
    fn pair_groupoid_target_map_is_target_identity() {
        let g = Groupoid::pair(2).unwrap();
        let h = groupoid_algebra(&g, Field::Rational);
        for m in 0..g.len() {
            let e = h.eps_t().eval(&h.basis(m));
            assert_eq!(e, h.basis(g.identity(g.target(m))));
        }
    }

    #[test]
    fn idempotent_monoid_has_no_antipode() {
        // k{1, a} with a² = a and grouplike basis: a bialgebra without antipode
        let f = Field::Rational;
        let one = f.one();
        let alg = AlgebraData::from_table(
            f,
            2,
            &[(0, 0, 0, one.clone()), (0, 1, 1, one.clone()), (1, 0, 1, one.clone()), (1, 1, 1, one.clone())],
            &[one.clone(), f.zero()],
        )
        .unwrap();
        let co = CoalgebraData::from_table(f, 2, &[(0, 0, 0, one.clone()), (1, 1, 1, one.clone())], &[one.clone(), one]).unwrap();
        let h = WeakBialgebra::new(alg, co).unwrap();
        assert!(h.report().passed());
        assert!(matches!(solve_antipode(&h).unwrap(), AntipodeSolution::NotFound { .. }));
    }

    #[test]
    fn duals_pass_and_double_dual_is_identity() {
        for (name, h) in algebras() {
            let d = dual_weak_hopf(&h);
            assert!(d.report().passed(), "{name}");
            let dd = dual_weak_hopf(&d);
            assert_eq!(dd.mult(), h.mult());
            assert_eq!(dd.comult(), h.comult());
            assert_eq!(dd.antipode(), h.antipode());
            assert!(hit_action_report(&h, &d).passed(), "{name}");
        }
    }

    #[test]
    fn discrete_groupoid_is_self_dual() {
        let h = groupoid_algebra(&Groupoid::discrete(2).unwrap(), Field::Rational);
        let d = dual_weak_hopf(&h);
        assert_eq!(permutation_isomorphism(&h, &d), Some(vec![0, 1]));
    }

    #[test]
    fn hit_action_translates_group_dual_basis() {
        let h = groupoid_algebra(&Groupoid::cyclic(2).unwrap(), Field::Rational);
        let hit = hit_actions(&h);
        let f = h.field();
        let x = Elem::basis(f, &[2, 2, 2], &[1, 0, 0]);
        assert_eq!(x.apply(&[0, 1, 2], &hit), Elem::basis(f, &[2], &[1]));
    }
}
