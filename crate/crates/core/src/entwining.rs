//! Algebras with a preunit, weak smash products, weak entwining structures and
//! weak Doi-Hopf data, with the canonical datum whose modules are the
//! left-right Yetter-Drinfeld modules.

use crate::exactlin::{lift, Elem, Field, Op, Subspace};
use crate::report::{basis_inputs, product_inputs, subspace_inputs, Report};
use crate::weakbialg::{AlgebraData, CoalgebraData, WeakBialgebra};
use crate::weakhopf::WeakHopf;
use crate::Error;

/// An associative algebra with a preunit `e` (`ea = ae = ae²`) and the
/// idempotent `p(a) = ae`.
#[derive(Clone, Debug)]
pub struct PreunitalAlgebra {
    pub mult: Op,
    pub preunit: Elem,
    pub p: Op,
    pub image: Subspace,
    pub kernel: Subspace,
}

/// `Im p` as a unital algebra, with the maps to and from the ambient algebra.
#[derive(Clone, Debug)]
pub struct PreunitQuotient {
    pub algebra: AlgebraData,
    /// `Im p -> A`.
    pub include: Op,
    /// `A -> Im p`, `a ↦ p(a)` in chart coordinates; kills `Ker p`.
    pub project: Op,
}

impl PreunitalAlgebra {
    pub fn new(mult: Op, preunit: Elem) -> Result<PreunitalAlgebra, Error> {
        let d = preunit.dims().to_vec();
        if d.len() != 1 || mult.in_dims() != [d[0], d[0]] || mult.out_dims() != [d[0]] {
            return Err(Error::DimMismatch(format!("multiplication {:?} -> {:?} with preunit of shape {:?}", mult.in_dims(), mult.out_dims(), d)));
        }
        let n = d[0];
        let f = preunit.field();
        let p = lift(f, &[n], &[n], |a| a.tensor(&preunit).apply(&[0, 1], &mult));
        let pm = p.to_matrix();
        Ok(PreunitalAlgebra { image: pm.image(), kernel: pm.kernel(), mult, preunit, p })
    }

    pub fn dim(&self) -> usize {
        self.preunit.dims()[0]
    }

    pub fn field(&self) -> Field {
        self.preunit.field()
    }

    pub fn product(&self, a: &Elem, b: &Elem) -> Elem {
        a.tensor(b).apply(&[0, 1], &self.mult)
    }

    pub fn quotient(&self) -> PreunitQuotient {
        let f = self.field();
        let n = self.dim();
        let k = self.image.dim();
        let include = Op::from_matrix(&self.image.inclusion(), &[k], &[n]);
        let chart = Op::from_matrix(&self.image.chart(), &[n], &[k]);
        let mult = lift(f, &[k, k], &[k], |x| {
            let y = x.apply(&[0], &include).apply(&[1], &include);
            chart.eval(&y.apply(&[0, 1], &self.mult))
        });
        let unit = chart.eval(&self.product(&self.preunit, &self.preunit));
        let project = self.p.then(&chart);
        PreunitQuotient { algebra: AlgebraData { mult, unit }, include, project }
    }

    pub fn verify(&self) -> Report {
        let mut r = Report::new("preunital algebra");
        let f = self.field();
        let n = self.dim();
        let e = &self.preunit;
        let m = &self.mult;
        r.identity(
            "associativity",
            &basis_inputs(f, &[n, n, n]),
            |x| x.apply(&[0, 1], m).apply(&[0, 1], m),
            |x| x.apply(&[1, 2], m).apply(&[0, 1], m),
        );
        let a = basis_inputs(f, &[n]);
        r.identity("preunit_left_equals_right", &a, |x| self.product(e, x), |x| self.product(x, e));
        r.identity("preunit_right_equals_square", &a, |x| self.product(x, e), |x| self.product(x, &self.product(e, e)));
        r.identity("projection_idempotent", &a, |x| self.p.eval(&self.p.eval(x)), |x| self.p.eval(x));
        r.identity(
            "projection_multiplicative",
            &basis_inputs(f, &[n, n]),
            |x| self.p.eval(&x.apply(&[0, 1], m)),
            |x| x.apply(&[0], &self.p).apply(&[1], &self.p).apply(&[0, 1], m),
        );
        let kernel_times = product_inputs(&[subspace_inputs(&self.kernel), a.clone()]);
        r.vanishes("kernel_is_left_ideal", &kernel_times, |x| self.p.eval(&x.swap(0, 1).apply(&[0, 1], m)));
        r.vanishes("kernel_is_right_ideal", &kernel_times, |x| self.p.eval(&x.apply(&[0, 1], m)));

        let q = self.quotient();
        let k = self.image.dim();
        let qa = &q.algebra;
        r.identity(
            "image_associativity",
            &basis_inputs(f, &[k, k, k]),
            |x| x.apply(&[0, 1], &qa.mult).apply(&[0, 1], &qa.mult),
            |x| x.apply(&[1, 2], &qa.mult).apply(&[0, 1], &qa.mult),
        );
        let kb = basis_inputs(f, &[k]);
        r.identity("image_left_unit", &kb, |x| qa.unit.tensor(x).apply(&[0, 1], &qa.mult), Elem::clone);
        r.identity("image_right_unit", &kb, |x| x.tensor(&qa.unit).apply(&[0, 1], &qa.mult), Elem::clone);
        // A/Ker p -> Im p, read through the quotient section
        let section = Op::linear(&self.kernel.quotient_section());
        let induced = section.then(&q.project).to_matrix();
        r.predicate(
            "coimage_to_image_bijective",
            induced.rows() == induced.cols() && induced.inverse().is_some(),
            format!("coimage dimension {}, image dimension {k}", n - self.kernel.dim()),
        );
        r.identity(
            "projection_onto_image_multiplicative",
            &basis_inputs(f, &[n, n]),
            |x| q.project.eval(&x.apply(&[0, 1], m)),
            |x| x.apply(&[0], &q.project).apply(&[1], &q.project).apply(&[0, 1], &qa.mult),
        );
        r
    }
}

/// `(A, B, R)` with `R: B⊗A -> A⊗B`, `R(b⊗a) = a_R ⊗ b_R`.
#[derive(Clone, Debug)]
pub struct WeakSmashStructure {
    pub a: AlgebraData,
    pub b: AlgebraData,
    pub r: Op,
}

impl WeakSmashStructure {
    pub fn new(a: AlgebraData, b: AlgebraData, r: Op) -> Result<WeakSmashStructure, Error> {
        let (na, nb) = (a.dim(), b.dim());
        if r.in_dims() != [nb, na] || r.out_dims() != [na, nb] {
            return Err(Error::DimMismatch(format!("R must map [{nb}, {na}] -> [{na}, {nb}], got {:?} -> {:?}", r.in_dims(), r.out_dims())));
        }
        Ok(WeakSmashStructure { a, b, r })
    }

    pub fn verify(&self) -> Report {
        let mut rep = Report::new("weak smash structure");
        let f = self.a.field();
        let (na, nb) = (self.a.dim(), self.b.dim());
        let (ma, mb, r) = (&self.a.mult, &self.b.mult, &self.r);
        rep.identity(
            "multiplicative_in_second_algebra",
            &basis_inputs(f, &[nb, nb, na]),
            |x| x.apply(&[0, 1], mb).apply(&[0, 1], r),
            |x| x.apply(&[1, 2], r).apply(&[0, 1], r).apply(&[1, 2], mb),
        );
        rep.identity(
            "multiplicative_in_first_algebra",
            &basis_inputs(f, &[nb, na, na]),
            |x| x.apply(&[1, 2], ma).apply(&[0, 1], r),
            |x| x.apply(&[0, 1], r).apply(&[1, 2], r).apply(&[0, 1], ma),
        );
        let r11 = r.eval(&self.b.unit.tensor(&self.a.unit));
        rep.identity(
            "unit_of_second_algebra",
            &basis_inputs(f, &[na]),
            |x| x.insert(0, &self.b.unit).apply(&[0, 1], r),
            |x| r11.insert(0, x).apply(&[0, 1], ma),
        );
        rep.identity(
            "unit_of_first_algebra",
            &basis_inputs(f, &[nb]),
            |x| x.tensor(&self.a.unit).apply(&[0, 1], r),
            |x| r11.insert(2, x).apply(&[1, 2], mb),
        );
        rep
    }

    /// `(a#b)(c#d) = ac_R # b_Rd` on the flattened `A⊗B`.
    pub fn smash_mult(&self) -> Op {
        let f = self.a.field();
        let (na, nb) = (self.a.dim(), self.b.dim());
        let d = na * nb;
        lift(f, &[d, d], &[d], |x| {
            let y = x.reshape(&[na, nb, na, nb]).apply(&[1, 2], &self.r);
            let y = y.apply(&[0, 1], &self.a.mult).apply(&[1, 2], &self.b.mult);
            y.reshape(&[d])
        })
    }
}

/// Builds `A #_R B`, rejecting structures that violate a smash law.
pub fn smash_product(s: &WeakSmashStructure) -> Result<(Report, PreunitalAlgebra), Error> {
    let rep = s.verify();
    if let Some(c) = rep.failures().next() {
        return Err(Error::Invalid(format!("smash law {} fails", c.name)));
    }
    let d = s.a.dim() * s.b.dim();
    let e = s.a.unit.tensor(&s.b.unit).reshape(&[d]);
    let pa = PreunitalAlgebra::new(s.smash_mult(), e)?;
    let mut report = pa.verify();
    report.suite = "weak smash product".into();
    let mut full = rep;
    full.absorb("", report);
    Ok((full, pa))
}

/// `(A, C, ψ)` with `ψ: A⊗C -> A⊗C`.
#[derive(Clone, Debug)]
pub struct WeakEntwining {
    pub a: AlgebraData,
    pub c: CoalgebraData,
    pub psi: Op,
}

impl WeakEntwining {
    pub fn new(a: AlgebraData, c: CoalgebraData, psi: Op) -> Result<WeakEntwining, Error> {
        let dims = [a.dim(), c.dim()];
        if psi.in_dims() != dims || psi.out_dims() != dims {
            return Err(Error::DimMismatch(format!("ψ must be an endomorphism of {dims:?}")));
        }
        Ok(WeakEntwining { a, c, psi })
    }

    /// `R(c*⊗a) = Σ_i ⟨c*, c_i^ψ⟩ a_ψ ⊗ c_i*` for `(A, C*, R)`.
    pub fn smash_structure(&self) -> WeakSmashStructure {
        let f = self.a.field();
        let (na, nc) = (self.a.dim(), self.c.dim());
        let r = Op::from_fn(f, &[nc, na], &[na, nc], |idx| {
            let (j, a) = (idx[0], idx[1]);
            let mut out = Elem::zero(f, &[na, nc]);
            for i in 0..nc {
                let v = self.psi.eval(&Elem::basis(f, &[na, nc], &[a, i]));
                for (k, c) in v.terms() {
                    if k[1] == j {
                        out.add_term(vec![k[0], i], c);
                    }
                }
            }
            out
        });
        let b = AlgebraData { mult: self.c.comult.transpose(), unit: Elem::vector(f, &self.c.counit.transpose().column(&[]).flat()) };
        WeakSmashStructure { a: self.a.clone(), b, r }
    }

    pub fn verify(&self) -> Report {
        let mut r = Report::new("weak entwining");
        let f = self.a.field();
        let (na, nc) = (self.a.dim(), self.c.dim());
        let (psi, ma) = (&self.psi, &self.a.mult);
        let (delta, eps) = (&self.c.comult, &self.c.counit);
        let one = &self.a.unit;
        let ac = basis_inputs(f, &[na, nc]);
        r.identity(
            "entwining_comultiplicative",
            &ac,
            |x| psi.eval(x).apply(&[1], delta),
            |x| x.apply(&[1], delta).apply(&[0, 2], psi).apply(&[0, 2], psi),
        );
        r.identity(
            "entwining_multiplicative",
            &basis_inputs(f, &[na, na, nc]),
            |x| x.apply(&[0, 1], ma).apply(&[0, 1], psi),
            |x| x.apply(&[1, 2], psi).apply(&[0, 2], psi).apply(&[0, 2], ma),
        );
        r.identity(
            "entwining_unit",
            &basis_inputs(f, &[nc]),
            |x| x.insert(0, one).apply(&[0, 1], psi),
            |x| x.apply(&[0], delta).insert(0, one).apply(&[0, 1], psi).apply(&[1], eps),
        );
        r.identity(
            "entwining_counit",
            &ac,
            |x| psi.eval(x).apply(&[1], eps),
            |x| x.insert(1, one).apply(&[1, 2], psi).apply(&[2], eps).apply(&[0, 1], ma),
        );
        r
    }

    /// Module and comodule laws and `ρ(am) = a_ψ m₀ ⊗ m₁^ψ` for a left
    /// `A`-action `[a, m] -> [m]` and right `C`-coaction `[m] -> [m, c]`.
    pub fn entwined_module_check(&self, action: &Op, coaction: &Op) -> Report {
        let mut r = Report::new("entwined module");
        let f = self.a.field();
        let na = self.a.dim();
        let m = action.out_dims()[0];
        r.identity(
            "module_associativity",
            &basis_inputs(f, &[na, na, m]),
            |x| x.apply(&[0, 1], &self.a.mult).apply(&[0, 1], action),
            |x| x.apply(&[1, 2], action).apply(&[0, 1], action),
        );
        let mb = basis_inputs(f, &[m]);
        r.identity("module_unit", &mb, |x| x.insert(0, &self.a.unit).apply(&[0, 1], action), Elem::clone);
        r.identity(
            "comodule_coassociativity",
            &mb,
            |x| coaction.eval(x).apply(&[0], coaction),
            |x| coaction.eval(x).apply(&[1], &self.c.comult),
        );
        r.identity("comodule_counit", &mb, |x| coaction.eval(x).apply(&[1], &self.c.counit), Elem::clone);
        r.identity(
            "entwined_compatibility",
            &basis_inputs(f, &[na, m]),
            |x| x.apply(&[0, 1], action).apply(&[0], coaction),
            |x| x.apply(&[1], coaction).apply(&[0, 2], &self.psi).apply(&[0, 2], action),
        );
        r
    }
}

/// `[a#c*]·m = ⟨c*, m₁⟩ a m₀` on a module over the flattened `A⊗C*`.
pub fn smash_module_action(na: usize, nc: usize, action: &Op, coaction: &Op) -> Op {
    let f = action.field();
    let m = action.out_dims()[0];
    lift(f, &[na * nc, m], &[m], |x| {
        let y = x.reshape(&[na, nc, m]).apply(&[2], coaction);
        // [a, c*, m0, m1]: pair c* with m1
        let mut paired = Elem::zero(f, &[na, m]);
        for (idx, c) in y.terms() {
            if idx[1] == idx[3] {
                paired.add_term(vec![idx[0], idx[2]], c);
            }
        }
        paired.apply(&[0, 1], action)
    })
}

/// A left-right weak Doi-Hopf datum: `K` a weak bialgebra, `A` a right
/// `K`-comodule algebra, `C` a left `K`-module coalgebra.
#[derive(Clone, Debug)]
pub struct DoiHopfDatum {
    pub k: WeakBialgebra,
    pub a: AlgebraData,
    /// `[a] -> [a, k]`.
    pub coaction: Op,
    pub c: CoalgebraData,
    /// `[k, c] -> [c]`.
    pub action: Op,
}

impl DoiHopfDatum {
    pub fn verify(&self) -> Report {
        let mut r = Report::new("weak Doi-Hopf datum");
        let k = &self.k;
        let f = k.field();
        let (nk, na, nc) = (k.dim(), self.a.dim(), self.c.dim());
        let (rho, act) = (&self.coaction, &self.action);
        let ab = basis_inputs(f, &[na]);
        r.identity("comodule_coassociativity", &ab, |x| rho.eval(x).apply(&[0], rho), |x| k.delta(&rho.eval(x), 1));
        r.identity("comodule_counit", &ab, |x| k.eps(&rho.eval(x), 1), Elem::clone);
        r.identity(
            "coaction_multiplicative",
            &basis_inputs(f, &[na, na]),
            |x| x.apply(&[0, 1], &self.a.mult).apply(&[0], rho),
            |x| {
                let y = x.apply(&[0], rho).apply(&[2], rho);
                k.mul(&y.apply(&[0, 2], &self.a.mult), 1, 2)
            },
        );
        let rho1 = rho.eval(&self.a.unit);
        r.predicate("coaction_of_unit_through_target", rho1.apply(&[1], k.eps_t()) == rho1, "");
        let kc = basis_inputs(f, &[nk, nk, nc]);
        r.identity(
            "module_associativity",
            &kc,
            |x| k.mul(x, 0, 1).apply(&[0, 1], act),
            |x| x.apply(&[1, 2], act).apply(&[0, 1], act),
        );
        r.identity("module_unit", &basis_inputs(f, &[nc]), |x| x.insert(0, k.one()).apply(&[0, 1], act), Elem::clone);
        r.identity(
            "action_comultiplicative",
            &basis_inputs(f, &[nk, nc]),
            |x| x.apply(&[0, 1], act).apply(&[0], &self.c.comult),
            |x| k.delta(x, 0).apply(&[2], &self.c.comult).apply(&[0, 2], act).apply(&[1, 2], act),
        );
        r.identity(
            "action_counit",
            &kc,
            |x| k.mul(x, 0, 1).apply(&[0, 1], act).apply(&[0], &self.c.counit),
            |x| {
                let y = k.delta(x, 1).apply(&[1, 3], act).apply(&[1], &self.c.counit);
                k.eps(&k.mul(&y, 0, 1), 0)
            },
        );
        r
    }

    /// `ψ(a⊗c) = a₀ ⊗ a₁c`.
    pub fn entwining(&self) -> WeakEntwining {
        let f = self.k.field();
        let dims = [self.a.dim(), self.c.dim()];
        let psi = lift(f, &dims, &dims, |x| x.apply(&[0], &self.coaction).apply(&[1, 2], &self.action));
        WeakEntwining { a: self.a.clone(), c: self.c.clone(), psi }
    }
}

/// `H^op ⊗ H` as a weak bialgebra on one flattened leg, `(a⊗b)(c⊗d) = ca⊗bd`.
pub fn op_tensor(h: &WeakHopf) -> WeakBialgebra {
    let alg = h.algebra().opposite().tensor(h.algebra());
    let coalg = h.coalgebra().tensor(h.coalgebra());
    WeakBialgebra::new(alg, coalg).expect("tensor of weak bialgebras has consistent shapes")
}

/// The datum `(H^op⊗H, H, H)`: `ρ(h) = h₂ ⊗ (S⁻¹(h₁)⊗h₃)`, `(k⊗h)▷c = hck`.
pub fn canonical_yd_datum(h: &WeakHopf) -> DoiHopfDatum {
    let f = h.field();
    let n = h.dim();
    let k = op_tensor(h);
    let coaction = lift(f, &[n], &[n, n * n], |x| {
        let y = h.s_inv(&h.delta2(x, 0), 0);
        y.permute(&[1, 0, 2]).reshape(&[n, n * n])
    });
    let action = lift(f, &[n * n, n], &[n], |x| {
        let y = x.reshape(&[n, n, n]);
        // [k, h, c] -> h c k
        h.mul(&h.mul(&y, 1, 2), 1, 0)
    });
    DoiHopfDatum { k, a: h.algebra().clone(), coaction, c: h.coalgebra().clone(), action }
}

/// `ψ(h⊗k) = h₂ ⊗ h₃kS⁻¹(h₁)`.
pub fn canonical_entwining(h: &WeakHopf) -> WeakEntwining {
    let f = h.field();
    let n = h.dim();
    let psi = lift(f, &[n, n], &[n, n], |x| {
        let y = h.s_inv(&h.delta2(x, 0), 0);
        // [S⁻¹h₁, h₂, h₃, k]
        h.mul(&h.mul(&y, 2, 3), 2, 0)
    });
    WeakEntwining { a: h.algebra().clone(), c: h.coalgebra().clone(), psi }
}
