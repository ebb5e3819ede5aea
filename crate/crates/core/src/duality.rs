//! Left duality for left-left Yetter-Drinfeld modules: the dual module,
//! evaluation and coevaluation, and the zig-zag identities through the unit
//! constraints.
//!
//! `M*` uses the coordinate dual basis, so an element of `M*` has the same
//! number of coordinates as `M` and `⟨e^i, e_j⟩ = δ_ij`.

use crate::exactlin::{lift, Elem, Matrix, Op};
use crate::report::{basis_inputs, product_inputs, Report};
use crate::weakbialg::unit_constraints;
use crate::weakhopf::{pairing, WeakHopf};
use crate::yetterdrinfeld::{ambient_action, ambient_coaction, check_yd, yd_morphisms, yd_tensor, yd_unit_object, Variant, YdModule, YdTensor};
use crate::Error;

/// `⟨h·m*, m⟩ = ⟨m*, S(h)m⟩`.
pub fn dual_action(h: &WeakHopf, m: &YdModule) -> Op {
    let f = h.field();
    let (n, d) = (h.dim(), m.dim());
    lift(f, &[n, d], &[d], |x| {
        // coefficient of e_j in S(h)e_v, as a function of v
        let mut out = Elem::zero(f, &[d]);
        for (idx, c) in x.terms() {
            for v in 0..d {
                let sv = m.act(&h.s(&h.basis(idx[0]), 0).tensor(&Elem::basis(f, &[d], &[v])), 0, 1);
                out.add_term(vec![v], &(c * &sv.coeff(&[idx[1]])));
            }
        }
        out
    })
}

/// `λ(m*) = Σ_i ⟨m*, n_{i[0]}⟩ S⁻¹(n_{i[-1]}) ⊗ n_i*`.
pub fn dual_coaction(h: &WeakHopf, m: &YdModule) -> Op {
    let f = h.field();
    let (n, d) = (h.dim(), m.dim());
    lift(f, &[d], &[n, d], |x| {
        let mut out = Elem::zero(f, &[n, d]);
        for (j, c) in x.terms() {
            for i in 0..d {
                let li = h.s_inv(&m.coact(&Elem::basis(f, &[d], &[i]), 0), 0);
                for (k, a) in li.terms() {
                    if k[1] == j[0] {
                        out.add_term(vec![k[0], i], &(c * a));
                    }
                }
            }
        }
        out
    })
}

/// `M*` as a left-left Yetter-Drinfeld module.
pub fn dual_yd(h: &WeakHopf, m: &YdModule) -> Result<YdModule, Error> {
    if m.variant != Variant::LL {
        return Err(Error::VariantMismatch(format!("duals are built for left-left modules, got {}", m.variant)));
    }
    Ok(YdModule { variant: Variant::LL, action: dual_action(h, m), coaction: dual_coaction(h, m) })
}

/// Evaluation and coevaluation of a module and a chosen dual.
#[derive(Clone, Debug)]
pub struct LeftDual {
    pub dual: YdModule,
    /// `M*⊗_t M` inside `M*⊗M`.
    pub source: YdTensor,
    /// `M⊗_t M*` inside `M⊗M*`.
    pub target: YdTensor,
    /// `[m*, m] -> [H_t]`, `m*⊗m ↦ ⟨m*, 1₁m⟩1₂`.
    pub ev: Op,
    /// `[H_t] -> [m, m*]`, `z ↦ z·Σ n_i⊗n_i*`.
    pub coev: Op,
}

pub fn ev_coev(h: &WeakHopf, m: &YdModule, dual: &YdModule) -> Result<LeftDual, Error> {
    let f = h.field();
    let d = m.dim();
    let kt = h.target_space().dim();
    let pair = pairing(f, d);
    let chart = h.target_chart();
    let incl = h.target_inclusion();
    let ev = lift(f, &[d, d], &[kt], |x| {
        let y = x.tensor(h.delta_one());
        // [m*, m, 1₁, 1₂]
        let y = m.act(&y, 2, 1).apply(&[0, 1], &pair);
        chart.eval(&y)
    });
    let mut casimir = Elem::zero(f, &[d, d]);
    for i in 0..d {
        casimir.add_term(vec![i, i], &f.one());
    }
    let diag = ambient_action(h, m, dual);
    let coev = lift(f, &[kt], &[d, d], |z| incl.eval(z).tensor(&casimir).apply(&[0, 1, 2], &diag));
    let source = yd_tensor(h, dual, m)?;
    let target = yd_tensor(h, m, dual)?;
    Ok(LeftDual { dual: dual.clone(), source, target, ev, coev })
}

/// Dual-module laws, (co)linearity of `ev` and `coev`, and the zig-zag
/// identities, for `M` and the given dual.
pub fn verify_left_duality_with(h: &WeakHopf, m: &YdModule, dual: &YdModule) -> Result<Report, Error> {
    let f = h.field();
    let (n, d) = (h.dim(), m.dim());
    let mut rep = Report::new("left duality");
    let pair = pairing(f, d);
    rep.identity(
        "dual_action_pairing",
        &basis_inputs(f, &[n, d, d]),
        |x| dual.act(x, 0, 1).apply(&[0, 1], &pair),
        |x| m.act(&h.s(x, 0), 0, 2).apply(&[0, 1], &pair),
    );
    rep.identity(
        "dual_coaction_pairing",
        &basis_inputs(f, &[d, d]),
        |x| h.s(&dual.coact(x, 0).apply(&[1, 2], &pair), 0),
        |x| m.coact(x, 1).apply(&[0, 2], &pair),
    );
    let dual_rep = dual.verify(h);
    rep.absorb("dual.", dual_rep);

    let ld = ev_coev(h, m, dual)?;
    let unit = yd_unit_object(h);
    let kt = unit.dim();
    let (ev, coev) = (&ld.ev, &ld.coev);
    rep.identity(
        "evaluation_depends_only_on_truncation",
        &basis_inputs(f, &[d, d]),
        |x| ev.eval(&ld.source.space.projector.eval(x)),
        |x| ev.eval(x),
    );
    rep.vanishes("coevaluation_lands_in_truncation", &basis_inputs(f, &[kt]), |z| {
        let y = coev.eval(z);
        y.sub(&ld.target.space.projector.eval(&y))
    });
    let src_act = ambient_action(h, dual, m);
    let tgt_act = ambient_action(h, m, dual);
    let src = product_inputs(&[basis_inputs(f, &[n]), ld.source.space.inputs()]);
    rep.identity(
        "evaluation_is_linear",
        &src,
        |x| x.apply(&[0, 1, 2], &src_act).apply(&[0, 1], ev),
        |x| x.apply(&[1, 2], ev).apply(&[0, 1], &unit.action),
    );
    rep.identity(
        "coevaluation_is_linear",
        &basis_inputs(f, &[n, kt]),
        |x| x.apply(&[0, 1], &unit.action).apply(&[0], coev),
        |x| x.apply(&[1], coev).apply(&[0, 1, 2], &tgt_act),
    );
    rep.identity(
        "evaluation_is_colinear",
        &ld.source.space.inputs(),
        |x| ambient_coaction(h, dual, m, x).apply(&[1, 2], ev),
        |x| unit.coact(&ev.eval(x), 0),
    );
    rep.identity(
        "coevaluation_is_colinear",
        &basis_inputs(f, &[kt]),
        |z| ambient_coaction(h, m, dual, &coev.eval(z)),
        |z| unit.coact(z, 0).apply(&[1], coev),
    );

    let um = unit_constraints(h, &m.module().expect("left action"));
    let ud = unit_constraints(h, &dual.module().expect("left action"));
    rep.identity(
        "zigzag_on_module",
        &basis_inputs(f, &[d]),
        |x| {
            let y = um.left_inv.eval(x).apply(&[0], coev);
            um.right.eval(&y.apply(&[1, 2], ev))
        },
        Elem::clone,
    );
    rep.identity(
        "zigzag_on_dual",
        &basis_inputs(f, &[d]),
        |x| {
            let y = ud.right_inv.eval(x).apply(&[1], coev);
            ud.left.eval(&y.apply(&[0, 1], ev))
        },
        Elem::clone,
    );
    Ok(rep)
}

/// [`verify_left_duality_with`] for the dual built by [`dual_yd`].
pub fn verify_left_duality(h: &WeakHopf, m: &YdModule) -> Result<Report, Error> {
    let dual = dual_yd(h, m)?;
    verify_left_duality_with(h, m, &dual)
}

/// `M**` against `M` with action `S²(h)m` and coaction `S⁻²(m₋₁)⊗m₀`.
pub fn double_dual_report(h: &WeakHopf, m: &YdModule) -> Result<Report, Error> {
    let mut rep = Report::new("double dual");
    let dd = dual_yd(h, &dual_yd(h, m)?)?;
    let f = h.field();
    let (n, d) = (h.dim(), m.dim());
    rep.identity(
        "double_dual_action_is_twisted_by_square_antipode",
        &basis_inputs(f, &[n, d]),
        |x| dd.act(x, 0, 1),
        |x| m.act(&h.s(&h.s(x, 0), 0), 0, 1),
    );
    rep.identity(
        "double_dual_coaction_is_twisted_by_inverse_square_antipode",
        &basis_inputs(f, &[d]),
        |x| dd.coact(x, 0),
        |x| h.s_inv(&h.s_inv(&m.coact(x, 0), 0), 0),
    );
    Ok(rep)
}

/// Searches the Yetter-Drinfeld morphisms `A -> B` for an isomorphism.
pub fn find_isomorphism(h: &WeakHopf, a: &YdModule, b: &YdModule) -> Result<Option<Matrix>, Error> {
    if a.dim() != b.dim() {
        return Ok(None);
    }
    let basis = yd_morphisms(h, a, b)?;
    let f = h.field();
    let mut candidates: Vec<Matrix> = basis.clone();
    if let Some(first) = basis.first() {
        let mut generic = Matrix::zeros(f, first.rows(), first.cols());
        for (i, b) in basis.iter().enumerate() {
            generic = generic.add(&b.scale(&f.int(i as i64 + 1)));
        }
        candidates.insert(0, generic);
    }
    Ok(candidates.into_iter().find(|m| m.inverse().is_some()))
}

/// `H_t* ≅ H_t` as Yetter-Drinfeld modules.
pub fn unit_self_duality_report(h: &WeakHopf) -> Result<Report, Error> {
    let mut rep = Report::new("unit object duality");
    let unit = yd_unit_object(h);
    let dual = dual_yd(h, &unit)?;
    let (r, _) = check_yd(h, Variant::LL, dual.action.clone(), dual.coaction.clone())?;
    rep.absorb("dual_unit.", r);
    let iso = find_isomorphism(h, &dual, &unit)?;
    rep.predicate("dual_unit_is_isomorphic_to_unit", iso.is_some(), format!("dimension {}", unit.dim()));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Field;
    use crate::weakhopf::{groupoid_algebra, Groupoid};
    use crate::yetterdrinfeld::{graded_coaction, groupoid_corpus, loop_conjugation, yd_adjoint};

    fn corpus() -> Vec<(String, WeakHopf, YdModule)> {
        let f = Field::Rational;
        let mut out = Vec::new();
        for (name, g) in [("cyclic2", Groupoid::cyclic(2)), ("discrete2", Groupoid::discrete(2)), ("pair2", Groupoid::pair(2))] {
            let g = g.unwrap();
            let h = groupoid_algebra(&g, f);
            for (m, module) in groupoid_corpus(&h, &g) {
                out.push((format!("{name}/{m}"), h.clone(), module));
            }
        }
        out
    }

    #[test]
    fn every_corpus_module_has_a_left_dual() {
        for (name, h, m) in corpus() {
            let rep = verify_left_duality(&h, &m).unwrap();
            assert!(rep.passed(), "{name}: {rep}");
            let rep = double_dual_report(&h, &m).unwrap();
            assert!(rep.passed(), "{name}: {rep}");
        }
    }

    #[test]
    fn unit_object_is_self_dual() {
        for g in [Groupoid::cyclic(2), Groupoid::discrete(2), Groupoid::pair(2)] {
            let h = groupoid_algebra(&g.unwrap(), Field::Rational);
            let rep = unit_self_duality_report(&h).unwrap();
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn z2_adjoint_double_dual_is_the_module() {
        let h = groupoid_algebra(&Groupoid::cyclic(2).unwrap(), Field::Rational);
        let m = yd_adjoint(&h);
        let dd = dual_yd(&h, &dual_yd(&h, &m).unwrap()).unwrap();
        assert_eq!(dd.action.to_matrix(), m.action.to_matrix());
        assert_eq!(dd.coaction.to_matrix(), m.coaction.to_matrix());
    }

    #[test]
    fn dual_of_graded_module_has_inverse_degree() {
        let f = Field::Rational;
        let g = Groupoid::cyclic(3).unwrap();
        let h = groupoid_algebra(&g, f);
        let (action, loops) = loop_conjugation(&g, f);
        let m = YdModule { variant: Variant::LL, action, coaction: graded_coaction(f, h.dim(), &loops) };
        let dual = dual_yd(&h, &m).unwrap();
        let inverse: Vec<usize> = loops.iter().map(|&l| g.inverse(l)).collect();
        assert_eq!(dual.coaction.to_matrix(), graded_coaction(f, h.dim(), &inverse).to_matrix());
    }

    #[test]
    fn corrupted_dual_coaction_breaks_colinearity_of_evaluation() {
        let f = Field::Rational;
        let g = Groupoid::pair(2).unwrap();
        let h = groupoid_algebra(&g, f);
        let m = groupoid_corpus(&h, &g).remove(2).1;
        let good = dual_yd(&h, &m).unwrap();
        let mut c = good.coaction.to_matrix();
        let (i, j) = (0..c.rows()).flat_map(|i| (0..c.cols()).map(move |j| (i, j))).find(|&(i, j)| !c.get(i, j).is_zero()).unwrap();
        let v = -c.get(i, j).clone();
        c.set(i, j, v);
        let bad = YdModule { coaction: Op::from_matrix(&c, &[m.dim()], &[h.dim(), m.dim()]), ..good };
        let rep = verify_left_duality_with(&h, &m, &bad).unwrap();
        assert!(!rep.find("evaluation_is_colinear").unwrap().passed);
        assert!(rep.find("evaluation_is_linear").unwrap().passed);
        assert!(rep.find("zigzag_on_module").unwrap().passed);
    }
}
