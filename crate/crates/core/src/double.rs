//! The Drinfeld double `D(H)`: the smash product `H⋈H*` with preunit
//! `1⋈ε`, its unital part `Im p`, the relation span `J`, the double `D'(H)`
//! on `H*⊗H`, the anti-isomorphism between them, and the functor from
//! left-right Yetter-Drinfeld modules to `D(H)`-modules.
//!
//! Ambient elements of `H⋈H*` are flattened `[h, h*]` pairs, elements of
//! `H*⊗H` flattened `[h*, h]` pairs.

use crate::entwining::{canonical_entwining, smash_module_action, smash_product, PreunitalAlgebra, WeakSmashStructure};
use crate::exactlin::{lift, Elem, Field, Matrix, Op, Subspace};
use crate::report::{basis_inputs, product_inputs, subspace_inputs, subspace_inputs_shaped, Input, Report};
use crate::weakbialg::{diagonal_action, truncated_tensor, AlgebraData, CoalgebraData, HModule};
use crate::weakhopf::{dual_weak_hopf, hit_actions, pairing, WeakHopf};
use crate::yetterdrinfeld::{yd_convert, yd_morphisms, yd_tensor, yd_unit_object, Variant, YdModule};
use crate::Error;

/// `D(H)` together with everything it was built from.
#[derive(Clone, Debug)]
pub struct DoubleAlgebra {
    pub h: WeakHopf,
    pub dual: WeakHopf,
    /// `R: H*⊗H -> H⊗H*`.
    pub r: Op,
    pub ambient: PreunitalAlgebra,
    pub d: WeakHopf,
    /// `H⋈H* -> D`, `x ↦ p(x)` in chart coordinates.
    pub project: Op,
    /// `D -> H⋈H*`.
    pub include: Op,
    /// Structure maps on the ambient space.
    pub comult: Op,
    pub counit: Op,
    pub antipode: Op,
    pub antipode_inv: Op,
}

/// `D'(H) = (H*⊗H)/I`.
#[derive(Clone, Debug)]
pub struct DPrimeAlgebra {
    pub mult: Op,
    pub unit: Elem,
    pub ideal: Subspace,
    /// `H*⊗H -> D'`.
    pub quotient: Op,
    /// A section of the quotient map.
    pub section: Op,
    pub d: WeakHopf,
    pub comult: Op,
    pub counit: Op,
    pub antipode: Op,
}

fn dims(h: &WeakHopf) -> (Field, usize, usize) {
    let n = h.dim();
    (h.field(), n, n * n)
}

/// `R(h*⊗h) = h₂ ⊗ (S⁻¹(h₁) ⇀ h* ↼ h₃)`.
pub fn double_r_map(h: &WeakHopf) -> Op {
    let (f, n, _) = dims(h);
    let hit = hit_actions(h);
    lift(f, &[n, n], &[n, n], |x| {
        let y = h.s_inv(&h.delta2(x, 1), 1);
        // [h*, S⁻¹h₁, h₂, h₃] -> [hit, h₂]
        y.apply(&[1, 0, 3], &hit).swap(0, 1)
    })
}

/// The product `hk₂ ⋈ ⟨h*₁, k₃⟩⟨h*₃, S⁻¹(k₁)⟩ h*₂*k*` written out in
/// Sweedler form.
pub fn sweedler_product(h: &WeakHopf, dual: &WeakHopf) -> Op {
    let (f, n, d) = dims(h);
    let pair = pairing(f, n);
    lift(f, &[d, d], &[d], |x| {
        let y = x.reshape(&[n, n, n, n]);
        // [h, s1, s2, s3, k1, k2, k3, k*]
        let y = dual.delta2(&h.delta2(&y, 2), 1);
        let y = h.s_inv(&y, 4);
        let y = y.apply(&[1, 6], &pair);
        // [h, s2, s3, k1, k2, k*]
        let y = y.apply(&[2, 3], &pair);
        let y = h.mul(&y, 0, 2);
        dual.mul(&y, 1, 2).reshape(&[d])
    })
}

/// `Δ[h⋈h*] = [h₂⋈h*₁] ⊗ [h₁⋈h*₂]`.
fn ambient_comult(h: &WeakHopf, dual: &WeakHopf) -> Op {
    let (f, n, d) = dims(h);
    lift(f, &[d], &[d, d], |x| {
        let y = dual.delta(&h.delta(&x.reshape(&[n, n]), 0), 2);
        y.permute(&[1, 2, 0, 3]).reshape(&[d, d])
    })
}

/// `ε[h⋈h*] = ⟨h*, 1₂⟩ ε(h1₁)`.
fn ambient_counit(h: &WeakHopf) -> Op {
    let (f, n, d) = dims(h);
    let pair = pairing(f, n);
    lift(f, &[d], &[], |x| {
        let y = x.reshape(&[n, n]).tensor(h.delta_one());
        let y = h.eps(&h.mul(&y, 0, 2), 0);
        y.apply(&[0, 1], &pair)
    })
}

/// `[T(h₂) ⋈ T*(h*₂)] ⟨h*₁, S⁻¹(h₃)⟩⟨h*₃, h₁⟩`; the antipode has
/// `T = S⁻¹, T* = S`, its inverse `T = S, T* = S⁻¹`.
fn ambient_antipode(h: &WeakHopf, dual: &WeakHopf, inverse: bool) -> Op {
    let (f, n, d) = dims(h);
    let pair = pairing(f, n);
    lift(f, &[d], &[d], |x| {
        // [h1, h2, h3, s1, s2, s3]
        let y = dual.delta2(&h.delta2(&x.reshape(&[n, n]), 0), 3);
        let y = h.s_inv(&y, 2).apply(&[3, 2], &pair);
        // [h1, h2, s2, s3]
        let y = y.apply(&[3, 0], &pair);
        let y = if inverse { dual.s_inv(&h.s(&y, 0), 1) } else { dual.s(&h.s_inv(&y, 0), 1) };
        y.reshape(&[d])
    })
}

fn ker_inputs(ambient: &PreunitalAlgebra) -> Vec<Input> {
    subspace_inputs(&ambient.kernel)
}

fn not_well_defined(r: &Report, what: &str) -> Result<(), Error> {
    match r.find(what) {
        Some(c) if !c.passed => {
            let w = c.witness.as_ref().map(|w| format!(" at kernel vector {:?}", w.input)).unwrap_or_default();
            Err(Error::NotWellDefined(format!("{what}{w}")))
        }
        _ => Ok(()),
    }
}

/// Builds `D(H) = Im p` with the structure maps descended from `H⋈H*`.
///
/// The report covers the two constructions of `R`, the smash laws, the
/// preunit, the Sweedler form of the product, well-definedness of each
/// structure map on `Ker p`, the alternative counit form and the two
/// antipode formulas. Verifying `D` itself is left to `d.report()`.
pub fn drinfeld_double(h: &WeakHopf) -> Result<(Report, DoubleAlgebra), Error> {
    let (f, n, d) = dims(h);
    let dual = dual_weak_hopf(h);
    let mut rep = Report::new("Drinfeld double");
    let r = double_r_map(h);
    let from_entwining = canonical_entwining(h).smash_structure();
    rep.equal_ops("r_map_matches_entwining_construction", &r, &from_entwining.r);
    let structure = WeakSmashStructure::new(h.algebra().clone(), dual.algebra().clone(), r.clone())?;
    let (smash_rep, ambient) = smash_product(&structure)?;
    rep.absorb("", smash_rep);
    rep.equal_ops("product_matches_sweedler_form", &ambient.mult, &sweedler_product(h, &dual));

    let quotient = ambient.quotient();
    let k = ambient.image.dim();
    let (include, project) = (quotient.include, quotient.project);
    let comult = ambient_comult(h, &dual);
    let counit = ambient_counit(h);
    let antipode = ambient_antipode(h, &dual, false);
    let antipode_inv = ambient_antipode(h, &dual, true);
    let pp = project.kron(&project);
    let kin = ker_inputs(&ambient);
    rep.vanishes("comultiplication_kills_kernel", &kin, |x| pp.eval(&comult.eval(x)));
    rep.vanishes("counit_kills_kernel", &kin, |x| counit.eval(x));
    rep.vanishes("antipode_kills_kernel", &kin, |x| project.eval(&antipode.eval(x)));
    rep.vanishes("inverse_antipode_kills_kernel", &kin, |x| project.eval(&antipode_inv.eval(x)));
    for what in ["comultiplication_kills_kernel", "counit_kills_kernel", "antipode_kills_kernel", "inverse_antipode_kills_kernel"] {
        not_well_defined(&rep, what)?;
    }
    let pair = pairing(f, n);
    rep.identity(
        "counit_through_target_of_inverse_antipode",
        &basis_inputs(f, &[d]),
        |x| counit.eval(x),
        |x| h.s_inv(&x.reshape(&[n, n]), 0).apply(&[0], h.eps_t()).apply(&[1, 0], &pair),
    );

    let d_comult = include.then(&comult).then(&pp);
    let d_counit = include.then(&counit);
    let d_s = include.then(&antipode).then(&project);
    let d_s_inv = include.then(&antipode_inv).then(&project);
    rep.equal_ops("antipode_after_inverse_formula", &d_s_inv.then(&d_s), &Op::identity(f, &[k]));
    rep.equal_ops("inverse_formula_after_antipode", &d_s.then(&d_s_inv), &Op::identity(f, &[k]));
    let dh = WeakHopf::from_parts(quotient.algebra, CoalgebraData { comult: d_comult, counit: d_counit }, d_s)?;
    rep.equal_ops("inverse_formula_is_inverse_antipode", &d_s_inv, dh.antipode_inv());
    let dbl = DoubleAlgebra { h: h.clone(), dual, r, ambient, d: dh, project, include, comult, counit, antipode, antipode_inv };
    Ok((rep, dbl))
}

/// The generators `hz⋈h* − h⋈(z⇀ε)*h*` (`z ∈ H_t`) and
/// `hy⋈h* − h⋈(ε↼y)*h*` (`y ∈ H_s`).
pub fn j_span(h: &WeakHopf, dual: &WeakHopf) -> Subspace {
    let (f, n, d) = dims(h);
    let hit = hit_actions(h);
    let eps = dual.one();
    let mut gens = Vec::new();
    let mut push = |base: &Subspace, left: bool| {
        for b in base.basis() {
            let z = Elem::vector(f, b);
            let twist = if left {
                z.tensor(eps).tensor(h.one())
            } else {
                h.one().tensor(eps).tensor(&z)
            };
            let twist = twist.apply(&[0, 1, 2], &hit);
            for a in 0..n {
                for s in 0..n {
                    let hz = h.product(&h.basis(a), &z);
                    let lhs = hz.tensor(&dual.basis(s));
                    let rhs = h.basis(a).tensor(&dual.product(&twist, &dual.basis(s)));
                    gens.push(lhs.sub(&rhs).reshape(&[d]).flat());
                }
            }
        }
    };
    push(h.target_space(), true);
    push(h.source_space(), false);
    Subspace::span(f, d, &gens)
}

/// `Ker p = J` and the hit-action identities it rests on.
pub fn kernel_equals_j(dbl: &DoubleAlgebra) -> Report {
    let (h, dual) = (&dbl.h, &dbl.dual);
    let (f, n, _) = dims(h);
    let mut rep = Report::new("kernel of p");
    let hit = hit_actions(h);
    let eps = dual.one();
    let one = h.one();
    // z ⇀ h* and h* ↼ z for z of one leg, h* of another
    let left = |z: &Elem, s: &Elem| z.tensor(s).tensor(one).apply(&[0, 1, 2], &hit);
    let right = |z: &Elem, s: &Elem| one.tensor(s).tensor(z).apply(&[0, 1, 2], &hit);
    let star = basis_inputs(f, &[n]);
    let hs = subspace_inputs(h.source_space());
    let ht = subspace_inputs(h.target_space());
    let with = |base: &[Input]| product_inputs(&[base.to_vec(), star.clone()]);
    let split = |x: &Elem| -> (Elem, Elem) {
        let mut a = Elem::zero(f, &[n]);
        let mut b = Elem::zero(f, &[n]);
        // inputs are pure tensors z⊗e^s with e^s a basis covector
        let s = x.terms().next().map(|(i, _)| i[1]).unwrap_or(0);
        for (i, c) in x.terms() {
            if i[1] == s {
                a.add_term(vec![i[0]], c);
            }
        }
        b.add_term(vec![s], &f.one());
        (a, b)
    };
    rep.identity(
        "source_left_hit_is_convolution",
        &with(&hs),
        |x| {
            let (y, s) = split(x);
            dual.product(&s, &left(&y, eps))
        },
        |x| {
            let (y, s) = split(x);
            left(&y, &s)
        },
    );
    rep.identity(
        "source_right_hit_is_convolution",
        &with(&hs),
        |x| {
            let (y, s) = split(x);
            dual.product(&s, &right(&y, eps))
        },
        |x| {
            let (y, s) = split(x);
            right(&y, &s)
        },
    );
    rep.identity(
        "target_left_hit_is_convolution",
        &with(&ht),
        |x| {
            let (z, s) = split(x);
            dual.product(&left(&z, eps), &s)
        },
        |x| {
            let (z, s) = split(x);
            left(&z, &s)
        },
    );
    rep.identity(
        "target_right_hit_is_convolution",
        &with(&ht),
        |x| {
            let (z, s) = split(x);
            dual.product(&right(&z, eps), &s)
        },
        |x| {
            let (z, s) = split(x);
            right(&z, &s)
        },
    );
    rep.identity("target_hit_invariant_under_inverse_antipode", &ht, |z| left(&h.s_inv(z, 0), eps), |z| left(z, eps));
    rep.identity("source_hit_invariant_under_inverse_antipode", &hs, |y| right(&h.s_inv(y, 0), eps), |y| right(y, eps));
    let j = j_span(h, dual);
    rep.equal_subspaces("kernel_equals_span_of_relations", &dbl.ambient.kernel, &j);
    rep.predicate(
        "double_dimension_is_rank_of_p",
        dbl.d.dim() == dbl.ambient.p.to_matrix().rank(),
        format!("dim D = {}", dbl.d.dim()),
    );
    rep
}

/// `(h*⊗h)(k*⊗k) = (h₃ ⇀ k* ↼ S(h₁)) * h* ⊗ h₂k`.
pub fn dprime_product(h: &WeakHopf, dual: &WeakHopf) -> Op {
    let (f, n, d) = dims(h);
    let hit = hit_actions(h);
    lift(f, &[d, d], &[d], |x| {
        let y = h.delta2(&x.reshape(&[n, n, n, n]), 1);
        // [h*, Sh₁, h₂, h₃, k*, k]
        let y = h.s(&y, 1).apply(&[3, 4, 1], &hit);
        // [h*, h₂, hit, k]
        let y = dual.mul(&y, 2, 0);
        h.mul(&y, 0, 2).swap(0, 1).reshape(&[d])
    })
}

/// The generators `h*⊗zh − (ε↼z)*h*⊗h` (`z ∈ H_t`) and
/// `h*⊗yh − (y⇀ε)*h*⊗h` (`y ∈ H_s`).
pub fn i_span(h: &WeakHopf, dual: &WeakHopf) -> Subspace {
    let (f, n, d) = dims(h);
    let hit = hit_actions(h);
    let eps = dual.one();
    let mut gens = Vec::new();
    for (base, target) in [(h.target_space(), true), (h.source_space(), false)] {
        for b in base.basis() {
            let z = Elem::vector(f, b);
            let twist = if target { h.one().tensor(eps).tensor(&z) } else { z.tensor(eps).tensor(h.one()) };
            let twist = twist.apply(&[0, 1, 2], &hit);
            for a in 0..n {
                for s in 0..n {
                    let moved = h.product(&z, &h.basis(a));
                    let lhs = dual.basis(s).tensor(&moved);
                    let rhs = dual.product(&twist, &dual.basis(s)).tensor(&h.basis(a));
                    gens.push(lhs.sub(&rhs).reshape(&[d]).flat());
                }
            }
        }
    }
    Subspace::span(f, d, &gens)
}

/// `f(h⋈h*) = h*⊗S⁻¹(h)`.
pub fn anti_iso(h: &WeakHopf) -> Op {
    let (f, n, d) = dims(h);
    lift(f, &[d], &[d], |x| h.s_inv(&x.reshape(&[n, n]), 0).swap(0, 1).reshape(&[d]))
}

fn sub_inputs(s: &Subspace) -> Vec<Input> {
    subspace_inputs_shaped(s, &[s.ambient_dim()])
}

/// Builds `D'(H)` and checks `f` against it: anti-multiplicativity on the
/// ambient spaces, `f(J) = I`, and that the induced map `D -> D'^op` is an
/// isomorphism of weak Hopf algebras.
pub fn dprime_and_f(dbl: &DoubleAlgebra) -> Result<(Report, DPrimeAlgebra, Op), Error> {
    let (h, dual) = (&dbl.h, &dbl.dual);
    let (f, n, d) = dims(h);
    let mut rep = Report::new("D' and the anti-isomorphism");
    let mult = dprime_product(h, dual);
    let unit = dual.one().tensor(h.one()).reshape(&[d]);
    let all = basis_inputs(f, &[d]);
    rep.identity(
        "dprime_associativity",
        &basis_inputs(f, &[d, d, d]),
        |x| x.apply(&[0, 1], &mult).apply(&[0, 1], &mult),
        |x| x.apply(&[1, 2], &mult).apply(&[0, 1], &mult),
    );
    let ideal = i_span(h, dual);
    let q = ideal.quotient_chart();
    let k = q.rows();
    let quotient = Op::from_matrix(&q, &[d], &[k]);
    let section = Op::from_matrix(&ideal.quotient_section(), &[k], &[d]);
    let iin = sub_inputs(&ideal);
    rep.identity("dprime_left_unit_modulo_ideal", &all, |x| quotient.eval(&x.insert(0, &unit).apply(&[0, 1], &mult)), |x| quotient.eval(x));
    rep.identity("dprime_right_unit_modulo_ideal", &all, |x| quotient.eval(&x.tensor(&unit).apply(&[0, 1], &mult)), |x| quotient.eval(x));
    let ideal_times_all = product_inputs(&[iin.clone(), all.clone()]);
    let all_times_ideal = product_inputs(&[all.clone(), iin.clone()]);
    rep.vanishes("ideal_absorbs_right_products", &ideal_times_all, |x| quotient.eval(&x.apply(&[0, 1], &mult)));
    rep.vanishes("ideal_absorbs_left_products", &all_times_ideal, |x| quotient.eval(&x.apply(&[0, 1], &mult)));

    // Δ[h*⊗h] = [h*₁⊗h₁] ⊗ [h*₂⊗h₂]
    let comult = lift(f, &[d], &[d, d], |x| {
        let y = h.delta(&dual.delta(&x.reshape(&[n, n]), 0), 2);
        y.permute(&[0, 2, 1, 3]).reshape(&[d, d])
    });
    // ε[h*⊗h] = ⟨h*, ε_t(h)⟩
    let pair = pairing(f, n);
    let counit = lift(f, &[d], &[], |x| x.reshape(&[n, n]).apply(&[1], h.eps_t()).apply(&[0, 1], &pair));
    // S[h*⊗h] = [S⁻¹(h*₂) ⊗ S(h₂)] ⟨h*₁, h₁⟩⟨h*₃, S(h₃)⟩
    let antipode = lift(f, &[d], &[d], |x| {
        let y = h.delta2(&dual.delta2(&x.reshape(&[n, n]), 0), 3);
        let y = h.s(&y, 5).apply(&[0, 3], &pair);
        // [s2, s3, h2, Sh3]
        let y = y.apply(&[1, 3], &pair);
        h.s(&dual.s_inv(&y, 0), 1).reshape(&[d])
    });
    let qq = quotient.kron(&quotient);
    rep.vanishes("dprime_comultiplication_kills_ideal", &iin, |x| qq.eval(&comult.eval(x)));
    rep.vanishes("dprime_counit_kills_ideal", &iin, |x| counit.eval(x));
    rep.vanishes("dprime_antipode_kills_ideal", &iin, |x| quotient.eval(&antipode.eval(x)));
    for what in ["ideal_absorbs_right_products", "ideal_absorbs_left_products", "dprime_comultiplication_kills_ideal", "dprime_counit_kills_ideal", "dprime_antipode_kills_ideal"] {
        not_well_defined(&rep, what)?;
    }
    let qmult = section.kron(&section).then(&mult).then(&quotient);
    let alg = AlgebraData { mult: qmult, unit: quotient.eval(&unit) };
    let coalg = CoalgebraData { comult: section.then(&comult).then(&qq), counit: section.then(&counit) };
    let dp = WeakHopf::from_parts(alg, coalg, section.then(&antipode).then(&quotient))?;

    let fmap = anti_iso(h);
    rep.identity(
        "f_reverses_multiplication",
        &basis_inputs(f, &[d, d]),
        |x| fmap.eval(&x.apply(&[0, 1], &dbl.ambient.mult)),
        |x| x.apply(&[0], &fmap).apply(&[1], &fmap).swap(0, 1).apply(&[0, 1], &mult),
    );
    let fj = j_span(h, dual).map(&fmap.to_matrix());
    rep.equal_subspaces("f_maps_relations_onto_ideal", &fj, &ideal);
    let induced = dbl.include.then(&fmap).then(&quotient);
    let kd = dbl.d.dim();
    rep.predicate("induced_map_is_bijective", kd == k && induced.to_matrix().inverse().is_some(), format!("dim D = {kd}, dim D' = {k}"));
    rep.identity("induced_map_is_unital", &[(vec![], dbl.d.one().clone())], |x| induced.eval(x), |_| dp.one().clone());
    rep.identity(
        "induced_map_is_anti_multiplicative",
        &basis_inputs(f, &[kd, kd]),
        |x| induced.eval(&dbl.d.mul(x, 0, 1)),
        |x| dp.mul(&x.apply(&[0], &induced).apply(&[1], &induced).swap(0, 1), 0, 1),
    );
    let kdin = basis_inputs(f, &[kd]);
    rep.identity(
        "induced_map_is_comultiplicative",
        &kdin,
        |x| dbl.d.delta(x, 0).apply(&[0], &induced).apply(&[1], &induced),
        |x| dp.delta(&induced.eval(x), 0),
    );
    rep.identity("induced_map_preserves_counit", &kdin, |x| dbl.d.eps(x, 0), |x| dp.eps(&induced.eval(x), 0));
    rep.identity(
        "induced_map_carries_antipode_to_inverse",
        &kdin,
        |x| induced.eval(&dbl.d.s(x, 0)),
        |x| dp.s_inv(&induced.eval(x), 0),
    );
    let dprime = DPrimeAlgebra { mult, unit, ideal, quotient, section, d: dp, comult, counit, antipode };
    Ok((rep, dprime, induced))
}

/// `D(H)_t ≅ H_t` through `z ↦ z·1` on the `D(H)`-module `F(H_t)`.
pub fn target_comparison(dbl: &DoubleAlgebra) -> Report {
    let h = &dbl.h;
    let f = h.field();
    let mut rep = Report::new("target subalgebra of the double");
    let ht = yd_convert(h, &yd_unit_object(h), Variant::LR);
    let dt = dbl.d.target_space();
    let (kt, kh) = (dt.dim(), ht.dim());
    rep.predicate("target_dimensions_agree", kt == kh, format!("dim D_t = {kt}, dim H_t = {kh}"));
    let (_, action) = double_action(dbl, &ht);
    let one = h.target_chart().eval(h.one());
    let dt_incl = Op::from_matrix(&dt.inclusion(), &[kt], &[dbl.d.dim()]);
    let phi = lift(f, &[kt], &[kh], |z| dt_incl.eval(z).tensor(&one).apply(&[0, 1], &action));
    rep.predicate("action_on_unit_is_bijective", kt == kh && phi.to_matrix().inverse().is_some(), "");
    let (incl, chart) = (h.target_inclusion(), h.target_chart());
    let ht_mult = lift(f, &[kh, kh], &[kh], |x| chart.eval(&h.mul(&x.apply(&[0], &incl).apply(&[1], &incl), 0, 1)));
    let dt_chart = Op::from_matrix(&dt.chart(), &[dbl.d.dim()], &[kt]);
    let dt_mult = lift(f, &[kt, kt], &[kt], |x| dt_chart.eval(&dbl.d.mul(&x.apply(&[0], &dt_incl).apply(&[1], &dt_incl), 0, 1)));
    rep.identity(
        "action_on_unit_is_multiplicative",
        &basis_inputs(f, &[kt, kt]),
        |x| phi.eval(&dt_mult.eval(x)),
        |x| x.apply(&[0], &phi).apply(&[1], &phi).apply(&[0, 1], &ht_mult),
    );
    rep.identity("action_on_unit_is_unital", &[(vec![], dt_chart.eval(dbl.d.one()))], |x| phi.eval(x), |_| one.clone());
    rep
}

/// The `H⋈H*` action `(h⋈h*)m = ⟨h*, m₁⟩ h m₀` and its restriction to `D`.
pub fn double_action(dbl: &DoubleAlgebra, m: &YdModule) -> (Op, Op) {
    let n = dbl.h.dim();
    let amb = smash_module_action(n, n, &m.action, &m.coaction);
    let on_d = lift(m.action.field(), &[dbl.d.dim(), m.dim()], &[m.dim()], |x| x.apply(&[0], &dbl.include).apply(&[0, 1], &amb));
    (amb, on_d)
}

/// Well-definedness of the action on `D` and the module axioms.
pub fn double_module_report(dbl: &DoubleAlgebra, m: &YdModule) -> (Report, HModule) {
    let f = dbl.h.field();
    let mut rep = Report::new("double module");
    let (amb, on_d) = double_action(dbl, m);
    let inputs = product_inputs(&[ker_inputs(&dbl.ambient), basis_inputs(f, &[m.dim()])]);
    rep.vanishes("action_kills_kernel", &inputs, |x| x.apply(&[0, 1], &amb));
    let module = HModule { action: on_d };
    rep.absorb("", module.verify(&dbl.d));
    (rep, module)
}

/// `F(M)` for a left-right Yetter-Drinfeld module.
pub fn yd_to_double_module(dbl: &DoubleAlgebra, m: &YdModule) -> Result<HModule, Error> {
    if m.variant != Variant::LR {
        return Err(Error::VariantMismatch(format!("the double acts on left-right modules, got {}", m.variant)));
    }
    let (rep, module) = double_module_report(dbl, m);
    not_well_defined(&rep, "action_kills_kernel")?;
    if let Some(c) = rep.failures().next() {
        return Err(Error::Invalid(format!("module axiom {} fails", c.name)));
    }
    Ok(module)
}

/// The switch `M⊗N -> N⊗M` carries `F(M⊗_t N)` onto `F(N)⊗_t F(M)` and is
/// `D(H)`-linear.
pub fn switch_report(dbl: &DoubleAlgebra, a: &YdModule, b: &YdModule) -> Result<Report, Error> {
    let h = &dbl.h;
    let f = h.field();
    let mut rep = Report::new("switch map");
    let t = yd_tensor(h, a, b)?;
    let (_, ft) = double_action(dbl, &t.module);
    let (_, fa) = double_action(dbl, a);
    let (_, fb) = double_action(dbl, b);
    let (ba, _) = truncated_tensor(&dbl.d, &HModule { action: fb.clone() }, &HModule { action: fa.clone() });
    let (da, db) = (a.dim(), b.dim());
    let swap = Matrix::from_fn(f, da * db, da * db, |i, j| {
        let (x, y) = (j / db, j % db);
        if i == y * da + x {
            f.one()
        } else {
            f.zero()
        }
    });
    rep.equal_subspaces("switch_maps_truncations_onto_each_other", &t.space.image.map(&swap), &ba.image);
    let diag = diagonal_action(&dbl.d, &[&fb, &fa]);
    let kd = dbl.d.dim();
    let inputs = product_inputs(&[basis_inputs(f, &[kd]), t.space.inputs()]);
    rep.identity(
        "switch_is_double_linear",
        &inputs,
        |x| {
            let y = x.apply(&[1, 2], t.space.chart()).apply(&[0, 1], &ft);
            t.space.include().eval(&y).swap(0, 1)
        },
        |x| {
            let y = x.reshape(&[kd, da, db]).permute(&[0, 2, 1]);
            y.apply(&[0, 1, 2], &diag)
        },
    );
    Ok(rep)
}

/// `F(g)` is `D(H)`-linear for every basis morphism `g: A -> B`.
pub fn functoriality_report(dbl: &DoubleAlgebra, a: &YdModule, b: &YdModule) -> Result<Report, Error> {
    let f = dbl.h.field();
    let mut rep = Report::new("functoriality");
    let (_, fa) = double_action(dbl, a);
    let (_, fb) = double_action(dbl, b);
    let kd = dbl.d.dim();
    let morphisms = yd_morphisms(&dbl.h, a, b)?;
    rep.predicate("morphism_space_dimension", true, format!("{}", morphisms.len()));
    for (i, g) in morphisms.iter().enumerate() {
        let op = Op::linear(g);
        rep.identity(
            format!("morphism_{i}_is_double_linear"),
            &basis_inputs(f, &[kd, a.dim()]),
            |x| op.eval(&x.apply(&[0, 1], &fa)),
            |x| x.apply(&[1], &op).apply(&[0, 1], &fb),
        );
    }
    Ok(rep)
}
