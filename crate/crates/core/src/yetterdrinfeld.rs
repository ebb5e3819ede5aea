//! Yetter-Drinfeld modules in the four left/right variants, conversions
//! between them, tensor products, braidings and the center condition.
//!
//! Shapes: a left action is `[H, M] -> [M]`, a right action `[M, H] -> [M]`;
//! a left coaction is `[M] -> [H, M]`, a right coaction `[M] -> [M, H]`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::exactlin::{lift, Elem, Field, Matrix, Op, Scalar, Subspace};
use crate::report::{basis_inputs, product_inputs, subspace_inputs, subspace_inputs_shaped, Input, Report};
use crate::weakbialg::{diagonal_action, unit_constraints, unit_projector, HModule, TruncatedTensor};
use crate::weakhopf::{Groupoid, WeakHopf};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Left action, left coaction.
    LL,
    /// Left action, right coaction.
    LR,
    /// Right action, left coaction.
    RL,
    /// Right action, right coaction.
    RR,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::LL, Variant::LR, Variant::RL, Variant::RR];

    pub fn left_action(self) -> bool {
        matches!(self, Variant::LL | Variant::LR)
    }

    pub fn left_coaction(self) -> bool {
        matches!(self, Variant::LL | Variant::RL)
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::LL => "ll",
            Variant::LR => "lr",
            Variant::RL => "rl",
            Variant::RR => "rr",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Variant, Error> {
        match s.to_ascii_lowercase().as_str() {
            "ll" => Ok(Variant::LL),
            "lr" => Ok(Variant::LR),
            "rl" => Ok(Variant::RL),
            "rr" => Ok(Variant::RR),
            _ => Err(Error::Invalid(format!("unknown Yetter-Drinfeld variant {s:?}"))),
        }
    }
}

/// An `H`-comodule on one side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HComodule {
    pub coaction: Op,
    pub left: bool,
}

impl HComodule {
    pub fn new(coaction: Op, left: bool) -> Result<HComodule, Error> {
        let ins = coaction.in_dims();
        let outs = coaction.out_dims();
        let ok = ins.len() == 1 && outs.len() == 2 && if left { outs[1] == ins[0] } else { outs[0] == ins[0] };
        if !ok {
            let want = if left { "[m] -> [h, m]" } else { "[m] -> [m, h]" };
            return Err(Error::DimMismatch(format!("coaction must map {want}, got {ins:?} -> {outs:?}")));
        }
        Ok(HComodule { coaction, left })
    }

    pub fn dim(&self) -> usize {
        self.coaction.in_dims()[0]
    }

    pub fn hdim(&self) -> usize {
        let outs = self.coaction.out_dims();
        if self.left {
            outs[0]
        } else {
            outs[1]
        }
    }

    pub fn verify(&self, h: &WeakHopf) -> Report {
        let mut r = Report::new("comodule");
        let mb = basis_inputs(h.field(), &[self.dim()]);
        let c = &self.coaction;
        if self.left {
            r.identity("comodule_coassociativity", &mb, |x| h.delta(&c.eval(x), 0), |x| c.eval(x).apply(&[1], c));
            r.identity("comodule_counit", &mb, |x| h.eps(&c.eval(x), 0), Elem::clone);
        } else {
            r.identity("comodule_coassociativity", &mb, |x| c.eval(x).apply(&[0], c), |x| h.delta(&c.eval(x), 1));
            r.identity("comodule_counit", &mb, |x| h.eps(&c.eval(x), 1), Elem::clone);
        }
        r
    }
}

/// A module with a compatible comodule structure of the given variant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YdModule {
    pub variant: Variant,
    pub action: Op,
    pub coaction: Op,
}

impl YdModule {
    /// Checks shapes only; see [`check_yd`] for the axioms.
    pub fn new(variant: Variant, action: Op, coaction: Op) -> Result<YdModule, Error> {
        let ins = action.in_dims();
        if ins.len() != 2 || action.out_dims().len() != 1 {
            return Err(Error::DimMismatch(format!("action must have two inputs and one output, got {:?} -> {:?}", ins, action.out_dims())));
        }
        let (hd, md) = if variant.left_action() { (ins[0], ins[1]) } else { (ins[1], ins[0]) };
        if action.out_dims() != [md] {
            return Err(Error::DimMismatch(format!("{variant} action must return the module leg, got {:?} -> {:?}", ins, action.out_dims())));
        }
        let co = HComodule::new(coaction, variant.left_coaction())?;
        if co.dim() != md || co.hdim() != hd {
            return Err(Error::DimMismatch(format!(
                "coaction is over a {}-dimensional algebra on a {}-dimensional space; action is {hd} on {md}",
                co.hdim(),
                co.dim()
            )));
        }
        Ok(YdModule { variant, action, coaction: co.coaction })
    }

    pub fn dim(&self) -> usize {
        self.action.out_dims()[0]
    }

    pub fn hdim(&self) -> usize {
        let ins = self.action.in_dims();
        if self.variant.left_action() {
            ins[0]
        } else {
            ins[1]
        }
    }

    /// Acts with leg `h` on leg `m`; the result sits where leg `m` was if the
    /// action is on the right and where leg `h` was otherwise.
    pub fn act(&self, x: &Elem, h: usize, m: usize) -> Elem {
        if self.variant.left_action() {
            x.apply(&[h, m], &self.action)
        } else {
            x.apply(&[m, h], &self.action)
        }
    }

    /// Applies the coaction to one leg.
    pub fn coact(&self, x: &Elem, leg: usize) -> Elem {
        x.apply(&[leg], &self.coaction)
    }

    /// The underlying left module; only for variants with a left action.
    pub fn module(&self) -> Option<HModule> {
        self.variant.left_action().then(|| HModule { action: self.action.clone() })
    }

    pub fn comodule(&self) -> HComodule {
        HComodule { coaction: self.coaction.clone(), left: self.variant.left_coaction() }
    }

    /// Module, comodule, range, compatibility, closed form and derived
    /// identities.
    pub fn verify(&self, h: &WeakHopf) -> Report {
        let mut r = Report::new(format!("{} Yetter-Drinfeld module", self.variant));
        let f = h.field();
        let (n, m) = (h.dim(), self.dim());
        let one = || h.one().clone();
        if self.variant.left_action() {
            r.identity(
                "module_associativity",
                &basis_inputs(f, &[n, n, m]),
                |x| self.act(&h.mul(x, 0, 1), 0, 1),
                |x| self.act(&self.act(x, 1, 2), 0, 1),
            );
            r.identity("module_unit", &basis_inputs(f, &[m]), |x| self.act(&x.insert(0, &one()), 0, 1), Elem::clone);
        } else {
            r.identity(
                "module_associativity",
                &basis_inputs(f, &[m, n, n]),
                |x| self.act(&h.mul(x, 1, 2), 1, 0),
                |x| self.act(&self.act(x, 1, 0), 1, 0),
            );
            r.identity("module_unit", &basis_inputs(f, &[m]), |x| self.act(&x.insert(1, &one()), 1, 0), Elem::clone);
        }
        r.absorb("", self.comodule().verify(h));

        let range = self.range_check(h, &mut r);
        let compat = self.compatibility_check(h, &mut r);
        let closed = self.closed_form_check(h, &mut r);
        r.predicate(
            "compatibility_matches_closed_form",
            (range && compat) == closed,
            format!("range and compatibility {}, closed form {}", verdict(range && compat), verdict(closed)),
        );
        match self.variant {
            Variant::LL => self.ll_derived(h, &mut r),
            Variant::LR => self.lr_derived(h, &mut r),
            _ => {}
        }
        r
    }

    fn range_check(&self, h: &WeakHopf, r: &mut Report) -> bool {
        let mb = basis_inputs(h.field(), &[self.dim()]);
        let d1 = h.delta_one();
        match self.variant {
            // 1₁h ⊗ 1₂m
            Variant::LL => r.identity(
                "coaction_in_truncated_tensor",
                &mb,
                |x| {
                    let y = self.coact(x, 0).insert(0, d1);
                    self.act(&h.mul(&y, 0, 2), 1, 2)
                },
                |x| self.coact(x, 0),
            ),
            // 1₁m ⊗ 1₂h
            Variant::LR => r.identity(
                "coaction_in_truncated_tensor",
                &mb,
                |x| {
                    let y = self.coact(x, 0).insert(0, d1);
                    h.mul(&self.act(&y, 0, 2), 1, 2)
                },
                |x| self.coact(x, 0),
            ),
            // m1₁ ⊗ h1₂
            Variant::RR => r.identity(
                "coaction_in_source_truncated_tensor",
                &mb,
                |x| {
                    let y = self.coact(x, 0).insert(2, d1);
                    h.mul(&self.act(&y, 2, 0), 1, 2)
                },
                |x| self.coact(x, 0),
            ),
            // h1₁ ⊗ m1₂
            Variant::RL => r.identity(
                "coaction_in_source_truncated_tensor",
                &mb,
                |x| {
                    let y = self.coact(x, 0).insert(2, d1);
                    self.act(&h.mul(&y, 0, 2), 2, 1)
                },
                |x| self.coact(x, 0),
            ),
        }
    }

    fn compatibility_check(&self, h: &WeakHopf, r: &mut Report) -> bool {
        let f = h.field();
        let (n, m) = (h.dim(), self.dim());
        match self.variant {
            // h₁m₋₁ ⊗ h₂m₀ = (h₁m)₋₁h₂ ⊗ (h₁m)₀
            Variant::LL => r.identity(
                "compatibility",
                &basis_inputs(f, &[n, m]),
                |x| {
                    let y = h.delta(&self.coact(x, 1), 0);
                    self.act(&h.mul(&y, 0, 2), 1, 2)
                },
                |x| {
                    let y = self.act(&h.delta(x, 0), 0, 2);
                    h.mul(&self.coact(&y, 0), 0, 2)
                },
            ),
            // h₁m₀ ⊗ h₂m₁ = (h₂m)₀ ⊗ (h₂m)₁h₁
            Variant::LR => r.identity(
                "compatibility",
                &basis_inputs(f, &[n, m]),
                |x| {
                    let y = h.delta(&self.coact(x, 1), 0);
                    h.mul(&self.act(&y, 0, 2), 1, 2)
                },
                |x| {
                    let y = self.act(&h.delta(x, 0), 1, 2);
                    h.mul(&self.coact(&y, 1), 2, 0)
                },
            ),
            // m₀h₁ ⊗ m₁h₂ = (mh₂)₀ ⊗ h₁(mh₂)₁
            Variant::RR => r.identity(
                "compatibility",
                &basis_inputs(f, &[m, n]),
                |x| {
                    let y = h.delta(&self.coact(x, 0), 2);
                    h.mul(&self.act(&y, 2, 0), 1, 2)
                },
                |x| {
                    let y = self.act(&h.delta(x, 1), 2, 0);
                    h.mul(&self.coact(&y, 0), 2, 1)
                },
            ),
            // h₂(mh₁)₋₁ ⊗ (mh₁)₀ = m₋₁h₁ ⊗ m₀h₂
            Variant::RL => r.identity(
                "compatibility",
                &basis_inputs(f, &[m, n]),
                |x| {
                    let y = self.act(&h.delta(x, 1), 1, 0);
                    h.mul(&self.coact(&y, 0), 2, 0).swap(0, 1)
                },
                |x| {
                    let y = h.delta(&self.coact(x, 0), 2);
                    self.act(&h.mul(&y, 0, 2), 2, 1)
                },
            ),
        }
    }

    fn closed_form_check(&self, h: &WeakHopf, r: &mut Report) -> bool {
        let f = h.field();
        let (n, m) = (h.dim(), self.dim());
        match self.variant {
            // λ(hm) = h₁m₋₁S(h₃) ⊗ h₂m₀
            Variant::LL => r.identity(
                "closed_form",
                &basis_inputs(f, &[n, m]),
                |x| self.coact(&self.act(x, 0, 1), 0),
                |x| {
                    let y = self.coact(&h.delta2(x, 0), 3);
                    let y = h.mul(&h.s(&y, 2), 0, 3);
                    self.act(&h.mul(&y, 0, 2), 1, 2)
                },
            ),
            // ρ(hm) = h₂m₀ ⊗ h₃m₁S⁻¹(h₁)
            Variant::LR => r.identity(
                "closed_form",
                &basis_inputs(f, &[n, m]),
                |x| self.coact(&self.act(x, 0, 1), 0),
                |x| {
                    let y = self.coact(&h.delta2(x, 0), 3);
                    let y = h.mul(&self.act(&y, 1, 3), 2, 3);
                    h.mul(&h.s_inv(&y, 0), 2, 0)
                },
            ),
            // ρ(mh) = m₀h₂ ⊗ S(h₁)m₁h₃
            Variant::RR => r.identity(
                "closed_form",
                &basis_inputs(f, &[m, n]),
                |x| self.coact(&self.act(x, 1, 0), 0),
                |x| {
                    let y = self.coact(&h.delta2(x, 1), 0);
                    let y = self.act(&y, 3, 0);
                    let y = h.mul(&h.s(&y, 2), 2, 1);
                    h.mul(&y, 1, 2)
                },
            ),
            // λ(mh) = S⁻¹(h₃)m₋₁h₁ ⊗ m₀h₂
            Variant::RL => r.identity(
                "closed_form",
                &basis_inputs(f, &[m, n]),
                |x| self.coact(&self.act(x, 1, 0), 0),
                |x| {
                    let y = self.coact(&h.delta2(x, 1), 0);
                    let y = self.act(&h.mul(&y, 0, 2), 2, 1);
                    h.mul(&h.s_inv(&y, 2), 2, 0).swap(0, 1)
                },
            ),
        }
    }

    fn ll_derived(&self, h: &WeakHopf, r: &mut Report) {
        let f = h.field();
        let mb = basis_inputs(f, &[self.dim()]);
        let d1 = h.delta_one();
        r.identity(
            "counit_of_coaction_through_target",
            &mb,
            |x| h.eps(&self.coact(x, 0), 0),
            |x| self.act(&self.coact(x, 0).apply(&[0], h.eps_t()), 0, 1),
        );
        r.identity(
            "coaction_absorbs_unit_coproduct",
            &mb,
            |x| self.coact(x, 0),
            |x| {
                let y = self.coact(x, 0).insert(0, d1);
                let y = h.mul(&h.s(&y, 1), 2, 1);
                self.act(&y, 0, 2).swap(0, 1)
            },
        );
        let zm = product_inputs(&[subspace_inputs(h.target_space()), mb.clone()]);
        r.identity(
            "coaction_of_target_multiple",
            &zm,
            |x| self.coact(&self.act(x, 0, 1), 0),
            |x| h.mul(&self.coact(x, 1), 0, 1),
        );
        let ym = product_inputs(&[subspace_inputs(h.source_space()), mb.clone()]);
        r.identity(
            "coaction_of_source_multiple",
            &ym,
            |x| self.coact(&self.act(x, 0, 1), 0),
            |x| h.mul(&h.s(&self.coact(x, 1), 0), 1, 0),
        );
        let swapped = |x: &Elem| h.s_inv(&self.coact(x, 0), 0).swap(0, 1);
        r.identity(
            "inverse_antipode_coaction_in_truncated_tensor",
            &mb,
            |x| {
                let y = swapped(x).insert(0, d1);
                h.mul(&self.act(&y, 0, 2), 1, 2)
            },
            swapped,
        );
        r.identity(
            "source_counit_of_inverse_square_antipode",
            &mb,
            |x| {
                let y = h.s_inv(&h.s_inv(&self.coact(x, 0), 0), 0);
                self.act(&y.apply(&[0], h.eps_s()), 0, 1)
            },
            Elem::clone,
        );
    }

    fn lr_derived(&self, h: &WeakHopf, r: &mut Report) {
        let f = h.field();
        let mb = basis_inputs(f, &[self.dim()]);
        let ym = product_inputs(&[subspace_inputs(h.source_space()), mb.clone()]);
        r.identity(
            "coaction_of_source_multiple",
            &ym,
            |x| self.coact(&self.act(x, 0, 1), 0),
            |x| h.mul(&self.coact(x, 1), 0, 2).swap(0, 1),
        );
        let zm = product_inputs(&[subspace_inputs(h.target_space()), mb.clone()]);
        r.identity(
            "coaction_of_target_multiple",
            &zm,
            |x| self.coact(&self.act(x, 0, 1), 0),
            |x| h.mul(&h.s_inv(&self.coact(x, 1), 0), 2, 0),
        );
        // 1₂m₀ ⊗ m₁S⁻¹(1₁)
        r.identity(
            "coaction_absorbs_unit_coproduct",
            &mb,
            |x| {
                let y = self.coact(x, 0).insert(0, h.delta_one());
                let y = self.act(&y, 1, 2);
                h.mul(&h.s_inv(&y, 0), 2, 0)
            },
            |x| self.coact(x, 0),
        );
    }
}

fn verdict(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "fails"
    }
}

/// Validates shapes against `h` and runs the full suite.
pub fn check_yd(h: &WeakHopf, variant: Variant, action: Op, coaction: Op) -> Result<(Report, YdModule), Error> {
    let m = YdModule::new(variant, action, coaction)?;
    if m.hdim() != h.dim() {
        return Err(Error::DimMismatch(format!("module over dimension {}, algebra has {}", m.hdim(), h.dim())));
    }
    Ok((m.verify(h), m))
}

/// `λ(e_i) = deg(i) ⊗ e_i` for a grading by basis vectors of `H`.
pub fn graded_coaction(field: Field, hdim: usize, degrees: &[usize]) -> Op {
    let m = degrees.len();
    Op::from_fn(field, &[m], &[hdim, m], |idx| Elem::basis(field, &[hdim, m], &[degrees[idx[0]], idx[0]]))
}

/// Degrees of the basis of `⊕ M_σ` given morphism-indexed component
/// dimensions; components are laid out in morphism order.
pub fn degrees_from_dims(dims: &[usize]) -> Vec<usize> {
    dims.iter().enumerate().flat_map(|(s, &d)| std::iter::repeat_n(s, d)).collect()
}

/// A left-left module over `kG` graded by `dims`, rejected unless every
/// nonzero component sits on a loop.
pub fn yd_from_grading(h: &WeakHopf, g: &Groupoid, dims: &[usize], action: Op) -> Result<(Report, YdModule), Error> {
    if dims.len() != g.len() || h.dim() != g.len() {
        return Err(Error::DimMismatch(format!(
            "grading has {} entries, groupoid has {} morphisms, algebra dimension {}",
            dims.len(),
            g.len(),
            h.dim()
        )));
    }
    for (s, &d) in dims.iter().enumerate() {
        if d > 0 && !g.is_loop(s) {
            let mor = &g.morphisms()[s];
            return Err(Error::BadSupport(format!(
                "component of degree {} is nonzero but {} has source {} and target {}",
                mor.name,
                mor.name,
                g.objects()[g.source(s)],
                g.objects()[g.target(s)]
            )));
        }
    }
    let degrees = degrees_from_dims(dims);
    check_yd(h, Variant::LL, action, graded_coaction(h.field(), h.dim(), &degrees))
}

/// `kG₀` with `τ·m_x = m_{t(τ)}` when `s(τ) = x`.
pub fn object_action(g: &Groupoid, field: Field) -> Op {
    let k = g.objects().len();
    Op::from_fn(field, &[g.len(), k], &[k], |idx| {
        if g.source(idx[0]) == idx[1] {
            Elem::basis(field, &[k], &[g.target(idx[0])])
        } else {
            Elem::zero(field, &[k])
        }
    })
}

/// The loops of `G` with conjugation `τ·σ = τστ⁻¹`, graded by themselves.
pub fn loop_conjugation(g: &Groupoid, field: Field) -> (Op, Vec<usize>) {
    let loops: Vec<usize> = (0..g.len()).filter(|&s| g.is_loop(s)).collect();
    let k = loops.len();
    let action = Op::from_fn(field, &[g.len(), k], &[k], |idx| {
        let (t, s) = (idx[0], loops[idx[1]]);
        let conj = g.compose(t, s).and_then(|ts| g.compose(ts, g.inverse(t)));
        match conj {
            Some(c) => {
                let pos = loops.iter().position(|&l| l == c).expect("conjugate of a loop is a loop");
                Elem::basis(field, &[k], &[pos])
            }
            None => Elem::zero(field, &[k]),
        }
    });
    (action, loops)
}

/// The unit object `H_t`, `h ⇀ z = ε_t(hz)`, `λ(z) = Δ(z)`, pivot chart.
pub fn yd_unit_object(h: &WeakHopf) -> YdModule {
    let f = h.field();
    let n = h.dim();
    let k = h.target_space().dim();
    let unit = HModule::unit_object(h);
    let incl = h.target_inclusion();
    let chart = h.target_chart();
    let coaction = lift(f, &[k], &[n, k], |x| h.delta(&incl.eval(x), 0).apply(&[1], &chart));
    YdModule { variant: Variant::LL, action: unit.action, coaction }
}

/// `H` with `h·m = h₁mS(h₂)` and `λ = Δ`; Yetter-Drinfeld for Hopf algebras.
pub fn yd_adjoint(h: &WeakHopf) -> YdModule {
    let f = h.field();
    let n = h.dim();
    let action = lift(f, &[n, n], &[n], |x| {
        let y = h.s(&h.delta(x, 0), 1);
        h.mul(&h.mul(&y.swap(1, 2), 0, 1), 0, 1)
    });
    YdModule { variant: Variant::LL, action, coaction: h.comult().clone() }
}

/// `H` with left multiplication and `λ(m) = m₁S(m₃) ⊗ m₂`.
pub fn yd_regular(h: &WeakHopf) -> YdModule {
    let f = h.field();
    let n = h.dim();
    let coaction = lift(f, &[n], &[n, n], |x| {
        let y = h.s(&h.delta2(x, 0), 2);
        h.mul(&y, 0, 2)
    });
    YdModule { variant: Variant::LL, action: h.mult().clone(), coaction }
}

/// Named left-left modules for a groupoid algebra: unit object, regular,
/// objects, loop conjugation, and a tensor product.
pub fn groupoid_corpus(h: &WeakHopf, g: &Groupoid) -> Vec<(String, YdModule)> {
    let f = h.field();
    let n = h.dim();
    let mut out = vec![("unit".to_string(), yd_unit_object(h)), ("regular".to_string(), yd_regular(h))];
    let objects: Vec<usize> = (0..g.objects().len()).map(|x| g.identity(x)).collect();
    out.push((
        "objects".to_string(),
        YdModule { variant: Variant::LL, action: object_action(g, f), coaction: graded_coaction(f, n, &objects) },
    ));
    let (action, loops) = loop_conjugation(g, f);
    out.push(("conjugation".to_string(), YdModule { variant: Variant::LL, action, coaction: graded_coaction(f, n, &loops) }));
    let t = yd_tensor(h, &out[3].1, &out[2].1).expect("same variant");
    out.push(("conjugation⊗objects".to_string(), t.module));
    out
}

/// Action of `H` on `H⊗...`: left actions use `[h, m]`, right actions `[m, h]`.
fn to_ll(h: &WeakHopf, m: &YdModule) -> YdModule {
    let f = h.field();
    let (n, d) = (h.dim(), m.dim());
    let action = if m.variant.left_action() {
        m.action.clone()
    } else {
        // h·m = m·S(h)
        lift(f, &[n, d], &[d], |x| m.act(&h.s(x, 0), 0, 1))
    };
    let coaction = if m.variant.left_coaction() {
        m.coaction.clone()
    } else if m.variant.left_action() {
        // λ = S(m₁) ⊗ m₀
        lift(f, &[d], &[n, d], |x| h.s(&m.coact(x, 0), 1).swap(0, 1))
    } else {
        // λ = S⁻¹(m₁) ⊗ m₀
        lift(f, &[d], &[n, d], |x| h.s_inv(&m.coact(x, 0), 1).swap(0, 1))
    };
    YdModule { variant: Variant::LL, action, coaction }
}

fn from_ll(h: &WeakHopf, m: &YdModule, target: Variant) -> YdModule {
    let f = h.field();
    let (n, d) = (h.dim(), m.dim());
    let action = if target.left_action() {
        m.action.clone()
    } else {
        // m·h = S⁻¹(h)m
        lift(f, &[d, n], &[d], |x| m.act(&h.s_inv(x, 1), 1, 0))
    };
    let coaction = match target {
        Variant::LL | Variant::RL => m.coaction.clone(),
        // ρ = m₀ ⊗ S⁻¹(m₋₁)
        Variant::LR => lift(f, &[d], &[d, n], |x| h.s_inv(&m.coact(x, 0), 0).swap(0, 1)),
        // ρ = m₀ ⊗ S(m₋₁)
        Variant::RR => lift(f, &[d], &[d, n], |x| h.s(&m.coact(x, 0), 0).swap(0, 1)),
    };
    YdModule { variant: target, action, coaction }
}

/// Converts between variants through the left-left form.
pub fn yd_convert(h: &WeakHopf, m: &YdModule, target: Variant) -> YdModule {
    if m.variant == target {
        return m.clone();
    }
    let ll = to_ll(h, m);
    if target == Variant::LL {
        ll
    } else {
        from_ll(h, &ll, target)
    }
}

/// A truncated tensor product with its induced Yetter-Drinfeld structure in
/// chart coordinates.
#[derive(Clone, Debug)]
pub struct YdTensor {
    pub module: YdModule,
    pub space: TruncatedTensor,
}

/// `m1₁ ⊗ n1₂` on right modules.
fn right_unit_projector(h: &WeakHopf, a: &YdModule, b: &YdModule) -> Op {
    let f = h.field();
    let dims = [a.dim(), b.dim()];
    lift(f, &dims, &dims, |x| {
        let y = x.tensor(h.delta_one());
        b.act(&a.act(&y, 2, 0), 2, 1)
    })
}

/// The ambient space on which the two factors' structure is truncated.
fn tensor_space(h: &WeakHopf, a: &YdModule, b: &YdModule) -> TruncatedTensor {
    if a.variant.left_action() {
        TruncatedTensor::from_projector(unit_projector(h, &[&a.action, &b.action]))
    } else {
        TruncatedTensor::from_projector(right_unit_projector(h, a, b))
    }
}

/// Diagonal action on the ambient space, `[h, a, b] -> [a, b]`.
pub(crate) fn ambient_action(h: &WeakHopf, a: &YdModule, b: &YdModule) -> Op {
    if a.variant.left_action() {
        diagonal_action(h, &[&a.action, &b.action])
    } else {
        let f = h.field();
        lift(f, &[h.dim(), a.dim(), b.dim()], &[a.dim(), b.dim()], |x| {
            let y = h.delta(x, 0);
            b.act(&a.act(&y, 0, 2), 0, 2)
        })
    }
}

/// Coaction on the ambient space: `[a, b] -> [h, a, b]` or `[a, b, h]`.
pub(crate) fn ambient_coaction(h: &WeakHopf, a: &YdModule, b: &YdModule, x: &Elem) -> Elem {
    match a.variant {
        // m₋₁n₋₁ ⊗ m₀ ⊗ n₀
        Variant::LL | Variant::RL => {
            let y = b.coact(&a.coact(x, 0), 2);
            h.mul(&y, 0, 2)
        }
        // m₀ ⊗ n₀ ⊗ n₁m₁
        Variant::LR => {
            let y = b.coact(&a.coact(x, 0), 2);
            h.mul(&y, 3, 1)
        }
        // m₀ ⊗ n₀ ⊗ m₁n₁
        Variant::RR => {
            let y = b.coact(&a.coact(x, 0), 2);
            h.mul(&y, 1, 3).swap(1, 2)
        }
    }
}

pub fn yd_tensor(h: &WeakHopf, a: &YdModule, b: &YdModule) -> Result<YdTensor, Error> {
    if a.variant != b.variant {
        return Err(Error::VariantMismatch(format!("cannot tensor {} with {}", a.variant, b.variant)));
    }
    let f = h.field();
    let n = h.dim();
    let space = tensor_space(h, a, b);
    let k = space.dim();
    let diag = ambient_action(h, a, b);
    let action = if a.variant.left_action() {
        space.restrict_action(&[n], &diag)
    } else {
        lift(f, &[k, n], &[k], |x| {
            let y = x.apply(&[0], space.include()).permute(&[2, 0, 1]);
            space.chart().eval(&y.apply(&[0, 1, 2], &diag))
        })
    };
    let left = a.variant.left_coaction();
    let outs = if left { [n, k] } else { [k, n] };
    let coaction = lift(f, &[k], &outs, |x| {
        let y = ambient_coaction(h, a, b, &space.include().eval(x));
        if left {
            y.apply(&[1, 2], space.chart())
        } else {
            y.apply(&[0, 1], space.chart())
        }
    });
    Ok(YdTensor { module: YdModule { variant: a.variant, action, coaction }, space })
}

/// Checks that both bracketings of `A⊗B⊗C` give the same subspace of the
/// ambient triple product and the same coaction there.
pub fn tensor_associativity_report(h: &WeakHopf, a: &YdModule, b: &YdModule, c: &YdModule) -> Result<Report, Error> {
    let mut r = Report::new("tensor associativity");
    let f = h.field();
    let ab = yd_tensor(h, a, b)?;
    let ab_c = yd_tensor(h, &ab.module, c)?;
    let bc = yd_tensor(h, b, c)?;
    let a_bc = yd_tensor(h, a, &bc.module)?;
    let dims = [a.dim(), b.dim(), c.dim()];
    let incl_left = |x: &Elem| ab_c.space.include().eval(x).apply(&[0], ab.space.include());
    let incl_right = |x: &Elem| a_bc.space.include().eval(x).apply(&[1], bc.space.include());
    let span = |t: &YdTensor, g: &dyn Fn(&Elem) -> Elem| {
        let k = t.space.dim();
        let vs: Vec<Vec<Scalar>> = (0..k).map(|i| g(&Elem::basis(f, &[k], &[i])).flat()).collect();
        Subspace::span(f, dims.iter().product(), &vs)
    };
    let left_space = span(&ab_c, &incl_left);
    let right_space = span(&a_bc, &incl_right);
    r.equal_subspaces("bracketings_span_same_subspace", &left_space, &right_space);
    if left_space != right_space {
        return Ok(r);
    }
    let left = a.variant.left_coaction();
    let leg = if left { 1 } else { 0 };
    let ins: Vec<Input> = subspace_inputs_shaped(&left_space, &dims);
    r.identity(
        "bracketings_have_equal_coaction",
        &ins,
        |x| {
            let chart = ab_c.space.chart().eval(&x.apply(&[0, 1], ab.space.chart()));
            let y = ab_c.module.coact(&chart, 0).apply(&[leg], ab_c.space.include());
            y.apply(&[leg], ab.space.include())
        },
        |x| {
            let chart = a_bc.space.chart().eval(&x.apply(&[1, 2], bc.space.chart()));
            let y = a_bc.module.coact(&chart, 0).apply(&[leg], a_bc.space.include());
            y.apply(&[leg + 1], bc.space.include())
        },
    );
    Ok(r)
}

/// `σ(m⊗v) = m₋₁v ⊗ m₀` on ambient `[m, v] -> [v, m]`, `m` left-left.
fn sigma_ll(m: &YdModule, v_action: &Op, x: &Elem) -> Elem {
    sigma_ll_at(m, v_action, x, 0)
}

/// [`sigma_ll`] on legs `leg, leg + 1`.
fn sigma_ll_at(m: &YdModule, v_action: &Op, x: &Elem, leg: usize) -> Elem {
    m.coact(x, leg).apply(&[leg, leg + 2], v_action)
}

/// `σ⁻¹(v⊗m) = m₀ ⊗ S⁻¹(m₋₁)v` on ambient `[v, m] -> [m, v]`, `m` left-left.
fn sigma_inv_ll(h: &WeakHopf, m: &YdModule, v_action: &Op, x: &Elem) -> Elem {
    let y = h.s_inv(&m.coact(x, 1), 1);
    y.apply(&[1, 0], v_action).swap(0, 1)
}

/// The braiding `A⊗B -> B⊗A` and its inverse in chart coordinates.
#[derive(Clone, Debug)]
pub struct BraidingWitness {
    pub variant: Variant,
    pub source: YdTensor,
    pub target: YdTensor,
    pub sigma: Op,
    pub sigma_inv: Op,
    a: YdModule,
    b: YdModule,
}

/// Ambient braiding of the given variant, computed through left-left forms.
fn hub_braiding(h: &WeakHopf, a: &YdModule, b: &YdModule, x: &Elem) -> Elem {
    let (al, bl) = (to_ll(h, a), to_ll(h, b));
    match a.variant {
        Variant::LL => sigma_ll(&al, &bl.action, x),
        Variant::LR => sigma_inv_ll(h, &bl, &al.action, x),
        Variant::RR => sigma_ll(&bl, &al.action, &x.swap(0, 1)).swap(0, 1),
        Variant::RL => sigma_inv_ll(h, &al, &bl.action, &x.swap(0, 1)).swap(0, 1),
    }
}

/// Inverse of [`hub_braiding`], `B⊗A -> A⊗B`.
fn hub_braiding_inv(h: &WeakHopf, a: &YdModule, b: &YdModule, y: &Elem) -> Elem {
    let (al, bl) = (to_ll(h, a), to_ll(h, b));
    match a.variant {
        Variant::LL => sigma_inv_ll(h, &al, &bl.action, y),
        Variant::LR => sigma_ll(&bl, &al.action, y),
        Variant::RR => sigma_inv_ll(h, &bl, &al.action, &y.swap(0, 1)).swap(0, 1),
        Variant::RL => sigma_ll(&al, &bl.action, &y.swap(0, 1)).swap(0, 1),
    }
}

/// The braiding written directly in the variant's own structure maps.
pub fn direct_braiding(a: &YdModule, b: &YdModule, x: &Elem) -> Elem {
    match a.variant {
        // a₋₁b ⊗ a₀
        Variant::LL => a.coact(x, 0).apply(&[0, 2], &b.action),
        // b₀ ⊗ b₁a
        Variant::LR => a.act(&b.coact(x, 1), 2, 0),
        // b₀ ⊗ ab₁
        Variant::RR => a.act(&b.coact(x, 1), 2, 0).swap(0, 1),
        // ba₋₁ ⊗ a₀
        Variant::RL => b.act(&a.coact(x, 0), 0, 2).swap(0, 1),
    }
}

/// The inverse braiding where it is written directly: `b⊗a ↦ aS⁻¹(b₁) ⊗ b₀`
/// for right-right and `b⊗a ↦ a₀ ⊗ S⁻¹(a₋₁)b` for left-left.
pub fn direct_braiding_inv(h: &WeakHopf, a: &YdModule, b: &YdModule, y: &Elem) -> Option<Elem> {
    match a.variant {
        Variant::LL => Some(sigma_inv_ll(h, a, &b.action, y)),
        Variant::RR => {
            let z = h.s_inv(&b.coact(y, 0), 1);
            Some(a.act(&z, 1, 2).swap(0, 1))
        }
        _ => None,
    }
}

pub fn braiding(h: &WeakHopf, a: &YdModule, b: &YdModule) -> Result<BraidingWitness, Error> {
    if a.variant != b.variant {
        return Err(Error::VariantMismatch(format!("cannot braid {} with {}", a.variant, b.variant)));
    }
    let f = h.field();
    let source = yd_tensor(h, a, b)?;
    let target = yd_tensor(h, b, a)?;
    let (k, kt) = (source.space.dim(), target.space.dim());
    let sigma = lift(f, &[k], &[kt], |x| target.space.chart().eval(&hub_braiding(h, a, b, &source.space.include().eval(x))));
    let sigma_inv = lift(f, &[kt], &[k], |y| source.space.chart().eval(&hub_braiding_inv(h, a, b, &target.space.include().eval(y))));
    Ok(BraidingWitness { variant: a.variant, source, target, sigma, sigma_inv, a: a.clone(), b: b.clone() })
}

impl BraidingWitness {
    /// The braiding on ambient coordinates, restricted to the truncation.
    pub fn ambient(&self, h: &WeakHopf, x: &Elem) -> Elem {
        hub_braiding(h, &self.a, &self.b, x)
    }

    pub fn verify(&self, h: &WeakHopf) -> Report {
        let mut r = Report::new(format!("{} braiding", self.variant));
        let f = h.field();
        let n = h.dim();
        let (k, kt) = (self.source.space.dim(), self.target.space.dim());
        r.predicate("truncated_dimensions_agree", k == kt, format!("{k} and {kt}"));
        r.identity("inverse_after_braiding", &basis_inputs(f, &[k]), |x| self.sigma_inv.eval(&self.sigma.eval(x)), Elem::clone);
        r.identity("braiding_after_inverse", &basis_inputs(f, &[kt]), |x| self.sigma.eval(&self.sigma_inv.eval(x)), Elem::clone);
        let src = self.source.space.inputs();
        r.identity(
            "braiding_lands_in_truncation",
            &src,
            |x| self.target.space.projector.eval(&self.ambient(h, x)),
            |x| self.ambient(h, x),
        );
        let (sm, tm) = (&self.source.module, &self.target.module);
        let left_act = self.variant.left_action();
        let hk: Vec<Input> = if left_act {
            basis_inputs(f, &[n, k])
        } else {
            basis_inputs(f, &[k, n])
        };
        r.identity(
            "braiding_is_linear",
            &hk,
            |x| self.sigma.eval(&sm.act(x, if left_act { 0 } else { 1 }, if left_act { 1 } else { 0 })),
            |x| {
                let leg = if left_act { 1 } else { 0 };
                let y = x.apply(&[leg], &self.sigma);
                tm.act(&y, if left_act { 0 } else { 1 }, leg)
            },
        );
        let leg = if self.variant.left_coaction() { 1 } else { 0 };
        r.identity(
            "braiding_is_colinear",
            &basis_inputs(f, &[k]),
            |x| tm.coact(&self.sigma.eval(x), 0),
            |x| sm.coact(x, 0).apply(&[leg], &self.sigma),
        );
        r.identity(
            "braiding_matches_direct_formula",
            &src,
            |x| self.ambient(h, x),
            |x| direct_braiding(&self.a, &self.b, x),
        );
        if direct_braiding_inv(h, &self.a, &self.b, &Elem::zero(f, &[self.b.dim(), self.a.dim()])).is_some() {
            r.identity(
                "inverse_matches_direct_formula",
                &self.target.space.inputs(),
                |y| hub_braiding_inv(h, &self.a, &self.b, y),
                |y| direct_braiding_inv(h, &self.a, &self.b, y).expect("direct inverse exists"),
            );
        }
        r
    }
}

/// Compares the right-right braiding (direct formula) of two converted
/// left-right modules with the conjugate `sw∘c⁻¹∘sw` of their left-right
/// braiding.
pub fn lr_rr_braiding_comparison(h: &WeakHopf, a: &YdModule, b: &YdModule) -> Result<Report, Error> {
    if a.variant != Variant::LR || b.variant != Variant::LR {
        return Err(Error::VariantMismatch("comparison takes two left-right modules".into()));
    }
    let mut r = Report::new("left-right versus right-right braiding");
    let (ar, br) = (yd_convert(h, a, Variant::RR), yd_convert(h, b, Variant::RR));
    let space = tensor_space(h, &ar, &br);
    let lr_target = tensor_space(h, b, a);
    r.predicate(
        "switch_maps_truncations",
        space.image.map(&swap_matrix(h.field(), a.dim(), b.dim())) == lr_target.image,
        format!("dimensions {} and {}", space.dim(), lr_target.dim()),
    );
    r.identity(
        "right_right_braiding_is_switched_left_right_inverse",
        &space.inputs(),
        |x| direct_braiding(&ar, &br, x),
        |x| hub_braiding_inv(h, a, b, &x.swap(0, 1)).swap(0, 1),
    );
    Ok(r)
}

/// `a⊗b ↦ b⊗a` as a matrix on row-major coordinates.
pub fn swap_matrix(f: Field, a: usize, b: usize) -> Matrix {
    Op::from_fn(f, &[a, b], &[b, a], |idx| Elem::basis(f, &[b, a], &[idx[1], idx[0]])).to_matrix()
}

/// Linear maps `A -> B` that are module and comodule maps, as a basis of
/// `dim B × dim A` matrices.
pub fn yd_morphisms(h: &WeakHopf, a: &YdModule, b: &YdModule) -> Result<Vec<Matrix>, Error> {
    if a.variant != b.variant {
        return Err(Error::VariantMismatch(format!("{} and {}", a.variant, b.variant)));
    }
    let f = h.field();
    let n = h.dim();
    let (da, db) = (a.dim(), b.dim());
    let left_act = a.variant.left_action();
    let left_co = a.variant.left_coaction();
    let residual = |fop: &Op| -> Vec<Scalar> {
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..da {
                let x = if left_act { Elem::basis(f, &[n, da], &[i, j]) } else { Elem::basis(f, &[da, n], &[j, i]) };
                let (hl, ml) = if left_act { (0, 1) } else { (1, 0) };
                let lhs = fop.eval(&a.act(&x, hl, ml));
                let rhs = b.act(&x.apply(&[ml], fop), hl, ml);
                out.extend(lhs.sub(&rhs).flat());
            }
        }
        let leg = if left_co { 1 } else { 0 };
        for j in 0..da {
            let x = Elem::basis(f, &[da], &[j]);
            let lhs = b.coact(&fop.eval(&x), 0);
            let rhs = a.coact(&x, 0).apply(&[leg], fop);
            out.extend(lhs.sub(&rhs).flat());
        }
        out
    };
    let mut columns = Vec::with_capacity(da * db);
    for i in 0..db {
        for j in 0..da {
            let mut e = Matrix::zeros(f, db, da);
            e.set(i, j, f.one());
            columns.push(residual(&Op::linear(&e)));
        }
    }
    let rows = columns.first().map_or(0, Vec::len);
    let system = Matrix::from_columns(f, rows, &columns);
    let kernel = system.kernel();
    Ok(kernel.basis().iter().map(|v| Matrix::from_fn(f, db, da, |i, j| v[i * da + j].clone())).collect())
}

/// Naturality of the braiding against a module/comodule map `φ: A -> B` in
/// either slot, with `C` in the other.
pub fn braiding_naturality_report(h: &WeakHopf, phi: &Matrix, a: &YdModule, b: &YdModule, c: &YdModule) -> Result<Report, Error> {
    let mut r = Report::new("braiding naturality");
    let p = Op::linear(phi);
    let ac = braiding(h, a, c)?;
    let bc = braiding(h, b, c)?;
    r.identity(
        "natural_in_first_slot",
        &ac.source.space.inputs(),
        |x| bc.ambient(h, &x.apply(&[0], &p)),
        |x| ac.ambient(h, x).apply(&[1], &p),
    );
    let ca = braiding(h, c, a)?;
    let cb = braiding(h, c, b)?;
    r.identity(
        "natural_in_second_slot",
        &ca.source.space.inputs(),
        |x| cb.ambient(h, &x.apply(&[1], &p)),
        |x| ca.ambient(h, x).apply(&[0], &p),
    );
    Ok(r)
}

/// The center condition for the braiding of `m` against left modules `X`,
/// `Y`, unit coherence, and naturality against right multiplications of the
/// regular module. Non-left-left modules are converted first.
pub fn check_center_condition(h: &WeakHopf, m: &YdModule, x: &HModule, y: &HModule) -> Report {
    let mut r = Report::new("center condition");
    let f = h.field();
    let n = h.dim();
    let m = to_ll(h, m);
    let ma = &m.action;

    // σ_{M,X⊗Y} = (X⊗σ_{M,Y}) ∘ (σ_{M,X}⊗Y) on Δ²(1)(M⊗X⊗Y)
    let triple = TruncatedTensor::from_projector(unit_projector(h, &[ma, &x.action, &y.action]));
    let xy_diag = diagonal_action(h, &[&x.action, &y.action]);
    r.identity(
        "braiding_against_tensor_product",
        &triple.inputs(),
        |v| m.coact(v, 0).apply(&[0, 2, 3], &xy_diag),
        |v| sigma_ll_at(&m, &y.action, &sigma_ll(&m, &x.action, v), 1),
    );
    let mid = TruncatedTensor::from_projector(unit_projector(h, &[&x.action, ma, &y.action]));
    r.identity(
        "first_braiding_stays_truncated",
        &triple.inputs(),
        |v| mid.projector.eval(&sigma_ll(&m, &x.action, v)),
        |v| sigma_ll(&m, &x.action, v),
    );

    // unit coherence with H_t
    let unit = HModule::unit_object(h);
    let module = HModule { action: ma.clone() };
    let uc = unit_constraints(h, &module);
    let m_ht = TruncatedTensor::from_projector(unit_projector(h, &[ma, &unit.action]));
    r.identity(
        "braiding_with_unit_is_unit_composite",
        &m_ht.inputs(),
        |v| sigma_ll(&m, &unit.action, v),
        |v| uc.left_inv.eval(&uc.right.eval(v)),
    );
    let ht = yd_unit_object(h);
    let ht_m = TruncatedTensor::from_projector(unit_projector(h, &[&unit.action, ma]));
    r.identity(
        "unit_braiding_is_unit_composite",
        &ht_m.inputs(),
        |v| sigma_ll(&ht, ma, v),
        |v| uc.right_inv.eval(&uc.left.eval(v)),
    );

    // naturality against x ↦ xk on the regular module
    let m_h = TruncatedTensor::from_projector(unit_projector(h, &[ma, h.mult()]));
    for k in 0..n {
        let rk = lift(f, &[n], &[n], |v| h.mul(&v.insert(1, &h.basis(k)), 0, 1));
        r.identity(
            format!("natural_against_right_multiplication_{k}"),
            &m_h.inputs(),
            |v| sigma_ll(&m, h.mult(), &v.apply(&[1], &rk)),
            |v| sigma_ll(&m, h.mult(), v).apply(&[0], &rk),
        );
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weakhopf::groupoid_algebra;

    fn algebra(g: &Groupoid) -> WeakHopf {
        groupoid_algebra(g, Field::Rational)
    }

    fn assert_passes(r: &Report) {
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn z2_adjoint_is_yetter_drinfeld() {
        let h = algebra(&Groupoid::cyclic(2).unwrap());
        let m = yd_adjoint(&h);
        let r = m.verify(&h);
        assert_passes(&r);
        assert!(r.checks.len() >= 12);
        let t = yd_tensor(&h, &m, &m).unwrap();
        assert_eq!(t.module.dim(), 4);
        assert_passes(&t.module.verify(&h));
    }

    #[test]
    fn unit_object_passes_on_every_groupoid() {
        for g in [Groupoid::cyclic(2).unwrap(), Groupoid::discrete(2).unwrap(), Groupoid::pair(2).unwrap()] {
            let h = algebra(&g);
            assert_passes(&yd_unit_object(&h).verify(&h));
        }
    }

    #[test]
    fn pair_groupoid_corpus_passes() {
        let g = Groupoid::pair(2).unwrap();
        let h = algebra(&g);
        for (name, m) in groupoid_corpus(&h, &g) {
            let r = m.verify(&h);
            assert!(r.passed(), "{name}: {r}");
        }
    }

    #[test]
    fn adjoint_of_pair_groupoid_fails_range() {
        let h = algebra(&Groupoid::pair(2).unwrap());
        let r = yd_adjoint(&h).verify(&h);
        assert!(!r.passed());
        assert!(!r.find("coaction_in_truncated_tensor").unwrap().passed);
    }

    #[test]
    fn non_loop_degree_fails_and_is_rejected() {
        let g = Groupoid::pair(2).unwrap();
        let h = algebra(&g);
        let f12 = g.position("f_12").unwrap();
        let action = object_action(&g, Field::Rational);
        let (r, _) = check_yd(&h, Variant::LL, action.clone(), graded_coaction(Field::Rational, 4, &[f12, g.identity(1)])).unwrap();
        assert!(!r.find("compatibility").unwrap().passed);
        assert!(!r.find("closed_form").unwrap().passed);
        assert!(r.find("compatibility_matches_closed_form").unwrap().passed);
        let mut dims = vec![0; 4];
        dims[f12] = 1;
        dims[g.identity(1)] = 1;
        match yd_from_grading(&h, &g, &dims, action) {
            Err(Error::BadSupport(msg)) => assert!(msg.contains("f_12"), "{msg}"),
            other => panic!("expected BadSupport, got {other:?}"),
        }
    }

    #[test]
    fn object_grading_moves_degree_along_morphism() {
        let g = Groupoid::pair(2).unwrap();
        let h = algebra(&g);
        let mut dims = vec![0; 4];
        dims[g.identity(0)] = 1;
        dims[g.identity(1)] = 1;
        let (r, m) = yd_from_grading(&h, &g, &dims, object_action(&g, Field::Rational)).unwrap();
        assert_passes(&r);
        // f_21 : 1 -> 2 sends m_1 to m_2, of degree id_2
        let f21 = g.position("f_21").unwrap();
        let fm = m.act(&Elem::basis(Field::Rational, &[4, 2], &[f21, 0]), 0, 1);
        let lam = m.coact(&fm, 0);
        assert_eq!(lam, Elem::basis(Field::Rational, &[4, 2], &[g.identity(1), 1]));
    }

    #[test]
    fn zero_coaction_fails_counit_without_panicking() {
        let h = algebra(&Groupoid::cyclic(2).unwrap());
        let (r, _) = check_yd(&h, Variant::LL, h.mult().clone(), Op::from_fn(Field::Rational, &[2], &[2, 2], |_| Elem::zero(Field::Rational, &[2, 2]))).unwrap();
        let c = r.find("comodule_counit").unwrap();
        assert!(!c.passed);
        assert!(c.witness.is_some());
    }

    #[test]
    fn all_conversions_pass_and_round_trip() {
        let g = Groupoid::pair(2).unwrap();
        let h = algebra(&g);
        for (name, m) in groupoid_corpus(&h, &g) {
            for from in Variant::ALL {
                let src = yd_convert(&h, &m, from);
                for to in Variant::ALL {
                    if from == to {
                        continue;
                    }
                    let out = yd_convert(&h, &src, to);
                    let r = out.verify(&h);
                    assert!(r.passed(), "{name} {from}->{to}: {r}");
                    assert_eq!(yd_convert(&h, &out, from), src, "{name} {from}->{to}->{from}");
                }
            }
        }
    }

    #[test]
    fn graded_module_as_left_right_has_inverse_degree() {
        let g = Groupoid::cyclic(3).unwrap();
        let h = algebra(&g);
        let (action, loops) = loop_conjugation(&g, Field::Rational);
        let m = YdModule::new(Variant::LL, action, graded_coaction(Field::Rational, 3, &loops)).unwrap();
        let lr = yd_convert(&h, &m, Variant::LR);
        for (i, &s) in loops.iter().enumerate() {
            let rho = lr.coact(&Elem::basis(Field::Rational, &[3], &[i]), 0);
            assert_eq!(rho, Elem::basis(Field::Rational, &[3, 3], &[i, g.inverse(s)]));
        }
    }

    #[test]
    fn braidings_verify_in_every_variant() {
        let g = Groupoid::pair(2).unwrap();
        let h = algebra(&g);
        let corpus = groupoid_corpus(&h, &g);
        for v in Variant::ALL {
            for (an, a) in &corpus[..4] {
                for (bn, b) in &corpus[..4] {
                    let (a, b) = (yd_convert(&h, a, v), yd_convert(&h, b, v));
                    let w = braiding(&h, &a, &b).unwrap();
                    let r = w.verify(&h);
                    assert!(r.passed(), "{v} {an}⊗{bn}: {r}");
                }
            }
        }
    }

    #[test]
    fn z2_adjoint_braiding_is_the_flip() {
        let h = algebra(&Groupoid::cyclic(2).unwrap());
        let m = yd_adjoint(&h);
        let w = braiding(&h, &m, &m).unwrap();
        assert_passes(&w.verify(&h));
        assert_eq!(w.sigma.then(&w.sigma_inv), Op::identity(Field::Rational, &[4]));
        // conjugation in an abelian group is trivial
        let flip = Op::linear(&swap_matrix(Field::Rational, 2, 2));
        assert_eq!(w.sigma, flip);
    }

    #[test]
    fn graded_braiding_acts_by_degree() {
        let g = Groupoid::pair(2).unwrap();
        let h = algebra(&g);
        let f = Field::Rational;
        let objects: Vec<usize> = (0..2).map(|x| g.identity(x)).collect();
        let m = YdModule::new(Variant::LL, object_action(&g, f), graded_coaction(f, 4, &objects)).unwrap();
        let reg = yd_regular(&h);
        let w = braiding(&h, &m, &reg).unwrap();
        for (_, x) in w.source.space.inputs() {
            let expected = {
                let mut out = Elem::zero(f, &[4, 2]);
                for (idx, c) in x.terms() {
                    let deg = objects[idx[0]];
                    if let Some(p) = g.compose(deg, idx[1]) {
                        out.add_term(vec![p, idx[0]], c);
                    }
                }
                out
            };
            assert_eq!(w.ambient(&h, &x), expected);
        }
    }

    #[test]
    fn center_condition_on_regular_probes() {
        let g = Groupoid::pair(2).unwrap();
        let h = algebra(&g);
        let reg = HModule::regular(&h);
        let unit = HModule::unit_object(&h);
        for (name, m) in groupoid_corpus(&h, &g) {
            let r = check_center_condition(&h, &m, &reg, &reg);
            assert!(r.passed(), "{name}: {r}");
            assert_passes(&check_center_condition(&h, &m, &unit, &unit));
        }
        let z2 = algebra(&Groupoid::cyclic(2).unwrap());
        let r = check_center_condition(&z2, &yd_adjoint(&z2), &HModule::regular(&z2), &HModule::regular(&z2));
        assert_passes(&r);
    }

    #[test]
    fn tensor_is_associative_in_ambient_coordinates() {
        let g = Groupoid::pair(2).unwrap();
        let h = algebra(&g);
        let corpus = groupoid_corpus(&h, &g);
        for v in [Variant::LL, Variant::RR] {
            let a = yd_convert(&h, &corpus[1].1, v);
            let b = yd_convert(&h, &corpus[2].1, v);
            let r = tensor_associativity_report(&h, &a, &b, &a).unwrap();
            assert_passes(&r);
        }
    }

    #[test]
    fn right_unit_is_a_yetter_drinfeld_isomorphism() {
        let g = Groupoid::pair(2).unwrap();
        let h = algebra(&g);
        let unit = yd_unit_object(&h);
        let reg = yd_regular(&h);
        let t = yd_tensor(&h, &reg, &unit).unwrap();
        let uc = unit_constraints(&h, &reg.module().unwrap());
        let r_chart = t.space.include().then(&uc.right);
        let homs = yd_morphisms(&h, &t.module, &reg).unwrap();
        let rm = r_chart.to_matrix();
        assert_eq!(rm.rank(), 4);
        let coords: Vec<Scalar> = (0..4).flat_map(|i| rm.row(i).to_vec()).collect();
        let flat_homs: Vec<Vec<Scalar>> = homs.iter().map(|m| (0..4).flat_map(|i| m.row(i).to_vec()).collect()).collect();
        assert!(Subspace::span(Field::Rational, 16, &flat_homs).contains(&coords));
    }

    #[test]
    fn braiding_is_natural_against_morphisms() {
        let g = Groupoid::pair(2).unwrap();
        let h = algebra(&g);
        let corpus = groupoid_corpus(&h, &g);
        let (a, b, c) = (&corpus[2].1, &corpus[0].1, &corpus[1].1);
        let homs = yd_morphisms(&h, a, b).unwrap();
        assert!(!homs.is_empty());
        for phi in &homs {
            assert_passes(&braiding_naturality_report(&h, phi, a, b, c).unwrap());
        }
    }
}
