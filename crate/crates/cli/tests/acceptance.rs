//! Acceptance run: one PASS/FAIL line per criterion.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::time::Instant;

use weak_hopf::double::{
    double_module_report, dprime_and_f, drinfeld_double, j_span, kernel_equals_j, switch_report, target_comparison, yd_to_double_module,
};
use weak_hopf::exactlin::{Elem, Field, Matrix, Op, Scalar, Subspace};
use weak_hopf::weakbialg::{module_category_report, tensor_subspace, HModule};
use weak_hopf::weakhopf::{dual_weak_hopf, groupoid_algebra, solve_antipode, AntipodeSolution, Groupoid, Morphism, WeakHopf};
use weak_hopf::yetterdrinfeld::{check_yd, graded_coaction, groupoid_corpus, object_action, yd_convert, yd_from_grading, Variant, YdModule};
use weak_hopf::{Error, Report};
use whopf_cli::suites::{duality_reports, yd_reports};
use whopf_cli::{parse_spec, render_spec};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn first_failure(r: &Report) -> String {
    match r.failures().next() {
        Some(c) => format!("{}: {} failed", r.suite, c.name),
        None => format!("{}: ok", r.suite),
    }
}

fn all_pass(tag: &str, r: &Report) -> Result<(), String> {
    ensure(r.passed(), || format!("{tag}: {}", first_failure(r)))
}

fn group(name: &str) -> Groupoid {
    match name {
        "cyclic2" => Groupoid::cyclic(2),
        "cyclic3" => Groupoid::cyclic(3),
        "discrete2" => Groupoid::discrete(2),
        "discrete3" => Groupoid::discrete(3),
        "pair2" => Groupoid::pair(2),
        "pair3" => Groupoid::pair(3),
        _ => unreachable!("unknown groupoid {name}"),
    }
    .unwrap()
}

const CORE: [&str; 3] = ["cyclic2", "discrete2", "pair2"];

fn algebra(name: &str) -> WeakHopf {
    groupoid_algebra(&group(name), Field::Rational)
}

fn lr_corpus(h: &WeakHopf, g: &Groupoid) -> Vec<(String, YdModule)> {
    groupoid_corpus(h, g).into_iter().map(|(n, m)| (n, yd_convert(h, &m, Variant::LR))).collect()
}

fn axiom_suites() -> Outcome {
    let start = Instant::now();
    let mut counts = Vec::new();
    for name in CORE {
        let r = algebra(name).report();
        all_pass(name, &r)?;
        ensure(r.checks.len() >= 25, || format!("{name}: only {} named checks", r.checks.len()))?;
        counts.push(format!("{name} {}", r.checks.len()));
    }
    let elapsed = start.elapsed().as_secs_f64();
    ensure(elapsed < 10.0, || format!("took {elapsed:.2}s"))?;
    Ok(format!("{} checks, {elapsed:.2}s", counts.join(", ")))
}

/// `Δ(1)` lies in `H_s⊗H_t`, with `H_t`, `H_s` spanned by `ε(1₁h)1₂` and
/// `1₁ε(h1₂)` computed here from the structure maps.
fn unit_coproduct_and_separability() -> Outcome {
    let mut algebras: Vec<(String, WeakHopf)> = Vec::new();
    for name in ["cyclic2", "cyclic3", "discrete2", "discrete3", "pair2", "pair3"] {
        let h = algebra(name);
        algebras.push((format!("{name}*"), dual_weak_hopf(&h)));
        algebras.push((name.to_string(), h));
    }
    let (_, dbl) = drinfeld_double(&algebra("pair2")).map_err(|e| e.to_string())?;
    algebras.push(("D(pair2)".into(), dbl.d));
    let names = [
        "unit_coproduct_in_source_tensor_target",
        "target_idempotent_separable",
        "source_idempotent_separable",
        "target_idempotent_balanced",
        "source_idempotent_balanced",
        "target_idempotent_two_forms",
        "source_idempotent_two_forms",
    ];
    for (name, h) in &algebras {
        let f = h.field();
        let n = h.dim();
        let d1 = h.comult().eval(h.one());
        let mut t_vecs = Vec::new();
        let mut s_vecs = Vec::new();
        for i in 0..n {
            let b = Elem::basis(f, &[n], &[i]);
            // [1₁, h, 1₂] and [1₁, 1₂, h]
            let t = d1.insert(1, &b).apply(&[0, 1], h.mult()).apply(&[0], h.counit());
            let s = d1.insert(2, &b).apply(&[1, 2], h.mult()).apply(&[1], h.counit());
            t_vecs.push(t.flat());
            s_vecs.push(s.flat());
        }
        let ht = Subspace::span(f, n, &t_vecs);
        let hs = Subspace::span(f, n, &s_vecs);
        ensure(&ht == h.target_space() && &hs == h.source_space(), || format!("{name}: counital images disagree"))?;
        ensure(tensor_subspace(&hs, &ht).contains(&d1.flat()), || format!("{name}: Δ(1) outside H_s⊗H_t"))?;
        let r = h.report();
        for check in names {
            let c = r.find(check).ok_or_else(|| format!("{name}: missing {check}"))?;
            ensure(c.passed, || format!("{name}: {check} failed"))?;
        }
    }
    Ok(format!("{} algebras, {} named identities each", algebras.len(), names.len()))
}

/// Inverses found by scanning the composition table for identities.
fn antipode_solver() -> Outcome {
    let f = Field::Rational;
    let mut done = Vec::new();
    for name in ["cyclic2", "cyclic3", "discrete2", "discrete3", "pair2", "pair3"] {
        let g = group(name);
        let n = g.len();
        let is_identity = |e: usize| g.is_loop(e) && (0..n).all(|k| g.compose(e, k).is_none_or(|c| c == k));
        let mut inv = Matrix::zeros(f, n, n);
        for a in 0..n {
            let b = (0..n)
                .find(|&b| g.compose(a, b).is_some_and(is_identity) && g.compose(b, a).is_some_and(is_identity))
                .ok_or_else(|| format!("{name}: no inverse for {a}"))?;
            inv.set(b, a, f.one());
        }
        let h = groupoid_algebra(&g, f);
        let s = match solve_antipode(h.base()).map_err(|e| e.to_string())? {
            AntipodeSolution::Found(s) => s,
            other => return Err(format!("{name}: solver returned {other:?}")),
        };
        ensure(s.to_matrix() == inv, || format!("{name}: solved antipode is not g ↦ g⁻¹"))?;
        ensure(h.antipode().to_matrix() == inv, || format!("{name}: constructor antipode differs"))?;
        done.push(name);
    }
    Ok(done.join(", "))
}

/// The pair groupoid on two objects with vertex groups `Z_2`: morphism
/// `(t, s, e)` at index `4t + 2s + e`.
fn pair_with_z2() -> Groupoid {
    let objects = vec!["1".to_string(), "2".to_string()];
    let mut morphisms = Vec::new();
    for t in 0..2 {
        for s in 0..2 {
            for e in 0..2 {
                morphisms.push(Morphism { name: format!("g{}{}{}", t + 1, s + 1, e), source: s, target: t });
            }
        }
    }
    let idx = |t: usize, s: usize, e: usize| 4 * t + 2 * s + e;
    let mut table = Vec::new();
    for t in 0..2 {
        for m in 0..2 {
            for s in 0..2 {
                for a in 0..2 {
                    for b in 0..2 {
                        table.push((idx(t, m, a), idx(m, s, b), idx(t, s, (a + b) % 2)));
                    }
                }
            }
        }
    }
    Groupoid::new(objects, morphisms, &table).unwrap()
}

/// The characterization: every degree is a loop at the object fixing its
/// vector, and `deg(τm) = τ deg(m) τ⁻¹` whenever `τm ≠ 0`.
fn grading_oracle(g: &Groupoid, fixed_by: &[usize], moves: &[(usize, usize, usize)], degrees: &[usize]) -> bool {
    let inverse = |t: usize| (0..g.len()).find(|&k| g.compose(t, k) == Some(g.identity(g.target(t)))).unwrap();
    degrees.iter().zip(fixed_by).all(|(&d, &x)| g.source(d) == x && g.target(d) == x)
        && moves.iter().all(|&(tau, m, out)| {
            let conj = g.compose(tau, degrees[m]).and_then(|a| g.compose(a, inverse(tau)));
            conj == Some(degrees[out])
        })
}

fn enumerate_gradings(h: &WeakHopf, g: &Groupoid, action: &Op, fixed_by: &[usize], moves: &[(usize, usize, usize)]) -> Result<(usize, usize), String> {
    let f = h.field();
    let n = g.len();
    let dim = fixed_by.len();
    let total = n.pow(dim as u32);
    let mut accepted = 0;
    for code in 0..total {
        let degrees: Vec<usize> = (0..dim).map(|i| code / n.pow(i as u32) % n).collect();
        let (r, m) = check_yd(h, Variant::LL, action.clone(), graded_coaction(f, n, &degrees)).map_err(|e| e.to_string())?;
        let expected = grading_oracle(g, fixed_by, moves, &degrees);
        ensure(r.passed() == expected, || format!("degrees {degrees:?}: check_yd {} but oracle {expected}", r.passed()))?;
        if r.passed() {
            accepted += 1;
            for &(tau, v, out) in moves {
                let sigma = degrees[v];
                let conj = g.compose(g.compose(tau, sigma).unwrap(), g.inverse(tau)).unwrap();
                let moved = m.act(&Elem::basis(f, &[n, dim], &[tau, v]), 0, 1);
                ensure(m.coact(&moved, 0) == Elem::basis(f, &[n, dim], &[conj, out]), || {
                    format!("degrees {degrees:?}: deg(τm) ≠ τστ⁻¹ for τ = {tau}, m = {v}")
                })?;
            }
        }
    }
    Ok((accepted, total))
}

fn graded_coactions() -> Outcome {
    let f = Field::Rational;
    let mut lines = Vec::new();
    for (label, g) in [("pair groupoid", group("pair2")), ("pair groupoid with Z_2 loops", pair_with_z2())] {
        let h = groupoid_algebra(&g, f);
        let n = g.len();
        let k = g.objects().len();
        // kG₀: τ·m_x = m_{t(τ)} when s(τ) = x
        let fixed: Vec<usize> = (0..k).collect();
        let moves: Vec<(usize, usize, usize)> = (0..n).map(|t| (t, g.source(t), g.target(t))).collect();
        let (a, t) = enumerate_gradings(&h, &g, &object_action(&g, f), &fixed, &moves)?;
        lines.push(format!("{label} kG₀ {a}/{t}"));
        if n <= 4 {
            // regular module: τ·m = τ∘m
            let fixed: Vec<usize> = (0..n).map(|m| g.target(m)).collect();
            let gr = &g;
            let moves: Vec<(usize, usize, usize)> =
                (0..n).flat_map(|t| (0..n).filter_map(move |m| Some((t, m, gr.compose(t, m)?)))).collect();
            let (a, t) = enumerate_gradings(&h, &g, h.mult(), &fixed, &moves)?;
            lines.push(format!("{label} regular {a}/{t}"));
        }
        for s in (0..n).filter(|&s| !g.is_loop(s)) {
            let mut dims = vec![0; n];
            dims[s] = k;
            let rejected = matches!(yd_from_grading(&h, &g, &dims, object_action(&g, f)), Err(Error::BadSupport(_)));
            ensure(rejected, || format!("{label}: support on {} not rejected", g.morphisms()[s].name))?;
        }
    }
    Ok(lines.join(", "))
}

fn classical_double_z2() -> (Op, Op, Op, Op, Elem) {
    // basis (g, δ_x) at 2g + x over Z_2 = {0, 1}
    let f = Field::Rational;
    let idx = |g: usize, x: usize| 2 * g + x;
    let one = f.one();
    let mut mult = Matrix::zeros(f, 4, 16);
    let mut comult = Matrix::zeros(f, 16, 4);
    for a in 0..2 {
        for x in 0..2 {
            for k in 0..2 {
                // (a⋈δ_x)(k⋈δ_y) = [y = k⁻¹xk] (a+k)⋈δ_y
                let y = x;
                mult.set(idx((a + k) % 2, y), idx(a, x) * 4 + idx(k, y), one.clone());
            }
            for y in 0..2 {
                let z = (x + 2 - y) % 2;
                comult.set(idx(a, y) * 4 + idx(a, z), idx(a, x), one.clone());
            }
        }
    }
    let counit = Matrix::from_fn(f, 1, 4, |_, j| if j % 2 == 0 { one.clone() } else { f.zero() });
    let antipode = Matrix::from_fn(f, 4, 4, |i, j| if i == j { one.clone() } else { f.zero() });
    let unit: Vec<Scalar> = (0..4).map(|i| if i / 2 == 0 { one.clone() } else { f.zero() }).collect();
    (
        Op::from_matrix(&mult, &[4, 4], &[4]),
        Op::from_matrix(&comult, &[4], &[4, 4]),
        Op::from_matrix(&counit, &[4], &[]),
        Op::linear(&antipode),
        Elem::vector(f, &unit),
    )
}

fn kernel_is_span_of_j() -> Outcome {
    let mut out = Vec::new();
    let mut algebras: Vec<(String, WeakHopf)> = ["cyclic2", "cyclic3", "discrete2", "pair2"].iter().map(|n| (n.to_string(), algebra(n))).collect();
    algebras.push(("pair2*".into(), dual_weak_hopf(&algebra("pair2"))));
    for (name, h) in &algebras {
        let (built, dbl) = drinfeld_double(h).map_err(|e| format!("{name}: {e}"))?;
        all_pass(name, &built)?;
        let ker = dbl.ambient.p.to_matrix().kernel();
        let j = j_span(h, &dbl.dual);
        ensure(ker == j, || format!("{name}: Ker p has dim {}, span J {}", ker.dim(), j.dim()))?;
        all_pass(name, &kernel_equals_j(&dbl))?;
        out.push(format!("{name} ker {} D {}", ker.dim(), dbl.d.dim()));
        if name == "cyclic2" {
            ensure(ker.dim() == 0 && j.dim() == 0 && dbl.d.dim() == 4, || "Z_2: expected zero kernel and dim 4".into())?;
            let (mult, comult, counit, antipode, unit) = classical_double_z2();
            ensure(dbl.d.mult().to_matrix() == mult.to_matrix(), || "Z_2: product differs from the classical double".into())?;
            ensure(dbl.d.comult().to_matrix() == comult.to_matrix(), || "Z_2: coproduct differs from the classical double".into())?;
            ensure(dbl.d.counit().to_matrix() == counit.to_matrix(), || "Z_2: counit differs".into())?;
            ensure(dbl.d.antipode().to_matrix() == antipode.to_matrix(), || "Z_2: antipode differs".into())?;
            ensure(dbl.d.one() == &unit, || "Z_2: unit differs".into())?;
        }
    }
    Ok(out.join(", "))
}

fn anti_isomorphism() -> Outcome {
    let mut algebras: Vec<(String, WeakHopf)> = CORE.iter().map(|n| (n.to_string(), algebra(n))).collect();
    algebras.push(("pair2*".into(), dual_weak_hopf(&algebra("pair2"))));
    let needed = [
        "f_reverses_multiplication",
        "f_maps_relations_onto_ideal",
        "induced_map_is_bijective",
        "induced_map_is_unital",
        "induced_map_is_anti_multiplicative",
    ];
    for (name, h) in &algebras {
        let (_, dbl) = drinfeld_double(h).map_err(|e| format!("{name}: {e}"))?;
        let (r, _, induced) = dprime_and_f(&dbl).map_err(|e| format!("{name}: {e}"))?;
        all_pass(name, &r)?;
        for check in needed {
            ensure(r.find(check).is_some(), || format!("{name}: missing {check}"))?;
        }
        ensure(induced.to_matrix().inverse().is_some(), || format!("{name}: induced map singular"))?;
        all_pass(name, &dbl.d.report())?;
        let t = target_comparison(&dbl);
        all_pass(name, &t)?;
        ensure(dbl.d.target_space().dim() == h.target_space().dim(), || format!("{name}: dim D_t ≠ dim H_t"))?;
    }
    Ok(format!("{} algebras", algebras.len()))
}

fn corrupt(m: &YdModule, hdim: usize, i: usize, j: usize, flip: bool) -> YdModule {
    let mut c = m.coaction.to_matrix();
    let v = if flip { -c.get(i, j).clone() } else { c.get(i, j).clone() + c.field().one() };
    c.set(i, j, v);
    YdModule { coaction: Op::from_matrix(&c, &[m.dim()], &[m.dim(), hdim]), ..m.clone() }
}

fn double_modules() -> Outcome {
    let mut modules = 0;
    let mut switches = 0;
    for name in CORE {
        let g = group(name);
        let h = groupoid_algebra(&g, Field::Rational);
        let (_, dbl) = drinfeld_double(&h).map_err(|e| e.to_string())?;
        let corpus = lr_corpus(&h, &g);
        for (mn, m) in &corpus {
            let (r, _) = double_module_report(&dbl, m);
            ensure(r.find("action_kills_kernel").is_some_and(|c| c.passed), || format!("{name}/{mn}: action not well defined"))?;
            all_pass(&format!("{name}/{mn}"), &r)?;
            modules += 1;
        }
        for (an, a) in &corpus {
            for (bn, b) in &corpus {
                let r = switch_report(&dbl, a, b).map_err(|e| e.to_string())?;
                all_pass(&format!("{name}/{an},{bn}"), &r)?;
                switches += 1;
            }
        }
    }
    let g = group("pair2");
    let h = groupoid_algebra(&g, Field::Rational);
    let (_, dbl) = drinfeld_double(&h).map_err(|e| e.to_string())?;
    let good = lr_corpus(&h, &g).remove(1).1;
    let flipped = corrupt(&good, h.dim(), 0, 0, true);
    let (r, _) = double_module_report(&dbl, &flipped);
    let failed: Vec<String> = r.failures().map(|c| c.name.clone()).collect();
    ensure(!failed.is_empty(), || "sign fault not detected".into())?;
    let w = r.failures().next().and_then(|c| c.witness.clone()).ok_or("sign fault has no witness")?;
    let stray = corrupt(&good, h.dim(), 1, 0, false);
    ensure(matches!(yd_to_double_module(&dbl, &stray), Err(Error::NotWellDefined(_))), || "stray term not flagged".into())?;
    Ok(format!(
        "{modules} modules, {switches} switch maps; sign fault caught by {} at input {:?}",
        failed.join("+"),
        w.input
    ))
}

fn braided_structure() -> Outcome {
    let mut checks = 0;
    let mut round_trips = 0;
    let mut comparisons = 0;
    for name in CORE {
        let g = group(name);
        let h = groupoid_algebra(&g, Field::Rational);
        let corpus = groupoid_corpus(&h, &g);
        for r in yd_reports(&h, &corpus).map_err(|e| e.to_string())? {
            all_pass(name, &r)?;
            checks += r.checks.len();
            round_trips += r.checks.iter().filter(|c| c.name.starts_with("round_trip_")).count();
            comparisons += r.checks.iter().filter(|c| c.name == "right_right_braiding_is_switched_left_right_inverse").count();
            for c in ["braiding_with_unit_is_unit_composite", "braiding_against_tensor_product"] {
                if r.suite.starts_with("center condition") {
                    ensure(r.find(c).is_some(), || format!("{name}: {c} missing"))?;
                }
            }
        }
        ensure(round_trips % 12 == 0, || "round trips are not twelve per module".into())?;
    }
    Ok(format!("{checks} checks, {round_trips} conversion round trips, {comparisons} lr/rr comparisons"))
}

fn left_duality() -> Outcome {
    let mut checks = 0;
    let mut modules = 0;
    for name in CORE {
        let g = group(name);
        let h = groupoid_algebra(&g, Field::Rational);
        let corpus = groupoid_corpus(&h, &g);
        ensure(corpus.iter().any(|(n, _)| n == "unit"), || "corpus lacks H_t".into())?;
        for r in duality_reports(&h, &corpus).map_err(|e| e.to_string())? {
            all_pass(name, &r)?;
            checks += r.checks.len();
            for c in ["zigzag_on_module", "zigzag_on_dual", "evaluation_is_colinear", "coevaluation_is_linear"] {
                if r.suite.starts_with("left duality") {
                    ensure(r.find(c).is_some(), || format!("{name}: {c} missing"))?;
                }
            }
        }
        modules += corpus.len();
    }
    Ok(format!("{modules} modules, {checks} checks"))
}

fn balanced_tensor_comparison() -> Outcome {
    let mut pairs = 0;
    for name in CORE {
        let g = group(name);
        let h = groupoid_algebra(&g, Field::Rational);
        let modules: Vec<(String, HModule)> = groupoid_corpus(&h, &g).into_iter().map(|(n, m)| (n, m.module().unwrap())).collect();
        let r = module_category_report(&h, &modules);
        let bij: Vec<_> = r.checks.iter().filter(|c| c.name.ends_with("bar_comparison_bijective")).collect();
        ensure(bij.len() == modules.len() * modules.len(), || format!("{name}: {} comparisons", bij.len()))?;
        all_pass(name, &r)?;
        pairs += bij.len();
    }
    Ok(format!("{pairs} module pairs"))
}

fn whopf(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_whopf")).args(args).env_remove("WHOPF_FIELD").output().expect("whopf runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn cli_round_trips() -> Outcome {
    let dir = std::env::temp_dir().join(format!("whopf-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let p = |name: &str| dir.join(name).to_string_lossy().into_owned();
    let mut runs = 0;
    for (name, args) in [
        ("z2", vec!["group_algebra", "2"]),
        ("discrete2", vec!["discrete_groupoid", "2"]),
        ("pair2", vec!["pair_groupoid", "2"]),
        ("pair2g", vec!["groupoid", "pair", "2"]),
    ] {
        let file = p(&format!("{name}.toml"));
        let mut example = vec!["example"];
        example.extend(args.iter().copied());
        example.extend(["--out", &file]);
        ensure(whopf(&example).0 == 0, || format!("{name}: example failed"))?;
        let text = std::fs::read_to_string(&file).map_err(|e| e.to_string())?;
        ensure(render_spec(&parse_spec(&text).map_err(|e| e.to_string())?) == text, || format!("{name}: parse/render not a fixed point"))?;

        let first = whopf(&["verify", &file, "--suite", "all"]);
        let second = whopf(&["verify", &file, "--suite", "all"]);
        ensure(first.0 == 0, || format!("{name}: verify exited {}", first.0))?;
        ensure(first.1 == second.1, || format!("{name}: reports differ between runs"))?;

        for (verb, suite) in [("double", "all"), ("dual", "all")] {
            let a = p(&format!("{name}.{verb}.a.toml"));
            let b = p(&format!("{name}.{verb}.b.toml"));
            ensure(whopf(&[verb, &file, "--out", &a]).0 == 0 && whopf(&[verb, &file, "--out", &b]).0 == 0, || format!("{name}: {verb} failed"))?;
            let (ta, tb) = (std::fs::read(&a).map_err(|e| e.to_string())?, std::fs::read(&b).map_err(|e| e.to_string())?);
            ensure(ta == tb, || format!("{name}: {verb} exports differ"))?;
            let (code, _) = whopf(&["verify", &a, "--suite", "hopf"]);
            ensure(code == 0, || format!("{name}: exported {verb} fails the hopf suite"))?;
            let (code, _) = whopf(&["verify", &a, "--suite", suite]);
            ensure(code == 0, || format!("{name}: exported {verb} fails the {suite} suite"))?;
            runs += 1;
        }
    }
    let _ = std::fs::remove_dir_all(Path::new(&dir));
    Ok(format!("4 examples, {runs} exports re-ingested"))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("weak Hopf axiom suites on Q[Z_2], discrete and pair groupoid algebras", axiom_suites),
        ("unit coproduct in H_s⊗H_t and separability identities", unit_coproduct_and_separability),
        ("antipode solver reproduces groupoid inverses", antipode_solver),
        ("graded coactions over the pair groupoid match the loop characterization", graded_coactions),
        ("kernel of p equals span of J; Z_2 double is classical", kernel_is_span_of_j),
        ("anti-isomorphism D -> D'^op and weak Hopf structure of D", anti_isomorphism),
        ("double acts on left-right modules; switch map is linear; faults localized", double_modules),
        ("braiding, center conditions, conversions and lr/rr cross-check", braided_structure),
        ("left duality with evaluation and coevaluation", left_duality),
        ("comparison between balanced and truncated tensor products", balanced_tensor_comparison),
        ("deterministic CLI output and export round trips", cli_round_trips),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({detail})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({detail})", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
