//! Verification suites over built specs.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;
use weak_hopf::double::{
    double_module_report, dprime_and_f, drinfeld_double, kernel_equals_j, switch_report, target_comparison, DoubleAlgebra,
};
use weak_hopf::duality::{double_dual_report, unit_self_duality_report, verify_left_duality};
use weak_hopf::entwining::{canonical_entwining, canonical_yd_datum, smash_product};
use weak_hopf::weakbialg::{module_category_report, HModule, WeakBialgebra};
use weak_hopf::weakhopf::{dual_weak_hopf, solve_antipode, AntipodeSolution, WeakHopf};
use weak_hopf::yetterdrinfeld::{
    braiding, check_center_condition, groupoid_corpus, lr_rr_braiding_comparison, yd_convert, yd_regular, yd_unit_object, Variant,
    YdModule,
};
use weak_hopf::Report;

use crate::spec::{Kind, Object};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Bialgebra,
    Hopf,
    Yd,
    Entwining,
    Double,
    Duality,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 7] = ["bialgebra", "hopf", "yd", "entwining", "double", "duality", "all"];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Bialgebra => "bialgebra",
            Suite::Hopf => "hopf",
            Suite::Yd => "yd",
            Suite::Entwining => "entwining",
            Suite::Double => "double",
            Suite::Duality => "duality",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Suite, CliError> {
        Ok(match s {
            "bialgebra" => Suite::Bialgebra,
            "hopf" => Suite::Hopf,
            "yd" => Suite::Yd,
            "entwining" => Suite::Entwining,
            "double" => Suite::Double,
            "duality" => Suite::Duality,
            "all" => Suite::All,
            _ => return Err(CliError::UnknownSuite(s.to_string())),
        })
    }
}

/// Everything one `verify` invocation produced.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteRun {
    pub kind: String,
    pub field: String,
    pub suite: String,
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    pub reports: Vec<Report>,
}

impl SuiteRun {
    fn new(obj: &Object, suite: Suite, reports: Vec<Report>) -> SuiteRun {
        let checks = reports.iter().map(|r| r.checks.len()).sum();
        let passed = reports.iter().map(Report::passed_count).sum();
        SuiteRun {
            kind: obj.kind().name().to_string(),
            field: obj.field().to_string(),
            suite: suite.name().to_string(),
            checks,
            passed,
            failed: checks - passed,
            reports,
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    /// Summary lines per report; failing checks are listed with witnesses.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            let _ = writeln!(out, "{:<6} {} ({}/{})", if r.passed() { "ok" } else { "FAIL" }, r.suite, r.passed_count(), r.checks.len());
            if !r.passed() {
                for line in r.to_string().lines().skip(1).filter(|l| !l.trim_start().starts_with("[ok]")) {
                    let _ = writeln!(out, "      {}", line.trim_start());
                }
            }
        }
        let _ = writeln!(
            out,
            "{} suite on {} over {}: {} checks, {} passed, {} failed",
            self.suite, self.kind, self.field, self.checks, self.passed, self.failed
        );
        out
    }
}

fn inapplicable(suite: Suite, kind: Kind) -> CliError {
    CliError::Inapplicable { suite: suite.name().to_string(), kind: kind.name().to_string() }
}

fn core(context: &str) -> impl Fn(weak_hopf::Error) -> CliError + '_ {
    move |e| CliError::Core { context: context.to_string(), source: e }
}

fn tagged(mut r: Report, tag: &str) -> Report {
    r.suite = format!("{} [{tag}]", r.suite);
    r
}

/// Named left-left modules used to exercise an algebra. Outside groupoid
/// algebras `λ(m) = m₁S(m₃)⊗m₂` need not be counital on `H`, so the regular
/// module joins the unit object only when it passes its own suite.
pub fn corpus(obj: &Object) -> Vec<(String, YdModule)> {
    match obj {
        Object::Groupoid(g, h) => groupoid_corpus(h, g),
        Object::WeakHopf(h) => {
            let mut out = vec![("unit".to_string(), yd_unit_object(h))];
            let reg = yd_regular(h);
            if reg.verify(h).passed() {
                out.push(("regular".to_string(), reg));
            }
            out
        }
        _ => Vec::new(),
    }
}

/// Axioms, counital maps and the module category with the comparison `π̄`.
pub fn bialgebra_reports(h: &WeakBialgebra, modules: &[(String, HModule)]) -> Vec<Report> {
    vec![h.report(), module_category_report(h, modules)]
}

/// Antipode identities, the antipode solver and the dual algebra.
pub fn hopf_reports(h: &WeakHopf) -> Result<Vec<Report>, CliError> {
    let mut solver = Report::new("antipode solver");
    match solve_antipode(h.base()).map_err(core("antipode solver"))? {
        AntipodeSolution::Found(s) => {
            solver.predicate("solver_reproduces_antipode", s.to_matrix() == h.antipode().to_matrix(), "");
        }
        AntipodeSolution::NotFound { reason } => {
            solver.predicate("solver_reproduces_antipode", false, reason);
        }
        AntipodeSolution::Ambiguous { kernel, .. } => {
            solver.predicate("solver_reproduces_antipode", false, format!("{} free directions", kernel.len()));
        }
    }
    let dual = tagged(dual_weak_hopf(h).report(), "dual");
    Ok(vec![h.report(), solver, dual])
}

/// Solves for an antipode of a weak bialgebra and verifies it.
pub fn solved_hopf_reports(b: &WeakBialgebra) -> Result<Vec<Report>, CliError> {
    let mut r = Report::new("antipode solver");
    match solve_antipode(b).map_err(core("antipode solver"))? {
        AntipodeSolution::Found(s) => {
            r.predicate("antipode_exists", true, "");
            let h = WeakHopf::new(b.clone(), s).map_err(core("antipode"))?;
            Ok(vec![r, h.report()])
        }
        AntipodeSolution::NotFound { reason } => {
            r.predicate("antipode_exists", false, reason);
            Ok(vec![r])
        }
        AntipodeSolution::Ambiguous { kernel, .. } => {
            r.predicate("antipode_is_unique", false, format!("{} free directions", kernel.len()));
            Ok(vec![r])
        }
    }
}

/// Module laws in every variant, the twelve conversions, braidings and the
/// center condition on probes.
pub fn yd_reports(h: &WeakHopf, corpus: &[(String, YdModule)]) -> Result<Vec<Report>, CliError> {
    let mut out = Vec::new();
    for (name, m) in corpus {
        let mut conv = Report::new("variant conversions");
        for v in Variant::ALL {
            let src = yd_convert(h, m, v);
            conv.absorb(&format!("{v}."), src.verify(h));
            for to in Variant::ALL {
                if to != v {
                    let back = yd_convert(h, &yd_convert(h, &src, to), v);
                    conv.predicate(format!("round_trip_{v}_{to}_{v}"), back == src, "");
                }
            }
        }
        out.push(tagged(conv, name));
        let reg = HModule::regular(h);
        let unit = HModule::unit_object(h);
        let mut center = check_center_condition(h, m, &reg, &reg);
        center.absorb("unit_probe.", check_center_condition(h, m, &unit, &unit));
        out.push(tagged(center, name));
    }
    for (an, a) in corpus {
        for (bn, b) in corpus {
            let tag = format!("{an}, {bn}");
            for v in [Variant::LL, Variant::RR] {
                let w = braiding(h, &yd_convert(h, a, v), &yd_convert(h, b, v)).map_err(core("braiding"))?;
                out.push(tagged(w.verify(h), &tag));
            }
            let (la, lb) = (yd_convert(h, a, Variant::LR), yd_convert(h, b, Variant::LR));
            out.push(tagged(lr_rr_braiding_comparison(h, &la, &lb).map_err(core("braiding"))?, &tag));
        }
    }
    Ok(out)
}

/// The canonical Doi-Hopf datum, its entwining and smash product, and the
/// entwined-module laws for the corpus.
pub fn entwining_reports(h: &WeakHopf, corpus: &[(String, YdModule)]) -> Result<Vec<Report>, CliError> {
    let datum = canonical_yd_datum(h);
    let e = canonical_entwining(h);
    let mut agree = Report::new("canonical entwining");
    agree.equal_ops("datum_induces_canonical_entwining", &datum.entwining().psi, &e.psi);
    let (smash, _) = smash_product(&e.smash_structure()).map_err(core("smash product"))?;
    let mut out = vec![datum.verify(), agree, e.verify(), smash];
    out.extend(entwined_module_reports(h, corpus));
    Ok(out)
}

/// Left-right forms of the corpus as entwined modules.
pub fn entwined_module_reports(h: &WeakHopf, corpus: &[(String, YdModule)]) -> Vec<Report> {
    let e = canonical_entwining(h);
    corpus
        .iter()
        .map(|(name, m)| {
            let lr = yd_convert(h, m, Variant::LR);
            tagged(e.entwined_module_check(&lr.action, &lr.coaction), name)
        })
        .collect()
}

/// The double, its weak Hopf suite, `Ker p = span J`, `D'` and the
/// anti-isomorphism, `D_t ≅ H_t`, and the double modules of the corpus.
pub fn double_reports(h: &WeakHopf, corpus: &[(String, YdModule)]) -> Result<(Vec<Report>, DoubleAlgebra), CliError> {
    let (built, dbl) = drinfeld_double(h).map_err(core("double"))?;
    let mut out = vec![built, tagged(dbl.d.report(), "D(H)"), kernel_equals_j(&dbl)];
    let (dp, _, _) = dprime_and_f(&dbl).map_err(core("double"))?;
    out.push(dp);
    out.push(target_comparison(&dbl));
    let lr: Vec<(String, YdModule)> = corpus.iter().map(|(n, m)| (n.clone(), yd_convert(h, m, Variant::LR))).collect();
    for (name, m) in &lr {
        out.push(tagged(double_module_report(&dbl, m).0, name));
    }
    for (an, a) in &lr {
        for (bn, b) in &lr {
            out.push(tagged(switch_report(&dbl, a, b).map_err(core("switch map"))?, &format!("{an}, {bn}")));
        }
    }
    Ok((out, dbl))
}

/// Left duality for the corpus and self-duality of the unit object.
pub fn duality_reports(h: &WeakHopf, corpus: &[(String, YdModule)]) -> Result<Vec<Report>, CliError> {
    let mut out = Vec::new();
    for (name, m) in corpus {
        let ll = yd_convert(h, m, Variant::LL);
        out.push(tagged(verify_left_duality(h, &ll).map_err(core("duality"))?, name));
        out.push(tagged(double_dual_report(h, &ll).map_err(core("duality"))?, name));
    }
    out.push(unit_self_duality_report(h).map_err(core("duality"))?);
    Ok(out)
}

fn algebra_suite(obj: &Object, h: &WeakHopf, suite: Suite) -> Result<Vec<Report>, CliError> {
    let corpus = corpus(obj);
    let modules: Vec<(String, HModule)> = corpus.iter().filter_map(|(n, m)| Some((n.clone(), m.module()?))).collect();
    Ok(match suite {
        Suite::Bialgebra => bialgebra_reports(h.base(), &modules),
        Suite::Hopf => hopf_reports(h)?,
        Suite::Yd => yd_reports(h, &corpus)?,
        Suite::Entwining => entwining_reports(h, &corpus)?,
        Suite::Double => double_reports(h, &corpus)?.0,
        Suite::Duality => duality_reports(h, &corpus)?,
        Suite::All => {
            let mut out = bialgebra_reports(h.base(), &modules);
            out.extend(hopf_reports(h)?);
            out.extend(yd_reports(h, &corpus)?);
            out.extend(entwining_reports(h, &corpus)?);
            out.extend(double_reports(h, &corpus)?.0);
            out.extend(duality_reports(h, &corpus)?);
            out
        }
    })
}

fn yd_suite(h: &WeakHopf, m: &YdModule, suite: Suite) -> Result<Vec<Report>, CliError> {
    let own = m.verify(h);
    let corpus = vec![("module".to_string(), yd_convert(h, m, Variant::LL))];
    Ok(match suite {
        Suite::Yd => {
            let mut out = vec![own];
            out.extend(yd_reports(h, &corpus)?);
            out
        }
        Suite::Entwining => entwined_module_reports(h, &corpus),
        Suite::Double => {
            let (built, dbl) = drinfeld_double(h).map_err(core("double"))?;
            let lr = yd_convert(h, m, Variant::LR);
            vec![built, double_module_report(&dbl, &lr).0]
        }
        Suite::Duality => duality_reports(h, &corpus)?,
        Suite::All => {
            let mut out = yd_suite(h, m, Suite::Yd)?;
            out.extend(yd_suite(h, m, Suite::Entwining)?);
            out.extend(yd_suite(h, m, Suite::Double)?);
            out.extend(yd_suite(h, m, Suite::Duality)?);
            out
        }
        Suite::Bialgebra | Suite::Hopf => return Err(inapplicable(suite, Kind::YdModule)),
    })
}

/// Runs one suite. Suites that do not apply to the spec kind are errors.
pub fn run_suite(obj: &Object, suite: Suite) -> Result<SuiteRun, CliError> {
    let reports = match obj {
        Object::Algebra(a) => match suite {
            Suite::All => vec![a.verify()],
            _ => return Err(inapplicable(suite, obj.kind())),
        },
        Object::WeakBialgebra(b) => match suite {
            Suite::Bialgebra => bialgebra_reports(b, &[("regular".into(), HModule::regular(b))]),
            Suite::Hopf => solved_hopf_reports(b)?,
            Suite::All => {
                let mut out = bialgebra_reports(b, &[("regular".into(), HModule::regular(b))]);
                out.extend(solved_hopf_reports(b)?);
                out
            }
            _ => return Err(inapplicable(suite, obj.kind())),
        },
        Object::WeakHopf(h) | Object::Groupoid(_, h) => algebra_suite(obj, h, suite)?,
        Object::Module { base, module } => match suite {
            Suite::Bialgebra | Suite::All => {
                let b = base.bialgebra().expect("module bases are bialgebras");
                vec![module.verify(b), module_category_report(b, &[("module".into(), module.clone())])]
            }
            _ => return Err(inapplicable(suite, obj.kind())),
        },
        Object::Comodule { base, comodule } => match suite {
            Suite::Hopf | Suite::All => vec![comodule.verify(base.weak_hopf().expect("comodule bases are weak Hopf"))],
            _ => return Err(inapplicable(suite, obj.kind())),
        },
        Object::Yd { base, module } => yd_suite(base.weak_hopf().expect("Yetter-Drinfeld bases are weak Hopf"), module, suite)?,
    };
    Ok(SuiteRun::new(obj, suite, reports))
}
