//! Spec files: one TOML grammar for every kind of input, with exact
//! fractions written as strings.
//!
//! ```toml
//! kind = "weak_hopf"
//! field = "rational"
//! dim = 2
//! unit = ["1", "0"]
//! mult = [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"], [1, 1, 0, "1"]]
//! counit = ["1", "1"]
//! comult = [[0, 0, 0, "1"], [1, 1, 1, "1"]]
//! antipode = [[0, 0, "1"], [1, 1, "1"]]
//! ```
//!
//! Structure-constant entries list input indices first, then output indices,
//! then the coefficient: `mult` entry `[i, j, k, c]` means `e_i·e_j` has `c` on
//! `e_k`, `comult` entry `[i, j, k, c]` means `Δ(e_i)` has `c` on `e_j⊗e_k`.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use weak_hopf::exactlin::{Elem, Field, Op, Scalar};
use weak_hopf::weakbialg::{AlgebraData, CoalgebraData, HModule, WeakBialgebra};
use weak_hopf::weakhopf::{groupoid_algebra, Groupoid, Morphism, WeakHopf};
use weak_hopf::yetterdrinfeld::{HComodule, Variant, YdModule};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Algebra,
    WeakBialgebra,
    WeakHopf,
    Module,
    Comodule,
    YdModule,
    Groupoid,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Algebra => "algebra",
            Kind::WeakBialgebra => "weak_bialgebra",
            Kind::WeakHopf => "weak_hopf",
            Kind::Module => "module",
            Kind::Comodule => "comodule",
            Kind::YdModule => "yd_module",
            Kind::Groupoid => "groupoid",
        }
    }
}

/// `(in, in, out, c)` for products and actions, `(in, out, out, c)` for
/// coproducts and coactions.
pub type Entry3 = (usize, usize, usize, String);
/// `(in, out, c)`.
pub type Entry2 = (usize, usize, String);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismSpec {
    pub name: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub kind: Kind,
    pub field: String,
    /// Dimension of the algebra, or of the module for module kinds.
    pub dim: usize,
    /// Yetter-Drinfeld variant: `ll`, `lr`, `rl` or `rr`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
    /// Comodule side: `left` or `right`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counit: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comult: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<Entry2>>,
    /// Left actions `[h, m, out, c]`, right actions `[m, h, out, c]`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Entry3>>,
    /// `[m, h, m', c]` for left coactions, `[m, m', h, c]` for right ones.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coaction: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub objects: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub compose: Option<Vec<(String, String, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub morphisms: Option<Vec<MorphismSpec>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metadata: BTreeMap<String, String>,
    /// The algebra a module kind lives over.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<Box<SpecFile>>,
}

impl SpecFile {
    fn empty(kind: Kind, field: Field, dim: usize) -> SpecFile {
        SpecFile {
            kind,
            field: field.to_string(),
            dim,
            variant: None,
            side: None,
            unit: None,
            mult: None,
            counit: None,
            comult: None,
            antipode: None,
            action: None,
            coaction: None,
            objects: None,
            compose: None,
            morphisms: None,
            metadata: BTreeMap::new(),
            base: None,
        }
    }

    fn present_keys(&self) -> Vec<&'static str> {
        let mut keys = Vec::new();
        let mut note = |present: bool, key: &'static str| {
            if present {
                keys.push(key);
            }
        };
        note(self.variant.is_some(), "variant");
        note(self.side.is_some(), "side");
        note(self.unit.is_some(), "unit");
        note(self.mult.is_some(), "mult");
        note(self.counit.is_some(), "counit");
        note(self.comult.is_some(), "comult");
        note(self.antipode.is_some(), "antipode");
        note(self.action.is_some(), "action");
        note(self.coaction.is_some(), "coaction");
        note(self.objects.is_some(), "objects");
        note(self.compose.is_some(), "compose");
        note(self.morphisms.is_some(), "morphisms");
        note(self.base.is_some(), "base");
        keys
    }

    /// The structure keys a spec of this kind carries, all of them required.
    fn schema(&self) -> &'static [&'static str] {
        match self.kind {
            Kind::Algebra => &["unit", "mult"],
            Kind::WeakBialgebra => &["unit", "mult", "counit", "comult"],
            Kind::WeakHopf => &["unit", "mult", "counit", "comult", "antipode"],
            Kind::Groupoid => &["objects", "morphisms", "compose"],
            Kind::Module => &["base", "action"],
            Kind::Comodule => &["base", "coaction", "side"],
            Kind::YdModule => &["base", "variant", "action", "coaction"],
        }
    }

    /// Key presence for the kind; values are checked when the spec is built.
    pub fn validate(&self) -> Result<(), CliError> {
        let required = self.schema();
        let present = self.present_keys();
        for key in required {
            if !present.contains(key) {
                return Err(CliError::Schema(format!("{} spec is missing `{key}`", self.kind.name())));
            }
        }
        for key in &present {
            if !required.contains(key) {
                return Err(CliError::Schema(format!("`{key}` is not a key of a {} spec", self.kind.name())));
            }
        }
        if let Some(base) = &self.base {
            base.validate()?;
        }
        Ok(())
    }
}

/// Parses and validates spec text. Syntax errors carry a line and column.
pub fn parse_spec(text: &str) -> Result<SpecFile, CliError> {
    let spec: SpecFile = toml::from_str(text).map_err(|e| {
        let message = e.message().to_string();
        if message.contains("unknown field") || message.contains("missing field") || message.contains("unknown variant") {
            return CliError::Schema(message);
        }
        let (line, column) = match e.span() {
            Some(span) => line_column(text, span.start),
            None => (0, 0),
        };
        CliError::Syntax { line, column, message }
    })?;
    spec.validate()?;
    Ok(spec)
}

fn line_column(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

/// Renders a spec; entries are sorted so that equal structures give equal
/// bytes.
pub fn render_spec(spec: &SpecFile) -> String {
    let mut spec = spec.clone();
    normalize(&mut spec);
    toml::to_string(&spec).expect("spec files always serialize")
}

fn normalize(spec: &mut SpecFile) {
    for entries in [&mut spec.mult, &mut spec.comult, &mut spec.action, &mut spec.coaction].into_iter().flatten() {
        entries.sort_by_key(|a| (a.0, a.1, a.2));
    }
    if let Some(entries) = &mut spec.antipode {
        entries.sort_by_key(|a| (a.0, a.1));
    }
    if let Some(base) = &mut spec.base {
        normalize(base);
    }
}

/// A built spec.
#[derive(Clone, Debug)]
pub enum Object {
    Algebra(AlgebraData),
    WeakBialgebra(WeakBialgebra),
    WeakHopf(WeakHopf),
    Groupoid(Groupoid, WeakHopf),
    Module { base: Box<Object>, module: HModule },
    Comodule { base: Box<Object>, comodule: HComodule },
    Yd { base: Box<Object>, module: YdModule },
}

impl Object {
    pub fn kind(&self) -> Kind {
        match self {
            Object::Algebra(_) => Kind::Algebra,
            Object::WeakBialgebra(_) => Kind::WeakBialgebra,
            Object::WeakHopf(_) => Kind::WeakHopf,
            Object::Groupoid(..) => Kind::Groupoid,
            Object::Module { .. } => Kind::Module,
            Object::Comodule { .. } => Kind::Comodule,
            Object::Yd { .. } => Kind::YdModule,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Object::Algebra(a) => a.field(),
            Object::WeakBialgebra(b) => b.field(),
            Object::WeakHopf(h) | Object::Groupoid(_, h) => h.field(),
            Object::Module { base, .. } | Object::Comodule { base, .. } | Object::Yd { base, .. } => base.field(),
        }
    }

    pub fn weak_hopf(&self) -> Option<&WeakHopf> {
        match self {
            Object::WeakHopf(h) | Object::Groupoid(_, h) => Some(h),
            _ => None,
        }
    }

    pub fn bialgebra(&self) -> Option<&WeakBialgebra> {
        match self {
            Object::WeakBialgebra(b) => Some(b),
            Object::WeakHopf(h) | Object::Groupoid(_, h) => Some(h.base()),
            _ => None,
        }
    }
}

/// The field a spec is built over: `override_field` wins over the file.
pub fn resolve_field(spec: &SpecFile, override_field: Option<&str>) -> Result<Field, CliError> {
    let text = override_field.unwrap_or(&spec.field);
    Field::from_str(text).map_err(|e| CliError::Field(e.to_string()))
}

pub fn build(spec: &SpecFile, override_field: Option<&str>) -> Result<Object, CliError> {
    spec.validate()?;
    let field = resolve_field(spec, override_field)?;
    build_in(spec, field, override_field.is_some())
}

fn build_in(spec: &SpecFile, field: Field, overridden: bool) -> Result<Object, CliError> {
    if !overridden {
        let own = resolve_field(spec, None)?;
        if own != field {
            return Err(CliError::Schema(format!("{} spec is over {own} but its container is over {field}", spec.kind.name())));
        }
    }
    let n = spec.dim;
    let schema = |e: weak_hopf::Error| CliError::Schema(e.to_string());
    match spec.kind {
        Kind::Algebra => Ok(Object::Algebra(algebra(spec, field)?)),
        Kind::WeakBialgebra => {
            let b = WeakBialgebra::new(algebra(spec, field)?, coalgebra(spec, field)?).map_err(schema)?;
            Ok(Object::WeakBialgebra(b))
        }
        Kind::WeakHopf => {
            let s = op2(field, spec.antipode.as_deref().unwrap_or_default(), n, n, "antipode")?;
            let h = WeakHopf::from_parts(algebra(spec, field)?, coalgebra(spec, field)?, s).map_err(|e| CliError::Core {
                context: "antipode".into(),
                source: e,
            })?;
            Ok(Object::WeakHopf(h))
        }
        Kind::Groupoid => {
            let g = groupoid(spec)?;
            let h = groupoid_algebra(&g, field);
            Ok(Object::Groupoid(g, h))
        }
        Kind::Module => {
            let base = build_base(spec, field, overridden)?;
            let h = base
                .bialgebra()
                .ok_or_else(|| CliError::Schema("a module base must be a weak bialgebra, weak Hopf algebra or groupoid".into()))?;
            let action = op3(field, spec.action.as_deref().unwrap_or_default(), [h.dim(), n], n, "action")?;
            Ok(Object::Module { module: HModule { action }, base: Box::new(base) })
        }
        Kind::Comodule => {
            let base = build_base(spec, field, overridden)?;
            let h = hopf_base(&base)?;
            let left = match spec.side.as_deref() {
                Some("left") => true,
                Some("right") => false,
                other => return Err(CliError::Schema(format!("comodule side must be `left` or `right`, got {other:?}"))),
            };
            let coaction = coaction(field, spec, h.dim(), left)?;
            let comodule = HComodule::new(coaction, left).map_err(schema)?;
            Ok(Object::Comodule { base: Box::new(base), comodule })
        }
        Kind::YdModule => {
            let base = build_base(spec, field, overridden)?;
            let h = hopf_base(&base)?;
            let variant = Variant::from_str(spec.variant.as_deref().unwrap_or_default()).map_err(schema)?;
            let entries = spec.action.as_deref().unwrap_or_default();
            let action = if variant.left_action() {
                op3(field, entries, [h.dim(), n], n, "action")?
            } else {
                op3(field, entries, [n, h.dim()], n, "action")?
            };
            let coaction = coaction(field, spec, h.dim(), variant.left_coaction())?;
            let module = YdModule::new(variant, action, coaction).map_err(schema)?;
            Ok(Object::Yd { base: Box::new(base), module })
        }
    }
}

fn build_base(spec: &SpecFile, field: Field, overridden: bool) -> Result<Object, CliError> {
    let base = spec.base.as_deref().ok_or_else(|| CliError::Schema(format!("{} spec is missing `base`", spec.kind.name())))?;
    build_in(base, field, overridden)
}

fn hopf_base(base: &Object) -> Result<&WeakHopf, CliError> {
    base.weak_hopf()
        .ok_or_else(|| CliError::Schema("the base must be a weak Hopf algebra or a groupoid".into()))
}

fn scalar(field: Field, text: &str, context: &str) -> Result<Scalar, CliError> {
    field.parse(text).map_err(|e| CliError::Field(format!("{context}: {e}")))
}

fn vector(field: Field, values: &[String], n: usize, key: &str) -> Result<Vec<Scalar>, CliError> {
    if values.len() != n {
        return Err(CliError::Schema(format!("`{key}` has {} entries, dimension is {n}", values.len())));
    }
    values.iter().enumerate().map(|(i, v)| scalar(field, v, &format!("{key}[{i}]"))).collect()
}

fn check_range(key: &str, i: usize, idx: &[usize], bounds: &[usize]) -> Result<(), CliError> {
    if idx.iter().zip(bounds).any(|(a, b)| a >= b) {
        return Err(CliError::Schema(format!("`{key}` entry {i} has indices {idx:?} outside {bounds:?}")));
    }
    Ok(())
}

/// `[a, b] -> [c]` from `(a, b, c, coeff)` entries.
fn op3(field: Field, entries: &[Entry3], ins: [usize; 2], out: usize, key: &str) -> Result<Op, CliError> {
    let mut table = vec![Elem::zero(field, &[out]); ins[0] * ins[1]];
    for (i, (a, b, c, v)) in entries.iter().enumerate() {
        check_range(key, i, &[*a, *b, *c], &[ins[0], ins[1], out])?;
        table[a * ins[1] + b].add_term(vec![*c], &scalar(field, v, &format!("{key}[{i}]"))?);
    }
    Ok(Op::from_fn(field, &ins, &[out], |idx| table[idx[0] * ins[1] + idx[1]].clone()))
}

/// `[a] -> [b, c]` from `(a, b, c, coeff)` entries.
fn op_co(field: Field, entries: &[Entry3], input: usize, outs: [usize; 2], key: &str) -> Result<Op, CliError> {
    let mut table = vec![Elem::zero(field, &outs); input];
    for (i, (a, b, c, v)) in entries.iter().enumerate() {
        check_range(key, i, &[*a, *b, *c], &[input, outs[0], outs[1]])?;
        table[*a].add_term(vec![*b, *c], &scalar(field, v, &format!("{key}[{i}]"))?);
    }
    Ok(Op::from_fn(field, &[input], &outs, |idx| table[idx[0]].clone()))
}

fn op2(field: Field, entries: &[Entry2], input: usize, out: usize, key: &str) -> Result<Op, CliError> {
    let mut table = vec![Elem::zero(field, &[out]); input];
    for (i, (a, b, v)) in entries.iter().enumerate() {
        check_range(key, i, &[*a, *b], &[input, out])?;
        table[*a].add_term(vec![*b], &scalar(field, v, &format!("{key}[{i}]"))?);
    }
    Ok(Op::from_fn(field, &[input], &[out], |idx| table[idx[0]].clone()))
}

fn coaction(field: Field, spec: &SpecFile, hdim: usize, left: bool) -> Result<Op, CliError> {
    let n = spec.dim;
    let outs = if left { [hdim, n] } else { [n, hdim] };
    op_co(field, spec.coaction.as_deref().unwrap_or_default(), n, outs, "coaction")
}

fn algebra(spec: &SpecFile, field: Field) -> Result<AlgebraData, CliError> {
    let n = spec.dim;
    let unit = vector(field, spec.unit.as_deref().unwrap_or_default(), n, "unit")?;
    let mult = op3(field, spec.mult.as_deref().unwrap_or_default(), [n, n], n, "mult")?;
    Ok(AlgebraData { mult, unit: Elem::vector(field, &unit) })
}

fn coalgebra(spec: &SpecFile, field: Field) -> Result<CoalgebraData, CliError> {
    let n = spec.dim;
    let counit = vector(field, spec.counit.as_deref().unwrap_or_default(), n, "counit")?;
    let comult = op_co(field, spec.comult.as_deref().unwrap_or_default(), n, [n, n], "comult")?;
    Ok(CoalgebraData { comult, counit: Op::covector(field, &counit) })
}

fn groupoid(spec: &SpecFile) -> Result<Groupoid, CliError> {
    let objects = spec.objects.clone().unwrap_or_default();
    let morphism_specs = spec.morphisms.as_deref().unwrap_or_default();
    if morphism_specs.len() != spec.dim {
        return Err(CliError::Schema(format!("groupoid has {} morphisms, dim is {}", morphism_specs.len(), spec.dim)));
    }
    let object = |name: &str| {
        objects
            .iter()
            .position(|o| o == name)
            .ok_or_else(|| CliError::Schema(format!("unknown object `{name}`")))
    };
    let mut morphisms = Vec::with_capacity(morphism_specs.len());
    for m in morphism_specs {
        if morphisms.iter().any(|x: &Morphism| x.name == m.name) {
            return Err(CliError::Schema(format!("morphism `{}` declared twice", m.name)));
        }
        morphisms.push(Morphism { name: m.name.clone(), source: object(&m.source)?, target: object(&m.target)? });
    }
    let morphism = |name: &str| {
        morphisms
            .iter()
            .position(|m| m.name == name)
            .ok_or_else(|| CliError::Schema(format!("unknown morphism `{name}`")))
    };
    let mut table = Vec::new();
    for (g, h, gh) in spec.compose.as_deref().unwrap_or_default() {
        table.push((morphism(g)?, morphism(h)?, morphism(gh)?));
    }
    Groupoid::new(objects, morphisms, &table).map_err(|e| CliError::Core { context: "groupoid".into(), source: e })
}

fn coefficient_strings(e: &Elem) -> Vec<String> {
    e.flat().iter().map(Scalar::to_string).collect()
}

fn entries3(op: &Op) -> Vec<Entry3> {
    let ins = op.in_dims().to_vec();
    let outs = op.out_dims().to_vec();
    op.entries()
        .filter(|(_, _, c)| !c.is_zero())
        .map(|(col, row, c)| {
            if ins.len() == 2 {
                (col / ins[1], col % ins[1], row, c.to_string())
            } else {
                (col, row / outs[1], row % outs[1], c.to_string())
            }
        })
        .collect()
}

fn entries2(op: &Op) -> Vec<Entry2> {
    op.entries().filter(|(_, _, c)| !c.is_zero()).map(|(col, row, c)| (col, row, c.to_string())).collect()
}

/// A weak Hopf algebra as a `weak_hopf` spec.
pub fn export_weak_hopf(h: &WeakHopf, metadata: BTreeMap<String, String>) -> SpecFile {
    let f = h.field();
    let mut spec = SpecFile::empty(Kind::WeakHopf, f, h.dim());
    spec.unit = Some(coefficient_strings(h.one()));
    spec.mult = Some(entries3(h.mult()));
    let counit: Vec<String> = (0..h.dim()).map(|i| h.counit().column(&[i]).as_scalar().to_string()).collect();
    spec.counit = Some(counit);
    spec.comult = Some(entries3(h.comult()));
    spec.antipode = Some(entries2(h.antipode()));
    spec.metadata = metadata;
    spec
}

pub fn export_groupoid(g: &Groupoid, field: Field, metadata: BTreeMap<String, String>) -> SpecFile {
    let mut spec = SpecFile::empty(Kind::Groupoid, field, g.len());
    let objects = g.objects().to_vec();
    spec.morphisms = Some(
        g.morphisms()
            .iter()
            .map(|m| MorphismSpec { name: m.name.clone(), source: objects[m.source].clone(), target: objects[m.target].clone() })
            .collect(),
    );
    let name = |i: usize| g.morphisms()[i].name.clone();
    spec.compose = Some(g.table().into_iter().map(|(a, b, c)| (name(a), name(b), name(c))).collect());
    spec.objects = Some(objects);
    spec.metadata = metadata;
    spec
}

/// A Yetter-Drinfeld module over `base` as a `yd_module` spec.
pub fn export_yd(base: SpecFile, m: &YdModule, metadata: BTreeMap<String, String>) -> SpecFile {
    let f = m.action.field();
    let mut spec = SpecFile::empty(Kind::YdModule, f, m.dim());
    spec.variant = Some(m.variant.name().to_string());
    spec.action = Some(entries3(&m.action));
    spec.coaction = Some(entries3(&m.coaction));
    spec.metadata = metadata;
    spec.base = Some(Box::new(base));
    spec
}
