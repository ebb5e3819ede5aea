//! Verification reports: named checks with optional counterexamples.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exactlin::{multi_indices, Elem, Field, Op, Subspace};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub index: Vec<usize>,
    pub coeff: String,
}

/// The first basis input on which two sides of an identity differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub input: Vec<usize>,
    pub lhs: Vec<Term>,
    pub rhs: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

/// A labelled input to an identity check.
pub type Input = (Vec<usize>, Elem);

/// Every basis tensor of the given shape, labelled by its multi-index.
pub fn basis_inputs(field: Field, dims: &[usize]) -> Vec<Input> {
    multi_indices(dims).map(|idx| (idx.clone(), Elem::basis(field, dims, &idx))).collect()
}

/// The echelon basis of a subspace of a single leg, labelled by position.
pub fn subspace_inputs(space: &Subspace) -> Vec<Input> {
    space
        .basis()
        .iter()
        .enumerate()
        .map(|(i, b)| (vec![i], Elem::vector(space.field(), b)))
        .collect()
}

/// The echelon basis of a subspace of a flattened tensor product.
pub fn subspace_inputs_shaped(space: &Subspace, dims: &[usize]) -> Vec<Input> {
    space
        .basis()
        .iter()
        .enumerate()
        .map(|(i, b)| (vec![i], Elem::from_flat(space.field(), dims, b)))
        .collect()
}

/// Tensor products of labelled inputs, labels concatenated.
pub fn product_inputs(parts: &[Vec<Input>]) -> Vec<Input> {
    let mut acc: Vec<Input> = vec![(Vec::new(), Elem::scalar(field_of(parts).one()))];
    for part in parts {
        let mut next = Vec::with_capacity(acc.len() * part.len());
        for (la, a) in &acc {
            for (lb, b) in part {
                let mut label = la.clone();
                label.extend_from_slice(lb);
                next.push((label, a.tensor(b)));
            }
        }
        acc = next;
    }
    acc
}

fn field_of(parts: &[Vec<Input>]) -> Field {
    parts
        .iter()
        .flat_map(|p| p.first())
        .map(|(_, e)| e.field())
        .next()
        .unwrap_or(Field::Rational)
}

fn terms(e: &Elem) -> Vec<Term> {
    e.describe().into_iter().map(|(index, coeff)| Term { index, coeff }).collect()
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Report {
        Report { suite: suite.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// Records a yes/no check.
    pub fn predicate(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> bool {
        let detail = detail.into();
        self.push(Check {
            name: name.into(),
            passed,
            detail: (!detail.is_empty()).then_some(detail),
            witness: None,
        });
        passed
    }

    /// Checks `lhs(x) == rhs(x)` for each input in order, keeping the first
    /// counterexample.
    pub fn identity<L, R>(&mut self, name: impl Into<String>, inputs: &[Input], lhs: L, rhs: R) -> bool
    where
        L: Fn(&Elem) -> Elem,
        R: Fn(&Elem) -> Elem,
    {
        let name = name.into();
        for (label, x) in inputs {
            let l = lhs(x);
            let r = rhs(x);
            if l != r {
                self.push(Check {
                    name,
                    passed: false,
                    detail: None,
                    witness: Some(Witness { input: label.clone(), lhs: terms(&l), rhs: terms(&r) }),
                });
                return false;
            }
        }
        self.push(Check { name, passed: true, detail: None, witness: None });
        true
    }

    /// Checks that `value(x)` vanishes for every input.
    pub fn vanishes<F>(&mut self, name: impl Into<String>, inputs: &[Input], value: F) -> bool
    where
        F: Fn(&Elem) -> Elem,
    {
        let name = name.into();
        for (label, x) in inputs {
            let v = value(x);
            if !v.is_zero() {
                self.push(Check {
                    name,
                    passed: false,
                    detail: None,
                    witness: Some(Witness { input: label.clone(), lhs: terms(&v), rhs: Vec::new() }),
                });
                return false;
            }
        }
        self.push(Check { name, passed: true, detail: None, witness: None });
        true
    }

    /// Checks that two operators agree on every basis tensor.
    pub fn equal_ops(&mut self, name: impl Into<String>, a: &Op, b: &Op) -> bool {
        let inputs = basis_inputs(a.field(), a.in_dims());
        self.identity(name, &inputs, |x| a.eval(x), |x| b.eval(x))
    }

    pub fn equal_subspaces(&mut self, name: impl Into<String>, a: &Subspace, b: &Subspace) -> bool {
        let passed = a == b;
        let detail = if passed { format!("dimension {}", a.dim()) } else { format!("dimensions {} and {}", a.dim(), b.dim()) };
        self.predicate(name, passed, detail)
    }

    /// Appends another report's checks, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = format!("{prefix}{}", c.name);
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn find(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn passed_count(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}: {}/{} checks passed", self.suite, self.passed_count(), self.checks.len())?;
        for c in &self.checks {
            write!(f, "  [{}] {}", if c.passed { "ok" } else { "FAIL" }, c.name)?;
            if let Some(d) = &c.detail {
                write!(f, " ({d})")?;
            }
            writeln!(f)?;
            if let Some(w) = &c.witness {
                writeln!(f, "      input {:?}", w.input)?;
                writeln!(f, "      lhs {}", render(&w.lhs))?;
                writeln!(f, "      rhs {}", render(&w.rhs))?;
            }
        }
        Ok(())
    }
}

fn render(terms: &[Term]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    terms.iter().map(|t| format!("{}·e{:?}", t.coeff, t.index)).collect::<Vec<_>>().join(" + ")
}
