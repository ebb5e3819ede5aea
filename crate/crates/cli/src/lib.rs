//! Spec files, example generators and the suite runner behind the `whopf`
//! command.

pub mod examples;
pub mod spec;
pub mod suites;

use std::collections::BTreeMap;
use std::path::Path;

use weak_hopf::weakhopf::dual_weak_hopf;

pub use examples::generate_example;
pub use spec::{build, parse_spec, render_spec, Kind, Object, SpecFile};
pub use suites::{run_suite, Suite, SuiteRun};

/// Environment variable that overrides the field of every spec.
pub const FIELD_ENV: &str = "WHOPF_FIELD";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("schema error: {0}")]
    Schema(String),
    #[error("field error: {0}")]
    Field(String),
    #[error("unknown suite `{0}`; expected one of bialgebra, hopf, yd, entwining, double, duality, all")]
    UnknownSuite(String),
    #[error("suite `{suite}` does not apply to a {kind} spec")]
    Inapplicable { suite: String, kind: String },
    #[error("bad example parameters: {0}")]
    BadParams(String),
    #[error("{context}: {source}")]
    Core { context: String, source: weak_hopf::Error },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

pub fn read_spec(path: &Path) -> Result<SpecFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io { path: path.display().to_string(), source: e })?;
    parse_spec(&text)
}

/// `D(H)` of a weak Hopf or groupoid spec, as a `weak_hopf` spec.
pub fn double_spec(obj: &Object) -> Result<SpecFile, CliError> {
    let h = obj
        .weak_hopf()
        .ok_or_else(|| CliError::Inapplicable { suite: "double".into(), kind: obj.kind().name().into() })?;
    let (_, dbl) = weak_hopf::double::drinfeld_double(h).map_err(|e| CliError::Core { context: "double".into(), source: e })?;
    let meta = BTreeMap::from([
        ("construction".to_string(), "drinfeld double".to_string()),
        ("base_dim".to_string(), h.dim().to_string()),
    ]);
    Ok(spec::export_weak_hopf(&dbl.d, meta))
}

/// `H*` of a weak Hopf or groupoid spec, in the dual basis.
pub fn dual_spec(obj: &Object) -> Result<SpecFile, CliError> {
    let h = obj
        .weak_hopf()
        .ok_or_else(|| CliError::Inapplicable { suite: "dual".into(), kind: obj.kind().name().into() })?;
    let meta = BTreeMap::from([
        ("construction".to_string(), "dual".to_string()),
        ("base_dim".to_string(), h.dim().to_string()),
    ]);
    Ok(spec::export_weak_hopf(&dual_weak_hopf(h), meta))
}

/// Writes to `out`, or to standard output when `out` is `None`.
pub fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Io { path: path.display().to_string(), source: e }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
