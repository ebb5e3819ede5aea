//! Generators for the example corpus.

use std::collections::BTreeMap;

use weak_hopf::exactlin::Field;
use weak_hopf::weakhopf::{groupoid_algebra, Groupoid};
use weak_hopf::yetterdrinfeld::{graded_coaction, object_action, YdModule, Variant};

use crate::spec::{export_groupoid, export_weak_hopf, export_yd, SpecFile};
use crate::CliError;

pub const NAMES: [&str; 5] = ["group_algebra", "discrete_groupoid", "pair_groupoid", "groupoid", "graded_yd"];

fn metadata(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn size(params: &[String], at: usize, what: &str) -> Result<usize, CliError> {
    let text = params.get(at).ok_or_else(|| CliError::BadParams(format!("missing {what}")))?;
    match text.parse::<usize>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(CliError::BadParams(format!("{what} must be a positive integer, got `{text}`"))),
    }
}

fn family(name: &str, k: usize) -> Result<Groupoid, CliError> {
    let g = match name {
        "cyclic" | "group_algebra" => Groupoid::cyclic(k),
        "discrete" | "discrete_groupoid" => Groupoid::discrete(k),
        "pair" | "pair_groupoid" => Groupoid::pair(k),
        _ => return Err(CliError::BadParams(format!("unknown groupoid family `{name}`; expected cyclic, discrete or pair"))),
    };
    g.map_err(|e| CliError::BadParams(e.to_string()))
}

/// Builds the named example.
///
/// * `group_algebra n`, `discrete_groupoid k`, `pair_groupoid k`: weak Hopf
///   algebra specs.
/// * `groupoid <cyclic|discrete|pair> k`: the groupoid itself.
/// * `graded_yd <cyclic|discrete|pair> k σ`: `kG₀` graded so that the
///   component at `t(σ)` sits in degree `σ` and `deg(τm) = τσ τ⁻¹`.
pub fn generate_example(name: &str, params: &[String], field: Field) -> Result<SpecFile, CliError> {
    match name {
        "group_algebra" | "discrete_groupoid" | "pair_groupoid" => {
            let k = size(params, 0, "size")?;
            let h = groupoid_algebra(&family(name, k)?, field);
            Ok(export_weak_hopf(&h, metadata(&[("example", format!("{name} {k}"))])))
        }
        "groupoid" => {
            let fam = params.first().ok_or_else(|| CliError::BadParams("missing groupoid family".into()))?;
            let k = size(params, 1, "size")?;
            Ok(export_groupoid(&family(fam, k)?, field, metadata(&[("example", format!("{fam} {k}"))])))
        }
        "graded_yd" => {
            let fam = params.first().ok_or_else(|| CliError::BadParams("missing groupoid family".into()))?;
            let k = size(params, 1, "size")?;
            let sigma_name = params.get(2).ok_or_else(|| CliError::BadParams("missing degree morphism".into()))?;
            let g = family(fam, k)?;
            let sigma = g.position(sigma_name).ok_or_else(|| CliError::BadParams(format!("no morphism named `{sigma_name}`")))?;
            if !g.is_loop(sigma) {
                return Err(CliError::BadParams(format!("degree `{sigma_name}` is not a loop, so the graded module vanishes")));
            }
            let degrees = transported_degrees(&g, sigma);
            let m = YdModule {
                variant: Variant::LL,
                action: object_action(&g, field),
                coaction: graded_coaction(field, g.len(), &degrees),
            };
            let base = export_groupoid(&g, field, metadata(&[("example", format!("{fam} {k}"))]));
            Ok(export_yd(base, &m, metadata(&[("example", format!("graded_yd {fam} {k} {sigma_name}"))])))
        }
        _ => Err(CliError::BadParams(format!("unknown example `{name}`; expected one of {}", NAMES.join(", ")))),
    }
}

/// Degree of the basis vector at each object: `τστ⁻¹` for a morphism
/// `τ: t(σ) -> x`, the identity of `x` when no such `τ` exists.
fn transported_degrees(g: &Groupoid, sigma: usize) -> Vec<usize> {
    let x0 = g.target(sigma);
    (0..g.objects().len())
        .map(|x| {
            let tau = (0..g.len()).find(|&t| g.source(t) == x0 && g.target(t) == x);
            match tau {
                Some(t) => {
                    let ts = g.compose(t, sigma).expect("composable");
                    g.compose(ts, g.inverse(t)).expect("composable")
                }
                None => g.identity(x),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec::{build, Object};

    #[test]
    fn pair_groupoid_degree_moves_to_second_object() {
        let g = Groupoid::pair(2).unwrap();
        let degrees = transported_degrees(&g, g.position("id_1").unwrap());
        assert_eq!(degrees, vec![g.position("id_1").unwrap(), g.position("id_2").unwrap()]);
    }

    #[test]
    fn non_loop_degree_is_bad_params() {
        let params: Vec<String> = ["pair", "2", "f_12"].iter().map(|s| s.to_string()).collect();
        assert!(matches!(generate_example("graded_yd", &params, Field::Rational), Err(CliError::BadParams(_))));
    }

    #[test]
    fn unknown_example_is_bad_params() {
        assert!(matches!(generate_example("torus", &[], Field::Rational), Err(CliError::BadParams(_))));
        assert!(matches!(generate_example("pair_groupoid", &["0".into()], Field::Rational), Err(CliError::BadParams(_))));
    }

    #[test]
    fn graded_example_builds_a_module() {
        let params: Vec<String> = ["pair", "2", "id_1"].iter().map(|s| s.to_string()).collect();
        let spec = generate_example("graded_yd", &params, Field::Rational).unwrap();
        let Object::Yd { base, module } = build(&spec, None).unwrap() else { panic!("not a module") };
        let r = module.verify(base.weak_hopf().unwrap());
        assert!(r.passed(), "{r}");
    }
}
