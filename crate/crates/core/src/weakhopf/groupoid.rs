//! Finite groupoids and their groupoid algebras.
//!
//! Composition `g∘h` is defined iff `source(g) = target(h)`; the product in
//! the groupoid algebra is `gh = g∘h` when defined and `0` otherwise.

use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Groupoid {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    compose: Vec<Vec<Option<usize>>>,
    identities: Vec<usize>,
    inverse: Vec<usize>,
}

impl Groupoid {
    /// Validates a composition table given as `(g, h, g∘h)` triples.
    pub fn new(objects: Vec<String>, morphisms: Vec<Morphism>, table: &[(usize, usize, usize)]) -> Result<Groupoid, Error> {
        let m = morphisms.len();
        let name = |i: usize| morphisms[i].name.clone();
        for g in &morphisms {
            if g.source >= objects.len() || g.target >= objects.len() {
                return Err(Error::MalformedGroupoid(format!("morphism {} has an unknown endpoint", g.name)));
            }
        }
        let mut compose = vec![vec![None; m]; m];
        for &(g, h, gh) in table {
            if g >= m || h >= m || gh >= m {
                return Err(Error::MalformedGroupoid(format!("composition entry ({g}, {h}, {gh}) out of range")));
            }
            if morphisms[g].source != morphisms[h].target {
                return Err(Error::MalformedGroupoid(format!("{}∘{} given but source and target differ", name(g), name(h))));
            }
            if compose[g][h].is_some() {
                return Err(Error::MalformedGroupoid(format!("{}∘{} given twice", name(g), name(h))));
            }
            if morphisms[gh].source != morphisms[h].source || morphisms[gh].target != morphisms[g].target {
                return Err(Error::MalformedGroupoid(format!(
                    "{}∘{} = {} has the wrong endpoints",
                    name(g),
                    name(h),
                    name(gh)
                )));
            }
            compose[g][h] = Some(gh);
        }
        for g in 0..m {
            for h in 0..m {
                if morphisms[g].source == morphisms[h].target && compose[g][h].is_none() {
                    return Err(Error::MalformedGroupoid(format!("{}∘{} is composable but missing", name(g), name(h))));
                }
            }
        }
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    if let (Some(ab), Some(bc)) = (compose[a][b], compose[b][c]) {
                        if compose[ab][c] != compose[a][bc] {
                            return Err(Error::MalformedGroupoid(format!(
                                "associativity fails on ({}, {}, {})",
                                name(a),
                                name(b),
                                name(c)
                            )));
                        }
                    }
                }
            }
        }
        let mut identities = Vec::with_capacity(objects.len());
        for (x, obj) in objects.iter().enumerate() {
            let id = (0..m).find(|&e| {
                morphisms[e].source == x
                    && morphisms[e].target == x
                    && (0..m).all(|g| {
                        (morphisms[g].source != x || compose[g][e] == Some(g))
                            && (morphisms[g].target != x || compose[e][g] == Some(g))
                    })
            });
            match id {
                Some(e) => identities.push(e),
                None => return Err(Error::MalformedGroupoid(format!("object {obj} has no identity morphism"))),
            }
        }
        let mut inverse = Vec::with_capacity(m);
        for g in 0..m {
            let (s, t) = (morphisms[g].source, morphisms[g].target);
            let inv = (0..m).find(|&k| compose[g][k] == Some(identities[t]) && compose[k][g] == Some(identities[s]));
            match inv {
                Some(k) => inverse.push(k),
                None => return Err(Error::MalformedGroupoid(format!("morphism {} has no inverse", name(g)))),
            }
        }
        Ok(Groupoid { objects, morphisms, compose, identities, inverse })
    }

    /// The cyclic group `Z_n` as a one-object groupoid; morphism `i` is `g^i`.
    pub fn cyclic(n: usize) -> Result<Groupoid, Error> {
        if n == 0 {
            return Err(Error::MalformedGroupoid("cyclic group of order 0".into()));
        }
        let morphisms = (0..n)
            .map(|i| Morphism { name: if i == 0 { "e".into() } else { format!("g{i}") }, source: 0, target: 0 })
            .collect();
        let table: Vec<(usize, usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b, (a + b) % n))).collect();
        Groupoid::new(vec!["*".into()], morphisms, &table)
    }

    /// `k` objects and only identity morphisms.
    pub fn discrete(k: usize) -> Result<Groupoid, Error> {
        let objects: Vec<String> = (1..=k).map(|i| i.to_string()).collect();
        let morphisms = (0..k).map(|i| Morphism { name: format!("id_{}", i + 1), source: i, target: i }).collect();
        let table: Vec<(usize, usize, usize)> = (0..k).map(|i| (i, i, i)).collect();
        Groupoid::new(objects, morphisms, &table)
    }

    /// The pair groupoid on `k` objects: exactly one morphism `j -> i` for
    /// every ordered pair. Morphism `(i, j)` sits at index `i·k + j`.
    pub fn pair(k: usize) -> Result<Groupoid, Error> {
        let objects: Vec<String> = (1..=k).map(|i| i.to_string()).collect();
        let mut morphisms = Vec::with_capacity(k * k);
        for t in 0..k {
            for s in 0..k {
                let name = if s == t { format!("id_{}", t + 1) } else { format!("f_{}{}", t + 1, s + 1) };
                morphisms.push(Morphism { name, source: s, target: t });
            }
        }
        let mut table = Vec::new();
        for t in 0..k {
            for m in 0..k {
                for s in 0..k {
                    table.push((t * k + m, m * k + s, t * k + s));
                }
            }
        }
        Groupoid::new(objects, morphisms, &table)
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn len(&self) -> usize {
        self.morphisms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.morphisms.is_empty()
    }

    pub fn compose(&self, g: usize, h: usize) -> Option<usize> {
        self.compose[g][h]
    }

    pub fn identity(&self, object: usize) -> usize {
        self.identities[object]
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn source(&self, g: usize) -> usize {
        self.morphisms[g].source
    }

    pub fn target(&self, g: usize) -> usize {
        self.morphisms[g].target
    }

    pub fn is_loop(&self, g: usize) -> bool {
        self.source(g) == self.target(g)
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.morphisms.iter().position(|m| m.name == name)
    }

    /// All `(g, h, g∘h)` triples in index order.
    pub fn table(&self) -> Vec<(usize, usize, usize)> {
        let m = self.len();
        (0..m)
            .flat_map(|g| (0..m).filter_map(move |h| self.compose[g][h].map(|gh| (g, h, gh))))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_groupoid_inverses() {
        let g = Groupoid::pair(2).unwrap();
        let f = g.position("f_21").unwrap();
        let finv = g.position("f_12").unwrap();
        assert_eq!(g.inverse(f), finv);
        assert_eq!(g.source(f), 0);
        assert_eq!(g.target(f), 1);
        assert_eq!(g.compose(f, finv), Some(g.identity(1)));
        assert_eq!(g.compose(f, f), None);
    }

    #[test]
    fn malformed_tables_rejected() {
        let objects = vec!["1".to_string()];
        let morphisms = vec![
            Morphism { name: "e".into(), source: 0, target: 0 },
            Morphism { name: "a".into(), source: 0, target: 0 },
        ];
        // a∘a = a makes a idempotent without inverse
        let err = Groupoid::new(objects.clone(), morphisms.clone(), &[(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1)]).unwrap_err();
        assert!(matches!(err, Error::MalformedGroupoid(ref s) if s.contains("inverse")), "{err}");
        let err = Groupoid::new(objects, morphisms, &[(0, 0, 0), (0, 1, 1), (1, 0, 1)]).unwrap_err();
        assert!(matches!(err, Error::MalformedGroupoid(ref s) if s.contains("missing")), "{err}");
    }
}
