//! Instance generators and the `K_{2,t}` minor checker used to certify them.

pub mod families;
pub mod minor;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use families::{Attachment, Piece, PieceKind, PieceSpec};
pub use minor::{certify_class, contains_k2t_minor, contains_k2t_minor_with_cap, MinorWitness};

/// A reproducible recipe for one graph.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GeneratorSpec {
    Path { n: usize },
    Cycle { n: usize },
    Star { leaves: usize },
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    CyclePower { n: usize, k: usize },
    Tree { n: usize, seed: u64 },
    Outerplanar { n: usize, seed: u64 },
    Fan { length: usize },
    Strip { p: usize, q: usize, seed: u64 },
    Type1 { n: usize, seed: u64 },
    Augmentation { base: usize, pieces: usize, seed: u64 },
    CliquePendant { k: usize },
    RandomFiltered { t: usize, n: usize, p: f64, seed: u64 },
}

impl GeneratorSpec {
    pub const FAMILIES: [&'static str; 14] = [
        "path",
        "cycle",
        "star",
        "complete",
        "complete_bipartite",
        "cycle_power",
        "tree",
        "outerplanar",
        "fan",
        "strip",
        "type1",
        "augmentation",
        "clique_pendant",
        "random_filtered",
    ];

    /// Builds a spec from a family name and positional size parameters, as
    /// typed on a command line. `random_filtered` takes `t n`, with edge
    /// probability `2.5 / n`.
    pub fn from_args(family: &str, params: &[usize], seed: u64) -> Result<Self> {
        let want = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidArgument(format!("{family} takes {k} size parameter(s), got {}", params.len())))
            }
        };
        let spec = match family {
            "path" => want(1).map(|_| GeneratorSpec::Path { n: params[0] }),
            "cycle" => want(1).map(|_| GeneratorSpec::Cycle { n: params[0] }),
            "star" => want(1).map(|_| GeneratorSpec::Star { leaves: params[0] }),
            "complete" => want(1).map(|_| GeneratorSpec::Complete { n: params[0] }),
            "complete_bipartite" => want(2).map(|_| GeneratorSpec::CompleteBipartite { a: params[0], b: params[1] }),
            "cycle_power" => want(2).map(|_| GeneratorSpec::CyclePower { n: params[0], k: params[1] }),
            "tree" => want(1).map(|_| GeneratorSpec::Tree { n: params[0], seed }),
            "outerplanar" => want(1).map(|_| GeneratorSpec::Outerplanar { n: params[0], seed }),
            "fan" => want(1).map(|_| GeneratorSpec::Fan { length: params[0] }),
            "strip" => want(2).map(|_| GeneratorSpec::Strip { p: params[0], q: params[1], seed }),
            "type1" => want(1).map(|_| GeneratorSpec::Type1 { n: params[0], seed }),
            "augmentation" => want(2).map(|_| GeneratorSpec::Augmentation { base: params[0], pieces: params[1], seed }),
            "clique_pendant" => want(1).map(|_| GeneratorSpec::CliquePendant { k: params[0] }),
            "random_filtered" => want(2).map(|_| GeneratorSpec::RandomFiltered {
                t: params[0],
                n: params[1],
                p: 2.5 / params[1].max(1) as f64,
                seed,
            }),
            _ => Err(Error::InvalidArgument(format!(
                "unknown family {family:?}; expected one of {}",
                Self::FAMILIES.join(", ")
            ))),
        }?;
        spec.check()?;
        Ok(spec)
    }

    pub fn family(&self) -> &'static str {
        match self {
            GeneratorSpec::Path { .. } => "path",
            GeneratorSpec::Cycle { .. } => "cycle",
            GeneratorSpec::Star { .. } => "star",
            GeneratorSpec::Complete { .. } => "complete",
            GeneratorSpec::CompleteBipartite { .. } => "complete_bipartite",
            GeneratorSpec::CyclePower { .. } => "cycle_power",
            GeneratorSpec::Tree { .. } => "tree",
            GeneratorSpec::Outerplanar { .. } => "outerplanar",
            GeneratorSpec::Fan { .. } => "fan",
            GeneratorSpec::Strip { .. } => "strip",
            GeneratorSpec::Type1 { .. } => "type1",
            GeneratorSpec::Augmentation { .. } => "augmentation",
            GeneratorSpec::CliquePendant { .. } => "clique_pendant",
            GeneratorSpec::RandomFiltered { .. } => "random_filtered",
        }
    }

    /// Rejects parameters outside the documented ranges.
    pub fn check(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidArgument(format!("{}: {msg}", self.family())));
        match *self {
            GeneratorSpec::Cycle { n } if n < 3 => bad("n must be at least 3"),
            GeneratorSpec::CyclePower { n, k } if k < 1 || n < 3 => bad("need k ≥ 1 and n ≥ 3"),
            GeneratorSpec::Tree { n, .. } if n < 1 => bad("n must be at least 1"),
            GeneratorSpec::Outerplanar { n, .. } | GeneratorSpec::Type1 { n, .. } if n < 3 => {
                bad("n must be at least 3")
            }
            GeneratorSpec::Strip { p, q, .. } if p < 1 || q < 1 => bad("both sides need at least two vertices"),
            GeneratorSpec::Augmentation { base, .. } if base < 4 => bad("base must have at least 4 vertices"),
            GeneratorSpec::CliquePendant { k } if k < 2 => bad("k must be at least 2"),
            GeneratorSpec::RandomFiltered { t, .. } if t < 1 => bad("t must be at least 1"),
            GeneratorSpec::RandomFiltered { p, .. } if !(0.0..=1.0).contains(&p) => bad("p must lie in [0, 1]"),
            _ => Ok(()),
        }
    }
}

/// Builds the graph a spec describes; a pure function of the spec.
pub fn generate(spec: &GeneratorSpec) -> Result<Graph> {
    spec.check()?;
    Ok(match *spec {
        GeneratorSpec::Path { n } => families::path(n),
        GeneratorSpec::Cycle { n } => families::cycle(n),
        GeneratorSpec::Star { leaves } => families::star(leaves),
        GeneratorSpec::Complete { n } => families::complete(n),
        GeneratorSpec::CompleteBipartite { a, b } => families::complete_bipartite(a, b),
        GeneratorSpec::CyclePower { n, k } => families::cycle_power(n, k),
        GeneratorSpec::Tree { n, seed } => families::tree(n, seed),
        GeneratorSpec::Outerplanar { n, seed } => families::outerplanar(n, seed),
        GeneratorSpec::Fan { length } => families::fan(length),
        GeneratorSpec::Strip { p, q, seed } => families::strip(p, q, seed)?,
        GeneratorSpec::Type1 { n, seed } => families::type1(n, seed),
        GeneratorSpec::Augmentation { base, pieces, seed } => families::augmentation(base, pieces, seed)?,
        GeneratorSpec::CliquePendant { k } => families::clique_pendant(k),
        GeneratorSpec::RandomFiltered { t, n, p, seed } => families::random_filtered(t, n, p, seed)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_args_examples() {
        let c6 = generate(&GeneratorSpec::from_args("cycle", &[6], 0).unwrap()).unwrap();
        assert_eq!((c6.n(), c6.m()), (6, 6));
        let cp = generate(&GeneratorSpec::from_args("clique_pendant", &[6], 0).unwrap()).unwrap();
        assert_eq!(cp.n(), 11);
        assert!(GeneratorSpec::from_args("cycle", &[2], 0).is_err());
        assert!(GeneratorSpec::from_args("hypercube", &[3], 0).is_err());
        assert!(GeneratorSpec::from_args("strip", &[3], 0).is_err());
    }

    #[test]
    fn spec_round_trips_through_json() {
        let spec = GeneratorSpec::Strip { p: 3, q: 4, seed: 11 };
        let text = serde_json::to_string(&spec).unwrap();
        assert_eq!(text, r#"{"family":"strip","p":3,"q":4,"seed":11}"#);
        assert_eq!(serde_json::from_str::<GeneratorSpec>(&text).unwrap(), spec);
    }
}
