//! Distributed approximation algorithms, each run as a sequence of LOCAL
//! phases through [`crate::local`], plus the folklore baselines.

mod baseline;
mod config;
mod pipeline;
mod three_round;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::local::RoundTranscript;

pub use baseline::{baseline_all, baseline_degree2};
pub use config::{AlgorithmConfig, AsdimConfig, ControlFunction};
pub use pipeline::{algo1_mds, algo1_mds_centralized, algo2_mds, algo_mvc, algo_mvc_centralized};
pub use three_round::{algo_3round, algo_3round_centralized};

/// Why a vertex was put in the output.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Phase {
    /// Local 1-cut vertex.
    OneCut,
    /// Interesting vertex of a minimal local 2-cut.
    Interesting,
    /// Vertex of a minimal local 2-cut (vertex-cover variant).
    TwoCut,
    /// Exact solution of a residual component.
    Brute,
    /// Residual component too large for the exact phase.
    Fallback,
    /// Single-phase rule (3-round algorithm, baselines).
    Direct,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Problem {
    DominatingSet,
    VertexCover,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Algorithm {
    #[serde(rename = "algo1_mds")]
    Algo1,
    #[serde(rename = "algo2_mds")]
    Algo2,
    #[serde(rename = "algo_3round")]
    ThreeRound,
    #[serde(rename = "algo_mvc")]
    Mvc,
    #[serde(rename = "baseline_degree2")]
    BaselineDegree2,
    #[serde(rename = "baseline_all")]
    BaselineAll,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::Algo1,
        Algorithm::Algo2,
        Algorithm::ThreeRound,
        Algorithm::Mvc,
        Algorithm::BaselineDegree2,
        Algorithm::BaselineAll,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Algo1 => "algo1_mds",
            Algorithm::Algo2 => "algo2_mds",
            Algorithm::ThreeRound => "algo_3round",
            Algorithm::Mvc => "algo_mvc",
            Algorithm::BaselineDegree2 => "baseline_degree2",
            Algorithm::BaselineAll => "baseline_all",
        }
    }

    pub fn problem(self) -> Problem {
        match self {
            Algorithm::Mvc => Problem::VertexCover,
            _ => Problem::DominatingSet,
        }
    }

    /// Whether the algorithm accepts `g` at all (the degree-2 baseline is
    /// only defined on trees with at least three vertices).
    pub fn applies_to(self, g: &Graph) -> bool {
        match self {
            Algorithm::BaselineDegree2 => baseline::is_tree(g) && g.n() >= 3,
            _ => true,
        }
    }

    /// Runs the algorithm. `Algo2` is given the control function that
    /// reproduces `cfg`'s radii, see [`AsdimConfig::matching`].
    pub fn run(self, g: &Graph, cfg: &AlgorithmConfig) -> Result<RunResult> {
        match self {
            Algorithm::Algo1 => algo1_mds(g, cfg),
            Algorithm::Algo2 => algo2_mds(g, &AsdimConfig::matching(cfg)?),
            Algorithm::ThreeRound => Ok(algo_3round(g)),
            Algorithm::Mvc => algo_mvc(g, cfg),
            Algorithm::BaselineDegree2 => baseline::degree2_run(g),
            Algorithm::BaselineAll => Ok(baseline::all_run(g)),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown algorithm {s:?}")))
    }
}

/// Output of one algorithm run, in the input graph's vertex IDs.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunResult {
    pub algorithm: Algorithm,
    pub n: usize,
    pub m: usize,
    pub chosen: VertexSet,
    #[serde(rename = "phases")]
    pub phase_of: BTreeMap<Vertex, Phase>,
    pub rounds: RoundTranscript,
    #[serde(rename = "fallback")]
    pub fallback_used: bool,
    /// Local 1-cut vertices found (after twin reduction, original IDs).
    pub one_cuts: VertexSet,
    /// Interesting (or, for vertex cover, local 2-cut) vertices found.
    pub interesting: VertexSet,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_size: Option<usize>,
    #[serde(rename = "ratio", skip_serializing_if = "Option::is_none", serialize_with = "ser_ratio")]
    pub ratio_vs_exact: Option<Ratio<u64>>,
}

impl RunResult {
    pub(crate) fn new(
        algorithm: Algorithm,
        g: &Graph,
        phase_of: BTreeMap<Vertex, Phase>,
        rounds: RoundTranscript,
    ) -> Self {
        RunResult {
            algorithm,
            n: g.n(),
            m: g.m(),
            chosen: phase_of.keys().copied().collect(),
            phase_of,
            rounds,
            fallback_used: false,
            one_cuts: VertexSet::new(),
            interesting: VertexSet::new(),
            exact_size: None,
            ratio_vs_exact: None,
        }
    }

    pub fn size(&self) -> usize {
        self.chosen.len()
    }

    /// Records the optimum and the resulting ratio (undefined when the
    /// optimum is empty).
    pub fn with_exact(mut self, exact: usize) -> Self {
        self.exact_size = Some(exact);
        self.ratio_vs_exact = (exact > 0).then(|| Ratio::new(self.size() as u64, exact as u64));
        self
    }

    pub fn count_phase(&self, phase: Phase) -> usize {
        self.phase_of.values().filter(|&&p| p == phase).count()
    }

    /// Checks the output against its problem's definition on `g`.
    pub fn is_valid(&self, g: &Graph) -> bool {
        match self.algorithm.problem() {
            Problem::DominatingSet => crate::exact::verify_dominating(g, &self.chosen, &VertexSet::full(g.n())),
            Problem::VertexCover => crate::exact::verify_vertex_cover(g, &self.chosen),
        }
    }
}

/// Ratio rendered both as an exact fraction and as a decimal.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RatioRepr {
    pub fraction: String,
    pub decimal: f64,
}

impl From<Ratio<u64>> for RatioRepr {
    fn from(r: Ratio<u64>) -> Self {
        RatioRepr { fraction: format!("{}/{}", r.numer(), r.denom()), decimal: *r.numer() as f64 / *r.denom() as f64 }
    }
}

fn ser_ratio<S: Serializer>(r: &Option<Ratio<u64>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    r.map(RatioRepr::from).serialize(s)
}
