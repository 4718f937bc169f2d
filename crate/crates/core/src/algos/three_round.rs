//! The 3-round algorithm: after twin reduction, take every vertex whose
//! closed neighbourhood is not contained in another vertex's, i.e. the set
//! `D₂ = {v : γ(v) ≥ 2}` of the reduced graph.

use std::collections::BTreeMap;

use crate::exact::{gamma_unchecked, Gamma};
use crate::graph::{remove_true_twins, twin_representative, Graph};
use crate::local::{run_local, FnProgram, NodeView, RoundTranscript};

use super::{Algorithm, Phase, RunResult};

/// Radius-3 node program. A vertex needs its own representative status
/// (radius 2) and that of its neighbours (radius 3); in the reduced graph a
/// representative neighbour `u` with `N[v] ⊆ N[u]` means `γ(v) = 1`.
pub fn algo_3round(g: &Graph) -> RunResult {
    let prog = FnProgram::new(3, |v: &NodeView| {
        let view = v.graph();
        let root = v.root();
        let rep = |x: usize| twin_representative(view, x) == x;
        rep(root) && !view.neighbors(root).iter().any(|&u| rep(u) && view.closed_nbhd_subset(root, u))
    });
    let (picked, tr) = run_local(g, &prog);
    let mut rounds = RoundTranscript::empty(g.n());
    rounds.then("d2", &tr);
    let phase_of = g.vertices().filter(|&v| picked[v]).map(|v| (v, Phase::Direct)).collect();
    RunResult::new(Algorithm::ThreeRound, g, phase_of, rounds)
}

/// `D₂` of the reduced graph, mapped back to original IDs.
pub fn algo_3round_centralized(g: &Graph) -> RunResult {
    let tw = remove_true_twins(g);
    let phase_of: BTreeMap<_, _> = tw
        .reduced
        .vertices()
        .filter(|&v| gamma_unchecked(&tw.reduced, v) == Gamma::AtLeastTwo)
        .map(|v| (tw.to_original(v), Phase::Direct))
        .collect();
    let mut rounds = RoundTranscript::empty(g.n());
    rounds.then("d2", &RoundTranscript { rounds_used: 3, per_vertex_radius: vec![3; g.n()], phases: Vec::new() });
    RunResult::new(Algorithm::ThreeRound, g, phase_of, rounds)
}
