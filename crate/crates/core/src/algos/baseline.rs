//! Folklore baselines: internal vertices of a tree, and everything.

use crate::error::{Error, Result};
use crate::graph::{connected_components, Graph, VertexSet};
use crate::local::{run_local, FnProgram, NodeView, RoundTranscript};

use super::{Algorithm, Phase, RunResult};

pub(crate) fn is_tree(g: &Graph) -> bool {
    g.n() > 0 && g.m() + 1 == g.n() && connected_components(g).len() == 1
}

/// Vertices of degree at least two; dominates any tree on three or more
/// vertices.
pub fn baseline_degree2(g: &Graph) -> Result<VertexSet> {
    degree2_run(g).map(|r| r.chosen)
}

pub(crate) fn degree2_run(g: &Graph) -> Result<RunResult> {
    if !is_tree(g) || g.n() < 3 {
        return Err(Error::InvalidArgument("baseline_degree2 needs a tree on at least 3 vertices".into()));
    }
    let prog = FnProgram::new(1, |v: &NodeView| v.graph().degree(v.root()) >= 2);
    let (picked, tr) = run_local(g, &prog);
    let mut rounds = RoundTranscript::empty(g.n());
    rounds.then("degree", &tr);
    let phase_of = g.vertices().filter(|&v| picked[v]).map(|v| (v, Phase::Direct)).collect();
    Ok(RunResult::new(Algorithm::BaselineDegree2, g, phase_of, rounds))
}

pub fn baseline_all(g: &Graph) -> VertexSet {
    VertexSet::full(g.n())
}

pub(crate) fn all_run(g: &Graph) -> RunResult {
    let phase_of = g.vertices().map(|v| (v, Phase::Direct)).collect();
    RunResult::new(Algorithm::BaselineAll, g, phase_of, RoundTranscript::empty(g.n()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::families;

    #[test]
    fn degree2_examples() {
        assert_eq!(baseline_degree2(&families::path(3)).unwrap(), VertexSet::from([1]));
        assert_eq!(baseline_degree2(&families::star(4)).unwrap(), VertexSet::from([0]));
        assert_eq!(baseline_degree2(&families::path(7)).unwrap(), VertexSet::from([1, 2, 3, 4, 5]));
        assert!(baseline_degree2(&families::path(2)).is_err());
        assert!(baseline_degree2(&families::cycle(5)).is_err());
    }

    #[test]
    fn all_is_everything() {
        assert_eq!(baseline_all(&families::complete(4)).len(), 4);
        assert_eq!(all_run(&families::cycle(6)).rounds.rounds_used, 0);
    }
}
