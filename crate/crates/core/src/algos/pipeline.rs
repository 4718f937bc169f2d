//! The cut-based pipelines.
//!
//! Dominating set, as four LOCAL phases:
//!
//! 1. `twins` (radius 2): each vertex learns whether it is the lowest-ID
//!    member of its true-twin class. Only representatives act afterwards.
//! 2. `cuts` (radius `max(r1, 2·r2)`): on the subgraph of representatives,
//!    local 1-cut vertices join `X` and interesting vertices join `I`.
//! 3. `domination` (radius 2): domination by `S = X ∪ I`, and membership in
//!    `U`, the dominated vertices with no undominated neighbour.
//! 4. `brute` (radius `diam_cap + 1`): every vertex of a component `C` of
//!    `G − (S ∪ U)` sees all of `C` (or learns that `C` is too wide), and
//!    solves the same lex-minimal instance, so all of `C` agrees.
//!
//! The vertex-cover pipeline skips twin reduction, uses every vertex of a
//! minimal local 2-cut in place of `I`, and solves exact vertex covers.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use crate::cuts::{in_minimal_2_cut, interesting_witness, local_1_cut};
use crate::error::{Error, Result};
use crate::exact::{self, DominationInstance};
use crate::graph::{
    components_of_mask, induced_unchecked, remove_true_twins, twin_representative, Graph, Vertex, VertexSet,
};
use crate::local::{run_phase, FnProgram, NodeView, RoundTranscript};

use super::{Algorithm, AlgorithmConfig, AsdimConfig, Phase, RunResult};

pub fn algo1_mds(g: &Graph, cfg: &AlgorithmConfig) -> Result<RunResult> {
    cfg.validate()?;
    Ok(mds_local(g, cfg, Algorithm::Algo1))
}

/// Same pipeline; the radii come from the dimension and control function.
pub fn algo2_mds(g: &Graph, cfg: &AsdimConfig) -> Result<RunResult> {
    let cfg = cfg.to_algorithm_config();
    cfg.validate()?;
    Ok(mds_local(g, &cfg, Algorithm::Algo2))
}

/// Outcome of the exact phase on one residual component.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Residual {
    Solved(VertexSet),
    /// Too wide for `diam_cap` or too large for `brute_cap`.
    Oversized,
}

/// Lex-minimal set dominating the undominated vertices of `comp`, computed
/// on `comp`'s induced subgraph (every dominator of an undominated vertex
/// lies in the same component). Indices of `host` must follow original-ID
/// order so that all callers agree on the tie-break.
fn solve_dominating(host: &Graph, comp: &VertexSet, undominated: &[bool], cfg: &AlgorithmConfig) -> Residual {
    let (sub, _) = induced_unchecked(host, comp);
    if diameter_exceeds(&sub, cfg.diam_cap) {
        return Residual::Oversized;
    }
    let targets: VertexSet = comp.iter().enumerate().filter(|&(_, v)| undominated[v]).map(|(i, _)| i).collect();
    let inst = DominationInstance::restricted(&sub, targets).expect("targets lie in the component");
    match exact::mds_subset_exact_with_cap(&inst, cfg.brute_cap) {
        Ok(s) => Residual::Solved(s.map(|i| comp.as_slice()[i])),
        Err(Error::ExceedsCap { .. }) => Residual::Oversized,
        Err(e) => unreachable!("residual instance is feasible: {e}"),
    }
}

fn solve_cover(host: &Graph, comp: &VertexSet, cfg: &AlgorithmConfig) -> Residual {
    let (sub, _) = induced_unchecked(host, comp);
    if diameter_exceeds(&sub, cfg.diam_cap) {
        return Residual::Oversized;
    }
    match exact::mvc_exact_with_cap(&sub, cfg.brute_cap) {
        Ok(s) => Residual::Solved(s.map(|i| comp.as_slice()[i])),
        Err(_) => Residual::Oversized,
    }
}

/// Whether the connected graph `g` has diameter above `cap`.
fn diameter_exceeds(g: &Graph, cap: usize) -> bool {
    g.vertices().any(|v| g.bfs_distances(v, None).iter().any(|d| d.is_none_or(|d| d > cap)))
}

/// Component of `root` in `view[alive]`, or `None` when it reaches the edge
/// of the view. A member at distance `R` from the root has induced
/// distance at least `R > diam_cap`, so `None` always means oversized.
fn visible_component(view: &Graph, root: usize, alive: &[bool], radius: usize) -> Option<VertexSet> {
    let dist = view.bfs_distances(root, None);
    let comp = components_of_mask(view, alive).into_iter().find(|c| c.contains(root))?;
    let inside = comp.iter().all(|w| dist[w].is_some_and(|d| d < radius));
    inside.then_some(comp)
}

/// Memo for the exact phase: every vertex of a component poses the same
/// instance, so it only has to be solved once.
type Memo = Mutex<HashMap<(Vec<Vertex>, Vec<Vertex>), Residual>>;

fn memoized(memo: &Memo, key: (Vec<Vertex>, Vec<Vertex>), solve: impl FnOnce() -> Residual) -> Residual {
    if let Some(hit) = memo.lock().unwrap().get(&key) {
        return hit.clone();
    }
    let out = solve();
    memo.lock().unwrap().insert(key, out.clone());
    out
}

#[derive(Clone, Copy, Default, PartialEq, Eq)]
struct Marks {
    rep: bool,
    one_cut: bool,
    interesting: bool,
    dominated: bool,
    in_u: bool,
}

impl Marks {
    fn in_s(self) -> bool {
        self.one_cut || self.interesting
    }
}

/// Per-vertex decision of the exact phase: `(phase, component was oversized)`.
type BruteOut = (Option<Phase>, bool);

fn mds_local(g: &Graph, cfg: &AlgorithmConfig, algorithm: Algorithm) -> RunResult {
    let n = g.n();
    let mut rounds = RoundTranscript::empty(n);

    let twins = FnProgram::new(2, |v: &NodeView| twin_representative(v.graph(), v.root()) == v.root());
    let (rep, tr) = run_phase(g, &twins, &vec![(); n]);
    rounds.then("twins", &tr);

    let cuts = FnProgram::new(cfg.cut_phase_radius(), |v: &NodeView<bool>| {
        if !v.input(v.root()) {
            return (false, false);
        }
        let reps: VertexSet = (0..v.len()).filter(|&i| *v.input(i)).collect();
        let (red, map) = induced_unchecked(v.graph(), &reps);
        let root = map[v.root()].expect("root is a representative");
        (local_1_cut(&red, root, cfg.r1).is_some(), interesting_witness(&red, root, cfg.r2).is_some())
    });
    let (xi, tr) = run_phase(g, &cuts, &rep);
    rounds.then("cuts", &tr);

    let marks: Vec<Marks> =
        (0..n).map(|v| Marks { rep: rep[v], one_cut: xi[v].0, interesting: xi[v].1, ..Marks::default() }).collect();
    let domination = FnProgram::new(2, |v: &NodeView<Marks>| {
        let view = v.graph();
        let dominated =
            |x: usize| v.input(x).in_s() || view.neighbors(x).iter().any(|&w| v.input(w).rep && v.input(w).in_s());
        let root = v.root();
        let d = dominated(root);
        let u = d && view.neighbors(root).iter().all(|&w| !v.input(w).rep || dominated(w));
        (d, u)
    });
    let (dom, tr) = run_phase(g, &domination, &marks);
    rounds.then("domination", &tr);

    let marks: Vec<Marks> =
        marks.into_iter().zip(dom).map(|(m, (dominated, in_u))| Marks { dominated, in_u, ..m }).collect();
    let memo = Memo::default();
    let radius = cfg.diam_cap + 1;
    let brute = FnProgram::new(radius, |v: &NodeView<Marks>| -> BruteOut {
        let me = *v.input(v.root());
        if !me.rep || me.in_s() || me.in_u {
            return (None, false);
        }
        let alive: Vec<bool> = v.inputs().iter().map(|m| m.rep && !m.in_s() && !m.in_u).collect();
        let undominated: Vec<bool> = v.inputs().iter().map(|m| !m.dominated).collect();
        let outcome = match visible_component(v.graph(), v.root(), &alive, radius) {
            None => Residual::Oversized,
            Some(comp) => {
                let labels = |s: &VertexSet| s.iter().map(|i| v.label(i)).collect::<Vec<_>>();
                let targets: VertexSet = comp.iter().filter(|&i| undominated[i]).collect();
                memoized(&memo, (labels(&comp), labels(&targets)), || {
                    match solve_dominating(v.graph(), &comp, &undominated, cfg) {
                        Residual::Solved(s) => Residual::Solved(s.map(|i| v.label(i))),
                        Residual::Oversized => Residual::Oversized,
                    }
                })
            }
        };
        match outcome {
            Residual::Solved(s) => (s.contains(v.root_id()).then_some(Phase::Brute), false),
            Residual::Oversized => ((!me.dominated).then_some(Phase::Fallback), true),
        }
    });
    let (picked, tr) = run_phase(g, &brute, &marks);
    rounds.then("brute", &tr);

    let mut phase_of = BTreeMap::new();
    for v in g.vertices() {
        let m = marks[v];
        if m.one_cut {
            phase_of.insert(v, Phase::OneCut);
        } else if m.interesting {
            phase_of.insert(v, Phase::Interesting);
        } else if let Some(p) = picked[v].0 {
            phase_of.insert(v, p);
        }
    }
    let mut out = RunResult::new(algorithm, g, phase_of, rounds);
    out.fallback_used = picked.iter().any(|p| p.1);
    out.one_cuts = g.vertices().filter(|&v| marks[v].one_cut).collect();
    out.interesting = g.vertices().filter(|&v| marks[v].interesting).collect();
    out
}

/// Centralized evaluation of the dominating-set pipeline on the whole
/// graph. Returns the same chosen set and attribution as [`algo1_mds`].
pub fn algo1_mds_centralized(g: &Graph, cfg: &AlgorithmConfig) -> Result<RunResult> {
    cfg.validate()?;
    let tw = remove_true_twins(g);
    let red = &tw.reduced;
    let x: Vec<bool> = red.vertices().map(|v| local_1_cut(red, v, cfg.r1).is_some()).collect();
    let i: Vec<bool> = red.vertices().map(|v| interesting_witness(red, v, cfg.r2).is_some()).collect();
    let in_s = |v: Vertex| x[v] || i[v];
    let dominated: Vec<bool> = red.vertices().map(|v| in_s(v) || red.neighbors(v).iter().any(|&w| in_s(w))).collect();
    let in_u = |v: Vertex| dominated[v] && red.neighbors(v).iter().all(|&w| dominated[w]);
    let alive: Vec<bool> = red.vertices().map(|v| !in_s(v) && !in_u(v)).collect();
    let undominated: Vec<bool> = dominated.iter().map(|d| !d).collect();

    let mut phase_of = BTreeMap::new();
    let mut fallback = false;
    for v in red.vertices() {
        if x[v] {
            phase_of.insert(tw.to_original(v), Phase::OneCut);
        } else if i[v] {
            phase_of.insert(tw.to_original(v), Phase::Interesting);
        }
    }
    for comp in components_of_mask(red, &alive) {
        match solve_dominating(red, &comp, &undominated, cfg) {
            Residual::Solved(s) => {
                for v in &s {
                    phase_of.insert(tw.to_original(v), Phase::Brute);
                }
            }
            Residual::Oversized => {
                fallback = true;
                for v in comp.iter().filter(|&v| undominated[v]) {
                    phase_of.insert(tw.to_original(v), Phase::Fallback);
                }
            }
        }
    }
    let rounds = uniform_transcript(
        g.n(),
        &[("twins", 2), ("cuts", cfg.cut_phase_radius()), ("domination", 2), ("brute", cfg.diam_cap + 1)],
    );
    let mut out = RunResult::new(Algorithm::Algo1, g, phase_of, rounds);
    out.fallback_used = fallback;
    out.one_cuts = red.vertices().filter(|&v| x[v]).map(|v| tw.to_original(v)).collect();
    out.interesting = red.vertices().filter(|&v| i[v]).map(|v| tw.to_original(v)).collect();
    Ok(out)
}

pub fn algo_mvc(g: &Graph, cfg: &AlgorithmConfig) -> Result<RunResult> {
    cfg.validate()?;
    let n = g.n();
    let mut rounds = RoundTranscript::empty(n);

    let cuts = FnProgram::new(cfg.cut_phase_radius(), |v: &NodeView| {
        (local_1_cut(v.graph(), v.root(), cfg.r1).is_some(), in_minimal_2_cut(v.graph(), v.root(), cfg.r2))
    });
    let (cut, tr) = run_phase(g, &cuts, &vec![(); n]);
    rounds.then("cuts", &tr);

    let in_y: Vec<bool> = cut.iter().map(|&(a, b)| a || b).collect();
    let memo = Memo::default();
    let radius = cfg.diam_cap + 1;
    let brute = FnProgram::new(radius, |v: &NodeView<bool>| -> BruteOut {
        if *v.input(v.root()) {
            return (None, false);
        }
        let alive: Vec<bool> = v.inputs().iter().map(|&y| !y).collect();
        let trivial = v.graph().neighbors(v.root()).iter().all(|&w| !alive[w]);
        if trivial {
            return (None, false);
        }
        let outcome = match visible_component(v.graph(), v.root(), &alive, radius) {
            None => Residual::Oversized,
            Some(comp) => {
                let labels = comp.iter().map(|i| v.label(i)).collect();
                memoized(&memo, (labels, Vec::new()), || match solve_cover(v.graph(), &comp, cfg) {
                    Residual::Solved(s) => Residual::Solved(s.map(|i| v.label(i))),
                    Residual::Oversized => Residual::Oversized,
                })
            }
        };
        match outcome {
            Residual::Solved(s) => (s.contains(v.root_id()).then_some(Phase::Brute), false),
            Residual::Oversized => (Some(Phase::Fallback), true),
        }
    });
    let (picked, tr) = run_phase(g, &brute, &in_y);
    rounds.then("brute", &tr);

    let mut phase_of = BTreeMap::new();
    for v in g.vertices() {
        if cut[v].0 {
            phase_of.insert(v, Phase::OneCut);
        } else if cut[v].1 {
            phase_of.insert(v, Phase::TwoCut);
        } else if let Some(p) = picked[v].0 {
            phase_of.insert(v, p);
        }
    }
    let mut out = RunResult::new(Algorithm::Mvc, g, phase_of, rounds);
    out.fallback_used = picked.iter().any(|p| p.1);
    out.one_cuts = g.vertices().filter(|&v| cut[v].0).collect();
    out.interesting = g.vertices().filter(|&v| cut[v].1).collect();
    Ok(out)
}

pub fn algo_mvc_centralized(g: &Graph, cfg: &AlgorithmConfig) -> Result<RunResult> {
    cfg.validate()?;
    let x: Vec<bool> = g.vertices().map(|v| local_1_cut(g, v, cfg.r1).is_some()).collect();
    let c: Vec<bool> = g.vertices().map(|v| in_minimal_2_cut(g, v, cfg.r2)).collect();
    let alive: Vec<bool> = g.vertices().map(|v| !x[v] && !c[v]).collect();
    let mut phase_of = BTreeMap::new();
    let mut fallback = false;
    for v in g.vertices() {
        if x[v] {
            phase_of.insert(v, Phase::OneCut);
        } else if c[v] {
            phase_of.insert(v, Phase::TwoCut);
        }
    }
    for comp in components_of_mask(g, &alive).into_iter().filter(|c| c.len() > 1) {
        match solve_cover(g, &comp, cfg) {
            Residual::Solved(s) => {
                for v in &s {
                    phase_of.insert(v, Phase::Brute);
                }
            }
            Residual::Oversized => {
                fallback = true;
                for v in &comp {
                    phase_of.insert(v, Phase::Fallback);
                }
            }
        }
    }
    let rounds = uniform_transcript(g.n(), &[("cuts", cfg.cut_phase_radius()), ("brute", cfg.diam_cap + 1)]);
    let mut out = RunResult::new(Algorithm::Mvc, g, phase_of, rounds);
    out.fallback_used = fallback;
    out.one_cuts = g.vertices().filter(|&v| x[v]).collect();
    out.interesting = g.vertices().filter(|&v| c[v]).collect();
    Ok(out)
}

fn uniform_transcript(n: usize, phases: &[(&str, usize)]) -> RoundTranscript {
    let mut tr = RoundTranscript::empty(n);
    for &(name, r) in phases {
        tr.then(name, &RoundTranscript { rounds_used: r, per_vertex_radius: vec![r; n], phases: Vec::new() });
    }
    tr
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::families;

    fn small() -> AlgorithmConfig {
        AlgorithmConfig { r1: 3, r2: 3, ..AlgorithmConfig::default() }
    }

    #[test]
    fn k6_picks_one_vertex() {
        let out = algo1_mds(&families::complete(6), &AlgorithmConfig::default()).unwrap();
        assert_eq!(out.chosen, VertexSet::from([0]));
        assert!(!out.fallback_used);
    }

    #[test]
    fn c6_takes_every_interesting_vertex() {
        let out = algo1_mds(&families::cycle(6), &small()).unwrap();
        assert_eq!(out.size(), 6);
        assert_eq!(out.count_phase(Phase::Interesting), 6);
        assert_eq!(out.with_exact(2).ratio_vs_exact, Some(num_rational::Ratio::new(3, 1)));
    }

    #[test]
    fn p7_cut_vertices_then_nothing() {
        let out = algo1_mds(&families::path(7), &AlgorithmConfig::default()).unwrap();
        assert_eq!(out.one_cuts, VertexSet::from([1, 2, 3, 4, 5]));
        assert_eq!(out.chosen, VertexSet::from([1, 2, 3, 4, 5]));
        assert_eq!(out.count_phase(Phase::Brute), 0);
    }

    #[test]
    fn clique_pendant_is_dominated() {
        let g = families::clique_pendant(6);
        let out = algo1_mds(&g, &AlgorithmConfig::default()).unwrap();
        assert!(out.interesting.is_empty() && out.one_cuts.is_empty());
        assert!(out.is_valid(&g));
        assert_eq!(out.chosen, VertexSet::from([0]));
    }

    #[test]
    fn round_count_is_exact() {
        let cfg = AlgorithmConfig::default();
        let out = algo1_mds(&families::cycle(9), &cfg).unwrap();
        assert_eq!(out.rounds.rounds_used, cfg.mds_rounds());
        assert_eq!(out.rounds.phases.len(), 4);
    }

    #[test]
    fn local_and_centralized_agree() {
        let cfg = small();
        for g in [families::cycle(6), families::path(9), families::clique_pendant(5), families::fan(5)] {
            let a = algo1_mds(&g, &cfg).unwrap();
            let b = algo1_mds_centralized(&g, &cfg).unwrap();
            assert_eq!(a.phase_of, b.phase_of);
            assert_eq!(a.fallback_used, b.fallback_used);
            let a = algo_mvc(&g, &cfg).unwrap();
            let b = algo_mvc_centralized(&g, &cfg).unwrap();
            assert_eq!(a.phase_of, b.phase_of);
        }
    }

    #[test]
    fn wide_component_falls_back() {
        // a long cycle cubed has no local cuts and diameter n/6
        let g = families::cycle_power(36, 3);
        let cfg = AlgorithmConfig { r1: 2, r2: 2, diam_cap: 3, ..AlgorithmConfig::default() };
        let out = algo1_mds(&g, &cfg).unwrap();
        assert!(out.fallback_used);
        assert!(out.is_valid(&g));
        assert_eq!(out.phase_of, algo1_mds_centralized(&g, &cfg).unwrap().phase_of);
    }

    #[test]
    fn mvc_examples() {
        let cfg = AlgorithmConfig::default();
        let out = algo_mvc(&families::cycle(6), &cfg).unwrap();
        assert_eq!(out.size(), 6);
        assert!(algo_mvc(&Graph::empty(4), &cfg).unwrap().chosen.is_empty());
        assert_eq!(algo_mvc(&families::path(3), &cfg).unwrap().chosen, VertexSet::from([1]));
    }

    #[test]
    fn algo2_matches_algo1_on_equal_radii() {
        let cfg = AlgorithmConfig::default();
        let asdim = AsdimConfig::matching(&cfg).unwrap();
        assert_eq!(asdim.radii(), (cfg.r1, cfg.r2));
        for g in [families::cycle(6), families::complete(6), families::path(7)] {
            assert_eq!(algo1_mds(&g, &cfg).unwrap().chosen, algo2_mds(&g, &asdim).unwrap().chosen);
        }
    }
}
