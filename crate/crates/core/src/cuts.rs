//! Local 1-cuts, minimal local 2-cuts and interesting vertices.
//!
//! A set `C` of at most two vertices, pairwise at distance ≤ r, is an r-local
//! cut when removing it disconnects the subgraph induced by the union of the
//! radius-r balls of its members. A 2-cut `{u, v}` is kept only when it is
//! minimal: at least two of the resulting components contain a neighbour of
//! `u` and a neighbour of `v` (so neither endpoint separates them alone).

use serde::Serialize;

use crate::algos::AlgorithmConfig;
use crate::error::{Error, Result};
use crate::graph::{ball_unchecked, components_of_mask, Graph, Vertex, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutRecord {
    /// One or two vertices, sorted.
    pub members: Vec<Vertex>,
    pub radius: usize,
    /// Components of the local ball minus the cut, ordered by minimum vertex.
    pub attached_components: Vec<VertexSet>,
    pub minimal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InterestingWitness {
    pub vertex: Vertex,
    pub partner: Vertex,
    pub cut: CutRecord,
    /// A vertex of `N[vertex] \ N[partner]`.
    pub private_neighbor: Vertex,
    /// Indices into `cut.attached_components`.
    pub witness_components: [usize; 2],
    /// For each witness component, a member not adjacent to `partner`.
    pub witness_vertices: [Vertex; 2],
}

pub fn is_local_1_cut(g: &Graph, v: Vertex, r: usize) -> Result<Option<CutRecord>> {
    g.check_vertex(v)?;
    check_radius(r, 1)?;
    Ok(local_1_cut(g, v, r))
}

pub(crate) fn local_1_cut(g: &Graph, v: Vertex, r: usize) -> Option<CutRecord> {
    let mut alive = ball_unchecked(g, v, r).to_mask(g.n());
    alive[v] = false;
    let comps = components_of_mask(g, &alive);
    (comps.len() >= 2).then(|| CutRecord { members: vec![v], radius: r, attached_components: comps, minimal: true })
}

/// Every minimal r-local 2-cut containing `v`, ordered by partner.
pub fn local_2_cuts_at(g: &Graph, v: Vertex, r: usize) -> Result<Vec<CutRecord>> {
    g.check_vertex(v)?;
    check_radius(r, 1)?;
    Ok(minimal_2_cuts(g, v, r).map(|(_, cut)| cut).collect())
}

fn minimal_2_cuts(g: &Graph, v: Vertex, r: usize) -> impl Iterator<Item = (Vertex, CutRecord)> + '_ {
    let ball_v = ball_unchecked(g, v, r).to_mask(g.n());
    let partners: Vec<Vertex> = g.vertices().filter(|&u| u != v && ball_v[u]).collect();
    partners.into_iter().filter_map(move |u| {
        let mut alive = ball_v.clone();
        for w in &ball_unchecked(g, u, r) {
            alive[w] = true;
        }
        alive[u] = false;
        alive[v] = false;
        let comps = components_of_mask(g, &alive);
        if comps.len() < 2 {
            return None;
        }
        let touches = |c: &VertexSet, x: Vertex| g.neighbors(x).iter().any(|&w| c.contains(w));
        let full = comps.iter().filter(|c| touches(c, u) && touches(c, v)).count();
        (full >= 2).then(|| {
            let members = if u < v { vec![u, v] } else { vec![v, u] };
            (u, CutRecord { members, radius: r, attached_components: comps, minimal: true })
        })
    })
}

/// Looks for a minimal r-local 2-cut `{u, v}` certifying that `v` is
/// r-interesting: `N[v] ⊄ N[u]`, and two components of the cut's ball minus
/// the cut each hold a vertex not adjacent to `u`.
pub fn is_r_interesting(g: &Graph, v: Vertex, r: usize) -> Result<Option<InterestingWitness>> {
    g.check_vertex(v)?;
    check_radius(r, 2)?;
    Ok(interesting_witness(g, v, r))
}

pub(crate) fn interesting_witness(g: &Graph, v: Vertex, r: usize) -> Option<InterestingWitness> {
    minimal_2_cuts(g, v, r).find_map(|(u, cut)| {
        let private = g.closed_nbhd(v).into_iter().find(|&w| w != u && !g.has_edge(u, w))?;
        let mut found = cut
            .attached_components
            .iter()
            .enumerate()
            .filter_map(|(i, comp)| comp.iter().find(|&w| !g.has_edge(u, w)).map(|w| (i, w)));
        let (c1, w1) = found.next()?;
        let (c2, w2) = found.next()?;
        Some(InterestingWitness {
            vertex: v,
            partner: u,
            cut,
            private_neighbor: private,
            witness_components: [c1, c2],
            witness_vertices: [w1, w2],
        })
    })
}

/// `X` (local 1-cut vertices at radius `r1`) and `I` (r2-interesting
/// vertices), computed centrally.
pub fn enumerate_cut_sets(g: &Graph, cfg: &AlgorithmConfig) -> Result<(VertexSet, VertexSet)> {
    cfg.validate()?;
    let x = g.vertices().filter(|&v| local_1_cut(g, v, cfg.r1).is_some()).collect();
    let i = g.vertices().filter(|&v| interesting_witness(g, v, cfg.r2).is_some()).collect();
    Ok((x, i))
}

/// Vertices lying in at least one minimal r-local 2-cut.
pub fn local_2_cut_vertices(g: &Graph, r: usize) -> VertexSet {
    g.vertices().filter(|&v| in_minimal_2_cut(g, v, r)).collect()
}

pub(crate) fn in_minimal_2_cut(g: &Graph, v: Vertex, r: usize) -> bool {
    minimal_2_cuts(g, v, r).next().is_some()
}

fn check_radius(r: usize, min: usize) -> Result<()> {
    if r < min {
        Err(Error::InvalidArgument(format!("radius {r} below the minimum of {min}")))
    } else {
        Ok(())
    }
}
