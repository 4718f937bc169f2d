//! Immutable simple undirected graphs and the metric primitives the rest of
//! the crate is built on: balls, closed neighbourhoods, weak diameter,
//! r-components, true-twin reduction and induced subgraphs.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Simple undirected graph on the dense vertex range `0..n`.
///
/// Neighbour lists are sorted and free of duplicates and self-loops.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n(), self.m, self.edges())
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    /// Builds a graph from an edge list, rejecting self-loops and out-of-range
    /// endpoints. Repeated edges are merged.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::InvalidVertex { vertex: u, n });
            }
            if v >= n {
                return Err(Error::InvalidVertex { vertex: v, n });
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Graph { adj, m: m / 2 })
    }

    /// Like [`Graph::from_edges`] but for edge lists produced internally, where
    /// a bad edge is a bug.
    pub(crate) fn from_edges_unchecked(n: usize, edges: &[(Vertex, Vertex)]) -> Self {
        Self::from_edges(n, edges).expect("internally generated edge list is valid")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.m);
        for u in self.vertices() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, n: self.n() })
        }
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.iter().find(|&v| v >= self.n()) {
            Some(v) => Err(Error::InvalidVertex { vertex: v, n: self.n() }),
            None => Ok(()),
        }
    }

    /// Closed neighbourhood `N[v]` as a sorted vector.
    pub fn closed_nbhd(&self, v: Vertex) -> Vec<Vertex> {
        let mut out = Vec::with_capacity(self.degree(v) + 1);
        let pos = self.adj[v].partition_point(|&w| w < v);
        out.extend_from_slice(&self.adj[v][..pos]);
        out.push(v);
        out.extend_from_slice(&self.adj[v][pos..]);
        out
    }

    /// `N[v] ⊆ N[u]`.
    pub fn closed_nbhd_subset(&self, v: Vertex, u: Vertex) -> bool {
        if v == u {
            return true;
        }
        if !self.has_edge(u, v) {
            return false;
        }
        self.adj[v].iter().all(|&w| w == u || self.has_edge(u, w))
    }

    /// BFS distances from `source`; `None` for unreachable vertices and for
    /// vertices beyond `limit` when one is given.
    pub fn bfs_distances(&self, source: Vertex, limit: Option<usize>) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            if limit.is_some_and(|r| d >= r) {
                continue;
            }
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.bfs_distances(u, None)[v]
    }
}

/// Sorted, duplicate-free set of vertex IDs.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<Vertex>);

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.0).finish()
    }
}

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    /// Wraps a vector that is already sorted and duplicate-free.
    pub(crate) fn from_sorted(members: Vec<Vertex>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet(members)
    }

    pub fn from_mask(mask: &[bool]) -> Self {
        VertexSet(mask.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    pub fn min(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn to_mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for v in self.iter() {
            mask[v] = true;
        }
        mask
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn map(&self, f: impl Fn(Vertex) -> Vertex) -> VertexSet {
        self.iter().map(f).collect()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(arr: [Vertex; N]) -> Self {
        arr.into_iter().collect()
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(v: Vec<Vertex>) -> Self {
        v.into_iter().collect()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = Vertex;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, Vertex>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

/// Weak diameter of a vertex set, measured in the host graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Diameter {
    Finite(usize),
    /// Some pair of the set lies in different components of the host graph.
    Infinite,
}

/// Result of collapsing every true-twin class to its lowest-ID member.
#[derive(Clone, Debug)]
pub struct TwinReduction {
    pub reduced: Graph,
    /// Original vertex → kept vertex of its class, in original IDs.
    pub representative: Vec<Vertex>,
    /// Kept vertices in increasing order; index `i` is vertex `i` of `reduced`.
    pub kept: Vec<Vertex>,
}

impl TwinReduction {
    pub fn to_original(&self, reduced_vertex: Vertex) -> Vertex {
        self.kept[reduced_vertex]
    }

    pub fn is_representative(&self, v: Vertex) -> bool {
        self.representative[v] == v
    }
}

/// `N^r[v]`, computed by breadth-first search.
pub fn ball(g: &Graph, v: Vertex, r: usize) -> Result<VertexSet> {
    g.check_vertex(v)?;
    Ok(ball_unchecked(g, v, r))
}

pub(crate) fn ball_unchecked(g: &Graph, v: Vertex, r: usize) -> VertexSet {
    let dist = g.bfs_distances(v, Some(r));
    VertexSet(dist.iter().enumerate().filter(|(_, d)| d.is_some()).map(|(i, _)| i).collect())
}

pub fn closed_neighborhood(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    g.check_set(s)?;
    let mut mask = vec![false; g.n()];
    for v in s {
        mask[v] = true;
        for &w in g.neighbors(v) {
            mask[w] = true;
        }
    }
    Ok(VertexSet::from_mask(&mask))
}

pub fn weak_diameter(g: &Graph, s: &VertexSet) -> Result<Diameter> {
    g.check_set(s)?;
    if s.is_empty() {
        return Err(Error::InvalidArgument("weak diameter of an empty set".into()));
    }
    let mut best = 0;
    for u in s {
        let dist = g.bfs_distances(u, None);
        for v in s {
            match dist[v] {
                Some(d) => best = best.max(d),
                None => return Ok(Diameter::Infinite),
            }
        }
    }
    Ok(Diameter::Finite(best))
}

/// Partition of `s` into its r-components: classes of the relation "joined by
/// a chain inside `s` whose consecutive members are at host distance ≤ r".
/// Parts are sorted internally and ordered by their minimum.
pub fn r_components(g: &Graph, s: &VertexSet, r: usize) -> Result<Vec<VertexSet>> {
    g.check_set(s)?;
    let in_s = s.to_mask(g.n());
    let mut part = vec![usize::MAX; g.n()];
    let mut parts = Vec::new();
    for root in s {
        if part[root] != usize::MAX {
            continue;
        }
        let id = parts.len();
        part[root] = id;
        let mut members = vec![root];
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            let dist = g.bfs_distances(u, Some(r));
            for (w, d) in dist.iter().enumerate() {
                if d.is_some() && in_s[w] && part[w] == usize::MAX {
                    part[w] = id;
                    members.push(w);
                    stack.push(w);
                }
            }
        }
        parts.push(members.into_iter().collect());
    }
    Ok(parts)
}

/// Connected components, each sorted, ordered by minimum vertex.
pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    components_of_mask(g, &vec![true; g.n()])
}

/// Connected components of `g[alive]`.
pub(crate) fn components_of_mask(g: &Graph, alive: &[bool]) -> Vec<VertexSet> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for root in g.vertices() {
        if !alive[root] || seen[root] {
            continue;
        }
        seen[root] = true;
        let mut members = vec![root];
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if alive[w] && !seen[w] {
                    seen[w] = true;
                    members.push(w);
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        out.push(VertexSet(members));
    }
    out
}

/// `g[s]` with vertices renumbered densely in increasing original order.
/// The returned map sends each original vertex of `s` to its new ID.
pub fn induced_subgraph(g: &Graph, s: &VertexSet) -> Result<(Graph, Vec<Option<Vertex>>)> {
    g.check_set(s)?;
    Ok(induced_unchecked(g, s))
}

pub(crate) fn induced_unchecked(g: &Graph, s: &VertexSet) -> (Graph, Vec<Option<Vertex>>) {
    let mut map = vec![None; g.n()];
    for (i, v) in s.iter().enumerate() {
        map[v] = Some(i);
    }
    let mut adj = vec![Vec::new(); s.len()];
    let mut m = 0;
    for (i, v) in s.iter().enumerate() {
        // neighbour lists stay sorted because the renumbering is monotone
        adj[i] = g.neighbors(v).iter().filter_map(|&w| map[w]).collect();
        m += adj[i].len();
    }
    (Graph { adj, m: m / 2 }, map)
}

/// Keeps the lowest-ID vertex of every true-twin class (`N[u] = N[v]`).
pub fn remove_true_twins(g: &Graph) -> TwinReduction {
    let representative: Vec<Vertex> = g.vertices().map(|v| twin_representative(g, v)).collect();
    let kept: Vec<Vertex> = g.vertices().filter(|&v| representative[v] == v).collect();
    let (reduced, _) = induced_unchecked(g, &VertexSet::from_sorted(kept.clone()));
    TwinReduction { reduced, representative, kept }
}

/// Lowest-ID true twin of `v` (possibly `v` itself). Twins are adjacent, so
/// only neighbours need to be examined.
pub(crate) fn twin_representative(g: &Graph, v: Vertex) -> Vertex {
    g.neighbors(v)
        .iter()
        .copied()
        .take_while(|&u| u < v)
        .find(|&u| g.degree(u) == g.degree(v) && g.closed_nbhd_subset(v, u))
        .unwrap_or(v)
}

/// Blocks (maximal 2-connected subgraphs, bridges, isolated vertices),
/// each sorted, in the order the depth-first search closes them.
pub fn blocks(g: &Graph) -> Vec<VertexSet> {
    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; g.n()];
    let mut low = vec![0; g.n()];
    let mut time = 0;
    let mut out = Vec::new();
    let mut vstack = Vec::new();
    for root in g.vertices() {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        if g.degree(root) == 0 {
            out.push(VertexSet(vec![root]));
            continue;
        }
        vstack.push(root);
        let mut stack: Vec<(Vertex, Option<Vertex>, usize)> = vec![(root, None, 0)];
        while let Some(top) = stack.last_mut() {
            let (v, parent) = (top.0, top.1);
            if top.2 < g.degree(v) {
                let w = g.neighbors(v)[top.2];
                top.2 += 1;
                if disc[w] == UNSEEN {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    vstack.push(w);
                    stack.push((w, Some(v), 0));
                } else if Some(w) != parent {
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            stack.pop();
            let Some(p) = parent else { continue };
            low[p] = low[p].min(low[v]);
            if low[v] >= disc[p] {
                let mut block = vec![p];
                while let Some(x) = vstack.pop() {
                    block.push(x);
                    if x == v {
                        break;
                    }
                }
                block.sort_unstable();
                out.push(VertexSet(block));
            }
        }
        vstack.clear();
    }
    out
}

/// Vertices lying in more than one block.
pub fn articulation_points(g: &Graph) -> VertexSet {
    let mut count = vec![0usize; g.n()];
    for b in blocks(g) {
        for v in &b {
            count[v] += 1;
        }
    }
    g.vertices().filter(|&v| count[v] >= 2).collect()
}
