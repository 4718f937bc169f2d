//! Exhaustive `K_{2,t}` minor test.
//!
//! Any `K_{2,t}` model can be shrunk so that every spoke branch set is a
//! single vertex: walk inside the spoke from its edge into the first hub to
//! its edge into the second, and move everything but the last vertex of that
//! walk into the first hub. So a minor exists iff some `t`-set `S` has two
//! disjoint connected sets in `G − S`, each adjacent to every vertex of `S`.
//!
//! For `t ≥ 2` the model is 2-connected and lies inside one block, so blocks
//! are searched separately. Inside a block, for each `S`: two components of
//! the rest touching all of `S` settle it; with exactly one such component
//! `K`, connected sets `A ⊆ K` are grown until they touch all of `S`, and the
//! remainder of `K` is checked for a second hub.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{blocks, induced_unchecked, Graph, Vertex, VertexSet};

/// Default vertex cap for the exhaustive search.
pub const DEFAULT_MINOR_CAP: usize = 20;
/// Masks are `u64`.
pub const MINOR_HARD_CAP: usize = 64;

/// A `K_{2,t}` model: two hub branch sets and `t` spoke branch sets, with one
/// certifying edge from each hub into each spoke.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorWitness {
    pub hubs: [VertexSet; 2],
    pub spokes: Vec<VertexSet>,
    /// `edges[i][h]` joins hub `h` to spoke `i`, hub end first.
    pub edges: Vec<[(Vertex, Vertex); 2]>,
}

impl MinorWitness {
    pub fn t(&self) -> usize {
        self.spokes.len()
    }

    /// Re-checks every invariant against `g`: branch sets nonempty, pairwise
    /// disjoint and connected, and every certificate a real edge between the
    /// right pair of sets.
    pub fn validate(&self, g: &Graph) -> bool {
        let sets: Vec<&VertexSet> = self.hubs.iter().chain(&self.spokes).collect();
        let mut owner = vec![None; g.n()];
        for (i, s) in sets.iter().enumerate() {
            if s.is_empty() || g.check_set(s).is_err() {
                return false;
            }
            for v in s.iter() {
                if owner[v].replace(i).is_some() {
                    return false;
                }
            }
            let (sub, _) = induced_unchecked(g, s);
            if crate::graph::connected_components(&sub).len() != 1 {
                return false;
            }
        }
        self.edges.len() == self.spokes.len()
            && self.edges.iter().enumerate().all(|(i, pair)| {
                pair.iter().enumerate().all(|(h, &(a, b))| {
                    a < g.n() && b < g.n() && owner[a] == Some(h) && owner[b] == Some(2 + i) && g.has_edge(a, b)
                })
            })
    }
}

pub fn contains_k2t_minor(g: &Graph, t: usize) -> Result<Option<MinorWitness>> {
    contains_k2t_minor_with_cap(g, t, DEFAULT_MINOR_CAP)
}

pub fn contains_k2t_minor_with_cap(g: &Graph, t: usize, cap: usize) -> Result<Option<MinorWitness>> {
    let cap = cap.min(MINOR_HARD_CAP);
    if g.n() > cap {
        return Err(Error::ExceedsCap { size: g.n(), cap });
    }
    if t == 0 {
        return Err(Error::InvalidArgument("t must be positive".into()));
    }
    if t == 1 {
        // K_{2,1} is a path on three vertices
        return Ok(g.vertices().find(|&v| g.degree(v) >= 2).map(|v| {
            let (a, b) = (g.neighbors(v)[0], g.neighbors(v)[1]);
            MinorWitness {
                hubs: [VertexSet::from([a]), VertexSet::from([b])],
                spokes: vec![VertexSet::from([v])],
                edges: vec![[(a, v), (b, v)]],
            }
        }));
    }
    for block in blocks(g).into_iter().filter(|b| b.len() >= t + 2) {
        let (h, _) = induced_unchecked(g, &block);
        if let Some((a, b, spokes)) = Masks::new(&h).search(t) {
            let id = |m: u64| -> VertexSet { bits(m).map(|i| block.as_slice()[i]).collect() };
            let hubs = [id(a), id(b)];
            let edges = spokes
                .iter()
                .map(|&s| {
                    let s_id = block.as_slice()[s];
                    let touch = |hub: u64| {
                        let w = bits(h_adj(&h, s) & hub).next().expect("hub touches spoke");
                        (block.as_slice()[w], s_id)
                    };
                    [touch(a), touch(b)]
                })
                .collect();
            let spokes = spokes.iter().map(|&s| VertexSet::from([block.as_slice()[s]])).collect();
            return Ok(Some(MinorWitness { hubs, spokes, edges }));
        }
    }
    Ok(None)
}

/// Smallest `t ≥ 1` for which `g` has no `K_{2,t}` minor.
pub fn certify_class(g: &Graph) -> Result<usize> {
    certify_class_with_cap(g, DEFAULT_MINOR_CAP)
}

pub fn certify_class_with_cap(g: &Graph, cap: usize) -> Result<usize> {
    let mut t = 1;
    while contains_k2t_minor_with_cap(g, t, cap)?.is_some() {
        t += 1;
    }
    Ok(t)
}

fn h_adj(h: &Graph, v: usize) -> u64 {
    h.neighbors(v).iter().fold(0, |m, &w| m | 1 << w)
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            i
        })
    })
}

struct Masks {
    n: usize,
    adj: Vec<u64>,
}

impl Masks {
    fn new(h: &Graph) -> Self {
        Masks { n: h.n(), adj: h.vertices().map(|v| h_adj(h, v)).collect() }
    }

    fn nbrs(&self, set: u64) -> u64 {
        bits(set).fold(0, |m, v| m | self.adj[v])
    }

    /// Component of `alive` containing the lowest vertex of `seed`.
    fn grow(&self, seed: u64, alive: u64) -> u64 {
        let mut comp = seed & seed.wrapping_neg();
        loop {
            let next = (comp | self.nbrs(comp)) & alive;
            if next == comp {
                return comp;
            }
            comp = next;
        }
    }

    fn components(&self, mut alive: u64) -> Vec<u64> {
        let mut out = Vec::new();
        while alive != 0 {
            let c = self.grow(alive, alive);
            out.push(c);
            alive &= !c;
        }
        out
    }

    fn touches_all(&self, set: u64, spokes: &[usize]) -> bool {
        spokes.iter().all(|&s| self.adj[s] & set != 0)
    }

    fn full_component(&self, alive: u64, spokes: &[usize]) -> Option<u64> {
        self.components(alive).into_iter().find(|&c| self.touches_all(c, spokes))
    }

    fn search(&self, t: usize) -> Option<(u64, u64, Vec<usize>)> {
        let all = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        let mut combo: Vec<usize> = (0..t).collect();
        loop {
            let s_mask = combo.iter().fold(0u64, |m, &s| m | 1 << s);
            let rest = all & !s_mask;
            if combo.iter().all(|&s| (self.adj[s] & rest).count_ones() >= 2) {
                let full: Vec<u64> =
                    self.components(rest).into_iter().filter(|&c| self.touches_all(c, &combo)).collect();
                match full.as_slice() {
                    [a, b, ..] => return Some((*a, *b, combo)),
                    [k] => {
                        if let Some((a, b)) = self.split(*k, &combo) {
                            return Some((a, b, combo));
                        }
                    }
                    [] => {}
                }
            }
            if !next_combination(&mut combo, self.n) {
                return None;
            }
        }
    }

    /// Two disjoint connected subsets of `k` each touching every spoke.
    fn split(&self, k: u64, spokes: &[usize]) -> Option<(u64, u64)> {
        bits(k).find_map(|anchor| {
            let above = k & !((1u64 << anchor) - 1);
            self.extend(1 << anchor, 0, above, k, spokes)
        })
    }

    /// Grows the connected set `a` inside `allowed` minus `excluded`.
    fn extend(&self, a: u64, excluded: u64, allowed: u64, k: u64, spokes: &[usize]) -> Option<(u64, u64)> {
        if self.touches_all(a, spokes) {
            return self.full_component(k & !a, spokes).map(|b| (a, b));
        }
        self.full_component(k & !a, spokes)?;
        let room = allowed & !excluded;
        if !self.touches_all(self.grow(a, room | a), spokes) {
            return None;
        }
        let frontier = self.nbrs(a) & room & !a;
        if frontier == 0 {
            return None;
        }
        let v = frontier & frontier.wrapping_neg();
        self.extend(a | v, excluded, allowed, k, spokes).or_else(|| self.extend(a, excluded | v, allowed, k, spokes))
    }
}

fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let t = combo.len();
    let Some(i) = (0..t).rev().find(|&i| combo[i] < n - t + i) else {
        return false;
    };
    combo[i] += 1;
    for j in i + 1..t {
        combo[j] = combo[j - 1] + 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::families;

    #[test]
    fn k23_contains_itself() {
        let g = families::complete_bipartite(2, 3);
        let w = contains_k2t_minor(&g, 3).unwrap().expect("K_{2,3}");
        assert!(w.validate(&g));
        assert_eq!(w.t(), 3);
        assert!(contains_k2t_minor(&g, 4).unwrap().is_none());
    }

    #[test]
    fn examples() {
        let tree = families::tree(12, 3);
        assert!(contains_k2t_minor(&tree, 2).unwrap().is_none());
        let c6 = families::cycle(6);
        assert!(contains_k2t_minor(&c6, 3).unwrap().is_none());
        let w = contains_k2t_minor(&c6, 2).unwrap().expect("C4 minor");
        assert!(w.validate(&c6));
        assert_eq!(certify_class(&tree).unwrap(), 2);
        assert_eq!(certify_class(&c6).unwrap(), 3);
        assert_eq!(certify_class(&families::complete_bipartite(2, 4)).unwrap(), 5);
    }

    #[test]
    fn hub_must_be_split_from_one_component() {
        // a wheel: removing three rim vertices leaves one component that has
        // to be divided between the hubs
        let mut edges: Vec<_> = (1..8).map(|i| (i, i % 7 + 1)).collect();
        edges.extend((1..8).map(|i| (0, i)));
        let wheel = Graph::from_edges(8, &edges).unwrap();
        let w = contains_k2t_minor(&wheel, 3).unwrap().expect("wheels have K_{2,3} minors");
        assert!(w.validate(&wheel));
    }

    #[test]
    fn outerplanar_and_fans_are_k23_free() {
        for seed in 0..10 {
            assert!(contains_k2t_minor(&families::outerplanar(12, seed), 3).unwrap().is_none());
        }
        assert!(contains_k2t_minor(&families::fan(8), 3).unwrap().is_none());
    }

    #[test]
    fn cap_and_t_are_checked() {
        assert!(matches!(contains_k2t_minor(&families::path(21), 2), Err(Error::ExceedsCap { .. })));
        assert!(contains_k2t_minor(&families::path(4), 0).is_err());
    }

    #[test]
    fn corrupted_witness_fails_validation() {
        let g = families::complete_bipartite(2, 3);
        let mut w = contains_k2t_minor(&g, 3).unwrap().unwrap();
        w.spokes[0] = w.hubs[0].clone();
        assert!(!w.validate(&g));
    }
}
