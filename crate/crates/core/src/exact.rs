//! Exponential-time exact oracles for dominating set, subset domination and
//! vertex cover.
//!
//! Every solver returns the lexicographically smallest optimum (comparing the
//! sorted ID sequences), so separate callers that solve the same instance
//! always agree. Two independent routes exist for each problem: a
//! branch-and-bound search and plain enumeration by increasing cardinality.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{closed_neighborhood, Graph, Vertex, VertexSet};

/// Default size cap for the branch-and-bound solvers.
pub const DEFAULT_EXACT_CAP: usize = 25;
/// Default size cap for the enumeration solvers.
pub const DEFAULT_ENUM_CAP: usize = 20;
/// Width of the bitmasks used internally.
pub const HARD_CAP: usize = 128;

/// Dominate `targets` using only vertices of `allowed`.
#[derive(Clone, Debug)]
pub struct DominationInstance<'g> {
    pub graph: &'g Graph,
    pub targets: VertexSet,
    pub allowed: VertexSet,
}

impl<'g> DominationInstance<'g> {
    /// `MDS(G, B)`: dominate `B` from `N[B]`.
    pub fn restricted(graph: &'g Graph, targets: VertexSet) -> Result<Self> {
        let allowed = closed_neighborhood(graph, &targets)?;
        Ok(DominationInstance { graph, targets, allowed })
    }

    pub fn whole(graph: &'g Graph) -> Self {
        DominationInstance { graph, targets: VertexSet::full(graph.n()), allowed: VertexSet::full(graph.n()) }
    }

    fn to_cover(&self, cap: usize) -> Result<SetCover> {
        self.graph.check_set(&self.targets)?;
        self.graph.check_set(&self.allowed)?;
        let size = self.allowed.len().max(self.targets.len());
        if size > cap.min(HARD_CAP) {
            return Err(Error::ExceedsCap { size, cap: cap.min(HARD_CAP) });
        }
        let mut target_index = vec![None; self.graph.n()];
        for (i, t) in self.targets.iter().enumerate() {
            target_index[t] = Some(i);
        }
        let sets: Vec<u128> = self
            .allowed
            .iter()
            .map(|a| {
                self.graph.closed_nbhd(a).into_iter().filter_map(|w| target_index[w]).fold(0u128, |m, i| m | bit(i))
            })
            .collect();
        let cover = SetCover::new(self.targets.len(), sets);
        if let Some(t) = cover.uncoverable() {
            return Err(Error::Infeasible(self.targets.as_slice()[t]));
        }
        Ok(cover)
    }

    fn decode(&self, picks: Vec<usize>) -> VertexSet {
        picks.into_iter().map(|i| self.allowed.as_slice()[i]).collect()
    }
}

pub fn mds_exact(g: &Graph) -> Result<VertexSet> {
    mds_exact_with_cap(g, DEFAULT_EXACT_CAP)
}

pub fn mds_exact_with_cap(g: &Graph, cap: usize) -> Result<VertexSet> {
    mds_subset_exact_with_cap(&DominationInstance::whole(g), cap)
}

pub fn mds_subset_exact(inst: &DominationInstance<'_>) -> Result<VertexSet> {
    mds_subset_exact_with_cap(inst, DEFAULT_EXACT_CAP)
}

pub fn mds_subset_exact_with_cap(inst: &DominationInstance<'_>, cap: usize) -> Result<VertexSet> {
    let cover = inst.to_cover(cap)?;
    let k = cover.min_size();
    Ok(inst.decode(cover.lex_first(k).expect("a cover of the optimal size exists")))
}

/// Enumeration route: tries all subsets of `allowed` by increasing size in
/// lexicographic order and returns the first cover.
pub fn mds_subset_enum(inst: &DominationInstance<'_>) -> Result<VertexSet> {
    let cover = inst.to_cover(DEFAULT_ENUM_CAP)?;
    Ok(inst.decode(cover.enumerate()))
}

pub fn mds_exact_enum(g: &Graph) -> Result<VertexSet> {
    mds_subset_enum(&DominationInstance::whole(g))
}

pub fn mvc_exact(g: &Graph) -> Result<VertexSet> {
    mvc_exact_with_cap(g, DEFAULT_EXACT_CAP)
}

pub fn mvc_exact_with_cap(g: &Graph, cap: usize) -> Result<VertexSet> {
    let vc = VertexCover::new(g, cap)?;
    let k = vc.min_size();
    Ok(VertexSet::from(vc.lex_first(k).expect("a cover of the optimal size exists")))
}

pub fn mvc_exact_enum(g: &Graph) -> Result<VertexSet> {
    let vc = VertexCover::new(g, DEFAULT_ENUM_CAP)?;
    Ok(VertexSet::from(vc.enumerate()))
}

/// Every vertex of `b` is in `s` or adjacent to a vertex of `s`.
pub fn verify_dominating(g: &Graph, s: &VertexSet, b: &VertexSet) -> bool {
    let in_s = s.to_mask(g.n());
    b.iter().all(|v| in_s[v] || g.neighbors(v).iter().any(|&w| in_s[w]))
}

pub fn verify_vertex_cover(g: &Graph, s: &VertexSet) -> bool {
    let in_s = s.to_mask(g.n());
    g.edges().into_iter().all(|(u, v)| in_s[u] || in_s[v])
}

/// Minimum number of vertices other than `v` needed to dominate `N[v]`,
/// resolved only up to the 1-versus-at-least-2 threshold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Gamma {
    One,
    AtLeastTwo,
}

/// `γ(v) = 1` exactly when some `u ≠ v` has `N[v] ⊆ N[u]`; such a `u` must be
/// a neighbour of `v`.
pub fn gamma(g: &Graph, v: Vertex) -> Result<Gamma> {
    g.check_vertex(v)?;
    Ok(gamma_unchecked(g, v))
}

pub(crate) fn gamma_unchecked(g: &Graph, v: Vertex) -> Gamma {
    if g.neighbors(v).iter().any(|&u| g.closed_nbhd_subset(v, u)) {
        Gamma::One
    } else {
        Gamma::AtLeastTwo
    }
}

fn bit(i: usize) -> u128 {
    1u128 << i
}

fn bits(mut m: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            i
        })
    })
}

/// Mask of indices `>= start`.
fn from(start: usize) -> u128 {
    if start >= 128 {
        0
    } else {
        !0u128 << start
    }
}

/// Mask of indices `< end`.
fn below(end: usize) -> u128 {
    !from(end)
}

/// Set cover over at most 128 elements and 128 sets.
struct SetCover {
    n_elems: usize,
    sets: Vec<u128>,
    /// For each element, the mask of sets covering it.
    covering: Vec<u128>,
}

impl SetCover {
    fn new(n_elems: usize, sets: Vec<u128>) -> Self {
        let mut covering = vec![0u128; n_elems];
        for (s, &m) in sets.iter().enumerate() {
            for e in bits(m) {
                covering[e] |= bit(s);
            }
        }
        SetCover { n_elems, sets, covering }
    }

    fn all(&self) -> u128 {
        below(self.n_elems)
    }

    fn uncoverable(&self) -> Option<usize> {
        self.covering.iter().position(|&c| c == 0)
    }

    /// Lower bound on the number of sets (restricted to `avail`) needed for
    /// `uncovered`: elements with pairwise disjoint covering families each
    /// need their own set. `None` when some element cannot be covered.
    fn lower_bound(&self, uncovered: u128, avail: u128) -> Option<usize> {
        let mut order: Vec<(u32, usize)> = Vec::new();
        for e in bits(uncovered) {
            let c = self.covering[e] & avail;
            if c == 0 {
                return None;
            }
            order.push((c.count_ones(), e));
        }
        order.sort_unstable();
        let mut used = 0u128;
        let mut packing = 0;
        for (_, e) in order {
            let c = self.covering[e] & avail;
            if c & used == 0 {
                used |= c;
                packing += 1;
            }
        }
        let widest = bits(avail).map(|s| (self.sets[s] & uncovered).count_ones()).max().unwrap_or(0);
        let by_volume = (uncovered.count_ones() as usize).div_ceil(widest.max(1) as usize);
        Some(packing.max(by_volume))
    }

    fn greedy(&self) -> usize {
        let mut uncovered = self.all();
        let mut count = 0;
        while uncovered != 0 {
            let best = (0..self.sets.len()).max_by_key(|&s| (self.sets[s] & uncovered).count_ones()).unwrap();
            uncovered &= !self.sets[best];
            count += 1;
        }
        count
    }

    fn min_size(&self) -> usize {
        let mut best = self.greedy();
        let mut seen = HashMap::new();
        self.branch(self.all(), 0, &mut best, &mut seen);
        best
    }

    fn branch(&self, uncovered: u128, depth: usize, best: &mut usize, seen: &mut HashMap<u128, usize>) {
        if uncovered == 0 {
            *best = (*best).min(depth);
            return;
        }
        if seen.get(&uncovered).is_some_and(|&d| d <= depth) {
            return;
        }
        seen.insert(uncovered, depth);
        match self.lower_bound(uncovered, below(self.sets.len())) {
            Some(lb) if depth + lb < *best => {}
            _ => return,
        }
        let pivot = bits(uncovered).min_by_key(|&e| self.covering[e].count_ones()).unwrap();
        let mut options: Vec<usize> = bits(self.covering[pivot]).collect();
        options.sort_by_key(|&s| std::cmp::Reverse((self.sets[s] & uncovered).count_ones()));
        for s in options {
            self.branch(uncovered & !self.sets[s], depth + 1, best, seen);
        }
    }

    /// Lexicographically first cover using at most `budget` sets, assuming no
    /// smaller cover exists.
    fn lex_first(&self, budget: usize) -> Option<Vec<usize>> {
        let mut picks = Vec::with_capacity(budget);
        let mut failed = HashMap::new();
        self.lex(self.all(), 0, budget, &mut picks, &mut failed).then_some(picks)
    }

    fn lex(
        &self,
        uncovered: u128,
        start: usize,
        budget: usize,
        picks: &mut Vec<usize>,
        failed: &mut HashMap<(u128, usize), usize>,
    ) -> bool {
        if uncovered == 0 {
            return true;
        }
        if budget == 0 || start >= self.sets.len() {
            return false;
        }
        if failed.get(&(uncovered, start)).is_some_and(|&b| b >= budget) {
            return false;
        }
        let avail = from(start) & below(self.sets.len());
        let feasible = matches!(self.lower_bound(uncovered, avail), Some(lb) if lb <= budget);
        if feasible {
            // some set covering each element must still be picked, so the next
            // pick cannot come after the last option of any element
            let limit =
                bits(uncovered).map(|e| 127 - (self.covering[e] & avail).leading_zeros() as usize).min().unwrap();
            for s in start..=limit {
                if self.sets[s] & uncovered == 0 {
                    continue;
                }
                picks.push(s);
                if self.lex(uncovered & !self.sets[s], s + 1, budget - 1, picks, failed) {
                    return true;
                }
                picks.pop();
            }
        }
        failed.insert((uncovered, start), budget);
        false
    }

    fn enumerate(&self) -> Vec<usize> {
        let target = self.all();
        let m = self.sets.len();
        for k in 0..=m {
            let mut combo: Vec<usize> = (0..k).collect();
            loop {
                let covered = combo.iter().fold(0u128, |acc, &s| acc | self.sets[s]);
                if covered & target == target {
                    return combo;
                }
                // next combination in lexicographic order
                let Some(i) = (0..k).rev().find(|&i| combo[i] < m - k + i) else { break };
                combo[i] += 1;
                for j in i + 1..k {
                    combo[j] = combo[j - 1] + 1;
                }
            }
        }
        unreachable!("the full family covers every element")
    }
}

struct VertexCover {
    n: usize,
    adj: Vec<u128>,
}

impl VertexCover {
    fn new(g: &Graph, cap: usize) -> Result<Self> {
        let cap = cap.min(HARD_CAP);
        if g.n() > cap {
            return Err(Error::ExceedsCap { size: g.n(), cap });
        }
        let adj = g.vertices().map(|v| g.neighbors(v).iter().fold(0u128, |m, &w| m | bit(w))).collect();
        Ok(VertexCover { n: g.n(), adj })
    }

    /// Greedy maximal matching size inside `alive`.
    fn matching_bound(&self, alive: u128) -> usize {
        let mut free = alive;
        let mut size = 0;
        for v in bits(alive) {
            if free & bit(v) == 0 {
                continue;
            }
            if let Some(w) = bits(self.adj[v] & free).next() {
                free &= !(bit(v) | bit(w));
                size += 1;
            }
        }
        size
    }

    fn min_size(&self) -> usize {
        let mut best = self.n;
        self.branch(below(self.n), 0, &mut best);
        best
    }

    fn branch(&self, alive: u128, depth: usize, best: &mut usize) {
        let Some((v, deg)) = bits(alive)
            .map(|v| (v, (self.adj[v] & alive).count_ones()))
            .max_by_key(|&(v, d)| (d, std::cmp::Reverse(v)))
        else {
            *best = (*best).min(depth);
            return;
        };
        if deg == 0 {
            *best = (*best).min(depth);
            return;
        }
        if depth + self.matching_bound(alive) >= *best {
            return;
        }
        self.branch(alive & !bit(v), depth + 1, best);
        let nbrs = self.adj[v] & alive;
        self.branch(alive & !nbrs & !bit(v), depth + nbrs.count_ones() as usize, best);
    }

    /// Decides vertices in increasing order, including before excluding.
    fn lex_first(&self, budget: usize) -> Option<Vec<usize>> {
        let mut picks = Vec::new();
        self.lex(0, 0, 0, budget, &mut picks).then_some(picks)
    }

    fn lex(&self, i: usize, cover: u128, excluded: u128, budget: usize, picks: &mut Vec<usize>) -> bool {
        if i == self.n {
            return true;
        }
        let undecided = from(i) & below(self.n);
        let forced = bits(excluded).fold(0u128, |m, x| m | self.adj[x]) & undecided;
        let rest = undecided & !forced;
        if forced.count_ones() as usize + self.matching_bound(rest) > budget {
            return false;
        }
        let open = self.adj[i] & !cover;
        if open != 0 && budget > 0 {
            picks.push(i);
            if self.lex(i + 1, cover | bit(i), excluded, budget - 1, picks) {
                return true;
            }
            picks.pop();
        }
        // excluding needs every neighbour in the cover, now or later
        if forced & bit(i) == 0 && self.adj[i] & excluded == 0 {
            return self.lex(i + 1, cover, excluded | bit(i), budget, picks);
        }
        false
    }

    fn enumerate(&self) -> Vec<usize> {
        let edges: Vec<(usize, usize)> =
            (0..self.n).flat_map(|u| bits(self.adj[u] & from(u + 1)).map(move |v| (u, v))).collect();
        for k in 0..=self.n {
            let mut combo: Vec<usize> = (0..k).collect();
            loop {
                let mask = combo.iter().fold(0u128, |m, &v| m | bit(v));
                if edges.iter().all(|&(u, v)| mask & (bit(u) | bit(v)) != 0) {
                    return combo;
                }
                let Some(i) = (0..k).rev().find(|&i| combo[i] < self.n - k + i) else { break };
                combo[i] += 1;
                for j in i + 1..k {
                    combo[j] = combo[j - 1] + 1;
                }
            }
        }
        unreachable!("the full vertex set is a cover")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::families;

    #[test]
    fn mds_examples() {
        assert_eq!(mds_exact(&families::complete(5)).unwrap(), VertexSet::from([0]));
        assert_eq!(mds_exact(&families::cycle(6)).unwrap().len(), 2);
        let p7 = mds_exact(&families::path(7)).unwrap();
        assert_eq!(p7, VertexSet::from([0, 2, 5]));
        assert_eq!(mds_exact_enum(&families::path(7)).unwrap(), p7);
    }

    #[test]
    fn subset_examples() {
        let c6 = families::cycle(6);
        let empty = DominationInstance::restricted(&c6, VertexSet::new()).unwrap();
        assert!(mds_subset_exact(&empty).unwrap().is_empty());

        let star = families::star(5);
        let inst = DominationInstance::restricted(&star, VertexSet::from([3])).unwrap();
        assert_eq!(mds_subset_exact(&inst).unwrap(), VertexSet::from([0]));

        let inst = DominationInstance::restricted(&c6, VertexSet::from([0, 3])).unwrap();
        assert_eq!(mds_subset_exact(&inst).unwrap().len(), 2);
    }

    #[test]
    fn infeasible_and_oversized_instances_are_errors() {
        let c6 = families::cycle(6);
        let inst = DominationInstance { graph: &c6, targets: VertexSet::from([0]), allowed: VertexSet::from([3]) };
        assert!(matches!(mds_subset_exact(&inst), Err(Error::Infeasible(0))));
        assert!(matches!(mds_exact(&families::path(30)), Err(Error::ExceedsCap { size: 30, cap: 25 })));
        assert!(matches!(mvc_exact_enum(&families::path(21)), Err(Error::ExceedsCap { .. })));
    }

    #[test]
    fn mvc_examples() {
        assert_eq!(mvc_exact(&families::path(3)).unwrap(), VertexSet::from([1]));
        assert_eq!(mvc_exact(&families::cycle(6)).unwrap(), VertexSet::from([0, 2, 4]));
        assert!(mvc_exact(&Graph::empty(4)).unwrap().is_empty());
        assert_eq!(mvc_exact_enum(&families::cycle(6)).unwrap(), VertexSet::from([0, 2, 4]));
    }

    #[test]
    fn verify_examples() {
        let c6 = families::cycle(6);
        let all = VertexSet::full(6);
        assert!(verify_dominating(&c6, &VertexSet::from([0, 3]), &all));
        assert!(!verify_dominating(&c6, &VertexSet::from([0]), &all));
        assert!(verify_dominating(&c6, &all, &all));
        assert!(verify_vertex_cover(&c6, &VertexSet::from([1, 3, 5])));
        assert!(!verify_vertex_cover(&c6, &VertexSet::from([1, 3])));
    }

    #[test]
    fn gamma_examples() {
        let star = families::star(5);
        assert_eq!(gamma(&star, 3).unwrap(), Gamma::One);
        assert_eq!(gamma(&star, 0).unwrap(), Gamma::AtLeastTwo);
        let c6 = families::cycle(6);
        assert!(c6.vertices().all(|v| gamma(&c6, v).unwrap() == Gamma::AtLeastTwo));
    }

    #[test]
    fn wide_instances_fit_in_masks() {
        // 100-vertex star: one dominator, 99-vertex cover
        let star = families::star(99);
        assert_eq!(mds_exact_with_cap(&star, 128).unwrap(), VertexSet::from([0]));
        assert_eq!(mvc_exact_with_cap(&star, 128).unwrap(), VertexSet::from([0]));
    }
}
