//! Graph families. Everything randomized takes an explicit seed and uses
//! ChaCha8, so output is a pure function of the arguments.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges_unchecked(n, &edges)
}

/// `C_n`; for `n < 3` this is the path on `n` vertices.
pub fn cycle(n: usize) -> Graph {
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    if n >= 3 {
        edges.push((n - 1, 0));
    }
    Graph::from_edges_unchecked(n, &edges)
}

/// `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    Graph::from_edges_unchecked(leaves + 1, &edges)
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::from_edges_unchecked(n, &edges)
}

/// `K_{a,b}`: sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
    Graph::from_edges_unchecked(a + b, &edges)
}

/// `k`-th power of `C_n`: `i` is adjacent to `i ± 1, …, i ± k`. For `k ≥ 3`
/// every cross-section has at least three vertices, so no local 1- or 2-cut
/// shows up once `n > 2k + 1`, however small the radius.
pub fn cycle_power(n: usize, k: usize) -> Graph {
    let edges: Vec<_> =
        (0..n).flat_map(|i| (1..=k.min(n / 2)).map(move |d| (i, (i + d) % n))).filter(|&(u, v)| u != v).collect();
    Graph::from_edges(n, &edges).expect("endpoints in range")
}

/// Random recursive tree: vertex `i` hangs off a uniform earlier vertex.
pub fn tree(n: usize, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let edges: Vec<_> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    Graph::from_edges_unchecked(n, &edges)
}

/// `K_k` on `0..k` plus, for each `v` in `1..k`, a pendant vertex `k + v − 1`
/// adjacent to exactly `0` and `v`. Vertex 0 alone dominates everything.
pub fn clique_pendant(k: usize) -> Graph {
    let mut edges: Vec<_> = (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))).collect();
    for v in 1..k {
        edges.push((0, k + v - 1));
        edges.push((v, k + v - 1));
    }
    Graph::from_edges_unchecked((2 * k).saturating_sub(1), &edges)
}

/// Random maximal outerplanar graph: a triangulated polygon on `0..n`.
pub fn outerplanar(n: usize, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let mut edges = cycle_edges(n);
    let mut stack = vec![(0..n).collect::<Vec<_>>()];
    while let Some(poly) = stack.pop() {
        if poly.len() < 4 {
            continue;
        }
        let (a, b) = random_diagonal(&mut rng, poly.len());
        edges.push((poly[a], poly[b]));
        let (left, right) = split(&poly, a, b);
        stack.push(left);
        stack.push(right);
    }
    Graph::from_edges_unchecked(n, &edges)
}

/// Random type-I graph on the reference cycle `0, 1, …, n−1`: chords are
/// added by recursive polygon subdivision, either as a single diagonal or as
/// a crossing pair `ab`, `cd` where `ac` and `bd` are cycle edges. Each chord
/// crosses at most one other.
pub fn type1(n: usize, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let mut edges = cycle_edges(n);
    let is_cycle_edge = |u: usize, v: usize| (u + 1) % n == v || (v + 1) % n == u;
    let mut stack = vec![(0..n).collect::<Vec<_>>()];
    while let Some(poly) = stack.pop() {
        let k = poly.len();
        if k < 4 || rng.gen_bool(0.2) {
            continue;
        }
        // sides of the polygon that are edges of the reference cycle
        let sides: Vec<usize> = (0..k).filter(|&i| is_cycle_edge(poly[i], poly[(i + 1) % k])).collect();
        let crossing = sides.iter().flat_map(|&i| sides.iter().map(move |&j| (i, j))).filter(|&(i, j)| {
            let gap = (j + k - i) % k;
            gap >= 2 && gap <= k - 2
        });
        let crossing: Vec<_> = crossing.collect();
        if !crossing.is_empty() && rng.gen_bool(0.4) {
            // sides (a, c) at i and (b, d) at j, polygon order a c … b d …
            let &(i, j) = crossing.choose(&mut rng).expect("nonempty");
            let (a, c, b, d) = (i, (i + 1) % k, j, (j + 1) % k);
            edges.push((poly[a], poly[b]));
            edges.push((poly[c], poly[d]));
            let (mid, _) = split(&poly, c, b);
            let (outer, _) = split(&poly, d, a);
            stack.push(mid);
            stack.push(outer);
        } else {
            let (a, b) = random_diagonal(&mut rng, k);
            edges.push((poly[a], poly[b]));
            let (left, right) = split(&poly, a, b);
            stack.push(left);
            stack.push(right);
        }
    }
    Graph::from_edges(n, &edges).expect("chords are new edges")
}

fn cycle_edges(n: usize) -> Vec<(Vertex, Vertex)> {
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    if n >= 3 {
        edges.push((n - 1, 0));
    }
    edges
}

/// Two polygon positions that are not neighbours on a polygon of size `k ≥ 4`.
fn random_diagonal(rng: &mut ChaCha8Rng, k: usize) -> (usize, usize) {
    let a = rng.gen_range(0..k);
    let b = (a + rng.gen_range(2..k - 1)) % k;
    (a.min(b), a.max(b))
}

/// The two sub-polygons on either side of the diagonal between positions `a`
/// and `b`: `a..=b` and `b..=a` (wrapping).
fn split(poly: &[usize], a: usize, b: usize) -> (Vec<usize>, Vec<usize>) {
    let k = poly.len();
    let walk = |from: usize, to: usize| {
        let mut out = vec![poly[from]];
        let mut i = from;
        while i != to {
            i = (i + 1) % k;
            out.push(poly[i]);
        }
        out
    };
    (walk(a, b), walk(b, a))
}

/// A fan or strip together with its corners.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub graph: Graph,
    /// Fan: `[centre, b, c]`. Strip: `[a, b, c, d]` with `ab`, `cd` the two
    /// reference-cycle edges between the sides.
    pub corners: Vec<Vertex>,
    pub kind: PieceKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PieceKind {
    Fan,
    Strip,
}

/// Fan of length `len`: centre 0 joined to every vertex of the path
/// `1, …, len + 2`. The reference cycle is `0, 1, …, len + 2`.
pub fn fan_piece(len: usize) -> Piece {
    let n = len + 3;
    let mut edges: Vec<_> = (2..n).map(|i| (i - 1, i)).collect();
    edges.extend((1..n).map(|i| (0, i)));
    Piece { graph: Graph::from_edges_unchecked(n, &edges), corners: vec![0, 1, n - 1], kind: PieceKind::Fan }
}

pub fn fan(len: usize) -> Graph {
    fan_piece(len).graph
}

/// Random strip between the sides `x_0 … x_p` (vertices `0..=p`) and
/// `y_0 … y_q` (vertices `p+1 ..= p+q+1`). The reference cycle is
/// `x_0 … x_p y_q … y_0`, closed by `ab = x_0y_0` and `cd = x_py_q`. Chords form
/// a monotone ladder, with an occasional twisted pair `x_iy_{j+1}`,
/// `x_{i+1}y_j`. Afterwards each of `ab`, `cd` is dropped with probability
/// one half when the minimum degree stays at least two.
pub fn strip_piece(p: usize, q: usize, seed: u64) -> Result<Piece> {
    if p < 1 || q < 1 {
        return Err(Error::InvalidArgument("strip sides need at least two vertices each".into()));
    }
    let mut rng = rng(seed);
    let x = |i: usize| i;
    let y = |j: usize| p + 1 + j;
    let mut edges: Vec<_> = (1..=p).map(|i| (x(i - 1), x(i))).collect();
    edges.extend((1..=q).map(|j| (y(j - 1), y(j))));
    let (ab, cd) = ((x(0), y(0)), (x(p), y(q)));
    edges.push(ab);
    edges.push(cd);
    let (mut i, mut j) = (0, 0);
    while (i, j) != (p, q) {
        let twist = i < p && j < q && rng.gen_bool(0.25);
        if twist {
            edges.push((x(i), y(j + 1)));
            edges.push((x(i + 1), y(j)));
            i += 1;
            j += 1;
            continue;
        }
        if j == q || (i < p && rng.gen_bool(0.5)) {
            i += 1;
        } else {
            j += 1;
        }
        if (i, j) != (p, q) {
            edges.push((x(i), y(j)));
        }
    }
    let n = p + q + 2;
    let mut g = Graph::from_edges(n, &edges)?;
    for cut in [ab, cd] {
        if rng.gen_bool(0.5) {
            let kept: Vec<_> = g.edges().into_iter().filter(|&e| e != cut).collect();
            let h = Graph::from_edges_unchecked(n, &kept);
            if h.vertices().all(|v| h.degree(v) >= 2) {
                g = h;
            }
        }
    }
    Ok(Piece { graph: g, corners: vec![x(0), y(0), x(p), y(q)], kind: PieceKind::Strip })
}

pub fn strip(p: usize, q: usize, seed: u64) -> Result<Graph> {
    strip_piece(p, q, seed).map(|s| s.graph)
}

/// Largest distance from a vertex of the piece to one of its corners.
pub fn strip_radius(piece: &Piece) -> Option<usize> {
    let g = &piece.graph;
    let mut best = 0;
    for &c in &piece.corners {
        for d in g.bfs_distances(c, None) {
            best = best.max(d?);
        }
    }
    Some(best)
}

/// A fan or strip glued onto base vertices: `at[i]` receives corner `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Attachment {
    pub piece: PieceSpec,
    pub at: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PieceSpec {
    Fan { length: usize },
    Strip { p: usize, q: usize, seed: u64 },
}

impl PieceSpec {
    pub fn build(&self) -> Result<Piece> {
        match *self {
            PieceSpec::Fan { length } => Ok(fan_piece(length)),
            PieceSpec::Strip { p, q, seed } => strip_piece(p, q, seed),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Corner {
    Centre,
    FanSide,
    Strip,
}

impl Corner {
    fn of(kind: PieceKind, index: usize) -> Corner {
        match (kind, index) {
            (PieceKind::Fan, 0) => Corner::Centre,
            (PieceKind::Fan, _) => Corner::FanSide,
            (PieceKind::Strip, _) => Corner::Strip,
        }
    }

    /// Two corners may share a base vertex when one is a fan centre and the
    /// other a fan centre or a strip corner.
    fn compatible(self, other: Corner) -> bool {
        (self == Corner::Centre && other != Corner::FanSide) || (other == Corner::Centre && self != Corner::FanSide)
    }
}

/// Adds the pieces to `base` by identifying corners with base vertices.
/// Attachments that break the identification rule are rejected.
pub fn augment(base: &Graph, attachments: &[Attachment]) -> Result<Graph> {
    let mut held: Vec<Vec<Corner>> = vec![Vec::new(); base.n()];
    let mut pieces = Vec::new();
    for att in attachments {
        let piece = att.piece.build()?;
        if att.at.len() != piece.corners.len() {
            return Err(Error::InvalidArgument(format!(
                "piece has {} corners but {} attachment vertices were given",
                piece.corners.len(),
                att.at.len()
            )));
        }
        for (k, &v) in att.at.iter().enumerate() {
            base.check_vertex(v)?;
            if att.at[..k].contains(&v) {
                return Err(Error::InvalidArgument(format!("two corners of one piece identified with vertex {v}")));
            }
            let corner = Corner::of(piece.kind, k);
            if !held[v].iter().all(|h| h.compatible(corner)) {
                return Err(Error::InvalidArgument(format!(
                    "vertex {v} would hold two corners that are not a fan centre plus a fan centre or strip corner"
                )));
            }
            held[v].push(corner);
        }
        pieces.push((piece, &att.at));
    }
    let mut n = base.n();
    let mut edges = base.edges();
    for (piece, at) in pieces {
        let mut id = vec![usize::MAX; piece.graph.n()];
        for (&c, &v) in piece.corners.iter().zip(at.iter()) {
            id[c] = v;
        }
        for slot in id.iter_mut().filter(|s| **s == usize::MAX) {
            *slot = n;
            n += 1;
        }
        edges.extend(piece.graph.edges().into_iter().map(|(a, b)| (id[a], id[b])));
    }
    Graph::from_edges(n, &edges)
}

/// Random augmentation: a random tree on `base_n` vertices plus up to
/// `pieces` fans and strips of random sizes, with corners placed so that the
/// identification rule holds.
pub fn augmentation(base_n: usize, pieces: usize, seed: u64) -> Result<Graph> {
    if base_n < 4 {
        return Err(Error::InvalidArgument("augmentation base needs at least 4 vertices".into()));
    }
    let mut rng = rng(seed);
    let base = tree(base_n, rng.gen());
    let mut held: Vec<Vec<Corner>> = vec![Vec::new(); base_n];
    let mut attachments = Vec::new();
    for _ in 0..pieces {
        let spec = if rng.gen_bool(0.5) {
            PieceSpec::Fan { length: rng.gen_range(1..=4) }
        } else {
            PieceSpec::Strip { p: rng.gen_range(1..=3), q: rng.gen_range(1..=3), seed: rng.gen() }
        };
        let kind = match spec {
            PieceSpec::Fan { .. } => PieceKind::Fan,
            PieceSpec::Strip { .. } => PieceKind::Strip,
        };
        let corners = if kind == PieceKind::Fan { 3 } else { 4 };
        let mut order: Vec<Vertex> = (0..base_n).collect();
        order.shuffle(&mut rng);
        let mut at = Vec::with_capacity(corners);
        for k in 0..corners {
            let corner = Corner::of(kind, k);
            if let Some(v) =
                order.iter().copied().find(|&v| !at.contains(&v) && held[v].iter().all(|h| h.compatible(corner)))
            {
                at.push(v);
            }
        }
        if at.len() < corners {
            continue;
        }
        for (k, &v) in at.iter().enumerate() {
            held[v].push(Corner::of(kind, k));
        }
        attachments.push(Attachment { piece: spec, at });
    }
    augment(&base, &attachments)
}

/// `G(n, p)` samples until one has no `K_{2,t}` minor.
pub fn random_filtered(t: usize, n: usize, p: f64, seed: u64) -> Result<Graph> {
    const BUDGET: usize = 2000;
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidArgument(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = rng(seed);
    for _ in 0..BUDGET {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
        let g = Graph::from_edges_unchecked(n, &edges);
        if super::minor::contains_k2t_minor(&g, t)?.is_none() {
            return Ok(g);
        }
    }
    Err(Error::Exhausted(BUDGET))
}
