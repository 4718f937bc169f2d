//! Full-information LOCAL model.
//!
//! With unbounded messages, `r` synchronous rounds are equivalent to every
//! vertex learning its radius-`r` ball, so a node program here is simply a
//! deterministic function of a [`NodeView`]. Multi-phase algorithms pass each
//! phase's outputs to the next as per-vertex inputs; the transcript adds up
//! the radii of consecutive phases.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{ball_unchecked, induced_unchecked, Graph, Vertex};

/// What a vertex knows after `radius` rounds: the subgraph induced by its
/// ball, labelled with original IDs, plus the inputs of every vertex in it.
///
/// Local indices follow increasing original ID, so comparing two views with
/// `==` is exactly label-isomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeView<I = ()> {
    root: usize,
    graph: Graph,
    labels: Vec<Vertex>,
    inputs: Vec<I>,
    radius: usize,
}

impl<I> NodeView<I> {
    /// Local index of the probed vertex.
    pub fn root(&self) -> usize {
        self.root
    }

    pub fn root_id(&self) -> Vertex {
        self.labels[self.root]
    }

    /// The induced ball on local indices `0..len`.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Original ID of a local index.
    pub fn label(&self, local: usize) -> Vertex {
        self.labels[local]
    }

    pub fn labels(&self) -> &[Vertex] {
        &self.labels
    }

    pub fn local(&self, id: Vertex) -> Option<usize> {
        self.labels.binary_search(&id).ok()
    }

    pub fn input(&self, local: usize) -> &I {
        &self.inputs[local]
    }

    pub fn inputs(&self) -> &[I] {
        &self.inputs
    }

    /// Labelled edge set in original IDs, for debugging and display.
    pub fn labelled_edges(&self) -> Vec<(Vertex, Vertex)> {
        self.graph.edges().into_iter().map(|(a, b)| (self.labels[a], self.labels[b])).collect()
    }
}

/// A deterministic LOCAL algorithm for one phase.
pub trait NodeProgram: Sync {
    type Input: Clone + Send + Sync;
    type Output: Send;

    fn radius(&self) -> usize;

    fn decide(&self, view: &NodeView<Self::Input>) -> Self::Output;
}

/// A node program backed by a closure.
pub struct FnProgram<I, O, F> {
    radius: usize,
    f: F,
    _marker: std::marker::PhantomData<fn(&I) -> O>,
}

impl<I, O, F> FnProgram<I, O, F>
where
    F: Fn(&NodeView<I>) -> O + Sync,
{
    pub fn new(radius: usize, f: F) -> Self {
        FnProgram { radius, f, _marker: std::marker::PhantomData }
    }
}

impl<I, O, F> NodeProgram for FnProgram<I, O, F>
where
    I: Clone + Send + Sync,
    O: Send,
    F: Fn(&NodeView<I>) -> O + Sync,
{
    type Input = I;
    type Output = O;

    fn radius(&self) -> usize {
        self.radius
    }

    fn decide(&self, view: &NodeView<I>) -> O {
        (self.f)(view)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundTranscript {
    pub rounds_used: usize,
    /// Total radius each vertex requested across all phases.
    pub per_vertex_radius: Vec<usize>,
    /// `(phase name, radius)` in execution order.
    pub phases: Vec<(String, usize)>,
}

impl RoundTranscript {
    pub fn empty(n: usize) -> Self {
        RoundTranscript { rounds_used: 0, per_vertex_radius: vec![0; n], phases: Vec::new() }
    }

    fn single(n: usize, radius: usize) -> Self {
        RoundTranscript { rounds_used: radius, per_vertex_radius: vec![radius; n], phases: Vec::new() }
    }

    /// Appends a phase that runs after everything recorded so far.
    pub fn then(&mut self, name: &str, other: &RoundTranscript) {
        for (acc, r) in self.per_vertex_radius.iter_mut().zip(&other.per_vertex_radius) {
            *acc += r;
        }
        self.rounds_used = self.per_vertex_radius.iter().copied().max().unwrap_or(0);
        self.phases.push((name.to_string(), other.rounds_used));
    }
}

pub fn collect_view(g: &Graph, v: Vertex, r: usize) -> Result<NodeView> {
    g.check_vertex(v)?;
    Ok(view_with_inputs(g, v, r, &vec![(); g.n()]))
}

pub fn view_with_inputs<I: Clone>(g: &Graph, v: Vertex, r: usize, inputs: &[I]) -> NodeView<I> {
    let members = ball_unchecked(g, v, r);
    let (graph, map) = induced_unchecked(g, &members);
    let labels = members.into_vec();
    NodeView {
        root: map[v].expect("root lies in its own ball"),
        inputs: labels.iter().map(|&w| inputs[w].clone()).collect(),
        graph,
        labels,
        radius: r,
    }
}

/// Runs a stateless program on every vertex.
pub fn run_local<P: NodeProgram<Input = ()>>(g: &Graph, prog: &P) -> (Vec<P::Output>, RoundTranscript) {
    run_phase(g, prog, &vec![(); g.n()])
}

/// Runs one phase; vertex `v` sees `inputs[w]` for every `w` in its ball.
pub fn run_phase<P: NodeProgram>(g: &Graph, prog: &P, inputs: &[P::Input]) -> (Vec<P::Output>, RoundTranscript) {
    assert_eq!(inputs.len(), g.n(), "one input per vertex");
    let r = prog.radius();
    let outputs = (0..g.n()).into_par_iter().map(|v| prog.decide(&view_with_inputs(g, v, r, inputs))).collect();
    (outputs, RoundTranscript::single(g.n(), r))
}

/// Sequential execution in a caller-chosen vertex order; outputs are still
/// indexed by vertex. Used to check order independence.
pub fn run_phase_in_order<P: NodeProgram>(
    g: &Graph,
    prog: &P,
    inputs: &[P::Input],
    order: &[Vertex],
) -> (Vec<P::Output>, RoundTranscript) {
    let r = prog.radius();
    let mut slots: Vec<Option<P::Output>> = (0..g.n()).map(|_| None).collect();
    for &v in order {
        slots[v] = Some(prog.decide(&view_with_inputs(g, v, r, inputs)));
    }
    let outputs = slots.into_iter().map(|o| o.expect("order covers every vertex")).collect();
    (outputs, RoundTranscript::single(g.n(), r))
}

/// Locality contract check: if the two views are label-isomorphic the outputs
/// must agree. Non-isomorphic views pass vacuously.
pub fn verify_locality<P>(prog: &P, g1: &Graph, v1: Vertex, g2: &Graph, v2: Vertex) -> bool
where
    P: NodeProgram<Input = ()>,
    P::Output: PartialEq,
{
    verify_locality_with(prog, g1, v1, &vec![(); g1.n()], g2, v2, &vec![(); g2.n()])
}

pub fn verify_locality_with<P>(
    prog: &P,
    g1: &Graph,
    v1: Vertex,
    inputs1: &[P::Input],
    g2: &Graph,
    v2: Vertex,
    inputs2: &[P::Input],
) -> bool
where
    P: NodeProgram,
    P::Input: PartialEq,
    P::Output: PartialEq,
{
    let a = view_with_inputs(g1, v1, prog.radius(), inputs1);
    let b = view_with_inputs(g2, v2, prog.radius(), inputs2);
    a != b || prog.decide(&a) == prog.decide(&b)
}
