//! LOCAL-model simulator and constant-round approximations of minimum
//! dominating set and minimum vertex cover on `K_{2,t}`-minor-free graphs.
//!
//! Every algorithm in [`algos`] runs as a sequence of node programs through
//! [`local`], where a vertex's output is a function of its radius-`r` ball.
//! [`exact`] supplies lexicographically canonical optima for comparison and
//! for the residual brute-force phase, and [`gen`] produces the instances,
//! certified with an exhaustive `K_{2,t}` minor test.

pub mod algos;
pub mod cuts;
pub mod edgelist;
pub mod error;
pub mod exact;
pub mod gen;
pub mod graph;
pub mod harness;
pub mod local;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, Vertex, VertexSet};
