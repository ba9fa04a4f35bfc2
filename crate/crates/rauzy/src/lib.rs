//! Factor graphs of words (vertices: length-`k` factors, edges: length-`k+1`
//! factors), the follower construction, fork detection, and the shape
//! calculus that tracks how one-in-one-out-fork graphs evolve as `k` grows.
//!
//! Graph values are immutable and all operations are pure.

mod error;
mod graph;
mod shape;

pub use error::RauzyError;
pub use graph::{build_graph, Edge, Forks, RauzyGraph};
pub use shape::{shape_of, ForkShape};
