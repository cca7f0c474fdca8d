//! Construction and mechanical verification of the 2-degenerate ribbed
//! blow-ups of complete binary trees: Hamiltonian graphs whose induced paths
//! stay short.

pub mod analysis;
pub mod coloring;
pub mod construction;
pub mod error;
pub mod intervals;
pub mod tree;

pub use construction::{
    blow_up, build_g, build_g_with_limit, EdgeKind, LabeledGraph, Role, Vertex, VertexId,
};
pub use error::{Error, Result};
pub use intervals::{build_intervals, h, Interval, IntervalSystem};
pub use tree::{Tree, TreeNode};
