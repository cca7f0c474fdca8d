//! Structural checks over constructed graphs.

mod degeneracy;
mod hamiltonian;
mod induced;
mod sources;

pub use degeneracy::{degeneracy, Degeneracy};
pub use hamiltonian::{hamiltonian_path, verify_hamiltonian};
pub use induced::{
    for_each_induced_path, heuristic_long_induced_path, is_induced_path, longest_induced_path,
    SearchOutcome, SearchStatus,
};
pub use sources::{q_special_sources, source_counts, sources, tau, tau_profile};

use crate::construction::VertexId;

/// An ordered sequence of distinct vertices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Path(pub Vec<VertexId>);

impl Path {
    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn first(&self) -> Option<VertexId> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<VertexId> {
        self.0.last().copied()
    }
}

impl From<Vec<VertexId>> for Path {
    fn from(v: Vec<VertexId>) -> Self {
        Path(v)
    }
}
