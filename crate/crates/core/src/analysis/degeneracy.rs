use std::collections::BTreeSet;

use crate::construction::{LabeledGraph, VertexId};

/// Result of min-degree peeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Degeneracy {
    pub k: usize,
    /// Vertices in removal order.
    pub elimination_order: Vec<VertexId>,
    /// Current degree of each vertex at the moment it was removed, aligned
    /// with `elimination_order`.
    pub removal_degrees: Vec<usize>,
}

/// Repeatedly removes a vertex of minimum current degree, smallest id first,
/// and reports the largest degree seen at removal.
pub fn degeneracy(g: &LabeledGraph) -> Degeneracy {
    let n = g.num_vertices();
    let mut degree: Vec<usize> = g.vertex_ids().map(|v| g.degree(v)).collect();
    let max_degree = degree.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<BTreeSet<VertexId>> = vec![BTreeSet::new(); max_degree + 1];
    for v in g.vertex_ids() {
        buckets[degree[v as usize]].insert(v);
    }
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut removal_degrees = Vec::with_capacity(n);
    let mut k = 0;
    let mut low = 0;
    for _ in 0..n {
        while buckets[low].is_empty() {
            low += 1;
        }
        let v = buckets[low].pop_first().expect("non-empty bucket");
        removed[v as usize] = true;
        k = k.max(low);
        order.push(v);
        removal_degrees.push(low);
        for &w in g.neighbors(v) {
            if removed[w as usize] {
                continue;
            }
            let d = degree[w as usize];
            buckets[d].remove(&w);
            buckets[d - 1].insert(w);
            degree[w as usize] = d - 1;
        }
        low = low.saturating_sub(1);
    }
    Degeneracy {
        k,
        elimination_order: order,
        removal_degrees,
    }
}
