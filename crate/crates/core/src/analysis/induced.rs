use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::construction::{LabeledGraph, VertexId};

use super::Path;

/// Whether `p` is a path of `g` without chords: vertices distinct,
/// consecutive vertices adjacent, no other pair adjacent.
pub fn is_induced_path(g: &LabeledGraph, p: &Path) -> bool {
    let n = g.num_vertices();
    let mut position = HashMap::with_capacity(p.order());
    for (i, &v) in p.vertices().iter().enumerate() {
        if v as usize >= n || position.insert(v, i).is_some() {
            return false;
        }
    }
    for (i, &v) in p.vertices().iter().enumerate() {
        let mut on_path = 0;
        for w in g.neighbors(v) {
            if let Some(&j) = position.get(w) {
                if i.abs_diff(j) != 1 {
                    return false;
                }
                on_path += 1;
            }
        }
        let expected = usize::from(i > 0) + usize::from(i + 1 < p.order());
        if on_path != expected {
            return false;
        }
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStatus {
    /// Every induced path was enumerated.
    Exact,
    /// The extension budget ran out first.
    BudgetExhausted,
}

impl SearchStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SearchStatus::Exact => "exact",
            SearchStatus::BudgetExhausted => "budget_exhausted",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub best: Path,
    pub status: SearchStatus,
    /// Extension attempts made, counting each start vertex and each
    /// neighbor considered for extension.
    pub nodes_explored: u64,
}

/// Tracks, for every vertex, how many path vertices lie in its closed
/// neighborhood. A neighbor `w` of the path's last vertex extends the path
/// to an induced path iff that count is exactly 1.
struct ClosedCounts<'g> {
    g: &'g LabeledGraph,
    count: Vec<u32>,
}

impl<'g> ClosedCounts<'g> {
    fn new(g: &'g LabeledGraph) -> Self {
        ClosedCounts {
            g,
            count: vec![0; g.num_vertices()],
        }
    }

    fn push(&mut self, v: VertexId) {
        self.count[v as usize] += 1;
        for &w in self.g.neighbors(v) {
            self.count[w as usize] += 1;
        }
    }

    fn pop(&mut self, v: VertexId) {
        self.count[v as usize] -= 1;
        for &w in self.g.neighbors(v) {
            self.count[w as usize] -= 1;
        }
    }

    fn extends(&self, w: VertexId) -> bool {
        self.count[w as usize] == 1
    }
}

/// Depth-first enumeration of all induced paths. Each path is reported
/// once: single vertices, and longer paths in the orientation whose first id
/// is smaller than its last. Extensions are tried in increasing id order.
pub fn for_each_induced_path<F>(
    g: &LabeledGraph,
    budget: Option<u64>,
    mut visit: F,
) -> (SearchStatus, u64)
where
    F: FnMut(&[VertexId]),
{
    let mut attempts: u64 = 0;
    let mut counts = ClosedCounts::new(g);
    let mut path: Vec<VertexId> = Vec::new();
    // next neighbor index to try for each path position
    let mut cursor: Vec<usize> = Vec::new();
    let over = |a: u64| budget.is_some_and(|b| a > b);

    for start in g.vertex_ids() {
        attempts += 1;
        if over(attempts) {
            return (SearchStatus::BudgetExhausted, attempts - 1);
        }
        path.push(start);
        cursor.push(0);
        counts.push(start);
        visit(&path);
        while let Some(&last) = path.last() {
            let row = g.neighbors(last);
            let top = cursor.len() - 1;
            let mut advanced = false;
            while cursor[top] < row.len() {
                let w = row[cursor[top]];
                cursor[top] += 1;
                attempts += 1;
                if over(attempts) {
                    return (SearchStatus::BudgetExhausted, attempts - 1);
                }
                if counts.extends(w) {
                    path.push(w);
                    cursor.push(0);
                    counts.push(w);
                    if start < w {
                        visit(&path);
                    }
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                counts.pop(last);
                path.pop();
                cursor.pop();
            }
        }
    }
    (SearchStatus::Exact, attempts)
}

/// Maximum-order induced path by exhaustive enumeration, bounded by
/// `budget` extension attempts. Among paths of maximum order the
/// lexicographically smallest vertex sequence wins.
pub fn longest_induced_path(g: &LabeledGraph, budget: Option<u64>) -> SearchOutcome {
    let mut best: Vec<VertexId> = Vec::new();
    let (status, nodes_explored) = for_each_induced_path(g, budget, |p| {
        if p.len() > best.len() || (p.len() == best.len() && p < best.as_slice()) {
            best.clear();
            best.extend_from_slice(p);
        }
    });
    SearchOutcome {
        best: Path(best),
        status,
        nodes_explored,
    }
}

/// Randomized greedy probe for long induced paths.
///
/// Each of `seeds` rounds starts at a uniformly random vertex and keeps
/// extending the path end, preferring candidates of maximum tree depth with
/// uniform tie-breaking; when stuck it turns around and extends the other
/// end. Deterministic for a given `rng_seed`.
pub fn heuristic_long_induced_path(g: &LabeledGraph, seeds: u32, rng_seed: u64) -> Path {
    let n = g.num_vertices();
    if n == 0 {
        return Path::default();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut counts = ClosedCounts::new(g);
    let mut best: Vec<VertexId> = Vec::new();
    let mut candidates = Vec::new();
    for _ in 0..seeds.max(1) {
        let start = rng.gen_range(0..n) as VertexId;
        let mut path = vec![start];
        counts.push(start);
        for _end in 0..2 {
            loop {
                let last = *path.last().expect("non-empty path");
                candidates.clear();
                let mut deepest = 0;
                for &w in g.neighbors(last) {
                    if !counts.extends(w) {
                        continue;
                    }
                    let d = g.vertex_depth(w);
                    if candidates.is_empty() || d > deepest {
                        candidates.clear();
                        deepest = d;
                    }
                    if d == deepest {
                        candidates.push(w);
                    }
                }
                let Some(&w) = candidates.choose(&mut rng) else {
                    break;
                };
                counts.push(w);
                path.push(w);
            }
            path.reverse();
        }
        if path.len() > best.len() {
            best = path.clone();
        }
        for &v in &path {
            counts.pop(v);
        }
    }
    if best.first() > best.last() {
        best.reverse();
    }
    Path(best)
}
