//! Sources, their ranks, the `tau` height profile, and Q-special sources.
//!
//! A node is a source when its depth is the lower end of some interval; its
//! rank is that interval's rank, and its subtree `B(s)` spans the interval's
//! depths. `tau` of a vertex is the minimum rank of a source whose subtree
//! has the vertex's node as an internal node, or `ell + 1` if none. Because
//! the tree is complete, every node at depth `d` with `lo < d < hi` for an
//! interval has an ancestor at depth `lo`, so `tau` is a function of depth
//! alone.

use std::collections::BTreeSet;

use crate::construction::{vertex_of_id, LabeledGraph, Role};
use crate::error::{Error, Result};
use crate::intervals::{build_intervals, h, IntervalSystem};
use crate::tree::TreeNode;

use super::{is_induced_path, Path};

fn tau_in(sys: &IntervalSystem, d: u64) -> u32 {
    sys.intervals()
        .iter()
        .filter(|iv| iv.contains_strictly(d))
        .map(|iv| iv.rank)
        .min()
        .unwrap_or(sys.ell() + 1)
}

/// `tau` at depth `d` of the tree for parameter `ell`.
pub fn tau(ell: u32, d: u64) -> Result<u32> {
    let top = h(ell)?;
    if d == 0 || d > top {
        return Err(Error::Domain(format!("depth {d} outside [1, {top}]")));
    }
    Ok(tau_in(&build_intervals(ell)?, d))
}

/// `tau` for every depth `1..=h(ell)`; index 0 is unused.
pub fn tau_profile(ell: u32) -> Result<Vec<u32>> {
    let sys = build_intervals(ell)?;
    let top = h(ell)?;
    Ok(std::iter::once(0)
        .chain((1..=top).map(|d| tau_in(&sys, d)))
        .collect())
}

const MAX_LISTED_SOURCES: u64 = 1 << 26;

/// Every source of the tree for `ell` with its rank, in level order.
pub fn sources(ell: u32) -> Result<Vec<(TreeNode, u32)>> {
    let sys = build_intervals(ell)?;
    let mut total: u64 = 0;
    for iv in sys.intervals() {
        let count = u32::try_from(iv.lo - 1)
            .ok()
            .and_then(|e| 1u64.checked_shl(e))
            .ok_or_else(|| Error::Resource(format!("too many sources at depth {}", iv.lo)))?;
        total = total.saturating_add(count);
    }
    if total > MAX_LISTED_SOURCES {
        return Err(Error::Resource(format!(
            "{total} sources is too many to list"
        )));
    }
    let mut out = Vec::with_capacity(total as usize);
    for iv in sys.intervals() {
        let first = (1u64 << (iv.lo - 1)) - 1;
        out.extend((first..2 * first + 1).map(|m| (TreeNode(m), iv.rank)));
    }
    Ok(out)
}

/// Number of sources per rank, as `(rank, count)` in increasing rank.
pub fn source_counts(ell: u32) -> Result<Vec<(u32, u64)>> {
    let sys = build_intervals(ell)?;
    let mut counts = vec![0u64; ell as usize + 1];
    for iv in sys.intervals() {
        let c = u32::try_from(iv.lo - 1)
            .ok()
            .and_then(|e| 1u64.checked_shl(e))
            .ok_or_else(|| Error::Overflow(format!("source count at depth {}", iv.lo)))?;
        counts[iv.rank as usize] = counts[iv.rank as usize]
            .checked_add(c)
            .ok_or_else(|| Error::Overflow("source count".into()))?;
    }
    Ok((1..=ell).map(|a| (a, counts[a as usize])).collect())
}

/// Sources `s` such that `q` touches the top edge of `K^s` and also visits
/// the bag of an internal node of `B(s)`.
pub fn q_special_sources(g: &LabeledGraph, q: &Path) -> Result<Vec<(TreeNode, u32)>> {
    let sys = g
        .intervals()
        .ok_or_else(|| Error::Contract("q_special_sources needs a ribbed graph".into()))?;
    if !is_induced_path(g, q) {
        return Err(Error::Contract(
            "q is not an induced path of the graph".into(),
        ));
    }
    let nodes: Vec<TreeNode> = q.vertices().iter().map(|&v| vertex_of_id(v).node).collect();
    let mut found = BTreeSet::new();
    for &u in q.vertices() {
        let top = vertex_of_id(u);
        if !matches!(top.role, Role::K0 | Role::K1) {
            continue;
        }
        let s = top.node;
        let Some(iv) = sys.starting_at(s.depth() as u64) else {
            continue;
        };
        let enters_interior = nodes
            .iter()
            .any(|&t| t != s && s.is_ancestor_of(t) && (t.depth() as u64) < iv.hi);
        if enters_interior {
            found.insert((s, iv.rank));
        }
    }
    Ok(found.into_iter().collect())
}
