//! Vertex orderings and strong r-reachability.
//!
//! `y` is r-reachable from `x` under an ordering when `y` precedes `x` and
//! some path of at most `r` edges joins them with every internal vertex
//! after `x`. The maximum number of r-reachable vertices over all `x` bounds
//! the strong r-coloring number from above.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::construction::{vertex_of_id, EdgeKind, LabeledGraph, VertexId};
use crate::error::{Error, Result};

/// A bijection between vertex ids and positions `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ordering {
    order: Vec<VertexId>,
    position: Vec<u32>,
}

impl Ordering {
    /// Builds an ordering from vertices listed first to last.
    pub fn from_sequence(order: Vec<VertexId>) -> Result<Self> {
        let n = order.len();
        let mut position = vec![u32::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            match position.get_mut(v as usize) {
                Some(p) if *p == u32::MAX => *p = i as u32,
                _ => {
                    return Err(Error::Contract(format!(
                        "vertex {v} repeated or out of range"
                    )))
                }
            }
        }
        Ok(Ordering { order, position })
    }

    pub fn identity(n: usize) -> Self {
        Ordering {
            order: (0..n as VertexId).collect(),
            position: (0..n as u32).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn position(&self, v: VertexId) -> u32 {
        self.position[v as usize]
    }

    /// Vertices from first to last.
    pub fn sequence(&self) -> &[VertexId] {
        &self.order
    }
}

/// Orders vertices by (node depth, node index, role). Ancestor nodes are
/// strictly shallower, so every vertex comes after the vertices of all
/// ancestor bags.
pub fn canonical_sigma(g: &LabeledGraph) -> Result<Ordering> {
    if g.tree().is_none() {
        return Err(Error::Contract(
            "canonical_sigma needs a blow-up labeling".into(),
        ));
    }
    let mut order: Vec<VertexId> = g.vertex_ids().collect();
    order.sort_by_key(|&v| {
        let vx = vertex_of_id(v);
        (vx.depth(), vx.node, vx.role)
    });
    Ordering::from_sequence(order)
}

/// One r-reachable vertex together with its canonical witness: a shortest
/// qualifying path, whose second-to-last vertex `via` has the smallest id
/// among all choices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Reached {
    pub vertex: VertexId,
    /// Edges on the witness path.
    pub distance: u32,
    pub via: VertexId,
    pub last_edge: EdgeKind,
}

/// Reusable per-thread buffers for the layered search.
#[derive(Debug, Default)]
pub struct ReachScratch {
    seen: Vec<u32>,
    stamp: u32,
    layer: Vec<VertexId>,
    next: Vec<VertexId>,
}

impl ReachScratch {
    fn reset(&mut self, n: usize) {
        if self.seen.len() != n || self.stamp == u32::MAX {
            self.seen = vec![0; n];
            self.stamp = 0;
        }
        self.stamp += 1;
    }
}

/// All r-reachable vertices from `x` with canonical witnesses, sorted by id.
///
/// Breadth-first layering inside `{x} ∪ {z : z after x}`; vertices before `x`
/// adjacent to a layer `k < r` vertex are reachable at distance `k + 1`.
pub fn r_reachable_detailed(
    g: &LabeledGraph,
    ord: &Ordering,
    x: VertexId,
    r: u32,
    scratch: &mut ReachScratch,
) -> Vec<Reached> {
    scratch.reset(g.num_vertices());
    let stamp = scratch.stamp;
    let px = ord.position(x);
    let mut found: Vec<Reached> = Vec::new();
    scratch.layer.clear();
    scratch.layer.push(x);
    scratch.seen[x as usize] = stamp;
    for k in 0..r {
        scratch.layer.sort_unstable();
        scratch.next.clear();
        for &z in &scratch.layer {
            for (y, kind) in g.neighbors_with_kinds(z) {
                if scratch.seen[y as usize] == stamp {
                    continue;
                }
                scratch.seen[y as usize] = stamp;
                if ord.position(y) < px {
                    found.push(Reached {
                        vertex: y,
                        distance: k + 1,
                        via: z,
                        last_edge: kind,
                    });
                } else {
                    scratch.next.push(y);
                }
            }
        }
        std::mem::swap(&mut scratch.layer, &mut scratch.next);
        if scratch.layer.is_empty() {
            break;
        }
    }
    found.sort_unstable_by_key(|rc| rc.vertex);
    found
}

/// The set of vertices r-reachable from `x`.
pub fn r_reachable(
    g: &LabeledGraph,
    ord: &Ordering,
    x: VertexId,
    r: u32,
) -> Result<BTreeSet<VertexId>> {
    check_r(r)?;
    let mut scratch = ReachScratch::default();
    Ok(r_reachable_detailed(g, ord, x, r, &mut scratch)
        .into_iter()
        .map(|rc| rc.vertex)
        .collect())
}

fn check_r(r: u32) -> Result<()> {
    if r == 0 {
        return Err(Error::Domain(
            "reachability radius must be at least 1".into(),
        ));
    }
    Ok(())
}

/// Per-vertex reachable counts split by the kind of the witness's last edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ReachCount {
    pub total: usize,
    pub rib_final: usize,
    pub non_rib_final: usize,
}

/// Reachable counts for every vertex, indexed by id. Runs in parallel; the
/// result does not depend on the thread count.
pub fn reach_counts(g: &LabeledGraph, ord: &Ordering, r: u32) -> Result<Vec<ReachCount>> {
    check_r(r)?;
    let ids: Vec<VertexId> = g.vertex_ids().collect();
    Ok(ids
        .par_iter()
        .map_init(ReachScratch::default, |scratch, &x| {
            let found = r_reachable_detailed(g, ord, x, r, scratch);
            let rib_final = found
                .iter()
                .filter(|rc| rc.last_edge == EdgeKind::Rib)
                .count();
            ReachCount {
                total: found.len(),
                rib_final,
                non_rib_final: found.len() - rib_final,
            }
        })
        .collect())
}

/// Maximum reachable count and the smallest id attaining it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColValue {
    pub k: usize,
    pub witness: Option<VertexId>,
}

fn max_with_witness(counts: impl Iterator<Item = usize>) -> ColValue {
    let mut best = ColValue {
        k: 0,
        witness: None,
    };
    for (v, c) in counts.enumerate() {
        if best.witness.is_none() || c > best.k {
            best = ColValue {
                k: c,
                witness: Some(v as VertexId),
            };
        }
    }
    best
}

/// Upper bound on `col_r` given by `ord`.
pub fn col_r_value(g: &LabeledGraph, ord: &Ordering, r: u32) -> Result<ColValue> {
    let counts = reach_counts(g, ord, r)?;
    Ok(max_with_witness(counts.iter().map(|c| c.total)))
}

/// One row of [`check_linear_bound`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundRow {
    pub r: u32,
    pub value: usize,
    pub witness: Option<VertexId>,
    /// `2r + 8`
    pub bound: usize,
    pub max_non_rib_final: usize,
    pub max_rib_final: usize,
    /// `value > bound`
    pub flagged: bool,
    /// Vertices whose non-rib-final count exceeds 8 or rib-final count
    /// exceeds `2r`, smallest ids first (at most 16 listed).
    pub split_violations: Vec<VertexId>,
}

impl BoundRow {
    pub fn passes(&self) -> bool {
        !self.flagged && self.split_violations.is_empty()
    }
}

/// `2r + 8`.
pub fn linear_bound(r: u32) -> usize {
    2 * r as usize + 8
}

/// Measures `col_r` under [`canonical_sigma`] for `r = 1..=r_max` and
/// checks it against `2r + 8`, along with the per-vertex caps of 8 non-rib
/// final edges and `2r` rib final edges.
pub fn check_linear_bound(g: &LabeledGraph, r_max: u32) -> Result<Vec<BoundRow>> {
    check_r(r_max)?;
    let ord = canonical_sigma(g)?;
    (1..=r_max)
        .map(|r| {
            let counts = reach_counts(g, &ord, r)?;
            let best = max_with_witness(counts.iter().map(|c| c.total));
            let bound = linear_bound(r);
            let split_violations = counts
                .iter()
                .enumerate()
                .filter(|(_, c)| c.non_rib_final > 8 || c.rib_final > 2 * r as usize)
                .map(|(v, _)| v as VertexId)
                .take(16)
                .collect();
            Ok(BoundRow {
                r,
                value: best.k,
                witness: best.witness,
                bound,
                max_non_rib_final: counts.iter().map(|c| c.non_rib_final).max().unwrap_or(0),
                max_rib_final: counts.iter().map(|c| c.rib_final).max().unwrap_or(0),
                flagged: best.k > bound,
                split_violations,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::degeneracy;
    use crate::construction::{blow_up, build_g};
    use crate::tree::Tree;

    fn triangle() -> LabeledGraph {
        blow_up(Tree::new(1).unwrap()).unwrap()
    }

    #[test]
    fn canonical_order_shapes() {
        assert_eq!(canonical_sigma(&triangle()).unwrap(), Ordering::identity(3));
        let g = build_g(1).unwrap();
        let ord = canonical_sigma(&g).unwrap();
        assert_eq!(&ord.sequence()[..3], &[0, 1, 2]);
        let last_depth2 = g
            .vertex_ids()
            .filter(|&v| g.vertex_depth(v) == 2)
            .map(|v| ord.position(v))
            .max();
        let first_depth3 = g
            .vertex_ids()
            .filter(|&v| g.vertex_depth(v) == 3)
            .map(|v| ord.position(v))
            .min();
        assert!(last_depth2 < first_depth3);
        let plain = LabeledGraph::from_edges(1, []).unwrap();
        assert!(canonical_sigma(&plain).is_err());
    }

    #[test]
    fn ordering_validation() {
        assert!(Ordering::from_sequence(vec![1, 0, 2]).is_ok());
        assert!(Ordering::from_sequence(vec![1, 1, 2]).is_err());
        assert!(Ordering::from_sequence(vec![0, 3]).is_err());
    }

    #[test]
    fn small_reachability() {
        let g = triangle();
        let ord = Ordering::identity(3);
        assert!(r_reachable(&g, &ord, 0, 3).unwrap().is_empty());
        assert_eq!(r_reachable(&g, &ord, 2, 1).unwrap(), BTreeSet::from([0, 1]));
        assert!(r_reachable(&g, &ord, 2, 0).is_err());
        for r in 1..=3 {
            assert_eq!(col_r_value(&g, &ord, r).unwrap().k, 2);
        }
        let rows = check_linear_bound(&g, 3).unwrap();
        assert!(rows.iter().all(|row| row.value == 2 && row.passes()));
    }

    #[test]
    fn radius_one_is_back_degree() {
        let g = build_g(1).unwrap();
        let ord = canonical_sigma(&g).unwrap();
        for x in g.vertex_ids() {
            let direct: BTreeSet<_> = g
                .neighbors(x)
                .iter()
                .copied()
                .filter(|&y| ord.position(y) < ord.position(x))
                .collect();
            assert_eq!(r_reachable(&g, &ord, x, 1).unwrap(), direct);
        }
    }

    #[test]
    fn reverse_elimination_order_matches_degeneracy() {
        for g in [build_g(1).unwrap(), build_g(2).unwrap()] {
            let d = degeneracy(&g);
            let mut seq = d.elimination_order.clone();
            seq.reverse();
            let ord = Ordering::from_sequence(seq).unwrap();
            assert_eq!(col_r_value(&g, &ord, 1).unwrap().k, d.k);
            let canon = canonical_sigma(&g).unwrap();
            assert!(col_r_value(&g, &canon, 1).unwrap().k >= d.k);
        }
    }

    #[test]
    fn linear_bound_on_g1() {
        let rows = check_linear_bound(&build_g(1).unwrap(), 10).unwrap();
        assert_eq!(rows.len(), 10);
        for row in rows {
            assert!(row.passes(), "{row:?}");
            assert!(row.max_non_rib_final <= 8 && row.max_rib_final <= 2 * row.r as usize);
        }
    }
}
