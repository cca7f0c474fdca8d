//! Tree blow-ups and the ribbed graphs built on top of them.
//!
//! Every tree node `s` owns a triangle `K0 K1 K2`. Each tree edge from `s` to
//! a child `c` becomes two subdivided paths:
//!
//! * `L(s, c) = u1 - X1(c) - Y1(c) - K0(c)` with `u1 = K0(s)` for a left child
//!   and `u1 = K1(s)` for a right child,
//! * `R(s, c) = K2(s) - X2(c) - Y2(c) - K1(c)`.
//!
//! So the edge of `K^s` used toward the parent (the top edge) is always
//! `K0 K1`, the left child hangs off `K0 K2` and the right child off `K1 K2`.
//! For each interval `(i, j)`, each node `s` at depth `i` and each descendant
//! `t` at depth `j`, the ribs `K0(s)X1(t)`, `K0(s)X2(t)`, `K1(s)Y1(t)`,
//! `K1(s)Y2(t)` are added.
//!
//! Vertex ids: the root's triangle is `0, 1, 2`; the node with level-order
//! index `m >= 1` owns `3 + 7(m - 1) ..= 3 + 7(m - 1) + 6` in role order.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::intervals::{build_intervals, h, IntervalSystem};
use crate::tree::{Tree, TreeNode};

pub type VertexId = u32;

/// Largest parameter `build_g` accepts unless a caller raises the limit.
pub const DEFAULT_MAX_ELL: u32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    K0,
    K1,
    K2,
    X1,
    X2,
    Y1,
    Y2,
}

impl Role {
    pub const ALL: [Role; 7] = [
        Role::K0,
        Role::K1,
        Role::K2,
        Role::X1,
        Role::X2,
        Role::Y1,
        Role::Y2,
    ];
    pub const CLIQUE: [Role; 3] = [Role::K0, Role::K1, Role::K2];

    pub fn offset(self) -> u32 {
        self as u32
    }

    pub fn from_offset(o: u32) -> Option<Role> {
        Role::ALL.get(o as usize).copied()
    }

    pub fn is_clique(self) -> bool {
        matches!(self, Role::K0 | Role::K1 | Role::K2)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Role::K0 => "K0",
            Role::K1 => "K1",
            Role::K2 => "K2",
            Role::X1 => "X1",
            Role::X2 => "X2",
            Role::Y1 => "Y1",
            Role::Y2 => "Y2",
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Role {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Role::ALL
            .into_iter()
            .find(|r| r.as_str() == s)
            .ok_or_else(|| Error::Domain(format!("unknown role {s:?}")))
    }
}

/// A vertex of a blow-up: the tree node it comes from, its role in that
/// node's bag, and its dense id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub node: TreeNode,
    pub role: Role,
    pub id: VertexId,
}

impl Vertex {
    pub fn depth(&self) -> u32 {
        self.node.depth()
    }
}

/// Id of `(node, role)` under the dense numbering, if it exists.
pub fn vertex_id(node: TreeNode, role: Role) -> Option<VertexId> {
    let raw = if node.is_root() {
        if !role.is_clique() {
            return None;
        }
        role.offset() as u64
    } else {
        3 + 7 * (node.index() - 1) + role.offset() as u64
    };
    u32::try_from(raw).ok()
}

/// Inverse of [`vertex_id`].
pub fn vertex_of_id(id: VertexId) -> Vertex {
    if id < 3 {
        Vertex {
            node: TreeNode::ROOT,
            role: Role::CLIQUE[id as usize],
            id,
        }
    } else {
        let rel = id - 3;
        let role = Role::from_offset(rel % 7).expect("offset below 7");
        Vertex {
            node: TreeNode(rel as u64 / 7 + 1),
            role,
            id,
        }
    }
}

/// `7 (2^p - 1) - 4`, checked to fit the id width.
pub fn blow_up_vertex_count(tree: Tree) -> Result<u32> {
    let nodes = tree.node_count()?;
    nodes
        .checked_mul(7)
        .and_then(|v| v.checked_sub(4))
        .and_then(|v| u32::try_from(v).ok())
        .ok_or_else(|| {
            Error::Resource(format!(
                "blow-up of a depth-{} tree exceeds the 32-bit vertex id space",
                tree.depth()
            ))
        })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeKind {
    Clique,
    Tree,
    Rib,
}

impl EdgeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EdgeKind::Clique => "clique",
            EdgeKind::Tree => "tree",
            EdgeKind::Rib => "rib",
        }
    }
}

impl fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EdgeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "clique" => Ok(EdgeKind::Clique),
            "tree" => Ok(EdgeKind::Tree),
            "rib" => Ok(EdgeKind::Rib),
            _ => Err(Error::Domain(format!("unknown edge kind {s:?}"))),
        }
    }
}

/// Immutable simple graph with per-edge kinds and, optionally, the tree
/// labeling of a blow-up.
///
/// Adjacency is stored in compressed rows; each row is sorted by neighbor id
/// and `kinds` runs parallel to `neighbors`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    ell: Option<u32>,
    tree: Option<Tree>,
    intervals: Option<IntervalSystem>,
    offsets: Vec<usize>,
    neighbors: Vec<VertexId>,
    kinds: Vec<EdgeKind>,
}

impl LabeledGraph {
    /// Builds an unlabeled graph from an undirected edge list.
    pub fn from_edges<I>(num_vertices: u32, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId, EdgeKind)>,
    {
        Self::assemble(None, None, num_vertices, edges.into_iter().collect())
    }

    /// Builds a graph carrying the blow-up labeling of `tree` (and of the
    /// ribbed graph for `ell`, when given). The vertex count is implied by the
    /// tree.
    pub fn from_labeled_edges<I>(ell: Option<u32>, tree: Tree, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId, EdgeKind)>,
    {
        let n = blow_up_vertex_count(tree)?;
        Self::assemble(ell, Some(tree), n, edges.into_iter().collect())
    }

    fn assemble(
        ell: Option<u32>,
        tree: Option<Tree>,
        n: u32,
        edges: Vec<(VertexId, VertexId, EdgeKind)>,
    ) -> Result<Self> {
        let intervals = match ell {
            Some(e) => Some(build_intervals(e)?),
            None => None,
        };
        let mut degree = vec![0usize; n as usize];
        for &(u, v, _) in &edges {
            if u >= n || v >= n {
                return Err(Error::Contract(format!(
                    "edge {u}-{v} leaves the vertex range 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::Contract(format!("loop at vertex {u}")));
            }
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n as usize + 1);
        offsets.push(0usize);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let total = *offsets.last().unwrap();
        let mut slots = vec![(0 as VertexId, EdgeKind::Clique); total];
        let mut fill = offsets[..n as usize].to_vec();
        for (u, v, k) in edges {
            slots[fill[u as usize]] = (v, k);
            fill[u as usize] += 1;
            slots[fill[v as usize]] = (u, k);
            fill[v as usize] += 1;
        }
        for u in 0..n as usize {
            let row = &mut slots[offsets[u]..offsets[u + 1]];
            row.sort_unstable_by_key(|&(v, _)| v);
            if let Some(w) = row.windows(2).find(|w| w[0].0 == w[1].0) {
                return Err(Error::Contract(format!("duplicate edge {u}-{}", w[0].0)));
            }
        }
        let (neighbors, kinds) = slots.into_iter().unzip();
        Ok(LabeledGraph {
            ell,
            tree,
            intervals,
            offsets,
            neighbors,
            kinds,
        })
    }

    pub fn ell(&self) -> Option<u32> {
        self.ell
    }

    pub fn tree(&self) -> Option<Tree> {
        self.tree
    }

    pub fn tree_depth(&self) -> Option<u32> {
        self.tree.map(|t| t.depth())
    }

    pub fn intervals(&self) -> Option<&IntervalSystem> {
        self.intervals.as_ref()
    }

    pub fn num_vertices(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn num_edges(&self) -> usize {
        self.neighbors.len() / 2
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + Clone {
        0..self.num_vertices() as VertexId
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        let v = v as usize;
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Neighbors paired with the kind of the connecting edge.
    pub fn neighbors_with_kinds(
        &self,
        v: VertexId,
    ) -> impl Iterator<Item = (VertexId, EdgeKind)> + '_ {
        let v = v as usize;
        let range = self.offsets[v]..self.offsets[v + 1];
        self.neighbors[range.clone()]
            .iter()
            .copied()
            .zip(self.kinds[range].iter().copied())
    }

    pub fn degree(&self, v: VertexId) -> usize {
        let v = v as usize;
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn edge_kind(&self, u: VertexId, v: VertexId) -> Option<EdgeKind> {
        if u as usize >= self.num_vertices() || v as usize >= self.num_vertices() {
            return None;
        }
        let row = self.neighbors(u);
        row.binary_search(&v)
            .ok()
            .map(|i| self.kinds[self.offsets[u as usize] + i])
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_kind(u, v).is_some()
    }

    /// Every edge once as `(u, v, kind)` with `u < v`, sorted by `(u, v)`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId, EdgeKind)> + '_ {
        self.vertex_ids().flat_map(move |u| {
            self.neighbors_with_kinds(u)
                .filter(move |&(v, _)| u < v)
                .map(move |(v, k)| (u, v, k))
        })
    }

    /// The tree labeling of `id`, when the graph is a blow-up.
    pub fn vertex(&self, id: VertexId) -> Option<Vertex> {
        self.tree?;
        ((id as usize) < self.num_vertices()).then(|| vertex_of_id(id))
    }

    /// Depth of the tree node owning `id`; 0 for unlabeled graphs.
    pub fn vertex_depth(&self, id: VertexId) -> u32 {
        self.vertex(id).map_or(0, |v| v.depth())
    }

    fn require_tree(&self) -> Result<Tree> {
        self.tree
            .ok_or_else(|| Error::Contract("graph carries no tree labeling".into()))
    }

    fn require_node(&self, s: TreeNode) -> Result<Tree> {
        let tree = self.require_tree()?;
        if !tree.contains(s) {
            return Err(Error::Domain(format!(
                "node {s} is not in the depth-{} tree",
                tree.depth()
            )));
        }
        Ok(tree)
    }

    /// `(K0(s), K1(s))`; for the root this is the root edge.
    pub fn top_edge(&self, s: TreeNode) -> Result<(Vertex, Vertex)> {
        self.require_node(s)?;
        let k0 = vertex_id(s, Role::K0).expect("node checked");
        let k1 = vertex_id(s, Role::K1).expect("node checked");
        Ok((vertex_of_id(k0), vertex_of_id(k1)))
    }

    /// The bag of `s` in role order: 3 vertices for the root, 7 otherwise.
    pub fn bag(&self, s: TreeNode) -> Result<Vec<Vertex>> {
        self.require_node(s)?;
        let roles: &[Role] = if s.is_root() {
            &Role::CLIQUE
        } else {
            &Role::ALL
        };
        Ok(roles
            .iter()
            .map(|&r| vertex_of_id(vertex_id(s, r).expect("node checked")))
            .collect())
    }

    /// Rank of the interval a rib spans, when `uv` is a rib of a ribbed graph.
    pub fn rib_rank(&self, u: VertexId, v: VertexId) -> Option<u32> {
        if self.edge_kind(u, v)? != EdgeKind::Rib {
            return None;
        }
        let sys = self.intervals.as_ref()?;
        let (a, b) = (self.vertex_depth(u) as u64, self.vertex_depth(v) as u64);
        sys.find(a.min(b), a.max(b)).map(|iv| iv.rank)
    }

    pub fn stats(&self) -> GraphStats {
        let mut by_kind = [0usize; 3];
        for (_, _, k) in self.edges() {
            by_kind[k as usize] += 1;
        }
        let mut histogram = BTreeMap::new();
        for v in self.vertex_ids() {
            *histogram.entry(self.degree(v)).or_insert(0usize) += 1;
        }
        GraphStats {
            vertices: self.num_vertices(),
            edges: self.num_edges(),
            clique_edges: by_kind[EdgeKind::Clique as usize],
            tree_edges: by_kind[EdgeKind::Tree as usize],
            rib_edges: by_kind[EdgeKind::Rib as usize],
            max_degree: histogram.keys().next_back().copied().unwrap_or(0),
            degree_histogram: histogram,
        }
    }
}

/// Exact size census of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphStats {
    pub vertices: usize,
    pub edges: usize,
    pub clique_edges: usize,
    pub tree_edges: usize,
    pub rib_edges: usize,
    pub max_degree: usize,
    /// degree -> number of vertices with that degree
    pub degree_histogram: BTreeMap<usize, usize>,
}

fn id(node: TreeNode, role: Role) -> VertexId {
    vertex_id(node, role).expect("id range checked before construction")
}

fn push_blow_up_edges(tree: Tree, edges: &mut Vec<(VertexId, VertexId, EdgeKind)>) -> Result<()> {
    for s in tree.nodes()? {
        let (k0, k1, k2) = (id(s, Role::K0), id(s, Role::K1), id(s, Role::K2));
        edges.push((k0, k1, EdgeKind::Clique));
        edges.push((k0, k2, EdgeKind::Clique));
        edges.push((k1, k2, EdgeKind::Clique));
        if let Some(p) = s.parent() {
            let u1 = if s.is_left_child() {
                id(p, Role::K0)
            } else {
                id(p, Role::K1)
            };
            let (x1, y1) = (id(s, Role::X1), id(s, Role::Y1));
            let (x2, y2) = (id(s, Role::X2), id(s, Role::Y2));
            edges.push((u1, x1, EdgeKind::Tree));
            edges.push((x1, y1, EdgeKind::Tree));
            edges.push((y1, k0, EdgeKind::Tree));
            edges.push((id(p, Role::K2), x2, EdgeKind::Tree));
            edges.push((x2, y2, EdgeKind::Tree));
            edges.push((y2, k1, EdgeKind::Tree));
        }
    }
    Ok(())
}

/// The blow-up of `tree`: triangles per node and two subdivided paths per
/// tree edge.
pub fn blow_up(tree: Tree) -> Result<LabeledGraph> {
    let n = blow_up_vertex_count(tree)?;
    let nodes = tree.node_count()? as usize;
    let mut edges = Vec::with_capacity(3 * nodes + 6 * nodes.saturating_sub(1));
    push_blow_up_edges(tree, &mut edges)?;
    debug_assert_eq!(blow_up_vertex_count(tree)?, n);
    LabeledGraph::from_labeled_edges(None, tree, edges)
}

/// Number of ribs the ribbed graph for `sys` on `tree` carries.
fn rib_count(sys: &IntervalSystem) -> Option<u64> {
    sys.intervals().iter().try_fold(0u64, |acc, iv| {
        let sources = 1u64.checked_shl(u32::try_from(iv.lo - 1).ok()?)?;
        let leaves = 1u64.checked_shl(u32::try_from(iv.hi - iv.lo).ok()?)?;
        acc.checked_add(sources.checked_mul(leaves)?.checked_mul(4)?)
    })
}

/// The ribbed graph `G_ell` with the default feasibility limit.
pub fn build_g(ell: u32) -> Result<LabeledGraph> {
    build_g_with_limit(ell, DEFAULT_MAX_ELL)
}

/// The ribbed graph `G_ell`, refusing parameters above `max_ell`. Size checks
/// happen before anything is allocated.
pub fn build_g_with_limit(ell: u32, max_ell: u32) -> Result<LabeledGraph> {
    if ell == 0 {
        return Err(Error::Domain("G_ell is defined for ell >= 1".into()));
    }
    if ell > max_ell {
        return Err(Error::Resource(format!(
            "G_{ell} is above the feasibility limit ell <= {max_ell}"
        )));
    }
    let depth = h(ell)?;
    let depth = u32::try_from(depth)
        .ok()
        .filter(|&d| d <= 64)
        .ok_or_else(|| {
            Error::Resource(format!("tree depth h({ell}) = {depth} is not addressable"))
        })?;
    let tree = Tree::new(depth)?;
    blow_up_vertex_count(tree)?;
    let sys = build_intervals(ell)?;
    let ribs = rib_count(&sys)
        .filter(|&r| r < u32::MAX as u64)
        .ok_or_else(|| Error::Resource(format!("G_{ell} has too many ribs")))?
        as usize;

    let nodes = tree.node_count()? as usize;
    let mut edges = Vec::with_capacity(3 * nodes + 6 * (nodes - 1) + ribs);
    push_blow_up_edges(tree, &mut edges)?;
    for iv in sys.intervals() {
        let (lo, hi) = (iv.lo as u32, iv.hi as u32);
        let first_source = (1u64 << (lo - 1)) - 1;
        for s in (first_source..2 * first_source + 1).map(TreeNode) {
            let (k0, k1) = (id(s, Role::K0), id(s, Role::K1));
            for t in tree.descendants_at_depth(s, hi)? {
                edges.push((k0, id(t, Role::X1), EdgeKind::Rib));
                edges.push((k0, id(t, Role::X2), EdgeKind::Rib));
                edges.push((k1, id(t, Role::Y1), EdgeKind::Rib));
                edges.push((k1, id(t, Role::Y2), EdgeKind::Rib));
            }
        }
    }
    LabeledGraph::from_labeled_edges(Some(ell), tree, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g1() -> LabeledGraph {
        build_g(1).unwrap()
    }

    #[test]
    fn id_scheme() {
        assert_eq!(vertex_id(TreeNode(0), Role::K2), Some(2));
        assert_eq!(vertex_id(TreeNode(0), Role::X1), None);
        assert_eq!(vertex_id(TreeNode(1), Role::K0), Some(3));
        assert_eq!(vertex_id(TreeNode(2), Role::Y2), Some(16));
        for id in 0..500 {
            let v = vertex_of_id(id);
            assert_eq!(vertex_id(v.node, v.role), Some(id));
        }
    }

    #[test]
    fn blow_up_sizes() {
        let t1 = blow_up(Tree::new(1).unwrap()).unwrap();
        assert_eq!((t1.num_vertices(), t1.num_edges()), (3, 3));
        let s = t1.stats();
        assert_eq!((s.clique_edges, s.tree_edges, s.rib_edges), (3, 0, 0));

        let t2 = blow_up(Tree::new(2).unwrap()).unwrap();
        assert_eq!((t2.num_vertices(), t2.num_edges()), (17, 21));
        let s = t2.stats();
        assert_eq!((s.clique_edges, s.tree_edges), (9, 12));

        let t3 = blow_up(Tree::new(3).unwrap()).unwrap().stats();
        assert_eq!(
            (t3.vertices, t3.clique_edges, t3.tree_edges, t3.rib_edges),
            (45, 21, 36, 0)
        );
    }

    #[test]
    fn top_edges_and_bags() {
        let g = build_g(1).unwrap();
        let ids = |p: (Vertex, Vertex)| (p.0.id, p.1.id);
        assert_eq!(ids(g.top_edge(TreeNode(0)).unwrap()), (0, 1));
        assert_eq!(ids(g.top_edge(TreeNode(1)).unwrap()), (3, 4));
        assert_eq!(ids(g.top_edge(TreeNode(2)).unwrap()), (10, 11));
        let bag_ids = |s| {
            g.bag(TreeNode(s))
                .unwrap()
                .iter()
                .map(|v| v.id)
                .collect::<Vec<_>>()
        };
        assert_eq!(bag_ids(0), vec![0, 1, 2]);
        assert_eq!(bag_ids(1), (3..=9).collect::<Vec<_>>());
        assert_eq!(bag_ids(2), (10..=16).collect::<Vec<_>>());
        assert!(matches!(g.bag(TreeNode(7)), Err(Error::Domain(_))));
        let plain = LabeledGraph::from_edges(2, [(0, 1, EdgeKind::Tree)]).unwrap();
        assert!(matches!(plain.bag(TreeNode(0)), Err(Error::Contract(_))));
    }

    #[test]
    fn g1_census_and_kinds() {
        let g = g1();
        let s = g.stats();
        assert_eq!(
            (
                s.vertices,
                s.edges,
                s.clique_edges,
                s.tree_edges,
                s.rib_edges
            ),
            (45, 73, 21, 36, 16)
        );
        let x1_of = |m| vertex_id(TreeNode(m), Role::X1).unwrap();
        assert_eq!(g.edge_kind(0, 1), Some(EdgeKind::Clique));
        assert_eq!(g.edge_kind(0, x1_of(1)), Some(EdgeKind::Tree));
        assert_eq!(g.edge_kind(0, x1_of(3)), Some(EdgeKind::Rib));
        assert_eq!(g.edge_kind(x1_of(3), 0), Some(EdgeKind::Rib));
        assert_eq!(g.edge_kind(0, 44), None);
        assert_eq!(g.edge_kind(0, 4500), None);
        assert_eq!(g.rib_rank(0, x1_of(3)), Some(1));
    }

    #[test]
    fn g2_rib_census() {
        let g = build_g(2).unwrap();
        let s = g.stats();
        assert_eq!(s.vertices, 1781);
        assert_eq!(s.rib_edges, 800);
        let mut per_interval = BTreeMap::new();
        for (u, v, k) in g.edges() {
            if k == EdgeKind::Rib {
                *per_interval
                    .entry((g.vertex_depth(u), g.vertex_depth(v)))
                    .or_insert(0) += 1;
            }
        }
        assert_eq!(
            per_interval,
            BTreeMap::from([((1, 8), 512), ((2, 4), 32), ((5, 7), 256)])
        );
    }

    #[test]
    fn feasibility_guard() {
        assert!(matches!(build_g(0), Err(Error::Domain(_))));
        assert!(matches!(build_g(4), Err(Error::Resource(_))));
        assert!(matches!(build_g_with_limit(4, 10), Err(Error::Resource(_))));
        assert!(matches!(
            blow_up(Tree::new(40).unwrap()),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn rejects_malformed_edge_lists() {
        assert!(LabeledGraph::from_edges(2, [(0, 0, EdgeKind::Tree)]).is_err());
        assert!(LabeledGraph::from_edges(2, [(0, 2, EdgeKind::Tree)]).is_err());
        assert!(
            LabeledGraph::from_edges(2, [(0, 1, EdgeKind::Tree), (1, 0, EdgeKind::Rib)]).is_err()
        );
    }

    #[test]
    fn structural_invariants_on_g2() {
        let g = build_g(2).unwrap();
        let h_values: Vec<u64> = (1..=2).map(|a| h(a).unwrap()).collect();
        for (u, v, k) in g.edges() {
            let (a, b) = (vertex_of_id(u), vertex_of_id(v));
            assert!(a.node.is_ancestor_of(b.node) || b.node.is_ancestor_of(a.node));
            let gap = a.depth().abs_diff(b.depth()) as u64;
            match k {
                EdgeKind::Clique => assert_eq!(a.node, b.node),
                EdgeKind::Tree => assert!(gap <= 1),
                EdgeKind::Rib => {
                    assert!(h_values.contains(&(gap + 1)));
                    assert!(g.rib_rank(u, v).is_some());
                }
            }
        }
        let blow = blow_up(g.tree().unwrap()).unwrap();
        for v in g.vertex_ids() {
            if !vertex_of_id(v).role.is_clique() {
                assert_eq!(blow.degree(v), 2);
                assert!((2..=3).contains(&g.degree(v)), "vertex {v}");
            }
        }
    }

    #[test]
    fn deterministic_builds() {
        assert_eq!(build_g(2).unwrap(), build_g(2).unwrap());
    }
}
