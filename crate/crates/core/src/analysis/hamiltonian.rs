use crate::construction::{vertex_id, LabeledGraph, Role, VertexId};
use crate::error::{Error, Result};
use crate::tree::{Tree, TreeNode};

use super::Path;

enum Step {
    Vertex(VertexId),
    /// Hamiltonian path of the child's subtree, `K0 -> K1` when forward.
    Subtree(TreeNode, bool),
}

fn vid(node: TreeNode, role: Role) -> VertexId {
    vertex_id(node, role).expect("node inside labeled tree")
}

fn walk(tree: Tree, s: TreeNode, forward: bool, out: &mut Vec<VertexId>) {
    let steps = if tree.is_leaf(s) {
        vec![
            Step::Vertex(vid(s, Role::K0)),
            Step::Vertex(vid(s, Role::K2)),
            Step::Vertex(vid(s, Role::K1)),
        ]
    } else {
        let (left, right) = (TreeNode(2 * s.0 + 1), TreeNode(2 * s.0 + 2));
        vec![
            Step::Vertex(vid(s, Role::K0)),
            Step::Vertex(vid(left, Role::X1)),
            Step::Vertex(vid(left, Role::Y1)),
            Step::Subtree(left, true),
            Step::Vertex(vid(left, Role::Y2)),
            Step::Vertex(vid(left, Role::X2)),
            Step::Vertex(vid(s, Role::K2)),
            Step::Vertex(vid(right, Role::X2)),
            Step::Vertex(vid(right, Role::Y2)),
            Step::Subtree(right, false),
            Step::Vertex(vid(right, Role::Y1)),
            Step::Vertex(vid(right, Role::X1)),
            Step::Vertex(vid(s, Role::K1)),
        ]
    };
    let mut run = |step: &Step| match *step {
        Step::Vertex(v) => out.push(v),
        Step::Subtree(c, dir) => walk(tree, c, dir == forward, out),
    };
    if forward {
        steps.iter().for_each(&mut run);
    } else {
        steps.iter().rev().for_each(&mut run);
    }
}

/// A Hamiltonian path of a blow-up (or of a ribbed graph, whose ribs it never
/// uses) running from `K0(root)` to `K1(root)`.
///
/// Each subtree's path enters at `K0` and leaves at `K1`; an internal node
/// threads its left subtree forward between `K0` and `K2`, and its right
/// subtree backward between `K2` and `K1`.
pub fn hamiltonian_path(g: &LabeledGraph) -> Result<Path> {
    let tree = g
        .tree()
        .ok_or_else(|| Error::Contract("hamiltonian_path needs a blow-up labeling".into()))?;
    let mut out = Vec::with_capacity(g.num_vertices());
    walk(tree, TreeNode::ROOT, true, &mut out);
    Ok(Path(out))
}

/// Whether `p` visits every vertex of `g` exactly once along edges of `g`.
pub fn verify_hamiltonian(g: &LabeledGraph, p: &Path) -> bool {
    let n = g.num_vertices();
    if p.order() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in p.vertices() {
        match seen.get_mut(v as usize) {
            Some(s) if !*s => *s = true,
            _ => return false,
        }
    }
    p.vertices().windows(2).all(|w| g.has_edge(w[0], w[1]))
}
