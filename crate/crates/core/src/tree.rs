//! Complete binary trees addressed by level-order index.
//!
//! The root has index 0 and depth 1; the children of `m` are `2m + 1` and
//! `2m + 2`. Nothing is materialized: all queries are index arithmetic.

use std::fmt;

use crate::error::{Error, Result};

/// A node of a complete binary tree, identified by its level-order index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeNode(pub u64);

impl TreeNode {
    pub const ROOT: TreeNode = TreeNode(0);

    pub fn index(self) -> u64 {
        self.0
    }

    /// Depth with the root at depth 1.
    pub fn depth(self) -> u32 {
        64 - (self.0 + 1).leading_zeros()
    }

    pub fn is_root(self) -> bool {
        self.0 == 0
    }

    pub fn parent(self) -> Option<TreeNode> {
        if self.0 == 0 {
            None
        } else {
            Some(TreeNode((self.0 - 1) / 2))
        }
    }

    /// Whether this node is the left child of its parent.
    pub fn is_left_child(self) -> bool {
        self.0 % 2 == 1
    }

    /// Reflexive ancestor relation.
    pub fn is_ancestor_of(self, other: TreeNode) -> bool {
        let (d, e) = (self.depth(), other.depth());
        if d > e {
            return false;
        }
        ((other.0 + 1) >> (e - d)) == self.0 + 1
    }

    /// The ancestor of `self` at depth `d` (`d <= self.depth()`).
    pub fn ancestor_at_depth(self, d: u32) -> Option<TreeNode> {
        let e = self.depth();
        if d == 0 || d > e {
            return None;
        }
        Some(TreeNode(((self.0 + 1) >> (e - d)) - 1))
    }
}

impl fmt::Display for TreeNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Free-function form of [`TreeNode::depth`].
pub fn depth_of(n: TreeNode) -> u32 {
    n.depth()
}

/// Free-function form of [`TreeNode::parent`].
pub fn parent(n: TreeNode) -> Option<TreeNode> {
    n.parent()
}

/// Free-function form of [`TreeNode::is_ancestor_of`].
pub fn is_ancestor(s: TreeNode, t: TreeNode) -> bool {
    s.is_ancestor_of(t)
}

/// The complete binary tree of a given depth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Tree {
    depth_p: u32,
}

impl Tree {
    /// Trees of depth 1 through 64 are addressable with 64-bit indices.
    pub fn new(depth_p: u32) -> Result<Self> {
        if depth_p == 0 || depth_p > 64 {
            return Err(Error::Domain(format!(
                "tree depth {depth_p} outside 1..=64"
            )));
        }
        Ok(Tree { depth_p })
    }

    pub fn depth(&self) -> u32 {
        self.depth_p
    }

    /// `2^p - 1`.
    pub fn node_count(&self) -> Result<u64> {
        node_count_for_depth(self.depth_p)
    }

    pub fn contains(&self, n: TreeNode) -> bool {
        n.depth() <= self.depth_p
    }

    pub fn is_leaf(&self, n: TreeNode) -> bool {
        n.depth() == self.depth_p
    }

    pub fn children(&self, n: TreeNode) -> Vec<TreeNode> {
        if n.depth() < self.depth_p {
            vec![TreeNode(2 * n.0 + 1), TreeNode(2 * n.0 + 2)]
        } else {
            Vec::new()
        }
    }

    /// Descendants of `s` at depth `d`, as a contiguous index range in
    /// increasing order.
    pub fn descendants_at_depth(
        &self,
        s: TreeNode,
        d: u32,
    ) -> Result<impl Iterator<Item = TreeNode> + Clone> {
        let ds = s.depth();
        if d < ds || d > self.depth_p {
            return Err(Error::Domain(format!(
                "depth {d} outside [{ds}, {}] for node {s}",
                self.depth_p
            )));
        }
        let shift = d - ds;
        let first = ((s.0 + 1) << shift) - 1;
        let count = 1u64 << shift;
        Ok((first..first + count).map(TreeNode))
    }

    /// All nodes in level order.
    pub fn nodes(&self) -> Result<impl Iterator<Item = TreeNode>> {
        Ok((0..self.node_count()?).map(TreeNode))
    }
}

/// `2^p - 1`, checked.
pub fn node_count_for_depth(depth_p: u32) -> Result<u64> {
    if depth_p == 64 {
        return Ok(u64::MAX);
    }
    1u64.checked_shl(depth_p)
        .map(|p| p - 1)
        .ok_or_else(|| Error::Overflow(format!("2^{depth_p} - 1 nodes")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn counts() {
        assert_eq!(Tree::new(3).unwrap().node_count().unwrap(), 7);
        assert_eq!(Tree::new(1).unwrap().node_count().unwrap(), 1);
        assert_eq!(Tree::new(8).unwrap().node_count().unwrap(), 255);
        assert_eq!(Tree::new(64).unwrap().node_count().unwrap(), u64::MAX);
        assert!(node_count_for_depth(65).is_err());
        assert!(Tree::new(0).is_err());
    }

    #[test]
    fn depth_and_parent() {
        assert_eq!(depth_of(TreeNode(0)), 1);
        assert_eq!(depth_of(TreeNode(1)), 2);
        assert_eq!(depth_of(TreeNode(6)), 3);
        assert_eq!(depth_of(TreeNode(7)), 4);
        assert_eq!(parent(TreeNode(5)), Some(TreeNode(2)));
        assert_eq!(parent(TreeNode(0)), None);
        assert_eq!(parent(TreeNode(1)), Some(TreeNode(0)));
    }

    #[test]
    fn children_and_leaves() {
        let t3 = Tree::new(3).unwrap();
        assert_eq!(t3.children(TreeNode(0)), vec![TreeNode(1), TreeNode(2)]);
        assert!(t3.children(TreeNode(3)).is_empty());
        let t8 = Tree::new(8).unwrap();
        assert_eq!(t8.children(TreeNode(2)), vec![TreeNode(5), TreeNode(6)]);
    }

    #[test]
    fn ancestry() {
        assert!(is_ancestor(TreeNode(0), TreeNode(6)));
        assert!(!is_ancestor(TreeNode(1), TreeNode(2)));
        assert!(is_ancestor(TreeNode(2), TreeNode(11)));
        assert!(is_ancestor(TreeNode(4), TreeNode(4)));
        assert!(!is_ancestor(TreeNode(11), TreeNode(2)));
        assert_eq!(TreeNode(11).ancestor_at_depth(2), Some(TreeNode(2)));
        assert_eq!(TreeNode(11).ancestor_at_depth(5), None);
    }

    #[test]
    fn descendants() {
        let t3 = Tree::new(3).unwrap();
        let d: Vec<_> = t3.descendants_at_depth(TreeNode(0), 3).unwrap().collect();
        assert_eq!(d, vec![TreeNode(3), TreeNode(4), TreeNode(5), TreeNode(6)]);
        let d: Vec<_> = t3.descendants_at_depth(TreeNode(1), 3).unwrap().collect();
        assert_eq!(d, vec![TreeNode(3), TreeNode(4)]);
        let d: Vec<_> = t3.descendants_at_depth(TreeNode(2), 2).unwrap().collect();
        assert_eq!(d, vec![TreeNode(2)]);
        assert!(t3.descendants_at_depth(TreeNode(2), 1).is_err());
        assert!(t3.descendants_at_depth(TreeNode(2), 4).is_err());
    }

    // Ancestry by walking parents, independent of the shift arithmetic.
    fn walk_ancestor(s: TreeNode, t: TreeNode) -> bool {
        let mut cur = Some(t);
        while let Some(n) = cur {
            if n == s {
                return true;
            }
            cur = n.parent();
        }
        false
    }

    #[test]
    fn ancestor_is_a_partial_order_up_to_depth_6() {
        let t = Tree::new(6).unwrap();
        let nodes: Vec<_> = t.nodes().unwrap().collect();
        for &a in &nodes {
            for &b in &nodes {
                assert_eq!(is_ancestor(a, b), walk_ancestor(a, b), "{a} {b}");
                if a != b && is_ancestor(a, b) {
                    assert!(!is_ancestor(b, a));
                }
                for &c in nodes.iter().step_by(5) {
                    if is_ancestor(a, b) && is_ancestor(b, c) {
                        assert!(is_ancestor(a, c));
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn parent_child_round_trip(idx in 1u64..(1 << 20)) {
            let n = TreeNode(idx);
            let t = Tree::new(21).unwrap();
            let p = n.parent().unwrap();
            prop_assert!(t.children(p).contains(&n));
            prop_assert_eq!(p.depth() + 1, n.depth());
        }

        #[test]
        fn descendant_count(idx in 0u64..(1 << 8), extra in 0u32..6) {
            let s = TreeNode(idx);
            let t = Tree::new(15).unwrap();
            let d = s.depth() + extra;
            let desc: Vec<_> = t.descendants_at_depth(s, d).unwrap().collect();
            prop_assert_eq!(desc.len() as u64, 1u64 << extra);
            prop_assert!(desc.iter().all(|&x| walk_ancestor(s, x) && x.depth() == d));
        }
    }
}
