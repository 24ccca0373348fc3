//! Planar binary trees: decreasing trees of permutations and right combs.

use crate::composition::Composition;

/// A planar binary tree; nodes optionally carry a label.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BinaryTree {
    Empty,
    Node {
        label: Option<u32>,
        left: Box<BinaryTree>,
        right: Box<BinaryTree>,
    },
}

impl BinaryTree {
    pub fn node(label: Option<u32>, left: BinaryTree, right: BinaryTree) -> Self {
        BinaryTree::Node {
            label,
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, BinaryTree::Empty)
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            BinaryTree::Empty => 0,
            BinaryTree::Node { left, right, .. } => 1 + left.size() + right.size(),
        }
    }

    /// The same tree with all labels removed.
    pub fn shape(&self) -> BinaryTree {
        match self {
            BinaryTree::Empty => BinaryTree::Empty,
            BinaryTree::Node { left, right, .. } => {
                BinaryTree::node(None, left.shape(), right.shape())
            }
        }
    }

    /// Subtree sizes `h_v`, one per node in preorder.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.visit(&mut |t| out.push(t.size()));
        out
    }

    /// Right-subtree sizes `delta_v`, one per node in preorder.
    pub fn right_subtree_sizes(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.visit(&mut |t| {
            if let BinaryTree::Node { right, .. } = t {
                out.push(right.size());
            }
        });
        out
    }

    fn visit(&self, f: &mut impl FnMut(&BinaryTree)) {
        if let BinaryTree::Node { left, right, .. } = self {
            f(self);
            left.visit(f);
            right.visit(f);
        }
    }

    /// Strict decrease of labels from every node to its children.
    pub fn is_decreasing(&self) -> bool {
        match self {
            BinaryTree::Empty => true,
            BinaryTree::Node { label, left, right } => {
                let ok = |child: &BinaryTree| match (label, child) {
                    (_, BinaryTree::Empty) => true,
                    (Some(a), BinaryTree::Node { label: Some(b), .. }) => b < a,
                    _ => false,
                };
                ok(left) && ok(right) && left.is_decreasing() && right.is_decreasing()
            }
        }
    }
}

/// Decreasing tree: the maximum letter at the root, the factors to its left
/// and right as subtrees.
pub fn decreasing_tree(w: &[u32]) -> BinaryTree {
    match w.iter().enumerate().max_by_key(|&(_, &x)| x) {
        None => BinaryTree::Empty,
        Some((pos, &max)) => BinaryTree::node(
            Some(max),
            decreasing_tree(&w[..pos]),
            decreasing_tree(&w[pos + 1..]),
        ),
    }
}

/// The unlabeled right comb whose spine carries one node per part, the node
/// for part `i_k` having a left chain of `i_k - 1` nodes.
pub fn right_comb(shape: &Composition) -> BinaryTree {
    shape
        .parts()
        .iter()
        .rev()
        .fold(BinaryTree::Empty, |spine, &part| {
            let chain = (1..part).fold(BinaryTree::Empty, |acc, _| {
                BinaryTree::node(None, acc, BinaryTree::Empty)
            });
            BinaryTree::node(None, chain, spine)
        })
}
