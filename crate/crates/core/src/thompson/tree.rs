use std::fmt;

use crate::diagram::{Event, StrandDiagram, Tail};
use crate::error::{Error, Result};
use crate::rational::{rat, Rational};

/// A finite rooted binary tree. Leaves are read left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Tree {
    Leaf,
    Node(Box<Tree>, Box<Tree>),
}

impl Tree {
    pub fn caret(left: Tree, right: Tree) -> Tree {
        Tree::Node(Box::new(left), Box::new(right))
    }

    pub fn leaves(&self) -> usize {
        match self {
            Tree::Leaf => 1,
            Tree::Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    pub fn carets(&self) -> usize {
        self.leaves() - 1
    }

    /// Splits that grow this tree from a single strand, in preorder.
    pub fn split_events(&self) -> Vec<Event> {
        fn walk(tree: &Tree, offset: usize, out: &mut Vec<Event>) {
            if let Tree::Node(l, r) = tree {
                out.push(Event::Split(offset + 1));
                walk(l, offset, out);
                walk(r, offset + l.leaves(), out);
            }
        }
        let mut out = Vec::new();
        walk(self, 0, &mut out);
        out
    }

    /// The merge-free `(1, leaves)` diagram of this tree.
    pub fn to_diagram(&self) -> StrandDiagram {
        StrandDiagram::from_events(1, self.split_events()).expect("tree words are valid")
    }

    /// Reads a merge-free `(1, k)` diagram as a tree.
    pub fn from_diagram(d: &StrandDiagram) -> Result<Tree> {
        if d.sources() != 1 || d.merge_count() != 0 {
            return Err(Error::Invariant(format!(
                "expected a merge-free (1, n) diagram, got ({}, {}) with {} merge(s)",
                d.sources(),
                d.sinks(),
                d.merge_count()
            )));
        }
        // Arena of nodes; `children[v]` is set once v has been split.
        let mut children: Vec<Option<(usize, usize)>> = vec![None];
        let mut leaves = vec![0usize];
        for event in d.to_slices().events() {
            let Event::Split(i) = *event else { unreachable!() };
            let v = leaves[i - 1];
            let (l, r) = (children.len(), children.len() + 1);
            children.extend([None, None]);
            children[v] = Some((l, r));
            leaves.splice(i - 1..i, [l, r]);
        }
        fn build(v: usize, children: &[Option<(usize, usize)>]) -> Tree {
            match children[v] {
                None => Tree::Leaf,
                Some((l, r)) => Tree::caret(build(l, children), build(r, children)),
            }
        }
        Ok(build(0, &children))
    }

    /// Breakpoints of the standard dyadic subdivision: `leaves() + 1` points
    /// from 0 to 1.
    pub fn partition(&self) -> Vec<Rational> {
        fn walk(tree: &Tree, lo: Rational, hi: Rational, out: &mut Vec<Rational>) {
            match tree {
                Tree::Leaf => out.push(hi),
                Tree::Node(l, r) => {
                    let mid = (&lo + &hi) / rat(2, 1);
                    walk(l, lo, mid.clone(), out);
                    walk(r, mid, hi, out);
                }
            }
        }
        let mut out = vec![rat(0, 1)];
        walk(self, rat(0, 1), rat(1, 1), &mut out);
        out
    }

    /// Smallest tree containing both: the common refinement.
    pub fn union(&self, other: &Tree) -> Tree {
        match (self, other) {
            (Tree::Leaf, t) | (t, Tree::Leaf) => t.clone(),
            (Tree::Node(a, b), Tree::Node(c, d)) => Tree::caret(a.union(c), b.union(d)),
        }
    }

    /// Every leaf split once more.
    pub fn split_leaves(&self) -> Tree {
        match self {
            Tree::Leaf => Tree::caret(Tree::Leaf, Tree::Leaf),
            Tree::Node(l, r) => Tree::caret(l.split_leaves(), r.split_leaves()),
        }
    }

    /// Splits the leaves for which `mask` yields true, in left-to-right order.
    pub(crate) fn split_leaves_where(&self, mask: &mut impl Iterator<Item = bool>) -> Tree {
        match self {
            Tree::Leaf if mask.next().unwrap_or(false) => Tree::caret(Tree::Leaf, Tree::Leaf),
            Tree::Leaf => Tree::Leaf,
            Tree::Node(l, r) => {
                let l = l.split_leaves_where(mask);
                Tree::caret(l, r.split_leaves_where(mask))
            }
        }
    }

    /// Leaf indices `i` such that leaves `i` and `i + 1` hang off one caret.
    pub fn exposed_carets(&self) -> Vec<usize> {
        fn walk(tree: &Tree, offset: usize, out: &mut Vec<usize>) {
            if let Tree::Node(l, r) = tree {
                if matches!((&**l, &**r), (Tree::Leaf, Tree::Leaf)) {
                    out.push(offset);
                } else {
                    walk(l, offset, out);
                    walk(r, offset + l.leaves(), out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, 0, &mut out);
        out
    }

    /// Removes the exposed caret whose left leaf is `index`.
    pub fn collapse(&self, index: usize) -> Tree {
        fn walk(tree: &Tree, index: usize) -> Tree {
            match tree {
                Tree::Leaf => Tree::Leaf,
                Tree::Node(l, r) => {
                    if index == 0 && matches!((&**l, &**r), (Tree::Leaf, Tree::Leaf)) {
                        return Tree::Leaf;
                    }
                    let n = l.leaves();
                    if index < n {
                        Tree::caret(walk(l, index), (**r).clone())
                    } else {
                        Tree::caret((**l).clone(), walk(r, index - n))
                    }
                }
            }
        }
        walk(self, index)
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Leaf => f.write_str("."),
            Tree::Node(l, r) => write!(f, "({l}{r})"),
        }
    }
}

/// A pair of trees with equal leaf counts; the first is the domain subdivision.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TreePair {
    pub domain: Tree,
    pub range: Tree,
}

impl TreePair {
    pub fn new(domain: Tree, range: Tree) -> Result<Self> {
        if domain.leaves() != range.leaves() {
            return Err(Error::Invariant(format!(
                "tree pair leaf counts differ: {} vs {}",
                domain.leaves(),
                range.leaves()
            )));
        }
        Ok(TreePair { domain, range })
    }

    /// Cancels carets that sit over the same leaves in both trees.
    pub fn reduced(&self) -> TreePair {
        let mut pair = self.clone();
        loop {
            let ours = pair.domain.exposed_carets();
            let theirs = pair.range.exposed_carets();
            match ours.iter().find(|i| theirs.contains(i)) {
                Some(&i) => {
                    pair = TreePair {
                        domain: pair.domain.collapse(i),
                        range: pair.range.collapse(i),
                    }
                }
                None => return pair,
            }
        }
    }
}

impl fmt::Display for TreePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.domain, self.range)
    }
}

/// Right-multiplies by splittings until no merge is left. Returns the
/// merge-free diagram and the tree of accumulated splits. Only sinks fed by a
/// merge are split: in a reduced diagram the last merge feeds a sink, so each
/// round cancels at least one merge.
pub(crate) fn split_until_merge_free(d: &StrandDiagram) -> Result<(StrandDiagram, Tree)> {
    let mut current = d.reduce();
    let mut range = Tree::Leaf;
    while current.merge_count() > 0 {
        let before = current.merge_count();
        let fed: Vec<bool> = current.sink_tails().iter().map(|t| matches!(t, Tail::MergeOut(_))).collect();
        let mut events = Vec::new();
        let mut at = 1;
        for &split in &fed {
            if split {
                events.push(Event::Split(at));
                at += 1;
            }
            at += 1;
        }
        let splitting = StrandDiagram::from_events(fed.len(), events).expect("splitting forest is valid");
        current = current.multiply(&splitting)?;
        range = range.split_leaves_where(&mut fed.iter().copied());
        if current.merge_count() >= before {
            return Err(Error::Invariant(format!(
                "merge count did not drop after splitting merge-fed sinks ({before} -> {})",
                current.merge_count()
            )));
        }
    }
    Ok((current, range))
}
