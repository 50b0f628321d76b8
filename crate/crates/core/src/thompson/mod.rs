//! Thompson's group F as reduced `(1, 1)` strand diagrams.
//!
//! The product `a * b` stacks `a` on top of `b`. Reading the top tree of a
//! diagram as the domain subdivision, `a * b` is the homeomorphism that
//! applies `a` first. The generators are the usual tree pairs:
//!
//! * `x0`: `(.(..)) -> ((..).)`
//! * `x1`: `(.(.(..))) -> (.((..).))`

mod pl;
mod tree;

use std::fmt;
use std::str::FromStr;

pub use pl::{pl_compose, pl_eq, PlMap};
pub(crate) use tree::split_until_merge_free;
pub use tree::{Tree, TreePair};

use crate::diagram::StrandDiagram;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    X0,
    X0Inv,
    X1,
    X1Inv,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::X0, Letter::X0Inv, Letter::X1, Letter::X1Inv];

    pub fn inverse(self) -> Letter {
        match self {
            Letter::X0 => Letter::X0Inv,
            Letter::X0Inv => Letter::X0,
            Letter::X1 => Letter::X1Inv,
            Letter::X1Inv => Letter::X1,
        }
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" => Ok(Letter::X0),
            "A" => Ok(Letter::X0Inv),
            "b" => Ok(Letter::X1),
            "B" => Ok(Letter::X1Inv),
            other => Err(Error::parse(1, format!("unknown generator `{other}` (expected a, A, b or B)"))),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::X0 => "a",
            Letter::X0Inv => "A",
            Letter::X1 => "b",
            Letter::X1Inv => "B",
        })
    }
}

pub fn parse_word(text: &str) -> Result<Vec<Letter>> {
    text.split_whitespace().map(str::parse).collect()
}

/// An element of F, held as its reduced `(1, 1)` diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FElement {
    rep: StrandDiagram,
}

impl FElement {
    pub fn new(d: &StrandDiagram) -> Result<Self> {
        if d.sources() != 1 || d.sinks() != 1 {
            return Err(Error::Shape {
                expected_sources: "1".into(),
                expected_sinks: "1".into(),
                sources: d.sources(),
                sinks: d.sinks(),
            });
        }
        Ok(FElement { rep: d.reduce() })
    }

    pub fn identity() -> Self {
        FElement {
            rep: StrandDiagram::identity(1),
        }
    }

    pub fn generator(letter: Letter) -> Self {
        let leaf = Tree::Leaf;
        let vine = |t: Tree| Tree::caret(Tree::Leaf, t);
        let caret = || Tree::caret(Tree::Leaf, Tree::Leaf);
        let x0 = TreePair {
            domain: vine(caret()),
            range: Tree::caret(caret(), leaf.clone()),
        };
        let x1 = TreePair {
            domain: vine(vine(caret())),
            range: vine(Tree::caret(caret(), leaf)),
        };
        match letter {
            Letter::X0 => Self::from_tree_pair(&x0),
            Letter::X1 => Self::from_tree_pair(&x1),
            Letter::X0Inv => Self::from_tree_pair(&x0).inverse(),
            Letter::X1Inv => Self::from_tree_pair(&x1).inverse(),
        }
    }

    pub fn x0() -> Self {
        Self::generator(Letter::X0)
    }

    pub fn x1() -> Self {
        Self::generator(Letter::X1)
    }

    pub fn from_word(letters: &[Letter]) -> Self {
        letters
            .iter()
            .fold(Self::identity(), |acc, &l| acc.mul(&Self::generator(l)))
    }

    pub fn diagram(&self) -> &StrandDiagram {
        &self.rep
    }

    pub fn is_identity(&self) -> bool {
        self.rep.is_identity()
    }

    pub fn mul(&self, other: &FElement) -> FElement {
        FElement {
            rep: self.rep.multiply(&other.rep).expect("(1,1) diagrams compose"),
        }
    }

    pub fn inverse(&self) -> FElement {
        FElement {
            rep: self.rep.invert(),
        }
    }

    /// Domain tree on top (splits), range tree reflected underneath (merges).
    pub fn from_tree_pair(pair: &TreePair) -> Self {
        let top = pair.domain.to_diagram();
        let bottom = pair.range.to_diagram().invert();
        FElement {
            rep: top.multiply(&bottom).expect("equal leaf counts"),
        }
    }

    /// Splits every strand at the bottom until no merge survives; the
    /// merge-free result is the domain tree and the accumulated splitting is
    /// the range tree.
    pub fn to_tree_pair(&self) -> Result<TreePair> {
        let (merge_free, range) = split_until_merge_free(&self.rep)?;
        Ok(TreePair::new(Tree::from_diagram(&merge_free)?, range)?.reduced())
    }

    /// The homeomorphism sending the domain subdivision linearly onto the
    /// range subdivision.
    pub fn to_pl(&self) -> PlMap {
        let pair = self.to_tree_pair().expect("reduction terminates on (1,1) diagrams");
        let points = pair
            .domain
            .partition()
            .into_iter()
            .zip(pair.range.partition())
            .collect();
        PlMap::new(points).expect("tree pairs give elements of F")
    }
}

impl fmt::Display for FElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep.canonical_encoding())
    }
}
