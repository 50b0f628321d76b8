//! Elementary forests and their weightings.
//!
//! An elementary forest is one time step applied under every strand at once:
//! each component is a plain edge, a split caret (one strand in, two out) or
//! a merge caret (two in, one out).

use std::fmt;

use num_traits::{One, Zero};

use crate::diagram::{Event, SliceWord, StrandDiagram};
use crate::error::{Error, Result};
use crate::rational::{in_unit_interval, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Component {
    Edge,
    SplitCaret,
    MergeCaret,
}

impl Component {
    pub fn sources(self) -> usize {
        match self {
            Component::Edge | Component::SplitCaret => 1,
            Component::MergeCaret => 2,
        }
    }

    pub fn sinks(self) -> usize {
        match self {
            Component::Edge | Component::MergeCaret => 1,
            Component::SplitCaret => 2,
        }
    }

    pub fn is_caret(self) -> bool {
        self != Component::Edge
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementaryForest {
    components: Vec<Component>,
}

impl ElementaryForest {
    pub fn new(components: Vec<Component>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptyForest);
        }
        Ok(ElementaryForest { components })
    }

    /// `n` plain edges.
    pub fn edges(n: usize) -> Self {
        assert!(n >= 1);
        ElementaryForest {
            components: vec![Component::Edge; n],
        }
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn sources(&self) -> usize {
        self.components.iter().map(|c| c.sources()).sum()
    }

    pub fn sinks(&self) -> usize {
        self.components.iter().map(|c| c.sinks()).sum()
    }

    pub fn caret_count(&self) -> usize {
        self.components.iter().filter(|c| c.is_caret()).count()
    }

    pub fn is_splitting(&self) -> bool {
        !self.components.contains(&Component::MergeCaret)
    }

    /// Every merge caret undone: replaced by two parallel edges.
    pub fn phi_split(&self) -> ElementaryForest {
        let components = self
            .components
            .iter()
            .flat_map(|&c| match c {
                Component::MergeCaret => vec![Component::Edge, Component::Edge],
                other => vec![other],
            })
            .collect();
        ElementaryForest { components }
    }

    /// Every split caret undone: replaced by one edge.
    pub fn phi_merge(&self) -> ElementaryForest {
        let components = self
            .components
            .iter()
            .map(|&c| match c {
                Component::SplitCaret => Component::Edge,
                other => other,
            })
            .collect();
        ElementaryForest { components }
    }

    /// The merging forest `M` with `phi_split() * M == self`.
    pub fn merging_residual(&self) -> ElementaryForest {
        let components = self
            .components
            .iter()
            .flat_map(|&c| match c {
                Component::Edge => vec![Component::Edge],
                Component::SplitCaret => vec![Component::Edge, Component::Edge],
                Component::MergeCaret => vec![Component::MergeCaret],
            })
            .collect();
        ElementaryForest { components }
    }

    /// The splitting forest `S` with `phi_merge() * S == self`, and also the
    /// splitting part of the cube spanned by `self`: merge carets become splits.
    pub fn splitting_residual(&self) -> ElementaryForest {
        let components = self
            .components
            .iter()
            .map(|&c| match c {
                Component::Edge => Component::Edge,
                _ => Component::SplitCaret,
            })
            .collect();
        ElementaryForest { components }
    }

    /// One event per caret, left to right.
    pub fn to_slices(&self) -> SliceWord {
        let mut events = Vec::with_capacity(self.caret_count());
        let mut position = 1;
        for &c in &self.components {
            match c {
                Component::Edge => {}
                Component::SplitCaret => events.push(Event::Split(position)),
                Component::MergeCaret => events.push(Event::Merge(position)),
            }
            position += c.sinks();
        }
        SliceWord::new(self.sources(), events).expect("forest words are always valid")
    }

    pub fn to_diagram(&self) -> StrandDiagram {
        StrandDiagram::from_slices(&self.to_slices())
    }

    /// Positions (0-based, in source numbering) where each component starts.
    pub fn source_offsets(&self) -> Vec<usize> {
        offsets(self.components.iter().map(|c| c.sources()))
    }

    pub fn sink_offsets(&self) -> Vec<usize> {
        offsets(self.components.iter().map(|c| c.sinks()))
    }
}

fn offsets(widths: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut at = 0;
    widths
        .map(|w| {
            let start = at;
            at += w;
            start
        })
        .collect()
}

impl fmt::Display for ElementaryForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<&str> = self
            .components
            .iter()
            .map(|c| match c {
                Component::Edge => "E",
                Component::SplitCaret => "S",
                Component::MergeCaret => "M",
            })
            .collect();
        f.write_str(&tokens.join(""))
    }
}

/// An elementary forest whose carets carry weights in `[0, 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WeightedComponent {
    Edge,
    Split(Rational),
    Merge(Rational),
}

impl WeightedComponent {
    pub fn kind(&self) -> Component {
        match self {
            WeightedComponent::Edge => Component::Edge,
            WeightedComponent::Split(_) => Component::SplitCaret,
            WeightedComponent::Merge(_) => Component::MergeCaret,
        }
    }

    pub fn weight(&self) -> Option<&Rational> {
        match self {
            WeightedComponent::Edge => None,
            WeightedComponent::Split(w) | WeightedComponent::Merge(w) => Some(w),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightedForest {
    components: Vec<WeightedComponent>,
}

impl WeightedForest {
    pub fn new(components: Vec<WeightedComponent>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptyForest);
        }
        for w in components.iter().filter_map(|c| c.weight()) {
            if !in_unit_interval(w) {
                return Err(Error::WeightOutOfRange(w.to_string()));
            }
        }
        Ok(WeightedForest { components })
    }

    pub fn edges(n: usize) -> Self {
        assert!(n >= 1);
        WeightedForest {
            components: vec![WeightedComponent::Edge; n],
        }
    }

    /// Gives every caret of `forest` the weight at the same position in `weights`.
    pub fn with_weights(forest: &ElementaryForest, weights: &[Rational]) -> Result<Self> {
        if weights.len() != forest.caret_count() {
            return Err(Error::CoordinateArity {
                expected: forest.caret_count(),
                found: weights.len(),
            });
        }
        let mut weights = weights.iter().cloned();
        let components = forest
            .components()
            .iter()
            .map(|c| match c {
                Component::Edge => WeightedComponent::Edge,
                Component::SplitCaret => WeightedComponent::Split(weights.next().unwrap()),
                Component::MergeCaret => WeightedComponent::Merge(weights.next().unwrap()),
            })
            .collect();
        WeightedForest::new(components)
    }

    pub(crate) fn from_parts_unchecked(components: Vec<WeightedComponent>) -> Self {
        WeightedForest { components }
    }

    pub fn components(&self) -> &[WeightedComponent] {
        &self.components
    }

    pub fn forest(&self) -> ElementaryForest {
        ElementaryForest {
            components: self.components.iter().map(|c| c.kind()).collect(),
        }
    }

    pub fn weights(&self) -> Vec<Rational> {
        self.components
            .iter()
            .filter_map(|c| c.weight().cloned())
            .collect()
    }

    pub fn sources(&self) -> usize {
        self.components.iter().map(|c| c.kind().sources()).sum()
    }

    pub fn sinks(&self) -> usize {
        self.components.iter().map(|c| c.kind().sinks()).sum()
    }

    pub fn caret_count(&self) -> usize {
        self.components.iter().filter(|c| c.kind().is_caret()).count()
    }

    pub fn is_all_edges(&self) -> bool {
        self.caret_count() == 0
    }

    /// Drops weight-zero carets: a split becomes one edge, a merge two.
    pub fn without_zero_weights(&self) -> WeightedForest {
        let components = self
            .components
            .iter()
            .flat_map(|c| match c {
                WeightedComponent::Split(w) if w.is_zero() => vec![WeightedComponent::Edge],
                WeightedComponent::Merge(w) if w.is_zero() => {
                    vec![WeightedComponent::Edge, WeightedComponent::Edge]
                }
                other => vec![other.clone()],
            })
            .collect();
        WeightedForest { components }
    }

    pub fn has_extreme_weight(&self) -> bool {
        self.components
            .iter()
            .filter_map(|c| c.weight())
            .any(|w| w.is_zero() || w.is_one())
    }
}

impl fmt::Display for WeightedForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<String> = self
            .components
            .iter()
            .map(|c| match c {
                WeightedComponent::Edge => "E".to_string(),
                WeightedComponent::Split(w) => format!("S{w}"),
                WeightedComponent::Merge(w) => format!("M{w}"),
            })
            .collect();
        f.write_str(&tokens.join(","))
    }
}
