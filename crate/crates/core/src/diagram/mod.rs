//! Strand diagrams and the groupoid they form.
//!
//! A diagram is stored as its greedy-leftmost slice word, so two diagrams
//! compare equal exactly when they are the same planar graph with the same
//! boundary order. Equality up to reduction goes through
//! [`StrandDiagram::canonical_encoding`].
//!
//! ```
//! use thompson_strands::diagram::{Event, SliceWord, StrandDiagram};
//!
//! let caret = StrandDiagram::from_slices(&SliceWord::new(1, vec![Event::Split(1)]).unwrap());
//! let product = caret.multiply(&caret.invert()).unwrap();
//! assert_eq!(product, StrandDiagram::identity(1));
//! ```

mod graph;

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};

pub(crate) use graph::{Graph, Side, Tail};

/// One time slice: split strand `i`, or merge strands `i` and `i + 1`.
/// Indices are 1-based against the strand count at that moment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Event {
    Split(usize),
    Merge(usize),
}

impl Event {
    pub fn index(self) -> usize {
        match self {
            Event::Split(i) | Event::Merge(i) => i,
        }
    }

    /// The mirror image under reflection about the horizontal midline.
    pub fn reflect(self) -> Event {
        match self {
            Event::Split(i) => Event::Merge(i),
            Event::Merge(i) => Event::Split(i),
        }
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Event::Split(i) => write!(f, "S {i}"),
            Event::Merge(i) => write!(f, "M {i}"),
        }
    }
}

/// A time-sliced reading of a diagram: `sources` top strands, then events.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SliceWord {
    sources: usize,
    events: Vec<Event>,
}

impl SliceWord {
    pub fn new(sources: usize, events: Vec<Event>) -> Result<Self> {
        if sources == 0 {
            return Err(Error::NoSources);
        }
        let mut strands = sources;
        for (position, &event) in events.iter().enumerate() {
            strands = match event {
                Event::Split(i) if (1..=strands).contains(&i) => strands + 1,
                Event::Merge(i) if i >= 1 && i < strands => strands - 1,
                _ => {
                    return Err(Error::InvalidEvent {
                        position: position + 1,
                        event,
                        strands,
                    })
                }
            };
        }
        Ok(SliceWord { sources, events })
    }

    pub(crate) fn new_unchecked(sources: usize, events: Vec<Event>) -> Self {
        SliceWord { sources, events }
    }

    pub fn sources(&self) -> usize {
        self.sources
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    /// Strand count after the last event.
    pub fn sinks(&self) -> usize {
        self.events.iter().fold(self.sources, |n, e| match e {
            Event::Split(_) => n + 1,
            Event::Merge(_) => n - 1,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RedexKind {
    /// A merge feeding a split, replaced by two parallel strands.
    MergeSplit,
    /// A split whose two outputs feed one merge, replaced by one strand.
    SplitMerge,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub kind: RedexKind,
    pub vertices_after: usize,
}

/// Token sequence identifying a reduced diagram up to isotopy.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalEncoding {
    pub sources: usize,
    pub sinks: usize,
    pub events: Vec<Event>,
}

impl fmt::Display for CanonicalEncoding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{}):", self.sources, self.sinks)?;
        if self.events.is_empty() {
            return f.write_str("id");
        }
        for (k, e) in self.events.iter().enumerate() {
            if k > 0 {
                f.write_str(".")?;
            }
            match e {
                Event::Split(i) => write!(f, "S{i}")?,
                Event::Merge(i) => write!(f, "M{i}")?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrandDiagram {
    word: SliceWord,
}

impl StrandDiagram {
    pub fn from_slices(word: &SliceWord) -> Self {
        StrandDiagram {
            word: Graph::from_word(word).to_word(),
        }
    }

    /// Validates and builds in one go.
    pub fn from_events(sources: usize, events: Vec<Event>) -> Result<Self> {
        Ok(Self::from_slices(&SliceWord::new(sources, events)?))
    }

    /// `m` parallel strands.
    pub fn identity(m: usize) -> Self {
        assert!(m >= 1, "identity diagram needs at least one strand");
        StrandDiagram {
            word: SliceWord::new_unchecked(m, Vec::new()),
        }
    }

    pub fn to_slices(&self) -> &SliceWord {
        &self.word
    }

    pub fn sources(&self) -> usize {
        self.word.sources
    }

    pub fn sinks(&self) -> usize {
        self.word.sinks()
    }

    pub fn vertex_count(&self) -> usize {
        self.word.events.len()
    }

    pub fn split_count(&self) -> usize {
        self.word
            .events
            .iter()
            .filter(|e| matches!(e, Event::Split(_)))
            .count()
    }

    pub fn merge_count(&self) -> usize {
        self.vertex_count() - self.split_count()
    }

    pub fn is_identity(&self) -> bool {
        self.word.events.is_empty()
    }

    pub(crate) fn graph(&self) -> Graph {
        Graph::from_word(&self.word)
    }

    pub fn is_reduced(&self) -> bool {
        self.graph().redexes().is_empty()
    }

    /// Reduces with the deterministic redex order: the redex whose upper
    /// vertex comes first in greedy-leftmost order fires first.
    pub fn reduce(&self) -> StrandDiagram {
        self.reduce_traced().0
    }

    pub fn reduce_traced(&self) -> (StrandDiagram, Vec<ReductionStep>) {
        let mut graph = self.graph();
        let mut steps = Vec::new();
        while let Some(redex) = graph.first_redex() {
            graph.apply(redex);
            steps.push(ReductionStep {
                kind: kind_of(redex),
                vertices_after: graph.vertex_count(),
            });
        }
        (
            StrandDiagram {
                word: graph.to_word(),
            },
            steps,
        )
    }

    /// Reduces firing a uniformly random available redex at every step.
    pub fn reduce_random<R: Rng + ?Sized>(&self, rng: &mut R) -> StrandDiagram {
        let mut graph = self.graph();
        loop {
            let redexes = graph.redexes();
            if redexes.is_empty() {
                break;
            }
            let before = graph.vertex_count();
            graph.apply(redexes[rng.gen_range(0..redexes.len())]);
            debug_assert_eq!(graph.vertex_count() + 2, before);
        }
        StrandDiagram {
            word: graph.to_word(),
        }
    }

    /// Stacks `self` on top of `other` and reduces.
    pub fn multiply(&self, other: &StrandDiagram) -> Result<StrandDiagram> {
        Ok(self.stack(other)?.reduce())
    }

    /// Stacks without reducing.
    pub fn stack(&self, other: &StrandDiagram) -> Result<StrandDiagram> {
        if self.sinks() != other.sources() {
            return Err(Error::Composition {
                left_sinks: self.sinks(),
                right_sources: other.sources(),
            });
        }
        let mut events = self.word.events.clone();
        events.extend_from_slice(&other.word.events);
        Ok(StrandDiagram::from_slices(&SliceWord::new_unchecked(
            self.sources(),
            events,
        )))
    }

    /// Reflection about the horizontal midline, reduced.
    pub fn invert(&self) -> StrandDiagram {
        self.reflect().reduce()
    }

    pub(crate) fn reflect(&self) -> StrandDiagram {
        let events = self.word.events.iter().rev().map(|e| e.reflect()).collect();
        StrandDiagram::from_slices(&SliceWord::new_unchecked(self.sinks(), events))
    }

    pub fn canonical_encoding(&self) -> CanonicalEncoding {
        let reduced = self.reduce();
        CanonicalEncoding {
            sources: reduced.sources(),
            sinks: reduced.sinks(),
            events: reduced.word.events,
        }
    }

    pub fn equivalent(&self, other: &StrandDiagram) -> bool {
        self.canonical_encoding() == other.canonical_encoding()
    }

    /// For each sink, the vertex kind its wire comes out of.
    pub(crate) fn sink_tails(&self) -> Vec<Tail> {
        let graph = self.graph();
        graph
            .sink_wires
            .iter()
            .map(|&w| graph.wire(w).tail)
            .collect()
    }

    /// True when sinks `j` and `j + 1` (0-based) are the two outputs of one split.
    pub(crate) fn has_bottom_split_at(&self, j: usize) -> bool {
        let tails = self.sink_tails();
        matches!(
            (tails.get(j), tails.get(j + 1)),
            (Some(Tail::SplitOut(a, Side::Left)), Some(Tail::SplitOut(b, Side::Right))) if a == b
        )
    }

    /// True when sink `j` (0-based) is the output of a merge.
    pub(crate) fn has_bottom_merge_at(&self, j: usize) -> bool {
        matches!(self.sink_tails().get(j), Some(Tail::MergeOut(_)))
    }
}

fn kind_of(redex: graph::Redex) -> RedexKind {
    match redex {
        graph::Redex::MergeSplit { .. } => RedexKind::MergeSplit,
        graph::Redex::SplitMerge { .. } => RedexKind::SplitMerge,
    }
}
