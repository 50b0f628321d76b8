//! Wire-level representation of a strand diagram.
//!
//! Sources and sinks are boundary stubs, not vertices. Every wire has exactly
//! one tail (a source stub or a vertex output port) and one head (a sink stub
//! or a vertex input port). Removed wires and vertices leave `None` slots.

use super::{Event, SliceWord};

pub(crate) type WireId = usize;
pub(crate) type VertexId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Tail {
    Source(usize),
    SplitOut(VertexId, Side),
    MergeOut(VertexId),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Head {
    Sink(usize),
    SplitIn(VertexId),
    MergeIn(VertexId, Side),
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Wire {
    pub tail: Tail,
    pub head: Head,
}

#[derive(Clone, Copy, Debug)]
pub(crate) enum Node {
    Split {
        input: WireId,
        left: WireId,
        right: WireId,
    },
    Merge {
        left: WireId,
        right: WireId,
        output: WireId,
    },
}

/// A reduction site, named by its two vertices in top-to-bottom order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Redex {
    /// A merge whose output feeds a split: becomes two parallel wires.
    MergeSplit { merge: VertexId, split: VertexId },
    /// A split whose outputs feed one merge, left to left and right to right:
    /// becomes a single wire.
    SplitMerge { split: VertexId, merge: VertexId },
}

#[derive(Clone, Debug)]
pub(crate) struct Graph {
    pub source_wires: Vec<WireId>,
    pub sink_wires: Vec<WireId>,
    wires: Vec<Option<Wire>>,
    nodes: Vec<Option<Node>>,
}

impl Graph {
    /// Builds the graph of a word that has already been validated.
    pub fn from_word(word: &SliceWord) -> Self {
        let mut graph = Graph {
            source_wires: Vec::with_capacity(word.sources()),
            sink_wires: Vec::new(),
            wires: Vec::new(),
            nodes: Vec::new(),
        };
        // Heads are patched as soon as the consuming vertex appears; the
        // placeholder only survives on wires that end at a sink.
        let placeholder = Head::Sink(usize::MAX);
        let mut frontier = Vec::with_capacity(word.sources());
        for i in 0..word.sources() {
            let w = graph.push_wire(Tail::Source(i), placeholder);
            graph.source_wires.push(w);
            frontier.push(w);
        }
        for event in word.events() {
            match *event {
                Event::Split(i) => {
                    let v = graph.nodes.len();
                    let input = frontier[i - 1];
                    let left = graph.push_wire(Tail::SplitOut(v, Side::Left), placeholder);
                    let right = graph.push_wire(Tail::SplitOut(v, Side::Right), placeholder);
                    graph.wire_mut(input).head = Head::SplitIn(v);
                    graph.nodes.push(Some(Node::Split { input, left, right }));
                    frontier.splice(i - 1..i, [left, right]);
                }
                Event::Merge(i) => {
                    let v = graph.nodes.len();
                    let (left, right) = (frontier[i - 1], frontier[i]);
                    let output = graph.push_wire(Tail::MergeOut(v), placeholder);
                    graph.wire_mut(left).head = Head::MergeIn(v, Side::Left);
                    graph.wire_mut(right).head = Head::MergeIn(v, Side::Right);
                    graph.nodes.push(Some(Node::Merge {
                        left,
                        right,
                        output,
                    }));
                    frontier.splice(i - 1..i + 1, [output]);
                }
            }
        }
        for (j, &w) in frontier.iter().enumerate() {
            graph.wire_mut(w).head = Head::Sink(j);
        }
        graph.sink_wires = frontier;
        graph
    }

    fn push_wire(&mut self, tail: Tail, head: Head) -> WireId {
        self.wires.push(Some(Wire { tail, head }));
        self.wires.len() - 1
    }

    pub fn wire(&self, w: WireId) -> &Wire {
        self.wires[w].as_ref().expect("dangling wire id")
    }

    fn wire_mut(&mut self, w: WireId) -> &mut Wire {
        self.wires[w].as_mut().expect("dangling wire id")
    }

    pub fn node(&self, v: VertexId) -> &Node {
        self.nodes[v].as_ref().expect("dangling vertex id")
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.nodes
            .iter()
            .enumerate()
            .filter_map(|(v, n)| n.as_ref().map(|_| v))
    }

    pub fn vertex_count(&self) -> usize {
        self.nodes.iter().flatten().count()
    }

    /// The redex whose upper vertex is `v`, if any.
    pub fn redex_at(&self, v: VertexId) -> Option<Redex> {
        match *self.node(v) {
            Node::Merge { output, .. } => match self.wire(output).head {
                Head::SplitIn(split) => Some(Redex::MergeSplit { merge: v, split }),
                _ => None,
            },
            Node::Split { left, right, .. } => {
                match (self.wire(left).head, self.wire(right).head) {
                    (Head::MergeIn(a, Side::Left), Head::MergeIn(b, Side::Right)) if a == b => {
                        Some(Redex::SplitMerge { split: v, merge: a })
                    }
                    _ => None,
                }
            }
        }
    }

    pub fn redexes(&self) -> Vec<Redex> {
        self.vertex_ids().filter_map(|v| self.redex_at(v)).collect()
    }

    /// Points whatever consumed the removed wire at `head` to `wire` instead.
    fn retarget(&mut self, head: Head, wire: WireId) {
        match head {
            Head::Sink(j) => self.sink_wires[j] = wire,
            Head::SplitIn(x) => match self.nodes[x].as_mut() {
                Some(Node::Split { input, .. }) => *input = wire,
                _ => unreachable!("split head on a non-split vertex"),
            },
            Head::MergeIn(x, side) => match self.nodes[x].as_mut() {
                Some(Node::Merge { left, right, .. }) => match side {
                    Side::Left => *left = wire,
                    Side::Right => *right = wire,
                },
                _ => unreachable!("merge head on a non-merge vertex"),
            },
        }
    }

    pub fn apply(&mut self, redex: Redex) {
        match redex {
            Redex::MergeSplit { merge, split } => {
                let Node::Merge {
                    left: a,
                    right: b,
                    output: e,
                } = *self.node(merge)
                else {
                    unreachable!()
                };
                let Node::Split {
                    left: l, right: r, ..
                } = *self.node(split)
                else {
                    unreachable!()
                };
                let (l_head, r_head) = (self.wire(l).head, self.wire(r).head);
                self.wire_mut(a).head = l_head;
                self.retarget(l_head, a);
                self.wire_mut(b).head = r_head;
                self.retarget(r_head, b);
                for w in [e, l, r] {
                    self.wires[w] = None;
                }
                self.nodes[merge] = None;
                self.nodes[split] = None;
            }
            Redex::SplitMerge { split, merge } => {
                let Node::Split {
                    input: a,
                    left: l,
                    right: r,
                } = *self.node(split)
                else {
                    unreachable!()
                };
                let Node::Merge { output: c, .. } = *self.node(merge) else {
                    unreachable!()
                };
                let c_head = self.wire(c).head;
                self.wire_mut(a).head = c_head;
                self.retarget(c_head, a);
                for w in [l, r, c] {
                    self.wires[w] = None;
                }
                self.nodes[split] = None;
                self.nodes[merge] = None;
            }
        }
    }

    /// Greedy-leftmost linearization: repeatedly emit the ready vertex with
    /// the smallest leftmost strand index. Returns the events together with
    /// the vertex emitted at each step.
    pub fn linearize(&self) -> (Vec<Event>, Vec<VertexId>) {
        let mut frontier = self.source_wires.clone();
        let mut events = Vec::new();
        let mut order = Vec::new();
        'emit: loop {
            for p in 0..frontier.len() {
                match self.wire(frontier[p]).head {
                    Head::SplitIn(v) => {
                        let Node::Split { left, right, .. } = *self.node(v) else {
                            unreachable!()
                        };
                        frontier.splice(p..p + 1, [left, right]);
                        events.push(Event::Split(p + 1));
                        order.push(v);
                        continue 'emit;
                    }
                    Head::MergeIn(v, Side::Left) => {
                        let Node::Merge { right, output, .. } = *self.node(v) else {
                            unreachable!()
                        };
                        if frontier.get(p + 1) == Some(&right) {
                            frontier.splice(p..p + 2, [output]);
                            events.push(Event::Merge(p + 1));
                            order.push(v);
                            continue 'emit;
                        }
                    }
                    Head::MergeIn(_, Side::Right) | Head::Sink(_) => {}
                }
            }
            break;
        }
        debug_assert_eq!(frontier, self.sink_wires);
        (events, order)
    }

    /// The redex chosen by the deterministic strategy: the one whose upper
    /// vertex comes first in the greedy-leftmost order.
    pub fn first_redex(&self) -> Option<Redex> {
        let (_, order) = self.linearize();
        order.into_iter().find_map(|v| self.redex_at(v))
    }

    pub fn to_word(&self) -> SliceWord {
        let (events, _) = self.linearize();
        SliceWord::new_unchecked(self.source_wires.len(), events)
    }
}
