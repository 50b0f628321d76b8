//! Seeded samplers for tests and exploration. Every function takes the RNG
//! explicitly; nothing reads global state.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::diagram::{Event, StrandDiagram};
use crate::forest::{Component, ElementaryForest, WeightedForest};
use crate::generalized::GeneralizedStrandDiagram;
use crate::rational::{int, rat, Rational};
use crate::stein::{ComplexVertex, Cube, SignedForest};
use crate::thompson::Letter;

/// Up to `max_events` random splits and merges on `sources` strands. The
/// result is usually far from reduced.
pub fn diagram_from<R: Rng + ?Sized>(rng: &mut R, sources: usize, max_events: usize) -> StrandDiagram {
    let count = rng.gen_range(0..=max_events);
    let mut strands = sources;
    let mut events = Vec::with_capacity(count);
    for _ in 0..count {
        if strands >= 2 && rng.gen_bool(0.5) {
            events.push(Event::Merge(rng.gen_range(1..strands)));
            strands -= 1;
        } else {
            events.push(Event::Split(rng.gen_range(1..=strands)));
            strands += 1;
        }
    }
    StrandDiagram::from_events(sources, events).expect("indices drawn in range")
}

/// A diagram with 1 to 4 sources and at most `max_events` vertices.
pub fn diagram<R: Rng + ?Sized>(rng: &mut R, max_events: usize) -> StrandDiagram {
    let sources = rng.gen_range(1..=4);
    diagram_from(rng, sources, max_events)
}

/// Three composable diagrams.
pub fn composable_triple<R: Rng + ?Sized>(rng: &mut R, max_events: usize) -> [StrandDiagram; 3] {
    let a = diagram(rng, max_events);
    let b = diagram_from(rng, a.sinks(), max_events);
    let c = diagram_from(rng, b.sinks(), max_events);
    [a, b, c]
}

pub fn word<R: Rng + ?Sized>(rng: &mut R, max_len: usize) -> Vec<Letter> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| *Letter::ALL.choose(rng).expect("nonempty")).collect()
}

/// A reduced `(1, n)` diagram with at most `max_events` vertices before
/// reduction.
pub fn vertex<R: Rng + ?Sized>(rng: &mut R, max_events: usize) -> ComplexVertex {
    ComplexVertex::new(&diagram_from(rng, 1, max_events)).expect("one source")
}

/// `p/q` with `q <= 12`, endpoints included.
pub fn weight<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let q = rng.gen_range(1..=12);
    rat(rng.gen_range(0..=q), q)
}

/// `p/q` strictly inside (0, 1).
pub fn interior_weight<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let q = rng.gen_range(2..=12);
    rat(rng.gen_range(1..q), q)
}

/// Strand by strand: edge, split, or merge with the next strand. Only the
/// kinds in `kinds` are drawn.
fn forest_of<R: Rng + ?Sized>(rng: &mut R, sources: usize, kinds: &[Component]) -> ElementaryForest {
    let mut components = Vec::new();
    let mut left = sources;
    while left > 0 {
        let c = loop {
            let c = *kinds.choose(rng).expect("nonempty");
            if c.sources() <= left {
                break c;
            }
        };
        left -= c.sources();
        components.push(c);
    }
    ElementaryForest::new(components).expect("sources > 0")
}

pub fn elementary_forest<R: Rng + ?Sized>(rng: &mut R, sources: usize) -> ElementaryForest {
    forest_of(rng, sources, &[Component::Edge, Component::SplitCaret, Component::MergeCaret])
}

pub fn weighted_forest<R: Rng + ?Sized>(rng: &mut R, sources: usize) -> WeightedForest {
    let forest = elementary_forest(rng, sources);
    let weights: Vec<Rational> = (0..forest.caret_count()).map(|_| weight(rng)).collect();
    WeightedForest::with_weights(&forest, &weights).expect("weights in [0, 1]")
}

/// A random vertex followed by a random weighted forest. Not canonical.
pub fn generalized<R: Rng + ?Sized>(rng: &mut R, max_events: usize) -> GeneralizedStrandDiagram {
    let v = vertex(rng, max_events);
    let forest = weighted_forest(rng, v.sinks());
    GeneralizedStrandDiagram::new(v.diagram(), forest).expect("arity matches")
}

/// A cube of dimension `1..=max_dim` at a random vertex.
pub fn cube<R: Rng + ?Sized>(rng: &mut R, max_events: usize, max_dim: usize) -> Cube {
    loop {
        let v = vertex(rng, max_events);
        let n = v.sinks();
        if n > 8 {
            continue;
        }
        let dim = rng.gen_range(1..=max_dim.min(n));
        let mut carets: Vec<usize> = (0..n).collect();
        carets.shuffle(rng);
        let mut components = vec![Component::Edge; n];
        for &k in &carets[..dim] {
            components[k] = Component::SplitCaret;
        }
        let splits = ElementaryForest::new(components).expect("nonempty");
        return Cube::new(v, splits).expect("splitting forest on the sinks");
    }
}

/// A tuple in DF: first entry 1, gaps of 1 or short gaps strictly inside
/// (0, 1), never two short gaps in a row.
pub fn df_point<R: Rng + ?Sized>(rng: &mut R, max_len: usize) -> Vec<Rational> {
    let len = rng.gen_range(1..=max_len);
    let mut t = vec![int(1)];
    let mut last_short = false;
    while t.len() < len {
        let gap = if !last_short && rng.gen_bool(0.5) {
            last_short = true;
            interior_weight(rng)
        } else {
            last_short = false;
            int(1)
        };
        let next = t.last().expect("nonempty") + gap;
        t.push(next);
    }
    t
}

/// A tuple in CF of length at most `max_len`, with some repeated entries.
pub fn cf_tuple<R: Rng + ?Sized>(rng: &mut R, max_len: usize) -> Vec<Rational> {
    let len = rng.gen_range(1..=max_len);
    let start = rat(rng.gen_range(-40..=40), rng.gen_range(1..=8));
    let mut t = vec![start];
    let mut previous_gap = int(1);
    while t.len() < len {
        let mut gap = if rng.gen_bool(0.2) {
            int(0)
        } else {
            rat(rng.gen_range(0..=24), rng.gen_range(1..=8))
        };
        let floor = int(1) - &previous_gap;
        if gap < floor {
            gap = floor + rat(rng.gen_range(0..=4), 4);
        }
        let next = t.last().expect("nonempty") + &gap;
        t.push(next);
        previous_gap = gap;
    }
    t
}

/// A loop of up to `max_moves` random elementary moves from one strand,
/// closed up by merging back down to one strand.
pub fn loop_moves<R: Rng + ?Sized>(rng: &mut R, max_moves: usize) -> Vec<SignedForest> {
    let mut moves = Vec::new();
    let mut strands = 1;
    for _ in 0..rng.gen_range(0..=max_moves) {
        let f = elementary_forest(rng, strands);
        strands = f.sinks();
        moves.push(SignedForest::forward(f));
    }
    while strands > 1 {
        let f = forest_of(rng, strands, &[Component::Edge, Component::MergeCaret, Component::MergeCaret]);
        strands = f.sinks();
        moves.push(SignedForest::forward(f));
    }
    moves
}
