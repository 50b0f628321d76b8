//! Stein's cube complex X: vertices are reduced `(1, n)` diagrams, cubes are
//! spanned by elementary splitting forests, and points are canonical
//! generalized strand diagrams. F acts on the left.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use num_traits::One;

use crate::diagram::{Event, StrandDiagram};
use crate::error::{Error, Result};
use crate::forest::{Component, ElementaryForest, WeightedComponent, WeightedForest};
use crate::generalized::GeneralizedStrandDiagram;
use crate::rational::{in_unit_interval, Rational};
use crate::thompson::{split_until_merge_free, FElement, Tree};

/// A point of X, always held in canonical form.
pub type ComplexPoint = GeneralizedStrandDiagram;

pub const DEFAULT_BALL_CAP: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComplexVertex {
    diagram: StrandDiagram,
}

impl ComplexVertex {
    pub fn new(d: &StrandDiagram) -> Result<Self> {
        if d.sources() != 1 {
            return Err(Error::Shape {
                expected_sources: "1".into(),
                expected_sinks: "n".into(),
                sources: d.sources(),
                sinks: d.sinks(),
            });
        }
        Ok(ComplexVertex { diagram: d.reduce() })
    }

    /// The single strand.
    pub fn trivial() -> Self {
        ComplexVertex {
            diagram: StrandDiagram::identity(1),
        }
    }

    pub fn diagram(&self) -> &StrandDiagram {
        &self.diagram
    }

    pub fn sinks(&self) -> usize {
        self.diagram.sinks()
    }

    /// `self * forest`.
    pub fn apply(&self, forest: &ElementaryForest) -> Result<ComplexVertex> {
        Ok(ComplexVertex {
            diagram: self.diagram.multiply(&forest.to_diagram())?,
        })
    }

    /// `self * event` for a single split or merge on the bottom strands.
    pub fn step(&self, event: Event) -> Result<ComplexVertex> {
        let d = StrandDiagram::from_events(self.sinks(), vec![event])?;
        Ok(ComplexVertex {
            diagram: self.diagram.multiply(&d)?,
        })
    }

    /// Left action of F.
    pub fn translate(&self, g: &FElement) -> ComplexVertex {
        ComplexVertex {
            diagram: g.diagram().multiply(&self.diagram).expect("(1,1) acts on (1,n)"),
        }
    }

    /// True when `other` is obtained from `self` by splitting.
    pub fn leq(&self, other: &ComplexVertex) -> bool {
        self.diagram
            .invert()
            .multiply(&other.diagram)
            .map(|d| d.merge_count() == 0)
            .unwrap_or(false)
    }

    /// A common splitting of both vertices: each is split until merge-free,
    /// and the two trees are refined to their union.
    pub fn upper_bound(&self, other: &ComplexVertex) -> Result<ComplexVertex> {
        let tree = |v: &ComplexVertex| -> Result<Tree> {
            let (merge_free, _) = split_until_merge_free(&v.diagram)?;
            Tree::from_diagram(&merge_free)
        };
        let union = tree(self)?.union(&tree(other)?);
        Ok(ComplexVertex {
            diagram: union.to_diagram(),
        })
    }
}

impl fmt::Display for ComplexVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.diagram.canonical_encoding().fmt(f)
    }
}

pub fn leq(x: &ComplexVertex, y: &ComplexVertex) -> bool {
    x.leq(y)
}

pub fn upper_bound(x: &ComplexVertex, y: &ComplexVertex) -> Result<ComplexVertex> {
    x.upper_bound(y)
}

/// Every elementary forest on `n` strands, once each. Per strand the choice
/// is edge, split, or merge with the next strand, in that order.
pub fn elementary_forests_at(n: usize) -> Vec<ElementaryForest> {
    fn walk(n: usize, prefix: &mut Vec<Component>, out: &mut Vec<ElementaryForest>) {
        if n == 0 {
            out.push(ElementaryForest::new(prefix.clone()).expect("nonempty"));
            return;
        }
        for (c, width) in [(Component::Edge, 1), (Component::SplitCaret, 1), (Component::MergeCaret, 2)] {
            if width <= n {
                prefix.push(c);
                walk(n - width, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        walk(n, &mut Vec::new(), &mut out);
    }
    out
}

/// Forests made of edges and splits only: `2^n` of them.
pub fn splitting_forests_at(n: usize) -> Vec<ElementaryForest> {
    elementary_forests_at(n)
        .into_iter()
        .filter(ElementaryForest::is_splitting)
        .collect()
}

/// `f(n) = 2 f(n-1) + f(n-2)` with `f(0) = 1`, `f(1) = 2`.
pub fn elementary_forest_count(n: usize) -> u64 {
    let (mut a, mut b) = (1u64, 2u64);
    for _ in 0..n {
        (a, b) = (b, 2 * b + a);
    }
    a
}

/// A cube given by its top vertex and the splitting forest spanning it.
/// Coordinates are indexed by the carets of `splits`, left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cube {
    top: ComplexVertex,
    splits: ElementaryForest,
}

impl Cube {
    pub fn new(top: ComplexVertex, splits: ElementaryForest) -> Result<Self> {
        if !splits.is_splitting() {
            return Err(Error::Invariant(format!("cube forest {splits} contains a merge")));
        }
        if splits.sources() != top.sinks() {
            return Err(Error::ForestArity {
                expected: top.sinks(),
                found: splits.sources(),
            });
        }
        Ok(Cube { top, splits })
    }

    pub fn top(&self) -> &ComplexVertex {
        &self.top
    }

    pub fn splits(&self) -> &ElementaryForest {
        &self.splits
    }

    pub fn dimension(&self) -> usize {
        self.splits.caret_count()
    }

    pub fn bottom(&self) -> ComplexVertex {
        self.top.apply(&self.splits).expect("arity checked")
    }

    fn caret_components(&self) -> Vec<usize> {
        self.splits
            .components()
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_caret())
            .map(|(i, _)| i)
            .collect()
    }

    /// The corner where exactly the carets flagged in `subset` have split.
    pub fn corner(&self, subset: &[bool]) -> Result<ComplexVertex> {
        let carets = self.caret_components();
        if subset.len() != carets.len() {
            return Err(Error::CoordinateArity {
                expected: carets.len(),
                found: subset.len(),
            });
        }
        let mut components = vec![Component::Edge; self.splits.components().len()];
        for (&c, &on) in carets.iter().zip(subset) {
            if on {
                components[c] = Component::SplitCaret;
            }
        }
        self.top.apply(&ElementaryForest::new(components)?)
    }

    /// All `2^d` corners; bit `k` of the index says whether caret `k` has split.
    pub fn corners(&self) -> Vec<ComplexVertex> {
        let d = self.dimension();
        (0..1usize << d)
            .map(|mask| {
                let subset: Vec<bool> = (0..d).map(|k| mask >> k & 1 == 1).collect();
                self.corner(&subset).expect("arity matches")
            })
            .collect()
    }

    /// Which carets have split at corner `v`, if `v` is a corner.
    pub fn corner_subset(&self, v: &ComplexVertex) -> Option<Vec<bool>> {
        let d = self.dimension();
        if !self.top.leq(v) {
            return None;
        }
        self.corners()
            .iter()
            .position(|c| c == v)
            .map(|mask| (0..d).map(|k| mask >> k & 1 == 1).collect())
    }

    /// The `2d` codimension-one faces: caret `k` pinned to 0, then to 1.
    pub fn facets(&self) -> Vec<Cube> {
        let mut out = Vec::with_capacity(2 * self.dimension());
        for c in self.caret_components() {
            let mut pinned = self.splits.components().to_vec();
            pinned[c] = Component::Edge;
            out.push(Cube {
                top: self.top.clone(),
                splits: ElementaryForest::new(pinned).expect("nonempty"),
            });

            let mut single = vec![Component::Edge; self.splits.components().len()];
            single[c] = Component::SplitCaret;
            let top = self
                .top
                .apply(&ElementaryForest::new(single).expect("nonempty"))
                .expect("arity checked");
            let mut rest = self.splits.components().to_vec();
            rest.splice(c..=c, [Component::Edge, Component::Edge]);
            out.push(Cube {
                top,
                splits: ElementaryForest::new(rest).expect("nonempty"),
            });
        }
        out
    }

    /// The point with coordinates `coords` measured from corner `base`: a
    /// coordinate of 0 stays at `base` and 1 reaches the opposite side.
    pub fn parameterize(&self, base: &ComplexVertex, coords: &[Rational]) -> Result<ComplexPoint> {
        let subset = self.corner_subset(base).ok_or(Error::NotACorner)?;
        if coords.len() != subset.len() {
            return Err(Error::CoordinateArity {
                expected: subset.len(),
                found: coords.len(),
            });
        }
        if let Some(w) = coords.iter().find(|w| !in_unit_interval(w)) {
            return Err(Error::WeightOutOfRange(w.to_string()));
        }
        let mut carets = subset.iter().zip(coords);
        let mut components = Vec::new();
        for c in self.splits.components() {
            match c {
                Component::Edge => components.push(WeightedComponent::Edge),
                _ => {
                    let (&split, w) = carets.next().expect("one coordinate per caret");
                    if split {
                        components.push(WeightedComponent::Merge(w.clone()));
                    } else {
                        components.push(WeightedComponent::Split(w.clone()));
                    }
                }
            }
        }
        Ok(GeneralizedStrandDiagram::new(base.diagram(), WeightedForest::new(components)?)?.canonicalize())
    }

    /// Coordinates of the same point measured from another corner.
    pub fn transfer(&self, from: &ComplexVertex, coords: &[Rational], to: &ComplexVertex) -> Result<Vec<Rational>> {
        let a = self.corner_subset(from).ok_or(Error::NotACorner)?;
        let b = self.corner_subset(to).ok_or(Error::NotACorner)?;
        if coords.len() != a.len() {
            return Err(Error::CoordinateArity {
                expected: a.len(),
                found: coords.len(),
            });
        }
        Ok(a.iter()
            .zip(&b)
            .zip(coords)
            .map(|((x, y), w)| if x == y { w.clone() } else { Rational::one() - w })
            .collect())
    }
}

impl fmt::Display for Cube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} * [{}]", self.top, self.splits)
    }
}

/// The cube spanned at `v` by an elementary forest, in (top, splits) form:
/// the merges of the forest lead up to the top, and both kinds of caret
/// become splits of the cube.
pub fn cube_of_forest(v: &ComplexVertex, forest: &ElementaryForest) -> Result<Cube> {
    let top = v.apply(&forest.phi_merge())?;
    Cube::new(top, forest.splitting_residual())
}

/// Every cube containing `v` of dimension at most `max_dim`, once each.
pub fn cubes_at(v: &ComplexVertex, max_dim: usize) -> Vec<Cube> {
    let mut seen = HashSet::new();
    elementary_forests_at(v.sinks())
        .into_iter()
        .filter(|f| f.caret_count() <= max_dim)
        .map(|f| cube_of_forest(v, &f).expect("forest sits on the sinks of v"))
        .filter(|cube| seen.insert(cube.clone()))
        .collect()
}

/// Classifies points of X up to the action of F.
///
/// Built from the representative whose base is the top vertex of the cube
/// carrying the point: every merge caret of the canonical forest is moved
/// into the base, leaving only splits with weights strictly inside (0, 1).
/// F acts on the base alone, so the remaining forest and its strand count
/// are invariant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrbitKey {
    pub forest: WeightedForest,
    pub sinks: usize,
}

impl fmt::Display for OrbitKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} @ {}", self.forest, self.sinks)
    }
}

/// The representative of `p` whose base is the top of its carrier cube.
pub fn top_form(p: &GeneralizedStrandDiagram) -> GeneralizedStrandDiagram {
    let p = p.canonicalize();
    let mut events = Vec::new();
    let mut components = Vec::new();
    let mut position = 1;
    for c in p.forest().components() {
        match c {
            WeightedComponent::Merge(w) => {
                events.push(Event::Merge(position));
                components.push(WeightedComponent::Split(Rational::one() - w));
                position += 1;
            }
            other => {
                components.push(other.clone());
                position += other.kind().sources();
            }
        }
    }
    if events.is_empty() {
        return p;
    }
    let step = StrandDiagram::from_events(p.base().sinks(), events).expect("merges sit on existing strands");
    let base = p.base().multiply(&step).expect("arity checked");
    GeneralizedStrandDiagram::new(&base, WeightedForest::new(components).expect("weights inside (0, 1)"))
        .expect("one forest source per base sink")
}

pub fn orbit_key(p: &GeneralizedStrandDiagram) -> OrbitKey {
    let top = top_form(p);
    OrbitKey {
        sinks: top.base().sinks(),
        forest: top.forest().clone(),
    }
}

/// The cube whose interior contains `p`, with the coordinates of `p`
/// measured from its top.
pub fn carrier(p: &GeneralizedStrandDiagram) -> (Cube, Vec<Rational>) {
    let top = top_form(p);
    let splits = top.forest().forest();
    let cube = Cube::new(ComplexVertex::new(top.base()).expect("one source"), splits).expect("top form has no merges");
    (cube, top.forest().weights())
}

/// The 1-skeleton around a vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ball {
    pub vertices: Vec<ComplexVertex>,
    pub distances: Vec<usize>,
    /// `(lower, upper)` index pairs; the upper vertex is the lower one with
    /// one strand split.
    pub edges: Vec<(usize, usize)>,
}

/// The quotient `X / F` around a vertex. Vertices are strand counts and an
/// edge `(n, j)` splits strand `j` of an `n`-sink vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientBall {
    pub sinks: Vec<usize>,
    pub distances: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

/// Every vertex within `r` single split or merge steps of `v`.
pub fn ball(v: &ComplexVertex, r: usize, cap: usize) -> Result<Ball> {
    let mut index: HashMap<ComplexVertex, usize> = HashMap::new();
    let mut vertices = vec![v.clone()];
    let mut distances = vec![0];
    let mut edges = Vec::new();
    let mut seen_edges = HashSet::new();
    index.insert(v.clone(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        if distances[i] == r {
            continue;
        }
        let x = vertices[i].clone();
        let n = x.sinks();
        let moves = (1..=n)
            .map(|j| (Event::Split(j), true))
            .chain((1..n).map(|j| (Event::Merge(j), false)));
        for (event, up) in moves {
            let y = x.step(event).expect("event sits on existing strands");
            let k = match index.get(&y) {
                Some(&k) => k,
                None => {
                    if vertices.len() >= cap {
                        return Err(Error::BallCap { cap });
                    }
                    let k = vertices.len();
                    index.insert(y.clone(), k);
                    vertices.push(y);
                    distances.push(distances[i] + 1);
                    queue.push_back(k);
                    k
                }
            };
            let edge = if up { (i, k) } else { (k, i) };
            if seen_edges.insert(edge) {
                edges.push(edge);
            }
        }
    }
    Ok(Ball {
        vertices,
        distances,
        edges,
    })
}

/// The ball of radius `r` around the orbit of `n`-sink vertices in `X / F`.
pub fn quotient_ball(n: usize, r: usize, cap: usize) -> Result<QuotientBall> {
    if n == 0 {
        return Err(Error::NoSources);
    }
    let lowest = n.saturating_sub(r).max(1);
    let sinks: Vec<usize> = (lowest..=n + r).collect();
    if sinks.len() > cap {
        return Err(Error::BallCap { cap });
    }
    let distances = sinks.iter().map(|&m| m.abs_diff(n)).collect();
    let edges = sinks
        .iter()
        .filter(|&&m| m < n + r)
        .flat_map(|&m| (1..=m).map(move |j| (m, j)))
        .collect();
    Ok(QuotientBall {
        sinks,
        distances,
        edges,
    })
}

/// One step of a loop: an elementary forest, or its reflection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedForest {
    pub forest: ElementaryForest,
    pub inverse: bool,
}

impl SignedForest {
    pub fn forward(forest: ElementaryForest) -> Self {
        SignedForest { forest, inverse: false }
    }

    pub fn sources(&self) -> usize {
        if self.inverse {
            self.forest.sinks()
        } else {
            self.forest.sources()
        }
    }

    pub fn diagram(&self) -> StrandDiagram {
        let d = self.forest.to_diagram();
        if self.inverse {
            d.invert()
        } else {
            d
        }
    }

    pub fn reversed(&self) -> SignedForest {
        SignedForest {
            forest: self.forest.clone(),
            inverse: !self.inverse,
        }
    }
}

/// The moves of a loop walked backwards.
pub fn reverse_moves(moves: &[SignedForest]) -> Vec<SignedForest> {
    moves.iter().rev().map(SignedForest::reversed).collect()
}

/// The element of F traced by a loop of elementary moves starting and
/// ending at one strand.
pub fn holonomy(moves: &[SignedForest]) -> Result<FElement> {
    let mut current = StrandDiagram::identity(1);
    for (position, m) in moves.iter().enumerate() {
        if m.sources() != current.sinks() {
            return Err(Error::MoveArity {
                position: position + 1,
                expected: current.sinks(),
                found: m.sources(),
            });
        }
        current = current.multiply(&m.diagram())?;
    }
    if current.sinks() != 1 {
        return Err(Error::MoveArity {
            position: moves.len() + 1,
            expected: 1,
            found: current.sinks(),
        });
    }
    FElement::new(&current)
}
