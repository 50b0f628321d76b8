//! Generalized strand diagrams: a `(1, n)` vertex diagram followed by one
//! weighted elementary forest. These parameterize points of Stein's complex.
//!
//! The canonical representative of a class has a reduced base, no caret of
//! weight 0 or 1, and no interface redex. An interface redex is a split at
//! the bottom of the base whose two outputs enter one weighted merge caret,
//! or a merge at the bottom of the base whose output enters one weighted
//! split caret. Weight-one carets are absorbed into the base so that the
//! corners of a cube have a single representative.

use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagram::{Event, StrandDiagram};
use crate::error::{Error, Result};
use crate::forest::{WeightedComponent, WeightedForest};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneralizedStrandDiagram {
    base: StrandDiagram,
    forest: WeightedForest,
}

impl GeneralizedStrandDiagram {
    /// The base is reduced on the way in.
    pub fn new(base: &StrandDiagram, forest: WeightedForest) -> Result<Self> {
        if base.sources() != 1 {
            return Err(Error::Shape {
                expected_sources: "1".into(),
                expected_sinks: "n".into(),
                sources: base.sources(),
                sinks: base.sinks(),
            });
        }
        if base.sinks() != forest.sources() {
            return Err(Error::ForestArity {
                expected: base.sinks(),
                found: forest.sources(),
            });
        }
        Ok(GeneralizedStrandDiagram {
            base: base.reduce(),
            forest,
        })
    }

    /// A vertex of the complex: the diagram followed by plain edges.
    pub fn vertex(base: &StrandDiagram) -> Result<Self> {
        Self::new(base, WeightedForest::edges(base.sinks()))
    }

    pub fn base(&self) -> &StrandDiagram {
        &self.base
    }

    pub fn forest(&self) -> &WeightedForest {
        &self.forest
    }

    pub fn is_vertex(&self) -> bool {
        self.forest.is_all_edges()
    }

    pub fn is_canonical(&self) -> bool {
        !self.forest.has_extreme_weight() && self.interface_redex().is_none()
    }

    /// Left action of a `(1, 1)` diagram on the base.
    pub fn left_multiply(&self, g: &StrandDiagram) -> Result<Self> {
        Self::new(&g.multiply(&self.base)?, self.forest.clone())
    }

    pub fn canonicalize(&self) -> GeneralizedStrandDiagram {
        let mut current = self.clone();
        loop {
            current.forest = current.forest.without_zero_weights();
            if let Some(next) = current.absorb_full_weights() {
                current = next;
                continue;
            }
            match current.interface_redex() {
                Some(k) => current = current.flip_across_seam(k),
                None => return current,
            }
        }
    }

    /// Moves every weight-one caret into the base.
    fn absorb_full_weights(&self) -> Option<GeneralizedStrandDiagram> {
        let mut events = Vec::new();
        let mut rest = Vec::new();
        let mut position = 1;
        for c in self.forest.components() {
            match c {
                WeightedComponent::Split(w) if w.is_one() => {
                    events.push(Event::Split(position));
                    rest.extend([WeightedComponent::Edge, WeightedComponent::Edge]);
                    position += 2;
                }
                WeightedComponent::Merge(w) if w.is_one() => {
                    events.push(Event::Merge(position));
                    rest.push(WeightedComponent::Edge);
                    position += 1;
                }
                other => {
                    rest.push(other.clone());
                    position += other.kind().sources();
                }
            }
        }
        if events.is_empty() {
            return None;
        }
        let step = StrandDiagram::from_events(self.base.sinks(), events)
            .expect("absorbed carets sit on existing strands");
        Some(GeneralizedStrandDiagram {
            base: self.base.multiply(&step).expect("arity checked"),
            forest: WeightedForest::from_parts_unchecked(rest),
        })
    }

    /// Index of the first forest component that forms an interface redex.
    fn interface_redex(&self) -> Option<usize> {
        let offsets = self.forest.forest().source_offsets();
        self.forest
            .components()
            .iter()
            .zip(offsets)
            .position(|(c, at)| match c {
                WeightedComponent::Merge(_) => self.base.has_bottom_split_at(at),
                WeightedComponent::Split(_) => self.base.has_bottom_merge_at(at),
                WeightedComponent::Edge => false,
            })
    }

    /// Moves the caret at component `k` across the seam: `base * caret(w)`
    /// equals `base * caret(1) * opposite(1 - w)`, so the base absorbs a full
    /// caret of the same kind and the forest keeps the opposite caret with
    /// the complementary weight. Applied to an interface redex this is the
    /// weighted reduction; elsewhere it is the matching expansion.
    fn flip_across_seam(&self, k: usize) -> GeneralizedStrandDiagram {
        let at = self.forest.forest().source_offsets()[k] + 1;
        let n = self.base.sinks();
        let (event, replacement) = match &self.forest.components()[k] {
            WeightedComponent::Merge(w) => (Event::Merge(at), WeightedComponent::Split(Rational::one() - w)),
            WeightedComponent::Split(w) => (Event::Split(at), WeightedComponent::Merge(Rational::one() - w)),
            WeightedComponent::Edge => unreachable!("edges have no weight to flip"),
        };
        let step = StrandDiagram::from_events(n, vec![event]).expect("caret sits on existing strands");
        let mut components = self.forest.components().to_vec();
        components[k] = replacement;
        GeneralizedStrandDiagram {
            base: self.base.multiply(&step).expect("arity checked"),
            forest: WeightedForest::from_parts_unchecked(components),
        }
    }

    /// A different representative of the same class, obtained by undoing one
    /// canonicalization step. Deterministic in `seed`.
    pub fn random_gmove(&self, seed: u64) -> GeneralizedStrandDiagram {
        self.random_gmove_with(&mut ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn random_gmove_with<R: Rng + ?Sized>(&self, rng: &mut R) -> GeneralizedStrandDiagram {
        let moves = self.available_moves();
        if moves.is_empty() {
            return self.clone();
        }
        self.apply_move(moves[rng.gen_range(0..moves.len())])
    }

    fn available_moves(&self) -> Vec<GMove> {
        let comps = self.forest.components();
        let mut moves = Vec::new();
        for (k, c) in comps.iter().enumerate() {
            match c {
                WeightedComponent::Edge => {
                    moves.push(GMove::ZeroSplit(k));
                    moves.push(GMove::UnabsorbMerge(k));
                    if comps.get(k + 1) == Some(&WeightedComponent::Edge) {
                        moves.push(GMove::ZeroMerge(k));
                        moves.push(GMove::UnabsorbSplit(k));
                    }
                }
                _ => moves.push(GMove::Expand(k)),
            }
        }
        moves
    }

    fn apply_move(&self, mv: GMove) -> GeneralizedStrandDiagram {
        let mut components = self.forest.components().to_vec();
        let zero_split = WeightedComponent::Split(Rational::zero());
        let zero_merge = WeightedComponent::Merge(Rational::zero());
        match mv {
            GMove::ZeroSplit(k) => {
                components[k] = zero_split;
                self.with_components(components)
            }
            GMove::ZeroMerge(k) => {
                components.splice(k..k + 2, [zero_merge]);
                self.with_components(components)
            }
            // A weight-zero caret flipped across the seam is a full caret of
            // the other kind: the base gains a split or merge that the new
            // weight-one forest caret undoes.
            GMove::UnabsorbSplit(k) => {
                components.splice(k..k + 2, [zero_merge]);
                self.with_components(components).flip_across_seam(k)
            }
            GMove::UnabsorbMerge(k) => {
                components[k] = zero_split;
                self.with_components(components).flip_across_seam(k)
            }
            GMove::Expand(k) => self.flip_across_seam(k),
        }
    }

    fn with_components(&self, components: Vec<WeightedComponent>) -> GeneralizedStrandDiagram {
        GeneralizedStrandDiagram {
            base: self.base.clone(),
            forest: WeightedForest::from_parts_unchecked(components),
        }
    }
}

#[derive(Clone, Copy, Debug)]
enum GMove {
    ZeroSplit(usize),
    ZeroMerge(usize),
    UnabsorbSplit(usize),
    UnabsorbMerge(usize),
    Expand(usize),
}

impl fmt::Display for GeneralizedStrandDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} * [{}]", self.base.canonical_encoding(), self.forest)
    }
}
