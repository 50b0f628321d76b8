//! The configuration space CF: nondecreasing tuples of reals with no three
//! entries inside an open unit window, glued across lengths by doubling an
//! entry that sits at distance at least 1 from its neighbours.
//!
//! Everything here is exact; there are no tolerances.

use std::fmt;

use num_traits::{One, Zero};

use crate::diagram::{Event, StrandDiagram};
use crate::error::{Error, Result};
use crate::forest::{WeightedComponent, WeightedForest};
use crate::generalized::GeneralizedStrandDiagram;
use crate::rational::{format_tuple, in_unit_interval, int, rat, Rational};

/// Conditions: entries nondecreasing, and `t[i+2] - t[i] >= 1`.
pub fn is_in_cf(t: &[Rational]) -> Result<bool> {
    if t.is_empty() {
        return Err(Error::EmptyConfiguration);
    }
    Ok(cf_violation(t).is_none())
}

fn cf_violation(t: &[Rational]) -> Option<String> {
    if let Some(i) = t.windows(2).position(|w| w[1] < w[0]) {
        return Some(format!("entries {} and {} decrease", i + 1, i + 2));
    }
    let one = Rational::one();
    if let Some(i) = t.windows(3).position(|w| &w[2] - &w[0] < one) {
        return Some(format!("entries {} and {} are closer than 1", i + 1, i + 3));
    }
    None
}

/// The three extra conditions: `t[1] = 1`; every gap at most 1; a gap below
/// 1 has neighbouring gaps equal to 1 wherever those gaps exist.
pub fn is_in_df(t: &[Rational]) -> bool {
    !t.is_empty() && cf_violation(t).is_none() && df_violation(t).is_none()
}

fn df_violation(t: &[Rational]) -> Option<String> {
    let one = Rational::one();
    if t[0] != one {
        return Some(format!("first entry is {}, not 1", t[0]));
    }
    let gaps: Vec<Rational> = t.windows(2).map(|w| &w[1] - &w[0]).collect();
    for (i, g) in gaps.iter().enumerate() {
        if *g > one {
            return Some(format!("gap {} is {g} > 1", i + 1));
        }
        if *g < one {
            let flanks_ok = [i.checked_sub(1), Some(i + 1)]
                .into_iter()
                .flatten()
                .filter_map(|k| gaps.get(k))
                .all(|f| *f == one);
            if !flanks_ok {
                return Some(format!("short gap {} is not flanked by unit gaps", i + 1));
            }
        }
    }
    None
}

/// A point of one stratum `CF_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Configuration {
    entries: Vec<Rational>,
}

impl Configuration {
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyConfiguration);
        }
        if let Some(why) = cf_violation(&entries) {
            return Err(Error::NotInCf(why));
        }
        Ok(Configuration { entries })
    }

    pub fn from_integers(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| int(v)).collect())
    }

    /// `(1, 2, ..., n)`, the image of every vertex with `n` sinks.
    pub fn standard(n: usize) -> Self {
        assert!(n >= 1);
        Configuration {
            entries: (1..=n as i64).map(int).collect(),
        }
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_in_df(&self) -> bool {
        df_violation(&self.entries).is_none()
    }

    /// Collapses every repeated entry.
    pub fn canonicalize(&self) -> ConfigClass {
        let mut entries = self.entries.clone();
        entries.dedup();
        ConfigClass {
            canonical: Configuration { entries },
        }
    }

    /// `s * (1, ..., n) + (1 - s) * self`.
    pub fn contract_slice(&self, s: &Rational) -> Result<Configuration> {
        if !in_unit_interval(s) {
            return Err(Error::ParameterOutOfRange(s.to_string()));
        }
        let rest = Rational::one() - s;
        let entries = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, t)| s * int(i as i64 + 1) + &rest * t)
            .collect();
        Ok(Configuration { entries })
    }

    /// Scale by 2, translate so the first entry is 1, then close every gap
    /// wider than 1 from left to right.
    pub fn retract(&self) -> DfPoint {
        let translated = self.translated();
        DfPoint {
            entries: compress(&translated),
        }
    }

    fn translated(&self) -> Vec<Rational> {
        let two = int(2);
        let shift = &self.entries[0] * &two - Rational::one();
        self.entries.iter().map(|t| t * &two - &shift).collect()
    }

    /// A point on the retraction homotopy: scaling on `[0, 1/3]`,
    /// translation on `[1/3, 2/3]`, and the straight segment to the
    /// compressed tuple on `[2/3, 1]`.
    pub fn retract_path(&self, s: &Rational) -> Result<Configuration> {
        if !in_unit_interval(s) {
            return Err(Error::ParameterOutOfRange(s.to_string()));
        }
        let three = int(3);
        let entries = if *s <= rat(1, 3) {
            let factor = Rational::one() + &three * s;
            self.entries.iter().map(|t| t * &factor).collect()
        } else if *s <= rat(2, 3) {
            let lambda = &three * s - Rational::one();
            let shift = (&self.entries[0] * int(2) - Rational::one()) * lambda;
            self.entries.iter().map(|t| t * int(2) - &shift).collect()
        } else {
            let mu = &three * s - int(2);
            let start = self.translated();
            let end = compress(&start);
            start
                .iter()
                .zip(&end)
                .map(|(a, b)| a + (b - a) * &mu)
                .collect()
        };
        Ok(Configuration { entries })
    }
}

fn compress(t: &[Rational]) -> Vec<Rational> {
    let one = Rational::one();
    let mut out: Vec<Rational> = Vec::with_capacity(t.len());
    let mut shift = Rational::zero();
    for (i, v) in t.iter().enumerate() {
        let mut v = v - &shift;
        if i > 0 && &v - &out[i - 1] > one {
            let target = &out[i - 1] + &one;
            shift += &v - &target;
            v = target;
        }
        out.push(v);
    }
    out
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_tuple(&self.entries))
    }
}

/// A point of the glued space, held as its duplicate-free representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConfigClass {
    canonical: Configuration,
}

impl ConfigClass {
    pub fn representative(&self) -> &Configuration {
        &self.canonical
    }

    pub fn entries(&self) -> &[Rational] {
        &self.canonical.entries
    }

    /// Doubles entry `i` (1-based). Allowed only when the entry is at least
    /// 1 away from each neighbour.
    pub fn expand(&self, i: usize) -> Result<Configuration> {
        let t = &self.canonical.entries;
        if i == 0 || i > t.len() {
            return Err(Error::Index { index: i, len: t.len() });
        }
        let k = i - 1;
        let one = Rational::one();
        let far_left = k == 0 || &t[k] - &t[k - 1] >= one;
        let far_right = k + 1 == t.len() || &t[k + 1] - &t[k] >= one;
        if !far_left || !far_right {
            return Err(Error::Spacing { index: i });
        }
        let mut entries = t.clone();
        entries.insert(k, t[k].clone());
        Configuration::new(entries)
    }
}

impl fmt::Display for ConfigClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.canonical.fmt(f)
    }
}

/// A configuration satisfying the extra conditions of the image of Stein's
/// complex. Repeated entries are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DfPoint {
    entries: Vec<Rational>,
}

impl DfPoint {
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        let c = Configuration::new(entries)?;
        if let Some(why) = df_violation(&c.entries) {
            return Err(Error::NotInDf(why));
        }
        Ok(DfPoint { entries: c.entries })
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn to_configuration(&self) -> Configuration {
        Configuration {
            entries: self.entries.clone(),
        }
    }

    /// A generalized strand diagram whose configuration is this point.
    ///
    /// Gaps below 1 become split carets weighted by the gap; the remaining
    /// entries become plain edges. The base is the right comb with one leaf
    /// per component.
    pub fn section(&self) -> GeneralizedStrandDiagram {
        let mut t = self.entries.clone();
        t.dedup();
        let one = Rational::one();
        let mut components = Vec::new();
        let mut i = 0;
        while i < t.len() {
            if i + 1 < t.len() && &t[i + 1] - &t[i] < one {
                components.push(WeightedComponent::Split(&t[i + 1] - &t[i]));
                i += 2;
            } else {
                components.push(WeightedComponent::Edge);
                i += 1;
            }
        }
        let comb: Vec<Event> = (1..components.len()).map(Event::Split).collect();
        let base = StrandDiagram::from_events(1, comb).expect("right comb is valid");
        let forest = WeightedForest::new(components).expect("weights are gaps in (0, 1)");
        GeneralizedStrandDiagram::new(&base, forest)
            .expect("comb leaves match components")
            .canonicalize()
    }
}

impl fmt::Display for DfPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_tuple(&self.entries))
    }
}

/// Validates a tuple as a DF point (duplicates collapsed first) and builds
/// its section.
pub fn df_section(t: &[Rational]) -> Result<GeneralizedStrandDiagram> {
    let c = Configuration::new(t.to_vec())?.canonicalize();
    Ok(DfPoint::new(c.entries().to_vec())?.section())
}

/// The `(L_i, R_i)` pair of every forest component, left to right.
///
/// `L_i = i + sum_{j<i} s_j` and `R_i = L_i + s_i`, where `s_j` is the
/// weight of a split, one minus the weight of a merge, and 0 for an edge.
pub fn left_right_pairs(forest: &WeightedForest) -> Vec<(Rational, Rational)> {
    let mut progress = Rational::zero();
    forest
        .components()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let left = int(i as i64 + 1) + &progress;
            progress += match c {
                WeightedComponent::Edge => Rational::zero(),
                WeightedComponent::Split(w) => w.clone(),
                WeightedComponent::Merge(w) => Rational::one() - w,
            };
            let right = int(i as i64 + 1) + &progress;
            (left, right)
        })
        .collect()
}

/// The configuration map `(L_1, R_1, ..., L_l, R_l)`. Depends only on the
/// forest, so any representative of a class may be passed.
pub fn config_map(q: &GeneralizedStrandDiagram) -> Configuration {
    let entries = left_right_pairs(q.forest())
        .into_iter()
        .flat_map(|(l, r)| [l, r])
        .collect();
    Configuration { entries }
}
