use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{is_dyadic, log2_exact, Rational};

/// A piecewise linear homeomorphism of `[0, 1]` given by its breakpoints.
///
/// Stored without collinear interior points, so two maps are equal exactly
/// when their breakpoint lists are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlMap {
    points: Vec<(Rational, Rational)>,
}

impl PlMap {
    /// Checks endpoints, strict monotonicity, dyadic breakpoints and
    /// power-of-two slopes, then drops collinear points.
    pub fn new(points: Vec<(Rational, Rational)>) -> Result<Self> {
        let zero = Rational::zero();
        let one = Rational::one();
        if points.len() < 2
            || points[0] != (zero.clone(), zero)
            || points[points.len() - 1] != (one.clone(), one)
        {
            return Err(Error::Invariant("PL map must run from (0,0) to (1,1)".into()));
        }
        for (x, y) in &points {
            if !is_dyadic(x) || !is_dyadic(y) {
                return Err(Error::Invariant(format!("breakpoint ({x}, {y}) is not dyadic")));
            }
        }
        for pair in points.windows(2) {
            let ((x0, y0), (x1, y1)) = (&pair[0], &pair[1]);
            if x1 <= x0 || y1 <= y0 {
                return Err(Error::Invariant("PL map must be strictly increasing".into()));
            }
            let slope = (y1 - y0) / (x1 - x0);
            if log2_exact(&slope).is_none() {
                return Err(Error::Invariant(format!("slope {slope} is not a power of two")));
            }
        }
        Ok(PlMap {
            points: drop_collinear(points),
        })
    }

    pub fn identity() -> Self {
        PlMap {
            points: vec![
                (Rational::zero(), Rational::zero()),
                (Rational::one(), Rational::one()),
            ],
        }
    }

    pub fn points(&self) -> &[(Rational, Rational)] {
        &self.points
    }

    pub fn is_identity(&self) -> bool {
        self.points.len() == 2
    }

    pub fn slopes(&self) -> Vec<Rational> {
        self.points
            .windows(2)
            .map(|p| (&p[1].1 - &p[0].1) / (&p[1].0 - &p[0].0))
            .collect()
    }

    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        if *x < Rational::zero() || *x > Rational::one() {
            return Err(Error::ParameterOutOfRange(x.to_string()));
        }
        let k = self
            .points
            .windows(2)
            .position(|p| *x <= p[1].0)
            .expect("x lies in [0, 1]");
        let ((x0, y0), (x1, y1)) = (&self.points[k], &self.points[k + 1]);
        Ok(y0 + (x - x0) * (y1 - y0) / (x1 - x0))
    }

    pub fn inverse(&self) -> PlMap {
        PlMap {
            points: self.points.iter().map(|(x, y)| (y.clone(), x.clone())).collect(),
        }
    }

    /// The map applying `self` first and then `then`.
    pub fn then(&self, then: &PlMap) -> PlMap {
        let back = self.inverse();
        let mut xs: Vec<Rational> = self.points.iter().map(|(x, _)| x.clone()).collect();
        xs.extend(then.points.iter().map(|(x, _)| back.eval(x).expect("in range")));
        xs.sort();
        xs.dedup();
        let points = xs
            .into_iter()
            .map(|x| {
                let y = then.eval(&self.eval(&x).expect("in range")).expect("in range");
                (x, y)
            })
            .collect();
        PlMap {
            points: drop_collinear(points),
        }
    }
}

/// Composition with `first` applied first.
pub fn pl_compose(first: &PlMap, second: &PlMap) -> PlMap {
    first.then(second)
}

pub fn pl_eq(a: &PlMap, b: &PlMap) -> bool {
    a == b
}

fn drop_collinear(points: Vec<(Rational, Rational)>) -> Vec<(Rational, Rational)> {
    let mut out: Vec<(Rational, Rational)> = Vec::with_capacity(points.len());
    for p in points {
        if out.len() >= 2 {
            let (a, b) = (&out[out.len() - 2], &out[out.len() - 1]);
            let s1 = (&b.1 - &a.1) / (&b.0 - &a.0);
            let s2 = (&p.1 - &b.1) / (&p.0 - &b.0);
            if s1 == s2 {
                out.pop();
            }
        }
        out.push(p);
    }
    out
}

impl fmt::Display for PlMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (x, y) in &self.points {
            writeln!(f, "{x} {y}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn map(points: &[(i64, i64, i64, i64)]) -> PlMap {
        PlMap::new(points.iter().map(|&(a, b, c, d)| (rat(a, b), rat(c, d))).collect()).unwrap()
    }

    fn x0() -> PlMap {
        map(&[(0, 1, 0, 1), (1, 2, 1, 4), (3, 4, 1, 2), (1, 1, 1, 1)])
    }

    #[test]
    fn eval_examples() {
        let id = PlMap::identity();
        assert_eq!(id.eval(&rat(3, 8)).unwrap(), rat(3, 8));
        let m = x0();
        assert_eq!(m.eval(&rat(0, 1)).unwrap(), rat(0, 1));
        assert_eq!(m.eval(&rat(1, 1)).unwrap(), rat(1, 1));
        assert_eq!(m.eval(&rat(5, 8)).unwrap(), rat(3, 8));
        assert!(m.eval(&rat(9, 8)).is_err());
        assert!(m.eval(&rat(-1, 8)).is_err());
    }

    #[test]
    fn compose_with_identity_and_inverse() {
        let m = x0();
        assert_eq!(m.then(&PlMap::identity()), m);
        assert_eq!(PlMap::identity().then(&m), m);
        assert!(m.then(&m.inverse()).is_identity());
        assert!(pl_eq(&m, &m));
    }

    #[test]
    fn collinear_points_are_dropped() {
        let m = map(&[(0, 1, 0, 1), (1, 2, 1, 2), (1, 1, 1, 1)]);
        assert!(m.is_identity());
    }

    #[test]
    fn rejects_bad_maps() {
        assert!(PlMap::new(vec![(rat(0, 1), rat(0, 1)), (rat(1, 3), rat(2, 3)), (rat(1, 1), rat(1, 1))]).is_err());
        assert!(PlMap::new(vec![(rat(0, 1), rat(0, 1)), (rat(1, 2), rat(3, 8)), (rat(1, 1), rat(1, 1))]).is_err());
        assert!(PlMap::new(vec![(rat(0, 1), rat(0, 1)), (rat(1, 1), rat(1, 2))]).is_err());
    }
}
