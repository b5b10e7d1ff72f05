//! Continuous piecewise-linear functions on `[0, inf)` with exact rational
//! corners.
//!
//! A function is stored as its corner list. The first corner always sits at
//! `t = 0`; after the last corner the function stays constant. In canonical
//! form abscissas are strictly increasing and the gradient changes at every
//! stored corner other than the first, so two functions are equal exactly
//! when their corner lists are equal.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Corner {
    pub t: Rational,
    pub v: Rational,
}

impl Corner {
    pub fn new(t: Rational, v: Rational) -> Self {
        Corner { t, v }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PiecewiseLinear {
    corners: Vec<Corner>,
}

/// A local maximum, possibly a plateau `[t_start, t_end]` at height `value`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalMax {
    pub t_start: Rational,
    pub t_end: Rational,
    pub value: Rational,
}

fn slope(a: &Corner, b: &Corner) -> Rational {
    (&b.v - &a.v) / (&b.t - &a.t)
}

fn collinear(a: &Corner, b: &Corner, c: &Corner) -> bool {
    (&b.v - &a.v) * (&c.t - &b.t) == (&c.v - &b.v) * (&b.t - &a.t)
}

impl PiecewiseLinear {
    pub fn zero() -> Self {
        Self::constant(Rational::zero())
    }

    pub fn constant(v: Rational) -> Self {
        PiecewiseLinear { corners: vec![Corner::new(Rational::zero(), v)] }
    }

    /// Builds a canonical function from its value at `t = 0` and a list of
    /// further corners.
    ///
    /// Repeated corners collapse into one, corners where the gradient does
    /// not change are dropped, and the function is constant after the last
    /// corner.
    pub fn from_corners<I>(start: Rational, corners: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Rational, Rational)>,
    {
        let mut pts: Vec<Corner> = vec![Corner::new(Rational::zero(), start)];
        for (t, v) in corners {
            let last = pts.last().expect("non-empty");
            if t.is_negative() {
                return Err(Error::NegativeArgument(t));
            }
            if t < last.t {
                return Err(Error::NonMonotoneAbscissas { prev: last.t.clone(), next: t });
            }
            if t == last.t {
                if v != last.v {
                    return Err(Error::Discontinuity(t));
                }
                continue;
            }
            pts.push(Corner::new(t, v));
        }
        if let Some(c) = pts.iter().find(|c| c.v.is_negative()) {
            return Err(Error::NegativeValue { t: c.t.clone(), value: c.v.clone() });
        }
        Ok(Self::canonical(pts))
    }

    // `pts` must have strictly increasing abscissas starting at zero.
    fn canonical(pts: Vec<Corner>) -> Self {
        let mut out: Vec<Corner> = Vec::with_capacity(pts.len());
        for c in pts {
            while out.len() >= 2 && collinear(&out[out.len() - 2], &out[out.len() - 1], &c) {
                out.pop();
            }
            out.push(c);
        }
        // the tail is flat, so a final flat segment carries no corner
        while out.len() >= 2 && out[out.len() - 1].v == out[out.len() - 2].v {
            out.pop();
        }
        PiecewiseLinear { corners: out }
    }

    /// All stored corners, starting with `(0, f(0))`.
    pub fn corners(&self) -> &[Corner] {
        &self.corners
    }

    pub fn start_value(&self) -> &Rational {
        &self.corners[0].v
    }

    /// The constant value after the last corner.
    pub fn tail_value(&self) -> &Rational {
        &self.corners[self.corners.len() - 1].v
    }

    /// Abscissa of the last corner; the function is constant beyond it.
    pub fn last_abscissa(&self) -> &Rational {
        &self.corners[self.corners.len() - 1].t
    }

    pub fn abscissas(&self) -> impl Iterator<Item = &Rational> {
        self.corners.iter().map(|c| &c.t)
    }

    pub fn is_zero(&self) -> bool {
        self.corners.len() == 1 && self.corners[0].v.is_zero()
    }

    pub fn evaluate(&self, t: &Rational) -> Result<Rational> {
        if t.is_negative() {
            return Err(Error::NegativeArgument(t.clone()));
        }
        let idx = self.corners.partition_point(|c| &c.t <= t);
        // idx >= 1 since corners[0].t == 0 <= t
        let left = &self.corners[idx - 1];
        if &left.t == t || idx == self.corners.len() {
            return Ok(left.v.clone());
        }
        let right = &self.corners[idx];
        Ok(&left.v + slope(left, right) * (t - &left.t))
    }

    /// Pointwise sum.
    ///
    /// Each summand contributes its start value, its initial gradient and a
    /// gradient jump at every later corner; merging the jumps by abscissa
    /// gives the sum in `O(n log n)` for `n` corners in total.
    pub fn sum<'a, I>(fs: I) -> Self
    where
        I: IntoIterator<Item = &'a PiecewiseLinear>,
    {
        let mut start = Rational::zero();
        let mut initial_slope = Rational::zero();
        let mut jumps: Vec<(Rational, Rational)> = Vec::new();
        for f in fs {
            start += f.start_value();
            let slopes: Vec<Rational> = f.corners.windows(2).map(|w| slope(&w[0], &w[1])).collect();
            if let Some(s0) = slopes.first() {
                initial_slope += s0;
            }
            for (j, c) in f.corners.iter().enumerate().skip(1) {
                let before = &slopes[j - 1];
                let after = slopes.get(j).cloned().unwrap_or_else(Rational::zero);
                jumps.push((c.t.clone(), after - before));
            }
        }
        jumps.sort_by(|a, b| a.0.cmp(&b.0));

        let mut pts = vec![Corner::new(Rational::zero(), start)];
        let mut slope_now = initial_slope;
        let mut i = 0;
        while i < jumps.len() {
            let t = jumps[i].0.clone();
            let mut delta = Rational::zero();
            while i < jumps.len() && jumps[i].0 == t {
                delta += &jumps[i].1;
                i += 1;
            }
            let last = pts.last().expect("non-empty");
            if t > last.t {
                let v = &last.v + &slope_now * (&t - &last.t);
                pts.push(Corner::new(t, v));
            }
            slope_now += delta;
        }
        Self::canonical(pts)
    }

    /// Pointwise sum of two functions.
    pub fn add(&self, other: &PiecewiseLinear) -> PiecewiseLinear {
        Self::sum([self, other])
    }

    /// Local maxima, each reported once.
    ///
    /// A maximum is a point or plateau entered by a strictly increasing
    /// segment and left by a strictly decreasing one. The origin counts as
    /// entered from below, so a function that starts by decreasing (or by a
    /// plateau followed by a decrease) has a maximum at `t = 0`.
    pub fn local_maxima(&self) -> Vec<LocalMax> {
        let n = self.corners.len();
        let mut out = Vec::new();
        // segment j runs from corner j to corner j + 1; the tail is flat
        let sign = |j: usize| -> std::cmp::Ordering {
            if j + 1 >= n {
                std::cmp::Ordering::Equal
            } else {
                self.corners[j + 1].v.cmp(&self.corners[j].v)
            }
        };
        let mut rising = true;
        let mut plateau_start: Option<usize> = Some(0);
        for j in 0..n {
            match sign(j) {
                std::cmp::Ordering::Greater => {
                    rising = true;
                    plateau_start = None;
                }
                std::cmp::Ordering::Equal => {}
                std::cmp::Ordering::Less => {
                    if rising {
                        let s = plateau_start.unwrap_or(j);
                        out.push(LocalMax {
                            t_start: self.corners[s].t.clone(),
                            t_end: self.corners[j].t.clone(),
                            value: self.corners[j].v.clone(),
                        });
                    }
                    rising = false;
                    plateau_start = None;
                }
            }
            if rising && plateau_start.is_none() {
                plateau_start = Some(j + 1);
            }
        }
        out
    }
}

impl Default for PiecewiseLinear {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for PiecewiseLinear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.corners.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({}, {})", format_rational(&c.t), format_rational(&c.v))?;
        }
        Ok(())
    }
}
