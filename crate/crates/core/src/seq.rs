//! Weighted periodic sequences on the line.
//!
//! A sequence is a motif of closed intervals `[p - r, p + r]` repeated with a
//! given period. Everything downstream works on the normalized form: period
//! one, centers sorted in `[0, 1)`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rational, frac, half, Rational};

/// One motif point with its radius.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point {
    pub center: Rational,
    pub radius: Rational,
}

impl Point {
    pub fn new(center: Rational, radius: Rational) -> Self {
        Point { center, radius }
    }

    /// A point of radius zero.
    pub fn bare(center: Rational) -> Self {
        Point { center, radius: Rational::zero() }
    }
}

/// A periodic sequence `{p_1, ..., p_m} + period * Z` of disjoint intervals.
///
/// Construction validates the sequence completely, so every value of this
/// type normalizes to a sequence with non-negative gaps.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PeriodicSequence {
    period: Rational,
    points: Vec<Point>,
}

/// Cyclic gaps between successive intervals of a normalized sequence, plus
/// the total length `l` covered by the intervals themselves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapVector {
    /// `gaps[i]` is the gap between interval `i - 1` and interval `i`
    /// (cyclically, so `gaps[0]` wraps around the cell boundary).
    pub gaps: Vec<Rational>,
    pub total_length: Rational,
}

impl GapVector {
    pub fn len(&self) -> usize {
        self.gaps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gaps.is_empty()
    }

    /// Gaps in increasing order.
    pub fn sorted(&self) -> Vec<Rational> {
        let mut g = self.gaps.clone();
        g.sort();
        g
    }
}

impl PeriodicSequence {
    /// Validates and stores a sequence as given.
    ///
    /// Centers may be unsorted and outside `[0, period)`. Touching intervals
    /// (zero gaps) are accepted; overlapping ones and coincident centers are
    /// rejected with [`Error::Overlap`].
    pub fn new(period: Rational, points: Vec<Point>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyMotif);
        }
        if !period.is_positive() {
            return Err(Error::NonPositivePeriod(period));
        }
        if let Some((index, p)) = points.iter().enumerate().find(|(_, p)| p.radius.is_negative()) {
            return Err(Error::NegativeRadius { index, radius: p.radius.clone() });
        }
        let seq = PeriodicSequence { period, points };
        let normalized = seq.normalize_unchecked();
        for (i, w) in normalized.points.windows(2).enumerate() {
            if w[0].center == w[1].center {
                return Err(Error::Overlap { index: i + 1, gap: -(&w[0].radius + &w[1].radius) });
            }
        }
        if let Some((index, gap)) = normalized
            .raw_gaps()
            .into_iter()
            .enumerate()
            .find(|(_, g)| g.is_negative())
        {
            return Err(Error::Overlap { index, gap });
        }
        Ok(seq)
    }

    /// A sequence of period one whose points all have radius zero.
    pub fn from_centers(centers: impl IntoIterator<Item = Rational>) -> Result<Self> {
        Self::new(Rational::one(), centers.into_iter().map(Point::bare).collect())
    }

    pub fn period(&self) -> &Rational {
        &self.period
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Motif size `m`.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn centers(&self) -> impl Iterator<Item = &Rational> {
        self.points.iter().map(|p| &p.center)
    }

    pub fn radii(&self) -> impl Iterator<Item = &Rational> {
        self.points.iter().map(|p| &p.radius)
    }

    pub fn is_normalized(&self) -> bool {
        self.period.is_one()
            && self.points.iter().all(|p| !p.center.is_negative() && p.center < Rational::one())
            && self.points.windows(2).all(|w| w[0].center < w[1].center)
    }

    /// Rescales to period one, reduces centers modulo one and sorts them.
    /// Idempotent.
    pub fn normalize(&self) -> PeriodicSequence {
        if self.is_normalized() {
            return self.clone();
        }
        self.normalize_unchecked()
    }

    fn normalize_unchecked(&self) -> PeriodicSequence {
        let mut points: Vec<Point> = self
            .points
            .iter()
            .map(|p| Point {
                center: frac(&(&p.center / &self.period)),
                radius: &p.radius / &self.period,
            })
            .collect();
        points.sort_by(|a, b| a.center.cmp(&b.center));
        PeriodicSequence { period: Rational::one(), points }
    }

    // Assumes `self` is normalized.
    fn raw_gaps(&self) -> Vec<Rational> {
        let m = self.points.len();
        (0..m)
            .map(|i| {
                let cur = &self.points[i];
                let prev = &self.points[(i + m - 1) % m];
                let prev_right = if i == 0 {
                    &prev.center - Rational::one() + &prev.radius
                } else {
                    &prev.center + &prev.radius
                };
                &cur.center - &cur.radius - prev_right
            })
            .collect()
    }

    /// Cyclic gaps `g_i = (p_i - r_i) - (p_{i-1} + r_{i-1})` of the
    /// normalized sequence together with `l = 2 * sum r_i`.
    pub fn gaps(&self) -> GapVector {
        let s = self.normalize();
        let total_length = s.points.iter().map(|p| &p.radius).sum::<Rational>() * Rational::from_integer(2.into());
        GapVector { gaps: s.raw_gaps(), total_length }
    }

    /// Replaces every radius by half the cyclic distance from the point to
    /// its nearest neighbouring center. A single-point motif gets radius
    /// one half, its only neighbours being its own translates.
    pub fn neighbor_radii(&self) -> PeriodicSequence {
        let s = self.normalize();
        let m = s.points.len();
        let points = (0..m)
            .map(|i| {
                let c = &s.points[i].center;
                let next = if i + 1 == m {
                    &s.points[0].center + Rational::one()
                } else {
                    s.points[i + 1].center.clone()
                };
                let prev = if i == 0 {
                    &s.points[m - 1].center - Rational::one()
                } else {
                    s.points[i - 1].center.clone()
                };
                let nearest = (&next - c).min(c - &prev);
                Point { center: c.clone(), radius: nearest * half() }
            })
            .collect();
        PeriodicSequence { period: Rational::one(), points }
    }

    /// Shifts every center by `d` (in units of the normalized period).
    pub fn translate(&self, d: &Rational) -> PeriodicSequence {
        let s = self.normalize();
        PeriodicSequence {
            period: Rational::one(),
            points: s
                .points
                .iter()
                .map(|p| Point { center: &p.center + d, radius: p.radius.clone() })
                .collect(),
        }
        .normalize_unchecked()
    }

    /// Mirror image under `t -> 1 - t`.
    pub fn reflect(&self) -> PeriodicSequence {
        let s = self.normalize();
        PeriodicSequence {
            period: Rational::one(),
            points: s
                .points
                .iter()
                .map(|p| Point { center: Rational::one() - &p.center, radius: p.radius.clone() })
                .collect(),
        }
        .normalize_unchecked()
    }
}

impl fmt::Display for PeriodicSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_rational(&p.center))?;
            if !p.radius.is_zero() {
                write!(f, " (r={})", format_rational(&p.radius))?;
            }
        }
        write!(f, "}} + {}Z", format_rational(&self.period))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn weighted3() -> PeriodicSequence {
        PeriodicSequence::new(
            int(1),
            vec![
                Point::new(int(0), ratio(1, 12)),
                Point::new(ratio(1, 3), int(0)),
                Point::new(ratio(1, 2), ratio(1, 12)),
            ],
        )
        .unwrap()
    }

    fn centers(s: &PeriodicSequence) -> Vec<Rational> {
        s.centers().cloned().collect()
    }

    fn radii(s: &PeriodicSequence) -> Vec<Rational> {
        s.radii().cloned().collect()
    }

    #[test]
    fn normalize_scales_period_15() {
        let raw = PeriodicSequence::new(
            int(15),
            [0, 1, 3, 4, 5, 7, 9, 10, 12].iter().map(|&c| Point::bare(int(c))).collect(),
        )
        .unwrap();
        let s = raw.normalize();
        assert_eq!(s.period(), &int(1));
        assert_eq!(
            centers(&s),
            [0, 1, 3, 4, 5, 7, 9, 10, 12].iter().map(|&c| ratio(c, 15)).collect::<Vec<_>>()
        );
        assert!(s.radii().all(|r| r.is_zero()));
    }

    #[test]
    fn normalize_sorts_points() {
        let raw = PeriodicSequence::new(
            int(1),
            vec![
                Point::new(ratio(1, 2), ratio(1, 12)),
                Point::new(int(0), ratio(1, 12)),
                Point::new(ratio(1, 3), int(0)),
            ],
        )
        .unwrap();
        let s = raw.normalize();
        assert_eq!(centers(&s), vec![int(0), ratio(1, 3), ratio(1, 2)]);
        assert_eq!(radii(&s), vec![ratio(1, 12), int(0), ratio(1, 12)]);
    }

    #[test]
    fn normalize_scales_radii() {
        let raw = PeriodicSequence::new(
            int(2),
            vec![Point::new(int(0), ratio(1, 6)), Point::bare(ratio(1, 2))],
        )
        .unwrap();
        let s = raw.normalize();
        assert_eq!(centers(&s), vec![int(0), ratio(1, 4)]);
        assert_eq!(radii(&s), vec![ratio(1, 12), int(0)]);
    }

    #[test]
    fn normalize_reduces_out_of_cell_centers() {
        let s = PeriodicSequence::from_centers([ratio(-1, 4), ratio(5, 4)]).unwrap().normalize();
        assert_eq!(centers(&s), vec![ratio(1, 4), ratio(3, 4)]);
    }

    #[test]
    fn normalize_is_idempotent() {
        let s = weighted3().translate(&ratio(2, 7));
        assert_eq!(s.normalize(), s.normalize().normalize());
    }

    #[test]
    fn construction_errors() {
        assert_eq!(PeriodicSequence::new(int(1), vec![]), Err(Error::EmptyMotif));
        assert!(matches!(
            PeriodicSequence::new(int(0), vec![Point::bare(int(0))]),
            Err(Error::NonPositivePeriod(_))
        ));
        assert!(matches!(
            PeriodicSequence::new(int(1), vec![Point::new(int(0), ratio(-1, 5))]),
            Err(Error::NegativeRadius { index: 0, .. })
        ));
        // [0 - 1/4, 1/4] and [1/3 - 1/5, 1/3 + 1/5] overlap
        assert!(matches!(
            PeriodicSequence::new(
                int(1),
                vec![Point::new(int(0), ratio(1, 4)), Point::new(ratio(1, 3), ratio(1, 5))]
            ),
            Err(Error::Overlap { .. })
        ));
        // a lone interval longer than the period overlaps its own translate
        assert!(matches!(
            PeriodicSequence::new(int(1), vec![Point::new(int(0), ratio(3, 5))]),
            Err(Error::Overlap { index: 0, .. })
        ));
        // coincident centers after reduction
        assert!(matches!(
            PeriodicSequence::from_centers([ratio(1, 4), ratio(5, 4)]),
            Err(Error::Overlap { .. })
        ));
    }

    #[test]
    fn gaps_of_weighted3() {
        let g = weighted3().gaps();
        assert_eq!(g.gaps, vec![ratio(1, 3), ratio(1, 4), ratio(1, 12)]);
        assert_eq!(g.total_length, ratio(1, 3));
    }

    #[test]
    fn gaps_single_point() {
        let g = PeriodicSequence::from_centers([int(0)]).unwrap().gaps();
        assert_eq!(g.gaps, vec![int(1)]);
        assert_eq!(g.total_length, int(0));
    }

    #[test]
    fn gaps_touching_intervals() {
        let s = PeriodicSequence::new(
            int(1),
            vec![Point::new(int(0), ratio(1, 4)), Point::new(ratio(1, 2), ratio(1, 4))],
        )
        .unwrap();
        let g = s.gaps();
        assert_eq!(g.gaps, vec![int(0), int(0)]);
        assert_eq!(g.total_length, int(1));
    }

    #[test]
    fn neighbor_radii_examples() {
        let s15 = PeriodicSequence::new(
            int(15),
            [0, 1, 3, 4, 5, 7, 9, 10, 12].iter().map(|&c| Point::bare(int(c))).collect(),
        )
        .unwrap();
        let nr = s15.neighbor_radii();
        assert_eq!(nr.points()[0].radius, ratio(1, 30));
        // 12/15: neighbours 10/15 and 15/15, nearest at distance 2/15
        assert_eq!(nr.points()[8].radius, ratio(1, 15));
        assert!(nr.gaps().gaps.iter().all(|g| !g.is_negative()));

        let two = PeriodicSequence::from_centers([int(0), ratio(1, 2)]).unwrap().neighbor_radii();
        assert_eq!(radii(&two), vec![ratio(1, 4), ratio(1, 4)]);

        let one = PeriodicSequence::from_centers([int(0)]).unwrap().neighbor_radii();
        assert_eq!(radii(&one), vec![ratio(1, 2)]);
    }

    #[test]
    fn translate_and_reflect() {
        let t = weighted3().translate(&ratio(1, 2));
        assert_eq!(centers(&t), vec![int(0), ratio(1, 2), ratio(5, 6)]);
        assert_eq!(radii(&t), vec![ratio(1, 12), ratio(1, 12), int(0)]);

        let r = weighted3().reflect();
        assert_eq!(centers(&r), vec![int(0), ratio(1, 2), ratio(2, 3)]);
        assert_eq!(radii(&r), vec![ratio(1, 12), ratio(1, 12), int(0)]);

        assert_eq!(weighted3().reflect().reflect(), weighted3().normalize());
    }

    #[test]
    fn display() {
        assert_eq!(weighted3().to_string(), "{0 (r=1/12), 1/3, 1/2 (r=1/12)} + 1Z");
    }
}
