//! Brute-force coverage by an exact endpoint sweep.
//!
//! Grows every interval of the unrolled sequence by `t`, clips the copies
//! that reach the unit cell to `[0, 1]`, and measures how much of the cell is
//! covered exactly `k` times. Nothing here uses gaps or trapezoids, so the
//! results are an independent check on the closed forms.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::pwl::PiecewiseLinear;
use crate::rational::{ceil_i64, int, Rational};
use crate::seq::PeriodicSequence;

/// Lengths of the regions of the unit cell covered exactly `k` times.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageProfile {
    pub t: Rational,
    /// Only non-zero lengths are stored.
    pub lengths: BTreeMap<usize, Rational>,
}

impl CoverageProfile {
    /// Length of the `k`-fold region; zero when absent.
    pub fn length(&self, k: usize) -> Rational {
        self.lengths.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total(&self) -> Rational {
        self.lengths.values().sum()
    }

    pub fn max_fold(&self) -> usize {
        self.lengths.keys().next_back().copied().unwrap_or(0)
    }
}

pub fn coverage(seq: &PeriodicSequence, t: &Rational) -> Result<CoverageProfile> {
    if t.is_negative() {
        return Err(Error::NegativeArgument(t.clone()));
    }
    let s = seq.normalize();
    let zero = Rational::zero();
    let one = Rational::one();
    let reach = ceil_i64(&(t * int(2))) + 1;

    // +1 where a grown copy starts, -1 where it ends, clipped to the cell
    let mut events: Vec<(Rational, i64)> = Vec::new();
    let mut covering_origin = 0i64;
    for z in -reach..=reach {
        for p in s.points() {
            let lo = &p.center + int(z) - &p.radius - t;
            let hi = &p.center + int(z) + &p.radius + t;
            if hi <= zero || lo >= one {
                continue;
            }
            if lo <= zero {
                covering_origin += 1;
            } else {
                events.push((lo, 1));
            }
            if hi < one {
                events.push((hi, -1));
            }
        }
    }
    events.sort_by(|a, b| a.0.cmp(&b.0));

    let mut lengths: BTreeMap<usize, Rational> = BTreeMap::new();
    let mut count = covering_origin;
    let mut x = zero;
    let mut i = 0;
    loop {
        let next = if i < events.len() { events[i].0.clone() } else { one.clone() };
        if next > x {
            let k = usize::try_from(count).expect("coverage count is non-negative");
            *lengths.entry(k).or_insert_with(Rational::zero) += &next - &x;
            x = next.clone();
        }
        if i >= events.len() {
            break;
        }
        while i < events.len() && events[i].0 == next {
            count += events[i].1;
            i += 1;
        }
    }
    lengths.retain(|_, v| !v.is_zero());
    Ok(CoverageProfile { t: t.clone(), lengths })
}

/// A sample where a claimed density disagrees with the sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub t: Rational,
    pub claimed: Rational,
    pub actual: Rational,
}

/// Compares `f`, claimed to be `psi_k`, with the sweep at every sample.
/// Negative samples are skipped.
pub fn sample_check(
    seq: &PeriodicSequence,
    f: &PiecewiseLinear,
    k: usize,
    samples: &[Rational],
) -> Vec<Mismatch> {
    samples
        .iter()
        .filter(|t| !t.is_negative())
        .filter_map(|t| {
            let claimed = f.evaluate(t).expect("non-negative sample");
            let actual = coverage(seq, t).expect("non-negative sample").length(k);
            (claimed != actual).then(|| Mismatch { t: t.clone(), claimed, actual })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::densities::{psi, psi0};
    use crate::rational::ratio;
    use crate::seq::Point;

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

    fn profile(pairs: &[(usize, Rational)]) -> BTreeMap<usize, Rational> {
        pairs.iter().cloned().collect()
    }

    #[test]
    fn weighted3_at_zero_and_half() {
        let s = weighted3();
        assert_eq!(
            coverage(&s, &int(0)).unwrap().lengths,
            profile(&[(0, ratio(2, 3)), (1, ratio(1, 3))])
        );
        let half = coverage(&s, &ratio(1, 2)).unwrap();
        assert_eq!(half.length(3), ratio(2, 3));
        assert_eq!(half.length(4), ratio(1, 3));
        assert_eq!(half.total(), int(1));
    }

    #[test]
    fn single_point() {
        let s = PeriodicSequence::from_centers([int(0)]).unwrap();
        assert_eq!(
            coverage(&s, &ratio(3, 4)).unwrap().lengths,
            profile(&[(1, ratio(1, 2)), (2, ratio(1, 2))])
        );
    }

    #[test]
    fn psi0_at_corner_midpoint() {
        assert_eq!(coverage(&weighted3(), &ratio(1, 12)).unwrap().length(0), ratio(1, 4));
    }

    #[test]
    fn negative_radius_rejected() {
        assert!(matches!(coverage(&weighted3(), &ratio(-1, 3)), Err(Error::NegativeArgument(_))));
    }

    #[test]
    fn sample_check_examples() {
        let s = weighted3();
        let f0 = psi0(&s);
        let mut samples: Vec<Rational> = f0.abscissas().cloned().collect();
        let mids: Vec<Rational> = samples.windows(2).map(|w| (&w[0] + &w[1]) / int(2)).collect();
        samples.extend(mids);
        assert!(sample_check(&s, &f0, 0, &samples).is_empty());

        let samples: Vec<Rational> =
            vec![ratio(1, 24), ratio(1, 6), ratio(7, 24), ratio(5, 12), int(1)];
        assert!(sample_check(&s, &psi(&s, 2), 2, &samples).is_empty());

        let wrong = PiecewiseLinear::from_corners(
            ratio(2, 3),
            [
                (ratio(1, 24), ratio(5, 12) + ratio(1, 100)),
                (ratio(1, 8), ratio(1, 12)),
                (ratio(1, 6), int(0)),
            ],
        )
        .unwrap();
        let corners: Vec<Rational> = wrong.abscissas().cloned().collect();
        let bad = sample_check(&s, &wrong, 0, &corners);
        assert_eq!(bad.len(), 1);
        assert_eq!(bad[0].t, ratio(1, 24));
        assert_eq!(bad[0].actual, ratio(5, 12));
    }

    #[test]
    fn emptiness_is_monotone_and_isometry_invariant() {
        let s = weighted3();
        let moved = s.translate(&ratio(3, 11));
        let mirrored = s.reflect();
        let mut prev = int(2);
        for n in 0..40 {
            let t = ratio(n, 48);
            let c = coverage(&s, &t).unwrap();
            assert_eq!(c.total(), int(1));
            assert!(c.length(0) <= prev);
            prev = c.length(0);
            assert_eq!(coverage(&moved, &t).unwrap(), c);
            assert_eq!(coverage(&mirrored, &t).unwrap(), c);
            let m = s.len();
            assert!(c.max_fold() <= m * (crate::rational::ceil_i64(&(&t * int(2))) as usize + 1));
        }
    }
}
