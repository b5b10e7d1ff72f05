//! Closed-form density functions `psi_k` of a periodic sequence.
//!
//! `psi_0` is read off the sorted gaps. For `k >= 1`, `psi_k` is the sum of
//! `m` trapezoids, one per window of `k` consecutive intervals: the trapezoid
//! measures the part of the `k`-fold intersection of the window that no
//! neighbouring interval reaches. Window indices run past `m` by unrolling
//! the sequence (`p_{j+m} = p_j + 1`), so every `k` is computed directly.
//!
//! Point and gap indices are zero-based: `gaps[i]` is the gap to the left of
//! interval `i`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::pwl::PiecewiseLinear;
use crate::rational::{half, int, Rational};
use crate::seq::PeriodicSequence;

/// The trapezoid contributed by the window of `k` intervals starting at
/// `index`, described by its generating tuple `(g, s, g')` with `g <= g'`.
///
/// Its graph rises with gradient 2 from `(s/2, 0)` to `((g+s)/2, g)`, stays
/// flat until `((s+g')/2, g)`, and falls back to zero at `((g+s+g')/2, 0)`.
/// For `k = 1` the tuple uses `s = -2 r_i`, so the onset lies at `-r_i` and
/// the function restricted to `t >= 0` starts at height `2 r_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trapezoid {
    pub index: usize,
    pub k: usize,
    pub g: Rational,
    pub s: Rational,
    pub g_prime: Rational,
}

impl Trapezoid {
    pub fn onset(&self) -> Rational {
        &self.s * half()
    }

    pub fn rise_end(&self) -> Rational {
        (&self.g + &self.s) * half()
    }

    pub fn fall_start(&self) -> Rational {
        (&self.s + &self.g_prime) * half()
    }

    pub fn end(&self) -> Rational {
        (&self.g + &self.s + &self.g_prime) * half()
    }

    pub fn height(&self) -> &Rational {
        &self.g
    }

    /// Value of the unclipped trapezoid at any real `t`.
    pub fn value_at(&self, t: &Rational) -> Rational {
        let two = int(2);
        let up = (t - self.onset()) * &two;
        let down = (self.end() - t) * &two;
        up.min(down).min(self.g.clone()).max(Rational::zero())
    }

    /// The trapezoid as a function on `t >= 0`.
    pub fn to_pwl(&self) -> PiecewiseLinear {
        let xs = [self.onset(), self.rise_end(), self.fall_start(), self.end()];
        let corners: Vec<(Rational, Rational)> = xs
            .into_iter()
            .filter(|x| x > &Rational::zero())
            .map(|x| {
                let v = self.value_at(&x);
                (x, v)
            })
            .collect();
        PiecewiseLinear::from_corners(self.value_at(&Rational::zero()), corners)
            .expect("trapezoid corners are ordered and non-negative")
    }
}

/// Normalized motif data indexed cyclically.
#[derive(Debug, Clone)]
pub(crate) struct Motif {
    centers: Vec<Rational>,
    radii: Vec<Rational>,
    gaps: Vec<Rational>,
    total_length: Rational,
}

impl Motif {
    pub(crate) fn new(seq: &PeriodicSequence) -> Self {
        let s = seq.normalize();
        let gv = s.gaps();
        Motif {
            centers: s.centers().cloned().collect(),
            radii: s.radii().cloned().collect(),
            gaps: gv.gaps,
            total_length: gv.total_length,
        }
    }

    fn m(&self) -> usize {
        self.centers.len()
    }

    fn gap(&self, j: usize) -> &Rational {
        &self.gaps[j % self.m()]
    }

    fn radius(&self, j: usize) -> &Rational {
        &self.radii[j % self.m()]
    }

    /// Left endpoint of interval `j` on the unrolled line.
    fn left_end(&self, j: usize) -> Rational {
        let m = self.m();
        &self.centers[j % m] + int((j / m) as i64) - &self.radii[j % m]
    }

    /// Right endpoint of interval `j` on the unrolled line.
    fn right_end(&self, j: usize) -> Rational {
        let m = self.m();
        &self.centers[j % m] + int((j / m) as i64) + &self.radii[j % m]
    }

    fn psi0(&self) -> PiecewiseLinear {
        let m = self.m();
        let mut sorted = self.gaps.clone();
        sorted.sort();
        let start = Rational::one() - &self.total_length;
        let mut covered = Rational::zero();
        let mut corners = Vec::with_capacity(m);
        for (i, g) in sorted.iter().enumerate() {
            let growing = int((m - i) as i64);
            let v = &start - &covered - growing * g;
            corners.push((g * half(), v));
            covered += g;
        }
        PiecewiseLinear::from_corners(start, corners).expect("psi_0 corners are ordered")
    }

    fn trapezoid(&self, k: usize, i: usize) -> Trapezoid {
        debug_assert!(k >= 1);
        let two = int(2);
        let left = self.gap(i) + &two * self.radius(i);
        let right = self.gap(i + k) + &two * self.radius(i + k - 1);
        // distance from the right end of interval i to the left end of
        // interval i + k - 1; equals -2 r_i when k = 1
        let s = self.left_end(i + k - 1) - self.right_end(i);
        let (g, g_prime) = if left <= right { (left, right) } else { (right, left) };
        Trapezoid { index: i, k, g, s, g_prime }
    }

    pub(crate) fn psi(&self, k: usize) -> PiecewiseLinear {
        if k == 0 {
            return self.psi0();
        }
        let parts: Vec<PiecewiseLinear> =
            (0..self.m()).map(|i| self.trapezoid(k, i).to_pwl()).collect();
        PiecewiseLinear::sum(&parts)
    }
}

/// The 0-th density: the uncovered fraction of the cell.
pub fn psi0(seq: &PeriodicSequence) -> PiecewiseLinear {
    Motif::new(seq).psi0()
}

/// Trapezoid of the single interval `i` (zero-based), whose sum over all
/// `i` is `psi_1`.
///
/// Corners: `(0, 2r_i)`, `(g_i/2, g + 2r_i)`, `(g_{i+1}/2, g + 2r_i)`,
/// `((g_i + g_{i+1})/2 + r_i, 0)` with `g = min(g_i, g_{i+1})`; in the
/// stored tuple this is `(g + 2r_i, -2r_i, max(g_i, g_{i+1}) + 2r_i)`.
pub fn trapezoid1(seq: &PeriodicSequence, i: usize) -> Result<Trapezoid> {
    let motif = Motif::new(seq);
    let m = motif.m();
    if i >= m {
        return Err(Error::IndexOutOfRange { index: i, len: m });
    }
    let two = int(2);
    let r = motif.radius(i);
    let (lo, hi) = {
        let a = motif.gap(i);
        let b = motif.gap(i + 1);
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    };
    Ok(Trapezoid {
        index: i,
        k: 1,
        g: lo + &two * r,
        s: -(&two * r),
        g_prime: hi + &two * r,
    })
}

/// Trapezoid of the window of `k >= 2` intervals starting at `i`
/// (zero-based).
pub fn trapezoid_k(seq: &PeriodicSequence, k: usize, i: usize) -> Result<Trapezoid> {
    let motif = Motif::new(seq);
    let m = motif.m();
    if i >= m {
        return Err(Error::IndexOutOfRange { index: i, len: m });
    }
    if k < 2 {
        return Err(Error::IndexTooSmall { k, m: 2 });
    }
    Ok(motif.trapezoid(k, i))
}

/// The `k`-th density function.
pub fn psi(seq: &PeriodicSequence, k: usize) -> PiecewiseLinear {
    Motif::new(seq).psi(k)
}

/// `psi_k` for `k >= m` assembled from the index periodicity
/// `psi_{k+m}(t + 1/2) = psi_k(t)`: on `[1/2, inf)` it is `psi_{k-m}` shifted
/// right by one half, on `[0, 1/2)` it is `psi_k` itself.
///
/// Fails with [`Error::Discontinuity`] if the two pieces disagree at one
/// half, which would mean the periodicity is violated.
pub fn psi_via_periodicity(seq: &PeriodicSequence, k: usize) -> Result<PiecewiseLinear> {
    let motif = Motif::new(seq);
    let m = motif.m();
    if k < m {
        return Err(Error::IndexTooSmall { k, m });
    }
    let direct = motif.psi(k);
    let lower = motif.psi(k - m);
    let h = half();
    let mut corners: Vec<(Rational, Rational)> = direct
        .corners()
        .iter()
        .skip(1)
        .take_while(|c| c.t < h)
        .map(|c| (c.t.clone(), c.v.clone()))
        .collect();
    corners.push((h.clone(), direct.evaluate(&h)?));
    corners.extend(lower.corners().iter().map(|c| (&c.t + &h, c.v.clone())));
    PiecewiseLinear::from_corners(direct.start_value().clone(), corners)
}

/// The densities `psi_0 ..= psi_K` of one sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityFingerprint {
    sequence: PeriodicSequence,
    functions: Vec<PiecewiseLinear>,
}

impl DensityFingerprint {
    pub fn sequence(&self) -> &PeriodicSequence {
        &self.sequence
    }

    pub fn motif_size(&self) -> usize {
        self.sequence.len()
    }

    /// Largest stored index `K`.
    pub fn depth(&self) -> usize {
        self.functions.len() - 1
    }

    pub fn functions(&self) -> &[PiecewiseLinear] {
        &self.functions
    }

    pub fn get(&self, k: usize) -> Option<&PiecewiseLinear> {
        self.functions.get(k)
    }

    /// `psi_k(t)` for any `k`. Indices beyond the stored depth are reduced
    /// by the periodicity rule where `t >= 1/2` and computed directly
    /// otherwise.
    pub fn evaluate(&self, k: usize, t: &Rational) -> Result<Rational> {
        if let Some(f) = self.functions.get(k) {
            return f.evaluate(t);
        }
        let m = self.motif_size();
        let h = half();
        if k >= m && t >= &h {
            return self.evaluate(k - m, &(t - &h));
        }
        psi(&self.sequence, k).evaluate(t)
    }
}

/// `psi_0 ..= psi_depth` in closed form.
pub fn fingerprint(seq: &PeriodicSequence, depth: usize) -> DensityFingerprint {
    let motif = Motif::new(seq);
    DensityFingerprint {
        sequence: seq.normalize(),
        functions: (0..=depth).map(|k| motif.psi(k)).collect(),
    }
}

/// Fingerprint with the default depth `K = m`.
pub fn default_fingerprint(seq: &PeriodicSequence) -> DensityFingerprint {
    fingerprint(seq, seq.len())
}

/// Accumulated densities `psi_1 + ... + psi_k` for `k = 1..=K`.
pub fn densigram(fp: &DensityFingerprint) -> Vec<PiecewiseLinear> {
    let mut acc = PiecewiseLinear::zero();
    fp.functions
        .iter()
        .skip(1)
        .map(|f| {
            acc = acc.add(f);
            acc.clone()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
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

    fn pwl(start: Rational, corners: &[(Rational, Rational)]) -> PiecewiseLinear {
        PiecewiseLinear::from_corners(start, corners.iter().cloned()).unwrap()
    }

    #[test]
    fn psi0_weighted3() {
        assert_eq!(
            psi0(&weighted3()),
            pwl(
                ratio(2, 3),
                &[(ratio(1, 24), ratio(5, 12)), (ratio(1, 8), ratio(1, 12)), (ratio(1, 6), int(0))]
            )
        );
    }

    #[test]
    fn psi0_single_point() {
        let s = PeriodicSequence::from_centers([int(0)]).unwrap();
        assert_eq!(psi0(&s), pwl(int(1), &[(ratio(1, 2), int(0))]));
    }

    #[test]
    fn psi0_fully_covered() {
        let s = PeriodicSequence::new(
            int(1),
            vec![Point::new(int(0), ratio(1, 4)), Point::new(ratio(1, 2), ratio(1, 4))],
        )
        .unwrap();
        assert_eq!(psi0(&s), PiecewiseLinear::zero());
    }

    #[test]
    fn psi1_trapezoids() {
        let s = weighted3();
        let red = trapezoid1(&s, 0).unwrap().to_pwl();
        assert_eq!(
            red,
            pwl(
                ratio(1, 6),
                &[(ratio(1, 8), ratio(5, 12)), (ratio(1, 6), ratio(5, 12)), (ratio(3, 8), int(0))]
            )
        );
        let green = trapezoid1(&s, 1).unwrap().to_pwl();
        assert_eq!(
            green,
            pwl(int(0), &[(ratio(1, 24), ratio(1, 12)), (ratio(1, 8), ratio(1, 12)), (ratio(1, 6), int(0))])
        );
        let blue = trapezoid1(&s, 2).unwrap().to_pwl();
        assert_eq!(
            blue,
            pwl(
                ratio(1, 6),
                &[(ratio(1, 24), ratio(1, 4)), (ratio(1, 6), ratio(1, 4)), (ratio(7, 24), int(0))]
            )
        );
        assert_eq!(psi(&s, 1), PiecewiseLinear::sum([&red, &green, &blue]));
        assert!(matches!(trapezoid1(&s, 3), Err(Error::IndexOutOfRange { index: 3, len: 3 })));
    }

    #[test]
    fn psi2_trapezoids() {
        let s = weighted3();
        let gb = trapezoid_k(&s, 2, 1).unwrap();
        assert_eq!((gb.g.clone(), gb.s.clone(), gb.g_prime.clone()), (ratio(1, 4), ratio(1, 12), ratio(1, 2)));
        assert_eq!(
            gb.to_pwl(),
            pwl(
                int(0),
                &[
                    (ratio(1, 24), int(0)),
                    (ratio(1, 6), ratio(1, 4)),
                    (ratio(7, 24), ratio(1, 4)),
                    (ratio(5, 12), int(0))
                ]
            )
        );
        let br = trapezoid_k(&s, 2, 2).unwrap();
        assert_eq!(
            [br.onset(), br.rise_end(), br.fall_start(), br.end()],
            [ratio(1, 6), ratio(7, 24), ratio(3, 8), ratio(1, 2)]
        );
        assert_eq!(br.height(), &ratio(1, 4));
        let rg = trapezoid_k(&s, 2, 0).unwrap();
        assert_eq!(
            [rg.onset(), rg.rise_end(), rg.fall_start(), rg.end()],
            [ratio(1, 8), ratio(1, 6), ratio(3, 8), ratio(5, 12)]
        );
        assert_eq!(rg.height(), &ratio(1, 12));
        assert_eq!(psi(&s, 2), PiecewiseLinear::sum([&gb.to_pwl(), &br.to_pwl(), &rg.to_pwl()]));
        assert!(matches!(trapezoid_k(&s, 2, 5), Err(Error::IndexOutOfRange { .. })));
        assert!(trapezoid_k(&s, 1, 0).is_err());
    }

    #[test]
    fn window_distance_matches_gap_sum() {
        // s = sum_{j=i+1}^{i+k-1} g_j + 2 sum_{j=i+1}^{i+k-2} r_j, written out
        let s = weighted3().translate(&ratio(1, 7));
        let motif = Motif::new(&s);
        let m = motif.m();
        for k in 2..=3 * m {
            for i in 0..m {
                let mut expect = Rational::zero();
                for j in i + 1..i + k {
                    expect += motif.gap(j);
                }
                for j in i + 1..i + k - 1 {
                    expect += int(2) * motif.radius(j);
                }
                assert_eq!(motif.trapezoid(k, i).s, expect, "k={k} i={i}");
            }
        }
    }

    #[test]
    fn trapezoid1_matches_uniform_window_formula() {
        let s = weighted3();
        let motif = Motif::new(&s);
        for i in 0..3 {
            assert_eq!(trapezoid1(&s, i).unwrap(), motif.trapezoid(1, i));
        }
    }

    #[test]
    fn periodicity_values_from_example() {
        let s = weighted3();
        assert_eq!(psi(&s, 3).evaluate(&ratio(1, 2)).unwrap(), ratio(2, 3));
        assert_eq!(psi(&s, 4).evaluate(&ratio(1, 2)).unwrap(), ratio(1, 3));
        assert_eq!(psi(&s, 6).evaluate(&int(1)).unwrap(), ratio(2, 3));
    }

    #[test]
    fn psi_via_periodicity_agrees() {
        let s = weighted3();
        let p3 = psi_via_periodicity(&s, 3).unwrap();
        assert_eq!(p3.evaluate(&(ratio(1, 2) + ratio(1, 24))).unwrap(), ratio(5, 12));
        assert_eq!(p3.evaluate(&ratio(1, 2)).unwrap(), ratio(2, 3));
        assert_eq!(psi_via_periodicity(&s, 6).unwrap().evaluate(&int(1)).unwrap(), ratio(2, 3));
        for k in 3..=9 {
            assert_eq!(psi_via_periodicity(&s, k).unwrap(), psi(&s, k), "k={k}");
        }
        assert_eq!(psi_via_periodicity(&s, 2), Err(Error::IndexTooSmall { k: 2, m: 3 }));
    }

    #[test]
    fn fingerprint_and_densigram() {
        let s = weighted3();
        let fp = fingerprint(&s, 9);
        assert_eq!(fp.depth(), 9);
        assert_eq!(fp.get(0), Some(&psi0(&s)));
        assert_eq!(fingerprint(&s, 0).functions().len(), 1);
        assert_eq!(default_fingerprint(&s).depth(), 3);

        // beyond the stored depth
        let short = fingerprint(&s, 3);
        for k in 0..=9 {
            for t in [int(0), ratio(1, 5), ratio(1, 2), ratio(7, 10), int(2)] {
                assert_eq!(short.evaluate(k, &t).unwrap(), fp.evaluate(k, &t).unwrap());
            }
        }

        let dg = densigram(&fp);
        assert_eq!(dg.len(), 9);
        assert_eq!(dg[0], psi(&s, 1));
        assert_eq!(dg[2].evaluate(&int(0)).unwrap(), ratio(1, 3));
        for w in dg.windows(2) {
            for c in w[0].corners().iter().chain(w[1].corners()) {
                assert!(w[1].evaluate(&c.t).unwrap() >= w[0].evaluate(&c.t).unwrap());
            }
        }
    }
}
