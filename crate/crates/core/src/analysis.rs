//! Fingerprint comparison and isometry tests.

use std::fmt;

use num_traits::One;

use crate::densities::Motif;
use crate::error::{Error, Result};
use crate::pwl::PiecewiseLinear;
use crate::rational::{format_rational, int, Rational};
use crate::seq::{PeriodicSequence, Point};

/// Outcome of comparing two fingerprints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonReport {
    pub equal: bool,
    /// Number of density functions compared (`psi_0 ..= psi_{compared-1}`).
    pub compared: usize,
    pub first_differing_k: Option<usize>,
    pub witness_t: Option<Rational>,
    pub value_s: Option<Rational>,
    pub value_q: Option<Rational>,
}

impl ComparisonReport {
    fn equal(compared: usize) -> Self {
        ComparisonReport {
            equal: true,
            compared,
            first_differing_k: None,
            witness_t: None,
            value_s: None,
            value_q: None,
        }
    }

    /// CSV with header `k,witness_t,value_s,value_q`; one row when the
    /// fingerprints differ, none otherwise.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,witness_t,value_s,value_q\n");
        if let (Some(k), Some(t), Some(a), Some(b)) =
            (self.first_differing_k, &self.witness_t, &self.value_s, &self.value_q)
        {
            out.push_str(&format!(
                "{k},{},{},{}\n",
                format_rational(t),
                format_rational(a),
                format_rational(b)
            ));
        }
        out
    }
}

impl fmt::Display for ComparisonReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.equal {
            return write!(f, "fingerprints equal (psi_0..psi_{} compared)", self.compared - 1);
        }
        writeln!(f, "fingerprints differ")?;
        if let Some(k) = self.first_differing_k {
            writeln!(f, "first differing k: {k}")?;
        }
        if let (Some(t), Some(a), Some(b)) = (&self.witness_t, &self.value_s, &self.value_q) {
            writeln!(f, "witness t: {}", format_rational(t))?;
            writeln!(f, "psi_k[S](t) = {}", format_rational(a))?;
            write!(f, "psi_k[Q](t) = {}", format_rational(b))?;
        }
        Ok(())
    }
}

// First abscissa (corner of either function, or a point past both tails)
// where the two functions differ.
fn witness(f: &PiecewiseLinear, g: &PiecewiseLinear) -> Option<(Rational, Rational, Rational)> {
    let mut ts: Vec<Rational> = f.abscissas().chain(g.abscissas()).cloned().collect();
    ts.push(f.last_abscissa().max(g.last_abscissa()) + Rational::one());
    ts.sort();
    ts.dedup();
    ts.into_iter().find_map(|t| {
        let a = f.evaluate(&t).expect("t >= 0");
        let b = g.evaluate(&t).expect("t >= 0");
        (a != b).then_some((t, a, b))
    })
}

/// Compares `psi_k[S]` and `psi_k[Q]` exactly for `k = 0 ..= max(m_S, m_Q)`.
pub fn fingerprints_equal(s: &PeriodicSequence, q: &PeriodicSequence) -> ComparisonReport {
    let depth = s.len().max(q.len());
    let ms = Motif::new(s);
    let mq = Motif::new(q);
    for k in 0..=depth {
        let fs = ms.psi(k);
        let fq = mq.psi(k);
        if fs == fq {
            continue;
        }
        if k > depth / 2 {
            log::info!("fingerprints first differ at k = {k}, beyond floor(m/2) = {}", depth / 2);
        }
        let (t, a, b) = witness(&fs, &fq).expect("distinct canonical functions differ at a corner");
        return ComparisonReport {
            equal: false,
            compared: depth + 1,
            first_differing_k: Some(k),
            witness_t: Some(t),
            value_s: Some(a),
            value_q: Some(b),
        };
    }
    ComparisonReport::equal(depth + 1)
}

/// Whether `q` is the image of `s` under a translation, possibly composed
/// with the reflection `t -> -t`.
pub fn isometric(s: &PeriodicSequence, q: &PeriodicSequence) -> bool {
    if s.len() != q.len() {
        return false;
    }
    let q = q.normalize();
    let candidates = [s.normalize(), s.reflect()];
    candidates.iter().any(|base| {
        let anchor = &base.points()[0].center;
        q.points().iter().any(|target| {
            target.radius == base.points()[0].radius && base.translate(&(&target.center - anchor)) == q
        })
    })
}

/// The zero-radius sequence
/// `{0, 2, 3, ..., i+2, i+4, i+5, ..., m+2} + (m+2)Z`, normalized.
///
/// Its gaps are `m - 2` ones and two twos (in units of `1/(m+2)`), with `i`
/// ones between the twos on one side.
pub fn smi_family(m: usize, i: usize) -> Result<PeriodicSequence> {
    if m < 4 || i < 1 || i > m - 3 {
        return Err(Error::IndexOutOfRange { index: i, len: m });
    }
    let m = m as i64;
    let i = i as i64;
    // m + 2 coincides with 0 modulo the period
    let centers = std::iter::once(0).chain(2..=i + 2).chain(i + 4..=m + 1);
    let seq = PeriodicSequence::new(int(m + 2), centers.map(|c| Point::bare(int(c))).collect())?;
    Ok(seq.normalize())
}
