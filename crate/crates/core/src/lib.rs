//! Exact density functions of periodic sequences of weighted points on the
//! real line.
//!
//! A periodic sequence is a motif of closed intervals `[p_i - r_i, p_i + r_i]`
//! repeated with period one. Growing every interval by `t` and measuring the
//! fraction of the unit cell covered by exactly `k` intervals gives the
//! density function `psi_k(t)`. All densities are continuous and piecewise
//! linear with rational corners; the family `{psi_k}` is an isometry
//! invariant of the sequence.
//!
//! ```
//! use pdens_core::{psi, parse_sequence, format_rational};
//!
//! let s = parse_sequence("period 1\n0 1/12\n1/3 0\n1/2 1/12\n").unwrap();
//! let psi0 = psi(&s, 0);
//! let corners: Vec<String> = psi0
//!     .corners()
//!     .iter()
//!     .map(|c| format!("({}, {})", format_rational(&c.t), format_rational(&c.v)))
//!     .collect();
//! assert_eq!(corners, ["(0, 2/3)", "(1/24, 5/12)", "(1/8, 1/12)", "(1/6, 0)"]);
//! ```

// errors carry the offending exact values, which makes them large
#![allow(clippy::result_large_err)]

pub mod analysis;
pub mod densities;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod oracle;
pub mod pwl;
pub mod rational;
pub mod seq;

pub use analysis::{fingerprints_equal, isometric, smi_family, ComparisonReport};
pub use densities::{
    default_fingerprint, densigram, fingerprint, psi, psi0, psi_via_periodicity, trapezoid1,
    trapezoid_k, DensityFingerprint, Trapezoid,
};
pub use error::{Error, Result};
pub use io::{parse_sequence, pwl_from_csv, pwl_to_csv, write_sequence, ParseError};
pub use oracle::{coverage, sample_check, CoverageProfile, Mismatch};
pub use pwl::{Corner, LocalMax, PiecewiseLinear};
pub use rational::{format_rational, parse_rational, to_decimal, Rational};
pub use seq::{GapVector, PeriodicSequence, Point};
