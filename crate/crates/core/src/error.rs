use thiserror::Error;

use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("motif is empty")]
    EmptyMotif,
    #[error("period must be positive, got {0}")]
    NonPositivePeriod(Rational),
    #[error("point {index} has negative radius {radius}")]
    NegativeRadius { index: usize, radius: Rational },
    #[error("intervals overlap: gap before point {index} is {gap}")]
    Overlap { index: usize, gap: Rational },
    #[error("corner abscissas must be non-decreasing ({prev} then {next})")]
    NonMonotoneAbscissas { prev: Rational, next: Rational },
    #[error("function is discontinuous at t = {0}")]
    Discontinuity(Rational),
    #[error("negative value {value} at t = {t}")]
    NegativeValue { t: Rational, value: Rational },
    #[error("argument must be non-negative, got {0}")]
    NegativeArgument(Rational),
    #[error("index {index} out of range for motif of size {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("fold index {k} is smaller than the motif size {m}")]
    IndexTooSmall { k: usize, m: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
