//! Built-in sequences used by the examples, tests and the CLI `demo`.

use crate::analysis::smi_family;
use crate::rational::{int, ratio};
use crate::seq::{PeriodicSequence, Point};

pub const NAMES: &[&str] = &["weighted3", "s15", "q15", "multimax2", "multimax3", "multimax5", "smi"];

fn period15(centers: &[i64]) -> PeriodicSequence {
    PeriodicSequence::new(int(15), centers.iter().map(|&c| Point::bare(int(c))).collect())
        .expect("fixture is valid")
}

fn unit(centers: &[(i64, i64)]) -> PeriodicSequence {
    PeriodicSequence::from_centers(centers.iter().map(|&(n, d)| ratio(n, d))).expect("fixture is valid")
}

/// Three points `0, 1/3, 1/2` with radii `1/12, 0, 1/12`.
pub fn weighted3() -> PeriodicSequence {
    PeriodicSequence::new(
        int(1),
        vec![
            Point::new(int(0), ratio(1, 12)),
            Point::new(ratio(1, 3), int(0)),
            Point::new(ratio(1, 2), ratio(1, 12)),
        ],
    )
    .expect("fixture is valid")
}

/// `{0,1,3,4,5,7,9,10,12} + 15Z`, homometric to [`q15`].
pub fn s15() -> PeriodicSequence {
    period15(&[0, 1, 3, 4, 5, 7, 9, 10, 12])
}

/// `{0,1,3,4,6,8,9,12,14} + 15Z`.
pub fn q15() -> PeriodicSequence {
    period15(&[0, 1, 3, 4, 6, 8, 9, 12, 14])
}

/// `psi_2` has two local maxima.
pub fn multimax2() -> PeriodicSequence {
    unit(&[(0, 1), (1, 8), (1, 4), (3, 4)])
}

/// `psi_2` has three local maxima.
pub fn multimax3() -> PeriodicSequence {
    unit(&[(0, 1), (1, 81), (1, 27), (1, 9), (1, 3)])
}

/// Six points expected to give `psi_3` five local maxima; exact
/// evaluation finds four.
pub fn multimax5() -> PeriodicSequence {
    unit(&[(0, 1), (1, 64), (1, 16), (1, 8), (1, 4), (3, 4)])
}

/// `S_{6,1}` from [`smi_family`].
pub fn smi() -> PeriodicSequence {
    smi_family(6, 1).expect("valid family index")
}

pub fn by_name(name: &str) -> Option<PeriodicSequence> {
    Some(match name {
        "weighted3" => weighted3(),
        "s15" => s15(),
        "q15" => q15(),
        "multimax2" => multimax2(),
        "multimax3" => multimax3(),
        "multimax5" => multimax5(),
        "smi" => smi(),
        _ => return None,
    })
}
