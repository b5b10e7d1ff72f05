//! Inputs shared by the benchmarks.

use pdens_core::rational::{int, ratio};
use pdens_core::{PeriodicSequence, Point};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `m` random intervals on a grid of `4m` cells with random admissible radii.
pub fn random_sequence(m: usize, seed: u64) -> PeriodicSequence {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let den = 4 * m;
    let mut cs = sample(&mut rng, den, m).into_vec();
    cs.sort_unstable();
    let points = (0..m)
        .map(|i| {
            let next = if i + 1 == m { cs[0] + den - cs[i] } else { cs[i + 1] - cs[i] };
            let prev = if i == 0 { cs[0] + den - cs[m - 1] } else { cs[i] - cs[i - 1] };
            let r = rng.gen_range(0..=next.min(prev));
            Point::new(ratio(cs[i] as i64, den as i64), ratio(r as i64, 2 * den as i64))
        })
        .collect();
    PeriodicSequence::new(int(1), points).expect("radii fit between neighbours")
}
