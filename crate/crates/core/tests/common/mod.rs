#![allow(dead_code)]

use pdens_core::rational::{int, ratio};
use pdens_core::{PeriodicSequence, Point, Rational};
use proptest::prelude::*;
use rand::seq::index::sample;
use rand::Rng;

/// A random valid sequence with `m <= max_m` points whose centers and radii
/// have denominators at most 64 (centers `c/D`, radii `j/(2D)`, `D <= 32`).
pub fn random_sequence<R: Rng>(rng: &mut R, max_m: usize) -> PeriodicSequence {
    let m = rng.gen_range(1..=max_m);
    let den = rng.gen_range(m.max(2)..=32) as i64;
    let mut cs: Vec<i64> = sample(rng, den as usize, m).into_iter().map(|c| c as i64).collect();
    cs.sort();
    build(den, &cs, |_, max_j| if rng.gen_bool(0.25) { 0 } else { rng.gen_range(0..=max_j) })
}

fn build(den: i64, cs: &[i64], mut pick: impl FnMut(usize, i64) -> i64) -> PeriodicSequence {
    let m = cs.len();
    let points = (0..m)
        .map(|i| {
            let next = if i + 1 == m { cs[0] + den } else { cs[i + 1] };
            let prev = if i == 0 { cs[m - 1] - den } else { cs[i - 1] };
            let nearest = (next - cs[i]).min(cs[i] - prev);
            Point::new(ratio(cs[i], den), ratio(pick(i, nearest), 2 * den))
        })
        .collect();
    PeriodicSequence::new(int(1), points).expect("generated sequence is valid")
}

/// Random `t = a/b` in `[0, max]` with `b <= 64`.
pub fn random_t<R: Rng>(rng: &mut R, max: i64) -> Rational {
    let b = rng.gen_range(1..=64);
    ratio(rng.gen_range(0..=max * b), b)
}

pub fn arb_sequence(max_m: usize) -> impl Strategy<Value = PeriodicSequence> {
    (1..=max_m)
        .prop_flat_map(|m| (Just(m), m.max(2)..=32usize))
        .prop_flat_map(|(m, den)| {
            (
                Just(den),
                proptest::sample::subsequence((0..den as i64).collect::<Vec<_>>(), m),
                prop::collection::vec(0.0f64..=1.0, m),
            )
        })
        .prop_map(|(den, cs, fracs)| {
            build(den as i64, &cs, |i, max_j| (fracs[i] * (max_j as f64)).floor() as i64)
        })
}

pub fn arb_t(max: i64) -> impl Strategy<Value = Rational> {
    (1..=64i64).prop_flat_map(move |b| (0..=max * b).prop_map(move |a| ratio(a, b)))
}
