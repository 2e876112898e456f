#![allow(dead_code)]

use denseregion::{validate_bounds, BinarySequence, DensityBounds, LengthConstraint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random valid bounds with both denominators at most `max(n, 3)`.
pub fn random_bounds(rng: &mut ChaCha8Rng, n: usize) -> DensityBounds {
    let cap = n.max(3) as i64;
    loop {
        let d1 = rng.gen_range(2..=cap);
        let d2 = rng.gen_range(2..=cap);
        let c1 = rng.gen_range(1..d1);
        let c2 = rng.gen_range(1..d2);
        if c1 * d2 < c2 * d1 {
            return validate_bounds(c1, d1, c2, d2, n.max(3)).unwrap();
        }
    }
}

/// Sequence of length `n` with `p(1)` drawn from {0.1, ..., 0.9}.
pub fn random_sequence(rng: &mut ChaCha8Rng, n: usize) -> BinarySequence {
    let tenths = rng.gen_range(1..=9u32);
    let digits = (0..n)
        .map(|_| (rng.gen_range(0..10) < tenths) as u8)
        .collect();
    BinarySequence::new(digits).unwrap()
}

pub fn random_instance(rng: &mut ChaCha8Rng, max_n: usize) -> (BinarySequence, DensityBounds) {
    let n = rng.gen_range(1..=max_n);
    let seq = random_sequence(rng, n);
    let bounds = random_bounds(rng, n);
    (seq, bounds)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Unconstrained,
    MinOnly,
    MinMax,
}

pub const MODES: [Mode; 3] = [Mode::Unconstrained, Mode::MinOnly, Mode::MinMax];

pub fn random_constraint(rng: &mut ChaCha8Rng, n: usize, mode: Mode) -> Option<LengthConstraint> {
    match mode {
        Mode::Unconstrained => None,
        Mode::MinOnly => Some(LengthConstraint::new(rng.gen_range(1..=n), None).unwrap()),
        Mode::MinMax => {
            let min = rng.gen_range(1..=n);
            let max = rng.gen_range(min..=n);
            Some(LengthConstraint::new(min, Some(max)).unwrap())
        }
    }
}

/// Favors small minimum lengths, where constrained searches are hardest.
pub fn small_constraint(rng: &mut ChaCha8Rng, n: usize, mode: Mode) -> Option<LengthConstraint> {
    let top = n.min(12);
    match mode {
        Mode::Unconstrained => None,
        Mode::MinOnly => Some(LengthConstraint::new(rng.gen_range(1..=top), None).unwrap()),
        Mode::MinMax => {
            let min = rng.gen_range(1..=top);
            let max = rng.gen_range(min..=(min + 20).min(n.max(min)));
            Some(LengthConstraint::new(min, Some(max)).unwrap())
        }
    }
}
