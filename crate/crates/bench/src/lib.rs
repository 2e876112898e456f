//! Seeded inputs shared by the benchmarks.

use denseregion::{validate_bounds, BinarySequence, DensityBounds};

pub const SIZES: [usize; 3] = [10_000, 100_000, 1_000_000];

/// A fair-coin sequence of length `n`.
pub fn sequence(n: usize, seed: u64) -> BinarySequence {
    BinarySequence::random(n, seed, 1, 2).expect("valid probability")
}

/// Bounds `[2/5, 3/5]`.
pub fn bounds() -> DensityBounds {
    validate_bounds(2, 5, 3, 5, 5).expect("valid bounds")
}
