use std::collections::BTreeSet;

use denseregion::VebSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn replay(bits: u32, ops: usize, seed: u64) {
    let universe = 1u64 << bits;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut veb = VebSet::new(universe);
    let mut set = BTreeSet::new();
    // Draw keys from a window so that hits and misses both occur.
    let span = universe.min(4096);
    let base = rng.gen_range(0..=universe - span);
    for _ in 0..ops {
        let k = base + rng.gen_range(0..span);
        match rng.gen_range(0..6) {
            0 | 1 => assert_eq!(veb.insert(k).unwrap(), set.insert(k)),
            2 => assert_eq!(veb.remove(k).unwrap(), set.remove(&k)),
            3 => assert_eq!(
                veb.successor(k).unwrap(),
                set.range(k + 1..).next().copied()
            ),
            4 => assert_eq!(
                veb.predecessor(k).unwrap(),
                set.range(..k).next_back().copied()
            ),
            _ => assert_eq!(veb.contains(k).unwrap(), set.contains(&k)),
        }
        assert_eq!(veb.len(), set.len());
        assert_eq!(veb.min(), set.first().copied());
        assert_eq!(veb.max(), set.last().copied());
    }
    assert!(veb.iter().eq(set.iter().copied()));
}

#[test]
fn replay_small_universe() {
    replay(8, 20_000, 1);
}

#[test]
fn replay_medium_universe() {
    replay(16, 20_000, 2);
}

#[test]
fn replay_large_universe() {
    replay(24, 20_000, 3);
}

#[test]
fn clear_cost_tracks_occupancy() {
    for bits in [8u32, 16, 24] {
        let mut veb = VebSet::new(1 << bits);
        veb.clear();
        assert!(veb.last_probes() <= 1);
        for keys in [1u64, 10, 100] {
            for k in 0..keys {
                veb.insert(k * 3 % (1 << bits)).unwrap();
            }
            veb.clear();
            assert!(veb.is_empty());
            assert!(
                veb.last_probes() <= 16 * keys + 1,
                "bits {bits} keys {keys}"
            );
        }
    }
}
