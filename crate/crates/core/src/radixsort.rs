//! Stable two-phase radix sort for keys in `[-n², n²]`.
//!
//! Keys are shifted by `+n²` into `[0, 2n²] ⊂ [0, b²)` with base `b = 2n`
//! and sorted by two stable counting passes: low digit, then high digit.
//! Time and memory are `O(n + len)`.

use crate::error::{Error, Result};
use crate::geometry::OrthoPoint;

/// Digit base and key shift for a sequence of length `n`.
#[derive(Debug, Clone, Copy)]
struct Radix {
    base: u64,
    shift: i128,
}

impl Radix {
    fn new(n: usize) -> Self {
        let n = n.max(1) as u64;
        Radix {
            base: 2 * n,
            shift: n as i128 * n as i128,
        }
    }

    #[inline]
    fn shifted(&self, key: i64) -> Option<u64> {
        let k = key as i128 + self.shift;
        if k < 0 || k > 2 * self.shift {
            None
        } else {
            Some(k as u64)
        }
    }

    #[inline]
    fn digits(&self, shifted: u64) -> (usize, u32) {
        ((shifted % self.base) as usize, (shifted / self.base) as u32)
    }
}

/// Sorts orthogonal points by increasing `x`, keeping input order among ties.
///
/// Fails with `KeyRange` if some `x` lies outside `[-n², n²]`.
pub fn sort_by_x(points: &[OrthoPoint], n: usize) -> Result<Vec<OrthoPoint>> {
    sort_by_key(points.iter().copied(), points.len(), n, |p| p.x)
}

/// Sorts the indices `0..count` by `key(index)`, stably.
///
/// Used to order path points without materializing coordinate triples.
pub fn sort_indices_by_key<K>(count: usize, n: usize, key: K) -> Result<Vec<u32>>
where
    K: Fn(u32) -> i64,
{
    assert!(count <= u32::MAX as usize, "too many items for u32 indices");
    sort_by_key(0..count as u32, count, n, key)
}

/// Stable two-phase radix sort of `len` items by an `i64` key in `[-n², n²]`.
pub fn sort_by_key<T, I, K>(items: I, len: usize, n: usize, key: K) -> Result<Vec<T>>
where
    T: Copy,
    I: Iterator<Item = T> + Clone,
    K: Fn(T) -> i64,
{
    let radix = Radix::new(n);
    let Some(first) = items.clone().next() else {
        return Ok(Vec::new());
    };
    let mut counts = filled(0u32, radix.base as usize + 1);

    // Pass 1: by low digit.
    for item in items.clone() {
        let k = key(item);
        let s = radix.shifted(k).ok_or(Error::KeyRange {
            key: k as i128,
            lo: -radix.shift,
            hi: radix.shift,
        })?;
        counts[radix.digits(s).0 + 1] += 1;
    }
    prefix_sum(&mut counts);
    // High digits travel with the items so pass 2 never re-reads keys.
    let mut partial = filled(first, len);
    let mut partial_high = filled(0u32, len);
    for item in items {
        let (low, high) = radix.digits(radix.shifted(key(item)).unwrap());
        let slot = &mut counts[low];
        partial[*slot as usize] = item;
        partial_high[*slot as usize] = high;
        *slot += 1;
    }

    // Pass 2: by high digit.
    counts.fill(0);
    for &h in &partial_high {
        counts[h as usize + 1] += 1;
    }
    prefix_sum(&mut counts);
    let mut sorted = filled(first, len);
    for (&item, &h) in partial.iter().zip(&partial_high) {
        let slot = &mut counts[h as usize];
        sorted[*slot as usize] = item;
        *slot += 1;
    }
    Ok(sorted)
}

/// `vec![fill; len]`, asking the kernel to back large buffers with huge
/// pages. The scatter passes touch pages at random, and at 4 KiB granularity
/// TLB misses dominate once buffers outgrow the TLB reach.
fn filled<T: Copy>(fill: T, len: usize) -> Vec<T> {
    let mut v: Vec<T> = Vec::with_capacity(len);
    #[cfg(target_os = "linux")]
    {
        const HUGE: usize = 2 << 20;
        let bytes = len * std::mem::size_of::<T>();
        if bytes >= HUGE {
            let p = v.as_mut_ptr() as usize;
            let start = (p + HUGE - 1) & !(HUGE - 1);
            let end = (p + bytes) & !(HUGE - 1);
            if end > start {
                // SAFETY: [start, end) lies inside the buffer just reserved
                // for `v`; the hint changes no contents or permissions.
                unsafe {
                    libc::madvise(start as *mut libc::c_void, end - start, libc::MADV_HUGEPAGE);
                }
            }
        }
    }
    v.resize(len, fill);
    v
}

fn prefix_sum(counts: &mut [u32]) {
    let mut acc = 0u32;
    for c in counts.iter_mut() {
        acc += *c;
        *c = acc;
    }
}
