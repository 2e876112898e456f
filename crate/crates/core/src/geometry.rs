//! Natural and orthogonal representations of a binary sequence.
//!
//! In the orthogonal representation the point for prefix `k` is
//! `(c2·k − d2·ones(k), −c1·k + d1·ones(k))`. A substring `z_a..z_b` has
//! density in `[θ1, θ2]` exactly when `q_b` dominates `q_{a−1}`.

use std::io::{self, Write};

use crate::sequence::{BinarySequence, DensityBounds};

/// Point `q_i` of the orthogonal representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct OrthoPoint {
    pub index: usize,
    pub x: i64,
    pub y: i64,
}

impl OrthoPoint {
    pub fn new(index: usize, x: i64, y: i64) -> Self {
        OrthoPoint { index, x, y }
    }
}

/// Point `p_k = (k, ones(k))` of the natural representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NaturalPoint {
    pub k: usize,
    pub x: i64,
    pub y: i64,
}

/// Non-strict domination: `p.x >= q.x && p.y >= q.y`.
#[inline]
pub fn dominates(p: &OrthoPoint, q: &OrthoPoint) -> bool {
    p.x >= q.x && p.y >= q.y
}

/// `d1·x + d2·y`; strictly increasing along the orthogonal path.
pub fn progress_metric(p: &OrthoPoint, bounds: &DensityBounds) -> i128 {
    bounds.d1() as i128 * p.x as i128 + bounds.d2() as i128 * p.y as i128
}

/// Increment of [`progress_metric`] between consecutive points.
pub fn progress_step(bounds: &DensityBounds) -> i128 {
    bounds.d1() as i128 * bounds.c2() as i128 - bounds.d2() as i128 * bounds.c1() as i128
}

/// Builds `q_0..q_n` by the step recurrence: `(c2, −c1)` for a 0 and
/// `(c2 − d2, d1 − c1)` for a 1.
pub fn build_orthogonal(seq: &BinarySequence, bounds: &DensityBounds) -> Vec<OrthoPoint> {
    let (c1, d1, c2, d2) = (
        bounds.c1() as i64,
        bounds.d1() as i64,
        bounds.c2() as i64,
        bounds.d2() as i64,
    );
    let zero = (c2, -c1);
    let one = (c2 - d2, d1 - c1);
    let mut points = Vec::with_capacity(seq.len() + 1);
    let mut last = OrthoPoint::new(0, 0, 0);
    points.push(last);
    for (k, &z) in seq.digits().iter().enumerate() {
        let (dx, dy) = if z == 0 { zero } else { one };
        last = OrthoPoint::new(k + 1, last.x + dx, last.y + dy);
        points.push(last);
    }
    points
}

/// Natural representation `p_0..p_n`.
pub fn build_natural(seq: &BinarySequence) -> Vec<NaturalPoint> {
    seq.prefix_ones()
        .into_iter()
        .enumerate()
        .map(|(k, ones)| NaturalPoint {
            k,
            x: k as i64,
            y: ones as i64,
        })
        .collect()
}

/// Compact orthogonal path: keeps only prefix counts and evaluates
/// coordinates on demand (4 bytes per point instead of a 24-byte triple).
#[derive(Debug, Clone)]
pub struct OrthoPath {
    bounds: DensityBounds,
    prefix: Vec<u32>,
}

impl OrthoPath {
    pub fn new(seq: &BinarySequence, bounds: DensityBounds) -> Self {
        OrthoPath {
            bounds,
            prefix: seq.prefix_ones(),
        }
    }

    pub fn bounds(&self) -> &DensityBounds {
        &self.bounds
    }

    /// Sequence length `n`; the path has `n + 1` points.
    pub fn n(&self) -> usize {
        self.prefix.len() - 1
    }

    pub fn prefix(&self) -> &[u32] {
        &self.prefix
    }

    #[inline]
    pub fn x(&self, i: usize) -> i64 {
        self.bounds.c2() as i64 * i as i64 - self.bounds.d2() as i64 * self.prefix[i] as i64
    }

    #[inline]
    pub fn y(&self, i: usize) -> i64 {
        self.bounds.d1() as i64 * self.prefix[i] as i64 - self.bounds.c1() as i64 * i as i64
    }

    #[inline]
    pub fn point(&self, i: usize) -> OrthoPoint {
        OrthoPoint::new(i, self.x(i), self.y(i))
    }

    /// Point indices stably sorted by increasing `x`.
    pub fn sorted_indices(&self) -> Vec<u32> {
        // Bounds validated against a longer sequence may have d_i > n; widen
        // the radix so every coordinate stays inside [-N², N²].
        let radix_n = self
            .n()
            .max(self.bounds.d1() as usize)
            .max(self.bounds.d2() as usize);
        crate::radixsort::sort_indices_by_key(self.prefix.len(), radix_n, |i| self.x(i as usize))
            .expect("orthogonal coordinates lie within [-n², n²]")
    }

    pub fn points(&self) -> impl ExactSizeIterator<Item = OrthoPoint> + '_ {
        (0..self.prefix.len()).map(|i| self.point(i))
    }
}

/// Writes `k\tx\ty` rows, one per orthogonal point.
pub fn write_orthogonal_tsv<W: Write>(points: &[OrthoPoint], mut out: W) -> io::Result<()> {
    writeln!(out, "k\tx\ty")?;
    for p in points {
        writeln!(out, "{}\t{}\t{}", p.index, p.x, p.y)?;
    }
    Ok(())
}

/// Writes `k\tx\ty` rows, one per natural point.
pub fn write_natural_tsv<W: Write>(points: &[NaturalPoint], mut out: W) -> io::Result<()> {
    writeln!(out, "k\tx\ty")?;
    for p in points {
        writeln!(out, "{}\t{}\t{}", p.k, p.x, p.y)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::validate_bounds;

    fn quarter_third(n: usize) -> DensityBounds {
        validate_bounds(1, 4, 1, 3, n).unwrap()
    }

    const WORKED: [(i64, i64); 11] = [
        (0, 0),
        (-2, 3),
        (-4, 6),
        (-3, 5),
        (-2, 4),
        (-1, 3),
        (-3, 6),
        (-2, 5),
        (-4, 8),
        (-3, 7),
        (-5, 10),
    ];

    #[test]
    fn worked_example_coordinates() {
        let seq: BinarySequence = "1100010101".parse().unwrap();
        let b = quarter_third(10);
        let pts = build_orthogonal(&seq, &b);
        let coords: Vec<_> = pts.iter().map(|p| (p.x, p.y)).collect();
        assert_eq!(coords, WORKED);
        // Closed form agrees with the recurrence.
        let path = OrthoPath::new(&seq, b);
        assert!(path.points().eq(pts.iter().copied()));
        assert!(pts.iter().enumerate().all(|(i, p)| p.index == i));
    }

    #[test]
    fn short_sequences() {
        // d1 = 4 > n is fine for building; validation is the caller's job.
        let b = validate_bounds(1, 4, 1, 3, 4).unwrap();
        let zeros = build_orthogonal(&"00".parse().unwrap(), &b);
        assert_eq!(
            zeros.iter().map(|p| (p.x, p.y)).collect::<Vec<_>>(),
            [(0, 0), (1, -1), (2, -2)]
        );
        let one = build_orthogonal(&"1".parse().unwrap(), &b);
        assert_eq!(
            one.iter().map(|p| (p.x, p.y)).collect::<Vec<_>>(),
            [(0, 0), (-2, 3)]
        );
    }

    #[test]
    fn domination_is_non_strict() {
        let q9 = OrthoPoint::new(9, -3, 7);
        let q2 = OrthoPoint::new(2, -4, 6);
        assert!(dominates(&q9, &q2));
        assert!(!dominates(&q2, &q9));
        assert!(dominates(&q2, &q2));
        assert!(!dominates(
            &OrthoPoint::new(0, -2, 3),
            &OrthoPoint::new(1, -1, 3)
        ));
    }

    #[test]
    fn progress_metric_counts_steps() {
        let seq: BinarySequence = "1100010101".parse().unwrap();
        let b = quarter_third(10);
        assert_eq!(progress_step(&b), 1);
        for p in build_orthogonal(&seq, &b) {
            assert_eq!(progress_metric(&p, &b), p.index as i128);
        }
    }

    #[test]
    fn natural_representation() {
        let seq: BinarySequence = "1100010101".parse().unwrap();
        let ys: Vec<_> = build_natural(&seq).iter().map(|p| p.y).collect();
        assert_eq!(ys, [0, 1, 2, 2, 2, 2, 3, 3, 4, 4, 5]);
        let zero = build_natural(&"0".parse().unwrap());
        assert_eq!((zero[1].x, zero[1].y), (1, 0));
        let one = build_natural(&"1".parse().unwrap());
        assert_eq!((one[1].x, one[1].y), (1, 1));
    }

    #[test]
    fn tsv_export() {
        let seq: BinarySequence = "10".parse().unwrap();
        let b = validate_bounds(1, 3, 1, 2, 3).unwrap();
        let mut buf = Vec::new();
        write_orthogonal_tsv(&build_orthogonal(&seq, &b), &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "k\tx\ty\n0\t0\t0\n1\t-1\t2\n2\t0\t1\n"
        );
        let mut buf = Vec::new();
        write_natural_tsv(&build_natural(&seq), &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "k\tx\ty\n0\t0\t0\n1\t1\t1\n2\t2\t1\n"
        );
    }
}
