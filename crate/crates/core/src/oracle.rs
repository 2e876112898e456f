//! Brute-force reference solvers.
//!
//! Quadratic scans over all substrings with exact integer comparisons. They
//! share nothing with the fast solvers beyond the input types and apply the
//! same tie-breaking rules, so results can be compared field by field.

use crate::error::{Error, Result};
use crate::geometry::OrthoPoint;
use crate::maximal::SolutionSet;
use crate::sequence::{BinarySequence, DensityBounds, LengthConstraint, SubstringMatch};

pub const DEFAULT_CAP: usize = 5000;

/// Brute-force solvers refusing inputs longer than `cap`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    pub cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { cap: DEFAULT_CAP }
    }
}

struct Counts {
    prefix: Vec<u64>,
}

impl Counts {
    fn new(seq: &BinarySequence) -> Self {
        let mut prefix = vec![0u64; seq.len() + 1];
        for (k, &d) in seq.digits().iter().enumerate() {
            prefix[k + 1] = prefix[k] + d as u64;
        }
        Counts { prefix }
    }

    #[inline]
    fn feasible(&self, bounds: &DensityBounds, a: usize, b: usize) -> bool {
        let ones = self.prefix[b] - self.prefix[a - 1];
        let len = (b - a + 1) as u64;
        let (c1, d1, c2, d2) = (bounds.c1(), bounds.d1(), bounds.c2(), bounds.d2());
        c1 as u128 * len as u128 <= d1 as u128 * ones as u128
            && c2 as u128 * len as u128 >= d2 as u128 * ones as u128
    }

    fn matched(&self, a: usize, b: usize) -> SubstringMatch {
        let ones = self.prefix[b] - self.prefix[a - 1];
        let length = b - a + 1;
        SubstringMatch {
            a,
            b,
            length,
            ones: ones as usize,
            density: crate::sequence::Density::new(ones, length as u64),
        }
    }
}

impl Oracle {
    pub fn new(cap: usize) -> Self {
        Oracle { cap }
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.cap {
            return Err(Error::CapExceeded { n, cap: self.cap });
        }
        Ok(())
    }

    /// Longest feasible substring; ties go to the smallest `b`.
    pub fn longest(
        &self,
        seq: &BinarySequence,
        bounds: &DensityBounds,
    ) -> Result<Option<SubstringMatch>> {
        self.check(seq.len())?;
        let counts = Counts::new(seq);
        let mut best: Option<(usize, usize)> = None;
        for b in 1..=seq.len() {
            // The first feasible `a` is the longest one ending at `b`.
            if let Some(a) = (1..=b).find(|&a| counts.feasible(bounds, a, b)) {
                if best.is_none_or(|(ba, bb)| b - a > bb - ba) {
                    best = Some((a, b));
                }
            }
        }
        Ok(best.map(|(a, b)| counts.matched(a, b)))
    }

    /// Shortest feasible substring whose length satisfies `constraint`;
    /// ties go to the smallest `b`.
    pub fn shortest(
        &self,
        seq: &BinarySequence,
        bounds: &DensityBounds,
        constraint: Option<LengthConstraint>,
    ) -> Result<Option<SubstringMatch>> {
        self.check(seq.len())?;
        let counts = Counts::new(seq);
        let lc = constraint.unwrap_or_default();
        let mut best: Option<(usize, usize)> = None;
        for b in 1..=seq.len() {
            if let Some(a) = shortest_ending_at(&counts, bounds, &lc, b) {
                if best.is_none_or(|(ba, bb)| b - a < bb - ba) {
                    best = Some((a, b));
                }
            }
        }
        Ok(best.map(|(a, b)| counts.matched(a, b)))
    }

    /// Optimal disjoint set by dynamic programming over endpoints:
    /// `f(b) = max(f(b − 1), f(a − 1) + 1)` over feasible `(a, b)`.
    pub fn max_disjoint(
        &self,
        seq: &BinarySequence,
        bounds: &DensityBounds,
        constraint: Option<LengthConstraint>,
    ) -> Result<SolutionSet> {
        self.check(seq.len())?;
        let n = seq.len();
        let counts = Counts::new(seq);
        let lc = constraint.unwrap_or_default();
        let mut f = vec![0usize; n + 1];
        let mut take: Vec<Option<usize>> = vec![None; n + 1];
        for b in 1..=n {
            f[b] = f[b - 1];
            // `f` is non-decreasing, so the largest feasible `a` is best.
            if let Some(a) = shortest_ending_at(&counts, bounds, &lc, b) {
                if f[a - 1] + 1 > f[b] {
                    f[b] = f[a - 1] + 1;
                    take[b] = Some(a);
                }
            }
        }
        let mut matches = Vec::with_capacity(f[n]);
        let mut b = n;
        while b > 0 {
            match take[b] {
                Some(a) if f[b] > f[b - 1] => {
                    matches.push(counts.matched(a, b));
                    b = a - 1;
                }
                _ => b -= 1,
            }
        }
        matches.reverse();
        Ok(SolutionSet { matches })
    }

    /// Smallest endpoint `b` of any feasible substring of `z_from..z_n`.
    pub fn min_endpoint(
        &self,
        seq: &BinarySequence,
        bounds: &DensityBounds,
        constraint: Option<LengthConstraint>,
        from: usize,
    ) -> Result<Option<usize>> {
        self.check(seq.len())?;
        let counts = Counts::new(seq);
        let lc = constraint.unwrap_or_default();
        Ok((from..=seq.len())
            .find(|&b| (from..=b).any(|a| lc.admits(b - a + 1) && counts.feasible(bounds, a, b))))
    }
}

/// Largest feasible `a` for endpoint `b` under the length constraint.
fn shortest_ending_at(
    counts: &Counts,
    bounds: &DensityBounds,
    lc: &LengthConstraint,
    b: usize,
) -> Option<usize> {
    if b < lc.min() {
        return None;
    }
    let hi = b + 1 - lc.min();
    let lo = match lc.max() {
        Some(max) if max < b => b + 1 - max,
        _ => 1,
    };
    (lo..=hi).rev().find(|&a| counts.feasible(bounds, a, b))
}

/// Inner and outer frontiers by all-pairs classification, sorted by `x`.
pub fn brute_frontiers(points: &[OrthoPoint]) -> (Vec<OrthoPoint>, Vec<OrthoPoint>) {
    let dominates = |p: &OrthoPoint, q: &OrthoPoint| p.x >= q.x && p.y >= q.y;
    let mut inner: Vec<OrthoPoint> = points
        .iter()
        .enumerate()
        .filter(|&(k, p)| {
            !points
                .iter()
                .enumerate()
                .any(|(j, q)| j != k && dominates(p, q))
        })
        .map(|(_, p)| *p)
        .collect();
    let mut outer: Vec<OrthoPoint> = points
        .iter()
        .enumerate()
        .filter(|&(k, p)| {
            !points
                .iter()
                .enumerate()
                .any(|(j, q)| j != k && dominates(q, p))
        })
        .map(|(_, p)| *p)
        .collect();
    inner.sort_by_key(|p| p.x);
    outer.sort_by_key(|p| p.x);
    (inner, outer)
}

pub fn brute_longest(
    seq: &BinarySequence,
    bounds: &DensityBounds,
) -> Result<Option<SubstringMatch>> {
    Oracle::default().longest(seq, bounds)
}

pub fn brute_shortest(
    seq: &BinarySequence,
    bounds: &DensityBounds,
    constraint: Option<LengthConstraint>,
) -> Result<Option<SubstringMatch>> {
    Oracle::default().shortest(seq, bounds, constraint)
}

pub fn brute_max_disjoint(
    seq: &BinarySequence,
    bounds: &DensityBounds,
    constraint: Option<LengthConstraint>,
) -> Result<SolutionSet> {
    Oracle::default().max_disjoint(seq, bounds, constraint)
}
