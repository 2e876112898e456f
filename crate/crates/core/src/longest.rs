//! Longest substring with density in `[θ1, θ2]`, in linear time.
//!
//! Candidate starts are inner-frontier points and candidate ends are
//! outer-frontier points. Inner points are visited by increasing `x` while a
//! window of outer points dominating the current start slides along the
//! outer frontier. Only the window's potential maxima are retained: entries
//! not beaten in both `x` and index by a later entry. Its head is then the
//! dominating outer point of largest index.

use std::collections::VecDeque;

use crate::frontier::{inner_frontier_by, outer_frontier_by};
use crate::geometry::OrthoPath;
use crate::sequence::{BinarySequence, DensityBounds, SubstringMatch};

/// Potential maxima of the sliding window, as path indices.
///
/// Kept in increasing `x` and strictly decreasing index order.
#[derive(Debug, Default, Clone)]
pub struct MaximaWindow {
    entries: VecDeque<u32>,
}

impl MaximaWindow {
    pub fn entries(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().map(|&i| i as usize)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entry of largest index.
    pub fn head(&self) -> Option<usize> {
        self.entries.front().map(|&i| i as usize)
    }

    /// Checks strict `x` increase and strict index decrease along the window.
    pub fn is_consistent(&self, path: &OrthoPath) -> bool {
        self.entries
            .iter()
            .zip(self.entries.iter().skip(1))
            .all(|(&a, &b)| path.x(a as usize) < path.x(b as usize) && a > b)
    }

    fn admit(&mut self, outer: u32) {
        while self.entries.back().is_some_and(|&m| m < outer) {
            self.entries.pop_back();
        }
        self.entries.push_back(outer);
    }

    fn expire_below(&mut self, path: &OrthoPath, x: i64) {
        while self
            .entries
            .front()
            .is_some_and(|&m| path.x(m as usize) < x)
        {
            self.entries.pop_front();
        }
    }
}

/// Longest `z_a..z_b` with `θ1 <= D(a, b) <= θ2`, or `None`.
///
/// Among equally long solutions the one with the smallest `b` is returned.
pub fn longest_in_range(seq: &BinarySequence, bounds: &DensityBounds) -> Option<SubstringMatch> {
    let path = OrthoPath::new(seq, *bounds);
    longest_in_path(&path, |_, _| {})
        .map(|(s, t)| SubstringMatch::from_prefix(path.prefix(), s + 1, t))
}

/// Runs the frontier scan over `path` and returns the best `(s, t)` pair of
/// point indices. `observe` sees the window and current inner index after
/// every update.
pub fn longest_in_path<F>(path: &OrthoPath, mut observe: F) -> Option<(usize, usize)>
where
    F: FnMut(&MaximaWindow, usize),
{
    let (inner, outer) = frontiers(path);
    let coords = |i: u32| (path.x(i as usize), path.y(i as usize));

    let mut window = MaximaWindow::default();
    let mut best: Option<(usize, usize)> = None;
    let mut next = 0;
    for &s in &inner {
        let (sx, sy) = coords(s);
        while next < outer.len() && path.y(outer[next] as usize) >= sy {
            window.admit(outer[next]);
            next += 1;
        }
        window.expire_below(path, sx);
        observe(&window, s as usize);

        // Empty window: nothing dominates this start yet.
        let Some(t) = window.head() else { continue };
        let s = s as usize;
        if t <= s {
            continue;
        }
        let better = match best {
            None => true,
            Some((bs, bt)) => t - s > bt - bs || (t - s == bt - bs && t < bt),
        };
        if better {
            best = Some((s, t));
        }
    }
    best
}

/// Inner and outer frontiers as index lists sorted by increasing `x`.
pub fn frontiers(path: &OrthoPath) -> (Vec<u32>, Vec<u32>) {
    let sorted = path.sorted_indices();
    let coords = |i: u32| (path.x(i as usize), path.y(i as usize));
    let inner = inner_frontier_by(&sorted, coords);
    let outer = outer_frontier_by(&sorted, coords);
    (inner, outer)
}
