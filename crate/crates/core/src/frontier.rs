//! Inner and outer frontiers of an x-sorted point list.
//!
//! The inner frontier holds the points that dominate no other point; the
//! outer frontier holds the points dominated by no other point. Both come
//! out sorted by strictly increasing `x` and strictly decreasing `y`.

use std::io::{self, Write};

use crate::geometry::OrthoPoint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FrontierKind {
    Inner,
    Outer,
}

impl FrontierKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            FrontierKind::Inner => "inner",
            FrontierKind::Outer => "outer",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frontier {
    pub kind: FrontierKind,
    pub points: Vec<OrthoPoint>,
}

impl Frontier {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains_index(&self, index: usize) -> bool {
        self.points.iter().any(|p| p.index == index)
    }

    /// True iff `x` strictly increases and `y` strictly decreases.
    pub fn is_staircase(&self) -> bool {
        self.points
            .windows(2)
            .all(|w| w[0].x < w[1].x && w[0].y > w[1].y)
    }
}

/// What happened to the frontier while scanning one input item.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrontierStep<T> {
    /// The first item seeds the list.
    Seeded(T),
    Appended(T),
    /// `added` made the previous tail obsolete (same `x`).
    Replaced {
        removed: T,
        added: T,
    },
    Skipped(T),
}

/// Forward scan building the inner frontier, reporting each step.
///
/// `sorted` must be ordered by non-decreasing `x`; `coords` yields `(x, y)`.
pub fn inner_frontier_with<T, C, S>(sorted: &[T], coords: C, mut on_step: S) -> Vec<T>
where
    T: Copy,
    C: Fn(T) -> (i64, i64),
    S: FnMut(FrontierStep<T>, &[T]),
{
    let mut inner: Vec<T> = Vec::new();
    let Some((&first, rest)) = sorted.split_first() else {
        return inner;
    };
    inner.push(first);
    on_step(FrontierStep::Seeded(first), &inner);
    let (mut last_x, mut last_y) = coords(first);
    for &item in rest {
        let (x, y) = coords(item);
        if y < last_y {
            let step = if x == last_x {
                let removed = inner.pop().unwrap();
                FrontierStep::Replaced {
                    removed,
                    added: item,
                }
            } else {
                FrontierStep::Appended(item)
            };
            inner.push(item);
            (last_x, last_y) = (x, y);
            on_step(step, &inner);
        } else {
            on_step(FrontierStep::Skipped(item), &inner);
        }
    }
    inner
}

/// Inner frontier of `sorted` (non-decreasing `x`).
pub fn inner_frontier_by<T, C>(sorted: &[T], coords: C) -> Vec<T>
where
    T: Copy,
    C: Fn(T) -> (i64, i64),
{
    inner_frontier_with(sorted, coords, |_, _| {})
}

/// Outer frontier of `sorted` (non-decreasing `x`), by a backward scan.
pub fn outer_frontier_by<T, C>(sorted: &[T], coords: C) -> Vec<T>
where
    T: Copy,
    C: Fn(T) -> (i64, i64),
{
    // Built back to front, then reversed into increasing-x order.
    let mut outer: Vec<T> = Vec::new();
    let Some((&last, rest)) = sorted.split_last() else {
        return outer;
    };
    outer.push(last);
    let (mut head_x, mut head_y) = coords(last);
    for &item in rest.iter().rev() {
        let (x, y) = coords(item);
        if y > head_y {
            if x == head_x {
                outer.pop();
            }
            outer.push(item);
            (head_x, head_y) = (x, y);
        }
    }
    outer.reverse();
    outer
}

/// Builds `(inner, outer)` from points sorted by `x` (e.g. by
/// [`crate::radixsort::sort_by_x`]).
pub fn build_frontiers(sorted: &[OrthoPoint]) -> (Frontier, Frontier) {
    let coords = |p: OrthoPoint| (p.x, p.y);
    let inner = Frontier {
        kind: FrontierKind::Inner,
        points: inner_frontier_by(sorted, coords),
    };
    let outer = Frontier {
        kind: FrontierKind::Outer,
        points: outer_frontier_by(sorted, coords),
    };
    debug_assert!(inner.is_staircase() && outer.is_staircase());
    (inner, outer)
}

/// Writes `kind\ti\tx\ty` rows for each frontier.
pub fn write_frontier_tsv<W: Write>(frontiers: &[&Frontier], mut out: W) -> io::Result<()> {
    writeln!(out, "kind\ti\tx\ty")?;
    for f in frontiers {
        for p in &f.points {
            writeln!(out, "{}\t{}\t{}\t{}", f.kind.as_str(), p.index, p.x, p.y)?;
        }
    }
    Ok(())
}
