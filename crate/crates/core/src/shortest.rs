//! Shortest substring with density in `[θ1, θ2]`, optionally with length
//! bounds, in `O(n log log n)` for the unconstrained problem.
//!
//! Endpoints `t = 0..n` are visited in order. A partial outer frontier holds
//! earlier points keyed by the rank of their `x` coordinate in a van Emde
//! Boas tree; the points dominated by `q_t` form a contiguous run just below
//! `rank(x_t)`, are reported as candidate starts, and are removed.
//!
//! With a minimum length `L1`, point `q_u` only becomes a candidate at
//! iteration `u + L1`. Inserting it may then cover an earlier point `q_s`
//! (`u − s < L1`) that can still start a valid substring for a later
//! endpoint, so such points are not discarded: they move to a further
//! frontier layer. Every layer stays a staircase and every query drains the
//! dominated run of each layer, which keeps the search exact. Covered
//! points only arise when `L1 > 2`; otherwise a single layer is used.

use crate::error::Result;
use crate::geometry::{OrthoPath, OrthoPoint};
use crate::radixsort::sort_by_key;
use crate::sequence::{BinarySequence, DensityBounds, LengthConstraint, SubstringMatch};
use crate::veb::VebTree;

/// Distinct `x` values in increasing order, with the rank of every point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankTable {
    values: Vec<i64>,
    ranks: Vec<u32>,
}

impl RankTable {
    /// Ranks of `points[k].x`, indexed by position `k`, using the two-phase
    /// radix sort. Coordinates must lie in `[-n², n²]`.
    pub fn from_points(points: &[OrthoPoint], n: usize) -> Result<Self> {
        let order = sort_by_key(0..points.len() as u32, points.len(), n, |k| {
            points[k as usize].x
        })?;
        Ok(Self::from_order(&order, points.len(), |k| points[k].x))
    }

    /// Ranks of every point on `path`, indexed by point index.
    pub fn from_path(path: &OrthoPath) -> Self {
        let mut values: Vec<i64> = Vec::new();
        let mut ranks = vec![0u32; path.n() + 1];
        for i in path.sorted_indices() {
            let v = path.x(i as usize);
            if values.last() != Some(&v) {
                values.push(v);
            }
            ranks[i as usize] = (values.len() - 1) as u32;
        }
        RankTable { values, ranks }
    }

    fn from_order(order: &[u32], len: usize, x: impl Fn(usize) -> i64) -> Self {
        let mut values: Vec<i64> = Vec::new();
        let mut ranks = vec![0u32; len];
        for &k in order {
            let v = x(k as usize);
            if values.last() != Some(&v) {
                values.push(v);
            }
            ranks[k as usize] = (values.len() - 1) as u32;
        }
        RankTable { values, ranks }
    }

    /// Number of distinct `x` values.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    #[inline]
    pub fn rank_of_point(&self, k: usize) -> u32 {
        self.ranks[k]
    }

    pub fn rank_of_value(&self, x: i64) -> Option<u32> {
        self.values.binary_search(&x).ok().map(|r| r as u32)
    }
}

/// Ranks the `x` coordinates of explicit points; see [`RankTable::from_points`].
pub fn build_rank_table(points: &[OrthoPoint], n: usize) -> Result<RankTable> {
    RankTable::from_points(points, n)
}

/// Staircase layers of candidate start points keyed by `x` rank.
///
/// Within each layer `y` strictly decreases as rank increases, so no layer
/// member dominates another.
#[derive(Debug)]
pub struct PartialFrontier {
    capacity: u64,
    layers: Vec<VebTree<OrthoPoint>>,
    carry: Vec<(u64, OrthoPoint)>,
    spill: Vec<(u64, OrthoPoint)>,
    tree_ops: u64,
}

impl PartialFrontier {
    /// Frontier for ranks `0..ranks`.
    pub fn new(ranks: usize) -> Self {
        PartialFrontier {
            capacity: ranks.max(1) as u64,
            layers: vec![VebTree::new(ranks.max(1) as u64)],
            carry: Vec::new(),
            spill: Vec::new(),
            tree_ops: 0,
        }
    }

    /// Inserts a candidate start. Points of a layer that it dominates, or the
    /// point itself when covered, move on to the next layer.
    pub fn insert(&mut self, rank: u32, point: OrthoPoint) {
        let mut carry = std::mem::take(&mut self.carry);
        let mut spill = std::mem::take(&mut self.spill);
        carry.push((rank as u64, point));
        let mut level = 0;
        while !carry.is_empty() {
            if level == self.layers.len() {
                self.layers.push(VebTree::new(self.capacity));
            }
            let layer = &mut self.layers[level];
            for (r, p) in carry.drain(..) {
                if layer
                    .ceil(r)
                    .unwrap()
                    .is_some_and(|(_, above)| above.y >= p.y)
                {
                    spill.push((r, p));
                    continue;
                }
                let mut below = layer.floor(r).unwrap();
                while let Some((kr, q)) = below {
                    if q.y > p.y {
                        break;
                    }
                    layer.remove(kr).unwrap();
                    self.tree_ops += 1;
                    spill.push((kr, q));
                    below = layer.predecessor(kr).unwrap();
                }
                layer.insert(r, p).unwrap();
                self.tree_ops += 1;
            }
            std::mem::swap(&mut carry, &mut spill);
            level += 1;
        }
        self.carry = carry;
        self.spill = spill;
    }

    /// Removes every stored point dominated by `query` (whose `x` has rank
    /// `rank`) and hands each one to `visit`.
    pub fn drain_dominated<F>(&mut self, rank: u32, query: OrthoPoint, mut visit: F)
    where
        F: FnMut(OrthoPoint),
    {
        for layer in &mut self.layers {
            if layer.is_empty() {
                continue;
            }
            let mut below = layer.floor(rank as u64).unwrap();
            while let Some((kr, p)) = below {
                if p.y > query.y {
                    break;
                }
                layer.remove(kr).unwrap();
                self.tree_ops += 1;
                visit(p);
                below = layer.predecessor(kr).unwrap();
            }
        }
    }

    /// Empties every layer; cost follows occupancy.
    pub fn clear(&mut self) {
        for layer in &mut self.layers {
            if !layer.is_empty() {
                layer.clear();
            }
        }
    }

    pub fn len(&self) -> usize {
        self.layers.iter().map(VebTree::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.iter().all(VebTree::is_empty)
    }

    /// Layers allocated so far (at least one).
    pub fn layer_count(&self) -> usize {
        self.layers.len()
    }

    /// Insertions plus removals performed on the underlying trees.
    pub fn tree_ops(&self) -> u64 {
        self.tree_ops
    }

    /// Points of layer `level` in rank order.
    pub fn layer_points(&self, level: usize) -> Vec<(u64, OrthoPoint)> {
        let layer = &self.layers[level];
        layer
            .keys()
            .iter()
            .map(|k| (k, layer.get(k).unwrap().unwrap()))
            .collect()
    }

    /// Every layer has at most one point per rank and `y` strictly
    /// decreasing in rank.
    pub fn is_consistent(&self) -> bool {
        (0..self.layers.len()).all(|level| {
            self.layer_points(level)
                .windows(2)
                .all(|w| w[0].0 < w[1].0 && w[0].1.x < w[1].1.x && w[0].1.y > w[1].1.y)
        })
    }
}

/// How far a search runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Scan every endpoint and keep the shortest feasible pair.
    Shortest,
    /// Stop at the first endpoint that closes any feasible pair.
    FirstEnd,
}

/// Reusable search state over one path: ranks are computed once, the
/// frontier trees are cleared and reused between runs.
#[derive(Debug)]
pub struct ShortestSearch<'a> {
    path: &'a OrthoPath,
    ranks: RankTable,
    frontier: PartialFrontier,
    constraint: LengthConstraint,
}

impl<'a> ShortestSearch<'a> {
    pub fn new(path: &'a OrthoPath, constraint: LengthConstraint) -> Self {
        let ranks = RankTable::from_path(path);
        let frontier = PartialFrontier::new(ranks.len());
        ShortestSearch {
            path,
            ranks,
            frontier,
            constraint,
        }
    }

    pub fn frontier(&self) -> &PartialFrontier {
        &self.frontier
    }

    /// Searches pairs `origin <= s < t <= n` and returns the chosen
    /// `(s, t)`: the shortest feasible pair, earliest `t` among ties.
    pub fn run(&mut self, origin: usize, mode: SearchMode) -> Option<(usize, usize)> {
        self.run_observed(origin, mode, |_| {})
    }

    /// As [`run`](Self::run), calling `observe` after every iteration.
    pub fn run_observed<F>(
        &mut self,
        origin: usize,
        mode: SearchMode,
        mut observe: F,
    ) -> Option<(usize, usize)>
    where
        F: FnMut(&PartialFrontier),
    {
        self.frontier.clear();
        let n = self.path.n();
        let lag = self.constraint.min().max(1);
        let constraint = self.constraint;
        let mut best: Option<(usize, usize)> = None;
        for t in origin..=n {
            if t >= origin + lag {
                let u = t - lag;
                self.frontier
                    .insert(self.ranks.rank_of_point(u), self.path.point(u));
            }
            let query = self.path.point(t);
            self.frontier
                .drain_dominated(self.ranks.rank_of_point(t), query, |p| {
                    let len = t - p.index;
                    if constraint.admits(len) && best.is_none_or(|(bs, bt)| len < bt - bs) {
                        best = Some((p.index, t));
                    }
                });
            observe(&self.frontier);
            if mode == SearchMode::FirstEnd && best.is_some() {
                break;
            }
        }
        best
    }
}

/// Shortest `z_a..z_b` with `θ1 <= D(a, b) <= θ2` whose length satisfies
/// `constraint`, or `None`. Ties go to the smallest `b`.
pub fn shortest_in_range(
    seq: &BinarySequence,
    bounds: &DensityBounds,
    constraint: Option<LengthConstraint>,
) -> Option<SubstringMatch> {
    let path = OrthoPath::new(seq, *bounds);
    let mut search = ShortestSearch::new(&path, constraint.unwrap_or_default());
    search
        .run(0, SearchMode::Shortest)
        .map(|(s, t)| SubstringMatch::from_prefix(path.prefix(), s + 1, t))
}
