//! Maximum-cardinality set of disjoint substrings with density in range.
//!
//! Greedy by earliest end: find the feasible substring with the smallest
//! endpoint `b`, keep it, and restart on `z_{b+1}..z_n`. Restarts share one
//! rank table and one set of frontier trees, which are cleared in time
//! proportional to what they hold.

use crate::geometry::OrthoPath;
use crate::sequence::{BinarySequence, DensityBounds, LengthConstraint, SubstringMatch};
use crate::shortest::{SearchMode, ShortestSearch};

/// Disjoint matches sorted by position (`b_i < a_{i+1}`).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolutionSet {
    pub matches: Vec<SubstringMatch>,
}

impl SolutionSet {
    /// Number of matches.
    pub fn k(&self) -> usize {
        self.matches.len()
    }

    pub fn is_disjoint(&self) -> bool {
        self.matches.windows(2).all(|w| w[0].b < w[1].a)
    }
}

/// Work counters from a [`max_disjoint_with_stats`] run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MaximalStats {
    pub restarts: usize,
    pub tree_ops: u64,
}

pub fn max_disjoint(
    seq: &BinarySequence,
    bounds: &DensityBounds,
    constraint: Option<LengthConstraint>,
) -> SolutionSet {
    max_disjoint_with_stats(seq, bounds, constraint).0
}

pub fn max_disjoint_with_stats(
    seq: &BinarySequence,
    bounds: &DensityBounds,
    constraint: Option<LengthConstraint>,
) -> (SolutionSet, MaximalStats) {
    let path = OrthoPath::new(seq, *bounds);
    let mut search = ShortestSearch::new(&path, constraint.unwrap_or_default());
    let mut set = SolutionSet::default();
    let mut stats = MaximalStats::default();
    let mut origin = 0;
    loop {
        stats.restarts += 1;
        let Some((s, t)) = search.run(origin, SearchMode::FirstEnd) else {
            break;
        };
        set.matches
            .push(SubstringMatch::from_prefix(path.prefix(), s + 1, t));
        origin = t;
    }
    stats.tree_ops = search.frontier().tree_ops();
    (set, stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::validate_bounds;

    #[test]
    fn worked_example() {
        let seq: BinarySequence = "1100010101".parse().unwrap();
        let b = validate_bounds(1, 4, 1, 3, 10).unwrap();
        let set = max_disjoint(&seq, &b, None);
        let spans: Vec<_> = set.matches.iter().map(|m| (m.a, m.b)).collect();
        assert_eq!(spans, [(2, 4), (5, 7)]);
        assert!(set
            .matches
            .iter()
            .all(|m| (m.density.num, m.density.den) == (1, 3)));
        assert!(set.is_disjoint());
    }

    #[test]
    fn nothing_feasible() {
        let seq: BinarySequence = "0000".parse().unwrap();
        let b = validate_bounds(1, 4, 1, 3, 4).unwrap();
        let set = max_disjoint(&seq, &b, None);
        assert_eq!(set.k(), 0);
    }

    #[test]
    fn length_constraint_applies_to_every_match() {
        let seq: BinarySequence = "1100010101".parse().unwrap();
        let b = validate_bounds(1, 4, 1, 3, 10).unwrap();
        let c = LengthConstraint::new(4, Some(6)).unwrap();
        let set = max_disjoint(&seq, &b, Some(c));
        assert!(set.k() >= 1);
        assert!(set.matches.iter().all(|m| (4..=6).contains(&m.length)));
    }
}
