//! Substrings of a binary sequence whose density of 1s lies in a rational
//! range `[θ1, θ2]`: the longest, the shortest (optionally length-bounded),
//! and a maximum set of disjoint ones.
//!
//! ```
//! use denseregion::{longest_in_range, validate_bounds, BinarySequence};
//!
//! let seq: BinarySequence = "1100010101".parse().unwrap();
//! let bounds = validate_bounds(1, 4, 1, 3, seq.len()).unwrap();
//! let m = longest_in_range(&seq, &bounds).unwrap();
//! assert_eq!((m.a, m.b), (3, 9));
//! ```

pub mod error;
pub mod frontier;
pub mod geometry;
pub mod ingest;
pub mod longest;
pub mod maximal;
pub mod oracle;
pub mod radixsort;
pub mod sequence;
pub mod shortest;
pub mod veb;

pub use error::{Error, Result};
pub use frontier::{build_frontiers, Frontier, FrontierKind};
pub use geometry::{build_orthogonal, dominates, OrthoPath, OrthoPoint};
pub use ingest::{
    map_cpg, map_gc, map_raw, map_residues, parse_bits, parse_fasta, AmbiguityPolicy, FastaReader,
    FastaRecord, Mapped, MappingMode, MappingPolicy,
};
pub use longest::longest_in_range;
pub use maximal::{max_disjoint, max_disjoint_with_stats, MaximalStats, SolutionSet};
pub use oracle::Oracle;
pub use sequence::{
    density, in_range, parse_fraction, validate_bounds, BinarySequence, Density, DensityBounds,
    LengthConstraint, SubstringMatch, MAX_LEN,
};
pub use shortest::shortest_in_range;
pub use veb::{VebSet, VebTree};
