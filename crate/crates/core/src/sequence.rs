//! Input types: binary sequences, density bounds, length constraints, and
//! the exact density arithmetic they support.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Longest sequence accepted. Keeps every orthogonal coordinate within
/// `[-n², n²] ⊂ i64` and every point index within `u32`.
pub const MAX_LEN: usize = 1 << 31;

/// A string of digits `z_1..z_n`, each 0 or 1, stored one per byte.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinarySequence {
    digits: Vec<u8>,
}

impl BinarySequence {
    /// Wraps digits that must all be 0 or 1.
    pub fn new(digits: Vec<u8>) -> Result<Self> {
        if digits.is_empty() {
            return Err(Error::EmptySequence);
        }
        if digits.len() > MAX_LEN {
            return Err(Error::SequenceTooLong(digits.len()));
        }
        if let Some(offset) = digits.iter().position(|&d| d > 1) {
            return Err(Error::InvalidDigit {
                offset,
                value: digits[offset],
            });
        }
        Ok(BinarySequence { digits })
    }

    /// Seeded pseudo-random sequence where each digit is 1 with probability
    /// `ones_num / ones_den`. Identical arguments give identical sequences.
    pub fn random(n: usize, seed: u64, ones_num: u64, ones_den: u64) -> Result<Self> {
        if ones_den == 0 || ones_num > ones_den {
            return Err(Error::BoundsRange {
                num: ones_num as i64,
                den: ones_den as i64,
            });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let digits = (0..n)
            .map(|_| u8::from(rng.gen_range(0..ones_den) < ones_num))
            .collect();
        Self::new(digits)
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    /// Always false; kept for API symmetry with collections.
    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    /// Digit `z_k` for 1-based `k`.
    pub fn digit(&self, k: usize) -> u8 {
        self.digits[k - 1]
    }

    /// `prefix[k]` is the number of 1s in `z_1..z_k`; length `n + 1`.
    pub fn prefix_ones(&self) -> Vec<u32> {
        let mut prefix = Vec::with_capacity(self.digits.len() + 1);
        let mut acc = 0u32;
        prefix.push(0);
        for &d in &self.digits {
            acc += u32::from(d);
            prefix.push(acc);
        }
        prefix
    }

    pub fn count_ones(&self) -> usize {
        self.digits.iter().map(|&d| d as usize).sum()
    }

    /// Number of 1s in `z_a..z_b`, 1-based inclusive.
    pub fn ones_between(&self, a: usize, b: usize) -> Result<usize> {
        self.check_range(a, b)?;
        Ok(self.digits[a - 1..b].iter().map(|&d| d as usize).sum())
    }

    fn check_range(&self, a: usize, b: usize) -> Result<()> {
        if a == 0 || a > b || b > self.len() {
            return Err(Error::IndexRange {
                a,
                b,
                n: self.len(),
            });
        }
        Ok(())
    }
}

impl FromStr for BinarySequence {
    type Err = Error;

    /// Strict parse of a string made only of `0` and `1`.
    fn from_str(s: &str) -> Result<Self> {
        let digits = s
            .bytes()
            .enumerate()
            .map(|(offset, b)| match b {
                b'0' => Ok(0),
                b'1' => Ok(1),
                _ => Err(Error::InvalidBit {
                    offset,
                    byte: b as char,
                }),
            })
            .collect::<Result<Vec<u8>>>()?;
        Self::new(digits)
    }
}

impl fmt::Display for BinarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in &self.digits {
            f.write_str(if d == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 64 {
            write!(f, "BinarySequence({self})")
        } else {
            write!(f, "BinarySequence(n={})", self.len())
        }
    }
}

/// A density as a fraction `ones / length` in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Density {
    pub num: u64,
    pub den: u64,
}

impl Density {
    /// Reduces `ones / length`. `length` must be positive.
    pub fn new(ones: u64, length: u64) -> Self {
        assert!(length > 0, "density of an empty substring");
        let g = ones.gcd(&length);
        Density {
            num: ones / g,
            den: length / g,
        }
    }
}

impl fmt::Display for Density {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Target density range `θ1 = c1/d1 < θ2 = c2/d2`, both reduced and strictly
/// inside `(0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DensityBounds {
    c1: u64,
    d1: u64,
    c2: u64,
    d2: u64,
}

impl DensityBounds {
    /// See [`validate_bounds`].
    pub fn new(c1: i64, d1: i64, c2: i64, d2: i64, n: usize) -> Result<Self> {
        validate_bounds(c1, d1, c2, d2, n)
    }

    pub fn c1(&self) -> u64 {
        self.c1
    }
    pub fn d1(&self) -> u64 {
        self.d1
    }
    pub fn c2(&self) -> u64 {
        self.c2
    }
    pub fn d2(&self) -> u64 {
        self.d2
    }

    pub fn lower(&self) -> Density {
        Density {
            num: self.c1,
            den: self.d1,
        }
    }

    pub fn upper(&self) -> Density {
        Density {
            num: self.c2,
            den: self.d2,
        }
    }

    /// True iff a substring of `length` digits holding `ones` 1s has density
    /// in `[θ1, θ2]`.
    #[inline]
    pub fn admits(&self, ones: u64, length: u64) -> bool {
        let (ones, length) = (ones as u128, length as u128);
        self.c1 as u128 * length <= self.d1 as u128 * ones
            && self.c2 as u128 * length >= self.d2 as u128 * ones
    }
}

impl fmt::Display for DensityBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}/{}, {}/{}]", self.c1, self.d1, self.c2, self.d2)
    }
}

/// Reduces both fractions and checks `0 < θ1 < θ2 < 1` and `d1, d2 <= n`.
pub fn validate_bounds(c1: i64, d1: i64, c2: i64, d2: i64, n: usize) -> Result<DensityBounds> {
    for (num, den) in [(c1, d1), (c2, d2)] {
        if den <= 0 || num <= 0 || num >= den {
            return Err(Error::BoundsRange { num, den });
        }
    }
    if (c1 as i128) * (d2 as i128) >= (c2 as i128) * (d1 as i128) {
        return Err(Error::BoundsOrder { c1, d1, c2, d2 });
    }
    let reduce = |num: i64, den: i64| {
        let g = num.gcd(&den);
        ((num / g) as u64, (den / g) as u64)
    };
    let (c1, d1) = reduce(c1, d1);
    let (c2, d2) = reduce(c2, d2);
    for (num, den) in [(c1, d1), (c2, d2)] {
        if den as u128 > n as u128 {
            return Err(Error::DenominatorTooLarge { num, den, n });
        }
    }
    Ok(DensityBounds { c1, d1, c2, d2 })
}

/// Parses `"C/D"` into a raw numerator/denominator pair. No decimals.
pub fn parse_fraction(s: &str) -> Result<(i64, i64)> {
    let bad = || Error::BadFraction(s.to_string());
    let (num, den) = s.trim().split_once('/').ok_or_else(bad)?;
    let num = num.trim().parse::<i64>().map_err(|_| bad())?;
    let den = den.trim().parse::<i64>().map_err(|_| bad())?;
    Ok((num, den))
}

/// Density `D(a, b)` of `z_a..z_b` (1-based, inclusive), reduced.
pub fn density(seq: &BinarySequence, a: usize, b: usize) -> Result<Density> {
    let ones = seq.ones_between(a, b)?;
    Ok(Density::new(ones as u64, (b - a + 1) as u64))
}

/// Exact test `θ1 <= d <= θ2` by cross-multiplication.
pub fn in_range(d: Density, bounds: &DensityBounds) -> bool {
    bounds.admits(d.num, d.den)
}

/// Admissible substring lengths `min..=max`; `max = None` is unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LengthConstraint {
    min: usize,
    max: Option<usize>,
}

impl LengthConstraint {
    pub fn new(min: usize, max: Option<usize>) -> Result<Self> {
        if min == 0 || max.is_some_and(|m| m < min) {
            return Err(Error::LengthConstraint { min, max });
        }
        Ok(LengthConstraint { min, max })
    }

    pub fn unbounded() -> Self {
        LengthConstraint { min: 1, max: None }
    }

    pub fn min(&self) -> usize {
        self.min
    }

    pub fn max(&self) -> Option<usize> {
        self.max
    }

    #[inline]
    pub fn admits(&self, length: usize) -> bool {
        length >= self.min && self.max.is_none_or(|m| length <= m)
    }
}

impl Default for LengthConstraint {
    fn default() -> Self {
        Self::unbounded()
    }
}

/// A solution region `z_a..z_b`, 1-based inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SubstringMatch {
    pub a: usize,
    pub b: usize,
    pub length: usize,
    pub ones: usize,
    pub density: Density,
}

impl SubstringMatch {
    /// Builds the match for `z_a..z_b` from the prefix-count table.
    pub fn from_prefix(prefix: &[u32], a: usize, b: usize) -> Self {
        let ones = (prefix[b] - prefix[a - 1]) as usize;
        let length = b - a + 1;
        SubstringMatch {
            a,
            b,
            length,
            ones,
            density: Density::new(ones as u64, length as u64),
        }
    }

    /// Builds the match for `z_a..z_b` by counting directly.
    pub fn from_sequence(seq: &BinarySequence, a: usize, b: usize) -> Result<Self> {
        let ones = seq.ones_between(a, b)?;
        let length = b - a + 1;
        Ok(SubstringMatch {
            a,
            b,
            length,
            ones,
            density: Density::new(ones as u64, length as u64),
        })
    }
}
