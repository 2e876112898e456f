//! van Emde Boas tree over integer keys `0..U`.
//!
//! Each branch node over `2^k` keys splits a key into a high half (cluster
//! number, `⌈k/2⌉` bits) and a low half (`⌊k/2⌋` bits). The node keeps its
//! minimum outside the clusters, so every operation makes at most one
//! non-trivial recursive call and runs in `O(log log U)`. Nodes of at most
//! 64 keys are single-word bitmaps. Clusters are allocated on first use and
//! `clear` only visits non-empty nodes, so a tree can be emptied and reused
//! at a cost proportional to its occupancy.

use std::cell::Cell;

use crate::error::{Error, Result};

const LEAF_BITS: u32 = 6;

#[derive(Debug)]
enum Node {
    Leaf(u64),
    Branch(Box<Branch>),
}

#[derive(Debug)]
struct Branch {
    low_bits: u32,
    empty: bool,
    min: u64,
    max: u64,
    summary: Node,
    clusters: Vec<Option<Node>>,
}

impl Node {
    fn new(bits: u32) -> Node {
        if bits <= LEAF_BITS {
            return Node::Leaf(0);
        }
        let high_bits = bits.div_ceil(2);
        Node::Branch(Box::new(Branch {
            low_bits: bits / 2,
            empty: true,
            min: 0,
            max: 0,
            summary: Node::new(high_bits),
            clusters: (0..1usize << high_bits).map(|_| None).collect(),
        }))
    }

    fn is_empty(&self) -> bool {
        match self {
            Node::Leaf(bits) => *bits == 0,
            Node::Branch(b) => b.empty,
        }
    }

    fn min(&self) -> Option<u64> {
        match self {
            Node::Leaf(0) => None,
            Node::Leaf(bits) => Some(bits.trailing_zeros() as u64),
            Node::Branch(b) => (!b.empty).then_some(b.min),
        }
    }

    fn max(&self) -> Option<u64> {
        match self {
            Node::Leaf(0) => None,
            Node::Leaf(bits) => Some(63 - bits.leading_zeros() as u64),
            Node::Branch(b) => (!b.empty).then_some(b.max),
        }
    }

    fn contains(&self, x: u64, probes: &mut u64) -> bool {
        *probes += 1;
        match self {
            Node::Leaf(bits) => bits >> x & 1 == 1,
            Node::Branch(b) => {
                if b.empty {
                    return false;
                }
                if x == b.min || x == b.max {
                    return true;
                }
                let (h, l) = b.split(x);
                b.clusters[h]
                    .as_ref()
                    .is_some_and(|c| c.contains(l, probes))
            }
        }
    }

    fn insert(&mut self, x: u64, probes: &mut u64) -> bool {
        *probes += 1;
        match self {
            Node::Leaf(bits) => {
                let fresh = *bits >> x & 1 == 0;
                *bits |= 1 << x;
                fresh
            }
            Node::Branch(b) => {
                if b.empty {
                    b.empty = false;
                    b.min = x;
                    b.max = x;
                    return true;
                }
                if x == b.min {
                    return false;
                }
                let mut x = x;
                if x < b.min {
                    std::mem::swap(&mut x, &mut b.min);
                }
                let (h, l) = b.split(x);
                let low_bits = b.low_bits;
                let cluster = b.clusters[h].get_or_insert_with(|| Node::new(low_bits));
                let inserted = if cluster.is_empty() {
                    b.summary.insert(h as u64, probes);
                    cluster.insert(l, probes)
                } else {
                    cluster.insert(l, probes)
                };
                if x > b.max {
                    b.max = x;
                }
                inserted
            }
        }
    }

    fn remove(&mut self, x: u64, probes: &mut u64) -> bool {
        *probes += 1;
        match self {
            Node::Leaf(bits) => {
                let present = *bits >> x & 1 == 1;
                *bits &= !(1 << x);
                present
            }
            Node::Branch(b) => {
                if b.empty {
                    return false;
                }
                if b.min == b.max {
                    if x == b.min {
                        b.empty = true;
                        return true;
                    }
                    return false;
                }
                let mut x = x;
                if x == b.min {
                    // Promote the smallest clustered key to be the new min.
                    let h = b.summary.min().expect("non-singleton has clusters") as usize;
                    let l = b.clusters[h].as_ref().and_then(Node::min).unwrap();
                    x = b.join(h, l);
                    b.min = x;
                }
                let (h, l) = b.split(x);
                let Some(cluster) = b.clusters[h].as_mut() else {
                    return false;
                };
                if !cluster.remove(l, probes) {
                    return false;
                }
                if cluster.is_empty() {
                    b.summary.remove(h as u64, probes);
                    if x == b.max {
                        b.max = match b.summary.max() {
                            None => b.min,
                            Some(sh) => {
                                let sh = sh as usize;
                                b.join(sh, b.clusters[sh].as_ref().and_then(Node::max).unwrap())
                            }
                        };
                    }
                } else if x == b.max {
                    let l = cluster.max().unwrap();
                    b.max = b.join(h, l);
                }
                true
            }
        }
    }

    fn successor(&self, x: u64, probes: &mut u64) -> Option<u64> {
        *probes += 1;
        match self {
            Node::Leaf(bits) => {
                let above = if x >= 63 {
                    0
                } else {
                    bits & (!0u64 << (x + 1))
                };
                (above != 0).then(|| above.trailing_zeros() as u64)
            }
            Node::Branch(b) => {
                if b.empty {
                    return None;
                }
                if x < b.min {
                    return Some(b.min);
                }
                let (h, l) = b.split(x);
                if let Some(c) = b.clusters[h].as_ref() {
                    if c.max().is_some_and(|m| l < m) {
                        return c.successor(l, probes).map(|l| b.join(h, l));
                    }
                }
                let sh = b.summary.successor(h as u64, probes)? as usize;
                let l = b.clusters[sh].as_ref().and_then(Node::min).unwrap();
                Some(b.join(sh, l))
            }
        }
    }

    fn predecessor(&self, x: u64, probes: &mut u64) -> Option<u64> {
        *probes += 1;
        match self {
            Node::Leaf(bits) => {
                let below = if x == 0 { 0 } else { bits & ((1u64 << x) - 1) };
                (below != 0).then(|| 63 - below.leading_zeros() as u64)
            }
            Node::Branch(b) => {
                if b.empty {
                    return None;
                }
                if x > b.max {
                    return Some(b.max);
                }
                let (h, l) = b.split(x);
                if let Some(c) = b.clusters[h].as_ref() {
                    if c.min().is_some_and(|m| l > m) {
                        return c.predecessor(l, probes).map(|l| b.join(h, l));
                    }
                }
                match b.summary.predecessor(h as u64, probes) {
                    Some(ph) => {
                        let ph = ph as usize;
                        let l = b.clusters[ph].as_ref().and_then(Node::max).unwrap();
                        Some(b.join(ph, l))
                    }
                    None => (x > b.min).then_some(b.min),
                }
            }
        }
    }

    fn clear(&mut self, probes: &mut u64) {
        *probes += 1;
        match self {
            Node::Leaf(bits) => *bits = 0,
            Node::Branch(b) => {
                if b.empty {
                    return;
                }
                let mut next = b.summary.min();
                while let Some(h) = next {
                    if let Some(c) = b.clusters[h as usize].as_mut() {
                        c.clear(probes);
                    }
                    next = b.summary.successor(h, probes);
                }
                b.summary.clear(probes);
                b.empty = true;
            }
        }
    }
}

impl Branch {
    #[inline]
    fn split(&self, x: u64) -> (usize, u64) {
        (
            (x >> self.low_bits) as usize,
            x & ((1 << self.low_bits) - 1),
        )
    }

    #[inline]
    fn join(&self, high: usize, low: u64) -> u64 {
        ((high as u64) << self.low_bits) | low
    }
}

/// A set of integer keys in `0..universe()`.
#[derive(Debug)]
pub struct VebSet {
    root: Node,
    bits: u32,
    len: usize,
    last_probes: Cell<u64>,
    total_probes: Cell<u64>,
}

impl VebSet {
    /// Set for keys below `capacity`, rounded up to a power of two.
    pub fn new(capacity: u64) -> Self {
        let bits = capacity.max(2).next_power_of_two().trailing_zeros();
        assert!(bits <= 48, "universe of 2^{bits} keys is too large");
        VebSet {
            root: Node::new(bits),
            bits,
            len: 0,
            last_probes: Cell::new(0),
            total_probes: Cell::new(0),
        }
    }

    pub fn universe(&self) -> u64 {
        1 << self.bits
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Node visits made by the most recent operation.
    pub fn last_probes(&self) -> u64 {
        self.last_probes.get()
    }

    /// Node visits made since construction.
    pub fn total_probes(&self) -> u64 {
        self.total_probes.get()
    }

    fn check(&self, key: u64) -> Result<()> {
        if key >= self.universe() {
            return Err(Error::KeyRange {
                key: key as i128,
                lo: 0,
                hi: self.universe() as i128 - 1,
            });
        }
        Ok(())
    }

    fn record(&self, probes: u64) {
        self.last_probes.set(probes);
        self.total_probes.set(self.total_probes.get() + probes);
    }

    /// Inserts `key`; returns false if it was already present.
    pub fn insert(&mut self, key: u64) -> Result<bool> {
        self.check(key)?;
        let mut probes = 0;
        let fresh = self.root.insert(key, &mut probes);
        self.record(probes);
        self.len += usize::from(fresh);
        Ok(fresh)
    }

    /// Removes `key`; returns whether it was present.
    pub fn remove(&mut self, key: u64) -> Result<bool> {
        self.check(key)?;
        let mut probes = 0;
        let removed = self.root.remove(key, &mut probes);
        self.record(probes);
        self.len -= usize::from(removed);
        Ok(removed)
    }

    pub fn contains(&self, key: u64) -> Result<bool> {
        self.check(key)?;
        let mut probes = 0;
        let found = self.root.contains(key, &mut probes);
        self.record(probes);
        Ok(found)
    }

    /// Smallest key strictly greater than `key`.
    pub fn successor(&self, key: u64) -> Result<Option<u64>> {
        self.check(key)?;
        let mut probes = 0;
        let found = self.root.successor(key, &mut probes);
        self.record(probes);
        Ok(found)
    }

    /// Largest key strictly smaller than `key`.
    pub fn predecessor(&self, key: u64) -> Result<Option<u64>> {
        self.check(key)?;
        let mut probes = 0;
        let found = self.root.predecessor(key, &mut probes);
        self.record(probes);
        Ok(found)
    }

    /// Largest key `<= key`.
    pub fn floor(&self, key: u64) -> Result<Option<u64>> {
        if self.contains(key)? {
            return Ok(Some(key));
        }
        self.predecessor(key)
    }

    /// Smallest key `>= key`.
    pub fn ceil(&self, key: u64) -> Result<Option<u64>> {
        if self.contains(key)? {
            return Ok(Some(key));
        }
        self.successor(key)
    }

    pub fn min(&self) -> Option<u64> {
        self.root.min()
    }

    pub fn max(&self) -> Option<u64> {
        self.root.max()
    }

    /// Empties the set; cost follows the number of stored keys, not `U`.
    pub fn clear(&mut self) {
        let mut probes = 0;
        self.root.clear(&mut probes);
        self.record(probes);
        self.len = 0;
    }

    /// Keys in increasing order (successor walk).
    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        let mut next = self.min();
        std::iter::from_fn(move || {
            let key = next?;
            next = self.successor(key).unwrap();
            Some(key)
        })
    }
}

const PAGE: usize = 64;

/// Associative array from keys in `0..universe()` to copyable payloads,
/// backed by a [`VebSet`] for ordering queries.
#[derive(Debug)]
pub struct VebTree<V> {
    keys: VebSet,
    pages: Vec<Option<Box<[V; PAGE]>>>,
}

impl<V: Copy + Default> VebTree<V> {
    pub fn new(capacity: u64) -> Self {
        let keys = VebSet::new(capacity);
        let pages = (keys.universe() as usize).div_ceil(PAGE);
        VebTree {
            keys,
            pages: (0..pages).map(|_| None).collect(),
        }
    }

    pub fn universe(&self) -> u64 {
        self.keys.universe()
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn keys(&self) -> &VebSet {
        &self.keys
    }

    #[inline]
    fn slot(&self, key: u64) -> V {
        let page = self.pages[key as usize / PAGE].as_ref().unwrap();
        page[key as usize % PAGE]
    }

    fn entry(&self, key: Option<u64>) -> Option<(u64, V)> {
        key.map(|k| (k, self.slot(k)))
    }

    /// Inserts or replaces; returns the previous payload.
    pub fn insert(&mut self, key: u64, value: V) -> Result<Option<V>> {
        let fresh = self.keys.insert(key)?;
        let page =
            self.pages[key as usize / PAGE].get_or_insert_with(|| Box::new([V::default(); PAGE]));
        let previous = std::mem::replace(&mut page[key as usize % PAGE], value);
        Ok((!fresh).then_some(previous))
    }

    /// Removes `key`; returns its payload if it was present.
    pub fn remove(&mut self, key: u64) -> Result<Option<V>> {
        if self.keys.remove(key)? {
            Ok(Some(self.slot(key)))
        } else {
            Ok(None)
        }
    }

    pub fn get(&self, key: u64) -> Result<Option<V>> {
        Ok(self.keys.contains(key)?.then(|| self.slot(key)))
    }

    pub fn contains(&self, key: u64) -> Result<bool> {
        self.keys.contains(key)
    }

    pub fn successor(&self, key: u64) -> Result<Option<(u64, V)>> {
        Ok(self.entry(self.keys.successor(key)?))
    }

    pub fn predecessor(&self, key: u64) -> Result<Option<(u64, V)>> {
        Ok(self.entry(self.keys.predecessor(key)?))
    }

    pub fn floor(&self, key: u64) -> Result<Option<(u64, V)>> {
        Ok(self.entry(self.keys.floor(key)?))
    }

    pub fn ceil(&self, key: u64) -> Result<Option<(u64, V)>> {
        Ok(self.entry(self.keys.ceil(key)?))
    }

    pub fn min(&self) -> Option<(u64, V)> {
        self.entry(self.keys.min())
    }

    pub fn max(&self) -> Option<(u64, V)> {
        self.entry(self.keys.max())
    }

    /// Empties the tree. Payload pages stay allocated for reuse; stale
    /// payloads are unreachable once their keys are gone.
    pub fn clear(&mut self) {
        self.keys.clear();
    }
}
