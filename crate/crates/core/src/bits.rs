//! Vertex sets as fixed-width bit sets.
//!
//! Every face, edge and transversal in this crate is a subset of a vertex
//! universe `[0, n)` with `n <= MAX_VERTICES`, so one machine word suffices
//! and subset/superset tests are single instructions.

use std::fmt;

/// Hard ceiling on the size of a vertex universe. Everything here is desk
/// scale; the exponential algorithms are capped far below this anyway.
pub const MAX_VERTICES: usize = 64;

/// A subset of `[0, MAX_VERTICES)` stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1 << v)
    }

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1 << v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn with(self, v: usize) -> Self {
        let mut s = self;
        s.insert(v);
        s
    }

    pub fn without(self, v: usize) -> Self {
        let mut s = self;
        s.remove(v);
        s
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Complement inside the universe `[0, n)`.
    pub fn complement(self, n: usize) -> Self {
        VertexSet(!self.0 & Self::full(n).0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset_of(self, other: Self) -> bool {
        self != other && self.is_subset_of(other)
    }

    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn min_elem(self) -> Option<usize> {
        if self.is_empty() {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// All subsets of `self`, the empty set and `self` included.
    pub fn subsets(self) -> SubsetIter {
        SubsetIter { mask: self.0, current: 0, done: false }
    }

    /// Re-index through an order-preserving compression of `keep`: vertex
    /// `v` in `self` becomes the rank of `v` among the elements of `keep`.
    /// Elements outside `keep` must have been removed beforehand.
    pub fn compress(self, keep: VertexSet) -> Self {
        debug_assert!(self.is_subset_of(keep));
        let mut out = VertexSet::EMPTY;
        for (rank, v) in keep.iter().enumerate() {
            if self.contains(v) {
                out.insert(rank);
            }
        }
        out
    }

    /// Compare as sorted vertex sequences (true lexicographic order, which
    /// differs from the numeric order of the masks).
    pub fn lex_cmp(self, other: Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

pub struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

pub struct SubsetIter {
    mask: u64,
    current: u64,
    done: bool,
}

impl Iterator for SubsetIter {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        let out = VertexSet(self.current);
        if self.current == self.mask {
            self.done = true;
        } else {
            // standard subset-stepping trick
            self.current = (self.current.wrapping_sub(self.mask)) & self.mask;
        }
        Some(out)
    }
}

/// Keep only the inclusion-minimal members of a family.
pub fn minimal_members(sets: &[VertexSet]) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = Vec::new();
    let mut sorted = sets.to_vec();
    sorted.sort_by_key(|s| s.len());
    sorted.dedup();
    for &s in &sorted {
        if !out.iter().any(|&m| m.is_subset_of(s)) {
            out.push(s);
        }
    }
    out.sort();
    out
}

/// Keep only the inclusion-maximal members of a family.
pub fn maximal_members(sets: &[VertexSet]) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = Vec::new();
    let mut sorted = sets.to_vec();
    sorted.sort_by_key(|s| std::cmp::Reverse(s.len()));
    sorted.dedup();
    for &s in &sorted {
        if !out.iter().any(|&m| s.is_subset_of(m)) {
            out.push(s);
        }
    }
    out.sort();
    out
}

/// Is the family an antichain under inclusion?
pub fn is_antichain(sets: &[VertexSet]) -> bool {
    for (k, &a) in sets.iter().enumerate() {
        for &b in &sets[k + 1..] {
            if a.is_subset_of(b) || b.is_subset_of(a) {
                return false;
            }
        }
    }
    true
}
