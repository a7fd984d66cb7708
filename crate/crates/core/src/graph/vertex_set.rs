use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::VertexId;

/// A subset of vertices, kept sorted and free of duplicates.
///
/// Sets are ordered by their canonical key: the bitmask with vertex `i` at
/// bit `i`, compared as an unsigned integer. The ordering is defined for any
/// vertex count, not only for sets that fit in a `u64`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    members: Vec<VertexId>,
}

impl VertexSet {
    /// Builds a set from arbitrary ids, rejecting any id `>= vertex_count`.
    pub fn new(ids: impl IntoIterator<Item = VertexId>, vertex_count: usize) -> Result<Self> {
        let mut members: Vec<VertexId> = ids.into_iter().collect();
        if let Some(&bad) = members.iter().find(|&&v| v >= vertex_count) {
            return Err(Error::VertexOutOfRange(bad, vertex_count));
        }
        members.sort_unstable();
        members.dedup();
        Ok(Self { members })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn singleton(v: VertexId) -> Self {
        Self { members: vec![v] }
    }

    /// Set whose members are the one bits of `mask`.
    pub fn from_mask(mask: u64) -> Self {
        let members = (0..64).filter(|&i| mask >> i & 1 == 1).collect();
        Self { members }
    }

    /// Canonical key as a `u64`, or `None` if some member is `>= 64`.
    pub fn canonical_key(&self) -> Option<u64> {
        self.members
            .iter()
            .try_fold(0u64, |acc, &v| (v < 64).then(|| acc | 1 << v))
    }

    /// All vertices `0..vertex_count` not in `self`.
    pub fn complement(&self, vertex_count: usize) -> Self {
        let members = (0..vertex_count).filter(|v| !self.contains(*v)).collect();
        Self { members }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut members: Vec<VertexId> = self.members.iter().chain(&other.members).copied().collect();
        members.sort_unstable();
        members.dedup();
        Self { members }
    }

    pub fn members(&self) -> &[VertexId] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.members.len() && j < other.members.len() {
            match self.members[i].cmp(&other.members[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.members.iter().all(|&v| other.contains(v))
    }

    /// Largest member plus one, or 0 for the empty set.
    pub(crate) fn bound(&self) -> usize {
        self.members.last().map_or(0, |&v| v + 1)
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        // Numeric bitmask order: the highest differing bit decides.
        self.members.iter().rev().cmp(other.members.iter().rev())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}
