//! Degree-indexed basis bookkeeping shared by the finite algebra types.

use std::collections::BTreeMap;

/// Ordered basis labels per degree. Label order within a degree is the
/// insertion order and is never re-sorted, so callers get stable coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedBasis<L> {
    by_degree: BTreeMap<i64, Vec<L>>,
}

impl<L> Default for GradedBasis<L> {
    fn default() -> Self {
        GradedBasis {
            by_degree: BTreeMap::new(),
        }
    }
}

impl<L> GradedBasis<L> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, degree: i64, label: L) -> usize {
        let v = self.by_degree.entry(degree).or_default();
        v.push(label);
        v.len() - 1
    }

    pub fn dim(&self, degree: i64) -> usize {
        self.by_degree.get(&degree).map_or(0, Vec::len)
    }

    pub fn labels(&self, degree: i64) -> &[L] {
        self.by_degree.get(&degree).map_or(&[], Vec::as_slice)
    }

    pub fn label(&self, degree: i64, index: usize) -> Option<&L> {
        self.by_degree.get(&degree).and_then(|v| v.get(index))
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.by_degree.keys().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.by_degree
            .iter()
            .filter(|(_, v)| !v.is_empty())
            .map(|(&d, _)| d)
            .max()
    }

    pub fn total_dim(&self) -> usize {
        self.by_degree.values().map(Vec::len).sum()
    }
}
