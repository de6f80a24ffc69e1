//! Strictly increasing multi-indices naming basis covectors `dx^I`.

use crate::error::{FormError, Result};
use std::fmt;

/// A strictly increasing sequence of axis indices in `1..=n`, naming the basis
/// covector `dx^{i_1} ∧ … ∧ dx^{i_q}` in ambient dimension `n`.
///
/// Indices are 1-based so that signs stay auditable against hand computation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSet {
    n: usize,
    indices: Vec<usize>,
}

impl IndexSet {
    /// Build an index set, validating strict monotonicity and the range `1..=n`.
    pub fn new(n: usize, indices: &[usize]) -> Result<Self> {
        for (pos, &i) in indices.iter().enumerate() {
            if i < 1 || i > n {
                return Err(FormError::InvalidIndexSet(format!(
                    "index {i} out of range 1..={n}"
                )));
            }
            if pos > 0 && indices[pos - 1] >= i {
                return Err(FormError::InvalidIndexSet(format!(
                    "indices not strictly increasing at position {pos}"
                )));
            }
        }
        Ok(IndexSet { n, indices: indices.to_vec() })
    }

    /// The empty index set (degree 0).
    pub fn empty(n: usize) -> Self {
        IndexSet { n, indices: Vec::new() }
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.indices.len()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    /// Position of `i` within the sequence, if present (0-based).
    pub fn position(&self, i: usize) -> Option<usize> {
        self.indices.binary_search(&i).ok()
    }

    /// The complementary index set `Iᶜ` inside `1..=n`.
    pub fn complement(&self) -> IndexSet {
        let indices = (1..=self.n).filter(|i| !self.contains(*i)).collect();
        IndexSet { n: self.n, indices }
    }

    /// Remove the entry at `pos`, keeping the rest in order.
    pub fn without_position(&self, pos: usize) -> IndexSet {
        let mut indices = self.indices.clone();
        indices.remove(pos);
        IndexSet { n: self.n, indices }
    }

    /// All index sets of the given degree in ambient dimension `n`,
    /// in lexicographic order. Empty when `q` is outside `0..=n`.
    pub fn all(n: usize, q: i64) -> Vec<IndexSet> {
        if q < 0 || q > n as i64 {
            return Vec::new();
        }
        let q = q as usize;
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(q);
        fn rec(n: usize, q: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<IndexSet>) {
            if current.len() == q {
                out.push(IndexSet { n, indices: current.clone() });
                return;
            }
            for i in start..=n {
                current.push(i);
                rec(n, q, i + 1, current, out);
                current.pop();
            }
        }
        rec(n, q, 1, &mut current, &mut out);
        out
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.indices.is_empty() {
            return write!(f, "1");
        }
        write!(f, "dx^(")?;
        for (pos, i) in self.indices.iter().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, ")")
    }
}

/// Sign and merged index set of `dx^I ∧ dx^J`.
///
/// Returns `None` when `I ∩ J ≠ ∅` (the wedge vanishes); otherwise the sign of
/// the permutation sorting the concatenation `(I, J)` together with the sorted
/// union.
pub fn merge_sign(lhs: &IndexSet, rhs: &IndexSet) -> Result<Option<(i8, IndexSet)>> {
    if lhs.n != rhs.n {
        return Err(FormError::DimensionMismatch { expected: lhs.n, found: rhs.n });
    }
    // Count inversions between the two sorted halves: pairs (i, j) with
    // i ∈ I, j ∈ J, i > j. Equal entries mean overlap.
    let mut inversions = 0usize;
    for &j in &rhs.indices {
        for &i in &lhs.indices {
            if i == j {
                return Ok(None);
            }
            if i > j {
                inversions += 1;
            }
        }
    }
    let mut merged: Vec<usize> = lhs.indices.iter().chain(rhs.indices.iter()).copied().collect();
    merged.sort_unstable();
    let sign = if inversions % 2 == 0 { 1 } else { -1 };
    Ok(Some((sign, IndexSet { n: lhs.n, indices: merged })))
}
