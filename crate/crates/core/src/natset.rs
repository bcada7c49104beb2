//! Finite sets of non-negative integers and the set algebra used by
//! variation sets: `mex`, the colon operation, and XOR / additive
//! translation.

use std::fmt;

use crate::error::{Error, Result};

/// A finite set of non-negative integers, stored as a strictly increasing
/// sequence.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NatSet(Vec<u64>);

impl NatSet {
    pub fn new() -> Self {
        NatSet(Vec::new())
    }

    /// The initial segment `{0, 1, ..., n - 1}`.
    pub fn range(n: u64) -> Self {
        NatSet((0..n).collect())
    }

    /// Builds a set from a vector that is already strictly increasing.
    /// Returns `None` if the ordering invariant does not hold.
    pub fn from_sorted(elements: Vec<u64>) -> Option<Self> {
        if elements.windows(2).all(|w| w[0] < w[1]) {
            Some(NatSet(elements))
        } else {
            None
        }
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }

    pub fn max(&self) -> Option<u64> {
        self.0.last().copied()
    }

    /// Minimum excludant: the least non-negative integer not in the set.
    pub fn mex(&self) -> u64 {
        // Sorted and duplicate-free, so the first gap is the first index
        // whose element differs from the index.
        self.0
            .iter()
            .enumerate()
            .find(|&(i, &x)| x != i as u64)
            .map_or(self.0.len() as u64, |(i, _)| i as u64)
    }

    /// `A : B`, i.e. `A ∪ {x_i | i ∈ B}` where `x_0 < x_1 < ...` enumerate
    /// the complement of `A`.
    pub fn colon(&self, b: &NatSet) -> NatSet {
        let a = &self.0;
        let mut picked = Vec::with_capacity(b.len());
        // `k` counts elements of A below the candidate `i + k`; it only
        // grows as `i` runs through B in increasing order.
        let mut k = 0usize;
        for i in b.iter() {
            while k < a.len() && a[k] <= i + k as u64 {
                k += 1;
            }
            picked.push(i + k as u64);
        }
        merge(a, &picked)
    }

    /// `A ⊕ x`: elementwise nim-sum.
    pub fn xor_translate(&self, x: u64) -> NatSet {
        let mut v: Vec<u64> = self.0.iter().map(|&a| a ^ x).collect();
        v.sort_unstable();
        NatSet(v)
    }

    /// `A + x`: elementwise addition. Fails instead of wrapping.
    pub fn add_translate(&self, x: u64) -> Result<NatSet> {
        self.0
            .iter()
            .map(|&a| a.checked_add(x).ok_or(Error::Overflow("set translation")))
            .collect::<Result<Vec<_>>>()
            .map(NatSet)
    }

    pub fn union(&self, other: &NatSet) -> NatSet {
        merge(&self.0, &other.0)
    }
}

fn merge(a: &[u64], b: &[u64]) -> NatSet {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    NatSet(out)
}

impl FromIterator<u64> for NatSet {
    fn from_iter<I: IntoIterator<Item = u64>>(iter: I) -> Self {
        let mut v: Vec<u64> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        NatSet(v)
    }
}

impl<const N: usize> From<[u64; N]> for NatSet {
    fn from(values: [u64; N]) -> Self {
        values.into_iter().collect()
    }
}

impl fmt::Display for NatSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}
