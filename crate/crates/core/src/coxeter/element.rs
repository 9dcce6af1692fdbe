use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Root;

/// A group element, stored as the integer matrix of its action on the root
/// lattice. Entries are row-major; column `j` holds the image of `α_j`.
///
/// The ordering is an arbitrary but fixed total order on matrices, useful only
/// for keying maps.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    rank: usize,
    entries: Vec<BigInt>,
}

impl Element {
    pub fn identity(rank: usize) -> Self {
        let mut entries = alloc::vec![BigInt::zero(); rank * rank];
        for i in 0..rank {
            entries[i * rank + i] = BigInt::one();
        }
        Element { rank, entries }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entry(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row * self.rank + col]
    }

    pub(crate) fn entry_mut(&mut self, row: usize, col: usize) -> &mut BigInt {
        &mut self.entries[row * self.rank + col]
    }

    pub fn is_identity(&self) -> bool {
        (0..self.rank).all(|i| {
            (0..self.rank).all(|j| {
                let e = self.entry(i, j);
                if i == j {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    /// The image `w·α_j` of the `j`-th simple root.
    pub fn column(&self, j: usize) -> Root {
        Root::new((0..self.rank).map(|i| self.entry(i, j).clone()).collect())
    }

    /// `w·α_j` is a negative root.
    pub(crate) fn column_is_negative(&self, j: usize) -> bool {
        (0..self.rank).any(|i| self.entry(i, j).is_negative())
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.entries.chunks(self.rank.max(1)).map(|r| r.to_vec()).collect()
    }

    pub(crate) fn matmul(&self, other: &Element) -> Element {
        let n = self.rank;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = BigInt::zero();
                for k in 0..n {
                    let a = self.entry(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    acc += a * other.entry(k, j);
                }
                entries.push(acc);
            }
        }
        Element { rank: n, entries }
    }

    pub(crate) fn apply_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        (0..self.rank)
            .map(|i| {
                let mut acc = BigInt::zero();
                for (k, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        acc += self.entry(i, k) * x;
                    }
                }
                acc
            })
            .collect()
    }

    /// Sum of absolute values of the entries, saturating.
    pub(crate) fn abs_mass(&self) -> usize {
        self.entries.iter().fold(0usize, |acc, e| {
            let a = usize::try_from(e.abs()).unwrap_or(usize::MAX);
            acc.saturating_add(a)
        })
    }
}
