use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A vector in the root lattice, in coordinates of the simple roots.
///
/// Nothing in the type forces the vector to actually be a root; the
/// constructors on [`CoxeterSystem`](super::CoxeterSystem) only ever produce
/// genuine roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(Vec<BigInt>);

impl Root {
    pub fn new(coords: Vec<BigInt>) -> Self {
        Root(coords)
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        Root(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn simple(rank: usize, s: usize) -> Self {
        let mut coords = alloc::vec![BigInt::zero(); rank];
        coords[s] = BigInt::one();
        Root(coords)
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Nonzero with all coordinates nonnegative.
    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|c| !c.is_negative())
    }

    /// Nonzero with all coordinates nonpositive.
    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|c| !c.is_positive())
    }

    pub fn height(&self) -> BigInt {
        self.0.iter().sum()
    }

    /// The positive member of `{self, -self}`, and whether a negation happened.
    pub fn to_positive(&self) -> (Root, bool) {
        if self.is_negative() {
            (-self, true)
        } else {
            (self.clone(), false)
        }
    }

    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.0.iter().map(|c| i64::try_from(c).ok()).collect()
    }
}

impl core::ops::Neg for &Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

impl core::ops::Neg for Root {
    type Output = Root;
    fn neg(self) -> Root {
        -&self
    }
}

/// Prints integer combinations of simple roots, `α1+α2`, `2α1-α2`; rank one
/// systems print the single simple root as `α`.
impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{}", mag)?;
            }
            if self.0.len() == 1 {
                f.write_str("α")?;
            } else {
                write!(f, "α{}", i + 1)?;
            }
            first = false;
        }
        Ok(())
    }
}
