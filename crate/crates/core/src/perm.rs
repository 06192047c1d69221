use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::subset::MAX_GROUND;

/// A bijection of `{0, …, n-1}`; `images[i]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n > MAX_GROUND {
            return Err(Error::GroundTooLarge(n));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotAPermutation(images));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a >= n || b >= n {
            return Err(Error::IndexOutOfRange { index: a.max(b), n });
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Ok(Permutation { images })
    }

    /// The cycle `0 -> 1 -> … -> n-1 -> 0`.
    pub fn rotation(n: usize) -> Self {
        Permutation {
            images: (0..n).map(|i| (i + 1) % n.max(1)).collect(),
        }
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.shuffle(rng);
        Permutation { images }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.size()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Image of a bitmask subset.
    pub fn apply_mask(&self, mask: u64) -> u64 {
        crate::subset::elements(mask).fold(0, |acc, i| acc | (1u64 << self.images[i]))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

/// Number of inversions of a sequence, mod 2. The sign of the permutation
/// sorting `seq`.
pub(crate) fn inversion_parity(seq: &[usize]) -> bool {
    let mut odd = false;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            odd ^= seq[i] > seq[j];
        }
    }
    odd
}
