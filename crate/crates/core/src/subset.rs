//! Fixed-width subsets of a groupoid carrier.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest carrier a subset can describe.
pub const MAX_ORDER: usize = 64;

/// A subset of `{0, .., order-1}` stored as a 64-bit mask.
///
/// Bit `i` stands for element `i`. Ordering is the numeric order of the mask,
/// which is what "ascending bitset order" means elsewhere in the crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSubset {
    bits: u64,
    order: u8,
}

fn mask(order: usize) -> u64 {
    if order >= 64 {
        u64::MAX
    } else {
        (1u64 << order) - 1
    }
}

impl ElementSubset {
    pub fn empty(order: usize) -> Self {
        debug_assert!(order <= MAX_ORDER);
        ElementSubset {
            bits: 0,
            order: order as u8,
        }
    }

    pub fn full(order: usize) -> Self {
        ElementSubset {
            bits: mask(order),
            order: order as u8,
        }
    }

    pub fn singleton(order: usize, element: usize) -> Self {
        let mut s = Self::empty(order);
        s.insert(element);
        s
    }

    /// Builds a subset from a raw mask; bits at or above `order` are rejected.
    pub fn from_bits(order: usize, bits: u64) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order,
                max: MAX_ORDER,
            });
        }
        if bits & !mask(order) != 0 {
            let index = 63 - bits.leading_zeros() as usize;
            return Err(Error::ElementOutOfRange { index, order });
        }
        Ok(ElementSubset {
            bits,
            order: order as u8,
        })
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(order: usize, indices: I) -> Result<Self> {
        let mut s = Self::empty(order);
        for i in indices {
            if i >= order {
                return Err(Error::ElementOutOfRange { index: i, order });
            }
            s.insert(i);
        }
        Ok(s)
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order as usize
    }

    #[inline]
    pub fn contains(&self, element: usize) -> bool {
        element < 64 && self.bits >> element & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, element: usize) {
        assert!(element < self.order(), "element {element} out of range");
        self.bits |= 1 << element;
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_full(&self) -> bool {
        self.bits == mask(self.order())
    }

    #[inline]
    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    #[inline]
    pub fn union(&self, other: &Self) -> Self {
        ElementSubset {
            bits: self.bits | other.bits,
            order: self.order,
        }
    }

    #[inline]
    pub fn intersection(&self, other: &Self) -> Self {
        ElementSubset {
            bits: self.bits & other.bits,
            order: self.order,
        }
    }

    #[inline]
    pub fn difference(&self, other: &Self) -> Self {
        ElementSubset {
            bits: self.bits & !other.bits,
            order: self.order,
        }
    }

    pub fn complement(&self) -> Self {
        ElementSubset {
            bits: !self.bits & mask(self.order()),
            order: self.order,
        }
    }

    /// Least element of `self` not in `other`.
    pub fn first_outside(&self, other: &Self) -> Option<usize> {
        self.difference(other).iter().next()
    }

    pub fn iter(&self) -> Elements {
        Elements { bits: self.bits }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All nonempty subsets of an `order`-element carrier, ascending.
    pub fn all_nonempty(order: usize) -> impl Iterator<Item = ElementSubset> {
        debug_assert!(order < 64);
        (1..=mask(order)).map(move |bits| ElementSubset {
            bits,
            order: order as u8,
        })
    }
}

pub struct Elements {
    bits: u64,
}

impl Iterator for Elements {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let i = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(i)
    }
}

impl fmt::Debug for ElementSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for ElementSubset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_is_representable() {
        let e = ElementSubset::empty(5);
        assert!(e.is_empty());
        assert_eq!(e.len(), 0);
        assert!(e.is_subset(&ElementSubset::full(5)));
    }

    #[test]
    fn rejects_high_bits() {
        assert!(ElementSubset::from_bits(3, 0b1000).is_err());
        assert!(ElementSubset::from_bits(3, 0b111).is_ok());
        assert!(ElementSubset::from_indices(3, [0, 3]).is_err());
    }

    #[test]
    fn full_at_cap() {
        let s = ElementSubset::full(64);
        assert_eq!(s.len(), 64);
        assert!(s.complement().is_empty());
    }

    #[test]
    fn iteration_is_ascending() {
        let s = ElementSubset::from_indices(8, [5, 1, 7]).unwrap();
        assert_eq!(s.to_vec(), vec![1, 5, 7]);
        assert_eq!(ElementSubset::all_nonempty(3).count(), 7);
    }
}
