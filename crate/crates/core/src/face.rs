//! Faces as 64-bit vertex masks.
//!
//! Every search in this crate walks the subset lattice of a small vertex set,
//! so a face is a single machine word and subset, union and intersection are
//! one instruction each. Labels are restricted to `0..=63`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A finite set of vertex labels in `0..=63`.
///
/// The derived order is *not* numeric on the mask: [`Ord`] compares the
/// increasing vertex sequences lexicographically, so `{1,2} < {1,2,3} < {1,3} < {2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u64);

impl Face {
    pub const MAX_LABEL: u32 = 63;
    pub const EMPTY: Face = Face(0);

    pub const fn from_bits(bits: u64) -> Self {
        Face(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(v: u32) -> Result<Self> {
        if v > Self::MAX_LABEL {
            return Err(Error::LabelOutOfRange(v as u64));
        }
        Ok(Face(1u64 << v))
    }

    pub fn from_vertices<I, T>(vertices: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: TryInto<u64> + Copy,
    {
        let mut bits = 0u64;
        for v in vertices {
            let v: u64 = v.try_into().map_err(|_| Error::LabelOutOfRange(u64::MAX))?;
            if v > Self::MAX_LABEL as u64 {
                return Err(Error::LabelOutOfRange(v));
            }
            bits |= 1u64 << v;
        }
        Ok(Face(bits))
    }

    /// The face `{lo, lo+1, ..., hi}`; empty when `lo > hi`.
    pub fn range(lo: u32, hi: u32) -> Result<Self> {
        if lo > hi {
            return Ok(Face::EMPTY);
        }
        Face::from_vertices(lo..=hi)
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// `|face| - 1`; the empty face has dimension -1.
    pub const fn dim(self) -> isize {
        self.0.count_ones() as isize - 1
    }

    pub const fn contains(self, v: u32) -> bool {
        v <= Self::MAX_LABEL && self.0 & (1u64 << v) != 0
    }

    pub const fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_disjoint(self, other: Face) -> bool {
        self.0 & other.0 == 0
    }

    pub const fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub const fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub const fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn with(self, v: u32) -> Face {
        debug_assert!(v <= Self::MAX_LABEL);
        Face(self.0 | (1u64 << v))
    }

    pub fn without(self, v: u32) -> Face {
        debug_assert!(v <= Self::MAX_LABEL);
        Face(self.0 & !(1u64 << v))
    }

    pub fn min(self) -> Option<u32> {
        (self.0 != 0).then(|| self.0.trailing_zeros())
    }

    pub fn max(self) -> Option<u32> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros())
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.iter().collect()
    }

    /// All subsets of this face, the face itself included.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(self.0),
        }
    }

    /// Subsets with at most `max_len` vertices.
    pub fn subsets_up_to(self, max_len: usize) -> impl Iterator<Item = Face> {
        self.subsets().filter(move |s| s.len() <= max_len)
    }

    /// Subsets with exactly `len` vertices.
    pub fn subsets_of_len(self, len: usize) -> impl Iterator<Item = Face> {
        self.subsets().filter(move |s| s.len() == len)
    }
}

pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = Face;

    fn next(&mut self) -> Option<Face> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            Some((cur - 1) & self.mask)
        };
        Some(Face(cur))
    }
}

impl IntoIterator for Face {
    type Item = u32;
    type IntoIter = Vertices;

    fn into_iter(self) -> Vertices {
        self.iter()
    }
}

fn bits_above(i: u32) -> u64 {
    if i >= 63 {
        0
    } else {
        !0u64 << (i + 1)
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        // Below the lowest differing label both sequences agree.
        let i = diff.trailing_zeros();
        if self.0 & (1u64 << i) != 0 {
            if other.0 & bits_above(i) == 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        } else if self.0 & bits_above(i) == 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Face {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for Face {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<u64>::deserialize(deserializer)?;
        Face::from_vertices(raw).map_err(serde::de::Error::custom)
    }
}

/// Shorthand for building faces in tests and examples. Panics on labels above 63.
#[macro_export]
macro_rules! face {
    () => { $crate::Face::EMPTY };
    ($($v:expr),+ $(,)?) => {
        $crate::Face::from_vertices([$($v as u64),+]).expect("vertex label out of range")
    };
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basics() {
        let f = face![1, 3, 5];
        assert_eq!(f.len(), 3);
        assert_eq!(f.dim(), 2);
        assert_eq!(Face::EMPTY.dim(), -1);
        assert_eq!(f.to_vec(), vec![1, 3, 5]);
        assert_eq!(f.min(), Some(1));
        assert_eq!(f.max(), Some(5));
        assert!(face![1, 5].is_subset(f));
        assert!(!face![1, 2].is_subset(f));
        assert_eq!(f.to_string(), "{1,3,5}");
        assert_eq!(Face::EMPTY.to_string(), "{}");
        assert_eq!(f.subsets().count(), 8);
        assert_eq!(f.subsets_of_len(2).count(), 3);
    }

    #[test]
    fn label_cap() {
        assert!(Face::singleton(63).is_ok());
        assert_eq!(Face::singleton(64), Err(Error::LabelOutOfRange(64)));
        assert!(Face::from_vertices([0u32, 70]).is_err());
        assert_eq!(face![63].max(), Some(63));
        assert_eq!(face![62, 63].cmp(&face![63]), Ordering::Less);
    }

    #[test]
    fn lexicographic_order() {
        let mut faces = vec![face![2], face![1, 3], face![1, 2, 3], face![1, 2], face![]];
        faces.sort();
        assert_eq!(
            faces,
            vec![face![], face![1, 2], face![1, 2, 3], face![1, 3], face![2]]
        );
    }

    proptest! {
        #[test]
        fn order_matches_sorted_vectors(a in any::<u64>(), b in any::<u64>()) {
            let (fa, fb) = (Face::from_bits(a), Face::from_bits(b));
            prop_assert_eq!(fa.cmp(&fb), fa.to_vec().cmp(&fb.to_vec()));
        }

        #[test]
        fn serde_round_trip(a in any::<u64>()) {
            let f = Face::from_bits(a);
            let json = serde_json::to_string(&f).unwrap();
            prop_assert_eq!(serde_json::from_str::<Face>(&json).unwrap(), f);
        }
    }
}
