//! Sets of arguments over a dense index universe `0..N`.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

const WORD_BITS: usize = 64;

type Words = SmallVec<[u64; 1]>;

/// A subset of the arguments of one framework, stored as a bitmask.
///
/// The universe size is the argument count of the owning framework; mixing
/// sets from frameworks of different sizes is a logic error and panics.
/// Sets order canonically by their bitmask value.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ArgumentSet {
    words: Words,
    universe: usize,
}

fn word_count(universe: usize) -> usize {
    universe.div_ceil(WORD_BITS)
}

impl ArgumentSet {
    pub fn empty(universe: usize) -> Self {
        let mut words = Words::new();
        words.resize(word_count(universe), 0);
        ArgumentSet { words, universe }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = Self::empty(universe);
        for (i, w) in set.words.iter_mut().enumerate() {
            let lo = i * WORD_BITS;
            let bits = (universe - lo).min(WORD_BITS);
            *w = if bits == WORD_BITS {
                u64::MAX
            } else {
                (1u64 << bits) - 1
            };
        }
        set
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, indices: I) -> Self {
        let mut set = Self::empty(universe);
        for i in indices {
            set.insert(i);
        }
        set
    }

    /// Builds a set from the low `universe` bits of `mask`.
    ///
    /// Panics if `universe > 64` or `mask` has bits at or above `universe`.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        assert!(universe <= WORD_BITS, "mask sets need universe <= 64");
        assert!(
            universe == WORD_BITS || mask >> universe == 0,
            "mask has bits outside the universe"
        );
        let mut set = Self::empty(universe);
        if let Some(w) = set.words.first_mut() {
            *w = mask;
        }
        set
    }

    /// The bitmask value, when the universe fits in 64 bits.
    pub fn to_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn contains(&self, index: usize) -> bool {
        index < self.universe && self.words[index / WORD_BITS] >> (index % WORD_BITS) & 1 == 1
    }

    pub fn insert(&mut self, index: usize) {
        assert!(index < self.universe, "argument index {index} out of range");
        self.words[index / WORD_BITS] |= 1 << (index % WORD_BITS);
    }

    pub fn remove(&mut self, index: usize) {
        if index < self.universe {
            self.words[index / WORD_BITS] &= !(1 << (index % WORD_BITS));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn check_universe(&self, other: &Self) {
        assert_eq!(self.universe, other.universe, "argument sets from different frameworks");
    }

    fn zip_with(&self, other: &Self, op: impl Fn(u64, u64) -> u64) -> Self {
        self.check_universe(other);
        let words = self.words.iter().zip(&other.words).map(|(&a, &b)| op(a, b)).collect();
        ArgumentSet {
            words,
            universe: self.universe,
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    /// Complement relative to the universe.
    pub fn complement(&self) -> Self {
        Self::full(self.universe).difference(self)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_universe(other);
        self.words.iter().zip(&other.words).all(|(&a, &b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.intersection_len(other) == 0
    }

    /// `|self ∩ other|` without materialising the intersection.
    pub fn intersection_len(&self, other: &Self) -> usize {
        self.check_universe(other);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(&a, &b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let bit = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(i * WORD_BITS + bit)
                }
            })
        })
    }
}

impl Ord for ArgumentSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.universe.cmp(&other.universe).then_with(|| {
            self.words
                .iter()
                .rev()
                .zip(other.words.iter().rev())
                .map(|(a, b)| a.cmp(b))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }
}

impl PartialOrd for ArgumentSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ArgumentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_and_empty() {
        for n in [0, 1, 5, 63, 64, 65, 130] {
            let full = ArgumentSet::full(n);
            assert_eq!(full.len(), n);
            assert!(ArgumentSet::empty(n).is_empty());
            assert!(ArgumentSet::empty(n).is_subset(&full));
            assert_eq!(full.complement(), ArgumentSet::empty(n));
        }
    }

    #[test]
    fn indices_beyond_universe_are_never_members() {
        let s = ArgumentSet::full(3);
        assert!(!s.contains(3));
        assert!(!s.contains(1000));
    }

    #[test]
    #[should_panic]
    fn insert_out_of_range_panics() {
        ArgumentSet::empty(4).insert(4);
    }

    #[test]
    fn canonical_order_is_mask_order() {
        let a = ArgumentSet::from_mask(4, 0b0011);
        let b = ArgumentSet::from_mask(4, 0b0100);
        assert!(a < b);
        let wide_lo = ArgumentSet::from_indices(70, [0, 1, 2]);
        let wide_hi = ArgumentSet::from_indices(70, [65]);
        assert!(wide_lo < wide_hi);
    }

    fn small_set() -> impl Strategy<Value = (ArgumentSet, ArgumentSet)> {
        (1usize..100).prop_flat_map(|n| {
            let idx = proptest::collection::vec(0..n, 0..n);
            (idx.clone(), idx)
                .prop_map(move |(a, b)| (ArgumentSet::from_indices(n, a), ArgumentSet::from_indices(n, b)))
        })
    }

    proptest! {
        #[test]
        fn algebra_matches_membership((a, b) in small_set()) {
            let n = a.universe();
            let u = a.union(&b);
            let i = a.intersection(&b);
            let d = a.difference(&b);
            for x in 0..n {
                prop_assert_eq!(u.contains(x), a.contains(x) || b.contains(x));
                prop_assert_eq!(i.contains(x), a.contains(x) && b.contains(x));
                prop_assert_eq!(d.contains(x), a.contains(x) && !b.contains(x));
            }
            prop_assert_eq!(a.intersection_len(&b), i.len());
            prop_assert_eq!(a.is_subset(&b), a.iter().all(|x| b.contains(x)));
            prop_assert_eq!(a.iter().count(), a.len());
        }
    }
}
