use std::fmt;

use super::Elem;

/// Fixed-capacity set of element indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElemSet {
    words: Vec<u64>,
    capacity: usize,
}

impl ElemSet {
    pub fn new(capacity: usize) -> Self {
        ElemSet { words: vec![0; capacity.div_ceil(64)], capacity }
    }

    pub fn full(capacity: usize) -> Self {
        let mut s = ElemSet::new(capacity);
        for i in 0..capacity {
            s.insert(i);
        }
        s
    }

    pub fn from_elems(capacity: usize, elems: impl IntoIterator<Item = Elem>) -> Self {
        let mut s = ElemSet::new(capacity);
        for e in elems {
            s.insert(e);
        }
        s
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    #[inline]
    pub fn contains(&self, e: Elem) -> bool {
        e < self.capacity && self.words[e >> 6] >> (e & 63) & 1 == 1
    }

    /// Returns true if `e` was newly inserted.
    #[inline]
    pub fn insert(&mut self, e: Elem) -> bool {
        let w = &mut self.words[e >> 6];
        let bit = 1u64 << (e & 63);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersect_with(&mut self, other: &ElemSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &ElemSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + t)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.iter().collect()
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_iter_len() {
        let mut s = ElemSet::new(130);
        assert!(s.insert(0));
        assert!(s.insert(129));
        assert!(!s.insert(129));
        s.insert(64);
        assert_eq!(s.to_vec(), vec![0, 64, 129]);
        assert_eq!(s.len(), 3);
        assert!(!s.contains(200));
    }

    #[test]
    fn subset_and_meet() {
        let a = ElemSet::from_elems(10, [1, 2, 3]);
        let mut b = ElemSet::from_elems(10, [2, 3, 4]);
        assert!(!a.is_subset(&b));
        b.intersect_with(&a);
        assert_eq!(b.to_vec(), vec![2, 3]);
        assert!(b.is_subset(&a));
    }
}
