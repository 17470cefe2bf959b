use super::{ElemSet, Elem, FiniteGroup, SubgroupSet};
use crate::error::{Error, Result};

/// A homomorphism given by its full element map.
#[derive(Clone, Debug)]
pub struct GroupHom {
    source: FiniteGroup,
    target: FiniteGroup,
    map: Vec<Elem>,
}

impl GroupHom {
    /// Checks that `map` respects the tables.
    pub fn new(source: FiniteGroup, target: FiniteGroup, map: Vec<Elem>) -> Result<Self> {
        if map.len() != source.order() {
            return Err(Error::InvalidHom(format!("map has {} entries for a group of order {}", map.len(), source.order())));
        }
        if let Some(&bad) = map.iter().find(|&&x| x >= target.order()) {
            return Err(Error::InvalidHom(format!("image {bad} outside target")));
        }
        if map[0] != 0 {
            return Err(Error::InvalidHom("identity not preserved".into()));
        }
        for a in source.elements() {
            for b in source.elements() {
                if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Err(Error::InvalidHom(format!("fails on ({a}, {b})")));
                }
            }
        }
        Ok(GroupHom { source, target, map })
    }

    pub(crate) fn new_unchecked(source: FiniteGroup, target: FiniteGroup, map: Vec<Elem>) -> Self {
        GroupHom { source, target, map }
    }

    /// Extends images of `source.generators()` to a homomorphism, if one exists.
    pub fn from_generator_images(source: FiniteGroup, target: FiniteGroup, images: &[Elem]) -> Result<Self> {
        let gens = source.generators().to_vec();
        if gens.len() != images.len() {
            return Err(Error::InvalidHom(format!("expected {} generator images", gens.len())));
        }
        let mut map = vec![usize::MAX; source.order()];
        map[0] = 0;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for (&s, &t) in gens.iter().zip(images) {
                let y = source.mul(x, s);
                let fy = target.mul(map[x], t);
                if map[y] == usize::MAX {
                    map[y] = fy;
                    stack.push(y);
                } else if map[y] != fy {
                    return Err(Error::InvalidHom("generator images do not extend".into()));
                }
            }
        }
        Ok(GroupHom { source, target, map })
    }

    pub fn identity(g: &FiniteGroup) -> Self {
        GroupHom { source: g.clone(), target: g.clone(), map: g.elements().collect() }
    }

    pub fn source(&self) -> &FiniteGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn map(&self) -> &[Elem] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, a: Elem) -> Elem {
        self.map[a]
    }

    pub fn image(&self) -> SubgroupSet {
        let bits = ElemSet::from_elems(self.target.order(), self.map.iter().copied());
        SubgroupSet::from_bits(&self.target, bits)
    }

    pub fn kernel(&self) -> SubgroupSet {
        let bits = ElemSet::from_elems(self.source.order(), self.source.elements().filter(|&a| self.map[a] == 0));
        SubgroupSet::from_bits(&self.source, bits)
    }

    pub fn is_surjective(&self) -> bool {
        self.image().is_whole()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_trivial()
    }

    pub fn is_bijective(&self) -> bool {
        self.source.order() == self.target.order() && self.is_injective()
    }

    /// `other ∘ self`: first `self`, then `other`.
    pub fn then(&self, other: &GroupHom) -> Result<GroupHom> {
        if self.target.order() != other.source.order() {
            return Err(Error::InvalidHom("composition across mismatched groups".into()));
        }
        let map = self.map.iter().map(|&x| other.map[x]).collect();
        Ok(GroupHom { source: self.source.clone(), target: other.target.clone(), map })
    }

    /// Full homomorphism check.
    pub fn validate(&self) -> Result<()> {
        GroupHom::new(self.source.clone(), self.target.clone(), self.map.clone()).map(|_| ())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, symmetric};

    #[test]
    fn reduction_c4_to_c2() {
        let c4 = cyclic(4).unwrap();
        let c2 = cyclic(2).unwrap();
        let h = GroupHom::new(c4.clone(), c2, (0..4).map(|i| i % 2).collect()).unwrap();
        assert!(h.is_surjective());
        assert!(!h.is_injective());
        assert_eq!(h.kernel().elements(), &[0, 2]);
    }

    #[test]
    fn rejects_non_hom() {
        let c4 = cyclic(4).unwrap();
        assert!(GroupHom::new(c4.clone(), c4.clone(), vec![0, 1, 1, 0]).is_err());
        assert!(GroupHom::new(c4.clone(), c4, vec![0, 1]).is_err());
    }

    #[test]
    fn generator_images() {
        let s3 = symmetric(3).unwrap();
        let c2 = cyclic(2).unwrap();
        // sign map: transpositions to 1, 3-cycles to 0
        let imgs: Vec<Elem> = s3.generators().iter().map(|&g| if s3.element_order(g) == 2 { 1 } else { 0 }).collect();
        let sign = GroupHom::from_generator_images(s3.clone(), c2, &imgs).unwrap();
        sign.validate().unwrap();
        assert_eq!(sign.kernel().order(), 3);
        assert!(GroupHom::from_generator_images(s3.clone(), cyclic(3).unwrap(), &vec![1; s3.generators().len()]).is_err());
    }
}
