use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};

use super::{ElemSet, Elem, FiniteGroup, GroupHom};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::par;

/// A subgroup of some parent group, as a set of element indices.
#[derive(Clone, Debug)]
pub struct SubgroupSet {
    elements: Vec<Elem>,
    bits: ElemSet,
    normal: bool,
}

impl SubgroupSet {
    /// Validates that `elements` is a subgroup of `g` and records normality.
    pub fn new(g: &FiniteGroup, elements: impl IntoIterator<Item = Elem>) -> Result<Self> {
        let mut bits = ElemSet::new(g.order());
        for e in elements {
            if e >= g.order() {
                return Err(Error::NotSubgroup(format!("element {e} out of range")));
            }
            bits.insert(e);
        }
        if !bits.contains(0) {
            return Err(Error::NotSubgroup("missing identity".into()));
        }
        for a in bits.iter() {
            if !bits.contains(g.inv(a)) {
                return Err(Error::NotSubgroup(format!("not closed under inverse at {a}")));
            }
            for b in bits.iter() {
                if !bits.contains(g.mul(a, b)) {
                    return Err(Error::NotSubgroup(format!("{a}*{b} escapes the set")));
                }
            }
        }
        Ok(Self::from_bits(g, bits))
    }

    /// `bits` must already be a subgroup.
    pub(crate) fn from_bits(g: &FiniteGroup, bits: ElemSet) -> Self {
        let normal = is_normal_bits(g, &bits);
        SubgroupSet { elements: bits.to_vec(), bits, normal }
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        SubgroupSet { elements: vec![0], bits: ElemSet::from_elems(g.order(), [0]), normal: true }
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        SubgroupSet { elements: g.elements().collect(), bits: ElemSet::full(g.order()), normal: true }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn parent_order(&self) -> usize {
        self.bits.capacity()
    }

    pub fn index(&self) -> usize {
        self.parent_order() / self.order()
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn bits(&self) -> &ElemSet {
        &self.bits
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.bits.contains(e)
    }

    pub fn is_normal(&self) -> bool {
        self.normal
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.parent_order()
    }

    pub fn is_subset(&self, other: &SubgroupSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn intersection(&self, g: &FiniteGroup, other: &SubgroupSet) -> SubgroupSet {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        SubgroupSet::from_bits(g, bits)
    }
}

impl PartialEq for SubgroupSet {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for SubgroupSet {}

impl std::hash::Hash for SubgroupSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

impl PartialOrd for SubgroupSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: by size, then lexicographically by sorted elements.
impl Ord for SubgroupSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order().cmp(&other.order()).then_with(|| self.elements.cmp(&other.elements))
    }
}

/// Subgroup generated by `gens`, as a bit set.
pub(crate) fn closure(g: &FiniteGroup, gens: &[Elem]) -> ElemSet {
    let mut bits = ElemSet::from_elems(g.order(), [0]);
    let mut stack = vec![0];
    while let Some(x) = stack.pop() {
        for &s in gens {
            let y = g.mul(x, s);
            if bits.insert(y) {
                stack.push(y);
            }
        }
    }
    bits
}

fn is_normal_bits(g: &FiniteGroup, bits: &ElemSet) -> bool {
    g.generators().iter().all(|&s| bits.iter().all(|h| bits.contains(g.conj(h, s))))
}

pub fn generated_subgroup(g: &FiniteGroup, gens: &[Elem]) -> SubgroupSet {
    SubgroupSet::from_bits(g, closure(g, gens))
}

/// Checks `g⁻¹ H g = H` for every `g`.
pub fn is_normal(g: &FiniteGroup, h: &SubgroupSet) -> bool {
    is_normal_bits(g, h.bits())
}

/// Subgroup generated by two subgroups.
pub fn join(g: &FiniteGroup, a: &SubgroupSet, b: &SubgroupSet) -> SubgroupSet {
    if b.is_subset(a) {
        return a.clone();
    }
    if a.is_subset(b) {
        return b.clone();
    }
    let gens: Vec<Elem> = a.elements().iter().chain(b.elements()).copied().collect();
    generated_subgroup(g, &gens)
}

/// Distinct cyclic subgroups with one generator each, in canonical order.
pub fn cyclic_subgroups(g: &FiniteGroup) -> Vec<(Elem, SubgroupSet)> {
    let mut seen: HashSet<ElemSet> = HashSet::new();
    let mut out = Vec::new();
    for a in g.elements() {
        let bits = closure(g, &[a]);
        if seen.insert(bits.clone()) {
            out.push((a, SubgroupSet::from_bits(g, bits)));
        }
    }
    out.sort_by(|x, y| x.1.cmp(&y.1));
    out
}

/// All subgroups, sorted canonically.
///
/// Starts from the cyclic subgroups and closes under joins with them; every
/// subgroup is a join of cyclic subgroups, so this reaches all of them.
pub fn subgroups(g: &FiniteGroup, caps: &Caps) -> Result<Vec<SubgroupSet>> {
    caps.check_enumeration(g.order())?;
    let cyclics = cyclic_subgroups(g);
    let mut known: HashMap<ElemSet, Vec<Elem>> = HashMap::new();
    let mut frontier: Vec<(ElemSet, Vec<Elem>)> = Vec::new();
    for (a, c) in &cyclics {
        let gens = if *a == 0 { vec![] } else { vec![*a] };
        known.insert(c.bits().clone(), gens.clone());
        frontier.push((c.bits().clone(), gens));
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (bits, gens) in frontier {
            for (a, c) in &cyclics {
                if c.bits().is_subset(&bits) {
                    continue;
                }
                let mut ext = gens.clone();
                ext.push(*a);
                let joined = closure(g, &ext);
                if !known.contains_key(&joined) {
                    known.insert(joined.clone(), ext.clone());
                    next.push((joined, ext));
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<SubgroupSet> = known.into_keys().map(|b| SubgroupSet::from_bits(g, b)).collect();
    out.sort();
    Ok(out)
}

/// Conjugacy classes, each sorted, ordered by smallest member.
pub fn conjugacy_classes(g: &FiniteGroup) -> Vec<Vec<Elem>> {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut classes = Vec::new();
    for a in 0..n {
        if class_of[a] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = vec![a];
        class_of[a] = id;
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for &s in g.generators() {
                let y = g.conj(x, s);
                if class_of[y] == usize::MAX {
                    class_of[y] = id;
                    members.push(y);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        classes.push(members);
    }
    classes
}

/// Smallest normal subgroup containing `set`.
pub fn normal_closure(g: &FiniteGroup, set: &[Elem]) -> SubgroupSet {
    let mut gens: Vec<Elem> = Vec::new();
    let mut seen = ElemSet::new(g.order());
    let mut stack: Vec<Elem> = set.to_vec();
    while let Some(x) = stack.pop() {
        if !seen.insert(x) {
            continue;
        }
        gens.push(x);
        for &s in g.generators() {
            stack.push(g.conj(x, s));
        }
    }
    generated_subgroup(g, &gens)
}

/// All normal subgroups, sorted canonically.
///
/// Join-closure of the normal closures of conjugacy classes.
pub fn normal_subgroups(g: &FiniteGroup, caps: &Caps) -> Result<Vec<SubgroupSet>> {
    caps.check_enumeration(g.order())?;
    Ok(normal_subgroups_uncapped(g))
}

pub(crate) fn normal_subgroups_uncapped(g: &FiniteGroup) -> Vec<SubgroupSet> {
    let mut atoms: Vec<SubgroupSet> = Vec::new();
    for class in conjugacy_classes(g) {
        let nc = normal_closure(g, &class);
        if !atoms.contains(&nc) {
            atoms.push(nc);
        }
    }
    let mut known: HashSet<SubgroupSet> = atoms.iter().cloned().collect();
    let mut frontier: Vec<SubgroupSet> = atoms.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for n in &frontier {
            for a in &atoms {
                if a.is_subset(n) {
                    continue;
                }
                // product of normal subgroups
                let j = join(g, n, a);
                if known.insert(j.clone()) {
                    next.push(j);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<SubgroupSet> = known.into_iter().collect();
    out.sort();
    out
}

/// Maximal proper subgroups, canonical order.
pub fn maximal_subgroups(g: &FiniteGroup, caps: &Caps) -> Result<Vec<SubgroupSet>> {
    let all = subgroups(g, caps)?;
    let proper: Vec<&SubgroupSet> = all.iter().filter(|h| !h.is_whole()).collect();
    Ok(proper
        .iter()
        .filter(|h| !proper.iter().any(|k| k.order() > h.order() && h.is_subset(k)))
        .map(|h| (*h).clone())
        .collect())
}

/// Re-labels a subgroup as a standalone group.
///
/// Returns the group and the embedding: local index `i` is parent element
/// `embedding[i]`. Local `0` is the identity.
pub fn subgroup_as_group(g: &FiniteGroup, h: &SubgroupSet) -> (FiniteGroup, Vec<Elem>) {
    let emb: Vec<Elem> = h.elements().to_vec();
    let mut local = vec![u32::MAX; g.order()];
    for (i, &e) in emb.iter().enumerate() {
        local[e] = i as u32;
    }
    let m = emb.len();
    let mut table = Vec::with_capacity(m * m);
    for &a in &emb {
        for &b in &emb {
            table.push(local[g.mul(a, b)]);
        }
    }
    (FiniteGroup::from_flat_unchecked(m, table, None), emb)
}

/// Coset group `G/N` with its projection.
///
/// Cosets are numbered by their smallest element, so the identity coset is 0.
pub fn quotient(g: &FiniteGroup, n: &SubgroupSet) -> Result<(FiniteGroup, GroupHom)> {
    if !n.is_normal() {
        return Err(Error::NotNormal);
    }
    let order = g.order();
    let mut coset = vec![usize::MAX; order];
    let mut reps = Vec::new();
    for a in 0..order {
        if coset[a] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(a);
        for &x in n.elements() {
            coset[g.mul(a, x)] = id;
        }
    }
    let q = reps.len();
    let mut table = Vec::with_capacity(q * q);
    for &a in &reps {
        for &b in &reps {
            table.push(coset[g.mul(a, b)] as u32);
        }
    }
    let label = match g.label() {
        Some(l) if n.is_trivial() => Some(l.to_string()),
        _ => None,
    };
    let qg = FiniteGroup::from_flat_unchecked(q, table, label);
    let proj = GroupHom::new_unchecked(g.clone(), qg.clone(), coset);
    Ok((qg, proj))
}

/// `true` iff `g` is nontrivial with no proper nontrivial normal subgroup.
pub fn is_simple(g: &FiniteGroup) -> bool {
    if g.order() == 1 {
        return false;
    }
    conjugacy_classes(g)
        .iter()
        .filter(|c| c[0] != 0)
        .all(|c| normal_closure(g, &c[..1]).is_whole())
}

/// Largest normal subgroup of `g` contained in `h`: the intersection of the
/// conjugates of `h`.
pub fn core(g: &FiniteGroup, h: &SubgroupSet) -> SubgroupSet {
    let mut bits = h.bits().clone();
    for x in g.elements() {
        let conj = ElemSet::from_elems(g.order(), h.elements().iter().map(|&e| g.conj(e, x)));
        bits.intersect_with(&conj);
    }
    SubgroupSet::from_bits(g, bits)
}

/// Minimal size of a generating set (`0` for the trivial group).
pub fn min_generators(g: &FiniteGroup, caps: &Caps) -> Result<usize> {
    caps.check_generation(g.order())?;
    if g.order() == 1 {
        return Ok(0);
    }
    // Replacing an element by a generator of the same cyclic subgroup does not
    // change the span, so search over distinct cyclic subgroups only.
    let cyclics: Vec<Elem> = cyclic_subgroups(g).into_iter().map(|(a, _)| a).filter(|&a| a != 0).collect();
    let upper = g.generators().len();
    for k in 1..upper {
        let found = par::any_range(cyclics.len(), |first| {
            let mut chosen = vec![cyclics[first]];
            search_generating(g, &cyclics, first + 1, k, &mut chosen)
        });
        if found {
            return Ok(k);
        }
    }
    Ok(upper)
}

fn search_generating(g: &FiniteGroup, cyclics: &[Elem], from: usize, k: usize, chosen: &mut Vec<Elem>) -> bool {
    let span = closure(g, chosen);
    if span.len() == g.order() {
        return true;
    }
    if chosen.len() == k {
        return false;
    }
    for i in from..cyclics.len() {
        if span.contains(cyclics[i]) {
            continue;
        }
        chosen.push(cyclics[i]);
        let ok = search_generating(g, cyclics, i + 1, k, chosen);
        chosen.pop();
        if ok {
            return true;
        }
    }
    false
}

pub fn count_subgroups_of_index(g: &FiniteGroup, n: usize, caps: &Caps) -> Result<usize> {
    if n == 0 {
        return Err(Error::InvalidParameter("index must be positive".into()));
    }
    if g.order() % n != 0 {
        return Ok(0);
    }
    Ok(subgroups(g, caps)?.iter().filter(|h| h.index() == n).count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, dihedral, direct_product, elementary_abelian, quaternion8, symmetric, trivial};

    /// Brute-force oracle: every subset closed under the table.
    fn brute_subgroups(g: &FiniteGroup) -> Vec<Vec<Elem>> {
        let n = g.order();
        assert!(n <= 16);
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask & 1 == 0 {
                continue;
            }
            let elems: Vec<Elem> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            if elems.iter().all(|&a| elems.iter().all(|&b| mask >> g.mul(a, b) & 1 == 1)) {
                out.push(elems);
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    fn s3() -> FiniteGroup {
        symmetric(3).unwrap()
    }

    #[test]
    fn subgroup_counts_match_brute_force() {
        let caps = Caps::default();
        for g in [s3(), cyclic(4).unwrap(), quaternion8(), dihedral(4).unwrap(), elementary_abelian(2, 3).unwrap(), trivial()] {
            let ours: Vec<Vec<Elem>> = subgroups(&g, &caps).unwrap().iter().map(|h| h.elements().to_vec()).collect();
            assert_eq!(ours, brute_subgroups(&g), "{g:?}");
        }
        assert_eq!(subgroups(&s3(), &caps).unwrap().len(), 6);
        assert_eq!(subgroups(&cyclic(4).unwrap(), &caps).unwrap().len(), 3);
        assert_eq!(subgroups(&trivial(), &caps).unwrap().len(), 1);
    }

    #[test]
    fn normal_subgroups_examples() {
        let caps = Caps::default();
        let ns = normal_subgroups(&s3(), &caps).unwrap();
        assert_eq!(ns.iter().map(|h| h.order()).collect::<Vec<_>>(), vec![1, 3, 6]);
        assert_eq!(normal_subgroups(&elementary_abelian(2, 2).unwrap(), &caps).unwrap().len(), 5);
        assert_eq!(normal_subgroups(&quaternion8(), &caps).unwrap().len(), 6);
    }

    #[test]
    fn normal_members_agree_with_flags() {
        let caps = Caps::default();
        for g in [s3(), quaternion8(), dihedral(4).unwrap(), symmetric(4).unwrap()] {
            let from_all: Vec<SubgroupSet> = subgroups(&g, &caps).unwrap().into_iter().filter(|h| h.is_normal()).collect();
            assert_eq!(from_all, normal_subgroups(&g, &caps).unwrap());
        }
    }

    #[test]
    fn caps_enforced() {
        let caps = Caps { enumeration: 5, ..Caps::default() };
        assert!(matches!(subgroups(&s3(), &caps), Err(Error::EnumerationExceedsCap { order: 6, cap: 5 })));
    }

    #[test]
    fn quotient_examples() {
        let caps = Caps::default();
        let g = s3();
        let a3 = normal_subgroups(&g, &caps).unwrap()[1].clone();
        let (q, proj) = quotient(&g, &a3).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(proj.kernel(), a3);
        let (q, _) = quotient(&g, &SubgroupSet::trivial(&g)).unwrap();
        assert_eq!(q.order(), 6);
        let c6 = cyclic(6).unwrap();
        let c3 = SubgroupSet::new(&c6, [0, 2, 4]).unwrap();
        let (q, _) = quotient(&c6, &c3).unwrap();
        assert_eq!(q.order(), 2);
        let c2 = generated_subgroup(&g, &[g.elements().find(|&a| g.element_order(a) == 2).unwrap()]);
        assert_eq!(quotient(&g, &c2).unwrap_err(), Error::NotNormal);
    }

    #[test]
    fn simple_examples() {
        assert!(is_simple(&cyclic(5).unwrap()));
        assert!(!is_simple(&s3()));
        assert!(!is_simple(&trivial()));
        assert!(is_simple(&crate::group::alternating(5).unwrap()));
    }

    #[test]
    fn core_examples() {
        let g = s3();
        let t = g.elements().find(|&a| g.element_order(a) == 2).unwrap();
        let h = generated_subgroup(&g, &[t]);
        assert!(core(&g, &h).is_trivial());
        assert_eq!(core(&g, &SubgroupSet::whole(&g)), SubgroupSet::whole(&g));
        let c6 = cyclic(6).unwrap();
        let c3 = SubgroupSet::new(&c6, [0, 2, 4]).unwrap();
        assert_eq!(core(&c6, &c3), c3);
    }

    #[test]
    fn min_generators_examples() {
        let caps = Caps::default();
        assert_eq!(min_generators(&cyclic(6).unwrap(), &caps).unwrap(), 1);
        assert_eq!(min_generators(&s3(), &caps).unwrap(), 2);
        assert_eq!(min_generators(&quaternion8(), &caps).unwrap(), 2);
        assert_eq!(min_generators(&trivial(), &caps).unwrap(), 0);
        assert_eq!(min_generators(&elementary_abelian(2, 4).unwrap(), &caps).unwrap(), 4);
        let c2xc3 = direct_product(&cyclic(2).unwrap(), &cyclic(3).unwrap());
        assert_eq!(min_generators(&c2xc3, &caps).unwrap(), 1);
    }

    #[test]
    fn index_counts() {
        let caps = Caps::default();
        assert_eq!(count_subgroups_of_index(&s3(), 2, &caps).unwrap(), 1);
        assert_eq!(count_subgroups_of_index(&s3(), 3, &caps).unwrap(), 3);
        assert_eq!(count_subgroups_of_index(&s3(), 1, &caps).unwrap(), 1);
        assert_eq!(count_subgroups_of_index(&s3(), 4, &caps).unwrap(), 0);
    }

    #[test]
    fn new_rejects_non_subgroups() {
        let g = cyclic(4).unwrap();
        assert!(SubgroupSet::new(&g, [0, 1]).is_err());
        assert!(SubgroupSet::new(&g, [2]).is_err());
        assert!(SubgroupSet::new(&g, [0, 2]).unwrap().is_normal());
    }
}
