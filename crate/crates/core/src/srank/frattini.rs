use crate::caps::Caps;
use crate::error::Result;
use crate::group::{join, maximal_subgroups, subgroups, ElemSet, FiniteGroup, GroupHom, SubgroupSet};

/// Intersection of all maximal proper subgroups.
pub fn frattini_subgroup(g: &FiniteGroup, caps: &Caps) -> Result<SubgroupSet> {
    let mut bits = ElemSet::full(g.order());
    for m in maximal_subgroups(g, caps)? {
        bits.intersect_with(m.bits());
    }
    SubgroupSet::new(g, bits.iter())
}

/// Elements `x` such that `⟨H, x⟩ = G` forces `H = G`.
///
/// Computed from the full subgroup list rather than maximal subgroups.
pub fn non_generators(g: &FiniteGroup, caps: &Caps) -> Result<ElemSet> {
    let all = subgroups(g, caps)?;
    let proper: Vec<&SubgroupSet> = all.iter().filter(|h| !h.is_whole()).collect();
    let mut out = ElemSet::new(g.order());
    for x in g.elements() {
        let cyc = crate::group::generated_subgroup(g, &[x]);
        if proper.iter().all(|h| !join(g, h, &cyc).is_whole()) {
            out.insert(x);
        }
    }
    Ok(out)
}

/// Result of testing whether an epimorphism is a Frattini cover.
#[derive(Clone, Debug)]
pub struct FrattiniCoverCheck {
    pub cover: GroupHom,
    pub kernel: SubgroupSet,
    /// Frattini subgroup of the source.
    pub frattini: SubgroupSet,
    pub surjective: bool,
    pub is_cover: bool,
}

/// `φ: K → G` is a Frattini cover iff it is onto and `ker φ ⊆ Φ(K)`.
pub fn check_frattini_cover(phi: &GroupHom, caps: &Caps) -> Result<FrattiniCoverCheck> {
    let kernel = phi.kernel();
    let frattini = frattini_subgroup(phi.source(), caps)?;
    let surjective = phi.is_surjective();
    let is_cover = surjective && kernel.is_subset(&frattini);
    Ok(FrattiniCoverCheck { cover: phi.clone(), kernel, frattini, surjective, is_cover })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, elementary_abelian, normal_subgroups, quaternion8, quotient, symmetric, trivial};

    #[test]
    fn frattini_examples() {
        let caps = Caps::default();
        assert_eq!(frattini_subgroup(&cyclic(4).unwrap(), &caps).unwrap().elements(), &[0, 2]);
        assert!(frattini_subgroup(&symmetric(3).unwrap(), &caps).unwrap().is_trivial());
        assert_eq!(frattini_subgroup(&quaternion8(), &caps).unwrap().elements(), &[0, 1]);
        assert!(frattini_subgroup(&trivial(), &caps).unwrap().is_trivial());
    }

    #[test]
    fn frattini_equals_non_generators() {
        let caps = Caps::default();
        for g in [cyclic(8).unwrap(), quaternion8(), symmetric(4).unwrap(), elementary_abelian(2, 3).unwrap(), cyclic(12).unwrap()] {
            let phi = frattini_subgroup(&g, &caps).unwrap();
            assert_eq!(phi.bits(), &non_generators(&g, &caps).unwrap(), "{g:?}");
            assert!(phi.is_normal());
        }
    }

    #[test]
    fn cover_examples() {
        let caps = Caps::default();
        let c4 = cyclic(4).unwrap();
        let red = GroupHom::new(c4, cyclic(2).unwrap(), (0..4).map(|x| x % 2).collect()).unwrap();
        assert!(check_frattini_cover(&red, &caps).unwrap().is_cover);

        let v4 = elementary_abelian(2, 2).unwrap();
        let proj = GroupHom::new(v4, cyclic(2).unwrap(), (0..4).map(|x| x / 2).collect()).unwrap();
        let c = check_frattini_cover(&proj, &caps).unwrap();
        assert!(c.surjective && !c.is_cover);

        let q = quaternion8();
        let center = normal_subgroups(&q, &caps).unwrap().into_iter().find(|n| n.order() == 2).unwrap();
        let (_, proj) = quotient(&q, &center).unwrap();
        let c = check_frattini_cover(&proj, &caps).unwrap();
        assert!(c.is_cover);
        assert_eq!((c.kernel.order(), c.frattini.order()), (2, 2));
    }

    #[test]
    fn non_surjective_is_not_cover() {
        let caps = Caps::default();
        let c2 = cyclic(2).unwrap();
        let inc = GroupHom::new(c2, cyclic(4).unwrap(), vec![0, 2]).unwrap();
        assert!(!check_frattini_cover(&inc, &caps).unwrap().is_cover);
    }
}
