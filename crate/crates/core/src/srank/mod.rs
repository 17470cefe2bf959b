//! S-ranks, quotient counting, Frattini subgroups and Frattini covers.

mod count;
mod frattini;

pub use count::{count_quotients_brute, count_quotients_via_series, quotient_kernels_brute, quotient_kernels_via_series};
pub use frattini::{check_frattini_cover, frattini_subgroup, non_generators, FrattiniCoverCheck};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::group::{
    is_isomorphic, is_isomorphic_witness, is_simple, min_generators, normal_subgroups, power,
    quotient, subgroup_as_group, ElemSet, FiniteGroup, GroupHom, SubgroupSet,
};
use crate::par;

/// `M_S(G)`, `r_S(G)` and the normal subgroups with quotient `S`.
#[derive(Clone, Debug)]
pub struct SRankReport {
    pub simple: FiniteGroup,
    /// Intersection of the witnesses, or `G` when there are none.
    pub m: SubgroupSet,
    pub rank: usize,
    pub witnesses: Vec<SubgroupSet>,
    /// Explicit isomorphism `G/M → S^rank`.
    pub isomorphism: GroupHom,
}

/// Normal subgroups `N` of `g` with `g/N ≅ s`, canonical order.
pub(crate) fn simple_quotient_kernels(g: &FiniteGroup, s: &FiniteGroup, caps: &Caps) -> Result<Vec<SubgroupSet>> {
    if g.order() % s.order() != 0 {
        return Ok(vec![]);
    }
    let candidates: Vec<SubgroupSet> =
        normal_subgroups(g, caps)?.into_iter().filter(|n| n.index() == s.order()).collect();
    let keep = par::map(&candidates, |n| {
        let (q, _) = quotient(g, n)?;
        is_isomorphic(&q, s, caps)
    });
    let mut out = Vec::new();
    for (n, k) in candidates.into_iter().zip(keep) {
        if k? {
            out.push(n);
        }
    }
    Ok(out)
}

pub fn s_rank(g: &FiniteGroup, s: &FiniteGroup, caps: &Caps) -> Result<SRankReport> {
    if !is_simple(s) {
        return Err(Error::NotSimple);
    }
    let witnesses = simple_quotient_kernels(g, s, caps)?;
    // Greedy independent subfamily: each pick strictly shrinks the
    // intersection, and skipped witnesses contain the running intersection.
    let mut current = ElemSet::full(g.order());
    let mut chosen: Vec<&SubgroupSet> = Vec::new();
    for w in &witnesses {
        if !current.is_subset(w.bits()) {
            current.intersect_with(w.bits());
            chosen.push(w);
        }
    }
    let m = SubgroupSet::new(g, current.iter())?;
    let rank = chosen.len();

    let target = power(s, rank, caps)?;
    let coords = chosen
        .iter()
        .map(|n| {
            let (q, proj) = quotient(g, n)?;
            let iso = is_isomorphic_witness(&q, s, caps)?.expect("witness quotient is isomorphic to S");
            Ok(proj.then(&iso)?)
        })
        .collect::<Result<Vec<GroupHom>>>()?;
    let (gm, proj_m) = quotient(g, &m)?;
    let mut map = vec![usize::MAX; gm.order()];
    for x in g.elements() {
        let c = proj_m.apply(x);
        if map[c] == usize::MAX {
            map[c] = coords.iter().fold(0, |acc, h| acc * s.order() + h.apply(x));
        }
    }
    let isomorphism = GroupHom::new(gm, target, map)?;
    if !isomorphism.is_bijective() {
        return Err(Error::InvalidHom(format!("G/M_S(G) is not S^{rank}")));
    }
    Ok(SRankReport { simple: s.clone(), m, rank, witnesses, isomorphism })
}

/// `r_S(H) ≤ r_S(H₀) + r_S(H/H₀)` for the computed ranks.
pub fn s_rank_subadditivity_check(h: &FiniteGroup, h0: &SubgroupSet, s: &FiniteGroup, caps: &Caps) -> Result<bool> {
    if !h0.is_normal() {
        return Err(Error::NotNormal);
    }
    let whole = s_rank(h, s, caps)?.rank;
    let (sub, _) = subgroup_as_group(h, h0);
    let lower = s_rank(&sub, s, caps)?.rank;
    let (q, _) = quotient(h, h0)?;
    let upper = s_rank(&q, s, caps)?.rank;
    Ok(whole <= lower + upper)
}

/// For a homomorphism out of `S^k`, checks its image is `S^m` and returns `m`.
pub fn image_of_power_check(s: &FiniteGroup, k: usize, phi: &GroupHom, caps: &Caps) -> Result<usize> {
    if !is_simple(s) {
        return Err(Error::NotSimple);
    }
    let expected = (s.order() as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if phi.source().order() as u128 != expected {
        return Err(Error::InvalidParameter(format!("source has order {}, not |S|^{k}", phi.source().order())));
    }
    let image = phi.image();
    let (img, _) = subgroup_as_group(phi.target(), &image);
    let mut m = 0;
    let mut size = 1;
    while size < img.order() {
        size *= s.order();
        m += 1;
    }
    if size != img.order() || m > k {
        return Err(Error::InvalidHom(format!("image of order {} is not a power of S", img.order())));
    }
    let sm = power(s, m, caps)?;
    if !is_isomorphic(&img, &sm, caps)? {
        return Err(Error::InvalidHom(format!("image is not isomorphic to S^{m}")));
    }
    let rank = s_rank(&img, s, caps)?.rank;
    if rank != m {
        return Err(Error::InvalidHom(format!("r_S(image) = {rank} but image ≅ S^{m}")));
    }
    if !s.is_abelian() && m > 0 {
        let d_sm = min_generators(&sm, caps)?;
        let d_s = min_generators(s, caps)?;
        if d_sm > d_s * m {
            return Err(Error::InvalidHom("generator bound violated".into()));
        }
    }
    Ok(m)
}
